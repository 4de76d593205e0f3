#pragma once

#include <variant>
#include <vector>

#include "dickson/checked.hpp"
#include "dickson/seq.hpp"

namespace dickson {

/// Square-filling pairing code: n²+m when m<n, else m²+m+n. Injective, and
/// enumerates the naturals by growing square shells, so k² ≤ pair_code(n,m)
/// forces k ≤ n or k ≤ m.
Nat pair_code(Nat n, Nat m);

enum class Side { F, G };

/// Decodes which component of a pair code absorbs a square lower bound.
/// Requires k² ≤ pair_code(n,m) (contract error otherwise). Returns F when
/// k ≤ n, else G with k ≤ m; F wins when both hold.
Side code_sq_fill(Nat n, Nat m, Nat k);

/// Least index of the minimum of f on {0..n}.
Nat mini(const Seq& f, Nat n);

/// Least index of the maximum of f on {0..n}.
Nat maxi(const Seq& f, Nat n);

struct EqualPair {
  Nat i;  // i < j
  Nat j;
  bool operator==(const EqualPair&) const = default;
};

struct Large {
  Nat j;
  bool operator==(const Large&) const = default;
};

using PigeonholeOutcome = std::variant<EqualPair, Large>;

/// Finite pigeonhole principle, disjunctive form: among f_0..f_m either two
/// values coincide (EqualPair(i,j), i<j≤m, f_i=f_j) or some value is large
/// (Large(j), j≤m, m ≤ f_j). Witness choice is fixed by repeatedly removing
/// a least-index maximum, so results are deterministic.
PigeonholeOutcome fph_disj(Nat m, const Seq& f);

struct LargeF {
  Nat j;
  bool operator==(const LargeF&) const = default;
};

struct LargeG {
  Nat j;
  bool operator==(const LargeG&) const = default;
};

using KeyOutcome = std::variant<EqualPair, LargeF, LargeG>;

/// Two-sequence pigeonhole at strength k: either f and g agree pairwise at
/// some i<j ≤ k², or k ≤ f_j (LargeF) or k ≤ g_j (LargeG) for some j ≤ k².
/// Runs fph_disj on the paired codes ⟨f_i,g_i⟩ and decodes a large code
/// through code_sq_fill.
KeyOutcome fph_disj2(const Seq& f, const Seq& g, Nat k);

/// fph_disj2 on the window n < i ≤ n+k²+1; returned indices are absolute.
KeyOutcome key(const Seq& f, const Seq& g, Nat n, Nat k);

/// Ψ(n) = max{ f at mini(g,n), g at mini(f,n) }.
Nat psi(const Seq& f, const Seq& g, Nat n);

/// Φ(n) = f at mini(f,n) + g at mini(g,n). Non-increasing in n; the descent
/// measure that forces termination of the extracted bound.
Nat phi(const Seq& f, const Seq& g, Nat n);

/// I(n) = n + Ψ(n)² + 1. Always n < I(n).
Nat big_i(const Seq& f, const Seq& g, Nat n);

enum class DescentOutcome { BoundReached, MeasureDecreased };

/// One descent step: at I(n) either a Dickson pair exists at or below I(n)
/// (BoundReached) or Φ(I(n)) < Φ(n) (MeasureDecreased). Dispatches on
/// key(f,g,n,Ψ(n)); a large f-value at j compares g at mini(g,n) against
/// g_j with ties resolving to BoundReached, and symmetrically for g.
DescentOutcome descent(const Seq& f, const Seq& g, Nat n);

/// m-fold iteration of big_i starting at n.
Nat iterate_i(const Seq& f, const Seq& g, Nat n, Nat m);

/// The full orbit [n, I(n), ..., Iᵐ(n)]; strictly increasing.
std::vector<Nat> iterate_trace(const Seq& f, const Seq& g, Nat n, Nat m);

/// Indices i < j with f_i ≤ f_j and g_i ≤ g_j.
struct DicksonWitness {
  DicksonWitness(Nat i, Nat j);
  Nat i;
  Nat j;
  bool operator==(const DicksonWitness&) const = default;
};

/// Number of big_i iterations behind guessed_bound: f(0)+g(0)+1.
Nat guessed_iteration_count(const Seq& f, const Seq& g);

/// The a-priori Dickson bound I^{f(0)+g(0)+1}(0).
Nat guessed_bound(const Seq& f, const Seq& g);

struct ExtractedRun {
  Nat bound = 0;
  std::vector<Nat> trace;  // [n, I(n), ...] up to and including the bound
  Nat depth = 0;           // descent steps taken; at most phi(n)+1
};

/// The descent-driven Dickson bound: B(n) = I(n) when descent reports
/// BoundReached at n, else B(I(n)). Terminates because phi strictly
/// decreases on every recursive step; a fuel counter of phi(n)+1 turns the
/// impossible non-terminating case into a contract error.
ExtractedRun extracted_bound_run(const Seq& f, const Seq& g, Nat n);

/// Bound of extracted_bound_run.
Nat extracted_bound(const Seq& f, const Seq& g, Nat n);

struct ThreeFnMeasures {
  Nat n = 0;  // the index the measures were taken at
  Nat phi3 = 0;
  Nat psi3 = 0;
  Nat i3 = 0;  // n + psi3⁴ + 1
  bool operator==(const ThreeFnMeasures&) const = default;
};

/// Three-sequence analogues: Φ₃ sums the three minima, Ψ₃ is the maximum of
/// the six cross values (each sequence at the minimizers of the other two),
/// I₃(n) = n + Ψ₃(n)⁴ + 1.
ThreeFnMeasures three_fn_measures(const Seq& f, const Seq& g, const Seq& h,
                                  Nat n);

struct EqualTriple {
  Nat i;  // i < j
  Nat j;
  bool operator==(const EqualTriple&) const = default;
};

struct LargeH {
  Nat j;
  bool operator==(const LargeH&) const = default;
};

using Key3Outcome = std::variant<EqualTriple, LargeF, LargeG, LargeH>;

/// Three-sequence key step on the window n < i ≤ n+k⁴+1: either all three
/// sequences agree pairwise at some i<j, or one of them is ≥ k at some j.
/// Runs key on ⟨f,g⟩ paired against h at strength k² and decodes a large
/// code through code_sq_fill.
Key3Outcome key3(const Seq& f, const Seq& g, const Seq& h, Nat n, Nat k);

}  // namespace dickson
