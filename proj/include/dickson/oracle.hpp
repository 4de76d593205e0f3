#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dickson/core.hpp"
#include "dickson/seq.hpp"

namespace dickson {

/// Brute-force search for the least Dickson pair at or below n: some i<j≤n
/// with f_i ≤ f_j and g_i ≤ g_j, least j first, then least i.
std::optional<DicksonWitness> holds_d(const Seq& f, const Seq& g, Nat n);

/// Same search over three sequences.
std::optional<DicksonWitness> holds_d3(const Seq& f, const Seq& g,
                                       const Seq& h, Nat n);

/// Least n such that a Dickson pair exists at or below n. The scan is capped
/// at guessed_bound(f,g): reaching the cap without a pair would disprove the
/// bound and is reported as a contract error.
Nat oracle_min_bound(const Seq& f, const Seq& g);

enum class BoundMethod { Guessed, Extracted, OracleMin };

struct BoundReport {
  BoundMethod method = BoundMethod::Guessed;
  Nat bound = 0;
  std::optional<DicksonWitness> witness;  // always present: bounds are checked
  std::vector<Nat> trace;  // I-iteration values; empty for OracleMin
};

/// Computes the requested bound at n=0 and verifies it against the witness
/// search; a bound without a witness is a contract error, never a report.
BoundReport bound_report(const Seq& f, const Seq& g, BoundMethod method);

struct SweepRow {
  std::string f_literal;
  std::string g_literal;
  Nat oracle_min = 0;
  Nat extracted = 0;
  Nat guessed = 0;
  bool operator==(const SweepRow&) const = default;
};

/// One row per ordered pair of sequences with prefix length 1..max_prefix,
/// values 0..max_value, constant-0 tails; sorted by f-literal then
/// g-literal. Guard rails: max_prefix ≤ 5 and max_value ≤ 4.
std::vector<SweepRow> sweep(Nat max_prefix, Nat max_value);

/// Header f,g,oracle_min,extracted,guessed; one line per row. Inside cells
/// the literal's ',' becomes '.' so rows stay comma-separated without
/// quoting.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

struct ClauseResult {
  std::string name;
  Nat expected = 0;
  Nat actual = 0;
  bool pass = false;
};

struct Counterexample3Report {
  std::vector<ClauseResult> clauses;
  bool ok = false;
};

/// Checks that the three-sequence descent step fails for f,g,h at n=2:
/// phi3=0, psi3=1, i3=4, no three-way Dickson pair at or below i3, and no
/// phi3 decrease from n to i3.
Counterexample3Report check_counterexample3(const Seq& f, const Seq& g,
                                            const Seq& h);

/// check_counterexample3 on the built-in refuting triple
/// f=(0,1,1,1,0,0,...), g=(1,0,1,0,1,0,...), h=(1,1,0,0,0,...).
Counterexample3Report verify_counterexample3();

}  // namespace dickson
