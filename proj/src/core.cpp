#include "dickson/core.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace dickson {

Nat pair_code(Nat n, Nat m) {
  if (m < n) {
    return checked_add(checked_mul(n, n, "pair code"), m, "pair code");
  }
  return checked_add(checked_add(checked_mul(m, m, "pair code"), m, "pair code"),
                     n, "pair code");
}

Side code_sq_fill(Nat n, Nat m, Nat k) {
  const Nat code = pair_code(n, m);
  const Nat square = checked_mul(k, k, "code_sq_fill k^2");
  if (square > code) {
    throw ContractError("code_sq_fill needs k^2 <= pair_code(n,m): k=" +
                        std::to_string(k) + ", code=" + std::to_string(code));
  }
  if (k <= n) return Side::F;
  if (k <= m) return Side::G;
  // k > n and k > m put pair_code(n,m) strictly below k^2.
  throw ContractError("square-filling property violated at k=" +
                      std::to_string(k) + ", code=" + std::to_string(code));
}

namespace {

constexpr Nat kMaxNat = std::numeric_limits<Nat>::max();

// Overflow reporting for the measures; message building stays out of the
// non-throwing path, which the bound iterations hit millions of times.
[[noreturn]] void measure_overflow(const char* measure, Nat n) {
  throw std::overflow_error(std::string(measure) + " at n=" +
                            std::to_string(n) + " exceeds 64 bits");
}

// Least index on {0..n} where `better` stops improving. Every value f takes
// on {0..n} already occurs below the horizon, and so does its first
// occurrence, so the scan can stop there.
template <typename Better>
Nat extremal_index(const Seq& f, Nat n, Better better) {
  const Nat hi = std::min(n, f.horizon() - 1);
  Nat best = 0;
  for (Nat i = 1; i <= hi; ++i) {
    if (better(f.eval(i), f.eval(best))) best = i;
  }
  return best;
}

}  // namespace

Nat mini(const Seq& f, Nat n) {
  return extremal_index(f, n, [](Nat a, Nat b) { return a < b; });
}

Nat maxi(const Seq& f, Nat n) {
  return extremal_index(f, n, [](Nat a, Nat b) { return a > b; });
}

PigeonholeOutcome fph_disj(Nat m, const Seq& f) {
  const Nat count = checked_add(m, 1, "pigeonhole range");
  std::vector<std::pair<Nat, Nat>> order;  // (value, index)
  order.reserve(count);
  for (Nat i = 0; i < count; ++i) order.emplace_back(f.eval(i), i);
  // Repeatedly removing a least-index maximum visits entries in exactly this
  // order, so the recursion collapses to one scan over the sorted values.
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  for (Nat t = 0; t < count; ++t) {
    const Nat value = order[t].first;
    if (m - t > value) continue;
    // After t removals the remaining range is {0..m-t} and its maximum is
    // order[t]; a maximum at least m-t ends the recursion here.
    if (t == 0) return Large{order[t].second};
    // The step before could not stop, so order[t-1].first <= (m-t+1)-1, and
    // both values are squeezed to exactly m-t: an equal pair.
    if (order[t - 1].first != value) {
      throw ContractError("pigeonhole removal order broken at position " +
                          std::to_string(t));
    }
    return EqualPair{order[t - 1].second, order[t].second};
  }
  // t = m always stops the scan: the range {0..0} asks for a value >= 0.
  throw ContractError("pigeonhole scan ended without a disjunct");
}

KeyOutcome fph_disj2(const Seq& f, const Seq& g, Nat k) {
  const Nat strength = checked_mul(k, k, "pigeonhole strength k^2");
  const Seq coded =
      zip_with(f, g, [](Nat a, Nat b) { return pair_code(a, b); });
  const PigeonholeOutcome out = fph_disj(strength, coded);
  if (const auto* equal = std::get_if<EqualPair>(&out)) {
    if (f.eval(equal->i) != f.eval(equal->j) ||
        g.eval(equal->i) != g.eval(equal->j)) {
      throw ContractError("pair code collision without equal components at " +
                          std::to_string(equal->i) + "," +
                          std::to_string(equal->j));
    }
    return *equal;
  }
  const Nat j = std::get<Large>(out).j;
  // k^2 <= <f_j, g_j>, so the square-filling property pins a large side.
  return code_sq_fill(f.eval(j), g.eval(j), k) == Side::F
             ? KeyOutcome{LargeF{j}}
             : KeyOutcome{LargeG{j}};
}

KeyOutcome key(const Seq& f, const Seq& g, Nat n, Nat k) {
  const KeyOutcome inner = fph_disj2(shift(f, n), shift(g, n), k);
  const Nat base = checked_add(n, 1, "key window base");
  const auto absolute = [base](Nat relative) {
    return checked_add(base, relative, "key window index");
  };
  if (const auto* equal = std::get_if<EqualPair>(&inner)) {
    return EqualPair{absolute(equal->i), absolute(equal->j)};
  }
  if (const auto* large_f = std::get_if<LargeF>(&inner)) {
    return LargeF{absolute(large_f->j)};
  }
  return LargeG{absolute(std::get<LargeG>(inner).j)};
}

Nat psi(const Seq& f, const Seq& g, Nat n) {
  return std::max(f.eval(mini(g, n)), g.eval(mini(f, n)));
}

Nat phi(const Seq& f, const Seq& g, Nat n) {
  const Nat from_f = f.eval(mini(f, n));
  const Nat from_g = g.eval(mini(g, n));
  if (from_g > kMaxNat - from_f) measure_overflow("Phi", n);
  return from_f + from_g;
}

Nat big_i(const Seq& f, const Seq& g, Nat n) {
  const Nat p = psi(f, g, n);
  if (p != 0 && p > kMaxNat / p) measure_overflow("Psi^2", n);
  const Nat square = p * p;
  if (square > kMaxNat - n || n + square > kMaxNat - 1) {
    measure_overflow("I", n);
  }
  return n + square + 1;
}

DescentOutcome descent(const Seq& f, const Seq& g, Nat n) {
  const KeyOutcome out = key(f, g, n, psi(f, g, n));
  if (std::holds_alternative<EqualPair>(out)) {
    return DescentOutcome::BoundReached;
  }
  if (const auto* large_f = std::get_if<LargeF>(&out)) {
    // f already increases from mini(g,n) to j; the g comparison decides.
    // A tie still yields a Dickson pair, so it counts as BoundReached.
    return g.eval(mini(g, n)) <= g.eval(large_f->j)
               ? DescentOutcome::BoundReached
               : DescentOutcome::MeasureDecreased;
  }
  const Nat j = std::get<LargeG>(out).j;
  return f.eval(mini(f, n)) <= f.eval(j) ? DescentOutcome::BoundReached
                                         : DescentOutcome::MeasureDecreased;
}

Nat iterate_i(const Seq& f, const Seq& g, Nat n, Nat m) {
  // Past both horizons the minima cannot move again, so psi is frozen and
  // every further step adds the same psi^2 + 1; the remaining iterations
  // collapse to one multiplication. Exact, and it keeps iteration counts
  // like f(0)+g(0)+1 from demanding that many loop turns.
  const Nat frozen = std::max(f.horizon(), g.horizon()) - 1;
  Nat x = n;
  Nat t = 0;
  while (t < m && x < frozen) {
    x = big_i(f, g, x);
    ++t;
  }
  if (t < m) {
    const Nat p = psi(f, g, x);
    if (p != 0 && p > kMaxNat / p) measure_overflow("Psi^2", x);
    const Nat square = p * p;
    if (square == kMaxNat) measure_overflow("I", x);
    const Nat total =
        checked_mul(m - t, square + 1, "iterated I step total");
    x = checked_add(x, total, "iterated I");
  }
  return x;
}

std::vector<Nat> iterate_trace(const Seq& f, const Seq& g, Nat n, Nat m) {
  const Nat entries = checked_add(m, 1, "trace length");
  std::vector<Nat> trace;
  // An impossible trace should be one failed reservation, not creeping
  // reallocation until the machine gives up.
  trace.reserve(entries);
  trace.push_back(n);
  Nat x = n;
  for (Nat t = 0; t < m; ++t) {
    x = big_i(f, g, x);
    trace.push_back(x);
  }
  return trace;
}

DicksonWitness::DicksonWitness(Nat i_, Nat j_) : i(i_), j(j_) {
  if (i >= j) {
    throw ContractError("Dickson witness needs i < j, got i=" +
                        std::to_string(i) + ", j=" + std::to_string(j));
  }
}

Nat guessed_iteration_count(const Seq& f, const Seq& g) {
  return checked_add(checked_add(f.eval(0), g.eval(0), "iteration count"), 1,
                     "iteration count");
}

Nat guessed_bound(const Seq& f, const Seq& g) {
  return iterate_i(f, g, 0, guessed_iteration_count(f, g));
}

ExtractedRun extracted_bound_run(const Seq& f, const Seq& g, Nat n) {
  const Nat fuel = checked_add(phi(f, g, n), 1, "descent fuel");
  ExtractedRun run;
  run.trace.push_back(n);
  Nat x = n;
  for (Nat step = 0; step < fuel; ++step) {
    const Nat next = big_i(f, g, x);
    run.trace.push_back(next);
    run.depth = step + 1;
    if (descent(f, g, x) == DescentOutcome::BoundReached) {
      run.bound = next;
      return run;
    }
    // MeasureDecreased: phi(next) < phi(x), so the fuel never runs out
    // before a bound is reached.
    x = next;
  }
  throw ContractError("descent failed to reach a bound within phi+1 steps "
                      "from n=" + std::to_string(n));
}

Nat extracted_bound(const Seq& f, const Seq& g, Nat n) {
  return extracted_bound_run(f, g, n).bound;
}

ThreeFnMeasures three_fn_measures(const Seq& f, const Seq& g, const Seq& h,
                                  Nat n) {
  const Nat min_f = mini(f, n);
  const Nat min_g = mini(g, n);
  const Nat min_h = mini(h, n);
  ThreeFnMeasures out;
  out.n = n;
  const Nat from_f = f.eval(min_f);
  const Nat from_g = g.eval(min_g);
  const Nat from_h = h.eval(min_h);
  if (from_g > kMaxNat - from_f || from_h > kMaxNat - (from_f + from_g)) {
    measure_overflow("Phi3", n);
  }
  out.phi3 = from_f + from_g + from_h;
  out.psi3 = std::max({f.eval(min_g), f.eval(min_h), g.eval(min_f),
                       g.eval(min_h), h.eval(min_f), h.eval(min_g)});
  if (out.psi3 != 0 && out.psi3 > kMaxNat / out.psi3) {
    measure_overflow("Psi3^2", n);
  }
  const Nat square = out.psi3 * out.psi3;
  if (square != 0 && square > kMaxNat / square) measure_overflow("Psi3^4", n);
  const Nat fourth = square * square;
  if (fourth > kMaxNat - n || n + fourth > kMaxNat - 1) {
    measure_overflow("I3", n);
  }
  out.i3 = n + fourth + 1;
  return out;
}

Key3Outcome key3(const Seq& f, const Seq& g, const Seq& h, Nat n, Nat k) {
  const Nat strength = checked_mul(k, k, "key3 strength k^2");
  const Seq coded =
      zip_with(f, g, [](Nat a, Nat b) { return pair_code(a, b); });
  const KeyOutcome inner = key(coded, h, n, strength);
  if (const auto* equal = std::get_if<EqualPair>(&inner)) {
    const Nat i = equal->i;
    const Nat j = equal->j;
    if (f.eval(i) != f.eval(j) || g.eval(i) != g.eval(j) ||
        h.eval(i) != h.eval(j)) {
      throw ContractError("equal codes without equal components at " +
                          std::to_string(i) + "," + std::to_string(j));
    }
    return EqualTriple{i, j};
  }
  if (const auto* large_code = std::get_if<LargeF>(&inner)) {
    // k^2 <= <f_j, g_j>: the square-filling property picks the large side.
    const Nat j = large_code->j;
    return code_sq_fill(f.eval(j), g.eval(j), k) == Side::F
               ? Key3Outcome{LargeF{j}}
               : Key3Outcome{LargeG{j}};
  }
  // k^2 <= h_j and k <= k^2 (k = 0 is trivial), so h is large at j.
  return LargeH{std::get<LargeG>(inner).j};
}

}  // namespace dickson
