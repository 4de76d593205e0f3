#include "dickson/oracle.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace dickson {

std::optional<DicksonWitness> holds_d(const Seq& f, const Seq& g, Nat n) {
  for (Nat j = 1; j <= n; ++j) {
    for (Nat i = 0; i < j; ++i) {
      if (f.eval(i) <= f.eval(j) && g.eval(i) <= g.eval(j)) {
        return DicksonWitness(i, j);
      }
    }
  }
  return std::nullopt;
}

std::optional<DicksonWitness> holds_d3(const Seq& f, const Seq& g,
                                       const Seq& h, Nat n) {
  for (Nat j = 1; j <= n; ++j) {
    for (Nat i = 0; i < j; ++i) {
      if (f.eval(i) <= f.eval(j) && g.eval(i) <= g.eval(j) &&
          h.eval(i) <= h.eval(j)) {
        return DicksonWitness(i, j);
      }
    }
  }
  return std::nullopt;
}

Nat oracle_min_bound(const Seq& f, const Seq& g) {
  const Nat cap = guessed_bound(f, g);
  // The least n with a pair at or below n is the least j of any pair.
  for (Nat j = 1; j <= cap; ++j) {
    for (Nat i = 0; i < j; ++i) {
      if (f.eval(i) <= f.eval(j) && g.eval(i) <= g.eval(j)) return j;
    }
  }
  throw ContractError("no Dickson pair at or below the guessed bound " +
                      std::to_string(cap));
}

BoundReport bound_report(const Seq& f, const Seq& g, BoundMethod method) {
  BoundReport report;
  report.method = method;
  switch (method) {
    case BoundMethod::Guessed:
      report.trace = iterate_trace(f, g, 0, guessed_iteration_count(f, g));
      report.bound = report.trace.back();
      break;
    case BoundMethod::Extracted: {
      ExtractedRun run = extracted_bound_run(f, g, 0);
      report.bound = run.bound;
      report.trace = std::move(run.trace);
      break;
    }
    case BoundMethod::OracleMin:
      report.bound = oracle_min_bound(f, g);
      break;
  }
  report.witness = holds_d(f, g, report.bound);
  if (!report.witness) {
    throw ContractError("bound " + std::to_string(report.bound) +
                        " admits no Dickson pair; the computation is unsound");
  }
  return report;
}

namespace {

// All prefixes of the given length over {0..max_value}, constant-0 tails.
void collect_family(Nat max_prefix, Nat max_value, std::vector<Seq>& family) {
  for (Nat length = 1; length <= max_prefix; ++length) {
    std::vector<Nat> digits(length, 0);
    for (;;) {
      family.emplace_back(digits, ConstantTail{0});
      std::size_t pos = digits.size();
      while (pos > 0 && digits[pos - 1] == max_value) digits[--pos] = 0;
      if (pos == 0) break;
      ++digits[pos - 1];
    }
  }
}

}  // namespace

std::vector<SweepRow> sweep(Nat max_prefix, Nat max_value) {
  if (max_prefix > 5) {
    throw ContractError("sweep max_prefix is capped at 5, got " +
                        std::to_string(max_prefix));
  }
  if (max_value > 4) {
    throw ContractError("sweep max_value is capped at 4, got " +
                        std::to_string(max_value));
  }
  std::vector<Seq> family;
  collect_family(max_prefix, max_value, family);
  std::vector<std::pair<std::string, Seq>> ordered;
  ordered.reserve(family.size());
  for (auto& seq : family) ordered.emplace_back(render(seq), std::move(seq));
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SweepRow> rows;
  rows.reserve(ordered.size() * ordered.size());
  for (const auto& [f_literal, f] : ordered) {
    for (const auto& [g_literal, g] : ordered) {
      rows.push_back(SweepRow{f_literal, g_literal, oracle_min_bound(f, g),
                              extracted_bound(f, g, 0), guessed_bound(f, g)});
    }
  }
  return rows;
}

namespace {

std::string csv_cell(const std::string& literal) {
  std::string cell = literal;
  std::replace(cell.begin(), cell.end(), ',', '.');
  return cell;
}

}  // namespace

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "f,g,oracle_min,extracted,guessed\n";
  for (const auto& row : rows) {
    out << csv_cell(row.f_literal) << ',' << csv_cell(row.g_literal) << ','
        << row.oracle_min << ',' << row.extracted << ',' << row.guessed
        << '\n';
  }
}

Counterexample3Report check_counterexample3(const Seq& f, const Seq& g,
                                            const Seq& h) {
  const Nat n = 2;
  const ThreeFnMeasures measures = three_fn_measures(f, g, h, n);
  const ThreeFnMeasures at_i3 = three_fn_measures(f, g, h, measures.i3);
  Counterexample3Report report;
  report.clauses = {
      {"phi3", 0, measures.phi3, false},
      {"psi3", 1, measures.psi3, false},
      {"i3", 4, measures.i3, false},
      {"d3_at_i3", 0, holds_d3(f, g, h, measures.i3) ? Nat{1} : Nat{0},
       false},
      {"phi3_at_i3", measures.phi3, at_i3.phi3, false},
  };
  report.ok = true;
  for (auto& clause : report.clauses) {
    clause.pass = clause.expected == clause.actual;
    report.ok = report.ok && clause.pass;
  }
  return report;
}

Counterexample3Report verify_counterexample3() {
  const Seq f({0, 1, 1, 1, 0}, ConstantTail{0});
  const Seq g({1, 0, 1, 0, 1}, ConstantTail{0});
  const Seq h({1, 1, 0, 0, 0}, ConstantTail{0});
  return check_counterexample3(f, g, h);
}

}  // namespace dickson
