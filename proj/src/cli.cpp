#include "dickson/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "dickson/core.hpp"
#include "dickson/oracle.hpp"
#include "dickson/seq.hpp"

namespace dickson {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string witness_text(const std::optional<DicksonWitness>& witness) {
  if (!witness) return "none";
  return "(" + std::to_string(witness->i) + "," + std::to_string(witness->j) +
         ")";
}

std::string method_label(BoundMethod method) {
  switch (method) {
    case BoundMethod::Guessed:
      return "guessed";
    case BoundMethod::Extracted:
      return "extracted";
    case BoundMethod::OracleMin:
      return "oracle_min";
  }
  return "unknown";
}

void print_report_block(std::ostream& out, const BoundReport& report) {
  out << "method: " << method_label(report.method) << "\n";
  out << "bound: " << report.bound << "\n";
  out << "trace:";
  for (Nat value : report.trace) out << ' ' << value;
  out << "\n";
  out << "witness: " << witness_text(report.witness) << "\n";
}

int run_bound(std::ostream& out, const std::string& f_text,
              const std::string& g_text, const std::string& method,
              bool as_json) {
  const Seq f = parse_seq(f_text);
  const Seq g = parse_seq(g_text);
  const std::string f_literal = render(f);
  const std::string g_literal = render(g);
  std::vector<BoundReport> reports;
  if (method == "guessed" || method == "both") {
    reports.push_back(bound_report(f, g, BoundMethod::Guessed));
  }
  if (method == "extracted" || method == "both") {
    reports.push_back(bound_report(f, g, BoundMethod::Extracted));
  }
  if (as_json) {
    ordered_json object;
    object["command"] = "bound";
    object["f"] = f_literal;
    object["g"] = g_literal;
    object["method"] = method;
    for (const auto& report : reports) {
      const std::string label = method_label(report.method);
      object[label + "_bound"] = report.bound;
      object[label + "_trace"] = report.trace;
      object[label + "_witness_i"] = report.witness->i;
      object[label + "_witness_j"] = report.witness->j;
    }
    out << object.dump() << "\n";
  } else {
    out << "f: " << f_literal << "\n";
    out << "g: " << g_literal << "\n";
    for (const auto& report : reports) print_report_block(out, report);
  }
  return 0;
}

int run_witness(std::ostream& out, const std::string& f_text,
                const std::string& g_text, Nat cutoff, bool as_json) {
  const Seq f = parse_seq(f_text);
  const Seq g = parse_seq(g_text);
  const std::optional<DicksonWitness> witness = holds_d(f, g, cutoff);
  if (as_json) {
    ordered_json object;
    object["command"] = "witness";
    object["f"] = render(f);
    object["g"] = render(g);
    object["n"] = cutoff;
    object["found"] = witness.has_value();
    if (witness) {
      object["witness_i"] = witness->i;
      object["witness_j"] = witness->j;
    }
    out << object.dump() << "\n";
  } else {
    out << "f: " << render(f) << "\n";
    out << "g: " << render(g) << "\n";
    out << "n: " << cutoff << "\n";
    out << "witness: " << witness_text(witness) << "\n";
  }
  return 0;
}

int run_oracle(std::ostream& out, const std::string& f_text,
               const std::string& g_text, bool as_json) {
  const Seq f = parse_seq(f_text);
  const Seq g = parse_seq(g_text);
  const BoundReport report = bound_report(f, g, BoundMethod::OracleMin);
  if (as_json) {
    ordered_json object;
    object["command"] = "oracle";
    object["f"] = render(f);
    object["g"] = render(g);
    object["oracle_min"] = report.bound;
    object["witness_i"] = report.witness->i;
    object["witness_j"] = report.witness->j;
    out << object.dump() << "\n";
  } else {
    out << "f: " << render(f) << "\n";
    out << "g: " << render(g) << "\n";
    out << "oracle_min: " << report.bound << "\n";
    out << "witness: " << witness_text(report.witness) << "\n";
  }
  return 0;
}

int run_sweep(std::ostream& out, std::ostream& err, Nat max_prefix,
              Nat max_value, const std::string& out_path, bool as_json) {
  const std::vector<SweepRow> rows = sweep(max_prefix, max_value);
  std::ofstream file(out_path);
  if (!file) {
    err << "error: cannot open " << out_path << " for writing\n";
    return 1;
  }
  write_sweep_csv(rows, file);
  file.flush();
  if (!file) {
    err << "error: writing " << out_path << " failed\n";
    return 1;
  }
  if (as_json) {
    ordered_json object;
    object["command"] = "sweep";
    object["max_prefix"] = max_prefix;
    object["max_value"] = max_value;
    object["rows"] = rows.size();
    object["out"] = out_path;
    out << object.dump() << "\n";
  } else {
    out << "rows: " << rows.size() << "\n";
    out << "out: " << out_path << "\n";
  }
  return 0;
}

int run_counterexample3(std::ostream& out, bool as_json) {
  const Counterexample3Report report = verify_counterexample3();
  if (as_json) {
    ordered_json object;
    object["command"] = "counterexample3";
    for (const auto& clause : report.clauses) {
      object[clause.name] = clause.actual;
    }
    object["ok"] = report.ok;
    out << object.dump() << "\n";
  } else {
    for (const auto& clause : report.clauses) {
      out << clause.name << ": expected " << clause.expected << ", got "
          << clause.actual << ": " << (clause.pass ? "PASS" : "FAIL") << "\n";
    }
    out << "overall: " << (report.ok ? "PASS" : "FAIL") << "\n";
  }
  return report.ok ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"certified upper bounds for the two-sequence Dickson property"};
  app.require_subcommand(1);

  std::string f_text;
  std::string g_text;
  std::string method{"both"};
  Nat cutoff = 0;
  Nat max_prefix = 0;
  Nat max_value = 0;
  std::string out_path;
  bool as_json = false;

  const std::string literal_help =
      "sequence literal: comma-separated prefix, then ;c for a constant tail "
      "or %b1,b2 for a periodic one (omitted tail means ;0)";
  const std::string json_help = "emit one flat JSON object";

  auto* bound_cmd =
      app.add_subcommand("bound", "compute bounds with verified witnesses");
  bound_cmd->add_option("--f", f_text, literal_help)->required();
  bound_cmd->add_option("--g", g_text, literal_help)->required();
  bound_cmd->add_option("--method", method, "guessed, extracted, or both")
      ->check(CLI::IsMember({"guessed", "extracted", "both"}))
      ->capture_default_str();
  bound_cmd->add_flag("--json", as_json, json_help);

  auto* witness_cmd = app.add_subcommand(
      "witness", "search for a Dickson pair at or below n");
  witness_cmd->add_option("--f", f_text, literal_help)->required();
  witness_cmd->add_option("--g", g_text, literal_help)->required();
  witness_cmd->add_option("--n", cutoff, "search cutoff")->required();
  witness_cmd->add_flag("--json", as_json, json_help);

  auto* oracle_cmd =
      app.add_subcommand("oracle", "least n admitting a Dickson pair");
  oracle_cmd->add_option("--f", f_text, literal_help)->required();
  oracle_cmd->add_option("--g", g_text, literal_help)->required();
  oracle_cmd->add_flag("--json", as_json, json_help);

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "tabulate bounds for a sequence family as CSV");
  sweep_cmd
      ->add_option("--max-prefix", max_prefix,
                   "family prefix lengths 1..max-prefix (cap 5)")
      ->required();
  sweep_cmd
      ->add_option("--max-value", max_value,
                   "family values 0..max-value (cap 4)")
      ->required();
  sweep_cmd->add_option("--out", out_path, "CSV output path")->required();
  sweep_cmd->add_flag("--json", as_json, json_help);

  auto* counter_cmd = app.add_subcommand(
      "counterexample3", "check the three-sequence descent refutation");
  counter_cmd->add_flag("--json", as_json, json_help);

  try {
    // App::parse consumes the vector back to front.
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bound_cmd->parsed()) {
      return run_bound(out, f_text, g_text, method, as_json);
    }
    if (witness_cmd->parsed()) {
      return run_witness(out, f_text, g_text, cutoff, as_json);
    }
    if (oracle_cmd->parsed()) {
      return run_oracle(out, f_text, g_text, as_json);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep(out, err, max_prefix, max_value, out_path, as_json);
    }
    return run_counterexample3(out, as_json);
  } catch (const SeqParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory; the requested computation is too large\n";
    return 1;
  } catch (const std::length_error&) {
    err << "error: the requested computation does not fit in memory\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dickson
