#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oqecc/code_io.hpp"
#include "oqecc/code_params.hpp"
#include "oqecc/error.hpp"
#include "oqecc/quantum_verifier.hpp"
#include "oqecc/search.hpp"

namespace oqecc::cli {

namespace {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroCode: return kExitZeroCode;
    case ErrorCode::CapExceeded: return kExitCapExceeded;
    case ErrorCode::ParseError:
    case ErrorCode::InvalidEncoding: return kExitParseError;
    default: return is_theory_violation(code) ? kExitTheoryViolation : kExitFailure;
  }
}

json distance_json(const Distance& d) { return d.d ? json(*d.d) : json(nullptr); }

void print_params(std::ostream& out, const AdditiveCode& code, const SubsystemParams& p, DistanceMethod method,
                  bool as_json) {
  if (as_json) {
    json j;
    j["code"] = p.bracket();
    j["n"] = p.n;
    j["q"] = p.q;
    j["layout"] = to_string(code.layout());
    j["x"] = p.x();
    j["y"] = p.y();
    j["dimA"] = p.dim_a();
    j["dimB"] = p.dim_b();
    j["dimC"] = p.dim_c();
    j["k"] = p.k.str();
    j["r"] = p.r.str();
    j["d"] = distance_json(p.distance);
    j["witness"] = p.distance.witness ? json(p.distance.witness->coords()) : json(nullptr);
    j["method"] = to_string(method);
    out << j.dump() << '\n';
    return;
  }
  const Rational n_minus_r = Rational::make(static_cast<std::int64_t>(p.n) * p.r.den - p.r.num, p.r.den);
  out << p.bracket() << '\n';
  auto row = [&](const char* name, const std::string& value) {
    out << "  " << std::left << std::setw(10) << name << value << '\n';
  };
  row("n", std::to_string(p.n));
  row("q", std::to_string(p.q));
  row("layout", to_string(code.layout()));
  row("|X|", std::to_string(p.x()));
  row("|Y|", std::to_string(p.y()));
  row("dim A", std::to_string(p.dim_a()));
  row("dim B", std::to_string(p.dim_b()));
  row("dim C", std::to_string(p.dim_c()));
  row("k", p.k.str());
  row("r", p.r.str());
  row("d", p.distance.str());
  row("witness", p.distance.witness ? format_vector(*p.distance.witness) : "-");
  row("method", to_string(method));
  row("compare", "[[" + n_minus_r.str() + "," + p.k.str() + "," + p.distance.str() + "]] stabilizer");
}

std::vector<std::string> split_checks(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

json report_json(const VerifierReport& r) {
  json j;
  j["check"] = r.check;
  j["pass"] = r.pass;
  j["examined"] = r.examined;
  j["mismatches"] = r.mismatches;
  j["tolerance"] = r.tolerance;
  j["summary"] = r.summary;
  json ws = json::array();
  for (const auto& w : r.witnesses) {
    ws.push_back({{"vector", w.vector}, {"note", w.note}, {"value", {w.value.real(), w.value.imag()}}});
  }
  j["witnesses"] = ws;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subsystem codes from classical additive codes", "oqecc"};
  app.require_subcommand(1);

  std::string input, output;
  bool as_json = false;
  std::string method_name = "basis";
  std::string checks = "rank,detect,tensor,support";
  unsigned threads = 0;
  SearchOptions search;

  auto* params_cmd = app.add_subcommand("params", "Subsystem-code parameters [[n,k,r,d]]_q of a code file");
  params_cmd->add_option("-i,--input", input, "Code file (JSON)")->required();
  params_cmd->add_flag("--json", as_json, "Emit a JSON record");
  params_cmd->add_option("--method", method_name, "Distance method")->check(CLI::IsMember({"exhaustive", "basis"}));
  params_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* mindist_cmd = app.add_subcommand("mindist", "Minimum distance of the subsystem code");
  mindist_cmd->add_option("-i,--input", input, "Code file (JSON)")->required();
  mindist_cmd->add_option("--method", method_name, "exhaustive, basis, or both")
      ->check(CLI::IsMember({"exhaustive", "basis", "both"}));
  mindist_cmd->add_flag("--json", as_json, "Emit a JSON record");
  mindist_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* dual_cmd = app.add_subcommand("dual", "Write the dual code under the layout's form");
  dual_cmd->add_option("-i,--input", input, "Code file (JSON)")->required();
  dual_cmd->add_option("-o,--output", output, "Output code file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Numerically certify the quantum code");
  verify_cmd->add_option("-i,--input", input, "Code file (JSON)")->required();
  verify_cmd->add_option("--checks", checks, "Comma-separated subset of rank,detect,tensor,support");
  verify_cmd->add_flag("--json", as_json, "Emit JSON reports");
  verify_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* search_cmd = app.add_subcommand("search", "Random search for good subsystem codes");
  search_cmd->add_option("-p", search.p, "Characteristic")->required();
  search_cmd->add_option("-m", search.m, "Extension degree")->required();
  search_cmd->add_option("-n", search.n, "Length")->required();
  search_cmd->add_option("--count", search.count, "Number of samples")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", search.seed, "Random seed")->required();
  search_cmd->add_option("-o,--output", output, "JSON-lines log (appended)")->required();
  search_cmd->add_option("--threads", search.threads, "Worker threads (0 = all cores)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (params_cmd->parsed()) {
      const AdditiveCode code = parse_code_file(input);
      const DistanceMethod method = method_name == "exhaustive" ? DistanceMethod::Exhaustive
                                                                : DistanceMethod::BasisEnumeration;
      print_params(out, code, subsystem_params(code, method, threads), method, as_json);
    } else if (mindist_cmd->parsed()) {
      const AdditiveCode code = parse_code_file(input);
      std::vector<DistanceMethod> methods;
      if (method_name != "basis") methods.push_back(DistanceMethod::Exhaustive);
      if (method_name != "exhaustive") methods.push_back(DistanceMethod::BasisEnumeration);
      std::vector<Distance> results;
      for (auto method : methods) {
        results.push_back(min_distance(code, method, threads));
        const Distance& d = results.back();
        if (as_json) {
          out << json{{"method", to_string(method)},
                      {"d", distance_json(d)},
                      {"witness", d.witness ? json(d.witness->coords()) : json(nullptr)}}
                     .dump()
              << '\n';
        } else {
          out << "d = " << d.str() << "  (" << to_string(method) << ")";
          if (d.witness) out << "  witness " << format_vector(*d.witness);
          out << '\n';
        }
      }
      if (results.size() == 2 && (results[0].d != results[1].d || !(results[0].witness == results[1].witness))) {
        err << "distance methods disagree\n";
        return kExitTheoryViolation;
      }
    } else if (dual_cmd->parsed()) {
      const AdditiveCode code = parse_code_file(input);
      const AdditiveCode d = dual(code);
      write_code_file(output, d);
      out << "wrote dual code of rank " << d.rank() << " (|X^perp| = " << d.size() << ") to " << output << '\n';
    } else if (verify_cmd->parsed()) {
      const AdditiveCode code = parse_code_file(input);
      const auto names = split_checks(checks);
      for (const auto& name : names) {
        if (name != "rank" && name != "detect" && name != "tensor" && name != "support") {
          err << "unknown check '" << name << "'\n";
          return kExitFailure;
        }
      }
      bool all_pass = true;
      for (const auto& name : names) {
        VerifierReport report;
        if (name == "rank") report = verify_rank(code);
        if (name == "detect") report = verify_detectability(code, threads);
        if (name == "tensor") report = verify_tensor_factorization(code, threads);
        if (name == "support") report = verify_character_support(code, threads);
        all_pass = all_pass && report.pass;
        if (as_json) {
          out << report_json(report).dump() << '\n';
        } else {
          out << (report.pass ? "PASS " : "FAIL ") << std::left << std::setw(8) << report.check << report.summary
              << '\n';
          for (const auto& w : report.witnesses) {
            out << "     witness";
            for (auto c : w.vector) out << ' ' << c;
            out << ": " << w.note << " (" << w.value.real() << (w.value.imag() < 0 ? "" : "+") << w.value.imag()
                << "i)\n";
          }
        }
      }
      return all_pass ? kExitOk : kExitTheoryViolation;
    } else if (search_cmd->parsed()) {
      const SearchResult result = run_search_to_file(search, output);
      out << result.samples << " samples, " << result.records.size() << " distinct codes, " << result.duplicates
          << " duplicates or zero draws\n";
      out << "best d per (k, r):\n" << result.pareto_table();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace oqecc::cli
