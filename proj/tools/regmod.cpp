// Command-line front end over the fixture catalog.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "regmod/error.hpp"
#include "regmod/runner.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

regmod::Params parse_params(const std::vector<std::string>& raw) {
  regmod::Params out;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects k=v, got " + kv);
    try {
      std::size_t used = 0;
      const std::string v = kv.substr(eq + 1);
      const double d = std::stod(v, &used);
      if (used != v.size()) throw UsageError("not a number: " + v);
      out[kv.substr(0, eq)] = d;
    } catch (const std::invalid_argument&) {
      throw UsageError("not a number in " + kv);
    } catch (const std::out_of_range&) {
      throw UsageError("out of range in " + kv);
    }
  }
  return out;
}

regmod::RadiusLadder parse_ladder(const std::string& s) {
  std::istringstream is(s);
  regmod::RadiusLadder l;
  char c1 = 0, c2 = 0;
  if (!(is >> l.r0 >> c1 >> l.factor >> c2 >> l.rungs) || c1 != ',' || c2 != ',') {
    throw UsageError("--ladder expects r0,factor,rungs");
  }
  try {
    l.validate();
  } catch (const regmod::Error& e) {
    throw UsageError(e.what());
  }
  return l;
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    os << text;
  }
  std::filesystem::rename(tmp, target);
}

std::string format_value(const regmod::Json& j) {
  if (j.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", j.get<double>());
    return buf;
  }
  return j.dump();
}

void print_summary(const regmod::RunReport& r) {
  std::cout << r.entry << ' ' << r.operation << ": " << (r.passed ? "PASS" : "FAIL");
  if (r.error) std::cout << " (error: " << *r.error << ')';
  std::cout << '\n';
  if (r.result.is_object()) {
    for (const auto& [k, v] : r.result.items()) {
      if (v.is_primitive()) std::cout << "  " << k << " = " << format_value(v) << '\n';
    }
  }
  for (const auto& e : r.expectations) {
    std::cout << "  [" << (e.passed ? "ok" : "FAIL") << "] " << e.expected << " ("
              << regmod::to_string(e.provenance) << ")\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity moduli, slopes and exact penalty thresholds on a fixture catalog"};
  app.require_subcommand(1);

  bool list_json = false;
  auto* list = app.add_subcommand("list", "List catalog entries");
  list->add_flag("--json", list_json, "Print the listing as JSON");

  std::string entry, operation, json_out, csv_out, ladder_arg, scheme = "lattice";
  std::vector<std::string> raw_params;
  int density = 0;
  double tol_conv = 0.0;
  bool timing = false;
  auto* run = app.add_subcommand("run", "Run one operation on a catalog entry");
  run->add_option("entry", entry, "Catalog entry name")->required();
  run->add_option("operation", operation, "Operation name")->required();
  run->add_option("--param", raw_params, "Parameter override k=v (repeatable)");
  run->add_option("--grid-density", density, "Grid points per axis")->check(CLI::Range(2, 4096));
  run->add_option("--ladder", ladder_arg, "Radius ladder r0,factor,rungs");
  run->add_option("--tol", tol_conv, "Relative convergence tolerance")
      ->check(CLI::PositiveNumber);
  run->add_option("--scheme", scheme, "Sampling scheme")
      ->check(CLI::IsMember({"lattice", "halton"}));
  run->add_option("--json", json_out, "Write the JSON report to a file ('-' for stdout)");
  run->add_option("--csv", csv_out, "Write per-rung (radius, value) pairs as CSV");
  run->add_flag("--timing", timing, "Include wall time in the JSON report");

  bool parallel = false;
  std::string verify_json;
  bool verify_timing = false;
  auto* verify = app.add_subcommand("verify-all", "Check every recorded expectation");
  verify->add_flag("--parallel", parallel, "Run independent entries concurrently");
  verify->add_option("--json", verify_json, "Write the JSON report to a file ('-' for stdout)");
  verify->add_flag("--timing", verify_timing, "Include wall times in the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*list) {
      regmod::Json arr = regmod::Json::array();
      for (const auto& e : regmod::catalog()) {
        regmod::Json params = regmod::Json::object();
        for (const auto& [k, v] : e.parameters) params[k] = v;
        arr.push_back({{"name", e.name},
                       {"kind", std::string(regmod::to_string(e.kind))},
                       {"formula_id", e.formula_id},
                       {"summary", e.summary},
                       {"parameters", params},
                       {"operations", regmod::operations_for(e.kind)},
                       {"expectations", e.expected.size()}});
      }
      if (list_json) {
        std::cout << arr.dump(2) << '\n';
      } else {
        for (const auto& e : arr) {
          std::cout << e["name"].get<std::string>() << " [" << e["kind"].get<std::string>()
                    << "] " << e["summary"].get<std::string>() << '\n';
        }
      }
      return kExitPass;
    }

    regmod::RunConfig cfg;
    cfg.seed = regmod::seed_from_env();

    if (*run) {
      cfg.params = parse_params(raw_params);
      if (density > 0) cfg.grid_density = density;
      if (!ladder_arg.empty()) cfg.ladder = parse_ladder(ladder_arg);
      if (tol_conv > 0.0) cfg.tol.tol_conv = tol_conv;
      cfg.scheme = scheme == "halton" ? regmod::SamplingScheme::ScrambledLowDiscrepancy
                                      : regmod::SamplingScheme::UniformLattice;
      const auto rep = regmod::run_entry(entry, operation, cfg);
      if (json_out != "-") print_summary(rep);
      if (!json_out.empty()) write_file(json_out, rep.to_json(timing).dump(2) + "\n");
      if (!csv_out.empty()) {
        if (!rep.has_estimate) throw UsageError("operation has no per-rung estimate for --csv");
        write_file(csv_out, regmod::rungs_csv(rep.estimate));
      }
      return rep.passed ? kExitPass : kExitFail;
    }

    if (*verify) {
      const auto rep = regmod::verify_all(cfg, parallel);
      if (verify_json != "-") {
        for (const auto& r : rep.runs) {
          std::cout << (r.passed ? "PASS " : "FAIL ") << r.entry << ' ' << r.operation;
          const auto params = r.config.value("params", regmod::Json::object());
          for (const auto& [k, v] : params.items()) {
            std::cout << ' ' << k << '=' << format_value(v);
          }
          if (r.error) std::cout << " (error: " << *r.error << ')';
          std::cout << '\n';
        }
      }
      if (!verify_json.empty()) {
        write_file(verify_json, rep.to_json(verify_timing).dump(2) + "\n");
      }
      return rep.passed ? kExitPass : kExitFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const regmod::Error& e) {
    const auto c = e.code();
    std::cerr << e.what() << '\n';
    if (c == regmod::ErrorCode::UnknownEntry || c == regmod::ErrorCode::UnknownOperation ||
        c == regmod::ErrorCode::InvalidArgument) {
      return kExitUsage;
    }
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
