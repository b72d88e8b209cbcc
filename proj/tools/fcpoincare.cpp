// fcpoincare: compute, tabulate and cross-verify the Poincare polynomials
// of the fully commutative elements of the symmetric-group Coxeter groups.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fcpoly/closedform.hpp"
#include "fcpoly/fcenum.hpp"
#include "fcpoly/polynomial.hpp"
#include "fcpoly/recur.hpp"
#include "fcpoly/verify.hpp"

namespace {

using fcpoly::Polynomial;
using nlohmann::json;

enum ExitCode { kOk = 0, kDisagree = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  int n = 0;
  int j = 0;  // 0 = not requested
  std::string method = "partition";
  std::string format = "text";
  std::string out;
  std::string view = "b";
};

constexpr int kChainWarn = 12;

const std::vector<std::string> kMethods = {
    "oracle", "permutation", "partition", "main-recurrence",
    "chain",  "shortcut",    "all"};

json coeff_json(const Polynomial& p) {
  json arr = json::array();
  for (const auto& s : p.coeff_strings()) arr.push_back(s);
  return arr;
}

void deliver(const RunConfig& cfg, const std::string& report) {
  if (cfg.out.empty()) {
    std::cout << report;
    return;
  }
  std::filesystem::path path(cfg.out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("FCPOINCARE_OUT_DIR"))
      path = std::filesystem::path(dir) / path;
  }
  std::ofstream file(path);
  if (!file) {
    std::cerr << "error: cannot open " << path.string() << " for writing\n";
    std::exit(kUsage);
  }
  file << report;
}

Polynomial compute_poincare(const std::string& method, int n) {
  if (method == "oracle") return fcpoly::oracle_poincare(n);
  if (method == "permutation") return fcpoly::inversion_polynomial(n + 1);
  if (method == "partition") return fcpoly::poincare_by_partition(n);
  if (method == "main-recurrence")
    return fcpoly::poincare_by_main_recurrence(
        n, fcpoly::build_coeff_table(n + 1));
  if (method == "chain") {
    if (n < 1)
      fcpoly::raise(fcpoly::ErrorCode::index_out_of_range,
                    "method chain requires n >= 1");
    return fcpoly::poincare_chain_formula(n, fcpoly::build_coeff_table(n + 1));
  }
  if (method == "shortcut") {
    if (n < 1)
      fcpoly::raise(fcpoly::ErrorCode::index_out_of_range,
                    "method shortcut requires n >= 1");
    return fcpoly::poincare_shortcut_formula(n,
                                             fcpoly::build_coeff_table(n + 3));
  }
  fcpoly::raise(fcpoly::ErrorCode::index_out_of_range,
                "unknown method " + method);
}

// methods applicable to a_n at this rank, in stable print order
std::vector<std::string> applicable_methods(int n) {
  std::vector<std::string> out;
  if (n <= 14) out.push_back("oracle");
  if (n + 1 <= fcpoly::kPermutationCap) out.push_back("permutation");
  out.push_back("partition");
  out.push_back("main-recurrence");
  if (n >= 1) {
    out.push_back("chain");
    out.push_back("shortcut");
  }
  return out;
}

int cmd_poincare_by_last(const RunConfig& cfg) {
  if (cfg.j < 1 || cfg.j > cfg.n)
    fcpoly::raise(fcpoly::ErrorCode::index_out_of_range,
                  "--j must satisfy 1 <= j <= n");
  const auto direct = [&](int n, int j) {
    const auto triangle = fcpoly::by_last_triangle(n);
    return triangle[static_cast<size_t>(n - 1)][static_cast<size_t>(j - 1)];
  };
  std::vector<std::pair<std::string, Polynomial>> results;
  if (cfg.method == "oracle") {
    results.emplace_back("oracle", fcpoly::oracle_poincare_by_last(cfg.n, cfg.j));
  } else if (cfg.method == "partition") {
    results.emplace_back("partition", direct(cfg.n, cfg.j));
  } else if (cfg.method == "all") {
    if (cfg.n <= 14)
      results.emplace_back("oracle",
                           fcpoly::oracle_poincare_by_last(cfg.n, cfg.j));
    results.emplace_back("partition", direct(cfg.n, cfg.j));
    const auto a = fcpoly::poincare_sequence(cfg.n - 1);
    results.emplace_back(
        "table", fcpoly::a_last_via_table(cfg.n, cfg.j,
                                          fcpoly::build_coeff_table(cfg.j), a));
  } else {
    std::cerr << "error: --j supports methods oracle, partition, all\n";
    return kUsage;
  }

  bool agree = true;
  for (const auto& [name, value] : results)
    agree = agree && value == results.front().second;

  std::ostringstream report;
  if (cfg.format == "json") {
    if (results.size() == 1) {
      report << coeff_json(results.front().second).dump() << '\n';
    } else {
      json obj;
      obj["n"] = cfg.n;
      obj["j"] = cfg.j;
      for (const auto& [name, value] : results)
        obj["results"][name] = coeff_json(value);
      obj["agree"] = agree;
      report << obj.dump(2) << '\n';
    }
  } else if (cfg.format == "csv") {
    report << "n,j,method,polynomial\n";
    for (const auto& [name, value] : results)
      report << cfg.n << ',' << cfg.j << ',' << name << ','
             << value.to_string() << '\n';
  } else {
    if (results.size() == 1) {
      report << results.front().second.to_string() << '\n';
    } else {
      for (const auto& [name, value] : results)
        report << name << ": " << value.to_string() << '\n';
      report << "verdict: " << (agree ? "AGREE" : "DISAGREE") << '\n';
    }
  }
  deliver(cfg, report.str());
  return agree ? kOk : kDisagree;
}

int cmd_poincare(const RunConfig& cfg) {
  if (cfg.j != 0) return cmd_poincare_by_last(cfg);
  if ((cfg.method == "chain" || cfg.method == "shortcut" ||
       cfg.method == "all") &&
      cfg.n > kChainWarn)
    std::cerr << "warning: chain/shortcut formulas enumerate 2^n chains; n="
              << cfg.n << " may take a while\n";

  std::vector<std::pair<std::string, Polynomial>> results;
  if (cfg.method == "all") {
    for (const auto& m : applicable_methods(cfg.n))
      results.emplace_back(m, compute_poincare(m, cfg.n));
  } else {
    results.emplace_back(cfg.method, compute_poincare(cfg.method, cfg.n));
  }

  bool agree = true;
  for (const auto& [name, value] : results)
    agree = agree && value == results.front().second;

  std::ostringstream report;
  if (cfg.format == "json") {
    if (results.size() == 1) {
      report << coeff_json(results.front().second).dump() << '\n';
    } else {
      json obj;
      obj["n"] = cfg.n;
      for (const auto& [name, value] : results)
        obj["results"][name] = coeff_json(value);
      obj["agree"] = agree;
      report << obj.dump(2) << '\n';
    }
  } else if (cfg.format == "csv") {
    report << "n,method,polynomial\n";
    for (const auto& [name, value] : results)
      report << cfg.n << ',' << name << ',' << value.to_string() << '\n';
  } else {
    if (results.size() == 1) {
      report << results.front().second.to_string() << '\n';
    } else {
      for (const auto& [name, value] : results)
        report << name << ": " << value.to_string() << '\n';
      report << "verdict: " << (agree ? "AGREE" : "DISAGREE") << '\n';
    }
  }
  deliver(cfg, report.str());
  return agree ? kOk : kDisagree;
}

int cmd_table(const RunConfig& cfg) {
  const auto triangle = fcpoly::by_last_triangle(cfg.n);
  std::ostringstream report;
  json rows = json::array();
  if (cfg.format == "csv")
    report << "n,j,polynomial,value_at_1,binomial_formula,match\n";
  bool all_match = true;
  for (int m = 1; m <= cfg.n; ++m)
    for (int j = 1; j <= m; ++j) {
      const Polynomial& p =
          triangle[static_cast<size_t>(m - 1)][static_cast<size_t>(j - 1)];
      const fcpoly::BigInt at_one = p.eval(1);
      const fcpoly::BigInt num =
          fcpoly::BigInt(j) * fcpoly::binomial(2 * m - j + 1, m);
      const bool divides = num % (m + 1) == 0;
      const fcpoly::BigInt formula = divides ? num / (m + 1) : fcpoly::BigInt(-1);
      const bool match = divides && at_one == formula;
      all_match = all_match && match;
      if (cfg.format == "csv") {
        report << m << ',' << j << ',' << p.to_string() << ',' << at_one << ','
               << formula << ',' << (match ? "yes" : "no") << '\n';
      } else if (cfg.format == "json") {
        json row;
        row["n"] = m;
        row["j"] = j;
        row["coefficients"] = coeff_json(p);
        row["value_at_1"] = at_one.str();
        row["binomial_formula"] = formula.str();
        row["match"] = match;
        rows.push_back(row);
      } else {
        report << "a[" << m << ',' << j << "] = " << p.to_string()
               << "  | at q=1: " << at_one << "  formula: " << formula
               << "  match: " << (match ? "yes" : "no") << '\n';
      }
    }
  if (cfg.format == "json") report << rows.dump(2) << '\n';
  deliver(cfg, report.str());
  return all_match ? kOk : kDisagree;
}

int cmd_bjk(const RunConfig& cfg) {
  const auto table = fcpoly::build_coeff_table(std::max(cfg.n, 1));
  const bool capital = cfg.view == "B";
  std::ostringstream report;
  if (cfg.format == "json") {
    json rows = json::array();
    for (int j = 1; j <= table.max_row(); ++j)
      for (int k = 1; k <= j; ++k) {
        json row;
        row["j"] = j;
        row["k"] = k;
        row["coefficients"] =
            coeff_json(capital ? table.B(j, k) : table.b(j, k));
        rows.push_back(row);
      }
    report << rows.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    report << fcpoly::table_csv(table, capital);
  } else {
    const char* name = capital ? "B" : "b";
    for (int j = 1; j <= table.max_row(); ++j)
      for (int k = 1; k <= j; ++k)
        report << name << '[' << j << ',' << k << "] = "
               << (capital ? table.B(j, k) : table.b(j, k)).to_string() << '\n';
  }
  deliver(cfg, report.str());
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  const auto results = fcpoly::run_verification(cfg.n);
  std::ostringstream report;
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& r : results) {
      json row;
      row["name"] = r.name;
      row["pass"] = r.pass;
      if (!r.detail.empty()) row["detail"] = r.detail;
      rows.push_back(row);
    }
    report << rows.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      report << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
      if (!r.detail.empty()) report << "  (" << r.detail << ')';
      report << '\n';
    }
  }
  deliver(cfg, report.str());
  return fcpoly::all_passed(results) ? kOk : kDisagree;
}

int cmd_catalan(const RunConfig& cfg) {
  std::ostringstream report;
  bool all_ok = true;
  json rows = json::array();
  if (cfg.format == "csv") report << "n,catalan,recurrence_holds\n";
  for (int m = 1; m <= std::max(cfg.n, 1); ++m) {
    const bool ok = fcpoly::check_catalan_recurrence(m);
    all_ok = all_ok && ok;
    const fcpoly::BigInt c = fcpoly::catalan_number(m);
    if (cfg.format == "json") {
      json row;
      row["n"] = m;
      row["catalan"] = c.str();
      row["recurrence_holds"] = ok;
      rows.push_back(row);
    } else if (cfg.format == "csv") {
      report << m << ',' << c << ',' << (ok ? "yes" : "no") << '\n';
    } else {
      report << "C_" << m << " = " << c << "  recurrence: "
             << (ok ? "PASS" : "FAIL") << '\n';
    }
  }
  if (cfg.format == "json") report << rows.dump(2) << '\n';
  deliver(cfg, report.str());
  return all_ok ? kOk : kDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poincare polynomials of fully commutative elements, five ways"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub, bool with_method) {
    sub->add_option("--n", cfg.n, "rank")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--format", cfg.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", cfg.out,
                    "write the report to this file (relative paths resolve "
                    "against FCPOINCARE_OUT_DIR)");
    if (with_method)
      sub->add_option("--method", cfg.method, "computation method")
          ->check(CLI::IsMember(kMethods));
  };

  auto* poincare = app.add_subcommand("poincare", "compute a_n");
  add_common(poincare, true);
  poincare->add_option("--j", cfg.j,
                       "restrict to forms ending with generator j")
      ->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand(
      "table", "the by-last-generator triangle with its q=1 column");
  add_common(table, false);

  auto* bjk = app.add_subcommand("bjk", "dump the coefficient table");
  add_common(bjk, false);
  bjk->add_option("--view", cfg.view, "b (default) or B for the mirrored view")
      ->check(CLI::IsMember({"b", "B"}));

  auto* verify = app.add_subcommand("verify", "run the cross-check battery");
  add_common(verify, false);

  auto* catalan = app.add_subcommand(
      "catalan", "catalan numbers and their recurrence, up to n");
  add_common(catalan, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (poincare->parsed()) {
      cfg.command = "poincare";
      if (cfg.method == "permutation" && cfg.n + 1 > fcpoly::kPermutationCap)
        fcpoly::raise(fcpoly::ErrorCode::cap_exceeded,
                      "method permutation enumerates S_{n+1}; supported only "
                      "for n <= " +
                          std::to_string(fcpoly::kPermutationCap - 1));
      return cmd_poincare(cfg);
    }
    if (table->parsed()) return cmd_table(cfg);
    if (bjk->parsed()) return cmd_bjk(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (catalan->parsed()) return cmd_catalan(cfg);
  } catch (const fcpoly::Error& e) {
    std::cerr << "error [" << fcpoly::error_code_name(e.code())
              << "]: " << e.what() << '\n';
    switch (e.code()) {
      case fcpoly::ErrorCode::cap_exceeded:
      case fcpoly::ErrorCode::index_out_of_range:
      case fcpoly::ErrorCode::table_too_small:
      case fcpoly::ErrorCode::invalid_placement:
        return kUsage;
      default:
        return kDisagree;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDisagree;
  }
  return kUsage;
}
