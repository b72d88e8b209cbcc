#include "fcpoly/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "fcpoly/closedform.hpp"
#include "fcpoly/fcenum.hpp"
#include "fcpoly/polynomial.hpp"
#include "fcpoly/recur.hpp"
#include "fcpoly/trimatrix.hpp"

namespace fcpoly {

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

namespace {

constexpr int kOracleCap = 14;      // normal-form enumeration stays fast
constexpr int kChainCap = 12;       // chain sums are exponential beyond
constexpr unsigned kSeed = 20240717;

CheckResult method_agreement(int n, const CoeffTable& table) {
  CheckResult r{"poincare methods agree", true, ""};
  const auto a = poincare_sequence(std::max(n, 0));
  for (int m = 0; m <= n; ++m) {
    std::vector<std::pair<std::string, Polynomial>> results;
    results.emplace_back("partition", a[static_cast<size_t>(m)]);
    results.emplace_back("main-recurrence",
                         poincare_by_main_recurrence(m, table));
    if (m >= 1 && m <= kChainCap) {
      results.emplace_back("chain", poincare_chain_formula(m, table));
      results.emplace_back("shortcut", poincare_shortcut_formula(m, table));
    }
    if (m <= kOracleCap) results.emplace_back("oracle", oracle_poincare(m));
    if (m + 1 <= kPermutationCap)
      results.emplace_back("permutation", inversion_polynomial(m + 1));
    for (const auto& [name, value] : results)
      if (value != results.front().second) {
        r.pass = false;
        r.detail = "n=" + std::to_string(m) + " method " + name +
                   " disagrees with partition";
        return r;
      }
  }
  return r;
}

CheckResult by_last_agreement(int n) {
  CheckResult r{"by-last polynomials agree", true, ""};
  const int top = std::min(n, kChainCap);
  const auto triangle = by_last_triangle(std::max(top, 0));
  const auto a = poincare_sequence(std::max(top, 0));
  const CoeffTable table = build_coeff_table(std::max(top, 1));
  for (int m = 1; m <= top; ++m)
    for (int j = 1; j <= m; ++j) {
      const Polynomial& direct =
          triangle[static_cast<size_t>(m - 1)][static_cast<size_t>(j - 1)];
      const Polynomial via =
          a_last_via_table(m, j, table,
                           std::span<const Polynomial>(a.data(),
                                                       static_cast<size_t>(m)));
      if (via != direct) {
        r.pass = false;
        r.detail = "(n,j)=(" + std::to_string(m) + "," + std::to_string(j) +
                   ") table route disagrees";
        return r;
      }
      if (m <= 10 && oracle_poincare_by_last(m, j) != direct) {
        r.pass = false;
        r.detail = "(n,j)=(" + std::to_string(m) + "," + std::to_string(j) +
                   ") enumeration disagrees";
        return r;
      }
    }
  return r;
}

CheckResult catalan_triangle(int n) {
  CheckResult r{"catalan triangle at q=1", true, ""};
  const int top = std::min(n, kChainCap);
  const auto triangle = by_last_triangle(std::max(top, 0));
  for (int m = 1; m <= top; ++m)
    for (int j = 1; j <= m; ++j) {
      BigInt lhs =
          triangle[static_cast<size_t>(m - 1)][static_cast<size_t>(j - 1)]
              .eval(1);
      BigInt num = BigInt(j) * binomial(2 * m - j + 1, m);
      if (num % (m + 1) != 0 || lhs != num / (m + 1)) {
        r.pass = false;
        r.detail = "(n,j)=(" + std::to_string(m) + "," + std::to_string(j) + ")";
        return r;
      }
    }
  return r;
}

CheckResult specializations(int n, const CoeffTable& table) {
  CheckResult r{"coefficient specializations at 0 and 1", true, ""};
  for (int j = 1; j <= table.max_row(); ++j)
    for (int k = 1; k <= j; ++k) {
      if (table.B(j, k).eval(0) != 1) {
        r.pass = false;
        r.detail = "B(" + std::to_string(j) + "," + std::to_string(k) +
                   ") at 0 is not 1";
        return r;
      }
      if (!check_b_at_one(table, j, k)) {
        r.pass = false;
        r.detail = "B(" + std::to_string(j) + "," + std::to_string(k) +
                   ") at 1 misses the signed binomial";
        return r;
      }
    }
  (void)n;
  return r;
}

CheckResult closed_form_equality(int n, const CoeffTable& table) {
  CheckResult r{"closed form matches recurrence table", true, ""};
  const int top = std::min(n + 1, kOracleCap);
  for (int j = 1; j <= top; ++j)
    for (int k = 1; k <= j; ++k)
      if (b_closed(j, k) != table.b(j, k)) {
        r.pass = false;
        r.detail =
            "(j,k)=(" + std::to_string(j) + "," + std::to_string(k) + ")";
        return r;
      }
  return r;
}

CheckResult general_solver(int n, const CoeffTable& table) {
  CheckResult r{"triangular solver routes agree", true, ""};
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> size_dist(1, 7);
  std::uniform_int_distribution<int> value_dist(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    GeneralInstance<BigInt> inst;
    const int N = size_dist(rng);
    for (int m = 1; m <= N; ++m) inst.psi.emplace_back(value_dist(rng));
    inst.lower.resize(static_cast<size_t>(N > 1 ? N - 1 : 0));
    for (int m = 2; m <= N; ++m)
      for (int i = 1; i < m; ++i)
        inst.lower[static_cast<size_t>(m - 2)].emplace_back(value_dist(rng));
    if (solve_by_recurrence(inst) != solve_by_chain_formula(inst)) {
      r.pass = false;
      r.detail = "random integer instance, trial " + std::to_string(trial);
      return r;
    }
  }
  const int N = std::min(n + 1, kChainCap);
  const auto inst = poincare_instance(table, std::max(N, 1));
  const auto by_rec = solve_by_recurrence(inst);
  if (by_rec != solve_by_chain_formula(inst)) {
    r.pass = false;
    r.detail = "poincare instance routes disagree";
    return r;
  }
  const auto a = poincare_sequence(std::max(N - 1, 0));
  for (int m = 1; m <= N; ++m)
    if (by_rec[static_cast<size_t>(m - 1)] !=
        Polynomial::monomial(1, m + 1) * a[static_cast<size_t>(m - 1)]) {
      r.pass = false;
      r.detail = "poincare instance u_" + std::to_string(m);
      return r;
    }
  return r;
}

CheckResult inverse_relations(int n, const CoeffTable& table) {
  CheckResult r{"inverse-column identities", true, ""};
  const int top = std::min(n, kChainCap);
  if (top < 1) return r;
  const UnitriMatrix p = unitri_from_table(table);
  const auto a = poincare_sequence(top);
  for (int m = 1; m <= top; ++m) {
    if (!check_shortcut(m, p, a)) {
      r.pass = false;
      r.detail = "shortcut fails at n=" + std::to_string(m);
      return r;
    }
    if (!check_generic_relation(m, p)) {
      r.pass = false;
      r.detail = "generic relation fails at n=" + std::to_string(m);
      return r;
    }
  }
  return r;
}

CheckResult catalan_recurrence(int n) {
  CheckResult r{"catalan recurrence", true, ""};
  for (int m = 1; m <= n; ++m)
    if (!check_catalan_recurrence(m)) {
      r.pass = false;
      r.detail = "fails at n=" + std::to_string(m);
      return r;
    }
  return r;
}

CheckResult saturated_gap_sums(int n) {
  CheckResult r{"saturated gap sums collapse to a monomial", true, ""};
  const int bmax = std::min(n + 2, kChainCap);
  for (int a = 1; a <= bmax; ++a)
    for (int b = a + 1; b <= bmax; ++b) {
      const int span = b - a + 1;
      // compositions of span into u parts, each >= 2, u <= 3
      std::vector<int> lengths;
      auto emit = [&](auto&& self, int remaining) -> bool {
        if (remaining == 0 && !lengths.empty()) {
          const int u = static_cast<int>(lengths.size());
          int exponent = u * a;
          for (int t = 0; t + 1 < u; ++t)
            exponent += (u - 1 - t) * lengths[static_cast<size_t>(t)];
          Polynomial expected =
              Polynomial::monomial(u % 2 == 0 ? 1 : -1, exponent);
          if (sigma_pi({a, b, lengths}) != expected) {
            std::ostringstream what;
            what << "spec a=" << a << " b=" << b << " lengths=";
            for (int l : lengths) what << l << ' ';
            r.pass = false;
            r.detail = what.str();
            return false;
          }
          return true;
        }
        if (lengths.size() == 3) return true;
        for (int l = 2; l <= remaining; ++l) {
          lengths.push_back(l);
          const bool ok = self(self, remaining - l);
          lengths.pop_back();
          if (!ok) return false;
        }
        return true;
      };
      if (!emit(emit, span)) return r;
    }
  return r;
}

}  // namespace

std::vector<CheckResult> run_verification(int n) {
  if (n < 0) n = 0;
  const CoeffTable table = build_coeff_table(std::max(n + 3, 4));
  std::vector<CheckResult> out;
  out.push_back(method_agreement(n, table));
  out.push_back(by_last_agreement(n));
  out.push_back(catalan_triangle(n));
  out.push_back(specializations(n, table));
  out.push_back(closed_form_equality(n, table));
  out.push_back(general_solver(n, table));
  out.push_back(inverse_relations(n, table));
  out.push_back(catalan_recurrence(n));
  out.push_back(saturated_gap_sums(n));
  return out;
}

}  // namespace fcpoly
