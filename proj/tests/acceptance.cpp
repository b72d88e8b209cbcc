// Acceptance suite: one binary, one pass/fail line per criterion, exit code
// = number of failed criteria. Everything is exact arithmetic; the runtime
// bounds are asserted where stated.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fcpoly/closedform.hpp"
#include "fcpoly/fcenum.hpp"
#include "fcpoly/polynomial.hpp"
#include "fcpoly/recur.hpp"
#include "fcpoly/trimatrix.hpp"

using fcpoly::BigInt;
using fcpoly::CoeffTable;
using fcpoly::NormalFormStream;
using fcpoly::Polynomial;
using fcpoly::UnitriMatrix;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  int number;
  std::string title;
  bool pass;
  std::string detail;
};

std::vector<Criterion> g_results;

void record(int number, const std::string& title, bool pass,
            const std::string& detail = "") {
  g_results.push_back({number, title, pass, detail});
}

// --- criterion 1: five-way agreement, 0 <= n <= 10, exact, < 2 min ---------
void criterion_1() {
  const auto start = Clock::now();
  std::string detail;
  bool pass = true;
  const CoeffTable table = fcpoly::build_coeff_table(13);
  for (int n = 0; n <= 10 && pass; ++n) {
    const Polynomial reference = fcpoly::oracle_poincare(n);
    std::vector<std::pair<std::string, Polynomial>> others;
    if (n <= 9)
      others.emplace_back("permutation", fcpoly::inversion_polynomial(n + 1));
    others.emplace_back("partition", fcpoly::poincare_by_partition(n));
    others.emplace_back("main-recurrence",
                        fcpoly::poincare_by_main_recurrence(n, table));
    if (n >= 1) {
      others.emplace_back("chain", fcpoly::poincare_chain_formula(n, table));
      others.emplace_back("shortcut",
                          fcpoly::poincare_shortcut_formula(n, table));
    }
    for (const auto& [name, value] : others)
      if (value.coeffs() != reference.coeffs()) {
        pass = false;
        detail = "n=" + std::to_string(n) + ", method " + name;
        break;
      }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 120.0) {
    pass = false;
    detail += " runtime above 2 min";
  }
  std::ostringstream title;
  title << "five-way agreement for 0 <= n <= 10 ("
        << static_cast<int>(elapsed * 1000) << " ms)";
  record(1, title.str(), pass, detail);
}

// --- criterion 2: a_n(1) = C_{n+1}, 0 <= n <= 20 ---------------------------
void criterion_2() {
  bool pass = true;
  std::string detail;
  const auto a = fcpoly::poincare_sequence(20);
  for (int n = 0; n <= 20 && pass; ++n) {
    if (a[static_cast<size_t>(n)].eval(1) != fcpoly::catalan_number(n + 1)) {
      pass = false;
      detail = "recurrence value at n=" + std::to_string(n);
    }
    if (pass && n <= 14) {
      // independent count straight off the enumeration
      std::uint64_t count = 0;
      NormalFormStream stream(n);
      while (stream.advance()) ++count;
      if (BigInt(count) != fcpoly::catalan_number(n + 1)) {
        pass = false;
        detail = "enumeration count at n=" + std::to_string(n);
      }
    }
  }
  record(2, "catalan evaluation a_n(1) = C_{n+1} for 0 <= n <= 20", pass,
         detail);
}

// --- criterion 3: catalan triangle against the enumeration, n <= 12 --------
void criterion_3() {
  bool pass = true;
  std::string detail;
  for (int n = 1; n <= 12 && pass; ++n) {
    // one enumeration pass per rank, counting forms by last generator
    std::vector<BigInt> counts(static_cast<size_t>(n) + 1, 0);
    NormalFormStream stream(n);
    while (stream.advance())
      ++counts[static_cast<size_t>(stream.current().last_generator())];
    for (int j = 1; j <= n && pass; ++j) {
      const BigInt numerator = BigInt(j) * fcpoly::binomial(2 * n - j + 1, n);
      if (numerator % (n + 1) != 0 ||
          counts[static_cast<size_t>(j)] != numerator / (n + 1)) {
        pass = false;
        detail = "(n,j)=(" + std::to_string(n) + "," + std::to_string(j) + ")";
      }
    }
  }
  record(3, "catalan triangle counts for 1 <= j <= n <= 12", pass, detail);
}

// --- criterion 4: closed form equals the table, j <= 14, < 30 s ------------
// returns the first mismatching (j,k) against b_closed, or (0,0)
std::pair<int, int> first_closed_form_mismatch(const CoeffTable& table) {
  for (int j = 1; j <= table.max_row(); ++j)
    for (int k = 1; k <= j; ++k)
      if (fcpoly::b_closed(j, k) != table.b(j, k)) return {j, k};
  return {0, 0};
}

void criterion_4() {
  const auto start = Clock::now();
  const CoeffTable table = fcpoly::build_coeff_table(14);
  auto [j, k] = first_closed_form_mismatch(table);
  bool pass = (j == 0);
  std::string detail =
      pass ? "" : "(j,k)=(" + std::to_string(j) + "," + std::to_string(k) + ")";
  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0) {
    pass = false;
    detail += " runtime above 30 s";
  }
  std::ostringstream title;
  title << "closed form matches the table for 1 <= k <= j <= 14 ("
        << static_cast<int>(elapsed * 1000) << " ms)";
  record(4, title.str(), pass, detail);
}

// --- criterion 5: specializations at 0 and 1, j <= 20 ----------------------
void criterion_5() {
  bool pass = true;
  std::string detail;
  const CoeffTable table = fcpoly::build_coeff_table(20);
  for (int j = 1; j <= 20 && pass; ++j)
    for (int k = 1; k <= j && pass; ++k) {
      if (table.B(j, k).eval(0) != 1) {
        pass = false;
        detail = "B(" + std::to_string(j) + "," + std::to_string(k) + ")(0)";
      } else if (!fcpoly::check_b_at_one(table, j, k)) {
        pass = false;
        detail = "B(" + std::to_string(j) + "," + std::to_string(k) + ")(1)";
      }
    }
  for (int n = 1; n <= 20 && pass; ++n)
    if (!fcpoly::check_catalan_recurrence(n)) {
      pass = false;
      detail = "catalan recurrence at n=" + std::to_string(n);
    }
  record(5, "specializations at q=0, q=1 and the catalan recurrence", pass,
         detail);
}

// --- criterion 6: both solver routes agree -- random and poincare ----------
void criterion_6() {
  bool pass = true;
  std::string detail;
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> size_dist(1, 7);
  std::uniform_int_distribution<int> value_dist(-9, 9);
  for (int trial = 0; trial < 200 && pass; ++trial) {
    fcpoly::GeneralInstance<BigInt> inst;
    const int N = size_dist(rng);
    for (int n = 1; n <= N; ++n) inst.psi.emplace_back(value_dist(rng));
    inst.lower.resize(static_cast<size_t>(N > 1 ? N - 1 : 0));
    for (int n = 2; n <= N; ++n)
      for (int i = 1; i < n; ++i)
        inst.lower[static_cast<size_t>(n - 2)].emplace_back(value_dist(rng));
    if (fcpoly::solve_by_recurrence(inst) !=
        fcpoly::solve_by_chain_formula(inst)) {
      pass = false;
      detail = "random instance, trial " + std::to_string(trial);
    }
  }
  if (pass) {
    const CoeffTable table = fcpoly::build_coeff_table(12);
    const auto inst = fcpoly::poincare_instance(table, 12);
    if (fcpoly::solve_by_recurrence(inst) !=
        fcpoly::solve_by_chain_formula(inst)) {
      pass = false;
      detail = "poincare instance";
    }
  }
  record(6, "triangular solver routes agree (200 random + poincare to N=12)",
         pass, detail);
}

// --- criterion 7: inverse-column identities, n <= 12 ------------------------
void criterion_7() {
  bool pass = true;
  std::string detail;
  const CoeffTable table = fcpoly::build_coeff_table(14);
  const UnitriMatrix p = fcpoly::unitri_from_table(table);
  const auto a = fcpoly::poincare_sequence(12);
  for (int n = 1; n <= 12 && pass; ++n) {
    if (!fcpoly::check_shortcut(n, p, a)) {
      pass = false;
      detail = "shortcut at n=" + std::to_string(n);
    } else if (!fcpoly::check_generic_relation(n, p)) {
      pass = false;
      detail = "generic relation at n=" + std::to_string(n);
    }
  }
  if (pass) {
    // the seed value, verbatim, along both inversion routes
    const Polynomial expected =
        Polynomial::monomial(-1, 2) *
        (Polynomial(1) - Polynomial::monomial(1, 2));
    if (fcpoly::c_by_chains(p, 3, 1) != expected ||
        fcpoly::invert_unitriangular(p).entry(3, 1) != expected) {
      pass = false;
      detail = "c(3,1) seed value";
    }
  }
  record(7, "inverse-column shortcut and generic relation for n <= 12", pass,
         detail);
}

// --- criterion 8: saturated gap sums, u <= 3, b <= 12 -----------------------
void criterion_8() {
  bool pass = true;
  std::string detail;
  for (int a = 1; a <= 12 && pass; ++a)
    for (int b = a + 1; b <= 12 && pass; ++b) {
      std::vector<int> lengths;
      auto emit = [&](auto&& self, int remaining) -> void {
        if (!pass) return;
        if (remaining == 0 && !lengths.empty()) {
          const int u = static_cast<int>(lengths.size());
          int exponent = u * a;
          for (int t = 0; t + 1 < u; ++t)
            exponent += (u - 1 - t) * lengths[static_cast<size_t>(t)];
          const Polynomial expected =
              Polynomial::monomial(u % 2 == 0 ? 1 : -1, exponent);
          if (fcpoly::sigma_pi({a, b, lengths}) != expected) {
            pass = false;
            std::ostringstream what;
            what << "a=" << a << " b=" << b << " lengths=(";
            for (int l : lengths) what << l << ',';
            what << ')';
            detail = what.str();
          }
          return;
        }
        if (lengths.size() == 3) return;
        for (int l = 2; l <= remaining && pass; ++l) {
          lengths.push_back(l);
          self(self, remaining - l);
          lengths.pop_back();
        }
      };
      emit(emit, b - a + 1);
    }
  record(8, "saturated gap sums equal the predicted monomial (u <= 3, b <= 12)",
         pass, detail);
}

// --- criterion 9: negative control ------------------------------------------
// Rebuild the coefficient table with the sign of the subtracted term
// flipped; the closed-form comparison must now fail, first at (3,2).
CoeffTable build_faulty_table(int N) {
  std::vector<std::vector<Polynomial>> rows;
  for (int j = 1; j <= N; ++j) {
    std::vector<Polynomial> row(static_cast<size_t>(j));
    row[static_cast<size_t>(j - 1)] = 1;
    if (j >= 2) {
      const Polynomial factor = Polynomial(1) - Polynomial::monomial(1, j);
      row[0] = rows[static_cast<size_t>(j - 2)][0] * factor;
      for (int k = 2; k <= j - 1; ++k)
        row[static_cast<size_t>(k - 1)] =
            rows[static_cast<size_t>(j - 2)][static_cast<size_t>(k - 2)] +
            factor *
                rows[static_cast<size_t>(j - 2)][static_cast<size_t>(k - 1)] +
            rows[static_cast<size_t>(j - 3)][static_cast<size_t>(k - 2)];
    }
    rows.push_back(std::move(row));
  }
  return CoeffTable(std::move(rows));
}

void criterion_9() {
  const CoeffTable faulty = build_faulty_table(14);
  const auto [j, k] = first_closed_form_mismatch(faulty);
  const bool pass = (j == 3 && k == 2);
  record(9, "flipped-sign table fails the closed-form comparison at (3,2)",
         pass,
         pass ? ""
              : "first mismatch at (" + std::to_string(j) + "," +
                    std::to_string(k) + ")");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();

  int failures = 0;
  for (const auto& c : g_results) {
    std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number
              << ": " << c.title;
    if (!c.detail.empty()) std::cout << "  -- " << c.detail;
    std::cout << '\n';
    if (!c.pass) ++failures;
  }
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: " + std::to_string(failures) +
                                    " criterion(s) failed")
            << '\n';
  return failures;
}
