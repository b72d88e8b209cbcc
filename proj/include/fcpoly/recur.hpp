#pragma once

#include <span>
#include <string>
#include <vector>

#include "fcpoly/polynomial.hpp"

namespace fcpoly {

/// binom(x, y) by Pascal's rule in big integers; 0 when y < 0 or y > x.
BigInt binomial(int x, int y);

/// Catalan number binom(2m, m) / (m + 1).
BigInt catalan_number(int m);

/// Lower-unitriangular table of the coefficient polynomials that link the
/// by-last-generator polynomials to earlier Poincare polynomials. Row j
/// holds b(j,1..j) with b(j,j) = 1 and b(j,1) = (1-q^2)...(1-q^j); the
/// capital view is B(j,k) = b(j, j-k+1). Immutable after construction.
class CoeffTable {
 public:
  /// rows[j-1] must hold exactly j polynomials with rows[j-1][j-1] == 1.
  explicit CoeffTable(std::vector<std::vector<Polynomial>> rows);

  int max_row() const { return static_cast<int>(rows_.size()); }
  const Polynomial& b(int j, int k) const;
  const Polynomial& B(int j, int k) const;

 private:
  std::vector<std::vector<Polynomial>> rows_;
};

/// Fill rows 1..N: unit diagonal, first column the products
/// (1-q^2)...(1-q^j), and interior entries from
/// b(j,k) = b(j-1,k-1) + (1-q^j) b(j-1,k) - b(j-2,k-1).
CoeffTable build_coeff_table(int N);

/// a_n^j from the one-step recurrence
/// a_n^j = a_{n-1}^{j-1} + q^j (1 + sum_{s=j}^{n-1} a_{n-1}^s),
/// where prior holds a_{n-1}^1 .. a_{n-1}^{n-1} (empty for n = 1) and
/// missing indices (s = 0 or s > n-1) count as 0.
Polynomial a_last_direct(int n, int j, std::span<const Polynomial> prior);

/// a_n^j = sum_{k=1}^{j} q^{j-k+1} B(j,k) a_{n-k}, with a holding a_0..a_{n-1}.
Polynomial a_last_via_table(int n, int j, const CoeffTable& table,
                            std::span<const Polynomial> a);

/// Rows 1..n of the by-last triangle: result[m-1][j-1] = a_m^j.
std::vector<std::vector<Polynomial>> by_last_triangle(int n);

/// a_0..a_n assembled bottom-up from a_n = 1 + sum_j a_n^j.
std::vector<Polynomial> poincare_sequence(int n);

Polynomial poincare_by_partition(int n);

/// a_n from q^{m+1} a_m = q + ... + q^{m+1}
///                         - sum_{k=2}^{m+1} q^{m+2-k} B(m+1,k) a_{m+1-k},
/// solved upward from a_0 = 1 with an exact division by q^{m+1} at each
/// step. Requires table.max_row() >= n+1.
Polynomial poincare_by_main_recurrence(int n, const CoeffTable& table);

/// True iff B(j,k) evaluated at 1 equals (-1)^(k-1) binom(j-k, k-1).
bool check_b_at_one(const CoeffTable& table, int j, int k);

/// True iff C_n = n - sum_{k=2}^{n} (-1)^(k-1) binom(n-k, k-1) C_{n-k+1}
/// holds in exact integers.
bool check_catalan_recurrence(int n);

/// CSV dump, columns j,k,polynomial; capital_view selects B(j,k) entries.
std::string table_csv(const CoeffTable& table, bool capital_view = false);

}  // namespace fcpoly
