#include "fcpoly/recur.hpp"

#include <cassert>
#include <sstream>
#include <utility>

namespace fcpoly {

BigInt binomial(int x, int y) {
  if (y < 0 || y > x || x < 0) return 0;
  y = std::min(y, x - y);
  std::vector<BigInt> row(static_cast<size_t>(y) + 1);
  row[0] = 1;
  for (int i = 1; i <= x; ++i)
    for (int j = std::min(i, y); j >= 1; --j)
      row[static_cast<size_t>(j)] += row[static_cast<size_t>(j - 1)];
  return row[static_cast<size_t>(y)];
}

BigInt catalan_number(int m) {
  if (m < 0) raise(ErrorCode::index_out_of_range, "catalan_number: m < 0");
  BigInt c = binomial(2 * m, m);
  assert(c % (m + 1) == 0);
  return c / (m + 1);
}

CoeffTable::CoeffTable(std::vector<std::vector<Polynomial>> rows)
    : rows_(std::move(rows)) {
  for (size_t j = 1; j <= rows_.size(); ++j) {
    if (rows_[j - 1].size() != j)
      raise(ErrorCode::index_out_of_range, "CoeffTable: ragged rows");
    if (rows_[j - 1][j - 1] != Polynomial(1))
      raise(ErrorCode::index_out_of_range, "CoeffTable: diagonal must be 1");
  }
}

const Polynomial& CoeffTable::b(int j, int k) const {
  if (j < 1 || j > max_row() || k < 1 || k > j)
    raise(ErrorCode::index_out_of_range, "CoeffTable: entry (" +
                                             std::to_string(j) + "," +
                                             std::to_string(k) + ")");
  return rows_[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)];
}

const Polynomial& CoeffTable::B(int j, int k) const { return b(j, j - k + 1); }

CoeffTable build_coeff_table(int N) {
  if (N < 1) raise(ErrorCode::index_out_of_range, "build_coeff_table: N < 1");
  std::vector<std::vector<Polynomial>> rows;
  rows.reserve(static_cast<size_t>(N));
  for (int j = 1; j <= N; ++j) {
    std::vector<Polynomial> row(static_cast<size_t>(j));
    row[static_cast<size_t>(j - 1)] = 1;
    if (j >= 2) {
      const Polynomial factor = Polynomial(1) - Polynomial::monomial(1, j);
      row[0] = rows[static_cast<size_t>(j - 2)][0] * factor;
      for (int k = 2; k <= j - 1; ++k) {
        const auto& above = rows[static_cast<size_t>(j - 2)];
        const auto& above2 = rows[static_cast<size_t>(j - 3)];
        row[static_cast<size_t>(k - 1)] =
            above[static_cast<size_t>(k - 2)] +
            factor * above[static_cast<size_t>(k - 1)] -
            above2[static_cast<size_t>(k - 2)];
      }
    }
    rows.push_back(std::move(row));
  }
  return CoeffTable(std::move(rows));
}

Polynomial a_last_direct(int n, int j, std::span<const Polynomial> prior) {
  if (j < 1 || j > n)
    raise(ErrorCode::index_out_of_range, "a_last_direct: need 1 <= j <= n");
  if (static_cast<int>(prior.size()) < n - 1)
    raise(ErrorCode::index_out_of_range,
          "a_last_direct: prior must hold the full previous row");
  Polynomial tail = 1;
  for (int s = j; s <= n - 1; ++s) tail += prior[static_cast<size_t>(s - 1)];
  Polynomial out = Polynomial::monomial(1, j) * tail;
  if (j >= 2) out += prior[static_cast<size_t>(j - 2)];
  return out;
}

Polynomial a_last_via_table(int n, int j, const CoeffTable& table,
                            std::span<const Polynomial> a) {
  if (j < 1 || j > n)
    raise(ErrorCode::index_out_of_range, "a_last_via_table: need 1 <= j <= n");
  if (table.max_row() < j)
    raise(ErrorCode::table_too_small, "a_last_via_table: table smaller than j");
  if (static_cast<int>(a.size()) < n)
    raise(ErrorCode::index_out_of_range,
          "a_last_via_table: need a_0..a_{n-1}");
  Polynomial out;
  for (int k = 1; k <= j; ++k)
    out += Polynomial::monomial(1, j - k + 1) * table.B(j, k) *
           a[static_cast<size_t>(n - k)];
  return out;
}

std::vector<std::vector<Polynomial>> by_last_triangle(int n) {
  if (n < 0) raise(ErrorCode::index_out_of_range, "by_last_triangle: n < 0");
  std::vector<std::vector<Polynomial>> rows;
  rows.reserve(static_cast<size_t>(n));
  std::vector<Polynomial> prev;
  for (int m = 1; m <= n; ++m) {
    std::vector<Polynomial> row;
    row.reserve(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j) row.push_back(a_last_direct(m, j, prev));
    rows.push_back(row);
    prev = std::move(row);
  }
  return rows;
}

std::vector<Polynomial> poincare_sequence(int n) {
  if (n < 0) raise(ErrorCode::index_out_of_range, "poincare_sequence: n < 0");
  std::vector<Polynomial> a;
  a.reserve(static_cast<size_t>(n) + 1);
  a.push_back(1);
  std::vector<Polynomial> prev;
  for (int m = 1; m <= n; ++m) {
    std::vector<Polynomial> row;
    row.reserve(static_cast<size_t>(m));
    Polynomial total = 1;
    for (int j = 1; j <= m; ++j) {
      row.push_back(a_last_direct(m, j, prev));
      total += row.back();
    }
    a.push_back(std::move(total));
    prev = std::move(row);
  }
  return a;
}

Polynomial poincare_by_partition(int n) { return poincare_sequence(n).back(); }

Polynomial poincare_by_main_recurrence(int n, const CoeffTable& table) {
  if (n < 0)
    raise(ErrorCode::index_out_of_range, "poincare_by_main_recurrence: n < 0");
  if (table.max_row() < n + 1)
    raise(ErrorCode::table_too_small,
          "poincare_by_main_recurrence: need table rows up to n+1");
  std::vector<Polynomial> a;
  a.reserve(static_cast<size_t>(n) + 1);
  a.push_back(1);
  for (int m = 1; m <= n; ++m) {
    Polynomial rhs = geometric(1, m + 1);
    for (int k = 2; k <= m + 1; ++k)
      rhs -= Polynomial::monomial(1, m + 2 - k) * table.B(m + 1, k) *
             a[static_cast<size_t>(m + 1 - k)];
    // exact by construction; a failure here means a transcription bug
    a.push_back(exact_div(rhs, Polynomial::monomial(1, m + 1)));
  }
  return a.back();
}

bool check_b_at_one(const CoeffTable& table, int j, int k) {
  if (k < 1 || k > j)
    raise(ErrorCode::index_out_of_range, "check_b_at_one: need 1 <= k <= j");
  BigInt expected = binomial(j - k, k - 1);
  if (k % 2 == 0) expected = -expected;
  return table.B(j, k).eval(1) == expected;
}

bool check_catalan_recurrence(int n) {
  if (n < 1)
    raise(ErrorCode::index_out_of_range, "check_catalan_recurrence: n < 1");
  BigInt rhs = n;
  for (int k = 2; k <= n; ++k) {
    BigInt term = binomial(n - k, k - 1) * catalan_number(n - k + 1);
    if (k % 2 == 0)
      rhs += term;  // -(-1)^(k-1) = +1 for even k
    else
      rhs -= term;
  }
  return catalan_number(n) == rhs;
}

std::string table_csv(const CoeffTable& table, bool capital_view) {
  std::ostringstream out;
  out << "j,k,polynomial\n";
  for (int j = 1; j <= table.max_row(); ++j)
    for (int k = 1; k <= j; ++k)
      out << j << ',' << k << ','
          << (capital_view ? table.B(j, k) : table.b(j, k)).to_string()
          << '\n';
  return out.str();
}

}  // namespace fcpoly
