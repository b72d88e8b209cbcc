#include "fcpoly/trimatrix.hpp"

#include <sstream>

namespace fcpoly {

namespace {
const Polynomial kZero{};
const Polynomial kOne{1};
}  // namespace

UnitriMatrix::UnitriMatrix(int n) : n_(n) {
  if (n < 1) raise(ErrorCode::index_out_of_range, "UnitriMatrix: size < 1");
  below_.resize(static_cast<size_t>(n > 1 ? n - 1 : 0));
  for (int r = 2; r <= n; ++r)
    below_[static_cast<size_t>(r - 2)].resize(static_cast<size_t>(r - 1));
}

const Polynomial& UnitriMatrix::entry(int row, int col) const {
  if (row < 1 || row > n_ || col < 1 || col > n_)
    raise(ErrorCode::index_out_of_range, "UnitriMatrix: entry out of range");
  if (row == col) return kOne;
  if (col > row) return kZero;
  return below_[static_cast<size_t>(row - 2)][static_cast<size_t>(col - 1)];
}

void UnitriMatrix::set(int row, int col, Polynomial value) {
  if (row < 2 || row > n_ || col < 1 || col >= row)
    raise(ErrorCode::index_out_of_range,
          "UnitriMatrix: can only set strictly-below-diagonal entries");
  below_[static_cast<size_t>(row - 2)][static_cast<size_t>(col - 1)] =
      std::move(value);
}

UnitriMatrix unitri_from_table(const CoeffTable& table) {
  UnitriMatrix p(table.max_row());
  for (int j = 2; j <= table.max_row(); ++j)
    for (int k = 1; k < j; ++k) p.set(j, k, table.b(j, k));
  return p;
}

UnitriMatrix operator*(const UnitriMatrix& lhs, const UnitriMatrix& rhs) {
  if (lhs.size() != rhs.size())
    raise(ErrorCode::index_out_of_range, "UnitriMatrix: size mismatch");
  UnitriMatrix out(lhs.size());
  for (int r = 2; r <= lhs.size(); ++r)
    for (int c = 1; c < r; ++c) {
      Polynomial sum;
      for (int i = c; i <= r; ++i) sum += lhs.entry(r, i) * rhs.entry(i, c);
      out.set(r, c, std::move(sum));
    }
  return out;
}

UnitriMatrix invert_unitriangular(const UnitriMatrix& p) {
  UnitriMatrix inv(p.size());
  for (int c = 1; c <= p.size(); ++c)
    for (int r = c + 1; r <= p.size(); ++r) {
      Polynomial sum;
      for (int i = c; i < r; ++i) sum += p.entry(r, i) * inv.entry(i, c);
      inv.set(r, c, -sum);
    }
  return inv;
}

Polynomial c_by_chains(const UnitriMatrix& p, int n, int k) {
  if (k < 1 || n <= k || n > p.size())
    raise(ErrorCode::index_out_of_range, "c_by_chains: need 1 <= k < n <= N");
  return chain_sum<Polynomial>(
      n, k, [&p](int r, int c) -> const Polynomial& { return p.entry(r, c); });
}

bool check_shortcut(int n, const UnitriMatrix& p,
                    std::span<const Polynomial> a) {
  if (n < 1) raise(ErrorCode::index_out_of_range, "check_shortcut: n < 1");
  if (p.size() < n + 2)
    raise(ErrorCode::table_too_small, "check_shortcut: need rows up to n+2");
  if (static_cast<int>(a.size()) < n)
    raise(ErrorCode::index_out_of_range, "check_shortcut: need a_0..a_{n-1}");
  const UnitriMatrix inv = invert_unitriangular(p);
  const Polynomial expected =
      -((Polynomial(1) - Polynomial::monomial(1, 2)) *
        Polynomial::monomial(1, n + 1) * a[static_cast<size_t>(n - 1)]);
  return inv.entry(n + 2, 1) == expected;
}

bool check_generic_relation(int n, const UnitriMatrix& p) {
  if (n < 1)
    raise(ErrorCode::index_out_of_range, "check_generic_relation: n < 1");
  if (p.size() < n + 2)
    raise(ErrorCode::table_too_small,
          "check_generic_relation: need rows up to n+2");
  const UnitriMatrix inv = invert_unitriangular(p);
  Polynomial lhs;
  for (int k = 1; k <= n; ++k) lhs += p.entry(n, k) * inv.entry(k + 2, 1);
  const Polynomial rhs =
      -((Polynomial(1) - Polynomial::monomial(1, 2)) * geometric(2, n + 1));
  return lhs == rhs;
}

std::string matrix_csv(const UnitriMatrix& p) {
  std::ostringstream out;
  out << "row,col,polynomial\n";
  for (int r = 1; r <= p.size(); ++r)
    for (int c = 1; c <= r; ++c)
      out << r << ',' << c << ',' << p.entry(r, c).to_string() << '\n';
  return out.str();
}

GeneralInstance<Polynomial> poincare_instance(const CoeffTable& table, int N) {
  if (N < 1) raise(ErrorCode::index_out_of_range, "poincare_instance: N < 1");
  if (table.max_row() < N)
    raise(ErrorCode::table_too_small, "poincare_instance: table smaller than N");
  GeneralInstance<Polynomial> inst;
  inst.psi.reserve(static_cast<size_t>(N));
  for (int n = 1; n <= N; ++n) inst.psi.push_back(geometric(2, n + 1));
  inst.lower.resize(static_cast<size_t>(N > 1 ? N - 1 : 0));
  for (int n = 2; n <= N; ++n) {
    auto& row = inst.lower[static_cast<size_t>(n - 2)];
    row.reserve(static_cast<size_t>(n - 1));
    for (int i = 1; i < n; ++i) row.push_back(table.b(n, i));
  }
  return inst;
}

}  // namespace fcpoly
