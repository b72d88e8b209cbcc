#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fcpoly/chains.hpp"
#include "fcpoly/polynomial.hpp"
#include "fcpoly/recur.hpp"

namespace fcpoly {

/// Square lower-triangular polynomial matrix with unit diagonal, addressed
/// 1-based. Entries above the diagonal read as 0; the diagonal reads as 1.
class UnitriMatrix {
 public:
  explicit UnitriMatrix(int n);  // identity

  int size() const { return n_; }
  const Polynomial& entry(int row, int col) const;
  void set(int row, int col, Polynomial value);  // strictly below diagonal

  bool operator==(const UnitriMatrix&) const = default;

 private:
  int n_ = 0;
  // below_[r-2] holds row r entries for columns 1..r-1
  std::vector<std::vector<Polynomial>> below_;
};

/// The system matrix of the coefficient recurrence: entry (j,k) = b(j,k).
UnitriMatrix unitri_from_table(const CoeffTable& table);

UnitriMatrix operator*(const UnitriMatrix& lhs, const UnitriMatrix& rhs);

/// Exact inverse by forward substitution, column by column.
UnitriMatrix invert_unitriangular(const UnitriMatrix& p);

/// Entry (n,k) of the inverse computed independently as the signed chain
/// sum with endpoints n and k over the entries of p. Requires k < n.
Polynomial c_by_chains(const UnitriMatrix& p, int n, int k);

/// True iff inverse entry (n+2, 1) equals -(1-q^2) q^{n+1} a_{n-1}, where a
/// holds the Poincare polynomials a_0, a_1, ... Requires p.size() >= n+2.
bool check_shortcut(int n, const UnitriMatrix& p,
                    std::span<const Polynomial> a);

/// True iff sum_{k=1}^{n} b(n,k) c(k+2,1) = -(1-q^2)(q^2+...+q^{n+1}),
/// with b from p and c from its inverse. Requires p.size() >= n+2.
bool check_generic_relation(int n, const UnitriMatrix& p);

/// CSV dump of the lower triangle, columns row,col,polynomial.
std::string matrix_csv(const UnitriMatrix& p);

/// One instance of the triangular system u_n = psi(n) - sum b(n,i) u_i over
/// an arbitrary commutative ring: values psi(1..N) and coefficients b(n,i)
/// for 2 <= n <= N, 1 <= i <= n-1.
template <class Ring>
struct GeneralInstance {
  std::vector<Ring> psi;                 // psi[n-1] = psi(n)
  std::vector<std::vector<Ring>> lower;  // lower[n-2][i-1] = b(n,i)

  int size() const { return static_cast<int>(psi.size()); }
  const Ring& coeff(int n, int i) const {
    return lower[static_cast<size_t>(n - 2)][static_cast<size_t>(i - 1)];
  }
};

/// u_1 = psi(1), u_n = psi(n) - sum_{i=1}^{n-1} b(n,i) u_i.
template <class Ring>
std::vector<Ring> solve_by_recurrence(const GeneralInstance<Ring>& inst) {
  std::vector<Ring> u;
  u.reserve(static_cast<size_t>(inst.size()));
  for (int n = 1; n <= inst.size(); ++n) {
    Ring value = inst.psi[static_cast<size_t>(n - 1)];
    for (int i = 1; i < n; ++i)
      value -= inst.coeff(n, i) * u[static_cast<size_t>(i - 1)];
    u.push_back(std::move(value));
  }
  return u;
}

/// Closed solution of the same system:
/// u_n = psi(n) + sum_{i=1}^{n-1} psi(i) * chain_sum(n, i, b).
template <class Ring>
std::vector<Ring> solve_by_chain_formula(const GeneralInstance<Ring>& inst) {
  std::vector<Ring> u;
  u.reserve(static_cast<size_t>(inst.size()));
  for (int n = 1; n <= inst.size(); ++n) {
    Ring value = inst.psi[static_cast<size_t>(n - 1)];
    for (int i = 1; i < n; ++i) {
      Ring weight = chain_sum<Ring>(
          n, i, [&inst](int r, int c) -> const Ring& { return inst.coeff(r, c); });
      value += inst.psi[static_cast<size_t>(i - 1)] * weight;
    }
    u.push_back(std::move(value));
  }
  return u;
}

/// The instance whose solution is u_n = q^{n+1} a_{n-1}:
/// psi(n) = q^2+...+q^{n+1} and b(n,i) from the coefficient table.
GeneralInstance<Polynomial> poincare_instance(const CoeffTable& table, int N);

}  // namespace fcpoly
