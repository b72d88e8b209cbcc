#pragma once

#include <vector>

#include "fcpoly/polynomial.hpp"
#include "fcpoly/recur.hpp"

namespace fcpoly {

/// Gap data for a gapped product over [a, b]: u gap lengths, each >= 2.
/// u = 0 means the plain product (1-q^a)...(1-q^b). The placement set is
/// nonempty iff a + l_1 + ... + l_u - 1 <= b.
struct GapSpec {
  int a = 1;
  int b = 0;
  std::vector<int> lengths;
};

/// Gap start positions for a GapSpec: a <= i_1, consecutive gaps may touch
/// but not overlap (i_t + l_t <= i_{t+1}), and i_u + l_u - 1 <= b.
struct GapPlacement {
  std::vector<int> positions;
};

bool is_well_formed(const GapSpec& spec);
bool is_valid_placement(const GapSpec& spec, const GapPlacement& placement);

/// (1-q^u)(1-q^{u+1})...(1-q^v); the empty product (u > v) is 1.
/// Requires u >= 1.
Polynomial pi_product(int u, int v);

/// The product over [a,b] with each gap run (1-q^i)...(1-q^{i+l-1})
/// replaced by the single factor -q^i.
Polynomial pi_with_gaps(const GapSpec& spec, const GapPlacement& placement);

/// Sum of pi_with_gaps over every valid placement of the gaps; 0 when no
/// placement exists.
Polynomial sigma_pi(const GapSpec& spec);

/// Kernel polynomials of the closed coefficient formula, 1 <= t <= k <= j-1:
///   t = k: the plain product over [k+2, j];
///   t < k: sum over gap counts u up to min(j-k-1, k-t) and over positive
///          compositions d_1+...+d_u = k-t of the gap sums over [t+2, j]
///          with gap lengths d_i + 1.
Polynomial b_small(int j, int k, int t);

/// Closed form for the coefficient table entry b(j,k):
///   b(j,j) = 1,  and for k < j
///   b(j,k) = sum_{t=1}^{k} (1 - (q^2+...+q^{t+1})) b_small(j,k,t).
Polynomial b_closed(int j, int k);

/// a_n via the chain-sum solution of the main recurrence:
/// q^{n+2} a_n = (q^2+...+q^{n+2})
///             + sum_{i=1}^{n} (q^2+...+q^{i+1}) * chain_sum(n+1, i, b),
/// divided exactly by q^{n+2}. Requires n >= 1 and table rows up to n+1.
Polynomial poincare_chain_formula(int n, const CoeffTable& table);

/// a_n from the first column of the inverse table, two rows down:
/// a_n = -chain_sum(n+3, 1, b) / (q^{n+2} (1-q^2)).
/// Requires n >= 1 and table rows up to n+3.
Polynomial poincare_shortcut_formula(int n, const CoeffTable& table);

}  // namespace fcpoly
