#include "fcpoly/closedform.hpp"

#include <numeric>

#include "fcpoly/chains.hpp"

namespace fcpoly {

bool is_well_formed(const GapSpec& spec) {
  if (spec.a < 1) return false;
  for (int l : spec.lengths)
    if (l < 2) return false;
  return true;
}

bool is_valid_placement(const GapSpec& spec, const GapPlacement& placement) {
  if (!is_well_formed(spec)) return false;
  if (placement.positions.size() != spec.lengths.size()) return false;
  if (placement.positions.empty()) return true;
  if (placement.positions.front() < spec.a) return false;
  const size_t u = placement.positions.size();
  for (size_t t = 0; t + 1 < u; ++t)
    if (placement.positions[t] + spec.lengths[t] > placement.positions[t + 1])
      return false;
  return placement.positions[u - 1] + spec.lengths[u - 1] - 1 <= spec.b;
}

Polynomial pi_product(int u, int v) {
  if (u < 1) raise(ErrorCode::index_out_of_range, "pi_product: u must be >= 1");
  Polynomial out = 1;
  for (int t = u; t <= v; ++t)
    out *= Polynomial(1) - Polynomial::monomial(1, t);
  return out;
}

Polynomial pi_with_gaps(const GapSpec& spec, const GapPlacement& placement) {
  if (!is_valid_placement(spec, placement))
    raise(ErrorCode::invalid_placement,
          "pi_with_gaps: placement violates the gap constraints");
  Polynomial out = 1;
  size_t g = 0;
  int t = spec.a;
  while (t <= spec.b) {
    if (g < placement.positions.size() && t == placement.positions[g]) {
      out *= Polynomial::monomial(-1, t);
      t += spec.lengths[g];
      ++g;
    } else {
      out *= Polynomial(1) - Polynomial::monomial(1, t);
      ++t;
    }
  }
  return out;
}

Polynomial sigma_pi(const GapSpec& spec) {
  if (!is_well_formed(spec))
    raise(ErrorCode::invalid_placement, "sigma_pi: malformed gap spec");
  if (spec.lengths.empty()) return pi_product(spec.a, spec.b);

  const size_t u = spec.lengths.size();
  // tail[t] = sum of lengths t..u-1, to bound each start position
  std::vector<int> tail(u + 1, 0);
  for (size_t t = u; t-- > 0;) tail[t] = tail[t + 1] + spec.lengths[t];

  Polynomial total;
  GapPlacement placement;
  placement.positions.resize(u);
  auto place = [&](auto&& self, size_t t, int min_start) -> void {
    if (t == u) {
      total += pi_with_gaps(spec, placement);
      return;
    }
    for (int i = min_start; i + tail[t] - 1 <= spec.b; ++i) {
      placement.positions[t] = i;
      self(self, t + 1, i + spec.lengths[t]);
    }
  };
  place(place, 0, spec.a);
  return total;
}

namespace {

// sum over positive compositions d_1+...+d_u = total of the gap sums over
// [lo, hi] with gap lengths d_i + 1
Polynomial composition_gap_sum(int lo, int hi, int total, int parts) {
  Polynomial out;
  GapSpec spec{lo, hi, std::vector<int>(static_cast<size_t>(parts))};
  auto emit = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == parts - 1) {
      spec.lengths[static_cast<size_t>(idx)] = remaining + 1;
      out += sigma_pi(spec);
      return;
    }
    for (int d = 1; d <= remaining - (parts - 1 - idx); ++d) {
      spec.lengths[static_cast<size_t>(idx)] = d + 1;
      self(self, idx + 1, remaining - d);
    }
  };
  emit(emit, 0, total);
  return out;
}

}  // namespace

Polynomial b_small(int j, int k, int t) {
  if (t < 1 || t > k || k > j - 1)
    raise(ErrorCode::index_out_of_range, "b_small: need 1 <= t <= k <= j-1");
  if (t == k) return pi_product(k + 2, j);
  const int umax = std::min(j - k - 1, k - t);
  Polynomial out;
  for (int u = 1; u <= umax; ++u)
    out += composition_gap_sum(t + 2, j, k - t, u);
  return out;
}

Polynomial b_closed(int j, int k) {
  if (k < 1 || k > j)
    raise(ErrorCode::index_out_of_range, "b_closed: need 1 <= k <= j");
  if (k == j) return 1;
  Polynomial out;
  for (int t = 1; t <= k; ++t)
    out += (Polynomial(1) - geometric(2, t + 1)) * b_small(j, k, t);
  return out;
}

Polynomial poincare_chain_formula(int n, const CoeffTable& table) {
  if (n < 1)
    raise(ErrorCode::index_out_of_range, "poincare_chain_formula: n < 1");
  if (table.max_row() < n + 1)
    raise(ErrorCode::table_too_small,
          "poincare_chain_formula: need table rows up to n+1");
  const auto entry = [&table](int r, int c) -> const Polynomial& {
    return table.b(r, c);
  };
  Polynomial rhs = geometric(2, n + 2);
  for (int i = 1; i <= n; ++i)
    rhs += geometric(2, i + 1) * chain_sum<Polynomial>(n + 1, i, entry);
  return exact_div(rhs, Polynomial::monomial(1, n + 2));
}

Polynomial poincare_shortcut_formula(int n, const CoeffTable& table) {
  if (n < 1)
    raise(ErrorCode::index_out_of_range, "poincare_shortcut_formula: n < 1");
  if (table.max_row() < n + 3)
    raise(ErrorCode::table_too_small,
          "poincare_shortcut_formula: need table rows up to n+3");
  const auto entry = [&table](int r, int c) -> const Polynomial& {
    return table.b(r, c);
  };
  const Polynomial numerator = -chain_sum<Polynomial>(n + 3, 1, entry);
  const Polynomial denominator =
      Polynomial::monomial(1, n + 2) *
      (Polynomial(1) - Polynomial::monomial(1, 2));
  return exact_div(numerator, denominator);
}

}  // namespace fcpoly
