#pragma once

#include <cassert>
#include <utility>

namespace fcpoly {

/// Signed sum over all strictly decreasing integer chains
/// hi = v_0 > v_1 > ... > v_s > v_{s+1} = lo (s >= 0 interior points):
///
///   sum over chains of (-1)^(s+1) entry(v_0,v_1) entry(v_1,v_2) ... entry(v_s,lo)
///
/// Interior points range over all subsets of the open interval (lo, hi), so
/// the cost is 2^(hi-lo-1) chain closures; prefix products are shared along
/// the recursion. Ring needs zero/one construction, +=, -= and *.
template <class Ring, class EntryFn>
Ring chain_sum(int hi, int lo, EntryFn&& entry) {
  assert(hi > lo);
  Ring total{};
  auto walk = [&](auto&& self, int v, const Ring& prefix, bool negate) -> void {
    Ring closing = prefix * entry(v, lo);
    if (negate)
      total -= closing;
    else
      total += closing;
    for (int w = v - 1; w > lo; --w)
      self(self, w, Ring(prefix * entry(v, w)), !negate);
  };
  walk(walk, hi, Ring(1), true);
  return total;
}

}  // namespace fcpoly
