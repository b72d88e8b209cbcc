#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fcpoly/polynomial.hpp"

namespace fcpoly {

/// One block of generators s_lo s_{lo+1} ... s_hi.
struct Block {
  int lo = 0;
  int hi = 0;
  bool operator==(const Block&) const = default;
};

/// Normal form of a fully commutative element of rank n: a sequence of
/// blocks whose lo's and hi's are strictly decreasing, with lo <= hi inside
/// each block. The empty sequence is the identity.
struct NormalForm {
  std::vector<Block> blocks;

  int length() const;
  bool is_identity() const { return blocks.empty(); }
  /// index of the rightmost generator, 0 for the identity
  int last_generator() const { return blocks.empty() ? 0 : blocks.back().hi; }
  /// "[lo1,hi1][lo2,hi2]..."; the identity renders as "e"
  std::string to_string() const;

  bool operator==(const NormalForm&) const = default;
};

bool is_valid_normal_form(const NormalForm& w, int n);

/// Single-consumer stream over every normal form of rank n, each exactly
/// once. Depth-first: the identity comes first, blocks are tried in
/// decreasing (hi, lo) order, and a form is emitted before its extensions.
/// Deterministic, so output is golden-testable.
class NormalFormStream {
 public:
  explicit NormalFormStream(int n);  // n >= 0
  bool advance();
  const NormalForm& current() const { return cur_; }
  int current_length() const { return len_; }

 private:
  int rank_;
  bool started_ = false;
  bool done_ = false;
  NormalForm cur_;
  int len_ = 0;
};

/// Permutation of {1..m} in one-line notation.
struct Permutation {
  std::vector<int> images;

  int size() const { return static_cast<int>(images.size()); }
  int inversions() const;
  bool operator==(const Permutation&) const = default;
};

bool is_bijection(const Permutation& p);

/// True when no indices a < b < c satisfy p(a) > p(b) > p(c). One pass:
/// track the smallest value seen so far that has a larger value before it;
/// any later value below that witness completes a pattern.
bool avoids_321(const Permutation& p);

/// Full enumeration of S_m stays under a minute up to here.
inline constexpr int kPermutationCap = 11;

/// Stream over the 321-avoiding permutations of S_m in lexicographic order.
class Avoiding321Stream {
 public:
  explicit Avoiding321Stream(int m);  // 1 <= m <= kPermutationCap
  bool advance();
  const Permutation& current() const { return cur_; }

 private:
  Permutation cur_;
  bool started_ = false;
  bool done_ = false;
};

/// Length generating polynomial of the fully commutative elements of rank n,
/// by direct enumeration of normal forms.
Polynomial oracle_poincare(int n);

/// Same, restricted to forms whose rightmost generator is s_j.
Polynomial oracle_poincare_by_last(int n, int j);

/// Sum of q^inversions over the 321-avoiding permutations of S_m; equals
/// oracle_poincare(m-1). Independent second oracle.
Polynomial inversion_polynomial(int m);

/// CSV export, columns n,form,length, one row per normal form.
std::string normal_forms_csv(int n);

}  // namespace fcpoly
