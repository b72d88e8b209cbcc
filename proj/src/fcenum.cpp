#include "fcpoly/fcenum.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace fcpoly {

int NormalForm::length() const {
  int len = 0;
  for (const Block& b : blocks) len += b.hi - b.lo + 1;
  return len;
}

std::string NormalForm::to_string() const {
  if (blocks.empty()) return "e";
  std::string out;
  for (const Block& b : blocks) {
    out += '[';
    out += std::to_string(b.lo);
    out += ',';
    out += std::to_string(b.hi);
    out += ']';
  }
  return out;
}

bool is_valid_normal_form(const NormalForm& w, int n) {
  int prev_lo = std::numeric_limits<int>::max();
  int prev_hi = n + 1;
  for (const Block& b : w.blocks) {
    if (b.lo < 1 || b.lo > b.hi || b.hi >= prev_hi || b.lo >= prev_lo)
      return false;
    prev_lo = b.lo;
    prev_hi = b.hi;
  }
  return true;
}

NormalFormStream::NormalFormStream(int n) : rank_(n) {
  if (n < 0)
    raise(ErrorCode::index_out_of_range, "NormalFormStream: negative rank");
}

bool NormalFormStream::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;  // the identity
    return true;
  }

  // Descend: append the largest block admissible after the current tail.
  {
    int hi = cur_.blocks.empty() ? rank_ : cur_.blocks.back().hi - 1;
    int lo = cur_.blocks.empty() ? hi : std::min(hi, cur_.blocks.back().lo - 1);
    if (hi >= 1 && lo >= 1) {
      cur_.blocks.push_back({lo, hi});
      len_ += hi - lo + 1;
      return true;
    }
  }

  // Backtrack to the next sibling: shrink lo first, then hi.
  while (!cur_.blocks.empty()) {
    Block last = cur_.blocks.back();
    cur_.blocks.pop_back();
    len_ -= last.hi - last.lo + 1;
    if (last.lo > 1) {
      cur_.blocks.push_back({last.lo - 1, last.hi});
      len_ += last.hi - last.lo + 2;
      return true;
    }
    if (last.hi > 1) {
      int hi = last.hi - 1;
      int lo_cap = cur_.blocks.empty() ? hi : cur_.blocks.back().lo - 1;
      int lo = std::min(hi, lo_cap);
      cur_.blocks.push_back({lo, hi});
      len_ += hi - lo + 1;
      return true;
    }
  }
  done_ = true;
  return false;
}

int Permutation::inversions() const {
  int inv = 0;
  for (size_t a = 0; a < images.size(); ++a)
    for (size_t b = a + 1; b < images.size(); ++b)
      if (images[a] > images[b]) ++inv;
  return inv;
}

bool is_bijection(const Permutation& p) {
  std::vector<bool> seen(p.images.size(), false);
  for (int v : p.images) {
    if (v < 1 || v > p.size() || seen[static_cast<size_t>(v - 1)]) return false;
    seen[static_cast<size_t>(v - 1)] = true;
  }
  return true;
}

bool avoids_321(const Permutation& p) {
  // witness: largest value so far that has a larger value before it. Any
  // later value below the witness closes a decreasing triple; tracking the
  // smallest such value instead misses patterns (e.g. 4132).
  int witness = 0;
  int max_prefix = 0;
  for (int v : p.images) {
    if (v < witness) return false;
    if (v < max_prefix && v > witness) witness = v;
    max_prefix = std::max(max_prefix, v);
  }
  return true;
}

Avoiding321Stream::Avoiding321Stream(int m) {
  if (m < 1)
    raise(ErrorCode::index_out_of_range, "Avoiding321Stream: m must be >= 1");
  if (m > kPermutationCap)
    raise(ErrorCode::cap_exceeded,
          "Avoiding321Stream: m exceeds the enumeration cap " +
              std::to_string(kPermutationCap));
  cur_.images.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) cur_.images[static_cast<size_t>(i)] = i + 1;
}

bool Avoiding321Stream::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;  // the identity avoids everything
    return true;
  }
  while (std::next_permutation(cur_.images.begin(), cur_.images.end()))
    if (avoids_321(cur_)) return true;
  done_ = true;
  return false;
}

namespace {

Polynomial polynomial_from_counts(const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> coeffs(counts.size());
  for (size_t i = 0; i < counts.size(); ++i) coeffs[i] = counts[i];
  return Polynomial(std::move(coeffs));
}

void bump(std::vector<std::uint64_t>& counts, int len) {
  if (static_cast<size_t>(len) >= counts.size())
    counts.resize(static_cast<size_t>(len) + 1, 0);
  ++counts[static_cast<size_t>(len)];
}

}  // namespace

Polynomial oracle_poincare(int n) {
  NormalFormStream stream(n);
  std::vector<std::uint64_t> counts;
  while (stream.advance()) bump(counts, stream.current_length());
  return polynomial_from_counts(counts);
}

Polynomial oracle_poincare_by_last(int n, int j) {
  if (j < 1 || j > n)
    raise(ErrorCode::index_out_of_range,
          "oracle_poincare_by_last: generator index out of range");
  NormalFormStream stream(n);
  std::vector<std::uint64_t> counts;
  while (stream.advance())
    if (stream.current().last_generator() == j)
      bump(counts, stream.current_length());
  return polynomial_from_counts(counts);
}

Polynomial inversion_polynomial(int m) {
  Avoiding321Stream stream(m);
  std::vector<std::uint64_t> counts;
  while (stream.advance()) bump(counts, stream.current().inversions());
  return polynomial_from_counts(counts);
}

std::string normal_forms_csv(int n) {
  std::ostringstream out;
  out << "n,form,length\n";
  NormalFormStream stream(n);
  while (stream.advance())
    out << n << ',' << stream.current().to_string() << ','
        << stream.current_length() << '\n';
  return out.str();
}

}  // namespace fcpoly
