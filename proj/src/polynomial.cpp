#include "fcpoly/polynomial.hpp"

#include <ostream>
#include <utility>

namespace fcpoly {

Polynomial Polynomial::monomial(BigInt coeff, int degree) {
  if (degree < 0)
    raise(ErrorCode::index_out_of_range, "monomial: negative degree");
  if (coeff == 0) return {};
  std::vector<BigInt> c(static_cast<size_t>(degree) + 1);
  c.back() = std::move(coeff);
  return Polynomial(std::move(c));
}

BigInt Polynomial::coeff(int d) const {
  if (d < 0 || d > degree()) return 0;
  return coeffs_[static_cast<size_t>(d)];
}

BigInt Polynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& r) {
  if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size());
  for (size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& r) {
  if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size());
  for (size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] -= r.coeffs_[i];
  trim();
  return *this;
}

// Schoolbook convolution; degrees stay small enough here that anything
// fancier would be wasted.
Polynomial operator*(const Polynomial& p, const Polynomial& r) {
  if (p.is_zero() || r.is_zero()) return {};
  std::vector<BigInt> out(p.coeffs_.size() + r.coeffs_.size() - 1);
  for (size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < r.coeffs_.size(); ++j)
      out[i + j] += p.coeffs_[i] * r.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = 0; d <= degree(); ++d) {
    const BigInt& c = coeffs_[static_cast<size_t>(d)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (d == 0) {
      out += mag.str();
    } else {
      if (mag != 1) {
        out += mag.str();
        out += '*';
      }
      out += (d == 1) ? "q" : "q^" + std::to_string(d);
    }
  }
  return out;
}

std::vector<std::string> Polynomial::coeff_strings() const {
  if (is_zero()) return {"0"};
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

Polynomial Polynomial::from_coeff_strings(const std::vector<std::string>& strs) {
  std::vector<BigInt> c;
  c.reserve(strs.size());
  for (const auto& s : strs) c.emplace_back(s);
  return Polynomial(std::move(c));
}

Polynomial exact_div(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) raise(ErrorCode::divide_by_zero, "exact_div: zero divisor");
  if (p.is_zero()) return {};
  const int dd = d.degree();
  if (p.degree() < dd)
    raise(ErrorCode::non_exact_division,
          "exact_div: dividend degree below divisor degree");

  std::vector<BigInt> rem = p.coeffs();
  const auto& dc = d.coeffs();
  const BigInt& lead = dc[static_cast<size_t>(dd)];
  std::vector<BigInt> quot(static_cast<size_t>(p.degree() - dd) + 1);

  for (int k = p.degree() - dd; k >= 0; --k) {
    BigInt& top = rem[static_cast<size_t>(k + dd)];
    if (top == 0) continue;
    BigInt t = top / lead;
    if (t * lead != top)
      raise(ErrorCode::non_exact_division, "exact_div: nonzero remainder");
    for (int i = 0; i <= dd; ++i)
      rem[static_cast<size_t>(k + i)] -= t * dc[static_cast<size_t>(i)];
    quot[static_cast<size_t>(k)] = std::move(t);
  }
  for (const auto& c : rem)
    if (c != 0)
      raise(ErrorCode::non_exact_division, "exact_div: nonzero remainder");
  return Polynomial(std::move(quot));
}

Polynomial geometric(int lo, int hi) {
  if (lo < 0)
    raise(ErrorCode::index_out_of_range, "geometric: negative exponent");
  if (lo > hi) return {};
  std::vector<BigInt> c(static_cast<size_t>(hi) + 1);
  for (int d = lo; d <= hi; ++d) c[static_cast<size_t>(d)] = 1;
  return Polynomial(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

}  // namespace fcpoly
