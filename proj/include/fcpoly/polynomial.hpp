#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>
#include <vector>

#include "fcpoly/error.hpp"

namespace fcpoly {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients; the coefficient ring for everything else in this library.
///
/// coeffs()[d] is the coefficient of q^d. Canonical form: the zero
/// polynomial stores no coefficients, any other polynomial has a nonzero
/// top coefficient. Values are immutable in spirit: every operation returns
/// a fresh polynomial, so sharing across threads is safe.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long long constant) { assign_constant(BigInt(constant)); }
  Polynomial(BigInt constant) { assign_constant(std::move(constant)); }
  explicit Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  /// coeff * q^degree
  static Polynomial monomial(BigInt coeff, int degree);

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, with the sentinel -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of q^d; zero outside the stored range.
  BigInt coeff(int d) const;

  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Exact Horner evaluation at an integer point.
  BigInt eval(const BigInt& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& r);
  Polynomial& operator-=(const Polynomial& r);
  Polynomial& operator*=(const Polynomial& r) {
    *this = *this * r;
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& r) {
    p += r;
    return p;
  }
  friend Polynomial operator-(Polynomial p, const Polynomial& r) {
    p -= r;
    return p;
  }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& r);

  bool operator==(const Polynomial&) const = default;

  /// Ascending-degree text form "c0 + c1*q + c2*q^2" with zero terms
  /// omitted and unit coefficients written without the "1*".
  std::string to_string() const;

  /// Decimal coefficient strings, index = degree; the zero polynomial
  /// renders as ["0"].
  std::vector<std::string> coeff_strings() const;
  static Polynomial from_coeff_strings(const std::vector<std::string>& strs);

 private:
  std::vector<BigInt> coeffs_;

  void assign_constant(BigInt c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
};

/// Quotient r with r*d == p, exactly. Throws NON_EXACT_DIVISION when no such
/// integer polynomial exists, DIVIDE_BY_ZERO when d == 0.
Polynomial exact_div(const Polynomial& p, const Polynomial& d);

/// q^lo + q^(lo+1) + ... + q^hi; zero when lo > hi. Requires lo >= 0
/// (negative exponents are never stored).
Polynomial geometric(int lo, int hi);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace fcpoly
