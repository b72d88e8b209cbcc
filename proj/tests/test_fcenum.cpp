#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fcpoly/fcenum.hpp"
#include "fcpoly/recur.hpp"

using fcpoly::Avoiding321Stream;
using fcpoly::BigInt;
using fcpoly::Error;
using fcpoly::ErrorCode;
using fcpoly::NormalForm;
using fcpoly::NormalFormStream;
using fcpoly::Permutation;
using fcpoly::Polynomial;

namespace {

std::vector<std::string> collect_forms(int n) {
  std::vector<std::string> out;
  NormalFormStream stream(n);
  while (stream.advance()) out.push_back(stream.current().to_string());
  return out;
}

std::uint64_t count_forms(int n) {
  std::uint64_t count = 0;
  NormalFormStream stream(n);
  while (stream.advance()) ++count;
  return count;
}

Polynomial from_coeffs(std::vector<long long> cs) {
  std::vector<BigInt> big(cs.begin(), cs.end());
  return Polynomial(std::move(big));
}

}  // namespace

TEST_CASE("normal form basics") {
  NormalForm identity;
  CHECK(identity.is_identity());
  CHECK(identity.length() == 0);
  CHECK(identity.to_string() == "e");
  NormalForm w{{{2, 3}, {1, 1}}};
  CHECK(w.length() == 3);
  CHECK(w.last_generator() == 1);
  CHECK(w.to_string() == "[2,3][1,1]");
  CHECK(fcpoly::is_valid_normal_form(w, 3));
  CHECK_FALSE(fcpoly::is_valid_normal_form(w, 2));                   // hi > n
  CHECK_FALSE(fcpoly::is_valid_normal_form({{{1, 2}, {1, 1}}}, 3));  // lo repeats
  CHECK_FALSE(fcpoly::is_valid_normal_form({{{2, 1}}}, 3));          // lo > hi
}

TEST_CASE("stream enumerates small ranks") {
  CHECK(collect_forms(0) == std::vector<std::string>{"e"});
  CHECK(collect_forms(1) == std::vector<std::string>{"e", "[1,1]"});
  // Frozen order: identity first, then decreasing (hi, lo), prefix before
  // extension.
  CHECK(collect_forms(2) ==
        std::vector<std::string>{"e", "[2,2]", "[2,2][1,1]", "[1,2]", "[1,1]"});
  CHECK(count_forms(3) == 14);
}

TEST_CASE("stream yields each form valid and exactly once") {
  for (int n = 0; n <= 6; ++n) {
    std::vector<std::string> forms = collect_forms(n);
    NormalFormStream stream(n);
    while (stream.advance()) {
      CHECK(fcpoly::is_valid_normal_form(stream.current(), n));
      CHECK(stream.current().length() == stream.current_length());
    }
    std::sort(forms.begin(), forms.end());
    CHECK(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
  }
}

TEST_CASE("normal form counts are catalan numbers") {
  for (int n = 0; n <= 10; ++n)
    CHECK(BigInt(count_forms(n)) == fcpoly::catalan_number(n + 1));
}

TEST_CASE("oracle poincare polynomials") {
  CHECK(fcpoly::oracle_poincare(0) == Polynomial(1));
  CHECK(fcpoly::oracle_poincare(1) == from_coeffs({1, 1}));
  CHECK(fcpoly::oracle_poincare(2) == from_coeffs({1, 2, 2}));
  CHECK(fcpoly::oracle_poincare(3) == from_coeffs({1, 3, 5, 4, 1}));
  CHECK(fcpoly::oracle_poincare(3).eval(1) == 14);
}

TEST_CASE("oracle degree profile") {
  // max length of a rank-n form is floor((n+1)^2/4)
  for (int n = 1; n <= 12; ++n)
    CHECK(fcpoly::oracle_poincare(n).degree() == (n + 1) * (n + 1) / 4);
}

TEST_CASE("oracle by last generator") {
  CHECK(fcpoly::oracle_poincare_by_last(3, 3) == from_coeffs({0, 1, 1, 1}));
  CHECK(fcpoly::oracle_poincare_by_last(3, 2) == from_coeffs({0, 1, 2, 1, 1}));
  for (int n = 1; n <= 7; ++n) {
    CHECK(fcpoly::oracle_poincare_by_last(n, 1) ==
          Polynomial::monomial(1, 1) * fcpoly::oracle_poincare(n - 1));
    // identity plus the by-last classes partitions everything
    Polynomial total = 1;
    for (int j = 1; j <= n; ++j) total += fcpoly::oracle_poincare_by_last(n, j);
    CHECK(total == fcpoly::oracle_poincare(n));
  }
  CHECK_THROWS_AS(fcpoly::oracle_poincare_by_last(3, 0), Error);
  CHECK_THROWS_AS(fcpoly::oracle_poincare_by_last(3, 4), Error);
}

TEST_CASE("catalan triangle by last generator") {
  for (int n = 1; n <= 8; ++n)
    for (int j = 1; j <= n; ++j) {
      BigInt num = BigInt(j) * fcpoly::binomial(2 * n - j + 1, n);
      REQUIRE(num % (n + 1) == 0);
      CHECK(fcpoly::oracle_poincare_by_last(n, j).eval(1) == num / (n + 1));
    }
}

TEST_CASE("permutation basics") {
  Permutation p{{2, 4, 1, 3}};
  CHECK(fcpoly::is_bijection(p));
  CHECK(p.inversions() == 3);
  CHECK_FALSE(fcpoly::is_bijection(Permutation{{1, 1, 3}}));
  CHECK(Permutation{{1, 2, 3}}.inversions() == 0);
  CHECK(Permutation{{3, 2, 1}}.inversions() == 3);
}

TEST_CASE("321 pattern detection") {
  CHECK(fcpoly::avoids_321(Permutation{{1, 2, 3}}));
  CHECK_FALSE(fcpoly::avoids_321(Permutation{{3, 2, 1}}));
  CHECK(fcpoly::avoids_321(Permutation{{3, 1, 4, 2}}));
  CHECK(fcpoly::avoids_321(Permutation{{3, 4, 1, 2}}));
  CHECK_FALSE(fcpoly::avoids_321(Permutation{{4, 1, 3, 2}}));  // 4 > 3 > 2
  CHECK_FALSE(fcpoly::avoids_321(Permutation{{2, 4, 3, 1}}));  // 4 > 3 > 1
  CHECK_FALSE(fcpoly::avoids_321(Permutation{{3, 5, 4, 1, 2}}));
  // brute-force cross-check on all of S_6
  Permutation s{{1, 2, 3, 4, 5, 6}};
  do {
    bool brute = false;
    for (int a = 0; a < 6 && !brute; ++a)
      for (int b = a + 1; b < 6 && !brute; ++b)
        for (int c = b + 1; c < 6 && !brute; ++c)
          brute = s.images[a] > s.images[b] && s.images[b] > s.images[c];
    CHECK(fcpoly::avoids_321(s) == !brute);
  } while (std::next_permutation(s.images.begin(), s.images.end()));
}

TEST_CASE("avoiding stream counts and caps") {
  int count = 0;
  Avoiding321Stream m3(3);
  bool saw_321 = false;
  while (m3.advance()) {
    ++count;
    saw_321 = saw_321 || m3.current() == Permutation{{3, 2, 1}};
  }
  CHECK(count == 5);
  CHECK_FALSE(saw_321);

  Avoiding321Stream m1(1);
  count = 0;
  while (m1.advance()) ++count;
  CHECK(count == 1);

  count = 0;
  Avoiding321Stream m4(4);
  while (m4.advance()) ++count;
  CHECK(count == 14);

  try {
    Avoiding321Stream too_big(fcpoly::kPermutationCap + 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cap_exceeded);
  }
  CHECK_THROWS_AS(Avoiding321Stream(0), Error);
}

TEST_CASE("inversion polynomial matches the normal-form oracle") {
  CHECK(fcpoly::inversion_polynomial(2) == from_coeffs({1, 1}));
  CHECK(fcpoly::inversion_polynomial(3) == from_coeffs({1, 2, 2}));
  CHECK(fcpoly::inversion_polynomial(4) == from_coeffs({1, 3, 5, 4, 1}));
  for (int n = 0; n <= 7; ++n)
    CHECK(fcpoly::inversion_polynomial(n + 1) == fcpoly::oracle_poincare(n));
}

TEST_CASE("csv export") {
  const std::string csv = fcpoly::normal_forms_csv(2);
  CHECK(csv ==
        "n,form,length\n"
        "2,e,0\n"
        "2,[2,2],1\n"
        "2,[2,2][1,1],2\n"
        "2,[1,2],2\n"
        "2,[1,1],1\n");
}
