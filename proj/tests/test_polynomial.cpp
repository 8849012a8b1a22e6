#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "chromix/polynomial.hpp"
#include "support.hpp"

using namespace chromix;

namespace {
Polynomial poly(std::vector<Rational> coeffs) { return Polynomial(std::move(coeffs)); }
}  // namespace

TEST_CASE("interpolation reproduces the triangular numbers") {
  Polynomial p = interpolate({{1, 1}, {2, 3}, {3, 6}});
  REQUIRE(p == poly({0, Rational(1, 2), Rational(1, 2)}));
  for (long k = 1; k <= 12; ++k) REQUIRE(p.at(k) == Rational(k * (k + 1) / 2));
}

TEST_CASE("interpolating zero samples yields the zero polynomial") {
  Polynomial p = interpolate({{1, 0}, {2, 0}});
  REQUIRE(p.is_zero());
  REQUIRE(p == Polynomial());
  REQUIRE(to_display_string(p) == "0");
}

TEST_CASE("interpolation of the mixed-triangle weak counts") {
  // Counts computed by the independent naive counter, then frozen.
  const auto g = testsupport::mixed_triangle();
  std::vector<long long> counts;
  for (int k = 1; k <= 4; ++k) counts.push_back(testsupport::naive_weak(g, k));
  REQUIRE(counts == std::vector<long long>{0, 2, 7, 16});
  Polynomial p = interpolate({{1, 0}, {2, 2}, {3, 7}, {4, 16}});
  REQUIRE(p == poly({0, Rational(-2, 3), Rational(1, 2), Rational(1, 6)}));
  REQUIRE(p.at(1) == 0);
  REQUIRE(p.at(2) == 2);
  REQUIRE(p.at(3) == 7);
  REQUIRE(p.at(4) == 16);
  SECTION("negative-argument evaluation") {
    REQUIRE(p.at(-2) == 2);
    REQUIRE(p.at(-1) == 1);
  }
}

TEST_CASE("evaluation basics") {
  Polynomial p = poly({5, Rational(-1, 3), 2});
  REQUIRE(p.at(0) == 5);  // constant coefficient
  Polynomial triangular = poly({0, Rational(1, 2), Rational(1, 2)});
  REQUIRE(triangular.at(-1) == 0);
}

TEST_CASE("polynomial arithmetic") {
  Polynomial k = Polynomial::variable();
  REQUIRE(k + k == poly({0, 2}));
  Polynomial p = poly({1, Rational(2, 3), 0, 4});
  REQUIRE((p - p).is_zero());
  REQUIRE(-(-p) == p);
  REQUIRE(p * Polynomial() == Polynomial());
  REQUIRE(k * k == poly({0, 0, 1}));
}

TEST_CASE("equality is coefficient-wise on canonical forms") {
  REQUIRE(poly({1, 2, 0, 0}) == poly({1, 2}));
  REQUIRE(poly({}) == Polynomial());
  // Interpolating samples of k^2 at five points gives back exactly k^2.
  Polynomial square = poly({0, 0, 1});
  std::vector<std::pair<Rational, Rational>> pts;
  for (long k = 1; k <= 5; ++k) pts.push_back({Rational(k), square.at(k)});
  REQUIRE(interpolate(pts) == square);
}

TEST_CASE("duplicate abscissas are rejected") {
  REQUIRE_THROWS_AS(interpolate({{1, 1}, {1, 2}}), Error);
  REQUIRE_THROWS_WITH(interpolate({{2, 1}, {3, 5}, {2, 1}}),
                      Catch::Matchers::ContainsSubstring("duplicate abscissa"));
  REQUIRE_THROWS_AS(interpolate({}), Error);
}

TEST_CASE("round trip: random rational polynomials of degree <= 6") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int iter = 0; iter < 60; ++iter) {
    const int d = deg(rng);
    std::vector<Rational> coeffs;
    for (int i = 0; i <= d; ++i) {
      Rational c(num(rng), den(rng));
      c.canonicalize();
      coeffs.push_back(c);
    }
    Polynomial p(coeffs);
    std::vector<std::pair<Rational, Rational>> pts;
    for (int k = 0; k <= p.degree() + (p.is_zero() ? 1 : 0); ++k)
      pts.push_back({Rational(k), p.at(k)});
    if (pts.empty()) pts.push_back({Rational(0), p.at(0)});
    Polynomial back = interpolate(pts);
    REQUIRE(back == p);
    for (const auto& [x, y] : pts) REQUIRE(back(x) == y);
  }
}

TEST_CASE("display format") {
  REQUIRE(to_display_string(poly({0, Rational(-2, 3), Rational(1, 2), Rational(1, 6)})) ==
          "1/6*k^3 + 1/2*k^2 - 2/3*k");
  REQUIRE(to_display_string(Polynomial::variable()) == "k");
  REQUIRE(to_display_string(poly({0, 0, 0, 1})) == "k^3");
  REQUIRE(to_display_string(poly({0, Rational(-1, 2), Rational(1, 2)})) ==
          "1/2*k^2 - 1/2*k");
  REQUIRE(to_display_string(poly({0, -1, 1})) == "k^2 - k");
  REQUIRE(to_display_string(poly({0, 1, -1})) == "-k^2 + k");
  REQUIRE(to_display_string(poly({Rational(1, 2)})) == "1/2");
  REQUIRE(to_display_string(poly({-3})) == "-3");
  REQUIRE(to_display_string(Polynomial()) == "0");
}
