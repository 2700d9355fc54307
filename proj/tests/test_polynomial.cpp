#include <doctest.h>

#include "bres/errors.hpp"
#include "bres/polynomial.hpp"
#include "oracles.hpp"

using namespace bres;

namespace {

std::vector<Coeff> random_point(oracle::Rng& rng, std::size_t n) {
  std::vector<Coeff> p;
  for (std::size_t i = 0; i < n; ++i) {
    Coeff c(rng.between(-7, 7), rng.between(1, 4));
    c.canonicalize();
    p.push_back(c);
  }
  return p;
}

}  // namespace

TEST_CASE("canonical text") {
  auto R = Ring::curve();
  auto f = parse_polynomial(R, "x1^3 - x2^4");
  CHECK(f.to_string() == "-x2^4 + x1^3");
  CHECK(f.lead_monomial() == Monomial{0, 4, 0, 0});
  CHECK(parse_polynomial(R, "x3*x4 - x1*x2").to_string() == "x3*x4 - x1*x2");
  CHECK(parse_polynomial(R, "2*x1 - 1/3").to_string() == "2*x1 - 1/3");
  CHECK(parse_polynomial(R, "0").is_zero());
  CHECK(parse_polynomial(R, "x1 - x1").is_zero());
  CHECK(parse_polynomial(R, " x2^2 * x3 ").to_string() == "x2^2*x3");
  CHECK_THROWS_AS(parse_polynomial(R, "x5"), DomainError);
  CHECK_THROWS_AS(parse_polynomial(R, "x1^"), DomainError);
  CHECK_THROWS_AS(parse_polynomial(R, "x1 +* x2"), DomainError);
}

TEST_CASE("text round trip") {
  oracle::Rng rng(3);
  auto R = Ring::curve();
  for (int i = 0; i < 200; ++i) {
    auto f = oracle::random_polynomial(rng, R, 5, 4);
    CHECK(parse_polynomial(R, f.to_string()) == f);
  }
}

TEST_CASE("ring arithmetic agrees with evaluation") {
  oracle::Rng rng(7);
  auto R = Ring::curve();
  for (int i = 0; i < 150; ++i) {
    auto f = oracle::random_polynomial(rng, R, 4, 3);
    auto g = oracle::random_polynomial(rng, R, 4, 3);
    auto pt = random_point(rng, 4);
    CHECK(oracle::evaluate(f + g, pt) == oracle::evaluate(f, pt) + oracle::evaluate(g, pt));
    CHECK(oracle::evaluate(f - g, pt) == oracle::evaluate(f, pt) - oracle::evaluate(g, pt));
    CHECK(oracle::evaluate(f * g, pt) == oracle::evaluate(f, pt) * oracle::evaluate(g, pt));
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("terms are strictly decreasing") {
  oracle::Rng rng(9);
  auto R = Ring::curve();
  for (int i = 0; i < 100; ++i) {
    auto f = oracle::random_polynomial(rng, R, 6, 3) * oracle::random_polynomial(rng, R, 3, 2);
    for (std::size_t k = 1; k < f.size(); ++k) {
      CHECK(R->order().compare(f.terms()[k - 1].mono, f.terms()[k].mono) > 0);
      CHECK(f.terms()[k].coeff != 0);
    }
  }
}

TEST_CASE("binomial helpers") {
  auto R = Ring::curve();
  auto b = Polynomial::binomial(R, Monomial{1, 1, 0, 0}, Monomial{0, 0, 1, 1});
  CHECK(b.is_pure_binomial());
  CHECK_FALSE(b.scaled(2).is_pure_binomial());
  CHECK_FALSE(b.has_constant_term());
  CHECK((b + Polynomial::constant(R, 1)).has_constant_term());
  CHECK(b.scaled(-3).monic().lead_coeff() == 1);
  CHECK(b.in_ring(R->with_order(MonomialOrder::lex(4))).to_string() == "x1*x2 - x3*x4");
}

TEST_CASE("S-polynomial cancels leading terms") {
  auto R = Ring::curve();
  auto f = parse_polynomial(R, "x3^3 - x2^3*x4^2");
  auto g = parse_polynomial(R, "x1*x3^2 - x2^2*x4^3");
  auto s = spoly(f, g);
  CHECK(s == parse_polynomial(R, "-x1*x2^3*x4^2 + x2^2*x3*x4^3"));
  CHECK_THROWS_AS(spoly(f, Polynomial(R)), DomainError);
}

TEST_CASE("division identity and remainder condition") {
  oracle::Rng rng(21);
  auto R = Ring::curve();
  for (int i = 0; i < 100; ++i) {
    std::vector<Polynomial> basis;
    for (int k = 0; k < 3; ++k) basis.push_back(oracle::random_polynomial(rng, R, 3, 2));
    if (std::any_of(basis.begin(), basis.end(), [](const Polynomial& p) { return p.is_zero(); })) continue;
    auto f = oracle::random_polynomial(rng, R, 6, 4);
    auto d = divide(f, basis);
    Polynomial sum = d.remainder;
    for (std::size_t k = 0; k < basis.size(); ++k) sum += d.quotients[k] * basis[k];
    CHECK(sum == f);
    for (const auto& t : d.remainder.terms()) {
      for (const auto& g : basis) CHECK_FALSE(g.lead_monomial().divides(t.mono));
    }
  }
}

TEST_CASE("rings of different arity do not mix") {
  auto R4 = Ring::curve();
  auto R2 = Ring::standard(MonomialOrder::lex(2));
  CHECK_THROWS_AS(Polynomial::variable(R4, 0) + Polynomial::variable(R2, 0), ArityError);
}
