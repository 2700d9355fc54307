#include <doctest.h>

#include <limits>

#include "bres/errors.hpp"
#include "bres/monomial.hpp"
#include "bres/monomial_order.hpp"
#include "oracles.hpp"

using bres::Monomial;
using bres::MonomialOrder;

TEST_CASE("monomial arithmetic") {
  Monomial a{2, 0, 1, 3};
  Monomial b{1, 1, 0, 3};
  CHECK((a * b) == Monomial{3, 1, 1, 6});
  CHECK(lcm(a, b) == Monomial{2, 1, 1, 3});
  CHECK(gcd(a, b) == Monomial{1, 0, 0, 3});
  CHECK(a.total_degree() == 6);
  CHECK(Monomial{1, 0, 1, 0}.divides(a));
  CHECK_FALSE(b.divides(a));
  CHECK(a.quotient(Monomial{1, 0, 1, 0}) == Monomial{1, 0, 0, 3});
  CHECK(Monomial{1, 0, 0, 0}.coprime(Monomial{0, 2, 0, 1}));
  CHECK_FALSE(a.coprime(b));
  CHECK(Monomial(4).is_one());
  CHECK(a.without(0) == Monomial{0, 1, 3});
  CHECK(a.with_inserted(0, 7) == Monomial{7, 2, 0, 1, 3});
}

TEST_CASE("monomial errors") {
  CHECK_THROWS_AS((Monomial{1, 2} * Monomial{1, 2, 3}), bres::ArityError);
  CHECK_THROWS_AS(Monomial(2).set(0, -1), bres::DomainError);
  Monomial big(1);
  big.set(0, std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big * big, bres::OverflowError);
  CHECK_THROWS_AS((Monomial{1, 0}.quotient(Monomial{0, 1})), bres::DomainError);
}

TEST_CASE("eta weight") {
  std::vector<std::int64_t> n{20, 15, 23, 12};
  CHECK(bres::evaluate_eta(Monomial{1, 1, 0, 0}, n) == 35);
  CHECK(bres::evaluate_eta(Monomial{0, 0, 1, 1}, n) == 35);
  CHECK(bres::evaluate_eta(Monomial(4), n) == 0);
}

TEST_CASE("curve order is lex x3 > x2 > x1 > x4") {
  auto ord = MonomialOrder::curve_lex();
  CHECK(ord.compare(Monomial{0, 0, 1, 0}, Monomial{0, 9, 0, 0}) > 0);
  CHECK(ord.compare(Monomial{0, 1, 0, 0}, Monomial{9, 0, 0, 9}) > 0);
  CHECK(ord.compare(Monomial{1, 0, 0, 0}, Monomial{0, 0, 0, 9}) > 0);
  CHECK(ord.lex_priority() == std::vector<std::size_t>{2, 1, 0, 3});
  CHECK(ord.is_pure_lex());
}

TEST_CASE("lex agrees with a direct lexicographic comparison") {
  oracle::Rng rng(11);
  std::vector<std::size_t> pri{2, 1, 0, 3};
  auto ord = MonomialOrder::lex(pri);
  for (int i = 0; i < 2000; ++i) {
    auto a = oracle::random_monomial(rng, 4, 4);
    auto b = oracle::random_monomial(rng, 4, 4);
    auto c = ord.compare(a, b);
    int got = c > 0 ? 1 : (c < 0 ? -1 : 0);
    CHECK(got == oracle::naive_lex(a, b, pri));
  }
}

TEST_CASE("order axioms on random monomials") {
  oracle::Rng rng(5);
  std::vector<MonomialOrder> orders{MonomialOrder::lex(4), MonomialOrder::curve_lex(),
                                    MonomialOrder::block({0}, MonomialOrder::lex(1), MonomialOrder::lex(3)),
                                    MonomialOrder::block({1, 3}, MonomialOrder::lex(2), MonomialOrder::lex(2))};
  for (const auto& ord : orders) {
    for (int i = 0; i < 500; ++i) {
      auto a = oracle::random_monomial(rng, 4, 3);
      auto b = oracle::random_monomial(rng, 4, 3);
      auto c = oracle::random_monomial(rng, 4, 3);
      auto ab = ord.compare(a, b);
      // totality and antisymmetry
      CHECK((ab == 0) == (a == b));
      CHECK((ord.compare(b, a) < 0) == (ab > 0));
      // multiplicative
      CHECK((ord.compare(a * c, b * c) > 0) == (ab > 0));
      // 1 is the smallest monomial
      if (!a.is_one()) CHECK(ord.compare(a, Monomial(4)) > 0);
      // transitivity
      if (ab > 0 && ord.compare(b, c) > 0) CHECK(ord.compare(a, c) > 0);
    }
  }
}

TEST_CASE("block order eliminates the first block") {
  auto ord = MonomialOrder::block({0}, MonomialOrder::lex(1), MonomialOrder::curve_lex());
  CHECK(ord.compare(Monomial{1, 0, 0, 0, 0}, Monomial{0, 50, 50, 50, 50}) > 0);
  // ties inside the rest block follow the inner order on x1..x4
  CHECK(ord.compare(Monomial{2, 0, 0, 1, 0}, Monomial{2, 0, 5, 0, 0}) > 0);
}
