#include <doctest.h>

#include <set>

#include "bres/errors.hpp"
#include "bres/semigroup.hpp"

using namespace bres;

namespace {

// Every sum a1 n1 + ... + ar nr up to the bound, by nested enumeration.
std::set<std::int64_t> sums_up_to(const std::vector<std::int64_t>& n, std::int64_t bound) {
  std::set<std::int64_t> out{0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto s : std::vector<std::int64_t>(out.begin(), out.end())) {
      for (auto g : n) {
        if (s + g <= bound && out.insert(s + g).second) grew = true;
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("gcd and construction") {
  std::vector<std::int64_t> a{20, 15, 23, 12};
  CHECK(gcd_all(a) == 1);
  std::vector<std::int64_t> b{4, 6};
  CHECK(gcd_all(b) == 2);
  CHECK_THROWS_AS(SemigroupData({4, 6}), DomainError);
  CHECK_THROWS_AS(SemigroupData({}), DomainError);
  CHECK_NOTHROW(SemigroupData({2, 3}));
}

TEST_CASE("membership matches enumeration") {
  for (const auto& n : std::vector<std::vector<std::int64_t>>{{2, 3}, {3, 5, 7}, {20, 15, 23, 12}}) {
    SemigroupData sg(n);
    auto sums = sums_up_to(n, 150);
    for (std::int64_t v = 0; v <= 150; ++v) CHECK(semigroup_membership(v, sg) == (sums.count(v) == 1));
  }
  CHECK_FALSE(semigroup_membership(1, SemigroupData({2, 3})));
  CHECK(semigroup_membership(35, SemigroupData({20, 15, 23, 12})));
  CHECK_THROWS_AS(semigroup_membership(-1, SemigroupData({2, 3})), DomainError);
}

TEST_CASE("binomial membership by weights") {
  SemigroupData sg({20, 15, 23, 12});
  auto R = Ring::curve();
  CHECK(binomial_in_ideal(parse_polynomial(R, "x3*x4 - x1*x2"), sg));
  CHECK(binomial_in_ideal(parse_polynomial(R, "x1^3 - x2^4"), sg));
  CHECK_FALSE(binomial_in_ideal(parse_polynomial(R, "x1 - x2"), sg));
  CHECK_THROWS_AS(binomial_in_ideal(parse_polynomial(R, "x1 - 2*x2"), sg), DomainError);
  CHECK_THROWS_AS(binomial_in_ideal(parse_polynomial(R, "x1 - x2 + x3"), sg), DomainError);
}

TEST_CASE("minimal generation of semigroups") {
  CHECK(is_minimally_generated(SemigroupData({20, 15, 23, 12})));
  CHECK(is_minimally_generated(SemigroupData({3, 5, 7})));
  CHECK_FALSE(is_minimally_generated(SemigroupData({2, 3, 5})));
}
