#include <doctest.h>

#include <algorithm>

#include "bres/bresinsky.hpp"
#include "bres/groebner.hpp"
#include "oracles.hpp"

using namespace bres;

namespace {

const std::vector<std::int64_t> kN{20, 15, 23, 12};

// x^a - x^c with eta(a) = eta(c), a != c.
Polynomial random_toric_binomial(oracle::Rng& rng, const RingPtr& R) {
  while (true) {
    auto monos = oracle::monomials_of_weight(kN, rng.between(30, 110));
    if (monos.size() < 2) continue;
    auto i = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(monos.size()) - 1));
    auto j = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(monos.size()) - 1));
    if (i == j) continue;
    return Polynomial::binomial(R, monos[i], monos[j]);
  }
}

std::vector<Polynomial> random_toric_set(oracle::Rng& rng, const RingPtr& R, int k) {
  std::vector<Polynomial> out;
  for (int i = 0; i < k; ++i) out.push_back(random_toric_binomial(rng, R));
  return out;
}

}  // namespace

TEST_CASE("homogeneity is preserved by S-polynomials, reduction and Buchberger") {
  oracle::Rng rng(101);
  auto R = Ring::curve();
  Grading g{kN, {}};
  for (int round = 0; round < 25; ++round) {
    auto in = random_toric_set(rng, R, 3);
    auto s = spoly(in[0], in[1]);
    if (!s.is_zero()) CHECK(homogeneous_degree(s, g));
    auto r = divide(s, in).remainder;
    if (!r.is_zero()) CHECK(homogeneous_degree(r, g));
    for (const auto& p : buchberger(in).polynomials()) CHECK(homogeneous_degree(p, g));
  }
}

TEST_CASE("Groebner bases of binomial ideals consist of pure binomials") {
  oracle::Rng rng(202);
  auto R = Ring::curve();
  for (int round = 0; round < 25; ++round) {
    auto in = random_toric_set(rng, R, 3);
    for (const auto& p : buchberger(in).polynomials()) {
      CHECK(p.is_pure_binomial());
      CHECK(binomial_in_ideal(p, SemigroupData(kN)));
    }
  }
}

TEST_CASE("reduced basis is independent of input order") {
  oracle::Rng rng(303);
  auto R = Ring::curve();
  for (int round = 0; round < 15; ++round) {
    auto in = random_toric_set(rng, R, 4);
    auto ref = buchberger(in).polynomials();
    for (int k = 0; k < 4; ++k) {
      std::shuffle(in.begin(), in.end(), rng.engine());
      CHECK(buchberger(in).polynomials() == ref);
    }
  }
  auto inst = make_instance(6);
  auto S = generators(inst).polys;
  auto ref = buchberger(S).polynomials();
  for (int k = 0; k < 5; ++k) {
    std::shuffle(S.begin(), S.end(), rng.engine());
    CHECK(buchberger(S).polynomials() == ref);
  }
}

TEST_CASE("combinations of a Groebner basis reduce to zero") {
  oracle::Rng rng(404);
  auto inst = make_instance(4);
  auto S = generators(inst).polys;
  REQUIRE(gb_check(S).pass);
  auto gb = buchberger(S);
  for (int round = 0; round < 40; ++round) {
    Polynomial f(inst.ring());
    for (const auto& s : S) f += oracle::random_polynomial(rng, inst.ring(), 2, 2) * s;
    CHECK(normal_form(f, gb).is_zero());
    CHECK(divide(f, S).remainder.is_zero());
  }
}

TEST_CASE("normal form is unique modulo the ideal") {
  oracle::Rng rng(505);
  auto inst = make_instance(4);
  auto S = generators(inst).polys;
  auto gb = buchberger(S);
  for (int round = 0; round < 30; ++round) {
    auto f = oracle::random_polynomial(rng, inst.ring(), 4, 4);
    auto g = f + oracle::random_polynomial(rng, inst.ring(), 2, 2) * S[static_cast<std::size_t>(round % 8)];
    CHECK(normal_form(f, gb) == normal_form(g, gb));
  }
}

TEST_CASE("minimality check detects planted redundancy") {
  oracle::Rng rng(606);
  auto inst = make_instance(4);
  auto S = generators(inst).polys;
  Grading g = inst.grading();
  CHECK(minimal_generation_check(S, g).minimal);
  // each generator is needed: removing it shrinks the ideal
  for (std::size_t i = 0; i < S.size(); ++i) {
    std::vector<Polynomial> rest;
    for (std::size_t j = 0; j < S.size(); ++j) {
      if (j != i) rest.push_back(S[j]);
    }
    CHECK_FALSE(normal_form(S[i], buchberger(rest)).is_zero());
  }
  for (int round = 0; round < 5; ++round) {
    auto a = static_cast<std::size_t>(rng.between(0, 7));
    auto b = static_cast<std::size_t>(rng.between(0, 7));
    if (a == b) continue;
    // x-multiple of S[a] plus multiple of S[b], homogeneous by construction
    auto extra = S[a] * Polynomial::variable(inst.ring(), 0) * Polynomial::variable(inst.ring(), 3);
    auto with = S;
    with.push_back(extra);
    auto m = minimal_generation_check(with, g);
    CHECK_FALSE(m.minimal);
  }
}
