#include "bres/semigroup.hpp"

#include <numeric>
#include <string>

#include "bres/errors.hpp"

namespace bres {

namespace {

bool representable(std::int64_t v, std::span<const std::int64_t> gens) {
  if (v < 0) throw DomainError("semigroup membership of a negative value");
  std::vector<char> reach(static_cast<std::size_t>(v) + 1, 0);
  reach[0] = 1;
  for (std::int64_t x = 1; x <= v; ++x) {
    for (auto g : gens) {
      if (g <= x && reach[static_cast<std::size_t>(x - g)]) {
        reach[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  return reach[static_cast<std::size_t>(v)] != 0;
}

}  // namespace

std::int64_t gcd_all(std::span<const std::int64_t> values) {
  if (values.empty()) throw DomainError("gcd of an empty list");
  std::int64_t g = 0;
  for (auto v : values) {
    if (v <= 0) throw DomainError("gcd_all expects positive entries");
    g = std::gcd(g, v);
  }
  return g;
}

SemigroupData::SemigroupData(std::vector<std::int64_t> n) : n_(std::move(n)) {
  if (n_.empty()) throw DomainError("semigroup needs at least one generator");
  if (gcd_all(n_) != 1) throw DomainError("semigroup generators must have gcd 1");
}

bool binomial_in_ideal(const Polynomial& b, const SemigroupData& sg) {
  if (!b.is_pure_binomial()) throw DomainError("not a pure-difference binomial: " + b.to_string());
  return evaluate_eta(b.terms()[0].mono, sg.weights()) == evaluate_eta(b.terms()[1].mono, sg.weights());
}

bool semigroup_membership(std::int64_t v, const SemigroupData& sg) { return representable(v, sg.weights()); }

bool is_minimally_generated(const SemigroupData& sg) {
  const auto& n = sg.n();
  for (std::size_t i = 0; i < n.size(); ++i) {
    std::vector<std::int64_t> others;
    for (std::size_t j = 0; j < n.size(); ++j) {
      if (j != i) others.push_back(n[j]);
    }
    if (!others.empty() && representable(n[i], others)) return false;
  }
  return true;
}

}  // namespace bres
