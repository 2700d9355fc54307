#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bres/polynomial.hpp"

namespace bres {

/// Generators n_1..n_r of a numerical semigroup; gcd must be 1.
class SemigroupData {
 public:
  explicit SemigroupData(std::vector<std::int64_t> n);

  const std::vector<std::int64_t>& n() const { return n_; }
  std::size_t size() const { return n_.size(); }
  std::span<const std::int64_t> weights() const { return n_; }

 private:
  std::vector<std::int64_t> n_;
};

std::int64_t gcd_all(std::span<const std::int64_t> values);

// Pure-difference binomial x^a - x^c lies in ker(x_i -> t^{n_i}) iff both
// monomials have the same weight.
bool binomial_in_ideal(const Polynomial& b, const SemigroupData& sg);

// Is v a non-negative integer combination of the generators?
bool semigroup_membership(std::int64_t v, const SemigroupData& sg);

// No n_i is representable by the others.
bool is_minimally_generated(const SemigroupData& sg);

}  // namespace bres
