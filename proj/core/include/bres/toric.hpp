#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bres/polynomial.hpp"
#include "bres/semigroup.hpp"

namespace bres {

enum class OracleMethod { kElimination, kLatticeSaturation };

std::string to_string(OracleMethod m);

struct OracleResult {
  // Reduced, monic, sorted by decreasing leading term.
  std::vector<Polynomial> gb;
  OracleMethod method;
  double seconds = 0.0;
};

// Reduced GB of ker(x_i -> t^{n_i}) under `target` (an order on r variables),
// by eliminating t from <x_i - t^{n_i}>.
OracleResult toric_ideal_elimination(const SemigroupData& sg, const MonomialOrder& target);

// Same ideal from an integer basis of {u : sum u_i n_i = 0}, saturated with
// respect to x_1 ... x_r.
OracleResult toric_ideal_lattice(const SemigroupData& sg, const MonomialOrder& target);

// LLL-reduced basis of the kernel lattice; each vector's first nonzero entry
// is positive.
std::vector<std::vector<std::int64_t>> lattice_basis(const SemigroupData& sg);

// Largest q2 the oracle runs for without an explicit override: 8, or the
// value of BRES_ORACLE_MAX_Q2 when set to a positive integer.
std::int64_t oracle_max_q2();
bool oracle_allowed(std::int64_t q2, bool override_limit);

// Monomials of weight <= bound, grouped by weight.
std::vector<std::pair<std::int64_t, std::vector<Monomial>>> monomials_by_weight(const SemigroupData& sg,
                                                                               std::int64_t bound);

struct BruteForceResult {
  std::size_t binomials = 0;
  // First equal-weight pair whose difference does not reduce to zero.
  std::optional<std::pair<Monomial, Monomial>> witness;
};

// Reduces every x^a - x^c with eta(a) = eta(c) <= bound against `gb`.
BruteForceResult brute_force_kernel_check(const SemigroupData& sg, const std::vector<Polynomial>& gb,
                                          std::int64_t bound);

}  // namespace bres
