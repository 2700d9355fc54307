#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bres/module.hpp"
#include "bres/polynomial.hpp"

namespace bres {

struct ModuleTerm {
  Coeff coeff;
  Monomial mono;
  std::size_t comp;
};

// Terms strictly decreasing under some ModuleOrder.
using ModuleElement = std::vector<ModuleTerm>;

/// Total order on the terms m*e_i of a free module R^k.
///
/// Schreyer orders compare m*e_i against n*e_j through the images m*L_i and
/// n*L_j in a parent module, where L_i is the leading term of the i-th
/// generator there; equal images are broken toward the smaller index.
class ModuleOrder {
 public:
  enum class Strategy { kPositionOverTerm, kTermOverPosition, kSchreyer };

  static ModuleOrder position_over_term(const MonomialOrder& base);
  static ModuleOrder term_over_position(const MonomialOrder& base);
  static ModuleOrder schreyer(const ModuleOrder& parent, std::vector<std::pair<Monomial, std::size_t>> leads);
  // Schreyer order on R^k induced by the leading monomials of an ideal basis.
  static ModuleOrder schreyer(std::span<const Polynomial> basis);
  // Schreyer order on R^cols induced by a matrix whose columns live in a
  // module ordered by `row_order`.
  static ModuleOrder schreyer(const ModuleOrder& row_order, const SparseMatrix& m);

  std::strong_ordering compare(const Monomial& a, std::size_t ca, const Monomial& b, std::size_t cb) const;
  const MonomialOrder& base() const { return base_; }
  Strategy strategy() const { return strategy_; }

 private:
  explicit ModuleOrder(const MonomialOrder& base) : base_(base) {}

  MonomialOrder base_;
  Strategy strategy_ = Strategy::kPositionOverTerm;
  std::shared_ptr<const ModuleOrder> parent_;
  std::vector<Monomial> lead_monos_;
  std::vector<std::size_t> lead_comps_;
};

/// Positive (or, for selection only, arbitrary) integer grading: variable
/// weights plus a degree shift per free-module component.
struct Grading {
  std::vector<std::int64_t> var_weights;
  std::vector<std::int64_t> comp_degrees;

  static Grading standard(std::size_t nvars);
  std::int64_t degree(const Monomial& m, std::size_t comp = 0) const;
  bool positive() const;
};

std::optional<std::int64_t> homogeneous_degree(const Polynomial& p, const Grading& g);
std::optional<std::int64_t> homogeneous_degree(const ModuleVector& v, const Grading& g);

ModuleElement to_element(const ModuleVector& v, const ModuleOrder& ord);
ModuleElement to_element(const Polynomial& p);
ModuleVector to_vector(const ModuleElement& e, const RingPtr& ring, std::size_t rank);
Polynomial to_polynomial(const ModuleElement& e, const RingPtr& ring);

// Leading (monomial, component) of a nonzero vector.
std::pair<Monomial, std::size_t> lead_term(const ModuleVector& v, const ModuleOrder& ord);

struct GroebnerBasis {
  RingPtr ring;
  ModuleOrder order;
  std::size_t rank = 1;
  bool reduced = false;
  std::vector<ModuleElement> elements;
  // With tracking: elements[i] = sum_j representations[i][j] * input_j.
  std::vector<ModuleVector> representations;

  std::vector<Polynomial> polynomials() const;
  std::vector<ModuleVector> vectors() const;
};

struct GbOptions {
  bool reduce = true;
  bool track = false;
  bool criteria = true;
  std::optional<Grading> grading;
  // Only honoured for positive gradings and homogeneous input: pairs of
  // degree above the bound are skipped, giving a truncated basis.
  std::optional<std::int64_t> degree_bound;
};

// Ideal case; the order is the ring's order.
GroebnerBasis buchberger(std::span<const Polynomial> input, const GbOptions& opts = {});
GroebnerBasis module_buchberger(std::span<const ModuleVector> input, const ModuleOrder& ord,
                                const GbOptions& opts = {});

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& gb);

struct GbCheck {
  bool pass = true;
  // 0-based indices of the first pair whose S-polynomial does not reduce.
  std::size_t first = 0;
  std::size_t second = 0;
  std::optional<Polynomial> remainder;
};

GbCheck gb_check(std::span<const Polynomial> basis);

struct SchreyerRecord {
  std::size_t first;
  std::size_t second;
  bool koszul;
  ModuleVector syzygy;
};

// One syzygy per pair i < j: cofactors of the S-polynomial minus its
// division quotients, or the Koszul syzygy when leading monomials are
// coprime. Throws NotGroebnerError if some S-polynomial leaves a remainder.
std::vector<SchreyerRecord> schreyer_syzygies(std::span<const Polynomial> basis);

// Generators of {v : m v = 0}; empty iff the columns are independent.
std::vector<ModuleVector> kernel(const SparseMatrix& m, const ModuleOrder& row_order,
                                 const std::optional<Grading>& row_grading = std::nullopt);

struct Minimality {
  bool minimal = true;
  std::optional<std::size_t> redundant;  // 0-based
};

Minimality minimal_generation_check(std::span<const ModuleVector> vectors, const ModuleOrder& ord,
                                    const std::optional<Grading>& grading = std::nullopt);
Minimality minimal_generation_check(std::span<const Polynomial> polys,
                                    const std::optional<Grading>& grading = std::nullopt);

bool in_submodule(const ModuleVector& v, std::span<const ModuleVector> gens, const ModuleOrder& ord,
                  const std::optional<Grading>& grading = std::nullopt);

// Greedy pruning in increasing degree; minimal for homogeneous input.
std::vector<ModuleVector> minimize_generators(std::span<const ModuleVector> vectors, const ModuleOrder& ord,
                                              const std::optional<Grading>& grading = std::nullopt);

// Minimalize and interreduce an ideal basis that is already Groebner; monic
// and sorted by decreasing leading term.
std::vector<Polynomial> reduce_basis(std::span<const Polynomial> gb);

}  // namespace bres
