#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bres/monomial.hpp"

namespace bres {

/// A monomial order, stored as a list of 0/1 weight rows compared in turn.
///
/// Two constructions are offered:
///  * lex with a variable permutation (`priority[0]` is the largest variable);
///  * block elimination: the first block is compared by its total degree and
///    then by an inner order, and ties are broken by an inner order on the
///    remaining variables.
class MonomialOrder {
 public:
  static MonomialOrder lex(std::size_t arity);
  static MonomialOrder lex(std::vector<std::size_t> priority);

  // `first_block` lists variable indices of the full ring; `first_inner` is an
  // order on first_block.size() variables (in listed order) and `rest_inner`
  // an order on the remaining variables, taken in increasing index order.
  static MonomialOrder block(std::vector<std::size_t> first_block,
                             const MonomialOrder& first_inner,
                             const MonomialOrder& rest_inner);

  // x3 > x2 > x1 > x4 on k[x1..x4].
  static MonomialOrder curve_lex();

  std::size_t arity() const { return arity_; }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  const std::string& description() const { return description_; }
  // Variables in decreasing significance for the trailing lex rows; used by
  // the CAS exporter.
  std::vector<std::size_t> lex_priority() const;
  bool is_pure_lex() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.arity_ == b.arity_ && a.rows_ == b.rows_;
  }

 private:
  MonomialOrder() = default;
  void validate() const;

  std::size_t arity_ = 0;
  std::vector<std::uint32_t> rows_;  // bitmask of variables summed per row
  std::string description_;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

}  // namespace bres
