#include "bres/monomial_order.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "bres/errors.hpp"

namespace bres {

MonomialOrder MonomialOrder::lex(std::size_t arity) {
  std::vector<std::size_t> priority(arity);
  std::iota(priority.begin(), priority.end(), std::size_t{0});
  return lex(std::move(priority));
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> priority) {
  MonomialOrder ord;
  ord.arity_ = priority.size();
  if (ord.arity_ > kMaxVars) throw ArityError("too many variables for a monomial order");
  ord.description_ = "lex(";
  for (std::size_t i = 0; i < priority.size(); ++i) {
    if (priority[i] >= ord.arity_) throw DomainError("lex priority is not a permutation");
    ord.rows_.push_back(1u << priority[i]);
    ord.description_ += (i ? ">" : "") + std::to_string(priority[i] + 1);
  }
  ord.description_ += ")";
  ord.validate();
  return ord;
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> first_block,
                                   const MonomialOrder& first_inner,
                                   const MonomialOrder& rest_inner) {
  MonomialOrder ord;
  ord.arity_ = first_block.size() + rest_inner.arity();
  if (ord.arity_ > kMaxVars) throw ArityError("too many variables for a monomial order");
  if (first_inner.arity() != first_block.size()) {
    throw ArityError("inner order arity does not match the first block");
  }
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < ord.arity_; ++v) {
    if (std::find(first_block.begin(), first_block.end(), v) == first_block.end()) rest.push_back(v);
  }
  if (rest.size() != rest_inner.arity()) throw DomainError("block variables are not distinct");

  auto remap = [](std::uint32_t row, const std::vector<std::size_t>& vars) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (row & (1u << i)) out |= 1u << vars[i];
    }
    return out;
  };
  std::uint32_t block_mask = 0;
  for (auto v : first_block) block_mask |= 1u << v;
  ord.rows_.push_back(block_mask);
  for (auto row : first_inner.rows_) ord.rows_.push_back(remap(row, first_block));
  for (auto row : rest_inner.rows_) ord.rows_.push_back(remap(row, rest));
  ord.description_ = "block(" + first_inner.description_ + " | " + rest_inner.description_ + ")";
  ord.validate();
  return ord;
}

MonomialOrder MonomialOrder::curve_lex() { return lex({2, 1, 0, 3}); }

void MonomialOrder::validate() const {
  // Total iff the rows span every variable; checking that each variable shows
  // up as a singleton row is sufficient for the shapes built above.
  std::uint32_t seen = 0;
  for (auto row : rows_) {
    if (std::popcount(row) == 1) seen |= row;
  }
  std::uint32_t all = arity_ == 0 ? 0u : (1u << arity_) - 1u;
  if (seen != all) throw DomainError("monomial order is not total");
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.arity() != arity_ || b.arity() != arity_) {
    throw ArityError("monomial arity does not match the order");
  }
  for (auto row : rows_) {
    std::int64_t da = 0;
    std::int64_t db = 0;
    if (std::has_single_bit(row)) {
      auto v = static_cast<std::size_t>(std::countr_zero(row));
      da = a[v];
      db = b[v];
    } else {
      for (std::uint32_t bits = row; bits; bits &= bits - 1) {
        auto v = static_cast<std::size_t>(std::countr_zero(bits));
        da += a[v];
        db += b[v];
      }
    }
    if (da != db) return da <=> db;
  }
  return std::strong_ordering::equal;
}

std::vector<std::size_t> MonomialOrder::lex_priority() const {
  std::vector<std::size_t> out;
  for (auto row : rows_) {
    if (!std::has_single_bit(row)) continue;
    auto v = static_cast<std::size_t>(std::countr_zero(row));
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

bool MonomialOrder::is_pure_lex() const {
  return std::all_of(rows_.begin(), rows_.end(), [](auto r) { return std::has_single_bit(r); });
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  return ord.compare(a, b);
}

}  // namespace bres
