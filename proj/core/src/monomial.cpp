#include "bres/monomial.hpp"

#include <algorithm>
#include <string>

#include "bres/errors.hpp"

namespace bres {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("exponent overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("weight overflow");
  return out;
}

}  // namespace

Monomial::Monomial(std::size_t arity) : arity_(static_cast<std::uint8_t>(arity)) {
  if (arity > kMaxVars) throw ArityError("too many variables: " + std::to_string(arity));
}

Monomial::Monomial(std::initializer_list<std::int64_t> exps)
    : Monomial(std::span<const std::int64_t>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const std::int64_t> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

void Monomial::set(std::size_t i, std::int64_t value) {
  if (i >= arity_) throw ArityError("variable index out of range");
  if (value < 0) throw DomainError("negative exponent");
  exps_[i] = value;
}

std::int64_t Monomial::total_degree() const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < arity_; ++i) d = checked_add(d, exps_[i]);
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.begin() + arity_, [](auto e) { return e == 0; });
}

void Monomial::check_arity(const Monomial& other) const {
  if (arity_ != other.arity_) {
    throw ArityError("monomial arity mismatch: " + std::to_string(arity_) + " vs " +
                     std::to_string(other.arity_));
  }
}

bool Monomial::divides(const Monomial& other) const {
  check_arity(other);
  for (std::size_t i = 0; i < arity_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  check_arity(other);
  for (std::size_t i = 0; i < arity_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw DomainError("monomial quotient is not exact");
  Monomial out(arity_);
  for (std::size_t i = 0; i < arity_; ++i) out.exps_[i] = exps_[i] - divisor.exps_[i];
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  a.check_arity(b);
  Monomial out(a.arity_);
  for (std::size_t i = 0; i < a.arity_; ++i) out.exps_[i] = checked_add(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  a.check_arity(b);
  Monomial out(a.arity_);
  for (std::size_t i = 0; i < a.arity_; ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  a.check_arity(b);
  Monomial out(a.arity_);
  for (std::size_t i = 0; i < a.arity_; ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial Monomial::without(std::size_t index) const {
  if (index >= arity_) throw ArityError("variable index out of range");
  Monomial out(arity_ - 1u);
  for (std::size_t i = 0, j = 0; i < arity_; ++i) {
    if (i != index) out.exps_[j++] = exps_[i];
  }
  return out;
}

Monomial Monomial::with_inserted(std::size_t index, std::int64_t value) const {
  if (index > arity_) throw ArityError("variable index out of range");
  Monomial out(arity_ + 1u);
  for (std::size_t i = 0, j = 0; j < out.arity_; ++j) {
    out.exps_[j] = (j == index) ? value : exps_[i++];
  }
  if (value < 0) throw DomainError("negative exponent");
  return out;
}

std::int64_t evaluate_eta(const Monomial& m, std::span<const std::int64_t> weights) {
  if (weights.size() != m.arity()) {
    throw ArityError("weight vector has " + std::to_string(weights.size()) +
                     " entries, monomial has " + std::to_string(m.arity()));
  }
  std::int64_t w = 0;
  for (std::size_t i = 0; i < m.arity(); ++i) w = checked_add(w, checked_mul(m[i], weights[i]));
  return w;
}

}  // namespace bres
