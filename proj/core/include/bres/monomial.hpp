#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace bres {

// Largest ring supported: r semigroup generators plus one auxiliary
// variable for elimination.
inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector of a monomial in a ring with a fixed number of variables.
///
/// Entries are non-negative 64-bit integers; products are checked and throw
/// OverflowError instead of wrapping.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity);
  Monomial(std::initializer_list<std::int64_t> exps);
  explicit Monomial(std::span<const std::int64_t> exps);

  std::size_t arity() const { return arity_; }
  std::int64_t operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, std::int64_t value);

  std::int64_t total_degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  // this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.arity_ == b.arity_ && a.exps_ == b.exps_;
  }

  // Drop variable `index`, shifting later variables down by one.
  Monomial without(std::size_t index) const;
  // Insert a new variable with exponent `value` at `index`.
  Monomial with_inserted(std::size_t index, std::int64_t value) const;

 private:
  void check_arity(const Monomial& other) const;

  std::array<std::int64_t, kMaxVars> exps_{};
  std::uint8_t arity_ = 0;
};

// Sum of exponent * weight: the t-degree of the image under x_i -> t^{w_i}.
std::int64_t evaluate_eta(const Monomial& m, std::span<const std::int64_t> weights);

}  // namespace bres
