#pragma once

#include <gmpxx.h>

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bres/monomial.hpp"
#include "bres/monomial_order.hpp"

namespace bres {

using Coeff = mpq_class;

/// Variable names plus the active monomial order. Polynomials hold a shared
/// pointer to their ring; mixing rings of different arity is an ArityError.
class Ring {
 public:
  Ring(std::vector<std::string> names, MonomialOrder order);

  static std::shared_ptr<const Ring> make(std::vector<std::string> names, MonomialOrder order);
  // k[x1..xn] under `order`.
  static std::shared_ptr<const Ring> standard(const MonomialOrder& order);
  // k[x1..x4] under x3 > x2 > x1 > x4.
  static std::shared_ptr<const Ring> curve();

  std::size_t nvars() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }

  // Same variables, different order.
  std::shared_ptr<const Ring> with_order(const MonomialOrder& order) const;

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
  Coeff coeff;
  Monomial mono;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept strictly
/// decreasing in the ring's order with no zero coefficients, so the leading
/// term is `terms().front()` and equality is structural.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Coeff& c = 1);
  static Polynomial variable(RingPtr ring, std::size_t index);
  // x^a - x^c
  static Polynomial binomial(RingPtr ring, const Monomial& a, const Monomial& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& lead() const;
  const Monomial& lead_monomial() const { return lead().mono; }
  const Coeff& lead_coeff() const { return lead().coeff; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial times_term(const Coeff& c, const Monomial& m) const;
  Polynomial scaled(const Coeff& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Lead coefficient 1 (zero stays zero).
  Polynomial monic() const;
  // Same terms re-sorted under another ring of equal arity.
  Polynomial in_ring(RingPtr other) const;

  // True iff exactly two terms with coefficients +1 and -1.
  bool is_pure_binomial() const;
  bool has_constant_term() const;

  // Canonical text, e.g. "x1^3 - x2^4" or "-2*x1*x3 + 1".
  std::string to_string() const;

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

// lcm/lt(f) * f - lcm/lt(g) * g, where lt includes the coefficient.
Polynomial spoly(const Polynomial& f, const Polynomial& g);

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division with the first-divisor-in-list rule.
Division divide(const Polynomial& f, std::span<const Polynomial> basis);

// Parses the canonical grammar: signed terms `c*x1^a1*...`, constants, and
// the ring's variable names. Throws DomainError on malformed input.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

std::string format_monomial(const Monomial& m, const Ring& ring);
std::string format_coeff(const Coeff& c);

}  // namespace bres
