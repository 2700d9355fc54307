#include "bres/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bres/errors.hpp"

namespace bres {

Ring::Ring(std::vector<std::string> names, MonomialOrder order)
    : names_(std::move(names)), order_(std::move(order)) {
  if (names_.size() != order_.arity()) throw ArityError("ring names and order arity differ");
}

RingPtr Ring::make(std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), std::move(order));
}

RingPtr Ring::standard(const MonomialOrder& order) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < order.arity(); ++i) names.push_back("x" + std::to_string(i + 1));
  return make(std::move(names), order);
}

RingPtr Ring::curve() { return standard(MonomialOrder::curve_lex()); }

RingPtr Ring::with_order(const MonomialOrder& order) const { return make(names_, order); }

namespace {

// Sort descending, merge equal monomials, drop zeros.
void normalize(std::vector<Term>& terms, const MonomialOrder& ord) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  terms = std::move(out);
}

// a + sign * b, both sorted.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign,
                        const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = ord.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Coeff s = sign < 0 ? Coeff(a[i].coeff - b[j].coeff) : Coeff(a[i].coeff + b[j].coeff);
      if (sgn(s) != 0) out.push_back(Term{std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("polynomial without a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw DomainError("polynomial without a ring");
  for (const auto& t : terms_) {
    if (t.mono.arity() != ring_->nvars()) throw ArityError("term arity does not match ring");
  }
  normalize(terms_, ring_->order());
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  Monomial one(ring->nvars());
  return Polynomial(ring, {Term{c, one}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Coeff& c) {
  return Polynomial(std::move(ring), {Term{c, m}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->nvars());
  m.set(index, 1);
  return monomial(std::move(ring), m);
}

Polynomial Polynomial::binomial(RingPtr ring, const Monomial& a, const Monomial& c) {
  return Polynomial(std::move(ring), {Term{1, a}, Term{-1, c}});
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ == other.ring_) return;
  if (ring_->nvars() != other.ring_->nvars()) throw ArityError("polynomials from rings of different arity");
  if (!(ring_->order() == other.ring_->order())) throw DomainError("polynomials sorted under different orders");
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge(terms_, other.terms_, +1, ring_->order());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge(terms_, other.terms_, -1, ring_->order());
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back(Term{s.coeff * t.coeff, s.mono * t.mono});
  }
  return Polynomial(a.ring_, std::move(prod));
}

Polynomial Polynomial::times_term(const Coeff& c, const Monomial& m) const {
  Polynomial out(ring_);
  if (sgn(c) == 0) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of terms.
  for (const auto& t : terms_) out.terms_.push_back(Term{t.coeff * c, t.mono * m});
  return out;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  return times_term(c, Monomial(ring_->nvars()));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_->nvars() != b.ring_->nvars() || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
  }
  return true;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Coeff inv = 1 / lead_coeff();
  return scaled(inv);
}

Polynomial Polynomial::in_ring(RingPtr other) const {
  if (other->nvars() != ring_->nvars()) throw ArityError("cannot move polynomial to ring of different arity");
  return Polynomial(std::move(other), terms_);
}

bool Polynomial::is_pure_binomial() const {
  return terms_.size() == 2 && sgn(terms_[0].coeff * terms_[1].coeff) < 0 &&
         abs(terms_[0].coeff) == 1 && abs(terms_[1].coeff) == 1;
}

bool Polynomial::has_constant_term() const {
  return !terms_.empty() && terms_.back().mono.is_one();
}

std::string format_coeff(const Coeff& c) { return c.get_str(); }

std::string format_monomial(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    bool negative = sgn(t.coeff) < 0;
    if (i == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    Coeff mag = abs(t.coeff);
    if (t.mono.is_one()) {
      out += format_coeff(mag);
    } else if (mag == 1) {
      out += format_monomial(t.mono, *ring_);
    } else {
      out += format_coeff(mag) + "*" + format_monomial(t.mono, *ring_);
    }
  }
  return out;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("S-polynomial of the zero polynomial");
  Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  Polynomial a = f.times_term(1 / f.lead_coeff(), l.quotient(f.lead_monomial()));
  Polynomial b = g.times_term(1 / g.lead_coeff(), l.quotient(g.lead_monomial()));
  return a - b;
}

Division divide(const Polynomial& f, std::span<const Polynomial> basis) {
  for (const auto& g : basis) {
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
  }
  const auto& ring = f.ring();
  std::vector<std::vector<Term>> quot(basis.size());
  std::vector<Term> rem;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.lead();
    std::size_t hit = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].lead_monomial().divides(lt.mono)) {
        hit = i;
        break;
      }
    }
    if (hit == basis.size()) {
      rem.push_back(lt);
      p -= Polynomial::monomial(ring, lt.mono, lt.coeff);
      continue;
    }
    Coeff c = lt.coeff / basis[hit].lead_coeff();
    Monomial m = lt.mono.quotient(basis[hit].lead_monomial());
    quot[hit].push_back(Term{c, m});
    p -= basis[hit].times_term(c, m);
  }
  Division out{{}, Polynomial(ring, std::move(rem))};
  for (auto& q : quot) out.quotients.emplace_back(ring, std::move(q));
  return out;
}

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), s_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      terms.push_back(term(sign));
      first = false;
      skip_ws();
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  Term term(int sign) {
    Coeff c = sign;
    Monomial m(ring_->nvars());
    bool any = false;
    while (true) {
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c *= number();
      } else {
        auto [var, exp] = factor();
        m = m * power(var, exp);
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return Term{c, m};
  }

  Monomial power(std::size_t var, std::int64_t exp) {
    Monomial m(ring_->nvars());
    m.set(var, exp);
    return m;
  }

  Coeff number() {
    std::string digits = integer_text();
    if (!at_end() && peek() == '/') {
      get();
      digits += "/" + integer_text();
    }
    Coeff c(digits);
    c.canonicalize();
    return c;
  }

  std::string integer_text() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += get();
    if (out.empty()) fail("expected digits");
    return out;
  }

  std::pair<std::size_t, std::int64_t> factor() {
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += get();
    const auto& names = ring_->names();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) fail("unknown variable '" + name + "'");
    std::int64_t exp = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      get();
      skip_ws();
      exp = std::stoll(integer_text());
    }
    return {static_cast<std::size_t>(it - names.begin()), exp};
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("cannot parse polynomial '" + std::string(s_) + "': " + why + " at offset " +
                      std::to_string(pos_));
  }

  const RingPtr& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) { return Parser(ring, text).parse(); }

}  // namespace bres
