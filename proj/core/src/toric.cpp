#include "bres/toric.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <string>

#include "bres/errors.hpp"
#include "bres/groebner.hpp"

namespace bres {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_target(const SemigroupData& sg, const MonomialOrder& target) {
  if (target.arity() != sg.size()) {
    throw ArityError("target order has " + std::to_string(target.arity()) + " variables, semigroup has " +
                     std::to_string(sg.size()));
  }
  if (sg.size() + 1 > kMaxVars) throw ArityError("too many semigroup generators");
}

// k[a, x1..xr] with the auxiliary variable a eliminated first.
RingPtr auxiliary_ring(const std::string& aux, const MonomialOrder& target) {
  std::vector<std::string> names{aux};
  for (std::size_t i = 0; i < target.arity(); ++i) names.push_back("x" + std::to_string(i + 1));
  return Ring::make(std::move(names), MonomialOrder::block({0}, MonomialOrder::lex(1), target));
}

// Keep the elements free of variable 0 and move them to k[x1..xr].
std::vector<Polynomial> drop_auxiliary(const std::vector<Polynomial>& gb, const MonomialOrder& target) {
  auto ring = Ring::standard(target);
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [](const Term& t) { return t.mono[0] == 0; });
    if (!free) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) terms.push_back(Term{t.coeff, t.mono.without(0)});
    kept.emplace_back(ring, std::move(terms));
  }
  return reduce_basis(kept);
}

Grading auxiliary_grading(std::int64_t aux_weight, const SemigroupData& sg) {
  Grading g;
  g.var_weights.push_back(aux_weight);
  for (auto w : sg.n()) g.var_weights.push_back(w);
  return g;
}

}  // namespace

std::string to_string(OracleMethod m) {
  return m == OracleMethod::kElimination ? "elimination" : "lattice-saturation";
}

OracleResult toric_ideal_elimination(const SemigroupData& sg, const MonomialOrder& target) {
  check_target(sg, target);
  auto t0 = Clock::now();
  auto ring = auxiliary_ring("t", target);
  const std::size_t r = sg.size();
  std::vector<Polynomial> input;
  for (std::size_t i = 0; i < r; ++i) {
    Monomial x(r + 1);
    x.set(i + 1, 1);
    Monomial t(r + 1);
    t.set(0, sg.n()[i]);
    input.push_back(Polynomial::binomial(ring, x, t));
  }
  GbOptions opts;
  opts.grading = auxiliary_grading(1, sg);
  auto gb = buchberger(input, opts);
  return OracleResult{drop_auxiliary(gb.polynomials(), target), OracleMethod::kElimination, seconds_since(t0)};
}

std::vector<std::vector<std::int64_t>> lattice_basis(const SemigroupData& sg) {
  const std::size_t r = sg.size();
  std::vector<std::int64_t> a = sg.n();
  // Columns of u track a = n * U under unimodular column operations.
  std::vector<std::vector<mpz_class>> u(r, std::vector<mpz_class>(r, 0));
  for (std::size_t i = 0; i < r; ++i) u[i][i] = 1;
  auto nonzero = [&] { return std::count_if(a.begin(), a.end(), [](std::int64_t v) { return v != 0; }); };
  std::size_t pivot = 0;
  while (nonzero() > 1) {
    pivot = r;
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i] != 0 && (pivot == r || std::abs(a[i]) < std::abs(a[pivot]))) pivot = i;
    }
    for (std::size_t j = 0; j < r; ++j) {
      if (j == pivot || a[j] == 0) continue;
      std::int64_t q = a[j] / a[pivot];
      a[j] -= q * a[pivot];
      for (std::size_t k = 0; k < r; ++k) u[j][k] -= q * u[pivot][k];
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i] != 0) pivot = i;
  }
  std::vector<std::vector<mpz_class>> b;
  for (std::size_t j = 0; j < r; ++j) {
    if (j != pivot) b.push_back(u[j]);
  }

  // LLL with delta = 3/4 over exact rationals.
  const std::size_t m = b.size();
  auto dot = [r](const auto& x, const auto& y) {
    mpq_class s = 0;
    for (std::size_t k = 0; k < r; ++k) s += mpq_class(x[k]) * mpq_class(y[k]);
    return s;
  };
  std::vector<std::vector<mpq_class>> bstar(m);
  std::vector<std::vector<mpq_class>> mu(m, std::vector<mpq_class>(m, 0));
  std::vector<mpq_class> norm(m);
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < m; ++i) {
      bstar[i].assign(r, 0);
      for (std::size_t k = 0; k < r; ++k) bstar[i][k] = b[i][k];
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = dot(b[i], bstar[j]) / norm[j];
        for (std::size_t k = 0; k < r; ++k) bstar[i][k] -= mu[i][j] * bstar[j][k];
      }
      norm[i] = dot(bstar[i], bstar[i]);
    }
  };
  gram_schmidt();
  std::size_t k = 1;
  while (k < m) {
    for (std::size_t jj = k; jj-- > 0;) {
      if (abs(2 * mu[k][jj]) > 1) {
        // nearest integer to mu
        mpz_class num = 2 * mu[k][jj].get_num() + mu[k][jj].get_den();
        mpz_class den = 2 * mu[k][jj].get_den();
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        for (std::size_t c = 0; c < r; ++c) b[k][c] -= q * b[jj][c];
        gram_schmidt();
      }
    }
    if (norm[k] >= (mpq_class(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }

  std::vector<std::vector<std::int64_t>> out;
  for (auto& v : b) {
    auto first = std::find_if(v.begin(), v.end(), [](const mpz_class& x) { return sgn(x) != 0; });
    int s = (first != v.end() && sgn(*first) < 0) ? -1 : 1;
    std::vector<std::int64_t> w;
    for (auto& x : v) {
      mpz_class y = s * x;
      if (!y.fits_slong_p()) throw OverflowError("lattice basis entry exceeds 64 bits");
      w.push_back(y.get_si());
    }
    out.push_back(std::move(w));
  }
  return out;
}

OracleResult toric_ideal_lattice(const SemigroupData& sg, const MonomialOrder& target) {
  check_target(sg, target);
  auto t0 = Clock::now();
  auto ring = auxiliary_ring("y", target);
  const std::size_t r = sg.size();
  std::vector<Polynomial> input;
  for (const auto& v : lattice_basis(sg)) {
    Monomial plus(r + 1);
    Monomial minus(r + 1);
    for (std::size_t i = 0; i < r; ++i) {
      if (v[i] > 0) plus.set(i + 1, v[i]);
      if (v[i] < 0) minus.set(i + 1, -v[i]);
    }
    input.push_back(Polynomial::binomial(ring, plus, minus));
  }
  Monomial all(r + 1);
  std::int64_t total = 0;
  for (std::size_t i = 0; i <= r; ++i) all.set(i, 1);
  for (auto w : sg.n()) total += w;
  input.push_back(Polynomial::binomial(ring, all, Monomial(r + 1)));
  GbOptions opts;
  // y * x1...xr - 1 has degree 0; the grading only steers pair selection.
  opts.grading = auxiliary_grading(-total, sg);
  auto gb = buchberger(input, opts);
  return OracleResult{drop_auxiliary(gb.polynomials(), target), OracleMethod::kLatticeSaturation,
                      seconds_since(t0)};
}

std::int64_t oracle_max_q2() {
  if (const char* env = std::getenv("BRES_ORACLE_MAX_Q2")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 8;
}

bool oracle_allowed(std::int64_t q2, bool override_limit) { return override_limit || q2 <= oracle_max_q2(); }

std::vector<std::pair<std::int64_t, std::vector<Monomial>>> monomials_by_weight(const SemigroupData& sg,
                                                                               std::int64_t bound) {
  const std::size_t r = sg.size();
  std::vector<std::vector<Monomial>> by(static_cast<std::size_t>(std::max<std::int64_t>(bound, -1) + 1));
  Monomial cur(r);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t weight) -> void {
    if (i == r) {
      by[static_cast<std::size_t>(weight)].push_back(cur);
      return;
    }
    for (std::int64_t e = 0; weight + e * sg.n()[i] <= bound; ++e) {
      cur.set(i, e);
      self(self, i + 1, weight + e * sg.n()[i]);
    }
    cur.set(i, 0);
  };
  if (bound >= 0) rec(rec, 0, 0);
  std::vector<std::pair<std::int64_t, std::vector<Monomial>>> out;
  for (std::size_t w = 0; w < by.size(); ++w) {
    if (!by[w].empty()) out.emplace_back(static_cast<std::int64_t>(w), std::move(by[w]));
  }
  return out;
}

BruteForceResult brute_force_kernel_check(const SemigroupData& sg, const std::vector<Polynomial>& gb,
                                          std::int64_t bound) {
  if (gb.empty()) throw DomainError("empty basis");
  const auto& ring = gb.front().ring();
  BruteForceResult out;
  for (const auto& [w, monos] : monomials_by_weight(sg, bound)) {
    for (std::size_t i = 0; i < monos.size(); ++i) {
      for (std::size_t j = i + 1; j < monos.size(); ++j) {
        ++out.binomials;
        auto rem = divide(Polynomial::binomial(ring, monos[i], monos[j]), gb).remainder;
        if (!rem.is_zero() && !out.witness) out.witness = std::make_pair(monos[i], monos[j]);
      }
    }
  }
  return out;
}

}  // namespace bres
