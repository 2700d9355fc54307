#include "bres/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "bres/errors.hpp"

namespace bres {

// ---------------------------------------------------------------------------
// Orders and gradings

ModuleOrder ModuleOrder::position_over_term(const MonomialOrder& base) {
  ModuleOrder o(base);
  o.strategy_ = Strategy::kPositionOverTerm;
  return o;
}

ModuleOrder ModuleOrder::term_over_position(const MonomialOrder& base) {
  ModuleOrder o(base);
  o.strategy_ = Strategy::kTermOverPosition;
  return o;
}

ModuleOrder ModuleOrder::schreyer(const ModuleOrder& parent, std::vector<std::pair<Monomial, std::size_t>> leads) {
  ModuleOrder o(parent.base_);
  o.strategy_ = Strategy::kSchreyer;
  o.parent_ = std::make_shared<const ModuleOrder>(parent);
  for (auto& [m, c] : leads) {
    o.lead_monos_.push_back(m);
    o.lead_comps_.push_back(c);
  }
  return o;
}

ModuleOrder ModuleOrder::schreyer(std::span<const Polynomial> basis) {
  if (basis.empty()) throw DomainError("Schreyer order of an empty basis");
  std::vector<std::pair<Monomial, std::size_t>> leads;
  for (const auto& g : basis) leads.emplace_back(g.lead_monomial(), 0);
  return schreyer(position_over_term(basis.front().ring()->order()), std::move(leads));
}

ModuleOrder ModuleOrder::schreyer(const ModuleOrder& row_order, const SparseMatrix& m) {
  std::vector<std::pair<Monomial, std::size_t>> leads;
  for (const auto& col : m.columns()) {
    if (col.is_zero()) throw DomainError("Schreyer order induced by a zero column");
    leads.push_back(lead_term(col, row_order));
  }
  return schreyer(row_order, std::move(leads));
}

std::strong_ordering ModuleOrder::compare(const Monomial& a, std::size_t ca, const Monomial& b,
                                          std::size_t cb) const {
  switch (strategy_) {
    case Strategy::kPositionOverTerm:
      if (ca != cb) return cb <=> ca;
      return base_.compare(a, b);
    case Strategy::kTermOverPosition: {
      auto c = base_.compare(a, b);
      if (c != 0) return c;
      return cb <=> ca;
    }
    case Strategy::kSchreyer: {
      if (ca >= lead_monos_.size() || cb >= lead_monos_.size()) {
        throw ArityError("component outside the Schreyer order's rank");
      }
      auto c = parent_->compare(a * lead_monos_[ca], lead_comps_[ca], b * lead_monos_[cb], lead_comps_[cb]);
      if (c != 0) return c;
      return cb <=> ca;
    }
  }
  return std::strong_ordering::equal;
}

Grading Grading::standard(std::size_t nvars) { return Grading{std::vector<std::int64_t>(nvars, 1), {}}; }

std::int64_t Grading::degree(const Monomial& m, std::size_t comp) const {
  std::int64_t d = evaluate_eta(m, var_weights);
  if (comp < comp_degrees.size()) d += comp_degrees[comp];
  return d;
}

bool Grading::positive() const {
  return std::all_of(var_weights.begin(), var_weights.end(), [](auto w) { return w > 0; });
}

std::optional<std::int64_t> homogeneous_degree(const Polynomial& p, const Grading& g) {
  if (p.is_zero()) return std::nullopt;
  std::int64_t d = g.degree(p.lead_monomial());
  for (const auto& t : p.terms()) {
    if (g.degree(t.mono) != d) return std::nullopt;
  }
  return d;
}

std::optional<std::int64_t> homogeneous_degree(const ModuleVector& v, const Grading& g) {
  std::optional<std::int64_t> d;
  for (const auto& [c, p] : v.entries()) {
    for (const auto& t : p.terms()) {
      auto dt = g.degree(t.mono, c);
      if (!d) d = dt;
      if (*d != dt) return std::nullopt;
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Conversions

ModuleElement to_element(const ModuleVector& v, const ModuleOrder& ord) {
  ModuleElement e;
  for (const auto& [c, p] : v.entries()) {
    for (const auto& t : p.terms()) e.push_back(ModuleTerm{t.coeff, t.mono, c});
  }
  std::sort(e.begin(), e.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
    return ord.compare(a.mono, a.comp, b.mono, b.comp) > 0;
  });
  return e;
}

ModuleElement to_element(const Polynomial& p) {
  ModuleElement e;
  e.reserve(p.size());
  for (const auto& t : p.terms()) e.push_back(ModuleTerm{t.coeff, t.mono, 0});
  return e;
}

ModuleVector to_vector(const ModuleElement& e, const RingPtr& ring, std::size_t rank) {
  std::map<std::size_t, std::vector<Term>> by_comp;
  for (const auto& t : e) by_comp[t.comp].push_back(Term{t.coeff, t.mono});
  ModuleVector v(ring, rank);
  for (auto& [c, terms] : by_comp) v.set(c, Polynomial(ring, std::move(terms)));
  return v;
}

Polynomial to_polynomial(const ModuleElement& e, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(e.size());
  for (const auto& t : e) {
    if (t.comp != 0) throw ArityError("module element is not a polynomial");
    terms.push_back(Term{t.coeff, t.mono});
  }
  return Polynomial(ring, std::move(terms));
}

std::pair<Monomial, std::size_t> lead_term(const ModuleVector& v, const ModuleOrder& ord) {
  if (v.is_zero()) throw DomainError("leading term of the zero vector");
  std::pair<Monomial, std::size_t> out;
  bool have = false;
  for (const auto& [c, p] : v.entries()) {
    const auto& m = p.lead_monomial();
    if (!have || ord.compare(m, c, out.first, out.second) > 0) {
      out = {m, c};
      have = true;
    }
  }
  return out;
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& e : elements) out.push_back(to_polynomial(e, ring));
  return out;
}

std::vector<ModuleVector> GroebnerBasis::vectors() const {
  std::vector<ModuleVector> out;
  for (const auto& e : elements) out.push_back(to_vector(e, ring, rank));
  return out;
}

// ---------------------------------------------------------------------------
// Engine

namespace {

struct Step {
  std::size_t index;
  Coeff coeff;
  Monomial mono;
};

struct Reduction {
  ModuleElement remainder;
  std::vector<Step> steps;
};

class Engine {
 public:
  explicit Engine(const ModuleOrder& ord) : ord_(ord) {}

  const ModuleOrder& order() const { return ord_; }

  int cmp(const ModuleTerm& a, const ModuleTerm& b) const {
    auto c = ord_.compare(a.mono, a.comp, b.mono, b.comp);
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
  }

  static ModuleElement times(const ModuleElement& e, const Coeff& c, const Monomial& m) {
    ModuleElement out;
    out.reserve(e.size());
    for (const auto& t : e) out.push_back(ModuleTerm{t.coeff * c, t.mono * m, t.comp});
    return out;
  }

  // a[from..] - c*m*b
  ModuleElement sub_multiple(const ModuleElement& a, std::size_t from, const Coeff& c, const Monomial& m,
                             const ModuleElement& b) const {
    ModuleElement out;
    out.reserve(a.size() - from + b.size());
    std::size_t i = from;
    std::size_t j = 0;
    ModuleTerm bt;
    auto scaled_b = [&](std::size_t k) {
      return ModuleTerm{-(b[k].coeff * c), b[k].mono * m, b[k].comp};
    };
    while (i < a.size() && j < b.size()) {
      bt = scaled_b(j);
      int s = cmp(a[i], bt);
      if (s > 0) {
        out.push_back(a[i++]);
      } else if (s < 0) {
        out.push_back(std::move(bt));
        ++j;
      } else {
        Coeff sum = a[i].coeff + bt.coeff;
        if (sgn(sum) != 0) out.push_back(ModuleTerm{std::move(sum), a[i].mono, a[i].comp});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(scaled_b(j));
    return out;
  }

  // Reduce p by basis[use[...]] with the first-divisor rule. With `full`,
  // every term is reduced; otherwise only the leading term.
  Reduction reduce(ModuleElement p, std::span<const ModuleElement> basis, std::span<const std::size_t> use,
                   bool full, bool record) const {
    Reduction out;
    std::size_t start = 0;
    while (start < p.size()) {
      const ModuleTerm& t = p[start];
      std::size_t hit = basis.size();
      for (auto idx : use) {
        const ModuleTerm& lt = basis[idx].front();
        if (lt.comp == t.comp && lt.mono.divides(t.mono)) {
          hit = idx;
          break;
        }
      }
      if (hit == basis.size()) {
        if (!full) {
          out.remainder.insert(out.remainder.end(), p.begin() + static_cast<std::ptrdiff_t>(start), p.end());
          return out;
        }
        out.remainder.push_back(t);
        ++start;
        continue;
      }
      const ModuleTerm& lt = basis[hit].front();
      Coeff c = t.coeff / lt.coeff;
      Monomial m = t.mono.quotient(lt.mono);
      if (record) out.steps.push_back(Step{hit, c, m});
      p = sub_multiple(p, start, c, m, basis[hit]);
      start = 0;
    }
    return out;
  }

  Reduction reduce_all(ModuleElement p, std::span<const ModuleElement> basis, bool record) const {
    std::vector<std::size_t> use(basis.size());
    std::iota(use.begin(), use.end(), std::size_t{0});
    return reduce(std::move(p), basis, use, true, record);
  }

 private:
  const ModuleOrder& ord_;
};

std::optional<std::int64_t> element_degree(const ModuleElement& e, const Grading& g) {
  if (e.empty()) return std::nullopt;
  std::int64_t d = g.degree(e.front().mono, e.front().comp);
  for (const auto& t : e) {
    if (g.degree(t.mono, t.comp) != d) return std::nullopt;
  }
  return d;
}

ModuleVector monomial_vector(const RingPtr& ring, std::size_t rank, std::size_t comp, const Coeff& c,
                             const Monomial& m) {
  ModuleVector v(ring, rank);
  v.set(comp, Polynomial::monomial(ring, m, c));
  return v;
}

// rep - sum over steps of c*m*reps[index]
void subtract_steps(ModuleVector& rep, const std::vector<Step>& steps, const std::vector<ModuleVector>& reps,
                    const RingPtr& ring) {
  for (const auto& s : steps) rep -= reps[s.index].scaled(Polynomial::monomial(ring, s.mono, s.coeff));
}

struct Basis {
  std::vector<ModuleElement> elems;
  std::vector<ModuleVector> reps;
};

void make_monic(ModuleElement& e, ModuleVector* rep) {
  Coeff inv = 1 / e.front().coeff;
  if (inv == 1) return;
  for (auto& t : e) t.coeff *= inv;
  if (rep) *rep = rep->scaled(inv);
}

// Drop elements with a divisible leading term, interreduce, make monic and
// sort by decreasing leading term.
void finalize(const Engine& eng, Basis& b, bool track, const RingPtr& ring) {
  const auto n = b.elems.size();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& li = b.elems[i].front();
    bool drop = false;
    for (std::size_t j = 0; j < n && !drop; ++j) {
      if (j == i) continue;
      const auto& lj = b.elems[j].front();
      if (lj.comp == li.comp && lj.mono.divides(li.mono) && (!(lj.mono == li.mono) || j < i)) drop = true;
    }
    if (!drop) keep.push_back(i);
  }
  Basis out;
  for (auto i : keep) {
    std::vector<std::size_t> others;
    for (auto j : keep) {
      if (j != i) others.push_back(j);
    }
    auto red = eng.reduce(b.elems[i], b.elems, others, true, track);
    ModuleVector rep = track ? b.reps[i] : ModuleVector(ring, 0);
    if (track) subtract_steps(rep, red.steps, b.reps, ring);
    make_monic(red.remainder, track ? &rep : nullptr);
    out.elems.push_back(std::move(red.remainder));
    if (track) out.reps.push_back(std::move(rep));
  }
  std::vector<std::size_t> perm(out.elems.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t c) { return eng.cmp(out.elems[a].front(), out.elems[c].front()) > 0; });
  Basis sorted;
  for (auto p : perm) {
    sorted.elems.push_back(std::move(out.elems[p]));
    if (track) sorted.reps.push_back(std::move(out.reps[p]));
  }
  b = std::move(sorted);
}

GroebnerBasis run_buchberger(std::vector<ModuleElement> inputs, const RingPtr& ring, std::size_t rank,
                             const ModuleOrder& ord, const GbOptions& opts) {
  Engine eng(ord);
  const std::size_t ninputs = inputs.size();
  const bool ideal = rank == 1;
  const bool track = opts.track;

  bool truncate = opts.degree_bound.has_value() && opts.grading && opts.grading->positive();
  if (truncate) {
    for (const auto& e : inputs) {
      if (!e.empty() && !element_degree(e, *opts.grading)) truncate = false;
    }
  }

  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::size_t comp;
    std::int64_t deg;
  };
  auto before = [&ord](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    auto c = ord.compare(a.lcm, a.comp, b.lcm, b.comp);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::set<Pair, decltype(before)> queue(before);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  Basis b;

  auto add_pairs = [&](std::size_t k) {
    const auto& lk = b.elems[k].front();
    for (std::size_t i = 0; i < k; ++i) {
      const auto& li = b.elems[i].front();
      if (li.comp != lk.comp) continue;
      if (ideal && opts.criteria && li.mono.coprime(lk.mono)) continue;
      Monomial l = lcm(li.mono, lk.mono);
      std::int64_t deg = opts.grading ? opts.grading->degree(l, lk.comp) : 0;
      if (truncate && deg > *opts.degree_bound) continue;
      queue.insert(Pair{i, k, l, lk.comp, deg});
      pending.insert({i, k});
    }
  };

  auto insert = [&](ModuleElement e, ModuleVector rep) {
    make_monic(e, track ? &rep : nullptr);
    b.elems.push_back(std::move(e));
    if (track) b.reps.push_back(std::move(rep));
    add_pairs(b.elems.size() - 1);
  };

  for (std::size_t j = 0; j < ninputs; ++j) {
    if (inputs[j].empty()) continue;
    ModuleVector rep(ring, track ? ninputs : 0);
    if (track) rep.set(j, Polynomial::constant(ring, 1));
    insert(std::move(inputs[j]), std::move(rep));
  }

  auto chain = [&](const Pair& p) {
    for (std::size_t k = 0; k < b.elems.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      const auto& lk = b.elems[k].front();
      if (lk.comp != p.comp || !lk.mono.divides(p.lcm)) continue;
      if (pending.count(std::minmax(p.i, k)) || pending.count(std::minmax(p.j, k))) continue;
      return true;
    }
    return false;
  };

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});
    if (opts.criteria && chain(p)) continue;

    Monomial mi = p.lcm.quotient(b.elems[p.i].front().mono);
    Monomial mj = p.lcm.quotient(b.elems[p.j].front().mono);
    ModuleElement s = eng.sub_multiple(Engine::times(b.elems[p.i], 1, mi), 0, 1, mj, b.elems[p.j]);
    auto red = eng.reduce_all(std::move(s), b.elems, track);
    if (red.remainder.empty()) continue;

    ModuleVector rep(ring, track ? ninputs : 0);
    if (track) {
      rep = b.reps[p.i].scaled(Polynomial::monomial(ring, mi)) - b.reps[p.j].scaled(Polynomial::monomial(ring, mj));
      subtract_steps(rep, red.steps, b.reps, ring);
    }
    insert(std::move(red.remainder), std::move(rep));
  }

  if (opts.reduce) finalize(eng, b, track, ring);

  GroebnerBasis gb{ring, ord, rank, opts.reduce, std::move(b.elems), {}};
  if (track) gb.representations = std::move(b.reps);
  return gb;
}

const RingPtr& common_ring(std::span<const Polynomial> polys) {
  if (polys.empty()) throw DomainError("empty polynomial list");
  const auto& ring = polys.front().ring();
  for (const auto& p : polys) {
    if (p.ring()->nvars() != ring->nvars()) throw ArityError("polynomials from rings of different arity");
    if (!(p.ring()->order() == ring->order())) throw DomainError("polynomials sorted under different orders");
  }
  return ring;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> input, const GbOptions& opts) {
  const auto& ring = common_ring(input);
  std::vector<ModuleElement> elems;
  for (const auto& p : input) elems.push_back(to_element(p));
  return run_buchberger(std::move(elems), ring, 1, ModuleOrder::position_over_term(ring->order()), opts);
}

GroebnerBasis module_buchberger(std::span<const ModuleVector> input, const ModuleOrder& ord, const GbOptions& opts) {
  if (input.empty()) throw DomainError("module_buchberger needs at least one vector");
  const auto& ring = input.front().ring();
  const auto rank = input.front().rank();
  std::vector<ModuleElement> elems;
  for (const auto& v : input) {
    if (v.rank() != rank) throw ArityError("vectors from free modules of different rank");
    elems.push_back(to_element(v, ord));
  }
  return run_buchberger(std::move(elems), ring, rank, ord, opts);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.rank != 1) throw ArityError("polynomial normal form against a module basis");
  Engine eng(gb.order);
  return to_polynomial(eng.reduce_all(to_element(f), gb.elements, false).remainder, f.ring());
}

ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& gb) {
  if (v.rank() != gb.rank) throw ArityError("vector rank does not match the basis");
  Engine eng(gb.order);
  return to_vector(eng.reduce_all(to_element(v, gb.order), gb.elements, false).remainder, v.ring(), v.rank());
}

GbCheck gb_check(std::span<const Polynomial> basis) {
  GbCheck out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto d = divide(spoly(basis[i], basis[j]), basis);
      if (!d.remainder.is_zero()) {
        out.pass = false;
        out.first = i;
        out.second = j;
        out.remainder = std::move(d.remainder);
        return out;
      }
    }
  }
  return out;
}

std::vector<SchreyerRecord> schreyer_syzygies(std::span<const Polynomial> basis) {
  std::vector<SchreyerRecord> out;
  if (basis.empty()) return out;
  const auto& ring = common_ring(basis);
  const auto n = basis.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& gi = basis[i];
      const auto& gj = basis[j];
      ModuleVector v(ring, n);
      bool koszul = gi.lead_monomial().coprime(gj.lead_monomial());
      if (koszul) {
        Coeff k = 1 / (gi.lead_coeff() * gj.lead_coeff());
        v.add_to(i, gj.scaled(k));
        v.add_to(j, -gi.scaled(k));
      } else {
        Monomial l = lcm(gi.lead_monomial(), gj.lead_monomial());
        auto d = divide(spoly(gi, gj), basis);
        if (!d.remainder.is_zero()) {
          throw NotGroebnerError("S-polynomial of generators " + std::to_string(i + 1) + " and " +
                                 std::to_string(j + 1) + " leaves remainder " + d.remainder.to_string());
        }
        v.add_to(i, Polynomial::monomial(ring, l.quotient(gi.lead_monomial()), 1 / gi.lead_coeff()));
        v.add_to(j, Polynomial::monomial(ring, l.quotient(gj.lead_monomial()), -1 / gj.lead_coeff()));
        for (std::size_t q = 0; q < n; ++q) v.add_to(q, -d.quotients[q]);
      }
      out.push_back(SchreyerRecord{i, j, koszul, std::move(v)});
    }
  }
  return out;
}

std::vector<ModuleVector> kernel(const SparseMatrix& m, const ModuleOrder& row_order,
                                 const std::optional<Grading>& row_grading) {
  const auto& ring = m.ring();
  const auto k = m.cols();
  std::vector<ModuleVector> out;
  auto push = [&](ModuleVector v) {
    if (v.is_zero()) return;
    for (const auto& w : out) {
      if (w == v || w == -v) return;
    }
    out.push_back(std::move(v));
  };

  std::vector<ModuleElement> cols;
  bool any = false;
  for (std::size_t j = 0; j < k; ++j) {
    cols.push_back(to_element(m.column(j), row_order));
    if (cols.back().empty()) {
      push(monomial_vector(ring, k, j, 1, Monomial(ring->nvars())));
    } else {
      any = true;
    }
  }
  if (!any) return out;

  GbOptions opts;
  opts.track = true;
  opts.grading = row_grading;
  auto gb = run_buchberger(cols, ring, m.rows(), row_order, opts);
  Engine eng(row_order);
  const auto& g = gb.elements;
  const auto& reps = gb.representations;

  // Schreyer syzygies of the basis, pulled back to the columns.
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t c = a + 1; c < g.size(); ++c) {
      if (g[a].front().comp != g[c].front().comp) continue;
      Monomial l = lcm(g[a].front().mono, g[c].front().mono);
      Monomial ma = l.quotient(g[a].front().mono);
      Monomial mc = l.quotient(g[c].front().mono);
      ModuleElement s = eng.sub_multiple(Engine::times(g[a], 1, ma), 0, 1, mc, g[c]);
      auto red = eng.reduce_all(std::move(s), g, true);
      if (!red.remainder.empty()) throw NotGroebnerError("kernel: module basis is not Groebner");
      ModuleVector v = reps[a].scaled(Polynomial::monomial(ring, ma)) - reps[c].scaled(Polynomial::monomial(ring, mc));
      subtract_steps(v, red.steps, reps, ring);
      push(std::move(v));
    }
  }
  // Each column rewritten through the basis.
  for (std::size_t j = 0; j < k; ++j) {
    if (cols[j].empty()) continue;
    auto red = eng.reduce_all(cols[j], g, true);
    if (!red.remainder.empty()) throw NotGroebnerError("kernel: column does not reduce to zero");
    ModuleVector v = monomial_vector(ring, k, j, 1, Monomial(ring->nvars()));
    subtract_steps(v, red.steps, reps, ring);
    push(std::move(v));
  }
  return out;
}

bool in_submodule(const ModuleVector& v, std::span<const ModuleVector> gens, const ModuleOrder& ord,
                  const std::optional<Grading>& grading) {
  if (v.is_zero()) return true;
  std::vector<ModuleVector> use;
  GbOptions opts;
  opts.reduce = false;
  opts.grading = grading;
  std::optional<std::int64_t> dv;
  if (grading && grading->positive()) dv = homogeneous_degree(v, *grading);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (dv) {
      auto dg = homogeneous_degree(g, *grading);
      if (!dg) {
        dv.reset();
        use.assign(gens.begin(), gens.end());
        break;
      }
      if (*dg > *dv) continue;
    }
    use.push_back(g);
  }
  if (use.empty()) return false;
  if (dv) opts.degree_bound = dv;
  auto gb = module_buchberger(use, ord, opts);
  return normal_form(v, gb).is_zero();
}

Minimality minimal_generation_check(std::span<const ModuleVector> vectors, const ModuleOrder& ord,
                                    const std::optional<Grading>& grading) {
  Minimality out;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    std::vector<ModuleVector> others;
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      if (j != i) others.push_back(vectors[j]);
    }
    if (in_submodule(vectors[i], others, ord, grading)) {
      out.minimal = false;
      out.redundant = i;
      return out;
    }
  }
  return out;
}

Minimality minimal_generation_check(std::span<const Polynomial> polys, const std::optional<Grading>& grading) {
  if (polys.empty()) return {};
  const auto& ring = common_ring(polys);
  std::vector<ModuleVector> vs;
  for (const auto& p : polys) {
    ModuleVector v(ring, 1);
    v.set(0, p);
    vs.push_back(std::move(v));
  }
  return minimal_generation_check(vs, ModuleOrder::position_over_term(ring->order()), grading);
}

std::vector<ModuleVector> minimize_generators(std::span<const ModuleVector> vectors, const ModuleOrder& ord,
                                              const std::optional<Grading>& grading) {
  std::vector<std::size_t> idx(vectors.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (grading) {
    std::vector<std::int64_t> deg(vectors.size(), 0);
    for (std::size_t i = 0; i < vectors.size(); ++i) deg[i] = homogeneous_degree(vectors[i], *grading).value_or(0);
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return deg[a] < deg[b]; });
  }
  std::vector<ModuleVector> kept;
  for (auto i : idx) {
    if (vectors[i].is_zero()) continue;
    if (!kept.empty() && in_submodule(vectors[i], kept, ord, grading)) continue;
    kept.push_back(vectors[i]);
  }
  return kept;
}

std::vector<Polynomial> reduce_basis(std::span<const Polynomial> gb) {
  if (gb.empty()) return {};
  const auto& ring = common_ring(gb);
  auto ord = ModuleOrder::position_over_term(ring->order());
  Engine eng(ord);
  Basis b;
  for (const auto& p : gb) {
    if (!p.is_zero()) b.elems.push_back(to_element(p));
  }
  finalize(eng, b, false, ring);
  std::vector<Polynomial> out;
  for (const auto& e : b.elems) out.push_back(to_polynomial(e, ring));
  return out;
}

}  // namespace bres
