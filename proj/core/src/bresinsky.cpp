#include "bres/bresinsky.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>

#include "bres/errors.hpp"

namespace bres {

namespace {

using I = std::int64_t;

std::vector<I> bresinsky_weights(I q2) {
  if (q2 < 4 || q2 % 2 != 0) {
    throw ParameterError("q2 must be an even integer >= 4, got " + std::to_string(q2));
  }
  const I q1 = q2 + 1;
  const I d1 = q2 - 1;
  return {q1 * q2, q1 * d1, q1 * q2 + d1, q2 * d1};
}

// Builds tuples addressed by 1-based positions, as the closed forms are.
class Tuples {
 public:
  Tuples(RingPtr ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}

  Polynomial x(I a1, I a2, I a3, I a4, int sign = 1) const {
    return Polynomial::monomial(ring_, Monomial{a1, a2, a3, a4}, sign);
  }

  // sum_{j=0}^{k-1} (x3 x4)^{k-1-j} (x1 x2)^j
  Polynomial chain(I k) const {
    Polynomial s(ring_);
    for (I j = 0; j < k; ++j) s += x(j, j, k - 1 - j, k - 1 - j);
    return s;
  }

  ModuleVector make(std::initializer_list<std::pair<I, Polynomial>> entries) const {
    ModuleVector v(ring_, rank_);
    for (const auto& [pos, p] : entries) {
      if (pos < 1 || static_cast<std::size_t>(pos) > rank_) {
        throw ArityError("tuple position " + std::to_string(pos) + " outside 1.." + std::to_string(rank_));
      }
      v.add_to(static_cast<std::size_t>(pos - 1), p);
    }
    return v;
  }

  const RingPtr& ring() const { return ring_; }

 private:
  RingPtr ring_;
  std::size_t rank_;
};

std::string idx(I a) { return std::to_string(a); }
std::string idx(I a, I b) { return std::to_string(a) + "_" + std::to_string(b); }

}  // namespace

BresinskyInstance::BresinskyInstance(I q2)
    : q2_(q2), sg_(bresinsky_weights(q2)), ring_(Ring::curve()) {
  const auto& n = sg_.n();
  if (n[0] + n[1] != n[2] + n[3]) throw ParameterError("n1 + n2 != n3 + n4");
}

BresinskyInstance make_instance(I q2) { return BresinskyInstance(q2); }

Grading BresinskyInstance::grading() const { return Grading{n(), {}}; }

std::size_t GeneratorSet::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw DomainError("no generator named " + name);
  return static_cast<std::size_t>(it - names.begin());
}

GeneratorSet generators(const BresinskyInstance& inst) {
  const I q2 = inst.q2();
  const I q1 = inst.q1();
  const auto& R = inst.ring();
  GeneratorSet s;
  for (I mu = 1; mu <= q2; ++mu) {
    s.polys.push_back(Polynomial::binomial(R, Monomial{mu - 1, 0, q2 - mu, 0}, Monomial{0, q2 - mu, 0, mu + 1}));
    s.names.push_back("f" + idx(mu));
  }
  s.polys.push_back(Polynomial::binomial(R, Monomial{inst.d1(), 0, 0, 0}, Monomial{0, q2, 0, 0}));
  s.names.push_back("g1");
  s.polys.push_back(Polynomial::binomial(R, Monomial{0, 0, 1, 1}, Monomial{1, 1, 0, 0}));
  s.names.push_back("g2");
  for (I m = 1; m <= q2 - 2; ++m) {
    s.polys.push_back(Polynomial::binomial(R, Monomial{m, 0, 0, q1 - m}, Monomial{0, q2 - m, m, 0}));
    s.names.push_back("h" + idx(m));
  }
  return s;
}

const SyzygyFamily& SyzygyFamilyTable::family(const std::string& label) const {
  for (const auto& f : families) {
    if (f.label == label) return f;
  }
  throw DomainError("no syzygy family " + label);
}

std::size_t SyzygyFamilyTable::total() const {
  std::size_t n = 0;
  for (const auto& f : families) n += f.vectors.size();
  return n;
}

SyzygyFamilyTable closed_form_first_syzygies(const BresinskyInstance& inst) {
  const I q2 = inst.q2();
  Tuples t(inst.ring(), inst.num_generators());
  // 1-based generator positions and their 0-based indices.
  const I G1 = q2 + 1;
  const I G2 = q2 + 2;
  auto H = [q2](I m) { return q2 + 2 + m; };
  auto z = [](I pos) { return static_cast<std::size_t>(pos - 1); };

  SyzygyFamilyTable table;
  auto add = [&](const std::string& label) -> SyzygyFamily& {
    table.families.push_back(SyzygyFamily{label, {}});
    return table.families.back();
  };
  auto push = [&](SyzygyFamily& fam, std::string name, I a, I b, ModuleVector v) {
    fam.vectors.push_back(FamilyVector{std::move(name), z(a), z(b), std::move(v)});
  };

  // S(f_mu, f_mu+1)
  auto& t1 = add("T1");
  for (I mu = 1; mu <= q2 - 1; ++mu) {
    push(t1, "beta_" + idx(mu), mu, mu + 1,
         t.make({{mu, t.x(1, 0, 0, 0, -1)},
                 {mu + 1, t.x(0, 0, 1, 0)},
                 {G2, t.x(0, q2 - mu - 1, 0, mu + 1)}}));
  }
  // S(f_mu, f_mu'), mu' >= mu + 2
  auto& t2 = add("T2");
  for (I mu = 1; mu <= q2 - 2; ++mu) {
    for (I mp = mu + 2; mp <= q2; ++mp) {
      const I k = mp - mu;
      push(t2, "gamma_" + idx(mu, mp), mu, mp,
           t.make({{mu, t.x(k, 0, 0, 0, -1)},
                   {mp, t.x(0, 0, k, 0)},
                   {G2, t.x(0, q2 - mp, 0, mu + 1) * t.chain(k)}}));
    }
  }
  // S(f_mu, g1), Koszul
  auto& t3 = add("T3");
  for (I mu = 1; mu <= q2 - 1; ++mu) {
    push(t3, "gamma_" + idx(mu), mu, G1,
         t.make({{mu, t.x(q2 - 1, 0, 0, 0) + t.x(0, q2, 0, 0, -1)},
                 {G1, t.x(0, q2 - mu, 0, mu + 1) + t.x(mu - 1, 0, q2 - mu, 0, -1)}}));
  }
  // S(f_mu, g2)
  auto& t4 = add("T4");
  for (I mu = 1; mu <= q2 - 1; ++mu) {
    push(t4, "alpha_" + idx(mu), mu, G2,
         t.make({{mu, t.x(0, 0, 0, 1, -1)},
                 {mu + 1, t.x(0, 1, 0, 0)},
                 {G2, t.x(mu - 1, 0, q2 - mu - 1, 0)}}));
  }
  // S(f_q2, g2), Koszul
  auto& t5 = add("T5");
  push(t5, "alpha", q2, G2,
       t.make({{q2, t.x(1, 1, 0, 0) + t.x(0, 0, 1, 1, -1)},
               {G2, t.x(q2 - 1, 0, 0, 0) + t.x(0, 0, 0, q2 + 1, -1)}}));
  // S(g1, g2), Koszul
  auto& t6 = add("T6");
  push(t6, "beta", G1, G2,
       t.make({{G1, t.x(0, 0, 1, 1) + t.x(1, 1, 0, 0, -1)},
               {G2, t.x(0, q2, 0, 0) + t.x(q2 - 1, 0, 0, 0, -1)}}));
  // S(g1, h1)
  auto& t7 = add("T7");
  push(t7, "gamma", G1, H(1),
       t.make({{q2 - 1, t.x(1, 0, 0, 0, -1)}, {G1, t.x(0, 0, 1, 0)}, {H(1), t.x(0, 1, 0, 0, -1)}}));
  // S(g1, h_m), 1 < m <= q2 - 2
  auto& t8 = add("T8");
  for (I m = 2; m <= q2 - 2; ++m) {
    push(t8, "alpha'_" + idx(m), G1, H(m),
         t.make({{q2 - m, t.x(m, 0, 0, 0, -1)}, {G1, t.x(0, 0, m, 0)}, {H(m), t.x(0, m, 0, 0, -1)}}));
  }
  table.corrections.push_back(
      "T8: the x3^m entry is placed at g1 (position q2+1), as the S-pair (g1, h_m) and the listed support "
      "{q2-m, q2+1, q2+2+m} require; the uncorrected form indexes it at q2+2");
  // S(g2, h1)
  auto& t9 = add("T9");
  push(t9, "alpha'", G2, H(1),
       t.make({{q2, t.x(1, 0, 0, 0, -1)},
               {G1, t.x(1, 0, 0, 0)},
               {G2, t.x(0, q2 - 1, 0, 0, -1)},
               {H(1), t.x(0, 0, 0, 1, -1)}}));
  // S(g2, h_m), 1 < m <= q2 - 2
  auto& t10 = add("T10");
  for (I m = 2; m <= q2 - 2; ++m) {
    push(t10, "beta'_" + idx(m), G2, H(m),
         t.make({{G2, t.x(0, q2 - m, m - 1, 0)}, {H(m - 1), t.x(1, 0, 0, 0, -1)}, {H(m), t.x(0, 0, 0, 1)}}));
  }
  // S(h_m, h_m+1)
  auto& t11 = add("T11");
  for (I m = 1; m <= q2 - 3; ++m) {
    push(t11, "gamma'_" + idx(m), H(m), H(m + 1),
         t.make({{G2, t.x(m, 0, 0, q2 - m, -1)}, {H(m), t.x(0, 0, 1, 0)}, {H(m + 1), t.x(0, 1, 0, 0, -1)}}));
  }
  // S(h_m, h_m'), m' >= m + 2
  auto& t12 = add("T12");
  for (I m = 1; m <= q2 - 4; ++m) {
    for (I mp = m + 2; mp <= q2 - 2; ++mp) {
      const I k = mp - m;
      push(t12, "alpha'_" + idx(m, mp), H(m), H(mp),
           t.make({{H(m), t.x(0, 0, k, 0)},
                   {H(mp), t.x(0, k, 0, 0, -1)},
                   {G2, -(t.x(m, 0, 0, q2 + 1 - mp) * t.chain(k))}}));
    }
  }
  table.corrections.push_back(
      "T12: entries placed at h_m and h_m' (positions q2+2+m, q2+2+m'), the g2 entry negated and the chain "
      "sum taken up to (x1x2)^(m'-m-1); the uncorrected form addresses positions m and m'");
  // S(f1, h_{q2-2})
  auto& t13 = add("T13");
  push(t13, "beta'", 1, H(q2 - 2),
       t.make({{1, t.x(0, 2, 0, 0, -1)},
               {G1, t.x(0, 1, 0, 2)},
               {G2, t.x(q2 - 2, 0, 0, 2)},
               {H(q2 - 2), t.x(0, 0, 1, 0, -1)}}));
  // S(f2, h_{q2-2})
  auto& t14 = add("T14");
  push(t14, "gamma'", 2, H(q2 - 2),
       t.make({{2, t.x(0, 2, 0, 0, -1)}, {G1, t.x(0, 0, 0, 3)}, {H(q2 - 2), t.x(1, 0, 0, 0, -1)}}));
  // S(f_mu, h_m), mu + m < q2, excluding (1, q2-2)
  auto& t15 = add("T15");
  for (I mu = 1; mu <= q2 - 1; ++mu) {
    for (I m = 1; m <= q2 - 2 && mu + m < q2; ++m) {
      if (mu == 1 && m == q2 - 2) continue;
      push(t15, "beta'_" + idx(mu, m), mu, H(m),
           t.make({{mu, t.x(0, q2 - m, 0, 0, -1)},
                   {mu + m, t.x(0, 0, 0, q2 + 1 - m)},
                   {q2, t.x(0, q2 - m - mu, 0, mu + 1, -1)},
                   {G1, t.x(0, q2 - m - mu, 0, mu + 1)},
                   {H(m), t.x(mu - 1, 0, q2 - mu - m, 0, -1)}}));
    }
  }
  // S(f_mu, h_m), mu + m = q2, excluding (2, q2-2)
  auto& t16 = add("T16");
  for (I mu = 1; mu <= q2 - 1; ++mu) {
    const I m = q2 - mu;
    if (m < 1 || m > q2 - 2 || (mu == 2 && m == q2 - 2)) continue;
    push(t16, "gamma'_" + idx(mu, m), mu, H(m),
         t.make({{mu, t.x(0, q2 - m, 0, 0, -1)}, {G1, t.x(0, 0, 0, mu + 1)}, {H(m), t.x(mu - 1, 0, 0, 0, -1)}}));
  }
  // S(f_mu, h_m), mu + m > q2
  auto& t17 = add("T17");
  for (I mu = 1; mu <= q2 - 1; ++mu) {
    for (I m = 1; m <= q2 - 2; ++m) {
      if (mu + m <= q2) continue;
      push(t17, "alpha''_" + idx(mu, m), mu, H(m),
           t.make({{mu, t.x(0, q2 - m, mu + m - q2, 0, -1)},
                   {q2, t.x(mu + m - q2, 0, 0, q2 + 1 - m)},
                   {H(mu + m - q2), t.x(0, 0, 0, mu + 1)},
                   {H(m), t.x(mu - 1, 0, 0, 0, -1)}}));
    }
  }
  table.corrections.push_back(
      "T17: index range taken from the case condition mu + m > q2 (1 <= mu <= q2-1, 1 <= m <= q2-2); the "
      "uncorrected form repeats the range 1 <= m < q2 - mu");
  return table;
}

std::vector<ModuleVector> minimal_first_syzygy_subset(const SyzygyFamilyTable& table) {
  std::vector<ModuleVector> out;
  for (const char* label : {"T1", "T4", "T7", "T9", "T10", "T11", "T13", "T14"}) {
    for (const auto& fv : table.family(label).vectors) out.push_back(fv.vec);
  }
  return out;
}

namespace {

struct Column {
  std::string label;
  ModuleVector vec;
};

std::vector<Column> n_columns(const BresinskyInstance& inst) {
  auto table = closed_form_first_syzygies(inst);
  std::vector<Column> cols;
  auto take = [&](const char* label) {
    for (const auto& fv : table.family(label).vectors) cols.push_back(Column{fv.name, fv.vec});
  };
  take("T1");
  take("T11");
  take("T9");
  take("T10");
  take("T4");
  for (const auto& fv : table.family("T7").vectors) cols.push_back(Column{"-" + fv.name, -fv.vec});
  take("T13");
  take("T14");
  return cols;
}

}  // namespace

SparseMatrix matrix_N(const BresinskyInstance& inst) {
  std::vector<ModuleVector> cols;
  for (auto& c : n_columns(inst)) cols.push_back(std::move(c.vec));
  return SparseMatrix::from_columns(inst.ring(), inst.num_generators(), std::move(cols));
}

std::vector<std::string> matrix_N_labels(const BresinskyInstance& inst) {
  std::vector<std::string> out;
  for (auto& c : n_columns(inst)) out.push_back(std::move(c.label));
  return out;
}

SyzygyFamilyTable closed_form_second_syzygies(const BresinskyInstance& inst) {
  const I q2 = inst.q2();
  Tuples t(inst.ring(), inst.num_first_syzygies());
  SyzygyFamilyTable table;
  auto add = [&](const std::string& label) -> SyzygyFamily& {
    table.families.push_back(SyzygyFamily{label, {}});
    return table.families.back();
  };
  auto push = [](SyzygyFamily& fam, std::string name, ModuleVector v) {
    fam.vectors.push_back(FamilyVector{std::move(name), 0, 0, std::move(v)});
  };

  auto& h1 = add("H1");
  for (I mu = 1; mu <= q2 - 2; ++mu) {
    push(h1, "delta_" + idx(mu),
         t.make({{mu, t.x(0, 0, 0, 1)},
                 {mu + 1, t.x(0, 1, 0, 0, -1)},
                 {3 * q2 - 6 + mu, t.x(1, 0, 0, 0, -1)},
                 {3 * q2 - 5 + mu, t.x(0, 0, 1, 0)}}));
  }
  auto& h2 = add("H2");
  push(h2, "xi",
       t.make({{1, t.x(0, 2, 0, 0)},
               {2 * q2 - 3, t.x(0, 1, 0, 2)},
               {4 * q2 - 7, t.x(1, 0, 0, 2)},
               {4 * q2 - 6, t.x(0, 0, 0, 3)},
               {4 * q2 - 5, t.x(1, 0, 0, 0, -1)},
               {4 * q2 - 4, t.x(0, 0, 1, 0)}}));
  auto& h3 = add("H3-zeta");
  push(h3, "zeta",
       t.make({{q2 - 1, t.x(1, 0, 0, 0)},
               {q2, t.x(0, 0, 0, 1)},
               {2 * q2 - 3, t.x(0, 0, 1, 0)},
               {2 * q2 - 2, t.x(0, 1, 0, 0)},
               {4 * q2 - 6, t.x(1, 0, 0, 0)}}));
  auto& h3b = add("H3-eta");
  push(h3b, "eta",
       t.make({{2 * q2 - 4, t.x(1, 0, 0, 0, -1)},
               {3 * q2 - 6, t.x(0, 0, 1, 0, -1)},
               {3 * q2 - 5, t.x(0, 2, 0, 0)},
               {4 * q2 - 5, t.x(0, 0, 0, 1, -1)},
               {4 * q2 - 4, t.x(0, 1, 0, 0)}}));
  auto& h4 = add("H4");
  for (I mu = 1; mu <= q2 - 4; ++mu) {
    push(h4, "kappa_" + idx(mu),
         t.make({{q2 - 1 + mu, t.x(1, 0, 0, 0, -1)},
                 {q2 + mu, t.x(0, 0, 0, 1)},
                 {2 * q2 - 3 + mu, t.x(0, 0, 1, 0, -1)},
                 {2 * q2 - 2 + mu, t.x(0, 1, 0, 0)}}));
  }
  table.corrections.push_back(
      "H: the zeta and eta sets share the label H3 and the kappa entries carry eta symbols in the uncorrected "
      "form; they are kept as five separate sets H1, H2, H3-zeta, H3-eta, H4");
  return table;
}

SparseMatrix matrix_P(const BresinskyInstance& inst) {
  auto table = closed_form_second_syzygies(inst);
  std::vector<ModuleVector> cols;
  for (const auto& fam : table.families) {
    for (const auto& fv : fam.vectors) cols.push_back(fv.vec);
  }
  return SparseMatrix::from_columns(inst.ring(), inst.num_first_syzygies(), std::move(cols));
}

std::vector<std::string> matrix_P_labels(const BresinskyInstance& inst) {
  std::vector<std::string> out;
  for (const auto& fam : closed_form_second_syzygies(inst).families) {
    for (const auto& fv : fam.vectors) out.push_back(fv.name);
  }
  return out;
}

}  // namespace bres
