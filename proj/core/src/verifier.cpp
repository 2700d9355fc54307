#include "bres/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "bres/errors.hpp"
#include "bres/toric.hpp"

namespace bres {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult pass() { return CheckResult{CheckStatus::kPass, ""}; }
CheckResult fail(std::string witness) { return CheckResult{CheckStatus::kFail, std::move(witness)}; }
CheckResult not_run(std::string why) { return CheckResult{CheckStatus::kNotRun, std::move(why)}; }

std::string format_vector(const ModuleVector& v) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [c, p] : v.entries()) {
    os << (first ? "" : ", ") << c + 1 << ": " << p.to_string();
    first = false;
  }
  os << "]";
  return os.str();
}

std::string pair_name(const std::vector<std::string>& names, std::size_t i, std::size_t j) {
  return "(" + names[i] + ", " + names[j] + ")";
}

std::vector<ModuleVector> nonzero_columns(const SparseMatrix& m) {
  std::vector<ModuleVector> out;
  for (const auto& c : m.columns()) {
    if (!c.is_zero()) out.push_back(c);
  }
  return out;
}

std::optional<std::int64_t> max_degree(std::span<const ModuleVector> vs, const Grading& g) {
  std::optional<std::int64_t> out;
  if (!g.positive()) return out;
  for (const auto& v : vs) {
    auto d = homogeneous_degree(v, g);
    if (!d) return std::nullopt;
    out = std::max(out.value_or(*d), *d);
  }
  return out;
}

GroebnerBasis span_basis(std::span<const ModuleVector> gens, const ModuleOrder& ord, const Grading& g,
                         std::optional<std::int64_t> bound) {
  GbOptions opts;
  opts.reduce = false;
  opts.grading = g;
  opts.degree_bound = bound;
  return module_buchberger(gens, ord, opts);
}

}  // namespace

std::string to_string(Stage s) {
  switch (s) {
    case Stage::kGenerate: return "generate";
    case Stage::kGb: return "gb";
    case Stage::kOracle: return "oracle";
    case Stage::kSyzygies: return "syzygies";
    case Stage::kResolution: return "resolution";
  }
  return "";
}

std::optional<Stage> parse_stage(const std::string& name) {
  for (auto s : all_stages()) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::set<Stage> all_stages() {
  return {Stage::kGenerate, Stage::kGb, Stage::kOracle, Stage::kSyzygies, Stage::kResolution};
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kNotRun: return "not-run";
  }
  return "";
}

const CheckResult* ResolutionReport::check(const std::string& name) const {
  for (const auto& [k, v] : checks) {
    if (k == name) return &v;
  }
  return nullptr;
}

bool ResolutionReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const auto& c) { return c.second.status == CheckStatus::kFail; });
}

bool euler_check(std::span<const std::int64_t> betti) {
  if (betti.size() != 3) throw DomainError("euler_check expects (beta1, beta2, beta3)");
  return 1 - betti[0] + betti[1] - betti[2] == 0;
}

Verifier::Verifier(const BresinskyInstance& inst, VerifyConfig cfg, VerifyInput input)
    : inst_(inst),
      cfg_(std::move(cfg)),
      canonical_generators_(!input.generators.has_value()) {
  report_.q2 = inst.q2();
  report_.n = inst.n();
  auto gens = generators(inst);
  if (input.generators) {
    report_.generators = std::move(*input.generators);
    if (input.generator_names && input.generator_names->size() == report_.generators.size()) {
      report_.generator_names = std::move(*input.generator_names);
    } else {
      for (std::size_t i = 0; i < report_.generators.size(); ++i) {
        report_.generator_names.push_back("s" + std::to_string(i + 1));
      }
    }
  } else {
    report_.generators = gens.polys;
    report_.generator_names = gens.names;
  }
  report_.N = input.N ? std::move(*input.N) : matrix_N(inst);
  report_.P = input.P ? std::move(*input.P) : matrix_P(inst);
  report_.betti = {static_cast<std::int64_t>(report_.generators.size()),
                   static_cast<std::int64_t>(report_.N->cols()), static_cast<std::int64_t>(report_.P->cols())};
}

void Verifier::set(const std::string& name, CheckResult r) {
  for (auto& [k, v] : report_.checks) {
    if (k == name) {
      v = std::move(r);
      return;
    }
  }
  report_.checks.emplace_back(name, std::move(r));
}

bool Verifier::heavy_allowed() const { return oracle_allowed(inst_.q2(), cfg_.allow_large_oracle); }

CheckResult Verifier::refused() const {
  return not_run("q2 = " + std::to_string(inst_.q2()) + " exceeds the oracle limit " +
                 std::to_string(oracle_max_q2()) + "; use --allow-large-oracle or BRES_ORACLE_MAX_Q2");
}

bool Verifier::s_is_gb() {
  if (!gb_) gb_ = !report_.generators.empty() && gb_check(report_.generators).pass;
  return *gb_;
}

const ModuleOrder& Verifier::first_order() {
  if (!mord1_) mord1_ = ModuleOrder::schreyer(report_.generators);
  return *mord1_;
}

const Grading& Verifier::first_grading() {
  if (!grading1_) {
    Grading g = inst_.grading();
    Grading base = g;
    for (const auto& p : report_.generators) g.comp_degrees.push_back(homogeneous_degree(p, base).value_or(0));
    grading1_ = std::move(g);
  }
  return *grading1_;
}

std::optional<ModuleOrder> Verifier::second_order(std::string* error) {
  try {
    return ModuleOrder::schreyer(first_order(), *report_.N);
  } catch (const DomainError& e) {
    if (error) *error = e.what();
    return std::nullopt;
  }
}

std::optional<Grading> Verifier::second_grading() {
  Grading g = first_grading();
  g.comp_degrees.clear();
  for (const auto& c : report_.N->columns()) {
    auto d = homogeneous_degree(c, first_grading());
    if (!d) return std::nullopt;
    g.comp_degrees.push_back(*d);
  }
  return g;
}

void Verifier::verify_generators() {
  const auto q2 = inst_.q2();
  const auto& S = report_.generators;
  const auto& N = *report_.N;
  const auto& P = *report_.P;

  std::string card;
  if (S.size() != static_cast<std::size_t>(2 * q2)) {
    card = "|S| = " + std::to_string(S.size()) + ", expected " + std::to_string(2 * q2);
  } else if (N.rows() != S.size() || N.cols() != inst_.num_first_syzygies()) {
    card = "N is " + std::to_string(N.rows()) + "x" + std::to_string(N.cols()) + ", expected " +
           std::to_string(S.size()) + "x" + std::to_string(inst_.num_first_syzygies());
  } else if (P.rows() != N.cols() || P.cols() != inst_.num_second_syzygies()) {
    card = "P is " + std::to_string(P.rows()) + "x" + std::to_string(P.cols()) + ", expected " +
           std::to_string(N.cols()) + "x" + std::to_string(inst_.num_second_syzygies());
  }
  set("family_cardinalities", card.empty() ? pass() : fail(card));

  auto homogeneity = [&]() -> CheckResult {
    const Grading base = inst_.grading();
    for (std::size_t i = 0; i < S.size(); ++i) {
      if (!homogeneous_degree(S[i], base)) return fail("generator " + report_.generator_names[i] + " is not homogeneous");
    }
    const Grading& g1 = first_grading();
    for (std::size_t j = 0; j < N.cols(); ++j) {
      if (N.column(j).rank() == S.size() && !N.column(j).is_zero() && !homogeneous_degree(N.column(j), g1)) {
        return fail("column " + std::to_string(j + 1) + " of N is not homogeneous");
      }
    }
    if (N.rows() == S.size()) {
      auto g2 = second_grading();
      if (!g2) return fail("a column of N has no degree");
      for (std::size_t j = 0; j < P.cols(); ++j) {
        if (P.column(j).rank() == N.cols() && !P.column(j).is_zero() && !homogeneous_degree(P.column(j), *g2)) {
          return fail("column " + std::to_string(j + 1) + " of P is not homogeneous");
        }
      }
    }
    if (canonical_generators_) {
      for (const auto& fam : closed_form_first_syzygies(inst_).families) {
        for (const auto& fv : fam.vectors) {
          if (!homogeneous_degree(fv.vec, g1)) return fail(fam.label + " " + fv.name + " is not homogeneous");
        }
      }
    }
    return pass();
  };
  set("weight_homogeneous", homogeneity());

  if (!heavy_allowed()) {
    set("S_is_minimal", refused());
  } else {
    auto m = minimal_generation_check(S, inst_.grading());
    set("S_is_minimal", m.minimal ? pass()
                                  : fail(report_.generator_names[*m.redundant] +
                                         " lies in the ideal generated by the other generators"));
  }
}

void Verifier::verify_gb() {
  const auto& S = report_.generators;
  if (S.empty()) {
    set("S_is_GB", fail("empty generator list"));
    return;
  }
  auto c = gb_check(S);
  gb_ = c.pass;
  if (c.pass) {
    set("S_is_GB", pass());
  } else {
    set("S_is_GB", fail("S-polynomial of " + pair_name(report_.generator_names, c.first, c.second) +
                        " leaves remainder " + c.remainder->to_string()));
  }
}

void Verifier::verify_oracle() {
  if (!heavy_allowed()) {
    set("generators_match_oracle", refused());
    return;
  }
  const auto& S = report_.generators;
  if (S.empty()) {
    set("generators_match_oracle", fail("empty generator list"));
    return;
  }
  auto t0 = Clock::now();
  auto oracle = toric_ideal_elimination(inst_.semigroup(), inst_.ring()->order());
  report_.timings.emplace_back("oracle_elimination", std::chrono::duration<double>(Clock::now() - t0).count());
  std::vector<Polynomial> want;
  for (const auto& p : oracle.gb) want.push_back(p.in_ring(inst_.ring()));

  GbOptions opts;
  opts.grading = inst_.grading();
  auto gbS = buchberger(S, opts);
  if (gbS.polynomials() == want) {
    set("generators_match_oracle", pass());
    return;
  }
  auto canon = generators(inst_);
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < canon.size(); ++i) {
    if (!normal_form(canon.polys[i], gbS).is_zero()) missing.push_back(canon.names[i]);
  }
  if (!missing.empty()) {
    std::string w;
    for (const auto& m : missing) w += (w.empty() ? "" : ", ") + m;
    set("generators_match_oracle", fail("not in the ideal generated by the input: " + w));
    return;
  }
  std::vector<Polynomial> oracle_polys(want.begin(), want.end());
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (!divide(S[i], oracle_polys).remainder.is_zero()) {
      set("generators_match_oracle", fail(report_.generator_names[i] + " = " + S[i].to_string() +
                                              " is not in the toric ideal"));
      return;
    }
  }
  for (const auto& p : want) {
    if (!normal_form(p, gbS).is_zero()) {
      set("generators_match_oracle", fail("oracle element " + p.to_string() + " is not in the input ideal"));
      return;
    }
  }
  set("generators_match_oracle", fail("reduced Groebner bases differ"));
}

void Verifier::verify_first_syzygies() {
  auto canon = generators(inst_);
  auto table = closed_form_first_syzygies(inst_);
  auto second = closed_form_second_syzygies(inst_);
  for (const auto* t : {&table, &second}) {
    for (const auto& c : t->corrections) {
      report_.discrepancies.push_back(Discrepancy{"correction", c.substr(0, c.find(':')), "", c.substr(c.find(':') + 2)});
    }
  }

  // Closed forms against the constructed generators and matrix N.
  {
    std::string witness;
    for (const auto& fam : table.families) {
      for (const auto& fv : fam.vectors) {
        auto d = fv.vec.dot(canon.polys);
        if (d.is_zero()) continue;
        report_.discrepancies.push_back(
            Discrepancy{"non-orthogonal", fam.label, fv.name, "S . v = " + d.to_string()});
        if (witness.empty()) witness = fam.label + " " + fv.name + ": S . v = " + d.to_string();
      }
    }
    auto N0 = matrix_N(inst_);
    for (const auto& fam : second.families) {
      for (const auto& fv : fam.vectors) {
        auto img = N0.apply(fv.vec);
        if (img.is_zero()) continue;
        report_.discrepancies.push_back(Discrepancy{"non-orthogonal", fam.label, fv.name, "N v = " + format_vector(img)});
        if (witness.empty()) witness = fam.label + " " + fv.name + ": N v = " + format_vector(img);
      }
    }
    set("closed_forms_orthogonal", witness.empty() ? pass() : fail(witness));
  }

  const std::vector<std::string> heavy{"closed_forms_match_engine", "schreyer_entries_nonconstant", "T_spans_syzygies",
                                       "T_is_minimal"};
  if (!heavy_allowed()) {
    for (const auto& h : heavy) set(h, refused());
    return;
  }
  if (!s_is_gb()) {
    for (const auto& h : heavy) set(h, not_run("generators are not a Groebner basis"));
    return;
  }

  const auto& S = report_.generators;
  const auto& names = report_.generator_names;
  const auto& N = *report_.N;
  const auto& mord = first_order();
  const auto& g1 = first_grading();
  auto records = schreyer_syzygies(S);
  std::vector<ModuleVector> record_vecs;
  for (const auto& r : records) record_vecs.push_back(r.syzygy);

  if (!canonical_generators_) {
    set("closed_forms_match_engine", not_run("closed forms refer to the constructed generators"));
  } else {
    auto span = span_basis(record_vecs, mord, g1, std::nullopt);
    std::string witness;
    std::map<std::pair<std::size_t, std::size_t>, const FamilyVector*> by_pair;
    std::map<const FamilyVector*, std::string> family_of;
    for (const auto& fam : table.families) {
      for (const auto& fv : fam.vectors) {
        by_pair[{fv.first, fv.second}] = &fv;
        family_of[&fv] = fam.label;
        if (witness.empty() && !normal_form(fv.vec, span).is_zero()) {
          witness = fam.label + " " + fv.name + " is not in the span of the engine's Schreyer records";
        }
      }
    }
    for (const auto& r : records) {
      auto it = by_pair.find({r.first, r.second});
      std::string pn = pair_name(names, r.first, r.second);
      if (it == by_pair.end()) {
        report_.discrepancies.push_back(Discrepancy{
            "missing", "", pn,
            r.koszul ? "no closed-form tuple; the engine record is the Koszul syzygy"
                     : "no closed-form tuple; engine record " + format_vector(r.syzygy)});
        continue;
      }
      const auto& v = it->second->vec;
      if (v == r.syzygy || v == -r.syzygy) continue;
      report_.discrepancies.push_back(Discrepancy{"mismatch", family_of[it->second], it->second->name + " " + pn,
                                                  "engine record " + format_vector(r.syzygy)});
    }
    set("closed_forms_match_engine", witness.empty() ? pass() : fail(witness));
  }

  {
    std::string witness;
    for (const auto& r : records) {
      for (const auto& [pos, c] : r.syzygy.entries()) {
        if (c.has_constant_term()) {
          witness = "Schreyer record of " + pair_name(names, r.first, r.second) + " has the constant entry " +
                    c.to_string() + " at position " + std::to_string(pos + 1);
          break;
        }
      }
      if (!witness.empty()) break;
    }
    set("schreyer_entries_nonconstant", witness.empty() ? pass() : fail(witness));
  }

  auto cols = nonzero_columns(N);
  {
    std::string witness;
    for (std::size_t j = 0; j < N.cols() && witness.empty(); ++j) {
      if (N.column(j).rank() != S.size()) {
        witness = "column " + std::to_string(j + 1) + " of N has the wrong length";
      } else if (auto d = N.column(j).dot(S); !d.is_zero()) {
        witness = "column " + std::to_string(j + 1) + " of N is not a syzygy: S . v = " + d.to_string();
      }
    }
    if (witness.empty() && cols.empty()) witness = "N has no nonzero columns";
    if (witness.empty()) {
      auto gb = span_basis(cols, mord, g1, max_degree(record_vecs, g1));
      for (const auto& r : records) {
        if (!normal_form(r.syzygy, gb).is_zero()) {
          witness = "Schreyer record of " + pair_name(names, r.first, r.second) + " " + format_vector(r.syzygy) +
                    " is not in the span of the columns of N";
          break;
        }
      }
    }
    set("T_spans_syzygies", witness.empty() ? pass() : fail(witness));
  }

  {
    if (cols.size() != N.cols()) {
      set("T_is_minimal", fail("N has a zero column"));
    } else {
      auto m = minimal_generation_check(N.columns(), mord, g1);
      set("T_is_minimal", m.minimal ? pass()
                                    : fail("column " + std::to_string(*m.redundant + 1) +
                                           " of N lies in the span of the other columns"));
    }
  }
}

void Verifier::verify_resolution() {
  const auto& N = *report_.N;
  const auto& P = *report_.P;

  if (N.cols() != P.rows()) {
    set("NP_is_zero", fail("N has " + std::to_string(N.cols()) + " columns but P has " +
                           std::to_string(P.rows()) + " rows"));
  } else {
    auto NP = N * P;
    auto entries = NP.entries();
    if (entries.empty()) {
      set("NP_is_zero", pass());
    } else {
      const auto& e = entries.front();
      set("NP_is_zero", fail("(N*P)[" + std::to_string(e.row + 1) + "," + std::to_string(e.col + 1) +
                             "] = " + e.value.to_string()));
    }
  }

  {
    std::string witness;
    for (const auto& [name, m] : {std::pair{"N", &N}, std::pair{"P", &P}}) {
      for (const auto& e : m->entries()) {
        if (e.value.has_constant_term()) {
          witness = std::string(name) + "[" + std::to_string(e.row + 1) + "," + std::to_string(e.col + 1) +
                    "] = " + e.value.to_string();
          break;
        }
      }
      if (!witness.empty()) break;
    }
    set("entries_in_maximal_ideal", witness.empty() ? pass() : fail(witness));
  }

  const std::vector<std::string> heavy{"ker_P_is_zero", "ker_N_equals_im_P", "H_is_minimal"};
  std::string bad;
  if (!heavy_allowed()) {
    for (const auto& h : heavy) set(h, refused());
  } else if (report_.generators.empty() || N.rows() != report_.generators.size() || N.cols() != P.rows()) {
    for (const auto& h : heavy) set(h, fail("matrix dimensions do not match"));
  } else if (auto mord2 = second_order(&bad); !mord2) {
    for (const auto& h : heavy) set(h, fail(bad));
  } else {
    const auto& mord1 = first_order();
    const auto& g1 = first_grading();
    auto g2 = second_grading();
    std::optional<Grading> g2_opt = g2;

    auto kp = kernel(P, *mord2, g2_opt);
    set("ker_P_is_zero", kp.empty() ? pass() : fail("P v = 0 for v = " + format_vector(kp.front())));

    auto kn = kernel(N, mord1, g1);
    std::string witness;
    auto pcols = nonzero_columns(P);
    if (pcols.empty()) {
      if (!kn.empty()) witness = "ker N contains " + format_vector(kn.front()) + " but P is zero";
    } else {
      Grading g = g2 ? *g2 : Grading{};
      auto gbP = g2 ? span_basis(pcols, *mord2, g, max_degree(kn, g)) : module_buchberger(pcols, *mord2);
      for (const auto& v : kn) {
        if (!normal_form(v, gbP).is_zero()) {
          witness = "kernel vector " + format_vector(v) + " of N is not in the image of P";
          break;
        }
      }
      if (witness.empty()) {
        if (kn.empty()) {
          witness = "ker N is zero but P is not";
        } else {
          auto gbK = g2 ? span_basis(kn, *mord2, g, max_degree(pcols, g)) : module_buchberger(kn, *mord2);
          for (std::size_t j = 0; j < P.cols(); ++j) {
            if (!normal_form(P.column(j), gbK).is_zero()) {
              witness = "column " + std::to_string(j + 1) + " of P is not in the kernel of N";
              break;
            }
          }
        }
      }
    }
    set("ker_N_equals_im_P", witness.empty() ? pass() : fail(witness));

    if (pcols.size() != P.cols()) {
      set("H_is_minimal", fail("P has a zero column"));
    } else {
      auto m = minimal_generation_check(P.columns(), *mord2, g2_opt);
      set("H_is_minimal", m.minimal ? pass()
                                    : fail("column " + std::to_string(*m.redundant + 1) +
                                           " of P lies in the span of the other columns"));
    }
  }

  const auto& b = report_.betti;
  set("euler_identity", euler_check(b) ? pass()
                                       : fail("1 - " + std::to_string(b[0]) + " + " + std::to_string(b[1]) + " - " +
                                              std::to_string(b[2]) + " = " +
                                              std::to_string(1 - b[0] + b[1] - b[2])));
}

void Verifier::finish_betti() {
  bool ok = true;
  for (const char* name : {"S_is_minimal", "generators_match_oracle", "T_spans_syzygies", "T_is_minimal",
                           "ker_N_equals_im_P", "ker_P_is_zero", "H_is_minimal"}) {
    const auto* c = report_.check(name);
    ok = ok && c && c->status == CheckStatus::kPass;
  }
  report_.betti_certified = ok;
}

ResolutionReport Verifier::run() {
  using Fn = void (Verifier::*)();
  const std::pair<Stage, Fn> order[] = {{Stage::kGenerate, &Verifier::verify_generators},
                                        {Stage::kGb, &Verifier::verify_gb},
                                        {Stage::kOracle, &Verifier::verify_oracle},
                                        {Stage::kSyzygies, &Verifier::verify_first_syzygies},
                                        {Stage::kResolution, &Verifier::verify_resolution}};
  for (const auto& [stage, fn] : order) {
    if (!cfg_.stages.count(stage)) continue;
    auto t0 = Clock::now();
    (this->*fn)();
    report_.timings.emplace_back(to_string(stage), std::chrono::duration<double>(Clock::now() - t0).count());
  }
  finish_betti();
  return report_;
}

ResolutionReport verify(const BresinskyInstance& inst, const VerifyConfig& cfg, const VerifyInput& input) {
  return Verifier(inst, cfg, input).run();
}

}  // namespace bres
