#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bres/groebner.hpp"
#include "bres/module.hpp"
#include "bres/semigroup.hpp"

namespace bres {

/// Bresinsky's curve for an even q2 >= 4:
/// q1 = q2 + 1, d1 = q2 - 1 and n = (q1 q2, q1 d1, q1 q2 + d1, q2 d1).
class BresinskyInstance {
 public:
  explicit BresinskyInstance(std::int64_t q2);

  std::int64_t q2() const { return q2_; }
  std::int64_t q1() const { return q2_ + 1; }
  std::int64_t d1() const { return q2_ - 1; }
  const SemigroupData& semigroup() const { return sg_; }
  const std::vector<std::int64_t>& n() const { return sg_.n(); }

  // k[x1..x4] with x3 > x2 > x1 > x4.
  const RingPtr& ring() const { return ring_; }
  // Weights n_i on the variables.
  Grading grading() const;

  std::size_t num_generators() const { return static_cast<std::size_t>(2 * q2_); }
  std::size_t num_first_syzygies() const { return static_cast<std::size_t>(4 * (q2_ - 1)); }
  std::size_t num_second_syzygies() const { return static_cast<std::size_t>(2 * q2_ - 3); }

 private:
  std::int64_t q2_;
  SemigroupData sg_;
  RingPtr ring_;
};

BresinskyInstance make_instance(std::int64_t q2);

/// (f_1..f_q2, g_1, g_2, h_1..h_{q2-2}) in that order.
struct GeneratorSet {
  std::vector<Polynomial> polys;
  std::vector<std::string> names;

  std::size_t size() const { return polys.size(); }
  // 0-based position of "f3", "g1", "h2", ...
  std::size_t index_of(const std::string& name) const;
};

GeneratorSet generators(const BresinskyInstance& inst);

struct FamilyVector {
  std::string name;  // e.g. "beta_3", "gamma_1_4"
  // Generator pair (0-based) whose S-polynomial produced the tuple; unset for
  // second syzygies.
  std::size_t first = 0;
  std::size_t second = 0;
  ModuleVector vec;
};

struct SyzygyFamily {
  std::string label;  // "T1".."T17", "H1", "H2", "H3-zeta", "H3-eta", "H4"
  std::vector<FamilyVector> vectors;
};

struct SyzygyFamilyTable {
  std::vector<SyzygyFamily> families;
  // Entries where the literal closed form is inconsistent and a
  // self-consistent reading is used instead.
  std::vector<std::string> corrections;

  const SyzygyFamily& family(const std::string& label) const;
  std::size_t total() const;
};

SyzygyFamilyTable closed_form_first_syzygies(const BresinskyInstance& inst);

// T1, T4, T7, T9, T10, T11, T13, T14 in that order.
std::vector<ModuleVector> minimal_first_syzygy_subset(const SyzygyFamilyTable& table);

SyzygyFamilyTable closed_form_second_syzygies(const BresinskyInstance& inst);

// 2q2 x 4(q2-1); columns beta | gamma' | alpha' | beta'_m | alpha | -gamma | beta' | gamma'.
SparseMatrix matrix_N(const BresinskyInstance& inst);
std::vector<std::string> matrix_N_labels(const BresinskyInstance& inst);
// 4(q2-1) x (2q2-3); columns delta | xi | zeta | eta | kappa.
SparseMatrix matrix_P(const BresinskyInstance& inst);
std::vector<std::string> matrix_P_labels(const BresinskyInstance& inst);

}  // namespace bres
