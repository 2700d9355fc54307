#include <sstream>

#include "bres_io.hpp"

namespace bres::io {

namespace {

void m2_matrix(std::ostream& os, const std::string& name, const SparseMatrix& m) {
  os << name << " = matrix(R, {\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "  {";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto p = m.at(r, c);
      os << (c ? ", " : "") << (p.is_zero() ? "0" : p.to_string());
    }
    os << "}" << (r + 1 < m.rows() ? "," : "") << '\n';
  }
  os << "});\n";
}

}  // namespace

std::string macaulay2_script(const BresinskyInstance& inst) {
  const auto& ring = *inst.ring();
  auto gens = generators(inst);
  auto priority = ring.order().lex_priority();
  std::ostringstream os;

  os << "-- Bresinsky curve q2 = " << inst.q2() << ", n = (";
  for (std::size_t i = 0; i < inst.n().size(); ++i) os << (i ? ", " : "") << inst.n()[i];
  os << ")\n";
  os << "R = QQ[";
  for (std::size_t i = 0; i < priority.size(); ++i) os << (i ? ", " : "") << ring.name(priority[i]);
  os << ", MonomialOrder => Lex];\n";

  os << "I = ideal(\n";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    os << "  " << gens.polys[i].to_string() << (i + 1 < gens.size() ? "," : "") << "  -- " << gens.names[i] << '\n';
  }
  os << ");\n\n";

  os << "-- the ideal is the kernel of x_i -> t^n_i\n";
  os << "T = QQ[t];\n";
  os << "phi = map(T, R, {";
  for (std::size_t i = 0; i < priority.size(); ++i) os << (i ? ", " : "") << "t^" << inst.n()[priority[i]];
  os << "});\n";
  os << "assert(ker phi == I);\n\n";

  GbOptions opts;
  opts.grading = inst.grading();
  auto gb = buchberger(gens.polys, opts).polynomials();
  os << "-- the generators are a Groebner basis\n";
  os << "assert(ideal leadTerm gens gb I == ideal leadTerm gens I);\n";
  os << "assert(ideal leadTerm gens gb I == ideal(";
  for (std::size_t i = 0; i < gb.size(); ++i) {
    os << (i ? ", " : "") << format_monomial(gb[i].lead_monomial(), ring);
  }
  os << "));\n\n";

  m2_matrix(os, "N", matrix_N(inst));
  m2_matrix(os, "P", matrix_P(inst));
  os << "assert(gens I * N == 0);\n";
  os << "assert(N * P == 0);\n\n";

  os << "C = res I;\n";
  os << "assert(length C == 3);\n";
  os << "assert(toList apply(0..3, i -> rank C_i) == {1, " << inst.num_generators() << ", "
     << inst.num_first_syzygies() << ", " << inst.num_second_syzygies() << "});\n";
  return os.str();
}

}  // namespace bres::io
