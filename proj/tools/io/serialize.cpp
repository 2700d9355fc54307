#include <sstream>

#include "bres/errors.hpp"
#include "bres_io.hpp"

namespace bres::io {

using nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json generators_json(const std::vector<std::string>& names, const std::vector<Polynomial>& polys) {
  auto arr = ordered_json::array();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    arr.push_back({{"name", names[i]}, {"polynomial", polys[i].to_string()}});
  }
  return arr;
}

void csv_matrix(std::ostream& os, const std::string& name, const SparseMatrix& m) {
  for (const auto& e : m.entries()) {
    os << name << ',' << e.row + 1 << ',' << e.col + 1 << ',' << e.value.to_string() << '\n';
  }
}

void text_matrix(std::ostream& os, const std::string& name, const SparseMatrix& m) {
  os << name << " (" << m.rows() << " x " << m.cols() << ")\n";
  for (std::size_t j = 0; j < m.cols(); ++j) {
    os << "  column " << j + 1 << ":";
    for (const auto& [r, p] : m.column(j).entries()) os << "  [" << r + 1 << "] " << p.to_string();
    os << '\n';
  }
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  if (s == "text") return Format::kText;
  throw DomainError("unknown format '" + s + "' (expected json, csv or text)");
}

ordered_json matrix_json(const SparseMatrix& m) {
  auto entries = ordered_json::array();
  for (const auto& e : m.entries()) entries.push_back({e.row + 1, e.col + 1, e.value.to_string()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

std::string render_generate(const BresinskyInstance& inst, Format f) {
  auto gens = generators(inst);
  auto N = matrix_N(inst);
  auto P = matrix_P(inst);
  std::ostringstream os;
  switch (f) {
    case Format::kJson: {
      ordered_json j;
      j["q2"] = inst.q2();
      j["n"] = inst.n();
      j["generators"] = generators_json(gens.names, gens.polys);
      j["matrices"] = {{"N", matrix_json(N)}, {"P", matrix_json(P)}};
      os << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv: {
      os << "matrix,row,col,polynomial\n";
      for (std::size_t i = 0; i < gens.size(); ++i) os << "S,1," << i + 1 << ',' << gens.polys[i].to_string() << '\n';
      csv_matrix(os, "N", N);
      csv_matrix(os, "P", P);
      break;
    }
    case Format::kText: {
      os << "q2 = " << inst.q2() << ", q1 = " << inst.q1() << ", d1 = " << inst.d1() << '\n';
      os << "n = (" << join(inst.n()) << ")\n";
      os << gens.size() << " generators:\n";
      for (std::size_t i = 0; i < gens.size(); ++i) os << "  " << gens.names[i] << " = " << gens.polys[i].to_string() << '\n';
      text_matrix(os, "N", N);
      text_matrix(os, "P", P);
      break;
    }
  }
  return os.str();
}

std::string render_report(const ResolutionReport& r, Format f, bool timings) {
  std::ostringstream os;
  switch (f) {
    case Format::kJson: {
      ordered_json j;
      j["q2"] = r.q2;
      j["n"] = r.n;
      j["generators"] = generators_json(r.generator_names, r.generators);
      j["matrices"] = ordered_json::object();
      if (r.N) j["matrices"]["N"] = matrix_json(*r.N);
      if (r.P) j["matrices"]["P"] = matrix_json(*r.P);
      j["betti"] = r.betti;
      j["betti_certified"] = r.betti_certified;
      j["checks"] = ordered_json::object();
      for (const auto& [name, c] : r.checks) {
        ordered_json cj{{"status", to_string(c.status)}};
        if (!c.witness.empty()) cj["witness"] = c.witness;
        j["checks"][name] = cj;
      }
      j["discrepancies"] = ordered_json::array();
      for (const auto& d : r.discrepancies) {
        j["discrepancies"].push_back({{"kind", d.kind}, {"family", d.family}, {"vector", d.vector}, {"detail", d.detail}});
      }
      if (timings) {
        j["timings"] = ordered_json::object();
        for (const auto& [k, v] : r.timings) j["timings"][k] = v;
      }
      os << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv: {
      os << "check,status,witness\n";
      for (const auto& [name, c] : r.checks) {
        os << name << ',' << to_string(c.status) << ',' << csv_field(c.witness) << '\n';
      }
      if (timings) {
        for (const auto& [k, v] : r.timings) os << "time:" << k << ",seconds," << v << '\n';
      }
      break;
    }
    case Format::kText: {
      os << "q2 = " << r.q2 << ", n = (" << join(r.n) << ")\n";
      os << "betti = (" << join(r.betti) << ")" << (r.betti_certified ? " certified" : " not certified") << '\n';
      for (const auto& [name, c] : r.checks) {
        os << "  " << name << ": " << to_string(c.status);
        if (!c.witness.empty()) os << " (" << c.witness << ")";
        os << '\n';
      }
      if (!r.discrepancies.empty()) {
        os << r.discrepancies.size() << " closed-form notes:\n";
        for (const auto& d : r.discrepancies) {
          os << "  " << d.kind;
          if (!d.family.empty()) os << ' ' << d.family;
          if (!d.vector.empty()) os << ' ' << d.vector;
          os << ": " << d.detail << '\n';
        }
      }
      if (timings) {
        for (const auto& [k, v] : r.timings) os << "  time " << k << ": " << v << " s\n";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace bres::io
