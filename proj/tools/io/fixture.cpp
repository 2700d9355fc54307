#include <fstream>

#include "bres/errors.hpp"
#include "bres_io.hpp"

namespace bres::io {

SparseMatrix matrix_from_json(const nlohmann::json& j, const RingPtr& ring) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw DomainError("matrix needs rows, cols and entries");
  }
  auto rows = j.at("rows").get<std::size_t>();
  auto cols = j.at("cols").get<std::size_t>();
  SparseMatrix m(ring, rows, cols);
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw DomainError("matrix entry must be [row, col, polynomial]");
    auto r = e[0].get<std::size_t>();
    auto c = e[1].get<std::size_t>();
    if (r < 1 || r > rows || c < 1 || c > cols) {
      throw DomainError("matrix entry (" + std::to_string(r) + ", " + std::to_string(c) + ") out of range");
    }
    m.set(r - 1, c - 1, m.at(r - 1, c - 1) + parse_polynomial(ring, e[2].get<std::string>()));
  }
  return m;
}

VerifyInput parse_fixture(const nlohmann::json& j, const BresinskyInstance& inst) {
  if (!j.is_object()) throw DomainError("fixture must be a JSON object");
  const auto& ring = inst.ring();
  VerifyInput in;
  try {
    if (j.contains("q2") && j.at("q2").get<std::int64_t>() != inst.q2()) {
      throw DomainError("fixture is for q2 = " + std::to_string(j.at("q2").get<std::int64_t>()));
    }
    if (j.contains("generators")) {
      std::vector<Polynomial> polys;
      std::vector<std::string> names;
      for (const auto& g : j.at("generators")) {
        if (g.is_string()) {
          polys.push_back(parse_polynomial(ring, g.get<std::string>()));
        } else {
          polys.push_back(parse_polynomial(ring, g.at("polynomial").get<std::string>()));
          if (g.contains("name")) names.push_back(g.at("name").get<std::string>());
        }
      }
      in.generators = std::move(polys);
      if (names.size() == in.generators->size()) in.generator_names = std::move(names);
    }
    if (j.contains("matrices")) {
      const auto& m = j.at("matrices");
      if (m.contains("N")) in.N = matrix_from_json(m.at("N"), ring);
      if (m.contains("P")) in.P = matrix_from_json(m.at("P"), ring);
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed fixture: ") + e.what());
  }
  return in;
}

VerifyInput load_fixture(const std::string& path, const BresinskyInstance& inst) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot open fixture " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("fixture " + path + " is not valid JSON: " + e.what());
  }
  return parse_fixture(j, inst);
}

}  // namespace bres::io
