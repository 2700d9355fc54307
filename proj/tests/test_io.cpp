#include <doctest.h>

#include "bres/errors.hpp"
#include "bres_io.hpp"

using namespace bres;
using nlohmann::json;

TEST_CASE("generate json") {
  auto inst = make_instance(4);
  auto j = json::parse(io::render_generate(inst, io::Format::kJson));
  CHECK(j["q2"] == 4);
  CHECK(j["n"] == json::array({20, 15, 23, 12}));
  REQUIRE(j["generators"].size() == 8);
  CHECK(j["generators"][0]["name"] == "f1");
  CHECK(j["generators"][0]["polynomial"] == "x3^3 - x2^3*x4^2");
  CHECK(j["matrices"]["N"]["rows"] == 8);
  CHECK(j["matrices"]["N"]["cols"] == 12);
  CHECK(j["matrices"]["P"]["cols"] == 5);
  // beta_1 = (-x1, x3, 0, 0, 0, x2^2 x4^2, 0, 0), one-based
  CHECK(j["matrices"]["N"]["entries"][0] == json::array({1, 1, "-x1"}));
  CHECK(j["matrices"]["N"]["entries"][1] == json::array({2, 1, "x3"}));
  CHECK(j["matrices"]["N"]["entries"][2] == json::array({6, 1, "x2^2*x4^2"}));
}

TEST_CASE("outputs are byte-stable") {
  auto inst = make_instance(6);
  for (auto f : {io::Format::kJson, io::Format::kCsv, io::Format::kText}) {
    CHECK(io::render_generate(inst, f) == io::render_generate(inst, f));
    auto a = verify(inst);
    auto b = verify(inst);
    CHECK(io::render_report(a, f) == io::render_report(b, f));
  }
  CHECK(io::macaulay2_script(inst) == io::macaulay2_script(inst));
}

TEST_CASE("report json schema") {
  auto r = verify(make_instance(4));
  auto j = json::parse(io::render_report(r, io::Format::kJson));
  for (const char* key : {"q2", "n", "generators", "matrices", "betti", "checks", "discrepancies"}) {
    CHECK(j.contains(key));
  }
  CHECK_FALSE(j.contains("timings"));
  CHECK(j["betti"] == json::array({8, 12, 5}));
  CHECK(j["betti_certified"] == true);
  CHECK(j["checks"]["NP_is_zero"]["status"] == "pass");
  CHECK(j["matrices"].contains("N"));
  auto t = json::parse(io::render_report(r, io::Format::kJson, true));
  CHECK(t["timings"].contains("resolution"));
}

TEST_CASE("csv triples") {
  auto out = io::render_generate(make_instance(4), io::Format::kCsv);
  CHECK(out.rfind("matrix,row,col,polynomial\n", 0) == 0);
  CHECK(out.find("N,1,1,-x1\n") != std::string::npos);
  CHECK(out.find("N,6,1,x2^2*x4^2\n") != std::string::npos);
  CHECK(out.find("S,1,6,x3*x4 - x1*x2\n") != std::string::npos);
  auto rep = io::render_report(verify(make_instance(4)), io::Format::kCsv);
  CHECK(rep.find("NP_is_zero,pass,\n") != std::string::npos);
}

TEST_CASE("text listing") {
  auto out = io::render_generate(make_instance(6), io::Format::kText);
  CHECK(out.find("12 generators:") != std::string::npos);
  CHECK(out.find("n = (42, 35, 47, 30)") != std::string::npos);
}

TEST_CASE("generate output round-trips as a fixture") {
  auto inst = make_instance(4);
  auto j = json::parse(io::render_generate(inst, io::Format::kJson));
  auto in = io::parse_fixture(j, inst);
  REQUIRE(in.generators);
  CHECK(*in.generators == generators(inst).polys);
  CHECK(*in.generator_names == generators(inst).names);
  CHECK(in.N->columns() == matrix_N(inst).columns());
  CHECK(in.P->columns() == matrix_P(inst).columns());
}

TEST_CASE("malformed fixtures") {
  auto inst = make_instance(4);
  CHECK_THROWS_AS(io::parse_fixture(json::array(), inst), DomainError);
  CHECK_THROWS_AS(io::parse_fixture(json{{"q2", 6}}, inst), DomainError);
  CHECK_THROWS_AS(io::parse_fixture(json{{"generators", {"x1 +"}}}, inst), DomainError);
  json bad_entry = {{"matrices", {{"P", {{"rows", 2}, {"cols", 2}, {"entries", {{3, 1, "x1"}}}}}}}};
  CHECK_THROWS_AS(io::parse_fixture(bad_entry, inst), DomainError);
  json missing = {{"matrices", {{"N", {{"rows", 2}}}}}};
  CHECK_THROWS_AS(io::parse_fixture(missing, inst), DomainError);
  CHECK_THROWS_AS(io::load_fixture("/nonexistent/fixture.json", inst), DomainError);
  CHECK_THROWS_AS(io::parse_format("xml"), DomainError);
}

TEST_CASE("Macaulay2 script") {
  auto s4 = io::macaulay2_script(make_instance(4));
  CHECK(s4.find("R = QQ[x3, x2, x1, x4, MonomialOrder => Lex];") != std::string::npos);
  CHECK(s4.find("phi = map(T, R, {t^23, t^15, t^20, t^12});") != std::string::npos);
  CHECK(s4.find("assert(toList apply(0..3, i -> rank C_i) == {1, 8, 12, 5});") != std::string::npos);
  CHECK(s4.find("x3*x4 - x1*x2,  -- g2") != std::string::npos);
  auto s6 = io::macaulay2_script(make_instance(6));
  CHECK(s6.find("{1, 12, 20, 9}") != std::string::npos);
}
