#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bres/errors.hpp"
#include "bres/toric.hpp"
#include "bres_io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::set<bres::Stage> parse_stages(const std::string& text) {
  if (text == "all") return bres::all_stages();
  std::set<bres::Stage> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all") return bres::all_stages();
    auto s = bres::parse_stage(item);
    if (!s) throw bres::DomainError("unknown stage '" + item + "' (expected generate, gb, oracle, syzygies, resolution or all)");
    out.insert(*s);
  }
  if (out.empty()) throw bres::DomainError("no stages given");
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw bres::DomainError("cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bresinsky curves: generators, syzygies and minimal free resolutions"};
  app.require_subcommand(1);

  std::int64_t q2 = 0;
  std::string format = "json";
  std::string out;
  std::string stages = "all";
  std::string fixture;
  bool allow_large = false;
  bool timings = false;

  auto* gen = app.add_subcommand("generate", "Print n, the generators S and the matrices N and P");
  gen->add_option("--q2", q2, "even integer >= 4")->required();
  gen->add_option("--format", format, "json, csv or text")->default_val("json");
  gen->add_option("--out", out, "output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "Run the verification stages and print a report");
  ver->add_option("--q2", q2, "even integer >= 4")->required();
  ver->add_option("--stages", stages, "comma list of generate,gb,oracle,syzygies,resolution or all")
      ->default_val("all");
  ver->add_option("--format", format, "json, csv or text")->default_val("json");
  ver->add_option("--out", out, "output file (default stdout)");
  ver->add_flag("--allow-large-oracle", allow_large, "run oracle and engine checks beyond the q2 limit");
  ver->add_option("--fixture", fixture, "JSON file replacing generators and/or N, P");
  ver->add_flag("--timings", timings, "include per-stage seconds in the report");

  auto* cas = app.add_subcommand("export-cas", "Print a Macaulay2 script that re-checks the results");
  cas->add_option("--q2", q2, "even integer >= 4")->required();
  cas->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    auto inst = bres::make_instance(q2);
    if (gen->parsed()) {
      emit(bres::io::render_generate(inst, bres::io::parse_format(format)), out);
      return kOk;
    }
    if (cas->parsed()) {
      emit(bres::io::macaulay2_script(inst), out);
      return kOk;
    }
    bres::VerifyConfig cfg;
    cfg.stages = parse_stages(stages);
    cfg.allow_large_oracle = allow_large;
    auto f = bres::io::parse_format(format);
    bres::VerifyInput input;
    if (!fixture.empty()) input = bres::io::load_fixture(fixture, inst);
    if (!bres::oracle_allowed(q2, allow_large)) {
      std::cerr << "note: q2 = " << q2 << " is above the oracle limit " << bres::oracle_max_q2()
                << "; oracle and engine checks are reported as not-run\n";
    }
    auto report = bres::verify(inst, cfg, input);
    emit(bres::io::render_report(report, f, timings), out);
    return report.passed() ? kOk : kCheckFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}
