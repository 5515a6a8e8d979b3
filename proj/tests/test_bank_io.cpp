#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "framelet/bundled.hpp"

using namespace framelet;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("framelet-io-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("bank files round trip bit-exactly") {
  TempDir tmp;
  for (const BankFile& bank : bundled_banks()) {
    const std::string path = tmp.file(bank.meta.name + ".bank.json");
    bank.save(path);
    const BankFile loaded = BankFile::load(path);
    CHECK(loaded.to_json_text() == bank.to_json_text());
    CHECK(loaded.meta.name == bank.meta.name);
    CHECK(loaded.meta.expected == bank.meta.expected);
  }
}

TEST_CASE("round-tripped banks verify to identical residuals") {
  TempDir tmp;
  const BankFile bank = bundled_haar();
  const std::string path = tmp.file("haar.bank.json");
  bank.save(path);
  const BankFile loaded = BankFile::load(path);

  const GridSpec grid{1, 1024};
  const auto before = check_uep(bank.to_bank(), nullptr, grid, 1e-12);
  const auto after = check_uep(loaded.to_bank(), nullptr, grid, 1e-12);
  CHECK(before.uep0.max_residual == after.uep0.max_residual);
  CHECK(before.uepk[0].max_residual == after.uepk[0].max_residual);
  CHECK(before.uep0.mean_residual == after.uep0.mean_residual);
}

TEST_CASE("grid-sampled banks round trip through files") {
  TempDir tmp;
  const GridSpec grid{1, 512};
  const BankFile bank = build_haar_oep_bank(grid);
  const std::string path = tmp.file("haar-oep.bank.json");
  bank.save(path);
  const BankFile loaded = BankFile::load(path);

  ProbeSpec probe;
  probe.samples = 20000;
  probe.j_list = {1, 2, 3, 4, 5};
  const auto before = check_oep(bank.to_bank(), bank.phi_hat(), nullptr, grid, 1e-10, probe);
  const auto after = check_oep(loaded.to_bank(), loaded.phi_hat(), nullptr, grid, 1e-10, probe);
  CHECK(before.pass);
  CHECK(after.pass);
  CHECK(before.soep0.max_residual == after.soep0.max_residual);
  CHECK(before.soepk[0].max_residual == after.soepk[0].max_residual);
}

TEST_CASE("the oblique pipeline bank passes both checks") {
  const GridSpec grid{1, 1024};
  const BankFile bank = build_haar_oep_bank(grid);
  ProbeSpec probe;
  probe.samples = 20000;
  probe.j_list = {1, 2, 3, 4, 5, 6};
  const auto oep = check_oep(bank.to_bank(), bank.phi_hat(), nullptr, grid, 1e-10, probe);
  CHECK(oep.pass);
  CHECK(oep.max_residual < 1e-10);
  const FilterBank reduced = oep_reduce(bank.to_bank(), grid);
  const auto uep = check_uep(reduced, nullptr, grid, 1e-10);
  CHECK(uep.pass);
  CHECK(uep.max_residual < 1e-10);
}

TEST_CASE("malformed bank files raise parse errors") {
  CHECK_THROWS_AS(BankFile::from_json_text("{ not json"), Error);
  CHECK_THROWS_AS(BankFile::from_json_text("{}"), Error);
  CHECK_THROWS_AS(BankFile::from_json_text(R"({"schema_version": 9, "dimension": 1,
                                              "dilation": [2]})"),
                  Error);
  try {
    BankFile::from_json_text("{ not json");
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse_error);
  }
}

TEST_CASE("non-expansive dilation in a bank file fails validation, not parsing") {
  const std::string text = R"({"schema_version":1,"dimension":1,"dilation":[1],
    "filters":[{"label":"H0","coeffs":[{"k":[0],"re":1.0,"im":0.0}]}]})";
  const BankFile bank = BankFile::from_json_text(text);
  CHECK_THROWS_AS(bank.to_bank(), Error);
  try {
    bank.to_bank();
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_expansive);
  }
}

TEST_CASE("run configuration round trips and accepts partial files") {
  RunConfig config;
  config.grid_m = 2048;
  config.probe.j_list = {2, 4, 6};
  config.calderon_range = {-20, 20};
  const RunConfig loaded = RunConfig::from_json_text(config.to_json_text());
  CHECK(loaded.grid_m == 2048);
  CHECK(loaded.probe.j_list == std::vector<int>{2, 4, 6});
  CHECK(loaded.calderon_range.j_min == -20);
  CHECK(loaded.tol_uep == config.tol_uep);

  const RunConfig partial = RunConfig::from_json_text(R"({"grid_m": 64})");
  CHECK(partial.grid_m == 64);
  CHECK(partial.tol_uep == RunConfig{}.tol_uep);
  CHECK_THROWS_AS(RunConfig::from_json_text("]["), Error);
}

TEST_CASE("report documents serialize with conditions and notes") {
  TempDir tmp;
  ReportDoc doc;
  doc.subcommand = "verify-uep";
  doc.bank_name = "haar";
  doc.config_json = RunConfig{}.to_json_text();
  VerificationReport r;
  r.condition_id = "UEP0";
  r.grid = GridSpec{1, 64};
  r.max_residual = 1e-16;
  r.tolerance = 1e-12;
  r.pass = true;
  doc.add(r);
  doc.note("mask", "none");
  CHECK(doc.pass);
  const std::string text = doc.to_json_text();
  CHECK(text.find("\"UEP0\"") != std::string::npos);
  CHECK(text.find("\"mask\"") != std::string::npos);
  doc.save(tmp.file("report.json"));
  CHECK(std::filesystem::exists(tmp.file("report.json")));

  write_csv(tmp.file("curve.csv"), {"j", "value"}, {{1.0, 0.5}, {2.0, 0.25}});
  CHECK(std::filesystem::exists(tmp.file("curve.csv")));
}

TEST_CASE("bundled banks build and carry usable profiles") {
  for (const BankFile& bank : bundled_banks()) {
    if (bank.has_filters()) {
      const FilterBank fb = bank.to_bank();
      CHECK(fb.dim() == bank.dimension);
    }
    if (bank.phi.kind == PhiSpec::Kind::named) {
      const PhiHat phi = bank.phi_hat();
      const RealVec zero(bank.dimension, 0.0);
      CHECK(std::abs(phi.eval(zero)) <= 1.0 + 1e-12);
    }
  }
}
