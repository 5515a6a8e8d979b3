#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "framelet/frame_analysis.hpp"

namespace framelet {

/// How a bank's refinable profile φ̂ is evaluated: as the truncated
/// product of its own low-pass mask, or by a named closed form.
struct PhiSpec {
  enum class Kind { product, named };
  Kind kind = Kind::product;
  std::string name;  // closed-form name when kind == named
  int depth = 30;
  PhiMode mode = PhiMode::complex_product;
};

struct BankMetadata {
  std::string name;
  std::string mask_mode = "auto";  // "auto" (from the bracket) or "none"
  std::map<std::string, std::string> expected;  // subcommand -> "pass"/"fail"
  std::optional<std::pair<double, double>> expected_bounds;  // frame-bound oracle
  std::string notes;
};

/// On-disk filter bank: dilation, labelled filters (low-pass first),
/// optional weight S, profile spec and metadata.  JSON, human-editable;
/// doubles round-trip bit-exactly and rational fields are stored as
/// strings like "1/2".
struct BankFile {
  int schema_version = 1;
  int dimension = 1;
  std::vector<std::int64_t> dilation;  // row-major n×n
  std::vector<std::pair<std::string, Filter>> filters;
  std::optional<Filter> weight;
  PhiSpec phi;
  BankMetadata meta;

  DilationMatrix validated_dilation() const;
  FilterBank to_bank() const;
  PhiHat phi_hat() const;
  bool has_filters() const { return !filters.empty(); }
  /// Common resolution of the grid-sampled filters, when any (they pin
  /// the verification grid).
  std::optional<std::int64_t> sampling_resolution() const;

  std::string to_json_text() const;
  static BankFile from_json_text(const std::string& text);
  void save(const std::string& path) const;
  static BankFile load(const std::string& path);
};

/// Every tolerance, truncation and probe parameter of a run; embedded in
/// each report so any number in it can be reproduced from the report
/// alone.
struct RunConfig {
  std::int64_t grid_m = 4096;
  std::int64_t grid_m_nd = 64;  // per-axis resolution when dim > 1
  double tol_uep = 1e-12;
  double tol_oep = 1e-10;
  double tol_ortho = 1e-10;
  double tau_zero = 1e-10;
  int product_depth = 30;
  int bracket_radius = 64;
  int theta_truncation = 40;
  ScaleRange calderon_range{-25, 25};
  ScaleRange parseval_range{-8, 8};
  int calderon_points = 256;
  double tol_calderon_sum = 1e-4;
  double tol_calderon_cross = 1e-8;
  double tol_two_scale = 1e-8;
  QuadratureSpec quadrature;
  ProbeSpec probe;
  std::uint64_t seed = 746312957;

  std::string to_json_text() const;
  static RunConfig from_json_text(const std::string& text);
  static RunConfig load(const std::string& path);
};

/// Machine-readable run report: subcommand, full config, one entry per
/// condition, free-form notes, overall verdict.
struct ReportDoc {
  std::string subcommand;
  std::string bank_name;
  std::string config_json;
  std::vector<VerificationReport> conditions;
  std::vector<std::pair<std::string, std::string>> notes;
  bool pass = true;

  void add(const VerificationReport& r) {
    conditions.push_back(r);
    pass = pass && r.pass;
  }
  void note(const std::string& key, const std::string& value) { notes.emplace_back(key, value); }
  void require_pass(bool ok) { pass = pass && ok; }

  std::string to_json_text() const;
  void save(const std::string& path) const;
};

/// CSV emission (numeric columns, '.' decimal, one header row).
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);
void write_density_csv(const std::string& path, const DensityCurve& curve);

}  // namespace framelet
