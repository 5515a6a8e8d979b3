#include "framelet/bank_format.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace framelet {

using nlohmann::json;

namespace {

json filter_to_json(const Filter& f) {
  json j;
  if (f.is_trig()) {
    json coeffs = json::array();
    for (const auto& [k, c] : f.trig().coeffs()) {
      coeffs.push_back({{"k", k}, {"re", c.real()}, {"im", c.imag()}});
    }
    j["coeffs"] = std::move(coeffs);
  } else {
    j["grid_m"] = f.grid_m();
    json values = json::array();
    for (const cdouble& v : f.grid_values()) values.push_back({v.real(), v.imag()});
    j["values"] = std::move(values);
  }
  return j;
}

Filter filter_from_json(const json& j, int dim) {
  if (j.contains("coeffs")) {
    TrigPolynomial p(dim);
    for (const auto& term : j.at("coeffs")) {
      IntVec k = term.at("k").get<IntVec>();
      require(k.size() == static_cast<std::size_t>(dim), errc::parse_error,
              "frequency vector dimension");
      p.set(std::move(k), cdouble{term.at("re").get<double>(),
                                  term.value("im", 0.0)});
    }
    return Filter(std::move(p));
  }
  if (j.contains("values")) {
    const auto m = j.at("grid_m").get<std::int64_t>();
    std::vector<cdouble> values;
    values.reserve(j.at("values").size());
    for (const auto& v : j.at("values")) {
      values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    }
    return Filter::grid(dim, m, std::move(values));
  }
  fail(errc::parse_error, "filter entry needs 'coeffs' or 'values'");
}

json phi_to_json(const PhiSpec& p) {
  json j;
  j["kind"] = p.kind == PhiSpec::Kind::product ? "product" : "named";
  if (p.kind == PhiSpec::Kind::named) j["name"] = p.name;
  j["depth"] = p.depth;
  j["mode"] = p.mode == PhiMode::modulus ? "modulus" : "complex";
  return j;
}

PhiSpec phi_from_json(const json& j) {
  PhiSpec p;
  const std::string kind = j.value("kind", "product");
  if (kind == "named") {
    p.kind = PhiSpec::Kind::named;
    p.name = j.at("name").get<std::string>();
  } else {
    require(kind == "product", errc::parse_error, "phi kind must be 'product' or 'named'");
  }
  p.depth = j.value("depth", 30);
  const std::string mode = j.value("mode", "complex");
  p.mode = mode == "modulus" ? PhiMode::modulus : PhiMode::complex_product;
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  require(out.good(), errc::parse_error, "cannot write " + path);
  out << text;
}

}  // namespace

DilationMatrix BankFile::validated_dilation() const {
  return DilationMatrix::validate(dimension, dilation);
}

FilterBank BankFile::to_bank() const {
  require(has_filters(), errc::missing_filters, "bank has no filters");
  FilterBank bank{validated_dilation(), filters.front().second, {}, weight};
  for (std::size_t i = 1; i < filters.size(); ++i) bank.highpass.push_back(filters[i].second);
  return bank;
}

std::optional<std::int64_t> BankFile::sampling_resolution() const {
  std::optional<std::int64_t> m;
  auto visit = [&m](const Filter& f) {
    if (f.is_trig()) return;
    require(!m || *m == f.grid_m(), errc::dimension_mismatch,
            "grid-sampled filters disagree on resolution");
    m = f.grid_m();
  };
  for (const auto& [label, f] : filters) visit(f);
  if (weight) visit(*weight);
  return m;
}

PhiHat BankFile::phi_hat() const {
  if (phi.kind == PhiSpec::Kind::named) return PhiHat::named(phi.name);
  require(has_filters(), errc::missing_filters, "product profile needs a low-pass filter");
  require(filters.front().second.is_trig(), errc::missing_filters,
          "product profile needs a trig-polynomial low-pass mask");
  return PhiHat::from_mask(validated_dilation(), filters.front().second.trig(), phi.depth,
                           phi.mode);
}

std::string BankFile::to_json_text() const {
  json j;
  j["schema_version"] = schema_version;
  j["dimension"] = dimension;
  j["dilation"] = dilation;
  json fl = json::array();
  for (const auto& [label, f] : filters) {
    json entry = filter_to_json(f);
    entry["label"] = label;
    fl.push_back(std::move(entry));
  }
  j["filters"] = std::move(fl);
  if (weight) j["weight"] = filter_to_json(*weight);
  j["phi"] = phi_to_json(phi);
  json meta;
  meta["name"] = this->meta.name;
  meta["mask"] = this->meta.mask_mode;
  if (!this->meta.expected.empty()) meta["expected"] = this->meta.expected;
  if (this->meta.expected_bounds) {
    meta["expected_bounds"] = {this->meta.expected_bounds->first,
                               this->meta.expected_bounds->second};
  }
  if (!this->meta.notes.empty()) meta["notes"] = this->meta.notes;
  j["metadata"] = std::move(meta);
  return j.dump(2) + "\n";
}

BankFile BankFile::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::parse_error, std::string("bank json: ") + e.what());
  }
  try {
    BankFile bank;
    bank.schema_version = j.value("schema_version", 1);
    require(bank.schema_version == 1, errc::parse_error, "unsupported schema version");
    bank.dimension = j.at("dimension").get<int>();
    bank.dilation = j.at("dilation").get<std::vector<std::int64_t>>();
    for (const auto& entry : j.value("filters", json::array())) {
      bank.filters.emplace_back(entry.value("label", "H"),
                                filter_from_json(entry, bank.dimension));
    }
    if (j.contains("weight") && !j.at("weight").is_null()) {
      bank.weight = filter_from_json(j.at("weight"), bank.dimension);
    }
    if (j.contains("phi")) bank.phi = phi_from_json(j.at("phi"));
    if (j.contains("metadata")) {
      const json& meta = j.at("metadata");
      bank.meta.name = meta.value("name", "");
      bank.meta.mask_mode = meta.value("mask", "auto");
      if (meta.contains("expected")) {
        bank.meta.expected = meta.at("expected").get<std::map<std::string, std::string>>();
      }
      if (meta.contains("expected_bounds")) {
        bank.meta.expected_bounds = {meta.at("expected_bounds").at(0).get<double>(),
                                     meta.at("expected_bounds").at(1).get<double>()};
      }
      bank.meta.notes = meta.value("notes", "");
    }
    return bank;
  } catch (const json::exception& e) {
    fail(errc::parse_error, std::string("bank json: ") + e.what());
  }
}

void BankFile::save(const std::string& path) const { write_file(path, to_json_text()); }

BankFile BankFile::load(const std::string& path) { return from_json_text(read_file(path)); }

std::string RunConfig::to_json_text() const {
  json j;
  j["grid_m"] = grid_m;
  j["grid_m_nd"] = grid_m_nd;
  j["tol_uep"] = tol_uep;
  j["tol_oep"] = tol_oep;
  j["tol_ortho"] = tol_ortho;
  j["tau_zero"] = tau_zero;
  j["product_depth"] = product_depth;
  j["bracket_radius"] = bracket_radius;
  j["theta_truncation"] = theta_truncation;
  j["calderon_range"] = {calderon_range.j_min, calderon_range.j_max};
  j["parseval_range"] = {parseval_range.j_min, parseval_range.j_max};
  j["calderon_points"] = calderon_points;
  j["tol_calderon_sum"] = tol_calderon_sum;
  j["tol_calderon_cross"] = tol_calderon_cross;
  j["tol_two_scale"] = tol_two_scale;
  j["quadrature"] = {{"base_points", quadrature.base_points}, {"budget", quadrature.budget}};
  j["probe"] = {{"radius", probe.radius},       {"j_list", probe.j_list},
                {"samples", probe.samples},     {"seed", probe.seed},
                {"delta", probe.delta},         {"trend_tol", probe.trend_tol},
                {"zero_tol", probe.zero_tol},   {"bracket_radius", probe.bracket_radius},
                {"budget", probe.budget}};
  j["seed"] = seed;
  return j.dump(2) + "\n";
}

RunConfig RunConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::parse_error, std::string("config json: ") + e.what());
  }
  try {
    RunConfig c;
    c.grid_m = j.value("grid_m", c.grid_m);
    c.grid_m_nd = j.value("grid_m_nd", c.grid_m_nd);
    c.tol_uep = j.value("tol_uep", c.tol_uep);
    c.tol_oep = j.value("tol_oep", c.tol_oep);
    c.tol_ortho = j.value("tol_ortho", c.tol_ortho);
    c.tau_zero = j.value("tau_zero", c.tau_zero);
    c.product_depth = j.value("product_depth", c.product_depth);
    c.bracket_radius = j.value("bracket_radius", c.bracket_radius);
    c.theta_truncation = j.value("theta_truncation", c.theta_truncation);
    if (j.contains("calderon_range")) {
      c.calderon_range = {j.at("calderon_range").at(0).get<int>(),
                          j.at("calderon_range").at(1).get<int>()};
    }
    if (j.contains("parseval_range")) {
      c.parseval_range = {j.at("parseval_range").at(0).get<int>(),
                          j.at("parseval_range").at(1).get<int>()};
    }
    c.calderon_points = j.value("calderon_points", c.calderon_points);
    c.tol_calderon_sum = j.value("tol_calderon_sum", c.tol_calderon_sum);
    c.tol_calderon_cross = j.value("tol_calderon_cross", c.tol_calderon_cross);
    c.tol_two_scale = j.value("tol_two_scale", c.tol_two_scale);
    if (j.contains("quadrature")) {
      c.quadrature.base_points = j.at("quadrature").value("base_points", c.quadrature.base_points);
      c.quadrature.budget = j.at("quadrature").value("budget", c.quadrature.budget);
    }
    if (j.contains("probe")) {
      const json& p = j.at("probe");
      c.probe.radius = p.value("radius", c.probe.radius);
      if (p.contains("j_list")) c.probe.j_list = p.at("j_list").get<std::vector<int>>();
      c.probe.samples = p.value("samples", c.probe.samples);
      c.probe.seed = p.value("seed", c.probe.seed);
      c.probe.delta = p.value("delta", c.probe.delta);
      c.probe.trend_tol = p.value("trend_tol", c.probe.trend_tol);
      c.probe.zero_tol = p.value("zero_tol", c.probe.zero_tol);
      c.probe.bracket_radius = p.value("bracket_radius", c.probe.bracket_radius);
      c.probe.budget = p.value("budget", c.probe.budget);
    }
    c.seed = j.value("seed", c.seed);
    return c;
  } catch (const json::exception& e) {
    fail(errc::parse_error, std::string("config json: ") + e.what());
  }
}

RunConfig RunConfig::load(const std::string& path) { return from_json_text(read_file(path)); }

std::string ReportDoc::to_json_text() const {
  json j;
  j["subcommand"] = subcommand;
  j["bank"] = bank_name;
  if (!config_json.empty()) j["config"] = json::parse(config_json);
  json conds = json::array();
  for (const VerificationReport& r : conditions) {
    json c;
    c["condition"] = r.condition_id;
    c["grid"] = {{"dim", r.grid.dim}, {"m", r.grid.m}};
    c["max_residual"] = r.max_residual;
    c["mean_residual"] = r.mean_residual;
    c["masked_fraction"] = r.masked_fraction;
    c["tolerance"] = r.tolerance;
    c["pass"] = r.pass;
    json worst = json::array();
    for (const WorstPoint& w : r.worst_points) {
      worst.push_back({{"t", w.t}, {"residual", w.residual}});
    }
    c["worst_points"] = std::move(worst);
    conds.push_back(std::move(c));
  }
  j["conditions"] = std::move(conds);
  if (!notes.empty()) {
    json n;
    for (const auto& [k, v] : notes) n[k] = v;
    j["notes"] = std::move(n);
  }
  j["pass"] = pass;
  return j.dump(2) + "\n";
}

void ReportDoc::save(const std::string& path) const { write_file(path, to_json_text()); }

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  require(out.good(), errc::parse_error, "cannot write " + path);
  out.precision(17);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
}

void write_density_csv(const std::string& path, const DensityCurve& curve) {
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < curve.j_values.size(); ++i) {
    rows.push_back({static_cast<double>(curve.j_values[i]), curve.ratios[i], curve.stderrs[i]});
  }
  write_csv(path, {"j", "ratio", "stderr"}, rows);
}

}  // namespace framelet
