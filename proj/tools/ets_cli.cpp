// Command-line front end: JSON configs in, CSV/JSON artifacts out.
// Exit codes: 0 ok, 2 config/schema error, 3 numerical failure.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>
#include <string>

#include "ets/charfn.hpp"
#include "ets/density.hpp"
#include "ets/dispersion.hpp"
#include "ets/fpde.hpp"
#include "ets/io.hpp"
#include "ets/measures.hpp"
#include "ets/sampling.hpp"
#include "ets/series.hpp"

namespace fs = std::filesystem;
using ets::io::json;

namespace {

constexpr const char* kToolVersion = "1.0.0";
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_keys(const json& j, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!j.is_object()) throw ConfigError("config block must be a JSON object");
  for (const auto& k : required)
    if (!j.contains(k)) throw ConfigError("missing config key: " + k);
  for (const auto& [k, v] : j.items())
    if (!required.count(k) && !optional.count(k))
      throw ConfigError("unknown config key: " + k);
}

json load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config: " + path);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return j;
}

Eigen::VectorXd vector_from_json(const json& j) {
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  return v;
}

// CF evaluator plus its dimension, built from the "family" block shared by
// the cf and pdf commands.
struct CfSpec {
  int dim;
  ets::CfEvaluator eval;
  std::optional<ets::GeneratorSymbol> symbol;  // when a generator exists
};

CfSpec make_cf(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "ets") {
    require_keys(j, {"family", "params"});
    const auto p = ets::io::ets_params_from_json(j.at("params"));
    return {p.dim(),
            [p](const Eigen::VectorXd& u) { return ets::ets_cf(p, u); },
            ets::GeneratorSymbol::ets(p)};
  }
  if (family == "tid" || family == "tid0") {
    require_keys(j, {"family", "alpha", "measure", "m"});
    ets::TidParams p{j.at("alpha").get<double>(),
                     ets::io::measure_from_json(j.at("measure")),
                     vector_from_json(j.at("m"))};
    const bool use_psi0 = family == "tid0";
    auto sym = use_psi0 ? ets::GeneratorSymbol::tid_psi0(p)
                        : ets::GeneratorSymbol::tid(p);
    return {p.r.dim(),
            [p, use_psi0](const Eigen::VectorXd& u) {
              return ets::tid_cf(p, u, use_psi0);
            },
            sym};
  }
  if (family == "symmetric_tid") {
    require_keys(j, {"family", "alpha", "measure"});
    const double alpha = j.at("alpha").get<double>();
    const auto m = ets::io::measure_from_json(j.at("measure"));
    return {m.dim(),
            [m, alpha](const Eigen::VectorXd& u) {
              return ets::Complex(ets::symmetric_tid_cf(m, alpha, u), 0.0);
            },
            std::nullopt};
  }
  if (family == "subordinator") {
    require_keys(j, {"family", "params"});
    const auto p = ets::io::subordinator_params_from_json(j.at("params"));
    return {1,
            [p](const Eigen::VectorXd& u) {
              return ets::subordinator_cf(p, u[0]);
            },
            std::nullopt};
  }
  throw ConfigError("unknown CF family: " + family);
}

void write_manifest(const fs::path& out_dir, json manifest) {
  manifest["schema_version"] = 1;
  manifest["tool_version"] = kToolVersion;
  ets::io::atomic_write((out_dir / "manifest.json").string(),
                        manifest.dump(2) + "\n");
}

int cmd_cf(const json& cfg, const fs::path& out_dir) {
  require_keys(cfg, {"family", "probes"}, {"params", "alpha", "measure", "m"});
  json cf_block = cfg;
  cf_block.erase("probes");
  const CfSpec cf = make_cf(cf_block);

  std::string csv;
  for (int d = 0; d < cf.dim; ++d) csv += "u" + std::to_string(d + 1) + ",";
  csv += "re,im\n";
  for (const auto& probe : cfg.at("probes")) {
    if (static_cast<int>(probe.size()) != cf.dim)
      throw ConfigError("probe dimension mismatch");
    const Eigen::VectorXd u = vector_from_json(probe);
    const ets::Complex v = cf.eval(u);
    for (int d = 0; d < cf.dim; ++d)
      csv += ets::io::format_double(u[d]) + ",";
    csv += ets::io::format_double(v.real()) + "," +
           ets::io::format_double(v.imag()) + "\n";
  }
  ets::io::atomic_write((out_dir / "cf.csv").string(), csv);
  write_manifest(out_dir, {{"command", "cf"},
                           {"probes", cfg.at("probes").size()},
                           {"config_digest", ets::digest_bytes(cfg.dump())}});
  return 0;
}

int cmd_sample(const json& cfg, const fs::path& out_dir,
               std::optional<std::uint64_t> seed_override) {
  require_keys(cfg, {"family", "count", "seed"}, {"params", "index", "stream"});
  const std::string family = cfg.at("family").get<std::string>();
  const int count = cfg.at("count").get<int>();
  ets::RngState rng{seed_override ? *seed_override
                                  : cfg.at("seed").get<std::uint64_t>(),
                    cfg.value("stream", std::uint64_t{0})};

  json manifest{{"command", "sample"},
                {"seed", rng.seed},
                {"stream", rng.stream},
                {"count", count}};

  ets::SampleBatch batch;
  if (family == "ets") {
    const auto p = ets::io::ets_params_from_json(cfg.at("params"));
    batch = ets::sample_ets(rng, p, count);
  } else if (family == "subordinator") {
    const auto p = ets::io::subordinator_params_from_json(cfg.at("params"));
    double rate = 0.0;
    const auto t = ets::sample_tempered_subordinator(rng, p, count, &rate);
    batch.dim = 1;
    batch.count = count;
    batch.values = t;
    batch.params_digest = ets::digest_params(p);
    manifest["acceptance_rate"] = rate;
  } else if (family == "stable") {
    const double index = cfg.at("index").get<double>();
    const auto s = ets::sample_positive_stable(rng, index, count);
    batch.dim = 1;
    batch.count = count;
    batch.values = s;
    batch.params_digest =
        ets::digest_bytes("stable;" + ets::io::format_double(index));
  } else {
    throw ConfigError("unknown sample family: " + family);
  }

  ets::io::atomic_write((out_dir / "samples.csv").string(),
                        ets::io::batch_csv(batch));
  manifest["params_digest"] = batch.params_digest;
  write_manifest(out_dir, manifest);
  return 0;
}

int cmd_pdf(const json& cfg, const fs::path& out_dir) {
  require_keys(cfg, {"method", "grid", "family"},
               {"params", "alpha", "measure", "m", "t", "dt", "n_terms",
                "series_method", "tol_mass"});
  const std::string method = cfg.at("method").get<std::string>();
  const auto grid = ets::io::grid_from_json(cfg.at("grid"));
  json cf_block = cfg;
  for (const char* k :
       {"method", "grid", "t", "dt", "n_terms", "series_method", "tol_mass"})
    cf_block.erase(k);
  const CfSpec cf = make_cf(cf_block);

  ets::InversionOptions opt;
  opt.tol_mass = cfg.value("tol_mass", 1e-3);

  json manifest{{"command", "pdf"},
                {"method", method},
                {"grid", ets::io::to_json(grid)},
                {"config_digest", ets::digest_bytes(cfg.dump())}};

  std::optional<ets::DensityGrid> density;
  if (method == "invert") {
    density = ets::invert_cf(cf.eval, grid, opt);
  } else {
    if (!cf.symbol)
      throw ConfigError("family has no generator symbol for method " + method);
    const double t = cfg.value("t", 1.0);
    if (method == "fpde") {
      const double dt = cfg.value("dt", 1e-3);
      density = ets::density_at_time(*cf.symbol, grid, t, dt, opt);
      manifest["t"] = t;
      manifest["dt"] = dt;
    } else if (method == "series") {
      const int n_terms = cfg.value("n_terms", 20);
      const std::string mname = cfg.value("series_method", "adm");
      ets::SeriesMethod sm = mname == "hpm"   ? ets::SeriesMethod::HPM
                             : mname == "vim" ? ets::SeriesMethod::VIM
                             : mname == "adm"
                                 ? ets::SeriesMethod::ADM
                                 : throw ConfigError("unknown series_method");
      auto state = ets::series_partial_sum(*cf.symbol, grid, t, n_terms, sm);
      manifest["remainder_bound"] = state.remainder_bound();
      manifest["t"] = t;
      manifest["n_terms"] = n_terms;
      if (state.remainder_bound() > 1e-8)
        throw ets::TruncationTooCoarse("pdf: series remainder above 1e-8");
      density = ets::invert_tabulated(state.partial_sum(), grid, opt);
    } else {
      throw ConfigError("unknown pdf method: " + method);
    }
    // cross-method residual against the direct inversion of the same CF
    ets::InversionOptions loose = opt;
    loose.check_aliasing = false;
    const auto direct = ets::invert_cf(cf.eval, grid, loose);
    manifest["sup_diff_vs_invert"] =
        (density->values - direct.values).abs().maxCoeff();
  }

  manifest["mass"] = density->mass;
  manifest["min_value"] = density->min_value;
  ets::io::atomic_write((out_dir / "density.csv").string(),
                        ets::io::density_csv(*density));
  write_manifest(out_dir, manifest);
  return 0;
}

int cmd_pde(const json& cfg, const fs::path& out_dir) {
  require_keys(cfg, {"family", "grid", "t", "dt"},
               {"params", "alpha", "measure", "m"});
  const auto grid = ets::io::grid_from_json(cfg.at("grid"));
  json cf_block = cfg;
  for (const char* k : {"grid", "t", "dt"}) cf_block.erase(k);
  const CfSpec cf = make_cf(cf_block);
  if (!cf.symbol) throw ConfigError("family has no generator symbol");
  const double t = cfg.at("t").get<double>();
  const double dt = cfg.at("dt").get<double>();

  const auto field = ets::solve(*cf.symbol, grid, t, dt);
  const Eigen::VectorXcd lam = cf.symbol->eval_grid(grid);
  double max_err = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    max_err = std::max(max_err, std::abs(field.values[i] -
                                         std::exp(t * lam[i])));
  ets::InversionOptions opt;
  opt.check_mass = false;
  const auto density = ets::invert_tabulated(field.values, grid, opt);
  ets::io::atomic_write((out_dir / "density.csv").string(),
                        ets::io::density_csv(density));
  write_manifest(out_dir, {{"command", "pde"},
                           {"grid", ets::io::to_json(grid)},
                           {"t", t},
                           {"dt", dt},
                           {"max_oracle_error", max_err},
                           {"mass", density.mass},
                           {"min_value", density.min_value},
                           {"config_digest", ets::digest_bytes(cfg.dump())}});
  return 0;
}

int cmd_series(const json& cfg, const fs::path& out_dir) {
  require_keys(cfg, {"family", "grid", "t", "n_terms"},
               {"params", "alpha", "measure", "m", "series_method"});
  const auto grid = ets::io::grid_from_json(cfg.at("grid"));
  json cf_block = cfg;
  for (const char* k : {"grid", "t", "n_terms", "series_method"})
    cf_block.erase(k);
  const CfSpec cf = make_cf(cf_block);
  if (!cf.symbol) throw ConfigError("family has no generator symbol");
  const double t = cfg.at("t").get<double>();
  const int n_terms = cfg.at("n_terms").get<int>();
  const std::string mname = cfg.value("series_method", "adm");
  ets::SeriesMethod sm = mname == "hpm"   ? ets::SeriesMethod::HPM
                         : mname == "vim" ? ets::SeriesMethod::VIM
                         : mname == "adm" ? ets::SeriesMethod::ADM
                                          : throw ConfigError(
                                                "unknown series_method");

  ets::SeriesState state(sm, grid, *cf.symbol, t);
  std::string csv = "n,remainder_bound,max_err_vs_exp\n";
  const Eigen::VectorXcd lam = state.symbol();
  for (int n = 0; n < n_terms; ++n) {
    state.next_term();
    double err = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
      err = std::max(err, std::abs(state.partial_sum()[i] -
                                   std::exp(t * lam[i])));
    csv += std::to_string(n + 1) + "," +
           ets::io::format_double(state.remainder_bound()) + "," +
           ets::io::format_double(err) + "\n";
  }
  ets::io::atomic_write((out_dir / "convergence.csv").string(), csv);
  write_manifest(out_dir, {{"command", "series"},
                           {"method", mname},
                           {"t", t},
                           {"n_terms", n_terms},
                           {"remainder_bound", state.remainder_bound()},
                           {"config_digest", ets::digest_bytes(cfg.dump())}});
  return 0;
}

int cmd_ks(const json& cfg, const fs::path& out_dir) {
  require_keys(cfg, {"family", "grid", "samples_csv"},
               {"params", "alpha", "measure", "m", "axis", "tol_coverage"});
  const auto grid = ets::io::grid_from_json(cfg.at("grid"));
  json cf_block = cfg;
  for (const char* k : {"grid", "samples_csv", "axis", "tol_coverage"})
    cf_block.erase(k);
  const CfSpec cf = make_cf(cf_block);
  const int axis = cfg.value("axis", 0);

  // read samples CSV (header row, then one sample per line)
  std::ifstream f(cfg.at("samples_csv").get<std::string>());
  if (!f) throw ConfigError("cannot open samples_csv");
  std::string line;
  std::getline(f, line);  // header
  std::vector<std::vector<double>> rows;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t comma = line.find(',', pos);
      const std::string cell =
          line.substr(pos, comma == std::string::npos ? comma : comma - pos);
      row.push_back(std::stod(cell));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ConfigError("samples_csv has no data rows");
  ets::SampleBatch batch;
  batch.dim = static_cast<int>(rows[0].size());
  batch.count = static_cast<int>(rows.size());
  batch.values.resize(batch.count, batch.dim);
  for (int i = 0; i < batch.count; ++i)
    for (int j = 0; j < batch.dim; ++j) batch.values(i, j) = rows[i][j];
  batch.validate();

  const auto density = ets::invert_cf(cf.eval, grid);
  const double ks =
      ets::ks_distance(batch, density, axis, cfg.value("tol_coverage", 1e-3));
  const double critical = 1.63 / std::sqrt(double(batch.count));
  write_manifest(out_dir, {{"command", "ks"},
                           {"axis", axis},
                           {"count", batch.count},
                           {"statistic", ks},
                           {"critical_99", critical},
                           {"below_critical", ks < critical},
                           {"config_digest", ets::digest_bytes(cfg.dump())}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elliptical tempered stable toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed_override;

  for (const char* name : {"cf", "sample", "pdf", "pde", "series", "ks"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON config path")->required();
    sub->add_option("--out", out_dir, "output directory");
    if (std::string(name) == "sample") {
      sub->add_option_function<std::uint64_t>(
          "--seed", [&](std::uint64_t s) { seed_override = s; },
          "override the config seed");
    }
  }

  CLI11_PARSE(app, argc, argv);
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    const json cfg = load_config(config_path);
    fs::create_directories(out_dir);
    const fs::path out(out_dir);
    if (cmd == "cf") return cmd_cf(cfg, out);
    if (cmd == "sample") return cmd_sample(cfg, out, seed_override);
    if (cmd == "pdf") return cmd_pdf(cfg, out);
    if (cmd == "pde") return cmd_pde(cfg, out);
    if (cmd == "series") return cmd_series(cfg, out);
    if (cmd == "ks") return cmd_ks(cfg, out);
    std::cerr << "unknown command\n";
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "ConfigError: " << e.what() << "\n";
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "ConfigError: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ets::DomainError& e) {
    // bad parameter values arriving through the config are config errors
    std::cerr << "DomainError: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ets::NotPositiveDefinite& e) {
    std::cerr << "NotPositiveDefinite: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ets::Error& e) {
    std::cerr << "NumericalError: " << e.what() << "\n";
    return kExitNumeric;
  }
}
