#include "ets/io.hpp"

#include <cstdio>
#include <fstream>

namespace ets::io {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json to_json(const SpectralMeasure& m) {
  json atoms = json::array();
  for (const auto& a : m.atoms()) {
    json x = json::array();
    for (Eigen::Index i = 0; i < a.location.size(); ++i) x.push_back(a.location[i]);
    atoms.push_back({{"x", x}, {"w", a.weight}});
  }
  return {{"dim", m.dim()}, {"atoms", atoms}};
}

SpectralMeasure measure_from_json(const json& j) {
  const int dim = j.at("dim").get<int>();
  std::vector<SpectralMeasure::Atom> atoms;
  for (const auto& a : j.at("atoms")) {
    const auto& x = a.at("x");
    Eigen::VectorXd loc(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) loc[static_cast<Eigen::Index>(i)] = x[i].get<double>();
    atoms.push_back({loc, a.at("w").get<double>()});
  }
  return SpectralMeasure(dim, std::move(atoms));
}

json to_json(const EtsParams& p) {
  json mu = json::array();
  for (Eigen::Index i = 0; i < p.mu.size(); ++i) mu.push_back(p.mu[i]);
  json sigma = json::array();
  for (Eigen::Index i = 0; i < p.sigma.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < p.sigma.cols(); ++k) row.push_back(p.sigma(i, k));
    sigma.push_back(row);
  }
  return {{"alpha", p.alpha}, {"lambda", p.lambda}, {"mu", mu}, {"sigma", sigma}};
}

EtsParams ets_params_from_json(const json& j) {
  EtsParams p;
  p.alpha = j.at("alpha").get<double>();
  p.lambda = j.at("lambda").get<double>();
  const auto& mu = j.at("mu");
  p.mu.resize(static_cast<Eigen::Index>(mu.size()));
  for (std::size_t i = 0; i < mu.size(); ++i)
    p.mu[static_cast<Eigen::Index>(i)] = mu[i].get<double>();
  const auto& sigma = j.at("sigma");
  p.sigma.resize(static_cast<Eigen::Index>(sigma.size()),
                 static_cast<Eigen::Index>(sigma.size()));
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const auto& row = sigma[i];
    if (row.size() != sigma.size())
      throw DomainError("EtsParams: sigma must be square");
    for (std::size_t k = 0; k < row.size(); ++k)
      p.sigma(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          row[k].get<double>();
  }
  p.validate();
  return p;
}

json to_json(const SubordinatorParams& p) {
  return {{"alpha", p.alpha}, {"theta", p.theta}};
}

SubordinatorParams subordinator_params_from_json(const json& j) {
  SubordinatorParams p{j.at("alpha").get<double>(), j.at("theta").get<double>()};
  p.validate();
  return p;
}

json to_json(const GridSpec& g) {
  json axes = json::array();
  for (int i = 0; i < g.dim(); ++i) {
    axes.push_back({{"center", g.axis(i).center},
                    {"half_width", g.axis(i).half_width},
                    {"n", g.axis(i).n}});
  }
  return {{"axes", axes}};
}

GridSpec grid_from_json(const json& j) {
  std::vector<GridSpec::Axis> axes;
  for (const auto& a : j.at("axes")) {
    axes.push_back({a.at("center").get<double>(),
                    a.at("half_width").get<double>(), a.at("n").get<int>()});
  }
  return GridSpec(std::move(axes));
}

std::string batch_csv(const SampleBatch& batch) {
  std::string out;
  for (int j = 0; j < batch.dim; ++j) {
    out += "x" + std::to_string(j + 1);
    out += (j + 1 < batch.dim) ? ',' : '\n';
  }
  for (int i = 0; i < batch.count; ++i) {
    for (int j = 0; j < batch.dim; ++j) {
      out += format_double(batch.values(i, j));
      out += (j + 1 < batch.dim) ? ',' : '\n';
    }
  }
  return out;
}

std::string density_csv(const DensityGrid& density) {
  const GridSpec& g = density.grid;
  std::string out = g.dim() == 1 ? "x,pdf\n" : "x,y,pdf\n";
  const int n0 = g.axis(0).n;
  const int n1 = g.dim() == 2 ? g.axis(1).n : 1;
  for (int j0 = 0; j0 < n0; ++j0) {
    for (int j1 = 0; j1 < n1; ++j1) {
      out += format_double(g.x(0, j0));
      if (g.dim() == 2) {
        out += ',';
        out += format_double(g.x(1, j1));
      }
      out += ',';
      out += format_double(
          density.values[static_cast<Eigen::Index>(g.flat(j0, j1))]);
      out += '\n';
    }
  }
  return out;
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("atomic_write: cannot open " + tmp);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw Error("atomic_write: short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("atomic_write: rename failed for " + path);
}

}  // namespace ets::io
