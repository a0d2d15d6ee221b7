#include "ets/sampling.hpp"

#include <cmath>
#include <cstdio>

#include "ets/dispersion.hpp"

namespace ets {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Kanter / Zolotarev auxiliary function for index beta in (0, 1):
//   a(u) = sin(beta u)^{beta/(1-beta)} sin((1-beta) u) / sin(u)^{1/(1-beta)}
double kanter_a(double u, double beta) {
  return std::pow(std::sin(beta * u), beta / (1.0 - beta)) *
         std::sin((1.0 - beta) * u) /
         std::pow(std::sin(u), 1.0 / (1.0 - beta));
}

double one_stable_draw(Rng& rng, double beta) {
  const double u = kPi * rng.uniform01();
  const double e = rng.exponential();
  return std::pow(kanter_a(u, beta) / e, (1.0 - beta) / beta);
}

void append_double(std::string& s, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g;", v);
  s += buf;
}

}  // namespace

void SampleBatch::validate() const {
  if (count < 1) throw DomainError("SampleBatch: count must be >= 1");
  if (!values.allFinite())
    throw DomainError("SampleBatch: non-finite sample values");
}

std::uint64_t digest_bytes(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t digest_params(const EtsParams& p) {
  std::string s = "ets;";
  append_double(s, p.alpha);
  append_double(s, p.lambda);
  for (Eigen::Index i = 0; i < p.mu.size(); ++i) append_double(s, p.mu[i]);
  for (Eigen::Index i = 0; i < p.sigma.rows(); ++i)
    for (Eigen::Index j = 0; j < p.sigma.cols(); ++j)
      append_double(s, p.sigma(i, j));
  return digest_bytes(s);
}

std::uint64_t digest_params(const SubordinatorParams& p) {
  std::string s = "subordinator;";
  append_double(s, p.alpha);
  append_double(s, p.theta);
  return digest_bytes(s);
}

Eigen::VectorXd sample_positive_stable(RngState rng, double index, int count) {
  if (!(index > 0.0 && index < 1.0))
    throw DomainError("sample_positive_stable: index must be in (0, 1)");
  if (count < 1) throw DomainError("sample_positive_stable: count must be >= 1");
  Rng gen(rng);
  Eigen::VectorXd out(count);
  for (int i = 0; i < count; ++i) out[i] = one_stable_draw(gen, index);
  return out;
}

Eigen::VectorXd sample_tempered_subordinator(RngState rng,
                                             const SubordinatorParams& p,
                                             int count,
                                             double* acceptance_rate,
                                             double max_work_per_sample) {
  p.validate();
  if (count < 1)
    throw DomainError("sample_tempered_subordinator: count must be >= 1");
  const double beta = p.alpha / 2.0;
  const double c = 2.0 * std::pow(p.theta, 1.0 - beta) / p.alpha;
  const double scale = std::pow(c, 1.0 / beta);
  // P(accept) = E e^{-theta * scale * S0} = e^{-c theta^beta} = e^{-2 theta/alpha}
  const double rate = std::exp(-2.0 * p.theta / p.alpha);
  if (acceptance_rate) *acceptance_rate = rate;
  if (1.0 / rate > max_work_per_sample)
    throw BudgetExceeded(
        "sample_tempered_subordinator: acceptance rate too small");

  Rng gen(rng);
  Eigen::VectorXd out(count);
  for (int i = 0; i < count; ++i) {
    for (;;) {
      const double t = scale * one_stable_draw(gen, beta);
      if (gen.uniform01() <= std::exp(-p.theta * t)) {
        out[i] = t;
        break;
      }
    }
  }
  return out;
}

SampleBatch sample_ets(RngState rng, const EtsParams& p, int count) {
  p.validate();
  if (count < 1) throw DomainError("sample_ets: count must be >= 1");
  const Eigen::MatrixXd delta = cholesky(p.sigma);
  const int n = p.dim();

  // Subordinator draws come from a deterministically derived sub-stream so
  // they stay independent of the Gaussian draws.
  const SubordinatorParams sub{p.alpha, p.lambda};
  Eigen::VectorXd t = sample_tempered_subordinator(
      {rng.seed, splitmix64(rng.stream ^ 0x5ab0dULL)}, sub, count);

  Rng gen(rng);
  SampleBatch batch;
  batch.dim = n;
  batch.count = count;
  batch.params_digest = digest_params(p);
  batch.values.resize(count, n);
  Eigen::VectorXd z(n);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < n; ++j) z[j] = gen.normal();
    batch.values.row(i) =
        (p.mu + std::sqrt(t[i]) * (delta * z)).transpose();
  }
  batch.validate();
  return batch;
}

SampleBatch transform_samples(const SampleBatch& batch,
                              const Eigen::MatrixXd& delta) {
  if (delta.cols() != batch.dim)
    throw DomainError("transform_samples: dimension mismatch");
  SampleBatch out = batch;
  out.dim = static_cast<int>(delta.rows());
  out.values = batch.values * delta.transpose();
  out.params_digest = digest_bytes("transformed;" +
                                   std::to_string(batch.params_digest));
  out.validate();
  return out;
}

}  // namespace ets
