#include "chgoe/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <random>
#include <sstream>

namespace chgoe {

const char* const kRngAlgorithm =
    "mt19937_64 per sample, seeded with splitmix64(seed, sample index); std::normal_distribution";

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Number of eigenvalues below x of the 2p x 2p Golub-Kahan matrix with zero
// diagonal and off-diagonal b.
int sturm_count(const std::vector<double>& b, double x) {
  constexpr double tiny = 1e-300;
  int count = 0;
  double q = -x;
  if (q < 0) ++count;
  for (double bi : b) {
    if (std::fabs(q) < tiny) q = -tiny;
    q = -x - bi * bi / q;
    if (q < 0) ++count;
  }
  return count;
}

struct Prepared {
  int p, n;
  bool identity;
  Eigen::MatrixXd chol;
};

Prepared prepare(const SamplerConfig& c) {
  c.validate();
  Prepared pr{c.p, c.n, !c.correlation.has_value(), {}};
  if (c.correlation) pr.chol = Eigen::LLT<Eigen::MatrixXd>(*c.correlation).matrixL();
  return pr;
}

double draw_one(const Prepared& pr, std::uint64_t seed, long index) {
  std::mt19937_64 gen(sample_seed(seed, static_cast<std::uint64_t>(index)));
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd g(pr.p, pr.n);
  for (int j = 0; j < pr.n; ++j)
    for (int i = 0; i < pr.p; ++i) g(i, j) = normal(gen);
  const double s = pr.identity ? smallest_singular_value(g)
                               : smallest_singular_value(pr.chol.triangularView<Eigen::Lower>() * g);
  const double lambda = s * s;
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw SampleError("sample " + std::to_string(index) + ": degenerate smallest eigenvalue", index);
  return lambda;
}

SampleBatch empty_batch(const SamplerConfig& c) {
  SampleBatch b;
  b.config = c;
  b.rng_algorithm = kRngAlgorithm;
  b.smallest_eigenvalues.resize(c.num_samples);
  return b;
}

}  // namespace

void SamplerConfig::validate() const {
  if (p < 1) throw std::invalid_argument("SamplerConfig: p must be >= 1");
  if (n < p) throw std::invalid_argument("SamplerConfig: n must be >= p");
  if (num_samples < 1) throw std::invalid_argument("SamplerConfig: num_samples must be >= 1");
  if (correlation) {
    if (correlation->rows() != p || correlation->cols() != p)
      throw CorrelationError("correlation matrix must be " + std::to_string(p) + "x" +
                             std::to_string(p));
    validate_correlation(*correlation);
  }
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

double smallest_singular_value(const Eigen::MatrixXd& w) {
  // Work on A = W^T (n x p, tall) and reduce it to upper bidiagonal form.
  Eigen::MatrixXd a = w.transpose();
  const Eigen::Index m = a.rows(), p = a.cols();
  if (p == 0) return 0.0;
  if (m < p) throw std::invalid_argument("smallest_singular_value: need rows <= cols");
  std::vector<double> d(p), e(p > 1 ? p - 1 : 0);
  Eigen::VectorXd work(std::max(m, p));
  for (Eigen::Index k = 0; k < p; ++k) {
    double tau, beta;
    Eigen::VectorXd ess(m - k - 1);
    auto col = a.col(k).tail(m - k);
    col.makeHouseholder(ess, tau, beta);
    d[k] = beta;
    if (k + 1 < p)
      a.bottomRightCorner(m - k, p - k - 1).applyHouseholderOnTheLeft(ess, tau, work.data());
    if (k + 1 < p) {
      Eigen::VectorXd ess_r(p - k - 2);
      const Eigen::VectorXd row = a.row(k).tail(p - k - 1).transpose();
      row.makeHouseholder(ess_r, tau, beta);
      e[k] = beta;
      a.bottomRightCorner(m - k - 1, p - k - 1).applyHouseholderOnTheRight(ess_r, tau, work.data());
    }
  }
  // Golub-Kahan tridiagonal: off-diagonal (d0, e0, d1, e1, ..., d_{p-1}),
  // eigenvalues ±σ_i.
  std::vector<double> b;
  b.reserve(2 * p - 1);
  double bound = 0.0;
  for (Eigen::Index k = 0; k < p; ++k) {
    b.push_back(d[k]);
    if (k + 1 < p) b.push_back(e[k]);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double left = i > 0 ? std::fabs(b[i - 1]) : 0.0;
    bound = std::max(bound, left + std::fabs(b[i]));
  }
  bound = std::max(bound, std::fabs(b.back()));
  const int target = static_cast<int>(p) + 1;
  double lo = 0.0, hi = bound * (1.0 + 1e-12) + 1e-300;
  for (int it = 0; it < 200 && hi - lo > 4e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(b, mid) >= target)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

SampleBatch sample_batch_serial(const SamplerConfig& config) {
  const Prepared pr = prepare(config);
  SampleBatch b = empty_batch(config);
  for (long i = 0; i < config.num_samples; ++i)
    b.smallest_eigenvalues[i] = draw_one(pr, config.seed, i);
  return b;
}

SampleBatch sample_batch(const SamplerConfig& config) {
  const Prepared pr = prepare(config);
  SampleBatch b = empty_batch(config);
  std::exception_ptr failure;
  const long n = config.num_samples;
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    try {
      b.smallest_eigenvalues[i] = draw_one(pr, config.seed, i);
    } catch (...) {
#pragma omp critical(chgoe_sample_error)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return b;
}

GapEstimate empirical_gap(const SampleBatch& batch, double t) {
  const auto& xs = batch.smallest_eigenvalues;
  if (xs.empty()) throw std::invalid_argument("empirical_gap: empty batch");
  if (t <= 0.0) return {1.0, 0.0};
  const double above =
      static_cast<double>(std::count_if(xs.begin(), xs.end(), [t](double x) { return x > t; }));
  const double n = static_cast<double>(xs.size());
  const double e = above / n;
  return {e, std::sqrt(e * (1.0 - e) / n)};
}

double ks_distance(const SampleBatch& batch, const std::function<double(double)>& cdf) {
  std::vector<double> xs = batch.smallest_eigenvalues;
  if (xs.empty()) throw std::invalid_argument("ks_distance: empty batch");
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

SampleBatch microscopic_rescale(const SampleBatch& batch) {
  SampleBatch out = batch;
  const double f = 4.0 * batch.config.p;
  for (double& x : out.smallest_eigenvalues) x *= f;
  out.scale = batch.scale * f;
  return out;
}

SampleBatch microscopic_unscale(const SampleBatch& batch) {
  SampleBatch out = batch;
  const double f = 4.0 * batch.config.p;
  for (double& x : out.smallest_eigenvalues) x /= f;
  out.scale = batch.scale / f;
  return out;
}

double hard_edge_unfolding(const Eigen::MatrixXd& c) {
  validate_correlation(c);
  const Eigen::LLT<Eigen::MatrixXd> llt(c);
  const Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(c.rows(), c.cols()));
  return inv.trace() / static_cast<double>(c.rows());
}

Eigen::MatrixXd exponential_decay_correlation(int p, double rho) {
  if (p < 1) throw std::invalid_argument("exponential_decay_correlation: p must be >= 1");
  if (!(std::fabs(rho) < 1.0))
    throw std::invalid_argument("exponential_decay_correlation: |rho| must be < 1");
  Eigen::MatrixXd c(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) c(i, j) = std::pow(rho, std::abs(i - j));
  return c;
}

void validate_correlation(const Eigen::MatrixXd& c) {
  if (c.rows() != c.cols()) throw CorrelationError("correlation matrix is not square");
  if (!c.allFinite()) throw CorrelationError("correlation matrix has non-finite entries");
  const double scale = std::max(c.cwiseAbs().maxCoeff(), 1e-300);
  const double asym = (c - c.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale)
    throw CorrelationError("correlation matrix is not symmetric (max |C - C^T| = " +
                           std::to_string(asym) + ")");
  Eigen::LLT<Eigen::MatrixXd> llt(c);
  if (llt.info() != Eigen::Success) throw CorrelationError("correlation matrix is not positive definite");
}

Eigen::MatrixXd read_correlation_csv(const std::string& path, int p) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open correlation file '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw CorrelationError(path + ":" + std::to_string(lineno) + ": not a number: '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != p)
    throw CorrelationError(path + ": expected " + std::to_string(p) + " rows, found " +
                           std::to_string(rows.size()));
  Eigen::MatrixXd c(p, p);
  for (int i = 0; i < p; ++i) {
    if (static_cast<int>(rows[i].size()) != p)
      throw CorrelationError(path + ": row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " values, expected " + std::to_string(p));
    for (int j = 0; j < p; ++j) c(i, j) = rows[i][j];
  }
  validate_correlation(c);
  return c;
}

InterpolatedCdf::InterpolatedCdf(const std::function<double(double)>& gap, double x_max,
                                 int points, bool parallel)
    : x_max_(x_max), s_(points + 1), f_(points + 1) {
  if (!(x_max > 0.0) || points < 2) throw std::invalid_argument("InterpolatedCdf: bad range");
  const double smax = std::sqrt(x_max);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i <= points; ++i) {
    const double s = smax * i / points;
    s_[i] = s;
    try {
      f_[i] = 1.0 - gap(s * s);
    } catch (...) {
#pragma omp critical(chgoe_cdf_error)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

double InterpolatedCdf::operator()(double x) const {
  if (x <= 0.0) return f_.front();
  if (x >= x_max_) return f_.back();
  const double s = std::sqrt(x);
  const double h = s_[1] - s_[0];
  const std::size_t i = std::min(static_cast<std::size_t>(s / h), s_.size() - 2);
  const double w = (s - s_[i]) / h;
  return (1.0 - w) * f_[i] + w * f_[i + 1];
}

}  // namespace chgoe
