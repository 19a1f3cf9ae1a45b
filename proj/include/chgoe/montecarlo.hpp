#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chgoe {

struct CorrelationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SampleError : std::runtime_error {
  SampleError(const std::string& what, long index) : std::runtime_error(what), index(index) {}
  long index;
};

/// Real Wishart sampling setup: W = C^{1/2} G with G a p x n standard
/// Gaussian matrix. No correlation matrix means C = identity.
struct SamplerConfig {
  int p = 1;
  int n = 1;
  std::optional<Eigen::MatrixXd> correlation;
  long num_samples = 0;
  std::uint64_t seed = 0;

  int nu() const { return n - p; }
  /// Throws std::invalid_argument or CorrelationError.
  void validate() const;
};

struct SampleBatch {
  SamplerConfig config;
  std::vector<double> smallest_eigenvalues;
  std::string rng_algorithm;
  /// Factor already applied to every entry (4p after microscopic_rescale).
  double scale = 1.0;
};

/// Description of the per-sample random stream, recorded in SampleBatch.
extern const char* const kRngAlgorithm;

/// Seed of the generator for sample `index`; independent of thread layout.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// Smallest singular value of a p x n matrix (p <= n) via Householder
/// bidiagonalization and bisection on the Golub-Kahan tridiagonal.
double smallest_singular_value(const Eigen::MatrixXd& w);

/// Draws the batch with OpenMP threads. Bit-identical to the serial version.
SampleBatch sample_batch(const SamplerConfig& config);
SampleBatch sample_batch_serial(const SamplerConfig& config);

struct GapEstimate {
  double value;
  double std_error;
};

/// Fraction of samples above t with its binomial standard error.
GapEstimate empirical_gap(const SampleBatch& batch, double t);

/// sup |F_emp - F| over the sample points, with F the analytic CDF.
double ks_distance(const SampleBatch& batch, const std::function<double(double)>& cdf);

/// λ -> u = 4 p λ, and back.
SampleBatch microscopic_rescale(const SampleBatch& batch);
SampleBatch microscopic_unscale(const SampleBatch& batch);

/// tr(C^{-1}) / p. Multiplying u = 4 p λ by this factor puts a correlated
/// batch on the hard-edge scale of the uncorrelated ensemble.
double hard_edge_unfolding(const Eigen::MatrixXd& c);

/// C_ij = rho^{|i-j|}.
Eigen::MatrixXd exponential_decay_correlation(int p, double rho);

/// Symmetric to 1e-12 (relative to the largest entry) and Cholesky succeeds.
void validate_correlation(const Eigen::MatrixXd& c);

/// Reads p rows of p comma-separated reals and validates the matrix.
Eigen::MatrixXd read_correlation_csv(const std::string& path, int p);

/// CDF x -> 1 - gap(x) tabulated on [0, x_max] and linearly interpolated;
/// points are uniform in sqrt(x). Beyond x_max the value is 1 - gap(x_max).
class InterpolatedCdf {
 public:
  InterpolatedCdf(const std::function<double(double)>& gap, double x_max, int points = 4000,
                  bool parallel = true);
  double operator()(double x) const;

 private:
  double x_max_;
  std::vector<double> s_;
  std::vector<double> f_;
};

}  // namespace chgoe
