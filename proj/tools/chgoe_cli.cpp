// Command-line front end: analytic curves, Monte-Carlo comparisons,
// convergence studies and a built-in identity check.

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chgoe/distributions.hpp"
#include "chgoe/io.hpp"
#include "chgoe/kernels.hpp"
#include "chgoe/microscopic.hpp"
#include "chgoe/montecarlo.hpp"
#include "chgoe/pfaffian.hpp"
#include "chgoe/quadrature.hpp"
#include "chgoe/sop.hpp"
#include "chgoe/specfun.hpp"

namespace fs = std::filesystem;
using namespace chgoe;

namespace {

enum Exit { kOk = 0, kParam = 2, kValidation = 3, kIo = 4 };

struct ParamError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  int threads = 0;
  std::string out_dir;
};

struct GridOpts {
  double lo = 1e-3;
  double hi = 3.0;
  int points = 200;
  std::vector<double> values;  // explicit list overrides lo/hi/points
};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::vector<double> make_grid(const GridOpts& g, const char* name) {
  if (!g.values.empty()) {
    std::vector<double> v = g.values;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!(v[i] >= 0.0)) throw ParamError(std::string("--") + name + " values must be >= 0");
      if (i > 0 && !(v[i] > v[i - 1]))
        throw ParamError(std::string("--") + name + " values must be strictly increasing");
    }
    return v;
  }
  if (g.points < 1) throw ParamError("--points must be >= 1");
  if (!(g.lo >= 0.0) || !(g.hi >= g.lo))
    throw ParamError(std::string("need 0 <= --") + name + "-min <= --" + name + "-max");
  if (g.points > 1 && !(g.hi > g.lo))
    throw ParamError(std::string("need --") + name + "-min < --" + name + "-max for several points");
  std::vector<double> v(g.points);
  for (int i = 0; i < g.points; ++i)
    v[i] = g.points == 1 ? g.lo : g.lo + (g.hi - g.lo) * i / (g.points - 1);
  return v;
}

std::string join_numbers(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_number(v[i]);
  return s;
}

std::string resolve_out(const Globals& g, const std::string& explicit_path,
                        const std::string& default_name) {
  if (!explicit_path.empty()) return explicit_path;
  const std::string dir = g.out_dir.empty() ? default_output_dir() : g.out_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir + "': " + ec.message());
  return (fs::path(dir) / default_name).string();
}

void write_manifest(RunManifest m, const std::string& primary, const Timer& timer) {
  m.version = library_version();
  m.wall_seconds = timer.seconds();
  m.write(primary + ".manifest");
}

int resolve_k(int k, int nu, bool nu_given, bool k_given) {
  if (nu_given && k_given) throw ParamError("give either --k or --nu, not both");
  if (nu_given) {
    if (nu < 0 || nu % 2 != 0) throw ParamError("--nu must be a non-negative even integer");
    return nu / 2;
  }
  if (k < 0) throw ParamError("--k must be >= 0");
  return k;
}

// ----------------------------------------------------------------- gap / smallest

struct FiniteOpts {
  int p = 0;
  int k = 0;
  int nu = 0;
  GridOpts grid;
  std::string out;
};

int run_finite(const Globals& g, const FiniteOpts& o, bool nu_given, bool k_given, Quantity q) {
  Timer timer;
  if (o.p < 1) throw ParamError("--p must be >= 1");
  const int k = resolve_k(o.k, o.nu, nu_given, k_given);
  const auto grid = make_grid(o.grid, "t");
  if (q == Quantity::SmallestFinite && grid.front() <= 0.0)
    throw ParamError("smallest: t values must be > 0");
  const auto curve = tabulate(q, o.p, k, grid);
  const std::string name = std::string(q == Quantity::GapFinite ? "gap" : "smallest") + "_p" +
                           std::to_string(o.p) + "_k" + std::to_string(k) + ".csv";
  const std::string path = resolve_out(g, o.out, name);
  write_curve_csv(path, "t", curve.samples);
  if (grid.size() == 1) std::cout << format_number(curve.samples[0].value) << '\n';
  RunManifest m;
  m.command = q == Quantity::GapFinite ? "gap" : "smallest";
  m.parameters = {{"p", std::to_string(o.p)}, {"k", std::to_string(k)}, {"nu", std::to_string(2 * k)},
                  {"t", join_numbers(grid)}, {"threads", std::to_string(omp_get_max_threads())}};
  m.outputs = {path};
  write_manifest(m, path, timer);
  std::cerr << "wrote " << path << " (" << grid.size() << " rows)\n";
  return kOk;
}

// ----------------------------------------------------------------- micro

struct MicroOpts {
  std::string quantity = "gap";
  int k = 0;
  int nu = 0;
  GridOpts grid{0.05, 20.0, 200, {}};
  std::string out;
};

int run_micro(const Globals& g, const MicroOpts& o, bool nu_given, bool k_given) {
  Timer timer;
  Quantity q;
  int index;
  if (o.quantity == "density") {
    q = Quantity::Density;
    if (k_given && nu_given) throw ParamError("give either --k or --nu, not both");
    index = nu_given ? o.nu : 2 * o.k;
    if (index < 0) throw ParamError("--nu must be >= 0");
  } else {
    q = o.quantity == "gap" ? Quantity::GapMicro : Quantity::SmallestMicro;
    index = resolve_k(o.k, o.nu, nu_given, k_given);
  }
  const auto grid = make_grid(o.grid, "u");
  if (q != Quantity::GapMicro && grid.front() <= 0.0)
    throw ParamError("micro: u values must be > 0 for " + o.quantity);
  const auto curve = tabulate(q, 0, index, grid);
  const std::string name = "micro_" + o.quantity + (q == Quantity::Density ? "_nu" : "_k") +
                           std::to_string(index) + ".csv";
  const std::string path = resolve_out(g, o.out, name);
  write_curve_csv(path, "u", curve.samples);
  if (grid.size() == 1) std::cout << format_number(curve.samples[0].value) << '\n';
  RunManifest m;
  m.command = "micro";
  m.parameters = {{"quantity", o.quantity},
                  {q == Quantity::Density ? "nu" : "k", std::to_string(index)},
                  {"u", join_numbers(grid)},
                  {"threads", std::to_string(omp_get_max_threads())}};
  m.outputs = {path};
  write_manifest(m, path, timer);
  std::cerr << "wrote " << path << " (" << grid.size() << " rows)\n";
  return kOk;
}

// ----------------------------------------------------------------- mc

struct McOpts {
  int p = 0;
  int nu = 0;
  long samples = 0;
  std::uint64_t seed = 42;
  std::string c_file;
  double exp_decay = -1.0;
  std::string compare = "finite";
  int bins = 50;
  double ks_max = -1.0;
  bool unfold = false;
  std::string out;
};

int run_mc(const Globals& g, const McOpts& o) {
  Timer timer;
  if (o.p < 1) throw ParamError("--p must be >= 1");
  if (o.nu < 0) throw ParamError("--nu must be >= 0");
  if (o.samples < 1) throw ParamError("--samples must be >= 1");
  if (o.bins < 1) throw ParamError("--bins must be >= 1");
  if (o.compare != "finite" && o.compare != "micro" && o.compare != "none")
    throw ParamError("--compare must be finite, micro or none");
  if (o.compare != "none" && o.nu % 2 != 0)
    throw ParamError("--compare needs an even --nu (analytic curves exist for nu = 2k only)");
  if (!o.c_file.empty() && o.exp_decay >= 0.0)
    throw ParamError("give either --c-file or --exp-decay, not both");
  if (o.unfold && o.compare != "micro") throw ParamError("--unfold requires --compare micro");

  SamplerConfig cfg;
  cfg.p = o.p;
  cfg.n = o.p + o.nu;
  cfg.num_samples = o.samples;
  cfg.seed = o.seed;
  std::string c_desc = "identity";
  if (!o.c_file.empty()) {
    try {
      cfg.correlation = read_correlation_csv(o.c_file, o.p);
    } catch (const std::ios_base::failure& e) {
      throw IoError(e.what());
    } catch (const CorrelationError& e) {
      throw ParamError(std::string("invalid correlation matrix: ") + e.what());
    }
    c_desc = "file:" + o.c_file;
  } else if (o.exp_decay >= 0.0) {
    if (!(o.exp_decay < 1.0)) throw ParamError("--exp-decay must lie in [0, 1)");
    cfg.correlation = exponential_decay_correlation(o.p, o.exp_decay);
    c_desc = "exp-decay rho=" + format_number(o.exp_decay);
  }

  SampleBatch batch = sample_batch(cfg);
  const bool micro = o.compare == "micro";
  if (micro) batch = microscopic_rescale(batch);
  double unfolding = 1.0;
  if (o.unfold && cfg.correlation) {
    unfolding = hard_edge_unfolding(*cfg.correlation);
    for (double& x : batch.smallest_eigenvalues) x *= unfolding;
    batch.scale *= unfolding;
  }
  const char* xname = micro ? "u" : "lambda";
  const int k = o.nu / 2;

  const std::string stem = "mc_p" + std::to_string(o.p) + "_nu" + std::to_string(o.nu) + "_seed" +
                           std::to_string(o.seed);
  const std::string sample_path = resolve_out(g, o.out, stem + "_samples.csv");
  const std::string hist_path = sample_path.substr(0, sample_path.rfind(".csv")) + "_hist.csv";

  std::vector<std::vector<double>> rows;
  rows.reserve(batch.smallest_eigenvalues.size());
  for (double x : batch.smallest_eigenvalues) rows.push_back({x});
  write_table_csv(sample_path, {xname}, rows);

  std::vector<double> sorted = batch.smallest_eigenvalues;
  std::sort(sorted.begin(), sorted.end());
  const double x_hi = sorted[static_cast<std::size_t>(0.995 * (sorted.size() - 1))];
  const double width = x_hi / o.bins;

  std::ostringstream summary;
  summary << "samples = " << o.samples << "\nseed = " << o.seed << "\ncorrelation = " << c_desc << '\n';
  if (o.unfold) summary << "unfolding = " << format_number(unfolding) << '\n';
  double ks = -1.0;
  std::vector<std::vector<double>> hist;
  std::vector<std::string> hist_header = {"x_lo", "x_hi", "empirical_density"};
  if (o.compare != "none") {
    std::function<double(double)> gap;
    if (micro)
      gap = [k](double u) { return gap_micro(k, u); };
    else
      gap = [p = o.p, k](double t) { return gap_finite({p, k, t}); };
    const InterpolatedCdf cdf(gap, sorted.back() * 1.001);
    ks = ks_distance(batch, cdf);
    summary << "ks_distance = " << format_number(ks) << '\n';
    hist_header.push_back("analytic_density");
    for (double q : {0.25, 0.5, 0.75}) {
      const double x = sorted[static_cast<std::size_t>(q * (sorted.size() - 1))];
      const auto est = empirical_gap(batch, x);
      summary << "gap_at_" << format_number(x) << " = " << format_number(est.value) << " +- "
              << format_number(est.std_error) << " (analytic " << format_number(gap(x)) << ")\n";
    }
    for (int b = 0; b < o.bins; ++b) {
      const double a = b * width, c = (b + 1) * width;
      const auto cnt = std::count_if(sorted.begin(), sorted.end(),
                                     [&](double x) { return x > a && x <= c; });
      hist.push_back({a, c, cnt / (width * o.samples), (cdf(c) - cdf(a)) / width});
    }
  } else {
    for (int b = 0; b < o.bins; ++b) {
      const double a = b * width, c = (b + 1) * width;
      const auto cnt = std::count_if(sorted.begin(), sorted.end(),
                                     [&](double x) { return x > a && x <= c; });
      hist.push_back({a, c, cnt / (width * o.samples)});
    }
  }
  write_table_csv(hist_path, hist_header, hist);
  std::cout << summary.str();

  RunManifest m;
  m.command = "mc";
  m.parameters = {{"p", std::to_string(o.p)},
                  {"nu", std::to_string(o.nu)},
                  {"samples", std::to_string(o.samples)},
                  {"compare", o.compare},
                  {"correlation", c_desc},
                  {"bins", std::to_string(o.bins)},
                  {"rng", batch.rng_algorithm},
                  {"threads", std::to_string(omp_get_max_threads())}};
  if (o.unfold) m.parameters.push_back({"unfolding", format_number(unfolding)});
  if (ks >= 0) m.parameters.push_back({"ks_distance", format_number(ks)});
  m.seeds = {o.seed};
  m.outputs = {sample_path, hist_path};
  write_manifest(m, sample_path, timer);
  std::cerr << "wrote " << sample_path << " and " << hist_path << '\n';
  if (o.ks_max >= 0.0 && ks > o.ks_max)
    throw ValidationFailure("KS distance " + format_number(ks) + " exceeds --ks-max " +
                            format_number(o.ks_max));
  return kOk;
}

// ----------------------------------------------------------------- converge

struct ConvergeOpts {
  int k = 2;
  std::vector<int> ps{11, 51, 131};
  double u_max = 25.0;
  int points = 250;
  std::string out;
};

int run_converge(const Globals& g, const ConvergeOpts& o) {
  Timer timer;
  if (o.k < 0) throw ParamError("--k must be >= 0");
  if (o.ps.empty()) throw ParamError("--p needs at least one value");
  for (int p : o.ps)
    if (p < 2) throw ParamError("--p values must be >= 2");
  if (!(o.u_max > 0.0) || o.points < 2) throw ParamError("need --u-max > 0 and --points >= 2");
  std::vector<double> grid(o.points);
  for (int i = 0; i < o.points; ++i) grid[i] = o.u_max * (i + 1) / o.points;

  const auto limit = tabulate(Quantity::SmallestMicro, 0, o.k, grid);
  std::vector<std::vector<double>> cols;
  std::vector<double> devs;
  for (int p : o.ps) {
    std::vector<double> t(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) t[i] = grid[i] / (4.0 * p);
    const auto c = tabulate(Quantity::SmallestFinite, p, o.k, t);
    std::vector<double> v(grid.size());
    double dev = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      v[i] = c.samples[i].value / (4.0 * p);
      dev = std::max(dev, std::fabs(v[i] - limit.samples[i].value));
    }
    cols.push_back(std::move(v));
    devs.push_back(dev);
  }
  std::vector<std::string> header{"u"};
  for (int p : o.ps) header.push_back("p" + std::to_string(p));
  header.push_back("limit");
  std::vector<std::vector<double>> rows(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    rows[i].push_back(grid[i]);
    for (const auto& c : cols) rows[i].push_back(c[i]);
    rows[i].push_back(limit.samples[i].value);
  }
  const std::string path = resolve_out(g, o.out, "converge_k" + std::to_string(o.k) + ".csv");
  write_table_csv(path, header, rows);

  RunManifest m;
  m.command = "converge";
  std::string plist;
  for (std::size_t i = 0; i < o.ps.size(); ++i) plist += (i ? "," : "") + std::to_string(o.ps[i]);
  m.parameters = {{"k", std::to_string(o.k)}, {"p", plist}, {"u_max", format_number(o.u_max)},
                  {"points", std::to_string(o.points)}};
  for (std::size_t i = 0; i < o.ps.size(); ++i) {
    std::cout << "p = " << o.ps[i] << "  sup|P_p - P_limit| = " << format_number(devs[i]) << '\n';
    m.parameters.push_back({"max_deviation_p" + std::to_string(o.ps[i]), format_number(devs[i])});
  }
  m.outputs = {path};
  write_manifest(m, path, timer);
  std::cerr << "wrote " << path << '\n';
  for (std::size_t i = 1; i < devs.size(); ++i)
    if (!(devs[i] < devs[i - 1]))
      throw ValidationFailure("deviation does not decrease from p=" + std::to_string(o.ps[i - 1]) +
                              " to p=" + std::to_string(o.ps[i]));
  return kOk;
}

// ----------------------------------------------------------------- expdecay

int run_expdecay(const Globals& g, int p, double rho, const std::string& out) {
  Timer timer;
  if (p < 1) throw ParamError("--p must be >= 1");
  if (!(rho >= 0.0 && rho < 1.0)) throw ParamError("--rho must lie in [0, 1)");
  const Eigen::MatrixXd c = exponential_decay_correlation(p, rho);
  const std::string path = resolve_out(g, out, "expdecay_p" + std::to_string(p) + ".csv");
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) f << (j ? "," : "") << format_number(c(i, j));
    f << '\n';
  }
  if (!f) throw IoError("write to '" + path + "' failed");
  f.close();
  RunManifest m;
  m.command = "expdecay";
  m.parameters = {{"p", std::to_string(p)}, {"rho", format_number(rho)}};
  m.outputs = {path};
  write_manifest(m, path, timer);
  std::cerr << "wrote " << path << '\n';
  return kOk;
}

// ----------------------------------------------------------------- selftest

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

std::vector<Check> selftest_checks() {
  std::vector<Check> out;
  auto add = [&](std::string n, bool ok, std::string d) { out.push_back({std::move(n), ok, std::move(d)}); };

  {
    double worst = 0.0;
    for (double z : {0.7, 3.2, 41.5})
      worst = std::max(worst, std::fabs(ln_gamma(z) + ln_gamma(z + 0.5) -
                                        ((1 - 2 * z) * std::log(2.0) + 0.5 * std::log(M_PI) + ln_gamma(2 * z))));
    add("ln_gamma duplication formula", worst < 1e-12, "max abs err " + format_number(worst));
  }
  {
    double worst = 0.0;
    for (double a : {0.5, 5.5, 40.5, 200.0})
      for (double b : {-1.5, -0.5, 0.5, 1.5, 2.5})
        for (double t : {1e-6, 0.3, 7.0, 50.0}) {
          if (a + 1 - b <= 0) continue;
          const LogScaled lhs = tricomi_u(a, b, t);
          const LogScaled rhs =
              LogScaled::from_log((1 - b) * std::log(t)) * tricomi_u(a + 1 - b, 2 - b, t);
          worst = std::max(worst, std::fabs(lhs.log_magnitude - rhs.log_magnitude));
        }
    add("Kummer transformation of U", worst < 1e-9, "max rel err " + format_number(worst));
  }
  {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> uni(-1, 1);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const int dim = 2 * (1 + trial % 6);
      std::vector<double> up(dim * (dim - 1) / 2);
      for (auto& x : up) x = uni(gen);
      const AntisymmetricMatrix a(dim, up);
      const double pf = pfaffian(a);
      const double det = a.dense().partialPivLu().determinant();
      worst = std::max(worst, rel(pf * pf, det));
    }
    add("pf^2 = det on 200 random matrices", worst < 1e-10, "max rel err " + format_number(worst));
  }
  {
    const WeightParams w{0, 1.0, 1.0};
    const double r0 = sop_norm(0, w).to_double();
    const double s10 = skew_product_oracle(sop_even(0, w), sop_odd(0, w), w);
    const double s20 = skew_product_oracle(sop_even(1, w), sop_even(0, w), w);
    add("skew-orthogonality spot check", rel(s10, r0) < 1e-5 && std::fabs(s20) < 1e-6 * r0,
        "<R0,R1>/r0 - 1 = " + format_number(s10 / r0 - 1) + ", <R2,R0>/r0 = " + format_number(s20 / r0));
  }
  {
    double worst0 = 0.0, worst1 = 0.0;
    for (int p = 2; p <= 12; ++p)
      for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        worst0 = std::max(worst0, rel(smallest_finite({p, 0, t}), closed_form_k0(p, t)));
        worst1 = std::max(worst1, rel(smallest_finite({p, 1, t}), closed_form_k1(p, t)));
      }
    add("nu=0 closed form", worst0 < 1e-10, "max rel err " + format_number(worst0));
    add("nu=2 closed form", worst1 < 1e-10, "max rel err " + format_number(worst1));
  }
  {
    double worst = 0.0;
    for (double u : {0.1, 1.0, 4.0, 30.0}) {
      worst = std::max(worst, rel(gap_micro(0, u), std::exp(-u / 8 - std::sqrt(u) / 2)));
      worst = std::max(worst, rel(smallest_micro(0, u), (std::sqrt(u) + 2) / (8 * std::sqrt(u)) *
                                                            std::exp(-u / 8 - std::sqrt(u) / 2)));
    }
    add("hard-edge k=0 closed forms", worst < 1e-12, "max rel err " + format_number(worst));
  }
  {
    const double norm = integrate_adaptive([](double t) { return smallest_finite({7, 2, t}); }, 0.0,
                                           INFINITY, 1e-10);
    add("normalization of P_{7,4}", rel(norm, 1.0) < 1e-6, "integral - 1 = " + format_number(norm - 1));
  }
  return out;
}

int run_selftest() {
  const auto checks = selftest_checks();
  bool all = true;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
    all = all && c.pass;
  }
  if (!all) throw ValidationFailure("selftest: at least one identity failed");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smallest-eigenvalue and gap distributions of the real Wishart-Laguerre ensemble"};
  app.require_subcommand(1);
  app.set_version_flag("--version", library_version());
  Globals globals;
  app.add_option("--threads", globals.threads, "OpenMP threads (0 = runtime default)");
  app.add_option("--out-dir", globals.out_dir,
                 std::string("Output directory (default: $") + kOutputDirEnv + " or .)");

  auto add_grid = [](CLI::App* sub, GridOpts& g, const std::string& v) {
    sub->add_option("--" + v + "-min", g.lo, "Smallest grid value")->capture_default_str();
    sub->add_option("--" + v + "-max", g.hi, "Largest grid value")->capture_default_str();
    sub->add_option("--points", g.points, "Number of uniform grid points")->capture_default_str();
    sub->add_option("--" + v, g.values, "Explicit grid values (comma-separated)")->delimiter(',');
  };

  FiniteOpts gap_o, small_o;
  CLI::Option *gap_k, *gap_nu, *sm_k, *sm_nu;
  auto* gap = app.add_subcommand("gap", "Finite-p gap probability E_{p,2k}(t)");
  gap->add_option("--p", gap_o.p, "Matrix rows p")->required();
  gap_k = gap->add_option("--k", gap_o.k, "nu/2");
  gap_nu = gap->add_option("--nu", gap_o.nu, "Even topology nu");
  add_grid(gap, gap_o.grid, "t");
  gap->add_option("--out", gap_o.out, "Output CSV path");
  auto* small = app.add_subcommand("smallest", "Finite-p smallest-eigenvalue density P_{p,2k}(t)");
  small->add_option("--p", small_o.p, "Matrix rows p")->required();
  sm_k = small->add_option("--k", small_o.k, "nu/2");
  sm_nu = small->add_option("--nu", small_o.nu, "Even topology nu");
  add_grid(small, small_o.grid, "t");
  small->add_option("--out", small_o.out, "Output CSV path");

  MicroOpts micro_o;
  auto* micro = app.add_subcommand("micro", "Hard-edge limit curves in u = 4 p t");
  micro->add_option("--quantity", micro_o.quantity, "gap | smallest | density")
      ->check(CLI::IsMember({"gap", "smallest", "density"}))
      ->capture_default_str();
  auto* mi_k = micro->add_option("--k", micro_o.k, "nu/2");
  auto* mi_nu = micro->add_option("--nu", micro_o.nu, "Topology nu");
  add_grid(micro, micro_o.grid, "u");
  micro->add_option("--out", micro_o.out, "Output CSV path");

  McOpts mc_o;
  auto* mc = app.add_subcommand("mc", "Monte-Carlo sampling of (correlated) real Wishart matrices");
  mc->add_option("--p", mc_o.p, "Matrix rows p")->required();
  mc->add_option("--nu", mc_o.nu, "n - p")->required();
  mc->add_option("--samples", mc_o.samples, "Number of matrices")->required();
  mc->add_option("--seed", mc_o.seed, "RNG seed")->capture_default_str();
  mc->add_option("--c-file", mc_o.c_file, "Correlation matrix CSV (p rows of p values)");
  mc->add_option("--exp-decay", mc_o.exp_decay, "Use C_ij = rho^|i-j| with this rho");
  mc->add_option("--compare", mc_o.compare, "finite | micro | none")->capture_default_str();
  mc->add_option("--bins", mc_o.bins, "Histogram bins")->capture_default_str();
  mc->add_option("--ks-max", mc_o.ks_max, "Fail with exit code 3 if the KS distance exceeds this");
  mc->add_flag("--unfold", mc_o.unfold, "With --compare micro, also multiply u by tr(C^-1)/p");
  mc->add_option("--out", mc_o.out, "Samples CSV path (histogram goes next to it)");

  ConvergeOpts cv_o;
  auto* cv = app.add_subcommand("converge", "Rescaled finite-p densities against the hard-edge limit");
  cv->add_option("--k", cv_o.k, "nu/2")->capture_default_str();
  cv->add_option("--p", cv_o.ps, "Comma-separated matrix sizes")->delimiter(',');
  cv->add_option("--u-max", cv_o.u_max, "Grid end")->capture_default_str();
  cv->add_option("--points", cv_o.points, "Grid points")->capture_default_str();
  cv->add_option("--out", cv_o.out, "Output CSV path");

  int ed_p = 0;
  double ed_rho = 0.5;
  std::string ed_out;
  auto* ed = app.add_subcommand("expdecay", "Write the exponential-decay correlation matrix as CSV");
  ed->add_option("--p", ed_p, "Dimension")->required();
  ed->add_option("--rho", ed_rho, "Decay ratio")->capture_default_str();
  ed->add_option("--out", ed_out, "Output CSV path");

  auto* st = app.add_subcommand("selftest", "Run the built-in identity checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParam;
  }

  try {
    if (globals.threads < 0) throw ParamError("--threads must be >= 0");
    if (globals.threads > 0) omp_set_num_threads(globals.threads);
    if (*gap) return run_finite(globals, gap_o, gap_nu->count() > 0, gap_k->count() > 0, Quantity::GapFinite);
    if (*small)
      return run_finite(globals, small_o, sm_nu->count() > 0, sm_k->count() > 0, Quantity::SmallestFinite);
    if (*micro) return run_micro(globals, micro_o, mi_nu->count() > 0, mi_k->count() > 0);
    if (*mc) return run_mc(globals, mc_o);
    if (*cv) return run_converge(globals, cv_o);
    if (*ed) return run_expdecay(globals, ed_p, ed_rho, ed_out);
    if (*st) return run_selftest();
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParam;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParam;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParam;
  } catch (const CorrelationError& e) {
    std::cerr << "error: invalid correlation matrix: " << e.what() << '\n';
    return kParam;
  } catch (const ValidationFailure& e) {
    std::cerr << "validation failed: " << e.what() << '\n';
    return kValidation;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kValidation;
  }
  return kOk;
}
