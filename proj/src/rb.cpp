#include "rbfourier/rb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "rbfourier/errors.hpp"
#include "rbfourier/rng.hpp"

namespace rbf {

namespace {

MatrixXcd matrix_power(MatrixXcd base, int exponent) {
  MatrixXcd result = MatrixXcd::Identity(base.rows(), base.cols());
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace

VectorXd ground_state_vector() {
  VectorXd rho(4);
  rho << 0.5, 0.0, 0.0, 0.5;  // (I + Z)/2 in the Pauli basis, coefficients Tr(A_j rho)/d
  return rho;
}

VectorXd ground_state_effect() {
  VectorXd m(4);
  m << 1.0, 0.0, 0.0, 1.0;  // Tr(A_j |0><0|)
  return m;
}

double rb_exact(const RbConfig& config, const IrrepRegistry& registry, int m) {
  FourierSpectrum spectrum = fourier_transform(config.gate_set, registry);
  FourierSpectrum powered = spectrum;
  for (auto& block : powered.blocks) block.block = matrix_power(block.block, m);
  MatrixXcd phi_m = inverse_transform(powered, registry, registry.table->identity_index);
  return (config.meas.transpose() * phi_m.real() * config.rho).value();
}

std::vector<LengthStats> rb_monte_carlo(const RbConfig& config, const IrrepRegistry& registry) {
  if (config.sequences_per_length < 1)
    fail(ErrorCode::InsufficientData, "sequences_per_length must be at least 1");
  const auto& table = *config.gate_set.table;
  const int order = table.order;

  std::vector<MatrixXd> gates;
  gates.reserve(static_cast<size_t>(order));
  for (int g = 0; g < order; ++g) gates.push_back(config.gate_set(g).real());

  std::vector<LengthStats> stats;
  for (int m : config.lengths) {
    const int n = config.sequences_per_length;
    double sum = 0.0, sum_sq = 0.0;
    for (int s = 0; s < n; ++s) {
      SplitMix64 rng = substream(config.seed, static_cast<std::uint64_t>(m),
                                 static_cast<std::uint64_t>(s));
      VectorXd state = config.rho;
      int composed = table.identity_index;
      for (int k = 0; k < m - 1; ++k) {
        int c = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(order)));
        state = gates[static_cast<size_t>(c)] * state;
        composed = table.mult[c][composed];
      }
      state = gates[static_cast<size_t>(table.inv[composed])] * state;
      double survival = config.meas.dot(state);
      sum += survival;
      sum_sq += survival * survival;
    }
    LengthStats ls;
    ls.m = m;
    ls.mean = sum / n;
    ls.stderr_mean =
        n > 1 ? std::sqrt(std::max(sum_sq - n * ls.mean * ls.mean, 0.0) / (n - 1.0) / n) : 0.0;
    ls.exact = rb_exact(config, registry, m);
    stats.push_back(ls);
  }
  return stats;
}

namespace {

struct LinearFit {
  double a = 0.0, b = 0.0, c = 0.0;
  double sse = 0.0;
};

// Least squares for the linear coefficients at fixed rates.  Columns that
// become collinear (t == 1 duplicates the constant term) are handled by the
// rank-revealing solve.
LinearFit solve_linear(const std::vector<std::pair<int, double>>& data, double p,
                       const double* t) {
  const int n = static_cast<int>(data.size());
  const int cols = t ? 3 : 2;
  MatrixXd design(n, cols);
  VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = std::pow(p, data[i].first);
    if (t) design(i, 2) = std::pow(*t, data[i].first);
    y(i) = data[i].second;
  }
  VectorXd coeff = design.colPivHouseholderQr().solve(y);
  LinearFit fit;
  fit.a = coeff(0);
  fit.b = coeff(1);
  if (t) fit.c = coeff(2);
  fit.sse = (design * coeff - y).squaredNorm();
  return fit;
}

constexpr double kRateMin = 1e-4;
constexpr double kRateMax = 1.05;
constexpr double kGridStep = 1e-4;

double grid_scan(const std::vector<std::pair<int, double>>& data, bool scan_first,
                 double other, bool has_other) {
  double best_rate = kRateMin, best_sse = std::numeric_limits<double>::infinity();
  for (double r = kRateMin; r <= kRateMax + 1e-12; r += kGridStep) {
    double p = scan_first ? r : other;
    double t = scan_first ? other : r;
    LinearFit fit = solve_linear(data, p, has_other ? &t : nullptr);
    if (fit.sse < best_sse) {
      best_sse = fit.sse;
      best_rate = r;
    }
  }
  return best_rate;
}

double golden_refine(const std::vector<std::pair<int, double>>& data, bool scan_first,
                     double other, bool has_other, double center) {
  double lo = std::max(center - kGridStep, kRateMin / 2);
  double hi = std::min(center + kGridStep, kRateMax);
  auto sse_at = [&](double r) {
    double p = scan_first ? r : other;
    double t = scan_first ? other : r;
    return solve_linear(data, p, has_other ? &t : nullptr).sse;
  };
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = sse_at(x1), f2 = sse_at(x2);
  while (hi - lo > 1e-13) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = sse_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = sse_at(x2);
    }
  }
  return (lo + hi) / 2;
}

}  // namespace

DecayModel fit_decay(const std::vector<std::pair<int, double>>& data, FitMode mode) {
  std::set<int> distinct;
  for (const auto& [m, y] : data) distinct.insert(m);
  const size_t needed = mode == FitMode::Single ? 3 : 5;
  if (distinct.size() < needed)
    fail(ErrorCode::InsufficientData,
         "need at least " + std::to_string(needed) + " distinct sequence lengths");

  const int n = static_cast<int>(data.size());
  double mean = 0.0;
  for (const auto& [m, y] : data) mean += y;
  mean /= n;
  double sse_const = 0.0;
  for (const auto& [m, y] : data) sse_const += (y - mean) * (y - mean);

  DecayModel model;
  if (mode == FitMode::Single) {
    double p = grid_scan(data, true, 0.0, false);
    p = golden_refine(data, true, 0.0, false, p);
    LinearFit fit = solve_linear(data, p, nullptr);
    if (fit.sse >= sse_const * (1.0 - 1e-12) || std::abs(fit.b) < 1e-12) {
      model.a = mean;
      model.b = 0.0;
      model.p_bar = 0.0;
      model.p_identifiable = false;
      model.residual = std::sqrt(sse_const / n);
    } else {
      model.a = fit.a;
      model.b = fit.b;
      model.p_bar = p;
      model.residual = std::sqrt(fit.sse / n);
    }
  } else {
    // coarse 2-D scan of (p, t), then a shrinking local grid refinement;
    // the linear coefficients are projected out at every grid point
    double p = kRateMin, t = kRateMin;
    double best = std::numeric_limits<double>::infinity();
    for (double pc = 0.01; pc <= kRateMax + 1e-12; pc += 0.01)
      for (double tc = pc; tc <= kRateMax + 1e-12; tc += 0.01) {
        LinearFit fit = solve_linear(data, pc, &tc);
        if (fit.sse < best) {
          best = fit.sse;
          p = pc;
          t = tc;
        }
      }
    double step = 0.01;
    while (step > 1e-13) {
      bool improved = false;
      for (int dp = -2; dp <= 2; ++dp)
        for (int dt = -2; dt <= 2; ++dt) {
          double pc = std::clamp(p + dp * step, kRateMin / 4, kRateMax);
          double tc = std::clamp(t + dt * step, kRateMin / 4, kRateMax);
          LinearFit fit = solve_linear(data, pc, &tc);
          if (fit.sse < best * (1.0 - 1e-15)) {
            best = fit.sse;
            p = pc;
            t = tc;
            improved = true;
          }
        }
      if (!improved) step /= 2.0;
    }
    LinearFit fit = solve_linear(data, p, &t);
    model.a = fit.a;
    model.b = fit.b;
    model.c = fit.c;
    model.p_bar = p;
    model.t_bar = t;
    if (model.t_bar < model.p_bar) {
      std::swap(model.t_bar, model.p_bar);
      std::swap(model.b, model.c);
    }
    model.residual = std::sqrt(fit.sse / n);
  }
  if (model.residual > 0.25)
    fail(ErrorCode::FitDiverged,
         "RMS residual " + std::to_string(model.residual) + " after refinement");
  return model;
}

}  // namespace rbf
