#include "tensorloc/eig_oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "tensorloc/radii.hpp"

namespace tensorloc {

namespace {

void check_length(const Tensor& t, std::span<const Scalar> x) {
  if (static_cast<int>(x.size()) != t.dim()) {
    throw TensorError("vector length " + std::to_string(x.size()) +
                      " does not match tensor dimension " + std::to_string(t.dim()));
  }
}

/// Splits a linear offset into its row and trailing indices (i_2..i_m).
void decode(const Tensor& t, std::int64_t offset, int& row, std::vector<int>& tail) {
  const int m = t.order();
  for (int k = m - 2; k >= 0; --k) {
    tail[static_cast<std::size_t>(k)] = static_cast<int>(offset % t.dim());
    offset /= t.dim();
  }
  row = static_cast<int>(offset);
}

double max_abs(std::span<const Scalar> v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

Scalar complex_normal(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

constexpr std::uint64_t kChartStream = 0x9e3779b97f4a7c15ULL;

}  // namespace

ComplexVector multilinear_apply(const Tensor& t, std::span<const Scalar> x) {
  check_length(t, x);
  ComplexVector y(x.size());
  std::vector<int> tail(static_cast<std::size_t>(t.order() - 1));
  int row = 0;
  for (const auto& [off, a] : t.storage()) {
    decode(t, off, row, tail);
    Scalar term = a;
    for (int k : tail) term *= x[static_cast<std::size_t>(k)];
    y[static_cast<std::size_t>(row)] += term;
  }
  return y;
}

ComplexVector power_vector(std::span<const Scalar> x, int k) {
  if (k < 1) throw TensorError("power_vector needs k >= 1");
  ComplexVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Scalar p = x[i];
    for (int e = 1; e < k; ++e) p *= x[i];
    out[i] = p;
  }
  return out;
}

std::vector<Scalar> apply_jacobian(const Tensor& t, std::span<const Scalar> x) {
  check_length(t, x);
  const auto n = static_cast<std::size_t>(t.dim());
  const auto slots = static_cast<std::size_t>(t.order() - 1);
  std::vector<Scalar> jac(n * n);
  std::vector<int> tail(slots);
  std::vector<Scalar> prefix(slots + 1);
  std::vector<Scalar> suffix(slots + 1);
  int row = 0;
  for (const auto& [off, a] : t.storage()) {
    decode(t, off, row, tail);
    // prefix[s] * suffix[s+1] is the product of every slot except s.
    prefix[0] = 1.0;
    for (std::size_t s = 0; s < slots; ++s) {
      prefix[s + 1] = prefix[s] * x[static_cast<std::size_t>(tail[s])];
    }
    suffix[slots] = 1.0;
    for (std::size_t s = slots; s-- > 0;) {
      suffix[s] = suffix[s + 1] * x[static_cast<std::size_t>(tail[s])];
    }
    for (std::size_t s = 0; s < slots; ++s) {
      jac[static_cast<std::size_t>(row) * n + static_cast<std::size_t>(tail[s])] +=
          a * prefix[s] * suffix[s + 1];
    }
  }
  return jac;
}

double eigen_residual(const Tensor& t, Scalar lambda, std::span<const Scalar> x) {
  const ComplexVector y = multilinear_apply(t, x);
  const ComplexVector p = power_vector(x, t.order() - 1);
  double r = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) r = std::max(r, std::abs(y[i] - lambda * p[i]));
  return r;
}

ComplexVector canonicalize(std::span<const Scalar> x) {
  std::size_t lead = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (std::abs(x[i]) > std::abs(x[lead])) lead = i;
  }
  if (x.empty() || x[lead] == Scalar{}) throw TensorError("cannot canonicalize a zero vector");
  ComplexVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] / x[lead];
  out[lead] = 1.0;
  return out;
}

std::vector<EigenPair> newton_eigenpairs(const Tensor& t, const NewtonOptions& options) {
  const int n = t.dim();
  const int m = t.order();
  const auto un = static_cast<std::size_t>(n);

  std::mt19937_64 chart_rng(options.seed ^ kChartStream);
  ComplexVector u(un);
  for (auto& v : u) v = complex_normal(chart_rng);

  std::vector<EigenPair> found;
  for (int start = 0; start < options.num_starts; ++start) {
    std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(start));
    ComplexVector x(un);
    for (auto& v : x) v = complex_normal(rng);
    Scalar chart{};
    for (std::size_t i = 0; i < un; ++i) chart += std::conj(u[i]) * x[i];
    if (std::abs(chart) < 1e-8) continue;
    for (auto& v : x) v /= chart;

    ComplexVector y = multilinear_apply(t, x);
    ComplexVector p = power_vector(x, m - 1);
    Scalar num{};
    double den = 0.0;
    for (std::size_t i = 0; i < un; ++i) {
      num += std::conj(p[i]) * y[i];
      den += std::norm(p[i]);
    }
    Scalar lambda = num / den;

    bool ok = true;
    for (int it = 0; it < options.max_iter; ++it) {
      Eigen::VectorXcd rhs(n + 1);
      double fmax = 0.0;
      Scalar ux{};
      for (std::size_t i = 0; i < un; ++i) {
        const Scalar f = y[i] - lambda * p[i];
        rhs(static_cast<Eigen::Index>(i)) = -f;
        fmax = std::max(fmax, std::abs(f));
        ux += std::conj(u[i]) * x[i];
      }
      rhs(n) = -(ux - 1.0);
      if (fmax == 0.0 && std::abs(ux - 1.0) == 0.0) break;

      const std::vector<Scalar> jac = apply_jacobian(t, x);
      const ComplexVector pd = power_vector(x, std::max(m - 2, 1));
      Eigen::MatrixXcd sys = Eigen::MatrixXcd::Zero(n + 1, n + 1);
      for (std::size_t i = 0; i < un; ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        for (std::size_t k = 0; k < un; ++k) {
          sys(ii, static_cast<Eigen::Index>(k)) = jac[i * un + k];
        }
        const Scalar self = m == 2 ? Scalar{1.0} : pd[i];
        sys(ii, ii) -= lambda * static_cast<double>(m - 1) * self;
        sys(ii, n) = -p[i];
        sys(n, ii) = std::conj(u[i]);
      }
      const Eigen::VectorXcd step = sys.partialPivLu().solve(rhs);
      if (!step.allFinite()) {
        ok = false;
        break;
      }
      double dmax = 0.0;
      for (std::size_t i = 0; i < un; ++i) {
        x[i] += step(static_cast<Eigen::Index>(i));
        dmax = std::max(dmax, std::abs(step(static_cast<Eigen::Index>(i))));
      }
      lambda += step(n);
      y = multilinear_apply(t, x);
      p = power_vector(x, m - 1);
      if (dmax <= 1e-15 * (1.0 + max_abs(x)) && std::abs(step(n)) <= 1e-15 * (1.0 + std::abs(lambda))) {
        break;
      }
    }
    if (!ok || !std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()) ||
        max_abs(x) == 0.0 || !std::isfinite(max_abs(x))) {
      continue;
    }
    EigenPair pair{lambda, canonicalize(x), 0.0, EigenKind::general};
    pair.residual = eigen_residual(t, pair.lambda, pair.x);
    if (!(pair.residual < options.tol)) continue;

    auto same = std::find_if(found.begin(), found.end(), [&](const EigenPair& e) {
      return std::abs(e.lambda - pair.lambda) <= options.dedup_tol;
    });
    if (same == found.end()) {
      found.push_back(std::move(pair));
    } else if (pair.residual < same->residual) {
      *same = std::move(pair);
    }
  }
  std::sort(found.begin(), found.end(), [](const EigenPair& a, const EigenPair& b) {
    if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
    return a.lambda.imag() < b.lambda.imag();
  });
  return found;
}

EigenPair shifted_power_extreme(const Tensor& t, Extreme want, const PowerOptions& options) {
  const int m = t.order();
  if (m % 2 != 0) throw TensorError("shifted power iteration needs an even-order tensor");
  if (!t.is_real()) throw TensorError("shifted power iteration needs real entries");
  if (!t.symmetric_flag() && !t.check_symmetric(1e-12)) {
    throw TensorError("shifted power iteration needs a symmetric tensor");
  }
  const auto un = static_cast<std::size_t>(t.dim());

  double alpha = options.shift;
  if (alpha < 0.0) {
    double radius_sum = 0.0;
    double diag_max = 0.0;
    for (int i = 0; i < t.dim(); ++i) {
      radius_sum += row_radius(t, i);
      diag_max = std::max(diag_max, std::abs(t.diagonal(i)));
    }
    alpha = 1.0 + radius_sum + diag_max;
  }
  const double sign = want == Extreme::largest ? 1.0 : -1.0;

  const auto apply_real = [&](const std::vector<double>& x) {
    ComplexVector xc(x.begin(), x.end());
    const ComplexVector y = multilinear_apply(t, xc);
    std::vector<double> out(un);
    for (std::size_t i = 0; i < un; ++i) out[i] = y[i].real();
    return out;
  };
  const auto normalize = [&](std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += std::pow(v, m);
    const double norm = std::pow(s, 1.0 / m);
    for (double& v : x) v /= norm;
  };
  const auto rayleigh = [&](const std::vector<double>& x, const std::vector<double>& ax) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < un; ++i) {
      num += x[i] * ax[i];
      den += std::pow(x[i], m);
    }
    return num / den;
  };

  std::optional<EigenPair> best;
  for (int start = 0; start < options.num_starts; ++start) {
    std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(start));
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> x(un);
    for (double& v : x) v = normal(rng);
    normalize(x);
    std::vector<double> ax = apply_real(x);
    double mu = rayleigh(x, ax);

    for (int it = 0; it < options.max_iter; ++it) {
      std::vector<double> next(un);
      for (std::size_t i = 0; i < un; ++i) {
        const double yi = sign * ax[i] + alpha * std::pow(x[i], m - 1);
        next[i] = std::copysign(std::pow(std::abs(yi), 1.0 / (m - 1)), yi);
      }
      normalize(next);
      double dx = 0.0;
      for (std::size_t i = 0; i < un; ++i) dx = std::max(dx, std::abs(next[i] - x[i]));
      x = std::move(next);
      ax = apply_real(x);
      const double mu_next = rayleigh(x, ax);
      const bool settled = std::abs(mu_next - mu) <= options.tol * (1.0 + std::abs(mu)) &&
                           dx <= 1e-10;
      mu = mu_next;
      if (settled) break;
    }

    EigenPair pair;
    pair.x = canonicalize(ComplexVector(x.begin(), x.end()));
    std::vector<double> xr(un);
    for (std::size_t i = 0; i < un; ++i) xr[i] = pair.x[i].real();
    pair.lambda = rayleigh(xr, apply_real(xr));
    pair.residual = eigen_residual(t, pair.lambda, pair.x);
    pair.kind = EigenKind::h_real;
    const bool better = !best || (want == Extreme::largest
                                      ? pair.lambda.real() > best->lambda.real()
                                      : pair.lambda.real() < best->lambda.real());
    if (better) best = std::move(pair);
  }
  if (!best) throw TensorError("shifted power iteration needs at least one start");
  return *best;
}

bool is_h_eigenpair(const EigenPair& p, double tol) {
  if (std::abs(p.lambda.imag()) > tol) return false;
  return std::all_of(p.x.begin(), p.x.end(),
                     [&](const Scalar& v) { return std::abs(v.imag()) <= tol; });
}

}  // namespace tensorloc
