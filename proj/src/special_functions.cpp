#include "hermgutz/special_functions.hpp"

#include <cmath>

namespace hg {

std::vector<MultiIndex> multi_indices_of_level(int n, int level) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<size_t>(n), 0);
  // lexicographic enumeration of compositions of `level` into n parts
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      cur[static_cast<size_t>(pos)] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  if (n >= 1) rec(rec, 0, level);
  return out;
}

namespace sf {

namespace {
const double kPiQuarterInv = std::pow(M_PI, -0.25);

void check_degree(int k, const Caps& caps, const char* what) {
  if (k < 0) fail(ErrorCode::input, std::string(what) + ": negative degree");
  if (k > caps.k_cap)
    fail(ErrorCode::capability,
         std::string(what) + ": degree " + std::to_string(k) + " exceeds cap " +
             std::to_string(caps.k_cap));
}

void check_band(Complex z, const Caps& caps, const char* what) {
  require_finite(z, what);
  if (std::abs(z.imag()) > caps.y_cap)
    fail(ErrorCode::capability,
         std::string(what) + ": |Im z| exceeds cap " + std::to_string(caps.y_cap));
}
}  // namespace

void hermite_fn_seq(int kmax, Complex z, std::span<Complex> out, const Caps& caps) {
  check_degree(kmax, caps, "hermite_fn");
  check_band(z, caps, "hermite_fn");
  if (out.size() != static_cast<size_t>(kmax + 1))
    fail(ErrorCode::input, "hermite_fn_seq: output span size mismatch");
  out[0] = kPiQuarterInv * std::exp(-0.5 * z * z);
  if (kmax == 0) return;
  out[1] = std::sqrt(2.0) * z * out[0];
  for (int k = 1; k < kmax; ++k) {
    out[static_cast<size_t>(k + 1)] =
        std::sqrt(2.0 / (k + 1)) * z * out[static_cast<size_t>(k)] -
        std::sqrt(static_cast<double>(k) / (k + 1)) * out[static_cast<size_t>(k - 1)];
  }
}

Complex hermite_fn(int k, Complex z, const Caps& caps) {
  std::vector<Complex> buf(static_cast<size_t>(k + 1));
  hermite_fn_seq(k, z, buf, caps);
  return buf.back();
}

Complex hermite_fn_nd(const MultiIndex& alpha, std::span<const Complex> z,
                      const Caps& caps) {
  if (alpha.dim() != static_cast<int>(z.size()))
    fail(ErrorCode::input, "hermite_fn_nd: dim(alpha) != dim(z)");
  Complex prod = 1.0;
  for (int j = 0; j < alpha.dim(); ++j)
    prod *= hermite_fn(alpha[j], z[static_cast<size_t>(j)], caps);
  return prod;
}

void laguerre_poly_seq(int kmax, double nu, Complex x, std::span<Complex> out,
                       const Caps& caps) {
  check_degree(kmax, caps, "laguerre_poly");
  require_finite(x, "laguerre_poly");
  if (nu < -0.5) fail(ErrorCode::input, "laguerre_poly: type nu < -1/2");
  if (out.size() != static_cast<size_t>(kmax + 1))
    fail(ErrorCode::input, "laguerre_poly_seq: output span size mismatch");
  out[0] = 1.0;
  if (kmax == 0) return;
  out[1] = 1.0 + nu - x;
  for (int k = 1; k < kmax; ++k) {
    out[static_cast<size_t>(k + 1)] =
        ((2.0 * k + nu + 1.0 - x) * out[static_cast<size_t>(k)] -
         (k + nu) * out[static_cast<size_t>(k - 1)]) /
        (k + 1.0);
  }
}

Complex laguerre_poly(int k, double nu, Complex x, const Caps& caps) {
  std::vector<Complex> buf(static_cast<size_t>(k + 1));
  laguerre_poly_seq(k, nu, x, buf, caps);
  return buf.back();
}

Complex laguerre_fn(int k, int n, const PhasePoint& p, const Caps& caps) {
  if (p.dim() != n) fail(ErrorCode::input, "laguerre_fn: dim(p) != n");
  Complex s = 0.0;
  for (int j = 0; j < n; ++j) {
    const Complex zj = p.z()[static_cast<size_t>(j)];
    const Complex wj = p.w()[static_cast<size_t>(j)];
    s += zj * zj + wj * wj;
  }
  return laguerre_poly(k, n - 1, 0.5 * s, caps) * std::exp(-0.25 * s);
}

double laguerre_fn_imag(int k, int n, double r2, const Caps& caps) {
  return laguerre_poly(k, n - 1, Complex(-2.0 * r2, 0.0), caps).real() *
         std::exp(r2);
}

Complex mehler_kernel(double r, Complex xi, Complex eta, const Caps& caps) {
  require_finite(xi, "mehler_kernel");
  require_finite(eta, "mehler_kernel");
  if (!std::isfinite(r) || std::abs(r) > 1.0 - caps.mehler_eps)
    fail(ErrorCode::domain, "mehler_kernel: |r| too close to 1");
  const double r2 = r * r;
  const Complex expo = -0.5 * (1.0 + r2) / (1.0 - r2) * (xi * xi + eta * eta) +
                       2.0 * r / (1.0 - r2) * xi * eta;
  return std::pow(M_PI * (1.0 - r2), -0.5) * std::exp(expo);
}

Complex projection_kernel(int k, std::span<const Complex> z,
                          std::span<const Complex> w, const Caps& caps) {
  if (z.size() != w.size())
    fail(ErrorCode::input, "projection_kernel: dim(z) != dim(w)");
  check_degree(k, caps, "projection_kernel");
  const int n = static_cast<int>(z.size());
  Complex sum_sq = 0.0, plus_sq = 0.0, minus_sq = 0.0;
  for (int j = 0; j < n; ++j) {
    const Complex zj = z[static_cast<size_t>(j)], wj = w[static_cast<size_t>(j)];
    require_finite(zj, "projection_kernel");
    require_finite(wj, "projection_kernel");
    sum_sq += zj * zj + wj * wj;
    plus_sq += (zj + wj) * (zj + wj);
    minus_sq += (zj - wj) * (zj - wj);
  }
  const double nu = 0.5 * n - 1.0;
  std::vector<Complex> lp(static_cast<size_t>(k + 1)), lm(static_cast<size_t>(k + 1));
  laguerre_poly_seq(k, nu, 0.5 * plus_sq, lp, caps);
  laguerre_poly_seq(k, nu, 0.5 * minus_sq, lm, caps);
  Complex s = 0.0;
  double sign = 1.0;
  for (int j = 0; j <= k; ++j) {
    s += sign * lp[static_cast<size_t>(j)] * lm[static_cast<size_t>(k - j)];
    sign = -sign;
  }
  return std::pow(M_PI, -0.5 * n) * s * std::exp(-0.5 * sum_sq);
}

double projection_kernel_diag(int k, std::span<const Complex> z, const Caps& caps) {
  std::vector<Complex> zbar(z.size());
  for (size_t j = 0; j < z.size(); ++j) zbar[j] = std::conj(z[j]);
  return projection_kernel(k, z, zbar, caps).real();
}

double perron_growth_bound(int k, double y_norm, int n) {
  if (k < 1) fail(ErrorCode::input, "perron_growth_bound: k must be >= 1");
  return std::pow(static_cast<double>(k), 0.75 * (n - 1)) *
         std::exp(2.0 * std::sqrt(static_cast<double>(k)) * y_norm);
}

}  // namespace sf
}  // namespace hg
