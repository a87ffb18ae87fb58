#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hermgutz/rng.hpp"
#include "hermgutz/types.hpp"

namespace hg::quad {

/// Gauss-Hermite rule for weight e^{-x^2} on R.
/// total_weights[i] = weights[i] e^{nodes[i]^2} is computed directly from the
/// Christoffel function (1 / sum_j h_j(x_i)^2) so it stays finite at orders
/// where w_i alone underflows.
struct GaussHermiteRule {
  int order = 0;
  std::vector<double> nodes;          // ascending, symmetric about 0
  std::vector<double> weights;        // sum = sqrt(pi)
  std::vector<double> total_weights;  // w_i e^{x_i^2}
};

/// Golub-Welsch nodes (tridiagonal QL) polished by Newton on h_m.
/// 1 <= m <= 512. Rules are cached; references stay valid for the process.
const GaussHermiteRule& gauss_hermite_rule(int m);

/// Center/scale of the Gaussian envelope per coordinate; the caller completes
/// the square. Integrates over R^d with d = center.size().
struct EnvelopeSpec {
  std::vector<double> center;
  std::vector<double> scale;
};

using RealIntegrand = std::function<Complex(std::span<const double>)>;

/// sum over the tensor grid of prod_j scale_j t_{i_j} g(center + scale * x_i).
/// No refinement check; building block for the doubling version.
Complex gaussian_envelope_sum(const RealIntegrand& g, const EnvelopeSpec& spec,
                              int order);

/// Same, with the mandatory order-doubling stability test: the results at
/// order m and 2m must agree to rtol (relative, guarded near zero) or an
/// accuracy error carrying both values is thrown. Returns the 2m value.
Complex gaussian_envelope_integral(const RealIntegrand& g, const EnvelopeSpec& spec,
                                   int order, double rtol);

/// Uniform-grid average times (2pi)^n over [0,2pi)^n; spectrally accurate for
/// smooth periodic integrands and exact for trigonometric polynomials of
/// degree < M per angle.
Complex torus_sum(const RealIntegrand& g, int n, int points_per_angle);
Complex torus_integral(const RealIntegrand& g, int n, int points_per_angle,
                       double rtol);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  int samples = 0;
};

/// Monte Carlo mean of g over U(n) with Haar measure; per-sample streams are
/// derived by counter from `seed` and reduced in index order, so the estimate
/// is reproducible. n >= 2 (for n = 1 the group is the circle: use
/// torus_integral).
McEstimate haar_integral_mc(const std::function<double(const UnitaryElement&)>& g,
                            int n, int samples, uint64_t seed);

/// True when a and b agree to rtol relative (absolute near zero).
bool doubling_ok(Complex a, Complex b, double rtol);

}  // namespace hg::quad
