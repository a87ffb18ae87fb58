#pragma once

#include <span>
#include <vector>

#include "hermgutz/types.hpp"

namespace hg::sf {

/// h_k(z): L^2-normalised Hermite function, entire in z.
/// Computed by the three-term recurrence on the functions themselves
/// (the Gaussian is folded in), which stays inside double range for
/// k <= k_cap, |Im z| <= y_cap.
Complex hermite_fn(int k, Complex z, const Caps& caps = {});

/// h_0(z) .. h_kmax(z) in one recurrence pass. out.size() must be kmax+1.
void hermite_fn_seq(int kmax, Complex z, std::span<Complex> out, const Caps& caps = {});

/// Phi_alpha(z) = prod_j h_{alpha_j}(z_j).
Complex hermite_fn_nd(const MultiIndex& alpha, std::span<const Complex> z,
                      const Caps& caps = {});

/// Laguerre polynomial L_k^nu(x) by the standard three-term recurrence.
/// For real x <= 0 all recurrence terms share one sign (forward stable).
Complex laguerre_poly(int k, double nu, Complex x, const Caps& caps = {});
void laguerre_poly_seq(int kmax, double nu, Complex x, std::span<Complex> out,
                       const Caps& caps = {});

/// phi_k(z,w) = L_k^{n-1}(1/2 (z^2+w^2)) e^{-1/4 (z^2+w^2)}, z^2 = sum z_j^2.
Complex laguerre_fn(int k, int n, const PhasePoint& p, const Caps& caps = {});

/// phi_k(2iy, 2iv) = L_k^{n-1}(-2 r2) e^{r2} with r2 = |y|^2+|v|^2;
/// real and positive.
double laguerre_fn_imag(int k, int n, double r2, const Caps& caps = {});

/// Mehler kernel: sum_k h_k(xi) h_k(eta) r^k in closed form,
///   pi^{-1/2} (1-r^2)^{-1/2} exp(-1/2 (1+r^2)/(1-r^2) (xi^2+eta^2)
///                                + 2r/(1-r^2) xi eta).
Complex mehler_kernel(double r, Complex xi, Complex eta, const Caps& caps = {});

/// Projection kernel Phi_k(z,w) = sum_{|alpha|=k} Phi_alpha(z) Phi_alpha(w),
/// evaluated through the Laguerre representation
///   pi^{-n/2} sum_j (-1)^j L_j^{n/2-1}(1/2 (z+w)^2) L_{k-j}^{n/2-1}(1/2 (z-w)^2)
///     e^{-1/2 (z^2+w^2)}.
/// (z+w)^2 is accumulated as sum_j (z_j+w_j)^2 before halving.
Complex projection_kernel(int k, std::span<const Complex> z,
                          std::span<const Complex> w, const Caps& caps = {});

/// Phi_k(z, conj z) = sum_{|alpha|=k} |Phi_alpha(z)|^2 >= 0.
double projection_kernel_diag(int k, std::span<const Complex> z, const Caps& caps = {});

/// Growth-model factor k^{3(n-1)/4} e^{2 sqrt(k) |y|} used by the bound checks.
double perron_growth_bound(int k, double y_norm, int n);

}  // namespace hg::sf
