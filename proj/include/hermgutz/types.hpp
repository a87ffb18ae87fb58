#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

#include "hermgutz/errors.hpp"

namespace hg {

using Complex = std::complex<double>;

/// Evaluation caps. Degree and imaginary-part limits keep the growing
/// recurrences inside double range; both are configurable per call site.
struct Caps {
  int k_cap = 512;
  double y_cap = 12.0;
  double mehler_eps = 1e-6;  // closed form requires |r| <= 1 - mehler_eps
};

inline void require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    fail(ErrorCode::input, std::string(what) + ": non-finite argument");
}

/// alpha in N^n indexing the Hermite basis; level() = |alpha|.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
      if (e < 0) fail(ErrorCode::input, "MultiIndex: negative entry");
  }
  MultiIndex(std::initializer_list<int> entries)
      : MultiIndex(std::vector<int>(entries)) {}

  int dim() const { return static_cast<int>(entries_.size()); }
  int level() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }
  int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;
  // Lexicographic; gives deterministic map iteration order.
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

/// Enumerates all alpha with |alpha| = level in dimension n, lexicographic.
std::vector<MultiIndex> multi_indices_of_level(int n, int level);

/// A point (z,w) in C^n x C^n with z = x+iy, w = u+iv.
class PhasePoint {
 public:
  PhasePoint() = default;
  PhasePoint(std::vector<Complex> z, std::vector<Complex> w)
      : z_(std::move(z)), w_(std::move(w)) {
    if (z_.size() != w_.size())
      fail(ErrorCode::input, "PhasePoint: dim(z) != dim(w)");
    for (const auto& c : z_) require_finite(c, "PhasePoint");
    for (const auto& c : w_) require_finite(c, "PhasePoint");
  }
  /// 1-D convenience.
  PhasePoint(Complex z, Complex w) : PhasePoint(std::vector<Complex>{z}, {w}) {}

  int dim() const { return static_cast<int>(z_.size()); }
  const std::vector<Complex>& z() const { return z_; }
  const std::vector<Complex>& w() const { return w_; }

  std::vector<double> x() const { return part(z_, false); }
  std::vector<double> y() const { return part(z_, true); }
  std::vector<double> u() const { return part(w_, false); }
  std::vector<double> v() const { return part(w_, true); }

  /// u.y - v.x, the symplectic pairing entering every Gutzmer prefactor.
  double symplectic_exponent() const {
    double s = 0.0;
    for (size_t j = 0; j < z_.size(); ++j)
      s += w_[j].real() * z_[j].imag() - w_[j].imag() * z_[j].real();
    return s;
  }

  /// |y|^2 + |v|^2.
  double imag_radius2() const {
    double s = 0.0;
    for (size_t j = 0; j < z_.size(); ++j)
      s += z_[j].imag() * z_[j].imag() + w_[j].imag() * w_[j].imag();
    return s;
  }

  bool is_real() const {
    for (size_t j = 0; j < z_.size(); ++j)
      if (z_[j].imag() != 0.0 || w_[j].imag() != 0.0) return false;
    return true;
  }

 private:
  static std::vector<double> part(const std::vector<Complex>& c, bool imag) {
    std::vector<double> out(c.size());
    for (size_t i = 0; i < c.size(); ++i) out[i] = imag ? c[i].imag() : c[i].real();
    return out;
  }
  std::vector<Complex> z_, w_;
};

/// sigma = a+ib in U(n), acting on phase space through A = [[a,-b],[b,a]].
class UnitaryElement {
 public:
  UnitaryElement() = default;
  /// Row-major n x n complex matrix; validated against sigma* sigma = I.
  UnitaryElement(int n, std::vector<Complex> m, double tol = 1e-8);

  static UnitaryElement identity(int n);
  /// n = 1 rotation e^{i theta}.
  static UnitaryElement rotation(double theta) {
    return UnitaryElement(1, {std::polar(1.0, theta)});
  }

  int dim() const { return n_; }
  Complex operator()(int i, int j) const { return m_[static_cast<size_t>(i * n_ + j)]; }
  const std::vector<Complex>& data() const { return m_; }

  /// max |(sigma* sigma - I)_{ij}|.
  double unitarity_defect() const;
  UnitaryElement multiply(const UnitaryElement& rhs) const;

 private:
  int n_ = 0;
  std::vector<Complex> m_;
};

/// Diagonal torus element k(theta) = diag(e^{i theta_j}).
struct TorusElement {
  std::vector<double> theta;
  explicit TorusElement(std::vector<double> th) : theta(std::move(th)) {}
  explicit TorusElement(double th) : theta{th} {}
  int dim() const { return static_cast<int>(theta.size()); }
};

}  // namespace hg
