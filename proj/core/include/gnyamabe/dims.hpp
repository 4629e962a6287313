#pragma once

#include <compare>

namespace gnyamabe {

/// Dimensions (m, n) of a product M^m x N^n together with the exponents
/// that depend only on the total dimension k = m + n.
///
/// Construction validates m >= 1, n >= 1 and k >= 3; every exponent is then
/// finite. Throws std::invalid_argument otherwise.
class Dims {
 public:
  Dims(int m, int n);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int total() const noexcept { return m_ + n_; }

  /// a_k = 4(k-1)/(k-2), the conformal Laplacian coefficient.
  double a() const noexcept;
  /// p_k = 2k/(k-2), the critical Sobolev exponent.
  double p() const noexcept;
  /// q = (k+2)/(k-2) = p_k - 1, the ground-state nonlinearity exponent.
  double q() const noexcept;

  friend bool operator==(const Dims&, const Dims&) = default;
  friend auto operator<=>(const Dims&, const Dims&) = default;

 private:
  int m_;
  int n_;
};

}  // namespace gnyamabe
