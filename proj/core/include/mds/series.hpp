#ifndef MDS_SERIES_HPP
#define MDS_SERIES_HPP

#include <string>
#include <vector>

#include "mds/common.hpp"

namespace mds {

/// A formal power series truncated at a fixed degree, with exact rational
/// coefficients.  All arithmetic is exact modulo z^(degree+1).
class FormalPowerSeries {
 public:
  FormalPowerSeries() = default;
  explicit FormalPowerSeries(int degree) : coeff_(degree + 1, Rational(0)) {}

  static FormalPowerSeries constant(int degree, const Rational& c) {
    FormalPowerSeries s(degree);
    s.coeff_[0] = c;
    return s;
  }
  static FormalPowerSeries one(int degree) { return constant(degree, Rational(1)); }

  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  const Rational& operator[](int n) const { return coeff_[n]; }
  Rational& operator[](int n) { return coeff_[n]; }

  FormalPowerSeries operator+(const FormalPowerSeries& o) const;
  FormalPowerSeries operator-(const FormalPowerSeries& o) const;
  FormalPowerSeries operator*(const FormalPowerSeries& o) const;

  /// 1/this; requires a nonzero constant term.
  FormalPowerSeries reciprocal() const;

  /// exp(this); requires a zero constant term.
  FormalPowerSeries exp() const;

  bool integral() const;

  /// `c0 + c1 z + ... + cN z^N` with rationals printed as p/q.
  std::string to_string() const;

  friend bool operator==(const FormalPowerSeries&, const FormalPowerSeries&) = default;

 private:
  std::vector<Rational> coeff_;
};

/// The zeta series exp(sum_n counts[n] z^n / n) truncated at n_max, where
/// `counts[n]` (1-based, n <= n_max) is the number of points fixed by the
/// n-th shift power.  Throws counting_bug if a coefficient comes out
/// non-integral, which would mean the counts are not consistent fixed-point
/// counts of any system.
FormalPowerSeries zeta_series(const std::vector<BigInt>& counts, int n_max);

}  // namespace mds

#endif  // MDS_SERIES_HPP
