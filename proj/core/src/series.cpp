#include "mds/series.hpp"

#include <sstream>

namespace mds {

namespace {
int common_degree(const FormalPowerSeries& a, const FormalPowerSeries& b) {
  if (a.degree() != b.degree())
    throw input_error("power series truncation degrees differ");
  return a.degree();
}
}  // namespace

FormalPowerSeries FormalPowerSeries::operator+(const FormalPowerSeries& o) const {
  int n = common_degree(*this, o);
  FormalPowerSeries r(n);
  for (int i = 0; i <= n; ++i) r[i] = coeff_[i] + o[i];
  return r;
}

FormalPowerSeries FormalPowerSeries::operator-(const FormalPowerSeries& o) const {
  int n = common_degree(*this, o);
  FormalPowerSeries r(n);
  for (int i = 0; i <= n; ++i) r[i] = coeff_[i] - o[i];
  return r;
}

FormalPowerSeries FormalPowerSeries::operator*(const FormalPowerSeries& o) const {
  int n = common_degree(*this, o);
  FormalPowerSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (coeff_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (o[j] == 0) continue;
      r[i + j] += coeff_[i] * o[j];
    }
  }
  return r;
}

FormalPowerSeries FormalPowerSeries::reciprocal() const {
  if (coeff_[0] == 0)
    throw input_error("reciprocal of a series with zero constant term");
  int n = degree();
  FormalPowerSeries r(n);
  r[0] = Rational(1) / coeff_[0];
  for (int k = 1; k <= n; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += coeff_[j] * r[k - j];
    r[k] = -acc / coeff_[0];
  }
  return r;
}

FormalPowerSeries FormalPowerSeries::exp() const {
  if (coeff_[0] != 0)
    throw input_error("exp of a series with nonzero constant term");
  int n = degree();
  // E' = S'E gives n e_n = sum_{k=1..n} k s_k e_{n-k}.
  FormalPowerSeries e(n);
  e[0] = Rational(1);
  for (int k = 1; k <= n; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += Rational(j) * coeff_[j] * e[k - j];
    e[k] = acc / Rational(k);
  }
  return e;
}

bool FormalPowerSeries::integral() const {
  for (const auto& c : coeff_)
    if (boost::multiprecision::denominator(c) != 1) return false;
  return true;
}

std::string FormalPowerSeries::to_string() const {
  std::ostringstream out;
  for (int i = 0; i <= degree(); ++i) {
    if (i) out << " + ";
    out << coeff_[i].str();
    if (i == 1) out << " z";
    if (i > 1) out << " z^" << i;
  }
  return out.str();
}

FormalPowerSeries zeta_series(const std::vector<BigInt>& counts, int n_max) {
  if (n_max < 0) throw input_error("zeta_series: negative truncation");
  if (static_cast<int>(counts.size()) < n_max + 1)
    throw input_error("zeta_series: counts must cover 1..n_max");
  FormalPowerSeries s(n_max);
  for (int n = 1; n <= n_max; ++n) s[n] = Rational(counts[n]) / Rational(n);
  FormalPowerSeries z = s.exp();
  if (!z.integral())
    throw counting_bug("zeta series has a non-integral coefficient: " + z.to_string());
  return z;
}

}  // namespace mds
