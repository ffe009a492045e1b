#ifndef MDS_COMMON_HPP
#define MDS_COMMON_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mds {

// All counting is exact: unbounded integers for point/orbit counts,
// rationals for power-series coefficients.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Malformed input: unknown ids, dangling endpoints, bad tokens.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A standing hypothesis on the input graph does not hold.
struct hypothesis_error : std::runtime_error {
  explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap was exceeded; `offending_n` names the word
/// length at which the computation blew past the cap.
struct resource_error : std::runtime_error {
  resource_error(const std::string& what, int n)
      : std::runtime_error(what), offending_n(n) {}
  int offending_n;
};

/// A count table does not extend far enough for the requested derivation.
struct horizon_error : std::runtime_error {
  explicit horizon_error(const std::string& what) : std::runtime_error(what) {}
};

/// An exactness invariant failed (non-integral zeta coefficient, orbit
/// count not divisible by the orbit length).  Always a bug in the counting
/// layer, never rounded away.
struct counting_bug : std::logic_error {
  explicit counting_bug(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mds

#endif  // MDS_COMMON_HPP
