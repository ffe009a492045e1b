#ifndef MDS_COUNTING_HPP
#define MDS_COUNTING_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mds/graph.hpp"
#include "mds/semigroup.hpp"
#include "mds/series.hpp"

namespace mds {

/// True iff the word has nonzero product, i.e. occurs in the shift.
bool is_admissible(const Word& w, const DirectedMultigraph& g);

/// Classification of the periodic sequence w^inf.
struct PeriodicWordInfo {
  Word word;
  bool is_point = false;   // w^inf lies in the shift
  int least_period = 0;    // divides |w|
  std::optional<int> neutral_vertex;  // vertex whose idempotent some window spells
  std::optional<int> neutral_root;    // its root in the contracting forest
  std::optional<std::pair<int, int>> negative_multiplier;  // (kept G-edge, exponent)
};

PeriodicWordInfo analyze_periodic_word(const Word& w, const DirectedMultigraph& g,
                                       const ContractionData& cd);

struct CountOptions {
  int n_max = 10;
  int multiplier_horizon = 12;     // multiplier fields kept for n <= horizon
  std::size_t state_cap = 4u << 20;  // max distinct normal forms per length
  int threads = 1;
};

/// Exact per-length statistics of the periodic points.
///
/// fixed_points[n]   : points fixed by the n-th shift power
/// neutral_fixed[n]  : neutral ones among them
/// neutral_least[n]  : neutral points of least period exactly n
/// neutral_by_root   : per contracting-forest root, fixed-point convention
/// orbits_by_multiplier[k][n] : orbits of length n with negative multiplier
///                     kept edge k (kept edges in contraction order)
/// multiplier_fixed  : same data in the fixed-point convention
/// lambda_min[k]     : least orbit length with multiplier k, -1 if none seen
/// m_ell             : lambda value -> kept G-edge indices attaining it
///
/// All vectors are 1-based in n; index 0 is unused.
struct CountTable {
  int n_max = 0;
  int multiplier_horizon = 0;
  std::vector<BigInt> fixed_points;
  std::vector<BigInt> neutral_fixed;
  std::vector<BigInt> neutral_least;
  std::vector<std::vector<BigInt>> neutral_by_root;        // root slot -> per n
  std::vector<std::vector<BigInt>> orbits_by_multiplier;   // kept slot -> per n
  std::vector<std::vector<BigInt>> multiplier_fixed;       // kept slot -> per n
  std::vector<int> lambda_min;                             // kept slot -> Lambda
  std::map<int, std::vector<int>> m_ell;                   // ell -> G-edge indices

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

/// Dynamic programming over reachable normal forms: the state after a word
/// is its semigroup element, so words of each length are counted per
/// element and the statistics read off the element alone.
CountTable count_tables_dp(const DirectedMultigraph& g, const ContractionData& cd,
                           int n_max, const CountOptions& opt = {});

/// Ground-truth oracle: exhaustive enumeration of admissible words with
/// per-word rotation analysis.  Identical contract to count_tables_dp.
CountTable count_tables_naive(const DirectedMultigraph& g, const ContractionData& cd,
                              int n_max, const CountOptions& opt = {});

/// Generating function of the first returns to the vertex idempotent 1_V:
/// coefficient n counts the length-n words that spell 1_V while no proper
/// prefix of length > 1 does.
FormalPowerSeries circular_code_coefficients(int vertex, const DirectedMultigraph& g,
                                             int n_max);

/// Bounded search for a finite obstruction to neutrality of w^inf, shaped
/// like the two-sided compatibility failures that characterize non-neutral
/// periodic points: a window of the doubled word (forward, or doubled back
/// onto its inverse), one side continuing the point itself, the other side
/// an arbitrary bounded context.  ConsistentWithNeutral is not a proof of
/// neutrality; a returned witness is a concrete inadmissibility.
struct NeutralityWitness {
  Word left_context;
  Word window;
  Word right_extension;
};

struct NeutralityTestResult {
  bool confirmed_non_neutral = false;
  std::optional<NeutralityWitness> witness;
};

NeutralityTestResult bounded_neutrality_test(const Word& w, const DirectedMultigraph& g,
                                             int context_len, int extension_len);

}  // namespace mds

#endif  // MDS_COUNTING_HPP
