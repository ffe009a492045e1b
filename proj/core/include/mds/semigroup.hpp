#ifndef MDS_SEMIGROUP_HPP
#define MDS_SEMIGROUP_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mds/graph.hpp"

namespace mds {

/// A generator of the graph inverse semigroup: e- descends along the edge,
/// e+ climbs back against it.
enum class Sign : std::uint8_t { minus, plus };

struct Letter {
  int edge = -1;
  Sign sign = Sign::minus;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// An element of the graph inverse semigroup in normal form.
///
/// Nonzero elements are  (up reversed, as plus letters) . 1_base . (down, as
/// minus letters), where `up` and `down` are directed paths starting at
/// `base`.  The vertex idempotent 1_V has both paths empty.  `identity` is a
/// formal universal identity used as the value of the empty word; it never
/// occurs inside nonzero products of letters.
struct SemigroupElement {
  enum class Kind : std::uint8_t { zero, identity, element };

  Kind kind = Kind::zero;
  int base = -1;
  std::vector<int> up;
  std::vector<int> down;

  static SemigroupElement zero() { return {}; }
  static SemigroupElement identity() {
    SemigroupElement x;
    x.kind = Kind::identity;
    return x;
  }
  static SemigroupElement vertex_idempotent(int v) {
    SemigroupElement x;
    x.kind = Kind::element;
    x.base = v;
    return x;
  }

  bool is_zero() const { return kind == Kind::zero; }
  bool nonzero() const { return kind != Kind::zero; }
  bool is_vertex_idempotent() const {
    return kind == Kind::element && up.empty() && down.empty();
  }
  bool is_idempotent() const { return kind == Kind::element && up == down; }
  int size() const { return static_cast<int>(up.size() + down.size()); }

  friend auto operator<=>(const SemigroupElement&, const SemigroupElement&) = default;
};

/// Appends one letter to x on the right, in place.  Returns false (and sets
/// x to zero) when the product vanishes.
bool append_letter(SemigroupElement& x, Letter l, const DirectedMultigraph& g);

/// Appends a vertex idempotent 1_v on the right.  Used by the contraction
/// homomorphism, whose letter images include root idempotents.
bool append_idempotent(SemigroupElement& x, int v, const DirectedMultigraph& g);

/// Left endpoint of the serialized element (source of its first letter);
/// the base when up is empty.
int left_vertex(const SemigroupElement& x, const DirectedMultigraph& g);
/// Right endpoint (target of the last letter); the base when down is empty.
int right_vertex(const SemigroupElement& x, const DirectedMultigraph& g);

/// Product of the letters of w, by left-to-right stack reduction.  The
/// empty word yields the universal identity.
SemigroupElement reduce(const Word& w, const DirectedMultigraph& g);

SemigroupElement multiply(const SemigroupElement& x, const SemigroupElement& y,
                          const DirectedMultigraph& g);

/// Reverses the word and flips every sign.
Word invert(const Word& w);

/// The canonical word spelling of a nonzero element: reversed up as plus
/// letters, then down as minus letters.  Reduces back to the element.
Word serialize(const SemigroupElement& x);

/// Behavior of x, x^2, x^3, ... for nonzero x.
///
/// Exactly one of: all powers vanish eventually (nilpotent; x^2 = 0
/// already), x is idempotent, or the powers descend (climb) forever along a
/// closed cycle attached below (above) the base.  `cycle` is that closed
/// path for the excess classes, empty otherwise.
struct PowerClass {
  enum class Type : std::uint8_t { nilpotent, idempotent, down_excess, up_excess };
  Type type = Type::nilpotent;
  std::vector<int> cycle;

  bool power_stable() const { return type != Type::nilpotent; }
};

PowerClass classify_powers(const SemigroupElement& x, const DirectedMultigraph& g);

/// Image of a word under the contraction homomorphism: forest letters map
/// to their root's idempotent, kept letters keep their sign, and the result
/// is reduced in the semigroup of the contracted graph.
SemigroupElement lambda_image(const Word& w, const ContractionData& cd);

/// Image of a nonzero element under the contraction homomorphism, computed
/// directly on the normal form (kept edges of each path survive).
SemigroupElement lambda_element(const SemigroupElement& x, const ContractionData& cd);

/// Text form: whitespace-separated `edgeId-` / `edgeId+` tokens.
Word parse_word(const std::string& text, const DirectedMultigraph& g);
std::string word_to_string(const Word& w, const DirectedMultigraph& g);

/// `[up-path | vertex | down-path]`, `0`, or `1` for the universal identity.
std::string element_to_string(const SemigroupElement& x, const DirectedMultigraph& g);

}  // namespace mds

#endif  // MDS_SEMIGROUP_HPP
