#include "mds/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace mds {

int left_vertex(const SemigroupElement& x, const DirectedMultigraph& g) {
  assert(x.kind == SemigroupElement::Kind::element);
  return x.up.empty() ? x.base : g.target(x.up.back());
}

int right_vertex(const SemigroupElement& x, const DirectedMultigraph& g) {
  assert(x.kind == SemigroupElement::Kind::element);
  return x.down.empty() ? x.base : g.target(x.down.back());
}

bool append_letter(SemigroupElement& x, Letter l, const DirectedMultigraph& g) {
  if (l.edge < 0 || l.edge >= g.edge_count())
    throw input_error("letter refers to an unknown edge index");
  if (x.is_zero()) return false;
  if (x.kind == SemigroupElement::Kind::identity) {
    x.kind = SemigroupElement::Kind::element;
    if (l.sign == Sign::minus) {
      x.base = g.source(l.edge);
      x.down.push_back(l.edge);
    } else {
      x.base = g.source(l.edge);
      x.up.push_back(l.edge);
    }
    return true;
  }
  if (l.sign == Sign::minus) {
    // e- extends the descending path, provided it composes.
    if (g.source(l.edge) != right_vertex(x, g)) {
      x = SemigroupElement::zero();
      return false;
    }
    x.down.push_back(l.edge);
    return true;
  }
  // e+ cancels against the innermost pending descent, or climbs above the
  // base when nothing is pending.
  if (!x.down.empty()) {
    if (x.down.back() != l.edge) {
      x = SemigroupElement::zero();
      return false;
    }
    x.down.pop_back();
    return true;
  }
  if (g.target(l.edge) != x.base) {
    x = SemigroupElement::zero();
    return false;
  }
  x.up.insert(x.up.begin(), l.edge);
  x.base = g.source(l.edge);
  return true;
}

bool append_idempotent(SemigroupElement& x, int v, const DirectedMultigraph& g) {
  if (x.is_zero()) return false;
  if (x.kind == SemigroupElement::Kind::identity) {
    x = SemigroupElement::vertex_idempotent(v);
    return true;
  }
  if (right_vertex(x, g) != v) {
    x = SemigroupElement::zero();
    return false;
  }
  return true;
}

SemigroupElement reduce(const Word& w, const DirectedMultigraph& g) {
  SemigroupElement x = SemigroupElement::identity();
  for (Letter l : w)
    if (!append_letter(x, l, g)) return x;
  return x;
}

SemigroupElement multiply(const SemigroupElement& x, const SemigroupElement& y,
                          const DirectedMultigraph& g) {
  using Kind = SemigroupElement::Kind;
  if (x.is_zero() || y.is_zero()) return SemigroupElement::zero();
  if (x.kind == Kind::identity) return y;
  if (y.kind == Kind::identity) return x;

  if (right_vertex(x, g) != (y.up.empty() ? y.base : g.target(y.up.back())))
    return SemigroupElement::zero();

  // Cancel x.down against y.up pairwise from the tails inward.
  std::size_t i = x.down.size();
  std::size_t j = y.up.size();
  while (i > 0 && j > 0) {
    if (x.down[i - 1] != y.up[j - 1]) return SemigroupElement::zero();
    --i;
    --j;
  }
  SemigroupElement r;
  r.kind = Kind::element;
  if (j == 0) {
    // y's climb is absorbed; x keeps its shape, y's descent is appended.
    r.base = x.base;
    r.up = x.up;
    r.down.assign(x.down.begin(), x.down.begin() + i);
    r.down.insert(r.down.end(), y.down.begin(), y.down.end());
  } else {
    // x's descent is absorbed; the leftover climb of y extends x's.
    r.base = y.base;
    r.up.assign(y.up.begin(), y.up.begin() + j);
    r.up.insert(r.up.end(), x.up.begin(), x.up.end());
    r.down = y.down;
  }
  return r;
}

Word invert(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(Letter{it->edge, it->sign == Sign::minus ? Sign::plus : Sign::minus});
  return out;
}

Word serialize(const SemigroupElement& x) {
  if (x.kind != SemigroupElement::Kind::element)
    throw input_error("only nonzero semigroup elements have a word spelling");
  Word w;
  w.reserve(x.up.size() + x.down.size());
  for (auto it = x.up.rbegin(); it != x.up.rend(); ++it)
    w.push_back(Letter{*it, Sign::plus});
  for (int e : x.down) w.push_back(Letter{e, Sign::minus});
  return w;
}

PowerClass classify_powers(const SemigroupElement& x, const DirectedMultigraph& g) {
  if (x.is_zero()) throw input_error("classify_powers: zero element");
  PowerClass pc;
  if (x.kind == SemigroupElement::Kind::identity) {
    pc.type = PowerClass::Type::idempotent;
    return pc;
  }
  if (x.up == x.down) {
    pc.type = PowerClass::Type::idempotent;
    return pc;
  }
  // Squaring cancels the tails of down and up; the square (and every higher
  // power) survives exactly when the shorter path is a suffix of the longer
  // one, leaving a closed cycle at the base as the repeating excess.
  auto is_suffix = [](const std::vector<int>& longer, const std::vector<int>& shorter) {
    return std::equal(shorter.begin(), shorter.end(),
                      longer.end() - static_cast<long>(shorter.size()));
  };
  if (x.down.size() > x.up.size() && is_suffix(x.down, x.up)) {
    pc.type = PowerClass::Type::down_excess;
    pc.cycle.assign(x.down.begin(),
                    x.down.begin() + static_cast<long>(x.down.size() - x.up.size()));
  } else if (x.up.size() > x.down.size() && is_suffix(x.up, x.down)) {
    pc.type = PowerClass::Type::up_excess;
    pc.cycle.assign(x.up.begin(),
                    x.up.begin() + static_cast<long>(x.up.size() - x.down.size()));
  } else {
    pc.type = PowerClass::Type::nilpotent;
    return pc;
  }
  assert(!pc.cycle.empty());
  assert(g.source(pc.cycle.front()) == x.base);
  assert(g.target(pc.cycle.back()) == x.base);
  return pc;
}

SemigroupElement lambda_image(const Word& w, const ContractionData& cd) {
  SemigroupElement x = SemigroupElement::identity();
  for (Letter l : w) {
    if (l.edge < 0 || l.edge >= cd.graph.edge_count())
      throw input_error("letter refers to an unknown edge index");
    if (cd.in_forest[l.edge]) {
      int root_slot = cd.contracted_vertex[cd.graph.target(l.edge)];
      if (!append_idempotent(x, root_slot, cd.contracted)) return x;
    } else {
      Letter mapped{cd.lambda_edge[l.edge], l.sign};
      if (!append_letter(x, mapped, cd.contracted)) return x;
    }
  }
  return x;
}

SemigroupElement lambda_element(const SemigroupElement& x, const ContractionData& cd) {
  if (x.kind != SemigroupElement::Kind::element) return x;
  SemigroupElement r;
  r.kind = SemigroupElement::Kind::element;
  r.base = cd.contracted_vertex[x.base];
  for (int e : x.up)
    if (!cd.in_forest[e]) r.up.push_back(cd.lambda_edge[e]);
  for (int e : x.down)
    if (!cd.in_forest[e]) r.down.push_back(cd.lambda_edge[e]);
  return r;
}

Word parse_word(const std::string& text, const DirectedMultigraph& g) {
  Word w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token.size() < 2)
      throw input_error("bad word token: " + token);
    char sign = token.back();
    if (sign != '-' && sign != '+')
      throw input_error("word token must end in '-' or '+': " + token);
    std::string edge = token.substr(0, token.size() - 1);
    int idx = g.edge_index(edge);
    if (idx < 0) throw input_error("unknown edge id in word: " + edge);
    w.push_back(Letter{idx, sign == '-' ? Sign::minus : Sign::plus});
  }
  return w;
}

std::string word_to_string(const Word& w, const DirectedMultigraph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << g.edge(w[i].edge).name << (w[i].sign == Sign::minus ? '-' : '+');
  }
  return out.str();
}

std::string element_to_string(const SemigroupElement& x, const DirectedMultigraph& g) {
  if (x.is_zero()) return "0";
  if (x.kind == SemigroupElement::Kind::identity) return "1";
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < x.up.size(); ++i)
    out << (i ? " " : "") << g.edge(x.up[i]).name;
  out << " | " << g.vertex_name(x.base) << " | ";
  for (std::size_t i = 0; i < x.down.size(); ++i)
    out << (i ? " " : "") << g.edge(x.down[i]).name;
  out << ']';
  return out.str();
}

}  // namespace mds
