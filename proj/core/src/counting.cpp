#include "mds/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <sstream>
#include <thread>

namespace mds {

bool is_admissible(const Word& w, const DirectedMultigraph& g) {
  return reduce(w, g).nonzero();
}

namespace {

Word rotate(const Word& w, int cut) {
  Word r(w.begin() + cut, w.end());
  r.insert(r.end(), w.begin(), w.begin() + cut);
  return r;
}

int least_period_of(const Word& w) {
  int n = static_cast<int>(w.size());
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (int i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return d;
  }
  return n;
}

bool is_min_rotation(const Word& w) {
  for (int c = 1; c < static_cast<int>(w.size()); ++c) {
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      const Letter& a = w[i];
      const Letter& b = w[(c + i) % w.size()];
      if (b < a) return false;
      if (a < b) break;
    }
  }
  return true;
}

std::vector<Letter> all_letters(const DirectedMultigraph& g) {
  std::vector<Letter> letters;
  letters.reserve(2 * g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    letters.push_back(Letter{e, Sign::minus});
    letters.push_back(Letter{e, Sign::plus});
  }
  return letters;
}

// Vertices spelled by the vertex-idempotent rotations of w.
std::vector<int> vertex_idempotent_rotations(const Word& w, const DirectedMultigraph& g) {
  std::vector<int> vertices;
  for (int c = 0; c < static_cast<int>(w.size()); ++c) {
    SemigroupElement x = reduce(rotate(w, c), g);
    if (x.is_vertex_idempotent()) vertices.push_back(x.base);
  }
  return vertices;
}

int unique_neutral_vertex(const std::vector<int>& vertices, const Word& w,
                          const DirectedMultigraph& g) {
  assert(!vertices.empty());
  for (int v : vertices)
    if (v != vertices[0])
      throw counting_bug("vertex-idempotent rotations disagree on the vertex of " +
                         word_to_string(w, g) + ": " + g.vertex_name(vertices[0]) +
                         " vs " + g.vertex_name(v));
  return vertices[0];
}

// (kept G-edge, exponent) if some rotation maps to a pure descending power
// of one contracted edge.  All such rotations carry the same data; this is
// checked, not assumed.
std::optional<std::pair<int, int>> multiplier_by_rotation(const Word& w,
                                                          const ContractionData& cd) {
  std::optional<std::pair<int, int>> found;
  for (int c = 0; c < static_cast<int>(w.size()); ++c) {
    SemigroupElement lam = lambda_image(rotate(w, c), cd);
    if (lam.kind != SemigroupElement::Kind::element) continue;
    if (!lam.up.empty() || lam.down.empty()) continue;
    bool pure = std::all_of(lam.down.begin(), lam.down.end(),
                            [&](int e) { return e == lam.down[0]; });
    if (!pure) continue;
    std::pair<int, int> cur{cd.kept_edges[lam.down[0]],
                            static_cast<int>(lam.down.size())};
    if (found && *found != cur)
      throw counting_bug("rotations disagree on the negative multiplier of " +
                         word_to_string(w, cd.graph));
    found = cur;
  }
  return found;
}

}  // namespace

PeriodicWordInfo analyze_periodic_word(const Word& w, const DirectedMultigraph& g,
                                       const ContractionData& cd) {
  if (w.empty()) throw input_error("analyze_periodic_word: empty word");
  PeriodicWordInfo info;
  info.word = w;
  info.least_period = least_period_of(w);
  SemigroupElement x = reduce(w, g);
  info.is_point = x.nonzero() && classify_powers(x, g).power_stable();
  if (!info.is_point) return info;
  if (x.is_idempotent()) {
    auto vertices = vertex_idempotent_rotations(w, g);
    if (vertices.empty())
      throw counting_bug("idempotent periodic word with no vertex-idempotent rotation: " +
                         word_to_string(w, g));
    int v = unique_neutral_vertex(vertices, w, g);
    info.neutral_vertex = v;
    info.neutral_root = cd.tree_of[v];
  } else {
    Word primitive(w.begin(), w.begin() + info.least_period);
    info.negative_multiplier = multiplier_by_rotation(primitive, cd);
  }
  return info;
}

namespace {

CountTable make_table(const ContractionData& cd, int n_max, int horizon) {
  CountTable ct;
  ct.n_max = n_max;
  ct.multiplier_horizon = std::min(horizon, n_max);
  ct.fixed_points.assign(n_max + 1, BigInt(0));
  ct.neutral_fixed.assign(n_max + 1, BigInt(0));
  ct.neutral_least.assign(n_max + 1, BigInt(0));
  ct.neutral_by_root.assign(cd.root_count(),
                            std::vector<BigInt>(n_max + 1, BigInt(0)));
  ct.orbits_by_multiplier.assign(cd.nu(), std::vector<BigInt>(n_max + 1, BigInt(0)));
  ct.multiplier_fixed.assign(cd.nu(), std::vector<BigInt>(n_max + 1, BigInt(0)));
  ct.lambda_min.assign(cd.nu(), -1);
  return ct;
}

void derive_lambda_fields(CountTable& ct, const ContractionData& cd) {
  for (int k = 0; k < cd.nu(); ++k) {
    for (int n = 1; n <= ct.multiplier_horizon; ++n)
      if (ct.orbits_by_multiplier[k][n] > 0) {
        ct.lambda_min[k] = n;
        break;
      }
    if (ct.lambda_min[k] > 0)
      ct.m_ell[ct.lambda_min[k]].push_back(cd.kept_edges[k]);
  }
}

// Orbit counts from fixed-point counts: points fixed at length n split over
// the divisors d of n as d * (orbits of least period d).
void invert_to_orbits(CountTable& ct) {
  for (int k = 0; k < static_cast<int>(ct.multiplier_fixed.size()); ++k) {
    for (int n = 1; n <= ct.multiplier_horizon; ++n) {
      BigInt rem = ct.multiplier_fixed[k][n];
      for (int d = 1; d < n; ++d)
        if (n % d == 0) rem -= BigInt(d) * ct.orbits_by_multiplier[k][d];
      if (rem % n != 0)
        throw counting_bug("multiplier point count at n=" + std::to_string(n) +
                           " is not divisible by n");
      ct.orbits_by_multiplier[k][n] = rem / n;
    }
  }
}

void orbits_to_fixed(CountTable& ct) {
  for (int k = 0; k < static_cast<int>(ct.orbits_by_multiplier.size()); ++k)
    for (int n = 1; n <= ct.multiplier_horizon; ++n) {
      BigInt acc(0);
      for (int d = 1; d <= n; ++d)
        if (n % d == 0) acc += BigInt(d) * ct.orbits_by_multiplier[k][d];
      ct.multiplier_fixed[k][n] = acc;
    }
}

void derive_neutral_least(CountTable& ct) {
  for (int n = 1; n <= ct.n_max; ++n) {
    BigInt rem = ct.neutral_fixed[n];
    for (int d = 1; d < n; ++d)
      if (n % d == 0) rem -= ct.neutral_least[d];
    ct.neutral_least[n] = rem;
  }
}

// Per-element statistics: a word counts through its normal form alone.  The
// repeating cycle of a descending element is its eventual itinerary, so the
// multiplier can be read off the kept edges of that cycle.
void aggregate_element(CountTable& ct, const ContractionData& cd,
                       const DirectedMultigraph& g, const SemigroupElement& x,
                       const BigInt& c, int n) {
  PowerClass pc = classify_powers(x, g);
  if (!pc.power_stable()) return;
  ct.fixed_points[n] += c;
  if (pc.type == PowerClass::Type::idempotent) {
    ct.neutral_fixed[n] += c;
    ct.neutral_by_root[cd.contracted_vertex[x.base]][n] += c;
  } else if (pc.type == PowerClass::Type::down_excess && n <= ct.multiplier_horizon) {
    int kept = -1;
    bool pure = true;
    for (int e : pc.cycle) {
      if (cd.in_forest[e]) continue;
      if (kept == -1)
        kept = e;
      else if (kept != e) {
        pure = false;
        break;
      }
    }
    assert(kept != -1);  // a closed cycle cannot consist of forest edges
    if (pure) ct.multiplier_fixed[cd.lambda_edge[kept]][n] += c;
  }
}

using StateMap = std::map<SemigroupElement, BigInt>;

StateMap dp_step(const StateMap& cur, const std::vector<Letter>& letters,
                 const DirectedMultigraph& g, int threads) {
  if (threads <= 1 || cur.size() < 256) {
    StateMap next;
    for (const auto& [x, c] : cur)
      for (Letter l : letters) {
        SemigroupElement y = x;
        if (append_letter(y, l, g)) next[std::move(y)] += c;
      }
    return next;
  }
  std::vector<const std::pair<const SemigroupElement, BigInt>*> items;
  items.reserve(cur.size());
  for (const auto& kv : cur) items.push_back(&kv);
  int t = std::min<int>(threads, static_cast<int>(items.size()));
  std::vector<StateMap> partial(t);
  std::vector<std::thread> pool;
  for (int i = 0; i < t; ++i)
    pool.emplace_back([&, i]() {
      StateMap& local = partial[i];
      for (std::size_t j = i; j < items.size(); j += t)
        for (Letter l : letters) {
          SemigroupElement y = items[j]->first;
          if (append_letter(y, l, g)) local[std::move(y)] += items[j]->second;
        }
    });
  for (auto& th : pool) th.join();
  StateMap next = std::move(partial[0]);
  for (int i = 1; i < t; ++i)
    for (auto& [x, c] : partial[i]) next[x] += c;
  return next;
}

}  // namespace

CountTable count_tables_dp(const DirectedMultigraph& g, const ContractionData& cd,
                           int n_max, const CountOptions& opt) {
  if (n_max < 1) throw input_error("count_tables_dp: n_max must be >= 1");
  CountTable ct = make_table(cd, n_max, opt.multiplier_horizon);
  auto letters = all_letters(g);
  StateMap cur;
  cur[SemigroupElement::identity()] = 1;
  for (int n = 1; n <= n_max; ++n) {
    StateMap next = dp_step(cur, letters, g, opt.threads);
    if (next.size() > opt.state_cap)
      throw resource_error("normal-form state space exceeded the cap (" +
                               std::to_string(next.size()) + " states) at length " +
                               std::to_string(n),
                           n);
    for (const auto& [x, c] : next) aggregate_element(ct, cd, g, x, c, n);
    cur = std::move(next);
  }
  derive_neutral_least(ct);
  invert_to_orbits(ct);
  derive_lambda_fields(ct);
  return ct;
}

namespace {

// Independent power-stability oracle: iterate the product far enough that a
// vanishing power would have shown up.
bool stable_by_iteration(const SemigroupElement& x, const DirectedMultigraph& g) {
  int bound = 2 * x.size() + 4;
  SemigroupElement y = x;
  for (int k = 2; k <= bound; ++k) {
    y = multiply(y, x, g);
    if (y.is_zero()) return false;
  }
  return true;
}

struct NaiveAccumulator {
  CountTable table;
  std::size_t nodes = 0;
};

void naive_visit(const Word& w, const SemigroupElement& x,
                 const DirectedMultigraph& g, const ContractionData& cd,
                 NaiveAccumulator& acc) {
  int n = static_cast<int>(w.size());
  if (!stable_by_iteration(x, g)) return;
  acc.table.fixed_points[n] += 1;
  int d = least_period_of(w);
  auto vertices = vertex_idempotent_rotations(w, g);
  if (!vertices.empty()) {
    int v = unique_neutral_vertex(vertices, w, g);
    acc.table.neutral_fixed[n] += 1;
    acc.table.neutral_by_root[cd.contracted_vertex[v]][n] += 1;
    if (d == n) acc.table.neutral_least[n] += 1;
  } else if (d == n && n <= acc.table.multiplier_horizon && is_min_rotation(w)) {
    auto mult = multiplier_by_rotation(w, cd);
    if (mult)
      acc.table.orbits_by_multiplier[cd.lambda_edge[mult->first]][n] += 1;
  }
}

void naive_walk(Word& w, const SemigroupElement& x, int n_max,
                const std::vector<Letter>& letters, const DirectedMultigraph& g,
                const ContractionData& cd, std::size_t node_cap,
                NaiveAccumulator& acc) {
  if (++acc.nodes > node_cap)
    throw resource_error("word enumeration exceeded the cap at length " +
                             std::to_string(w.size()),
                         static_cast<int>(w.size()));
  naive_visit(w, x, g, cd, acc);
  if (static_cast<int>(w.size()) == n_max) return;
  for (Letter l : letters) {
    SemigroupElement y = x;
    if (!append_letter(y, l, g)) continue;
    w.push_back(l);
    naive_walk(w, y, n_max, letters, g, cd, node_cap, acc);
    w.pop_back();
  }
}

}  // namespace

CountTable count_tables_naive(const DirectedMultigraph& g, const ContractionData& cd,
                              int n_max, const CountOptions& opt) {
  if (n_max < 1) throw input_error("count_tables_naive: n_max must be >= 1");
  auto letters = all_letters(g);
  int threads = std::max(1, opt.threads);
  std::size_t node_cap = opt.state_cap * 16;

  std::vector<NaiveAccumulator> accs;
  for (int i = 0; i < threads; ++i)
    accs.push_back(NaiveAccumulator{make_table(cd, n_max, opt.multiplier_horizon), 0});

  auto run_chunk = [&](int id) {
    Word w;
    for (std::size_t j = id; j < letters.size(); j += threads) {
      SemigroupElement x = SemigroupElement::identity();
      if (!append_letter(x, letters[j], g)) continue;
      w.assign(1, letters[j]);
      naive_walk(w, x, n_max, letters, g, cd, node_cap, accs[id]);
    }
  };

  std::exception_ptr failure;
  if (threads == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::mutex mu;
    for (int i = 0; i < threads; ++i)
      pool.emplace_back([&, i]() {
        try {
          run_chunk(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      });
    for (auto& th : pool) pool.size(), th.join();
    if (failure) std::rethrow_exception(failure);
  }

  CountTable ct = std::move(accs[0].table);
  for (int i = 1; i < threads; ++i) {
    const CountTable& o = accs[i].table;
    for (int n = 1; n <= n_max; ++n) {
      ct.fixed_points[n] += o.fixed_points[n];
      ct.neutral_fixed[n] += o.neutral_fixed[n];
      ct.neutral_least[n] += o.neutral_least[n];
    }
    for (int r = 0; r < cd.root_count(); ++r)
      for (int n = 1; n <= n_max; ++n) ct.neutral_by_root[r][n] += o.neutral_by_root[r][n];
    for (int k = 0; k < cd.nu(); ++k)
      for (int n = 1; n <= n_max; ++n)
        ct.orbits_by_multiplier[k][n] += o.orbits_by_multiplier[k][n];
  }
  orbits_to_fixed(ct);
  derive_lambda_fields(ct);
  return ct;
}

FormalPowerSeries circular_code_coefficients(int vertex, const DirectedMultigraph& g,
                                             int n_max) {
  if (vertex < 0 || vertex >= g.vertex_count())
    throw input_error("circular_code_coefficients: unknown vertex");
  FormalPowerSeries phi(n_max);
  auto letters = all_letters(g);
  SemigroupElement home = SemigroupElement::vertex_idempotent(vertex);
  StateMap cur;
  cur[home] = 1;
  for (int step = 1; step <= n_max; ++step) {
    StateMap next;
    BigInt returns(0);
    for (const auto& [x, c] : cur)
      for (Letter l : letters) {
        SemigroupElement y = x;
        if (!append_letter(y, l, g)) continue;
        if (y == home)
          returns += c;  // first return: intermediate visits were excluded
        else
          next[std::move(y)] += c;
      }
    phi[step] = Rational(returns);
    cur = std::move(next);
  }
  return phi;
}

namespace {

// All directed paths of length 1..max_len ending at `end`, grown backward.
std::vector<std::vector<int>> paths_into(const DirectedMultigraph& g, int end,
                                         int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto extend = [&](auto&& self, int vertex, int remaining) -> void {
    if (remaining == 0) return;
    for (int e : g.in_edges(vertex)) {
      cur.insert(cur.begin(), e);
      out.push_back(cur);
      self(self, g.source(e), remaining - 1);
      cur.erase(cur.begin());
    }
  };
  extend(extend, end, max_len);
  return out;
}

Word periodic_segment(const Word& w, int start, int len) {
  Word out;
  out.reserve(len);
  int n = static_cast<int>(w.size());
  for (int i = 0; i < len; ++i) out.push_back(w[((start + i) % n + n) % n]);
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

NeutralityTestResult bounded_neutrality_test(const Word& w, const DirectedMultigraph& g,
                                             int context_len, int extension_len) {
  if (w.empty()) throw input_error("bounded_neutrality_test: empty word");
  SemigroupElement xw = reduce(w, g);
  if (xw.is_zero() || !classify_powers(xw, g).power_stable())
    throw input_error("bounded_neutrality_test: the word does not span a periodic point");

  int n = static_cast<int>(w.size());
  NeutralityTestResult result;

  for (int cut = 0; cut < n; ++cut) {
    Word rot = rotate(w, cut);
    SemigroupElement xr = reduce(rot, g);
    assert(xr.nonzero());

    // Candidate windows, all of doubled length: the word repeated forward,
    // and the word doubled back onto its own inverse (either order).
    Word fwd_word = concat(rot, rot);
    Word mountain_word = concat(rot, invert(rot));
    Word valley_word = concat(invert(rot), rot);
    SemigroupElement fwd = multiply(xr, xr, g);
    SemigroupElement mountain = multiply(xr, multiply(xr.is_zero() ? xr : [&] {
                                           SemigroupElement inv;
                                           inv.kind = SemigroupElement::Kind::element;
                                           inv.base = xr.base;
                                           inv.up = xr.down;
                                           inv.down = xr.up;
                                           return inv;
                                         }(), SemigroupElement::identity(), g),
                                         g);
    SemigroupElement xr_inv;
    xr_inv.kind = SemigroupElement::Kind::element;
    xr_inv.base = xr.base;
    xr_inv.up = xr.down;
    xr_inv.down = xr.up;
    mountain = multiply(xr, xr_inv, g);
    SemigroupElement valley = multiply(xr_inv, xr, g);

    // Left side continues the point, right side is an arbitrary bounded
    // context popping through the window's pending descent.
    struct Middle {
      const SemigroupElement* elem;
      const Word* word;
    };
    for (Middle m : {Middle{&mountain, &mountain_word}, Middle{&fwd, &fwd_word}}) {
      if (m.elem->is_zero()) continue;
      const auto& down = m.elem->down;
      int budget = extension_len - static_cast<int>(down.size());
      if (budget < 1) continue;
      std::vector<std::pair<Word, SemigroupElement>> lefts;
      for (int t = 1; t <= context_len; ++t) {
        Word u = periodic_segment(w, cut - t, t);
        SemigroupElement z = multiply(reduce(u, g), *m.elem, g);
        if (z.nonzero() && z.down.size() > down.size()) lefts.emplace_back(std::move(u), std::move(z));
      }
      if (lefts.empty()) continue;
      for (const auto& climb : paths_into(g, m.elem->base, budget)) {
        SemigroupElement q;
        q.kind = SemigroupElement::Kind::element;
        q.base = g.source(climb.front());
        q.up = climb;
        q.up.insert(q.up.end(), down.begin(), down.end());
        for (const auto& [u, z] : lefts) {
          if (multiply(z, q, g).is_zero()) {
            result.confirmed_non_neutral = true;
            result.witness = NeutralityWitness{u, *m.word, serialize(q)};
            return result;
          }
        }
      }
    }

    // Mirror: right side continues the point, left side is an arbitrary
    // bounded context descending into the window's pending climb.
    for (Middle m : {Middle{&valley, &valley_word}, Middle{&fwd, &fwd_word}}) {
      if (m.elem->is_zero()) continue;
      const auto& up = m.elem->up;
      int budget = context_len - static_cast<int>(up.size());
      if (budget < 1) continue;
      std::vector<std::pair<Word, SemigroupElement>> rights;
      for (int t = 1; t <= extension_len; ++t) {
        Word v = periodic_segment(w, cut, t);
        SemigroupElement z = multiply(*m.elem, reduce(v, g), g);
        if (z.nonzero() && z.up.size() > up.size()) rights.emplace_back(std::move(v), std::move(z));
      }
      if (rights.empty()) continue;
      for (const auto& descent : paths_into(g, m.elem->base, budget)) {
        SemigroupElement q;
        q.kind = SemigroupElement::Kind::element;
        q.base = g.source(descent.front());
        q.down = descent;
        q.down.insert(q.down.end(), up.begin(), up.end());
        SemigroupElement qm = multiply(q, *m.elem, g);
        if (qm.is_zero()) continue;
        for (const auto& [v, z] : rights) {
          if (multiply(qm, reduce(v, g), g).is_zero()) {
            result.confirmed_non_neutral = true;
            result.witness = NeutralityWitness{serialize(q), *m.word, v};
            return result;
          }
        }
      }
    }
  }
  return result;
}

}  // namespace mds
