#pragma once

// Rhombic tilings of the Elnitsky polygon E(w).
//
// A tile is recorded by the pair of edge labels {a, b} it carries and the
// label set of its bottom vertex. Growing a tiling from a reduced word places
// the k-th rhombus on the current boundary u: letter i gives the tile
// ({u(i), u(i+1)}, {u(1), ..., u(i-1)}). Commutation-equivalent words place
// identical tiles, so the tile set is the canonical form of a commutation
// class and tiling equality is set equality.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rhombic/error.hpp"
#include "rhombic/label_set.hpp"
#include "rhombic/permutation.hpp"

namespace rhombic {

/// Directed unit edge from `tail` to tail ∪ {label}.
struct Edge {
  LabelSet tail;
  int label = 0;

  LabelSet head() const { return tail.with(label); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Rhombus {
  int low = 0;   // smaller label of the pair
  int high = 0;  // larger label of the pair
  LabelSet base;

  LabelSet labels() const { return LabelSet{low, high}; }

  /// bottom, bottom+low, top, bottom+high
  std::array<LabelSet, 4> vertices() const {
    return {base, base.with(low), base.with(low).with(high), base.with(high)};
  }

  std::array<Edge, 4> edges() const {
    return {Edge{base, low}, Edge{base.with(low), high}, Edge{base, high}, Edge{base.with(high), low}};
  }

  friend auto operator<=>(const Rhombus&, const Rhombus&) = default;
};

struct RhombicTiling {
  Permutation w;
  std::set<Rhombus> tiles;

  int rank() const { return w.size(); }

  friend auto operator<=>(const RhombicTiling&, const RhombicTiling&) = default;
};

/// Outcome of a well-formedness check, with the first problem found.
struct Validation {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }

  static Validation failure(std::string why) { return {false, std::move(why)}; }
};

namespace detail {

/// Label set of the first p entries of a boundary.
inline LabelSet prefix_set(const std::vector<int>& u, int p) {
  LabelSet s;
  for (int k = 0; k < p; ++k) s.insert(u[k]);
  return s;
}

inline std::vector<int> identity_boundary(int n) {
  std::vector<int> u(n);
  for (int k = 0; k < n; ++k) u[k] = k + 1;
  return u;
}

inline void check_rank(int n) {
  if (n < 1 || n > LabelSet::kMaxLabel) {
    throw InvalidInput("rank " + std::to_string(n) + " outside 1.." +
                       std::to_string(LabelSet::kMaxLabel));
  }
}

inline bool peel_search(const std::set<Rhombus>& tiles, std::vector<int>& u, std::size_t placed,
                        std::set<std::vector<int>>& dead_ends) {
  if (placed == tiles.size()) return true;
  if (dead_ends.contains(u)) return false;
  const int n = static_cast<int>(u.size());
  for (int p = 0; p + 1 < n; ++p) {
    if (u[p] > u[p + 1]) continue;
    if (!tiles.contains(Rhombus{u[p], u[p + 1], prefix_set(u, p)})) continue;
    std::swap(u[p], u[p + 1]);
    const bool done = peel_search(tiles, u, placed + 1, dead_ends);
    std::swap(u[p], u[p + 1]);
    if (done) return true;
  }
  dead_ends.insert(u);
  return false;
}

}  // namespace detail

/// The C^j vertices {1..j}, j = 0..n, followed by G_j = {w(1..j)}, j = 1..n-1.
inline std::vector<LabelSet> boundary_vertices(const Permutation& w) {
  std::vector<LabelSet> out;
  for (int j = 0; j <= w.size(); ++j) out.push_back(LabelSet::prefix(j));
  LabelSet g;
  for (int j = 1; j < w.size(); ++j) {
    g.insert(w(j));
    out.push_back(g);
  }
  return out;
}

/// The 2n sides of E(w), oriented away from C^0.
inline std::vector<Edge> boundary_edges(const Permutation& w) {
  std::vector<Edge> out;
  for (int j = 1; j <= w.size(); ++j) out.push_back({LabelSet::prefix(j - 1), j});
  LabelSet g;
  for (int j = 1; j <= w.size(); ++j) {
    out.push_back({g, w(j)});
    g.insert(w(j));
  }
  return out;
}

/// Grows the tiling of a reduced word, one rhombus per letter.
inline RhombicTiling word_to_tiling(const Word& word) {
  detail::check_rank(word.rank());
  std::vector<int> u = detail::identity_boundary(word.rank());
  std::set<Rhombus> tiles;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const int i = word[k];
    if (u[i - 1] > u[i]) {
      throw InvalidInput("word is not reduced: letter " + std::to_string(i) + " at position " +
                         std::to_string(k + 1) + " undoes an inversion");
    }
    tiles.insert(Rhombus{u[i - 1], u[i], detail::prefix_set(u, i - 1)});
    std::swap(u[i - 1], u[i]);
  }
  return {Permutation(std::move(u)), std::move(tiles)};
}

/// Well-formedness: tile pairs are exactly the inversions of w, once each, and
/// some peeling order consumes every tile.
inline Validation validate(const RhombicTiling& tiling) {
  const int n = tiling.w.size();
  if (n < 1 || n > LabelSet::kMaxLabel) return Validation::failure("rank out of range");
  const LabelSet universe = LabelSet::prefix(n);
  std::map<std::pair<int, int>, int> pair_count;
  for (const Rhombus& r : tiling.tiles) {
    if (r.low < 1 || r.high > n || r.low >= r.high) {
      return Validation::failure("tile pair {" + std::to_string(r.low) + "," +
                                 std::to_string(r.high) + "} is not an increasing pair in 1.." +
                                 std::to_string(n));
    }
    if (!r.base.subset_of(universe) || r.base.contains(r.low) || r.base.contains(r.high)) {
      return Validation::failure("tile base " + r.base.to_string() + " is not disjoint from {" +
                                 std::to_string(r.low) + "," + std::to_string(r.high) + "}");
    }
    ++pair_count[{r.low, r.high}];
  }
  const InversionSet inv = inversions(tiling.w);
  for (const auto& [pair, count] : pair_count) {
    if (!inv.contains(pair)) {
      return Validation::failure("pair {" + std::to_string(pair.first) + "," +
                                 std::to_string(pair.second) + "} is not an inversion of w");
    }
    if (count > 1) {
      return Validation::failure("pair {" + std::to_string(pair.first) + "," +
                                 std::to_string(pair.second) + "} carried by " +
                                 std::to_string(count) + " tiles");
    }
  }
  if (pair_count.size() != inv.size()) {
    return Validation::failure(std::to_string(inv.size() - pair_count.size()) +
                               " inversions of w carry no tile");
  }
  std::vector<int> u = detail::identity_boundary(n);
  std::set<std::vector<int>> dead_ends;
  if (!detail::peel_search(tiling.tiles, u, 0, dead_ends)) {
    return Validation::failure("tiles overlap: no peeling order exhausts them");
  }
  return {};
}

/// Peels rhombi off the base boundary, always taking the leftmost peelable
/// one. Any peelable rhombus of a genuine tiling can go first, so the greedy
/// choice never gets stuck.
inline Word tiling_to_word(const RhombicTiling& tiling) {
  if (Validation v = validate(tiling); !v) throw InvalidInput("malformed tiling: " + v.reason);
  const int n = tiling.rank();
  std::vector<int> u = detail::identity_boundary(n);
  std::vector<int> letters;
  while (letters.size() < tiling.tiles.size()) {
    int p = 0;
    while (p + 1 < n && !(u[p] < u[p + 1] &&
                          tiling.tiles.contains(Rhombus{u[p], u[p + 1], detail::prefix_set(u, p)}))) {
      ++p;
    }
    if (p + 1 >= n) throw InvalidInput("malformed tiling: no peelable tile");
    letters.push_back(p + 1);
    std::swap(u[p], u[p + 1]);
  }
  return Word(n, std::move(letters));
}

namespace detail {

inline void all_peelings(const RhombicTiling& tiling, std::vector<int>& u,
                         std::vector<int>& letters, std::set<Word>& out) {
  if (letters.size() == tiling.tiles.size()) {
    out.emplace(tiling.rank(), letters);
    return;
  }
  for (int p = 0; p + 1 < tiling.rank(); ++p) {
    if (u[p] > u[p + 1]) continue;
    if (!tiling.tiles.contains(Rhombus{u[p], u[p + 1], prefix_set(u, p)})) continue;
    std::swap(u[p], u[p + 1]);
    letters.push_back(p + 1);
    all_peelings(tiling, u, letters, out);
    letters.pop_back();
    std::swap(u[p], u[p + 1]);
  }
}

}  // namespace detail

/// Every peeling sequence of the tiling: its full commutation class.
inline std::set<Word> all_words(const RhombicTiling& tiling) {
  if (tiling.tiles.size() > static_cast<std::size_t>(kMaxEnumerationLength)) {
    throw GuardExceeded("length " + std::to_string(tiling.tiles.size()) +
                        " exceeds enumeration limit " + std::to_string(kMaxEnumerationLength));
  }
  if (Validation v = validate(tiling); !v) throw InvalidInput("malformed tiling: " + v.reason);
  std::vector<int> u = detail::identity_boundary(tiling.rank());
  std::vector<int> letters;
  std::set<Word> out;
  detail::all_peelings(tiling, u, letters, out);
  return out;
}

namespace detail {

// Depth-first growth producing each commutation class once, through its
// Cartier-Foata normal form: a sequence of steps, each a set of pairwise
// commuting letters, where every letter of a step fails to commute with some
// letter of the previous step.
class RhombicGrower {
 public:
  explicit RhombicGrower(const Permutation& w)
      : w_(w), inverse_(w.inverse()), u_(identity_boundary(w.size())),
        target_(static_cast<std::size_t>(w.length())) {}

  std::set<RhombicTiling> run() {
    grow({});
    return std::move(out_);
  }

 private:
  bool placeable(int p) const {
    return u_[p] < u_[p + 1] && inverse_(u_[p]) > inverse_(u_[p + 1]);
  }

  void grow(const std::vector<int>& previous) {
    if (placed_.size() == target_) {
      out_.insert(RhombicTiling{w_, std::set<Rhombus>(placed_.begin(), placed_.end())});
      return;
    }
    std::vector<int> candidates;
    for (int p = 0; p + 1 < w_.size(); ++p) {
      if (!placeable(p)) continue;
      const bool blocked =
          previous.empty() ||
          std::any_of(previous.begin(), previous.end(), [p](int q) { return std::abs(p - q) <= 1; });
      if (blocked) candidates.push_back(p);
    }
    std::vector<int> step;
    choose(candidates, 0, step);
  }

  void choose(const std::vector<int>& candidates, std::size_t index, std::vector<int>& step) {
    if (index == candidates.size()) {
      if (!step.empty()) place(step);
      return;
    }
    const int p = candidates[index];
    if (step.empty() || p - step.back() > 1) {
      step.push_back(p);
      choose(candidates, index + 1, step);
      step.pop_back();
    }
    choose(candidates, index + 1, step);
  }

  void place(const std::vector<int>& step) {
    for (int p : step) placed_.push_back(Rhombus{u_[p], u_[p + 1], prefix_set(u_, p)});
    for (int p : step) std::swap(u_[p], u_[p + 1]);
    grow(step);
    for (int p : step) std::swap(u_[p], u_[p + 1]);
    placed_.resize(placed_.size() - step.size());
  }

  const Permutation& w_;
  Permutation inverse_;
  std::vector<int> u_;
  std::size_t target_;
  std::vector<Rhombus> placed_;
  std::set<RhombicTiling> out_;
};

}  // namespace detail

/// All rhombic tilings of E(w).
inline std::set<RhombicTiling> enumerate_rhombic(const Permutation& w) {
  detail::check_rank(w.size());
  if (w.length() > kMaxEnumerationLength) {
    throw GuardExceeded("length " + std::to_string(w.length()) + " exceeds enumeration limit " +
                        std::to_string(kMaxEnumerationLength));
  }
  return detail::RhombicGrower(w).run();
}

/// Tile edges together with the sides of E(w).
inline std::set<Edge> edges_of(const RhombicTiling& tiling) {
  std::set<Edge> out;
  for (const Rhombus& r : tiling.tiles) {
    for (const Edge& e : r.edges()) out.insert(e);
  }
  for (const Edge& e : boundary_edges(tiling.w)) out.insert(e);
  return out;
}

/// Tile corners together with the polygon's C^j and G_j vertices.
inline std::set<LabelSet> vertices_of(const RhombicTiling& tiling) {
  std::set<LabelSet> out;
  for (const Rhombus& r : tiling.tiles) {
    for (LabelSet v : r.vertices()) out.insert(v);
  }
  for (LabelSet v : boundary_vertices(tiling.w)) out.insert(v);
  return out;
}

}  // namespace rhombic
