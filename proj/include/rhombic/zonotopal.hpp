#pragma once

// Zonotopal tilings of E(w): tilings by centrally symmetric 2k-gons with unit
// sides. A 2k-gon tile carrying labels a_1 < ... < a_k with bottom vertex S has
// lower path S, S+a_1, S+a_1+a_2, ... and upper path S, S+a_k, S+a_k+a_{k-1}, ...
// Placing it on a boundary u requires u to read a_1, ..., a_k consecutively
// right after the prefix S, and reverses that segment.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rhombic/error.hpp"
#include "rhombic/label_set.hpp"
#include "rhombic/permutation.hpp"
#include "rhombic/tiling.hpp"

namespace rhombic {

struct ZonoTile {
  LabelSet labels;
  LabelSet base;

  int order() const { return labels.size(); }

  /// Corners in boundary order: the lower path from base to base ∪ labels,
  /// then the upper path back down.
  std::vector<LabelSet> corners() const {
    const std::vector<int> a = labels.members();
    std::vector<LabelSet> out;
    LabelSet v = base;
    out.push_back(v);
    for (int label : a) out.push_back(v = v.with(label));
    for (std::size_t m = 0; m + 1 < a.size(); ++m) out.push_back(v = v.without(a[m]));
    return out;
  }

  std::vector<Edge> edges() const {
    const std::vector<int> a = labels.members();
    std::vector<Edge> out;
    LabelSet lower = base;
    LabelSet upper = base;
    for (std::size_t m = 0; m < a.size(); ++m) {
      out.push_back({lower, a[m]});
      lower.insert(a[m]);
      const int top = a[a.size() - 1 - m];
      out.push_back({upper, top});
      upper.insert(top);
    }
    return out;
  }

  friend auto operator<=>(const ZonoTile&, const ZonoTile&) = default;
};

struct ZonoTiling {
  Permutation w;
  std::set<ZonoTile> tiles;

  int rank() const { return w.size(); }

  friend auto operator<=>(const ZonoTiling&, const ZonoTiling&) = default;
};

inline ZonoTiling as_zonotopal(const RhombicTiling& tiling) {
  ZonoTiling out{tiling.w, {}};
  for (const Rhombus& r : tiling.tiles) out.tiles.insert({r.labels(), r.base});
  return out;
}

inline bool is_rhombic(const ZonoTiling& z) {
  return std::all_of(z.tiles.begin(), z.tiles.end(), [](const ZonoTile& t) { return t.order() == 2; });
}

inline RhombicTiling as_rhombic(const ZonoTiling& z) {
  RhombicTiling out{z.w, {}};
  for (const ZonoTile& t : z.tiles) {
    if (t.order() != 2) throw InvalidInput("tiling has a tile with " + std::to_string(2 * t.order()) + " sides");
    const std::vector<int> pair = t.labels.members();
    out.tiles.insert({pair[0], pair[1], t.base});
  }
  return out;
}

/// t_k: number of tiles with 2k sides, keyed by k.
inline std::map<int, int> census(const ZonoTiling& z) {
  std::map<int, int> out;
  for (const ZonoTile& t : z.tiles) ++out[t.order()];
  return out;
}

namespace detail {

inline bool all_pairs_inverted(const std::vector<int>& labels, const Permutation& inverse) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      const int a = std::min(labels[i], labels[j]);
      const int b = std::max(labels[i], labels[j]);
      if (inverse(a) < inverse(b)) return false;
    }
  }
  return true;
}

inline bool zono_peel_search(const std::set<ZonoTile>& tiles, std::vector<int>& u, std::size_t placed,
                             std::set<std::vector<int>>& dead_ends) {
  if (placed == tiles.size()) return true;
  if (dead_ends.contains(u)) return false;
  const int n = static_cast<int>(u.size());
  for (int p = 0; p + 1 < n; ++p) {
    LabelSet run{u[p]};
    const LabelSet base = prefix_set(u, p);
    for (int q = p + 1; q < n && u[q - 1] < u[q]; ++q) {
      run.insert(u[q]);
      if (!tiles.contains(ZonoTile{run, base})) continue;
      std::reverse(u.begin() + p, u.begin() + q + 1);
      const bool done = zono_peel_search(tiles, u, placed + 1, dead_ends);
      std::reverse(u.begin() + p, u.begin() + q + 1);
      if (done) return true;
    }
  }
  dead_ends.insert(u);
  return false;
}

}  // namespace detail

/// Every inversion of w lies in exactly one tile, no tile carries a
/// non-inversion, and some growth order places every tile.
inline Validation validate(const ZonoTiling& z) {
  const int n = z.w.size();
  if (n < 1 || n > LabelSet::kMaxLabel) return Validation::failure("rank out of range");
  const LabelSet universe = LabelSet::prefix(n);
  const Permutation inverse = z.w.inverse();
  std::set<std::pair<int, int>> covered;
  for (const ZonoTile& t : z.tiles) {
    if (t.order() < 2) return Validation::failure("tile " + t.labels.to_string() + " has fewer than 2 labels");
    if (!t.labels.subset_of(universe) || !t.base.subset_of(universe)) {
      return Validation::failure("tile labels outside 1.." + std::to_string(n));
    }
    if (!t.base.disjoint(t.labels)) {
      return Validation::failure("tile base " + t.base.to_string() + " meets labels " + t.labels.to_string());
    }
    const std::vector<int> a = t.labels.members();
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        if (inverse(a[i]) < inverse(a[j])) {
          return Validation::failure("pair {" + std::to_string(a[i]) + "," + std::to_string(a[j]) +
                                     "} is not an inversion of w");
        }
        if (!covered.emplace(a[i], a[j]).second) {
          return Validation::failure("pair {" + std::to_string(a[i]) + "," + std::to_string(a[j]) +
                                     "} lies in more than one tile");
        }
      }
    }
  }
  if (covered.size() != static_cast<std::size_t>(z.w.length())) {
    return Validation::failure("some inversions of w lie in no tile");
  }
  std::vector<int> u = detail::identity_boundary(n);
  std::set<std::vector<int>> dead_ends;
  if (!detail::zono_peel_search(z.tiles, u, 0, dead_ends)) {
    return Validation::failure("tiles overlap: no growth order places them all");
  }
  return {};
}

/// Tile edges together with the sides of E(w).
inline std::set<Edge> edges_of(const ZonoTiling& z) {
  std::set<Edge> out;
  for (const ZonoTile& t : z.tiles) {
    for (const Edge& e : t.edges()) out.insert(e);
  }
  for (const Edge& e : boundary_edges(z.w)) out.insert(e);
  return out;
}

inline std::set<LabelSet> vertices_of(const ZonoTiling& z) {
  std::set<LabelSet> out;
  for (const ZonoTile& t : z.tiles) {
    for (LabelSet v : t.corners()) out.insert(v);
  }
  for (LabelSet v : boundary_vertices(z.w)) out.insert(v);
  return out;
}

inline constexpr int kMaxZonotopalRank = 8;

namespace detail {

// Canonical growth as for rhombic tilings: placements on disjoint boundary
// segments commute, overlapping ones do not, and the search only emits
// Cartier-Foata normal forms of the placement sequence.
class ZonoGrower {
 public:
  explicit ZonoGrower(const Permutation& w)
      : w_(w), inverse_(w.inverse()), u_(identity_boundary(w.size())),
        target_(w.length()) {}

  std::set<ZonoTiling> run() {
    grow({});
    return std::move(out_);
  }

 private:
  using Segment = std::pair<int, int>;  // inclusive positions [first, second]

  void grow(const std::vector<Segment>& previous) {
    if (covered_ == target_) {
      out_.insert(ZonoTiling{w_, std::set<ZonoTile>(placed_.begin(), placed_.end())});
      return;
    }
    const int n = w_.size();
    std::vector<Segment> candidates;
    for (int p = 0; p + 1 < n; ++p) {
      for (int q = p + 1; q < n && u_[q - 1] < u_[q]; ++q) {
        bool inverted = true;
        for (int r = p; r < q && inverted; ++r) inverted = inverse_(u_[r]) > inverse_(u_[q]);
        if (!inverted) break;
        const bool blocked = previous.empty() ||
                             std::any_of(previous.begin(), previous.end(), [p, q](Segment s) {
                               return s.first <= q && p <= s.second;
                             });
        if (blocked) candidates.emplace_back(p, q);
      }
    }
    std::vector<Segment> step;
    choose(candidates, 0, step);
  }

  void choose(const std::vector<Segment>& candidates, std::size_t index, std::vector<Segment>& step) {
    if (index == candidates.size()) {
      if (!step.empty()) place(step);
      return;
    }
    const Segment s = candidates[index];
    if (step.empty() || s.first > step.back().second) {
      step.push_back(s);
      choose(candidates, index + 1, step);
      step.pop_back();
    }
    choose(candidates, index + 1, step);
  }

  void place(const std::vector<Segment>& step) {
    int added = 0;
    for (auto [p, q] : step) {
      LabelSet labels;
      for (int r = p; r <= q; ++r) labels.insert(u_[r]);
      placed_.push_back({labels, prefix_set(u_, p)});
      const int k = q - p + 1;
      added += k * (k - 1) / 2;
    }
    for (auto [p, q] : step) std::reverse(u_.begin() + p, u_.begin() + q + 1);
    covered_ += added;
    grow(step);
    covered_ -= added;
    for (auto [p, q] : step) std::reverse(u_.begin() + p, u_.begin() + q + 1);
    placed_.resize(placed_.size() - step.size());
  }

  const Permutation& w_;
  Permutation inverse_;
  std::vector<int> u_;
  int target_;
  int covered_ = 0;
  std::vector<ZonoTile> placed_;
  std::set<ZonoTiling> out_;
};

inline void check_zonotopal_guard(const Permutation& w) {
  detail::check_rank(w.size());
  if (w.size() > kMaxZonotopalRank) {
    throw GuardExceeded("rank " + std::to_string(w.size()) + " exceeds zonotopal enumeration limit " +
                        std::to_string(kMaxZonotopalRank));
  }
  if (w.length() > kMaxEnumerationLength) {
    throw GuardExceeded("length " + std::to_string(w.length()) + " exceeds enumeration limit " +
                        std::to_string(kMaxEnumerationLength));
  }
}

}  // namespace detail

inline std::set<ZonoTiling> enumerate_zonotopal(const Permutation& w) {
  detail::check_zonotopal_guard(w);
  return detail::ZonoGrower(w).run();
}

/// Reverse edge inclusion: z1 <= z2 iff every edge of z2 is an edge of z1.
inline bool zono_leq(const ZonoTiling& z1, const ZonoTiling& z2) {
  if (z1.w != z2.w) throw InvalidInput("tilings of different polygons are not comparable");
  const std::set<Edge> e1 = edges_of(z1);
  const std::set<Edge> e2 = edges_of(z2);
  return std::includes(e1.begin(), e1.end(), e2.begin(), e2.end());
}

/// The poset of all zonotopal tilings of E(w). `covers` holds index pairs
/// (lower, upper) into `elements`.
class ZonoPoset {
 public:
  explicit ZonoPoset(const Permutation& w) : w_(w) {
    const std::set<ZonoTiling> all = enumerate_zonotopal(w);
    elements_.assign(all.begin(), all.end());
    std::map<Edge, std::size_t> edge_ids;
    std::vector<std::vector<std::size_t>> edge_lists;
    for (const ZonoTiling& z : elements_) {
      std::vector<std::size_t> ids;
      for (const Edge& e : edges_of(z)) ids.push_back(edge_ids.emplace(e, edge_ids.size()).first->second);
      edge_lists.push_back(std::move(ids));
    }
    words_ = (edge_ids.size() + 63) / 64;
    edge_bits_.assign(elements_.size() * words_, 0);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t id : edge_lists[i]) edge_bits_[i * words_ + id / 64] |= std::uint64_t{1} << (id % 64);
    }
  }

  const Permutation& permutation() const { return w_; }
  const std::vector<ZonoTiling>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  std::size_t index_of(const ZonoTiling& z) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), z);
    if (it == elements_.end() || *it != z) throw InvalidInput("tiling is not an element of this poset");
    return static_cast<std::size_t>(it - elements_.begin());
  }

  /// elements()[i] <= elements()[j]
  bool leq(std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < words_; ++k) {
      if (edge_bits_[j * words_ + k] & ~edge_bits_[i * words_ + k]) return false;
    }
    return true;
  }

  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

  /// Cover relations by transitive reduction of the strict order.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const {
    if (!covers_computed_) {
      const std::size_t n = size();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!less(i, j)) continue;
          bool between = false;
          for (std::size_t k = 0; k < n && !between; ++k) between = less(i, k) && less(k, j);
          if (!between) covers_.emplace_back(i, j);
        }
      }
      covers_computed_ = true;
    }
    return covers_;
  }

  std::vector<std::size_t> maximal_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < size() && maximal; ++j) maximal = !less(i, j);
      if (maximal) out.push_back(i);
    }
    return out;
  }

  std::vector<std::size_t> minimal_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < size() && minimal; ++j) minimal = !less(j, i);
      if (minimal) out.push_back(i);
    }
    return out;
  }

 private:
  Permutation w_;
  std::vector<ZonoTiling> elements_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> edge_bits_;
  mutable bool covers_computed_ = false;
  mutable std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

inline ZonoPoset poset(const Permutation& w) { return ZonoPoset(w); }

inline std::vector<ZonoTiling> maximal_elements(const ZonoPoset& p) {
  std::vector<ZonoTiling> out;
  for (std::size_t i : p.maximal_indices()) out.push_back(p.elements()[i]);
  return out;
}

inline bool has_unique_max(const Permutation& w) { return poset(w).maximal_indices().size() == 1; }

/// Minimal elements among the common upper bounds of z1 and z2. Empty, a
/// single least upper bound, or several incomparable candidates.
inline std::vector<ZonoTiling> minimal_upper_bounds(const ZonoPoset& p, const ZonoTiling& z1,
                                                    const ZonoTiling& z2) {
  const std::size_t i = p.index_of(z1);
  const std::size_t j = p.index_of(z2);
  std::vector<std::size_t> upper;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.leq(i, k) && p.leq(j, k)) upper.push_back(k);
  }
  std::vector<ZonoTiling> out;
  for (std::size_t k : upper) {
    const bool minimal =
        std::none_of(upper.begin(), upper.end(), [&](std::size_t m) { return p.less(m, k); });
    if (minimal) out.push_back(p.elements()[k]);
  }
  return out;
}

/// All rhombic tilings refining z: each 2k-gon is tiled independently by a
/// relabeled rhombic tiling of E(k ... 2 1).
inline std::set<RhombicTiling> refinements(const ZonoTiling& z) {
  std::map<int, std::set<RhombicTiling>> per_order;
  std::vector<std::vector<std::vector<Rhombus>>> options;
  for (const ZonoTile& t : z.tiles) {
    const int k = t.order();
    auto it = per_order.find(k);
    if (it == per_order.end()) it = per_order.emplace(k, enumerate_rhombic(Permutation::longest(k))).first;
    const std::vector<int> a = t.labels.members();
    std::vector<std::vector<Rhombus>> local;
    for (const RhombicTiling& small : it->second) {
      std::vector<Rhombus> relabeled;
      for (const Rhombus& r : small.tiles) {
        LabelSet base = t.base;
        for (int m : r.base.members()) base.insert(a[m - 1]);
        relabeled.push_back({a[r.low - 1], a[r.high - 1], base});
      }
      local.push_back(std::move(relabeled));
    }
    options.push_back(std::move(local));
  }
  std::set<RhombicTiling> out;
  std::vector<std::size_t> choice(options.size(), 0);
  while (true) {
    RhombicTiling t{z.w, {}};
    for (std::size_t m = 0; m < options.size(); ++m) {
      for (const Rhombus& r : options[m][choice[m]]) t.tiles.insert(r);
    }
    out.insert(std::move(t));
    std::size_t m = 0;
    while (m < options.size() && ++choice[m] == options[m].size()) choice[m++] = 0;
    if (m == options.size()) break;
  }
  return out;
}

}  // namespace rhombic
