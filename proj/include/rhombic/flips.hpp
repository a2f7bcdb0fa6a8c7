#pragma once

// Hexagon flips. A flip site is a unit hexagon carrying labels a < b < c with
// bottom vertex S, tiled by three rhombi in one of two ways:
//
//   interior_b:   ({a,b},S), ({b,c},S), ({a,c},S+b)     interior vertex S+b
//   interior_ac:  ({a,c},S), ({b,c},S+a), ({a,b},S+c)   interior vertex S+a+c
//
// These are the growth images of s_i s_{i+1} s_i and s_{i+1} s_i s_{i+1}.

#include <algorithm>
#include <array>
#include <compare>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rhombic/error.hpp"
#include "rhombic/serialize.hpp"
#include "rhombic/tiling.hpp"
#include "rhombic/zonotopal.hpp"

namespace rhombic {

enum class FlipOrientation { interior_b, interior_ac };

struct FlipSite {
  int a = 0;
  int b = 0;
  int c = 0;
  LabelSet base;
  FlipOrientation orientation = FlipOrientation::interior_b;

  std::array<Rhombus, 3> tiles() const {
    if (orientation == FlipOrientation::interior_b) {
      return {Rhombus{a, b, base}, Rhombus{b, c, base}, Rhombus{a, c, base.with(b)}};
    }
    return {Rhombus{a, c, base}, Rhombus{b, c, base.with(a)}, Rhombus{a, b, base.with(c)}};
  }

  LabelSet interior_vertex() const {
    return orientation == FlipOrientation::interior_b ? base.with(b) : base.with(a).with(c);
  }

  /// The same hexagon with the other rhombic tiling.
  FlipSite flipped() const {
    FlipSite out = *this;
    out.orientation = orientation == FlipOrientation::interior_b ? FlipOrientation::interior_ac
                                                                 : FlipOrientation::interior_b;
    return out;
  }

  friend auto operator<=>(const FlipSite&, const FlipSite&) = default;
};

inline bool has_site(const RhombicTiling& t, const FlipSite& f) {
  for (const Rhombus& r : f.tiles()) {
    if (!t.tiles.contains(r)) return false;
  }
  return true;
}

inline std::set<FlipSite> flip_sites(const RhombicTiling& t) {
  std::set<FlipSite> out;
  const int n = t.rank();
  for (const Rhombus& r : t.tiles) {
    // r as ({a,b},S) of an interior_b site, or ({a,c},S) of an interior_ac site.
    for (int c = r.high + 1; c <= n; ++c) {
      FlipSite f{r.low, r.high, c, r.base, FlipOrientation::interior_b};
      if (!r.base.contains(c) && has_site(t, f)) out.insert(f);
    }
    for (int b = r.low + 1; b < r.high; ++b) {
      FlipSite f{r.low, b, r.high, r.base, FlipOrientation::interior_ac};
      if (!r.base.contains(b) && has_site(t, f)) out.insert(f);
    }
  }
  return out;
}

inline RhombicTiling apply_flip(const RhombicTiling& t, const FlipSite& f) {
  if (!has_site(t, f)) throw InvalidInput("flip site is not present in the tiling");
  RhombicTiling out = t;
  for (const Rhombus& r : f.tiles()) out.tiles.erase(r);
  for (const Rhombus& r : f.flipped().tiles()) out.tiles.insert(r);
  return out;
}

/// The tiling with one hexagon in place of the site's three rhombi.
inline ZonoTiling coarsen_flip(const RhombicTiling& t, const FlipSite& f) {
  if (!has_site(t, f)) throw InvalidInput("flip site is not present in the tiling");
  RhombicTiling rest = t;
  for (const Rhombus& r : f.tiles()) rest.tiles.erase(r);
  ZonoTiling out = as_zonotopal(rest);
  out.tiles.insert({LabelSet{f.a, f.b, f.c}, f.base});
  return out;
}

struct FlipGraph {
  Permutation w;
  std::vector<RhombicTiling> nodes;  // canonical order
  std::vector<std::string> keys;     // canonical JSON per node
  std::vector<std::pair<std::size_t, std::size_t>> arcs;  // i < j

  std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> adj(nodes.size());
    for (auto [i, j] : arcs) {
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
    return adj;
  }
};

inline FlipGraph flip_graph(const Permutation& w) {
  FlipGraph g{w, {}, {}, {}};
  const std::set<RhombicTiling> all = enumerate_rhombic(w);
  g.nodes.assign(all.begin(), all.end());
  std::map<std::string, std::size_t> index;
  for (const RhombicTiling& t : g.nodes) {
    g.keys.push_back(serialize(t));
    index.emplace(g.keys.back(), index.size());
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (const FlipSite& f : flip_sites(g.nodes[i])) {
      const std::size_t j = index.at(serialize(apply_flip(g.nodes[i], f)));
      if (i < j) g.arcs.emplace_back(i, j);
    }
  }
  return g;
}

inline bool is_connected(const FlipGraph& g) {
  if (g.nodes.empty()) return true;
  const auto adj = g.adjacency();
  std::vector<bool> seen(g.nodes.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j : adj[i]) {
      if (seen[j]) continue;
      seen[j] = true;
      ++reached;
      queue.push_back(j);
    }
  }
  return reached == g.nodes.size();
}

/// One line per node: "<digest>: <neighbor digest> ...".
inline std::string to_adjacency_list(const FlipGraph& g) {
  const auto adj = g.adjacency();
  std::ostringstream out;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << digest(g.keys[i]) << ':';
    std::vector<std::string> neighbors;
    for (std::size_t j : adj[i]) neighbors.push_back(digest(g.keys[j]));
    std::sort(neighbors.begin(), neighbors.end());
    for (const auto& d : neighbors) out << ' ' << d;
    out << '\n';
  }
  return out.str();
}

inline std::string to_dot(const FlipGraph& g) {
  std::ostringstream out;
  out << "graph flips {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << "  \"" << digest(g.keys[i]) << "\" [label=\"" << format_word(tiling_to_word(g.nodes[i])) << "\"];\n";
  }
  for (auto [i, j] : g.arcs) out << "  \"" << digest(g.keys[i]) << "\" -- \"" << digest(g.keys[j]) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rhombic
