#pragma once

// Combinatorial data of the Bott-Samelson variety attached to a tiling:
// Poincare polynomials, torus-fixed points as light/dark colorings of the
// rhombi, their images in the flag variety, and strata dimensions.
//
// A fixed point assigns to each tiling vertex x a coordinate subspace, stored
// as the index set of the basis vectors spanning it. Base-boundary vertices
// carry the base flag {1..j}. Each rhombus, processed in a peeling order, has
// its bottom P, old middle M and top Q already assigned; a light rhombus gives
// its new middle the space of M, a dark one the other |M|-dimensional
// coordinate space between P and Q.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rhombic/error.hpp"
#include "rhombic/label_set.hpp"
#include "rhombic/permutation.hpp"
#include "rhombic/qpolynomial.hpp"
#include "rhombic/tiling.hpp"
#include "rhombic/zonotopal.hpp"

namespace rhombic {

/// prod over tiles of [k]_q! for a 2k-gon tile.
inline QPolynomial poincare(const ZonoTiling& z) {
  QPolynomial out = QPolynomial::one();
  for (const auto& [k, count] : census(z)) out *= q_factorial(k).pow(count);
  return out;
}

inline QPolynomial poincare(const RhombicTiling& t) { return poincare(as_zonotopal(t)); }

enum class Shade { light, dark };

struct Coloring {
  std::map<Rhombus, Shade> shade;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

inline Coloring uniform_coloring(const RhombicTiling& t, Shade s) {
  Coloring c;
  for (const Rhombus& r : t.tiles) c.shade.emplace(r, s);
  return c;
}

/// Bit k of `mask` shades the k-th tile in canonical order; set bits are dark.
inline Coloring coloring_from_mask(const RhombicTiling& t, std::uint64_t mask) {
  Coloring c;
  int k = 0;
  for (const Rhombus& r : t.tiles) c.shade.emplace(r, (mask >> k++) & 1u ? Shade::dark : Shade::light);
  return c;
}

/// One character per tile in canonical order: '0' light, '1' dark.
inline Coloring coloring_from_bits(const RhombicTiling& t, const std::string& bits) {
  if (bits.size() != t.tiles.size()) {
    throw InvalidInput("coloring has " + std::to_string(bits.size()) + " bits for " +
                       std::to_string(t.tiles.size()) + " tiles");
  }
  Coloring c;
  std::size_t k = 0;
  for (const Rhombus& r : t.tiles) {
    const char b = bits[k++];
    if (b != '0' && b != '1') throw InvalidInput("coloring bits must be 0 or 1");
    c.shade.emplace(r, b == '1' ? Shade::dark : Shade::light);
  }
  return c;
}

inline std::string coloring_to_bits(const Coloring& c) {
  std::string out;
  for (const auto& [r, s] : c.shade) out += s == Shade::dark ? '1' : '0';
  return out;
}

inline int stratum_dimension(const Coloring& c) {
  int dark = 0;
  for (const auto& [r, s] : c.shade) dark += s == Shade::dark;
  return dark;
}

struct FixedPoint {
  std::map<LabelSet, LabelSet> assignment;  // vertex -> spanning basis indices

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

/// Realizes the fixed point of a coloring by processing rhombi in the order
/// given by `peeling`, which must be a reduced word of the tiling.
inline FixedPoint realize_fixed_point(const RhombicTiling& t, const Coloring& c, const Word& peeling) {
  if (c.shade.size() != t.tiles.size()) throw InvalidInput("coloring domain does not match tiling");
  const int n = t.rank();
  FixedPoint fp;
  for (int j = 0; j <= n; ++j) fp.assignment.emplace(LabelSet::prefix(j), LabelSet::prefix(j));
  std::vector<int> u = detail::identity_boundary(n);
  for (int letter : peeling.letters()) {
    const int p = letter - 1;
    const Rhombus r{u[p], u[p + 1], detail::prefix_set(u, p)};
    auto shade = c.shade.find(r);
    if (shade == c.shade.end()) throw InvalidInput("coloring domain does not match tiling");
    const LabelSet bottom = fp.assignment.at(r.base);
    const LabelSet middle = fp.assignment.at(r.base.with(r.low));
    const LabelSet top = fp.assignment.at(r.base.with(r.low).with(r.high));
    const LabelSet fresh = shade->second == Shade::light ? middle : bottom | (top - middle);
    fp.assignment[r.base.with(r.high)] = fresh;
    std::swap(u[p], u[p + 1]);
  }
  return fp;
}

inline FixedPoint realize_fixed_point(const RhombicTiling& t, const Coloring& c) {
  return realize_fixed_point(t, c, tiling_to_word(t));
}

namespace detail {

inline Permutation read_flag(const Permutation& w, const FixedPoint& fp) {
  std::vector<int> v;
  LabelSet vertex;
  LabelSet previous;
  for (int j = 1; j <= w.size(); ++j) {
    vertex.insert(w(j));
    const LabelSet step = fp.assignment.at(vertex) - previous;
    v.push_back(step.max());
    previous = fp.assignment.at(vertex);
  }
  return Permutation(std::move(v));
}

}  // namespace detail

/// The permutation v with {v(1..j)} assigned to G_j, for j = 1..n.
inline Permutation image_permutation(const RhombicTiling& t, const Coloring& c) {
  return detail::read_flag(t.w, realize_fixed_point(t, c));
}

/// Images of all 2^l fixed points.
inline std::set<Permutation> fixed_point_images(const RhombicTiling& t) {
  if (t.tiles.size() > static_cast<std::size_t>(kMaxEnumerationLength)) {
    throw GuardExceeded("length " + std::to_string(t.tiles.size()) + " exceeds enumeration limit " +
                        std::to_string(kMaxEnumerationLength));
  }
  const Word peeling = tiling_to_word(t);
  std::set<Permutation> out;
  const std::uint64_t count = std::uint64_t{1} << t.tiles.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    out.insert(detail::read_flag(t.w, realize_fixed_point(t, coloring_from_mask(t, mask), peeling)));
  }
  return out;
}

}  // namespace rhombic
