#pragma once

// JSON interchange for tilings.
//
//   rhombic:    {"n":3,"w":[3,2,1],"tiles":[{"pair":[1,2],"base":[]},...]}
//   zonotopal:  {"n":3,"w":[3,2,1],"tiles":[{"labels":[1,2,3],"base":[]}]}
//
// Arrays are ascending and tiles are in canonical (pair, base) order, so
// serialization is byte-stable.

#include <cstdint>
#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rhombic/error.hpp"
#include "rhombic/label_set.hpp"
#include "rhombic/permutation.hpp"
#include "rhombic/qpolynomial.hpp"
#include "rhombic/tiling.hpp"
#include "rhombic/zonotopal.hpp"

namespace rhombic {

using Json = nlohmann::ordered_json;

inline Json to_json(const RhombicTiling& t) {
  Json tiles = Json::array();
  for (const Rhombus& r : t.tiles) {
    tiles.push_back(Json{{"pair", {r.low, r.high}}, {"base", r.base.members()}});
  }
  return Json{{"n", t.rank()},
              {"w", std::vector<int>(t.w.values().begin(), t.w.values().end())},
              {"tiles", std::move(tiles)}};
}

inline Json to_json(const ZonoTiling& z) {
  Json tiles = Json::array();
  for (const ZonoTile& t : z.tiles) {
    tiles.push_back(Json{{"labels", t.labels.members()}, {"base", t.base.members()}});
  }
  return Json{{"n", z.rank()},
              {"w", std::vector<int>(z.w.values().begin(), z.w.values().end())},
              {"tiles", std::move(tiles)}};
}

inline Json to_json(const QPolynomial& p) { return Json(p.coeffs()); }

inline std::string serialize(const RhombicTiling& t) { return to_json(t).dump(); }
inline std::string serialize(const ZonoTiling& z) { return to_json(z).dump(); }

using AnyTiling = std::variant<RhombicTiling, ZonoTiling>;

namespace detail {

inline std::vector<int> int_array(const Json& node, const char* what) {
  if (!node.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& v : node) {
    if (!v.is_number_integer()) throw InvalidInput(std::string(what) + " must hold integers");
    const auto value = v.get<std::int64_t>();
    if (value < -1'000'000 || value > 1'000'000) throw InvalidInput(std::string(what) + " entry out of range");
    out.push_back(static_cast<int>(value));
  }
  return out;
}

inline LabelSet label_set(const Json& node, const char* what, int n) {
  LabelSet s;
  for (int label : int_array(node, what)) {
    if (label < 1 || label > n) throw InvalidInput(std::string(what) + " label " + std::to_string(label) + " outside 1.." + std::to_string(n));
    if (s.contains(label)) throw InvalidInput(std::string(what) + " repeats label " + std::to_string(label));
    s.insert(label);
  }
  return s;
}

inline const Json& field(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return object.at(key);
}

}  // namespace detail

/// Parses either tiling format. Rhombic input is any object whose tiles all
/// carry "pair"; the result is structurally checked but not validated.
inline AnyTiling parse_tiling(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  const Json& n_node = detail::field(doc, "n");
  if (!n_node.is_number_integer()) throw InvalidInput("'n' must be an integer");
  const auto n64 = n_node.get<std::int64_t>();
  if (n64 < 1 || n64 > LabelSet::kMaxLabel) throw InvalidInput("'n' outside 1.." + std::to_string(LabelSet::kMaxLabel));
  const int n = static_cast<int>(n64);
  Permutation w(detail::int_array(detail::field(doc, "w"), "w"));
  if (w.size() != n) throw InvalidInput("'w' has " + std::to_string(w.size()) + " entries, expected " + std::to_string(n));
  const Json& tiles = detail::field(doc, "tiles");
  if (!tiles.is_array()) throw InvalidInput("'tiles' must be an array");

  bool rhombic = true;
  for (const Json& tile : tiles) {
    if (!tile.is_object()) throw InvalidInput("each tile must be an object");
    rhombic = rhombic && tile.contains("pair");
  }
  if (rhombic) {
    RhombicTiling t{w, {}};
    for (const Json& tile : tiles) {
      const std::vector<int> pair = detail::int_array(tile.at("pair"), "pair");
      if (pair.size() != 2 || pair[0] < 1 || pair[1] > n || pair[0] >= pair[1]) {
        throw InvalidInput("'pair' must be an increasing pair of labels in 1.." + std::to_string(n));
      }
      if (!t.tiles.insert({pair[0], pair[1], detail::label_set(detail::field(tile, "base"), "base", n)}).second) {
        throw InvalidInput("duplicate tile");
      }
    }
    return t;
  }
  ZonoTiling z{w, {}};
  for (const Json& tile : tiles) {
    const char* key = tile.contains("labels") ? "labels" : "pair";
    ZonoTile zt{detail::label_set(detail::field(tile, key), key, n),
                detail::label_set(detail::field(tile, "base"), "base", n)};
    if (!z.tiles.insert(zt).second) throw InvalidInput("duplicate tile");
  }
  return z;
}

inline RhombicTiling parse_rhombic(const std::string& text) {
  AnyTiling any = parse_tiling(text);
  if (auto* t = std::get_if<RhombicTiling>(&any)) return std::move(*t);
  ZonoTiling& z = std::get<ZonoTiling>(any);
  if (!is_rhombic(z)) throw InvalidInput("expected a rhombic tiling");
  return as_rhombic(z);
}

inline ZonoTiling parse_zonotopal(const std::string& text) {
  AnyTiling any = parse_tiling(text);
  if (auto* t = std::get_if<RhombicTiling>(&any)) return as_zonotopal(*t);
  return std::get<ZonoTiling>(any);
}

/// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
inline std::string digest(const std::string& canonical) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string digest(const RhombicTiling& t) { return digest(serialize(t)); }
inline std::string digest(const ZonoTiling& z) { return digest(serialize(z)); }

}  // namespace rhombic
