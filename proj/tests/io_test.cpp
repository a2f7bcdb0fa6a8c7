#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "rhombic/rhombic.hpp"
#include "svg_check.hpp"

namespace rhombic {
namespace {

Permutation P(const char* s) { return parse_permutation(s); }

const Word kWord7456312 = parse_word("3,4,2,5,6,5,3,4,3,2,1,5,2,3,6,4,5", 7);

std::string fig4_text() {
  std::ifstream in(std::string(RHOMBIC_TEST_DATA) + "/zonotopal_87465312.json");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

TEST(Serialize, Format) {
  EXPECT_EQ(serialize(word_to_tiling(Word(3, {1, 2, 1}))),
            R"({"n":3,"w":[3,2,1],"tiles":[{"pair":[1,2],"base":[]},{"pair":[1,3],"base":[2]},{"pair":[2,3],"base":[]}]})");
  const ZonoTiling hex{P("321"), {ZonoTile{LabelSet{1, 2, 3}, {}}}};
  EXPECT_EQ(serialize(hex), R"({"n":3,"w":[3,2,1],"tiles":[{"labels":[1,2,3],"base":[]}]})");
  EXPECT_EQ(to_json(QPolynomial{1, 2, 2, 1}).dump(), "[1,2,2,1]");
}

TEST(Serialize, TileOrderIsLexicographic) {
  const std::string text = serialize(word_to_tiling(kWord7456312));
  const Json doc = Json::parse(text);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> keys;
  for (const Json& t : doc["tiles"]) keys.emplace_back(t["pair"].get<std::vector<int>>(), t["base"].get<std::vector<int>>());
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_EQ(doc["tiles"][0]["pair"], Json::parse("[1,3]"));
  EXPECT_EQ(doc["tiles"][0]["base"], Json::parse("[4,5,6,7]"));
}

TEST(Serialize, RoundTripIsByteStable) {
  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      for (const RhombicTiling& t : enumerate_rhombic(w)) {
        const std::string text = serialize(t);
        const RhombicTiling back = parse_rhombic(text);
        ASSERT_EQ(back, t);
        ASSERT_EQ(serialize(back), text);
      }
      for (const ZonoTiling& z : enumerate_zonotopal(w)) {
        const std::string text = serialize(z);
        ASSERT_EQ(serialize(parse_zonotopal(text)), text);
      }
    }
  }
}

TEST(Serialize, ParseAcceptsUnsortedInput) {
  const RhombicTiling t = parse_rhombic(R"({"w":[2,1],"n":2,"tiles":[{"base":[],"pair":[1,2]}]})");
  EXPECT_EQ(t, word_to_tiling(Word(2, {1})));
  EXPECT_EQ(parse_zonotopal(fig4_text()).tiles.size(), 14u);
  EXPECT_THROW(parse_rhombic(fig4_text()), InvalidInput);
}

TEST(Serialize, MalformedInputIsRejected) {
  for (const char* bad : {"", "{", "[]", "null", R"({"n":2})", R"({"n":2,"w":[2,1]})",
                          R"({"n":2,"w":[2,2],"tiles":[]})", R"({"n":3,"w":[2,1],"tiles":[]})",
                          R"({"n":2,"w":[2,1],"tiles":[{"pair":[2,1],"base":[]}]})",
                          R"({"n":2,"w":[2,1],"tiles":[{"pair":[1,2]}]})",
                          R"({"n":2,"w":[2,1],"tiles":[{"pair":[1,2],"base":[9]}]})",
                          R"({"n":2,"w":[2,1],"tiles":[{"pair":[1,2],"base":[]},{"pair":[1,2],"base":[]}]})",
                          R"({"n":"2","w":[2,1],"tiles":[]})", R"({"n":2,"w":[2,1.5],"tiles":[]})",
                          R"({"n":2,"w":[2,1],"tiles":[7]})", R"({"n":99,"w":[],"tiles":[]})"}) {
    EXPECT_THROW(parse_tiling(bad), InvalidInput) << bad;
  }
}

TEST(Serialize, Digest) {
  EXPECT_EQ(digest(std::string()), "cbf29ce484222325");
  EXPECT_EQ(digest("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(digest(word_to_tiling(Word(2, {1}))).size(), 16u);
}

TEST(Geometry, Directions) {
  const PolygonGeometry g(2);
  const Point origin = vertex_position({}, g);
  EXPECT_EQ(origin.x, 0.0);
  EXPECT_EQ(origin.y, 0.0);
  const Point p = vertex_position(LabelSet{1}, g);
  EXPECT_NEAR(p.x, std::cos(3 * std::numbers::pi / 4), 1e-12);
  EXPECT_NEAR(p.y, std::sin(3 * std::numbers::pi / 4), 1e-12);
  for (int n = 1; n <= 9; ++n) {
    const PolygonGeometry gn(n);
    for (int i = 1; i <= n; ++i) {
      EXPECT_GT(gn.angle(i), 0.0);
      EXPECT_LT(gn.angle(i), std::numbers::pi);
      if (i > 1) {
        EXPECT_LT(gn.angle(i), gn.angle(i - 1));
      }
    }
    EXPECT_NEAR(vertex_position(LabelSet::prefix(n), gn).x, 0.0, 1e-9);
  }
}

void check_tile_geometry(const std::string& svg, const ZonoTiling& z, double scale) {
  const auto polys = svgcheck::polygons(svg);
  ASSERT_EQ(polys.size(), z.tiles.size());
  std::size_t k = 0;
  for (const ZonoTile& tile : z.tiles) {
    const auto& pts = polys[k++];
    const std::size_t m = pts.size();
    ASSERT_EQ(m, 2u * tile.order());
    for (std::size_t i = 0; i < m; ++i) {
      EXPECT_NEAR(distance(pts[i], pts[(i + 1) % m]), scale, 0.01);
      // Side i and side i + k are opposite: same length, antiparallel.
      if (i < m / 2) {
        const Point a{pts[i + 1].x - pts[i].x, pts[i + 1].y - pts[i].y};
        const std::size_t j = i + m / 2;
        const Point b{pts[(j + 1) % m].x - pts[j].x, pts[(j + 1) % m].y - pts[j].y};
        EXPECT_NEAR(a.x, -b.x, 0.01);
        EXPECT_NEAR(a.y, -b.y, 0.01);
      }
    }
  }
}

TEST(Render, SingleTile) {
  const std::string svg = render_svg(word_to_tiling(Word(2, {1})));
  EXPECT_TRUE(svgcheck::well_formed(svg));
  EXPECT_EQ(svgcheck::polygons(svg).size(), 1u);
  std::size_t labels = 0;
  for (std::size_t pos = 0; (pos = svg.find("<text", pos)) != std::string::npos; ++pos) ++labels;
  EXPECT_EQ(labels, 4u);  // C0, C1, C2, G1
}

TEST(Render, LargeTilings) {
  const RhombicTiling t = word_to_tiling(kWord7456312);
  const std::string svg = render_svg(t);
  EXPECT_TRUE(svgcheck::well_formed(svg));
  check_tile_geometry(svg, as_zonotopal(t), 60.0);

  const ZonoTiling z = parse_zonotopal(fig4_text());
  RenderSpec spec;
  spec.scale = 25.0;
  const std::string zsvg = render_svg(z, spec);
  EXPECT_TRUE(svgcheck::well_formed(zsvg));
  EXPECT_EQ(svgcheck::polygons(zsvg).size(), 14u);
  check_tile_geometry(zsvg, z, 25.0);
}

TEST(Render, Coloring) {
  const RhombicTiling t = word_to_tiling(Word(3, {1, 2, 1}));
  RenderSpec spec;
  spec.coloring = coloring_from_bits(t, "100");
  spec.show_vertex_labels = false;
  const std::string svg = render_svg(t, spec);
  EXPECT_TRUE(svgcheck::well_formed(svg));
  EXPECT_EQ(svg.find("<text"), std::string::npos);
  std::size_t dark = 0;
  for (std::size_t pos = 0; (pos = svg.find(spec.dark_fill, pos)) != std::string::npos; ++pos) ++dark;
  EXPECT_EQ(dark, 1u);

  spec.coloring = uniform_coloring(word_to_tiling(Word(2, {1})), Shade::dark);
  EXPECT_THROW(render_svg(t, spec), InvalidInput);
  spec.coloring.reset();
  spec.scale = 0;
  EXPECT_THROW(render_svg(t, spec), InvalidInput);
}

TEST(Render, AllSmallTilingsAreSound) {
  for (int n = 2; n <= 5; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      for (const ZonoTiling& z : enumerate_zonotopal(w)) {
        const std::string svg = render_svg(z);
        ASSERT_TRUE(svgcheck::well_formed(svg));
        check_tile_geometry(svg, z, 60.0);
      }
    }
  }
}

}  // namespace
}  // namespace rhombic
