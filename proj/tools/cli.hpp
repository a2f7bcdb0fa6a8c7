#pragma once

// Command-line front end. Kept in a header so the test suite can drive it
// in-process; tools/rhombic_cli.cpp is a thin main().

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rhombic/rhombic.hpp"

namespace rhombic::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kGuardExceeded = 2 };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline RhombicTiling load_rhombic(const std::string& path) {
  RhombicTiling t = parse_rhombic(read_file(path));
  if (Validation v = validate(t); !v) throw InvalidInput(path + ": " + v.reason);
  return t;
}

inline ZonoTiling load_zonotopal(const std::string& path) {
  ZonoTiling z = parse_zonotopal(read_file(path));
  if (Validation v = validate(z); !v) throw InvalidInput(path + ": " + v.reason);
  return z;
}

inline std::string power_of_two(std::size_t exponent) {
  if (exponent < 64) return std::to_string(std::uint64_t{1} << exponent);
  return "2^" + std::to_string(exponent);
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rhombic and zonotopal tilings of Elnitsky polygons", "rhombic"};
  app.require_subcommand(1);

  std::string word_text;
  int rank = 0;
  auto* tile = app.add_subcommand("tile", "tiling of a reduced word (comma-separated letters)");
  tile->add_option("word", word_text, "reduced word, e.g. 1,2,1")->required();
  tile->add_option("--n", rank, "rank n (default: largest letter + 1)");

  std::string tiling_path;
  bool all = false;
  auto* words = app.add_subcommand("words", "reduced words of a rhombic tiling");
  words->add_option("tiling", tiling_path, "tiling JSON file")->required();
  words->add_flag("--all", all, "print the whole commutation class");

  std::string perm_text;
  bool zonotopal = false;
  auto* enumerate = app.add_subcommand("enumerate", "all tilings of E(w)");
  enumerate->add_option("w", perm_text, "permutation, e.g. 4321")->required();
  enumerate->add_flag("--zonotopal", zonotopal, "include zonotopal tilings");

  bool dot = false;
  auto* flipgraph = app.add_subcommand("flipgraph", "hexagon flip graph on rhombic tilings of E(w)");
  flipgraph->add_option("w", perm_text, "permutation")->required();
  flipgraph->add_flag("--dot", dot, "emit Graphviz DOT");

  auto* poset_cmd = app.add_subcommand("poset", "zonotopal tiling poset of E(w)");
  poset_cmd->add_option("w", perm_text, "permutation")->required();

  auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomial of a tiling");
  poincare_cmd->add_option("tiling", tiling_path, "tiling JSON file")->required();

  bool images = false;
  auto* fixedpoints = app.add_subcommand("fixedpoints", "torus-fixed points of a rhombic tiling");
  fixedpoints->add_option("tiling", tiling_path, "tiling JSON file")->required();
  fixedpoints->add_flag("--images", images, "list the distinct image permutations");

  std::string coloring_bits;
  std::string output_path;
  double scale = 60.0;
  bool no_labels = false;
  auto* render = app.add_subcommand("render", "SVG drawing of a tiling");
  render->add_option("tiling", tiling_path, "tiling JSON file")->required();
  render->add_option("--coloring", coloring_bits, "one bit per tile in canonical order, 1 = dark");
  render->add_option("-o,--output", output_path, "output SVG file (default: stdout)");
  render->add_option("--scale", scale, "pixels per unit edge");
  render->add_flag("--no-labels", no_labels, "omit boundary vertex labels");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (*tile) {
      out << serialize(word_to_tiling(parse_word(word_text, rank))) << '\n';
    } else if (*words) {
      const RhombicTiling t = load_rhombic(tiling_path);
      if (all) {
        for (const Word& w : all_words(t)) out << format_word(w) << '\n';
      } else {
        out << format_word(tiling_to_word(t)) << '\n';
      }
    } else if (*enumerate) {
      const Permutation w = parse_permutation(perm_text);
      std::size_t count = 0;
      if (zonotopal) {
        for (const ZonoTiling& z : enumerate_zonotopal(w)) out << serialize(z) << '\n', ++count;
      } else {
        for (const RhombicTiling& t : enumerate_rhombic(w)) out << serialize(t) << '\n', ++count;
      }
      out << count << '\n';
    } else if (*flipgraph) {
      const FlipGraph g = flip_graph(parse_permutation(perm_text));
      out << (dot ? to_dot(g) : to_adjacency_list(g));
    } else if (*poset_cmd) {
      const Permutation w = parse_permutation(perm_text);
      const ZonoPoset p = poset(w);
      for (const ZonoTiling& z : p.elements()) out << "element " << digest(z) << ' ' << serialize(z) << '\n';
      for (auto [lo, hi] : p.covers()) {
        out << "cover " << digest(p.elements()[lo]) << ' ' << digest(p.elements()[hi]) << '\n';
      }
      const auto maxima = p.maximal_indices();
      for (std::size_t i : maxima) out << "maximal " << digest(p.elements()[i]) << '\n';
      out << "unique_max " << (maxima.size() == 1 ? "yes" : "no") << '\n';
      bool avoids = true;
      if (w.size() >= 4) {
        for (const char* pattern : {"4231", "4312", "3421"}) {
          avoids = avoids && !contains_pattern(w, parse_permutation(pattern));
        }
      }
      out << "patterns 4231,4312,3421 " << (avoids ? "avoids" : "contains") << '\n';
    } else if (*poincare_cmd) {
      out << to_json(poincare(load_zonotopal(tiling_path))).dump() << '\n';
    } else if (*fixedpoints) {
      const RhombicTiling t = load_rhombic(tiling_path);
      out << "fixed_points " << power_of_two(t.tiles.size()) << '\n';
      if (images) {
        const auto image_set = fixed_point_images(t);
        for (const Permutation& v : image_set) out << format_permutation(v) << '\n';
        out << "distinct_images " << image_set.size() << '\n';
      }
    } else if (*render) {
      const ZonoTiling z = load_zonotopal(tiling_path);
      RenderSpec spec;
      spec.scale = scale;
      spec.show_vertex_labels = !no_labels;
      if (!coloring_bits.empty()) {
        if (!is_rhombic(z)) throw InvalidInput("colorings apply to rhombic tilings only");
        spec.coloring = coloring_from_bits(as_rhombic(z), coloring_bits);
      }
      const std::string svg = render_svg(z, spec);
      if (output_path.empty()) {
        out << svg;
      } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!file || !(file << svg)) throw InvalidInput("cannot write '" + output_path + "'");
      }
    }
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kGuardExceeded;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kOk;
}

}  // namespace rhombic::cli
