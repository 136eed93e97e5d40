#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "friezekit/annulus.hpp"
#include "friezekit/cluster.hpp"
#include "friezekit/frieze.hpp"
#include "friezekit/json_io.hpp"
#include "friezekit/knit.hpp"
#include "friezekit/snake.hpp"

using namespace friezekit;

namespace {

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw FormatError("bad index \"" + item + "\" in \"" + text + "\"");
    }
  }
  return out;
}

std::vector<BigInt> parse_integers(const std::string& text) {
  std::vector<BigInt> out;
  for (const auto& v : parse_ring_list(text, RingKind::Integer)) out.push_back(v.as_integer());
  return out;
}

std::vector<RingElement> parse_values(const std::string& text, RingKind kind) {
  try {
    return parse_ring_list(text, kind);
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
}

std::string tuple(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::string tuple(const std::vector<RingElement>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

Json decimal_array(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json decimal_array(const std::vector<RingElement>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

std::string path_text(const std::vector<std::size_t>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

void print_seed(const Seed& s) {
  std::cout << "path " << path_text(s.path) << '\n' << s.quiver << '\n';
  for (std::size_t k = 0; k < s.vars.size(); ++k) std::cout << "x" << k + 1 << "' = " << s.vars[k].to_string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"friezekit: cluster algebras, friezes, annulus unitarization and snake graphs"};
  app.require_subcommand(1);
  std::string ring_name = "Z";
  app.add_option("--ring", ring_name, "value ring: Z, Zi or Zsqrt-3half")->check(CLI::IsMember({"Z", "Zi", "Zsqrt-3half"}));
  app.fallthrough();

  std::string seed_file, path_arg, values_arg, vector_arg, laurent_arg, format = "text";
  std::size_t limit = 10000;
  long bound = 10;
  bool all = false, b_vectors = false, serial = false;

  auto* mutate = app.add_subcommand("mutate", "mutate a seed along a path of directions");
  mutate->add_option("--seed", seed_file, "seed or quiver JSON")->required();
  mutate->add_option("--path", path_arg, "comma separated directions (0-based)");
  mutate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* expand = app.add_subcommand("expand", "Laurent expansions of cluster variables in the base cluster");
  expand->add_option("--seed", seed_file)->required();
  expand->add_option("--path", path_arg);
  expand->add_flag("--all", all, "every cluster variable (finite type)");
  expand->add_option("--limit", limit, "cluster budget for --all");

  auto* evaluate = app.add_subcommand("evaluate", "values of a frieze on cluster variables");
  evaluate->add_option("--seed", seed_file)->required();
  evaluate->add_option("--values", values_arg, "base values, ';' or ',' separated")->required();
  evaluate->add_option("--path", path_arg);
  evaluate->add_option("--laurent", laurent_arg, "evaluate this expression instead");
  evaluate->add_flag("--all", all, "every cluster variable (finite type)");
  evaluate->add_option("--limit", limit);

  auto* fv = app.add_subcommand("frieze-vectors", "positive frieze vectors with entries up to a bound");
  fv->add_option("--seed", seed_file)->required();
  fv->add_option("--bound", bound)->check(CLI::PositiveNumber);
  fv->add_flag("--b-vectors", b_vectors, "also print companion b-vectors");
  fv->add_flag("--serial", serial, "use the serial reference scan");

  auto* phi_cmd = app.add_subcommand("phi", "frieze vector of the cluster reached by a path");
  phi_cmd->add_option("--seed", seed_file)->required();
  phi_cmd->add_option("--path", path_arg);

  auto* phi_inv = app.add_subcommand("phi-inverse", "cluster on which a frieze vector is all ones");
  phi_inv->add_option("--seed", seed_file)->required();
  phi_inv->add_option("--vector", vector_arg)->required();
  phi_inv->add_option("--limit", limit);
  phi_inv->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* unitary = app.add_subcommand("unitary", "search for a cluster of units");
  unitary->add_option("--seed", seed_file)->required();
  unitary->add_option("--values", values_arg)->required();
  unitary->add_option("--limit", limit);

  std::string annulus_arg, unitarize_format = "json";
  std::string tri_file;
  bool reduce = false;
  auto* unitarize_cmd = app.add_subcommand("unitarize", "descend an affine A frieze to the all-ones cluster");
  unitarize_cmd->add_option("--annulus", annulus_arg, "marked points p,q on the outer and inner boundary");
  unitarize_cmd->add_option("--triangulation", tri_file, "triangulation JSON (default: fan)");
  unitarize_cmd->add_option("--values", values_arg)->required();
  unitarize_cmd->add_flag("--reduce", reduce, "first flip outermost peripheral arcs until all arcs are bridging");
  unitarize_cmd->add_option("--format", unitarize_format)->check(CLI::IsMember({"text", "json"}));

  std::string quiver_file, start_arg;
  std::size_t cols = 5, back = 0;
  bool symbolic = false;
  auto* knit_cmd = app.add_subcommand("knit", "knit a frieze along the transjective slices");
  knit_cmd->add_option("--quiver", quiver_file, "quiver or seed JSON")->required();
  knit_cmd->add_option("--start", start_arg, "values on the start slice");
  knit_cmd->add_option("--cols", cols, "columns after the start slice");
  knit_cmd->add_option("--back", back, "columns before the start slice");
  knit_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  knit_cmd->add_flag("--symbolic", symbolic, "print Laurent polynomials instead of values");

  std::string polygon_file, arc_arg;
  int fan = 0;
  long mutate_at = -1;
  auto* snake = app.add_subcommand("snake", "snake graph of a diagonal");
  snake->add_option("--polygon", polygon_file, "polygon triangulation JSON");
  snake->add_option("--fan", fan, "use the fan triangulation of this polygon");
  snake->add_option("--arc", arc_arg, "diagonal a,b")->required();
  snake->add_option("--mutate", mutate_at, "mutate the snake graph in this direction");
  snake->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const RingKind ring = ring_from_tag(ring_name);
    const auto path = parse_indices(path_arg);
    const auto load_seed = [&] { return seed_from_json(read_json_file(seed_file)); };
    const auto base_seed = [&] {
      Seed s = load_seed();
      if (!s.path.empty()) throw DomainError("this command needs a seed without a path");
      return s;
    };

    if (*mutate) {
      Seed s = mutate_along(load_seed(), path);
      if (format == "json") {
        std::cout << seed_to_json(s).dump(2) << '\n';
      } else {
        print_seed(s);
      }
    } else if (*expand) {
      if (all) {
        for (const auto& v : distinct_cluster_variables(enumerate_clusters(base_seed(), limit))) {
          std::cout << v.to_string() << '\n';
        }
      } else {
        print_seed(mutate_along(load_seed(), path));
      }
    } else if (*evaluate) {
      Seed base = base_seed();
      FriezeAssignment f(base, parse_values(values_arg, ring));
      const auto show = [&](const LaurentPolynomial& u) {
        auto v = evaluate_frieze(f, u);
        std::cout << u.to_string() << " -> " << (v ? v->to_string() : std::string("not in the ring")) << '\n';
      };
      if (!laurent_arg.empty()) {
        try {
          show(parse_laurent(laurent_arg, base.rank()));
        } catch (const DomainError& e) {
          throw FormatError(e.what());
        }
      } else if (all) {
        for (const auto& v : distinct_cluster_variables(enumerate_clusters(base, limit))) show(v);
      } else {
        for (const auto& v : mutate_along(base, path).vars) show(v);
      }
    } else if (*fv) {
      Seed base = base_seed();
      const auto vectors = serial ? enumerate_frieze_vectors_serial(base, bound) : enumerate_frieze_vectors(base, bound);
      for (const auto& v : vectors) {
        if (b_vectors) {
          const Json row{{"a", decimal_array(v)},
                         {"b", decimal_array(companion_b_vector(FriezeAssignment(base, to_ring(v))))}};
          std::cout << row.dump() << '\n';
        } else {
          std::cout << decimal_array(v).dump() << '\n';
        }
      }
    } else if (*phi_cmd) {
      Seed base = base_seed();
      std::cout << decimal_array(phi(base, mutate_along(base, path))).dump() << '\n';
    } else if (*phi_inv) {
      const Seed s = phi_inverse(base_seed(), parse_integers(vector_arg), limit);
      if (format == "json") {
        std::cout << seed_to_json(s).dump() << '\n';
      } else {
        print_seed(s);
      }
    } else if (*unitary) {
      const auto r = is_unitary(base_seed(), parse_values(values_arg, ring), limit);
      if (r.cluster) {
        std::cout << "unitary: cluster at path " << path_text(r.cluster->path) << " (" << r.clusters_searched
                  << " clusters searched)\n";
      } else if (r.exhaustive) {
        std::cout << "non-unitary (" << r.clusters_searched << " clusters searched)\n";
      } else {
        std::cout << "undetermined: no unit cluster among " << r.clusters_searched << " clusters searched\n";
      }
    } else if (*unitarize_cmd) {
      if (tri_file.empty() == annulus_arg.empty()) throw FormatError("give exactly one of --annulus and --triangulation");
      std::optional<Triangulation> start;
      if (tri_file.empty()) {
        const auto pq = parse_indices(annulus_arg);
        if (pq.size() != 2 || pq[0] == 0 || pq[1] == 0) throw FormatError("--annulus needs two positive counts p,q");
        start = fan_triangulation(MarkedAnnulus(static_cast<int>(pq[0]), static_cast<int>(pq[1])));
      } else {
        start = triangulation_from_json(read_json_file(tri_file));
      }
      ValuedTriangulation vt{*start, parse_integers(values_arg)};
      const auto reduced = reduce ? reduce_to_bridging(vt) : std::vector<std::size_t>{};
      const auto r = unitarize(vt.triangulation, vt.values);
      if (unitarize_format == "json") {
        Json trace = Json::array();
        for (const auto& t : r.trace) trace.push_back(decimal_array(t));
        Json arcs = Json::array();
        for (const auto& a : r.triangulation.arcs()) arcs.push_back(arc_to_json(a));
        Json out{{"flips", r.flips}, {"trace", trace}, {"arcs", arcs}};
        if (reduce) out["reduce_flips"] = reduced;
        std::cout << out.dump() << '\n';
        return 0;
      }
      for (auto k : reduced) std::cout << "reduce: flip " << k << '\n';
      std::cout << "start " << tuple(r.trace.front()) << '\n';
      for (std::size_t s = 0; s < r.steps.size(); ++s) {
        const auto& st = r.steps[s];
        std::cout << "flip " << st.index << ": " << st.old_arc << " -> " << st.new_arc << ", " << st.old_value
                  << " -> " << st.new_value << "  " << tuple(r.trace[s + 1]) << '\n';
      }
      std::cout << "unitary triangulation:";
      for (const auto& a : r.triangulation.arcs()) std::cout << ' ' << a;
      std::cout << '\n';
    } else if (*knit_cmd) {
      const Json j = read_json_file(quiver_file);
      const Quiver qv = j.contains("quiver") ? quiver_from_json(j.at("quiver")) : quiver_from_json(j);
      if (symbolic) {
        const auto arr = knit_symbolic(qv, cols, back);
        std::cout << render_frieze_text(arr);
      } else {
        const auto start = start_arg.empty() ? std::vector<RingElement>(qv.size(), RingElement::one(ring))
                                             : parse_values(start_arg, ring);
        const auto arr = knit_frieze(qv, start, cols, back);
        if (format == "json") {
          std::cout << frieze_to_json(arr).dump(2) << '\n';
        } else {
          std::cout << render_frieze_text(arr);
        }
      }
    } else if (*snake) {
      if (polygon_file.empty() == (fan == 0)) throw FormatError("give exactly one of --polygon and --fan");
      const auto t = polygon_file.empty() ? polygon_fan(fan) : polygon_from_json(read_json_file(polygon_file));
      const auto ends = parse_indices(arc_arg);
      if (ends.size() != 2) throw FormatError("--arc needs two vertices");
      auto g = build_snake_graph({static_cast<int>(ends[0]), static_cast<int>(ends[1])}, t);
      if (mutate_at >= 0) {
        auto m = mutate_snake(g, static_cast<std::size_t>(mutate_at), t);
        std::cout << "rule: " << to_string(m.rule) << '\n';
        g = m.graph;
      }
      if (format == "json") {
        std::cout << snake_to_json(g).dump(2) << '\n';
      } else {
        std::cout << render_snake(g) << "matchings: " << count_matchings(g) << '\n';
        if (!g.empty()) std::cout << "laurent: " << snake_laurent(g).to_string() << '\n';
      }
    }
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
