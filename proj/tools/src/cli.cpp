#include "einf/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "einf/arc_surface.hpp"
#include "einf/chain_prop.hpp"
#include "einf/cochains.hpp"
#include "einf/errors.hpp"
#include "einf/graph_io.hpp"
#include "einf/ms_normalizer.hpp"
#include "einf/simplex_action.hpp"
#include "einf/simplicial_set.hpp"
#include "einf/term_parser.hpp"
#include "einf/verify/suites.hpp"
#include "json.hpp"

namespace einf::cli {
namespace {

using json = nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trimmed(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\r\n") - a + 1);
}

// "@path" reads the argument from a file.
std::string argument_text(const std::string& arg) { return arg.rfind('@', 0) == 0 ? read_file(arg.substr(1)) : arg; }

bool looks_like_ms(const std::string& t) { return t.rfind("surj", 0) == 0 || t.rfind("counit", 0) == 0; }

// Terms, graph JSON and normal-form text are all accepted where an element is expected.
GraphTerm load_graph(const std::string& arg) {
  const std::string t = trimmed(argument_text(arg));
  if (looks_like_ms(t)) return canonical_graph(parse_ms(t));
  if (!t.empty() && t.front() == '{') {
    const json j = json::parse(t, nullptr, false);
    if (!j.is_discarded() && j.contains("vertices")) return graph_from_json(t);
    return canonical_graph(ms_from_json(t));
  }
  return parse_term(t);
}

MSElement load_element(const std::string& arg) {
  const std::string t = trimmed(argument_text(arg));
  if (looks_like_ms(t)) return parse_ms(t);
  return normalize(load_graph(t));
}

struct Format {
  std::string value;

  void allow(std::initializer_list<const char*> ok) const {
    for (const char* f : ok)
      if (value == f) return;
    std::string list;
    for (const char* f : ok) list += (list.empty() ? "" : ", ") + std::string(f);
    throw ValidationError("format '" + value + "' not available here (use " + list + ")");
  }
};

std::string join_points(const PointTuple<double>& ps) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) os << ", ";
    os << "(";
    for (std::size_t k = 0; k < ps[i].x.size(); ++k) os << (k ? ", " : "") << ps[i].x[k];
    os << ")";
  }
  return os.str();
}

json point_json(const SimplexPoint& p) {
  json a = json::array();
  for (const auto& x : p.x) a.push_back(to_string(x));
  return a;
}

json cochain_json(const Cochain& c) {
  json faces = json::array();
  for (const auto& f : c.support) faces.push_back(f);
  return {{"degree", c.degree}, {"support", faces}};
}

std::string surface_text(const SurfaceSummary& s) {
  std::ostringstream os;
  os << "V=" << s.vertices << " E=" << s.edges << " F=" << s.faces << " chi=" << s.euler << " genus=" << s.genus
     << " boundary=" << s.boundary << " components=" << s.components << "\n";
  for (const auto& a : s.arcs) os << "arc in" << a.input + 1 << " -> out" << a.output + 1 << " weight " << to_string(a.weight) << "\n";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"einf: props of the interval, weighted surjections, cup-i products and arc surfaces"};
  app.require_subcommand(1);
  app.fallthrough();  // --format may follow the subcommand
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  const char* env = std::getenv(kFormatEnv);
  Format fmt{env && *env ? env : "text"};
  app.add_option("--format", fmt.value, "Output format: text, json, dot (svg for surface/export)")
      ->check(CLI::IsMember({"text", "json", "dot", "svg"}));

  std::function<void()> action;

  // parse
  std::string term;
  auto* parse = app.add_subcommand("parse", "Parse a term and print its graph");
  parse->add_option("term", term, "Term, graph JSON, or normal form; @file reads a file")->required();
  parse->callback([&] {
    action = [&] {
      fmt.allow({"text", "json", "dot"});
      const GraphTerm g = load_graph(term);
      if (fmt.value == "json") out << to_json(g) << "\n";
      else if (fmt.value == "dot") out << to_dot(g);
      else out << to_text(g) << "\n";
    };
  });

  // normalize
  std::uint64_t order_seed = 0;
  bool shuffled = false;
  auto* norm = app.add_subcommand("normalize", "Print the weighted-surjection normal form");
  norm->add_option("term", term, "Term, graph JSON, or normal form")->required();
  norm->add_flag("--shuffled", shuffled, "Apply rewrite rules in a random order");
  norm->add_option("--seed", order_seed, "Seed for --shuffled");
  norm->callback([&] {
    action = [&] {
      fmt.allow({"text", "json", "dot"});
      const std::string t = trimmed(argument_text(term));
      const MSElement x = looks_like_ms(t) ? normalize(canonical_graph(parse_ms(t)), RuleOrder{shuffled, order_seed})
                                           : normalize(load_graph(t), RuleOrder{shuffled, order_seed});
      if (fmt.value == "json") out << to_json(x) << "\n";
      else if (fmt.value == "dot") out << to_dot(canonical_graph(x));
      else out << to_text(x) << "\n";
    };
  });

  // compose
  std::string top, bottom;
  bool side_by_side = false;
  auto* comp = app.add_subcommand("compose", "Compose two elements and normalize");
  comp->add_option("top", top, "Upper element (its outputs feed the lower one)")->required();
  comp->add_option("bottom", bottom, "Lower element")->required();
  comp->add_flag("--horizontal", side_by_side, "Place side by side instead");
  comp->callback([&] {
    action = [&] {
      fmt.allow({"text", "json", "dot"});
      const GraphTerm a = load_graph(top), b = load_graph(bottom);
      const MSElement x = normalize(side_by_side ? horizontal_compose(a, b) : vertical_compose(a, b));
      if (fmt.value == "json") out << to_json(x) << "\n";
      else if (fmt.value == "dot") out << to_dot(canonical_graph(x));
      else out << to_text(x) << "\n";
    };
  });

  // eval
  int dim = -1;
  std::vector<std::string> points;
  bool float_mode = false;
  double tolerance = 1e-12;
  std::string set_file, cell;
  auto* eval = app.add_subcommand("eval", "Evaluate a term on points of a standard simplex");
  eval->add_option("--d", dim, "Simplex dimension")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--term", term, "Term over eps, delta, mu(s), h(s)")->required();
  eval->add_option("--point", points, "Coordinates x_1<=...<=x_d, one flag per input")->required();
  eval->add_flag("--float", float_mode, "Evaluate in double precision");
  auto* tol = eval->add_option("--tolerance", tolerance, "Equality tolerance (float mode only)");
  eval->add_option("--simplicial-set", set_file, "JSON simplicial set: print realization points instead");
  eval->add_option("--cell", cell, "Nondegenerate cell carrying the point (with --simplicial-set)");
  eval->callback([&] {
    action = [&] {
      fmt.allow({"text", "json"});
      if (tol->count() && !float_mode) throw ValidationError("--tolerance needs --float");
      const GraphTerm g = load_graph(term);
      PointTuple<Rational> in;
      for (const auto& p : points) {
        in.push_back(parse_point(p));
        if (in.back().dim() != dim) throw ValidationError("point " + p + " is not in Δ^" + std::to_string(dim));
      }
      if (!set_file.empty()) {
        const SimplicialSet G = parse_simplicial_set(read_file(set_file));
        const int c = G.find(cell);
        if (c < 0) throw ValidationError("no cell named '" + cell + "'");
        if (G.cells()[static_cast<std::size_t>(c)].dim != dim) throw ValidationError("cell dimension differs from --d");
        if (in.size() != 1) throw ValidationError("realization needs exactly one --point");
        const auto res = realization_act(G, g, G.cell_simplex(c), in.front());
        if (fmt.value == "json") {
          json a = json::array();
          for (const auto& r : res) a.push_back({{"cell", G.cells()[static_cast<std::size_t>(r.cell)].name}, {"point", point_json(r.x)}});
          out << a.dump(2) << "\n";
        } else {
          for (std::size_t i = 0; i < res.size(); ++i) out << (i ? ", " : "") << to_string(G, res[i]);
          out << "\n";
        }
        return;
      }
      if (float_mode) {
        PointTuple<double> fin;
        for (const auto& p : in) fin.push_back(to_float(p));
        const auto res = eval_term(g, fin);
        const auto exact = eval_term(g, in);
        double worst = 0;
        for (std::size_t i = 0; i < res.size(); ++i)
          for (std::size_t k = 0; k < res[i].x.size(); ++k)
            worst = std::max(worst, std::abs(res[i].x[k] - to_float(exact[i]).x[k]));
        if (worst > tolerance)
          throw InvariantError("float evaluation drifts by " + std::to_string(worst) + " from the exact value");
        if (fmt.value == "json") {
          json a = json::array();
          for (const auto& p : res) a.push_back(p.x);
          out << a.dump(2) << "\n";
        } else {
          out << join_points(res) << "\n";
        }
        return;
      }
      const auto res = eval_term(g, in);
      if (fmt.value == "json") {
        json a = json::array();
        for (const auto& p : res) a.push_back(point_json(p));
        out << a.dump(2) << "\n";
      } else {
        out << to_string(res) << "\n";
      }
    };
  });

  // act
  std::string type_text, chain_text;
  auto* actc = app.add_subcommand("act", "Act by a chain generator on simplicial chains (F2)");
  auto* type_opt = actc->add_option("--type", type_text, "Surjection type such as (1,2,1); '+' sums");
  actc->add_option("--term", term, "Or a term; acts by its top cell");
  actc->add_option("--chain", chain_text, "Chain such as [0,1,2] or [0,1]x[1,2] + [0]x[0,1,2]")->required();
  actc->callback([&] {
    action = [&] {
      fmt.allow({"text", "json"});
      const SimplicialChain c = parse_chain(chain_text);
      SimplicialChain r;
      if (type_opt->count()) {
        std::stringstream ss(type_text);
        std::string piece;
        bool first = true;
        while (std::getline(ss, piece, '+')) {
          const SurjectionType t = parse_type(piece);
          const SimplicialChain part = act(t, c);
          if (first) r = part;
          else r.add(part);
          first = false;
        }
      } else if (!term.empty()) {
        r = act_graph(load_graph(term), c);
      } else {
        throw ValidationError("act needs --type or --term");
      }
      if (fmt.value == "json") {
        json a = json::array();
        for (const auto& t : r.terms) a.push_back(t);
        out << json{{"arity", r.arity}, {"terms", a}}.dump(2) << "\n";
      } else {
        out << r.to_string() << "\n";
      }
    };
  });

  // cup
  int cup_index = 0;
  std::string complex_file, a_file, b_file;
  auto* cup = app.add_subcommand("cup", "Cup-i product of two cochains on a complex");
  cup->add_option("-i,--i", cup_index, "Index i of the cup-i product")->required()->check(CLI::NonNegativeNumber);
  cup->add_option("--complex", complex_file, "Complex file (maximal faces, one per line)")->required();
  cup->add_option("--a", a_file, "First cochain file")->required();
  cup->add_option("--b", b_file, "Second cochain file")->required();
  cup->callback([&] {
    action = [&] {
      fmt.allow({"text", "json"});
      const SimplicialComplex K = parse_complex(read_file(complex_file));
      const Cochain a = parse_cochain(read_file(a_file)), b = parse_cochain(read_file(b_file));
      const Cochain c = cup_i(cup_index, a, b, K);
      if (fmt.value == "json") out << cochain_json(c).dump(2) << "\n";
      else out << c.to_string();
    };
  });

  // sq
  int sq_k = 0;
  std::string cocycle_file;
  auto* sq = app.add_subcommand("sq", "Steenrod square of a cocycle");
  sq->add_option("-k,--k", sq_k, "Sq^k")->required()->check(CLI::NonNegativeNumber);
  sq->add_option("--complex", complex_file, "Complex file")->required();
  sq->add_option("--cocycle", cocycle_file, "Cocycle file")->required();
  sq->callback([&] {
    action = [&] {
      fmt.allow({"text", "json"});
      const SimplicialComplex K = parse_complex(read_file(complex_file));
      const Cochain x = parse_cochain(read_file(cocycle_file));
      const Cochain s = steenrod_square(sq_k, x, K);
      const bool trivial = is_coboundary(K, s);
      if (fmt.value == "json") {
        json j = cochain_json(s);
        j["class"] = trivial ? "zero" : "nonzero";
        out << j.dump(2) << "\n";
      } else {
        out << s.to_string() << "# class: " << (trivial ? "zero" : "nonzero") << "\n";
      }
    };
  });

  // surface
  std::uint64_t surface_seed = 0;
  bool random_orders = false;
  auto* surf = app.add_subcommand("surface", "Arc surface of an element");
  surf->add_option("element", term, "Term or normal form (needs at least one output)")->required();
  surf->add_flag("--random-boundary-orders", random_orders, "Shuffle the cyclic orders at boundary vertices");
  surf->add_option("--seed", surface_seed, "Seed for --random-boundary-orders");
  surf->callback([&] {
    action = [&] {
      fmt.allow({"text", "json", "dot", "svg"});
      const MSElement x = load_element(term);
      const auto* w = std::get_if<WeightedSurjection>(&x);
      if (!w) throw ValidationError("the counit class has no arc surface");
      std::mt19937_64 rng(surface_seed);
      const RibbonGraph rg = collapse_edges(to_ribbon(*w, random_orders ? &rng : nullptr));
      if (fmt.value == "json") out << to_json(surface_summary(rg)) << "\n";
      else if (fmt.value == "dot") out << to_dot(rg);
      else if (fmt.value == "svg") out << to_svg(*w);
      else out << surface_text(surface_summary(rg));
    };
  });

  // verify
  verify::SuiteOptions vopt;
  std::vector<int> suites;
  bool timing = false;
  int verify_status = 0;
  auto* ver = app.add_subcommand("verify", "Run the acceptance property suites");
  ver->add_option("--seed", vopt.seed, "Seed for every randomized suite");
  ver->add_option("--suite", suites, "Criterion numbers to run (default: all)")->check(CLI::Range(1, 9));
  ver->add_option("--scale", vopt.scale, "Multiply sample counts")->check(CLI::PositiveNumber);
  ver->add_flag("--timing", timing, "Show run times (output is then not reproducible)");
  ver->callback([&] {
    action = [&] {
      fmt.allow({"text", "json"});
      json all = json::array();
      for (const auto& c : verify::criteria()) {
        if (!suites.empty() && std::find(suites.begin(), suites.end(), c.id) == suites.end()) continue;
        const auto r = c.run(vopt);
        if (!r.passed()) verify_status = 1;
        if (fmt.value == "json") {
          json j{{"criterion", r.id}, {"title", r.title}, {"passed", r.passed()}, {"checks", r.checks},
                 {"failures", r.failures}, {"failure_samples", r.failure_samples}, {"notes", r.notes}};
          if (timing) j["seconds"] = r.seconds;
          all.push_back(j);
        } else {
          out << r.line(timing) << "\n";
          for (const auto& s : r.failure_samples) out << "      " << s << "\n";
          for (const auto& n : r.notes) out << "      note: " << n << "\n";
          out.flush();
        }
      }
      if (fmt.value == "json") out << all.dump(2) << "\n";
    };
  });

  // export
  std::string output_file;
  auto* exp = app.add_subcommand("export", "Write an element as graph JSON/DOT, normal-form JSON or surface SVG");
  exp->add_option("element", term, "Term, graph JSON, or normal form")->required();
  exp->add_option("-o,--output", output_file, "Write to a file instead of stdout");
  exp->callback([&] {
    action = [&] {
      const GraphTerm g = load_graph(term);
      std::string text;
      if (fmt.value == "json") {
        const MSElement x = normalize(g);
        json j{{"graph", json::parse(to_json(g))}, {"normal_form", json::parse(to_json(x))}};
        if (const auto* w = std::get_if<WeightedSurjection>(&x)) j["surface"] = json::parse(to_json(surface_summary(*w)));
        text = j.dump(2) + "\n";
      } else if (fmt.value == "dot") {
        text = to_dot(g);
      } else if (fmt.value == "svg") {
        const MSElement x = normalize(g);
        const auto* w = std::get_if<WeightedSurjection>(&x);
        if (!w) throw ValidationError("the counit class has no arc surface");
        text = to_svg(*w);
      } else {
        text = to_text(normalize(g)) + "\n";
      }
      if (output_file.empty()) {
        out << text;
      } else {
        std::ofstream f(output_file);
        if (!f) throw ValidationError("cannot write " + output_file);
        f << text;
      }
    };
  });

  std::vector<const char*> argv{"einf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  try {
    if (action) action();
    out.flush();
    return verify_status;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace einf::cli
