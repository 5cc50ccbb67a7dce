#include "einf/verify/suites.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "einf/arc_surface.hpp"
#include "einf/chain_prop.hpp"
#include "einf/cochains.hpp"
#include "einf/errors.hpp"
#include "einf/ms_normalizer.hpp"
#include "einf/presentation.hpp"
#include "einf/simplex_action.hpp"
#include "einf/simplicial_set.hpp"
#include "einf/term_parser.hpp"
#include "einf/verify/complexes.hpp"
#include "einf/verify/generators.hpp"
#include "einf/verify/oracles.hpp"

namespace einf::verify {

void SuiteResult::expect(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  if (failure_samples.size() < 5) failure_samples.push_back(what);
}

std::string SuiteResult::line(bool timing) const {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (passed() ? "PASS" : "FAIL") << "  [" << id << "] " << title << " (" << checks << " checks, " << failures
     << " failed";
  if (timing) os << ", " << seconds << " s of " << limit_seconds << " s";
  else if (seconds > limit_seconds) os << ", over the time limit";
  os << ")";
  return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

long scaled(const SuiteOptions& opt, long n) { return std::max(1L, static_cast<long>(static_cast<double>(n) * opt.scale)); }

std::mt19937_64 suite_rng(const SuiteOptions& opt, int id) {
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                    static_cast<std::uint32_t>(id)};
  return std::mt19937_64(seq);
}

const Criterion* find_criterion(int id) {
  for (const auto& c : criteria())
    if (c.id == id) return &c;
  return nullptr;
}

SuiteResult start(int id) {
  SuiteResult r;
  const Criterion* c = find_criterion(id);
  r.id = id;
  r.title = c->title;
  r.limit_seconds = c->limit_seconds;
  return r;
}

template <class F>
SuiteResult timed(int id, F&& body) {
  SuiteResult r = start(id);
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::string describe(const MSElement& x) { return to_text(x); }

// ---- criterion 1 ------------------------------------------------------------

void check_confluent(SuiteResult& r, const TermExpr& e, std::mt19937_64& rng, int shuffles) {
  const GraphTerm g = build_graph(e);
  const MSElement base = normalize(g);
  for (int k = 0; k < shuffles; ++k) {
    const MSElement other = normalize(g, RuleOrder{true, rng()});
    r.expect(other == base, to_term_string(e) + ": " + describe(base) + " vs shuffled " + describe(other));
  }
  const MSElement oracle = evaluate_by_flow(e);
  r.expect(oracle == base, to_term_string(e) + ": " + describe(base) + " vs interval flow " + describe(oracle));
}

// ---- criterion 3 ------------------------------------------------------------

struct DifferentialCache {
  std::map<SurjectionType, ChainElement> memo;

  const ChainElement& of(const SurjectionType& t) {
    auto it = memo.find(t);
    if (it == memo.end()) it = memo.emplace(t, differential(generator(t))).first;
    return it->second;
  }
  ChainElement of(const ChainElement& x) {
    ChainElement out = zero_chain(x.n, x.m, x.degree - 1);
    for (const auto& t : x.support) out.add(of(t));
    return out;
  }
};

// ---- criterion 4 ------------------------------------------------------------

SimplicialChain act_on_factor(const SimplicialChain& c, int i, const ChainElement& v) {
  SimplicialChain out;
  out.arity = c.arity - 1 + v.m;
  for (const auto& t : c.terms) {
    const SimplicialChain img = act(v, chain_of({t[static_cast<std::size_t>(i)]}));
    for (const auto& u : img.terms) {
      Tensor w(t.begin(), t.begin() + i);
      w.insert(w.end(), u.begin(), u.end());
      w.insert(w.end(), t.begin() + i + 1, t.end());
      out.add(w);
    }
  }
  return out;
}

std::vector<SurjectionType> basis_upto(int n, int max_m, int max_degree) {
  std::vector<SurjectionType> out;
  for (int m = 1; m <= max_m; ++m)
    for (int d = 0; d <= max_degree; ++d)
      for (auto& t : enumerate_basis(n, m, d)) out.push_back(t);
  return out;
}

std::vector<Tensor> tensors_of(int d, int factors) {
  std::vector<Tensor> out{{}};
  const auto faces = faces_of_simplex(d);
  for (int k = 0; k < factors; ++k) {
    std::vector<Tensor> next;
    for (const auto& t : out)
      for (const auto& f : faces) {
        Tensor u = t;
        u.push_back(f);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

void check_chain_map(SuiteResult& r, DifferentialCache& dc, const SurjectionType& t, int d) {
  const ChainElement x = generator(t);
  const ChainElement dx = dc.of(t);
  for (const auto& c : tensors_of(d, t.n)) {
    const SimplicialChain cc = chain_of(c);
    SimplicialChain lhs = boundary(act(x, cc));
    lhs.add(act(x, boundary(cc)));
    const SimplicialChain rhs = act(dx, cc);
    if (!(lhs == rhs)) {
      r.expect(false, "∂act + act∂ != act∂ for " + t.to_string() + " on " + cc.to_string());
      return;
    }
  }
  r.expect(true, "");
}

// ---- criterion 6 ------------------------------------------------------------

PointTuple<Rational> random_tuple(int k, int d, std::mt19937_64& rng) {
  PointTuple<Rational> p;
  for (int i = 0; i < k; ++i) p.push_back(random_point(d, rng));
  return p;
}

void check_same_map(SuiteResult& r, const std::string& name, const GraphTerm& a, const GraphTerm& b, long samples,
                    std::mt19937_64& rng) {
  long bad = 0;
  std::string first;
  for (long k = 0; k < samples; ++k) {
    std::uniform_int_distribution<int> dd(0, 4);
    const auto x = random_tuple(a.inputs(), dd(rng), rng);
    const auto ya = eval_term(a, x), yb = eval_term(b, x);
    if (ya != yb && bad++ == 0) first = to_string(x);
  }
  r.expect(bad == 0, name + ": " + std::to_string(bad) + " mismatches, first at " + first);
}

GraphTerm gen(Generator k, const Rational& s) {
  if (k == Generator::Product || k == Generator::CounitHomotopy) return corolla(k, {s});
  return corolla(k);
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "Confluence: shuffled rule orders and critical pairs give one normal form", 60, confluence_suite},
      {2, "Basis counts against brute-force surjection enumeration", 10, basis_count_suite},
      {3, "Differential squares to zero over F2", 30, differential_suite},
      {4, "Action on simplicial chains is a chain map and respects composition", 60, act_suite},
      {5, "Cup-i coboundary formula, Sq^1 on RP2, Sq^0, front/back cup", 120, steenrod_suite},
      {6, "Interval bialgebra: identities, naturality, cellularity, realization", 120, cw_suite},
      {7, "Stabilization: r after i is the identity; homotopy endpoints", 30, stabilization_suite},
      {8, "Arc surfaces: faithfulness, Euler characteristic, anchors, arc removal", 60, surface_suite},
      {9, "Symmetric group actions: free on outputs, the (3,1) input fixed point", 10, symmetry_suite},
  };
  return all;
}

SuiteResult run_criterion(int id, const SuiteOptions& opt) {
  const Criterion* c = find_criterion(id);
  if (!c) throw ValidationError("no acceptance criterion " + std::to_string(id));
  return c->run(opt);
}

SuiteResult confluence_suite(const SuiteOptions& opt) {
  return timed(1, [&](SuiteResult& r) {
    auto rng = suite_rng(opt, 1);
    const long terms = scaled(opt, 1000);
    for (long k = 0; k < terms; ++k) check_confluent(r, random_term(rng), rng, 2);
    // the two overlaps of the uniqueness proof, at tie and non-tie weights
    for (const char* s : {"0", "1/3", "1/2", "2/3", "1"}) {
      for (const std::string& text : {std::string("mu(") + s + ");delta;(delta|id)", std::string("delta;mu(") + s + ");delta",
                                     std::string("mu(") + s + ");delta;(id|delta)", std::string("(delta|delta);(id|mu(") + s + ")|id);(id|delta|id)"})
        check_confluent(r, parse_term_expr(text), rng, 8);
    }
  });
}

SuiteResult basis_count_suite(const SuiteOptions&) {
  return timed(2, [&](SuiteResult& r) {
    for (int m = 1; m <= 4; ++m)
      for (int k = 0; k <= 4; ++k) {
        const long got = static_cast<long>(enumerate_basis(1, m, k).size());
        const long want = brute_force_basis_count(m, k);
        r.expect(got == want, "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + "): " + std::to_string(got) +
                                  " vs brute force " + std::to_string(want));
      }
    r.expect(enumerate_basis(1, 2, 1).size() == 2, "anchor (2,1) -> 2");
    r.expect(brute_force_basis_count(2, 1) == 2, "brute-force anchor (2,1) -> 2");
  });
}

SuiteResult differential_suite(const SuiteOptions& opt) {
  return timed(3, [&](SuiteResult& r) {
    DifferentialCache dc;
    for (int m = 1; m <= 4; ++m)
      for (int deg = 0; deg <= 4; ++deg)
        for (const auto& t : enumerate_basis(1, m, deg)) {
          const ChainElement& d1 = dc.of(t);
          r.expect(d1 == combinatorial_differential(generator(t)), "differential of " + t.to_string() + " = " +
                                                                        d1.to_string() + " disagrees with the surjection formula");
          const ChainElement d2 = dc.of(d1);
          r.expect(d2.zero(), "d^2 " + t.to_string() + " = " + d2.to_string());
        }
    auto rng = suite_rng(opt, 3);
    std::uniform_int_distribution<int> nm(1, 3), dg(1, 3);
    for (long k = 0, total = scaled(opt, 200); k < total; ++k) {
      const ChainElement x = random_chain_element(nm(rng), nm(rng), dg(rng), rng);
      const ChainElement dx = dc.of(x);
      r.expect(dx == combinatorial_differential(x), "random element: differential disagrees with the formula");
      r.expect(dc.of(dx).zero(), "random element: d^2 != 0 for " + x.to_string());
    }
  });
}

SuiteResult act_suite(const SuiteOptions&) {
  return timed(4, [&](SuiteResult& r) {
    DifferentialCache dc;
    for (const auto& t : basis_upto(1, 3, 3))
      for (int d = 0; d <= 5; ++d) check_chain_map(r, dc, t, d);
    for (const auto& t : basis_upto(2, 2, 2))
      for (int d = 0; d <= 3; ++d) check_chain_map(r, dc, t, d);
    // operadic insertion: act(x ∘_i y) = (id ⊗ act(y) ⊗ id) ∘ act(x)
    const auto tops = basis_upto(1, 3, 2), inner = basis_upto(1, 2, 1);
    for (const auto& x : tops)
      for (const auto& y : inner) {
        if (x.m + y.m - 1 > 3 || x.degree() + y.degree() > 3) continue;
        for (int i = 0; i < x.m; ++i) {
          const ChainElement comp = compose_at_output(generator(x), i, generator(y));
          const ChainElement oracle = surjection_compose(x, i, y);
          r.expect(comp == oracle, x.to_string() + " o_" + std::to_string(i + 1) + " " + y.to_string() + " = " +
                                       comp.to_string() + ", overlapping cuts give " + oracle.to_string());
          bool ok = true;
          for (int d = 0; d <= 4 && ok; ++d)
            for (const auto& f : faces_of_simplex(d)) {
              const SimplicialChain c = chain_of({f});
              if (!(act(comp, c) == act_on_factor(act(generator(x), c), i, generator(y)))) {
                ok = false;
                break;
              }
            }
          r.expect(ok, "act does not respect " + x.to_string() + " o_" + std::to_string(i + 1) + " " + y.to_string());
        }
      }
    // vertical composition through two-input cells
    for (const auto& x : basis_upto(1, 2, 2)) {
      if (x.m != 2) continue;
      for (const auto& y : basis_upto(2, 2, 1)) {
        const ChainElement comp = chain_compose(generator(x), generator(y));
        bool ok = true;
        for (int d = 0; d <= 4 && ok; ++d)
          for (const auto& f : faces_of_simplex(d)) {
            const SimplicialChain c = chain_of({f});
            if (!(act(comp, c) == act(generator(y), act(generator(x), c)))) {
              ok = false;
              break;
            }
          }
        r.expect(ok, "act does not respect " + x.to_string() + " ; " + y.to_string());
      }
    }
  });
}

SuiteResult steenrod_suite(const SuiteOptions& opt) {
  return timed(5, [&](SuiteResult& r) {
    auto rng = suite_rng(opt, 5);
    for (int d = 1; d <= 5; ++d) {
      const SimplicialComplex K = standard_simplex(d);
      for (long k = 0, total = scaled(opt, 40); k < total; ++k) {
        std::uniform_int_distribution<int> pd(0, d);
        const int p = pd(rng);
        std::uniform_int_distribution<int> qd(0, d - p);
        const int q = qd(rng);
        const Cochain a = random_coboundary(K, p, rng), b = random_coboundary(K, q, rng);
        Cochain rhs = cup_i(0, a, b, K);
        rhs.add(cup_i(0, b, a, K));
        const Cochain lhs = coboundary(K, cup_i(1, a, b, K));
        r.expect(lhs.support == rhs.support, "δ(a ∪1 b) != a∪b + b∪a on Δ^" + std::to_string(d));
      }
    }
    {
      const SimplicialComplex K = rp2();
      const auto h1 = cohomology_basis(K, 1);
      r.expect(h1.size() == 1, "H^1(RP2) should have rank 1");
      if (h1.size() == 1) {
        const Cochain sq = steenrod_square(1, h1[0], K);
        r.expect(sq.degree == 2 && !is_coboundary(K, sq), "Sq^1 vanishes on H^1(RP2)");
      }
    }
    for (const auto& K : {rp2(), torus(), sphere2()})
      for (int k = 0; k <= K.dimension(); ++k)
        for (const auto& x : cohomology_basis(K, k))
          r.expect(cohomologous(K, steenrod_square(0, x, K), x), "Sq^0 moves a class in degree " + std::to_string(k));
    for (int d = 0; d <= 4; ++d) {
      const SimplicialComplex K = standard_simplex(d);
      const auto faces = faces_of_simplex(d);
      for (const auto& f : faces)
        for (const auto& g : faces) {
          if (f.size() + g.size() > static_cast<std::size_t>(d) + 2) continue;
          const Cochain a = dual(f), b = dual(g);
          r.expect(cup_i(0, a, b, K) == front_back_cup(a, b, K), "cup_0 differs from front/back on Δ^" + std::to_string(d));
        }
    }
  });
}

SuiteResult cw_suite(const SuiteOptions& opt) {
  return timed(6, [&](SuiteResult& r) {
    auto rng = suite_rng(opt, 6);
    const long per = scaled(opt, 10000);
    // attaching maps
    check_same_map(r, "mu_0 = id|eps", gen(Generator::Product, 0), parse_term("id|eps"), per, rng);
    check_same_map(r, "mu_1 = eps|id", gen(Generator::Product, 1), parse_term("eps|id"), per, rng);
    check_same_map(r, "phi_0 = id", gen(Generator::CounitHomotopy, 0), parse_term("id"), per, rng);
    check_same_map(r, "phi_1 = delta;(eps|id)", gen(Generator::CounitHomotopy, 1), parse_term("delta;(eps|id)"), per, rng);
    // relations, at random parameters
    check_same_map(r, "delta;(eps|eps) = eps", parse_term("delta;(eps|eps)"), parse_term("eps"), per, rng);
    for (int k = 0; k < 10; ++k) {
      const std::string s = to_string(random_parameter(rng));
      check_same_map(r, "mu;eps = eps|eps", parse_term("mu(" + s + ");eps"), parse_term("eps|eps"), per / 10, rng);
      check_same_map(r, "h;eps = eps", parse_term("h(" + s + ");eps"), parse_term("eps"), per / 10, rng);
    }
    // naturality for every coface and codegeneracy, d <= 4
    const long nat = scaled(opt, 200);
    for (Generator k : {Generator::Coproduct, Generator::Counit, Generator::Product, Generator::CounitHomotopy})
      for (int d = 0; d <= 4; ++d) {
        for (int i = 0; i <= d + 1; ++i) {
          const auto rep = check_naturality(gen(k, random_parameter(rng)), Cosimplicial::Coface, i, d, nat, rng);
          r.expect(rep.ok(), std::string(generator_name(k)) + " not natural for coface " + std::to_string(i) + " at " +
                                 rep.first_violation);
        }
        for (int i = 1; i <= d + 1; ++i) {
          const auto rep = check_naturality(gen(k, random_parameter(rng)), Cosimplicial::Codegeneracy, i, d, nat, rng);
          r.expect(rep.ok(), std::string(generator_name(k)) + " not natural for codegeneracy " + std::to_string(i) +
                                 " at " + rep.first_violation);
        }
      }
    // cellularity, with a corrupted map as negative control
    for (Generator k : {Generator::Coproduct, Generator::Counit, Generator::Product, Generator::CounitHomotopy}) {
      long violations = 0;
      for (int b = 0; b < 10; ++b) {
        std::uniform_int_distribution<int> dd(0, 4);
        violations += check_cellular(gen(k, random_parameter(rng)), dd(rng), per / 10, rng).violations;
      }
      r.expect(violations == 0, std::string(generator_name(k)) + " raised the skeleton level");
    }
    const PointMap third = [](const PointTuple<Rational>& in) {
      PointTuple<Rational> out = in;
      for (auto& p : out)
        for (auto& x : p.x) x /= 3;
      return out;
    };
    r.expect(!check_cellular(third, 1, 3, 1000, rng).ok(), "negative control x/3 passed the cellularity check");
    // realization: both representatives of random equivalences
    const long inst = scaled(opt, 1000);
    TermOptions t;
    t.max_inputs = 1;
    t.homotopies = true;
    t.max_vertices = 6;
    for (const auto& G : {standard_simplex_set(3), sphere_set(1), sphere_set(2)}) {
      long bad = 0;
      for (long k = 0; k < inst / 10; ++k) {
        const GraphTerm g = build_graph(random_term(rng, t));
        bad += check_realization_well_defined(G, g, 10, rng).violations;
      }
      r.expect(bad == 0, "realization action not well defined: " + std::to_string(bad) + " instances");
    }
  });
}

SuiteResult stabilization_suite(const SuiteOptions& opt) {
  return timed(7, [&](SuiteResult& r) {
    auto rng = suite_rng(opt, 7);
    for (long k = 0, total = scaled(opt, 500); k < total; ++k) {
      const WeightedSurjection x = random_surjection(3, 3, 3, rng);
      const GraphTerm g = canonical_graph(x);
      const MSElement ri = normalize(stabilize_remove(stabilize_add(g)));
      r.expect(ri == MSElement(x), "r(i(x)) = " + describe(ri) + " for " + describe(x));
      const MSElement h0 = normalize(stabilize_homotopy(g, 0));
      const MSElement ir = normalize(stabilize_add(stabilize_remove(g)));
      r.expect(h0 == ir, "homotopy at s=0 is not i(r(x)) for " + describe(x));
      r.expect(normalize(stabilize_homotopy(g, 1)) == MSElement(x), "homotopy at s=1 is not x for " + describe(x));
    }
    // the same endpoints pointwise on the interval, where Δ;(ε|id) = φ_1
    TermOptions t;
    t.homotopies = true;
    t.max_vertices = 6;
    const long points = scaled(opt, 20);
    for (long k = 0, total = scaled(opt, 100); k < total; ++k) {
      const GraphTerm g = build_graph(random_term(rng, t));
      if (g.outputs() < 1) continue;
      check_same_map(r, "r(i(g)) = (phi_1|id);g", stabilize_remove(stabilize_add(g)), counit_homotopy_on_input(g, 1), points, rng);
      check_same_map(r, "(phi_0|id);g = g", counit_homotopy_on_input(g, 0), g, points, rng);
      check_same_map(r, "H(g,0) = i(r(g))", stabilize_homotopy(g, 0), stabilize_add(stabilize_remove(g)), points, rng);
      check_same_map(r, "H(g,1) = (phi_1|id);g", stabilize_homotopy(g, 1), counit_homotopy_on_input(g, 1), points, rng);
    }
  });
}

SuiteResult surface_suite(const SuiteOptions& opt) {
  return timed(8, [&](SuiteResult& r) {
    auto rng = suite_rng(opt, 8);
    long probe_total = 0, probe_differ = 0;
    auto check_surface = [&](const WeightedSurjection& x) {
      const RibbonGraph rg = to_ribbon(x);
      r.expect(ribbon_problems(rg).empty(), "invalid ribbon graph for " + describe(x));
      const RibbonGraph c = collapse_edges(rg);
      r.expect(recover_surjection(c) == x, "arcs do not recover " + describe(x));
      const SurfaceSummary s = surface_summary(c);
      const SurfaceSummary raw = surface_summary(rg);
      r.expect(s.euler == s.vertices - s.edges + s.faces && s.euler == 2 * s.components - 2 * s.genus - s.boundary,
               "Euler characteristic mismatch for " + describe(x));
      r.expect(raw.euler == s.euler && raw.genus == s.genus && raw.boundary == s.boundary,
               "collapsing changed the surface of " + describe(x));
      r.expect(s.boundary >= x.n() + x.m(), "too few boundary components for " + describe(x));
      const RibbonGraph cc = collapse_edges(c);
      r.expect(cc.vertices.size() == c.vertices.size() && cc.edges.size() == c.edges.size() && surface_summary(cc) == s,
               "collapse is not idempotent on " + describe(x));
      const SurfaceSummary other = surface_summary(x, &rng);
      ++probe_total;
      if (other.genus != s.genus || other.boundary != s.boundary) ++probe_differ;
    };
    for (int n = 1; n <= 2; ++n)
      for (const auto& t : basis_upto(n, 3, 3)) {
        check_surface(with_uniform_weights(t));
        check_surface(random_weights(t, rng));
      }
    const SurfaceSummary id = surface_summary(with_uniform_weights(identity_type(1)));
    r.expect(id.genus == 0 && id.boundary == 2, "identity form is not an annulus");
    const SurfaceSummary delta = surface_summary(with_uniform_weights(SurjectionType{1, 2, {{0, 1}}}));
    r.expect(delta.genus == 0 && delta.boundary == 3, "coproduct form is not a pair of pants");
    long cases = 0;
    const long want = scaled(opt, 200);
    while (cases < want) {
      const WeightedSurjection x = random_surjection(2, 3, 3, rng);
      std::vector<std::pair<int, int>> candidates;
      const auto counts = x.type().output_counts();
      for (int i = 0; i < x.n(); ++i)
        for (int k = 0; k < static_cast<int>(x.blocks()[static_cast<std::size_t>(i)].size()); ++k)
          if (counts[static_cast<std::size_t>(x.blocks()[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].output)] > 1)
            candidates.emplace_back(i, k);
      if (candidates.empty()) continue;
      ++cases;
      const auto [i, k] = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
      const MSElement limit = strand_weight_to_zero(x, i, k);
      const RibbonGraph c = collapse_edges(to_ribbon(x));
      const SurfaceSummary removed = surface_summary(remove_arc(c, arc_at(c, i, k)));
      r.expect(surface_summary(std::get<WeightedSurjection>(limit)) == removed,
               "arc removal and the weight-zero limit disagree on " + describe(x));
    }
    r.notes.push_back("boundary cyclic-order probe: " + std::to_string(probe_differ) + " of " + std::to_string(probe_total) +
                      " random choices changed (genus, boundary)");
  });
}

SuiteResult symmetry_suite(const SuiteOptions&) {
  return timed(9, [&](SuiteResult& r) {
    for (int m = 1; m <= 4; ++m)
      for (int deg = 0; deg <= 3; ++deg)
        for (const auto& t : enumerate_basis(1, m, deg)) {
          const MSElement x = with_uniform_weights(t);
          for (const auto& tau : all_permutations(static_cast<std::size_t>(m))) {
            if (tau.is_identity()) continue;
            r.expect(!(permute_outputs(t, tau) == t), t.to_string() + " fixed by output permutation " + tau.to_string());
            r.expect(!(ms_permute_outputs(x, tau) == x), describe(x) + " fixed by " + tau.to_string());
          }
        }
    const GraphTerm g = parse_term("eps|eps|id");
    const MSElement x = normalize(g);
    const Permutation swap12 = Permutation::from_one_based({2, 1, 3});
    r.expect(normalize(permute_inputs(g, swap12)) == x, "(eps|eps|id) not fixed by (1 2)");
    r.expect(iso_equal(permute_inputs(g, swap12), g), "(eps|eps|id) and its (1 2) image are not isomorphic graphs");
    r.expect(ms_permute_inputs(x, swap12) == x, "(1 2) moves the normal form of eps|eps|id");
    for (const auto& sigma : {Permutation::from_one_based({3, 2, 1}), Permutation::from_one_based({1, 3, 2})})
      r.expect(!(normalize(permute_inputs(g, sigma)) == x), "eps|eps|id fixed by " + sigma.to_string());
  });
}

}  // namespace einf::verify
