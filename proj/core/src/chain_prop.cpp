#include "einf/chain_prop.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "einf/errors.hpp"
#include "einf/ms_normalizer.hpp"
#include "einf/presentation.hpp"

namespace einf {

void SimplicialChain::add(const Tensor& t) {
  if (static_cast<int>(t.size()) != arity) throw ValidationError("tensor arity mismatch");
  auto [it, fresh] = terms.insert(t);
  if (!fresh) terms.erase(it);
}

void SimplicialChain::add(const SimplicialChain& c) {
  for (const auto& t : c.terms) add(t);
}

namespace {

std::string face_string(const Face& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "]";
}

}  // namespace

std::string SimplicialChain::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& t : terms) {
    if (!s.empty()) s += " + ";
    if (t.empty()) s += "1";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "x" : "") + face_string(t[i]);
  }
  return s;
}

SimplicialChain chain_of(const Tensor& t) {
  SimplicialChain c;
  c.arity = static_cast<int>(t.size());
  c.add(t);
  return c;
}

SimplicialChain parse_chain(const std::string& text) {
  // terms separated by '+', factors by 'x' (or '⊗' written as "(x)"), faces "[a,b,...]"
  SimplicialChain c;
  c.arity = -1;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& w) -> void { throw ParseError("chain: " + w + " at offset " + std::to_string(pos)); };
  skip();
  if (text.substr(pos) == "0") {
    c.arity = 1;
    return c;
  }
  for (;;) {
    Tensor t;
    skip();
    if (pos < text.size() && text[pos] == '1') {
      ++pos;
    } else {
      for (;;) {
        skip();
        if (pos >= text.size() || text[pos] != '[') fail("expected '['");
        ++pos;
        Face f;
        for (;;) {
          skip();
          std::size_t b = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (b == pos) fail("expected vertex");
          f.push_back(std::stoi(text.substr(b, pos - b)));
          skip();
          if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
          }
          if (pos < text.size() && text[pos] == ']') {
            ++pos;
            break;
          }
          fail("expected ',' or ']'");
        }
        for (std::size_t i = 1; i < f.size(); ++i)
          if (f[i] <= f[i - 1]) fail("face vertices must increase");
        t.push_back(std::move(f));
        skip();
        if (pos < text.size() && (text[pos] == 'x' || text[pos] == '*')) {
          ++pos;
          continue;
        }
        break;
      }
    }
    if (c.arity < 0) c.arity = static_cast<int>(t.size());
    if (static_cast<int>(t.size()) != c.arity) fail("terms of different tensor arity");
    c.add(t);
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '+') fail("expected '+'");
    ++pos;
  }
  return c;
}

std::vector<Face> faces_of_simplex(int d) {
  std::vector<Face> out;
  for (int k = 0; k <= d; ++k) {
    std::vector<int> pick(static_cast<std::size_t>(d + 1), 0);
    std::fill(pick.begin(), pick.begin() + k + 1, 1);
    std::vector<Face> level;
    do {
      Face f;
      for (int v = 0; v <= d; ++v)
        if (pick[static_cast<std::size_t>(v)]) f.push_back(v);
      level.push_back(f);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Face face_delete(const Face& f, int i) {
  Face g = f;
  g.erase(g.begin() + i);
  return g;
}

SimplicialChain boundary(const SimplicialChain& c) {
  SimplicialChain out;
  out.arity = c.arity;
  for (const auto& t : c.terms)
    for (std::size_t p = 0; p < t.size(); ++p) {
      if (t[p].size() < 2) continue;
      for (std::size_t i = 0; i < t[p].size(); ++i) {
        Tensor u = t;
        u[p] = face_delete(t[p], static_cast<int>(i));
        out.add(u);
      }
    }
  return out;
}

void ChainElement::add(const SurjectionType& t) {
  if (t.n != n || t.m != m || t.degree() != degree) throw ValidationError("generator " + t.to_string() + " does not fit the chain");
  auto [it, fresh] = support.insert(t);
  if (!fresh) support.erase(it);
}

void ChainElement::add(const ChainElement& x) {
  for (const auto& t : x.support) add(t);
}

std::string ChainElement::to_string() const {
  if (support.empty()) return "0";
  std::string s;
  for (const auto& t : support) s += (s.empty() ? "" : " + ") + t.to_string();
  return s;
}

SurjectionType counit_type(int n) { return SurjectionType{n, 0, std::vector<std::vector<int>>(static_cast<std::size_t>(n))}; }

SurjectionType identity_type(int n) {
  SurjectionType t{n, n, {}};
  for (int i = 0; i < n; ++i) t.blocks.push_back({i});
  return t;
}

SurjectionType cup_type(int i) {
  SurjectionType t{1, 2, {{}}};
  for (int k = 0; k < i + 2; ++k) t.blocks[0].push_back(k % 2);
  return t;
}

ChainElement generator(const SurjectionType& t) {
  if (!t.nondegenerate() || !t.surjective()) throw ValidationError("degenerate generator " + t.to_string());
  ChainElement x{t.n, t.m, t.degree(), {}};
  x.add(t);
  return x;
}

ChainElement zero_chain(int n, int m, int degree) { return ChainElement{n, m, degree, {}}; }

GraphTerm generator_graph(const SurjectionType& t) {
  if (t.m == 0) return canonical_graph(MSElement{CounitClass{t.n}});
  return canonical_graph(t);
}

namespace {

SurjectionType type_of(const MSElement& x) {
  if (const auto* c = std::get_if<CounitClass>(&x)) return counit_type(c->n);
  return std::get<WeightedSurjection>(x).type();
}

}  // namespace

ChainElement differential(const ChainElement& x) {
  ChainElement out = zero_chain(x.n, x.m, x.degree - 1);
  for (const auto& t : x.support) {
    const GraphTerm g = generator_graph(t);
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
      if (g.vertices()[v].kind != Generator::Product) continue;
      for (int s = 0; s <= 1; ++s) {
        const GraphTerm face = substitute_vertex(g, static_cast<int>(v), attaching_graph(Generator::Product, Rational(s)));
        const SurjectionType ft = type_of(normalize(face));
        if (ft.degree() == x.degree - 1) out.add(ft);
      }
    }
  }
  return out;
}

namespace {

// All generic refinements of P top pieces against Q bottom pieces: monotone
// lattice paths (0,0) -> (P-1,Q-1), as lists of cells.
std::vector<std::vector<std::pair<int, int>>> lattice_paths(int P, int Q) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur{{0, 0}};
  std::function<void(int, int)> rec = [&](int t, int u) {
    if (t == P - 1 && u == Q - 1) {
      out.push_back(cur);
      return;
    }
    if (t + 1 < P) {
      cur.push_back({t + 1, u});
      rec(t + 1, u);
      cur.pop_back();
    }
    if (u + 1 < Q) {
      cur.push_back({t, u + 1});
      rec(t, u + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

void compose_types(const SurjectionType& T, const SurjectionType& B, ChainElement& out) {
  const int k = T.m;
  // pieces on each wire, as (block, position) in the top's total order
  std::vector<std::vector<std::pair<int, int>>> pieces(static_cast<std::size_t>(k));
  for (int i = 0; i < T.n; ++i)
    for (int p = 0; p < static_cast<int>(T.blocks[static_cast<std::size_t>(i)].size()); ++p)
      pieces[static_cast<std::size_t>(T.blocks[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)])].push_back({i, p});
  // piece index of each top strand on its wire
  std::vector<std::vector<int>> piece_index(static_cast<std::size_t>(T.n));
  for (int i = 0; i < T.n; ++i) piece_index[static_cast<std::size_t>(i)].assign(T.blocks[static_cast<std::size_t>(i)].size(), 0);
  for (int l = 0; l < k; ++l)
    for (int t = 0; t < static_cast<int>(pieces[static_cast<std::size_t>(l)].size()); ++t) {
      auto [i, p] = pieces[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)];
      piece_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] = t;
    }
  std::vector<std::vector<std::vector<std::pair<int, int>>>> options(static_cast<std::size_t>(k));
  for (int l = 0; l < k; ++l) {
    const int P = static_cast<int>(pieces[static_cast<std::size_t>(l)].size());
    const int Q = static_cast<int>(B.blocks[static_cast<std::size_t>(l)].size());
    if (Q == 0) options[static_cast<std::size_t>(l)] = {{}};
    else options[static_cast<std::size_t>(l)] = lattice_paths(P, Q);
  }
  const int want = T.degree() + B.degree();
  std::vector<std::size_t> choice(static_cast<std::size_t>(k), 0);
  std::function<void(int)> rec = [&](int l) {
    if (l < k) {
      for (std::size_t c = 0; c < options[static_cast<std::size_t>(l)].size(); ++c) {
        choice[static_cast<std::size_t>(l)] = c;
        rec(l + 1);
      }
      return;
    }
    SurjectionType R{T.n, B.m, std::vector<std::vector<int>>(static_cast<std::size_t>(T.n))};
    for (int i = 0; i < T.n; ++i)
      for (int p = 0; p < static_cast<int>(T.blocks[static_cast<std::size_t>(i)].size()); ++p) {
        const int wire = T.blocks[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
        const int t = piece_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
        for (auto [tt, u] : options[static_cast<std::size_t>(wire)][choice[static_cast<std::size_t>(wire)]])
          if (tt == t) R.blocks[static_cast<std::size_t>(i)].push_back(B.blocks[static_cast<std::size_t>(wire)][static_cast<std::size_t>(u)]);
      }
    if (R.nondegenerate() && R.surjective() && R.degree() == want) out.add(R);
  };
  rec(0);
}

}  // namespace

ChainElement chain_compose(const ChainElement& top, const ChainElement& bottom) {
  if (top.m != bottom.n) throw ValidationError("biarity mismatch in chain composition");
  ChainElement out = zero_chain(top.n, bottom.m, top.degree + bottom.degree);
  for (const auto& T : top.support)
    for (const auto& B : bottom.support) compose_types(T, B, out);
  return out;
}

ChainElement chain_horizontal(const ChainElement& a, const ChainElement& b) {
  ChainElement out = zero_chain(a.n + b.n, a.m + b.m, a.degree + b.degree);
  for (const auto& x : a.support)
    for (const auto& y : b.support) {
      SurjectionType t{a.n + b.n, a.m + b.m, x.blocks};
      for (auto bl : y.blocks) {
        for (int& j : bl) j += a.m;
        t.blocks.push_back(std::move(bl));
      }
      out.add(t);
    }
  return out;
}

ChainElement chain_permute_inputs(const ChainElement& x, const Permutation& sigma) {
  ChainElement out = zero_chain(x.n, x.m, x.degree);
  for (const auto& t : x.support) out.add(permute_inputs(t, sigma));
  return out;
}

ChainElement chain_permute_outputs(const ChainElement& x, const Permutation& tau) {
  ChainElement out = zero_chain(x.n, x.m, x.degree);
  for (const auto& t : x.support) out.add(permute_outputs(t, tau));
  return out;
}

ChainElement compose_at_output(const ChainElement& top, int i, const ChainElement& v) {
  if (v.n != 1) throw ValidationError("compose_at_output plugs in an operadic element");
  ChainElement bottom = generator(identity_type(i));
  if (i == 0) bottom = v;
  else bottom = chain_horizontal(bottom, v);
  if (top.m - i - 1 > 0) bottom = chain_horizontal(bottom, generator(identity_type(top.m - i - 1)));
  return chain_compose(top, bottom);
}

namespace {

struct Evaluator {
  const GraphTerm& g;
  Incidence inc;
  std::vector<int> order;
  std::vector<Face> ef;
  SimplicialChain* out;

  void run(std::size_t pos) {
    if (pos == order.size()) {
      Tensor t;
      for (int e : inc.output_port) t.push_back(ef[static_cast<std::size_t>(e)]);
      out->add(t);
      return;
    }
    const auto v = static_cast<std::size_t>(order[pos]);
    const Vertex& x = g.vertices()[v];
    switch (x.kind) {
      case Generator::Counit:
        if (ef[static_cast<std::size_t>(inc.in[v][0])].size() == 1) run(pos + 1);
        return;
      case Generator::Coproduct: {
        const Face f = ef[static_cast<std::size_t>(inc.in[v][0])];
        const auto o0 = static_cast<std::size_t>(inc.out[v][0]), o1 = static_cast<std::size_t>(inc.out[v][1]);
        for (std::size_t i = 0; i < f.size(); ++i) {
          ef[o0].assign(f.begin(), f.begin() + static_cast<long>(i) + 1);
          ef[o1].assign(f.begin() + static_cast<long>(i), f.end());
          run(pos + 1);
        }
        return;
      }
      case Generator::Product: {
        const Face& a = ef[static_cast<std::size_t>(inc.in[v][0])];
        const Face& b = ef[static_cast<std::size_t>(inc.in[v][1])];
        Face u;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
        if (u.size() != a.size() + b.size()) return;
        ef[static_cast<std::size_t>(inc.out[v][0])] = std::move(u);
        run(pos + 1);
        return;
      }
      case Generator::CounitHomotopy:
        return;
      case Generator::Unit:
        for (int k = 0; k < x.unit_arity; ++k)
          ef[static_cast<std::size_t>(inc.out[v][static_cast<std::size_t>(k)])] = ef[static_cast<std::size_t>(inc.in[v][static_cast<std::size_t>(k)])];
        run(pos + 1);
        return;
    }
  }
};

}  // namespace

SimplicialChain act_graph(const GraphTerm& g, const SimplicialChain& c) {
  if (c.arity != g.inputs()) throw ValidationError("chain arity does not match the graph's inputs");
  GraphTerm h = absorb_equivalences(g);
  SimplicialChain out;
  out.arity = h.outputs();
  Evaluator ev{h, incidence(h), topological_order(h), std::vector<Face>(h.edges().size()), &out};
  for (const auto& t : c.terms) {
    for (int i = 0; i < h.inputs(); ++i) ev.ef[static_cast<std::size_t>(ev.inc.input_port[static_cast<std::size_t>(i)])] = t[static_cast<std::size_t>(i)];
    ev.run(0);
  }
  return out;
}

SimplicialChain act(const SurjectionType& t, const SimplicialChain& c) { return act_graph(generator_graph(t), c); }

SimplicialChain act(const ChainElement& x, const SimplicialChain& c) {
  SimplicialChain out;
  out.arity = x.m;
  for (const auto& t : x.support) out.add(act(t, c));
  return out;
}

ChainElement chains_S_check(const TermExpr& e) {
  using K = TermExpr::Kind;
  switch (e.kind) {
    case K::Id: return generator(identity_type(1));
    case K::Eps: return generator(counit_type(1));
    case K::Delta: return generator(SurjectionType{1, 2, {{0, 1}}});
    case K::Mu: return generator(SurjectionType{2, 1, {{0}, {0}}});
    case K::H: return zero_chain(1, 1, 1);
    case K::Swap: return generator(SurjectionType{2, 2, {{1}, {0}}});
    case K::Sigma:
    case K::Tau: {
      Permutation p = Permutation::from_one_based(e.perm);
      if (e.kind == K::Tau) p = p.inverse();
      SurjectionType t{static_cast<int>(p.size()), static_cast<int>(p.size()), {}};
      for (int i = 0; i < t.n; ++i) t.blocks.push_back({p(i)});
      return generator(t);
    }
    case K::Horizontal: {
      ChainElement x = chains_S_check(e.children.front());
      for (std::size_t i = 1; i < e.children.size(); ++i) x = chain_horizontal(x, chains_S_check(e.children[i]));
      return x;
    }
    case K::Vertical: {
      ChainElement x = chains_S_check(e.children.front());
      for (std::size_t i = 1; i < e.children.size(); ++i) x = chain_compose(x, chains_S_check(e.children[i]));
      return x;
    }
  }
  throw ParseError("unknown term node");
}

}  // namespace einf
