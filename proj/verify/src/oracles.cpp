#include "einf/verify/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "einf/errors.hpp"

namespace einf::verify {

namespace {

using K = TermExpr::Kind;

// A stretch of some input interval currently lying on a wire.
struct Piece {
  int input;
  Rational start, length;
};
using Wire = std::vector<Piece>;

int arity_in(const TermExpr& e);
int arity_out(const TermExpr& e) {
  switch (e.kind) {
    case K::Id: case K::Mu: case K::H: return 1;
    case K::Eps: return 0;
    case K::Delta: case K::Swap: return 2;
    case K::Sigma: case K::Tau: return static_cast<int>(e.perm.size());
    case K::Vertical: return arity_out(e.children.back());
    case K::Horizontal: {
      int k = 0;
      for (const auto& c : e.children) k += arity_out(c);
      return k;
    }
  }
  return 0;
}
int arity_in(const TermExpr& e) {
  switch (e.kind) {
    case K::Id: case K::Eps: case K::Delta: case K::H: return 1;
    case K::Mu: case K::Swap: return 2;
    case K::Sigma: case K::Tau: return static_cast<int>(e.perm.size());
    case K::Vertical: return arity_in(e.children.front());
    case K::Horizontal: {
      int k = 0;
      for (const auto& c : e.children) k += arity_in(c);
      return k;
    }
  }
  return 0;
}

// output slot fed by input slot i
std::vector<int> wiring(const TermExpr& e) {
  std::vector<int> p;
  for (int v : e.perm) p.push_back(v - 1);
  if (e.kind == K::Tau) {
    std::vector<int> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return inv;
  }
  return p;
}

std::vector<Rational> weights_up(const TermExpr& e, const std::vector<Rational>& out) {
  switch (e.kind) {
    case K::Id: return out;
    case K::Eps: return {Rational(0)};
    case K::Delta: return {out[0] + out[1]};
    case K::Mu: return {(1 - e.param) * out[0], e.param * out[0]};
    case K::H: throw ValidationError("φ has no image in MS");
    case K::Swap: return {out[1], out[0]};
    case K::Sigma: case K::Tau: {
      const auto p = wiring(e);
      std::vector<Rational> in(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) in[i] = out[static_cast<std::size_t>(p[i])];
      return in;
    }
    case K::Vertical: {
      std::vector<Rational> w = out;
      for (auto it = e.children.rbegin(); it != e.children.rend(); ++it) w = weights_up(*it, w);
      return w;
    }
    case K::Horizontal: {
      std::vector<Rational> in;
      std::size_t at = 0;
      for (const auto& c : e.children) {
        const auto k = static_cast<std::size_t>(arity_out(c));
        const auto part = weights_up(c, std::vector<Rational>(out.begin() + static_cast<long>(at), out.begin() + static_cast<long>(at + k)));
        in.insert(in.end(), part.begin(), part.end());
        at += k;
      }
      return in;
    }
  }
  throw InvariantError("unknown term node");
}

std::vector<Wire> flow_down(const TermExpr& e, std::vector<Wire> in, const std::vector<Rational>& out) {
  switch (e.kind) {
    case K::Id: return in;
    case K::Eps: return {};
    case K::Delta: {
      Wire left, right;
      Rational pos = 0;
      for (const auto& p : in[0]) {
        const Rational end = pos + p.length;
        if (end <= out[0]) {
          left.push_back(p);
        } else if (pos >= out[0]) {
          right.push_back(p);
        } else {
          const Rational cut = out[0] - pos;
          left.push_back({p.input, p.start, cut});
          right.push_back({p.input, p.start + cut, p.length - cut});
        }
        pos = end;
      }
      return {left, right};
    }
    case K::Mu: {
      Wire w = in[0];
      w.insert(w.end(), in[1].begin(), in[1].end());
      return {w};
    }
    case K::H: throw ValidationError("φ has no image in MS");
    case K::Swap: return {in[1], in[0]};
    case K::Sigma: case K::Tau: {
      const auto p = wiring(e);
      std::vector<Wire> o(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) o[static_cast<std::size_t>(p[i])] = in[i];
      return o;
    }
    case K::Vertical: {
      // weights below each stage, bottom up
      std::vector<std::vector<Rational>> below(e.children.size());
      below.back() = out;
      for (std::size_t i = e.children.size() - 1; i > 0; --i) below[i - 1] = weights_up(e.children[i], below[i]);
      for (std::size_t i = 0; i < e.children.size(); ++i) in = flow_down(e.children[i], std::move(in), below[i]);
      return in;
    }
    case K::Horizontal: {
      std::vector<Wire> o;
      std::size_t at_in = 0, at_out = 0;
      for (const auto& c : e.children) {
        const auto ki = static_cast<std::size_t>(arity_in(c)), ko = static_cast<std::size_t>(arity_out(c));
        auto part = flow_down(c, std::vector<Wire>(in.begin() + static_cast<long>(at_in), in.begin() + static_cast<long>(at_in + ki)),
                              std::vector<Rational>(out.begin() + static_cast<long>(at_out), out.begin() + static_cast<long>(at_out + ko)));
        o.insert(o.end(), part.begin(), part.end());
        at_in += ki;
        at_out += ko;
      }
      return o;
    }
  }
  throw InvariantError("unknown term node");
}

}  // namespace

MSElement evaluate_by_flow(const TermExpr& e) {
  const int n = arity_in(e), m = arity_out(e);
  if (m == 0) return CounitClass{n};
  const auto w_in = weights_up(e, std::vector<Rational>(static_cast<std::size_t>(m), Rational(1)));
  std::vector<Wire> wires;
  for (int i = 0; i < n; ++i) wires.push_back({{i, Rational(0), w_in[static_cast<std::size_t>(i)]}});
  const auto outs = flow_down(e, std::move(wires), std::vector<Rational>(static_cast<std::size_t>(m), Rational(1)));
  std::vector<std::vector<std::pair<Rational, Strand>>> by_input(static_cast<std::size_t>(n));
  for (int j = 0; j < m; ++j)
    for (const auto& p : outs[static_cast<std::size_t>(j)])
      if (p.length > 0) by_input[static_cast<std::size_t>(p.input)].push_back({p.start, Strand{j, p.length}});
  std::vector<std::vector<Strand>> blocks;
  for (auto& b : by_input) {
    std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    blocks.emplace_back();
    for (const auto& [pos, s] : b) blocks.back().push_back(s);
  }
  return canonicalize_blocks(n, m, std::move(blocks));
}

long brute_force_basis_count(int m, int k) {
  const int len = m + k;
  std::vector<int> f(static_cast<std::size_t>(len), 0);
  long count = 0;
  for (;;) {
    bool ok = true;
    for (int i = 1; i < len && ok; ++i) ok = f[static_cast<std::size_t>(i)] != f[static_cast<std::size_t>(i - 1)];
    std::vector<char> hit(static_cast<std::size_t>(m), 0);
    for (int v : f) hit[static_cast<std::size_t>(v)] = 1;
    if (ok && std::all_of(hit.begin(), hit.end(), [](char c) { return c; })) ++count;
    int pos = 0;
    while (pos < len && ++f[static_cast<std::size_t>(pos)] == m) f[static_cast<std::size_t>(pos++)] = 0;
    if (pos == len) break;
  }
  return count;
}

ChainElement combinatorial_differential(const ChainElement& x) {
  ChainElement out = zero_chain(x.n, x.m, x.degree - 1);
  for (const auto& t : x.support) {
    const auto counts = t.output_counts();
    for (std::size_t b = 0; b < t.blocks.size(); ++b)
      for (std::size_t k = 0; k < t.blocks[b].size(); ++k) {
        if (counts[static_cast<std::size_t>(t.blocks[b][k])] < 2) continue;
        SurjectionType f = t;
        f.blocks[b].erase(f.blocks[b].begin() + static_cast<long>(k));
        if (f.nondegenerate()) out.add(f);
      }
  }
  return out;
}

ChainElement surjection_compose(const SurjectionType& x, int i, const SurjectionType& y) {
  if (x.n != 1 || y.n != 1) throw ValidationError("operadic composition needs one input");
  const auto& f = x.blocks[0];
  const auto& g = y.blocks[0];
  const int l = y.m;
  ChainElement out = zero_chain(1, x.m + l - 1, x.degree() + y.degree());
  std::vector<std::size_t> occurrences;
  for (std::size_t p = 0; p < f.size(); ++p)
    if (f[p] == i) occurrences.push_back(p);
  const std::size_t r = occurrences.size(), L = g.size();
  // cut points 0 = c_0 <= c_1 <= ... <= c_{r-1} <= c_r = L-1; piece j = g[c_j .. c_{j+1}]
  std::vector<std::size_t> cuts(r + 1, 0);
  cuts[r] = L - 1;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == r) {
      SurjectionType h{1, x.m + l - 1, {{}}};
      std::size_t piece = 0;
      for (int v : f) {
        if (v == i) {
          for (std::size_t q = cuts[piece]; q <= cuts[piece + 1]; ++q) h.blocks[0].push_back(g[q] + i);
          ++piece;
        } else {
          h.blocks[0].push_back(v < i ? v : v + l - 1);
        }
      }
      if (h.nondegenerate()) out.add(h);
      return;
    }
    for (std::size_t c = cuts[j - 1]; c < L; ++c) {
      cuts[j] = c;
      rec(j + 1);
    }
  };
  if (r == 0) return out;
  rec(1);
  return out;
}

Cochain front_back_cup(const Cochain& a, const Cochain& b, const SimplicialComplex& K) {
  const int p = a.degree, q = b.degree;
  Cochain out{p + q, {}};
  for (const auto& s : K.faces(p + q)) {
    const Face front(s.begin(), s.begin() + p + 1), back(s.begin() + p, s.end());
    if (a.support.count(front) && b.support.count(back)) out.add(s);
  }
  return out;
}

bool brute_force_isomorphic(const GraphTerm& a0, const GraphTerm& b0) {
  const GraphTerm a = absorb_equivalences(a0), b = absorb_equivalences(b0);
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs() || a.vertices().size() != b.vertices().size() ||
      a.edges().size() != b.edges().size())
    return false;
  const std::size_t nv = a.vertices().size();
  std::vector<int> perm(nv);
  std::iota(perm.begin(), perm.end(), 0);
  auto key = [](const Vertex& v) { return std::make_tuple(static_cast<int>(v.kind), v.params, v.unit_arity); };
  auto edge_set = [](const GraphTerm& g, const std::vector<int>& relabel) {
    std::multiset<std::pair<Endpoint, Endpoint>> s;
    auto map = [&](Endpoint e) {
      if (!e.is_port()) e.vertex = relabel[static_cast<std::size_t>(e.vertex)];
      return e;
    };
    for (const auto& e : g.edges()) s.insert({map(e.from), map(e.to)});
    return s;
  };
  std::vector<int> id(nv);
  std::iota(id.begin(), id.end(), 0);
  const auto target = edge_set(b, id);
  do {
    bool same = true;
    for (std::size_t v = 0; v < nv && same; ++v) same = key(a.vertices()[v]) == key(b.vertices()[static_cast<std::size_t>(perm[v])]);
    if (same && edge_set(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace einf::verify
