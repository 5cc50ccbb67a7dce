#include "einf/verify/generators.hpp"

#include <numeric>

#include "einf/errors.hpp"

namespace einf::verify {

namespace {

TermExpr atom(TermExpr::Kind k) {
  TermExpr e;
  e.kind = k;
  return e;
}

TermExpr padded(TermExpr a, int before, int after) {
  if (before == 0 && after == 0) return a;
  TermExpr h = atom(TermExpr::Kind::Horizontal);
  for (int i = 0; i < before; ++i) h.children.push_back(atom(TermExpr::Kind::Id));
  h.children.push_back(std::move(a));
  for (int i = 0; i < after; ++i) h.children.push_back(atom(TermExpr::Kind::Id));
  return h;
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Rational random_weight_param(std::mt19937_64& rng, bool boundary) {
  const int pick = uniform(rng, 0, 9);
  if (boundary && pick == 0) return 0;
  if (boundary && pick == 1) return 1;
  if (pick == 2) return fraction(1, 2);
  const int q = uniform(rng, 2, 12);
  return fraction(uniform(rng, 1, q - 1), q);
}

TermExpr random_term(std::mt19937_64& rng, const TermOptions& opt) {
  const int n = uniform(rng, 1, opt.max_inputs);
  int wires = n;
  const int budget = uniform(rng, 1, opt.max_vertices);
  std::vector<TermExpr> layers;
  int used = 0, guard = 0;
  while (used < budget && guard++ < 10 * opt.max_vertices) {
    const int pick = uniform(rng, 0, 99);
    const int j = uniform(rng, 0, wires - 1);
    if (pick < 35) {
      layers.push_back(padded(atom(TermExpr::Kind::Delta), j, wires - j - 1));
      ++wires;
      ++used;
    } else if (pick < 70) {
      if (wires < 2) continue;
      const int k = uniform(rng, 0, wires - 2);
      TermExpr mu = atom(TermExpr::Kind::Mu);
      mu.param = random_weight_param(rng, opt.boundary_params);
      layers.push_back(padded(std::move(mu), k, wires - k - 2));
      --wires;
      ++used;
    } else if (pick < 80) {
      if (!opt.counits || wires < 2) continue;
      layers.push_back(padded(atom(TermExpr::Kind::Eps), j, wires - j - 1));
      --wires;
      ++used;
    } else if (pick < 88) {
      if (!opt.homotopies) continue;
      TermExpr h = atom(TermExpr::Kind::H);
      h.param = random_weight_param(rng, opt.boundary_params);
      layers.push_back(padded(std::move(h), j, wires - j - 1));
      ++used;
    } else {
      if (wires < 2) continue;
      TermExpr s = atom(TermExpr::Kind::Sigma);
      s.perm.resize(static_cast<std::size_t>(wires));
      std::iota(s.perm.begin(), s.perm.end(), 1);
      std::shuffle(s.perm.begin(), s.perm.end(), rng);
      layers.push_back(std::move(s));
    }
  }
  if (layers.empty()) return padded(atom(TermExpr::Kind::Id), 0, n - 1);
  if (layers.size() == 1) return layers.front();
  TermExpr v = atom(TermExpr::Kind::Vertical);
  v.children = std::move(layers);
  return v;
}

WeightedSurjection random_weights(const SurjectionType& t, std::mt19937_64& rng) {
  std::vector<std::vector<Strand>> blocks;
  std::vector<Rational> total(static_cast<std::size_t>(t.m), Rational(0));
  for (const auto& b : t.blocks) {
    blocks.emplace_back();
    for (int j : b) {
      const Rational w = uniform(rng, 1, 9);
      blocks.back().push_back({j, w});
      total[static_cast<std::size_t>(j)] += w;
    }
  }
  for (auto& b : blocks)
    for (auto& s : b) s.weight /= total[static_cast<std::size_t>(s.output)];
  return WeightedSurjection(t.n, t.m, std::move(blocks));
}

SurjectionType random_type(int n, int m, int degree, std::mt19937_64& rng) {
  const auto basis = enumerate_basis(n, m, degree);
  if (basis.empty()) throw ValidationError("no cells in this biarity and degree");
  return basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(basis.size()) - 1))];
}

WeightedSurjection random_surjection(int max_n, int max_m, int max_degree, std::mt19937_64& rng) {
  for (;;) {
    const int n = uniform(rng, 1, max_n), m = uniform(rng, 1, max_m), d = uniform(rng, 0, max_degree);
    const auto basis = enumerate_basis(n, m, d);
    if (basis.empty()) continue;
    return random_weights(basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(basis.size()) - 1))], rng);
  }
}

ChainElement random_chain_element(int n, int m, int degree, std::mt19937_64& rng) {
  ChainElement x = zero_chain(n, m, degree);
  for (const auto& t : enumerate_basis(n, m, degree))
    if (uniform(rng, 0, 1)) x.add(t);
  return x;
}

Cochain random_coboundary(const SimplicialComplex& K, int degree, std::mt19937_64& rng) {
  if (degree == 0) {
    Cochain c{0, {}};
    if (uniform(rng, 0, 1))
      for (const auto& f : K.faces(0)) c.add(f);
    return c;
  }
  Cochain c{degree - 1, {}};
  for (const auto& f : K.faces(degree - 1))
    if (uniform(rng, 0, 1)) c.add(f);
  return coboundary(K, c);
}

}  // namespace einf::verify
