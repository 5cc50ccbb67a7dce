#include "einf/simplicial_set.hpp"

#include <algorithm>
#include <map>

#include "einf/errors.hpp"
#include "json.hpp"

namespace einf {

namespace {

bool monotone_surjection(const std::vector<int>& theta, int target) {
  if (theta.empty() || theta.front() != 0 || theta.back() != target) return false;
  for (std::size_t i = 1; i < theta.size(); ++i)
    if (theta[i] != theta[i - 1] && theta[i] != theta[i - 1] + 1) return false;
  return true;
}

std::vector<int> identity_map(int d) {
  std::vector<int> a;
  for (int v = 0; v <= d; ++v) a.push_back(v);
  return a;
}

std::vector<int> skip_map(int j, int d) {  // δ^j : [d-1] -> [d]
  std::vector<int> a;
  for (int v = 0; v < d; ++v) a.push_back(v < j ? v : v + 1);
  return a;
}

}  // namespace

SimplicialSet::SimplicialSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::map<std::string, int> names;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const Cell& x = cells_[c];
    if (!names.emplace(x.name, static_cast<int>(c)).second) throw ValidationError("duplicate cell name " + x.name);
    if (x.dim < 0) throw ValidationError("negative dimension for cell " + x.name);
    const std::size_t want = x.dim == 0 ? 0 : static_cast<std::size_t>(x.dim) + 1;
    if (x.faces.size() != want) throw ValidationError("cell " + x.name + " needs " + std::to_string(want) + " faces");
    for (const auto& f : x.faces) {
      if (f.cell < 0 || f.cell >= static_cast<int>(cells_.size())) throw ValidationError("face of " + x.name + " names an unknown cell");
      const int fd = cells_[static_cast<std::size_t>(f.cell)].dim;
      if (f.dim() != x.dim - 1 || fd > x.dim - 1 || !monotone_surjection(f.theta, fd))
        throw ValidationError("bad face map on cell " + x.name);
    }
  }
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const Simplex s = cell_simplex(static_cast<int>(c));
    if (s.dim() < 2) continue;  // d_i d_j only makes sense from dimension 2 up
    for (int j = 1; j <= s.dim(); ++j)
      for (int i = 0; i < j; ++i)
        if (!(face(face(s, j), i) == face(face(s, i), j - 1)))
          throw ValidationError("simplicial identity fails on cell " + cells_[c].name);
  }
}

int SimplicialSet::find(const std::string& name) const {
  for (std::size_t c = 0; c < cells_.size(); ++c)
    if (cells_[c].name == name) return static_cast<int>(c);
  return -1;
}

Simplex SimplicialSet::cell_simplex(int c) const {
  return {c, identity_map(cells_.at(static_cast<std::size_t>(c)).dim)};
}

Simplex SimplicialSet::pullback(const Simplex& s, const std::vector<int>& alpha) const {
  std::vector<int> f;
  for (int a : alpha) {
    if (a < 0 || a > s.dim() || (!f.empty() && s.theta[static_cast<std::size_t>(a)] < f.back()))
      throw ValidationError("pullback along a non-monotone map");
    f.push_back(s.theta[static_cast<std::size_t>(a)]);
  }
  const int top = cells_[static_cast<std::size_t>(s.cell)].dim;
  std::vector<char> hit(static_cast<std::size_t>(top) + 1, 0);
  for (int v : f) hit[static_cast<std::size_t>(v)] = 1;
  int missing = -1;
  for (int v = top; v >= 0; --v)
    if (!hit[static_cast<std::size_t>(v)]) {
      missing = v;
      break;
    }
  if (missing < 0) return {s.cell, f};
  // f = δ^missing ∘ f'
  for (int& v : f)
    if (v > missing) --v;
  return pullback(cells_[static_cast<std::size_t>(s.cell)].faces[static_cast<std::size_t>(missing)], f);
}

Simplex SimplicialSet::face(const Simplex& s, int j) const {
  if (s.dim() < 1 || j < 0 || j > s.dim()) throw ValidationError("face index out of range");
  return pullback(s, skip_map(j, s.dim()));
}

Simplex SimplicialSet::degeneracy(const Simplex& s, int j) const {
  if (j < 0 || j > s.dim()) throw ValidationError("degeneracy index out of range");
  std::vector<int> a;
  for (int v = 0; v <= s.dim() + 1; ++v) a.push_back(v <= j ? v : v - 1);
  return pullback(s, a);
}

SimplicialSet standard_simplex_set(int n) {
  std::vector<Face> faces = faces_of_simplex(n);
  std::map<Face, int> index;
  for (std::size_t i = 0; i < faces.size(); ++i) index[faces[i]] = static_cast<int>(i);
  std::vector<Cell> cells;
  for (const auto& f : faces) {
    Cell c;
    c.dim = static_cast<int>(f.size()) - 1;
    c.name = "[";
    for (std::size_t i = 0; i < f.size(); ++i) c.name += (i ? "," : "") + std::to_string(f[i]);
    c.name += "]";
    if (c.dim > 0)
      for (int j = 0; j <= c.dim; ++j) c.faces.push_back({index.at(face_delete(f, j)), identity_map(c.dim - 1)});
    cells.push_back(std::move(c));
  }
  return SimplicialSet(std::move(cells));
}

SimplicialSet sphere_set(int n) {
  if (n < 1) throw ValidationError("sphere dimension must be positive");
  Cell v{"v", 0, {}};
  Cell c{"c", n, {}};
  for (int j = 0; j <= n; ++j) c.faces.push_back({0, std::vector<int>(static_cast<std::size_t>(n), 0)});
  return SimplicialSet({v, c});
}

SimplicialSet parse_simplicial_set(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("simplicial set JSON: ") + e.what());
  }
  try {
    const auto& arr = j.at("cells");
    std::map<std::string, int> names;
    for (std::size_t c = 0; c < arr.size(); ++c) names[arr[c].at("name").get<std::string>()] = static_cast<int>(c);
    auto lookup = [&](const std::string& n) {
      auto it = names.find(n);
      if (it == names.end()) throw ParseError("simplicial set JSON: unknown cell " + n);
      return it->second;
    };
    std::vector<Cell> cells;
    for (const auto& jc : arr) {
      Cell c;
      c.name = jc.at("name").get<std::string>();
      c.dim = jc.at("dim").get<int>();
      if (jc.contains("faces"))
        for (const auto& jf : jc.at("faces")) {
          if (jf.is_string()) {
            const int id = lookup(jf.get<std::string>());
            c.faces.push_back({id, identity_map(arr[static_cast<std::size_t>(id)].at("dim").get<int>())});
          } else {
            c.faces.push_back({lookup(jf.at("cell").get<std::string>()), jf.at("map").get<std::vector<int>>()});
          }
        }
      cells.push_back(std::move(c));
    }
    return SimplicialSet(std::move(cells));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("simplicial set JSON: ") + e.what());
  } catch (const ValidationError& e) {
    throw ParseError(std::string("simplicial set: ") + e.what());
  }
}

std::string to_json(const SimplicialSet& G) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : G.cells()) {
    nlohmann::json jc{{"name", c.name}, {"dim", c.dim}};
    if (!c.faces.empty()) {
      jc["faces"] = nlohmann::json::array();
      for (const auto& f : c.faces)
        jc["faces"].push_back({{"cell", G.cells()[static_cast<std::size_t>(f.cell)].name}, {"map", f.theta}});
    }
    arr.push_back(std::move(jc));
  }
  return nlohmann::json{{"cells", arr}}.dump(2);
}

RealizationPoint canonicalize(const SimplicialSet& G, const Simplex& s, const SimplexPoint& x) {
  if (x.dim() != s.dim()) throw ValidationError("point and simplex dimensions differ");
  if (!is_valid(x)) throw ValidationError("invalid point");
  const auto t = barycentric(x);
  std::vector<int> carrier;
  std::vector<Rational> y;
  for (std::size_t j = 0; j < t.size(); ++j)
    if (t[j] > 0) {
      carrier.push_back(static_cast<int>(j));
      y.push_back(t[j]);
    }
  const Simplex base = G.pullback(s, carrier);
  const int top = G.cells()[static_cast<std::size_t>(base.cell)].dim;
  return {base.cell, push_forward(from_barycentric(y), base.theta, top)};
}

std::vector<RealizationPoint> realization_act(const SimplicialSet& G, const GraphTerm& g, const Simplex& s,
                                              const SimplexPoint& x) {
  if (g.inputs() != 1) throw ValidationError("realization action needs a graph with one input");
  std::vector<RealizationPoint> out;
  for (const auto& p : eval_term(g, PointTuple<Rational>{x})) out.push_back(canonicalize(G, s, p));
  return out;
}

std::string to_string(const SimplicialSet& G, const RealizationPoint& p) {
  return "(" + G.cells()[static_cast<std::size_t>(p.cell)].name + ", " + to_string(p.x) + ")";
}

Simplex random_simplex(const SimplicialSet& G, int max_extra_degeneracy, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, G.cells().size() - 1);
  const int c = static_cast<int>(pick(rng));
  std::vector<int> theta = identity_map(G.cells()[static_cast<std::size_t>(c)].dim);
  std::uniform_int_distribution<int> extra(0, max_extra_degeneracy);
  for (int e = extra(rng); e > 0; --e) {
    std::uniform_int_distribution<std::size_t> at(0, theta.size() - 1);
    const std::size_t i = at(rng);
    theta.insert(theta.begin() + static_cast<long>(i), theta[i]);
  }
  return {c, theta};
}

std::vector<int> random_monotone(int k, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(0, d);
  std::vector<int> a;
  for (int i = 0; i <= k; ++i) a.push_back(v(rng));
  std::sort(a.begin(), a.end());
  return a;
}

CheckReport check_realization_well_defined(const SimplicialSet& G, const GraphTerm& g, long samples,
                                           std::mt19937_64& rng) {
  CheckReport r;
  for (long n = 0; n < samples; ++n) {
    const Simplex gamma = random_simplex(G, 2, rng);
    const int d = gamma.dim();
    std::uniform_int_distribution<int> kd(0, d + 1);
    const int k = kd(rng);
    const auto alpha = random_monotone(k, d, rng);
    const SimplexPoint x = random_point(k, rng);
    ++r.samples;
    const auto lhs = realization_act(G, g, G.pullback(gamma, alpha), x);
    const auto rhs = realization_act(G, g, gamma, push_forward(x, alpha, d));
    if (lhs != rhs) r.fail(to_string(x));
  }
  return r;
}

}  // namespace einf
