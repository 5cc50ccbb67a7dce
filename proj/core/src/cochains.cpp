#include "einf/cochains.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "einf/errors.hpp"

namespace einf {

SimplicialComplex::SimplicialComplex(std::vector<Face> maximal) : maximal_(std::move(maximal)) {
  for (auto& f : maximal_) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw ValidationError("face with a repeated vertex");
    if (f.empty()) throw ValidationError("empty face");
    const std::size_t n = f.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Face g;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) g.push_back(f[i]);
      all_.insert(std::move(g));
    }
  }
  for (const auto& f : all_) {
    if (by_dim_.size() < f.size()) by_dim_.resize(f.size());
    by_dim_[f.size() - 1].push_back(f);
  }
}

const std::vector<Face>& SimplicialComplex::faces(int k) const {
  static const std::vector<Face> none;
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[static_cast<std::size_t>(k)];
}

int SimplicialComplex::euler_characteristic() const {
  int chi = 0;
  for (std::size_t k = 0; k < by_dim_.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<int>(by_dim_[k].size());
  return chi;
}

namespace {

std::vector<Face> read_faces(const std::string& text) {
  std::vector<Face> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::replace(line.begin(), line.end(), '[', ' ');
    std::replace(line.begin(), line.end(), ']', ' ');
    std::istringstream ls(line);
    Face f;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        f.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("face list: bad vertex '" + tok + "'");
      }
    }
    if (f.empty()) continue;
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw ParseError("face list: repeated vertex");
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

SimplicialComplex parse_complex(const std::string& text) {
  auto faces = read_faces(text);
  if (faces.empty()) throw ParseError("complex file has no faces");
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex standard_simplex(int d) {
  Face f;
  for (int v = 0; v <= d; ++v) f.push_back(v);
  return SimplicialComplex({f});
}

void Cochain::add(const Face& f) {
  if (static_cast<int>(f.size()) != degree + 1) throw ValidationError("face dimension differs from cochain degree");
  auto [it, fresh] = support.insert(f);
  if (!fresh) support.erase(it);
}

void Cochain::add(const Cochain& c) {
  for (const auto& f : c.support) add(f);
}

std::string Cochain::to_string() const {
  std::ostringstream os;
  os << "# degree " << degree << "\n";
  for (const auto& f : support) {
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
    os << "\n";
  }
  return os.str();
}

Cochain parse_cochain(const std::string& text, std::optional<int> degree) {
  auto faces = read_faces(text);
  // "# degree k" header written by to_string
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string hash, word;
    int k;
    if (ls >> hash >> word >> k && hash == "#" && word == "degree" && !degree) degree = k;
  }
  if (!degree) {
    if (faces.empty()) throw ParseError("empty cochain needs an explicit degree");
    degree = static_cast<int>(faces.front().size()) - 1;
  }
  Cochain c{*degree, {}};
  for (const auto& f : faces) {
    if (static_cast<int>(f.size()) != *degree + 1) throw ParseError("cochain faces of mixed dimension");
    c.add(f);
  }
  return c;
}

Cochain dual(const Face& f) {
  Cochain c{static_cast<int>(f.size()) - 1, {}};
  c.add(f);
  return c;
}

Cochain coboundary(const SimplicialComplex& K, const Cochain& a) {
  Cochain out{a.degree + 1, {}};
  for (const auto& s : K.faces(a.degree + 1)) {
    int hits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) hits += a.support.count(face_delete(s, static_cast<int>(i))) ? 1 : 0;
    if (hits % 2) out.add(s);
  }
  return out;
}

bool is_cocycle(const SimplicialComplex& K, const Cochain& a) { return coboundary(K, a).zero(); }

Cochain cup_i(int i, const Cochain& a, const Cochain& b, const SimplicialComplex& K) {
  const int deg = a.degree + b.degree - i;
  Cochain out{std::max(deg, 0), {}};
  if (i < 0 || deg < 0) return out;
  const SurjectionType u = cup_type(i);
  for (const auto& s : K.faces(deg)) {
    const SimplicialChain img = act(u, chain_of({s}));
    int value = 0;
    for (const auto& t : img.terms) value ^= (a.support.count(t[0]) && b.support.count(t[1])) ? 1 : 0;
    if (value) out.add(s);
  }
  return out;
}

Cochain steenrod_square(int k, const Cochain& x, const SimplicialComplex& K) {
  if (!is_cocycle(K, x)) throw ValidationError("Sq^k needs a cocycle");
  if (k < 0 || k > x.degree) return Cochain{x.degree + k < 0 ? 0 : x.degree + k, {}};
  return cup_i(x.degree - k, x, x, K);
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct Basis {
  std::map<std::size_t, Bits> pivots;  // lowest set bit -> vector

  static bool lowest(const Bits& v, std::size_t& at) {
    for (std::size_t w = 0; w < v.size(); ++w)
      if (v[w]) {
        at = w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
        return true;
      }
    return false;
  }

  Bits reduce(Bits v) const {
    std::size_t p;
    while (lowest(v, p)) {
      auto it = pivots.find(p);
      if (it == pivots.end()) break;
      for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= it->second[w];
    }
    return v;
  }

  bool insert(const Bits& v) {
    Bits r = reduce(v);
    std::size_t p;
    if (!lowest(r, p)) return false;
    pivots.emplace(p, std::move(r));
    return true;
  }
};

struct Indexed {
  std::vector<Face> faces;
  std::map<Face, std::size_t> index;
  explicit Indexed(const std::vector<Face>& fs) : faces(fs) {
    for (std::size_t i = 0; i < fs.size(); ++i) index[fs[i]] = i;
  }
  Bits bits(const Cochain& c) const {
    Bits v((faces.size() + 63) / 64, 0);
    for (const auto& f : c.support) {
      auto it = index.find(f);
      if (it == index.end()) throw ValidationError("cochain face not in the complex");
      v[it->second / 64] |= std::uint64_t{1} << (it->second % 64);
    }
    return v;
  }
  Cochain cochain(const Bits& v, int degree) const {
    Cochain c{degree, {}};
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (v[i / 64] >> (i % 64) & 1) c.add(faces[i]);
    return c;
  }
};

Basis coboundaries(const SimplicialComplex& K, int k, const Indexed& target) {
  Basis b;
  for (const auto& f : K.faces(k - 1)) b.insert(target.bits(coboundary(K, dual(f))));
  return b;
}

}  // namespace

bool is_coboundary(const SimplicialComplex& K, const Cochain& c) {
  const Indexed idx(K.faces(c.degree));
  const Bits v = idx.bits(c);
  const Basis b = coboundaries(K, c.degree, idx);
  std::size_t p;
  return !Basis::lowest(b.reduce(v), p);
}

bool cohomologous(const SimplicialComplex& K, const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree) return false;
  Cochain d = a;
  d.add(b);
  return is_coboundary(K, d);
}

std::vector<Cochain> cohomology_basis(const SimplicialComplex& K, int k) {
  const auto& cells = K.faces(k);
  const Indexed idx(cells);
  const Indexed up(K.faces(k + 1));
  // kernel of δ^k: eliminate [δe_f | e_f] on the left part
  const std::size_t nl = (up.faces.size() + 63) / 64, nr = (cells.size() + 63) / 64;
  std::vector<std::pair<Bits, Bits>> rows;
  for (const auto& f : cells) rows.push_back({up.bits(coboundary(K, dual(f))), idx.bits(dual(f))});
  std::vector<Bits> kernel;
  std::map<std::size_t, std::pair<Bits, Bits>> piv;
  for (auto row : rows) {
    std::size_t p;
    while (Basis::lowest(row.first, p)) {
      auto it = piv.find(p);
      if (it == piv.end()) break;
      for (std::size_t w = 0; w < nl; ++w) row.first[w] ^= it->second.first[w];
      for (std::size_t w = 0; w < nr; ++w) row.second[w] ^= it->second.second[w];
    }
    if (Basis::lowest(row.first, p)) piv.emplace(p, std::move(row));
    else kernel.push_back(std::move(row.second));
  }
  Basis quotient = coboundaries(K, k, idx);
  std::vector<Cochain> out;
  for (const auto& z : kernel)
    if (quotient.insert(z)) out.push_back(idx.cochain(z, k));
  return out;
}

}  // namespace einf
