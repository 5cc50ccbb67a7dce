#include "einf/simplex_action.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "einf/errors.hpp"

namespace einf {

template <>
Rational scalar_from<Rational>(const Rational& q) {
  return q;
}
template <>
double scalar_from<double>(const Rational& q) {
  return q.get_d();
}

template <class T>
bool is_valid(const BasicSimplexPoint<T>& p) {
  T prev = 0;
  for (const auto& v : p.x) {
    if (v < prev || v > 1) return false;
    prev = v;
  }
  return true;
}

template <class T>
int skeleton_level(const BasicSimplexPoint<T>& p) {
  // distinct values: coordinates are sorted, so equal ones are adjacent
  int k = 0;
  for (std::size_t i = 0; i < p.x.size(); ++i)
    if (p.x[i] != 0 && p.x[i] != 1 && (i == 0 || p.x[i] != p.x[i - 1])) ++k;
  return k;
}

template <class T>
int skeleton_level(const PointTuple<T>& ps) {
  int k = 0;
  for (const auto& p : ps) k += skeleton_level(p);
  return k;
}

template <class T>
BasicSimplexPoint<T> coface(int i, const BasicSimplexPoint<T>& p) {
  const int d = p.dim();
  if (i < 0 || i > d + 1) throw ValidationError("coface index out of range");
  BasicSimplexPoint<T> q;
  if (i == 0) q.x.push_back(T(0));
  for (int k = 1; k <= d; ++k) {
    q.x.push_back(p.x[static_cast<std::size_t>(k - 1)]);
    if (k == i && i <= d) q.x.push_back(p.x[static_cast<std::size_t>(k - 1)]);
  }
  if (i == d + 1) q.x.push_back(T(1));
  return q;
}

template <class T>
BasicSimplexPoint<T> codegeneracy(int i, const BasicSimplexPoint<T>& p) {
  if (i < 1 || i > p.dim()) throw ValidationError("codegeneracy index out of range");
  BasicSimplexPoint<T> q = p;
  q.x.erase(q.x.begin() + (i - 1));
  return q;
}

template <class T>
BasicSimplexPoint<T> vertex_point(int j, int d) {
  if (j < 0 || j > d) throw ValidationError("vertex out of range");
  BasicSimplexPoint<T> p;
  for (int k = 1; k <= d; ++k) p.x.push_back(k > d - j ? T(1) : T(0));
  return p;
}

template <class T>
std::vector<T> barycentric(const BasicSimplexPoint<T>& p) {
  const int d = p.dim();
  std::vector<T> t(static_cast<std::size_t>(d) + 1, T(0));
  T prev = 0;
  for (int k = 1; k <= d; ++k) {
    t[static_cast<std::size_t>(d - k + 1)] = p.x[static_cast<std::size_t>(k - 1)] - prev;
    prev = p.x[static_cast<std::size_t>(k - 1)];
  }
  t[0] = T(1) - prev;
  return t;
}

template <class T>
BasicSimplexPoint<T> from_barycentric(const std::vector<T>& t) {
  const int d = static_cast<int>(t.size()) - 1;
  BasicSimplexPoint<T> p;
  T acc = 0;
  for (int k = 1; k <= d; ++k) {
    acc += t[static_cast<std::size_t>(d - k + 1)];
    p.x.push_back(acc);
  }
  return p;
}

template <class T>
Face support(const BasicSimplexPoint<T>& p) {
  Face f;
  const auto t = barycentric(p);
  for (std::size_t j = 0; j < t.size(); ++j)
    if (t[j] > 0) f.push_back(static_cast<int>(j));
  return f;
}

template <class T>
BasicSimplexPoint<T> push_forward(const BasicSimplexPoint<T>& p, const std::vector<int>& alpha, int e) {
  if (static_cast<int>(alpha.size()) != p.dim() + 1) throw ValidationError("vertex map has the wrong length");
  const auto t = barycentric(p);
  std::vector<T> u(static_cast<std::size_t>(e) + 1, T(0));
  for (std::size_t j = 0; j < t.size(); ++j) {
    const int a = alpha[j];
    if (a < 0 || a > e || (j && a < alpha[j - 1])) throw ValidationError("vertex map is not monotone into [e]");
    u[static_cast<std::size_t>(a)] += t[j];
  }
  return from_barycentric(u);
}

std::vector<int> coface_vertex_map(int i, int d) {
  if (i < 0 || i > d + 1) throw ValidationError("coface index out of range");
  std::vector<int> a;
  const int missed = d + 1 - i;
  for (int j = 0; j <= d; ++j) a.push_back(j < missed ? j : j + 1);
  return a;
}

std::vector<int> codegeneracy_vertex_map(int i, int d) {
  if (i < 1 || i > d + 1) throw ValidationError("codegeneracy index out of range");
  std::vector<int> a;
  for (int j = 0; j <= d + 1; ++j) a.push_back(j <= d + 1 - i ? j : j - 1);
  return a;
}

template <class T>
T delta_left(const T& x) {
  if (x <= T(1) / 2) return T(0);
  return T(2 * x - 1);
}

template <class T>
T delta_right(const T& x) {
  if (x <= T(1) / 2) return T(2 * x);
  return T(1);
}

template <class T>
T psi(const T& s, const T& x, const T& y) {
  return T((1 - s) * x + s * y);
}

template <class T>
T phi(const T& s, const T& x) {
  const T corner = T(2 - s) / 2;
  if (x <= corner) return T(2 * x / (2 - s));
  return T(1);
}

namespace {

template <class T>
void require_point(const BasicSimplexPoint<T>& p) {
  if (!is_valid(p)) throw ValidationError("point is not a monotone chain in [0,1]");
}

template <class T>
BasicSimplexPoint<T> map_coords(const BasicSimplexPoint<T>& p, const std::function<T(const T&)>& f) {
  BasicSimplexPoint<T> q;
  for (const auto& v : p.x) q.x.push_back(f(v));
  return q;
}

}  // namespace

template <class T>
PointTuple<T> eval_generator(Generator kind, const T& s, const PointTuple<T>& in) {
  if (s < 0 || s > 1) throw ValidationError("parameter outside [0,1]");
  Vertex v;
  v.kind = kind;
  if (static_cast<int>(in.size()) != in_arity(v) && kind != Generator::Unit)
    throw ValidationError("wrong number of points for the generator");
  for (const auto& p : in) require_point(p);
  switch (kind) {
    case Generator::Counit: return {};
    case Generator::Coproduct:
      return {map_coords<T>(in[0], [](const T& x) { return delta_left(x); }),
              map_coords<T>(in[0], [](const T& x) { return delta_right(x); })};
    case Generator::Product: {
      if (in[0].dim() != in[1].dim()) throw ValidationError("points of different dimension");
      BasicSimplexPoint<T> q;
      for (std::size_t k = 0; k < in[0].x.size(); ++k) q.x.push_back(psi(s, in[0].x[k], in[1].x[k]));
      return {q};
    }
    case Generator::CounitHomotopy: return {map_coords<T>(in[0], [&](const T& x) { return phi(s, x); })};
    case Generator::Unit: return in;
  }
  throw InvariantError("unknown generator");
}

template <class T>
PointTuple<T> eval_term(const GraphTerm& g0, const PointTuple<T>& in) {
  if (static_cast<int>(in.size()) != g0.inputs()) throw ValidationError("point tuple length does not match the graph's inputs");
  for (const auto& p : in) {
    require_point(p);
    if (p.dim() != in[0].dim()) throw ValidationError("points of different dimension");
  }
  require_valid(g0);
  const GraphTerm g = absorb_equivalences(g0);
  const Incidence inc = incidence(g);
  std::vector<std::optional<BasicSimplexPoint<T>>> val(g.edges().size());
  for (int i = 0; i < g.inputs(); ++i) val[static_cast<std::size_t>(inc.input_port[static_cast<std::size_t>(i)])] = in[static_cast<std::size_t>(i)];
  for (int v : topological_order(g)) {
    const Vertex& x = g.vertices()[static_cast<std::size_t>(v)];
    PointTuple<T> args;
    for (int e : inc.in[static_cast<std::size_t>(v)]) args.push_back(*val[static_cast<std::size_t>(e)]);
    const T s = x.params.empty() ? T(0) : scalar_from<T>(x.params[0]);
    PointTuple<T> res = eval_generator(x.kind, s, args);
    const auto& outs = inc.out[static_cast<std::size_t>(v)];
    for (std::size_t k = 0; k < outs.size(); ++k) {
      if (!is_valid(res[k])) throw InvariantError("generator produced a non-monotone point");
      val[static_cast<std::size_t>(outs[k])] = std::move(res[k]);
    }
  }
  PointTuple<T> out;
  for (int e : inc.output_port) out.push_back(*val[static_cast<std::size_t>(e)]);
  return out;
}

#define EINF_INSTANTIATE(T)                                                                         \
  template bool is_valid(const BasicSimplexPoint<T>&);                                              \
  template int skeleton_level(const BasicSimplexPoint<T>&);                                         \
  template int skeleton_level(const PointTuple<T>&);                                                \
  template BasicSimplexPoint<T> coface(int, const BasicSimplexPoint<T>&);                           \
  template BasicSimplexPoint<T> codegeneracy(int, const BasicSimplexPoint<T>&);                     \
  template BasicSimplexPoint<T> vertex_point<T>(int, int);                                          \
  template std::vector<T> barycentric(const BasicSimplexPoint<T>&);                                 \
  template BasicSimplexPoint<T> from_barycentric(const std::vector<T>&);                            \
  template Face support(const BasicSimplexPoint<T>&);                                               \
  template BasicSimplexPoint<T> push_forward(const BasicSimplexPoint<T>&, const std::vector<int>&, int); \
  template T delta_left(const T&);                                                                  \
  template T delta_right(const T&);                                                                 \
  template T psi(const T&, const T&, const T&);                                                     \
  template T phi(const T&, const T&);                                                               \
  template PointTuple<T> eval_generator(Generator, const T&, const PointTuple<T>&);                 \
  template PointTuple<T> eval_term(const GraphTerm&, const PointTuple<T>&);

EINF_INSTANTIATE(Rational)
EINF_INSTANTIATE(double)
#undef EINF_INSTANTIATE

namespace {

Rational random_fraction(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den(1, 97);
  const int q = den(rng);
  std::uniform_int_distribution<int> num(0, q);
  return fraction(num(rng), q);
}

Rational random_coordinate(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 9);
  switch (pick(rng)) {
    case 0: return 0;
    case 1: return 1;
    case 2: return Rational(1, 2);
    case 3: {
      std::uniform_int_distribution<int> k(0, 4);
      return fraction(k(rng), 4);
    }
    default: return random_fraction(rng);
  }
}

}  // namespace

SimplexPoint random_point(int d, std::mt19937_64& rng) {
  SimplexPoint p;
  for (int k = 0; k < d; ++k) p.x.push_back(random_coordinate(rng));
  std::sort(p.x.begin(), p.x.end());
  return p;
}

FloatPoint to_float(const SimplexPoint& p) {
  FloatPoint q;
  for (const auto& v : p.x) q.x.push_back(v.get_d());
  return q;
}

Rational random_parameter(std::mt19937_64& rng) { return random_coordinate(rng); }

std::string to_string(const SimplexPoint& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.x.size(); ++k) s += (k ? ", " : "") + to_string(p.x[k]);
  return s + ")";
}

std::string to_string(const PointTuple<Rational>& ps) {
  std::string s;
  for (std::size_t k = 0; k < ps.size(); ++k) s += (k ? ", " : "") + to_string(ps[k]);
  return s;
}

SimplexPoint parse_point(const std::string& text) {
  std::string t = text;
  std::replace(t.begin(), t.end(), '(', ' ');
  std::replace(t.begin(), t.end(), ')', ' ');
  SimplexPoint p;
  std::istringstream is(t);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    if (tok.empty()) {
      if (p.x.empty() && is.eof()) break;
      throw ParseError("empty coordinate in point");
    }
    p.x.push_back(parse_rational(tok));
  }
  if (!is_valid(p)) throw ParseError("point is not a monotone chain in [0,1]: " + text);
  return p;
}

CheckReport check_cellular(const PointMap& f, int inputs, int d, long samples, std::mt19937_64& rng, int extra) {
  CheckReport r;
  for (long k = 0; k < samples; ++k) {
    PointTuple<Rational> in;
    for (int i = 0; i < inputs; ++i) in.push_back(random_point(d, rng));
    const auto out = f(in);
    ++r.samples;
    if (skeleton_level(out) > skeleton_level(in) + extra) r.fail(to_string(in) + " -> " + to_string(out));
  }
  return r;
}

CheckReport check_cellular(const GraphTerm& g, int d, long samples, std::mt19937_64& rng) {
  return check_cellular([&](const PointTuple<Rational>& in) { return eval_term(g, in); }, g.inputs(), d, samples, rng,
                        parameter_cell_dimension(g));
}

int parameter_cell_dimension(const GraphTerm& g) {
  int k = 0;
  for (const auto& v : g.vertices())
    for (const auto& s : v.params) k += (s != 0 && s != 1) ? 1 : 0;
  return k;
}

namespace {

template <class T>
BasicSimplexPoint<T> apply_op(Cosimplicial op, int index, const BasicSimplexPoint<T>& p) {
  return op == Cosimplicial::Coface ? coface(index, p) : codegeneracy(index, p);
}

template <class T>
bool close(const PointTuple<T>& a, const PointTuple<T>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].dim() != b[i].dim()) return false;
    for (std::size_t k = 0; k < a[i].x.size(); ++k) {
      if constexpr (std::is_same_v<T, double>) {
        if (std::abs(a[i].x[k] - b[i].x[k]) > tol) return false;
      } else {
        if (a[i].x[k] != b[i].x[k]) return false;
      }
    }
  }
  return true;
}

template <class T>
bool natural_at(const GraphTerm& g, Cosimplicial op, int index, const PointTuple<T>& x, double tol) {
  PointTuple<T> moved;
  for (const auto& p : x) moved.push_back(apply_op(op, index, p));
  const auto lhs = eval_term(g, moved);
  PointTuple<T> rhs;
  for (const auto& p : eval_term(g, x)) rhs.push_back(apply_op(op, index, p));
  return close(lhs, rhs, tol);
}

}  // namespace

CheckReport check_naturality(const GraphTerm& g, Cosimplicial op, int index, int d, long samples,
                             std::mt19937_64& rng, bool float_mode, double tolerance) {
  const int src = op == Cosimplicial::Coface ? d : d + 1;
  if (op == Cosimplicial::Coface ? (index < 0 || index > d + 1) : (index < 1 || index > d + 1))
    throw ValidationError("cosimplicial index out of range");
  CheckReport r;
  for (long k = 0; k < samples; ++k) {
    PointTuple<Rational> x;
    for (int i = 0; i < g.inputs(); ++i) x.push_back(random_point(src, rng));
    ++r.samples;
    bool ok;
    if (float_mode) {
      PointTuple<double> xf;
      for (const auto& p : x) xf.push_back(to_float(p));
      ok = natural_at(g, op, index, xf, tolerance);
    } else {
      ok = natural_at(g, op, index, x, 0.0);
    }
    if (!ok) r.fail(to_string(x));
  }
  return r;
}

std::vector<Tensor> face_action(Generator kind, const Tensor& faces) {
  Vertex v;
  v.kind = kind;
  if (kind != Generator::Unit && static_cast<int>(faces.size()) != in_arity(v))
    throw ValidationError("wrong number of faces for the generator");
  switch (kind) {
    case Generator::Counit: return {Tensor{}};
    case Generator::Coproduct: {
      const Face& f = faces[0];
      std::vector<Tensor> out;
      for (std::size_t i = 0; i < f.size(); ++i)
        out.push_back({Face(f.begin(), f.begin() + static_cast<long>(i) + 1), Face(f.begin() + static_cast<long>(i), f.end())});
      return out;
    }
    case Generator::Product: {
      Face u;
      std::set_union(faces[0].begin(), faces[0].end(), faces[1].begin(), faces[1].end(), std::back_inserter(u));
      return {Tensor{u}};
    }
    case Generator::CounitHomotopy: return {faces};
    case Generator::Unit: return {faces};
  }
  throw InvariantError("unknown generator");
}

namespace {

SimplexPoint interior_point(const Face& f, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> w(1, 50);
  std::vector<Rational> t(static_cast<std::size_t>(d) + 1, Rational(0));
  Rational total = 0;
  for (int v : f) {
    t[static_cast<std::size_t>(v)] = w(rng);
    total += t[static_cast<std::size_t>(v)];
  }
  for (auto& x : t) x /= total;
  return from_barycentric(t);
}

bool sub(const Face& a, const Face& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

CheckReport check_face_action_numeric(Generator kind, const Tensor& faces, int d, long samples,
                                      std::mt19937_64& rng) {
  const auto predicted = face_action(kind, faces);
  CheckReport r;
  for (long k = 0; k < samples; ++k) {
    PointTuple<Rational> in;
    for (const auto& f : faces) in.push_back(interior_point(f, d, rng));
    const auto out = eval_generator(kind, random_parameter(rng), in);
    ++r.samples;
    if (out.empty()) continue;  // ε lands on Δ^0
    bool found = false;
    for (const auto& t : predicted) {
      if (t.size() != out.size()) continue;
      bool all = true;
      for (std::size_t j = 0; j < t.size() && all; ++j) all = sub(support(out[j]), t[j]);
      if (all) found = true;
    }
    if (!found) r.fail(to_string(in) + " -> " + to_string(out));
  }
  return r;
}

Face product_grid_cover(const Face& a, const Face& b, int d, int resolution) {
  auto barycenter = [d](const Face& f) {
    std::vector<Rational> t(static_cast<std::size_t>(d) + 1, Rational(0));
    for (int v : f) t[static_cast<std::size_t>(v)] = Rational(1, static_cast<long>(f.size()));
    return from_barycentric(t);
  };
  const SimplexPoint x = barycenter(a), y = barycenter(b);
  std::set<int> cover;
  for (int k = 0; k <= resolution; ++k) {
    const auto out = eval_generator(Generator::Product, fraction(k, resolution), PointTuple<Rational>{x, y});
    for (int v : support(out[0])) cover.insert(v);
  }
  return Face(cover.begin(), cover.end());
}

}  // namespace einf
