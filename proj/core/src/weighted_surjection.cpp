#include "einf/weighted_surjection.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "einf/errors.hpp"
#include "json.hpp"

namespace einf {

int SurjectionType::strand_count() const {
  int r = 0;
  for (const auto& b : blocks) r += static_cast<int>(b.size());
  return r;
}

std::vector<int> SurjectionType::output_counts() const {
  std::vector<int> k(static_cast<std::size_t>(m), 0);
  for (const auto& b : blocks)
    for (int j : b) ++k.at(static_cast<std::size_t>(j));
  return k;
}

bool SurjectionType::surjective() const {
  for (int k : output_counts())
    if (k == 0) return false;
  return true;
}

bool SurjectionType::nondegenerate() const {
  for (const auto& b : blocks)
    for (std::size_t t = 1; t < b.size(); ++t)
      if (b[t] == b[t - 1]) return false;
  return true;
}

std::string SurjectionType::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += "|";
    if (blocks[i].empty()) s += "_";
    for (std::size_t t = 0; t < blocks[i].size(); ++t) s += (t ? "," : "") + std::to_string(blocks[i][t] + 1);
  }
  return s + ")";
}

WeightedSurjection::WeightedSurjection(int n, int m, std::vector<std::vector<Strand>> blocks)
    : n_(n), m_(m), blocks_(std::move(blocks)) {
  if (m < 1) throw ValidationError("weighted surjection needs m >= 1");
  if (static_cast<int>(blocks_.size()) != n) throw ValidationError("block count differs from n");
  std::vector<Rational> sum(static_cast<std::size_t>(m), Rational(0));
  for (const auto& b : blocks_)
    for (std::size_t t = 0; t < b.size(); ++t) {
      if (b[t].output < 0 || b[t].output >= m) throw ValidationError("strand output out of range");
      if (b[t].weight <= 0 || b[t].weight > 1) throw ValidationError("strand weight outside (0,1]");
      if (t && b[t].output == b[t - 1].output) throw ValidationError("adjacent strands share an output");
      sum[static_cast<std::size_t>(b[t].output)] += b[t].weight;
    }
  for (int j = 0; j < m; ++j)
    if (sum[static_cast<std::size_t>(j)] != 1)
      throw ValidationError("weights at output " + std::to_string(j + 1) + " sum to " +
                            einf::to_string(sum[static_cast<std::size_t>(j)]));
}

SurjectionType WeightedSurjection::type() const {
  SurjectionType t{n_, m_, {}};
  for (const auto& b : blocks_) {
    t.blocks.emplace_back();
    for (const auto& s : b) t.blocks.back().push_back(s.output);
  }
  return t;
}

int ms_inputs(const MSElement& x) {
  return std::visit([](const auto& v) {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, CounitClass>) return v.n;
    else return v.n();
  }, x);
}

int ms_outputs(const MSElement& x) {
  if (const auto* w = std::get_if<WeightedSurjection>(&x)) return w->m();
  return 0;
}

MSElement canonicalize_blocks(int n, int m, std::vector<std::vector<Strand>> blocks) {
  if (m == 0) return CounitClass{n};
  for (auto& b : blocks) {
    std::vector<Strand> out;
    for (auto& s : b) {
      if (s.weight == 0) continue;
      if (!out.empty() && out.back().output == s.output) out.back().weight += s.weight;
      else out.push_back(std::move(s));
    }
    b = std::move(out);
  }
  return WeightedSurjection(n, m, std::move(blocks));
}

WeightedSurjection with_uniform_weights(const SurjectionType& t) {
  auto k = t.output_counts();
  std::vector<std::vector<Strand>> blocks;
  for (const auto& b : t.blocks) {
    blocks.emplace_back();
    for (int j : b) blocks.back().push_back({j, Rational(1, k[static_cast<std::size_t>(j)])});
  }
  return WeightedSurjection(t.n, t.m, std::move(blocks));
}

GraphTerm canonical_graph(const WeightedSurjection& x) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  auto add = [&](Generator k, std::vector<Rational> ps = {}) {
    Vertex v;
    v.kind = k;
    v.params = std::move(ps);
    vs.push_back(std::move(v));
    return static_cast<int>(vs.size()) - 1;
  };
  // strand sources, in total order
  std::vector<Endpoint> src;
  for (int i = 0; i < x.n(); ++i) {
    const auto& b = x.blocks()[static_cast<std::size_t>(i)];
    const int r = static_cast<int>(b.size());
    if (r == 0) {
      es.push_back({port(i), slot(add(Generator::Counit), 0)});
      continue;
    }
    if (r == 1) {
      src.push_back(port(i));
      continue;
    }
    std::vector<int> d(static_cast<std::size_t>(r - 1));
    for (auto& id : d) id = add(Generator::Coproduct);
    es.push_back({port(i), slot(d[0], 0)});
    for (int t = 0; t + 1 < r - 1; ++t) es.push_back({slot(d[static_cast<std::size_t>(t)], 0), slot(d[static_cast<std::size_t>(t + 1)], 0)});
    // leaf 0 hangs off the deepest Δ's left slot, leaf l >= 1 off D_{r-l}'s right slot
    src.push_back(slot(d.back(), 0));
    for (int l = 1; l < r; ++l) src.push_back(slot(d[static_cast<std::size_t>(r - l - 1)], 1));
  }
  // strand targets
  std::vector<std::vector<int>> at(static_cast<std::size_t>(x.m()));
  std::vector<Rational> w;
  for (const auto& b : x.blocks())
    for (const auto& s : b) {
      at[static_cast<std::size_t>(s.output)].push_back(static_cast<int>(w.size()));
      w.push_back(s.weight);
    }
  std::vector<Endpoint> dst(w.size());
  for (int j = 0; j < x.m(); ++j) {
    const auto& ts = at[static_cast<std::size_t>(j)];
    const int k = static_cast<int>(ts.size());
    if (k == 1) {
      dst[static_cast<std::size_t>(ts[0])] = port(j);
      continue;
    }
    // M_1 is the bottom vertex; M_t joins leaves 0..k-t-1 (left) with leaf k-t (right)
    std::vector<int> mu(static_cast<std::size_t>(k - 1));
    Rational prefix = 0;
    std::vector<Rational> pre(static_cast<std::size_t>(k + 1), Rational(0));
    for (int l = 0; l < k; ++l) pre[static_cast<std::size_t>(l + 1)] = pre[static_cast<std::size_t>(l)] + w[static_cast<std::size_t>(ts[static_cast<std::size_t>(l)])];
    for (int t = 1; t <= k - 1; ++t) {
      const Rational right = w[static_cast<std::size_t>(ts[static_cast<std::size_t>(k - t)])];
      mu[static_cast<std::size_t>(t - 1)] = add(Generator::Product, {right / pre[static_cast<std::size_t>(k - t + 1)]});
    }
    es.push_back({slot(mu[0], 0), port(j)});
    for (int t = 1; t + 1 <= k - 1; ++t) es.push_back({slot(mu[static_cast<std::size_t>(t)], 0), slot(mu[static_cast<std::size_t>(t - 1)], 0)});
    dst[static_cast<std::size_t>(ts[0])] = slot(mu.back(), 0);
    for (int l = 1; l < k; ++l) dst[static_cast<std::size_t>(ts[static_cast<std::size_t>(l)])] = slot(mu[static_cast<std::size_t>(k - l - 1)], 1);
  }
  for (std::size_t t = 0; t < w.size(); ++t) es.push_back({src[t], dst[t]});
  return GraphTerm(x.n(), x.m(), std::move(vs), std::move(es));
}

GraphTerm canonical_graph(const MSElement& x) {
  if (const auto* w = std::get_if<WeightedSurjection>(&x)) return canonical_graph(*w);
  const int n = std::get<CounitClass>(x).n;
  std::vector<Vertex> vs(static_cast<std::size_t>(n));
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    vs[static_cast<std::size_t>(i)].kind = Generator::Counit;
    es.push_back({port(i), slot(i, 0)});
  }
  return GraphTerm(n, 0, std::move(vs), std::move(es));
}

GraphTerm canonical_graph(const SurjectionType& t) { return canonical_graph(with_uniform_weights(t)); }

std::string to_text(const MSElement& x) {
  if (const auto* c = std::get_if<CounitClass>(&x)) return "counit n=" + std::to_string(c->n);
  const auto& w = std::get<WeightedSurjection>(x);
  std::ostringstream os;
  os << "surj n=" << w.n() << " m=" << w.m() << " :";
  for (std::size_t i = 0; i < w.blocks().size(); ++i) {
    if (i) os << " ;";
    if (w.blocks()[i].empty()) os << " _";
    for (const auto& s : w.blocks()[i]) os << " " << s.output + 1 << ":" << to_string(s.weight);
  }
  return os.str();
}

namespace {

int read_count(std::istringstream& is, const std::string& key) {
  std::string tok;
  if (!(is >> tok) || tok.rfind(key + "=", 0) != 0) throw ParseError("normal form: expected " + key + "=");
  try {
    return std::stoi(tok.substr(key.size() + 1));
  } catch (const std::exception&) {
    throw ParseError("normal form: bad count '" + tok + "'");
  }
}

}  // namespace

SurjectionType parse_type(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw ParseError("surjection type must look like (1,2|2)");
  t = t.substr(1, t.size() - 2);
  SurjectionType out;
  std::stringstream blocks(t);
  std::string block;
  int m = 0;
  while (std::getline(blocks, block, '|')) {
    out.blocks.emplace_back();
    if (block == "_") continue;
    std::stringstream labels(block);
    std::string label;
    while (std::getline(labels, label, ',')) {
      int v = 0;
      try {
        std::size_t used = 0;
        v = std::stoi(label, &used);
        if (used != label.size()) throw std::invalid_argument(label);
      } catch (const std::exception&) {
        throw ParseError("bad label '" + label + "' in surjection type");
      }
      if (v < 1) throw ParseError("labels start at 1");
      out.blocks.back().push_back(v - 1);
      m = std::max(m, v);
    }
  }
  if (!t.empty() && t.back() == '|') out.blocks.emplace_back();
  out.n = static_cast<int>(out.blocks.size());
  out.m = m;
  const auto counts = out.output_counts();
  for (int j = 0; j < m; ++j)
    if (counts[static_cast<std::size_t>(j)] == 0) throw ParseError("surjection type misses output " + std::to_string(j + 1));
  return out;
}

MSElement parse_ms(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string head;
  is >> head;
  if (head == "counit") {
    const int n = read_count(is, "n");
    std::string rest;
    if (is >> rest) throw ParseError("normal form: trailing '" + rest + "'");
    return CounitClass{n};
  }
  if (head != "surj") throw ParseError("normal form must start with 'surj' or 'counit'");
  const int n = read_count(is, "n");
  const int m = read_count(is, "m");
  std::string tok;
  if (!(is >> tok) || tok != ":") throw ParseError("normal form: expected ':'");
  std::vector<std::vector<Strand>> blocks(1);
  while (is >> tok) {
    if (tok == ";") {
      blocks.emplace_back();
      continue;
    }
    if (tok == "_") continue;
    const auto slash = tok.find(':');
    if (slash == std::string::npos) throw ParseError("normal form: strand '" + tok + "' lacks ':'");
    Strand s;
    try {
      s.output = std::stoi(tok.substr(0, slash)) - 1;
    } catch (const std::exception&) {
      throw ParseError("normal form: bad output in '" + tok + "'");
    }
    s.weight = parse_rational(tok.substr(slash + 1));
    blocks.back().push_back(std::move(s));
  }
  if (n == 0 && blocks.size() == 1 && blocks[0].empty()) blocks.clear();
  try {
    return WeightedSurjection(n, m, std::move(blocks));
  } catch (const ValidationError& e) {
    throw ParseError(std::string("normal form: ") + e.what());
  }
}

std::string to_json(const MSElement& x, int indent) {
  nlohmann::json j;
  if (const auto* c = std::get_if<CounitClass>(&x)) {
    j["counit"] = true;
    j["n"] = c->n;
    j["m"] = 0;
    return j.dump(indent);
  }
  const auto& w = std::get<WeightedSurjection>(x);
  j["n"] = w.n();
  j["m"] = w.m();
  j["degree"] = w.degree();
  auto blocks = nlohmann::json::array();
  for (const auto& b : w.blocks()) {
    auto jb = nlohmann::json::array();
    for (const auto& s : b) jb.push_back({{"output", s.output + 1}, {"weight", to_string(s.weight)}});
    blocks.push_back(jb);
  }
  j["blocks"] = blocks;
  return j.dump(indent);
}

MSElement ms_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.value("counit", false)) return CounitClass{j.at("n").get<int>()};
    std::vector<std::vector<Strand>> blocks;
    for (const auto& jb : j.at("blocks")) {
      blocks.emplace_back();
      for (const auto& js : jb)
        blocks.back().push_back({js.at("output").get<int>() - 1, parse_rational(js.at("weight").get<std::string>())});
    }
    return WeightedSurjection(j.at("n").get<int>(), j.at("m").get<int>(), std::move(blocks));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("normal form JSON: ") + e.what());
  } catch (const ValidationError& e) {
    throw ParseError(std::string("normal form JSON: ") + e.what());
  }
}

MSElement horizontal(const MSElement& a, const MSElement& b) {
  const int n = ms_inputs(a) + ms_inputs(b);
  const int ma = ms_outputs(a), m = ma + ms_outputs(b);
  if (m == 0) return CounitClass{n};
  std::vector<std::vector<Strand>> blocks;
  auto append = [&](const MSElement& x, int shift) {
    if (const auto* c = std::get_if<CounitClass>(&x)) {
      for (int i = 0; i < c->n; ++i) blocks.emplace_back();
      return;
    }
    for (auto bl : std::get<WeightedSurjection>(x).blocks()) {
      for (auto& s : bl) s.output += shift;
      blocks.push_back(std::move(bl));
    }
  };
  append(a, 0);
  append(b, ma);
  return WeightedSurjection(n, m, std::move(blocks));
}

MSElement ms_permute_inputs(const MSElement& x, const Permutation& sigma) {
  if (static_cast<int>(sigma.size()) != ms_inputs(x)) throw ValidationError("permutation size does not match n");
  if (const auto* c = std::get_if<CounitClass>(&x)) return *c;
  const auto& w = std::get<WeightedSurjection>(x);
  std::vector<std::vector<Strand>> blocks(static_cast<std::size_t>(w.n()));
  for (int i = 0; i < w.n(); ++i) blocks[static_cast<std::size_t>(i)] = w.blocks()[static_cast<std::size_t>(sigma(i))];
  return WeightedSurjection(w.n(), w.m(), std::move(blocks));
}

MSElement ms_permute_outputs(const MSElement& x, const Permutation& tau) {
  if (static_cast<int>(tau.size()) != ms_outputs(x)) throw ValidationError("permutation size does not match m");
  if (const auto* c = std::get_if<CounitClass>(&x)) return *c;
  auto blocks = std::get<WeightedSurjection>(x).blocks();
  for (auto& b : blocks)
    for (auto& s : b) s.output = tau(s.output);
  const int n = static_cast<int>(blocks.size());
  return WeightedSurjection(n, static_cast<int>(tau.size()), std::move(blocks));
}

SurjectionType permute_outputs(const SurjectionType& t, const Permutation& tau) {
  SurjectionType out = t;
  for (auto& b : out.blocks)
    for (int& j : b) j = tau(j);
  return out;
}

SurjectionType permute_inputs(const SurjectionType& t, const Permutation& sigma) {
  SurjectionType out = t;
  for (int i = 0; i < t.n; ++i) out.blocks[static_cast<std::size_t>(i)] = t.blocks[static_cast<std::size_t>(sigma(i))];
  return out;
}

MSElement compose_weighted(const MSElement& top, const MSElement& bottom) {
  const int k = ms_outputs(top);
  if (k != ms_inputs(bottom))
    throw ValidationError("biarity mismatch: top has " + std::to_string(k) + " outputs, bottom has " +
                          std::to_string(ms_inputs(bottom)) + " inputs");
  const int n = ms_inputs(top), m = ms_outputs(bottom);
  if (m == 0) return CounitClass{n};
  // m > 0 forces k > 0 (MS(0,m) is empty), so both are surjections here
  const auto& T = std::get<WeightedSurjection>(top);
  const auto& B = std::get<WeightedSurjection>(bottom);

  // where each top strand sits on its wire: offset of its interval
  std::vector<Rational> offset_on_wire(static_cast<std::size_t>(k), Rational(0));
  std::vector<Rational> bottom_total(static_cast<std::size_t>(k), Rational(0));
  for (int l = 0; l < k; ++l)
    for (const auto& s : B.blocks()[static_cast<std::size_t>(l)]) bottom_total[static_cast<std::size_t>(l)] += s.weight;

  std::vector<std::vector<Strand>> blocks;
  for (const auto& tb : T.blocks()) {
    blocks.emplace_back();
    for (const auto& ts : tb) {
      const auto l = static_cast<std::size_t>(ts.output);
      const Rational scale = bottom_total[l];
      const Rational lo = offset_on_wire[l] * scale;
      const Rational hi = (offset_on_wire[l] + ts.weight) * scale;
      offset_on_wire[l] += ts.weight;
      Rational c = 0;
      for (const auto& bs : B.blocks()[l]) {
        const Rational end = c + bs.weight;
        const Rational a = std::max(lo, c), b = std::min(hi, end);
        if (a < b) blocks.back().push_back({bs.output, b - a});
        c += bs.weight;
      }
    }
  }
  return canonicalize_blocks(n, m, std::move(blocks));
}

std::vector<SurjectionType> enumerate_basis(int n, int m, int degree) {
  std::vector<SurjectionType> out;
  const int r = m + degree;
  if (m < 1 || r < m || n < 1) return out;
  SurjectionType cur{n, m, std::vector<std::vector<int>>(static_cast<std::size_t>(n))};
  std::vector<int> seen(static_cast<std::size_t>(m), 0);
  int covered = 0;
  // choose block sizes lazily: at each step either extend the current block or close it
  std::function<void(int, int)> rec = [&](int block, int left) {
    if (block == n - 1) {
      // last block takes everything that is left
      auto& b = cur.blocks[static_cast<std::size_t>(block)];
      if (left == 0) {
        if (covered == m) out.push_back(cur);
        return;
      }
      for (int j = 0; j < m; ++j) {
        if (!b.empty() && b.back() == j) continue;
        if (m - covered - (seen[static_cast<std::size_t>(j)] ? 0 : 1) > left - 1) continue;
        b.push_back(j);
        if (seen[static_cast<std::size_t>(j)]++ == 0) ++covered;
        rec(block, left - 1);
        if (--seen[static_cast<std::size_t>(j)] == 0) --covered;
        b.pop_back();
      }
      return;
    }
    // close this block now
    rec(block + 1, left);
    if (left == 0) return;
    auto& b = cur.blocks[static_cast<std::size_t>(block)];
    for (int j = 0; j < m; ++j) {
      if (!b.empty() && b.back() == j) continue;
      b.push_back(j);
      if (seen[static_cast<std::size_t>(j)]++ == 0) ++covered;
      rec(block, left - 1);
      if (--seen[static_cast<std::size_t>(j)] == 0) --covered;
      b.pop_back();
    }
  };
  rec(0, r);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace einf
