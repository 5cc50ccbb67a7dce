#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "einf/permutation.hpp"
#include "einf/rational.hpp"

namespace einf {

enum class Generator : std::uint8_t {
  Counit,          // ε  (1,0)
  Coproduct,       // Δ  (1,2)
  Product,         // μ_s (2,1), one parameter
  CounitHomotopy,  // φ_s (1,1), one parameter
  Unit,            // η(1) on k strands, (k,k)
};

const char* generator_name(Generator g);
int generator_dimension(Generator g);

struct Vertex {
  Generator kind = Generator::Unit;
  std::vector<Rational> params;
  int unit_arity = 1;  // only read for Generator::Unit
  // Slot decorations: the edge wired at slot k feeds generator slot perm(k).
  // Empty means identity.
  Permutation in_perm;
  Permutation out_perm;
};

int in_arity(const Vertex& v);
int out_arity(const Vertex& v);

inline constexpr int kPort = -1;

// vertex == kPort means an external port; slot is then the port index.
struct Endpoint {
  int vertex = kPort;
  int slot = 0;
  bool is_port() const { return vertex == kPort; }
  auto operator<=>(const Endpoint&) const = default;
};

inline Endpoint port(int i) { return {kPort, i}; }
inline Endpoint slot(int v, int k) { return {v, k}; }

struct Edge {
  Endpoint from;  // input port or vertex output slot
  Endpoint to;    // output port or vertex input slot
};

class GraphTerm {
 public:
  GraphTerm() = default;
  GraphTerm(int n, int m, std::vector<Vertex> vertices, std::vector<Edge> edges)
      : n_(n), m_(m), vertices_(std::move(vertices)), edges_(std::move(edges)) {}

  int inputs() const { return n_; }
  int outputs() const { return m_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

// Edge ids per slot and port; built once per traversal. Assumes a valid graph.
struct Incidence {
  std::vector<std::vector<int>> in;   // in[v][k]  edge into slot k of v
  std::vector<std::vector<int>> out;  // out[v][k] edge out of slot k of v
  std::vector<int> input_port;        // edge leaving input port i
  std::vector<int> output_port;       // edge entering output port j
};
Incidence incidence(const GraphTerm& g);

enum class ViolationKind {
  Cycle,
  ArityMismatch,
  DanglingSlot,
  DuplicateEndpoint,
  BadPort,
  BadParameter,
  ForbiddenGenerator,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(ViolationKind k) const;
  std::string summary() const;
};

ValidationReport validate(const GraphTerm& g);
// Throws ValidationError with the report summary.
void require_valid(const GraphTerm& g);

// Kahn order, smallest index first among ready vertices. Throws on cycles.
std::vector<int> topological_order(const GraphTerm& g);

GraphTerm unit(int n);
GraphTerm single_vertex(const Vertex& v);
// Input i wired to output sigma(i).
GraphTerm permutation_term(const Permutation& sigma);
GraphTerm swap_term();

GraphTerm horizontal_compose(const std::vector<GraphTerm>& gs);
GraphTerm horizontal_compose(const GraphTerm& a, const GraphTerm& b);
GraphTerm vertical_compose(const GraphTerm& top, const GraphTerm& bottom);

// permutation_term(sigma) ; g   and   g ; permutation_term(tau)
GraphTerm permute_inputs(const GraphTerm& g, const Permutation& sigma);
GraphTerm permute_outputs(const GraphTerm& g, const Permutation& tau);

// Replace vertex v by h (same biarity as v); the rest is reindexed.
GraphTerm substitute_vertex(const GraphTerm& g, int v, const GraphTerm& h);
// Drop the listed vertices' bookkeeping: compacts indices, keeps edges.
GraphTerm remove_vertices(int n, int m, const std::vector<Vertex>& vertices,
                          const std::vector<Edge>& edges, const std::vector<char>& dead_vertex);

GraphTerm absorb_equivalences(const GraphTerm& g);

// Labeling-invariant string; equal iff isomorphic as labeled decorated graphs.
std::string canonical_serialization(const GraphTerm& g);
bool iso_equal(const GraphTerm& a, const GraphTerm& b);

int count_kind(const GraphTerm& g, Generator k);

}  // namespace einf
