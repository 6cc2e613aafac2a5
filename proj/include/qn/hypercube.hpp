#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace qn {

// Dimensions above this would overflow the materialized edge tables.
constexpr int kMaxDim = 30;

enum class Color : uint8_t { blue = 0, red = 1 };

inline Color flip_color(Color c) { return c == Color::red ? Color::blue : Color::red; }

// Vertex of Q_n as a bit-vector. Coordinate v_1 is the most significant of the
// low `dim` bits, so lexicographic order on coordinate sequences is numeric
// order on `bits`.
struct Vertex {
  uint32_t bits = 0;
  int dim = 0;

  bool operator==(const Vertex& o) const { return bits == o.bits && dim == o.dim; }
  bool operator!=(const Vertex& o) const { return !(*this == o); }
  bool operator<(const Vertex& o) const { return bits < o.bits; }  // same dim assumed
};

Vertex make_vertex(uint32_t bits, int dim);
Vertex antipodal(Vertex v);
int distance(Vertex u, Vertex v);
bool adjacent(Vertex u, Vertex v);
// 1-based coordinate access, coordinate 1 = MSB.
int coord(Vertex v, int i);
// Flip coordinate `axis` (1-based).
Vertex flip(Vertex v, int axis);
int popcount(Vertex v);

// Undirected edge in canonical form: lo < hi, differing exactly in `axis`.
struct Edge {
  Vertex lo, hi;
  int axis = 0;

  bool operator==(const Edge& o) const { return lo == o.lo && axis == o.axis; }
  bool operator!=(const Edge& o) const { return !(*this == o); }
};

Edge make_edge(Vertex u, Vertex v);
Edge antipodal_edge(const Edge& e);

// Hyperoctahedral element S_{perm,flips}: (S(v))_i = v_{perm(i)} xor flips(i).
struct Symmetry {
  int dim = 0;
  std::vector<int> perm;  // perm[i-1] = pi(i), values in [1, dim]
  uint32_t flips = 0;     // flip mask in vertex bit layout

  Vertex operator()(Vertex v) const;
  Edge operator()(const Edge& e) const;
};

Symmetry identity_symmetry(int n);
Symmetry inverse(const Symmetry& s);
// (compose(a, b))(v) = a(b(v)).
Symmetry compose(const Symmetry& a, const Symmetry& b);
// All S_{pi,f} with pi a transposition and at most one flip: C(n,2)*(n+1)
// elements, in a fixed deterministic order. When `identity_perm_flips` is set
// the single-flip symmetries with identity pi are appended as well (the group
// they generate is the same; exposed for experimentation).
std::vector<Symmetry> generating_symmetries(int n, bool identity_perm_flips = false);
// Every group element, n! * 2^n of them. Intended for small n (quotients).
std::vector<Symmetry> all_symmetries(int n);

// Canonical edge order: vertices in lex order, and for each vertex its not-yet-
// listed incident edges (those where it is the lo endpoint) by ascending axis.
// Equivalently: edges sorted by (lo, axis). The first n entries are the edges
// at the all-zero vertex.
struct EdgeOrdering {
  int dim = 0;
  std::vector<Edge> sequence;   // canonical index -> edge
  std::vector<int> index;       // lo.bits * dim + (axis-1) -> canonical index

  int size() const { return (int)sequence.size(); }
  int index_of(const Edge& e) const { return index[(size_t)e.lo.bits * dim + e.axis - 1]; }
};

EdgeOrdering canonical_edge_ordering(int n);
// Cached per-dimension instance (thread-safe after first use per n).
const EdgeOrdering& edge_ordering(int n);

// Total 2-coloring of E(Q_n), indexed by canonical edge index.
struct Coloring {
  int dim = 0;
  std::vector<uint8_t> colors;

  Color at(int edge_index) const { return (Color)colors[edge_index]; }
  Color at(const Edge& e) const { return at(edge_ordering(dim).index_of(e)); }
  Color at(Vertex u, Vertex v) const { return at(make_edge(u, v)); }
  void set(int edge_index, Color c) { colors[edge_index] = (uint8_t)c; }
  void set(const Edge& e, Color c) { set(edge_ordering(dim).index_of(e), c); }
  bool is_antipodal() const;

  bool operator==(const Coloring& o) const { return dim == o.dim && colors == o.colors; }
};

Coloring uniform_coloring(int n, Color c);
// Low bit of `mask` colors edge 0; usable while edge count <= 64 (n <= 5).
Coloring coloring_from_mask(int n, uint64_t mask);
// e -> c(s(e)).
Coloring pullback(const Coloring& c, const Symmetry& s);

// Text format: header "qn-coloring v1 dim=<n>", then one 'r'/'b' line per edge
// in canonical order.
void write_coloring(const Coloring& c, std::ostream& os);
Coloring read_coloring(std::istream& is);

// k-dimensional sub-hypercube: base vertex (zero on the free axes) plus the
// sorted free-axis set. Local coordinate j maps to parent coordinate axes[j-1].
struct SubCube {
  Vertex base;
  std::vector<int> axes;

  int dim() const { return (int)axes.size(); }
  Vertex embed(uint32_t local_bits) const;
  Edge embed_edge(const Edge& local) const;
};

std::vector<SubCube> sub_hypercubes(int n, int k);

}  // namespace qn
