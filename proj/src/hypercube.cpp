#include "qn/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qn {

Vertex make_vertex(uint32_t bits, int dim) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("bad dimension");
  if (dim < 32 && bits >= (1u << dim)) throw std::invalid_argument("vertex bits out of range");
  return Vertex{bits, dim};
}

Vertex antipodal(Vertex v) {
  uint32_t mask = (v.dim == 32) ? ~0u : ((1u << v.dim) - 1);
  return Vertex{v.bits ^ mask, v.dim};
}

int distance(Vertex u, Vertex v) {
  if (u.dim != v.dim) throw std::invalid_argument("dimension mismatch");
  return std::popcount(u.bits ^ v.bits);
}

bool adjacent(Vertex u, Vertex v) { return distance(u, v) == 1; }

int coord(Vertex v, int i) { return (v.bits >> (v.dim - i)) & 1; }

Vertex flip(Vertex v, int axis) { return Vertex{v.bits ^ (1u << (v.dim - axis)), v.dim}; }

int popcount(Vertex v) { return std::popcount(v.bits); }

Edge make_edge(Vertex u, Vertex v) {
  if (u.dim != v.dim) throw std::invalid_argument("dimension mismatch");
  uint32_t d = u.bits ^ v.bits;
  if (std::popcount(d) != 1) throw std::invalid_argument("vertices not adjacent");
  int axis = u.dim - std::countr_zero(d);
  if (u.bits > v.bits) std::swap(u, v);
  return Edge{u, v, axis};
}

Edge antipodal_edge(const Edge& e) { return make_edge(antipodal(e.lo), antipodal(e.hi)); }

Vertex Symmetry::operator()(Vertex v) const {
  uint32_t out = 0;
  for (int i = 1; i <= dim; ++i)
    out |= (uint32_t)coord(v, perm[i - 1]) << (dim - i);
  return Vertex{out ^ flips, dim};
}

Edge Symmetry::operator()(const Edge& e) const { return make_edge((*this)(e.lo), (*this)(e.hi)); }

Symmetry identity_symmetry(int n) {
  Symmetry s;
  s.dim = n;
  s.perm.resize(n);
  for (int i = 0; i < n; ++i) s.perm[i] = i + 1;
  return s;
}

Symmetry inverse(const Symmetry& s) {
  Symmetry r = identity_symmetry(s.dim);
  for (int i = 1; i <= s.dim; ++i) r.perm[s.perm[i - 1] - 1] = i;
  // f'(i) = f(pi^{-1}(i))
  uint32_t flips = 0;
  for (int i = 1; i <= s.dim; ++i) {
    int pre = r.perm[i - 1];
    if ((s.flips >> (s.dim - pre)) & 1) flips |= 1u << (s.dim - i);
  }
  r.flips = flips;
  return r;
}

Symmetry compose(const Symmetry& a, const Symmetry& b) {
  // (a.b)(v)_i = (b v)_{pi_a(i)} xor f_a(i) = v_{pi_b(pi_a(i))} xor f_b(pi_a(i)) xor f_a(i)
  Symmetry r = identity_symmetry(a.dim);
  for (int i = 1; i <= a.dim; ++i) {
    int j = a.perm[i - 1];
    r.perm[i - 1] = b.perm[j - 1];
    int bit = (((b.flips >> (a.dim - j)) & 1) ^ ((a.flips >> (a.dim - i)) & 1));
    if (bit) r.flips |= 1u << (a.dim - i);
  }
  return r;
}

std::vector<Symmetry> generating_symmetries(int n, bool identity_perm_flips) {
  std::vector<Symmetry> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int fl = 0; fl <= n; ++fl) {  // 0 = no flip, otherwise flip axis fl
        Symmetry s = identity_symmetry(n);
        s.perm[i - 1] = j;
        s.perm[j - 1] = i;
        if (fl > 0) s.flips = 1u << (n - fl);
        out.push_back(std::move(s));
      }
    }
  }
  if (identity_perm_flips) {
    for (int fl = 1; fl <= n; ++fl) {
      Symmetry s = identity_symmetry(n);
      s.flips = 1u << (n - fl);
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Symmetry> all_symmetries(int n) {
  std::vector<Symmetry> out;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  do {
    for (uint32_t f = 0; f < (1u << n); ++f) {
      Symmetry s;
      s.dim = n;
      s.perm = perm;
      s.flips = f;
      out.push_back(std::move(s));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

EdgeOrdering canonical_edge_ordering(int n) {
  if (n < 2 || n > 24) throw std::invalid_argument("edge ordering: dimension out of range");
  EdgeOrdering ord;
  ord.dim = n;
  ord.index.assign(((size_t)1 << n) * n, -1);
  for (uint32_t v = 0; v < (1u << n); ++v) {
    Vertex lo{v, n};
    for (int axis = 1; axis <= n; ++axis) {
      if (coord(lo, axis) != 0) continue;  // lo endpoint iff the axis bit is 0
      Edge e{lo, flip(lo, axis), axis};
      ord.index[(size_t)v * n + axis - 1] = (int)ord.sequence.size();
      ord.sequence.push_back(e);
    }
  }
  return ord;
}

const EdgeOrdering& edge_ordering(int n) {
  static std::mutex mu;
  static std::map<int, EdgeOrdering> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, canonical_edge_ordering(n)).first;
  return it->second;
}

bool Coloring::is_antipodal() const {
  const auto& ord = edge_ordering(dim);
  for (int i = 0; i < ord.size(); ++i)
    if (at(i) == at(ord.index_of(antipodal_edge(ord.sequence[i])))) return false;
  return true;
}

Coloring uniform_coloring(int n, Color c) {
  Coloring col;
  col.dim = n;
  col.colors.assign(edge_ordering(n).size(), (uint8_t)c);
  return col;
}

Coloring coloring_from_mask(int n, uint64_t mask) {
  Coloring col = uniform_coloring(n, Color::blue);
  if (col.colors.size() > 64) throw std::invalid_argument("mask too small for edge set");
  for (size_t i = 0; i < col.colors.size(); ++i) col.colors[i] = (mask >> i) & 1;
  return col;
}

Coloring pullback(const Coloring& c, const Symmetry& s) {
  const auto& ord = edge_ordering(c.dim);
  Coloring out = uniform_coloring(c.dim, Color::blue);
  for (int i = 0; i < ord.size(); ++i) out.set(i, c.at(s(ord.sequence[i])));
  return out;
}

void write_coloring(const Coloring& c, std::ostream& os) {
  os << "qn-coloring v1 dim=" << c.dim << "\n";
  for (uint8_t b : c.colors) os << (b ? 'r' : 'b') << "\n";
}

Coloring read_coloring(std::istream& is) {
  std::string header;
  std::getline(is, header);
  int n = 0;
  if (sscanf(header.c_str(), "qn-coloring v1 dim=%d", &n) != 1)
    throw std::runtime_error("bad coloring header: " + header);
  Coloring c = uniform_coloring(n, Color::blue);
  std::string line;
  for (size_t i = 0; i < c.colors.size(); ++i) {
    if (!std::getline(is, line) || line.empty())
      throw std::runtime_error("truncated coloring file");
    if (line[0] == 'r') c.colors[i] = 1;
    else if (line[0] == 'b') c.colors[i] = 0;
    else throw std::runtime_error("bad color char: " + line);
  }
  return c;
}

Vertex SubCube::embed(uint32_t local_bits) const {
  int k = dim();
  Vertex out = base;
  for (int j = 1; j <= k; ++j)
    if ((local_bits >> (k - j)) & 1) out = flip(out, axes[j - 1]);
  return out;
}

Edge SubCube::embed_edge(const Edge& local) const {
  return make_edge(embed(local.lo.bits), embed(local.hi.bits));
}

std::vector<SubCube> sub_hypercubes(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("sub_hypercubes: bad k");
  std::vector<SubCube> out;
  // All sorted k-subsets of axes, then all base vertices with zeros on them.
  std::vector<int> axes(k);
  for (int i = 0; i < k; ++i) axes[i] = i + 1;
  while (true) {
    uint32_t free_mask = 0;
    for (int a : axes) free_mask |= 1u << (n - a);
    for (uint32_t v = 0; v < (1u << n); ++v) {
      if (v & free_mask) continue;
      out.push_back(SubCube{Vertex{v, n}, axes});
    }
    // next k-combination
    int i = k - 1;
    while (i >= 0 && axes[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++axes[i];
    for (int j = i + 1; j < k; ++j) axes[j] = axes[j - 1] + 1;
  }
  return out;
}

}  // namespace qn
