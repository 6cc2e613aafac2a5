#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "qn/hypercube.hpp"

using namespace qn;

TEST_CASE("vertex basics") {
  Vertex v = make_vertex(0b0110, 4);
  CHECK(coord(v, 1) == 0);
  CHECK(coord(v, 2) == 1);
  CHECK(coord(v, 3) == 1);
  CHECK(coord(v, 4) == 0);
  CHECK(popcount(v) == 2);
  CHECK(antipodal(v).bits == 0b1001);
  CHECK(distance(v, antipodal(v)) == 4);
  CHECK(flip(v, 1).bits == 0b1110);
  CHECK(flip(v, 4).bits == 0b0111);
  CHECK(adjacent(v, flip(v, 2)));
  CHECK(!adjacent(v, v));
  CHECK(!adjacent(v, flip(flip(v, 1), 2)));
}

TEST_CASE("lex order is numeric order") {
  // v_1 is the most significant bit, so comparing bit patterns compares
  // coordinate sequences lexicographically.
  Vertex a = make_vertex(0b011, 3), b = make_vertex(0b100, 3);
  CHECK(a < b);
  CHECK(coord(a, 1) == 0);
  CHECK(coord(b, 1) == 1);
}

TEST_CASE("edges are canonical") {
  Vertex u = make_vertex(0b101, 3);
  Edge e = make_edge(u, flip(u, 2));
  CHECK(e.lo.bits == 0b101);
  CHECK(e.hi.bits == 0b111);
  CHECK(e.axis == 2);
  CHECK(make_edge(e.hi, e.lo) == e);
  Edge a = antipodal_edge(e);
  CHECK(a.lo.bits == 0b000);
  CHECK(a.hi.bits == 0b010);
  CHECK(a.axis == 2);
  CHECK(antipodal_edge(a) == e);
}

TEST_CASE("canonical edge ordering") {
  for (int n = 2; n <= 6; ++n) {
    const EdgeOrdering& ord = edge_ordering(n);
    CHECK(ord.size() == n * (1 << (n - 1)));
    // First n entries: the edges at the all-zero vertex, ascending axis.
    for (int i = 0; i < n; ++i) {
      CHECK(ord.sequence[i].lo.bits == 0);
      CHECK(ord.sequence[i].axis == i + 1);
    }
    // Sorted by (lo, axis), no duplicates, index_of round-trips.
    for (int i = 0; i < ord.size(); ++i) {
      CHECK(ord.index_of(ord.sequence[i]) == i);
      if (i > 0) {
        const Edge &p = ord.sequence[i - 1], &e = ord.sequence[i];
        CHECK((p.lo.bits < e.lo.bits ||
               (p.lo.bits == e.lo.bits && p.axis < e.axis)));
      }
    }
  }
}

TEST_CASE("symmetry action") {
  int n = 4;
  auto gens = generating_symmetries(n);
  CHECK((int)gens.size() == n * (n - 1) / 2 * (n + 1));
  for (const Symmetry& s : gens) {
    Symmetry si = inverse(s);
    for (uint32_t b = 0; b < (1u << n); ++b) {
      Vertex v{b, n};
      CHECK(si(s(v)) == v);
      // Graph automorphism: adjacency preserved.
      CHECK(distance(s(v), s(flip(v, 1))) == 1);
    }
    // Edge action is well defined on canonical forms.
    Edge e = make_edge(Vertex{3, n}, Vertex{7, n});
    Edge im = s(e);
    CHECK(im.lo.bits < im.hi.bits);
    CHECK(distance(im.lo, im.hi) == 1);
  }
  // compose(a,b) applies b first.
  Symmetry a = gens[0], b = gens[1];
  Symmetry ab = compose(a, b);
  for (uint32_t v = 0; v < (1u << n); ++v)
    CHECK(ab(Vertex{v, n}) == a(b(Vertex{v, n})));
}

TEST_CASE("full symmetry group") {
  auto all = all_symmetries(3);
  CHECK(all.size() == 6 * 8);
  std::set<std::vector<uint32_t>> images;
  for (const Symmetry& s : all) {
    std::vector<uint32_t> im;
    for (uint32_t v = 0; v < 8; ++v) im.push_back(s(Vertex{v, 3}).bits);
    images.insert(im);
  }
  CHECK(images.size() == 48);  // faithful action
}

TEST_CASE("identity-flip generators appended on request") {
  CHECK(generating_symmetries(4, true).size() == generating_symmetries(4).size() + 4);
}

TEST_CASE("colorings") {
  Coloring c = coloring_from_mask(3, 0b010101010101u);
  CHECK(c.at(0) == Color::red);
  CHECK(c.at(1) == Color::blue);
  CHECK(c.at(2) == Color::red);
  c = uniform_coloring(3, Color::red);
  CHECK(!c.is_antipodal());
  // Antipodal coloring: complement colors across antipodal edge pairs.
  const EdgeOrdering& ord = edge_ordering(3);
  for (int i = 0; i < ord.size(); ++i) {
    const Edge& e = ord.sequence[i];
    c.set(i, e.lo < antipodal_edge(e).lo ? Color::red : Color::blue);
  }
  CHECK(c.is_antipodal());
}

TEST_CASE("pullback composes with the symmetry") {
  Coloring c = coloring_from_mask(3, 0xDB6u);
  for (const Symmetry& s : generating_symmetries(3)) {
    Coloring pc = pullback(c, s);
    const EdgeOrdering& ord = edge_ordering(3);
    for (int i = 0; i < ord.size(); ++i) CHECK(pc.at(i) == c.at(s(ord.sequence[i])));
  }
}

TEST_CASE("coloring io round-trip") {
  Coloring c = coloring_from_mask(4, 0xBEEFCAFEull);
  std::stringstream ss;
  write_coloring(c, ss);
  Coloring back = read_coloring(ss);
  CHECK(back == c);
}

TEST_CASE("sub-hypercubes") {
  auto subs = sub_hypercubes(4, 2);
  CHECK(subs.size() == 6 * 4);  // C(4,2) axis sets * 2^2 bases
  for (const SubCube& s : subs) {
    CHECK(s.dim() == 2);
    // Base is zero on free axes; embedding respects local coordinates.
    for (int j = 1; j <= 2; ++j) CHECK(coord(s.base, s.axes[j - 1]) == 0);
    CHECK(s.embed(0) == s.base);
    CHECK(distance(s.embed(0b01), s.base) == 1);
    CHECK(distance(s.embed(0b11), s.base) == 2);
  }
  // Local MSB-first convention: local coordinate 1 maps to axes[0].
  SubCube sc = subs[0];
  Vertex hi = sc.embed(0b10);
  CHECK(coord(hi, sc.axes[0]) == 1);
  CHECK(coord(hi, sc.axes[1]) == 0);
}
