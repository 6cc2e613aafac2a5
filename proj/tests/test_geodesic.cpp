#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <map>

#include "qn/geodesic.hpp"
#include "qn/oracle.hpp"

using namespace qn;

TEST_CASE("geodesic sampling is uniform, n = 3") {
  // 8 starts * 3! orders = 48 geodesics; chi-square against uniform.
  std::map<std::pair<uint32_t, std::vector<int>>, int> hist;
  const int trials = 60000;
  for (int t = 0; t < trials; ++t) {
    GeodesicPath p = random_antipodal_geodesic(3, 1000 + t);
    REQUIRE(p.axes.size() == 3);
    ++hist[{p.start.bits, p.axes}];
  }
  CHECK(hist.size() == 48);
  double expect = trials / 48.0, chi2 = 0;
  for (auto& [key, cnt] : hist) chi2 += (cnt - expect) * (cnt - expect) / expect;
  // 47 degrees of freedom: mean 47, sd sqrt(94); allow 5 sigma.
  CHECK(chi2 < 47 + 5 * std::sqrt(94.0));
}

TEST_CASE("geodesic path structure") {
  for (int n : {2, 5, 8}) {
    GeodesicPath p = random_antipodal_geodesic(n, 7);
    auto vs = p.vertices();
    REQUIRE((int)vs.size() == n + 1);
    CHECK(vs.front() == p.start);
    CHECK(vs.back() == antipodal(p.start));
    for (int i = 0; i < n; ++i) CHECK(distance(vs[i], vs[i + 1]) == 1);
    // Each axis used exactly once.
    uint32_t used = 0;
    for (int a : p.axes) used |= 1u << (a - 1);
    CHECK(used == (1u << n) - 1);
  }
}

TEST_CASE("whole-path optimization reaches the exact per-vertex minimum") {
  // With chunk length k = n the optimizer solves the whole geodesic, so the
  // change count must equal the exact profile minimum at the start vertex.
  for (uint64_t seed = 0; seed < 30; ++seed) {
    Coloring c = random_coloring(4, seed * 77 + 5);
    GeodesicPath p = random_antipodal_geodesic(4, seed);
    GeodesicPath q = optimize_chunks(p, c, 4);
    CHECK(q.start == p.start);
    CHECK(q.vertices().back() == antipodal(p.start));
    CHECK(color_changes(q, c) == geodesic_change_profile(c, p.start).s);
  }
}

TEST_CASE("chunk optimization never increases changes and preserves endpoints") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    Coloring c = random_coloring(7, seed * 13 + 1);
    GeodesicPath p = random_antipodal_geodesic(7, seed);
    for (int k = 2; k <= 7; ++k) {
      GeodesicPath q = optimize_chunks(p, c, k, seed % 2 == 0);
      CHECK(q.start == p.start);
      auto vs = q.vertices();
      CHECK(vs.back() == antipodal(p.start));
      for (size_t i = 0; i + 1 < vs.size(); ++i) CHECK(distance(vs[i], vs[i + 1]) == 1);
      // Within each chunk the optimizer cannot do worse than the original
      // (boundary changes between chunks are only soft-matched and may grow).
      auto chunk_changes = [&](const GeodesicPath& g, int ch) {
        auto vs = g.vertices();
        int changes = 0;
        for (int i = ch * k + 1; i < (ch + 1) * k; ++i)
          changes += c.at(vs[i - 1], vs[i]) != c.at(vs[i], vs[i + 1]);
        return changes;
      };
      // Chunk boundaries preserved: the set of axes in each chunk is unchanged.
      int chunks = 7 / k;
      for (int ch = 0; ch < chunks; ++ch) {
        CHECK(chunk_changes(q, ch) <= chunk_changes(p, ch));
        uint32_t a = 0, b = 0;
        for (int i = ch * k; i < (ch + 1) * k; ++i) {
          a |= 1u << (p.axes[i] - 1);
          b |= 1u << (q.axes[i] - 1);
        }
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("layer-parity coloring") {
  CHECK(alternating_coloring(4).is_antipodal());
  CHECK(alternating_coloring(6).is_antipodal());
  CHECK(!alternating_coloring(3).is_antipodal());
  CHECK(!alternating_coloring(5).is_antipodal());
  // Edge color depends only on the parity of the static coordinates.
  Coloring c = alternating_coloring(4);
  Vertex u = make_vertex(0b0101, 4);
  CHECK(c.at(u, flip(u, 1)) == Color::blue);  // other coords 1,0,1 -> parity 0
  Vertex w = make_vertex(0b1101, 4);
  CHECK(c.at(w, flip(w, 2)) == Color::blue);  // other coords 1,0,1 -> parity 0
  Vertex x = make_vertex(0b1001, 4);
  CHECK(c.at(x, flip(x, 1)) == Color::red);   // other coords 0,0,1 -> parity 1
  CHECK(c.at(x, flip(x, 3)) == Color::blue);  // other coords 1,0,1 -> parity 0
}

TEST_CASE("imbalance statistic") {
  CHECK(beta(make_vertex(0, 5)) == -5);
  CHECK(beta(make_vertex(0b11111, 5)) == 5);
  CHECK(beta(make_vertex(0b101, 3)) == 1);
}

TEST_CASE("blocking-pair closed forms") {
  CHECK(blocking_count_formula(3) == 1);
  CHECK(blocking_count_formula(5) == 6);
  CHECK(blocking_count_formula(7) == 29);
  CHECK_THROWS(blocking_count_formula(4));
  CHECK(blocking_count_formula(4, true) == 2 * blocking_count_formula(3));
  for (int k = 1; k <= 12; ++k)
    CHECK(h_closed_form(k) == blocking_count_formula(2 * k + 1));
  // The odd construction realizes the closed form exactly at small n.
  CHECK(coloring_blocking_pairs(alternating_coloring(3)) == blocking_count_formula(3));
  CHECK(coloring_blocking_pairs(alternating_coloring(5)) == blocking_count_formula(5));
}

TEST_CASE("imbalance lower-bounds the path change count on the odd construction") {
  for (int n : {3, 5}) {
    Coloring c = alternating_coloring(n);
    for (uint32_t vb = 0; vb < (1u << n); ++vb) {
      Vertex v{vb, n};
      int lb = std::abs(beta(v)) - 1;
      CHECK(min_changes_any_path(c, v) >= lb);
    }
  }
}

TEST_CASE("averaged change lower bound") {
  CHECK(f_lower_bound(3) == Rational(1, 2));
  CHECK(f_lower_bound(5) == Rational(7, 8));
  // L(k) <= f(k): check against the exhaustive optimum at k = 2, 3.
  CHECK(f_lower_bound(2) <= exact_f(2));
  CHECK(f_lower_bound(3) <= exact_f(3));
  // L grows without bound roughly like sqrt(k); monotone check on a sample.
  CHECK(f_lower_bound(9) > f_lower_bound(5));
  CHECK(f_lower_bound(25) > f_lower_bound(9));
  // Reported, not asserted: the sqrt(k) scaling constant.
  for (int k : {9, 25, 36}) {
    double ratio = (double)f_lower_bound(k).num() / (double)f_lower_bound(k).den() /
                   std::sqrt((double)k);
    std::printf("# L(%d)/sqrt(%d) = %.4f\n", k, k, ratio);
  }
}

TEST_CASE("chunked-walk expectation bound") {
  // floor(n/k)*(fhat_k + 1) + (n mod k), exact arithmetic.
  CHECK(expected_changes_bound(6, 3, Rational(1, 2)) == Rational(3));
  CHECK(expected_changes_bound(7, 3, Rational(1, 2)) == Rational(4));
  for (int n = 2; n <= 10000; ++n) {
    Rational b = expected_changes_bound(n, 6, Rational(7, 8));
    CHECK(b <= Rational(5, 16) * Rational(n) + Rational(6));
  }
}

TEST_CASE("simulation honors the expectation bound, n = 6, k = 3") {
  // Against the exhaustively known fhat(3) = 1/2, the chunked walk on any
  // coloring has expected changes <= floor(6/3)*(1/2 + 1) + 0 = 3.
  for (uint64_t seed : {1ull, 2ull, 3ull}) {
    Coloring c = random_coloring(6, seed * 1001);
    SimulationResult r = simulate_chunked(c, 3, 20000, seed);
    CHECK(r.trials == 20000);
    CHECK(r.stderr_ > 0);
    CHECK(r.mean <= 3.0 + 3 * r.stderr_);
  }
}

TEST_CASE("simulation is deterministic in the seed") {
  Coloring c = random_coloring(5, 99);
  SimulationResult a = simulate_chunked(c, 2, 500, 42);
  SimulationResult b = simulate_chunked(c, 2, 500, 42);
  CHECK(a.mean == b.mean);
  CHECK(a.stderr_ == b.stderr_);
  SimulationResult d = simulate_chunked(c, 2, 500, 43);
  CHECK(a.mean != d.mean);  // astronomically unlikely to collide
}
