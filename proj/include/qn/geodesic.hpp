#pragma once

#include <cstdint>

#include "qn/hypercube.hpp"
#include "qn/rational.hpp"

namespace qn {

// Antipodal geodesic as a start vertex plus the order in which axes flip.
struct GeodesicPath {
  Vertex start;
  std::vector<int> axes;

  std::vector<Vertex> vertices() const;
};

// Uniform over all 2^n * n! antipodal geodesics: uniform start vertex, then a
// uniformly random axis permutation. Deterministic given the seed.
GeodesicPath random_antipodal_geodesic(int n, uint64_t seed);

// Number of internal vertices whose two incident path edges differ in color.
int color_changes(const GeodesicPath& p, const Coloring& c);

// Chunk-wise optimization: split into floor(n/k) chunks of length k, replace
// each by a within-subcube geodesic between the same endpoints minimizing its
// internal change count, preferring a first-edge color matching the previous
// chunk's last edge when that costs nothing. Ties resolve to the
// lexicographically least axis sequence. The length-(n mod k) remainder is
// left untouched unless `optimize_remainder`.
GeodesicPath optimize_chunks(const GeodesicPath& p, const Coloring& c, int k,
                             bool optimize_remainder = false);

// floor(n/k) * fhat_k + floor(n/k) + (n mod k).
Rational expected_changes_bound(int n, int k, const Rational& fhat_k);

// The edge flipping coordinate i gets the parity of the other coordinates;
// red on odd parity. Antipodal iff n is even.
Coloring alternating_coloring(int n);

// Imbalance 2*popcount - n.
int beta(Vertex v);

// g(n) = sum_{i <= (n-3)/2} C(n,i) for odd n; even n yields 2*g(n-1) when the
// doubling convention is enabled, otherwise an error.
long long blocking_count_formula(int n, bool even_doubling = false);
// h(k) = 2^{2k} - C(2k+1, k); equals g(2k+1).
long long h_closed_form(int k);

// L(k) = (1/2^k) * sum_l |k-2l| C(k,l) - 1, the change lower bound averaged
// over vertices, kept exact. A lower bound on f(k).
Rational f_lower_bound(int k);

// Monte Carlo over seeded trials; each trial draws a fresh geodesic and runs
// the chunk optimizer.
struct SimulationResult {
  double mean = 0;
  double stderr_ = 0;
  long long trials = 0;
};
SimulationResult simulate_chunked(const Coloring& c, int k, long long trials, uint64_t seed);

// Independent uniformly random coloring (for simulation baselines).
Coloring random_coloring(int n, uint64_t seed);

}  // namespace qn
