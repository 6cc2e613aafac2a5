#pragma once

#include "qn/hypercube.hpp"
#include "qn/rational.hpp"

namespace qn {

// Minimum color changes over antipodal geodesics from u, overall and
// conditioned on the first edge color. A start color whose geodesics are all
// unusable (n = 1 edge cases aside, this only happens when no geodesic starts
// with that color... which never occurs, but a conditioned value can still be
// n as saturating sentinel when dim = 1) is reported as the sentinel `dim`
// (one above the maximum possible n-1 changes).
struct ChangeProfile {
  int s = 0;
  int s_red = 0;
  int s_blue = 0;
};

// Sentinel-aware worse-start value max(s_red, s_blue).
int profile_worse(const ChangeProfile& p);
// Per-vertex f-hat contribution min(s, s' - 1); with an unreachable start
// color this saturates to s.
int fhat_term(const ChangeProfile& p, int dim);

// DP over distance layers with state (vertex, last edge color).
ChangeProfile geodesic_change_profile(const Coloring& c, Vertex u);

// 0/1-weight shortest path on the (vertex, last color) state graph; minimum
// color changes over all antipodal paths (equivalently walks) from u.
int min_changes_any_path(const Coloring& c, Vertex u);

// Some vertex reaches its antipode with zero changes (geodesic mode) or via
// an arbitrary monochromatic path (path mode).
bool has_monochromatic_antipodal(const Coloring& c, bool geodesic_only);

// Per-coloring statistics: averages over all 2^n vertices and the number of
// antipodal pairs whose every geodesic has >= 2 changes.
Rational coloring_f_average(const Coloring& c);
Rational coloring_fhat_average(const Coloring& c);
int coloring_blocking_pairs(const Coloring& c);

// Exhaustive maxima over all colorings. n <= 3 is instant; n = 4 sweeps 2^32
// colorings behind the long-run flag (hours; quotiented by the hyperoctahedral
// group plus color swap). The quotient machinery itself is testable at n = 3
// via `use_quotient`.
Rational exact_f(int n, bool long_run = false, bool use_quotient = false);
Rational exact_fhat(int n, bool long_run = false, bool use_quotient = false);
int exact_mu(int n, bool long_run = false, bool use_quotient = false);

}  // namespace qn
