#pragma once

#include <functional>

#include "qn/encodings.hpp"
#include "qn/rational.hpp"

namespace qn {

// Dyadic threshold alpha = num / 2^log2_den, kept exact.
struct Threshold {
  long long num = 0;
  int log2_den = 0;

  Rational value() const { return Rational(num, 1ll << log2_den); }
  static Threshold from_rational(const Rational& a);
};

// F(n, alpha): satisfiable iff some coloring's vertex-average minimum geodesic
// color-change count reaches alpha. The cardinality side is an at-least
// threshold over the negated total-level literals; a fractional right-hand
// side is rounded up (the counted sum is integral).
Encoding build_f(int n, const Rational& alpha, const EncodingConfig& cfg = {});
// F-hat(n, alpha): per-vertex contribution min(s, s'-1), realized by the
// level -1 total variables and a threshold shifted by 2^{n-1}.
Encoding build_fhat(int n, const Rational& alpha, const EncodingConfig& cfg = {});
// mu(n): satisfiable iff some coloring has >= target antipodal pairs whose
// every geodesic needs >= 2 changes (threshold over the level-1 totals).
Encoding build_mu(int n, int target, const EncodingConfig& cfg = {});

// Reads the r variables of a model back into a total coloring, reconstructing
// the omitted half by complementation for implicit-antipodal encodings.
Coloring decode_coloring(const Encoding& e, const std::vector<uint8_t>& model);

// Binary-search driver: finds the exact optimum via repeated SAT probes.
// `probe` must return true iff the encoding for the given threshold is
// satisfiable. For f/fhat the search runs over numerators with denominator
// 2^n; mu searches integer targets in [0, 2^{n-1}].
enum class BoundKind { f, fhat, mu };
Rational compute_bound(BoundKind kind, int n,
                       const std::function<bool(const Rational&)>& probe);

}  // namespace qn
