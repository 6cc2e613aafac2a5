#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qn/bounds.hpp"
#include "qn/dpll.hpp"
#include "qn/oracle.hpp"

using namespace qn;

namespace {

EncodingConfig bare() {
  EncodingConfig cfg;
  cfg.symmetry_breaking = false;
  cfg.red_degree = false;
  return cfg;
}

bool sat(const CnfFormula& f, std::vector<Lit> assumptions = {}) {
  return solve_internal(f, -1, assumptions).status == SolveStatus::sat;
}

std::vector<Lit> pin_coloring(const Encoding& e, const Coloring& c) {
  std::vector<Lit> a;
  for (int i = 0; i < (int)e.r_var.size(); ++i)
    if (e.r_var[i] != 0)
      a.push_back(c.at(i) == Color::red ? e.r_var[i] : -e.r_var[i]);
  return a;
}

}  // namespace

TEST_CASE("dyadic thresholds") {
  Threshold t = Threshold::from_rational(Rational(9, 8));
  CHECK(t.num == 9);
  CHECK(t.log2_den == 3);
  CHECK(t.value() == Rational(9, 8));
  CHECK(Threshold::from_rational(Rational(2)).log2_den == 0);
  CHECK_THROWS_AS(Threshold::from_rational(Rational(1, 3)), std::invalid_argument);
}

TEST_CASE("average-change threshold straddles the exact optimum at n = 3") {
  // Exhaustive ground truth: the optimum average is 1, so the encoding must be
  // satisfiable at 1 and unsatisfiable one dyadic step above.
  CHECK(sat(build_f(3, Rational(1)).cnf));
  CHECK(!sat(build_f(3, Rational(9, 8)).cnf));
  CHECK(sat(build_fhat(3, Rational(1, 2)).cnf));
  CHECK(!sat(build_fhat(3, Rational(5, 8)).cnf));
  CHECK(sat(build_mu(3, 1).cnf));
  CHECK(!sat(build_mu(3, 2).cnf));
}

TEST_CASE("threshold verdicts under a pinned coloring match the oracle") {
  std::mt19937_64 rng(11);
  std::vector<Rational> alphas = {Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                  Rational(1), Rational(3, 2)};
  for (int t = 0; t < 25; ++t) {
    Coloring c = coloring_from_mask(3, rng());
    for (const Rational& a : alphas) {
      Encoding f = build_f(3, a, bare());
      CHECK(sat(f.cnf, pin_coloring(f, c)) == (coloring_f_average(c) >= a));
      Encoding fh = build_fhat(3, a, bare());
      CHECK(sat(fh.cnf, pin_coloring(fh, c)) == (coloring_fhat_average(c) >= a));
    }
    for (int target = 1; target <= 4; ++target) {
      Encoding m = build_mu(3, target, bare());
      CHECK(sat(m.cnf, pin_coloring(m, c)) == (coloring_blocking_pairs(c) >= target));
    }
  }
}

TEST_CASE("binary search recovers the exhaustive optima at n = 3") {
  auto probe_f = [](const Rational& a) { return a.num() == 0 || sat(build_f(3, a).cnf); };
  CHECK(compute_bound(BoundKind::f, 3, probe_f) == Rational(1));
  auto probe_fh = [](const Rational& a) { return a.num() == 0 || sat(build_fhat(3, a).cnf); };
  CHECK(compute_bound(BoundKind::fhat, 3, probe_fh) == Rational(1, 2));
  auto probe_mu = [](const Rational& a) {
    return a.num() == 0 || sat(build_mu(3, (int)a.num()).cnf);
  };
  CHECK(compute_bound(BoundKind::mu, 3, probe_mu) == Rational(1));
}

TEST_CASE("witness models decode to colorings achieving the threshold") {
  Encoding e = build_f(3, Rational(1));
  SolveResult r = solve_internal(e.cnf);
  REQUIRE(r.status == SolveStatus::sat);
  Coloring c = decode_coloring(e, r.model);
  CHECK(coloring_f_average(c) >= Rational(1));

  Encoding eh = build_fhat(3, Rational(1, 2));
  r = solve_internal(eh.cnf);
  REQUIRE(r.status == SolveStatus::sat);
  CHECK(coloring_fhat_average(decode_coloring(eh, r.model)) >= Rational(1, 2));

  Encoding em = build_mu(3, 1);
  r = solve_internal(em.cnf);
  REQUIRE(r.status == SolveStatus::sat);
  CHECK(coloring_blocking_pairs(decode_coloring(em, r.model)) >= 1);
}

TEST_CASE("decode round-trips a pinned coloring") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    Coloring c = coloring_from_mask(3, rng());
    Encoding e = build_mu(3, 0, bare());
    SolveResult r = solve_internal(e.cnf, -1, pin_coloring(e, c));
    REQUIRE(r.status == SolveStatus::sat);
    CHECK(decode_coloring(e, r.model) == c);
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(build_f(3, Rational(5, 2)), std::invalid_argument);
  CHECK_THROWS_AS(build_f(3, Rational(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(build_mu(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_mu(3, -1), std::invalid_argument);
}
