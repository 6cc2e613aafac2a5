#include "qn/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>

namespace qn {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (__int128)1 << 62) throw std::overflow_error("binomial overflow");
  }
  return (long long)r;
}

}  // namespace

std::vector<Vertex> GeodesicPath::vertices() const {
  std::vector<Vertex> vs{start};
  for (int axis : axes) vs.push_back(flip(vs.back(), axis));
  return vs;
}

GeodesicPath random_antipodal_geodesic(int n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("bad dimension");
  std::mt19937_64 rng(seed);
  GeodesicPath p;
  p.start = Vertex{(uint32_t)(rng() % (1ull << n)), n};
  p.axes.resize(n);
  for (int i = 0; i < n; ++i) p.axes[i] = i + 1;
  for (int i = n - 1; i > 0; --i)  // Fisher-Yates, explicit for reproducibility
    std::swap(p.axes[i], p.axes[rng() % (i + 1)]);
  return p;
}

int color_changes(const GeodesicPath& p, const Coloring& c) {
  int changes = 0;
  Vertex v = p.start;
  std::optional<Color> last;
  for (int axis : p.axes) {
    Vertex w = flip(v, axis);
    Color col = c.at(v, w);
    if (last && *last != col) ++changes;
    last = col;
    v = w;
  }
  return changes;
}

namespace {

// Optimal replacement of one chunk: DP over subsets of the chunk's axes,
// h[S][col] = minimum remaining internal changes from vertex start^S having
// arrived on color col.
struct ChunkOpt {
  const Coloring& c;
  Vertex a;
  std::vector<int> axes;  // sorted ascending
  std::vector<int> h;     // (subset << 1) | col

  ChunkOpt(const Coloring& col, Vertex start, std::vector<int> ax)
      : c(col), a(start), axes(std::move(ax)) {
    std::sort(axes.begin(), axes.end());
    if (axes.size() > 20) throw std::invalid_argument("chunk too large");
    size_t full = (size_t)1 << axes.size();
    h.assign(full << 1, 0);
    for (size_t s = full - 1; s + 1 > 0; --s) {
      if (s == full - 1) continue;
      for (int col2 = 0; col2 < 2; ++col2) {
        int best = 1 << 20;
        for (size_t j = 0; j < axes.size(); ++j) {
          if (s & (1ull << j)) continue;
          Vertex v = at(s);
          Vertex w = flip(v, axes[j]);
          int ec = (int)c.at(v, w);
          int cost = (ec != col2) + h[((s | (1ull << j)) << 1) | ec];
          best = std::min(best, cost);
        }
        h[(s << 1) | col2] = best;
      }
      if (s == 0) break;
    }
  }

  Vertex at(size_t subset) const {
    Vertex v = a;
    for (size_t j = 0; j < axes.size(); ++j)
      if (subset & (1ull << j)) v = flip(v, axes[j]);
    return v;
  }

  // Greedy walk committing to the optimal change count; smallest axis first
  // yields the lexicographically least optimal sequence.
  std::vector<int> best_sequence(std::optional<Color> prefer, Color* last_color) const {
    int bc[2] = {1 << 20, 1 << 20};
    for (size_t j = 0; j < axes.size(); ++j) {
      Vertex w = flip(a, axes[j]);
      int ec = (int)c.at(a, w);
      bc[ec] = std::min(bc[ec], h[(((size_t)1 << j) << 1) | ec]);
    }
    int best = std::min(bc[0], bc[1]);
    bool allowed[2] = {bc[0] == best, bc[1] == best};
    if (prefer && bc[(int)*prefer] == best) {
      allowed[(int)*prefer] = true;
      allowed[1 - (int)*prefer] = false;
    }
    std::vector<int> seq;
    size_t s = 0;
    int col2 = -1;
    int remaining = best;
    Vertex v = a;
    while (seq.size() < axes.size()) {
      for (size_t j = 0; j < axes.size(); ++j) {
        if (s & (1ull << j)) continue;
        Vertex w = flip(v, axes[j]);
        int ec = (int)c.at(v, w);
        int cost = col2 < 0 ? (allowed[ec] ? 0 : 1 << 20) : (ec != col2);
        if (cost <= remaining && cost + h[((s | (1ull << j)) << 1) | ec] == remaining) {
          seq.push_back(axes[j]);
          s |= 1ull << j;
          remaining -= cost;
          col2 = ec;
          v = w;
          break;
        }
      }
    }
    *last_color = (Color)col2;
    return seq;
  }
};

}  // namespace

GeodesicPath optimize_chunks(const GeodesicPath& p, const Coloring& c, int k,
                             bool optimize_remainder) {
  int n = c.dim;
  if ((int)p.axes.size() != n) throw std::invalid_argument("path is not antipodal");
  if (k < 2 || k > n) throw std::invalid_argument("bad chunk length");
  int chunks = n / k;
  GeodesicPath out;
  out.start = p.start;
  Vertex cursor = p.start;
  std::optional<Color> prev;
  for (int ci = 0; ci < chunks; ++ci) {
    std::vector<int> axes(p.axes.begin() + (size_t)ci * k, p.axes.begin() + (size_t)(ci + 1) * k);
    ChunkOpt opt(c, cursor, std::move(axes));
    Color last;
    auto seq = opt.best_sequence(prev, &last);
    for (int axis : seq) {
      out.axes.push_back(axis);
      cursor = flip(cursor, axis);
    }
    prev = last;
  }
  std::vector<int> rest(p.axes.begin() + (size_t)chunks * k, p.axes.end());
  if (optimize_remainder && rest.size() >= 2) {
    ChunkOpt opt(c, cursor, std::move(rest));
    Color last;
    for (int axis : opt.best_sequence(prev, &last)) out.axes.push_back(axis);
  } else {
    for (int axis : rest) out.axes.push_back(axis);
  }
  return out;
}

Rational expected_changes_bound(int n, int k, const Rational& fhat_k) {
  if (k < 2 || n < 2) throw std::invalid_argument("bad parameters");
  long long m = n / k;
  return Rational(m) * fhat_k + Rational(m) + Rational(n % k);
}

Coloring alternating_coloring(int n) {
  const auto& ord = edge_ordering(n);
  Coloring c = uniform_coloring(n, Color::blue);
  for (int i = 0; i < ord.size(); ++i) {
    const Edge& e = ord.sequence[i];
    // Parity of all coordinates except the flipping one (equal on lo and hi;
    // on lo the flipping coordinate is 0, so plain popcount works).
    int parity = popcount(e.lo) & 1;
    c.set(i, parity ? Color::red : Color::blue);
  }
  return c;
}

int beta(Vertex v) { return 2 * popcount(v) - v.dim; }

long long blocking_count_formula(int n, bool even_doubling) {
  if (n % 2 == 0) {
    if (!even_doubling) throw std::invalid_argument("even n needs the doubling convention");
    return 2 * blocking_count_formula(n - 1, false);
  }
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  long long g = 0;
  for (int i = 0; i <= (n - 3) / 2; ++i) g += binom(n, i);
  if ((n - 1) / 2 <= 12 && g != h_closed_form((n - 1) / 2))
    throw std::logic_error("g/h closed-form mismatch");
  return g;
}

long long h_closed_form(int k) { return (1ll << (2 * k)) - binom(2 * k + 1, k); }

Rational f_lower_bound(int k) {
  if (k < 2 || k > 40) throw std::invalid_argument("k out of supported range");
  long long sum = 0;
  for (int l = 0; l <= k; ++l) sum += (long long)std::abs(k - 2 * l) * binom(k, l);
  return Rational(sum, 1ll << k) - Rational(1);
}

SimulationResult simulate_chunked(const Coloring& c, int k, long long trials, uint64_t seed) {
  SimulationResult res;
  res.trials = trials;
  double sum = 0, sumsq = 0;
  for (long long t = 0; t < trials; ++t) {
    uint64_t s = splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (uint64_t)(t + 1)));
    GeodesicPath p = random_antipodal_geodesic(c.dim, s);
    GeodesicPath q = optimize_chunks(p, c, k);
    int gamma = color_changes(q, c);
    sum += gamma;
    sumsq += (double)gamma * gamma;
  }
  res.mean = sum / (double)trials;
  double var = (sumsq - sum * sum / (double)trials) / std::max(1.0, (double)(trials - 1));
  res.stderr_ = std::sqrt(std::max(0.0, var) / (double)trials);
  return res;
}

Coloring random_coloring(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Coloring c = uniform_coloring(n, Color::blue);
  for (auto& b : c.colors) b = (uint8_t)(rng() & 1);
  return c;
}

}  // namespace qn
