#include "qn/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <deque>
#include <stdexcept>
#include <thread>

namespace qn {

namespace {

constexpr int kInf = 1 << 20;

// DP restricted to geodesics (distance-increasing edges) whose first edge has
// color `start`. Returns minimum changes to reach antipodal(u), or kInf.
int geodesic_min_changes(const Coloring& c, Vertex u, Color start) {
  int n = c.dim;
  size_t nv = (size_t)1 << n;
  // best[v][lastc], vertices as absolute bit patterns.
  std::vector<int> best(nv * 2, kInf);
  for (int axis = 1; axis <= n; ++axis) {
    Vertex w = flip(u, axis);
    if (c.at(u, w) == start) best[w.bits * 2 + (int)start] = 0;
  }
  // Vertices grouped by distance from u.
  std::vector<std::vector<uint32_t>> layers(n + 1);
  for (uint32_t v = 0; v < nv; ++v)
    layers[std::popcount(v ^ u.bits)].push_back(v);
  for (int d = 1; d < n; ++d) {
    for (uint32_t vb : layers[d]) {
      for (int lc = 0; lc < 2; ++lc) {
        int cur = best[vb * 2 + lc];
        if (cur >= kInf) continue;
        Vertex v{vb, n};
        for (int axis = 1; axis <= n; ++axis) {
          Vertex w = flip(v, axis);
          if (std::popcount(w.bits ^ u.bits) != d + 1) continue;
          int nc = (int)c.at(v, w);
          int cost = cur + (nc != lc);
          int& slot = best[w.bits * 2 + nc];
          if (cost < slot) slot = cost;
        }
      }
    }
  }
  uint32_t target = antipodal(u).bits;
  return std::min(best[target * 2], best[target * 2 + 1]);
}

}  // namespace

int profile_worse(const ChangeProfile& p) { return std::max(p.s_red, p.s_blue); }

int fhat_term(const ChangeProfile& p, int dim) {
  int worse = profile_worse(p);
  if (worse >= dim) return p.s;  // a start color is unreachable
  return std::min(p.s, worse - 1);
}

ChangeProfile geodesic_change_profile(const Coloring& c, Vertex u) {
  ChangeProfile p;
  int r = geodesic_min_changes(c, u, Color::red);
  int b = geodesic_min_changes(c, u, Color::blue);
  p.s_red = r >= kInf ? c.dim : r;
  p.s_blue = b >= kInf ? c.dim : b;
  p.s = std::min(p.s_red, p.s_blue);
  return p;
}

int min_changes_any_path(const Coloring& c, Vertex u) {
  int n = c.dim;
  size_t nv = (size_t)1 << n;
  std::vector<int> dist(nv * 2, kInf);
  std::deque<uint32_t> dq;  // packed state: vertex * 2 + lastcolor
  for (int axis = 1; axis <= n; ++axis) {
    Vertex w = flip(u, axis);
    uint32_t st = w.bits * 2 + (int)c.at(u, w);
    if (dist[st] > 0) { dist[st] = 0; dq.push_front(st); }
  }
  while (!dq.empty()) {
    uint32_t st = dq.front();
    dq.pop_front();
    int d = dist[st];
    Vertex v{st >> 1, n};
    int lc = st & 1;
    for (int axis = 1; axis <= n; ++axis) {
      Vertex w = flip(v, axis);
      int nc = (int)c.at(v, w);
      int nd = d + (nc != lc);
      uint32_t nst = w.bits * 2 + nc;
      if (nd < dist[nst]) {
        dist[nst] = nd;
        if (nd == d) dq.push_front(nst);
        else dq.push_back(nst);
      }
    }
  }
  uint32_t t = antipodal(u).bits;
  return std::min(dist[t * 2], dist[t * 2 + 1]);
}

bool has_monochromatic_antipodal(const Coloring& c, bool geodesic_only) {
  for (uint32_t vb = 0; vb < (1u << c.dim); ++vb) {
    Vertex v{vb, c.dim};
    if (geodesic_only) {
      if (geodesic_change_profile(c, v).s == 0) return true;
    } else {
      if (min_changes_any_path(c, v) == 0) return true;
    }
  }
  return false;
}

Rational coloring_f_average(const Coloring& c) {
  long long sum = 0;
  for (uint32_t vb = 0; vb < (1u << c.dim); ++vb)
    sum += geodesic_change_profile(c, Vertex{vb, c.dim}).s;
  return Rational(sum, 1ll << c.dim);
}

Rational coloring_fhat_average(const Coloring& c) {
  long long sum = 0;
  for (uint32_t vb = 0; vb < (1u << c.dim); ++vb)
    sum += fhat_term(geodesic_change_profile(c, Vertex{vb, c.dim}), c.dim);
  return Rational(sum, 1ll << c.dim);
}

int coloring_blocking_pairs(const Coloring& c) {
  int count = 0;
  for (uint32_t vb = 0; vb < (1u << c.dim); ++vb) {
    Vertex v{vb, c.dim};
    if (v.bits < antipodal(v).bits && geodesic_change_profile(c, v).s >= 2) ++count;
  }
  return count;
}

namespace {

struct SweepResult {
  long long f_num = LLONG_MIN;     // sum of s over vertices, maximized
  long long fhat_num = LLONG_MIN;  // sum of fhat terms, maximized
  int mu = 0;
};

// Edge-index permutations of the full group (optionally including the color
// swap), for canonical-representative filtering.
std::vector<std::vector<int>> group_edge_perms(int n) {
  const auto& ord = edge_ordering(n);
  std::vector<std::vector<int>> perms;
  for (const auto& s : all_symmetries(n)) {
    std::vector<int> p(ord.size());
    for (int i = 0; i < ord.size(); ++i) p[i] = ord.index_of(s(ord.sequence[i]));
    perms.push_back(std::move(p));
  }
  return perms;
}

bool is_canonical(uint64_t mask, int m, const std::vector<std::vector<int>>& perms) {
  uint64_t full = (m == 64) ? ~0ull : ((1ull << m) - 1);
  for (const auto& p : perms) {
    for (int swap = 0; swap < 2; ++swap) {
      uint64_t mapped = 0;
      for (int i = 0; i < m; ++i)
        if ((mask >> p[i]) & 1) mapped |= 1ull << i;
      if (swap) mapped ^= full;
      if (mapped < mask) return false;
    }
  }
  return true;
}

SweepResult exact_sweep(int n, bool long_run, bool use_quotient) {
  if (n > 4) throw std::invalid_argument("exhaustive sweep limited to n <= 4");
  int m = edge_ordering(n).size();
  uint64_t total = 1ull << m;
  if (n == 4 && !long_run)
    throw std::invalid_argument("n = 4 sweeps 2^32 colorings; pass the long-run flag");

  std::vector<std::vector<int>> perms;
  if (use_quotient) perms = group_edge_perms(n);

  unsigned workers = (n == 4) ? std::max(1u, std::thread::hardware_concurrency()) : 1;
  std::vector<SweepResult> partial(workers);
  auto work = [&](unsigned w) {
    SweepResult& res = partial[w];
    for (uint64_t mask = w; mask < total; mask += workers) {
      if (use_quotient && !is_canonical(mask, m, perms)) continue;
      Coloring c = coloring_from_mask(n, mask);
      long long fs = 0, fh = 0;
      int bp = 0;
      for (uint32_t vb = 0; vb < (1u << n); ++vb) {
        Vertex v{vb, n};
        ChangeProfile p = geodesic_change_profile(c, v);
        fs += p.s;
        fh += fhat_term(p, n);
        if (vb < antipodal(v).bits && p.s >= 2) ++bp;
      }
      res.f_num = std::max(res.f_num, fs);
      res.fhat_num = std::max(res.fhat_num, fh);
      res.mu = std::max(res.mu, bp);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  SweepResult out;
  for (const auto& r : partial) {
    out.f_num = std::max(out.f_num, r.f_num);
    out.fhat_num = std::max(out.fhat_num, r.fhat_num);
    out.mu = std::max(out.mu, r.mu);
  }
  return out;
}

}  // namespace

Rational exact_f(int n, bool long_run, bool use_quotient) {
  return Rational(exact_sweep(n, long_run, use_quotient).f_num, 1ll << n);
}

Rational exact_fhat(int n, bool long_run, bool use_quotient) {
  return Rational(exact_sweep(n, long_run, use_quotient).fhat_num, 1ll << n);
}

int exact_mu(int n, bool long_run, bool use_quotient) {
  return exact_sweep(n, long_run, use_quotient).mu;
}

}  // namespace qn
