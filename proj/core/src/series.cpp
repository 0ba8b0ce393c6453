#include "conifano/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>

namespace conifano {

namespace {

Int factorial(long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

using u128 = unsigned __int128;

// one walk level: packed states in ascending key order with their counts
template <typename C>
struct Level {
  std::vector<uint64_t> keys;
  std::vector<C> cnt;

  size_t size() const { return keys.size(); }
};

Int to_mpz(const u128& x) {
  Int hi(static_cast<unsigned long>(x >> 64));
  hi <<= 64;
  return hi + Int(static_cast<unsigned long>(x));
}

Int to_mpz(const Int& x) { return x; }

struct PruneData {
  int d = 0;
  long T = 0;
  std::array<long, 6> vmin{}, vmax{};
  // facet inequalities <x, normal> >= -offset of conv(vertices): the state w
  // can still reach 0 within r steps iff -w lies in r * conv, i.e.
  // <w, normal> <= r * offset for every facet.
  std::vector<std::pair<std::array<long, 6>, long>> facets;

  bool ok(const std::array<long, 6>& w, long r) const {
    for (int c = 0; c < d; ++c)
      if (-w[c] > r * vmax[c] || -w[c] < r * vmin[c] || std::labs(w[c]) > 511) return false;
    for (const auto& [nrm, off] : facets) {
      long s = 0;
      for (int c = 0; c < d; ++c) s += w[c] * nrm[c];
      if (s > r * off) return false;
    }
    return true;
  }
};

uint64_t pack_state(const std::array<long, 6>& w, int d) {
  uint64_t k = 0;
  for (int c = 0; c < d; ++c) k |= static_cast<uint64_t>(w[c] + 512) << (10 * c);
  return k;
}

// Adding a vertex shifts every coordinate by a constant, so as long as all
// coordinates stay inside [-511, 511] the packed key shifts by a constant
// too and each shifted level stays sorted.  Level s+1 is then a (deduping)
// k-way merge of the |verts| shifted copies of level s.
template <typename C>
std::vector<Level<C>> walk_levels(const std::vector<std::array<long, 6>>& verts,
                                  const PruneData& pd, long half) {
  int d = pd.d;
  std::vector<int64_t> shift;
  for (const auto& v : verts)
    shift.push_back(static_cast<int64_t>(pack_state(v, d)) -
                    static_cast<int64_t>(pack_state({}, d)));
  std::vector<Level<C>> levels(half + 1);
  levels[0].keys.push_back(pack_state({}, d));
  levels[0].cnt.push_back(C(1));
  for (long s = 1; s <= half; ++s) {
    long r = pd.T - s;  // loosest remaining budget over all targets
    const Level<C>& prev = levels[s - 1];
    Level<C>& next = levels[s];
    next.keys.reserve(prev.size() + prev.size() / 2);
    next.cnt.reserve(prev.size() + prev.size() / 2);

    // binary min-heap over the shifted streams, keyed by next candidate
    struct Head {
      uint64_t key;
      uint32_t src;
    };
    std::vector<Head> heap;
    std::vector<size_t> pos(shift.size(), 0);
    auto heap_push = [&](Head h) {
      heap.push_back(h);
      size_t i = heap.size() - 1;
      while (i && heap[(i - 1) / 2].key > heap[i].key) {
        std::swap(heap[(i - 1) / 2], heap[i]);
        i = (i - 1) / 2;
      }
    };
    auto heap_fix = [&] {  // root key increased or was replaced
      size_t i = 0, n = heap.size();
      for (;;) {
        size_t l = 2 * i + 1, m = i;
        if (l < n && heap[l].key < heap[m].key) m = l;
        if (l + 1 < n && heap[l + 1].key < heap[m].key) m = l + 1;
        if (m == i) return;
        std::swap(heap[i], heap[m]);
        i = m;
      }
    };
    for (uint32_t j = 0; j < shift.size(); ++j)
      heap_push({static_cast<uint64_t>(static_cast<int64_t>(prev.keys[0]) + shift[j]), j});

    uint64_t lastKey = ~0ULL;
    bool lastOk = false;
    while (!heap.empty()) {
      Head h = heap[0];
      uint32_t j = h.src;
      C c = prev.cnt[pos[j]];
      if (h.key == lastKey) {
        if (lastOk) next.cnt.back() += c;
      } else {
        std::array<long, 6> w{};
        for (int c2 = 0; c2 < d; ++c2)
          w[c2] = static_cast<long>((h.key >> (10 * c2)) & 1023) - 512;
        lastKey = h.key;
        lastOk = pd.ok(w, r);
        if (lastOk) {
          next.keys.push_back(h.key);
          next.cnt.push_back(c);
        }
      }
      if (++pos[j] < prev.size()) {
        heap[0].key = static_cast<uint64_t>(static_cast<int64_t>(prev.keys[pos[j]]) + shift[j]);
        heap_fix();
      } else {
        heap[0] = heap.back();
        heap.pop_back();
        heap_fix();
      }
    }
  }
  return levels;
}

template <typename C>
Int walks_to_zero(const std::vector<Level<C>>& levels, int d, long s) {
  long half = static_cast<long>(levels.size()) - 1;
  if (s <= half) {
    const auto& ks = levels[s].keys;
    uint64_t zero = pack_state({}, d);
    auto it = std::lower_bound(ks.begin(), ks.end(), zero);
    if (it == ks.end() || *it != zero) return 0;
    return to_mpz(levels[s].cnt[it - ks.begin()]);
  }
  // negation maps key to kNegBase - key, reversing the order: match the
  // ascending left level against the descending tail of the half level
  uint64_t negBase = 0;
  for (int c = 0; c < d; ++c) negBase |= static_cast<uint64_t>(1024) << (10 * c);
  const Level<C>& A = levels[s - half];
  const Level<C>& B = levels[half];
  Int total = 0;
  size_t j = B.size();
  for (size_t i = 0; i < A.size(); ++i) {
    uint64_t want = negBase - A.keys[i];
    while (j > 0 && B.keys[j - 1] > want) --j;
    if (j == 0) break;
    if (B.keys[j - 1] == want) total += to_mpz(A.cnt[i]) * to_mpz(B.cnt[j - 1]);
  }
  return total;
}

}  // namespace

Int RelationLattice::kappaDegree(const IntVec& k) const {
  Int s = 0;
  for (const Int& x : k) s += x;
  if (s % 2 != 0) throw error("odd kappa degree");
  return s / 2;
}

RelationLattice relation_lattice(const Polytope& DeltaStar) {
  RelationLattice L;
  L.vertices = DeltaStar.vertices();
  L.n = static_cast<int>(L.vertices.size());
  L.basis = integer_kernel(IntMatrix::from_columns(L.vertices));
  for (const IntVec& k : L.basis) {
    Int s = 0;
    for (const Int& x : k) s += x;
    if (s % 2 != 0) throw error("odd kappa degree");
  }
  return L;
}

std::vector<IntVec> enumerate_nonnegative(const RelationLattice& L, int maxKappa) {
  int n = L.n;
  int d = n ? static_cast<int>(L.vertices[0].size()) : 0;
  long budget = 2L * maxKappa;
  // suffix extremes of each lattice coordinate over the remaining vertices
  std::vector<IntVec> sufMin(n + 1, IntVec(d, Int(0))), sufMax(n + 1, IntVec(d, Int(0)));
  for (int i = n - 1; i >= 0; --i)
    for (int c = 0; c < d; ++c) {
      sufMin[i][c] = std::min(std::min(Int(0), L.vertices[i][c]), sufMin[i + 1][c]);
      sufMax[i][c] = std::max(std::max(Int(0), L.vertices[i][c]), sufMax[i + 1][c]);
    }
  std::vector<IntVec> out;
  IntVec k(n, Int(0));
  IntVec w(d, Int(0));
  auto feasible = [&](int i, long used) {
    long r = budget - used;
    for (int c = 0; c < d; ++c) {
      if (-w[c] > r * sufMax[i][c]) return false;
      if (-w[c] < r * sufMin[i][c]) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int i, long used) -> void {
    if (i == n) {
      bool zero = true;
      for (int c = 0; c < d; ++c)
        if (w[c] != 0) zero = false;
      if (zero && used % 2 == 0) out.push_back(k);
      return;
    }
    for (long v = 0; used + v <= budget; ++v) {
      k[i] = v;
      if (v > 0)
        for (int c = 0; c < d; ++c) w[c] += L.vertices[i][c];
      if (feasible(i + 1, used + v)) self(self, i + 1, used + v);
    }
    for (int c = 0; c < d; ++c) w[c] -= k[i] * L.vertices[i][c];
    k[i] = 0;
  };
  dfs(dfs, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Rat SeriesTable::at(int m) const {
  auto it = coefficients.find(std::vector<int>{m});
  return it == coefficients.end() ? Rat(0) : it->second;
}

SeriesTable phi0(const RelationLattice& L, int maxKappa) {
  SeriesTable S;
  S.variableCount = 1;
  S.truncationDegree = maxKappa;
  int d = L.n ? static_cast<int>(L.vertices[0].size()) : 0;
  if (d > 6) throw error("phi0: lattice rank > 6 not supported");
  long half = maxKappa;  // meet-in-the-middle split point
  // walk count N(s, w) = #(vertex sequences of length s summing to w); the
  // multinomial sum over Lambda+ at level 2m is N(2m, 0), obtained from the
  // half levels via N(2m, 0) = sum_w N(2m - half, w) * N(half, -w).
  std::vector<std::array<long, 6>> verts(L.n);
  PruneData pd;
  pd.d = d;
  pd.T = 2L * maxKappa;
  for (int i = 0; i < L.n; ++i)
    for (int c = 0; c < d; ++c) {
      long x = L.vertices[i][c].get_si();
      verts[i][c] = x;
      pd.vmin[c] = std::min(pd.vmin[c], x);
      pd.vmax[c] = std::max(pd.vmax[c], x);
    }
  try {
    Polytope hull = Polytope::from_vertices(L.vertices);
    for (const Facet& f : hull.facets()) {
      std::array<long, 6> nrm{};
      for (int c = 0; c < d; ++c) nrm[c] = f.normal[c].get_si();
      pd.facets.emplace_back(nrm, f.offset.get_si());
    }
  } catch (const error&) {
    // degenerate hull: box pruning only
  }
  std::vector<Int> walks(maxKappa + 1);
  // counts fit in 128 bits iff n^half does
  double bits = half * std::log2(std::max(2, L.n));
  if (bits < 120) {
    auto levels = walk_levels<u128>(verts, pd, half);
    for (int m = 0; m <= maxKappa; ++m) walks[m] = walks_to_zero(levels, d, 2L * m);
  } else {
    auto levels = walk_levels<Int>(verts, pd, half);
    for (int m = 0; m <= maxKappa; ++m) walks[m] = walks_to_zero(levels, d, 2L * m);
  }
  for (int m = 0; m <= maxKappa; ++m) {
    if (walks[m] == 0 && m > 0) continue;
    Int fm = factorial(m);
    Rat c(walks[m] * fm * fm, factorial(2L * m));
    c.canonicalize();
    S.coefficients[{m}] = c;
  }
  return S;
}

SeriesTable phi_multi(const RelationLattice& L, const std::vector<IntVec>& picardBasis,
                      int maxKappa) {
  if (picardBasis.empty()) throw error("not a basis");
  for (const IntVec& lam : picardBasis)
    if (static_cast<int>(lam.size()) != L.n) throw error("not a basis");
  SeriesTable S;
  S.variableCount = static_cast<int>(picardBasis.size());
  S.truncationDegree = maxKappa;
  for (const IntVec& k : enumerate_nonnegative(L, maxKappa)) {
    Int m = L.kappaDegree(k);
    std::vector<int> key{static_cast<int>(m.get_si())};
    for (const IntVec& lam : picardBasis)
      key.push_back(static_cast<int>(dot(lam, k).get_si()));
    Int fm = factorial(m.get_si());
    Int denom = 1;
    for (const Int& ki : k) denom *= factorial(ki.get_si());
    Rat c(fm * fm, denom);
    c.canonicalize();
    S.coefficients[key] += c;
  }
  return S;
}

}  // namespace conifano
