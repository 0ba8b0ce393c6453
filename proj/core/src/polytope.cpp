#include "conifano/polytope.hpp"

#include <algorithm>
#include <set>

namespace conifano {

namespace {

IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

std::vector<IntVec> diffs_from(const std::vector<IntVec>& pts, const IntVec& base) {
  std::vector<IntVec> d;
  d.reserve(pts.size());
  for (const IntVec& p : pts)
    if (p != base) d.push_back(sub(p, base));
  return d;
}

int affine_rank(const std::vector<IntVec>& pts) {
  if (pts.empty()) return -1;
  std::vector<IntVec> d = diffs_from(pts, pts[0]);
  if (d.empty()) return 0;
  return rank_of(IntMatrix::from_rows(d));
}

// All irredundant facets of conv(pts), by exhaustive d-subset hyperplane search.
std::vector<Facet> hull_facets_raw(const std::vector<IntVec>& pts) {
  int d = static_cast<int>(pts[0].size());
  int n = static_cast<int>(pts.size());
  std::set<std::pair<IntVec, Int>> found;
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  auto advance = [&]() {
    int i = d - 1;
    while (i >= 0 && idx[i] == n - d + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  if (n < d) throw error("degenerate");
  do {
    std::vector<IntVec> rows;
    for (int i = 1; i < d; ++i) rows.push_back(sub(pts[idx[i]], pts[idx[0]]));
    std::vector<IntVec> ker = integer_kernel(IntMatrix::from_rows(rows));
    if (ker.size() != 1) continue;
    IntVec nrm = primitive(ker[0]);
    Int c = dot(pts[idx[0]], nrm);
    bool allGe = true, allLe = true;
    for (const IntVec& p : pts) {
      Int v = dot(p, nrm);
      if (v < c) allGe = false;
      if (v > c) allLe = false;
    }
    if (allGe)
      found.emplace(nrm, -c);
    else if (allLe) {
      for (Int& x : nrm) x = -x;
      found.emplace(nrm, c);
    }
  } while (advance());
  std::vector<Facet> facets;
  for (const auto& [nrm, off] : found) {
    std::vector<IntVec> tight;
    for (const IntVec& p : pts)
      if (dot(p, nrm) == -off) tight.push_back(p);
    if (static_cast<int>(tight.size()) >= d && affine_rank(tight) == d - 1)
      facets.push_back({nrm, off});
  }
  if (facets.empty()) throw error("degenerate");
  return facets;
}

Int nvol_points(std::vector<IntVec> pts) {
  int d = static_cast<int>(pts[0].size());
  if (d == 1) {
    Int lo = pts[0][0], hi = pts[0][0];
    for (const IntVec& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    return hi - lo;
  }
  std::vector<Facet> facets = hull_facets_raw(pts);
  const IntVec& apex = pts[0];
  Int total = 0;
  for (const Facet& f : facets) {
    Int h = dot(apex, f.normal) + f.offset;
    if (h == 0) continue;
    std::vector<IntVec> tight;
    for (const IntVec& p : pts)
      if (dot(p, f.normal) == -f.offset) tight.push_back(p);
    total += h * nvol_points(project_to_sublattice(tight));
  }
  return total;
}

}  // namespace

Polytope Polytope::from_vertices(std::vector<IntVec> points) {
  if (points.empty()) throw error("degenerate");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  int d = static_cast<int>(points[0].size());
  if (affine_rank(points) != d) throw error("degenerate");
  Polytope P;
  P.dim_ = d;
  P.facets_ = hull_facets_raw(points);
  std::sort(P.facets_.begin(), P.facets_.end(), [](const Facet& a, const Facet& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });
  for (const IntVec& p : points) {
    std::vector<IntVec> tightNormals;
    for (const Facet& f : P.facets_)
      if (dot(p, f.normal) == -f.offset) tightNormals.push_back(f.normal);
    if (static_cast<int>(tightNormals.size()) >= d &&
        rank_of(IntMatrix::from_rows(tightNormals)) == d)
      P.vertices_.push_back(p);
  }
  return P;
}

bool Polytope::contains(const IntVec& x) const {
  for (const Facet& f : facets_)
    if (support(f, x) < 0) return false;
  return true;
}

Polytope dual(const Polytope& P) {
  std::vector<IntVec> dv;
  for (const Facet& f : P.facets()) {
    if (f.offset <= 0) throw error("origin not interior");
    if (f.offset != 1) throw error("dual not lattice");
    dv.push_back(f.normal);
  }
  return Polytope::from_vertices(dv);
}

bool is_reflexive(const Polytope& P) {
  for (const Facet& f : P.facets())
    if (f.offset != 1) return false;
  return true;
}

std::vector<int> FaceLattice::ofDim(int k) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i)
    if (faces[i].dim == k) out.push_back(i);
  return out;
}

FaceLattice face_lattice(const Polytope& P) {
  const auto& verts = P.vertices();
  std::vector<std::set<int>> facetSets;
  for (const Facet& f : P.facets()) {
    std::set<int> s;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
      if (dot(verts[i], f.normal) == -f.offset) s.insert(i);
    facetSets.push_back(std::move(s));
  }
  std::set<std::set<int>> all(facetSets.begin(), facetSets.end());
  std::set<std::set<int>> frontier = all;
  while (!frontier.empty()) {
    std::set<std::set<int>> next;
    for (const auto& a : frontier)
      for (const auto& b : facetSets) {
        std::set<int> c;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::inserter(c, c.begin()));
        if (!c.empty() && !all.count(c)) next.insert(std::move(c));
      }
    for (const auto& s : next) all.insert(s);
    frontier = std::move(next);
  }
  FaceLattice fl;
  for (const auto& s : all) {
    Face f;
    f.vertexIndices.assign(s.begin(), s.end());
    std::vector<IntVec> pts;
    for (int i : f.vertexIndices) pts.push_back(verts[i]);
    f.dim = affine_rank(pts);
    for (int j = 0; j < static_cast<int>(facetSets.size()); ++j) {
      bool tight = std::includes(facetSets[j].begin(), facetSets[j].end(), s.begin(), s.end());
      if (tight) f.tightFacetIndices.push_back(j);
    }
    fl.faces.push_back(std::move(f));
  }
  std::sort(fl.faces.begin(), fl.faces.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.vertexIndices) < std::tie(b.dim, b.vertexIndices);
  });
  return fl;
}

std::vector<int> dual_face(const Polytope& P, const Polytope& dualP, const Face& F) {
  std::vector<int> out;
  const auto& dverts = dualP.vertices();
  for (int j = 0; j < static_cast<int>(dverts.size()); ++j) {
    bool all = true;
    for (int i : F.vertexIndices)
      if (dot(P.vertices()[i], dverts[j]) != -1) all = false;
    if (all) out.push_back(j);
  }
  return out;
}

std::vector<IntVec> lattice_points(const Polytope& P) {
  int d = P.dim();
  IntVec lo(d), hi(d);
  for (int j = 0; j < d; ++j) {
    lo[j] = P.vertices()[0][j];
    hi[j] = P.vertices()[0][j];
    for (const IntVec& v : P.vertices()) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
  }
  std::vector<IntVec> out;
  IntVec p = lo;
  while (true) {
    if (P.contains(p)) out.push_back(p);
    int j = d - 1;
    while (j >= 0 && p[j] == hi[j]) {
      p[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++p[j];
  }
  return out;
}

std::vector<IntVec> face_points(const Polytope& P, const Face& F,
                                const std::vector<IntVec>& allPoints) {
  std::vector<IntVec> out;
  for (const IntVec& p : allPoints) {
    bool onFace = true;
    for (int j : F.tightFacetIndices)
      if (P.support(P.facets()[j], p) != 0) onFace = false;
    if (onFace) out.push_back(p);
  }
  return out;
}

std::vector<IntVec> interior_points(const Polytope& P) {
  std::vector<IntVec> out;
  for (const IntVec& p : lattice_points(P)) {
    bool interior = true;
    for (const Facet& f : P.facets())
      if (P.support(f, p) == 0) interior = false;
    if (interior) out.push_back(p);
  }
  return out;
}

Int normalized_volume(const Polytope& P) { return nvol_points(P.vertices()); }

Divisibility divisibility(const Polytope& P) {
  const auto& verts = P.vertices();
  Int g = 0;
  for (const IntVec& v : verts)
    for (size_t j = 0; j < v.size(); ++j) g = gcd(g, v[j] - verts[0][j]);
  Divisibility res{g == 0 ? Int(1) : g, std::nullopt};
  if (res.k >= 2) res.quotient = quotient_by(P, res.k);
  return res;
}

Polytope quotient_by(const Polytope& P, const Int& m) {
  const auto& verts = P.vertices();
  std::vector<IntVec> q;
  for (const IntVec& v : verts) {
    IntVec w(v.size());
    for (size_t j = 0; j < v.size(); ++j) {
      Int diff = v[j] - verts[0][j];
      if (diff % m != 0) throw error("quotient_by: vertices not congruent mod m");
      w[j] = diff / m;
    }
    q.push_back(std::move(w));
  }
  return Polytope::from_vertices(q);
}

std::vector<IntVec> project_to_sublattice(const std::vector<IntVec>& pts) {
  if (pts.empty()) return {};
  int d = static_cast<int>(pts[0].size());
  IntVec base = *std::min_element(pts.begin(), pts.end());
  std::vector<IntVec> diffs;
  for (const IntVec& p : pts) diffs.push_back(sub(p, base));
  std::vector<IntVec> B = saturate_span(diffs);
  int r = static_cast<int>(B.size());
  RatMatrix M(d, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < d; ++i) M.at(i, j) = B[j][i];
  std::vector<IntVec> coords;
  for (const IntVec& row : diffs) {
    RatVec b(d);
    for (int i = 0; i < d; ++i) b[i] = row[i];
    RationalSolution s = solve_rational(M, b);
    if (s.status == SolveStatus::Inconsistent)
      throw error("project_to_sublattice: point outside affine span");
    IntVec c(r);
    for (int i = 0; i < r; ++i) {
      if (s.particular[i].get_den() != 1)
        throw error("project_to_sublattice: non-integral coordinate");
      c[i] = s.particular[i].get_num();
    }
    coords.push_back(std::move(c));
  }
  return coords;
}

}  // namespace conifano
