#include "conifano/invariants.hpp"

namespace conifano {

PLLattice pl_lattice(int n, const std::vector<TwoFaceClass>& faceClasses) {
  PLLattice pl;
  pl.ambientRank = n;
  for (const TwoFaceClass& cls : faceClasses) {
    if (cls.kind != TwoFaceKind::UnitParallelogram) continue;
    IntVec row(n);
    row[cls.pairing[0]] += 1;
    row[cls.pairing[2]] += 1;
    row[cls.pairing[1]] -= 1;
    row[cls.pairing[3]] -= 1;
    pl.equations.push_back(std::move(row));
  }
  if (pl.equations.empty()) {
    for (int i = 0; i < n; ++i) {
      IntVec e(n);
      e[i] = 1;
      pl.basis.push_back(std::move(e));
    }
  } else {
    pl.basis = integer_kernel(IntMatrix::from_rows(pl.equations));
  }
  pl.rank = static_cast<int>(pl.basis.size());
  return pl;
}

namespace {

// Coordinates of a PL element w.r.t. the PL basis (must be integral).
IntVec pl_coordinates(const PLLattice& pl, const IntVec& v) {
  int n = pl.ambientRank;
  int p = pl.rank;
  RatMatrix B(n, p);
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < n; ++i) B.at(i, j) = pl.basis[j][i];
  RatVec b(n);
  for (int i = 0; i < n; ++i) b[i] = v[i];
  RationalSolution s = solve_rational(B, b);
  if (s.status != SolveStatus::Unique) throw error("phi image not contained in PL");
  IntVec c(p);
  for (int i = 0; i < p; ++i) {
    if (s.particular[i].get_den() != 1) throw error("phi image not contained in PL");
    c[i] = s.particular[i].get_num();
  }
  return c;
}

IntMatrix phi_in_pl_basis(const Polytope& DeltaStar, const PLLattice& pl) {
  int n = pl.ambientRank;
  if (static_cast<int>(DeltaStar.vertices().size()) != n)
    throw error("picard: vertex count mismatch");
  int d = DeltaStar.dim();
  IntMatrix C(pl.rank, d);
  for (int j = 0; j < d; ++j) {
    IntVec phi(n);
    for (int i = 0; i < n; ++i) phi[i] = DeltaStar.vertices()[i][j];
    for (const IntVec& eq : pl.equations)
      if (dot(eq, phi) != 0) throw error("phi image not contained in PL");
    IntVec c = pl_coordinates(pl, phi);
    for (int i = 0; i < pl.rank; ++i) C.at(i, j) = c[i];
  }
  return C;
}

}  // namespace

PicardGroup picard(const Polytope& DeltaStar, const PLLattice& pl) {
  int d = DeltaStar.dim();
  IntMatrix C = phi_in_pl_basis(DeltaStar, pl);
  SmithDecomposition snf = smith_normal_form(C);
  if (snf.rank != d) throw error("picard: phi not injective");
  PicardGroup g;
  g.rank = pl.rank - d;
  for (const Int& f : snf.diag)
    if (f > 1) g.invariantFactors.push_back(f);
  IntMatrix linv = unimodular_inverse(snf.left);
  for (int t = d; t < pl.rank; ++t) {
    // quotient basis vector lifted to Z^n through the PL basis
    IntVec lift(pl.ambientRank);
    for (int i = 0; i < pl.rank; ++i)
      for (int j = 0; j < pl.ambientRank; ++j) lift[j] += linv.at(i, t) * pl.basis[i][j];
    g.basisLift.push_back(std::move(lift));
  }
  return g;
}

SqDp sq_dp(const Polytope& DeltaStar, const Polytope& Delta, const FaceLattice& fl,
           const std::vector<int>& twoFaceIndices,
           const std::vector<TwoFaceClass>& faceClasses) {
  SqDp r;
  for (size_t t = 0; t < twoFaceIndices.size(); ++t) {
    int extra = faceClasses[t].latticePointCount - 3;
    if (extra <= 0) continue;
    r.sq += extra;
    std::vector<int> dualIdx = dual_face(DeltaStar, Delta, fl.faces[twoFaceIndices[t]]);
    if (dualIdx.size() != 2) throw error("sq_dp: dual face of a 2-face is not an edge");
    IntVec e = sub(Delta.vertices()[dualIdx[1]], Delta.vertices()[dualIdx[0]]);
    // edge length in the Newton polytope Delta' = Delta/2
    Int len = content(e);
    Int contrib = (extra * len) / 2;
    r.dp += static_cast<int>(contrib.get_si());
  }
  return r;
}

int py(const Polytope& Delta) {
  Divisibility div = divisibility(Delta);
  if (div.k < 2) throw error("no quotient");
  if (div.k % 2 != 0) return 0;
  Polytope Q = quotient_by(Delta, 2);
  int nv = static_cast<int>(Q.vertices().size());
  for (const Facet& f : Q.facets()) {
    std::vector<IntVec> tight;
    for (const IntVec& v : Q.vertices())
      if (dot(v, f.normal) == -f.offset) tight.push_back(v);
    if (static_cast<int>(tight.size()) != nv - 1) continue;
    // candidate base facet: everything but the apex
    std::vector<IntVec> proj = project_to_sublattice(tight);
    Polytope base = Polytope::from_vertices(proj);
    std::vector<IntVec> interior = interior_points(base);
    if (interior.size() != 1) continue;
    std::vector<IntVec> shifted;
    for (const IntVec& v : base.vertices()) shifted.push_back(sub(v, interior[0]));
    if (is_reflexive(Polytope::from_vertices(shifted))) return 1;
  }
  return 0;
}

Int kappa2_divisibility(const Polytope& DeltaStar, const PLLattice& pl) {
  int d = DeltaStar.dim();
  IntMatrix C = phi_in_pl_basis(DeltaStar, pl);
  SmithDecomposition snf = smith_normal_form(C);
  if (snf.rank != d) throw error("picard: phi not injective");
  IntVec ones(pl.ambientRank, Int(1));
  for (const IntVec& eq : pl.equations)
    if (dot(eq, ones) != 0) throw error("kappa not in PL");
  IntVec c = pl_coordinates(pl, ones);
  IntVec w = snf.left * c;
  Int g = 0;
  for (int t = d; t < pl.rank; ++t) g = gcd(g, w[t]);
  return g;
}

InvariantRecord full_record(const Polytope& DeltaStar, const std::string& id) {
  ConifoldVerdict v = check_conditions(DeltaStar);
  if (!v.accepted) throw error("not accepted");
  InvariantRecord rec;
  rec.id = id;
  rec.vert = static_cast<int>(DeltaStar.vertices().size());
  PLLattice pl = pl_lattice(rec.vert, v.faceClasses);
  rec.rk = pl.rk();
  PicardGroup pic = picard(DeltaStar, pl);
  rec.picardInvariantFactors = pic.invariantFactors;
  rec.b2 = rec.vert - 4 - rec.rk;
  if (pic.rank != rec.b2) throw error("picard rank disagrees with n - 4 - rk");
  SqDp sd = sq_dp(DeltaStar, v.delta, v.deltaStarFaces, v.twoFaceIndices, v.faceClasses);
  rec.sq = sd.sq;
  rec.dp = sd.dp;
  rec.py = py(v.delta);
  Int nv = normalized_volume(v.delta);
  if (nv % 16 != 0) throw error("normalized volume of Delta not divisible by 16");
  rec.deg = nv / 16;
  rec.h21 = 1 + rec.dp - rec.rk - rec.py;
  return rec;
}

std::map<int, int> b2_distribution(const std::vector<InvariantRecord>& records) {
  std::map<int, int> h;
  for (const InvariantRecord& r : records) ++h[r.b2];
  return h;
}

}  // namespace conifano
