#include "conifano/conifold.hpp"

#include <algorithm>

namespace conifano {

TwoFaceClass classify_two_face(const Polytope& P, const Face& F,
                               const std::vector<IntVec>& allPoints) {
  if (F.dim != 2) throw error("classify_two_face: face is not 2-dimensional");
  TwoFaceClass cls;
  std::vector<IntVec> fverts;
  for (int i : F.vertexIndices) fverts.push_back(P.vertices()[i]);
  std::vector<IntVec> fpts = face_points(P, F, allPoints);
  cls.latticePointCount = static_cast<int>(fpts.size());
  std::vector<IntVec> proj = project_to_sublattice(fverts);
  cls.area2 = normalized_volume(Polytope::from_vertices(proj));
  int nv = static_cast<int>(fverts.size());
  if (nv == 3 && cls.latticePointCount == 3 && cls.area2 == 1) {
    cls.kind = TwoFaceKind::UnimodularTriangle;
    return cls;
  }
  if (nv == 4 && cls.latticePointCount == 4 && cls.area2 == 2) {
    // opposite-vertex pairing v_a + v_c = v_b + v_d, all 3 pairings of 4
    static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}};
    for (const int* p : pairings) {
      IntVec lhs = sub(fverts[p[0]], fverts[p[1]]);
      IntVec rhs = sub(fverts[p[3]], fverts[p[2]]);
      if (lhs == rhs) {
        cls.kind = TwoFaceKind::UnitParallelogram;
        for (int t = 0; t < 4; ++t) cls.pairing[t] = F.vertexIndices[p[t]];
        return cls;
      }
    }
  }
  cls.kind = TwoFaceKind::Other;
  for (const IntVec& p : fpts)
    if (std::find(fverts.begin(), fverts.end(), p) == fverts.end()) {
      cls.witness = p;
      break;
    }
  return cls;
}

ConifoldVerdict check_conditions(const Polytope& DeltaStar) {
  ConifoldVerdict v;
  v.delta = dual(DeltaStar);
  v.k = divisibility(v.delta).k;
  v.divisibleBy2 = (v.k % 2 == 0);
  v.deltaStarFaces = face_lattice(DeltaStar);
  std::vector<IntVec> pts = lattice_points(DeltaStar);
  v.twoFaceIndices = v.deltaStarFaces.ofDim(2);
  v.facesOk = true;
  for (int fi : v.twoFaceIndices) {
    TwoFaceClass cls = classify_two_face(DeltaStar, v.deltaStarFaces.faces[fi], pts);
    if (cls.kind == TwoFaceKind::Other) v.facesOk = false;
    v.faceClasses.push_back(std::move(cls));
  }
  v.accepted = v.divisibleBy2 && v.facesOk;
  return v;
}

}  // namespace conifano
