#pragma once

#include <array>

#include "conifano/polytope.hpp"

namespace conifano {

enum class TwoFaceKind { UnimodularTriangle, UnitParallelogram, Other };

struct TwoFaceClass {
  TwoFaceKind kind = TwoFaceKind::Other;
  int latticePointCount = 0;
  Int area2 = 0;  // normalized area of the face polygon (area certificate)
  // For UnitParallelogram: global vertex indices with
  // v[pairing[0]] + v[pairing[2]] == v[pairing[1]] + v[pairing[3]].
  std::array<int, 4> pairing{-1, -1, -1, -1};
  std::optional<IntVec> witness;  // for Other: a non-vertex lattice point, if any
};

TwoFaceClass classify_two_face(const Polytope& P, const Face& F,
                               const std::vector<IntVec>& allPoints);

struct ConifoldVerdict {
  bool divisibleBy2 = false;
  bool facesOk = false;
  bool accepted = false;
  Int k = 1;                          // maximal divisor of Delta
  Polytope delta;                     // dual(DeltaStar)
  FaceLattice deltaStarFaces;         // full face lattice of DeltaStar
  std::vector<int> twoFaceIndices;    // indices into deltaStarFaces.faces
  std::vector<TwoFaceClass> faceClasses;  // aligned with twoFaceIndices
};

// Both defining conditions: Delta divisible by 2, and every 2-face of
// DeltaStar a unimodular triangle or unit parallelogram.
ConifoldVerdict check_conditions(const Polytope& DeltaStar);

}  // namespace conifano
