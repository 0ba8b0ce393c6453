#pragma once

#include <map>
#include <string>

#include "conifano/conifold.hpp"

namespace conifano {

struct PLLattice {
  int ambientRank = 0;            // n = vertex count of DeltaStar
  std::vector<IntVec> equations;  // one row per parallelogram 2-face
  std::vector<IntVec> basis;      // lattice basis of the solution set
  int rank = 0;                   // rank of the solution set (= n - rk)
  int rk() const { return ambientRank - rank; }
};

PLLattice pl_lattice(int n, const std::vector<TwoFaceClass>& faceClasses);

struct PicardGroup {
  int rank = 0;                       // n - 4 - rk
  std::vector<Int> invariantFactors;  // torsion factors (> 1 entries only)
  // Lifts of a quotient basis lambda_1..lambda_r to PL(DeltaStar) in Z^n;
  // used as the gradings of the multi-parameter series.
  std::vector<IntVec> basisLift;
};

PicardGroup picard(const Polytope& DeltaStar, const PLLattice& pl);

struct SqDp {
  int sq = 0;
  int dp = 0;
};

SqDp sq_dp(const Polytope& DeltaStar, const Polytope& Delta, const FaceLattice& fl,
           const std::vector<int>& twoFaceIndices, const std::vector<TwoFaceClass>& faceClasses);

// 1 iff Delta = 2*Delta' with Delta' a pyramid over a 3-dim reflexive polytope.
int py(const Polytope& Delta);

// Divisibility of the anticanonical class 2*kappa (the all-ones functional) in
// the free part of the Picard group; informational cross-check for the index.
Int kappa2_divisibility(const Polytope& DeltaStar, const PLLattice& pl);

struct InvariantRecord {
  std::string id;
  int vert = 0, rk = 0, sq = 0, dp = 0, py = 0, h21 = 0, b2 = 0;
  Int deg = 0;
  std::vector<Int> picardInvariantFactors;
  std::string typeLabel;  // ingested metadata, not computed
};

InvariantRecord full_record(const Polytope& DeltaStar, const std::string& id);

std::map<int, int> b2_distribution(const std::vector<InvariantRecord>& records);

}  // namespace conifano
