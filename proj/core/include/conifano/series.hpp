#pragma once

#include <map>

#include "conifano/polytope.hpp"

namespace conifano {

struct RelationLattice {
  int n = 0;                  // vertex count
  std::vector<IntVec> basis;  // saturated kernel of the vertex matrix, rank n - 4
  std::vector<IntVec> vertices;  // the Delta* vertices, fixing the column order
  // (kappa, k) = (sum k_i)/2
  Int kappaDegree(const IntVec& k) const;
};

// Throws "odd kappa degree" if some kernel basis vector has odd coordinate sum.
RelationLattice relation_lattice(const Polytope& DeltaStar);

// All k in Lambda+ (componentwise nonnegative) with kappaDegree <= maxKappa,
// sorted; includes 0.
std::vector<IntVec> enumerate_nonnegative(const RelationLattice& L, int maxKappa);

struct SeriesTable {
  int variableCount = 1;
  int truncationDegree = 0;  // complete for all kappa-degrees <= this bound
  // phi0: key = {m}.  phi_multi: key = {m, (lambda_1,k), ..., (lambda_r,k)}
  // with m = (kappa,k) kept as the leading component so the one-parameter
  // specialization is a plain fold over equal m.
  std::map<std::vector<int>, Rat> coefficients;

  Rat at(int m) const;  // one-parameter coefficient lookup, 0 if absent
};

// Phi0(t) = sum ((kappa,k)!)^2 / (k_1! ... k_n!) t^(kappa,k) over Lambda+.
SeriesTable phi0(const RelationLattice& L, int maxKappa);

// Multi-parameter Phi graded by the given Picard basis lifts.
SeriesTable phi_multi(const RelationLattice& L, const std::vector<IntVec>& picardBasis,
                      int maxKappa);

}  // namespace conifano
