#pragma once

#include "conifano/matrix.hpp"

namespace conifano {

// H = U * A with U unimodular.  Row-echelon Hermite form: in each nonzero row
// the leading entry (pivot) is positive, entries above a pivot are reduced
// into [0, pivot), zero rows at the bottom.
struct HermiteResult {
  IntMatrix H;
  IntMatrix U;
  int rank = 0;
};
HermiteResult hermite_normal_form(const IntMatrix& A);

int rank_of(const IntMatrix& A);

// left * A * right = diag(d1..dr, 0..), d_i >= 0, d_i | d_{i+1}.
struct SmithDecomposition {
  std::vector<Int> diag;  // length min(rows, cols)
  IntMatrix left, right;  // unimodular
  int rank = 0;           // number of nonzero invariant factors
};
SmithDecomposition smith_normal_form(const IntMatrix& A);

// Basis of the saturated lattice { x in Z^cols : A x = 0 }.
std::vector<IntVec> integer_kernel(const IntMatrix& A);

// Basis of the saturation of the lattice spanned by the given vectors
// (smallest saturated sublattice containing them), in Hermite form.
std::vector<IntVec> saturate_span(const std::vector<IntVec>& vectors);

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct RationalSolution {
  SolveStatus status = SolveStatus::Inconsistent;
  RatVec particular;              // free variables set to 0
  std::vector<RatVec> nullspace;  // basis of { x : A x = 0 }
};
RationalSolution solve_rational(const RatMatrix& A, const RatVec& b);

// Inverse of a unimodular integer matrix (exact, integer entries).
IntMatrix unimodular_inverse(const IntMatrix& U);

}  // namespace conifano
