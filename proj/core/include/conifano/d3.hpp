#pragma once

#include <array>

#include "conifano/series.hpp"

namespace conifano {

// L = sum_{j=0..J} t^j P_j(D), D = t d/dt, deg P_j <= 3, P_0 = D^3.
struct D3Operator {
  int J = 4;
  std::vector<std::array<Rat, 4>> P;  // P[j][e] = coefficient of D^e in P_j

  static D3Operator euler_cubed(int J = 4);
  Rat eval(int j, const Rat& x) const;  // P_j(x)
  bool operator==(const D3Operator&) const = default;
  std::string str() const;
};

// Coefficient-wise image of S under L, complete through degree upTo
// (clamped to S.truncationDegree).
SeriesTable apply(const D3Operator& L, const SeriesTable& S, int upTo);

enum class FitStatus { Fitted, Underdetermined, NoOperator };

struct FitResult {
  FitStatus status = FitStatus::NoOperator;
  D3Operator op;                  // zero-preferred representative when underdetermined
  std::vector<RatVec> nullspace;  // of the fitting system, for transparency
};

// Fit L with P_0 = D^3 annihilating S: equations for m = 1..4J+12, then the
// candidate is verified against every remaining degree of the table.
FitResult fit(const SeriesTable& S, int J = 4);

// 4x4 counting matrix: subdiagonal 1, below it 0, a_ij = a_{3-j,3-i}.
// Free entries: a00, a01, a02, a03, a11, a12.
struct CountingMatrix {
  Rat a00, a01, a02, a03, a11, a12;
  RatMatrix matrix() const;  // full 4x4 with the symmetry filled in
  bool operator==(const CountingMatrix&) const = default;
};

D3Operator operator_from_matrix(const CountingMatrix& A);
// Triangular inversion of the operator display; throws "not of counting shape"
// when no matrix reproduces L exactly.
CountingMatrix matrix_from_operator(const D3Operator& L);

// B - A = lambda * identity?  Returns lambda on success.
std::optional<Rat> matrices_equivalent(const CountingMatrix& A, const CountingMatrix& B);

}  // namespace conifano
