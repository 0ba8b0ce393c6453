#include "conifano/d3.hpp"

#include <sstream>

namespace conifano {

namespace {

using Poly = std::vector<Rat>;  // coefficient of D^e at index e

Poly mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Poly scale(Poly a, const Rat& s) {
  for (Rat& x : a) x *= s;
  return a;
}

std::array<Rat, 4> cubic(const Poly& p) {
  std::array<Rat, 4> c{};
  for (size_t i = 0; i < p.size(); ++i) {
    if (i > 3) {
      if (p[i] != 0) throw error("polynomial degree exceeds 3");
      continue;
    }
    c[i] = p[i];
  }
  return c;
}

}  // namespace

D3Operator D3Operator::euler_cubed(int J) {
  D3Operator L;
  L.J = J;
  L.P.assign(J + 1, {Rat(0), Rat(0), Rat(0), Rat(0)});
  L.P[0][3] = 1;
  return L;
}

Rat D3Operator::eval(int j, const Rat& x) const {
  Rat v = 0;
  for (int e = 3; e >= 0; --e) v = v * x + P[j][e];
  return v;
}

std::string D3Operator::str() const {
  std::ostringstream os;
  for (int j = 0; j <= J; ++j) {
    os << "t^" << j << ":";
    for (int e = 0; e < 4; ++e) os << " " << P[j][e].get_str();
    os << "\n";
  }
  return os.str();
}

SeriesTable apply(const D3Operator& L, const SeriesTable& S, int upTo) {
  if (S.variableCount != 1) throw error("apply: one-parameter series required");
  SeriesTable out;
  out.variableCount = 1;
  out.truncationDegree = std::min(upTo, S.truncationDegree);
  for (int m = 0; m <= out.truncationDegree; ++m) {
    Rat c = 0;
    for (int j = 0; j <= L.J && j <= m; ++j) c += L.eval(j, Rat(m - j)) * S.at(m - j);
    out.coefficients[{m}] = c;
  }
  return out;
}

FitResult fit(const SeriesTable& S, int J) {
  if (S.variableCount != 1) throw error("fit: one-parameter series required");
  int unknowns = 4 * J;  // P_j coefficients for j = 1..J
  int window = std::min(S.truncationDegree, 4 * J + 12);
  RatMatrix A(window, unknowns);
  RatVec b(window);
  for (int m = 1; m <= window; ++m) {
    for (int j = 1; j <= J; ++j) {
      Rat am = S.at(m - j);
      if (m - j < 0 || am == 0) continue;
      Rat pw = 1;
      for (int e = 0; e < 4; ++e) {
        A.at(m - 1, 4 * (j - 1) + e) = pw * am;
        pw *= m - j;
      }
    }
    b[m - 1] = Rat(-1) * Rat(m) * Rat(m) * Rat(m) * S.at(m);
  }
  RationalSolution sol = solve_rational(A, b);
  FitResult res;
  if (sol.status == SolveStatus::Inconsistent) {
    res.status = FitStatus::NoOperator;
    return res;
  }
  res.op = D3Operator::euler_cubed(J);
  for (int j = 1; j <= J; ++j)
    for (int e = 0; e < 4; ++e) res.op.P[j][e] = sol.particular[4 * (j - 1) + e];
  res.nullspace = sol.nullspace;
  // verify on every degree of the table, not just the fitting window
  for (int m = 1; m <= S.truncationDegree; ++m) {
    Rat c = 0;
    for (int j = 0; j <= J && j <= m; ++j) c += res.op.eval(j, Rat(m - j)) * S.at(m - j);
    if (c != 0) {
      res.status = FitStatus::NoOperator;
      return res;
    }
  }
  res.status =
      sol.status == SolveStatus::Unique ? FitStatus::Fitted : FitStatus::Underdetermined;
  return res;
}

RatMatrix CountingMatrix::matrix() const {
  RatMatrix m(4, 4);
  m.at(0, 0) = a00; m.at(0, 1) = a01; m.at(0, 2) = a02; m.at(0, 3) = a03;
  m.at(1, 0) = 1;   m.at(1, 1) = a11; m.at(1, 2) = a12; m.at(1, 3) = a02;
  m.at(2, 0) = 0;   m.at(2, 1) = 1;   m.at(2, 2) = a11; m.at(2, 3) = a01;
  m.at(3, 0) = 0;   m.at(3, 1) = 0;   m.at(3, 2) = 1;   m.at(3, 3) = a00;
  return m;
}

D3Operator operator_from_matrix(const CountingMatrix& A) {
  const Rat &a00 = A.a00, &a01 = A.a01, &a02 = A.a02, &a03 = A.a03, &a11 = A.a11,
            &a12 = A.a12;
  D3Operator L = D3Operator::euler_cubed(4);
  // - t (2D+1) ((a00+a11) D^2 + (a00+a11) D + a00)
  L.P[1] = cubic(scale(mul({Rat(1), Rat(2)}, {a00, a00 + a11, a00 + a11}), Rat(-1)));
  // + t^2 (D+1) (alpha D^2 + beta D + gamma)
  Rat alpha = a11 * a11 + a00 * a00 + 4 * a11 * a00 - a12 - 2 * a01;
  Rat beta = 8 * a11 * a00 - 2 * a12 - 4 * a01 + 2 * a11 * a11;
  Rat gamma = 6 * a11 * a00 - 4 * a01;
  L.P[2] = cubic(mul({Rat(1), Rat(1)}, {gamma, beta, alpha}));
  // - t^3 (2D+3)(D+2)(D+1) c3
  Rat c3 = a00 * a00 * a11 + a11 * a11 * a00 - a12 * a00 + a02 - a11 * a01 - a01 * a00;
  L.P[3] = cubic(scale(mul(mul({Rat(3), Rat(2)}, {Rat(2), Rat(1)}), {Rat(1), Rat(1)}), -c3));
  // + t^4 (D+3)(D+2)(D+1) c4
  Rat c4 = -a00 * a00 * a12 + 2 * a02 * a00 + a00 * a00 * a11 * a11 - a03 + a01 * a01 -
           2 * a01 * a11 * a00;
  L.P[4] = cubic(scale(mul(mul({Rat(3), Rat(1)}, {Rat(2), Rat(1)}), {Rat(1), Rat(1)}), c4));
  return L;
}

CountingMatrix matrix_from_operator(const D3Operator& L) {
  if (L.J > 4) throw error("not of counting shape");
  D3Operator L4 = D3Operator::euler_cubed(4);
  for (int j = 0; j <= L.J; ++j) L4.P[j] = L.P[j];
  if (L4.P[0] != std::array<Rat, 4>{Rat(0), Rat(0), Rat(0), Rat(1)})
    throw error("not of counting shape");
  CountingMatrix A;
  // triangular inversion of the display, one t-power at a time
  A.a00 = -L4.eval(1, Rat(0));
  A.a11 = -L4.P[1][3] / 2 - A.a00;
  A.a01 = (6 * A.a00 * A.a11 - L4.eval(2, Rat(0))) / 4;
  A.a12 = A.a11 * A.a11 + A.a00 * A.a00 + 4 * A.a00 * A.a11 - 2 * A.a01 - L4.P[2][3];
  Rat c3 = -L4.P[3][3] / 2;
  A.a02 = c3 - A.a00 * A.a00 * A.a11 - A.a11 * A.a11 * A.a00 + A.a12 * A.a00 +
          A.a11 * A.a01 + A.a01 * A.a00;
  Rat c4 = L4.P[4][3];
  A.a03 = -c4 - A.a00 * A.a00 * A.a12 + 2 * A.a02 * A.a00 + A.a00 * A.a00 * A.a11 * A.a11 +
          A.a01 * A.a01 - 2 * A.a01 * A.a11 * A.a00;
  if (operator_from_matrix(A) != L4) throw error("not of counting shape");
  return A;
}

std::optional<Rat> matrices_equivalent(const CountingMatrix& A, const CountingMatrix& B) {
  if (A.a01 != B.a01 || A.a02 != B.a02 || A.a03 != B.a03 || A.a12 != B.a12)
    return std::nullopt;
  Rat lambda = B.a00 - A.a00;
  if (B.a11 - A.a11 != lambda) return std::nullopt;
  return lambda;
}

}  // namespace conifano
