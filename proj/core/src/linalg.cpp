#include "conifano/linalg.hpp"

namespace conifano {

HermiteResult hermite_normal_form(const IntMatrix& A) {
  HermiteResult res{A, IntMatrix::identity(A.rows()), 0};
  IntMatrix& H = res.H;
  IntMatrix& U = res.U;
  int r = 0;
  for (int j = 0; j < H.cols() && r < H.rows(); ++j) {
    // gcd-reduce column j over rows >= r
    while (true) {
      int piv = -1;
      for (int i = r; i < H.rows(); ++i)
        if (H.at(i, j) != 0 && (piv < 0 || abs(H.at(i, j)) < abs(H.at(piv, j)))) piv = i;
      if (piv < 0) break;
      bool clean = true;
      for (int i = r; i < H.rows(); ++i) {
        if (i == piv || H.at(i, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), H.at(i, j).get_mpz_t(), H.at(piv, j).get_mpz_t());
        H.add_row(i, piv, -q);
        U.add_row(i, piv, -q);
        if (H.at(i, j) != 0) clean = false;
      }
      if (clean) {
        if (piv != r) {
          H.swap_rows(piv, r);
          U.swap_rows(piv, r);
        }
        if (H.at(r, j) < 0) {
          H.negate_row(r);
          U.negate_row(r);
        }
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), H.at(i, j).get_mpz_t(), H.at(r, j).get_mpz_t());
          if (q != 0) {
            H.add_row(i, r, -q);
            U.add_row(i, r, -q);
          }
        }
        ++r;
        break;
      }
    }
  }
  res.rank = r;
  return res;
}

int rank_of(const IntMatrix& A) { return hermite_normal_form(A).rank; }

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  IntMatrix D = A;
  IntMatrix L = IntMatrix::identity(A.rows());
  IntMatrix R = IntMatrix::identity(A.cols());
  int n = std::min(A.rows(), A.cols());
  for (int t = 0; t < n; ++t) {
    // locate a nonzero pivot in the trailing submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < D.rows(); ++i)
      for (int j = t; j < D.cols(); ++j)
        if (D.at(i, j) != 0 && (pi < 0 || abs(D.at(i, j)) < abs(D.at(pi, pj)))) pi = i, pj = j;
    if (pi < 0) break;
    if (pi != t) { D.swap_rows(t, pi); L.swap_rows(t, pi); }
    if (pj != t) { D.swap_cols(t, pj); R.swap_cols(t, pj); }
    while (true) {
      // clear column t below the pivot
      bool again = false;
      for (int i = t + 1; i < D.rows(); ++i) {
        if (D.at(i, t) == 0) continue;
        Int q = D.at(i, t) / D.at(t, t);
        D.add_row(i, t, -q);
        L.add_row(i, t, -q);
        if (D.at(i, t) != 0) {
          D.swap_rows(t, i);
          L.swap_rows(t, i);
          again = true;
        }
      }
      if (again) continue;
      for (int j = t + 1; j < D.cols(); ++j) {
        if (D.at(t, j) == 0) continue;
        Int q = D.at(t, j) / D.at(t, t);
        D.add_col(j, t, -q);
        R.add_col(j, t, -q);
        if (D.at(t, j) != 0) {
          D.swap_cols(t, j);
          R.swap_cols(t, j);
          again = true;
        }
      }
      if (again) continue;
      // pivot must divide every remaining entry
      bool fixed = true;
      for (int i = t + 1; i < D.rows() && fixed; ++i)
        for (int j = t + 1; j < D.cols() && fixed; ++j)
          if (D.at(i, j) % D.at(t, t) != 0) {
            D.add_row(t, i, 1);
            L.add_row(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (D.at(t, t) < 0) {
      D.negate_row(t);
      L.negate_row(t);
    }
  }
  SmithDecomposition res;
  res.left = L;
  res.right = R;
  res.diag.resize(n);
  for (int t = 0; t < n; ++t) {
    res.diag[t] = D.at(t, t);
    if (res.diag[t] != 0) ++res.rank;
  }
  return res;
}

std::vector<IntVec> integer_kernel(const IntMatrix& A) {
  int d = A.cols();
  IntMatrix M = A;
  IntMatrix U = IntMatrix::identity(d);
  // column echelon with unimodular column ops tracked in U
  int pivcol = 0;
  for (int r = 0; r < M.rows() && pivcol < d; ++r) {
    while (true) {
      int j0 = -1;
      int nz = 0;
      for (int j = pivcol; j < d; ++j)
        if (M.at(r, j) != 0) {
          ++nz;
          if (j0 < 0 || abs(M.at(r, j)) < abs(M.at(r, j0))) j0 = j;
        }
      if (nz == 0) break;
      if (nz == 1) {
        if (j0 != pivcol) { M.swap_cols(j0, pivcol); U.swap_cols(j0, pivcol); }
        break;
      }
      for (int j = pivcol; j < d; ++j) {
        if (j == j0 || M.at(r, j) == 0) continue;
        Int q = M.at(r, j) / M.at(r, j0);
        if (q != 0) { M.add_col(j, j0, -q); U.add_col(j, j0, -q); }
      }
    }
    bool nonzero = false;
    for (int j = pivcol; j < d; ++j)
      if (M.at(r, j) != 0) nonzero = true;
    if (nonzero) ++pivcol;
  }
  std::vector<IntVec> ker;
  for (int j = 0; j < d; ++j) {
    bool zero = true;
    for (int r = 0; r < M.rows(); ++r)
      if (M.at(r, j) != 0) zero = false;
    if (zero) ker.push_back(U.column(j));
  }
  return ker;
}

std::vector<IntVec> saturate_span(const std::vector<IntVec>& vectors) {
  if (vectors.empty()) return {};
  int d = static_cast<int>(vectors[0].size());
  std::vector<IntVec> orth = integer_kernel(IntMatrix::from_rows(vectors));
  std::vector<IntVec> basis;
  if (orth.empty()) {
    for (int i = 0; i < d; ++i) {
      IntVec e(d);
      e[i] = 1;
      basis.push_back(e);
    }
  } else {
    basis = integer_kernel(IntMatrix::from_rows(orth));
  }
  // canonicalize via Hermite form
  HermiteResult h = hermite_normal_form(IntMatrix::from_rows(basis));
  std::vector<IntVec> out;
  for (int i = 0; i < h.rank; ++i) out.push_back(h.H.row(i));
  return out;
}

RationalSolution solve_rational(const RatMatrix& A, const RatVec& b) {
  int m = A.rows(), n = A.cols();
  if (static_cast<int>(b.size()) != m) throw error("solve_rational: rhs size mismatch");
  RatMatrix M(m, n + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, n) = b[i];
  }
  std::vector<int> pivot_of_row;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (M.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j <= n; ++j) std::swap(M.at(p, j), M.at(r, j));
    Rat pv = M.at(r, c);
    for (int j = c; j <= n; ++j) M.at(r, j) /= pv;
    for (int i = 0; i < m; ++i) {
      if (i == r || M.at(i, c) == 0) continue;
      Rat f = M.at(i, c);
      for (int j = c; j <= n; ++j) M.at(i, j) -= f * M.at(r, j);
    }
    pivot_of_row.push_back(c);
    ++r;
  }
  RationalSolution sol;
  for (int i = r; i < m; ++i)
    if (M.at(i, n) != 0) {
      sol.status = SolveStatus::Inconsistent;
      return sol;
    }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_of_row) is_pivot[c] = true;
  sol.particular.assign(n, Rat(0));
  for (int i = 0; i < r; ++i) sol.particular[pivot_of_row[i]] = M.at(i, n);
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(n, Rat(0));
    v[c] = 1;
    for (int i = 0; i < r; ++i) v[pivot_of_row[i]] = -M.at(i, c);
    sol.nullspace.push_back(std::move(v));
  }
  sol.status = sol.nullspace.empty() ? SolveStatus::Unique : SolveStatus::Underdetermined;
  return sol;
}

IntMatrix unimodular_inverse(const IntMatrix& U) {
  int n = U.rows();
  if (U.cols() != n) throw error("unimodular_inverse: not square");
  RatMatrix A = RatMatrix::from(U);
  IntMatrix inv(n, n);
  for (int j = 0; j < n; ++j) {
    RatVec e(n, Rat(0));
    e[j] = 1;
    RationalSolution s = solve_rational(A, e);
    if (s.status != SolveStatus::Unique) throw error("unimodular_inverse: singular matrix");
    for (int i = 0; i < n; ++i) {
      if (s.particular[i].get_den() != 1) throw error("unimodular_inverse: matrix not unimodular");
      inv.at(i, j) = s.particular[i].get_num();
    }
  }
  return inv;
}

}  // namespace conifano
