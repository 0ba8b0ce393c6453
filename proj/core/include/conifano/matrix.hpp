#pragma once

#include <gmpxx.h>

#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace conifano {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Reduced fraction with positive denominator (mpq arithmetic keeps results
// canonical; this is for the n/d constructor which does not).
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  static IntMatrix from_columns(const std::vector<IntVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  IntVec row(int i) const;
  IntVec column(int j) const;

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVec operator*(const IntVec& v) const;
  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  // row a += q * row b
  void add_row(int a, int b, const Int& q);
  void add_col(int a, int b, const Int& q);
  void negate_row(int a);
  void negate_col(int a);

  bool is_zero() const;
  Int determinant() const;  // Bareiss, square matrices only

  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static RatMatrix from(const IntMatrix& m);
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& rhs) const;
  RatVec operator*(const RatVec& v) const;
  bool operator==(const RatMatrix& rhs) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

Int dot(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
Int content(const IntVec& v);  // gcd of entries, 0 for the zero vector

}  // namespace conifano
