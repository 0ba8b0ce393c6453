#include "doctest.h"

#include "conifano/matrix.hpp"

using namespace conifano;

TEST_CASE("IntMatrix basics") {
  IntMatrix A{{1, 2}, {3, 4}};
  CHECK(A.rows() == 2);
  CHECK(A.cols() == 2);
  CHECK(A.at(1, 0) == 3);
  CHECK(A.transposed().at(0, 1) == 3);
  CHECK(A * IntMatrix::identity(2) == A);

  IntVec v{1, 1};
  IntVec Av = A * v;
  CHECK(Av == IntVec{3, 7});

  IntMatrix B = IntMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(B == A);
  CHECK(IntMatrix::from_columns({{1, 3}, {2, 4}}) == A);
}

TEST_CASE("row and column operations") {
  IntMatrix A{{1, 2}, {3, 4}};
  A.swap_rows(0, 1);
  CHECK(A == IntMatrix{{3, 4}, {1, 2}});
  A.add_row(0, 1, -3);
  CHECK(A == IntMatrix{{0, -2}, {1, 2}});
  A.negate_row(0);
  CHECK(A == IntMatrix{{0, 2}, {1, 2}});
  A.swap_cols(0, 1);
  CHECK(A == IntMatrix{{2, 0}, {2, 1}});
  A.add_col(1, 0, 1);
  CHECK(A == IntMatrix{{2, 2}, {2, 3}});
  A.negate_col(0);
  CHECK(A == IntMatrix{{-2, 2}, {-2, 3}});
  CHECK_FALSE(A.is_zero());
  CHECK(IntMatrix(2, 3).is_zero());
}

TEST_CASE("Bareiss determinant") {
  CHECK(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}.determinant() == -3);
  CHECK(IntMatrix{{2, 0}, {0, 3}}.determinant() == 6);
  CHECK(IntMatrix{{1, 2}, {2, 4}}.determinant() == 0);
  CHECK(IntMatrix::identity(5).determinant() == 1);
}

TEST_CASE("vector helpers") {
  CHECK(dot(IntVec{1, 2, 3}, IntVec{4, 5, 6}) == 32);
  CHECK(sub(IntVec{4, 5}, IntVec{1, 7}) == IntVec{3, -2});
  CHECK(content(IntVec{6, -9, 15}) == 3);
  CHECK(content(IntVec{0, 0}) == 0);
}

TEST_CASE("make_rat canonicalizes") {
  Rat q = make_rat(4, -6);
  CHECK(q == Rat(-2, 3));
  CHECK(q.get_den() == 3);
  CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
}

TEST_CASE("RatMatrix product") {
  RatMatrix A = RatMatrix::from(IntMatrix{{1, 2}, {3, 4}});
  RatMatrix I = RatMatrix::identity(2);
  CHECK(A * I == A);
  RatVec v{make_rat(1, 2), make_rat(1, 2)};
  RatVec Av = A * v;
  CHECK(Av[0] == make_rat(3, 2));
  CHECK(Av[1] == make_rat(7, 2));
}
