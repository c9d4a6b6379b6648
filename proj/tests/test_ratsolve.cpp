#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "elwave/ratsolve.hpp"

#include <stdexcept>

using namespace elwave;

TEST_CASE("full-rank system has a unique exact solution") {
  RatMat A = {{rat(2), rat(1)}, {rat(1), rat(3)}};
  RatVec b = {rat(5), rat(10)};
  auto space = solve_affine(A, b);
  REQUIRE(space.has_value());
  CHECK(space->dim() == 0);
  CHECK(space->origin[0] == rat(1));
  CHECK(space->origin[1] == rat(3));
}

TEST_CASE("underdetermined system keeps its free directions") {
  RatMat A = {{rat(1), rat(1)}};
  RatVec b = {rat(2)};
  auto space = solve_affine(A, b);
  REQUIRE(space.has_value());
  CHECK(space->dim() == 1);
  // origin satisfies the constraint, basis spans its null space
  CHECK(space->origin[0] + space->origin[1] == rat(2));
  CHECK(space->basis[0][0] + space->basis[1][0] == rat(0));
  CHECK((space->basis[0][0] != 0 || space->basis[1][0] != 0));
}

TEST_CASE("redundant but consistent rows do not shrink the solution set") {
  RatMat A = {{rat(1), rat(1)}, {rat(2), rat(2)}};
  RatVec b = {rat(2), rat(4)};
  auto space = solve_affine(A, b);
  REQUIRE(space.has_value());
  CHECK(space->dim() == 1);
}

TEST_CASE("inconsistent system reports no solution") {
  RatMat A = {{rat(1)}, {rat(1)}};
  RatVec b = {rat(1), rat(2)};
  CHECK_FALSE(solve_affine(A, b).has_value());
}

TEST_CASE("norm minimization over a line picks the closest point") {
  // minimize x^2 + y^2 subject to x + y = 2 -> (1, 1)
  auto line = solve_affine({{rat(1), rat(1)}}, {rat(2)});
  REQUIRE(line.has_value());
  QuadraticObjective norm2;
  norm2.C = {{rat(1), rat(0)}, {rat(0), rat(1)}};
  norm2.d = {rat(0), rat(0)};
  AffineSpace best = minimize_on(*line, norm2);
  CHECK(best.dim() == 0);
  CHECK(best.origin[0] == rat(1));
  CHECK(best.origin[1] == rat(1));
}

TEST_CASE("partial objective narrows the set without fixing it") {
  // On the plane x + y + z = 3, minimizing (x - y)^2 leaves a line.
  auto plane = solve_affine({{rat(1), rat(1), rat(1)}}, {rat(3)});
  REQUIRE(plane.has_value());
  CHECK(plane->dim() == 2);
  QuadraticObjective diff;
  diff.C = {{rat(1), rat(-1), rat(0)}};
  diff.d = {rat(0)};
  AffineSpace narrowed = minimize_on(*plane, diff);
  CHECK(narrowed.dim() == 1);
  CHECK(narrowed.origin[0] == narrowed.origin[1]);
}

TEST_CASE("staged least-squares resolves all freedom") {
  // x + y = 2, then minimize (x - y)^2: unique answer (1, 1).
  RatMat A = {{rat(1), rat(1)}};
  RatVec b = {rat(2)};
  QuadraticObjective diff;
  diff.C = {{rat(1), rat(-1)}};
  diff.d = {rat(0)};
  QuadraticObjective norm2;
  norm2.C = {{rat(1), rat(0)}, {rat(0), rat(1)}};
  norm2.d = {rat(0), rat(0)};
  RatVec x = lexicographic_least_squares(A, b, {diff, norm2});
  REQUIRE(x.size() == 2);
  CHECK(x[0] == rat(1));
  CHECK(x[1] == rat(1));
}

TEST_CASE("earlier objectives take priority over later ones") {
  // Free 2-vector. Stage 1 forces x = 5 (exactly attainable); stage 2 wants
  // y = 7 and must not disturb stage 1.
  RatMat A = {{rat(0), rat(0)}};
  RatVec b = {rat(0)};
  QuadraticObjective first;
  first.C = {{rat(1), rat(0)}};
  first.d = {rat(5)};
  QuadraticObjective second;
  second.C = {{rat(1), rat(1)}};
  second.d = {rat(12)};
  RatVec x = lexicographic_least_squares(A, b, {first, second});
  CHECK(x[0] == rat(5));
  CHECK(x[1] == rat(7));
}

TEST_CASE("leftover freedom after all objectives is an error") {
  RatMat A = {{rat(0), rat(0)}};
  RatVec b = {rat(0)};
  QuadraticObjective sum;
  sum.C = {{rat(1), rat(1)}};
  sum.d = {rat(2)};
  CHECK_THROWS_AS(lexicographic_least_squares(A, b, {sum}), std::logic_error);
}
