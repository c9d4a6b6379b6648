#pragma once

#include <cstddef>
#include <optional>

#include "elwave/rational.hpp"

namespace elwave {

// Affine solution set {x = origin + basis * t} of a consistent linear system.
// basis has one column per remaining degree of freedom (empty when the
// solution is unique).
struct AffineSpace {
  RatVec origin;
  RatMat basis;  // origin.size() x dof

  std::size_t dim() const { return basis.empty() ? 0 : basis[0].size(); }
};

// Reduces A*x = b exactly. Returns std::nullopt when the system is
// inconsistent.
std::optional<AffineSpace> solve_affine(const RatMat& A, const RatVec& b);

// One quadratic objective: minimize |C*x - d|^2.
struct QuadraticObjective {
  RatMat C;
  RatVec d;
};

// Restricts `space` to the minimizers of the objective (normal equations over
// the rationals). The result is again an affine space; dimension can only
// shrink.
AffineSpace minimize_on(const AffineSpace& space, const QuadraticObjective& obj);

// Applies the objectives in order, each restricted to the minimizers of the
// previous ones. The caller is responsible for making the last objective
// strictly convex (e.g. full-vector distance to a nominal point) if a unique
// answer is required.
RatVec lexicographic_least_squares(const RatMat& A, const RatVec& b,
                                   const std::vector<QuadraticObjective>& objectives);

}  // namespace elwave
