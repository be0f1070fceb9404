#ifndef CRNKIT_LP_HPP
#define CRNKIT_LP_HPP

#include <optional>
#include <vector>

#include "crnkit/matrix.hpp"

namespace crn {

// Exact-rational linear programming over the standard form
//     max / min  c.x   subject to  A x = b,  x >= 0.
// Two-phase primal simplex with Bland's rule (guaranteed to terminate).
struct LpResult {
  enum Status { Optimal, Infeasible, Unbounded } status;
  Rat value;           // objective at optimum (valid when Optimal)
  std::vector<Rat> x;  // primal point (valid when Optimal)
};

LpResult lp_solve(const RatMatrix& a, const std::vector<Rat>& b, const std::vector<Rat>& c,
                  bool maximize);

// Feasibility of { x >= 0 : A x = b } (phase one only).
std::optional<std::vector<Rat>> lp_feasible_point(const RatMatrix& a, const std::vector<Rat>& b);

// Relation codes for sign-constrained subspace queries.
// Looks for y in the row space of `basis_rows` whose coordinates obey the
// requested pattern: +1 -> y_i >= 1, -1 -> y_i <= -1, 0 -> y_i = 0.
// (The >=1 / <=-1 normalization is lossless for the sign question because the
// feasible set is a cone.) Returns the witness y on success.
std::optional<std::vector<Rat>> subspace_sign_witness(const RatMatrix& basis_rows,
                                                      const std::vector<int>& pattern);

}  // namespace crn

#endif
