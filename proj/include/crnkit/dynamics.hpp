#ifndef CRNKIT_DYNAMICS_HPP
#define CRNKIT_DYNAMICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crnkit/kinetics.hpp"

namespace crn {

struct SimOptions {
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  double floor_frac = 1e-12;  // positivity floor as a fraction of the initial total
  double h_init = 1e-4;
  long max_steps = 50'000'000;
};

struct Trajectory {
  std::vector<double> t;
  std::vector<std::vector<double>> x;  // one state per accepted step
  long steps_accepted = 0;
  long steps_rejected = 0;
};

// dx/dt = N K(x).
std::vector<double> vector_field(const Network& net, const KineticModel& km,
                                 const std::vector<double>& x);

// Dormand-Prince 5(4) with a positivity guard: a step that pushes any
// component to the floor or below is retried at half the size. Linear
// conserved quantities are preserved to rounding by the method itself.
Trajectory integrate(const Network& net, const KineticModel& km, const std::vector<double>& x0,
                     double t_end, const SimOptions& opts = {});

struct StoichClassSpec {
  std::vector<double> x0;  // reference point, defines the conserved totals
  double eps = 0.0;        // per-species positivity floor used by the extremum queries
};

struct NewtonOptions {
  double tol = 1e-10;  // residual scale factor
  int max_iter = 200;
  double class_tol = 1e-6;  // relative slack when checking the guess against the class
  // A converged point whose smallest component is below this fraction of the
  // class total is a boundary attractor, not a positive steady state, and is
  // reported as NoConvergence.
  double boundary_frac = 1e-7;
};

// Damped Newton on [independent rows of N K(x); w.x - w.x0] with an analytic
// Jacobian. The guess must lie in the class of `spec` (relative tolerance).
std::vector<double> find_steady_state(const Network& net, const KineticModel& km,
                                      const StoichClassSpec& spec,
                                      const std::vector<double>& guess,
                                      const NewtonOptions& opts = {});

struct Equilibrium {
  std::vector<double> x;
  double residual;  // ||N K(x)||_inf
};

struct EquilibriumSet {
  std::vector<Equilibrium> members;  // sorted by coordinates
  int starts_attempted = 0;
  int starts_converged = 0;
  std::uint64_t seed = 0;
};

// Newton from n_starts random points of the class (Dirichlet over the
// conservation simplex when the conserved basis is a single positive vector,
// otherwise rejection sampling in x0 + S). Distinct equilibria are merged at
// relative distance 1e-4; output order is deterministic for a given seed.
EquilibriumSet multistart_probe(const Network& net, const KineticModel& km,
                                const StoichClassSpec& spec, int n_starts, std::uint64_t seed,
                                const NewtonOptions& opts = {});

// ||Ia K(x)||_inf.
double complex_balance_residual(const Network& net, const KineticModel& km,
                                const std::vector<double>& x);

// Equilibria of an exchange system with p1 != p2, parametrized by the
// atmospheric pool: A1 = (k2/k1 A2^(q2-q1))^(1/(p1-p2)), A3 = A2/beta,
// A4 = (k5/k4) A2, A5 = (k5/k6) A2.
std::vector<double> dac_equilibrium_parametrization(const DacParameters& params, double a2);

// LHS - RHS of the conservation identity evaluated on the parametrized
// equilibrium with A2* = lambda A2^0.
double necessary_condition_residual(const DacParameters& params, double a2_0, double sum_0,
                                    double lambda);

// All bracketed roots of the residual on (0, 1), by grid scan + bisection.
std::vector<double> necessary_condition_roots(const DacParameters& params, double a2_0,
                                              double sum_0, int grid = 2048);

enum class ExtremumDirection { Minimize, Maximize };

struct ClassExtremum {
  Rat value;
  std::vector<Rat> argpoint;
};

// Exact LP extremum of sum_{i in objective} x_i over
// { x : w.x = w.x0 for all conserved w, x_i >= eps }.
ClassExtremum class_extremum(const Network& net, const StoichClassSpec& spec,
                             const std::vector<int>& objective, ExtremumDirection direction);

enum class ConditionStatus { Holds, Fails, NotApplicable };

const char* condition_status_name(ConditionStatus s);

enum class SufficientConditionKind { PNull, PosNeg };

struct SufficientConditionReport {
  SufficientConditionKind kind;
  ConditionStatus status;
  double t = 0;        // conserved total
  double m_upper = 0;  // max of the off-atmosphere coordinate sum (M'')
  double m_lower = 0;  // min of the atmosphere coordinate (m'), PosNeg only
  double lhs = 0, rhs = 0;
  double eps = 0;
  std::optional<double> a2_star;  // equilibrium atmosphere value when computed
  double a2_0 = 0;
  bool vacuous = false;  // eps = 0 makes the bound trivial
  std::optional<bool> empirical_reduction;  // A2* < A2^0 confirmed by a solve
  std::string warning;
};

// Checks the displayed reduction inequality for a recognized exchange model on
// the class of spec.x0, with extrema taken over the eps-floored closed class.
SufficientConditionReport check_sufficient_conditions(const Model& model,
                                                      const StoichClassSpec& spec,
                                                      SufficientConditionKind kind);

}  // namespace crn

#endif
