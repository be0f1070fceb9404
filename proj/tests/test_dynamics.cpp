// ODE integration, steady-state solving, probing, and the carbon-reduction
// condition checks.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "crnkit/dynamics.hpp"
#include "crnkit/error.hpp"
#include "crnkit/model_io.hpp"
#include "crnkit/structural.hpp"

using namespace crn;

namespace {

DacParameters orders(Rat p1, Rat p2, Rat q1, Rat q2) {
  DacParameters p;
  p.p1 = p1;
  p.p2 = p2;
  p.q1 = q1;
  p.q2 = q2;
  return p;
}

// Exchange fixture with a single steady state per class: P-null with
// A2* = (k1/k2)^{1/(q2-q1)} = 1/2.
DacParameters pnull_params() {
  DacParameters p = orders(Rat(1), Rat(1), Rat(1), Rat(0));
  p.k1 = 2;
  return p;
}

// Negative class (P = 1, Q = -1), mixed-sign determinant.
DacParameters negative_params() {
  return orders(Rat(0), Rat(1), Rat(1), Rat(0));
}

// Direct transcription of the box-model balance equations.
std::vector<double> hand_field(const DacParameters& p, const std::vector<double>& x) {
  double a1 = x[0], a2 = x[1], a3 = x[2], a4 = x[3], a5 = x[4];
  double r1 = p.k1 * std::pow(a1, rat_to_double(p.p1)) * std::pow(a2, rat_to_double(p.q1));
  double r2 = p.k2 * std::pow(a1, rat_to_double(p.p2)) * std::pow(a2, rat_to_double(p.q2));
  return {
      r1 - r2,
      -r1 + r2 - p.am * a2 + p.am * p.beta * a3 + p.k4 * a4 - p.k5 * a2,
      p.am * a2 - p.am * p.beta * a3,
      -p.k4 * a4 + p.k6 * a5,
      p.k5 * a2 - p.k6 * a5,
  };
}

double rel_diff(double a, double b) {
  return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}

double total(const std::vector<double>& x) {
  double s = 0;
  for (double v : x) s += v;
  return s;
}

Complex cx1(int sp) {
  Complex c;
  c.add(sp, Rat(1));
  return c;
}

Model triangle_model() {
  Network net;
  int a = net.add_species("A");
  int b = net.add_species("B");
  int c = net.add_species("C");
  net.add_reaction("R1", cx1(a), cx1(b));
  net.add_reaction("R2", cx1(b), cx1(c));
  net.add_reaction("R3", cx1(c), cx1(a));
  net.finalize();
  KineticModel km;
  km.f = RatMatrix(3, 3);
  km.f.at(0, 0) = Rat(1);
  km.f.at(1, 1) = Rat(1);
  km.f.at(2, 2) = Rat(1);
  km.rate_names = {"k1", "k2", "k3"};
  km.rate_values = {1.0, 1.0, 1.0};
  return Model{net, km};
}

}  // namespace

TEST_CASE("vector_field matches the balance equations") {
  std::mt19937 rng(11317);
  std::uniform_real_distribution<double> state(0.1, 5.0);
  std::uniform_real_distribution<double> rate(0.2, 3.0);
  std::uniform_int_distribution<long> ord(-2, 2);

  for (int iter = 0; iter < 10; ++iter) {
    DacParameters p = orders(Rat(ord(rng)), Rat(ord(rng)), Rat(ord(rng)), Rat(ord(rng)));
    p.k1 = rate(rng);
    p.k2 = rate(rng);
    p.k4 = rate(rng);
    p.k5 = rate(rng);
    p.k6 = rate(rng);
    p.am = rate(rng);
    p.beta = rate(rng);
    Model model = dac_preset(p);
    for (int j = 0; j < 100; ++j) {
      std::vector<double> x = {state(rng), state(rng), state(rng), state(rng), state(rng)};
      std::vector<double> f = vector_field(model.net, model.kin, x);
      std::vector<double> g = hand_field(p, x);
      REQUIRE(f.size() == 5);
      double scale = 1.0;
      for (double v : f) scale = std::max(scale, std::fabs(v));
      for (int i = 0; i < 5; ++i) CHECK(std::fabs(f[size_t(i)] - g[size_t(i)]) <= 1e-14 * scale);
      // w = (1,..,1) is conserved.
      CHECK(std::fabs(total(f)) <= 1e-13 * scale);
      // Air-sea exchange line of the model.
      CHECK(std::fabs(f[2] - (p.am * x[1] - p.am * p.beta * x[2])) <= 1e-14 * scale);
    }
  }
}

TEST_CASE("vector_field rejects nonpositive states") {
  Model model = dac_preset(DacParameters{});
  try {
    vector_field(model.net, model.kin, {1, -1, 1, 1, 1});
    FAIL_CHECK("expected NonpositiveState");
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::NonpositiveState);
  }
}

TEST_CASE("integrate echoes the state at t_end = 0") {
  Model model = dac_preset(DacParameters{});
  std::vector<double> x0 = {2, 1, 0.5, 0.25, 0.125};
  Trajectory tr = integrate(model.net, model.kin, x0, 0.0);
  REQUIRE(tr.t.size() == 1);
  CHECK(tr.t[0] == 0.0);
  CHECK(tr.x[0] == x0);
}

TEST_CASE("integrate holds an exact equilibrium still") {
  Model model = dac_preset(DacParameters{});  // all-ones is an equilibrium
  Trajectory tr = integrate(model.net, model.kin, {1, 1, 1, 1, 1}, 10.0);
  for (const auto& x : tr.x)
    for (double v : x) CHECK(rel_diff(v, 1.0) <= 1e-9);
}

TEST_CASE("P-null trajectory converges to the robust atmosphere value") {
  Model model = dac_preset(pnull_params());
  std::vector<double> x0 = {2, 1, 0.8, 0.7, 0.9};
  Trajectory tr = integrate(model.net, model.kin, x0, 200.0);
  const std::vector<double>& final_x = tr.x.back();
  CHECK(rel_diff(final_x[1], 0.5) <= 1e-6);
  CHECK(rel_diff(final_x[2], 0.5) <= 1e-6);

  double t0 = total(x0);
  for (const auto& x : tr.x) CHECK(std::fabs(total(x) - t0) / t0 <= 1e-9);
  CHECK(tr.steps_accepted > 0);
}

TEST_CASE("conservation holds on a stiff-ish bistable run") {
  DacParameters p;  // positive class defaults
  Model model = dac_preset(p);
  std::vector<double> x0 = {2, 1, 1, 1, 1};
  Trajectory tr = integrate(model.net, model.kin, x0, 100.0);
  double t0 = total(x0);
  for (const auto& x : tr.x) CHECK(std::fabs(total(x) - t0) / t0 <= 1e-9);
}

TEST_CASE("integration reports step-size underflow on finite-time blow-down") {
  // Single species, rate x^{-1} draining A: reaches zero in finite time.
  Network net;
  int a = net.add_species("A");
  Complex ca = cx1(a);
  Complex zero;
  net.add_reaction("R1", ca, zero);
  net.finalize();
  KineticModel km;
  km.f = RatMatrix(1, 1);
  km.f.at(0, 0) = Rat(-1);
  km.rate_names = {"k"};
  km.rate_values = {1.0};
  try {
    integrate(net, km, {1.0}, 10.0);
    FAIL_CHECK("expected StepSizeUnderflow");
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::StepSizeUnderflow);
  }
}

TEST_CASE("analytic Jacobian agrees with central differences") {
  std::mt19937 rng(271828);
  std::uniform_real_distribution<double> state(0.3, 3.0);
  DacParameters p = orders(Rat(1, 2), Rat(2), Rat(-1), Rat(1));
  p.k1 = 1.7;
  p.k2 = 0.6;
  p.beta = 1.4;
  Model model = dac_preset(p);
  RatMatrix n = stoichiometric_matrix(model.net);
  const RatMatrix& f = kinetic_order_matrix(model.kin);

  for (int iter = 0; iter < 25; ++iter) {
    std::vector<double> x = {state(rng), state(rng), state(rng), state(rng), state(rng)};
    std::vector<double> k = evaluate_rates(model.net, model.kin, x);

    // J_aj = sum_i N_ai K_i F_ij / x_j, the form the Newton solver assembles.
    double scale = 0;
    std::vector<std::vector<double>> jac(5, std::vector<double>(5, 0.0));
    for (int a = 0; a < 5; ++a)
      for (int j = 0; j < 5; ++j) {
        for (int i = 0; i < 7; ++i)
          jac[size_t(a)][size_t(j)] +=
              rat_to_double(n.at(a, i)) * k[size_t(i)] * rat_to_double(f.at(i, j)) / x[size_t(j)];
        scale = std::max(scale, std::fabs(jac[size_t(a)][size_t(j)]));
      }

    for (int j = 0; j < 5; ++j) {
      double h = 1e-6 * x[size_t(j)];
      std::vector<double> xp = x, xm = x;
      xp[size_t(j)] += h;
      xm[size_t(j)] -= h;
      std::vector<double> fp = vector_field(model.net, model.kin, xp);
      std::vector<double> fm = vector_field(model.net, model.kin, xm);
      for (int a = 0; a < 5; ++a) {
        double fd = (fp[size_t(a)] - fm[size_t(a)]) / (2 * h);
        CHECK(std::fabs(fd - jac[size_t(a)][size_t(j)]) <= 1e-6 * std::max(1.0, scale));
      }
    }
  }
}

TEST_CASE("find_steady_state recovers a parametrized equilibrium") {
  DacParameters p = negative_params();
  p.k1 = 3;
  p.k4 = 2;
  p.beta = 2;
  std::vector<double> star = dac_equilibrium_parametrization(p, 1.3);
  Model model = dac_preset(p);

  StoichClassSpec spec;
  spec.x0 = star;
  // Perturb inside the class along R3 and R5 directions.
  std::vector<double> guess = star;
  guess[1] -= 0.05;
  guess[2] += 0.02;
  guess[3] += 0.03;
  std::vector<double> found = find_steady_state(model.net, model.kin, spec, guess);
  for (int i = 0; i < 5; ++i) CHECK(rel_diff(found[size_t(i)], star[size_t(i)]) <= 1e-8);
}

TEST_CASE("find_steady_state rejects guesses outside the class") {
  Model model = dac_preset(pnull_params());
  StoichClassSpec spec;
  spec.x0 = {1, 1, 1, 1, 1};
  std::vector<double> guess = {1.5, 1, 1, 1, 1};
  try {
    find_steady_state(model.net, model.kin, spec, guess);
    FAIL_CHECK("expected ClassMismatch");
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::ClassMismatch);
  }
}

TEST_CASE("P-null steady states pin the atmosphere regardless of class") {
  Model model = dac_preset(pnull_params());
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  std::uniform_real_distribution<double> grow(1.0, 4.0);
  std::vector<double> a1_values;
  for (int cls = 0; cls < 10; ++cls) {
    double c = grow(rng);
    std::vector<double> x0 = {c * u(rng), u(rng), u(rng), u(rng), u(rng)};
    Trajectory tr = integrate(model.net, model.kin, x0, 60.0);
    StoichClassSpec spec;
    spec.x0 = x0;
    std::vector<double> eq = find_steady_state(model.net, model.kin, spec, tr.x.back());
    CHECK(rel_diff(eq[1], 0.5) <= 1e-6);
    CHECK(rel_diff(eq[2], 0.5) <= 1e-6);
    CHECK(rel_diff(eq[3], 0.5) <= 1e-6);
    CHECK(rel_diff(eq[4], 0.5) <= 1e-6);
    a1_values.push_back(eq[0]);
  }
  double lo = *std::min_element(a1_values.begin(), a1_values.end());
  double hi = *std::max_element(a1_values.begin(), a1_values.end());
  CHECK((hi - lo) / lo > 0.10);
}

TEST_CASE("Q-null steady states pin the land pool instead") {
  DacParameters p = orders(Rat(0), Rat(1), Rat(1), Rat(1));
  p.k2 = 2;  // A1* = (k1/k2)^{1/P} = 1/2
  Model model = dac_preset(p);
  std::mt19937 rng(90125);
  std::uniform_real_distribution<double> u(0.6, 1.8);
  std::vector<double> a2_values;
  for (int cls = 0; cls < 3; ++cls) {
    std::vector<double> x0 = {u(rng), (cls + 1) * u(rng), u(rng), u(rng), u(rng)};
    Trajectory tr = integrate(model.net, model.kin, x0, 80.0);
    StoichClassSpec spec;
    spec.x0 = x0;
    std::vector<double> eq = find_steady_state(model.net, model.kin, spec, tr.x.back());
    CHECK(rel_diff(eq[0], 0.5) <= 1e-6);
    a2_values.push_back(eq[1]);
  }
  CHECK(rel_diff(a2_values[0], a2_values[2]) > 1e-3);
}

TEST_CASE("dac_equilibrium_parametrization") {
  SUBCASE("residual vanishes over random positive and negative draws") {
    std::mt19937 rng(161803);
    std::uniform_int_distribution<long> num(-2, 2);
    std::uniform_int_distribution<long> den(1, 2);
    std::uniform_real_distribution<double> rate(0.2, 3.0);
    std::uniform_real_distribution<double> a2_draw(0.3, 2.5);
    int checked = 0;
    while (checked < 100) {
      Rat p1(num(rng), den(rng)), p2(num(rng), den(rng));
      Rat q1(num(rng), den(rng)), q2(num(rng), den(rng));
      p1.canonicalize();
      p2.canonicalize();
      q1.canonicalize();
      q2.canonicalize();
      if ((p2 - p1) == 0 || (q2 - q1) == 0) continue;  // positive or negative class only
      ++checked;
      DacParameters p = orders(p1, p2, q1, q2);
      p.k1 = rate(rng);
      p.k2 = rate(rng);
      p.k4 = rate(rng);
      p.k5 = rate(rng);
      p.k6 = rate(rng);
      p.am = rate(rng);
      p.beta = rate(rng);
      double a2 = a2_draw(rng);
      std::vector<double> star = dac_equilibrium_parametrization(p, a2);
      CHECK(star[2] == a2 / p.beta);
      CHECK(rel_diff(star[3], p.k5 / p.k4 * a2) <= 1e-14);
      CHECK(rel_diff(star[4], p.k5 / p.k6 * a2) <= 1e-14);

      Model model = dac_preset(p);
      std::vector<double> f = vector_field(model.net, model.kin, star);
      std::vector<double> k = evaluate_rates(model.net, model.kin, star);
      double scale = 0;
      for (double v : k) scale = std::max(scale, std::fabs(v));
      for (double v : f) CHECK(std::fabs(v) <= 1e-10 * scale);
    }
  }
  SUBCASE("P-null shape is rejected") {
    try {
      dac_equilibrium_parametrization(pnull_params(), 1.0);
      FAIL_CHECK("expected PNullShape");
    } catch (const Error& e) {
      CHECK(e.kind == ErrKind::PNullShape);
    }
  }
}

TEST_CASE("multistart_probe finds one steady state for P-null") {
  Model model = dac_preset(pnull_params());
  StoichClassSpec spec;
  spec.x0 = {2, 1, 0.8, 0.7, 0.9};
  EquilibriumSet set = multistart_probe(model.net, model.kin, spec, 64, 12345);
  CHECK(set.seed == 12345);
  CHECK(set.starts_attempted == 64);
  CHECK(set.starts_converged > 0);
  REQUIRE(set.members.size() == 1);
  CHECK(rel_diff(set.members[0].x[1], 0.5) <= 1e-6);
  CHECK(set.members[0].residual <= 1e-8);
}

TEST_CASE("multistart_probe exposes the bistable positive class") {
  Model model = dac_preset(DacParameters{});
  StoichClassSpec spec;
  spec.x0 = {2, 1, 1, 1, 1};
  EquilibriumSet set = multistart_probe(model.net, model.kin, spec, 64, 12345);
  REQUIRE(set.members.size() == 2);
  // Members sort by coordinates; frozen values for this class.
  CHECK(rel_diff(set.members[0].x[0], 0.763932) <= 1e-4);
  CHECK(rel_diff(set.members[0].x[1], 1.309017) <= 1e-4);
  CHECK(rel_diff(set.members[1].x[0], 5.236068) <= 1e-4);
  CHECK(rel_diff(set.members[1].x[1], 0.190983) <= 1e-4);
  for (const Equilibrium& eq : set.members) {
    CHECK(eq.residual <= 1e-8);
    CHECK(std::fabs(total(eq.x) - 6.0) <= 1e-8);
  }

  // Never monostationary-with-certificate when two equilibria coexist.
  MultistatVerdict v = multistationarity_pipeline(model.net, model.kin);
  CHECK(v.verdict == Verdict::Multistationary);

  // Deterministic for a fixed seed.
  EquilibriumSet again = multistart_probe(model.net, model.kin, spec, 64, 12345);
  REQUIRE(again.members.size() == 2);
  CHECK(again.members[0].x == set.members[0].x);
  CHECK(again.members[1].x == set.members[1].x);

  // A different seed lands on the same two points within merge tolerance.
  EquilibriumSet other = multistart_probe(model.net, model.kin, spec, 64, 99991);
  REQUIRE(other.members.size() == 2);
  CHECK(rel_diff(other.members[0].x[0], set.members[0].x[0]) <= 1e-4);
}

TEST_CASE("multistart_probe rejects zero starts") {
  Model model = dac_preset(DacParameters{});
  StoichClassSpec spec;
  spec.x0 = {1, 1, 1, 1, 1};
  try {
    multistart_probe(model.net, model.kin, spec, 0, 1);
    FAIL_CHECK("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::InvalidArgument);
  }
}

TEST_CASE("complex_balance_residual") {
  Model model = dac_preset(DacParameters{});
  StoichClassSpec spec;
  spec.x0 = {2, 1, 1, 1, 1};
  EquilibriumSet set = multistart_probe(model.net, model.kin, spec, 32, 7);
  REQUIRE(!set.members.empty());
  for (const Equilibrium& eq : set.members) {
    std::vector<double> k = evaluate_rates(model.net, model.kin, eq.x);
    double scale = 1e-30;
    for (double v : k) scale = std::max(scale, std::fabs(v));
    CHECK(complex_balance_residual(model.net, model.kin, eq.x) <= 1e-8 * scale);
  }

  CHECK(complex_balance_residual(model.net, model.kin, {5, 1, 1, 1, 1}) > 1e-3);

  Model tri = triangle_model();
  CHECK(complex_balance_residual(tri.net, tri.kin, {0.7, 0.7, 0.7}) <= 1e-14);
  CHECK(complex_balance_residual(tri.net, tri.kin, {1, 2, 3}) > 0.5);
}

TEST_CASE("necessary condition root recovery") {
  DacParameters p = negative_params();
  // A2_0 = 2, SUM_0 = 2: LHS = 4, RHS = 10 lambda, root at exactly 0.4.
  CHECK(std::fabs(necessary_condition_residual(p, 2.0, 2.0, 0.4)) <= 1e-12);
  std::vector<double> roots = necessary_condition_roots(p, 2.0, 2.0);
  REQUIRE(roots.size() == 1);
  CHECK(std::fabs(roots[0] - 0.4) <= 1e-8);

  // LHS above RHS throughout (SUM_0 > 4 A2_0): no root.
  CHECK(necessary_condition_roots(p, 1.0, 10.0).empty());

  try {
    necessary_condition_residual(pnull_params(), 1.0, 1.0, 0.5);
    FAIL_CHECK("expected DegenerateClass");
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::DegenerateClass);
  }
  CHECK_THROWS_AS(necessary_condition_residual(p, 1.0, 1.0, 0.0), Error);
  CHECK_THROWS_AS(necessary_condition_residual(p, 1.0, 1.0, 1.0), Error);
}

TEST_CASE("back-solved necessary-condition instances") {
  // Choose the root first, back-solve SUM_0, confirm recovery.
  std::mt19937 rng(5551212);
  std::uniform_real_distribution<double> lam_draw(0.1, 0.9);
  std::uniform_real_distribution<double> a2_draw(0.5, 3.0);
  for (int iter = 0; iter < 10; ++iter) {
    DacParameters p = negative_params();
    p.k1 = 2.0;
    double lambda = lam_draw(rng);
    double a2_0 = a2_draw(rng);
    // RHS(lambda) = (k1/k2) * (lambda a2_0) + 4 lambda a2_0; LHS = SUM_0 + A2_0.
    double rhs = 2.0 * lambda * a2_0 + 4 * lambda * a2_0;
    double sum_0 = rhs - a2_0;
    if (sum_0 <= 0) continue;
    CHECK(std::fabs(necessary_condition_residual(p, a2_0, sum_0, lambda)) <= 1e-10);
    std::vector<double> roots = necessary_condition_roots(p, a2_0, sum_0);
    REQUIRE(roots.size() == 1);
    CHECK(std::fabs(roots[0] - lambda) <= 1e-8);
  }
}

TEST_CASE("class_extremum solves the simplex program exactly") {
  Model model = dac_preset(DacParameters{});
  StoichClassSpec spec;
  spec.x0 = {1, 1, 1, 1, 1};

  ClassExtremum all_max = class_extremum(model.net, spec, {0, 1, 2, 3, 4},
                                         ExtremumDirection::Maximize);
  ClassExtremum all_min = class_extremum(model.net, spec, {0, 1, 2, 3, 4},
                                         ExtremumDirection::Minimize);
  CHECK(all_max.value == Rat(5));
  CHECK(all_min.value == Rat(5));

  ClassExtremum m_upper = class_extremum(model.net, spec, {0, 2, 3, 4},
                                         ExtremumDirection::Maximize);
  CHECK(m_upper.value == Rat(5));  // A2 pinned to the boundary

  spec.eps = 0.25;
  ClassExtremum floored = class_extremum(model.net, spec, {0, 2, 3, 4},
                                         ExtremumDirection::Maximize);
  CHECK(floored.value == Rat(19, 4));
  ClassExtremum m_lower = class_extremum(model.net, spec, {1}, ExtremumDirection::Minimize);
  CHECK(m_lower.value == Rat(1, 4));

  // Argpoint lies in the floored class and attains the value.
  Rat arg_total = 0, arg_obj = 0;
  for (int i = 0; i < 5; ++i) {
    CHECK(m_lower.argpoint[size_t(i)] >= Rat(1, 4));
    arg_total += m_lower.argpoint[size_t(i)];
  }
  arg_obj = m_lower.argpoint[1];
  CHECK(arg_total == Rat(5));
  CHECK(arg_obj == m_lower.value);
}

TEST_CASE("class_extremum guards") {
  Model model = dac_preset(DacParameters{});
  StoichClassSpec spec;
  spec.x0 = {1, 1, 1, 1, 1};
  spec.eps = 1.0;  // not strictly below every component
  try {
    class_extremum(model.net, spec, {1}, ExtremumDirection::Minimize);
    FAIL_CHECK("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::InvalidArgument);
  }

  // Non-conservative network: B unconstrained above.
  Network net;
  int a = net.add_species("A");
  int b = net.add_species("B");
  Complex ca = cx1(a);
  Complex cab = cx1(a);
  cab.add(b, Rat(1));
  net.add_reaction("R1", ca, cab);
  net.finalize();
  StoichClassSpec open_spec;
  open_spec.x0 = {1, 1};
  try {
    class_extremum(net, open_spec, {1}, ExtremumDirection::Maximize);
    FAIL_CHECK("expected Unbounded");
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::Unbounded);
  }
}

TEST_CASE("P-null sufficient condition") {
  Model model = dac_preset(pnull_params());
  StoichClassSpec spec;
  spec.x0 = {2, 1, 0.8, 0.7, 0.9};  // T = 5.4

  SUBCASE("vacuous at eps = 0") {
    SufficientConditionReport rep =
        check_sufficient_conditions(model, spec, SufficientConditionKind::PNull);
    CHECK(rep.status == ConditionStatus::Fails);
    CHECK(rep.vacuous);
    CHECK(rep.t == doctest::Approx(5.4));
    CHECK(rep.m_upper == doctest::Approx(5.4));
    CHECK_FALSE(rep.warning.empty());
  }
  SUBCASE("holds with a positive floor") {
    spec.eps = 0.6;
    SufficientConditionReport rep =
        check_sufficient_conditions(model, spec, SufficientConditionKind::PNull);
    CHECK(rep.status == ConditionStatus::Holds);
    CHECK_FALSE(rep.vacuous);
    CHECK(rep.t == doctest::Approx(5.4));
    CHECK(rep.m_upper == doctest::Approx(4.8));
    CHECK(rep.lhs == doctest::Approx(0.5));   // (k1/k2)^{1/(q2-q1)} = 2^{-1}
    CHECK(rep.rhs == doctest::Approx(0.6));   // T - M''
    REQUIRE(rep.a2_star.has_value());
    CHECK(*rep.a2_star == doctest::Approx(0.5));
    CHECK(rep.a2_0 == doctest::Approx(1.0));
  }
  SUBCASE("fails when the robust value exceeds the gap") {
    DacParameters big = pnull_params();
    big.k1 = 100;  // A2* = 100^{-1}... inverted: (k1/k2)^{1/(q2-q1)} = 1/100
    big.q1 = Rat(0);
    big.q2 = Rat(1);  // now A2* = 100
    Model loud = dac_preset(big);
    StoichClassSpec tight;
    tight.x0 = {2, 1, 0.8, 0.7, 0.9};
    tight.eps = 0.6;
    SufficientConditionReport rep =
        check_sufficient_conditions(loud, tight, SufficientConditionKind::PNull);
    CHECK(rep.status == ConditionStatus::Fails);
    CHECK_FALSE(rep.vacuous);
    CHECK(rep.lhs > rep.rhs);
  }
  SUBCASE("not applicable off the P-null class") {
    Model pos = dac_preset(DacParameters{});
    StoichClassSpec any;
    any.x0 = {1, 1, 1, 1, 1};
    SufficientConditionReport rep =
        check_sufficient_conditions(pos, any, SufficientConditionKind::PNull);
    CHECK(rep.status == ConditionStatus::NotApplicable);
    CHECK_FALSE(rep.warning.empty());
  }
}

TEST_CASE("positive/negative sufficient condition") {
  DacParameters p = negative_params();
  p.k1 = 10;
  Model model = dac_preset(p);
  StoichClassSpec spec;
  spec.x0 = {2, 1, 1, 1, 1};  // T = 6

  SUBCASE("vacuous at eps = 0") {
    SufficientConditionReport rep =
        check_sufficient_conditions(model, spec, SufficientConditionKind::PosNeg);
    CHECK(rep.status == ConditionStatus::Fails);
    CHECK(rep.vacuous);
    CHECK_FALSE(rep.warning.empty());
  }
  SUBCASE("holds with a floor") {
    spec.eps = 0.9;
    SufficientConditionReport rep =
        check_sufficient_conditions(model, spec, SufficientConditionKind::PosNeg);
    CHECK(rep.status == ConditionStatus::Holds);
    CHECK(rep.t == doctest::Approx(6.0));
    CHECK(rep.m_lower == doctest::Approx(0.9));
    CHECK(rep.m_upper == doctest::Approx(5.1));
    CHECK(rep.lhs == doctest::Approx(1.0 + 5.1 / 0.9));
    CHECK(rep.rhs == doctest::Approx(12.0));  // 10 * 0.9 + 3
    REQUIRE(rep.empirical_reduction.has_value());
    CHECK(*rep.empirical_reduction);
    REQUIRE(rep.a2_star.has_value());
    CHECK(*rep.a2_star == doctest::Approx(3.0 / 7.0).epsilon(1e-6));
  }
  SUBCASE("not applicable on a null class") {
    Model pnull = dac_preset(pnull_params());
    SufficientConditionReport rep =
        check_sufficient_conditions(pnull, spec, SufficientConditionKind::PosNeg);
    CHECK(rep.status == ConditionStatus::NotApplicable);
  }
  SUBCASE("rejects non-exchange networks") {
    Model tri = triangle_model();
    StoichClassSpec tri_spec;
    tri_spec.x0 = {1, 1, 1};
    try {
      check_sufficient_conditions(tri, tri_spec, SufficientConditionKind::PNull);
      FAIL_CHECK("expected ClassMismatch");
    } catch (const Error& e) {
      CHECK(e.kind == ErrKind::ClassMismatch);
    }
  }
}
