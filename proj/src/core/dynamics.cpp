#include "crnkit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "crnkit/error.hpp"
#include "crnkit/lp.hpp"

namespace crn {

namespace {

std::vector<std::vector<double>> to_doubles(const RatMatrix& m) {
  std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i][j] = rat_to_double(m.at(i, j));
  return out;
}

double inf_norm(const std::vector<double>& v) {
  double n = 0;
  for (double x : v) n = std::max(n, std::fabs(x));
  return n;
}

double two_norm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Solves A x = b by LU with partial pivoting; returns false on (numerical)
// singularity. A and b are clobbered.
bool solve_linear(std::vector<std::vector<double>>& a, std::vector<double>& b) {
  int n = int(a.size());
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int i = c + 1; i < n; ++i)
      if (std::fabs(a[i][c]) > std::fabs(a[piv][c])) piv = i;
    if (std::fabs(a[piv][c]) < 1e-300) return false;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (int i = c + 1; i < n; ++i) {
      double f = a[i][c] / a[c][c];
      if (f == 0) continue;
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a[i][j] * b[j];
    b[i] = s / a[i][i];
  }
  return true;
}

std::string state_to_string(double t, const std::vector<double>& x) {
  std::ostringstream os;
  os << "t=" << t << " x=(";
  for (size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  return os.str();
}

}  // namespace

std::vector<double> vector_field(const Network& net, const KineticModel& km,
                                 const std::vector<double>& x) {
  std::vector<double> k = evaluate_rates(net, km, x);
  RatMatrix n = stoichiometric_matrix(net);
  std::vector<double> f(net.species_count(), 0.0);
  for (int i = 0; i < n.rows(); ++i)
    for (int j = 0; j < n.cols(); ++j) {
      if (n.at(i, j) == 0) continue;
      f[i] += rat_to_double(n.at(i, j)) * k[j];
    }
  return f;
}

namespace {

// Cached double views for the integrator / solver hot paths.
struct FastModel {
  int m, r;
  std::vector<std::vector<double>> n;  // m x r
  std::vector<std::vector<double>> f;  // r x m kinetic orders
  std::vector<double> k;               // rate constants

  FastModel(const Network& net, const KineticModel& km) {
    if (!km.has_rate_values())
      fail(ErrKind::InvalidArgument, "rate values required for dynamics");
    m = net.species_count();
    r = net.reaction_count();
    n = to_doubles(stoichiometric_matrix(net));
    f = to_doubles(km.f);
    for (int i = 0; i < r; ++i) k.push_back(*km.rate_values[i]);
  }

  std::vector<double> rates(const std::vector<double>& x) const {
    std::vector<double> out(r);
    for (int i = 0; i < r; ++i) {
      double v = k[i];
      for (int j = 0; j < m; ++j) {
        double e = f[i][j];
        if (e == 0) continue;
        if (e == 1)
          v *= x[j];
        else if (e == 2)
          v *= x[j] * x[j];
        else
          v *= std::pow(x[j], e);
      }
      out[i] = v;
    }
    return out;
  }

  std::vector<double> field(const std::vector<double>& x) const {
    std::vector<double> kk = rates(x);
    std::vector<double> out(m, 0.0);
    for (int i = 0; i < m; ++i) {
      double s = 0;
      for (int j = 0; j < r; ++j)
        if (n[i][j] != 0) s += n[i][j] * kk[j];
      out[i] = s;
    }
    return out;
  }

  // J_{aj} = sum_i N_{ai} K_i F_{ij} / x_j.
  std::vector<std::vector<double>> jacobian(const std::vector<double>& x) const {
    std::vector<double> kk = rates(x);
    std::vector<std::vector<double>> jac(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < m; ++j) {
        if (f[i][j] == 0) continue;
        double d = kk[i] * f[i][j] / x[j];
        for (int a = 0; a < m; ++a)
          if (n[a][i] != 0) jac[a][j] += n[a][i] * d;
      }
    return jac;
  }
};

// Dormand-Prince 5(4) coefficients.
constexpr double DP_C[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double DP_A[7][6] = {
    {0, 0, 0, 0, 0, 0},
    {1.0 / 5, 0, 0, 0, 0, 0},
    {3.0 / 40, 9.0 / 40, 0, 0, 0, 0},
    {44.0 / 45, -56.0 / 15, 32.0 / 9, 0, 0, 0},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729, 0, 0},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656, 0},
    {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double DP_B5[7] = {35.0 / 384,      0, 500.0 / 1113, 125.0 / 192,
                             -2187.0 / 6784, 11.0 / 84, 0};
constexpr double DP_B4[7] = {5179.0 / 57600,    0,           7571.0 / 16695, 393.0 / 640,
                             -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

}  // namespace

Trajectory integrate(const Network& net, const KineticModel& km, const std::vector<double>& x0,
                     double t_end, const SimOptions& opts) {
  if (int(x0.size()) != net.species_count())
    fail(ErrKind::InvalidArgument, "initial state length mismatch");
  for (double v : x0)
    if (!(v > 0)) fail(ErrKind::NonpositiveState, "initial state must be positive");
  if (t_end < 0) fail(ErrKind::InvalidArgument, "t_end must be nonnegative");

  FastModel fm(net, km);
  double total0 = 0;
  for (double v : x0) total0 += v;
  double floor = opts.floor_frac * total0;

  Trajectory traj;
  traj.t.push_back(0.0);
  traj.x.push_back(x0);
  if (t_end == 0) return traj;

  std::vector<double> y = x0;
  double t = 0, h = std::min(opts.h_init, t_end);
  double h_min = 1e-14 * std::max(1.0, t_end);
  long steps = 0;

  std::vector<std::vector<double>> kstage(7);
  while (t < t_end) {
    if (++steps > opts.max_steps)
      fail(ErrKind::NoConvergence, "step limit exceeded at " + state_to_string(t, y));
    if (h < h_min)
      fail(ErrKind::StepSizeUnderflow, "step size underflow at " + state_to_string(t, y));
    if (t + h > t_end) h = t_end - t;

    bool positive = true;
    kstage[0] = fm.field(y);
    std::vector<double> ynew(fm.m), yerr(fm.m);
    for (int s = 1; s < 7 && positive; ++s) {
      std::vector<double> arg = y;
      for (int j = 0; j < fm.m; ++j) {
        double acc = 0;
        for (int q = 0; q < s; ++q) acc += DP_A[s][q] * kstage[q][j];
        arg[j] += h * acc;
        if (arg[j] <= floor) positive = false;
      }
      if (positive) kstage[s] = fm.field(arg);
    }
    if (positive) {
      for (int j = 0; j < fm.m; ++j) {
        double y5 = 0, y4 = 0;
        for (int s = 0; s < 7; ++s) {
          y5 += DP_B5[s] * kstage[s][j];
          y4 += DP_B4[s] * kstage[s][j];
        }
        ynew[j] = y[j] + h * y5;
        yerr[j] = h * (y5 - y4);
        if (ynew[j] <= floor) positive = false;
      }
    }
    if (!positive) {
      h *= 0.5;
      ++traj.steps_rejected;
      continue;
    }

    double err = 0;
    for (int j = 0; j < fm.m; ++j) {
      double sc = opts.abs_tol + opts.rel_tol * std::max(std::fabs(y[j]), std::fabs(ynew[j]));
      double e = yerr[j] / sc;
      err += e * e;
    }
    err = std::sqrt(err / fm.m);

    if (err <= 1.0) {
      t += h;
      y = ynew;
      traj.t.push_back(t);
      traj.x.push_back(y);
      ++traj.steps_accepted;
    } else {
      ++traj.steps_rejected;
    }
    double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    h *= std::clamp(fac, 0.2, 5.0);
  }
  return traj;
}

namespace {

std::vector<int> independent_row_set(const RatMatrix& n) {
  std::vector<int> rows;
  int target = rank_of(n);
  for (int i = 0; i < n.rows() && int(rows.size()) < target; ++i) {
    RatMatrix trial(int(rows.size()) + 1, n.cols());
    for (size_t q = 0; q < rows.size(); ++q) trial.set_row(int(q), n.row(rows[q]));
    trial.set_row(int(rows.size()), n.row(i));
    if (rank_of(trial) == int(rows.size()) + 1) rows.push_back(i);
  }
  return rows;
}

}  // namespace

std::vector<double> find_steady_state(const Network& net, const KineticModel& km,
                                      const StoichClassSpec& spec,
                                      const std::vector<double>& guess,
                                      const NewtonOptions& opts) {
  int m = net.species_count();
  if (int(spec.x0.size()) != m || int(guess.size()) != m)
    fail(ErrKind::InvalidArgument, "state length mismatch");
  for (double v : guess)
    if (!(v > 0)) fail(ErrKind::NonpositiveState, "guess must be positive");

  FastModel fm(net, km);
  RatMatrix n_exact = stoichiometric_matrix(net);
  RatMatrix w_exact = left_nullspace(n_exact);
  auto w = to_doubles(w_exact);
  std::vector<int> indep = independent_row_set(n_exact);
  int d = int(w.size());
  if (int(indep.size()) + d != m) fail(ErrKind::Internal, "row split does not cover the state");

  std::vector<double> totals(d);
  for (int i = 0; i < d; ++i) {
    double t0 = 0, tg = 0;
    for (int j = 0; j < m; ++j) {
      t0 += w[i][j] * spec.x0[j];
      tg += w[i][j] * guess[j];
    }
    totals[i] = t0;
    if (std::fabs(tg - t0) > opts.class_tol * std::max(1.0, std::fabs(t0)))
      fail(ErrKind::ClassMismatch, "guess lies outside the stoichiometric class of x0");
  }

  auto residual_vec = [&](const std::vector<double>& x) {
    std::vector<double> f = fm.field(x);
    std::vector<double> g(m);
    for (size_t i = 0; i < indep.size(); ++i) g[i] = f[indep[i]];
    for (int i = 0; i < d; ++i) {
      double acc = -totals[i];
      for (int j = 0; j < m; ++j) acc += w[i][j] * x[j];
      g[indep.size() + i] = acc;
    }
    return g;
  };

  double total0 = 0;
  for (double v : spec.x0) total0 += std::fabs(v);

  std::vector<double> x = guess;
  for (int iter = 0; iter < opts.max_iter; ++iter) {
    std::vector<double> f = fm.field(x);
    double scale = std::max(1.0, inf_norm(fm.rates(x)));
    if (inf_norm(f) <= opts.tol * scale) {
      for (double v : x)
        if (v < opts.boundary_frac * total0)
          fail(ErrKind::NoConvergence, "converged to the boundary of the positive orthant");
      return x;
    }

    std::vector<double> g = residual_vec(x);
    double g0 = two_norm(g);

    std::vector<std::vector<double>> jac_full = fm.jacobian(x);
    std::vector<std::vector<double>> a(m, std::vector<double>(m));
    for (size_t i = 0; i < indep.size(); ++i) a[i] = jac_full[indep[i]];
    for (int i = 0; i < d; ++i) a[indep.size() + i] = w[i];

    std::vector<double> rhs(m);
    for (int i = 0; i < m; ++i) rhs[i] = -g[i];
    std::vector<std::vector<double>> a_copy = a;
    if (!solve_linear(a, rhs)) {
      // Singular at this point: fall back to a damped least-squares step,
      // (A^T A + mu I) d = -A^T g, raising mu until the system factors.
      double norm = 0;
      for (const auto& row : a_copy)
        for (double v : row) norm = std::max(norm, std::fabs(v));
      double mu = std::max(1e-12, 1e-10 * norm * norm);
      bool solved = false;
      for (int tries = 0; tries < 40 && !solved; ++tries, mu *= 10) {
        std::vector<std::vector<double>> ata(m, std::vector<double>(m, 0.0));
        std::vector<double> atg(m, 0.0);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            for (int q = 0; q < m; ++q) ata[i][j] += a_copy[q][i] * a_copy[q][j];
            if (i == j) ata[i][j] += mu;
          }
        for (int i = 0; i < m; ++i)
          for (int q = 0; q < m; ++q) atg[i] -= a_copy[q][i] * g[q];
        rhs = atg;
        solved = solve_linear(ata, rhs);
      }
      if (!solved) fail(ErrKind::NoConvergence, "singular Jacobian in the Newton solve");
    }

    double lambda = 1.0;
    for (;;) {
      bool positive = true;
      std::vector<double> xn(m);
      for (int j = 0; j < m; ++j) {
        xn[j] = x[j] + lambda * rhs[j];
        if (!(xn[j] > 0)) positive = false;
      }
      if (positive) {
        double gn = two_norm(residual_vec(xn));
        if (gn <= (1.0 - 1e-4 * lambda) * g0 || lambda < 1e-10) {
          x = xn;
          break;
        }
      }
      lambda *= 0.5;
      if (lambda < 1e-14)
        fail(ErrKind::NoConvergence, "line search failed to find a positive step");
    }
  }
  fail(ErrKind::NoConvergence, "no steady state within the iteration limit");
}

EquilibriumSet multistart_probe(const Network& net, const KineticModel& km,
                                const StoichClassSpec& spec, int n_starts, std::uint64_t seed,
                                const NewtonOptions& opts) {
  if (n_starts < 1) fail(ErrKind::InvalidArgument, "n_starts must be at least 1");
  int m = net.species_count();
  if (int(spec.x0.size()) != m) fail(ErrKind::InvalidArgument, "state length mismatch");
  for (double v : spec.x0)
    if (!(v > 0)) fail(ErrKind::NonpositiveState, "reference point must be positive");

  FastModel fm(net, km);
  RatMatrix n_exact = stoichiometric_matrix(net);
  RatMatrix w_exact = left_nullspace(n_exact);

  bool simplex_class = (w_exact.rows() == 1);
  std::vector<double> wrow;
  if (simplex_class) {
    wrow = w_exact.row_doubles(0);
    for (double v : wrow)
      if (!(v > 0)) simplex_class = false;
  }

  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  auto n_dbl = to_doubles(n_exact);

  EquilibriumSet out;
  out.seed = seed;
  double total0 = 0;
  for (double v : spec.x0) total0 += v;

  for (int start = 0; start < n_starts; ++start) {
    ++out.starts_attempted;
    std::vector<double> x0;
    if (simplex_class) {
      double t = 0;
      for (int j = 0; j < m; ++j) t += wrow[j] * spec.x0[j];
      std::vector<double> g(m);
      double gs = 0;
      for (int j = 0; j < m; ++j) {
        g[j] = expo(rng) + 1e-12;
        gs += g[j];
      }
      x0.resize(m);
      for (int j = 0; j < m; ++j) x0[j] = t * (g[j] / gs) / wrow[j];
    } else {
      double scale = total0 / std::max(1, net.reaction_count());
      bool found = false;
      for (int attempt = 0; attempt < 200 && !found; ++attempt) {
        std::vector<double> xi(net.reaction_count());
        for (double& v : xi) v = uni(rng) * scale;
        std::vector<double> cand = spec.x0;
        bool pos = true;
        for (int a = 0; a < m; ++a) {
          for (int j = 0; j < net.reaction_count(); ++j) cand[a] += n_dbl[a][j] * xi[j];
          if (cand[a] <= 1e-9 * total0) pos = false;
        }
        if (pos) {
          x0 = cand;
          found = true;
        }
      }
      if (!found) continue;
    }

    std::vector<double> eq;
    try {
      eq = find_steady_state(net, km, spec, x0, opts);
    } catch (const Error&) {
      continue;
    }
    ++out.starts_converged;
    double res = inf_norm(fm.field(eq));

    bool merged = false;
    for (auto& member : out.members) {
      double dist = 0, ref = 1.0;
      for (int j = 0; j < m; ++j) {
        dist = std::max(dist, std::fabs(member.x[j] - eq[j]));
        ref = std::max({ref, std::fabs(member.x[j]), std::fabs(eq[j])});
      }
      if (dist / ref < 1e-4) {
        if (res < member.residual) member = {eq, res};
        merged = true;
        break;
      }
    }
    if (!merged) out.members.push_back({eq, res});
  }

  std::sort(out.members.begin(), out.members.end(),
            [](const Equilibrium& a, const Equilibrium& b) { return a.x < b.x; });
  return out;
}

double complex_balance_residual(const Network& net, const KineticModel& km,
                                const std::vector<double>& x) {
  std::vector<double> k = evaluate_rates(net, km, x);
  auto ia = to_doubles(incidence_matrix(net));
  double worst = 0;
  for (size_t i = 0; i < ia.size(); ++i) {
    double s = 0;
    for (size_t j = 0; j < k.size(); ++j) s += ia[i][j] * k[j];
    worst = std::max(worst, std::fabs(s));
  }
  return worst;
}

std::vector<double> dac_equilibrium_parametrization(const DacParameters& params, double a2) {
  if (params.p1 == params.p2)
    fail(ErrKind::PNullShape, "equilibrium parametrization needs p1 != p2");
  if (!(a2 > 0)) fail(ErrKind::InvalidArgument, "A2 must be positive");
  double qdiff = rat_to_double(params.q2 - params.q1);
  double pdiff_inv = 1.0 / rat_to_double(params.p1 - params.p2);
  double a1 = std::pow(params.k2 / params.k1 * std::pow(a2, qdiff), pdiff_inv);
  return {a1, a2, a2 / params.beta, params.k5 / params.k4 * a2, params.k5 / params.k6 * a2};
}

double necessary_condition_residual(const DacParameters& params, double a2_0, double sum_0,
                                    double lambda) {
  Rat p_diff = params.p2 - params.p1;
  Rat q_diff = params.q2 - params.q1;
  if (p_diff == 0 || q_diff == 0)
    fail(ErrKind::DegenerateClass, "a positive or negative system is required");
  if (!(lambda > 0 && lambda < 1))
    fail(ErrKind::InvalidArgument, "lambda must lie in (0, 1)");
  if (!(a2_0 > 0) || !(sum_0 > 0)) fail(ErrKind::InvalidArgument, "initial values must be positive");

  double rq = rat_to_double(q_diff / p_diff);
  double lhs = sum_0 + a2_0;
  double rhs = std::pow(params.k1 / params.k2, 1.0 / rat_to_double(p_diff)) *
                   std::pow(lambda * a2_0, -rq) +
               (1.0 / params.beta + params.k5 / params.k4 + params.k5 / params.k6 + 1.0) *
                   lambda * a2_0;
  return lhs - rhs;
}

std::vector<double> necessary_condition_roots(const DacParameters& params, double a2_0,
                                              double sum_0, int grid) {
  if (grid < 2) fail(ErrKind::InvalidArgument, "grid too small");
  auto f = [&](double lam) { return necessary_condition_residual(params, a2_0, sum_0, lam); };
  std::vector<double> roots;
  double prev_l = 1.0 / grid;
  double prev_v = f(prev_l);
  for (int i = 2; i < grid; ++i) {
    double l = double(i) / grid;
    double v = f(l);
    if (prev_v == 0) roots.push_back(prev_l);
    if (prev_v * v < 0) {
      double lo = prev_l, hi = l, flo = prev_v;
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm_ = f(mid);
        if (fm_ == 0) {
          lo = hi = mid;
          break;
        }
        if (flo * fm_ < 0)
          hi = mid;
        else {
          lo = mid;
          flo = fm_;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_l = l;
    prev_v = v;
  }
  return roots;
}

const char* condition_status_name(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Holds: return "Holds";
    case ConditionStatus::Fails: return "Fails";
    case ConditionStatus::NotApplicable: return "NotApplicable";
  }
  return "?";
}

ClassExtremum class_extremum(const Network& net, const StoichClassSpec& spec,
                             const std::vector<int>& objective, ExtremumDirection direction) {
  int m = net.species_count();
  if (int(spec.x0.size()) != m) fail(ErrKind::InvalidArgument, "state length mismatch");
  double min_x0 = spec.x0[0];
  for (double v : spec.x0) {
    if (!(v > 0)) fail(ErrKind::NonpositiveState, "reference point must be positive");
    min_x0 = std::min(min_x0, v);
  }
  if (spec.eps < 0) fail(ErrKind::InvalidArgument, "floor must be nonnegative");
  if (spec.eps > 0 && spec.eps >= min_x0)
    fail(ErrKind::InvalidArgument, "floor must stay below every component of x0");
  for (int i : objective)
    if (i < 0 || i >= m) fail(ErrKind::InvalidArgument, "objective species out of range");

  RatMatrix w = conserved_quantity_basis(net);
  Rat eps = rat_from_double(spec.eps);

  // x = eps + y with y >= 0; W y = W x0 - W eps.
  int d = w.rows();
  std::vector<Rat> rhs(d, Rat(0));
  for (int i = 0; i < d; ++i) {
    Rat acc(0);
    for (int j = 0; j < m; ++j) acc += w.at(i, j) * (rat_from_double(spec.x0[j]) - eps);
    rhs[i] = acc;
  }
  std::vector<Rat> c(m, Rat(0));
  for (int i : objective) c[i] = 1;

  LpResult lr = lp_solve(w, rhs, c, direction == ExtremumDirection::Maximize);
  if (lr.status == LpResult::Infeasible)
    fail(ErrKind::Infeasible, "the floored class is empty");
  if (lr.status == LpResult::Unbounded)
    fail(ErrKind::Unbounded, "objective unbounded (the network is not conservative)");

  ClassExtremum out;
  out.value = lr.value + Rat(long(objective.size())) * eps;
  out.argpoint.resize(m);
  for (int j = 0; j < m; ++j) out.argpoint[j] = lr.x[j] + eps;
  return out;
}

SufficientConditionReport check_sufficient_conditions(const Model& model,
                                                      const StoichClassSpec& spec,
                                                      SufficientConditionKind kind) {
  auto rec = recognize_dac(model);
  if (!rec) fail(ErrKind::ClassMismatch, "the model does not have the exchange-system shape");
  if (!rec->has_rates)
    fail(ErrKind::InvalidArgument, "rate values required for the reduction conditions");
  int m = model.net.species_count();
  if (int(spec.x0.size()) != m) fail(ErrKind::InvalidArgument, "state length mismatch");

  const DacParameters& p = rec->params;
  Rat p_diff = p.p2 - p.p1;
  Rat q_diff = p.q2 - p.q1;
  int a1 = rec->species[0], a2 = rec->species[1], a3 = rec->species[2], a4 = rec->species[3],
      a5 = rec->species[4];

  SufficientConditionReport rep;
  rep.kind = kind;
  rep.eps = spec.eps;
  rep.a2_0 = spec.x0[a2];

  if (kind == SufficientConditionKind::PNull) {
    if (!(p_diff == 0 && q_diff != 0)) {
      rep.status = ConditionStatus::NotApplicable;
      rep.warning = "the system is not P-null";
      return rep;
    }
  } else {
    if (!(p_diff != 0 && q_diff != 0)) {
      rep.status = ConditionStatus::NotApplicable;
      rep.warning = "the system is neither positive nor negative";
      return rep;
    }
  }

  Rat t_exact(0);
  for (int j = 0; j < m; ++j) t_exact += rat_from_double(spec.x0[j]);
  rep.t = rat_to_double(t_exact);

  ClassExtremum upper =
      class_extremum(model.net, spec, {a1, a3, a4, a5}, ExtremumDirection::Maximize);
  rep.m_upper = rat_to_double(upper.value);

  if (kind == SufficientConditionKind::PNull) {
    rep.lhs = std::pow(p.k1 / p.k2, 1.0 / rat_to_double(q_diff));
    Rat gap = t_exact - upper.value;
    rep.rhs = rat_to_double(gap);
    if (gap == 0) {
      rep.vacuous = true;
      rep.warning = "T - M'' vanishes on the closed class; the bound is vacuous at this floor";
    }
    rep.a2_star = rep.lhs;  // closed form for a P-null system
    rep.status = (rep.lhs < rep.rhs) ? ConditionStatus::Holds : ConditionStatus::Fails;
  } else {
    ClassExtremum lower = class_extremum(model.net, spec, {a2}, ExtremumDirection::Minimize);
    rep.m_lower = rat_to_double(lower.value);
    if (lower.value == 0) {
      rep.vacuous = true;
      rep.warning = "m' vanishes on the closed class, so 1 + M''/m' is unbounded; "
                    "the bound is vacuous at this floor";
      rep.status = ConditionStatus::Fails;
      return rep;
    }
    double pd_inv = 1.0 / rat_to_double(p.p1 - p.p2);
    rep.lhs = 1.0 + rep.m_upper / rep.m_lower;
    rep.rhs = std::pow(p.k2 / p.k1, pd_inv) * std::pow(rep.m_lower, rat_to_double(q_diff) * pd_inv) +
              1.0 / p.beta + p.k5 / p.k4 + p.k5 / p.k6;
    rep.status = (rep.lhs < rep.rhs) ? ConditionStatus::Holds : ConditionStatus::Fails;
  }

  if (rep.status == ConditionStatus::Holds) {
    std::vector<double> star = find_steady_state(model.net, model.kin, spec, spec.x0);
    rep.a2_star = star[a2];
    rep.empirical_reduction = (star[a2] < spec.x0[a2]);
  }
  return rep;
}

}  // namespace crn
