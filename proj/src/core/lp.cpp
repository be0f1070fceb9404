#include "crnkit/lp.hpp"

#include "crnkit/error.hpp"

namespace crn {

namespace {

// Tableau layout: rows 0..m-1 are constraints (last column RHS), row m is the
// reduced-cost row (entry j = z_j - c_j for a maximization problem; RHS entry
// = current objective value). `basis[i]` is the variable basic in row i.
struct Tableau {
  int m, n;  // constraints, variables (columns excluding RHS)
  std::vector<std::vector<Rat>> t;
  std::vector<int> basis;

  Rat& at(int i, int j) { return t[i][j]; }
  Rat& rhs(int i) { return t[i][n]; }
};

void pivot(Tableau& tb, int pr, int pc) {
  Rat inv = 1 / tb.at(pr, pc);
  for (int j = 0; j <= tb.n; ++j) tb.at(pr, j) *= inv;
  for (int i = 0; i <= tb.m; ++i) {
    if (i == pr || tb.at(i, pc) == 0) continue;
    Rat f = tb.at(i, pc);
    for (int j = 0; j <= tb.n; ++j) tb.at(i, j) -= f * tb.t[pr][j];
  }
  tb.basis[pr] = pc;
}

// Bland's rule primal simplex on a tableau already in canonical form.
// Returns false on unboundedness.
bool simplex_core(Tableau& tb, int allowed_cols) {
  for (;;) {
    int enter = -1;
    for (int j = 0; j < allowed_cols; ++j)
      if (tb.at(tb.m, j) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) return true;

    int leave = -1;
    Rat best;
    for (int i = 0; i < tb.m; ++i) {
      if (tb.at(i, enter) <= 0) continue;
      Rat ratio = tb.rhs(i) / tb.at(i, enter);
      if (leave < 0 || ratio < best || (ratio == best && tb.basis[i] < tb.basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) return false;
    pivot(tb, leave, enter);
  }
}

}  // namespace

LpResult lp_solve(const RatMatrix& a, const std::vector<Rat>& b, const std::vector<Rat>& c,
                  bool maximize) {
  int m = a.rows(), n = a.cols();
  if (int(b.size()) != m || int(c.size()) != n)
    fail(ErrKind::Internal, "lp_solve dimension mismatch");

  std::vector<Rat> cc = c;
  if (!maximize)
    for (Rat& v : cc) v = -v;

  // Phase one: artificials n..n+m-1, maximize -(sum of artificials).
  Tableau tb;
  tb.m = m;
  tb.n = n + m;
  tb.t.assign(m + 1, std::vector<Rat>(tb.n + 1, Rat(0)));
  tb.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    int sign = (b[i] < 0) ? -1 : 1;
    for (int j = 0; j < n; ++j) tb.at(i, j) = sign * a.at(i, j);
    tb.rhs(i) = sign * b[i];
    tb.at(i, n + i) = 1;
    tb.basis[i] = n + i;
  }
  for (int j = 0; j < n; ++j) {
    Rat s(0);
    for (int i = 0; i < m; ++i) s += tb.at(i, j);
    tb.at(m, j) = -s;  // z_j - c_j with c = 0 on structurals, -1 on artificials
  }
  {
    Rat s(0);
    for (int i = 0; i < m; ++i) s += tb.rhs(i);
    tb.rhs(m) = -s;
  }

  if (!simplex_core(tb, tb.n)) fail(ErrKind::Internal, "phase-one simplex unbounded");
  if (tb.rhs(m) != 0) return {LpResult::Infeasible, Rat(0), {}};

  // Drive any artificial still basic out of the basis; a row with no
  // structural pivot available is redundant and is cleared.
  for (int i = 0; i < m; ++i) {
    if (tb.basis[i] < n) continue;
    int pc = -1;
    for (int j = 0; j < n; ++j)
      if (tb.at(i, j) != 0) {
        pc = j;
        break;
      }
    if (pc >= 0) {
      pivot(tb, i, pc);
    } else {
      for (int j = 0; j <= tb.n; ++j) tb.at(i, j) = 0;
      tb.basis[i] = -1;
    }
  }

  // Phase two objective row over structural columns only.
  for (int j = 0; j <= tb.n; ++j) tb.at(m, j) = 0;
  for (int j = 0; j < n; ++j) {
    Rat z(0);
    for (int i = 0; i < m; ++i)
      if (tb.basis[i] >= 0 && tb.basis[i] < n && cc[tb.basis[i]] != 0)
        z += cc[tb.basis[i]] * tb.at(i, j);
    tb.at(m, j) = z - cc[j];
  }
  {
    Rat z(0);
    for (int i = 0; i < m; ++i)
      if (tb.basis[i] >= 0 && tb.basis[i] < n && cc[tb.basis[i]] != 0)
        z += cc[tb.basis[i]] * tb.rhs(i);
    tb.rhs(m) = z;
  }

  if (!simplex_core(tb, n)) return {LpResult::Unbounded, Rat(0), {}};

  std::vector<Rat> x(n, Rat(0));
  for (int i = 0; i < m; ++i)
    if (tb.basis[i] >= 0 && tb.basis[i] < n) x[tb.basis[i]] = tb.rhs(i);
  Rat value = tb.rhs(m);
  if (!maximize) value = -value;
  return {LpResult::Optimal, value, x};
}

std::optional<std::vector<Rat>> lp_feasible_point(const RatMatrix& a, const std::vector<Rat>& b) {
  std::vector<Rat> c(a.cols(), Rat(0));
  LpResult r = lp_solve(a, b, c, true);
  if (r.status != LpResult::Optimal) return std::nullopt;
  return r.x;
}

std::optional<std::vector<Rat>> subspace_sign_witness(const RatMatrix& basis_rows,
                                                     const std::vector<int>& pattern) {
  int d = basis_rows.rows(), m = basis_rows.cols();
  if (int(pattern.size()) != m) fail(ErrKind::Internal, "pattern length mismatch");

  bool all_zero = true;
  for (int s : pattern)
    if (s != 0) all_zero = false;
  if (all_zero) return std::vector<Rat>(m, Rat(0));
  if (d == 0) return std::nullopt;

  // Variables: u_0..u_{d-1}, v_0..v_{d-1} (lambda = u - v), one slack per
  // strict coordinate.
  int n_strict = 0;
  for (int s : pattern)
    if (s != 0) ++n_strict;
  int nvars = 2 * d + n_strict;

  RatMatrix a(m, nvars);
  std::vector<Rat> b(m, Rat(0));
  int slack = 2 * d;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) {
      a.at(i, j) = basis_rows.at(j, i);
      a.at(i, d + j) = -basis_rows.at(j, i);
    }
    if (pattern[i] > 0) {
      a.at(i, slack++) = -1;
      b[i] = 1;
    } else if (pattern[i] < 0) {
      a.at(i, slack++) = 1;
      b[i] = -1;
    }
  }

  auto sol = lp_feasible_point(a, b);
  if (!sol) return std::nullopt;

  std::vector<Rat> lambda(d);
  for (int j = 0; j < d; ++j) lambda[j] = (*sol)[j] - (*sol)[d + j];
  std::vector<Rat> y(m, Rat(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < d; ++j) y[i] += basis_rows.at(j, i) * lambda[j];
  return y;
}

}  // namespace crn
