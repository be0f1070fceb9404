// Sign-vector multistationarity test, injectivity determinant, ACR.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "crnkit/error.hpp"
#include "crnkit/lp.hpp"
#include "crnkit/model_io.hpp"
#include "crnkit/structural.hpp"

using namespace crn;

namespace {

Rat rq(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

DacParameters orders(Rat p1, Rat p2, Rat q1, Rat q2) {
  DacParameters p;
  p.p1 = p1;
  p.p2 = p2;
  p.q1 = q1;
  p.q2 = q2;
  return p;
}

SubspaceBasis basis_of(SubspaceTag tag, const std::vector<std::vector<long>>& rows, int cols) {
  RatMatrix m(int(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(int(i), int(j)) = Rat(rows[i][j]);
  return SubspaceBasis{tag, m};
}

std::set<std::vector<int>> pattern_set(const std::vector<std::vector<int>>& patterns) {
  return std::set<std::vector<int>>(patterns.begin(), patterns.end());
}

std::vector<int> sign_of(const std::vector<Rat>& v) {
  std::vector<int> s;
  s.reserve(v.size());
  for (const Rat& x : v) s.push_back(rat_sign(x));
  return s;
}

bool in_span(const RatMatrix& basis, const std::vector<Rat>& v) {
  RatMatrix stacked(basis.rows() + 1, basis.cols());
  for (int i = 0; i < basis.rows(); ++i) stacked.set_row(i, basis.row(i));
  stacked.set_row(basis.rows(), v);
  return rank_of(stacked) == rank_of(basis);
}

// The displayed ten-term determinant, evaluated at given exchange orders.
// Variables z_1..z_7 then k_1..k_5.
MPoly paper_determinant(const Rat& p1, const Rat& p2, const Rat& q1, const Rat& q2) {
  auto exps = [](std::initializer_list<int> zs, std::initializer_list<int> ks) {
    MPoly::Exps e(12, 0);
    for (int z : zs) e[size_t(z - 1)] += 1;
    for (int k : ks) e[size_t(6 + k)] += 1;
    return e;
  };
  struct Term {
    Rat coef;
    MPoly::Exps e;
  };
  std::vector<Term> terms = {
      {-p1, exps({1, 4, 5, 6}, {1, 2, 3, 4})}, {-p1, exps({1, 4, 6, 7}, {1, 2, 3, 5})},
      {-p1, exps({1, 3, 5, 7}, {1, 2, 4, 5})}, {-p1, exps({1, 4, 5, 7}, {1, 3, 4, 5})},
      {p2, exps({2, 4, 5, 6}, {1, 2, 3, 4})},  {p2, exps({2, 4, 6, 7}, {1, 2, 3, 5})},
      {p2, exps({2, 3, 5, 7}, {1, 2, 4, 5})},  {p2, exps({2, 4, 5, 7}, {1, 3, 4, 5})},
      {q1, exps({1, 4, 5, 7}, {2, 3, 4, 5})},  {-q2, exps({2, 4, 5, 7}, {2, 3, 4, 5})},
  };
  MPoly det(12);
  for (const Term& t : terms)
    if (t.coef != 0) det.add_term(t.e, t.coef);
  return det;
}

MPoly dac_det(const DacParameters& p) {
  Model model = dac_preset(p);
  MStarMatrix mstar =
      build_m_star(stoichiometric_matrix(model.net), kinetic_order_matrix(model.kin));
  return det_m_star(mstar);
}

double numeric_det(std::vector<std::vector<double>> a) {
  int n = int(a.size());
  double det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i)
      if (std::fabs(a[size_t(i)][size_t(col)]) > std::fabs(a[size_t(piv)][size_t(col)])) piv = i;
    if (a[size_t(piv)][size_t(col)] == 0) return 0;
    if (piv != col) {
      std::swap(a[size_t(piv)], a[size_t(col)]);
      det = -det;
    }
    det *= a[size_t(col)][size_t(col)];
    for (int i = col + 1; i < n; ++i) {
      double factor = a[size_t(i)][size_t(col)] / a[size_t(col)][size_t(col)];
      for (int j = col; j < n; ++j) a[size_t(i)][size_t(j)] -= factor * a[size_t(col)][size_t(j)];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("realizable_sign_patterns on a diagonal line") {
  SubspaceBasis line = basis_of(SubspaceTag::Stoichiometric, {{1, 1}}, 2);
  auto got = pattern_set(realizable_sign_patterns(line));
  std::set<std::vector<int>> want = {{0, 0}, {1, 1}, {-1, -1}};
  CHECK(got == want);
}

TEST_CASE("realizable_sign_patterns of the zero subspace") {
  SubspaceBasis zero{SubspaceTag::Orthocomplement, RatMatrix(0, 3)};
  auto got = realizable_sign_patterns(zero);
  REQUIRE(got.size() == 1);
  CHECK(got[0] == std::vector<int>{0, 0, 0});
}

TEST_CASE("realizable_sign_patterns dimension cap") {
  SubspaceBasis wide{SubspaceTag::Stoichiometric, RatMatrix(1, 13)};
  try {
    realizable_sign_patterns(wide);
    FAIL_CHECK("expected DimensionTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::DimensionTooLarge);
  }
}

TEST_CASE("orthocomplement sign patterns of a positive system") {
  Model model = dac_preset(orders(Rat(0), Rat(1), Rat(0), Rat(1)));
  SubspaceBasis orth = kinetic_flux_orthocomplement(model.net, model.kin);
  auto got = pattern_set(realizable_sign_patterns(orth));
  std::set<std::vector<int>> want = {
      {0, 0, 0, 0, 0}, {-1, 1, 1, 1, 1}, {1, -1, -1, -1, -1}};
  CHECK(got == want);
}

TEST_CASE("sign pattern properties over random bases") {
  std::mt19937 rng(90210);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (int iter = 0; iter < 20; ++iter) {
    RatMatrix b(2, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 4; ++j) b.at(i, j) = Rat(entry(rng));
    SubspaceBasis sb{SubspaceTag::Stoichiometric, b};
    auto patterns = realizable_sign_patterns(sb);
    auto got = pattern_set(patterns);
    CHECK(got.size() == patterns.size());
    CHECK(got.count(std::vector<int>(4, 0)) == 1);
    for (const auto& p : patterns) {
      std::vector<int> neg(p.size());
      for (size_t i = 0; i < p.size(); ++i) neg[i] = -p[i];
      CHECK(got.count(neg) == 1);
      // Cross-check each reported pattern against the LP witness directly.
      auto w = subspace_sign_witness(b, p);
      REQUIRE(w.has_value());
      CHECK(sign_of(*w) == p);
    }
  }
}

TEST_CASE("sign intersection is nonzero exactly for positive exchange orders") {
  Model pos = dac_preset(orders(Rat(0), Rat(1), Rat(0), Rat(1)));
  SubspaceBasis s = stoichiometric_subspace(pos.net);
  SubspaceBasis orth = kinetic_flux_orthocomplement(pos.net, pos.kin);
  SignIntersection si = sign_intersection_test(s, orth);
  REQUIRE(si.nonzero);
  REQUIRE(si.witness.has_value());
  const SignWitnessEvidence& ev = *si.witness;
  std::vector<int> plus = {1, -1, -1, -1, -1};
  std::vector<int> minus = {-1, 1, 1, 1, 1};
  CHECK((ev.pattern == plus || ev.pattern == minus));
  CHECK(sign_of(ev.x_in_s) == ev.pattern);
  CHECK(sign_of(ev.w_in_orth) == ev.pattern);
  CHECK(in_span(s.basis, ev.x_in_s));
  CHECK(in_span(orth.basis, ev.w_in_orth));

  // Symmetry of the test.
  CHECK(sign_intersection_test(orth, s).nonzero);

  Model neg = dac_preset(orders(rq(1, 2), Rat(1), Rat(2), Rat(1)));
  SubspaceBasis orth_neg = kinetic_flux_orthocomplement(neg.net, neg.kin);
  CHECK_FALSE(sign_intersection_test(stoichiometric_subspace(neg.net), orth_neg).nonzero);

  SubspaceBasis zero{SubspaceTag::Orthocomplement, RatMatrix(0, 5)};
  CHECK_FALSE(sign_intersection_test(s, zero).nonzero);
}

TEST_CASE("build_m_star replaces the conserved row") {
  Model model = dac_preset(orders(Rat(-1), Rat(1), Rat(1), Rat(-1)));
  MStarMatrix mstar =
      build_m_star(stoichiometric_matrix(model.net), kinetic_order_matrix(model.kin));
  CHECK(mstar.m == 5);
  CHECK(mstar.r == 7);
  CHECK(mstar.replaced_rows == std::vector<int>{0});
  REQUIRE(mstar.left_kernel.rows() == 1);
  CHECK(mstar.left_kernel.row(0) == rat_vector({1, 1, 1, 1, 1}));
  for (int j = 0; j < 5; ++j) {
    MPoly::Exps zero(12, 0);
    CHECK(mstar.entries[0][size_t(j)].coefficient(zero) == Rat(1));
    CHECK(mstar.entries[0][size_t(j)].term_count() == 1);
  }
}

TEST_CASE("m_star entries match the bilinear definition numerically") {
  Model model = dac_preset(orders(rq(1, 3), Rat(2), rq(-1, 2), Rat(1)));
  RatMatrix n = stoichiometric_matrix(model.net);
  RatMatrix f = kinetic_order_matrix(model.kin);
  MStarMatrix mstar = build_m_star(n, f);

  std::mt19937 rng(5150);
  std::uniform_real_distribution<double> u(0.2, 2.0);
  std::vector<double> point(12);
  for (double& v : point) v = u(rng);

  for (int a = 0; a < 5; ++a) {
    if (a == 0) continue;  // replaced row
    for (int b = 0; b < 5; ++b) {
      double want = 0;
      for (int i = 0; i < 7; ++i)
        want += rat_to_double(n.at(a, i)) * point[size_t(i)] * rat_to_double(f.at(i, b)) *
                point[size_t(7 + b)];
      CHECK(mstar.entries[size_t(a)][size_t(b)].evaluate(point) ==
            doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("determinant equals the displayed ten-term polynomial") {
  SUBCASE("orders (-1,1,1,-1): all-positive coefficients") {
    MPoly det = dac_det(orders(Rat(-1), Rat(1), Rat(1), Rat(-1)));
    CHECK(det.term_count() == 10);
    CHECK((det - paper_determinant(Rat(-1), Rat(1), Rat(1), Rat(-1))).is_zero());
    CHECK(det.coefficient_sign_summary() == 1);
    // Spot values named in the display.
    MPoly::Exps e1(12, 0);
    e1[0] = e1[3] = e1[4] = e1[5] = 1;        // z1 z4 z5 z6
    e1[7] = e1[8] = e1[9] = e1[10] = 1;       // k1 k2 k3 k4
    CHECK(det.coefficient(e1) == Rat(1));     // -p1 = 1
    MPoly::Exps e2(12, 0);
    e2[1] = e2[3] = e2[4] = e2[6] = 1;        // z2 z4 z5 z7
    e2[8] = e2[9] = e2[10] = e2[11] = 1;      // k2 k3 k4 k5
    CHECK(det.coefficient(e2) == Rat(1));     // -q2 = 1
  }
  SUBCASE("orders (1,-1,-1,1): all-negative coefficients") {
    MPoly det = dac_det(orders(Rat(1), Rat(-1), Rat(-1), Rat(1)));
    CHECK(det.term_count() == 10);
    CHECK(det.coefficient_sign_summary() == -1);
    CHECK((det.negated() - paper_determinant(Rat(-1), Rat(1), Rat(1), Rat(-1))).is_zero());
  }
  SUBCASE("positive orders (0,1,0,1): mixed signs") {
    MPoly det = dac_det(orders(Rat(0), Rat(1), Rat(0), Rat(1)));
    CHECK(det.term_count() == 5);  // p1 and q1 terms vanish
    CHECK(det.coefficient_sign_summary() == 0);
    CHECK((det - paper_determinant(Rat(0), Rat(1), Rat(0), Rat(1))).is_zero());
  }
  SUBCASE("random rational orders") {
    std::mt19937 rng(246810);
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 2);
    for (int iter = 0; iter < 20; ++iter) {
      Rat p1 = rq(num(rng), den(rng)), p2 = rq(num(rng), den(rng));
      Rat q1 = rq(num(rng), den(rng)), q2 = rq(num(rng), den(rng));
      MPoly det = dac_det(orders(p1, p2, q1, q2));
      CHECK((det - paper_determinant(p1, p2, q1, q2)).is_zero());
    }
  }
}

TEST_CASE("determinant is bihomogeneous of degree m-d") {
  MPoly det = dac_det(orders(Rat(-1), Rat(1), Rat(1), Rat(-1)));
  auto zdeg = det.homogeneous_degree(0, 7);
  auto kdeg = det.homogeneous_degree(7, 12);
  REQUIRE(zdeg.has_value());
  REQUIRE(kdeg.has_value());
  CHECK(*zdeg == 4);
  CHECK(*kdeg == 4);
}

TEST_CASE("symbolic determinant matches a numeric determinant at all ones") {
  for (auto p : {orders(Rat(-1), Rat(1), Rat(1), Rat(-1)), orders(rq(1, 2), Rat(1), Rat(2), Rat(1)),
                 orders(Rat(0), Rat(1), Rat(0), Rat(1))}) {
    Model model = dac_preset(p);
    MStarMatrix mstar =
        build_m_star(stoichiometric_matrix(model.net), kinetic_order_matrix(model.kin));
    MPoly det = det_m_star(mstar);
    std::vector<double> ones(12, 1.0);
    std::vector<std::vector<double>> num(5, std::vector<double>(5, 0.0));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) num[size_t(i)][size_t(j)] = mstar.entries[size_t(i)][size_t(j)].evaluate(ones);
    double direct = numeric_det(num);
    double symbolic = det.evaluate(ones);
    CHECK(std::fabs(symbolic - direct) <= 1e-9 * std::max(1.0, std::fabs(direct)));
  }
}

TEST_CASE("m_star corner shapes") {
  // Zero stoichiometry: the single left-kernel vector replaces the only row.
  RatMatrix zero_n(1, 2);
  RatMatrix f(2, 1);
  f.at(0, 0) = Rat(1);
  f.at(1, 0) = Rat(2);
  MStarMatrix trivial = build_m_star(zero_n, f);
  CHECK(trivial.replaced_rows == std::vector<int>{0});
  MPoly det = det_m_star(trivial);
  CHECK(det.term_count() == 1);
  CHECK(det.coefficient(MPoly::Exps(3, 0)) == Rat(1));

  // Full-rank N: no replacement, M* = M.
  RatMatrix full_n(1, 1);
  full_n.at(0, 0) = Rat(2);
  RatMatrix f1(1, 1);
  f1.at(0, 0) = Rat(3);
  MStarMatrix plain = build_m_star(full_n, f1);
  CHECK(plain.replaced_rows.empty());
  MPoly d1 = det_m_star(plain);
  CHECK(d1.term_count() == 1);
  MPoly::Exps e(2, 0);
  e[0] = 1;
  e[1] = 1;
  CHECK(d1.coefficient(e) == Rat(6));
}

TEST_CASE("det_m_star dimension cap") {
  RatMatrix n = RatMatrix::identity(11);
  RatMatrix f = RatMatrix::identity(11);
  MStarMatrix mstar = build_m_star(n, f);
  try {
    det_m_star(mstar, 10);
    FAIL_CHECK("expected DimensionTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::DimensionTooLarge);
  }
}

TEST_CASE("m_star_var_names") {
  auto names = m_star_var_names(7, 5);
  REQUIRE(names.size() == 12);
  CHECK(names[0] == "z1");
  CHECK(names[6] == "z7");
  CHECK(names[7] == "k1");
  CHECK(names[11] == "k5");
}

TEST_CASE("injectivity_test verdicts") {
  Model mono_pos = dac_preset(orders(Rat(-1), Rat(1), Rat(1), Rat(-1)));
  MultistatVerdict v1 = injectivity_test(mono_pos.net, mono_pos.kin);
  CHECK(v1.verdict == Verdict::Monostationary);
  CHECK(v1.kind == MultistatVerdict::EvidenceKind::InjectivityCertificate);
  CHECK(v1.det_sign == 1);

  Model mono_neg = dac_preset(orders(Rat(1), Rat(-1), Rat(-1), Rat(1)));
  MultistatVerdict v2 = injectivity_test(mono_neg.net, mono_neg.kin);
  CHECK(v2.verdict == Verdict::Monostationary);
  CHECK(v2.det_sign == -1);

  Model mixed = dac_preset(orders(Rat(0), Rat(1), Rat(0), Rat(1)));
  MultistatVerdict v3 = injectivity_test(mixed.net, mixed.kin);
  CHECK(v3.verdict == Verdict::Inconclusive);
  CHECK(v3.kind == MultistatVerdict::EvidenceKind::MixedSignMonomials);
  CHECK_FALSE(v3.monomials.empty());
}

TEST_CASE("acr_species per class") {
  Model pnull = dac_preset(orders(Rat(1), Rat(1), Rat(0), Rat(1)));
  CHECK(acr_species(pnull.net, pnull.kin) == std::vector<int>{1, 2, 3, 4});

  Model qnull = dac_preset(orders(Rat(0), Rat(1), Rat(1), Rat(1)));
  CHECK(acr_species(qnull.net, qnull.kin) == std::vector<int>{0});

  Model pos = dac_preset(orders(Rat(0), Rat(1), Rat(0), Rat(1)));
  CHECK(acr_species(pos.net, pos.kin).empty());

  Model neg = dac_preset(orders(rq(1, 2), Rat(1), Rat(2), Rat(1)));
  CHECK(acr_species(neg.net, neg.kin).empty());
}

TEST_CASE("multistationarity pipeline per class") {
  Model pos = dac_preset(orders(Rat(0), Rat(1), Rat(0), Rat(1)));
  MultistatVerdict vp = multistationarity_pipeline(pos.net, pos.kin);
  CHECK(vp.verdict == Verdict::Multistationary);
  CHECK(vp.kind == MultistatVerdict::EvidenceKind::SignWitness);
  REQUIRE(vp.sign_witness.has_value());

  Model inj = dac_preset(orders(Rat(-1), Rat(1), Rat(1), Rat(-1)));
  MultistatVerdict vi = multistationarity_pipeline(inj.net, inj.kin);
  CHECK(vi.verdict == Verdict::Monostationary);
  CHECK(vi.kind == MultistatVerdict::EvidenceKind::InjectivityCertificate);

  // Mixed-sign negative instance falls through to the decomposition argument.
  Model neg = dac_preset(orders(rq(1, 2), Rat(1), Rat(2), Rat(1)));
  MultistatVerdict vn = multistationarity_pipeline(neg.net, neg.kin);
  CHECK(vn.verdict == Verdict::Monostationary);
  CHECK(vn.kind == MultistatVerdict::EvidenceKind::DecompositionArgument);
  CHECK_FALSE(vn.decomposition_notes.empty());

  Model pnull = dac_preset(orders(Rat(1), Rat(1), Rat(0), Rat(1)));
  MultistatVerdict vpn = multistationarity_pipeline(pnull.net, pnull.kin);
  CHECK(vpn.verdict == Verdict::Monostationary);
  CHECK(vpn.kind == MultistatVerdict::EvidenceKind::DecompositionArgument);

  Model qnull = dac_preset(orders(Rat(0), Rat(1), Rat(1), Rat(1)));
  CHECK(multistationarity_pipeline(qnull.net, qnull.kin).verdict == Verdict::Monostationary);

  Model degen = dac_preset(orders(Rat(1), Rat(1), Rat(1), Rat(1)));
  MultistatVerdict vd = multistationarity_pipeline(degen.net, degen.kin);
  CHECK(vd.verdict == Verdict::Inconclusive);
  CHECK_FALSE(vd.note.empty());
}
