#include "crnkit/structural.hpp"

#include <algorithm>

#include "crnkit/decomposition.hpp"
#include "crnkit/error.hpp"
#include "crnkit/lp.hpp"

namespace crn {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Multistationary: return "Multistationary";
    case Verdict::Monostationary: return "Monostationary";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

// Deterministic enumeration of all sign patterns of length m: ternary counter,
// digit order 0, +1, -1, least significant at index 0.
std::vector<int> pattern_for(long long counter, int m) {
  std::vector<int> p(m);
  for (int i = 0; i < m; ++i) {
    int digit = int(counter % 3);
    counter /= 3;
    p[i] = (digit == 0) ? 0 : (digit == 1 ? 1 : -1);
  }
  return p;
}

long long pow3(int m) {
  long long v = 1;
  for (int i = 0; i < m; ++i) v *= 3;
  return v;
}

}  // namespace

std::vector<std::vector<int>> realizable_sign_patterns(const SubspaceBasis& basis,
                                                      int max_species) {
  int m = basis.basis.cols();
  if (m > max_species)
    fail(ErrKind::DimensionTooLarge,
         "sign pattern enumeration over " + std::to_string(m) + " species exceeds the bound");
  std::vector<std::vector<int>> out;
  long long total = pow3(m);
  for (long long c = 0; c < total; ++c) {
    std::vector<int> p = pattern_for(c, m);
    if (subspace_sign_witness(basis.basis, p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SignIntersection sign_intersection_test(const SubspaceBasis& s, const SubspaceBasis& w,
                                        int max_species) {
  int m = s.basis.cols();
  if (w.basis.cols() != m) fail(ErrKind::InvalidArgument, "subspace dimension mismatch");
  if (m > max_species)
    fail(ErrKind::DimensionTooLarge,
         "sign pattern enumeration over " + std::to_string(m) + " species exceeds the bound");
  long long total = pow3(m);
  for (long long c = 1; c < total; ++c) {
    std::vector<int> p = pattern_for(c, m);
    auto ws = subspace_sign_witness(w.basis, p);
    if (!ws) continue;
    auto xs = subspace_sign_witness(s.basis, p);
    if (!xs) continue;
    SignWitnessEvidence ev{std::move(*xs), std::move(*ws), std::move(p)};
    return {true, std::move(ev)};
  }
  return {false, std::nullopt};
}

MStarMatrix build_m_star(const RatMatrix& n, const RatMatrix& f) {
  int m = n.rows(), r = n.cols();
  if (f.rows() != r || f.cols() != m)
    fail(ErrKind::InvalidArgument, "kinetic order matrix shape mismatch");

  MStarMatrix out;
  out.m = m;
  out.r = r;
  int nvars = r + m;
  out.entries.assign(m, std::vector<MPoly>(m, MPoly(nvars)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      MPoly& e = out.entries[a][b];
      for (int i = 0; i < r; ++i) {
        if (n.at(a, i) == 0 || f.at(i, b) == 0) continue;
        MPoly::Exps exps(nvars, 0);
        exps[i] = 1;      // z_i
        exps[r + b] = 1;  // k_b
        e.add_term(exps, n.at(a, i) * f.at(i, b));
      }
    }

  out.left_kernel = left_nullspace(n);
  for (int j = 0; j < out.left_kernel.rows(); ++j) {
    int pivot = -1;
    for (int c = 0; c < m; ++c)
      if (out.left_kernel.at(j, c) != 0) {
        pivot = c;
        break;
      }
    if (pivot < 0) fail(ErrKind::Internal, "zero row in left kernel basis");
    out.replaced_rows.push_back(pivot);
    for (int b = 0; b < m; ++b)
      out.entries[pivot][b] = MPoly::constant(nvars, out.left_kernel.at(j, b));
  }
  return out;
}

namespace {

MPoly det_recursive(const MStarMatrix& ms, std::vector<int>& rows, std::vector<int>& cols) {
  int nvars = ms.r + ms.m;
  if (rows.empty()) return MPoly::constant(nvars, Rat(1));

  // Expand along the structurally sparsest remaining row.
  int best_pos = 0, best_nz = int(cols.size()) + 1;
  for (int pos = 0; pos < int(rows.size()); ++pos) {
    int nz = 0;
    for (int c : cols)
      if (!ms.entries[rows[pos]][c].is_zero()) ++nz;
    if (nz < best_nz) {
      best_nz = nz;
      best_pos = pos;
    }
  }
  if (best_nz == 0) return MPoly(nvars);

  int row = rows[best_pos];
  std::vector<int> sub_rows;
  for (int x : rows)
    if (x != row) sub_rows.push_back(x);

  MPoly acc(nvars);
  for (int cpos = 0; cpos < int(cols.size()); ++cpos) {
    const MPoly& e = ms.entries[row][cols[cpos]];
    if (e.is_zero()) continue;
    std::vector<int> sub_cols;
    for (int x : cols)
      if (x != cols[cpos]) sub_cols.push_back(x);
    MPoly minor = det_recursive(ms, sub_rows, sub_cols);
    MPoly term = e * minor;
    if ((best_pos + cpos) % 2 == 1) term = term.negated();
    acc = acc + term;
  }
  return acc;
}

}  // namespace

MPoly det_m_star(const MStarMatrix& mstar, int max_dim) {
  if (mstar.m > max_dim)
    fail(ErrKind::DimensionTooLarge,
         "symbolic determinant of order " + std::to_string(mstar.m) + " exceeds the bound");
  std::vector<int> rows(mstar.m), cols(mstar.m);
  for (int i = 0; i < mstar.m; ++i) rows[i] = cols[i] = i;
  return det_recursive(mstar, rows, cols);
}

std::vector<std::string> m_star_var_names(int r, int m) {
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) names.push_back("z" + std::to_string(i));
  for (int i = 1; i <= m; ++i) names.push_back("k" + std::to_string(i));
  return names;
}

MultistatVerdict injectivity_test(const Network& net, const KineticModel& km) {
  RatMatrix n = stoichiometric_matrix(net);
  MStarMatrix ms = build_m_star(n, km.f);
  MPoly det = det_m_star(ms);

  MultistatVerdict out;
  if (det.is_zero()) {
    out.verdict = Verdict::Inconclusive;
    out.kind = MultistatVerdict::EvidenceKind::MixedSignMonomials;
    out.note = "determinant of the replaced matrix is identically zero";
    return out;
  }

  int d = ms.left_kernel.rows();
  auto zdeg = det.homogeneous_degree(0, ms.r);
  auto kdeg = det.homogeneous_degree(ms.r, ms.r + ms.m);
  bool homogeneous = zdeg && kdeg && *zdeg == ms.m - d && *kdeg == ms.m - d;
  int sign = det.coefficient_sign_summary();

  if (homogeneous && sign != 0) {
    out.verdict = Verdict::Monostationary;
    out.kind = MultistatVerdict::EvidenceKind::InjectivityCertificate;
    out.det_sign = sign;
    out.note = sign > 0 ? "all determinant coefficients positive"
                        : "all determinant coefficients negative";
    return out;
  }

  out.verdict = Verdict::Inconclusive;
  out.kind = MultistatVerdict::EvidenceKind::MixedSignMonomials;
  auto names = m_star_var_names(ms.r, ms.m);
  for (const auto& [exps, coeff] : det.terms())
    out.monomials.push_back(rat_to_string(coeff) + " * " +
                            MPoly::monomial(det.nvars(), exps, Rat(1)).to_string(names));
  out.note = homogeneous ? "determinant has coefficients of both signs"
                         : "determinant is not homogeneous";
  return out;
}

std::vector<int> acr_species(const Network& net, const KineticModel& km) {
  SubspaceBasis w = kinetic_flux_orthocomplement(net, km);
  std::vector<int> out;
  for (int j = 0; j < net.species_count(); ++j) {
    bool all_zero = true;
    for (int i = 0; i < w.basis.rows(); ++i)
      if (w.basis.at(i, j) != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) out.push_back(j);
  }
  return out;
}

MultistatVerdict multistationarity_pipeline(const Network& net, const KineticModel& km) {
  // Degenerate exchange orders: both order differences vanish, none of the
  // class-based results apply.
  try {
    DacClassification cls = classify_system(net, km);
    if (cls.cls == DacClass::Degenerate) {
      MultistatVerdict out;
      out.verdict = Verdict::Inconclusive;
      out.note = "degenerate exchange orders (p1 = p2 and q1 = q2)";
      return out;
    }
  } catch (const Error&) {
    // Not an exchange-pair shaped network; continue with the generic path.
  }

  StructuralIndices ix = structural_indices(net);
  if (ix.weakly_reversible && ix.delta == 0 && is_pl_rdk(net, km)) {
    SubspaceBasis s = stoichiometric_subspace(net);
    SubspaceBasis w = kinetic_flux_orthocomplement(net, km);
    SignIntersection si = sign_intersection_test(s, w);
    if (si.nonzero) {
      MultistatVerdict out;
      out.verdict = Verdict::Multistationary;
      out.kind = MultistatVerdict::EvidenceKind::SignWitness;
      out.sign_witness = si.witness;
      out.note = "sign condition met on a weakly reversible deficiency-zero system";
      return out;
    }
  }

  MultistatVerdict inj = injectivity_test(net, km);
  if (inj.verdict == Verdict::Monostationary) return inj;

  Decomposition dec = finest_independent_decomposition(net);
  if (dec.independent && dec.subnetworks.size() > 1) {
    Model model{net, km};  // copies; subnetwork restriction needs both
    std::vector<SubnetworkVerdict> verdicts = subnetwork_verdicts(model, dec);
    MultistatVerdict combined = combine_verdicts(dec, verdicts);
    if (combined.verdict != Verdict::Inconclusive) return combined;
  }

  MultistatVerdict out;
  out.verdict = Verdict::Inconclusive;
  out.kind = inj.kind;
  out.monomials = inj.monomials;
  out.note = "no decisive criterion applies (" + inj.note + ")";
  return out;
}

}  // namespace crn
