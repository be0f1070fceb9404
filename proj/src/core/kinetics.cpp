#include "crnkit/kinetics.hpp"

#include <cmath>
#include <map>
#include <set>

#include "crnkit/error.hpp"

namespace crn {

const RatMatrix& kinetic_order_matrix(const KineticModel& km) { return km.f; }

namespace {

void check_kinetics_shape(const Network& net, const KineticModel& km) {
  if (km.f.rows() != net.reaction_count() || km.f.cols() != net.species_count())
    fail(ErrKind::InvalidArgument, "kinetic order matrix shape mismatch");
  if (int(km.rate_names.size()) != net.reaction_count())
    fail(ErrKind::InvalidArgument, "rate name count mismatch");
}

}  // namespace

bool is_pl_rdk(const Network& net, const KineticModel& km) {
  check_kinetics_shape(net, km);
  std::map<int, int> first_by_reactant;
  for (const auto& r : net.reactions()) {
    auto [it, inserted] = first_by_reactant.emplace(r.reactant, r.id);
    if (inserted) continue;
    for (int j = 0; j < km.f.cols(); ++j)
      if (km.f.at(r.id, j) != km.f.at(it->second, j)) return false;
  }
  return true;
}

RatMatrix y_tilde_matrix(const Network& net, const KineticModel& km) {
  check_kinetics_shape(net, km);
  if (!is_pl_rdk(net, km))
    fail(ErrKind::NotPlRdk, "kinetic order rows differ across a branching reactant complex");
  RatMatrix yt(net.species_count(), net.complex_count());
  for (const auto& r : net.reactions())
    for (int j = 0; j < km.f.cols(); ++j) yt.at(j, r.reactant) = km.f.at(r.id, j);
  return yt;
}

SubspaceBasis kinetic_flux_subspace(const Network& net, const KineticModel& km) {
  if (!is_weakly_reversible(net))
    fail(ErrKind::NotWeaklyReversible, "kinetic flux subspace requires weak reversibility");
  RatMatrix m = y_tilde_matrix(net, km) * incidence_matrix(net);
  return {SubspaceTag::KineticFlux, column_space(m)};
}

SubspaceBasis kinetic_flux_orthocomplement(const Network& net, const KineticModel& km) {
  if (!is_weakly_reversible(net))
    fail(ErrKind::NotWeaklyReversible, "kinetic flux subspace requires weak reversibility");
  RatMatrix m = y_tilde_matrix(net, km) * incidence_matrix(net);
  return {SubspaceTag::Orthocomplement, nullspace(m.transposed())};
}

SubspaceBasis stoichiometric_subspace(const Network& net) {
  return {SubspaceTag::Stoichiometric, column_space(stoichiometric_matrix(net))};
}

std::vector<double> evaluate_rates(const Network& net, const KineticModel& km,
                                   const std::vector<double>& x) {
  check_kinetics_shape(net, km);
  if (!km.has_rate_values())
    fail(ErrKind::InvalidArgument, "rate values required for evaluation");
  if (int(x.size()) != net.species_count())
    fail(ErrKind::InvalidArgument, "state vector length mismatch");
  for (double v : x)
    if (!(v > 0)) fail(ErrKind::NonpositiveState, "state components must be positive");

  std::vector<double> k(net.reaction_count());
  for (int i = 0; i < net.reaction_count(); ++i) {
    double v = *km.rate_values[i];
    for (int j = 0; j < net.species_count(); ++j) {
      const Rat& e = km.f.at(i, j);
      if (e == 0) continue;
      if (e == 1)
        v *= x[j];
      else if (e == 2)
        v *= x[j] * x[j];
      else
        v *= std::pow(x[j], rat_to_double(e));
    }
    k[i] = v;
  }
  return k;
}

const char* dac_class_name(DacClass c) {
  switch (c) {
    case DacClass::Positive: return "Positive";
    case DacClass::Negative: return "Negative";
    case DacClass::PNull: return "PNull";
    case DacClass::QNull: return "QNull";
    case DacClass::Degenerate: return "Degenerate";
  }
  return "?";
}

DacClassification classify_system(const Network& net, const KineticModel& km,
                                  std::optional<std::pair<int, int>> anchor) {
  check_kinetics_shape(net, km);

  int r1 = -1, r2 = -1;
  if (anchor) {
    r1 = anchor->first;
    r2 = anchor->second;
    if (r1 < 0 || r2 < 0 || r1 >= net.reaction_count() || r2 >= net.reaction_count() ||
        net.reaction_at(r1).reactant != net.reaction_at(r2).product ||
        net.reaction_at(r1).product != net.reaction_at(r2).reactant)
      fail(ErrKind::ShapeMismatch, "anchor reactions are not a reversible pair");
  } else {
    // The exchange pair: the unique reversible pair whose complexes each
    // involve exactly two species.
    std::vector<std::pair<int, int>> candidates;
    for (int i = 0; i < net.reaction_count(); ++i)
      for (int j = i + 1; j < net.reaction_count(); ++j) {
        const auto& a = net.reaction_at(i);
        const auto& b = net.reaction_at(j);
        if (a.reactant != b.product || a.product != b.reactant) continue;
        if (net.complex_at(a.reactant).coeffs.size() == 2 &&
            net.complex_at(a.product).coeffs.size() == 2)
          candidates.emplace_back(i, j);
      }
    if (candidates.size() != 1)
      fail(ErrKind::ShapeMismatch,
           "expected exactly one reversible pair of two-species complexes, found " +
               std::to_string(candidates.size()));
    r1 = candidates[0].first;
    r2 = candidates[0].second;
  }

  const auto& ra = net.reaction_at(r1);
  std::set<int> support;
  for (const auto& [sp, c] : net.complex_at(ra.reactant).coeffs) support.insert(sp);
  for (const auto& [sp, c] : net.complex_at(ra.product).coeffs) support.insert(sp);
  if (support.size() != 2)
    fail(ErrKind::ShapeMismatch, "exchange pair complexes must share two species");

  // p-species: appears in no complex outside the pair; ties broken by index.
  std::vector<int> shared(support.begin(), support.end());
  auto appears_elsewhere = [&](int sp) {
    for (const auto& r : net.reactions()) {
      if (r.id == r1 || r.id == r2) continue;
      if (net.complex_at(r.reactant).coeffs.count(sp) ||
          net.complex_at(r.product).coeffs.count(sp))
        return true;
    }
    return false;
  };
  int sp_p = -1;
  for (int sp : shared)
    if (!appears_elsewhere(sp)) {
      sp_p = sp;
      break;
    }
  if (sp_p < 0)
    fail(ErrKind::ShapeMismatch, "cannot identify the isolated species of the exchange pair");
  int sp_q = (shared[0] == sp_p) ? shared[1] : shared[0];

  // Orient the pair so direction 1 increases the p-species.
  Rat gain = net.complex_at(ra.product).coeff(sp_p) - net.complex_at(ra.reactant).coeff(sp_p);
  if (gain == 0) fail(ErrKind::ShapeMismatch, "exchange pair does not move the isolated species");
  if (gain < 0) std::swap(r1, r2);

  DacClassification out{};
  out.r1 = r1;
  out.r2 = r2;
  out.sp_p = sp_p;
  out.sp_q = sp_q;
  Rat p1 = km.f.at(r1, sp_p), q1 = km.f.at(r1, sp_q);
  Rat p2 = km.f.at(r2, sp_p), q2 = km.f.at(r2, sp_q);
  out.p_diff = p2 - p1;
  out.q_diff = q2 - q1;
  if (out.q_diff != 0) out.rp = out.p_diff / out.q_diff;
  if (out.p_diff != 0) out.rq = out.q_diff / out.p_diff;

  int sp_sign = rat_sign(out.p_diff) * rat_sign(out.q_diff);
  if (sp_sign > 0)
    out.cls = DacClass::Positive;
  else if (sp_sign < 0)
    out.cls = DacClass::Negative;
  else if (out.p_diff == 0 && out.q_diff == 0)
    out.cls = DacClass::Degenerate;
  else if (out.p_diff == 0)
    out.cls = DacClass::PNull;
  else
    out.cls = DacClass::QNull;
  return out;
}

namespace {

bool singleton_unit(const Complex& c, int* sp) {
  if (c.coeffs.size() != 1) return false;
  const auto& [s, coeff] = *c.coeffs.begin();
  if (coeff != 1) return false;
  *sp = s;
  return true;
}

bool mass_action_row(const Network& net, const KineticModel& km, int rid) {
  const Complex& rc = net.complex_at(net.reaction_at(rid).reactant);
  for (int j = 0; j < net.species_count(); ++j)
    if (km.f.at(rid, j) != rc.coeff(j)) return false;
  return true;
}

}  // namespace

std::optional<DacRecognition> recognize_dac(const Model& model) {
  const Network& net = model.net;
  const KineticModel& km = model.kin;
  if (net.species_count() != 5 || net.reaction_count() != 7 || net.complex_count() != 6)
    return std::nullopt;

  DacClassification cls;
  try {
    cls = classify_system(net, km);
  } catch (const Error&) {
    return std::nullopt;
  }

  const auto& r1x = net.reaction_at(cls.r1);
  const Complex& cr = net.complex_at(r1x.reactant);
  const Complex& cp = net.complex_at(r1x.product);
  if (!(cr.coeff(cls.sp_p) == 1 && cr.coeff(cls.sp_q) == 2 && cp.coeff(cls.sp_p) == 2 &&
        cp.coeff(cls.sp_q) == 1))
    return std::nullopt;

  // Remaining five reactions: mass action on singleton complexes.
  std::vector<int> rest;
  for (int i = 0; i < 7; ++i)
    if (i != cls.r1 && i != cls.r2) rest.push_back(i);
  for (int rid : rest) {
    int s;
    if (!singleton_unit(net.complex_at(net.reaction_at(rid).reactant), &s)) return std::nullopt;
    if (!singleton_unit(net.complex_at(net.reaction_at(rid).product), &s)) return std::nullopt;
    if (!mass_action_row(net, km, rid)) return std::nullopt;
  }

  auto ends = [&](int rid) {
    int a = -1, b = -1;
    singleton_unit(net.complex_at(net.reaction_at(rid).reactant), &a);
    singleton_unit(net.complex_at(net.reaction_at(rid).product), &b);
    return std::pair<int, int>(a, b);
  };

  // The equilibration pair A2 <-> A3: the from-A2 reaction whose product has
  // a reaction straight back to A2.
  int r3 = -1, r4 = -1, r5 = -1, r6 = -1, r7 = -1;
  int sp3 = -1, sp4 = -1, sp5 = -1;
  for (int a : rest) {
    auto [src, dst] = ends(a);
    if (src != cls.sp_q) continue;
    for (int b : rest) {
      if (b == a) continue;
      auto [s2, d2] = ends(b);
      if (s2 == dst && d2 == cls.sp_q) {
        if (r3 >= 0) return std::nullopt;  // ambiguous
        r3 = a;
        r4 = b;
        sp3 = dst;
      }
    }
  }
  if (r3 < 0) return std::nullopt;

  for (int rid : rest) {
    if (rid == r3 || rid == r4) continue;
    auto [src, dst] = ends(rid);
    if (dst == cls.sp_q) {
      r5 = rid;
      sp4 = src;
    } else if (src == cls.sp_q) {
      r6 = rid;
      sp5 = dst;
    } else {
      r7 = rid;
    }
  }
  if (r5 < 0 || r6 < 0 || r7 < 0) return std::nullopt;
  {
    auto [src, dst] = ends(r7);
    if (src != sp5 || dst != sp4) return std::nullopt;
  }
  if (sp3 == sp4 || sp3 == sp5 || sp4 == sp5) return std::nullopt;

  DacRecognition rec{};
  rec.species = {cls.sp_p, cls.sp_q, sp3, sp4, sp5};
  rec.reactions = {cls.r1, cls.r2, r3, r4, r5, r6, r7};
  rec.params.p1 = km.f.at(cls.r1, cls.sp_p);
  rec.params.q1 = km.f.at(cls.r1, cls.sp_q);
  rec.params.p2 = km.f.at(cls.r2, cls.sp_p);
  rec.params.q2 = km.f.at(cls.r2, cls.sp_q);
  rec.has_rates = km.has_rate_values();
  if (rec.has_rates) {
    rec.params.k1 = *km.rate_values[cls.r1];
    rec.params.k2 = *km.rate_values[cls.r2];
    rec.params.am = *km.rate_values[r3];
    rec.params.beta = *km.rate_values[r4] / *km.rate_values[r3];
    rec.params.k4 = *km.rate_values[r5];
    rec.params.k5 = *km.rate_values[r6];
    rec.params.k6 = *km.rate_values[r7];
  }
  return rec;
}

}  // namespace crn
