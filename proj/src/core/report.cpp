#include "crnkit/report.hpp"

#include <cstdio>

#include "crnkit/error.hpp"

namespace crn {

namespace {

const char* evidence_kind_name(MultistatVerdict::EvidenceKind k) {
  switch (k) {
    case MultistatVerdict::EvidenceKind::None: return "none";
    case MultistatVerdict::EvidenceKind::SignWitness: return "sign_witness";
    case MultistatVerdict::EvidenceKind::InjectivityCertificate: return "injectivity_certificate";
    case MultistatVerdict::EvidenceKind::MixedSignMonomials: return "mixed_sign_monomials";
    case MultistatVerdict::EvidenceKind::DecompositionArgument: return "decomposition";
  }
  return "?";
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

AnalysisBundle analyze_model(const Model& model) {
  const Network& net = model.net;
  const KineticModel& km = model.kin;

  AnalysisBundle b{.indices = structural_indices(net),
                   .conserved = conserved_quantity_basis(net),
                   .conservativity = is_conservative(net),
                   .positively_dependent = is_positively_dependent(net),
                   .pl_rdk = is_pl_rdk(net, km),
                   .classification = std::nullopt,
                   .stoich = stoichiometric_subspace(net),
                   .kinetic_flux = std::nullopt,
                   .orthocomplement = std::nullopt,
                   .verdict = {},
                   .acr = std::nullopt,
                   .decomposition = finest_independent_decomposition(net),
                   .block_verdicts = {},
                   .existence = existence_verdict(net, km)};

  try {
    b.classification = classify_system(net, km);
  } catch (const Error&) {
  }

  if (b.indices.weakly_reversible && b.pl_rdk) {
    b.kinetic_flux = kinetic_flux_subspace(net, km);
    b.orthocomplement = kinetic_flux_orthocomplement(net, km);
    b.acr = acr_species(net, km);
  }

  b.verdict = multistationarity_pipeline(net, km);
  if (b.decomposition.independent) b.block_verdicts = subnetwork_verdicts(model, b.decomposition);
  return b;
}

nlohmann::ordered_json rat_json(const Rat& v) {
  nlohmann::ordered_json j;
  j["num"] = v.get_num().get_str();
  j["den"] = v.get_den().get_str();
  return j;
}

nlohmann::ordered_json rat_vector_json(const std::vector<Rat>& v) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Rat& x : v) arr.push_back(rat_json(x));
  return arr;
}

nlohmann::ordered_json basis_json(const RatMatrix& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int i = 0; i < rows.rows(); ++i) arr.push_back(rat_vector_json(rows.row(i)));
  return arr;
}

namespace {

nlohmann::ordered_json subspace_json(const SubspaceBasis& sb) {
  nlohmann::ordered_json j;
  j["dim"] = sb.dim();
  j["basis"] = basis_json(sb.basis);
  return j;
}

nlohmann::ordered_json verdict_json(const MultistatVerdict& v) {
  nlohmann::ordered_json j;
  j["result"] = verdict_name(v.verdict);
  j["evidence"] = evidence_kind_name(v.kind);
  if (v.sign_witness) {
    nlohmann::ordered_json w;
    w["x_in_s"] = rat_vector_json(v.sign_witness->x_in_s);
    w["w_in_orthocomplement"] = rat_vector_json(v.sign_witness->w_in_orth);
    w["pattern"] = v.sign_witness->pattern;
    j["sign_witness"] = w;
  }
  if (v.kind == MultistatVerdict::EvidenceKind::InjectivityCertificate) j["det_sign"] = v.det_sign;
  if (!v.monomials.empty()) j["monomials"] = v.monomials;
  if (!v.decomposition_notes.empty()) j["decomposition_notes"] = v.decomposition_notes;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace

nlohmann::ordered_json report_json(const Model& model, const AnalysisBundle& b) {
  const Network& net = model.net;
  nlohmann::ordered_json j;
  j["schema_version"] = 1;

  nlohmann::ordered_json network;
  nlohmann::ordered_json species = nlohmann::ordered_json::array();
  for (const auto& sp : net.species()) species.push_back(sp.name);
  network["species"] = species;
  nlohmann::ordered_json reactions = nlohmann::ordered_json::array();
  for (int i = 0; i < net.reaction_count(); ++i) {
    const Reaction& rx = net.reaction_at(i);
    nlohmann::ordered_json r;
    r["label"] = rx.label;
    r["reactant"] = net.complex_to_string(rx.reactant);
    r["product"] = net.complex_to_string(rx.product);
    r["rate"] = model.kin.rate_names[i];
    reactions.push_back(r);
  }
  network["reactions"] = reactions;
  j["network"] = network;

  nlohmann::ordered_json idx;
  idx["species"] = net.species_count();
  idx["reactions"] = net.reaction_count();
  idx["complexes"] = b.indices.n;
  idx["linkage_classes"] = b.indices.l;
  idx["strong_classes"] = b.indices.sl;
  idx["terminal_classes"] = b.indices.t;
  idx["reactant_complexes"] = b.indices.n_r;
  idx["rank"] = b.indices.s;
  idx["deficiency"] = b.indices.delta;
  idx["weakly_reversible"] = b.indices.weakly_reversible;
  j["indices"] = idx;

  nlohmann::ordered_json cons;
  cons["basis"] = basis_json(b.conserved);
  cons["conservative"] = b.conservativity.conservative;
  cons["witness"] = b.conservativity.conservative ? rat_vector_json(b.conservativity.witness)
                                                  : nlohmann::ordered_json(nullptr);
  j["conservation"] = cons;
  j["positively_dependent"] = b.positively_dependent;

  nlohmann::ordered_json kin;
  kin["pl_rdk"] = b.pl_rdk;
  kin["orders"] = basis_json(model.kin.f);
  if (b.classification) {
    nlohmann::ordered_json cls;
    cls["label"] = dac_class_name(b.classification->cls);
    cls["P"] = rat_json(b.classification->p_diff);
    cls["Q"] = rat_json(b.classification->q_diff);
    cls["Rp"] = b.classification->rp ? rat_json(*b.classification->rp)
                                     : nlohmann::ordered_json(nullptr);
    cls["Rq"] = b.classification->rq ? rat_json(*b.classification->rq)
                                     : nlohmann::ordered_json(nullptr);
    kin["class"] = cls;
  } else {
    kin["class"] = nullptr;
  }
  j["kinetics"] = kin;

  nlohmann::ordered_json sub;
  sub["stoichiometric"] = subspace_json(b.stoich);
  sub["kinetic_flux"] =
      b.kinetic_flux ? subspace_json(*b.kinetic_flux) : nlohmann::ordered_json(nullptr);
  sub["kinetic_flux_orthocomplement"] =
      b.orthocomplement ? subspace_json(*b.orthocomplement) : nlohmann::ordered_json(nullptr);
  j["subspaces"] = sub;

  j["verdict"] = verdict_json(b.verdict);

  if (b.acr) {
    nlohmann::ordered_json acr = nlohmann::ordered_json::array();
    for (int sp : *b.acr) acr.push_back(net.species_at(sp).name);
    j["acr"] = acr;
  } else {
    j["acr"] = nullptr;
  }

  nlohmann::ordered_json dec;
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const auto& block : b.decomposition.subnetworks) {
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (int rx : block) labels.push_back(net.reaction_at(rx).label);
    blocks.push_back(labels);
  }
  dec["blocks"] = blocks;
  dec["independent"] = b.decomposition.independent;
  dec["ranks"] = b.decomposition.ranks;
  nlohmann::ordered_json defs = nlohmann::ordered_json::array();
  for (const auto& si : b.decomposition.indices) defs.push_back(si.delta);
  dec["deficiencies"] = defs;
  nlohmann::ordered_json bv = nlohmann::ordered_json::array();
  for (const auto& v : b.block_verdicts) {
    nlohmann::ordered_json e;
    e["block"] = v.subnetwork;
    e["verdict"] = verdict_name(v.verdict);
    e["rule"] = verdict_rule_name(v.rule);
    e["note"] = v.note;
    bv.push_back(e);
  }
  dec["block_verdicts"] = bv;
  j["decomposition"] = dec;

  j["existence"] = existence_name(b.existence);
  return j;
}

std::string json_to_text(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::string trajectory_csv(const Network& net, const Trajectory& traj) {
  std::string out = "t";
  for (const auto& sp : net.species()) out += "," + sp.name;
  out += "\n";
  for (size_t i = 0; i < traj.t.size(); ++i) {
    out += format_double(traj.t[i]);
    for (double v : traj.x[i]) out += "," + format_double(v);
    out += "\n";
  }
  return out;
}

}  // namespace crn
