#include "crnkit/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "crnkit/error.hpp"

namespace crn {

const char* verdict_rule_name(VerdictRule r) {
  switch (r) {
    case VerdictRule::DeficiencyZeroMassAction: return "DeficiencyZeroMassAction";
    case VerdictRule::SignTest: return "SignTest";
    case VerdictRule::Injectivity: return "Injectivity";
    case VerdictRule::External: return "External";
  }
  return "?";
}

const char* existence_name(Existence e) {
  switch (e) {
    case Existence::Exists: return "Exists";
    case Existence::NonePositive: return "NonePositive";
    case Existence::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

Network subnetwork_network(const Network& net, const std::vector<int>& reaction_ids) {
  Network sub;
  for (const auto& sp : net.species()) sub.add_species(sp.name);
  for (int rid : reaction_ids) {
    const auto& r = net.reaction_at(rid);
    sub.add_reaction(r.label, net.complex_at(r.reactant), net.complex_at(r.product));
  }
  sub.finalize();
  return sub;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool block_is_mass_action(const Model& model, const std::vector<int>& reaction_ids) {
  for (int rid : reaction_ids) {
    const Complex& rc = model.net.complex_at(model.net.reaction_at(rid).reactant);
    for (int j = 0; j < model.net.species_count(); ++j)
      if (model.kin.f.at(rid, j) != rc.coeff(j)) return false;
  }
  return true;
}

}  // namespace

Decomposition finest_independent_decomposition(const Network& net) {
  RatMatrix n = stoichiometric_matrix(net);
  int m = n.rows(), r = n.cols();

  // Leftmost-greedy maximal independent set of reaction vectors.
  std::vector<int> basis_ids;
  {
    for (int i = 0; i < r; ++i) {
      RatMatrix trial(int(basis_ids.size()) + 1, m);
      for (size_t b = 0; b < basis_ids.size(); ++b)
        for (int j = 0; j < m; ++j) trial.at(int(b), j) = n.at(j, basis_ids[b]);
      for (int j = 0; j < m; ++j) trial.at(int(basis_ids.size()), j) = n.at(j, i);
      if (rank_of(trial) == int(basis_ids.size()) + 1) basis_ids.push_back(i);
    }
  }
  int s = int(basis_ids.size());

  // Expansion of every reaction vector in the chosen basis: solve B lambda = v
  // exactly via RREF of the augmented system.
  std::vector<std::vector<Rat>> expansions(r);
  for (int i = 0; i < r; ++i) {
    RatMatrix aug(m, s + 1);
    for (int b = 0; b < s; ++b)
      for (int j = 0; j < m; ++j) aug.at(j, b) = n.at(j, basis_ids[b]);
    for (int j = 0; j < m; ++j) aug.at(j, s) = n.at(j, i);
    std::vector<int> piv;
    rref_in_place(aug, &piv);
    std::vector<Rat> lambda(s, Rat(0));
    for (size_t p = 0; p < piv.size(); ++p) {
      if (piv[p] == s)
        fail(ErrKind::Internal, "reaction vector outside the span of the chosen basis");
      lambda[piv[p]] = aug.at(int(p), s);
    }
    expansions[i] = std::move(lambda);
  }

  // Link basis members co-occurring in any expansion support.
  UnionFind uf(s);
  for (int i = 0; i < r; ++i) {
    int first = -1;
    for (int b = 0; b < s; ++b) {
      if (expansions[i][b] == 0) continue;
      if (first < 0)
        first = b;
      else
        uf.unite(first, b);
    }
  }

  // Each reaction joins the component its expansion lives in.
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < r; ++i) {
    int comp = -1;
    for (int b = 0; b < s; ++b)
      if (expansions[i][b] != 0) {
        comp = uf.find(b);
        break;
      }
    if (comp < 0) fail(ErrKind::Internal, "zero reaction vector");
    groups[comp].push_back(i);
  }

  Decomposition dec;
  for (auto& [comp, members] : groups) {
    std::sort(members.begin(), members.end());
    dec.subnetworks.push_back(members);
  }
  std::sort(dec.subnetworks.begin(), dec.subnetworks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  int rank_sum = 0;
  for (const auto& block : dec.subnetworks) {
    Network sub = subnetwork_network(net, block);
    dec.indices.push_back(structural_indices(sub));
    RatMatrix nb(m, int(block.size()));
    for (size_t c = 0; c < block.size(); ++c)
      for (int j = 0; j < m; ++j) nb.at(j, int(c)) = n.at(j, block[c]);
    int rk = rank_of(nb);
    dec.ranks.push_back(rk);
    rank_sum += rk;
  }
  dec.independent = (rank_sum == s);
  return dec;
}

Model subnetwork_model(const Model& model, const std::vector<int>& reaction_ids) {
  Model sub;
  sub.net = subnetwork_network(model.net, reaction_ids);
  sub.kin.f = RatMatrix(int(reaction_ids.size()), model.net.species_count());
  for (size_t i = 0; i < reaction_ids.size(); ++i) {
    sub.kin.f.set_row(int(i), model.kin.f.row(reaction_ids[i]));
    sub.kin.rate_names.push_back(model.kin.rate_names[reaction_ids[i]]);
    sub.kin.rate_values.push_back(model.kin.rate_values[reaction_ids[i]]);
  }
  return sub;
}

std::vector<SubnetworkVerdict> subnetwork_verdicts(const Model& model, const Decomposition& dec) {
  std::vector<SubnetworkVerdict> out;
  for (size_t bi = 0; bi < dec.subnetworks.size(); ++bi) {
    const auto& block = dec.subnetworks[bi];
    Model sub = subnetwork_model(model, block);
    StructuralIndices ix = structural_indices(sub.net);

    SubnetworkVerdict v;
    v.subnetwork = int(bi);

    if (block_is_mass_action(model, block) && ix.weakly_reversible && ix.delta == 0) {
      v.verdict = Verdict::Monostationary;
      v.rule = VerdictRule::DeficiencyZeroMassAction;
      v.note = "weakly reversible deficiency-zero mass action block";
      out.push_back(std::move(v));
      continue;
    }

    if (ix.weakly_reversible && ix.delta == 0 && is_pl_rdk(sub.net, sub.kin)) {
      SubspaceBasis s = stoichiometric_subspace(sub.net);
      SubspaceBasis w = kinetic_flux_orthocomplement(sub.net, sub.kin);
      SignIntersection si = sign_intersection_test(s, w);
      v.rule = VerdictRule::SignTest;
      if (si.nonzero) {
        v.verdict = Verdict::Multistationary;
        v.note = "nonzero common sign pattern between the stoichiometric subspace and the "
                 "kinetic-flux orthocomplement";
      } else {
        v.verdict = Verdict::Monostationary;
        // Equilibria of a weakly reversible deficiency-zero power-law block
        // are complex balanced and log-parametrized by the orthocomplement,
        // so an empty sign intersection pins down one equilibrium per class.
        v.note = "empty sign intersection; complex-balanced equilibria unique per class";
      }
      out.push_back(std::move(v));
      continue;
    }

    MultistatVerdict inj = injectivity_test(sub.net, sub.kin);
    if (inj.verdict == Verdict::Monostationary) {
      v.verdict = Verdict::Monostationary;
      v.rule = VerdictRule::Injectivity;
      v.note = inj.note;
    } else {
      v.verdict = Verdict::Inconclusive;
      v.rule = VerdictRule::External;
      v.note = "no internal criterion decided this block";
    }
    out.push_back(std::move(v));
  }
  return out;
}

MultistatVerdict combine_verdicts(const Decomposition& dec,
                                  const std::vector<SubnetworkVerdict>& verdicts) {
  if (!dec.independent)
    fail(ErrKind::NotIndependent, "verdict combination requires an independent decomposition");
  if (verdicts.size() != dec.subnetworks.size())
    fail(ErrKind::InvalidArgument, "verdict list does not match the decomposition");

  MultistatVerdict out;
  out.kind = MultistatVerdict::EvidenceKind::DecompositionArgument;
  bool all_mono = true;
  for (const auto& v : verdicts) {
    if (v.verdict != Verdict::Monostationary) all_mono = false;
    out.decomposition_notes.push_back("block " + std::to_string(v.subnetwork) + " " +
                                      verdict_name(v.verdict) + " via " +
                                      verdict_rule_name(v.rule));
  }
  if (all_mono) {
    out.verdict = Verdict::Monostationary;
    out.note = "every block of the finest independent decomposition is monostationary";
  } else {
    out.verdict = Verdict::Inconclusive;
    out.note = "not every block is monostationary; the combination rule gives nothing";
  }
  return out;
}

Existence existence_verdict(const Network& net, const KineticModel& km) {
  StructuralIndices ix = structural_indices(net);
  if (ix.weakly_reversible && ix.delta == 0 && is_pl_rdk(net, km)) return Existence::Exists;
  if (!is_positively_dependent(net)) return Existence::NonePositive;
  return Existence::Unknown;
}

}  // namespace crn
