#ifndef CRNKIT_DECOMPOSITION_HPP
#define CRNKIT_DECOMPOSITION_HPP

#include <string>
#include <vector>

#include "crnkit/structural.hpp"

namespace crn {

struct Decomposition {
  std::vector<std::vector<int>> subnetworks;  // partition of reaction indices
  std::vector<StructuralIndices> indices;     // per subnetwork
  std::vector<int> ranks;                     // rank of each restricted stoichiometric matrix
  bool independent;                           // sum of ranks equals rank of the whole
};

enum class VerdictRule { DeficiencyZeroMassAction, SignTest, Injectivity, External };

const char* verdict_rule_name(VerdictRule r);

struct SubnetworkVerdict {
  int subnetwork;
  Verdict verdict;
  VerdictRule rule;
  std::string note;
};

// Finest independent decomposition via the coordinate graph of the reaction
// vectors: pick a maximal independent subset B (leftmost greedy), expand every
// reaction vector over B, link members of B that co-occur in an expansion
// support, and read the partition off the connected components.
Decomposition finest_independent_decomposition(const Network& net);

// Restriction of a model to one reaction block (same species list).
Model subnetwork_model(const Model& model, const std::vector<int>& reaction_ids);

// Per-block steady-state verdicts. Order of rules: the deficiency zero theorem
// for mass-action weakly reversible blocks; the sign condition (decisive in
// both directions for weakly reversible deficiency-zero power-law blocks,
// where equilibria are complex balanced and log-parametrized by the
// orthocomplement); a single-signed injectivity determinant; otherwise
// inconclusive.
std::vector<SubnetworkVerdict> subnetwork_verdicts(const Model& model, const Decomposition& dec);

// All blocks monostationary => whole network monostationary (equilibria of an
// independent decomposition are the intersection of the block equilibria).
// Throws NotIndependent when the decomposition is not independent.
MultistatVerdict combine_verdicts(const Decomposition& dec,
                                  const std::vector<SubnetworkVerdict>& verdicts);

enum class Existence { Exists, NonePositive, Unknown };

const char* existence_name(Existence e);

// Weakly reversible + deficiency zero + reactant-determined kinetics
// guarantees a positive steady state; failure of positive dependence rules
// one out; anything else is unknown.
Existence existence_verdict(const Network& net, const KineticModel& km);

}  // namespace crn

#endif
