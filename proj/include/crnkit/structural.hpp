#ifndef CRNKIT_STRUCTURAL_HPP
#define CRNKIT_STRUCTURAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "crnkit/kinetics.hpp"
#include "crnkit/polynomial.hpp"

namespace crn {

enum class Verdict { Multistationary, Monostationary, Inconclusive };

const char* verdict_name(Verdict v);

struct SignWitnessEvidence {
  std::vector<Rat> x_in_s;     // member of the stoichiometric subspace
  std::vector<Rat> w_in_orth;  // member of the kinetic-flux orthocomplement
  std::vector<int> pattern;    // shared sign pattern
};

struct MultistatVerdict {
  enum class EvidenceKind {
    None,
    SignWitness,
    InjectivityCertificate,
    MixedSignMonomials,
    DecompositionArgument,
  };

  Verdict verdict = Verdict::Inconclusive;
  EvidenceKind kind = EvidenceKind::None;
  std::optional<SignWitnessEvidence> sign_witness;
  int det_sign = 0;                              // valid for InjectivityCertificate
  std::vector<std::string> monomials;            // valid for MixedSignMonomials
  std::vector<std::string> decomposition_notes;  // valid for DecompositionArgument
  std::string note;
};

// All sign patterns realizable by some vector of the spanned subspace.
// Patterns are vectors over {-1, 0, +1}; the enumeration is exact (one LP
// feasibility query per pattern) and capped at 3^m.
std::vector<std::vector<int>> realizable_sign_patterns(const SubspaceBasis& basis,
                                                       int max_species = 12);

struct SignIntersection {
  bool nonzero;  // some nonzero pattern realizable in both subspaces
  std::optional<SignWitnessEvidence> witness;
};

SignIntersection sign_intersection_test(const SubspaceBasis& s, const SubspaceBasis& w,
                                        int max_species = 12);

// Symbolic matrix M = N diag(z) F diag(k) with the rows at the RREF pivot
// indices of the left-kernel basis replaced by those basis vectors.
// Variables are ordered z_1..z_r, k_1..k_m.
struct MStarMatrix {
  int m, r;
  std::vector<std::vector<MPoly>> entries;  // m x m
  std::vector<int> replaced_rows;
  RatMatrix left_kernel;  // the RREF basis used for the replacements
};

MStarMatrix build_m_star(const RatMatrix& n, const RatMatrix& f);

MPoly det_m_star(const MStarMatrix& mstar, int max_dim = 10);

// Names z_1..z_r, k_1..k_m for rendering det monomials.
std::vector<std::string> m_star_var_names(int r, int m);

// Decisive only in the injective direction: a single-signed nonzero
// homogeneous determinant certifies monostationarity, anything else is
// inconclusive (non-injectivity is merely necessary for multistationarity).
MultistatVerdict injectivity_test(const Network& net, const KineticModel& km);

// Species whose coordinate is zero in every basis vector of the kinetic-flux
// orthocomplement (species hyperplane criterion). Sorted species indices.
std::vector<int> acr_species(const Network& net, const KineticModel& km);

// Ordered decision procedure: sign test (weakly reversible, deficiency zero,
// reactant-determined), then injectivity, then the independent-decomposition
// argument, else inconclusive. Degenerate exchange orders short-circuit to
// Inconclusive.
MultistatVerdict multistationarity_pipeline(const Network& net, const KineticModel& km);

}  // namespace crn

#endif
