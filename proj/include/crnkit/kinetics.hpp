#ifndef CRNKIT_KINETICS_HPP
#define CRNKIT_KINETICS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "crnkit/network.hpp"

namespace crn {

// Power-law kinetics on a network: row i of F holds the kinetic orders of
// reaction i, K_i(x) = k_i * prod_j x_j^{F_ij}. Rate values are optional;
// structural analyses never read them.
struct KineticModel {
  RatMatrix f;  // r x m
  std::vector<std::string> rate_names;
  std::vector<std::optional<double>> rate_values;

  bool has_rate_values() const {
    for (const auto& v : rate_values)
      if (!v) return false;
    return !rate_values.empty();
  }
};

struct Model {
  Network net;
  KineticModel kin;
};

enum class SubspaceTag { Stoichiometric, KineticFlux, Orthocomplement };

struct SubspaceBasis {
  SubspaceTag tag;
  RatMatrix basis;  // rows are basis vectors in species space
  int dim() const { return basis.rows(); }
};

const RatMatrix& kinetic_order_matrix(const KineticModel& km);

// Reactions sharing a reactant complex must share F rows.
bool is_pl_rdk(const Network& net, const KineticModel& km);

// m x n: column j = kinetic-order vector of complex j when j is a reactant
// complex, zero otherwise. Throws NotPlRdk when the column is ambiguous.
RatMatrix y_tilde_matrix(const Network& net, const KineticModel& km);

// Im(Ytilde * Ia); defined here only for weakly reversible networks.
SubspaceBasis kinetic_flux_subspace(const Network& net, const KineticModel& km);
SubspaceBasis kinetic_flux_orthocomplement(const Network& net, const KineticModel& km);

SubspaceBasis stoichiometric_subspace(const Network& net);

std::vector<double> evaluate_rates(const Network& net, const KineticModel& km,
                                   const std::vector<double>& x);

enum class DacClass { Positive, Negative, PNull, QNull, Degenerate };

const char* dac_class_name(DacClass c);

// Classification of a DAC-shaped model by the signs of P = p2 - p1 and
// Q = q2 - q1 read off the exchange pair (R1, R2).
struct DacClassification {
  DacClass cls;
  Rat p_diff, q_diff;        // P, Q
  std::optional<Rat> rp;     // P/Q, defined when Q != 0
  std::optional<Rat> rq;     // Q/P, defined when P != 0
  int r1, r2;                // reaction indices of the exchange pair
  int sp_p, sp_q;            // species indices carrying the p / q orders
};

// Locates the exchange pair structurally: the unique reversible pair whose two
// complexes each involve exactly two species; the p-species is the one of the
// two shared species that appears in no other reaction. `anchor` overrides the
// search with explicit (r1, r2) for networks where the pattern is ambiguous.
DacClassification classify_system(const Network& net, const KineticModel& km,
                                  std::optional<std::pair<int, int>> anchor = std::nullopt);

// Numeric parameters of the direct-air-capture preset. Orders are exact
// rationals; rate constants are plain doubles.
struct DacParameters {
  Rat p1 = 0, p2 = 1, q1 = 0, q2 = 1;
  double k1 = 1, k2 = 1, k4 = 1, k5 = 1, k6 = 1;
  double am = 1, beta = 1;
};

// Species roles for a model recognized as the DAC preset shape.
struct DacRecognition {
  DacParameters params;           // rates filled only when the model has values
  bool has_rates;
  std::array<int, 5> species;     // indices of the A1..A5 roles
  std::array<int, 7> reactions;   // indices of the R1..R7 roles
};

// Structural match against the preset shape (exact complexes A1+2A2, 2A1+A2,
// singleton pools, mass-action tail). Returns nullopt when the model is not
// of that shape.
std::optional<DacRecognition> recognize_dac(const Model& model);

}  // namespace crn

#endif
