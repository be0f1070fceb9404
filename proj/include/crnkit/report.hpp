#ifndef CRNKIT_REPORT_HPP
#define CRNKIT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "crnkit/decomposition.hpp"
#include "crnkit/dynamics.hpp"
#include "crnkit/model_io.hpp"

namespace crn {

// Everything the structural pipeline produces for one model. None of it
// depends on numeric rate values.
struct AnalysisBundle {
  StructuralIndices indices;
  RatMatrix conserved;
  ConservativityResult conservativity;
  bool positively_dependent;
  bool pl_rdk;
  std::optional<DacClassification> classification;  // absent for other shapes
  SubspaceBasis stoich;
  std::optional<SubspaceBasis> kinetic_flux;        // weakly reversible PL-RDK only
  std::optional<SubspaceBasis> orthocomplement;
  MultistatVerdict verdict;
  std::optional<std::vector<int>> acr;              // defined with the orthocomplement
  Decomposition decomposition;
  std::vector<SubnetworkVerdict> block_verdicts;    // filled when independent
  Existence existence;
};

AnalysisBundle analyze_model(const Model& model);

// Schema version 1: fixed key order, rationals as {"num","den"} decimal
// strings, byte-identical for identical inputs.
nlohmann::ordered_json report_json(const Model& model, const AnalysisBundle& bundle);

nlohmann::ordered_json rat_json(const Rat& v);
nlohmann::ordered_json rat_vector_json(const std::vector<Rat>& v);
nlohmann::ordered_json basis_json(const RatMatrix& rows);

std::string json_to_text(const nlohmann::ordered_json& j);

// Header t,<species names>; 17 significant digits per value.
std::string trajectory_csv(const Network& net, const Trajectory& traj);

}  // namespace crn

#endif
