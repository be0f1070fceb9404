#ifndef CRNKIT_MODEL_IO_HPP
#define CRNKIT_MODEL_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crnkit/kinetics.hpp"

namespace crn {

// One carbon transfer between pools. Modifiers are pools that influence the
// transfer without being consumed; the translation complex is added verbatim
// to both sides of the generated reaction.
struct BoxTransfer {
  std::string source;
  std::string target;
  std::vector<std::string> modifiers;
  std::vector<std::string> translation;
  std::string rate_name;
  std::map<std::string, Rat> orders;  // keys must lie in {source} + modifiers
  bool has_orders = false;            // absent clause means mass action
  int line = -1;                      // source line for diagnostics
};

struct BoxModel {
  std::vector<std::string> pools;
  std::vector<BoxTransfer> transfers;
  std::map<std::string, double> params;
};

// Lifts each transfer to the reaction
//   source + modifiers + translation -> target + modifiers + translation
// so the reaction vector is exactly e_target - e_source. Labels are R1..Rn in
// file order. A transfer with no orders clause gets mass-action orders on the
// lifted reactant complex.
Model box_model_to_crn(const BoxModel& bm);

// Line-oriented network format:
//   # comment
//   species: NAME+
//   reaction LABEL: COMPLEX -> COMPLEX rate=NAME [orders: (NAME=RATIONAL)*]
//   param NAME = DECIMAL
// COMPLEX is "0" or a "+"-separated list of [COEFF] NAME terms. A reaction
// without an orders clause is mass action. Rationals accept "p/q" and decimal
// literals; decimals convert exactly.
Model parse_network_file(const std::string& text);

// Canonical rendering; parse_network_file(render_network_file(m)) == m.
std::string render_network_file(const Model& model);

// Box format: "pool NAME" declarations plus
//   transfer SRC -> DST [modifiers: NAME+] [translate: NAME+] rate=NAME [orders: ...]
// and the same param lines as the network format.
BoxModel parse_box_file(const std::string& text);

// The seven-reaction direct-air-capture model: exchange pair
// A1+2A2 <-> 2A1+A2 with orders (p1,q1)/(p2,q2), linear chain
// A3 <-> A2 -> A5 -> A4 -> A2 with rates (am, am*beta, k5, k6, k4).
Model dac_preset(const DacParameters& params);

// Applies one KEY=VALUE override (keys p1,p2,q1,q2 as rationals; k1,k2,k4,
// k5,k6,am,beta as positive decimals).
void apply_dac_override(DacParameters& params, const std::string& key, const std::string& value);

}  // namespace crn

#endif
