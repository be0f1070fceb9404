#ifndef CRNKIT_NETWORK_HPP
#define CRNKIT_NETWORK_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crnkit/matrix.hpp"

namespace crn {

struct Species {
  int id;
  std::string name;
};

// A complex is a formal nonnegative rational combination of species. Zero
// coefficients are never stored; equality is coefficient-wise.
struct Complex {
  std::map<int, Rat> coeffs;

  bool operator==(const Complex& o) const { return coeffs == o.coeffs; }
  bool empty() const { return coeffs.empty(); }
  Rat coeff(int species) const {
    auto it = coeffs.find(species);
    return it == coeffs.end() ? Rat(0) : it->second;
  }
  void add(int species, const Rat& c);
  std::vector<Rat> dense(int m) const;
};

struct Reaction {
  int id;
  int reactant;  // complex index
  int product;   // complex index
  std::string label;
};

// Immutable after finalize(): species, interned complexes, reactions.
class Network {
public:
  int add_species(const std::string& name);           // returns index
  int intern_complex(const Complex& c);               // dedupes, returns index
  int add_reaction(const std::string& label, const Complex& reactant, const Complex& product);
  void finalize();  // validates; throws on violations

  int species_count() const { return int(species_.size()); }
  int complex_count() const { return int(complexes_.size()); }
  int reaction_count() const { return int(reactions_.size()); }

  const std::vector<Species>& species() const { return species_; }
  const std::vector<Complex>& complexes() const { return complexes_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }
  const Species& species_at(int i) const { return species_[i]; }
  const Complex& complex_at(int i) const { return complexes_[i]; }
  const Reaction& reaction_at(int i) const { return reactions_[i]; }

  std::optional<int> species_index(const std::string& name) const;
  std::string complex_to_string(int ci) const;

private:
  std::vector<Species> species_;
  std::vector<Complex> complexes_;
  std::vector<Reaction> reactions_;
  std::map<std::string, int> species_by_name_;
};

struct StructuralIndices {
  int n;      // complexes
  int l;      // linkage classes
  int sl;     // strong linkage classes
  int t;      // terminal strong linkage classes
  int n_r;    // reactant complexes
  int s;      // rank of the stoichiometric matrix
  int delta;  // deficiency n - l - s
  bool weakly_reversible;
};

// n x r incidence matrix: column of reaction y->y' is e_{y'} - e_y.
RatMatrix incidence_matrix(const Network& net);

// m x n matrix of complex columns.
RatMatrix molecularity_matrix(const Network& net);

// m x r matrix of reaction vectors; equals molecularity * incidence.
RatMatrix stoichiometric_matrix(const Network& net);

// Weakly connected components of the complex digraph (complex index sets,
// each sorted, listed by smallest member).
std::vector<std::vector<int>> linkage_classes(const Network& net);

struct StrongClasses {
  std::vector<std::vector<int>> classes;  // SCCs, same ordering convention
  std::vector<bool> terminal;             // per class: no edge leaves it
};
StrongClasses strong_and_terminal_classes(const Network& net);

bool is_weakly_reversible(const Network& net);

StructuralIndices structural_indices(const Network& net);

// Basis of the left nullspace of the stoichiometric matrix (rows), RREF
// canonical form.
RatMatrix conserved_quantity_basis(const Network& net);

struct ConservativityResult {
  bool conservative;
  std::vector<Rat> witness;  // strictly positive member of S-perp when found
};
ConservativityResult is_conservative(const Network& net);

// Exists k with all k_i >= 1 and N k = 0.
bool is_positively_dependent(const Network& net);

}  // namespace crn

#endif
