#include "crnkit/network.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "crnkit/error.hpp"
#include "crnkit/lp.hpp"

namespace crn {

void Complex::add(int species, const Rat& c) {
  if (c == 0) return;
  auto it = coeffs.find(species);
  if (it == coeffs.end()) {
    if (c < 0) fail(ErrKind::InvalidArgument, "negative stoichiometric coefficient");
    coeffs[species] = c;
  } else {
    it->second += c;
    if (it->second == 0)
      coeffs.erase(it);
    else if (it->second < 0)
      fail(ErrKind::InvalidArgument, "negative stoichiometric coefficient");
  }
}

std::vector<Rat> Complex::dense(int m) const {
  std::vector<Rat> v(m, Rat(0));
  for (const auto& [sp, c] : coeffs) v[sp] = c;
  return v;
}

int Network::add_species(const std::string& name) {
  if (species_by_name_.count(name))
    fail(ErrKind::InvalidArgument, "duplicate species name '" + name + "'");
  int id = int(species_.size());
  species_.push_back({id, name});
  species_by_name_[name] = id;
  return id;
}

int Network::intern_complex(const Complex& c) {
  for (const auto& [sp, coeff] : c.coeffs) {
    if (sp < 0 || sp >= species_count())
      fail(ErrKind::InvalidArgument, "complex references unknown species index");
    if (coeff <= 0) fail(ErrKind::InvalidArgument, "complex coefficients must be positive");
  }
  for (int i = 0; i < int(complexes_.size()); ++i)
    if (complexes_[i] == c) return i;
  complexes_.push_back(c);
  return int(complexes_.size()) - 1;
}

int Network::add_reaction(const std::string& label, const Complex& reactant,
                          const Complex& product) {
  if (reactant == product)
    fail(ErrKind::SelfTransfer, "reaction '" + label + "' has identical reactant and product");
  for (const auto& r : reactions_)
    if (r.label == label) fail(ErrKind::DuplicateLabel, "duplicate reaction label '" + label + "'");
  int rc = intern_complex(reactant);
  int pc = intern_complex(product);
  int id = int(reactions_.size());
  reactions_.push_back({id, rc, pc, label});
  return id;
}

void Network::finalize() {
  if (species_.empty()) fail(ErrKind::InvalidArgument, "network has no species");
  if (reactions_.empty()) fail(ErrKind::InvalidArgument, "network has no reactions");
  std::vector<bool> used(complexes_.size(), false);
  for (const auto& r : reactions_) used[r.reactant] = used[r.product] = true;
  for (size_t i = 0; i < used.size(); ++i)
    if (!used[i]) fail(ErrKind::InvalidArgument, "complex participates in no reaction");
}

std::optional<int> Network::species_index(const std::string& name) const {
  auto it = species_by_name_.find(name);
  if (it == species_by_name_.end()) return std::nullopt;
  return it->second;
}

std::string Network::complex_to_string(int ci) const {
  const Complex& c = complexes_[ci];
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [sp, coeff] : c.coeffs) {
    if (!first) os << " + ";
    first = false;
    if (coeff != 1) os << rat_to_string(coeff) << " ";
    os << species_[sp].name;
  }
  return os.str();
}

RatMatrix incidence_matrix(const Network& net) {
  RatMatrix ia(net.complex_count(), net.reaction_count());
  for (const auto& r : net.reactions()) {
    ia.at(r.reactant, r.id) -= 1;
    ia.at(r.product, r.id) += 1;
  }
  return ia;
}

RatMatrix molecularity_matrix(const Network& net) {
  RatMatrix y(net.species_count(), net.complex_count());
  for (int j = 0; j < net.complex_count(); ++j)
    for (const auto& [sp, coeff] : net.complex_at(j).coeffs) y.at(sp, j) = coeff;
  return y;
}

RatMatrix stoichiometric_matrix(const Network& net) {
  RatMatrix n(net.species_count(), net.reaction_count());
  for (const auto& r : net.reactions()) {
    for (const auto& [sp, coeff] : net.complex_at(r.product).coeffs) n.at(sp, r.id) += coeff;
    for (const auto& [sp, coeff] : net.complex_at(r.reactant).coeffs) n.at(sp, r.id) -= coeff;
  }
  return n;
}

namespace {

std::vector<std::vector<int>> canonical_partition(std::vector<std::vector<int>> parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return parts;
}

}  // namespace

std::vector<std::vector<int>> linkage_classes(const Network& net) {
  int n = net.complex_count();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& r : net.reactions()) parent[find(r.reactant)] = find(r.product);

  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return canonical_partition(std::move(out));
}

StrongClasses strong_and_terminal_classes(const Network& net) {
  int n = net.complex_count();
  std::vector<std::vector<int>> adj(n);
  for (const auto& r : net.reactions()) adj[r.reactant].push_back(r.product);

  // Tarjan.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0, comp_count = 0;
  std::function<void(int)> strongconnect = [&](int v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : adj[v]) {
      if (index[w] < 0) {
        strongconnect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      for (;;) {
        int w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = comp_count;
        if (w == v) break;
      }
      ++comp_count;
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] < 0) strongconnect(v);

  std::vector<std::vector<int>> classes(comp_count);
  for (int v = 0; v < n; ++v) classes[comp[v]].push_back(v);
  std::vector<bool> leaves(comp_count, false);
  for (const auto& r : net.reactions())
    if (comp[r.reactant] != comp[r.product]) leaves[comp[r.reactant]] = true;

  // Canonical ordering, keeping the terminal flags aligned.
  std::vector<int> order(comp_count);
  for (int i = 0; i < comp_count; ++i) order[i] = i;
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return classes[a].front() < classes[b].front(); });

  StrongClasses out;
  for (int i : order) {
    out.classes.push_back(classes[i]);
    out.terminal.push_back(!leaves[i]);
  }
  return out;
}

bool is_weakly_reversible(const Network& net) {
  return int(strong_and_terminal_classes(net).classes.size()) ==
         int(linkage_classes(net).size());
}

StructuralIndices structural_indices(const Network& net) {
  StructuralIndices ix{};
  ix.n = net.complex_count();
  ix.l = int(linkage_classes(net).size());
  StrongClasses sc = strong_and_terminal_classes(net);
  ix.sl = int(sc.classes.size());
  ix.t = int(std::count(sc.terminal.begin(), sc.terminal.end(), true));
  std::set<int> reactants;
  for (const auto& r : net.reactions()) reactants.insert(r.reactant);
  ix.n_r = int(reactants.size());
  ix.s = rank_of(stoichiometric_matrix(net));
  ix.delta = ix.n - ix.l - ix.s;
  ix.weakly_reversible = (ix.sl == ix.l);
  return ix;
}

RatMatrix conserved_quantity_basis(const Network& net) {
  return left_nullspace(stoichiometric_matrix(net));
}

ConservativityResult is_conservative(const Network& net) {
  RatMatrix basis = conserved_quantity_basis(net);
  std::vector<int> all_positive(net.species_count(), 1);
  auto w = subspace_sign_witness(basis, all_positive);
  if (!w) return {false, {}};
  return {true, *w};
}

bool is_positively_dependent(const Network& net) {
  // N(1 + y) = 0 with y >= 0  <=>  N y = -N 1.
  RatMatrix n = stoichiometric_matrix(net);
  std::vector<Rat> ones(n.cols(), Rat(1));
  std::vector<Rat> rhs = n.apply(ones);
  for (Rat& v : rhs) v = -v;
  return lp_feasible_point(n, rhs).has_value();
}

}  // namespace crn
