#ifndef CRNKIT_POLYNOMIAL_HPP
#define CRNKIT_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crnkit/rational.hpp"

namespace crn {

// Sparse multivariate polynomial with exact rational coefficients. Exponent
// vectors have fixed length nvars; zero coefficients are never stored.
class MPoly {
public:
  using Exps = std::vector<int>;

  explicit MPoly(int nvars = 0) : nvars_(nvars) {}

  static MPoly constant(int nvars, const Rat& c);
  static MPoly monomial(int nvars, const Exps& exps, const Rat& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Exps, Rat>& terms() const { return terms_; }

  Rat coefficient(const Exps& exps) const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly negated() const;

  void add_term(const Exps& exps, const Rat& c);

  // Common total degree of all terms over variable indices [lo, hi), or
  // nullopt if degrees differ (or the polynomial is zero).
  std::optional<int> homogeneous_degree(int lo, int hi) const;

  // +1 all coefficients positive, -1 all negative, 0 mixed or zero.
  int coefficient_sign_summary() const;

  double evaluate(const std::vector<double>& point) const;

  std::string to_string(const std::vector<std::string>& var_names) const;

private:
  int nvars_;
  std::map<Exps, Rat> terms_;
};

}  // namespace crn

#endif
