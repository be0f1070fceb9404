#include "crnkit/polynomial.hpp"

#include <cmath>
#include <sstream>

#include "crnkit/error.hpp"

namespace crn {

MPoly MPoly::constant(int nvars, const Rat& c) {
  MPoly p(nvars);
  p.add_term(Exps(nvars, 0), c);
  return p;
}

MPoly MPoly::monomial(int nvars, const Exps& exps, const Rat& c) {
  MPoly p(nvars);
  p.add_term(exps, c);
  return p;
}

Rat MPoly::coefficient(const Exps& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Exps& exps, const Rat& c) {
  if (c == 0) return;
  if (int(exps.size()) != nvars_) fail(ErrKind::Internal, "exponent vector length mismatch");
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::negated() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exps e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

std::optional<int> MPoly::homogeneous_degree(int lo, int hi) const {
  std::optional<int> deg;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int i = lo; i < hi; ++i) d += e[i];
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

int MPoly::coefficient_sign_summary() const {
  if (terms_.empty()) return 0;
  int sign = 0;
  for (const auto& [e, c] : terms_) {
    int s = rat_sign(c);
    if (sign == 0)
      sign = s;
    else if (s != sign)
      return 0;
  }
  return sign;
}

double MPoly::evaluate(const std::vector<double>& point) const {
  if (int(point.size()) != nvars_) fail(ErrKind::Internal, "evaluation point length mismatch");
  double total = 0;
  for (const auto& [e, c] : terms_) {
    double t = rat_to_double(c);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (e[i] == 1)
        t *= point[i];
      else
        t *= std::pow(point[i], e[i]);
    }
    total += t;
  }
  return total;
}

std::string MPoly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    first = false;
    Rat a = abs(c);
    bool printed = false;
    if (a != 1) {
      os << rat_to_string(a);
      printed = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << var_names[i];
      if (e[i] != 1) os << "^" << e[i];
      printed = true;
    }
    if (!printed) os << "1";
  }
  return os.str();
}

}  // namespace crn
