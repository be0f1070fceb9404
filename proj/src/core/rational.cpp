#include "crnkit/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "crnkit/error.hpp"

namespace crn {

const char* err_kind_name(ErrKind k) {
  switch (k) {
    case ErrKind::InvalidArgument: return "InvalidArgument";
    case ErrKind::ParseError: return "ParseError";
    case ErrKind::UndeclaredSpecies: return "UndeclaredSpecies";
    case ErrKind::NonpositiveRate: return "NonpositiveRate";
    case ErrKind::SelfTransfer: return "SelfTransfer";
    case ErrKind::DuplicateLabel: return "DuplicateLabel";
    case ErrKind::NotWeaklyReversible: return "NotWeaklyReversible";
    case ErrKind::NotPlRdk: return "NotPlRdk";
    case ErrKind::ShapeMismatch: return "ShapeMismatch";
    case ErrKind::ClassMismatch: return "ClassMismatch";
    case ErrKind::DegenerateClass: return "DegenerateClass";
    case ErrKind::PNullShape: return "PNullShape";
    case ErrKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrKind::NotIndependent: return "NotIndependent";
    case ErrKind::NonpositiveState: return "NonpositiveState";
    case ErrKind::StepSizeUnderflow: return "StepSizeUnderflow";
    case ErrKind::NoConvergence: return "NoConvergence";
    case ErrKind::Unbounded: return "Unbounded";
    case ErrKind::Infeasible: return "Infeasible";
    case ErrKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  size_t lo = 0, hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  std::string s = text.substr(lo, hi - lo);
  if (s.empty()) fail(ErrKind::InvalidArgument, "empty number");

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = (s[0] == '-');
    s.erase(0, 1);
  }

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      fail(ErrKind::InvalidArgument, "bad rational literal '" + text + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) fail(ErrKind::InvalidArgument, "zero denominator in '" + text + "'");
    Rat q(n, d);
    q.canonicalize();
    return neg ? Rat(-q) : q;
  }

  // decimal with optional exponent
  std::string mant = s;
  long expo = 0;
  auto e = s.find_first_of("eE");
  if (e != std::string::npos) {
    mant = s.substr(0, e);
    std::string es = s.substr(e + 1);
    if (es.empty()) fail(ErrKind::InvalidArgument, "bad exponent in '" + text + "'");
    bool eneg = false;
    if (es[0] == '+' || es[0] == '-') {
      eneg = (es[0] == '-');
      es.erase(0, 1);
    }
    if (!all_digits(es)) fail(ErrKind::InvalidArgument, "bad exponent in '" + text + "'");
    expo = std::strtol(es.c_str(), nullptr, 10);
    if (eneg) expo = -expo;
  }

  std::string digits;
  long frac_digits = 0;
  auto dot = mant.find('.');
  if (dot == std::string::npos) {
    digits = mant;
  } else {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    frac_digits = static_cast<long>(mant.size() - dot - 1);
  }
  if (!all_digits(digits)) fail(ErrKind::InvalidArgument, "bad number '" + text + "'");

  mpz_class n(digits, 10);
  Rat q(n);
  long net = expo - frac_digits;
  if (net > 0) {
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(net));
    q *= Rat(p10);
  } else if (net < 0) {
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(-net));
    q /= Rat(p10);
  }
  q.canonicalize();
  return neg ? Rat(-q) : q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_to_double(const Rat& q) { return q.get_d(); }

Rat rat_from_double(double d) {
  Rat q;
  mpq_set_d(q.get_mpq_t(), d);
  return q;
}

}  // namespace crn
