#ifndef CRNKIT_ERROR_HPP
#define CRNKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace crn {

// One exception type for the whole library; `kind` is stable and is what the
// C layer maps to status codes.
enum class ErrKind {
  InvalidArgument,
  ParseError,          // malformed input text (carries line/column)
  UndeclaredSpecies,
  NonpositiveRate,
  SelfTransfer,
  DuplicateLabel,
  NotWeaklyReversible,
  NotPlRdk,
  ShapeMismatch,       // model is not DAC-shaped where that shape is required
  ClassMismatch,       // state vector inconsistent with the requested class
  DegenerateClass,
  PNullShape,
  DimensionTooLarge,
  NotIndependent,
  NonpositiveState,
  StepSizeUnderflow,
  NoConvergence,
  Unbounded,
  Infeasible,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrKind kind, std::string msg, int line = -1, int column = -1)
      : std::runtime_error(std::move(msg)), kind(kind), line(line), column(column) {}

  ErrKind kind;
  int line;    // >= 1 for parse errors
  int column;  // >= 1 for parse errors
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg, int line = -1,
                              int column = -1) {
  throw Error(kind, msg, line, column);
}

const char* err_kind_name(ErrKind k);

}  // namespace crn

#endif
