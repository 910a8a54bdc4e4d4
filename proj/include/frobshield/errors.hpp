#pragma once

#include <stdexcept>
#include <string>

namespace frobshield {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an input exceeds the configured degree / coefficient-size /
// work budgets instead of running unbounded.
struct ResourceLimit : Error {
  explicit ResourceLimit(const std::string& msg) : Error("resource limit: " + msg) {}
};

struct NotMonic : Error {
  NotMonic() : Error("polynomial is not monic") {}
};

struct DegreeOdd : Error {
  DegreeOdd() : Error("polynomial degree is odd") {}
};

struct NotWeil : Error {
  explicit NotWeil(const std::string& msg) : Error("not a Weil polynomial: " + msg) {}
};

// Signals an upstream bug: a value violated an identity that is a theorem
// for correctly-computed inputs.
struct InternalInconsistency : Error {
  explicit InternalInconsistency(const std::string& msg)
      : Error("internal inconsistency: " + msg) {}
};

struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& msg)
      : Error("precondition violated: " + msg) {}
};

struct ParseError : Error {
  long line;
  ParseError(long line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct EllTooSmall : Error {
  EllTooSmall(long ell, long m)
      : Error("ell = " + std::to_string(ell) + " is below matrix dimension m = " +
              std::to_string(m)) {}
};

struct NotUnipotent : Error {
  NotUnipotent() : Error("matrix is not unipotent") {}
};

struct NotNilpotent : Error {
  NotNilpotent() : Error("matrix is not nilpotent") {}
};

struct NotSimilitude : Error {
  std::size_t generator_index;
  explicit NotSimilitude(std::size_t idx)
      : Error("generator " + std::to_string(idx) + " does not preserve the form up to scalar"),
        generator_index(idx) {}
};

// Internal invariant check that stays on in release builds.
#define FROB_CHECK(cond, msg)                          \
  do {                                                 \
    if (!(cond)) throw ::frobshield::InternalInconsistency(msg); \
  } while (0)

} // namespace frobshield
