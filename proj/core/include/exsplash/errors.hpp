#pragma once

#include <stdexcept>
#include <string>

namespace exsplash {

// Every precondition or construction failure in the library throws Error with
// one of these codes. Codes are stable API; messages are for humans.
enum class Errc {
  NotPrimePower,
  ReduciblePolynomial,
  NonPrimitiveRoot,
  ZeroRightHandSide,
  EqualArguments,
  DegenerateFrame,
  NotDistinct,
  NotCollinear,
  SecantLine,
  NotExterior,
  BadParameters,
  AllZeroParameters,
  DependentBasis,
  NoFit,
  PointNotInSubplane,
  NotSpecial,
  PointInSubplane,
  PointOnLine,
  NoPoint,
  MultiplePoints,
  PreconditionViolation,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Always-on internal invariant check; a failure indicates a library bug,
// not a caller error.
inline void ensure(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

} // namespace exsplash
