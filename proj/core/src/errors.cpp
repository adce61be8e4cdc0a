#include "exsplash/errors.hpp"

namespace exsplash {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::NonPrimitiveRoot: return "NonPrimitiveRoot";
    case Errc::ZeroRightHandSide: return "ZeroRightHandSide";
    case Errc::EqualArguments: return "EqualArguments";
    case Errc::DegenerateFrame: return "DegenerateFrame";
    case Errc::NotDistinct: return "NotDistinct";
    case Errc::NotCollinear: return "NotCollinear";
    case Errc::SecantLine: return "SecantLine";
    case Errc::NotExterior: return "NotExterior";
    case Errc::BadParameters: return "BadParameters";
    case Errc::AllZeroParameters: return "AllZeroParameters";
    case Errc::DependentBasis: return "DependentBasis";
    case Errc::NoFit: return "NoFit";
    case Errc::PointNotInSubplane: return "PointNotInSubplane";
    case Errc::NotSpecial: return "NotSpecial";
    case Errc::PointInSubplane: return "PointInSubplane";
    case Errc::PointOnLine: return "PointOnLine";
    case Errc::NoPoint: return "NoPoint";
    case Errc::MultiplePoints: return "MultiplePoints";
    case Errc::PreconditionViolation: return "PreconditionViolation";
  }
  return "UnknownError";
}

} // namespace exsplash
