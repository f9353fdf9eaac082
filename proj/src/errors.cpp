#include "pinwheels/errors.hpp"

namespace pinwheels {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonOrientable: return "NonOrientable";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::CrossingCurves: return "CrossingCurves";
    case ErrorKind::ContractibleDividingCurve: return "ContractibleDividingCurve";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::InvalidDividingSet: return "InvalidDividingSet";
    case ErrorKind::NotEmbedded: return "NotEmbedded";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::CrossingChords: return "CrossingChords";
    case ErrorKind::ArcCrossingCountNotThree: return "ArcCrossingCountNotThree";
    case ErrorKind::ArcsNotDisjoint: return "ArcsNotDisjoint";
    case ErrorKind::ArcNotEmbedded: return "ArcNotEmbedded";
    case ErrorKind::MismatchedBoundaryData: return "MismatchedBoundaryData";
    case ErrorKind::NotAnArc: return "NotAnArc";
    case ErrorKind::ArcNotPresent: return "ArcNotPresent";
    case ErrorKind::NeighborhoodObstructed: return "NeighborhoodObstructed";
    case ErrorKind::NotAPolygonOfThisConfiguration: return "NotAPolygonOfThisConfiguration";
    case ErrorKind::NoncompactUnsupported: return "NoncompactUnsupported";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::BadVoltageDomain: return "BadVoltageDomain";
    case ErrorKind::NotAPinwheelUpstairs: return "NotAPinwheelUpstairs";
    case ErrorKind::NotVirtual: return "NotVirtual";
    case ErrorKind::NotADisk: return "NotADisk";
    case ErrorKind::PinwheelFound: return "PinwheelFound";
    case ErrorKind::NoOperationApplies: return "NoOperationApplies";
    case ErrorKind::SphereUnsupported: return "SphereUnsupported";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SemanticError: return "SemanticError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace pinwheels
