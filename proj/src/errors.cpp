#include "qstrat/errors.hpp"

namespace qstrat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation: return "Validation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::ObjectNotFound: return "ObjectNotFound";
    case ErrorKind::OddPartUnsupported: return "OddPartUnsupported";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::BoundTooSmall: return "BoundTooSmall";
    case ErrorKind::NonSimplicial: return "NonSimplicial";
    case ErrorKind::Unfitted: return "Unfitted";
  }
  return "Unknown";
}

}  // namespace qstrat
