#include "symalg/error.hpp"

namespace nehari {

const char* toString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::NotInvertibleOnCircle: return "not-invertible-on-circle";
    case ErrorKind::ResolutionFailure: return "resolution-failure";
    case ErrorKind::NotKAdmissible: return "not-k-admissible";
    case ErrorKind::DegenerateLevel: return "degenerate-level";
    case ErrorKind::NotABestApproximant: return "not-a-best-approximant";
    case ErrorKind::ConstructionFailure: return "construction-failure";
    case ErrorKind::IllConditioned: return "ill-conditioned";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

}  // namespace nehari
