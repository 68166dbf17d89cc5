#include "cmlab/error.hpp"

namespace cmlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::InvalidDegreeSequence: return "InvalidDegreeSequence";
    case ErrorCode::ZeroMean: return "ZeroMean";
    case ErrorCode::BadProbability: return "BadProbability";
    case ErrorCode::DegenerateDistribution: return "DegenerateDistribution";
    case ErrorCode::NoThreshold: return "NoThreshold";
    case ErrorCode::SamePair: return "SamePair";
    case ErrorCode::InsufficientRadius: return "InsufficientRadius";
    case ErrorCode::UnboundedRadius: return "UnboundedRadius";
    case ErrorCode::SpecParse: return "SpecParse";
    case ErrorCode::Exhausted: return "Exhausted";
  }
  return "Unknown";
}

}  // namespace cmlab
