#include "numsg/error.hpp"

namespace numsg {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::NotASemigroup: return "NotASemigroup";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NonPositiveDivisor: return "NonPositiveDivisor";
    case Errc::IsNaturals: return "IsNaturals";
    case Errc::BadM: return "BadM";
    case Errc::NotGapSubset: return "NotGapSubset";
    case Errc::InvalidCertificate: return "InvalidCertificate";
    case Errc::PredicateNotClosed: return "PredicateNotClosed";
    case Errc::UnknownFormat: return "UnknownFormat";
    case Errc::BoundTooLarge: return "BoundTooLarge";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace numsg
