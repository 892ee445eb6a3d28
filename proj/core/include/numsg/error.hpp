#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace numsg {

/// Failure categories surfaced by the library. The CLI prints these names.
enum class Errc {
  InvalidArgument,
  GcdNotOne,
  NotASemigroup,
  TooLarge,
  NonPositiveDivisor,
  IsNaturals,
  BadM,
  NotGapSubset,
  InvalidCertificate,
  PredicateNotClosed,
  UnknownFormat,
  BoundTooLarge,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace numsg
