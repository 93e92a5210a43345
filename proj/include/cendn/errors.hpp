#pragma once

#include <stdexcept>
#include <string>

namespace cendn {

/// Base of every domain error raised by the library. The CLI maps these to
/// exit status 1; malformed input is reported separately.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define CENDN_DEFINE_ERROR(Name)                                   \
  class Name : public DomainError {                                \
   public:                                                         \
    explicit Name(const std::string& what) : DomainError(#Name, what) {} \
  };

CENDN_DEFINE_ERROR(DimensionMismatch)
CENDN_DEFINE_ERROR(NotUnimodular)
CENDN_DEFINE_ERROR(SingularQ)
CENDN_DEFINE_ERROR(SingularP)
CENDN_DEFINE_ERROR(NotDifferential)
CENDN_DEFINE_ERROR(InsufficientSamples)
CENDN_DEFINE_ERROR(NotClosed)
CENDN_DEFINE_ERROR(BoundTooSmall)

#undef CENDN_DEFINE_ERROR

}  // namespace cendn
