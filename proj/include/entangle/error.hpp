#pragma once

#include <stdexcept>
#include <string>

namespace entangle {

// Error categories double as CLI/C-API status codes.
enum class ErrorCode : int {
  kOk = 0,
  kInputDomain = 2,
  kCapability = 3,
  kResource = 4,
  kNumericalContract = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorCode::kInputDomain, what) {}
};

struct CapabilityError : Error {
  explicit CapabilityError(const std::string& what) : Error(ErrorCode::kCapability, what) {}
};

struct ResourceError : Error {
  explicit ResourceError(const std::string& what) : Error(ErrorCode::kResource, what) {}
};

// A computed quantity violated a contract it must satisfy (spectrum bounds,
// positivity, degeneracy). Signals a builder bug or an ill-posed input.
struct NumericalError : Error {
  explicit NumericalError(const std::string& what)
      : Error(ErrorCode::kNumericalContract, what) {}
};

}  // namespace entangle
