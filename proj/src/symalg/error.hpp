#pragma once

#include <stdexcept>
#include <string>

namespace nehari {

enum class ErrorKind {
  InvalidInput,
  NotInvertibleOnCircle,
  ResolutionFailure,
  NotKAdmissible,
  DegenerateLevel,
  NotABestApproximant,
  ConstructionFailure,
  IllConditioned,
  InternalInconsistency,
};

const char* toString(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorKind::InvalidInput, message);
}

}  // namespace nehari
