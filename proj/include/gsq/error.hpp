#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsq {

enum class Errc {
  NotPythagorean,
  NotArithmetic,
  NotSquare,
  TrivialTriple,
  GaussianParity,
  MixedRadicals,
  NotAGap,
  BoundTooLarge,
  InvalidArgument,
  Parse,
};

std::string_view errc_name(Errc code) noexcept;

/// Every recoverable failure in the library is reported as gsq::Error. The
/// code identifies the contract that was violated; what() carries a path or
/// value to make the diagnostic actionable.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gsq
