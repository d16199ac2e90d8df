#ifndef ARF_ERRORS_HPP
#define ARF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arf {

enum class errc {
  empty_generators,
  non_coprime_generators,
  invalid_input,
  invalid_ideal,
  ambient_mismatch,
  not_integral_ideal,
  not_reflexive,
  not_arf,
  no_decomposition,
  chain_bound_exceeded,
  window_too_small,
  budget_exceeded,
  precondition_violated,
};

const char* errc_name(errc code);

// Domain error carrying a machine-readable code. Logic bugs (broken internal
// invariants) use std::logic_error instead and are never caught by the CLI.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace arf

#endif
