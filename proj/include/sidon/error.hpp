#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sidon {

enum class Errc {
  composite_modulus,
  field_too_large,
  exhausted_candidates,
  certification_failed,
  empty_input,
  invalid_order,
  unknown_value,
  parse_error,
  empty_file,
  unknown_family,
  invalid_params,
};

std::string_view errc_name(Errc code) noexcept;

/// Exception carrying one of the library's error kinds.
///
/// certification_failed and exhausted_candidates indicate a broken internal
/// invariant rather than bad input; the CLI maps them to exit code 3.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }
  bool is_internal() const noexcept {
    return code_ == Errc::certification_failed ||
           code_ == Errc::exhausted_candidates;
  }

 private:
  Errc code_;
};

}  // namespace sidon
