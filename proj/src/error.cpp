#include "sidon/error.hpp"

namespace sidon {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::composite_modulus: return "CompositeModulus";
    case Errc::field_too_large: return "FieldTooLarge";
    case Errc::exhausted_candidates: return "ExhaustedCandidates";
    case Errc::certification_failed: return "CertificationFailed";
    case Errc::empty_input: return "EmptyInput";
    case Errc::invalid_order: return "InvalidOrder";
    case Errc::unknown_value: return "UnknownValue";
    case Errc::parse_error: return "ParseError";
    case Errc::empty_file: return "EmptyFile";
    case Errc::unknown_family: return "UnknownFamily";
    case Errc::invalid_params: return "InvalidParams";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what),
      code_(code) {}

}  // namespace sidon
