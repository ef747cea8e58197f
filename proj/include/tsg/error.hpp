#pragma once

#include <stdexcept>
#include <string>

namespace tsg {

enum class errc {
  not_bijective,
  mixed_action,
  n_too_small,
  m_too_small,
  n_too_large,
  invalid_params,
  congruence_mismatch,
  placement_degenerate,
  degenerate_z_base,
  size_bound_exceeded,
  enumeration_too_large,
  unsupported_group,
  not_faithful,
  not_automorphism,
  ambiguous_rank,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_bijective: return "NotBijective";
    case errc::mixed_action: return "MixedAction";
    case errc::n_too_small: return "NTooSmall";
    case errc::m_too_small: return "MTooSmall";
    case errc::n_too_large: return "NTooLarge";
    case errc::invalid_params: return "InvalidParams";
    case errc::congruence_mismatch: return "CongruenceMismatch";
    case errc::placement_degenerate: return "PlacementDegenerate";
    case errc::degenerate_z_base: return "DegenerateZBase";
    case errc::size_bound_exceeded: return "SizeBoundExceeded";
    case errc::enumeration_too_large: return "EnumerationTooLarge";
    case errc::unsupported_group: return "UnsupportedGroup";
    case errc::not_faithful: return "NotFaithful";
    case errc::not_automorphism: return "NotAutomorphism";
    case errc::ambiguous_rank: return "AmbiguousRank";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace tsg
