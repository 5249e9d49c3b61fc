#pragma once

#include <stdexcept>
#include <string>

namespace dercurve {

enum class errc {
  invalid_generators,
  duplicate_generator,
  gcd_not_one,
  not_minimal,
  not_member,
  search_exhausted,
  not_cohen_macaulay,
  point_outside_semigroup,
  bad_residue_field,
  invalid_series,
  param_out_of_range,
  dimension_mismatch,
  parse_error,
};

const char* errc_name(errc code);

/// Domain error carrying a machine-readable code; the CLI maps codes to
/// exit status and structured error objects.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

}  // namespace dercurve
