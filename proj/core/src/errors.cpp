#include "dercurve/errors.hpp"

namespace dercurve {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_generators: return "invalid_generators";
    case errc::duplicate_generator: return "duplicate_generator";
    case errc::gcd_not_one: return "gcd_not_one";
    case errc::not_minimal: return "not_minimal";
    case errc::not_member: return "not_member";
    case errc::search_exhausted: return "search_exhausted";
    case errc::not_cohen_macaulay: return "not_cohen_macaulay";
    case errc::point_outside_semigroup: return "point_outside_semigroup";
    case errc::bad_residue_field: return "bad_residue_field";
    case errc::invalid_series: return "invalid_series";
    case errc::param_out_of_range: return "param_out_of_range";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::parse_error: return "parse_error";
  }
  return "unknown";
}

}  // namespace dercurve
