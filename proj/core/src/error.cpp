#include "repkit/error.hpp"

namespace repkit {

const char *errc_name(Errc code) {
  switch (code) {
  case Errc::size_limit_exceeded:
    return "size-limit-exceeded";
  case Errc::budget_exceeded:
    return "budget-exceeded";
  case Errc::not_unsatisfiable:
    return "not-unsatisfiable";
  case Errc::not_in_smu1:
    return "not-in-SMU1";
  case Errc::invalid_parameters:
    return "invalid-parameters";
  case Errc::not_hitting:
    return "not-hitting";
  case Errc::variable_not_present:
    return "variable-not-present";
  case Errc::empty_leaf_set:
    return "empty-V";
  case Errc::depth_precondition_violated:
    return "depth-precondition-violated";
  case Errc::invalid_input:
    return "invalid-input";
  case Errc::invalid_spec:
    return "invalid-spec";
  case Errc::parse_error:
    return "parse-error";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string &what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what),
      code_(code) {}

ParseError::ParseError(std::size_t line, const std::string &what)
    : Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what),
      line_(line) {}

} // namespace repkit
