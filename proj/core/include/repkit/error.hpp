#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace repkit {

enum class Errc {
  size_limit_exceeded,
  budget_exceeded,
  not_unsatisfiable,
  not_in_smu1,
  invalid_parameters,
  not_hitting,
  variable_not_present,
  empty_leaf_set,
  depth_precondition_violated,
  invalid_input,
  invalid_spec,
  parse_error,
};

const char *errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what);
  Errc code() const { return code_; }

private:
  Errc code_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

} // namespace repkit
