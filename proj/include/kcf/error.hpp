#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kcf {

enum class Errc {
  domain_error,
  parse_error,
  size_mismatch,
  duplicate_node,
  missing_blocks,
  bad_parameters,
  pool_too_small,
  precondition_violated,
  non_injective_assignment,
  missing_label,
  invalid_size,
  enumeration_limit_exceeded,
  search_budget_exceeded,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, const std::string& what)
      : Error(Errc::parse_error, what),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace kcf
