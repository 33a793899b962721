#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posets {

enum class Errc {
  // carrier / element validation
  duplicate_label,
  unknown_label,
  cycle_detected,
  unknown_element,
  empty_argument,
  owner_mismatch,
  carrier_too_large,
  // ideal / filter / separation preconditions
  not_an_ideal,
  not_a_filter,
  not_a_prime_filter,
  not_disjoint,
  not_proper,
  // pseudocomplementation
  no_least_element,
  star_condition_fails,
  // theorem suite
  unknown_theorem,
  subset_quantifier_too_large,
  // random generation
  rejection_budget_exhausted,
  // DSL
  syntax_error,
  duplicate_poset_name,
  unknown_element_in_cover,
  duplicate_element,
  // CLI / document handling
  unknown_poset,
  ambiguous_poset,
  bad_argument,
  io_error,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

/// Byte range in a DSL source text, with 1-based line/column of its start.
struct Span {
  std::size_t offset = 0;
  std::size_t length = 0;
  int line = 1;
  int column = 1;
};

class ParseError : public Error {
public:
  ParseError(Errc code, Span span, const std::string& message)
      : Error(code, message), span_(span) {}

  const Span& span() const noexcept { return span_; }

private:
  Span span_;
};

}  // namespace posets
