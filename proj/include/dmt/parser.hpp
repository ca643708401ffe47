#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dmt/formula.hpp"

namespace dmt {

// Syntax error with a 1-based source position and the set of tokens that
// would have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
             std::string found);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
  std::string found_;
};

// Grammar, loosest binding first:
//   formula := iff
//   iff     := imp ("<->" imp)*          left associative
//   imp     := or ("->" imp)?            right associative
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | "[" id "]" unary | "<" id ">" unary
//            | "[[" id "]]" unary | "<<" id ">>" unary
//            | "true" | "false" | id | "(" formula ")"
// "#" starts a comment that runs to the end of the line.
Formula parse_formula(std::string_view text);

// formula ("|~" formula)?
Statement parse_statement(std::string_view text);

}  // namespace dmt
