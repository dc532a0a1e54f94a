// Text format for machines and pseudo-configurations.
//
//   pointers: 2
//   states: q0 q1
//   initial: ⋆,⋆;q0
//   # comment
//   * 0/1 q0 -> +1 .2 q1
//   ⋆ ⋆ q1 -> reject
//
// Reads accept 0, 1, ⋆ (or "star"), * and 0/1. Instruction i must address
// pointer i: +i forward, -i backward, .i stay.
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "goi/ndpm.hpp"

namespace goi {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, std::size_t line, std::string token, const std::string& what);
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }
  const std::string& token() const { return token_; }

 private:
  std::string file_;
  std::size_t line_;
  std::string token_;
};

Machine parse_machine(std::string_view text, const std::string& source_name = "<string>");
Machine read_machine_file(const std::filesystem::path& path);

// Concrete transitions only, one per line, round-trips through parse_machine.
std::string machine_to_text(const Machine& m);

// "sym,sym,...;state" with concrete symbols only.
PseudoConfiguration parse_pseudo(const Machine& m, std::string_view text);

std::string to_string(Move mv, int pointer);
std::string describe(const Machine& m, const Transition& t);

}  // namespace goi
