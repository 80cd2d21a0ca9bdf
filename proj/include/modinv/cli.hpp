#pragma once

// Text front end: algebra description files and the command dispatcher.
//
// An algebra file is a list of keyword lines ('#' starts a comment):
//
//   field GF(4)                       GF(p), GF(q), GF(p^s) or GF(p^s)/m0,...,1
//   vars Y1 Y2                        names separated by spaces or commas
//   order grevlex                     optional: lex | grevlex
//   group elemab:2^2                  cyclic:N | cyclic:p^n | elemab:p^n |
//                                     product:(A)x(B) | cayley:@FILE |
//                                     cayley:[0,1;1,0]
//   gens 1 2                          optional generator indices (cayley only)
//   action g1: Y1 -> Y1 + 1 ; Y2 -> Y2
//
// There is one action line per group generator (g1, g2, ... in generator
// order); variables it does not mention are fixed.

#include <string>
#include <vector>

#include "modinv/galgebra.hpp"

namespace modinv {

FieldPtr parse_field_spec(const std::string& text);
/// `base_dir` resolves cayley:@FILE references.
GroupPtr parse_group_spec(const std::string& text, unsigned p, const std::string& base_dir = ".");
/// cyclic / elemab spec when the table matches one, otherwise an inline
/// Cayley table (and the caller needs a gens line, see emit_algebra).
std::string describe_group(const GroupTable& g);

/// Throws ParseError (with line and column) on syntax or name errors and
/// ActionError when the action does not respect the group law.
GAlgebra parse_algebra_file(const std::string& text, const std::string& base_dir = ".");
std::string emit_algebra(const GAlgebra& a);

struct CommandResult {
  int exit_code = 0;  // 0 success / property holds, 1 property fails, 2 input error
  std::string out;
  std::string err;
};

/// args excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace modinv
