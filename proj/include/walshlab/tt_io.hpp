#pragma once

#include <string>
#include <string_view>

#include "walshlab/boolfn.hpp"

namespace walshlab {

// Truth-table text format (".tt"):
//
//   line 1:  n=<k>           1 <= k <= cap
//   line 2:  ceil(2^k / 4) hexadecimal digits, most significant nibble first,
//            covering table indices high to low: reading line 2 as one hex
//            number, bit i of that number is the table entry at index i.
//            For k = 1 the single digit's two high bits must be zero.
//
// A single trailing newline after line 2 is accepted. Anything else is a
// parse error with a 1-based line/column position.
std::string to_tt_text(const BooleanFunction& f);

BooleanFunction parse_tt_text(std::string_view text, int cap = kMaxVars);

void write_tt_file(const std::string& path, const BooleanFunction& f);
BooleanFunction read_tt_file(const std::string& path, int cap = kMaxVars);

}  // namespace walshlab
