#pragma once

#include <string>
#include <vector>

#include "schub/models.hpp"

namespace schub {

// Text grammars shared with the CLI:
//   partitions  "11,11,11,4,4"   (trailing zeros may be omitted; padded to k)
//   windows     "7,-8,-5,-4,-2"  (leading '-' marks a barred letter)
//   words       "0100100000100101"
parts parse_parts(const std::string& text, const space& sp);
window parse_window(const std::string& text, const space& sp);
word parse_word(const std::string& text);
std::vector<int> parse_payload(model m, const std::string& text,
                               const space& sp);

std::string parts_to_string(const parts& p);
std::string window_to_string(const window& u, const space& sp);
std::string word_to_string(const word& g);
std::string payload_to_string(model m, const std::vector<int>& v,
                              const space& sp);

// English-notation Young diagram, one '#' per box; "(empty)" when |p| = 0.
std::string ascii_diagram(const parts& p);

}  // namespace schub
