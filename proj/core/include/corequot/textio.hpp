#pragma once

#include <string>
#include <string_view>

#include "corequot/frobenius.hpp"
#include "corequot/partition.hpp"
#include "corequot/wright.hpp"

namespace corequot {

// Text formats, used by the CLI and the JSON payloads:
//   partition       "8,7,7,4,4,2"   (empty string for the empty partition;
//                                    surrounding parentheses accepted on input)
//   symbol / array  "a1 a2 ... / b1 b2 ..." with "-" for an empty side
//   colored symbol  entries "value:color", rows joined as above
// Parse errors throw std::invalid_argument naming the offending token.

std::string format_partition(const Partition& p);
Partition parse_partition(std::string_view text);

std::string format_frobenius(const FrobeniusSymbol& f);
FrobeniusSymbol parse_frobenius(std::string_view text);

std::string format_colored(const ColoredFrobeniusSymbol& c);
ColoredFrobeniusSymbol parse_colored(std::string_view text, long long t);

std::string format_array(const TwoRowedArray& a);
TwoRowedArray parse_array(std::string_view text);

/// Left-justified Young diagram, one row of boxes per part; "(empty)" for
/// the empty partition. With hooks, each box shows its hook length
/// right-aligned to a common width. Byte-deterministic.
std::string render_young(const Partition& p, bool with_hooks);

}  // namespace corequot
