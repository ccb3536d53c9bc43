#pragma once

// Text syntaxes: ring descriptors "Z" / "Q(sqrt,d)", elements "x",
// "x+y*w", "x-y*w" (optionally "/den"), matrices "[[a,b],[c,d]]" and
// ideals "ideal(g1, g2, ...)". Parsers throw std::invalid_argument.

#include <string>
#include <string_view>

#include "dcoset/ideal.hpp"
#include "dcoset/matrix.hpp"
#include "dcoset/ring.hpp"

namespace dcoset {

Ring parse_ring(std::string_view text);
FieldElement parse_element(const Ring& ring, std::string_view text);
Mat2 parse_matrix(const Ring& ring, std::string_view text);
FractionalIdeal parse_ideal(const Ring& ring, std::string_view text);

std::string format_element(const RingElement& e);
std::string format_element(const FieldElement& e);
std::string format_matrix(const Mat2& m);

}  // namespace dcoset
