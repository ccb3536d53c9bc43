#include "dcoset/text.hpp"

#include <cctype>
#include <vector>

namespace dcoset {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

[[noreturn]] void fail(const std::string& what, std::string_view text) {
    throw std::invalid_argument(what + ": '" + std::string(text) + "'");
}

Int parse_int(std::string_view s, std::string_view context) {
    if (s.empty()) fail("empty integer", context);
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) fail("bad integer", context);
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail("bad integer", context);
    return Int(std::string(s), 10);
}

// Sum of signed terms INT, INT*w, w into coordinates (x, y).
std::pair<Int, Int> parse_coordinates(const std::string& s, std::string_view context) {
    Int x(0), y(0);
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        } else if (!first) {
            fail("expected sign between terms", context);
        }
        first = false;
        if (i >= s.size()) fail("dangling sign", context);

        if (s[i] == 'w') {
            y += sign;
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("expected digit or 'w'", context);
        Int value = parse_int(std::string_view(s).substr(i, j - i), context);
        i = j;
        if (i < s.size() && (s[i] == '*' || s[i] == 'w')) {
            if (s[i] == '*') ++i;
            if (i >= s.size() || s[i] != 'w') fail("expected 'w' after '*'", context);
            ++i;
            y += sign * value;
        } else {
            x += sign * value;
        }
    }
    return {x, y};
}

}  // namespace

Ring parse_ring(std::string_view text) {
    std::string s = strip_spaces(text);
    if (s == "Z") return Ring::integers();
    if (s.rfind("Q(sqrt,", 0) == 0 && s.back() == ')') {
        Int d = parse_int(std::string_view(s).substr(7, s.size() - 8), text);
        try {
            return Ring::quadratic(d);
        } catch (const std::domain_error& e) {
            throw std::invalid_argument(e.what());
        }
    }
    fail("unrecognised ring descriptor", text);
}

FieldElement parse_element(const Ring& ring, std::string_view text) {
    std::string s = strip_spaces(text);
    if (s.empty()) fail("empty element", text);

    Int den(1);
    std::string body = s;
    std::size_t slash = s.rfind('/');
    if (slash != std::string::npos) {
        den = parse_int(std::string_view(s).substr(slash + 1), text);
        if (den <= 0) fail("denominator must be positive", text);
        body = s.substr(0, slash);
    }
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') fail("unbalanced parentheses", text);
        body = body.substr(1, body.size() - 2);
    }
    auto [x, y] = parse_coordinates(body, text);
    if (ring.is_z() && y != 0) fail("'w' is not an element of Z", text);
    return FieldElement(RingElement(ring, x, y), den);
}

namespace {

// Splits on commas at the given bracket depth; parentheses also count.
std::vector<std::string> split_depth(const std::string& s, int target_depth,
                                     std::string_view context) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (depth < 0) fail("unbalanced brackets", context);
        if (c == ',' && depth == target_depth) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (depth != 0) fail("unbalanced brackets", context);
    parts.push_back(cur);
    return parts;
}

}  // namespace

Mat2 parse_matrix(const Ring& ring, std::string_view text) {
    std::string s = strip_spaces(text);
    if (s.size() < 4 || s.front() != '[' || s.back() != ']') fail("expected [[..],[..]]", text);
    auto rows = split_depth(s.substr(1, s.size() - 2), 0, text);
    if (rows.size() != 2) fail("expected two rows", text);
    std::vector<FieldElement> entries;
    for (const auto& row : rows) {
        if (row.size() < 2 || row.front() != '[' || row.back() != ']')
            fail("expected [a,b] row", text);
        auto cells = split_depth(row.substr(1, row.size() - 2), 0, text);
        if (cells.size() != 2) fail("expected two entries per row", text);
        for (const auto& cell : cells) entries.push_back(parse_element(ring, cell));
    }
    return Mat2(entries[0], entries[1], entries[2], entries[3]);
}

FractionalIdeal parse_ideal(const Ring& ring, std::string_view text) {
    std::string s = strip_spaces(text);
    if (s.rfind("ideal(", 0) != 0 || s.back() != ')') fail("expected ideal(...)", text);
    std::string inner = s.substr(6, s.size() - 7);
    if (inner.empty()) fail("ideal needs at least one generator", text);
    std::vector<FieldElement> gens;
    for (const auto& part : split_depth(inner, 0, text)) gens.push_back(parse_element(ring, part));
    try {
        return FractionalIdeal::from_generators(ring, gens);
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(e.what());
    }
}

std::string format_element(const RingElement& e) {
    if (e.ring().is_z() || e.y() == 0) return e.x().get_str();
    std::string out = e.x().get_str();
    out += (e.y() < 0) ? "-" : "+";
    out += Int(abs(e.y())).get_str();
    out += "*w";
    return out;
}

std::string format_element(const FieldElement& e) {
    std::string body = format_element(e.num());
    if (e.den() == 1) return body;
    if (e.num().y() != 0) body = "(" + body + ")";
    return body + "/" + e.den().get_str();
}

std::string format_matrix(const Mat2& m) {
    return "[[" + format_element(m.a()) + "," + format_element(m.b()) + "],[" +
           format_element(m.c()) + "," + format_element(m.d()) + "]]";
}

}  // namespace dcoset
