#include "lct/rational.hpp"

#include <cctype>

#include "lct/errors.hpp"

namespace lct {

namespace {

Integer parse_digits(std::string_view text, std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos == start) {
        throw ParseError("invalid rational literal: '" + std::string(text) + "'");
    }
    return Integer(std::string(text.substr(start, pos - start)));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    Integer numerator = parse_digits(text, pos);
    Integer denominator = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        denominator = parse_digits(text, pos);
    }
    if (pos != text.size()) {
        throw ParseError("invalid rational literal: '" + std::string(text) + "'");
    }
    if (denominator == 0) {
        throw ParseError("zero denominator in rational literal: '" + std::string(text) + "'");
    }
    if (negative) {
        numerator = -numerator;
    }
    return Rational(numerator) / Rational(denominator);
}

std::string to_string(const Rational& r) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

}  // namespace lct
