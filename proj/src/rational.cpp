#include "polydecomp/rational.hpp"

#include "polydecomp/errors.hpp"

#include <cctype>

namespace polydecomp {

Rational make_rational(const Integer &num, const Integer &den) {
    if (den == 0)
        throw InvalidArgument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

Integer parse_digits(std::string_view text, std::size_t &pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == start)
        throw ParseError("expected digits", start);
    return Integer(std::string(text.substr(start, pos - start)));
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    Integer num = parse_digits(text, pos);
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = parse_digits(text, pos);
        if (den == 0)
            throw ParseError("zero denominator", pos - 1);
    }
    if (pos != text.size())
        throw ParseError("trailing characters in rational", pos);
    if (negative)
        num = -num;
    return make_rational(num, den);
}

std::string to_string(const Rational &q) { return q.get_str(); }

} // namespace polydecomp
