#include "fano/rational.hpp"

#include <cctype>

#include "fano/errors.hpp"

namespace fano {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/" + denominator(r).str();
    }
    return s;
}

Rational parse_rational(const std::string& text) {
    auto bad = [&] { throw PreconditionError("malformed rational '" + text + "'"); };
    std::size_t i = 0;
    auto read_int = [&]() -> Integer {
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            neg = text[i] == '-';
            ++i;
        }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) bad();
        Integer v(text.substr(start, i - start));
        return neg ? -v : v;
    };
    Integer num = read_int();
    Integer den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int();
        if (den == 0) bad();
    }
    if (i != text.size()) bad();
    return Rational(num, den);
}

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer v = 1;
    for (int i = 0; i < k; ++i) {
        v *= n - i;
        v /= i + 1;
    }
    return v;
}

} // namespace fano
