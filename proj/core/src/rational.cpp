#include "exch/rational.hpp"

#include "exch/errors.hpp"

namespace exch {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw validation_error("empty rational literal");
    std::string t = text;
    for (char c : t) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw validation_error("bad rational literal: '" + text + "'");
    }
    Rational r;
    try {
        r = Rational(t);
    } catch (const std::exception&) {
        throw validation_error("bad rational literal: '" + text + "'");
    }
    if (denominator(r) == 0) throw validation_error("zero denominator in '" + text + "'");
    // GMP does not canonicalize string input.
    mpq_canonicalize(r.backend().data());
    return r;
}

std::string rational_str(const Rational& r) {
    std::string num = numerator(r).str();
    if (denominator(r) == 1) return num;
    return num + "/" + denominator(r).str();
}

double rational_double(const Rational& r) { return r.convert_to<double>(); }

BigInt factorial(int n) {
    if (n < 0) throw validation_error("factorial of negative argument");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace exch
