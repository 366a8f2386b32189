#include "tropmirror/rational.hpp"

#include "tropmirror/errors.hpp"

namespace tropmirror {

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw PreconditionError("make_rational: zero denominator");
    Rational r(Integer(std::to_string(num)), Integer(std::to_string(den)));
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    const std::string s(text);
    auto valid_int = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw PreconditionError("parse_rational: malformed rational '" + s + "'");
    Integer n(num), d(den);
    if (d == 0) throw PreconditionError("parse_rational: zero denominator in '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_reduced(const Rational& value) {
    if (value.get_den() <= 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return g == 1;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational binomial(const Rational& top, unsigned long k) {
    Rational r = 1;
    for (unsigned long i = 0; i < k; ++i) {
        r *= (top - Rational(static_cast<long>(i)));
        r /= Rational(static_cast<long>(i + 1));
    }
    return r;
}

}  // namespace tropmirror
