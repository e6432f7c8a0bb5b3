#include "sonc/rational.hpp"

#include <cctype>

#include "sonc/errors.hpp"

namespace sonc {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw SoncError("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) {
        throw SoncError("empty rational literal");
    }
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(text)));
        }
        Integer num{std::string(trim(text.substr(0, slash)))};
        Integer den{std::string(trim(text.substr(slash + 1)))};
        if (den <= 0) {
            throw SoncError("rational denominator must be positive: '" + std::string(text) + "'");
        }
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw SoncError("malformed rational literal: '" + std::string(text) + "'");
    }
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

Rational pow_rational(const Rational& base, unsigned long exponent) {
    if (exponent == 0) {
        return Rational(1);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
    Rational q(num, den);
    // base was canonical, so num/den share no factor.
    return q;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer pow2(unsigned long k) {
    Integer r = 1;
    r <<= k;
    return r;
}

}  // namespace sonc
