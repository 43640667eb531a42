#include "hypersplit/rational.hpp"

#include <cctype>
#include <cstddef>

#include "hypersplit/errors.hpp"

namespace hypersplit {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    // GMP reads neither a leading '+' nor, in base 10, anything we want to
    // reject; the explicit base below keeps "09" from being read as octal.
    const std::string body = text[0] == '+' ? text.substr(1) : text;
    if (body.empty()) throw ParseError("malformed rational literal '" + text + "'");
    const std::size_t start = body[0] == '-' ? 1 : 0;
    const std::size_t slash = body.find('/');
    const std::size_t dot = body.find('.');

    if (slash != std::string::npos) {
        if (dot != std::string::npos || !all_digits(body, start, slash) ||
            !all_digits(body, slash + 1, body.size())) {
            throw ParseError("malformed rational literal '" + text + "'");
        }
        Rat value(body, 10);
        if (value.get_den() == 0) {
            throw ParseError("zero denominator in rational literal '" + text + "'");
        }
        value.canonicalize();
        return value;
    }

    if (dot != std::string::npos) {
        // Exact decimal: digits '.' digits, scaled by a power of ten.
        if (!all_digits(body, start, dot) || !all_digits(body, dot + 1, body.size())) {
            throw ParseError("malformed decimal literal '" + text + "'");
        }
        const std::string digits = body.substr(0, dot) + body.substr(dot + 1);
        mpz_class numerator(digits, 10);
        mpz_class denominator(1);
        for (std::size_t i = dot + 1; i < body.size(); ++i) denominator *= 10;
        Rat value(numerator, denominator);
        value.canonicalize();
        return value;
    }

    if (!all_digits(body, start, body.size())) {
        throw ParseError("malformed integer literal '" + text + "'");
    }
    return Rat(mpz_class(body, 10));
}

std::string format_rational(const Rat& value) {
    return value.get_str();
}

std::vector<Rat> normalize_primitive(const std::vector<Rat>& values) {
    mpz_class common_den(1);
    for (const Rat& v : values) mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), v.get_den().get_mpz_t());

    std::vector<mpz_class> scaled;
    scaled.reserve(values.size());
    mpz_class common_gcd(0);
    for (const Rat& v : values) {
        mpz_class z = v.get_num() * (common_den / v.get_den());
        mpz_gcd(common_gcd.get_mpz_t(), common_gcd.get_mpz_t(), z.get_mpz_t());
        scaled.push_back(std::move(z));
    }
    if (common_gcd == 0) throw ValidationError("cannot normalize the zero vector");

    int lead_sign = 0;
    for (const mpz_class& z : scaled) {
        if (z != 0) {
            lead_sign = sgn(z);
            break;
        }
    }
    std::vector<Rat> out;
    out.reserve(values.size());
    for (const mpz_class& z : scaled) {
        out.emplace_back(lead_sign < 0 ? mpz_class(-z / common_gcd) : mpz_class(z / common_gcd));
    }
    return out;
}

double to_double(const Rat& value) {
    return value.get_d();
}

}  // namespace hypersplit
