#include "tfix/rational.hpp"

#include <cctype>

#include "tfix/errors.hpp"

namespace tfix {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits)) throw ValidationError("malformed rational \"" + std::string(whole) + "\"");
    mpz_class z(std::string(digits), 10);
    return (!s.empty() && s.front() == '-') ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ValidationError("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) throw ValidationError("malformed rational \"" + std::string(text) + "\"");
        mpz_class den(std::string(den_text), 10);
        if (den == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    bool negative = false;
    std::string_view body = text;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto dot = body.find('.');
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw ValidationError("malformed rational \"" + std::string(text) + "\"");
    if ((!int_part.empty() && !all_digits(int_part)) || (dot != std::string_view::npos && !all_digits(frac_part)))
        throw ValidationError("malformed rational \"" + std::string(text) + "\"");

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    Rational r(negative ? mpz_class(-num) : num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace tfix
