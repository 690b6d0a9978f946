#include "trop/semifield.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace trop {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void bad_token(std::string_view token) {
    throw std::invalid_argument("unparsable number '" + std::string(token) + "'");
}

}  // namespace

std::string RatNum::str(const value_type& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

RatNum::value_type RatNum::parse(std::string_view token) {
    std::string_view body = token;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) bad_token(token);

    mpq_class q;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash);
        std::string_view den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_token(token);
        mpz_class d(std::string(den), 10);
        if (d == 0) bad_token(token);
        q = mpq_class(mpz_class(std::string(num), 10), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view ipart = body.substr(0, dot);
        std::string_view fpart = body.substr(dot + 1);
        if ((!ipart.empty() && !all_digits(ipart)) || (!fpart.empty() && !all_digits(fpart)))
            bad_token(token);
        if (ipart.empty() && fpart.empty()) bad_token(token);
        std::string digits = std::string(ipart) + std::string(fpart);
        mpz_class den = 1;
        for (std::size_t i = 0; i < fpart.size(); ++i) den *= 10;
        q = mpq_class(mpz_class(digits.empty() ? "0" : digits, 10), den);
    } else {
        if (!all_digits(body)) bad_token(token);
        q = mpq_class(mpz_class(std::string(body), 10));
    }
    q.canonicalize();
    return negative ? value_type(-q) : q;
}

std::string FloatNum::str(value_type a) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", a);
    return buf;
}

FloatNum::value_type FloatNum::parse(std::string_view token) {
    auto to_double = [&](std::string_view part) {
        std::string s(part);
        char* end = nullptr;
        double v = std::strtod(s.c_str(), &end);
        if (end != s.c_str() + s.size() || s.empty() || !std::isfinite(v)) bad_token(token);
        return v;
    };
    if (auto slash = token.find('/'); slash != std::string_view::npos) {
        double den = to_double(token.substr(slash + 1));
        if (den == 0.0) bad_token(token);
        return to_double(token.substr(0, slash)) / den;
    }
    return to_double(token);
}

}  // namespace trop
