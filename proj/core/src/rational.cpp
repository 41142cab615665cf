#include "superq/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "superq/errors.hpp"

namespace superq {

Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw Error("cannot convert non-finite double to rational");
    return Rat(x);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rat parse_decimal(std::string_view s) {
    // [sign] digits [. digits] [e [sign] digits]
    std::string_view body = s;
    bool neg = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        neg = body.front() == '-';
        body.remove_prefix(1);
    }
    long exp10 = 0;
    auto epos = body.find_first_of("eE");
    if (epos != std::string_view::npos) {
        std::string etail(body.substr(epos + 1));
        body = body.substr(0, epos);
        if (etail.empty()) throw Error("malformed number '" + std::string(s) + "'");
        try {
            exp10 = std::stol(etail);
        } catch (const std::exception&) {
            throw Error("malformed number '" + std::string(s) + "'");
        }
    }
    std::string digits;
    auto dot = body.find('.');
    if (dot == std::string_view::npos) {
        if (!all_digits(body)) throw Error("malformed number '" + std::string(s) + "'");
        digits = std::string(body);
    } else {
        std::string_view ipart = body.substr(0, dot);
        std::string_view fpart = body.substr(dot + 1);
        if (ipart.empty() && fpart.empty()) throw Error("malformed number '" + std::string(s) + "'");
        if (!ipart.empty() && !all_digits(ipart)) throw Error("malformed number '" + std::string(s) + "'");
        if (!fpart.empty() && !all_digits(fpart)) throw Error("malformed number '" + std::string(s) + "'");
        digits = std::string(ipart) + std::string(fpart);
        exp10 -= static_cast<long>(fpart.size());
    }
    if (digits.empty()) throw Error("malformed number '" + std::string(s) + "'");
    BigInt num(digits);
    BigInt den(1);
    if (exp10 >= 0) {
        for (long i = 0; i < exp10; ++i) num *= 10;
    } else {
        for (long i = 0; i < -exp10; ++i) den *= 10;
    }
    Rat r(num, den);
    return neg ? -r : r;
}

}  // namespace

Rat rat_from_string(std::string_view s) {
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw Error("empty number");
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        Rat num = parse_decimal(s.substr(0, slash));
        Rat den = parse_decimal(s.substr(slash + 1));
        if (den == 0) throw Error("zero denominator in '" + std::string(s) + "'");
        return num / den;
    }
    return parse_decimal(s);
}

std::string rat_to_string(const Rat& r) {
    return r.str();
}

}  // namespace superq
