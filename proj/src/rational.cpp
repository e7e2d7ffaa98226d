#include "hek/rational.hpp"

#include <cctype>

namespace hek {

namespace {

bool digits_only(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.erase(s.begin());
    }
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!digits_only(num) || !digits_only(den))
        throw std::invalid_argument("not a rational: '" + text +
                                    "' (expected p/q or integer, no decimals)");
    Int n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    if (negative) n = -n;
    return Rat(n, d);
}

std::string rat_str(const Rat& q) { return q.str(); }

bool is_square(const Rat& q) {
    if (q < 0) return false;
    const Int n = numerator(q), d = denominator(q);
    return mpz_perfect_square_p(n.backend().data()) != 0 &&
           mpz_perfect_square_p(d.backend().data()) != 0;
}

double to_double(const Rat& q) { return q.convert_to<double>(); }

CNum to_cnum(const Rat& q) { return CNum(to_double(q), 0.0); }

Rat rat_pow(const Rat& base, unsigned exp) {
    Rat out = 1;
    Rat b = base;
    while (exp) {
        if (exp & 1) out *= b;
        b *= b;
        exp >>= 1;
    }
    return out;
}

Int rat_height(const Rat& q) {
    Int n = numerator(q);
    if (n < 0) n = -n;
    const Int d = denominator(q);
    return n > d ? n : d;
}

}  // namespace hek
