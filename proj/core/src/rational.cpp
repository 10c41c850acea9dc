#include "fracdecomp/rational.hpp"

#include <cctype>

#include "fracdecomp/errors.hpp"

namespace fracdecomp {

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt falling(long n, long k) {
    BigInt out = 1;
    for (long i = 0; i < k; ++i) out *= (n - i);
    return out;
}

BigInt factorial(long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto valid_int = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw InvalidArgument("not a rational: '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    Rational q{BigInt(num), BigInt(den)};
    if (q.get_den() == 0) throw InvalidArgument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

bool le_sqrt_plus(long t, long r, long c) {
    long d = t - c;
    return d <= 0 || d * d <= r;
}

bool ge_sqrt(long t, long r) { return t >= 0 && t * t >= r; }

bool le_over_r_three_halves(const Rational& a, const Rational& b, long r) {
    // a r^{3/2} <= b  <=>  (a r)^2 r <= b^2
    if (a <= 0) return true;
    Rational lhs = a * r;
    lhs = lhs * lhs * r;
    return lhs <= b * b;
}

}  // namespace fracdecomp
