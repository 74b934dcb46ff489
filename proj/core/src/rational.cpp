#include "vtxalg/rational.hpp"

#include "vtxalg/errors.hpp"

#include <cctype>

namespace vtx {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign)
{
    if (s.empty())
        return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-')
        i = 1;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den =
        slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) ||
        (slash != std::string_view::npos && !is_integer_literal(den, false)))
        throw ParseError("not a rational literal: '" + std::string(text) + "'");

    mpz_class p(std::string(num), 10);
    mpz_class q(1);
    if (slash != std::string_view::npos) {
        q = mpz_class(std::string(den), 10);
        if (q == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(p, q);
    r.canonicalize();
    if (r.get_num() != p || r.get_den() != q)
        throw ParseError("rational not in lowest terms: '" + std::string(text) + "'");
    return r;
}

std::string to_string(const Rational &r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational binomial(long n, long i)
{
    if (i < 0)
        return 0;
    Rational r = 1;
    for (long j = 0; j < i; ++j) {
        r *= n - j;
        r /= j + 1;
    }
    return r;
}

Rational factorial(long n)
{
    Rational r = 1;
    for (long j = 2; j <= n; ++j)
        r *= j;
    return r;
}

} // namespace vtx
