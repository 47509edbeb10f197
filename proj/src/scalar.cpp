#include "orenil/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "orenil/errors.hpp"

namespace orenil
{

namespace
{

std::int64_t mod_reduce(std::int64_t v, std::uint64_t p)
{
    auto m = static_cast<std::int64_t>(p);
    auto r = v % m;
    return r < 0 ? r + m : r;
}

} // namespace

Zp Zp::make(std::int64_t v, std::uint64_t p)
{
    if (p == 0)
        throw std::logic_error("Zp::make: modulus must be nonzero");
    return Zp(mod_reduce(v, p), p);
}

Zp Zp::make(const BigInt &v, std::uint64_t p)
{
    if (p == 0)
        throw std::logic_error("Zp::make: modulus must be nonzero");
    BigInt r = v % BigInt(p);
    if (r < 0)
        r += p;
    return Zp(r.convert_to<std::int64_t>(), p);
}

void Zp::reduce_to(std::uint64_t p)
{
    raw_ = mod_reduce(raw_, p);
    p_ = p;
}

std::uint64_t Zp::unify(Zp &a, Zp &b)
{
    if (a.p_ && b.p_ && a.p_ != b.p_)
        throw std::logic_error("Zp: mixing different moduli");
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (p)
    {
        if (!a.p_)
            a.reduce_to(p);
        if (!b.p_)
            b.reduce_to(p);
    }
    return p;
}

Zp Zp::operator-() const
{
    if (!p_)
        return Zp(-raw_, 0);
    return Zp(raw_ == 0 ? 0 : static_cast<std::int64_t>(p_) - raw_, p_);
}

Zp &Zp::operator+=(const Zp &o)
{
    Zp b = o;
    auto p = unify(*this, b);
    raw_ += b.raw_;
    if (p && raw_ >= static_cast<std::int64_t>(p))
        raw_ -= static_cast<std::int64_t>(p);
    return *this;
}

Zp &Zp::operator-=(const Zp &o) { return *this += -o; }

Zp &Zp::operator*=(const Zp &o)
{
    Zp b = o;
    auto p = unify(*this, b);
    if (!p)
    {
        raw_ *= b.raw_;
        return *this;
    }
    auto prod = static_cast<unsigned __int128>(raw_) * static_cast<unsigned __int128>(b.raw_);
    raw_ = static_cast<std::int64_t>(prod % p);
    return *this;
}

Zp Zp::inverse() const
{
    if (!p_)
    {
        if (raw_ == 1 || raw_ == -1)
            return *this;
        throw std::logic_error("Zp: inverse of a generic integer with unknown modulus");
    }
    if (raw_ == 0)
        throw std::domain_error("Zp: division by zero");
    // Extended Euclid on (raw, p).
    std::int64_t t = 0, new_t = 1;
    auto r = static_cast<std::int64_t>(p_), new_r = raw_;
    while (new_r != 0)
    {
        auto q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return Zp(mod_reduce(t, p_), p_);
}

Zp &Zp::operator/=(const Zp &o)
{
    Zp b = o;
    unify(*this, b);
    return *this *= b.inverse();
}

bool operator==(const Zp &a, const Zp &b)
{
    Zp x = a, y = b;
    Zp::unify(x, y);
    return x.raw_ == y.raw_;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

CoeffRing CoeffRing::prime_field(std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw MalformedInput("coefficient ring: " + std::to_string(p) +
                             " is not a prime below 2^31");
    return CoeffRing(Kind::PrimeField, p);
}

std::string CoeffRing::name() const
{
    switch (kind_)
    {
    case Kind::Integers:
        return "integers";
    case Kind::Rationals:
        return "rationals";
    case Kind::PrimeField:
        return "F_" + std::to_string(p_);
    }
    return "?";
}

BigInt parse_integer(std::string_view text)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        ++i;
    if (i == text.size())
        throw MalformedInput("expected an integer, got '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw MalformedInput("expected an integer, got '" + std::string(text) + "'");
    std::string digits(text.substr(i));
    BigInt v(digits);
    return text[0] == '-' ? BigInt(-v) : v;
}

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw MalformedInput("denominator must be unsigned in '" + std::string(text) + "'");
    BigInt den = parse_integer(den_text);
    if (den == 0)
        throw MalformedInput("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Rational ScalarTraits<Rational>::from_rational(const CoeffRing &ring, const Rational &q)
{
    if (ring.kind() == CoeffRing::Kind::Integers &&
        boost::multiprecision::denominator(q) != 1)
        throw MalformedInput("value " + q.str() + " is not an integer");
    return q;
}

Zp ScalarTraits<Zp>::from_rational(const CoeffRing &ring, const Rational &q)
{
    auto p = ring.characteristic();
    Zp num = Zp::make(BigInt(boost::multiprecision::numerator(q)), p);
    Zp den = Zp::make(BigInt(boost::multiprecision::denominator(q)), p);
    if (den.is_zero())
        throw MalformedInput("value " + q.str() + " has a denominator divisible by " +
                             std::to_string(p));
    return num / den;
}

BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

BigInt factorial(std::uint64_t n)
{
    BigInt r = 1;
    for (std::uint64_t i = 2; i <= n; ++i)
        r *= i;
    return r;
}

} // namespace orenil
