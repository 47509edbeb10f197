#ifndef ORENIL_SCALAR_HPP
#define ORENIL_SCALAR_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

namespace orenil
{

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Element of a prime field F_p with the modulus carried by the value.
///
/// Eigen default-constructs scalars and builds constants such as Scalar(0) and
/// Scalar(1) without any notion of a modulus, so a value may be "generic": a
/// plain integer with modulus 0 that adopts the modulus of whatever it is
/// combined with. Mixing two different nonzero moduli is a logic error.
class Zp
{
public:
    Zp() = default;
    Zp(int v) : raw_(v) {}
    Zp(long v) : raw_(v) {}
    Zp(long long v) : raw_(v) {}

    static Zp make(std::int64_t v, std::uint64_t p);
    static Zp make(const BigInt &v, std::uint64_t p);

    std::uint64_t modulus() const noexcept { return p_; }
    /// Representative in [0, p) when the modulus is known, the raw integer otherwise.
    std::int64_t value() const noexcept { return raw_; }
    bool is_zero() const noexcept { return raw_ == 0; }

    Zp inverse() const;

    Zp operator-() const;
    Zp &operator+=(const Zp &o);
    Zp &operator-=(const Zp &o);
    Zp &operator*=(const Zp &o);
    Zp &operator/=(const Zp &o);

    friend Zp operator+(Zp a, const Zp &b) { return a += b; }
    friend Zp operator-(Zp a, const Zp &b) { return a -= b; }
    friend Zp operator*(Zp a, const Zp &b) { return a *= b; }
    friend Zp operator/(Zp a, const Zp &b) { return a /= b; }
    friend bool operator==(const Zp &a, const Zp &b);
    friend bool operator!=(const Zp &a, const Zp &b) { return !(a == b); }
    friend std::ostream &operator<<(std::ostream &os, const Zp &a)
    {
        return os << a.raw_;
    }

private:
    Zp(std::int64_t raw, std::uint64_t p) : raw_(raw), p_(p) {}
    /// Brings both operands to a common modulus.
    static std::uint64_t unify(Zp &a, Zp &b);
    void reduce_to(std::uint64_t p);

    std::int64_t raw_ = 0;
    std::uint64_t p_ = 0;
};

/// Exact coefficient ring of an algebra: Z, Q or F_p.
class CoeffRing
{
public:
    enum class Kind
    {
        Integers,
        Rationals,
        PrimeField
    };

    static CoeffRing integers() { return CoeffRing(Kind::Integers, 0); }
    static CoeffRing rationals() { return CoeffRing(Kind::Rationals, 0); }
    /// Throws MalformedInput unless p is a prime below 2^31.
    static CoeffRing prime_field(std::uint64_t p);

    Kind kind() const noexcept { return kind_; }
    std::uint64_t characteristic() const noexcept { return p_; }
    bool is_field() const noexcept { return kind_ != Kind::Integers; }
    std::string name() const;

    friend bool operator==(const CoeffRing &, const CoeffRing &) = default;

private:
    CoeffRing(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Parses "123", "-4" or "a/b" exactly. Floats and anything else are rejected.
Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational>
{
    static bool accepts(const CoeffRing &ring) { return ring.kind() != CoeffRing::Kind::PrimeField; }
    static Rational from_integer(const CoeffRing &, const BigInt &v) { return Rational(v); }
    /// Over the integers the value must be integral.
    static Rational from_rational(const CoeffRing &ring, const Rational &q);
    static Rational inverse(const Rational &q) { return 1 / q; }
    static bool is_zero(const Rational &q) { return q == 0; }
    static std::string to_string(const Rational &q) { return q.str(); }
};

template <>
struct ScalarTraits<Zp>
{
    static bool accepts(const CoeffRing &ring) { return ring.kind() == CoeffRing::Kind::PrimeField; }
    static Zp from_integer(const CoeffRing &ring, const BigInt &v)
    {
        return Zp::make(v, ring.characteristic());
    }
    static Zp from_rational(const CoeffRing &ring, const Rational &q);
    static Zp inverse(const Zp &a) { return a.inverse(); }
    static bool is_zero(const Zp &a) { return a.is_zero(); }
    static std::string to_string(const Zp &a) { return std::to_string(a.value()); }
};

template <class Scalar>
std::string to_string(const Scalar &s)
{
    return ScalarTraits<Scalar>::to_string(s);
}

template <class Scalar>
bool is_zero(const Vector<Scalar> &v)
{
    for (Index i = 0; i < v.size(); ++i)
        if (!ScalarTraits<Scalar>::is_zero(v(i)))
            return false;
    return true;
}

template <class Scalar>
bool is_zero(const Matrix<Scalar> &m)
{
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (!ScalarTraits<Scalar>::is_zero(m(i, j)))
                return false;
    return true;
}

/// "(a, b, c)" rendering of a coordinate vector.
template <class Scalar>
std::string to_string(const Vector<Scalar> &v)
{
    std::string out = "(";
    for (Index i = 0; i < v.size(); ++i)
    {
        if (i)
            out += ", ";
        out += to_string(v(i));
    }
    return out + ")";
}

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);

} // namespace orenil

namespace Eigen
{

template <>
struct NumTraits<orenil::Zp> : GenericNumTraits<orenil::Zp>
{
    using Real = orenil::Zp;
    using NonInteger = orenil::Zp;
    using Nested = orenil::Zp;
    using Literal = orenil::Zp;

    enum
    {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

#endif // ORENIL_SCALAR_HPP
