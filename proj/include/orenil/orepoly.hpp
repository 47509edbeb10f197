#ifndef ORENIL_OREPOLY_HPP
#define ORENIL_OREPOLY_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orenil/algebra.hpp"
#include "orenil/errors.hpp"
#include "orenil/scalar.hpp"
#include "orenil/subspace.hpp"
#include "orenil/words.hpp"

/// The differential polynomial ring A[x; delta]: left A-module with basis
/// 1, x, x^2, ... and x a = a x + delta(a).
namespace orenil::orepoly
{

/// a_0 + a_1 x + ... + a_n x^n, coefficients written on the left of the
/// powers of x. Trailing zero coefficients are trimmed, so the zero
/// polynomial has no coefficients.
template <class Scalar>
class DiffPoly
{
public:
    explicit DiffPoly(Index rank) : rank_(rank) {}
    DiffPoly(Index rank, std::vector<Vector<Scalar>> coefficients)
        : rank_(rank), coeffs_(std::move(coefficients))
    {
        for (const auto &c : coeffs_)
            if (c.size() != rank_)
                throw RankMismatch("polynomial coefficient has " + std::to_string(c.size()) +
                                   " coordinates, expected " + std::to_string(rank_));
        trim();
    }

    /// a x^degree.
    static DiffPoly monomial(const Vector<Scalar> &a, std::size_t degree)
    {
        std::vector<Vector<Scalar>> cs(degree + 1, Vector<Scalar>::Zero(a.size()));
        cs[degree] = a;
        return DiffPoly(a.size(), std::move(cs));
    }

    Index rank() const noexcept { return rank_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Meaningless for the zero polynomial.
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<Vector<Scalar>> &coefficients() const noexcept { return coeffs_; }

    Vector<Scalar> coefficient(std::size_t i) const
    {
        return i < coeffs_.size() ? coeffs_[i] : Vector<Scalar>(Vector<Scalar>::Zero(rank_));
    }

    /// Adds a x^i.
    void add_term(const Vector<Scalar> &a, std::size_t i)
    {
        if (a.size() != rank_)
            throw RankMismatch("term has " + std::to_string(a.size()) + " coordinates, expected " +
                               std::to_string(rank_));
        if (coeffs_.size() <= i)
            coeffs_.resize(i + 1, Vector<Scalar>::Zero(rank_));
        coeffs_[i] += a;
        trim();
    }

    DiffPoly &operator+=(const DiffPoly &o)
    {
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            add_term(o.coeffs_[i], i);
        return *this;
    }
    friend DiffPoly operator+(DiffPoly a, const DiffPoly &b) { return a += b; }

    friend bool operator==(const DiffPoly &a, const DiffPoly &b)
    {
        if (a.rank_ != b.rank_ || a.coeffs_.size() != b.coeffs_.size())
            return false;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            if (a.coeffs_[i] != b.coeffs_[i])
                return false;
        return true;
    }
    friend bool operator!=(const DiffPoly &a, const DiffPoly &b) { return !(a == b); }

private:
    void trim()
    {
        while (!coeffs_.empty() && orenil::is_zero<Scalar>(coeffs_.back()))
            coeffs_.pop_back();
    }

    Index rank_;
    std::vector<Vector<Scalar>> coeffs_;
};

/// Human-readable form "c0 + c1*x + c2*x^2" with coordinate vectors for the
/// coefficients.
template <class Scalar>
std::string to_string(const DiffPoly<Scalar> &f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coefficients().size(); ++i)
    {
        if (orenil::is_zero<Scalar>(f.coefficients()[i]))
            continue;
        if (!out.empty())
            out += " + ";
        out += orenil::to_string<Scalar>(f.coefficients()[i]);
        if (i == 1)
            out += "*x";
        else if (i > 1)
            out += "*x^" + std::to_string(i);
    }
    return out;
}

/// One summand binom * delta^j(a) * x^xdeg of x^d a.
template <class Scalar>
struct XdTerm
{
    BigInt binomial;
    Vector<Scalar> element;
    std::size_t xdeg;
};

/// x^d a = sum_{j=0..d} C(d, j) delta^j(a) x^(d-j), listed by increasing j.
template <class Scalar>
std::vector<XdTerm<Scalar>> commute_xd(const algebra::Algebra<Scalar> &a,
                                       const algebra::Derivation<Scalar> &delta, std::size_t d,
                                       const Vector<Scalar> &elem)
{
    algebra::check_rank(a, elem);
    std::vector<XdTerm<Scalar>> out;
    Vector<Scalar> current = elem;
    for (std::size_t j = 0; j <= d; ++j)
    {
        out.push_back({binomial(d, j), current, d - j});
        current = delta(current);
    }
    return out;
}

template <class Scalar>
DiffPoly<Scalar> evaluate(const algebra::Algebra<Scalar> &a, const std::vector<XdTerm<Scalar>> &terms)
{
    DiffPoly<Scalar> out(a.rank());
    for (const auto &t : terms)
        out.add_term(a.scalar(t.binomial) * t.element, t.xdeg);
    return out;
}

template <class Scalar>
DiffPoly<Scalar> ore_multiply(const algebra::Algebra<Scalar> &a,
                              const algebra::Derivation<Scalar> &delta, const DiffPoly<Scalar> &f,
                              const DiffPoly<Scalar> &g)
{
    if (f.rank() != a.rank() || g.rank() != a.rank() || delta.rank() != a.rank())
        throw RankMismatch("polynomials and derivation must match the algebra rank " +
                           std::to_string(a.rank()));
    DiffPoly<Scalar> out(a.rank());
    if (f.is_zero() || g.is_zero())
        return out;
    std::vector<Vector<Scalar>> acc(f.degree() + g.degree() + 1, a.zero());
    for (std::size_t j = 0; j < g.coefficients().size(); ++j)
    {
        const Vector<Scalar> &bj = g.coefficients()[j];
        if (orenil::is_zero<Scalar>(bj))
            continue;
        // (a_i x^i)(b_j x^j) = sum_l C(i, l) a_i delta^l(b_j) x^(i + j - l).
        std::vector<Vector<Scalar>> iterates{bj};
        for (std::size_t i = 0; i < f.coefficients().size(); ++i)
        {
            const Vector<Scalar> &ai = f.coefficients()[i];
            while (iterates.size() <= i)
                iterates.push_back(delta(iterates.back()));
            if (orenil::is_zero<Scalar>(ai))
                continue;
            for (std::size_t l = 0; l <= i; ++l)
            {
                if (orenil::is_zero<Scalar>(iterates[l]))
                    continue;
                acc[i + j - l] += a.scalar(binomial(i, l)) * algebra::multiply(a, ai, iterates[l]);
            }
        }
    }
    return DiffPoly<Scalar>(a.rank(), std::move(acc));
}

/// Integer multiple of a_{i_0} delta^{j_1}(a_{i_1}) ... delta^{j_n}(a_{i_n}) x^M.
struct CanonicalTerm
{
    BigInt coeff;
    std::vector<std::size_t> indices; ///< i_0..i_n into the generator list
    std::vector<words::Letter> jword; ///< j_1..j_n
    std::size_t xdeg = 0;             ///< M

    friend bool operator==(const CanonicalTerm &, const CanonicalTerm &) = default;
};

/// "coeff | i_0,..,i_n | j_1,..,j_n | M" with 0-based indices.
std::string to_record(const CanonicalTerm &t);
/// Inverse of to_record. Throws MalformedInput.
CanonicalTerm parse_record(std::string_view text);

struct RewriteOptions
{
    /// Upper limit on distinct derivation-order words visited.
    std::uint64_t budget = 5'000'000;
};

/// Expands a_{i_0} x^{p_1} a_{i_1} x^{p_2} ... a_{i_n} x^{p_{n+1}} into
/// canonical terms by moving every power of x to the right. The x-power
/// reaching a_{i_t} is the carry c_t = p_1 + ... + p_t - j_1 - ... - j_{t-1},
/// and j_t ranges over 0..c_t with multiplicity C(c_t, j_t). Terms are merged
/// on (indices, jword, M) and sorted by that key.
std::vector<CanonicalTerm> rewrite_product(std::span<const std::size_t> indices,
                                           std::span<const std::size_t> exponents, std::uint64_t k,
                                           const RewriteOptions &options = {});

/// Sum of the terms as an element of A[x; delta].
template <class Scalar>
DiffPoly<Scalar> evaluate_terms(const algebra::Algebra<Scalar> &a,
                                const algebra::Derivation<Scalar> &delta,
                                const std::vector<Vector<Scalar>> &generators,
                                const std::vector<CanonicalTerm> &terms)
{
    DiffPoly<Scalar> out(a.rank());
    for (const auto &t : terms)
    {
        Vector<Scalar> prod = generators.at(t.indices.at(0));
        for (std::size_t s = 0; s < t.jword.size(); ++s)
            prod = algebra::multiply(a, prod, delta.power(generators.at(t.indices.at(s + 1)), t.jword[s]));
        out.add_term(a.scalar(t.coeff) * prod, t.xdeg);
    }
    return out;
}

/// a_{i_0} x^{p_1} ... a_{i_n} x^{p_{n+1}} by repeated ore_multiply.
template <class Scalar>
DiffPoly<Scalar> direct_product(const algebra::Algebra<Scalar> &a,
                                const algebra::Derivation<Scalar> &delta,
                                const std::vector<Vector<Scalar>> &generators,
                                std::span<const std::size_t> indices,
                                std::span<const std::size_t> exponents)
{
    if (indices.empty() || exponents.size() != indices.size())
        throw PreconditionViolated("need indices i_0..i_n and exponents p_1..p_(n+1)");
    DiffPoly<Scalar> acc = DiffPoly<Scalar>::monomial(a.scalar(1) * generators.at(indices[0]), exponents[0]);
    for (std::size_t t = 1; t < indices.size(); ++t)
        acc = ore_multiply(a, delta, acc,
                           DiffPoly<Scalar>::monomial(generators.at(indices[t]), exponents[t]));
    return acc;
}

struct SpanOptions
{
    /// Largest coordinate space (rank times number of x-degrees) to work in.
    std::size_t max_coordinates = 20'000;
};

namespace detail
{

template <class Scalar>
Vector<Scalar> flatten(const DiffPoly<Scalar> &f, std::size_t degrees)
{
    Vector<Scalar> v = Vector<Scalar>::Zero(f.rank() * static_cast<Index>(degrees));
    for (std::size_t i = 0; i < f.coefficients().size(); ++i)
        v.segment(static_cast<Index>(i) * f.rank(), f.rank()) = f.coefficients()[i];
    return v;
}

template <class Scalar>
DiffPoly<Scalar> unflatten(const Vector<Scalar> &v, Index rank)
{
    std::vector<Vector<Scalar>> cs;
    for (Index i = 0; i < v.size() / rank; ++i)
        cs.push_back(v.segment(i * rank, rank));
    return DiffPoly<Scalar>(rank, std::move(cs));
}

/// Span P_m of all m-fold products of S, stepped as P_{m+1} = span(P_m S),
/// in x-degree-blocked coordinates for degrees 0..(last m) * max deg S.
template <class Scalar>
class PowerSpans
{
public:
    PowerSpans(const algebra::Algebra<Scalar> &a, const algebra::Derivation<Scalar> &delta,
               std::vector<DiffPoly<Scalar>> s, std::size_t max_power, const SpanOptions &options)
        : a_(a), delta_(delta), s_(std::move(s))
    {
        std::size_t maxdeg = 0;
        for (const auto &f : s_)
        {
            if (f.rank() != a.rank())
                throw RankMismatch("polynomial rank differs from the algebra rank");
            maxdeg = std::max(maxdeg, f.degree());
        }
        degrees_ = max_power * maxdeg + 1;
        const std::size_t coords = degrees_ * static_cast<std::size_t>(a.rank());
        if (coords > options.max_coordinates)
            throw BudgetExceeded("power spans need " + std::to_string(coords) +
                                 " coordinates, cap is " + std::to_string(options.max_coordinates));
        current_ = Subspace<Scalar>(static_cast<Index>(coords));
        for (const auto &f : s_)
            current_.insert(flatten(f, degrees_));
    }

    const Subspace<Scalar> &current() const noexcept { return current_; }
    std::size_t power() const noexcept { return power_; }

    void step()
    {
        Subspace<Scalar> next(current_.ambient_dim());
        for (const auto &v : current_.basis())
        {
            const DiffPoly<Scalar> p = unflatten(v, a_.rank());
            for (const auto &f : s_)
                next.insert(flatten(ore_multiply(a_, delta_, p, f), degrees_));
        }
        current_ = std::move(next);
        ++power_;
    }

private:
    const algebra::Algebra<Scalar> &a_;
    const algebra::Derivation<Scalar> &delta_;
    std::vector<DiffPoly<Scalar>> s_;
    std::size_t degrees_ = 1;
    std::size_t power_ = 1;
    Subspace<Scalar> current_;
};

} // namespace detail

/// dim span{s_1 ... s_m : s_i in S}.
template <class Scalar>
Index set_power_dimension(const algebra::Algebra<Scalar> &a, const algebra::Derivation<Scalar> &delta,
                          const std::vector<DiffPoly<Scalar>> &s, std::size_t m,
                          const SpanOptions &options = {})
{
    if (m == 0)
        throw PreconditionViolated("set_power_dimension: m must be positive");
    detail::PowerSpans<Scalar> spans(a, delta, s, m, options);
    while (spans.power() < m && !spans.current().is_zero())
        spans.step();
    return spans.power() < m ? 0 : spans.current().dim();
}

struct NilpotencyReport
{
    /// Least N <= cap with S^(N+1) = 0.
    std::optional<std::size_t> minimal_n;
    std::optional<BigInt> theorem_bound;
    /// dimensions[m - 1] = dim span S^m, for every m examined.
    std::vector<Index> dimensions;
    std::size_t cap = 0;
    /// S^(m+1) = S^m != 0 was observed, so S is not nilpotent at all.
    bool stabilized_nonzero = false;
};

template <class Scalar>
NilpotencyReport minimal_nilpotency(const algebra::Algebra<Scalar> &a,
                                    const algebra::Derivation<Scalar> &delta,
                                    const std::vector<DiffPoly<Scalar>> &s, std::size_t cap,
                                    const SpanOptions &options = {})
{
    NilpotencyReport report;
    report.cap = cap;
    detail::PowerSpans<Scalar> spans(a, delta, s, cap + 1, options);
    while (true)
    {
        report.dimensions.push_back(spans.current().dim());
        if (spans.current().is_zero())
        {
            report.minimal_n = spans.power() - 1;
            return report;
        }
        if (spans.power() >= cap + 1)
            return report;
        Subspace<Scalar> before = spans.current();
        spans.step();
        if (spans.current() == before)
        {
            report.dimensions.push_back(spans.current().dim());
            report.stabilized_nonzero = true;
            return report;
        }
    }
}

/// N(d, b, k) for b_n the nilpotency indices of span(T u ... u delta^n(T)) and
/// d the degree of an identity A satisfies: every S inside T + Tx + ... + Tx^k
/// has S^(N+1) = 0.
template <class Scalar>
BigInt theorem_bound(const algebra::Algebra<Scalar> &a, const algebra::Derivation<Scalar> &delta,
                     const std::vector<Vector<Scalar>> &t, std::uint64_t k,
                     const algebra::MultilinearIdentity &ident)
{
    auto check = algebra::verify_identity(a, ident);
    if (!check.holds)
    {
        std::string tuple;
        for (auto i : check.counterexample)
            tuple += (tuple.empty() ? "" : ", ") + a.names()[i];
        throw IdentityFails("identity fails on basis tuple (" + tuple + ")");
    }
    auto b = algebra::b_sequence(a, delta, t, 0);
    return words::compute_bounds(static_cast<std::size_t>(ident.degree()), b.bounds, k, Rational(1)).n;
}

} // namespace orenil::orepoly

#endif // ORENIL_OREPOLY_HPP
