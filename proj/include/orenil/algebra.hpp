#ifndef ORENIL_ALGEBRA_HPP
#define ORENIL_ALGEBRA_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include "orenil/errors.hpp"
#include "orenil/scalar.hpp"
#include "orenil/subspace.hpp"
#include "orenil/words.hpp"

/// Finite-rank associative algebras, not necessarily unital, over an exact
/// coefficient ring, given by structure constants e_i e_j = sum_k c_ij^k e_k.
/// Elements are coordinate column vectors; derivations are r x r matrices D
/// acting on them, so column j of D holds D(e_j).
namespace orenil::algebra
{

template <class Scalar>
struct StructureConstant
{
    Index i;
    Index j;
    Index k;
    Scalar value;
};

template <class Scalar>
class Algebra
{
public:
    struct Term
    {
        Index k;
        Scalar c;
    };

    /// Validates associativity (and the unit, if given). Throws AlgebraError
    /// listing every failing (i, j, k, m).
    Algebra(CoeffRing ring, std::vector<std::string> names,
            const std::vector<StructureConstant<Scalar>> &constants,
            std::optional<Index> unit = std::nullopt);

    /// Same data, no associativity check; for inspecting bad inputs.
    static Algebra unchecked(CoeffRing ring, std::vector<std::string> names,
                             const std::vector<StructureConstant<Scalar>> &constants,
                             std::optional<Index> unit = std::nullopt)
    {
        return Algebra(ring, std::move(names), constants, unit, false);
    }

    Index rank() const noexcept { return static_cast<Index>(names_.size()); }
    const CoeffRing &ring() const noexcept { return ring_; }
    const std::vector<std::string> &names() const noexcept { return names_; }
    std::optional<Index> unit() const noexcept { return unit_; }
    std::optional<Index> index_of(const std::string &name) const
    {
        for (Index i = 0; i < rank(); ++i)
            if (names_[i] == name)
                return i;
        return std::nullopt;
    }

    /// Nonzero terms of e_i e_j.
    const std::vector<Term> &product_terms(Index i, Index j) const
    {
        return table_[static_cast<std::size_t>(i * rank() + j)];
    }

    std::vector<StructureConstant<Scalar>> constants() const
    {
        std::vector<StructureConstant<Scalar>> out;
        for (Index i = 0; i < rank(); ++i)
            for (Index j = 0; j < rank(); ++j)
                for (const auto &t : product_terms(i, j))
                    out.push_back({i, j, t.k, t.c});
        return out;
    }

    Scalar scalar(const BigInt &v) const { return ScalarTraits<Scalar>::from_integer(ring_, v); }
    Scalar scalar(long long v) const { return scalar(BigInt(v)); }
    Scalar scalar(const Rational &q) const { return ScalarTraits<Scalar>::from_rational(ring_, q); }

    Vector<Scalar> zero() const { return Vector<Scalar>::Zero(rank()); }
    Vector<Scalar> basis_vector(Index i) const
    {
        Vector<Scalar> e = zero();
        e(i) = scalar(1);
        return e;
    }

private:
    Algebra(CoeffRing ring, std::vector<std::string> names,
            const std::vector<StructureConstant<Scalar>> &constants, std::optional<Index> unit,
            bool check);

    CoeffRing ring_;
    std::vector<std::string> names_;
    std::vector<std::vector<Term>> table_;
    std::optional<Index> unit_;
};

template <class Scalar>
void check_rank(const Algebra<Scalar> &a, const Vector<Scalar> &x)
{
    if (x.size() != a.rank())
        throw RankMismatch("element has " + std::to_string(x.size()) +
                           " coordinates, algebra has rank " + std::to_string(a.rank()));
}

template <class Scalar>
Vector<Scalar> multiply(const Algebra<Scalar> &a, const Vector<Scalar> &x, const Vector<Scalar> &y)
{
    check_rank(a, x);
    check_rank(a, y);
    Vector<Scalar> out = a.zero();
    for (Index i = 0; i < a.rank(); ++i)
    {
        if (ScalarTraits<Scalar>::is_zero(x(i)))
            continue;
        for (Index j = 0; j < a.rank(); ++j)
        {
            if (ScalarTraits<Scalar>::is_zero(y(j)))
                continue;
            const Scalar xy = x(i) * y(j);
            for (const auto &t : a.product_terms(i, j))
                out(t.k) += xy * t.c;
        }
    }
    return out;
}

/// Product of a nonempty sequence of elements, left to right.
template <class Scalar>
Vector<Scalar> multiply_all(const Algebra<Scalar> &a, const std::vector<Vector<Scalar>> &xs)
{
    Vector<Scalar> acc = xs.at(0);
    for (std::size_t i = 1; i < xs.size(); ++i)
        acc = multiply(a, acc, xs[i]);
    return acc;
}

template <class Scalar>
Vector<Scalar> power(const Algebra<Scalar> &a, const Vector<Scalar> &x, std::size_t n)
{
    Vector<Scalar> acc = x;
    for (std::size_t i = 1; i < n; ++i)
        acc = multiply(a, acc, x);
    return acc;
}

/// Matrix of y -> x y.
template <class Scalar>
Matrix<Scalar> left_multiplication(const Algebra<Scalar> &a, const Vector<Scalar> &x)
{
    Matrix<Scalar> m(a.rank(), a.rank());
    for (Index j = 0; j < a.rank(); ++j)
        m.col(j) = multiply(a, x, a.basis_vector(j));
    return m;
}

struct AssociativityViolation
{
    Index i, j, k, m;
    std::string lhs; ///< ((e_i e_j) e_k)_m
    std::string rhs; ///< (e_i (e_j e_k))_m
};

template <class Scalar>
std::vector<AssociativityViolation> associativity_violations(const Algebra<Scalar> &a)
{
    std::vector<AssociativityViolation> out;
    const Index r = a.rank();
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < r; ++j)
        {
            const Vector<Scalar> ij = multiply(a, a.basis_vector(i), a.basis_vector(j));
            for (Index k = 0; k < r; ++k)
            {
                const Vector<Scalar> lhs = multiply(a, ij, a.basis_vector(k));
                const Vector<Scalar> jk = multiply(a, a.basis_vector(j), a.basis_vector(k));
                const Vector<Scalar> rhs = multiply(a, a.basis_vector(i), jk);
                for (Index m = 0; m < r; ++m)
                    if (lhs(m) != rhs(m))
                        out.push_back({i, j, k, m, to_string(lhs(m)), to_string(rhs(m))});
            }
        }
    return out;
}

template <class Scalar>
Algebra<Scalar>::Algebra(CoeffRing ring, std::vector<std::string> names,
                         const std::vector<StructureConstant<Scalar>> &constants,
                         std::optional<Index> unit)
    : Algebra(ring, std::move(names), constants, unit, true)
{
}

template <class Scalar>
Algebra<Scalar>::Algebra(CoeffRing ring, std::vector<std::string> names,
                         const std::vector<StructureConstant<Scalar>> &constants,
                         std::optional<Index> unit, bool check)
    : ring_(ring), names_(std::move(names)), unit_(unit)
{
    if (!ScalarTraits<Scalar>::accepts(ring_))
        throw std::logic_error("scalar type does not match coefficient ring " + ring_.name());
    const Index r = rank();
    if (r == 0)
        throw AlgebraError("algebra rank must be positive");
    table_.assign(static_cast<std::size_t>(r * r), {});
    std::map<std::tuple<Index, Index, Index>, bool> seen;
    for (const auto &c : constants)
    {
        if (c.i < 0 || c.j < 0 || c.k < 0 || c.i >= r || c.j >= r || c.k >= r)
            throw AlgebraError("structure constant index out of range: (" + std::to_string(c.i) +
                               ", " + std::to_string(c.j) + ", " + std::to_string(c.k) + ")");
        if (!seen.emplace(std::tuple{c.i, c.j, c.k}, true).second)
            throw AlgebraError("duplicate structure constant (" + std::to_string(c.i) + ", " +
                               std::to_string(c.j) + ", " + std::to_string(c.k) + ")");
        // Routes the value through the ring so that Z rejects fractions and
        // F_p values carry their modulus.
        Scalar v = c.value;
        if constexpr (std::is_same_v<Scalar, Rational>)
            v = ScalarTraits<Scalar>::from_rational(ring_, c.value);
        else
            v = c.value + scalar(0);
        if (!ScalarTraits<Scalar>::is_zero(v))
            table_[static_cast<std::size_t>(c.i * r + c.j)].push_back({c.k, v});
    }
    for (auto &terms : table_)
        std::sort(terms.begin(), terms.end(), [](const Term &x, const Term &y) { return x.k < y.k; });

    if (unit_ && (*unit_ < 0 || *unit_ >= r))
        throw AlgebraError("unit index " + std::to_string(*unit_) + " out of range");
    if (!check)
        return;

    auto bad = associativity_violations(*this);
    if (!bad.empty())
    {
        std::string msg = "associativity fails for " + std::to_string(bad.size()) + " coordinate(s):";
        for (const auto &v : bad)
            msg += " (i=" + std::to_string(v.i) + ", j=" + std::to_string(v.j) +
                   ", k=" + std::to_string(v.k) + ", m=" + std::to_string(v.m) + ": " + v.lhs +
                   " vs " + v.rhs + ")";
        throw AlgebraError(msg);
    }
    if (unit_)
    {
        const Vector<Scalar> one = basis_vector(*unit_);
        for (Index i = 0; i < r; ++i)
        {
            const Vector<Scalar> e = basis_vector(i);
            if (multiply(*this, one, e) != e || multiply(*this, e, one) != e)
                throw AlgebraError("declared unit " + names_[*unit_] +
                                   " is not a two-sided identity (fails on " + names_[i] + ")");
        }
    }
}

/// Adjoins a two-sided identity as basis vector 0, named "1"; the old basis
/// shifts up by one and spans an ideal.
template <class Scalar>
Algebra<Scalar> unitalize(const Algebra<Scalar> &a)
{
    std::vector<std::string> names{"1"};
    names.insert(names.end(), a.names().begin(), a.names().end());
    const Index r = a.rank() + 1;
    std::vector<StructureConstant<Scalar>> cs;
    for (Index i = 0; i < r; ++i)
    {
        cs.push_back({0, i, i, a.scalar(1)});
        if (i > 0)
            cs.push_back({i, 0, i, a.scalar(1)});
    }
    for (const auto &c : a.constants())
        cs.push_back({c.i + 1, c.j + 1, c.k + 1, c.value});
    return Algebra<Scalar>(a.ring(), std::move(names), cs, Index{0});
}

/// The same algebra in the basis f_a = sum_b p(b, a) e_b. p must be invertible.
template <class Scalar>
Algebra<Scalar> change_basis(const Algebra<Scalar> &a, const Matrix<Scalar> &p,
                             const Matrix<Scalar> &p_inverse)
{
    if (p.rows() != a.rank() || p.cols() != a.rank())
        throw RankMismatch("change of basis must be rank x rank");
    std::vector<StructureConstant<Scalar>> cs;
    const Index r = a.rank();
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < r; ++j)
        {
            const Vector<Scalar> prod = p_inverse * multiply(a, Vector<Scalar>(p.col(i)),
                                                             Vector<Scalar>(p.col(j)));
            for (Index k = 0; k < r; ++k)
                if (!ScalarTraits<Scalar>::is_zero(prod(k)))
                    cs.push_back({i, j, k, prod(k)});
        }
    std::optional<Index> unit;
    if (a.unit())
    {
        const Vector<Scalar> one = p_inverse * a.basis_vector(*a.unit());
        for (Index i = 0; i < r; ++i)
            if (one == a.basis_vector(i))
                unit = i;
    }
    std::vector<std::string> names;
    for (Index i = 0; i < r; ++i)
        names.push_back("f" + std::to_string(i));
    return Algebra<Scalar>(a.ring(), std::move(names), cs, unit);
}

/// A linear endomorphism that has passed the Leibniz check.
template <class Scalar>
class Derivation
{
public:
    const Matrix<Scalar> &matrix() const noexcept { return d_; }
    Index rank() const noexcept { return d_.rows(); }

    Vector<Scalar> operator()(const Vector<Scalar> &x) const { return d_ * x; }

    /// delta^n(x).
    Vector<Scalar> power(const Vector<Scalar> &x, std::size_t n) const
    {
        Vector<Scalar> y = x;
        for (std::size_t i = 0; i < n; ++i)
            y = d_ * y;
        return y;
    }

    bool is_zero() const { return orenil::is_zero<Scalar>(d_); }

private:
    template <class S>
    friend Derivation<S> verify_leibniz(const Algebra<S> &a, const Matrix<S> &d);

    explicit Derivation(Matrix<Scalar> d) : d_(std::move(d)) {}
    Matrix<Scalar> d_;
};

template <class Scalar>
struct LeibnizViolation
{
    Index i, j;
    Vector<Scalar> lhs; ///< D(e_i e_j)
    Vector<Scalar> rhs; ///< D(e_i) e_j + e_i D(e_j)
};

/// Leibniz on basis pairs suffices by bilinearity.
template <class Scalar>
std::vector<LeibnizViolation<Scalar>> leibniz_violations(const Algebra<Scalar> &a,
                                                         const Matrix<Scalar> &d)
{
    if (d.rows() != a.rank() || d.cols() != a.rank())
        throw RankMismatch("derivation matrix must be " + std::to_string(a.rank()) + " x " +
                           std::to_string(a.rank()));
    std::vector<LeibnizViolation<Scalar>> out;
    for (Index i = 0; i < a.rank(); ++i)
        for (Index j = 0; j < a.rank(); ++j)
        {
            const Vector<Scalar> ei = a.basis_vector(i), ej = a.basis_vector(j);
            Vector<Scalar> lhs = d * multiply(a, ei, ej);
            Vector<Scalar> rhs = multiply(a, Vector<Scalar>(d.col(i)), ej) +
                                 multiply(a, ei, Vector<Scalar>(d.col(j)));
            if (lhs != rhs)
                out.push_back({i, j, std::move(lhs), std::move(rhs)});
        }
    return out;
}

/// Returns the matrix as a Derivation, or throws LeibnizError naming the first
/// failing basis pair with both sides.
template <class Scalar>
Derivation<Scalar> verify_leibniz(const Algebra<Scalar> &a, const Matrix<Scalar> &d)
{
    auto bad = leibniz_violations(a, d);
    if (!bad.empty())
    {
        const auto &v = bad.front();
        throw LeibnizError("Leibniz rule fails on (" + a.names()[v.i] + ", " + a.names()[v.j] +
                           "): D(xy) = " + to_string<Scalar>(v.lhs) +
                           " but D(x)y + xD(y) = " + to_string<Scalar>(v.rhs) + " (" +
                           std::to_string(bad.size()) + " failing pair(s))");
    }
    Matrix<Scalar> copy = d;
    for (Index i = 0; i < copy.rows(); ++i)
        for (Index j = 0; j < copy.cols(); ++j)
            copy(i, j) += a.scalar(0);
    return Derivation<Scalar>(std::move(copy));
}

template <class Scalar>
Derivation<Scalar> zero_derivation(const Algebra<Scalar> &a)
{
    return verify_leibniz(a, Matrix<Scalar>(Matrix<Scalar>::Zero(a.rank(), a.rank())));
}

/// D(x) = u x - x u.
template <class Scalar>
Derivation<Scalar> inner_derivation(const Algebra<Scalar> &a, const Vector<Scalar> &u)
{
    check_rank(a, u);
    Matrix<Scalar> d(a.rank(), a.rank());
    for (Index j = 0; j < a.rank(); ++j)
    {
        const Vector<Scalar> e = a.basis_vector(j);
        d.col(j) = multiply(a, u, e) - multiply(a, e, u);
    }
    return verify_leibniz(a, d);
}

/// Basis of the space of all derivations, as matrices. Solves the linear
/// Leibniz system in the r^2 matrix entries.
template <class Scalar>
std::vector<Matrix<Scalar>> derivation_basis(const Algebra<Scalar> &a)
{
    const Index r = a.rank();
    // Unknown D(p, q) sits at column p * r + q. Row (i, j, m) encodes
    // sum_l c_ij^l D(m, l) - sum_l D(l, i) c_lj^m - sum_l D(l, j) c_il^m = 0.
    Matrix<Scalar> system = Matrix<Scalar>::Zero(r * r * r, r * r);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < r; ++j)
        {
            const Index row0 = (i * r + j) * r;
            for (const auto &t : a.product_terms(i, j))
                for (Index m = 0; m < r; ++m)
                    system(row0 + m, m * r + t.k) += t.c;
            for (Index l = 0; l < r; ++l)
            {
                for (const auto &t : a.product_terms(l, j))
                    system(row0 + t.k, l * r + i) -= t.c;
                for (const auto &t : a.product_terms(i, l))
                    system(row0 + t.k, l * r + j) -= t.c;
            }
        }
    std::vector<Matrix<Scalar>> out;
    for (const auto &x : kernel(system))
    {
        Matrix<Scalar> d(r, r);
        for (Index p = 0; p < r; ++p)
            for (Index q = 0; q < r; ++q)
                d(p, q) = x(p * r + q) + a.scalar(0);
        out.push_back(std::move(d));
    }
    return out;
}

/// X_1 ... X_d = sum_{s != id} c_s X_s(1) ... X_s(d), with integer c_s.
class MultilinearIdentity
{
public:
    struct Term
    {
        std::vector<int> perm; ///< images s(1)..s(d), 1-based
        BigInt coeff;
    };

    MultilinearIdentity(int degree, std::vector<Term> terms);

    int degree() const noexcept { return degree_; }
    const std::vector<Term> &terms() const noexcept { return terms_; }

    /// X_1 ... X_d = 0.
    static MultilinearIdentity nilpotent(int degree) { return {degree, {}}; }
    /// X_1 X_2 = X_2 X_1.
    static MultilinearIdentity commutative() { return {2, {{{2, 1}, BigInt(1)}}}; }

private:
    int degree_;
    std::vector<Term> terms_;
};

inline MultilinearIdentity::MultilinearIdentity(int degree, std::vector<Term> terms)
    : degree_(degree), terms_(std::move(terms))
{
    if (degree_ < 1)
        throw MalformedInput("identity degree must be positive");
    std::vector<std::vector<int>> seen;
    for (const auto &t : terms_)
    {
        if (static_cast<int>(t.perm.size()) != degree_)
            throw MalformedInput("identity term has " + std::to_string(t.perm.size()) +
                                 " entries, degree is " + std::to_string(degree_));
        std::vector<int> sorted = t.perm;
        std::sort(sorted.begin(), sorted.end());
        bool identity = true;
        for (int i = 0; i < degree_; ++i)
        {
            if (sorted[i] != i + 1)
                throw MalformedInput("identity term is not a permutation of 1.." +
                                     std::to_string(degree_));
            identity = identity && t.perm[i] == i + 1;
        }
        if (identity)
            throw MalformedInput("identity terms must exclude the identity permutation");
        if (std::find(seen.begin(), seen.end(), t.perm) != seen.end())
            throw MalformedInput("identity lists a permutation twice");
        seen.push_back(t.perm);
    }
}

template <class Scalar>
struct IdentityCheck
{
    bool holds = true;
    std::vector<Index> counterexample; ///< basis indices t_1..t_d on failure
    Vector<Scalar> lhs;
    Vector<Scalar> rhs;
};

/// Checks the identity on all r^d basis tuples; multilinearity makes this
/// sufficient.
template <class Scalar>
IdentityCheck<Scalar> verify_identity(const Algebra<Scalar> &a, const MultilinearIdentity &ident)
{
    const int d = ident.degree();
    const Index r = a.rank();
    std::vector<Index> tuple(d, 0);
    std::vector<Vector<Scalar>> factors(d);
    while (true)
    {
        for (int i = 0; i < d; ++i)
            factors[i] = a.basis_vector(tuple[i]);
        Vector<Scalar> lhs = multiply_all(a, factors);
        Vector<Scalar> rhs = a.zero();
        for (const auto &t : ident.terms())
        {
            std::vector<Vector<Scalar>> permuted(d);
            for (int i = 0; i < d; ++i)
                permuted[i] = factors[t.perm[i] - 1];
            rhs += a.scalar(t.coeff) * multiply_all(a, permuted);
        }
        if (lhs != rhs)
            return {false, tuple, std::move(lhs), std::move(rhs)};
        int pos = d - 1;
        while (pos >= 0 && ++tuple[pos] == r)
            tuple[pos--] = 0;
        if (pos < 0)
            break;
    }
    return {};
}

/// Span of all m-fold products of elements of s.
template <class Scalar>
Subspace<Scalar> span_power(const Algebra<Scalar> &a, const Subspace<Scalar> &s, std::size_t m)
{
    if (m == 0)
        throw PreconditionViolated("span_power: exponent must be positive");
    Subspace<Scalar> current = s;
    for (std::size_t step = 1; step < m && !current.is_zero(); ++step)
    {
        Subspace<Scalar> next(a.rank());
        for (const auto &p : current.basis())
            for (const auto &q : s.basis())
                next.insert(multiply(a, p, q));
        current = std::move(next);
    }
    return current;
}

/// Least b with s^b = 0. A nilpotent s has index at most rank + 1 (the powers
/// of the subalgebra it generates strictly decrease), so nothing is returned
/// when s^(rank + 1) != 0.
template <class Scalar>
std::optional<std::size_t> nilpotency_index(const Algebra<Scalar> &a, const Subspace<Scalar> &s)
{
    Subspace<Scalar> current = s;
    const std::size_t limit = static_cast<std::size_t>(a.rank()) + 1;
    for (std::size_t m = 1; m <= limit; ++m)
    {
        if (current.is_zero())
            return m;
        Subspace<Scalar> next(a.rank());
        for (const auto &p : current.basis())
            for (const auto &q : s.basis())
                next.insert(multiply(a, p, q));
        current = std::move(next);
    }
    return std::nullopt;
}

template <class Scalar>
struct BSequenceLevel
{
    std::size_t n;
    Index span_dim;
    std::size_t index;
};

template <class Scalar>
struct BSequenceResult
{
    words::BoundSequence bounds;
    std::vector<BSequenceLevel<Scalar>> levels;
    /// First n with span(T_{n+1}) = span(T_n); all later b_n repeat b_n.
    std::size_t stable_from;
};

/// b_n = nilpotency index of span(T u delta(T) u ... u delta^n(T)), for
/// n = 0..max(L, s) where s is the level at which the spans stop growing.
/// From s on the spans, and with them b_n, are constant, so the returned
/// sequence has its tail rule on.
template <class Scalar>
BSequenceResult<Scalar> b_sequence(const Algebra<Scalar> &a, const Derivation<Scalar> &delta,
                                   const std::vector<Vector<Scalar>> &t, std::size_t levels)
{
    if (t.empty())
        throw PreconditionViolated("b_sequence: T must be nonempty");
    Subspace<Scalar> span(a.rank());
    std::vector<Vector<Scalar>> frontier = t;
    for (const auto &x : t)
    {
        check_rank(a, x);
        span.insert(x);
    }
    std::vector<std::uint64_t> prefix;
    std::vector<BSequenceLevel<Scalar>> trace;
    std::optional<std::size_t> stable;
    for (std::size_t n = 0;; ++n)
    {
        auto idx = nilpotency_index(a, span);
        if (!idx)
            throw NotNilpotent(n, "span of T_" + std::to_string(n) + " is not nilpotent");
        prefix.push_back(*idx);
        trace.push_back({n, span.dim(), *idx});
        if (stable && n >= levels)
            break;
        bool grew = false;
        for (auto &x : frontier)
        {
            x = delta(x);
            grew = span.insert(x) || grew;
        }
        if (!grew && !stable)
            stable = n;
        if (stable && n >= levels)
            break;
    }
    return {words::BoundSequence(std::move(prefix), true), std::move(trace), *stable};
}

} // namespace orenil::algebra

#endif // ORENIL_ALGEBRA_HPP
