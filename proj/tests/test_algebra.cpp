#include <gtest/gtest.h>

#include <random>

#include "orenil/algebra.hpp"
#include "orenil/errors.hpp"
#include "orenil/examples.hpp"
#include "support/random_algebra.hpp"

using namespace orenil;
using namespace orenil::algebra;

namespace
{

using Q = Rational;

Vector<Q> vec(std::initializer_list<long> xs)
{
    Vector<Q> v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (long x : xs)
        v(i++) = Q(x);
    return v;
}

Subspace<Q> span_of(Index ambient, std::initializer_list<Vector<Q>> vs)
{
    return Subspace<Q>::span(ambient, vs);
}

/// Nilpotency index by multiplying out every word in a basis of S.
std::optional<std::size_t> naive_index(const Algebra<Q> &a, const Subspace<Q> &s)
{
    std::vector<Vector<Q>> products = s.basis();
    for (std::size_t m = 1; m <= static_cast<std::size_t>(a.rank()) + 1; ++m)
    {
        bool all_zero = true;
        for (const auto &p : products)
            all_zero = all_zero && orenil::is_zero<Q>(p);
        if (all_zero)
            return m;
        std::vector<Vector<Q>> next;
        for (const auto &p : products)
            for (const auto &q : s.basis())
                next.push_back(multiply(a, p, q));
        products = std::move(next);
    }
    return std::nullopt;
}

} // namespace

TEST(Subspace, CanonicalForm)
{
    auto a = span_of(3, {vec({2, 4, 0}), vec({1, 1, 1})});
    auto b = span_of(3, {vec({0, 1, -1}), vec({3, 5, 1})});
    EXPECT_EQ(a.dim(), 2);
    EXPECT_TRUE(a == b);
    EXPECT_TRUE(a.contains(vec({1, 3, -1})));
    EXPECT_FALSE(a.contains(vec({0, 0, 1})));
    EXPECT_FALSE(a.insert(vec({3, 5, 1})));
}

TEST(Subspace, Kernel)
{
    Matrix<Q> m(2, 3);
    m << Q(1), Q(2), Q(3), Q(2), Q(4), Q(6);
    auto k = kernel(m);
    ASSERT_EQ(k.size(), 2u);
    for (const auto &x : k)
        EXPECT_TRUE(orenil::is_zero<Q>(Vector<Q>(m * x)));
}

TEST(Load, Examples)
{
    auto u = examples::upper_triangular(3, true);
    EXPECT_EQ(u.rank(), 3);
    EXPECT_EQ(u.names(), (std::vector<std::string>{"e12", "e13", "e23"}));
    EXPECT_NO_THROW(examples::square_zero<Q>(CoeffRing::integers(), 4));

    std::vector<StructureConstant<Q>> bad{{0, 0, 1, Q(1)}, {1, 0, 0, Q(1)}};
    try
    {
        Algebra<Q>(CoeffRing::rationals(), {"e1", "e2"}, bad);
        FAIL() << "expected AlgebraError";
    }
    catch (const AlgebraError &e)
    {
        EXPECT_NE(std::string(e.what()).find("i=0, j=0, k=0, m=0"), std::string::npos) << e.what();
    }
    auto raw = Algebra<Q>::unchecked(CoeffRing::rationals(), {"e1", "e2"}, bad);
    EXPECT_FALSE(associativity_violations(raw).empty());
}

TEST(Load, RejectsBadInput)
{
    const auto q = CoeffRing::rationals();
    EXPECT_THROW(Algebra<Q>(q, {"a"}, {{0, 0, 1, Q(1)}}), AlgebraError);
    EXPECT_THROW(Algebra<Q>(q, {"a"}, {{0, 0, 0, Q(1)}, {0, 0, 0, Q(2)}}), AlgebraError);
    EXPECT_THROW(Algebra<Q>(CoeffRing::integers(), {"a"}, {{0, 0, 0, Q(1, 2)}}), MalformedInput);
    // a^2 = 0 has no unit
    EXPECT_THROW(Algebra<Q>(q, {"a"}, {}, Index{0}), AlgebraError);
}

TEST(Multiply, Examples)
{
    auto u = examples::upper_triangular(3, true);
    EXPECT_EQ(multiply(u, vec({1, 0, 0}), vec({0, 0, 1})), vec({0, 1, 0}));
    EXPECT_EQ(multiply(u, vec({0, 0, 1}), vec({1, 0, 0})), vec({0, 0, 0}));
    auto z = examples::square_zero<Q>(CoeffRing::rationals(), 2);
    EXPECT_EQ(multiply(z, vec({3, 1}), vec({-2, 5})), vec({0, 0}));
    auto f = examples::truncated_polynomial(3);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i)
    {
        auto x = test_support::random_element(f, rng);
        EXPECT_EQ(multiply(f, f.basis_vector(0), x), x);
    }
    EXPECT_THROW(multiply(u, vec({1, 0}), vec({0, 0, 1})), RankMismatch);
}

TEST(Leibniz, Examples)
{
    auto f = examples::truncated_polynomial(3);
    auto d = verify_leibniz(f, examples::d_dt(f));
    EXPECT_EQ(d(f.basis_vector(2)), (Vector<Zp>(f.basis_vector(1) * Zp::make(2, 3))));
    EXPECT_TRUE(zero_derivation(f).is_zero());

    auto z = examples::square_zero<Q>(CoeffRing::rationals(), 3);
    std::mt19937_64 rng(2);
    Matrix<Q> m(3, 3);
    for (Index i = 0; i < 3; ++i)
        m.col(i) = test_support::random_element(3, rng);
    EXPECT_NO_THROW(verify_leibniz(z, m));

    auto u = examples::upper_triangular(2, false);
    Matrix<Q> bad = Matrix<Q>::Identity(3, 3);
    EXPECT_THROW(verify_leibniz(u, bad), LeibnizError);
}

TEST(Leibniz, AcceptedMapsSatisfyItOnRandomPairs)
{
    std::mt19937_64 rng(3);
    for (const auto &a : test_support::small_algebras())
    {
        auto d = verify_leibniz(a, test_support::random_derivation(a, rng));
        for (int t = 0; t < 1000 / 7; ++t)
        {
            auto x = test_support::random_element(a.rank(), rng);
            auto y = test_support::random_element(a.rank(), rng);
            EXPECT_EQ(d(multiply(a, x, y)), multiply(a, d(x), y) + multiply(a, x, d(y)));
        }
    }
}

TEST(Inner, Examples)
{
    auto u = examples::upper_triangular(3, true);
    auto d = inner_derivation(u, u.basis_vector(0));
    EXPECT_EQ(d(u.basis_vector(2)), u.basis_vector(1));
    EXPECT_EQ(d(u.basis_vector(0)), u.zero());
    EXPECT_EQ(d(u.basis_vector(1)), u.zero());

    std::mt19937_64 rng(4);
    for (const auto &a : test_support::small_algebras())
    {
        auto x = test_support::random_element(a.rank(), rng);
        auto dx = inner_derivation(a, x);
        EXPECT_EQ(dx(x), a.zero());
    }
    auto f = examples::truncated_polynomial(5);
    EXPECT_TRUE(inner_derivation(f, test_support::random_element(f, rng)).is_zero());
}

TEST(DerivationBasis, Dimensions)
{
    // Derivations of Q[t]/(t^3) are determined by t -> a t + b t^2.
    auto algebras = test_support::small_algebras();
    EXPECT_EQ(derivation_basis(algebras[3]).size(), 2u);
    // Q^3: only zero.
    EXPECT_EQ(derivation_basis(algebras[4]).size(), 0u);
    // Square-zero rank 3: every linear map.
    EXPECT_EQ(derivation_basis(algebras[2]).size(), 9u);
    // Upper-triangular 2x2: all derivations are inner, modulo the centre.
    EXPECT_EQ(derivation_basis(algebras[0]).size(), 2u);
    for (const auto &a : algebras)
        for (const auto &d : derivation_basis(a))
            EXPECT_TRUE(leibniz_violations(a, d).empty());
}

TEST(ChangeBasis, PreservesStructure)
{
    std::mt19937_64 rng(5);
    for (const auto &a : test_support::small_algebras())
    {
        auto [p, inv] = test_support::random_unimodular(a.rank(), rng);
        ASSERT_EQ(Matrix<Q>(p * inv), Matrix<Q>::Identity(a.rank(), a.rank()));
        auto b = change_basis(a, p, inv);
        EXPECT_EQ(derivation_basis(b).size(), derivation_basis(a).size());
        auto x = test_support::random_element(a.rank(), rng);
        auto y = test_support::random_element(a.rank(), rng);
        EXPECT_EQ(Vector<Q>(p * multiply(b, x, y)),
                  multiply(a, Vector<Q>(p * x), Vector<Q>(p * y)));
    }
}

TEST(Identity, Examples)
{
    auto f = examples::truncated_polynomial(3);
    EXPECT_TRUE(verify_identity(f, MultilinearIdentity::commutative()).holds);
    EXPECT_TRUE(verify_identity(examples::upper_triangular(3, true), MultilinearIdentity::nilpotent(3)).holds);

    auto u = examples::upper_triangular(2, false);
    auto r = verify_identity(u, MultilinearIdentity::commutative());
    ASSERT_FALSE(r.holds);
    EXPECT_EQ(r.counterexample, (std::vector<Index>{0, 1}));
    EXPECT_EQ(u.names()[0], "e11");
    EXPECT_EQ(u.names()[1], "e12");
}

TEST(Identity, RejectsMalformed)
{
    EXPECT_THROW(MultilinearIdentity(2, {{{1, 2}, BigInt(1)}}), MalformedInput);
    EXPECT_THROW(MultilinearIdentity(2, {{{1, 1}, BigInt(1)}}), MalformedInput);
    EXPECT_THROW(MultilinearIdentity(3, {{{2, 1}, BigInt(1)}}), MalformedInput);
    EXPECT_THROW(MultilinearIdentity(0, {}), MalformedInput);
}

TEST(Identity, HoldsOnRandomTuples)
{
    std::mt19937_64 rng(6);
    // Cases whose basis check fails are skipped; the last one is expected to.
    auto algebras = test_support::small_algebras();
    const std::vector<std::pair<std::size_t, MultilinearIdentity>> cases{
        {1, MultilinearIdentity::nilpotent(3)},
        {2, MultilinearIdentity::nilpotent(2)},
        {3, MultilinearIdentity::commutative()},
        {4, MultilinearIdentity::commutative()},
        {6, MultilinearIdentity::commutative()},
        {0, MultilinearIdentity(3, {{{1, 3, 2}, BigInt(1)}, {{2, 1, 3}, BigInt(1)}, {{2, 3, 1}, BigInt(-1)}})},
    };
    for (const auto &[idx, ident] : cases)
    {
        const auto &a = algebras[idx];
        auto check = verify_identity(a, ident);
        if (!check.holds)
            continue;
        for (int t = 0; t < 1000; ++t)
        {
            std::vector<Vector<Q>> xs;
            for (int i = 0; i < ident.degree(); ++i)
                xs.push_back(test_support::random_element(a.rank(), rng));
            Vector<Q> rhs = a.zero();
            for (const auto &term : ident.terms())
            {
                std::vector<Vector<Q>> perm;
                for (int s : term.perm)
                    perm.push_back(xs[s - 1]);
                rhs += Q(term.coeff) * multiply_all(a, perm);
            }
            ASSERT_EQ(multiply_all(a, xs), rhs);
        }
    }
    // The triple identity fails on the 2x2 triangular algebra.
    EXPECT_FALSE(verify_identity(algebras[0], std::get<1>(cases.back())).holds);
}

TEST(Powers, Examples)
{
    auto z = examples::square_zero<Q>(CoeffRing::rationals(), 3);
    EXPECT_TRUE(span_power(z, Subspace<Q>::full(3), 2).is_zero());
    EXPECT_EQ(nilpotency_index(z, Subspace<Q>::full(3)), std::optional<std::size_t>(2));

    auto u = examples::upper_triangular(3, true);
    EXPECT_EQ(span_power(u, Subspace<Q>::full(3), 2), span_of(3, {u.basis_vector(1)}));
    EXPECT_EQ(span_power(u, Subspace<Q>::full(3), 1), Subspace<Q>::full(3));
    EXPECT_EQ(nilpotency_index(u, Subspace<Q>::full(3)), std::optional<std::size_t>(3));

    auto f = examples::truncated_polynomial(3);
    auto one = Subspace<Zp>::span(3, {f.basis_vector(0)});
    EXPECT_EQ(nilpotency_index(f, one), std::nullopt);
    auto t = Subspace<Zp>::span(3, {f.basis_vector(1)});
    EXPECT_EQ(nilpotency_index(f, t), std::optional<std::size_t>(3));
    EXPECT_THROW(span_power(u, Subspace<Q>::full(3), 0), PreconditionViolated);
}

TEST(Powers, AgreeWithNaiveEnumeration)
{
    std::mt19937_64 rng(7);
    for (const auto &a : test_support::small_algebras())
        for (int trial = 0; trial < 20; ++trial)
        {
            std::uniform_int_distribution<int> count(1, 2);
            std::vector<Vector<Q>> gens;
            for (int i = count(rng); i > 0; --i)
                gens.push_back(test_support::random_element(a.rank(), rng, 1));
            auto s = Subspace<Q>::span(a.rank(), gens);
            EXPECT_EQ(nilpotency_index(a, s), naive_index(a, s));
            std::optional<Index> stable;
            Index prev = s.dim();
            for (std::size_t m = 2; m <= 6; ++m)
            {
                Index dim = span_power(a, s, m).dim();
                if (stable)
                    EXPECT_LE(dim, *stable);
                if (dim == prev)
                    stable = dim;
                prev = dim;
            }
        }
}

TEST(BSequence, Examples)
{
    auto u = examples::upper_triangular(3, true);
    auto zero = zero_derivation(u);
    auto r0 = b_sequence(u, zero, {u.basis_vector(0), u.basis_vector(2)}, 3);
    for (std::uint64_t n = 0; n < 10; ++n)
        EXPECT_EQ(r0.bounds.at(n), 3u);

    auto d = inner_derivation(u, u.basis_vector(0));
    auto r = b_sequence(u, d, {u.basis_vector(2)}, 1);
    EXPECT_EQ(r.bounds.at(0), 2u);
    EXPECT_EQ(r.bounds.at(1), 2u);
    EXPECT_EQ(r.bounds.at(50), 2u);
    EXPECT_TRUE(r.bounds.tail_rule());

    auto f = examples::truncated_polynomial(3);
    auto df = verify_leibniz(f, examples::d_dt(f));
    try
    {
        b_sequence(f, df, {f.basis_vector(1)}, 4);
        FAIL() << "expected NotNilpotent";
    }
    catch (const NotNilpotent &e)
    {
        EXPECT_EQ(e.level(), 1u);
    }
}

TEST(BSequence, ExtendsToStabilization)
{
    // T = {e12, e23}, delta = inner(e12): delta(e23) = e13 joins at level 1,
    // after which the span is delta-stable.
    auto u = examples::upper_triangular(3, true);
    auto d = inner_derivation(u, u.basis_vector(0));
    auto r = b_sequence(u, d, {u.basis_vector(0), u.basis_vector(2)}, 0);
    EXPECT_EQ(r.stable_from, 1u);
    EXPECT_EQ(r.bounds.prefix(), (std::vector<std::uint64_t>{3, 3}));
    EXPECT_EQ(r.levels[1].span_dim, 3);
}

TEST(Unitalize, Examples)
{
    auto z = examples::square_zero<Q>(CoeffRing::rationals(), 1);
    auto u = unitalize(z);
    EXPECT_EQ(u.rank(), 2);
    EXPECT_EQ(u.unit(), std::optional<Index>(0));
    EXPECT_EQ(multiply(u, u.basis_vector(1), u.basis_vector(1)), u.zero());

    for (const auto &a : test_support::small_algebras())
    {
        auto b = unitalize(a);
        for (Index i = 0; i < a.rank(); ++i)
            for (Index j = 0; j < a.rank(); ++j)
            {
                Vector<Q> prod = multiply(b, b.basis_vector(i + 1), b.basis_vector(j + 1));
                EXPECT_TRUE(prod(0) == 0);
                EXPECT_EQ(Vector<Q>(prod.tail(a.rank())),
                          multiply(a, a.basis_vector(i), a.basis_vector(j)));
            }
    }
}
