#include <gtest/gtest.h>

#include <random>

#include "orenil/errors.hpp"
#include "orenil/examples.hpp"
#include "orenil/radical.hpp"
#include "support/random_algebra.hpp"

using namespace orenil;
using namespace orenil::algebra;
using namespace orenil::radical;

namespace
{

using Q = Rational;

/// Reduces a rational subspace with integral RREF basis modulo p.
Subspace<Zp> reduce(const Subspace<Q> &s, std::uint64_t p)
{
    const auto ring = CoeffRing::prime_field(p);
    Subspace<Zp> out(s.ambient_dim());
    for (const auto &v : s.basis())
    {
        Vector<Zp> w(v.size());
        for (Index i = 0; i < v.size(); ++i)
            w(i) = ScalarTraits<Zp>::from_rational(ring, v(i));
        out.insert(w);
    }
    return out;
}

/// Every rank <= 4 algebra the radical tests run over.
std::vector<Algebra<Q>> test_algebras()
{
    auto out = test_support::small_algebras();
    out.push_back(examples::upper_triangular(3, true));
    out.push_back(unitalize(examples::upper_triangular(3, true)));
    out.push_back(unitalize(examples::square_zero<Q>(CoeffRing::rationals(), 3)));
    return out;
}

} // namespace

TEST(NilIdeal, Examples)
{
    auto u = examples::upper_triangular(2, false); // e11, e12, e22
    auto zero = is_nil_ideal(u, Subspace<Q>(3));
    EXPECT_TRUE(zero.holds);
    EXPECT_EQ(zero.index, std::optional<std::size_t>(1));

    auto rad = is_nil_ideal(u, Subspace<Q>::span(3, {u.basis_vector(1)}));
    EXPECT_TRUE(rad.holds);
    EXPECT_EQ(rad.index, std::optional<std::size_t>(2));

    auto idem = is_nil_ideal(u, Subspace<Q>::span(3, {u.basis_vector(0)}));
    EXPECT_FALSE(idem.holds);
    ASSERT_TRUE(idem.witness.has_value());

    auto whole = is_nil_ideal(u, Subspace<Q>::full(3));
    EXPECT_FALSE(whole.holds);
    EXPECT_EQ(whole.witness->kind, IdealWitness::Kind::NotNilpotent);
    EXPECT_THROW(verified_candidate(u, Subspace<Q>::full(3)), VerificationFailed);
}

TEST(Radical, Examples)
{
    auto u = examples::upper_triangular(2, false);
    auto r = radical_char0(u);
    EXPECT_EQ(r.radical, Subspace<Q>::span(3, {u.basis_vector(1)}));
    EXPECT_EQ(r.nilpotency_index, 2u);
    EXPECT_TRUE(r.unitalized); // no unit declared in the builder

    auto algebras = test_support::small_algebras();
    EXPECT_TRUE(radical_char0(algebras[4]).radical.is_zero()); // Q x Q x Q
    const auto &cubic = algebras[3];                            // Q[t]/(t^3)
    auto rc = radical_char0(cubic);
    EXPECT_FALSE(rc.unitalized);
    EXPECT_EQ(rc.radical, Subspace<Q>::span(3, {cubic.basis_vector(1), cubic.basis_vector(2)}));
    EXPECT_EQ(rc.nilpotency_index, 3u);

    auto strict = examples::upper_triangular(3, true);
    EXPECT_EQ(radical_char0(strict).radical, Subspace<Q>::full(3));
}

TEST(Radical, QuotientIsSemiprime)
{
    for (const auto &a : test_algebras())
    {
        auto r = radical_char0(a);
        auto search = semiprime_search(a, r.radical, 2);
        EXPECT_FALSE(search.witness.has_value()) << to_string<Q>(*search.witness);
        for (std::uint64_t p : {2u, 3u})
        {
            auto ap = reduce_mod_p(a, p);
            auto np = reduce(r.radical, p);
            ASSERT_TRUE(is_nil_ideal(ap, np).holds);
            EXPECT_FALSE(semiprime_search(ap, np).witness.has_value());
        }
    }
}

TEST(Radical, SearchFindsNilpotentClasses)
{
    // With N = 0 the square-zero class e12 is a witness.
    auto u = examples::upper_triangular(2, false);
    auto s = semiprime_search(u, Subspace<Q>(3), 1);
    ASSERT_TRUE(s.witness.has_value());
    EXPECT_TRUE(is_zero<Q>(multiply(u, *s.witness, *s.witness)));
    EXPECT_THROW(semiprime_search(u, Subspace<Q>(3), 1000, 100), BudgetExceeded);
}

TEST(Stability, CharZeroRadicalsAreStable)
{
    std::mt19937_64 rng(21);
    for (const auto &a : test_algebras())
    {
        auto rad = radical_char0(a).radical;
        EXPECT_TRUE(check_delta_stability(a, zero_derivation(a), rad).stable);
        for (int t = 0; t < 5; ++t)
        {
            auto d = verify_leibniz(a, test_support::random_derivation(a, rng));
            EXPECT_TRUE(check_delta_stability(a, d, rad).stable);
            auto inner = inner_derivation(a, test_support::random_element(a.rank(), rng));
            EXPECT_TRUE(check_delta_stability(a, inner, rad).stable);
        }
    }
}

TEST(Stability, PositiveCharacteristicCounterexample)
{
    for (std::uint64_t p : {2u, 3u, 5u, 7u})
    {
        auto f = examples::truncated_polynomial(p);
        auto d = verify_leibniz(f, examples::d_dt(f));
        std::vector<Vector<Zp>> rad_basis;
        for (Index i = 1; i < f.rank(); ++i)
            rad_basis.push_back(f.basis_vector(i));
        auto n = Subspace<Zp>::span(f.rank(), rad_basis);
        auto report = is_nil_ideal(f, n);
        ASSERT_TRUE(report.holds);
        EXPECT_EQ(report.index, std::optional<std::size_t>(p));
        EXPECT_FALSE(semiprime_search(f, n).witness.has_value());

        auto s = check_delta_stability(f, d, n);
        ASSERT_FALSE(s.stable);
        EXPECT_EQ(n.basis()[*s.witness_index], f.basis_vector(1));
        EXPECT_EQ(d(f.basis_vector(1)), f.basis_vector(0));
    }
}

TEST(Stability, RequiresNilIdeal)
{
    auto u = examples::upper_triangular(2, false);
    EXPECT_THROW(check_delta_stability(u, zero_derivation(u), Subspace<Q>::full(3)),
                 PreconditionViolated);
}

TEST(Leibniz, Table)
{
    auto two = leibniz_coefficients(2);
    EXPECT_EQ(two.coefficients.size(), 3u);
    EXPECT_EQ(two.coefficients.at({2, 0}), 1);
    EXPECT_EQ(two.coefficients.at({1, 1}), 2);
    EXPECT_EQ(two.coefficients.at({0, 2}), 1);
    auto one = leibniz_coefficients(1);
    EXPECT_EQ(one.coefficients.size(), 1u);
    EXPECT_EQ(one.coefficients.at({1}), 1);
    for (std::size_t n = 1; n <= 6; ++n)
    {
        auto table = leibniz_coefficients(n);
        EXPECT_EQ(table.coefficients.at(std::vector<std::size_t>(n, 1)), factorial(n));
        for (const auto &[orders, c] : table.coefficients)
        {
            BigInt denom = 1;
            for (auto j : orders)
                denom *= factorial(j);
            EXPECT_EQ(c, factorial(n) / denom);
        }
    }
    EXPECT_THROW(leibniz_coefficients(9), BudgetExceeded);
    EXPECT_THROW(leibniz_coefficients(0), PreconditionViolated);
}

TEST(Leibniz, TableMatchesAlgebra)
{
    auto a = examples::upper_triangular(3, false);
    std::mt19937_64 rng(22);
    auto d = inner_derivation(a, test_support::random_element(a.rank(), rng));
    for (std::size_t n = 1; n <= 4; ++n)
    {
        std::vector<Vector<Q>> bs;
        for (std::size_t i = 0; i < n; ++i)
            bs.push_back(test_support::random_element(a.rank(), rng));
        Vector<Q> expected = d.power(multiply_all(a, bs), n);
        Vector<Q> sum = a.zero();
        for (const auto &[orders, c] : leibniz_coefficients(n).coefficients)
        {
            std::vector<Vector<Q>> factors;
            for (std::size_t i = 0; i < n; ++i)
                factors.push_back(d.power(bs[i], orders[i]));
            sum += Q(c) * multiply_all(a, factors);
        }
        EXPECT_EQ(sum, expected) << "n = " << n;
    }
}

TEST(EqB, Examples)
{
    // Q[s]/(s^2) with delta(s) = 2s.
    const auto q = CoeffRing::rationals();
    Algebra<Q> a(q, {"1", "s"}, {{0, 0, 0, Q(1)}, {0, 1, 1, Q(1)}, {1, 0, 1, Q(1)}}, Index{0});
    Matrix<Q> m = Matrix<Q>::Zero(2, 2);
    m(1, 1) = Q(2);
    auto d = verify_leibniz(a, m);
    auto n = radical_char0(a).radical;
    auto r = verify_eq_b(a, d, a.basis_vector(1), n, 2);
    EXPECT_TRUE(r.expansion_vanishes);
    EXPECT_TRUE(r.zero_order_terms_in_n);
    EXPECT_TRUE(r.top_term_in_n);
    EXPECT_EQ(r.top_coefficient, 2);
    EXPECT_TRUE(is_zero<Q>(r.delta_b_power));

    auto rz = verify_eq_b(a, zero_derivation(a), a.basis_vector(1), n, 2);
    EXPECT_TRUE(rz.top_term_in_n);
    auto r0 = verify_eq_b(a, d, a.zero(), n, 1);
    EXPECT_TRUE(r0.expansion_vanishes && r0.zero_order_terms_in_n && r0.top_term_in_n);

    EXPECT_THROW(verify_eq_b(a, d, a.basis_vector(0), n, 3), PreconditionViolated);
}

TEST(EqB, StrictUpperTriangular)
{
    auto a = unitalize(examples::upper_triangular(3, true));
    auto n = radical_char0(a).radical;
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t)
    {
        auto d = verify_leibniz(a, test_support::random_derivation(a, rng));
        Vector<Q> b = test_support::random_element(a.rank(), rng);
        b(0) = 0;
        auto r = verify_eq_b(a, d, b, n, 3);
        EXPECT_TRUE(r.expansion_vanishes);
        EXPECT_TRUE(r.zero_order_terms_in_n);
        EXPECT_TRUE(r.top_term_in_n);
    }
}
