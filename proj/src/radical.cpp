#include "orenil/radical.hpp"

namespace orenil::radical
{

namespace
{

template <class Scalar>
bool sandwich_in(const algebra::Algebra<Scalar> &a, const Subspace<Scalar> &n, const Vector<Scalar> &x)
{
    if (!n.contains(algebra::multiply(a, x, x)))
        return false;
    for (Index i = 0; i < a.rank(); ++i)
        if (!n.contains(algebra::multiply(a, algebra::multiply(a, x, a.basis_vector(i)), x)))
            return false;
    return true;
}

template <class Scalar>
std::vector<Index> free_coordinates(const Subspace<Scalar> &n)
{
    std::vector<Index> out;
    const auto &piv = n.pivots();
    for (Index i = 0; i < n.ambient_dim(); ++i)
        if (std::find(piv.begin(), piv.end(), i) == piv.end())
            out.push_back(i);
    return out;
}

std::uint64_t checked_count(std::uint64_t base, std::size_t exponent, std::uint64_t budget)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < exponent; ++i)
    {
        if (total > budget / base)
            throw BudgetExceeded("semiprime search would try more than " + std::to_string(budget) +
                                 " candidates");
        total *= base;
    }
    return total;
}

} // namespace

RadicalReport radical_char0(const algebra::Algebra<Rational> &a)
{
    const bool unitalized = !a.unit().has_value();
    const algebra::Algebra<Rational> a1 = unitalized ? algebra::unitalize(a) : a;
    const Index r = a1.rank();

    // tau_l = tr L_{e_l}; G(i, m) = tr L_{e_i e_m} = sum_l c_im^l tau_l.
    std::vector<Rational> tau(static_cast<std::size_t>(r), Rational(0));
    for (Index l = 0; l < r; ++l)
        for (Index j = 0; j < r; ++j)
            for (const auto &t : a1.product_terms(l, j))
                if (t.k == j)
                    tau[l] += t.c;
    Matrix<Rational> gt = Matrix<Rational>::Zero(r, r);
    for (Index i = 0; i < r; ++i)
        for (Index m = 0; m < r; ++m)
            for (const auto &t : a1.product_terms(i, m))
                gt(m, i) += t.c * tau[t.k];

    Subspace<Rational> rad(a.rank());
    for (const auto &x : kernel(gt))
    {
        if (!unitalized)
        {
            rad.insert(x);
            continue;
        }
        if (x(0) != 0)
            throw VerificationFailed("trace-form radical of the unitalization meets the adjoined unit");
        rad.insert(Vector<Rational>(x.tail(a.rank())));
    }
    auto check = is_nil_ideal(a, rad);
    if (!check.holds)
        throw VerificationFailed("trace-form radical failed the nil-ideal check");
    return {std::move(rad), RadicalMethod::TraceForm, *check.index, unitalized};
}

LeibnizTable leibniz_coefficients(std::size_t n, std::size_t cap)
{
    if (n == 0)
        throw PreconditionViolated("leibniz_coefficients: n must be positive");
    if (n > cap)
        throw BudgetExceeded("leibniz_coefficients: n = " + std::to_string(n) + " exceeds the cap " +
                             std::to_string(cap));
    std::map<std::vector<std::size_t>, BigInt> current{{std::vector<std::size_t>(n, 0), BigInt(1)}};
    for (std::size_t step = 0; step < n; ++step)
    {
        std::map<std::vector<std::size_t>, BigInt> next;
        for (const auto &[orders, c] : current)
            for (std::size_t i = 0; i < n; ++i)
            {
                auto bumped = orders;
                ++bumped[i];
                next[bumped] += c;
            }
        current = std::move(next);
    }
    return {n, std::move(current)};
}

EqBReport verify_eq_b(const algebra::Algebra<Rational> &a, const algebra::Derivation<Rational> &delta,
                      const Vector<Rational> &b, const Subspace<Rational> &n, std::size_t power)
{
    algebra::check_rank(a, b);
    if (power == 0)
        throw PreconditionViolated("verify_eq_b: the exponent must be positive");
    if (!is_zero<Rational>(algebra::power(a, b, power)))
        throw PreconditionViolated("verify_eq_b: b^" + std::to_string(power) + " is not zero");
    if (!is_nil_ideal(a, n).holds)
        throw PreconditionViolated("verify_eq_b: N is not a nil ideal");
    if (!n.contains(b))
        throw PreconditionViolated("verify_eq_b: b is not in N");

    const LeibnizTable table = leibniz_coefficients(power, std::max<std::size_t>(power, 8));
    std::vector<Vector<Rational>> iterates{b};
    for (std::size_t j = 1; j <= power; ++j)
        iterates.push_back(delta(iterates.back()));

    EqBReport report;
    report.zero_order_terms_in_n = true;
    Vector<Rational> sum = a.zero();
    for (const auto &[orders, c] : table.coefficients)
    {
        std::vector<Vector<Rational>> factors;
        bool has_zero = false;
        for (auto j : orders)
        {
            factors.push_back(iterates[j]);
            has_zero = has_zero || j == 0;
        }
        const Vector<Rational> term = Rational(c) * algebra::multiply_all(a, factors);
        sum += term;
        if (has_zero && !n.contains(term))
            report.zero_order_terms_in_n = false;
    }
    report.expansion_vanishes = is_zero<Rational>(sum);
    report.top_coefficient = table.coefficients.at(std::vector<std::size_t>(power, 1));
    report.delta_b_power = algebra::power(a, iterates[1], power);
    report.top_term_in_n = n.contains(report.delta_b_power);
    return report;
}

SemiprimeSearch semiprime_search(const algebra::Algebra<Rational> &a, const Subspace<Rational> &n,
                                 int range, std::uint64_t budget)
{
    const auto coords = free_coordinates(n);
    const std::uint64_t width = 2 * static_cast<std::uint64_t>(range) + 1;
    const std::uint64_t total = checked_count(width, coords.size(), budget);
    SemiprimeSearch out;
    for (std::uint64_t code = 1; code < total; ++code)
    {
        Vector<Rational> x = a.zero();
        std::uint64_t rest = code;
        for (Index c : coords)
        {
            x(c) = Rational(static_cast<long long>(rest % width) - range);
            rest /= width;
        }
        if (is_zero<Rational>(x))
            continue;
        ++out.candidates;
        if (sandwich_in(a, n, x))
        {
            out.witness = x;
            return out;
        }
    }
    return out;
}

SemiprimeSearchZp semiprime_search(const algebra::Algebra<Zp> &a, const Subspace<Zp> &n,
                                   std::uint64_t budget)
{
    const std::uint64_t p = a.ring().characteristic();
    const auto coords = free_coordinates(n);
    const std::uint64_t total = checked_count(p, coords.size(), budget);
    SemiprimeSearchZp out;
    for (std::uint64_t code = 1; code < total; ++code)
    {
        Vector<Zp> x = a.zero();
        std::uint64_t rest = code;
        for (Index c : coords)
        {
            x(c) = Zp::make(static_cast<std::int64_t>(rest % p), p);
            rest /= p;
        }
        ++out.candidates;
        if (sandwich_in(a, n, x))
        {
            out.witness = x;
            return out;
        }
    }
    return out;
}

algebra::Algebra<Zp> reduce_mod_p(const algebra::Algebra<Rational> &a, std::uint64_t p)
{
    const CoeffRing ring = CoeffRing::prime_field(p);
    std::vector<algebra::StructureConstant<Zp>> cs;
    for (const auto &c : a.constants())
        cs.push_back({c.i, c.j, c.k, ScalarTraits<Zp>::from_rational(ring, c.value)});
    return algebra::Algebra<Zp>(ring, a.names(), cs, a.unit());
}

} // namespace orenil::radical
