#ifndef ORENIL_EXAMPLES_HPP
#define ORENIL_EXAMPLES_HPP

#include <string>
#include <vector>

#include "orenil/algebra.hpp"

/// Small algebras used throughout the tests and by the CLI demos.
namespace orenil::examples
{

/// Upper-triangular n x n matrices over Q, basis e_ij (i <= j, or i < j when
/// strict) in row-major order, named "e<i><j>" with 1-based indices.
inline algebra::Algebra<Rational> upper_triangular(int n, bool strict)
{
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = strict ? i + 1 : i; j <= n; ++j)
            cells.emplace_back(i, j);
    std::vector<std::string> names;
    for (auto [i, j] : cells)
        names.push_back("e" + std::to_string(i) + std::to_string(j));
    auto index = [&](int i, int j) {
        for (std::size_t t = 0; t < cells.size(); ++t)
            if (cells[t] == std::pair{i, j})
                return static_cast<Index>(t);
        return Index{-1};
    };
    std::vector<algebra::StructureConstant<Rational>> cs;
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = 0; b < cells.size(); ++b)
            if (cells[a].second == cells[b].first)
            {
                const Index k = index(cells[a].first, cells[b].second);
                if (k >= 0)
                    cs.push_back({static_cast<Index>(a), static_cast<Index>(b), k, Rational(1)});
            }
    return algebra::Algebra<Rational>(CoeffRing::rationals(), std::move(names), cs);
}

/// Rank-r ring with all products zero.
template <class Scalar>
algebra::Algebra<Scalar> square_zero(CoeffRing ring, int rank)
{
    std::vector<std::string> names;
    for (int i = 1; i <= rank; ++i)
        names.push_back("e" + std::to_string(i));
    return algebra::Algebra<Scalar>(ring, std::move(names), {});
}

/// F_p[t]/(t^p), basis 1, t, ..., t^(p-1).
inline algebra::Algebra<Zp> truncated_polynomial(std::uint64_t p)
{
    const CoeffRing ring = CoeffRing::prime_field(p);
    std::vector<std::string> names{"1", "t"};
    for (std::uint64_t i = 2; i < p; ++i)
        names.push_back("t^" + std::to_string(i));
    std::vector<algebra::StructureConstant<Zp>> cs;
    for (std::uint64_t i = 0; i < p; ++i)
        for (std::uint64_t j = 0; i + j < p; ++j)
            cs.push_back({static_cast<Index>(i), static_cast<Index>(j), static_cast<Index>(i + j),
                          Zp::make(1, p)});
    return algebra::Algebra<Zp>(ring, std::move(names), cs, Index{0});
}

/// d/dt on F_p[t]/(t^p); well defined because d/dt(t^p) = p t^(p-1) = 0.
inline Matrix<Zp> d_dt(const algebra::Algebra<Zp> &a)
{
    const std::uint64_t p = a.ring().characteristic();
    Matrix<Zp> d = Matrix<Zp>::Zero(a.rank(), a.rank());
    for (Index j = 1; j < a.rank(); ++j)
        d(j - 1, j) = Zp::make(j, p);
    return d;
}

} // namespace orenil::examples

#endif // ORENIL_EXAMPLES_HPP
