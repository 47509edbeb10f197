#ifndef ORENIL_SUBSPACE_HPP
#define ORENIL_SUBSPACE_HPP

#include <algorithm>
#include <vector>

#include "orenil/scalar.hpp"

namespace orenil
{

/// Linear span of coordinate vectors, kept in reduced row echelon form: every
/// basis vector has a leading 1 at its pivot and zeros at all other pivots,
/// and basis vectors are ordered by pivot. The form is canonical, so two
/// subspaces are equal iff their bases are.
///
/// Over the integers the same form over Q is used; the saturated lattice of
/// integral points is determined by its Q-span.
template <class Scalar>
class Subspace
{
public:
    explicit Subspace(Index ambient = 0) : ambient_(ambient) {}

    static Subspace span(Index ambient, const std::vector<Vector<Scalar>> &vectors)
    {
        Subspace s(ambient);
        for (const auto &v : vectors)
            s.insert(v);
        return s;
    }

    static Subspace full(Index ambient)
    {
        Subspace s(ambient);
        for (Index i = 0; i < ambient; ++i)
        {
            Vector<Scalar> e = Vector<Scalar>::Zero(ambient);
            e(i) = Scalar(1);
            s.insert(e);
        }
        return s;
    }

    Index ambient_dim() const noexcept { return ambient_; }
    Index dim() const noexcept { return static_cast<Index>(basis_.size()); }
    bool is_zero() const noexcept { return basis_.empty(); }
    const std::vector<Vector<Scalar>> &basis() const noexcept { return basis_; }
    const std::vector<Index> &pivots() const noexcept { return pivots_; }

    /// Remainder of v after clearing every pivot coordinate.
    Vector<Scalar> reduce(Vector<Scalar> v) const
    {
        for (std::size_t r = 0; r < basis_.size(); ++r)
        {
            const Scalar c = v(pivots_[r]);
            if (!ScalarTraits<Scalar>::is_zero(c))
                v -= c * basis_[r];
        }
        return v;
    }

    bool contains(const Vector<Scalar> &v) const { return orenil::is_zero<Scalar>(reduce(v)); }

    bool contains(const Subspace &other) const
    {
        return std::all_of(other.basis_.begin(), other.basis_.end(),
                           [&](const Vector<Scalar> &v) { return contains(v); });
    }

    /// Adds v to the span. Returns whether the dimension grew.
    bool insert(const Vector<Scalar> &v)
    {
        Vector<Scalar> rest = reduce(v);
        Index pivot = 0;
        while (pivot < rest.size() && ScalarTraits<Scalar>::is_zero(rest(pivot)))
            ++pivot;
        if (pivot == rest.size())
            return false;
        rest *= ScalarTraits<Scalar>::inverse(rest(pivot));
        for (auto &row : basis_)
        {
            const Scalar c = row(pivot);
            if (!ScalarTraits<Scalar>::is_zero(c))
                row -= c * rest;
        }
        auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
        auto offset = at - pivots_.begin();
        pivots_.insert(at, pivot);
        basis_.insert(basis_.begin() + offset, std::move(rest));
        return true;
    }

    Matrix<Scalar> matrix() const
    {
        Matrix<Scalar> m(dim(), ambient_);
        for (Index r = 0; r < dim(); ++r)
            m.row(r) = basis_[r].transpose();
        return m;
    }

    friend bool operator==(const Subspace &a, const Subspace &b)
    {
        return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
    }

private:
    Index ambient_;
    std::vector<Vector<Scalar>> basis_;
    std::vector<Index> pivots_;
};

/// Basis of {x : m x = 0}.
template <class Scalar>
std::vector<Vector<Scalar>> kernel(const Matrix<Scalar> &m)
{
    Subspace<Scalar> rows(m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        rows.insert(m.row(i).transpose());
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto p : rows.pivots())
        is_pivot[p] = 1;
    std::vector<Vector<Scalar>> out;
    for (Index free = 0; free < m.cols(); ++free)
    {
        if (is_pivot[free])
            continue;
        Vector<Scalar> x = Vector<Scalar>::Zero(m.cols());
        x(free) = Scalar(1);
        for (std::size_t r = 0; r < rows.basis().size(); ++r)
            x(rows.pivots()[r]) = -rows.basis()[r](free);
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace orenil

#endif // ORENIL_SUBSPACE_HPP
