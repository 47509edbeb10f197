#ifndef ORENIL_RADICAL_HPP
#define ORENIL_RADICAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orenil/algebra.hpp"
#include "orenil/errors.hpp"
#include "orenil/subspace.hpp"

/// Nil radicals of finite-rank algebras and their behaviour under derivations.
/// In finite rank a nil ideal is nilpotent, so "nil" is decided by the
/// nilpotency index throughout.
namespace orenil::radical
{

struct IdealWitness
{
    enum class Kind
    {
        LeftProduct,  ///< e_i v not in V
        RightProduct, ///< v e_i not in V
        NotNilpotent
    };
    Kind kind;
    Index basis_index = 0; ///< i, for the product kinds
    Index vector_index = 0; ///< position of v in the reduced basis of V
};

struct NilIdealReport
{
    bool holds = false;
    /// Least m with V^m = 0, when V is nilpotent.
    std::optional<std::size_t> index;
    std::optional<IdealWitness> witness;
};

/// V is a two-sided ideal (A¹ V A¹ in V, checked as e_i v, v e_i in V on
/// bases) and nilpotent.
template <class Scalar>
NilIdealReport is_nil_ideal(const algebra::Algebra<Scalar> &a, const Subspace<Scalar> &v)
{
    if (v.ambient_dim() != a.rank())
        throw RankMismatch("subspace lives in dimension " + std::to_string(v.ambient_dim()) +
                           ", algebra has rank " + std::to_string(a.rank()));
    NilIdealReport report;
    for (Index s = 0; s < v.dim(); ++s)
        for (Index i = 0; i < a.rank(); ++i)
        {
            const Vector<Scalar> e = a.basis_vector(i);
            if (!v.contains(algebra::multiply(a, e, v.basis()[s])))
            {
                report.witness = IdealWitness{IdealWitness::Kind::LeftProduct, i, s};
                return report;
            }
            if (!v.contains(algebra::multiply(a, v.basis()[s], e)))
            {
                report.witness = IdealWitness{IdealWitness::Kind::RightProduct, i, s};
                return report;
            }
        }
    report.index = algebra::nilpotency_index(a, v);
    if (!report.index)
    {
        report.witness = IdealWitness{IdealWitness::Kind::NotNilpotent, 0, 0};
        return report;
    }
    report.holds = true;
    return report;
}

enum class RadicalMethod
{
    TraceForm,
    UserSuppliedVerified
};

struct RadicalReport
{
    Subspace<Rational> radical;
    RadicalMethod method;
    std::size_t nilpotency_index;
    /// The input had no unit and was unitalized for the computation.
    bool unitalized;
};

/// Nil radical in characteristic zero: {x : tr L_{xy} = 0 for all y}, the
/// radical of the trace form of the left-regular representation of A¹. A
/// non-unital A is unitalized first; the radical of A¹ lies inside A.
/// Integer coefficients are read as a Q-algebra.
RadicalReport radical_char0(const algebra::Algebra<Rational> &a);

/// Accepts a user-supplied candidate after checking it is a nil ideal. Throws
/// VerificationFailed with the witness otherwise.
template <class Scalar>
Subspace<Scalar> verified_candidate(const algebra::Algebra<Scalar> &a, const Subspace<Scalar> &n);

struct StabilityReport
{
    bool stable = true;
    /// Index into the reduced basis of N of a vector b with delta(b) not in N.
    std::optional<Index> witness_index;
};

/// Whether delta maps every basis vector of N into N; N must be a nil ideal.
template <class Scalar>
StabilityReport check_delta_stability(const algebra::Algebra<Scalar> &a,
                                      const algebra::Derivation<Scalar> &delta,
                                      const Subspace<Scalar> &n)
{
    if (!is_nil_ideal(a, n).holds)
        throw PreconditionViolated("check_delta_stability: N is not a nil ideal");
    StabilityReport report;
    for (Index s = 0; s < n.dim(); ++s)
        if (!n.contains(delta(n.basis()[s])))
        {
            report.stable = false;
            report.witness_index = s;
            return report;
        }
    return report;
}

/// Coefficients of delta^n(b_1 ... b_n) = sum c_J delta^{j_1}(b_1) ... delta^{j_n}(b_n)
/// over compositions J of n into n parts (zeros allowed).
struct LeibnizTable
{
    std::size_t n = 0;
    std::map<std::vector<std::size_t>, BigInt> coefficients;
};

/// Iterates the single Leibniz step n times on free factors. Throws
/// BudgetExceeded above `cap`.
LeibnizTable leibniz_coefficients(std::size_t n, std::size_t cap = 8);

struct EqBReport
{
    bool expansion_vanishes = false;   ///< (a) sum_J c_J delta^J(b) = delta^n(b^n) = 0
    bool zero_order_terms_in_n = false; ///< (b) every term with some j_i = 0 lies in N
    bool top_term_in_n = false;         ///< (c) c_{1..1} delta(b)^n lies in N
    BigInt top_coefficient;
    Vector<Rational> delta_b_power;     ///< delta(b)^n
};

/// Replays delta^n(b^n) = 0 for a nilpotent b in N over a characteristic-zero
/// algebra. Throws PreconditionViolated unless b^n = 0, b is in N and N is a
/// nil ideal.
EqBReport verify_eq_b(const algebra::Algebra<Rational> &a, const algebra::Derivation<Rational> &delta,
                      const Vector<Rational> &b, const Subspace<Rational> &n, std::size_t power);

struct SemiprimeSearch
{
    /// Coordinates of a nonzero class x with x A¹ x in N, if one was found.
    std::optional<Vector<Rational>> witness;
    std::uint64_t candidates = 0;
};

/// Searches for a nonzero x modulo N with x y x in N for y in {1} u basis.
/// x runs over vectors supported on the non-pivot coordinates of N with
/// entries in -range..range.
SemiprimeSearch semiprime_search(const algebra::Algebra<Rational> &a, const Subspace<Rational> &n,
                                 int range, std::uint64_t budget = 2'000'000);

struct SemiprimeSearchZp
{
    std::optional<Vector<Zp>> witness;
    std::uint64_t candidates = 0;
};

/// Exhaustive version over F_p: every nonzero class of A/N is tried.
SemiprimeSearchZp semiprime_search(const algebra::Algebra<Zp> &a, const Subspace<Zp> &n,
                                   std::uint64_t budget = 2'000'000);

/// A with integral structure constants read modulo p.
algebra::Algebra<Zp> reduce_mod_p(const algebra::Algebra<Rational> &a, std::uint64_t p);

template <class Scalar>
Subspace<Scalar> verified_candidate(const algebra::Algebra<Scalar> &a, const Subspace<Scalar> &n)
{
    auto report = is_nil_ideal(a, n);
    if (report.holds)
        return n;
    const auto &w = *report.witness;
    std::string why;
    switch (w.kind)
    {
    case IdealWitness::Kind::LeftProduct:
        why = a.names()[w.basis_index] + " * " + to_string<Scalar>(n.basis()[w.vector_index]) +
              " leaves the subspace";
        break;
    case IdealWitness::Kind::RightProduct:
        why = to_string<Scalar>(n.basis()[w.vector_index]) + " * " + a.names()[w.basis_index] +
              " leaves the subspace";
        break;
    case IdealWitness::Kind::NotNilpotent:
        why = "the subspace is not nilpotent";
        break;
    }
    throw VerificationFailed("candidate is not a nil ideal: " + why);
}

} // namespace orenil::radical

#endif // ORENIL_RADICAL_HPP
