#ifndef ORENIL_ALGEBRA_IO_HPP
#define ORENIL_ALGEBRA_IO_HPP

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orenil/algebra.hpp"
#include "orenil/orepoly.hpp"

namespace orenil::io
{

/// Contents of an algebra-definition document. Derivation matrices are kept
/// unverified; callers run verify_leibniz when they pick one.
template <class Scalar>
struct AlgebraFile
{
    algebra::Algebra<Scalar> algebra;
    std::map<std::string, Matrix<Scalar>> derivations;
    std::map<std::string, algebra::MultilinearIdentity> identities;
};

/// Rational scalars serve both Z and Q; F_p uses Zp.
using AnyAlgebraFile = std::variant<AlgebraFile<Rational>, AlgebraFile<Zp>>;

/// Parses a JSON algebra definition:
///
///   { "coeff_ring": "integers" | "rationals" | {"prime": p},
///     "rank": r, "basis_names": [...],
///     "structure_constants": [[i, j, k, "value"], ...],      (0-based)
///     "unit": i,                                              (optional)
///     "derivations": {"name": [r*r value strings, row-major]}, (optional)
///     "identities": {"name": {"degree": d,
///                             "terms": [{"perm": [...], "coeff": "c"}]}} }
///
/// Values are decimal integer or "a/b" strings (plain JSON integers are also
/// accepted). Syntax errors report line and column; other errors name the
/// offending field as a JSON pointer. Throws MalformedInput, AlgebraError.
AnyAlgebraFile parse_algebra(std::string_view text, const std::string &source = "<input>");
AnyAlgebraFile load_algebra(const std::string &path);

/// Canonical JSON text (two-space indent, trailing newline).
template <class Scalar>
std::string write_algebra(const AlgebraFile<Scalar> &file);

/// Parses "2*e12 + e23*x - 1/2*t^2*x^3"-style sums of terms. Each term is a
/// '*'-product of at most one rational coefficient, exactly one basis name
/// and at most one power of x ("x" or "x^n"). A factor spelled both as a
/// number and as a basis name counts as the name unless the term has another.
template <class Scalar>
orepoly::DiffPoly<Scalar> parse_poly(const algebra::Algebra<Scalar> &a, std::string_view text);

/// As parse_poly, but x may not occur.
template <class Scalar>
Vector<Scalar> parse_element(const algebra::Algebra<Scalar> &a, std::string_view text);

/// Splits on ';' (or ',' when no ';' is present) and parses each piece.
template <class Scalar>
std::vector<orepoly::DiffPoly<Scalar>> parse_poly_list(const algebra::Algebra<Scalar> &a,
                                                        std::string_view text);
template <class Scalar>
std::vector<Vector<Scalar>> parse_element_list(const algebra::Algebra<Scalar> &a,
                                               std::string_view text);

/// Inverse rendering: "2*e12 + e23*x", "0" for zero.
template <class Scalar>
std::string format_element(const algebra::Algebra<Scalar> &a, const Vector<Scalar> &v);
template <class Scalar>
std::string format_poly(const algebra::Algebra<Scalar> &a, const orepoly::DiffPoly<Scalar> &f);

} // namespace orenil::io

#endif // ORENIL_ALGEBRA_IO_HPP
