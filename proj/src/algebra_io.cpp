#include "orenil/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace orenil::io
{

namespace
{

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// Location of a JSON value, rendered as a JSON pointer.
class Path
{
public:
    Path() = default;
    Path operator/(const std::string &key) const { return Path(text_ + "/" + key); }
    Path operator/(std::size_t index) const { return Path(text_ + "/" + std::to_string(index)); }
    const std::string &str() const noexcept { return text_; }

private:
    explicit Path(std::string text) : text_(std::move(text)) {}
    std::string text_;
};

[[noreturn]] void fail(const std::string &source, const Path &at, const std::string &what)
{
    throw MalformedInput(source + ": field " + (at.str().empty() ? "/" : at.str()) + ": " + what);
}

const json &member(const std::string &source, const json &obj, const Path &at, const char *key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        fail(source, at / key, "missing");
    return *it;
}

std::uint64_t natural(const std::string &source, const json &v, const Path &at)
{
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        fail(source, at, "expected a natural number");
    return v.get<std::uint64_t>();
}

Rational exact_value(const std::string &source, const json &v, const Path &at)
{
    if (v.is_number_integer())
        return Rational(v.get<std::int64_t>());
    if (!v.is_string())
        fail(source, at, "expected an integer or an \"a/b\" string");
    try
    {
        return parse_rational(v.get<std::string>());
    }
    catch (const MalformedInput &e)
    {
        fail(source, at, e.what());
    }
}

template <class Scalar>
Scalar ring_value(const CoeffRing &ring, const std::string &source, const json &v, const Path &at)
{
    const Rational q = exact_value(source, v, at);
    try
    {
        return ScalarTraits<Scalar>::from_rational(ring, q);
    }
    catch (const MalformedInput &e)
    {
        fail(source, at, e.what());
    }
}

CoeffRing read_ring(const std::string &source, const json &v, const Path &at)
{
    if (v.is_string())
    {
        if (v == "integers")
            return CoeffRing::integers();
        if (v == "rationals")
            return CoeffRing::rationals();
        fail(source, at, "expected \"integers\", \"rationals\" or {\"prime\": p}");
    }
    if (v.is_object() && v.size() == 1 && v.contains("prime"))
    {
        const std::uint64_t p = natural(source, v["prime"], at / "prime");
        try
        {
            return CoeffRing::prime_field(p);
        }
        catch (const MalformedInput &e)
        {
            fail(source, at / "prime", e.what());
        }
    }
    fail(source, at, "expected \"integers\", \"rationals\" or {\"prime\": p}");
}

template <class Scalar>
AlgebraFile<Scalar> read_file(const CoeffRing &ring, const std::string &source, const json &doc)
{
    const Path root;
    const std::uint64_t rank = natural(source, member(source, doc, root, "rank"), root / "rank");
    if (rank == 0)
        fail(source, root / "rank", "must be positive");

    const json &names_json = member(source, doc, root, "basis_names");
    if (!names_json.is_array() || names_json.size() != rank)
        fail(source, root / "basis_names", "expected an array of " + std::to_string(rank) + " names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < names_json.size(); ++i)
    {
        if (!names_json[i].is_string() || names_json[i].get<std::string>().empty())
            fail(source, root / "basis_names" / i, "expected a nonempty string");
        names.push_back(names_json[i].get<std::string>());
        for (std::size_t j = 0; j < i; ++j)
            if (names[j] == names[i])
                fail(source, root / "basis_names" / i, "duplicate name '" + names[i] + "'");
    }

    const Path sc_path = root / "structure_constants";
    const json &sc = member(source, doc, root, "structure_constants");
    if (!sc.is_array())
        fail(source, sc_path, "expected an array of [i, j, k, value] records");
    std::vector<algebra::StructureConstant<Scalar>> constants;
    for (std::size_t r = 0; r < sc.size(); ++r)
    {
        const Path at = sc_path / r;
        if (!sc[r].is_array() || sc[r].size() != 4)
            fail(source, at, "expected [i, j, k, value]");
        Index idx[3];
        for (std::size_t c = 0; c < 3; ++c)
        {
            const std::uint64_t v = natural(source, sc[r][c], at / c);
            if (v >= rank)
                fail(source, at / c, "index " + std::to_string(v) + " out of range for rank " +
                                         std::to_string(rank));
            idx[c] = static_cast<Index>(v);
        }
        constants.push_back({idx[0], idx[1], idx[2], ring_value<Scalar>(ring, source, sc[r][3], at / 3)});
    }

    std::optional<Index> unit;
    if (auto it = doc.find("unit"); it != doc.end() && !it->is_null())
    {
        const std::uint64_t u = natural(source, *it, root / "unit");
        if (u >= rank)
            fail(source, root / "unit", "index out of range");
        unit = static_cast<Index>(u);
    }

    AlgebraFile<Scalar> out{algebra::Algebra<Scalar>(ring, names, constants, unit), {}, {}};

    if (auto it = doc.find("derivations"); it != doc.end())
    {
        const Path dp = root / "derivations";
        if (!it->is_object())
            fail(source, dp, "expected an object mapping names to matrices");
        for (const auto &[name, m] : it->items())
        {
            const Path at = dp / name;
            if (!m.is_array() || m.size() != rank * rank)
                fail(source, at, "expected " + std::to_string(rank * rank) +
                                     " values (row-major " + std::to_string(rank) + " x " +
                                     std::to_string(rank) + ")");
            Matrix<Scalar> d(static_cast<Index>(rank), static_cast<Index>(rank));
            for (std::size_t e = 0; e < m.size(); ++e)
                d(static_cast<Index>(e / rank), static_cast<Index>(e % rank)) =
                    ring_value<Scalar>(ring, source, m[e], at / e);
            out.derivations.emplace(name, std::move(d));
        }
    }

    if (auto it = doc.find("identities"); it != doc.end())
    {
        const Path ip = root / "identities";
        if (!it->is_object())
            fail(source, ip, "expected an object mapping names to identities");
        for (const auto &[name, ident] : it->items())
        {
            const Path at = ip / name;
            if (!ident.is_object())
                fail(source, at, "expected {\"degree\": d, \"terms\": [...]}");
            const auto degree = natural(source, member(source, ident, at, "degree"), at / "degree");
            std::vector<algebra::MultilinearIdentity::Term> terms;
            if (auto t = ident.find("terms"); t != ident.end())
            {
                if (!t->is_array())
                    fail(source, at / "terms", "expected an array");
                for (std::size_t n = 0; n < t->size(); ++n)
                {
                    const Path tp = at / "terms" / n;
                    const json &term = (*t)[n];
                    if (!term.is_object())
                        fail(source, tp, "expected {\"perm\": [...], \"coeff\": c}");
                    const json &perm = member(source, term, tp, "perm");
                    if (!perm.is_array())
                        fail(source, tp / "perm", "expected an array");
                    std::vector<int> images;
                    for (std::size_t s = 0; s < perm.size(); ++s)
                        images.push_back(static_cast<int>(natural(source, perm[s], tp / "perm" / s)));
                    const Rational c = exact_value(source, member(source, term, tp, "coeff"), tp / "coeff");
                    if (boost::multiprecision::denominator(c) != 1)
                        fail(source, tp / "coeff", "identity coefficients must be integers");
                    terms.push_back({std::move(images), BigInt(boost::multiprecision::numerator(c))});
                }
            }
            try
            {
                out.identities.emplace(name, algebra::MultilinearIdentity(static_cast<int>(degree), terms));
            }
            catch (const MalformedInput &e)
            {
                fail(source, at, e.what());
            }
        }
    }
    return out;
}

std::string value_string(const Rational &q) { return q.str(); }
std::string value_string(const Zp &z) { return std::to_string(z.value()); }

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::optional<std::size_t> x_power(std::string_view f)
{
    if (f == "x")
        return 1;
    if (f.size() > 2 && f.substr(0, 2) == "x^" &&
        f.substr(2).find_first_not_of("0123456789") == std::string_view::npos && f.size() < 12)
        return std::stoull(std::string(f.substr(2)));
    return std::nullopt;
}

std::optional<Rational> number(std::string_view f)
{
    try
    {
        return parse_rational(f);
    }
    catch (const MalformedInput &)
    {
        return std::nullopt;
    }
}

/// Splits a sum into signed terms; '+' and '-' are separators unless they
/// begin the whole text.
std::vector<std::pair<bool, std::string_view>> split_terms(std::string_view text)
{
    std::vector<std::pair<bool, std::string_view>> out;
    text = trim(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+'))
    {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
    {
        if (i == text.size() || text[i] == '+' || text[i] == '-')
        {
            out.emplace_back(negative, trim(text.substr(start, i - start)));
            if (i < text.size())
                negative = text[i] == '-';
            start = i + 1;
        }
    }
    return out;
}

std::vector<std::string_view> split_list(std::string_view text)
{
    const char sep = text.find(';') != std::string_view::npos ? ';' : ',';
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
        if (i == text.size() || text[i] == sep)
        {
            auto piece = trim(text.substr(start, i - start));
            if (piece.empty())
                throw MalformedInput("empty entry in list '" + std::string(text) + "'");
            out.push_back(piece);
            start = i + 1;
        }
    return out;
}

template <class Scalar>
std::string coefficient_prefix(const Scalar &c, bool &negative)
{
    std::string s = value_string(c);
    negative = !s.empty() && s.front() == '-';
    if (negative)
        s.erase(0, 1);
    return s == "1" ? "" : s + "*";
}

} // namespace

AnyAlgebraFile parse_algebra(std::string_view text, const std::string &source)
{
    json doc;
    try
    {
        doc = json::parse(text.begin(), text.end());
    }
    catch (const json::parse_error &e)
    {
        std::size_t line = 1, col = 1;
        const std::size_t upto = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < upto; ++i)
        {
            if (text[i] == '\n')
            {
                ++line;
                col = 1;
            }
            else
                ++col;
        }
        throw MalformedInput(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                             ": syntax error: " + e.what());
    }
    if (!doc.is_object())
        fail(source, Path(), "expected a JSON object");
    const CoeffRing ring = read_ring(source, member(source, doc, Path(), "coeff_ring"), Path() / "coeff_ring");
    if (ring.kind() == CoeffRing::Kind::PrimeField)
        return read_file<Zp>(ring, source, doc);
    return read_file<Rational>(ring, source, doc);
}

AnyAlgebraFile load_algebra(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw MalformedInput(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str(), path);
}

template <class Scalar>
std::string write_algebra(const AlgebraFile<Scalar> &file)
{
    const auto &a = file.algebra;
    ordered_json doc;
    switch (a.ring().kind())
    {
    case CoeffRing::Kind::Integers:
        doc["coeff_ring"] = "integers";
        break;
    case CoeffRing::Kind::Rationals:
        doc["coeff_ring"] = "rationals";
        break;
    case CoeffRing::Kind::PrimeField:
        doc["coeff_ring"] = ordered_json{{"prime", a.ring().characteristic()}};
        break;
    }
    doc["rank"] = a.rank();
    doc["basis_names"] = a.names();
    ordered_json sc = ordered_json::array();
    for (const auto &c : a.constants())
        sc.push_back(ordered_json::array({c.i, c.j, c.k, value_string(c.value)}));
    doc["structure_constants"] = sc;
    if (a.unit())
        doc["unit"] = *a.unit();
    if (!file.derivations.empty())
    {
        ordered_json ds = ordered_json::object();
        for (const auto &[name, m] : file.derivations)
        {
            ordered_json entries = ordered_json::array();
            for (Index i = 0; i < m.rows(); ++i)
                for (Index j = 0; j < m.cols(); ++j)
                    entries.push_back(value_string(m(i, j) + a.scalar(0)));
            ds[name] = entries;
        }
        doc["derivations"] = ds;
    }
    if (!file.identities.empty())
    {
        ordered_json is = ordered_json::object();
        for (const auto &[name, ident] : file.identities)
        {
            ordered_json terms = ordered_json::array();
            for (const auto &t : ident.terms())
                terms.push_back(ordered_json{{"perm", t.perm}, {"coeff", t.coeff.str()}});
            is[name] = ordered_json{{"degree", ident.degree()}, {"terms", terms}};
        }
        doc["identities"] = is;
    }
    return doc.dump(2) + "\n";
}

template <class Scalar>
orepoly::DiffPoly<Scalar> parse_poly(const algebra::Algebra<Scalar> &a, std::string_view text)
{
    orepoly::DiffPoly<Scalar> out(a.rank());
    if (trim(text) == "0")
        return out;
    for (const auto &[negative, term] : split_terms(text))
    {
        const std::string where = " in term '" + std::string(term) + "' of '" + std::string(trim(text)) + "'";
        if (term.empty())
            throw MalformedInput("empty term" + where);
        struct Factor
        {
            std::string_view text;
            std::optional<Index> name;
            std::optional<Rational> value;
            std::optional<std::size_t> xpow;
        };
        std::vector<Factor> factors;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= term.size(); ++i)
            if (i == term.size() || term[i] == '*')
            {
                Factor f{trim(term.substr(start, i - start)), {}, {}, {}};
                if (f.text.empty())
                    throw MalformedInput("empty factor" + where);
                f.xpow = x_power(f.text);
                if (!f.xpow)
                {
                    f.name = a.index_of(std::string(f.text));
                    f.value = number(f.text);
                    if (!f.name && !f.value)
                        throw MalformedInput("'" + std::string(f.text) +
                                             "' is neither a basis name, a number nor a power of x" + where);
                }
                factors.push_back(f);
                start = i + 1;
            }
        std::size_t names = 0;
        for (const auto &f : factors)
            names += f.name.has_value();
        if (names > 1)
            for (auto &f : factors)
                if (f.name && f.value && names > 1)
                {
                    f.name.reset();
                    --names;
                }
        if (names != 1)
            throw MalformedInput("each term needs exactly one basis name" + where);
        Rational coeff = negative ? Rational(-1) : Rational(1);
        Index basis = 0;
        std::size_t power = 0;
        int numbers = 0, powers = 0;
        for (const auto &f : factors)
        {
            if (f.xpow)
            {
                power = *f.xpow;
                ++powers;
            }
            else if (f.name)
                basis = *f.name;
            else
            {
                coeff *= *f.value;
                ++numbers;
            }
        }
        if (numbers > 1 || powers > 1)
            throw MalformedInput("at most one coefficient and one power of x per term" + where);
        out.add_term(a.scalar(coeff) * a.basis_vector(basis), power);
    }
    return out;
}

template <class Scalar>
Vector<Scalar> parse_element(const algebra::Algebra<Scalar> &a, std::string_view text)
{
    auto p = parse_poly(a, text);
    if (p.degree() > 0)
        throw MalformedInput("'" + std::string(trim(text)) + "' must not contain x");
    return p.coefficient(0);
}

template <class Scalar>
std::vector<orepoly::DiffPoly<Scalar>> parse_poly_list(const algebra::Algebra<Scalar> &a,
                                                        std::string_view text)
{
    std::vector<orepoly::DiffPoly<Scalar>> out;
    for (auto piece : split_list(text))
        out.push_back(parse_poly(a, piece));
    return out;
}

template <class Scalar>
std::vector<Vector<Scalar>> parse_element_list(const algebra::Algebra<Scalar> &a, std::string_view text)
{
    std::vector<Vector<Scalar>> out;
    for (auto piece : split_list(text))
        out.push_back(parse_element(a, piece));
    return out;
}

template <class Scalar>
std::string format_poly(const algebra::Algebra<Scalar> &a, const orepoly::DiffPoly<Scalar> &f)
{
    std::string out;
    for (std::size_t deg = 0; deg < f.coefficients().size(); ++deg)
        for (Index i = 0; i < a.rank(); ++i)
        {
            const Scalar c = f.coefficients()[deg](i) + a.scalar(0);
            if (ScalarTraits<Scalar>::is_zero(c))
                continue;
            bool negative = false;
            const std::string prefix = coefficient_prefix(c, negative);
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            out += prefix + a.names()[i];
            if (deg == 1)
                out += "*x";
            else if (deg > 1)
                out += "*x^" + std::to_string(deg);
        }
    return out.empty() ? "0" : out;
}

template <class Scalar>
std::string format_element(const algebra::Algebra<Scalar> &a, const Vector<Scalar> &v)
{
    return format_poly(a, orepoly::DiffPoly<Scalar>(a.rank(), {v}));
}

#define ORENIL_IO_INSTANTIATE(S)                                                                  \
    template std::string write_algebra<S>(const AlgebraFile<S> &);                                \
    template orepoly::DiffPoly<S> parse_poly<S>(const algebra::Algebra<S> &, std::string_view);   \
    template Vector<S> parse_element<S>(const algebra::Algebra<S> &, std::string_view);           \
    template std::vector<orepoly::DiffPoly<S>> parse_poly_list<S>(const algebra::Algebra<S> &,    \
                                                                   std::string_view);             \
    template std::vector<Vector<S>> parse_element_list<S>(const algebra::Algebra<S> &,            \
                                                          std::string_view);                      \
    template std::string format_poly<S>(const algebra::Algebra<S> &, const orepoly::DiffPoly<S> &); \
    template std::string format_element<S>(const algebra::Algebra<S> &, const Vector<S> &);

ORENIL_IO_INSTANTIATE(Rational)
ORENIL_IO_INSTANTIATE(Zp)

#undef ORENIL_IO_INSTANTIATE

} // namespace orenil::io
