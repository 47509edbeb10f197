#include "orenil/orepoly.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

namespace orenil::orepoly
{

namespace
{

template <class T>
std::string join(const std::vector<T> &xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + std::to_string(xs[i]);
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

template <class T>
std::vector<T> parse_list(std::string_view field, const char *what)
{
    std::vector<T> out;
    field = trim(field);
    if (field.empty())
        return out;
    while (true)
    {
        const auto comma = field.find(',');
        const std::string_view item = trim(field.substr(0, comma));
        T value{};
        auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || end != item.data() + item.size())
            throw MalformedInput(std::string("canonical term: bad ") + what + " entry '" +
                                 std::string(item) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos)
            return out;
        field.remove_prefix(comma + 1);
    }
}

} // namespace

std::string to_record(const CanonicalTerm &t)
{
    return t.coeff.str() + " | " + join(t.indices) + " | " + join(t.jword) + " | " +
           std::to_string(t.xdeg);
}

CanonicalTerm parse_record(std::string_view text)
{
    std::vector<std::string_view> fields;
    while (true)
    {
        const auto bar = text.find('|');
        fields.push_back(text.substr(0, bar));
        if (bar == std::string_view::npos)
            break;
        text.remove_prefix(bar + 1);
    }
    if (fields.size() != 4)
        throw MalformedInput("canonical term: expected 4 '|'-separated fields, found " +
                             std::to_string(fields.size()));
    CanonicalTerm t;
    t.coeff = parse_integer(trim(fields[0]));
    t.indices = parse_list<std::size_t>(fields[1], "index");
    t.jword = parse_list<words::Letter>(fields[2], "derivation order");
    const auto m = parse_list<std::size_t>(fields[3], "x-degree");
    if (m.size() != 1)
        throw MalformedInput("canonical term: the x-degree field must hold one number");
    t.xdeg = m[0];
    if (t.indices.empty() || t.indices.size() != t.jword.size() + 1)
        throw MalformedInput("canonical term: need n + 1 indices for n derivation orders");
    return t;
}

std::vector<CanonicalTerm> rewrite_product(std::span<const std::size_t> indices,
                                           std::span<const std::size_t> exponents, std::uint64_t k,
                                           const RewriteOptions &options)
{
    if (indices.empty() || exponents.size() != indices.size())
        throw PreconditionViolated("rewrite_product: need indices i_0..i_n and exponents p_1..p_(n+1)");
    for (std::size_t t = 0; t < exponents.size(); ++t)
        if (exponents[t] > k)
            throw ExponentTooLarge("exponent p_" + std::to_string(t + 1) + " = " +
                                   std::to_string(exponents[t]) + " exceeds k = " + std::to_string(k));

    const std::size_t n = indices.size() - 1;
    std::map<std::vector<words::Letter>, std::pair<BigInt, std::size_t>> merged;
    std::vector<words::Letter> jword(n, 0);
    std::uint64_t visited = 0;

    // Each path fixes the whole jword, so no two leaves collide; the map only
    // orders them. M = p_1 + ... + p_(n+1) - j_1 - ... - j_n.
    auto walk = [&](auto &&self, std::size_t t, std::size_t carry, const BigInt &coeff) -> void {
        if (t == n)
        {
            if (++visited > options.budget)
                throw BudgetExceeded("rewrite_product: more than " + std::to_string(options.budget) +
                                     " canonical terms");
            auto &slot = merged[jword];
            slot.first += coeff;
            slot.second = carry + exponents[n];
            return;
        }
        const std::size_t c = carry + exponents[t];
        for (std::size_t j = 0; j <= c; ++j)
        {
            jword[t] = j;
            self(self, t + 1, c - j, coeff * binomial(c, j));
        }
    };
    walk(walk, 0, 0, BigInt(1));

    std::vector<CanonicalTerm> out;
    const std::vector<std::size_t> idx(indices.begin(), indices.end());
    for (auto &[word, entry] : merged)
    {
        if (entry.first == 0)
            continue;
        if (!word.empty() && !words::is_k_valid(word, k))
            throw std::logic_error("rewrite_product produced a word that is not k-valid");
        out.push_back({entry.first, idx, word, entry.second});
    }
    return out;
}

} // namespace orenil::orepoly
