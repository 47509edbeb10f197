#include "orenil/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "orenil/errors.hpp"

namespace orenil::words
{

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters))
{
    if (letters_.empty())
        throw MalformedInput("a word must have at least one letter");
}

Letter Word::max_letter() const
{
    return *std::max_element(letters_.begin(), letters_.end());
}

Word parse_word(std::string_view text)
{
    std::vector<Letter> letters;
    std::size_t pos = 0;
    while (true)
    {
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw MalformedInput("word: expected a natural number at position " +
                                 std::to_string(start + 1));
        auto digits = text.substr(start, pos - start);
        if (digits.size() > 19)
            throw MalformedInput("word: letter too large at position " +
                                 std::to_string(start + 1));
        letters.push_back(std::stoull(std::string(digits)));
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
        if (pos == text.size())
            break;
        if (text[pos] != ',')
            throw MalformedInput("word: unexpected character '" + std::string(1, text[pos]) +
                                 "' at position " + std::to_string(pos + 1));
        ++pos;
    }
    return Word(std::move(letters));
}

std::string to_string(LetterSpan letters)
{
    std::string out = "(";
    for (std::size_t i = 0; i < letters.size(); ++i)
    {
        if (i)
            out += ",";
        out += std::to_string(letters[i]);
    }
    return out + ")";
}

std::string to_string(Ordering o)
{
    switch (o)
    {
    case Ordering::Equal:
        return "Equal";
    case Ordering::Less:
        return "Less";
    case Ordering::Greater:
        return "Greater";
    case Ordering::Incomparable:
        return "Incomparable";
    }
    return "?";
}

Ordering compare(LetterSpan u, LetterSpan v)
{
    auto common = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < common; ++i)
    {
        if (u[i] < v[i])
            return Ordering::Less;
        if (u[i] > v[i])
            return Ordering::Greater;
    }
    return u.size() == v.size() ? Ordering::Equal : Ordering::Incomparable;
}

BigInt weight(LetterSpan u)
{
    // Rearrangement inequality: the smallest letters take the largest coefficients.
    std::vector<Letter> sorted(u.begin(), u.end());
    std::sort(sorted.begin(), sorted.end());
    BigInt total = 0;
    const auto n = sorted.size();
    for (std::size_t i = 0; i < n; ++i)
        total += BigInt(sorted[i]) * (n - i);
    return total;
}

BigInt weight_bruteforce(const Word &u, std::size_t cap)
{
    if (u.size() > cap)
        throw BudgetExceeded("weight_bruteforce: length " + std::to_string(u.size()) +
                             " exceeds the factorial cap " + std::to_string(cap));
    const auto n = u.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<BigInt> best;
    do
    {
        BigInt s = 0;
        for (std::size_t i = 0; i < n; ++i)
            s += BigInt(u[perm[i]]) * (n - i);
        if (!best || s < *best)
            best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

bool is_k_valid(LetterSpan u, std::uint64_t k)
{
    const auto n = u.size();
    BigInt bound = BigInt(k) * n * (n + 1) / 2;
    return weight(u) <= bound;
}

BoundSequence::BoundSequence(std::vector<std::uint64_t> prefix, bool tail_rule)
    : prefix_(std::move(prefix)), tail_rule_(tail_rule)
{
    if (prefix_.empty())
        throw MalformedInput("bound sequence: the prefix must be nonempty");
    for (std::size_t i = 0; i < prefix_.size(); ++i)
        if (prefix_[i] == 0)
            throw MalformedInput("bound sequence: entry b_" + std::to_string(i) +
                                 " must be at least 1");
}

std::uint64_t BoundSequence::at(std::uint64_t m) const
{
    if (m < prefix_.size())
        return prefix_[m];
    if (!tail_rule_)
        throw InsufficientBoundData("bound sequence: b_" + std::to_string(m) +
                                    " is not determined (prefix ends at b_" +
                                    std::to_string(prefix_.size() - 1) +
                                    " and the tail rule is off)");
    return prefix_.back();
}

std::uint64_t BoundSequence::at(const BigInt &m) const
{
    if (m < prefix_.size())
        return prefix_[m.convert_to<std::size_t>()];
    if (!tail_rule_)
        throw InsufficientBoundData("bound sequence: b_" + m.str() +
                                    " is not determined (prefix ends at b_" +
                                    std::to_string(prefix_.size() - 1) +
                                    " and the tail rule is off)");
    return prefix_.back();
}

std::uint64_t BoundSequence::min_over(std::uint64_t lo, std::uint64_t hi) const
{
    std::uint64_t best = at(hi);
    const std::uint64_t last = prefix_.size() - 1;
    for (std::uint64_t m = lo; m <= std::min(hi, last); ++m)
        best = std::min(best, prefix_[m]);
    return best;
}

bool is_b_bounded(LetterSpan u, const BoundSequence &b)
{
    const std::size_t n = u.size();
    if (n == 0)
        return true;
    const Letter top = *std::max_element(u.begin(), u.end());
    if (!b.covers(top))
        throw InsufficientBoundData("bound sequence does not determine b_m for m up to " +
                                    std::to_string(top));

    // For each m the condition says the longest run of letters <= m is shorter
    // than b_m. Runs only grow when m passes a letter value, so activate
    // positions in increasing letter order and check each constant stretch of m.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return u[x] < u[y]; });

    std::vector<std::size_t> run(n, 0); // run length, valid at run endpoints
    std::vector<char> active(n, 0);
    std::size_t longest = 0;
    Letter m_lo = 0;
    std::size_t idx = 0;
    while (idx < n)
    {
        const Letter v = u[order[idx]];
        if (longest > 0 && v > m_lo && longest >= b.min_over(m_lo, v - 1))
            return false;
        for (; idx < n && u[order[idx]] == v; ++idx)
        {
            const std::size_t p = order[idx];
            std::size_t left = (p > 0 && active[p - 1]) ? run[p - 1] : 0;
            std::size_t right = (p + 1 < n && active[p + 1]) ? run[p + 1] : 0;
            std::size_t total = left + 1 + right;
            active[p] = 1;
            run[p - left] = total;
            run[p + right] = total;
            longest = std::max(longest, total);
        }
        m_lo = v;
    }
    return longest < b.at(top);
}

Factorization::Factorization(std::size_t source_length, std::size_t first_block_begin,
                             std::vector<std::size_t> block_ends)
    : length_(source_length), begin_(first_block_begin), ends_(std::move(block_ends))
{
    std::size_t prev = begin_;
    for (auto e : ends_)
    {
        if (e <= prev)
            throw std::invalid_argument("factorization: blocks must be nonempty and ordered");
        prev = e;
    }
    if (prev > length_)
        throw std::invalid_argument("factorization: blocks exceed the source word");
}

IndexRange Factorization::block(std::size_t i) const
{
    return {i == 0 ? begin_ : ends_.at(i - 1), ends_.at(i)};
}

std::optional<std::string> factorization_defect(const Word &u, const Factorization &f)
{
    if (f.source_length() != u.size())
        return "factorization was built for a word of length " +
               std::to_string(f.source_length()) + ", not " + std::to_string(u.size());
    // Reconstruction: prefix, blocks and suffix tile [0, n).
    std::size_t cursor = f.prefix().end;
    if (f.prefix().begin != 0)
        return std::string("prefix does not start at 0");
    for (std::size_t i = 0; i < f.block_count(); ++i)
    {
        auto r = f.block(i);
        if (r.begin != cursor)
            return "block " + std::to_string(i + 1) + " is not contiguous";
        if (r.size() == 0)
            return "block " + std::to_string(i + 1) + " is empty";
        cursor = r.end;
    }
    if (f.suffix().begin != cursor || f.suffix().end != u.size())
        return std::string("suffix does not close the word");
    for (std::size_t i = 0; i + 1 < f.block_count(); ++i)
    {
        auto o = compare(slice(u, f.block(i)), slice(u, f.block(i + 1)));
        if (o != Ordering::Greater)
            return "block " + std::to_string(i + 1) + " vs block " + std::to_string(i + 2) +
                   ": " + to_string(o) + ", expected Greater";
    }
    return std::nullopt;
}

std::size_t floor_fraction(const Rational &eps, std::size_t n)
{
    BigInt num = boost::multiprecision::numerator(eps);
    BigInt den = boost::multiprecision::denominator(eps);
    BigInt r = num * n / den;
    return r.convert_to<std::size_t>();
}

namespace
{

void check_eps(const Rational &eps)
{
    if (eps <= 0 || eps > 1)
        throw PreconditionViolated("eps must lie in (0, 1], got " + eps.str());
}

void check_k(std::uint64_t k)
{
    if (k == 0)
        throw PreconditionViolated("k must be a positive integer");
}

} // namespace

std::optional<std::string> constrained_defect(const Word &u, const Factorization &f,
                                              const Rational &eps,
                                              const BigInt &first_letter_bound)
{
    if (auto d = factorization_defect(u, f))
        return d;
    const std::size_t window = floor_fraction(eps, u.size());
    const std::size_t window_begin = u.size() - window;
    for (std::size_t i = 0; i < f.block_count(); ++i)
    {
        auto r = f.block(i);
        if (r.begin < window_begin)
            return "block " + std::to_string(i + 1) + " starts at " + std::to_string(r.begin) +
                   ", outside the last " + std::to_string(window) + " letters";
        if (BigInt(u[r.begin]) >= first_letter_bound)
            return "block " + std::to_string(i + 1) + " starts with " +
                   std::to_string(u[r.begin]) + " >= " + first_letter_bound.str();
    }
    return std::nullopt;
}

namespace
{

/// Right-to-left search for d decreasing blocks inside [window_begin, n), each
/// starting with a letter accepted by `first_ok`.
class DecreasingSearch
{
public:
    template <class FirstOk>
    DecreasingSearch(const Word &u, std::size_t window_begin, FirstOk first_ok)
        : u_(u), lo_(window_begin), ok_(u.size())
    {
        for (std::size_t i = 0; i < u.size(); ++i)
            ok_[i] = first_ok(u[i]);
    }

    std::optional<Factorization> run(std::size_t d)
    {
        const std::size_t n = u_.size();
        if (d == 0)
            return Factorization(n, n, {});
        for (std::size_t e = n; e > lo_; --e)
        {
            for (std::size_t s = e; s-- > lo_;)
            {
                if (!ok_[s] || !extend(s, e, d - 1))
                    continue;
                std::vector<std::size_t> ends{e};
                std::size_t a = s, b = e;
                for (std::size_t r = d - 1; r > 0; --r)
                {
                    std::size_t c = static_cast<std::size_t>(memo_.at(key(a, b, r)));
                    ends.push_back(a);
                    b = a;
                    a = c;
                }
                std::reverse(ends.begin(), ends.end());
                return Factorization(n, a, std::move(ends));
            }
        }
        return std::nullopt;
    }

private:
    std::uint64_t key(std::size_t a, std::size_t b, std::size_t r) const
    {
        const std::uint64_t n = u_.size() + 1;
        return (static_cast<std::uint64_t>(r) * n + a) * n + b;
    }

    /// Can `r` more blocks be placed immediately left of the block [a, b)?
    bool extend(std::size_t a, std::size_t b, std::size_t r)
    {
        if (r == 0)
            return true;
        auto k = key(a, b, r);
        if (auto it = memo_.find(k); it != memo_.end())
            return it->second >= 0;
        std::int64_t found = -1;
        auto right = u_.letters().subspan(a, b - a);
        for (std::size_t c = a; c-- > lo_;)
        {
            if (!ok_[c])
                continue;
            auto left = u_.letters().subspan(c, a - c);
            if (compare(left, right) == Ordering::Greater && extend(c, a, r - 1))
            {
                found = static_cast<std::int64_t>(c);
                break;
            }
        }
        memo_[k] = found;
        return found >= 0;
    }

    const Word &u_;
    std::size_t lo_;
    std::vector<char> ok_;
    std::unordered_map<std::uint64_t, std::int64_t> memo_;
};

} // namespace

std::optional<Factorization> find_d_decreasing(const Word &u, std::size_t d)
{
    DecreasingSearch search(u, 0, [](Letter) { return true; });
    return search.run(d);
}

std::optional<Factorization> find_d_decreasing_constrained(const Word &u, std::size_t d,
                                                           const Rational &eps,
                                                           const BigInt &first_letter_bound)
{
    check_eps(eps);
    if (d == 0)
        return Factorization(u.size(), u.size(), {});
    const std::size_t window = floor_fraction(eps, u.size());
    DecreasingSearch search(u, u.size() - window,
                            [&](Letter a) { return BigInt(a) < first_letter_bound; });
    return search.run(d);
}

namespace
{

BigInt floor_div(const BigInt &a, const BigInt &b)
{
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

/// Least integer n0 such that a n^2 + b n + c > 0 for every integer n >= n0,
/// given a > 0. Returns nothing when the quadratic has no real root.
std::optional<BigInt> past_larger_root(const BigInt &a, const BigInt &b, const BigInt &c)
{
    BigInt disc = b * b - 4 * a * c;
    if (disc < 0)
        return std::nullopt;
    // n lies strictly right of the larger root iff 2an + b > sqrt(disc).
    auto beyond = [&](const BigInt &n) {
        BigInt t = 2 * a * n + b;
        return t > 0 && t * t > disc;
    };
    BigInt n0 = floor_div(boost::multiprecision::sqrt(disc) - b, 2 * a);
    while (!beyond(n0))
        ++n0;
    while (beyond(n0 - 1))
        --n0;
    return n0;
}

BoundsResult bounds_rec(std::size_t d, const BoundSequence &b, std::uint64_t k,
                        const Rational &eps)
{
    if (d == 0)
        return {};
    BoundsResult inner = bounds_rec(d - 1, b, k, eps / 2);
    const BigInt &m1 = inner.m;
    const BigInt &n1 = inner.n;
    const std::uint64_t bm = b.at(m1);

    const BigInt p = boost::multiprecision::numerator(eps);
    const BigInt q = boost::multiprecision::denominator(eps);
    const BigInt bb = BigInt(bm) * bm;

    // (i) M2 > M1 and (ii) M2 > 8 b^2 k / eps^2, least such integer.
    BigInt m2 = std::max(BigInt(m1 + 1), BigInt(8 * bb * k * q * q / (p * p) + 1));

    // M2 * C((eps n / 2 - 1) / b, 2) - k * C(n + 1, 2), scaled by 8 b^2 q^2,
    // as a quadratic in n with integer coefficients.
    BigInt qa = m2 * p * p - 4 * BigInt(k) * bb * q * q;
    BigInt qb = -m2 * p * q * (4 + 2 * BigInt(bm)) - 4 * BigInt(k) * bb * q * q;
    BigInt qc = 4 * m2 * (1 + BigInt(bm)) * q * q;
    if (qa <= 0)
        throw std::logic_error("compute_bounds: leading coefficient not positive");

    BigInt n2 = n1 + 1;
    if (auto root = past_larger_root(qa, qb, qc))
        n2 = std::max(n2, *root);

    BoundsLevel level;
    level.depth = d;
    level.eps = eps;
    level.m1 = m1;
    level.n1 = n1;
    level.m2 = m2;
    level.n2 = n2;
    level.b_at_m1 = bm;

    BoundsResult out;
    out.m = m2;
    out.n = n2;
    out.trace = std::move(inner.trace);
    out.trace.push_back(std::move(level));
    return out;
}

} // namespace

BoundsResult compute_bounds(std::size_t d, const BoundSequence &b, std::uint64_t k,
                            const Rational &eps)
{
    check_k(k);
    check_eps(eps);
    return bounds_rec(d, b, k, eps);
}

namespace
{

struct Blocks
{
    std::size_t begin;
    std::vector<std::size_t> ends;
};

Blocks witness_rec(const Word &u, std::size_t depth, const BoundsResult &bounds)
{
    const std::size_t n = u.size();
    if (depth == 0)
        return {n, {}};
    const BoundsLevel &level = bounds.trace.at(depth - 1);

    // u = v w x with |wx| = floor(eps n) and |x| = floor(eps n / 2).
    const std::size_t wx = floor_fraction(level.eps, n);
    const std::size_t x = floor_fraction(level.eps / 2, n);
    const std::size_t w_begin = n - wx;
    const std::size_t chunk = level.b_at_m1;
    const std::size_t full_chunks = (wx - x) / chunk;

    // Each full chunk of length b_{M1} holds a letter > M1; the weight bound
    // rules out all of them being >= M2.
    std::optional<std::size_t> pick;
    for (std::size_t pos = w_begin; pos < w_begin + full_chunks * chunk; ++pos)
    {
        BigInt a(u[pos]);
        if (a >= level.m1 && a < level.m2)
        {
            pick = pos;
            break;
        }
    }
    if (!pick)
        throw std::logic_error("prop21_witness: no letter in [M1, M2) among the scanned blocks");

    Blocks rest = witness_rec(u, depth - 1, bounds);
    const std::size_t first_end = rest.ends.empty() ? n - x : rest.begin;
    Blocks out{*pick, {first_end}};
    out.ends.insert(out.ends.end(), rest.ends.begin(), rest.ends.end());
    return out;
}

} // namespace

Factorization prop21_witness(const Word &u, std::size_t d, const BoundSequence &b,
                             std::uint64_t k, const Rational &eps)
{
    BoundsResult bounds = compute_bounds(d, b, k, eps);
    if (!is_k_valid(u, k))
        throw PreconditionViolated("prop21_witness: word is not " + std::to_string(k) +
                                   "-valid");
    if (!is_b_bounded(u, b))
        throw PreconditionViolated("prop21_witness: word is not b-bounded");
    if (BigInt(u.size()) < bounds.n)
        throw PreconditionViolated("prop21_witness: length " + std::to_string(u.size()) +
                                   " is below N = " + bounds.n.str());

    Blocks blocks = witness_rec(u, d, bounds);
    Factorization f(u.size(), blocks.begin, std::move(blocks.ends));
    if (auto defect = constrained_defect(u, f, eps, bounds.m))
        throw std::logic_error("prop21_witness: constructed factorization is invalid: " +
                               *defect);
    return f;
}

OracleResult minimal_n_oracle(std::size_t d, const BoundSequence &b, std::uint64_t k,
                              std::size_t max_n, Letter max_letter,
                              const OracleOptions &options)
{
    check_k(k);
    if (!b.covers(max_letter))
        throw InsufficientBoundData("minimal_n_oracle: bound sequence does not determine b_m "
                                    "for m up to " + std::to_string(max_letter));
    const std::uint64_t radix = max_letter + 1;
    BigInt total = 0;
    for (std::size_t n = 1; n <= max_n; ++n)
        total += boost::multiprecision::pow(BigInt(radix), static_cast<unsigned>(n));
    if (total > options.budget)
        throw BudgetExceeded("minimal_n_oracle: " + total.str() +
                             " candidate words exceed the budget of " +
                             std::to_string(options.budget));

    OracleResult result;
    const unsigned threads = std::max(1u, options.threads);
    for (std::size_t n = 1; n <= max_n; ++n)
    {
        const std::uint64_t count =
            boost::multiprecision::pow(BigInt(radix), static_cast<unsigned>(n))
                .convert_to<std::uint64_t>();
        std::vector<OracleLength> partial(threads);
        auto work = [&](unsigned t) {
            const std::uint64_t lo = count * t / threads;
            const std::uint64_t hi = count * (t + 1) / threads;
            std::vector<Letter> letters(n);
            for (std::uint64_t code = lo; code < hi; ++code)
            {
                std::uint64_t c = code;
                for (std::size_t i = n; i-- > 0;)
                {
                    letters[i] = c % radix;
                    c /= radix;
                }
                Word u(letters);
                if (!is_k_valid(u, k) || !is_b_bounded(u, b))
                    continue;
                ++partial[t].valid_words;
                if (!find_d_decreasing(u, d))
                    ++partial[t].without_decreasing;
            }
        };
        if (threads == 1)
            work(0);
        else
        {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back(work, t);
            for (auto &th : pool)
                th.join();
        }
        OracleLength stats{n, 0, 0};
        for (const auto &p : partial)
        {
            stats.valid_words += p.valid_words;
            stats.without_decreasing += p.without_decreasing;
        }
        result.lengths.push_back(stats);
        if (stats.without_decreasing == 0)
        {
            result.minimal_n = n;
            break;
        }
    }
    return result;
}

} // namespace orenil::words
