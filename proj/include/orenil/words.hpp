#ifndef ORENIL_WORDS_HPP
#define ORENIL_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orenil/scalar.hpp"

/// Combinatorics on words over the alphabet of natural numbers: weight,
/// k-validity, b-boundedness, the prefix-incomparable lexicographic order and
/// d-decreasing factorizations, together with the computable constants that
/// force a d-decreasing subword and a constructive witness for them.
namespace orenil::words
{

using Letter = std::uint64_t;
using LetterSpan = std::span<const Letter>;

/// Nonempty finite sequence of natural numbers. Positions are 0-based.
class Word
{
public:
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

    std::size_t size() const noexcept { return letters_.size(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    LetterSpan letters() const noexcept { return letters_; }
    Letter max_letter() const;

    friend bool operator==(const Word &, const Word &) = default;

private:
    std::vector<Letter> letters_;
};

/// Parses "3,2,1". Errors name the offending character position.
Word parse_word(std::string_view text);
/// "(3,2,1)"; the empty span renders as "()".
std::string to_string(LetterSpan letters);

enum class Ordering
{
    Equal,
    Less,
    Greater,
    Incomparable
};

std::string to_string(Ordering o);

/// Prefix-related words (other than equal ones) are incomparable; otherwise the
/// first differing letter decides.
Ordering compare(LetterSpan u, LetterSpan v);

/// min over permutations s of sum_i (n + 1 - i) * u_s(i), via sorting.
BigInt weight(LetterSpan u);
inline BigInt weight(const Word &u) { return weight(u.letters()); }

/// Enumerates all n! arrangements. Refuses words longer than `cap`.
BigInt weight_bruteforce(const Word &u, std::size_t cap = 8);

/// weight(u) <= k * C(n + 1, 2).
bool is_k_valid(LetterSpan u, std::uint64_t k);
inline bool is_k_valid(const Word &u, std::uint64_t k) { return is_k_valid(u.letters(), k); }

/// Finite prefix b_0..b_L of a bound sequence. With the tail rule enabled,
/// b_m = b_L for every m > L; without it such queries throw
/// InsufficientBoundData.
class BoundSequence
{
public:
    BoundSequence(std::vector<std::uint64_t> prefix, bool tail_rule);

    static BoundSequence constant(std::uint64_t value) { return BoundSequence({value}, true); }

    std::uint64_t at(std::uint64_t m) const;
    std::uint64_t at(const BigInt &m) const;

    const std::vector<std::uint64_t> &prefix() const noexcept { return prefix_; }
    bool tail_rule() const noexcept { return tail_rule_; }
    /// Whether at(m) is defined for every m <= bound.
    bool covers(std::uint64_t bound) const noexcept
    {
        return tail_rule_ || bound < prefix_.size();
    }

    /// Smallest entry over the index range [lo, hi].
    std::uint64_t min_over(std::uint64_t lo, std::uint64_t hi) const;

private:
    std::vector<std::uint64_t> prefix_;
    bool tail_rule_;
};

/// For every m <= max letter, every subword of length b_m has a letter > m.
bool is_b_bounded(LetterSpan u, const BoundSequence &b);
inline bool is_b_bounded(const Word &u, const BoundSequence &b)
{
    return is_b_bounded(u.letters(), b);
}

struct IndexRange
{
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
    friend bool operator==(const IndexRange &, const IndexRange &) = default;
};

/// u = v w_1 ... w_d x recorded as index ranges into u. The blocks are
/// contiguous: block i ends where block i + 1 begins.
class Factorization
{
public:
    Factorization(std::size_t source_length, std::size_t first_block_begin,
                  std::vector<std::size_t> block_ends);

    std::size_t source_length() const noexcept { return length_; }
    std::size_t block_count() const noexcept { return ends_.size(); }
    IndexRange prefix() const noexcept { return {0, begin_}; }
    IndexRange block(std::size_t i) const;
    IndexRange suffix() const noexcept
    {
        return {ends_.empty() ? begin_ : ends_.back(), length_};
    }

    friend bool operator==(const Factorization &, const Factorization &) = default;

private:
    std::size_t length_;
    std::size_t begin_;
    std::vector<std::size_t> ends_;
};

inline LetterSpan slice(const Word &u, IndexRange r)
{
    return u.letters().subspan(r.begin, r.size());
}

/// Describes the first broken invariant (reconstruction, nonempty blocks,
/// strictly decreasing blocks), or nothing if the factorization is sound.
std::optional<std::string> factorization_defect(const Word &u, const Factorization &f);

/// Adds the constraints of the bound: blocks inside the final
/// floor(eps * n) letters, first letter of each block below `first_letter_bound`.
std::optional<std::string> constrained_defect(const Word &u, const Factorization &f,
                                              const Rational &eps,
                                              const BigInt &first_letter_bound);

/// floor(eps * n) for exact eps.
std::size_t floor_fraction(const Rational &eps, std::size_t n);

/// Searches all factorizations with d decreasing blocks. Ties are broken from
/// the right: shortest suffix first, then the shortest last block, then the
/// shortest block before it, and so on.
std::optional<Factorization> find_d_decreasing(const Word &u, std::size_t d);

std::optional<Factorization> find_d_decreasing_constrained(const Word &u, std::size_t d,
                                                           const Rational &eps,
                                                           const BigInt &first_letter_bound);

struct BoundsLevel
{
    std::size_t depth = 0;
    Rational eps;
    BigInt m1;
    BigInt n1;
    BigInt m2;
    BigInt n2;
    std::uint64_t b_at_m1 = 0;
};

struct BoundsResult
{
    BigInt m = 1;
    BigInt n = 1;
    /// Innermost level first; trace[i].depth == i + 1.
    std::vector<BoundsLevel> trace;
};

/// Constants (M, N): every k-valid b-bounded word of length >= N has a
/// d-decreasing subword inside its last floor(eps * n) letters whose blocks
/// start with letters < M.
BoundsResult compute_bounds(std::size_t d, const BoundSequence &b, std::uint64_t k,
                            const Rational &eps);

/// Builds the factorization promised by compute_bounds by the recursive
/// block-scanning construction. Throws PreconditionViolated if u is not
/// k-valid, not b-bounded, or shorter than N.
Factorization prop21_witness(const Word &u, std::size_t d, const BoundSequence &b,
                             std::uint64_t k, const Rational &eps);

struct OracleOptions
{
    /// Upper limit on the number of candidate words enumerated in total.
    std::uint64_t budget = 50'000'000;
    unsigned threads = 1;
};

struct OracleLength
{
    std::size_t length = 0;
    std::uint64_t valid_words = 0;
    std::uint64_t without_decreasing = 0;
};

struct OracleResult
{
    std::optional<std::size_t> minimal_n;
    std::vector<OracleLength> lengths;
};

/// Exhaustive search for the least n <= max_n such that every k-valid,
/// b-bounded word of length n over {0..max_letter} has a d-decreasing subword.
OracleResult minimal_n_oracle(std::size_t d, const BoundSequence &b, std::uint64_t k,
                              std::size_t max_n, Letter max_letter,
                              const OracleOptions &options = {});

} // namespace orenil::words

#endif // ORENIL_WORDS_HPP
