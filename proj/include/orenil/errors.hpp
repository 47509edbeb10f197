#ifndef ORENIL_ERRORS_HPP
#define ORENIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orenil
{

/// Base class for every error the library raises on bad input or violated
/// preconditions. Internal inconsistencies use std::logic_error instead.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A bound sequence was asked for an entry its prefix and tail rule cannot settle.
class InsufficientBoundData : public Error
{
public:
    using Error::Error;
};

class PreconditionViolated : public Error
{
public:
    using Error::Error;
};

/// An exhaustive search or span computation would exceed its configured budget.
class BudgetExceeded : public Error
{
public:
    using Error::Error;
};

class MalformedInput : public Error
{
public:
    using Error::Error;
};

class RankMismatch : public Error
{
public:
    using Error::Error;
};

class AlgebraError : public Error
{
public:
    using Error::Error;
};

class LeibnizError : public Error
{
public:
    using Error::Error;
};

class NotNilpotent : public Error
{
public:
    NotNilpotent(std::size_t level, const std::string &what)
        : Error(what), level_(level)
    {
    }

    /// First level n at which span(T_n) failed to be nilpotent.
    std::size_t level() const noexcept { return level_; }

private:
    std::size_t level_;
};

class IdentityFails : public Error
{
public:
    using Error::Error;
};

class ExponentTooLarge : public Error
{
public:
    using Error::Error;
};

class VerificationFailed : public Error
{
public:
    using Error::Error;
};

} // namespace orenil

#endif // ORENIL_ERRORS_HPP
