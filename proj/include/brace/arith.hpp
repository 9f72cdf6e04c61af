#pragma once

#include <cstdint>
#include <climits>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace brace {

/// Exact signed integer used for every coefficient and coordinate.
using Int = boost::multiprecision::cpp_int;

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k! for any integer n.
///
/// Computed as a falling-factorial product, dividing by (i+1) after each
/// factor; every partial quotient is itself binom(n, i+1), so the division
/// is exact. Throws Error(InvalidArgument) when k < 0.
Int binom(const Int& n, std::int64_t k);

/// binom(n, 0), binom(n, 1), ..., binom(n, count-1).
std::vector<Int> binom_row(const Int& n, std::size_t count);

/// (-1)^k as an Int.
inline Int sign_power(std::int64_t k) { return (k % 2 == 0) ? Int(1) : Int(-1); }

/// Value of x if it fits in int64.
std::optional<std::int64_t> to_int64(const Int& x);

/// Least non-negative residue of x modulo a positive modulus.
std::int64_t mod_floor(const Int& x, std::int64_t modulus);

Int parse_int(const std::string& text);

/// Single-word value of x, if it has one. Used by the hot paths below.
inline bool as_word(const Int& x, std::int64_t& out)
{
    if (x.backend().size() != 1)
        return false;
    const auto limb = static_cast<std::uint64_t>(x.backend().limbs()[0]);
    if (limb > static_cast<std::uint64_t>(INT64_MAX))
        return false;
    out = x.sign() < 0 ? -static_cast<std::int64_t>(limb) : static_cast<std::int64_t>(limb);
    return true;
}

/// acc += b, in machine arithmetic when nothing overflows.
inline void add_into(Int& acc, const Int& b)
{
    std::int64_t x, y, r;
    if (as_word(acc, x) && as_word(b, y) && !__builtin_add_overflow(x, y, &r))
        acc = r;
    else
        acc += b;
}

/// acc -= b, in machine arithmetic when nothing overflows.
inline void sub_into(Int& acc, const Int& b)
{
    std::int64_t x, y, r;
    if (as_word(acc, x) && as_word(b, y) && !__builtin_sub_overflow(x, y, &r))
        acc = r;
    else
        acc -= b;
}

/// acc += b * c, in machine arithmetic when nothing overflows.
inline void add_product_into(Int& acc, const Int& b, const Int& c)
{
    std::int64_t x, y, z, p, r;
    if (as_word(acc, x) && as_word(b, y) && as_word(c, z) && !__builtin_mul_overflow(y, z, &p) &&
        !__builtin_add_overflow(x, p, &r))
        acc = r;
    else
        acc += b * c;
}

} // namespace brace
