#include "brace/arith.hpp"

#include <limits>

#include "brace/error.hpp"

namespace brace {

Int binom(const Int& n, std::int64_t k)
{
    if (k < 0)
        throw Error(ErrorCode::InvalidArgument, "binom: negative lower index " + std::to_string(k));
    Int result = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
        if (result == 0)
            break;
    }
    return result;
}

std::vector<Int> binom_row(const Int& n, std::size_t count)
{
    std::vector<Int> row;
    row.reserve(count);
    Int current = 1;
    for (std::size_t k = 0; k < count; ++k) {
        row.push_back(current);
        current *= n - static_cast<std::int64_t>(k);
        current /= static_cast<std::int64_t>(k + 1);
    }
    return row;
}

std::optional<std::int64_t> to_int64(const Int& x)
{
    if (x < std::numeric_limits<std::int64_t>::min() || x > std::numeric_limits<std::int64_t>::max())
        return std::nullopt;
    return static_cast<std::int64_t>(x);
}

std::int64_t mod_floor(const Int& x, std::int64_t modulus)
{
    if (x.backend().size() == 1) {
        // Single limb: reduce in machine arithmetic.
        const auto mag = static_cast<std::uint64_t>(x.backend().limbs()[0]) % static_cast<std::uint64_t>(modulus);
        const auto r = static_cast<std::int64_t>(mag);
        return (x.sign() < 0 && r != 0) ? modulus - r : r;
    }
    Int r = x % modulus;
    if (r < 0)
        r += modulus;
    return static_cast<std::int64_t>(r);
}

Int parse_int(const std::string& text)
{
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
        ++pos;
    if (pos == text.size())
        throw Error(ErrorCode::InvalidArgument, "not an integer: '" + text + "'");
    for (std::size_t i = pos; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw Error(ErrorCode::InvalidArgument, "not an integer: '" + text + "'");
    return Int(text[0] == '+' ? text.substr(1) : text);
}

} // namespace brace
