#include "brace/finite_brace.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <string>

#include "brace/error.hpp"

namespace brace {

Table Table::from_rows(const std::vector<std::vector<std::int64_t>>& rows)
{
    const std::size_t n = rows.size();
    if (n == 0)
        throw Error(ErrorCode::MalformedTable, "table is empty");
    Table table(n);
    for (std::size_t a = 0; a < n; ++a) {
        if (rows[a].size() != n)
            throw Error(ErrorCode::MalformedTable, "table row " + std::to_string(a) + " has length "
                                                       + std::to_string(rows[a].size()) + ", expected "
                                                       + std::to_string(n));
        for (std::size_t b = 0; b < n; ++b) {
            const auto v = rows[a][b];
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw Error(ErrorCode::MalformedTable, "table entry [" + std::to_string(a) + "]["
                                                           + std::to_string(b) + "] = " + std::to_string(v)
                                                           + " is out of range");
            table.at(static_cast<Index>(a), static_cast<Index>(b)) = static_cast<Index>(v);
        }
    }
    return table;
}

Table Table::relabeled(const Permutation& perm) const
{
    Table out(order_);
    for (Index a = 0; a < order_; ++a)
        for (Index b = 0; b < order_; ++b)
            out.at(perm[a], perm[b]) = perm[(*this)(a, b)];
    return out;
}

std::vector<std::vector<std::int64_t>> Table::rows() const
{
    std::vector<std::vector<std::int64_t>> out(order_, std::vector<std::int64_t>(order_));
    for (Index a = 0; a < order_; ++a)
        for (Index b = 0; b < order_; ++b)
            out[a][b] = (*this)(a, b);
    return out;
}

namespace {

std::optional<Index> find_neutral(const Table& t)
{
    const auto n = static_cast<Index>(t.order());
    for (Index e = 0; e < n; ++e) {
        bool neutral = true;
        for (Index x = 0; x < n && neutral; ++x)
            neutral = t(e, x) == x && t(x, e) == x;
        if (neutral)
            return e;
    }
    return std::nullopt;
}

// Two-sided inverses with respect to the neutral element 0.
std::vector<Index> inverses_of(const Table& t, Index none)
{
    const auto n = static_cast<Index>(t.order());
    std::vector<Index> inv(n, none);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (t(a, b) == 0 && t(b, a) == 0) {
                inv[a] = b;
                break;
            }
    return inv;
}

} // namespace

FiniteBrace::FiniteBrace(Table add, Table mul) : add_(std::move(add)), mul_(std::move(mul))
{
    if (add_.order() == 0)
        throw Error(ErrorCode::MalformedTable, "brace order must be positive");
    if (add_.order() != mul_.order())
        throw Error(ErrorCode::MalformedTable, "addition and multiplication tables differ in order");

    if (auto e = find_neutral(add_); e && *e != 0) {
        Permutation swap(order());
        for (Index i = 0; i < swap.size(); ++i)
            swap[i] = i;
        std::swap(swap[0], swap[*e]);
        add_ = add_.relabeled(swap);
        mul_ = mul_.relabeled(swap);
    }

    neg_ = inverses_of(add_, kNone);
    inv_ = inverses_of(mul_, kNone);
    negatives_ok_ = std::ranges::none_of(neg_, [](Index v) { return v == kNone; });
    inverses_ok_ = std::ranges::none_of(inv_, [](Index v) { return v == kNone; });
}

FiniteBrace FiniteBrace::trivial(const Table& add) { return FiniteBrace(add, add); }

void FiniteBrace::check_index(Index a) const
{
    if (a >= order())
        throw Error(ErrorCode::InvalidArgument,
                    "element index " + std::to_string(a) + " out of range for order " + std::to_string(order()));
}

Index FiniteBrace::add(Index a, Index b) const
{
    check_index(a);
    check_index(b);
    return add_(a, b);
}

Index FiniteBrace::mul(Index a, Index b) const
{
    check_index(a);
    check_index(b);
    return mul_(a, b);
}

Index FiniteBrace::neg(Index a) const
{
    check_index(a);
    if (neg_[a] == kNone)
        throw Error(ErrorCode::AxiomFailure, "element " + std::to_string(a) + " has no additive inverse");
    return neg_[a];
}

Index FiniteBrace::inverse(Index a) const
{
    check_index(a);
    if (inv_[a] == kNone)
        throw Error(ErrorCode::AxiomFailure, "element " + std::to_string(a) + " has no multiplicative inverse");
    return inv_[a];
}

Permutation FiniteBrace::lambda_map(Index a) const
{
    Permutation out(order());
    for (Index b = 0; b < order(); ++b)
        out[b] = lambda(a, b);
    return out;
}

std::vector<Index> FiniteBrace::multiples(Index a) const
{
    check_index(a);
    std::vector<Index> cycle{0};
    for (Index step = a; step != 0; step = add_(step, a)) {
        cycle.push_back(step);
        if (cycle.size() > order())
            throw Error(ErrorCode::AxiomFailure, "additive multiples of " + std::to_string(a) + " never reach 0");
    }
    return cycle;
}

Index FiniteBrace::multiple(Index a, const Int& n) const
{
    const auto cycle = multiples(a);
    return cycle[static_cast<std::size_t>(mod_floor(n, static_cast<std::int64_t>(cycle.size())))];
}

Index FiniteBrace::power(Index a, const Int& n) const
{
    check_index(a);
    Index base = n < 0 ? inverse(a) : a;
    Int count = n < 0 ? Int(-n) : n;
    Index step = base;
    std::size_t period = 1;
    while (step != 0) {
        step = mul_(step, base);
        ++period;
        if (period > order())
            throw Error(ErrorCode::AxiomFailure, "multiplicative powers of " + std::to_string(a) + " never reach 0");
    }
    auto reps = static_cast<std::size_t>(count % period);
    Index acc = 0;
    for (std::size_t i = 0; i < reps; ++i)
        acc = mul_(acc, base);
    return acc;
}

AdditiveSubgroup::AdditiveSubgroup(std::vector<Index> members) : members_(std::move(members))
{
    std::ranges::sort(members_);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool AdditiveSubgroup::contains(Index a) const { return std::ranges::binary_search(members_, a); }

bool AdditiveSubgroup::is_subset_of(const AdditiveSubgroup& other) const
{
    return std::ranges::includes(other.members_, members_);
}

AdditiveSubgroup additive_closure(const FiniteBrace& brace, std::span<const Index> gens)
{
    std::vector<char> seen(brace.order(), 0);
    std::vector<Index> distinct;
    for (Index g : gens) {
        brace.check_index(g);
        if (g != 0 && !seen[g]) {
            seen[g] = 1;
            distinct.push_back(g);
        }
    }
    std::fill(seen.begin(), seen.end(), 0);
    std::deque<Index> queue{0};
    seen[0] = 1;
    std::vector<Index> members;
    while (!queue.empty()) {
        Index x = queue.front();
        queue.pop_front();
        members.push_back(x);
        for (Index g : distinct) {
            Index y = brace.add_table()(x, g);
            if (!seen[y]) {
                seen[y] = 1;
                queue.push_back(y);
            }
        }
    }
    return AdditiveSubgroup(std::move(members));
}

AdditiveSubgroup whole(const FiniteBrace& brace)
{
    std::vector<Index> all(brace.order());
    for (Index i = 0; i < all.size(); ++i)
        all[i] = i;
    return AdditiveSubgroup(std::move(all));
}

} // namespace brace
