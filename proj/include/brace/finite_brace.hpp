#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "brace/arith.hpp"

namespace brace {

/// Dense element label 0..order-1. Label 0 is the shared identity.
using Index = std::uint32_t;

/// Image list of a map on the carrier: perm[x] is the image of x.
using Permutation = std::vector<Index>;

/// Square operation table over 0..order-1.
class Table {
public:
    Table() = default;
    explicit Table(std::size_t order) : order_(order), cells_(order * order, 0) {}

    /// Validates shape (order x order) and range; throws Error(MalformedTable).
    static Table from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t order() const noexcept { return order_; }
    Index operator()(Index a, Index b) const noexcept { return cells_[a * order_ + b]; }
    Index& at(Index a, Index b) noexcept { return cells_[a * order_ + b]; }
    std::span<const Index> row(Index a) const noexcept
    {
        return {cells_.data() + a * order_, order_};
    }

    /// Table of the same operation after renaming every element x to perm[x].
    Table relabeled(const Permutation& perm) const;

    std::vector<std::vector<std::int64_t>> rows() const;

    friend bool operator==(const Table&, const Table&) = default;
    friend auto operator<=>(const Table&, const Table&) = default;

private:
    std::size_t order_ = 0;
    std::vector<Index> cells_;
};

/// Finite left brace candidate backed by explicit addition and
/// multiplication tables. Construction only checks the table shapes; the
/// brace laws are checked by verify_axioms. If the addition table has a
/// neutral element other than 0, the labels are swapped so that it becomes 0.
class FiniteBrace {
public:
    FiniteBrace(Table add, Table mul);

    /// The brace with multiplication equal to addition.
    static FiniteBrace trivial(const Table& add);

    std::size_t order() const noexcept { return add_.order(); }
    Index identity() const noexcept { return 0; }
    const Table& add_table() const noexcept { return add_; }
    const Table& mul_table() const noexcept { return mul_; }

    Index add(Index a, Index b) const;
    Index mul(Index a, Index b) const;
    Index neg(Index a) const;
    Index sub(Index a, Index b) const { return add(a, neg(b)); }

    /// Multiplicative inverse, read off the multiplication table.
    Index inverse(Index a) const;

    /// lambda_a(b) = -a + ab.
    Index lambda(Index a, Index b) const { return add(neg(a), mul(a, b)); }
    Permutation lambda_map(Index a) const;

    /// a * b = lambda_a(b) - b.
    Index star(Index a, Index b) const { return sub(lambda(a, b), b); }

    /// 0, a, 2a, ... up to (but excluding) the first return to 0.
    std::vector<Index> multiples(Index a) const;
    /// n-fold sum of a (negative n uses the additive inverse).
    Index multiple(Index a, const Int& n) const;
    /// a^n in the multiplicative group.
    Index power(Index a, const Int& n) const;

    bool has_negatives() const noexcept { return negatives_ok_; }
    bool has_inverses() const noexcept { return inverses_ok_; }

    void check_index(Index a) const;

    friend bool operator==(const FiniteBrace& x, const FiniteBrace& y)
    {
        return x.add_ == y.add_ && x.mul_ == y.mul_;
    }

private:
    static constexpr Index kNone = static_cast<Index>(-1);

    Table add_;
    Table mul_;
    std::vector<Index> neg_;
    std::vector<Index> inv_;
    bool negatives_ok_ = false;
    bool inverses_ok_ = false;
};

/// Additive subgroup of a finite brace, stored as a sorted member list.
class AdditiveSubgroup {
public:
    AdditiveSubgroup() = default;
    explicit AdditiveSubgroup(std::vector<Index> members);

    const std::vector<Index>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(Index a) const;
    bool is_trivial() const noexcept { return members_.size() <= 1; }
    bool is_subset_of(const AdditiveSubgroup& other) const;

    friend bool operator==(const AdditiveSubgroup&, const AdditiveSubgroup&) = default;

private:
    std::vector<Index> members_;
};

/// Subgroup of (A,+) generated by gens, by breadth-first closure under addition.
AdditiveSubgroup additive_closure(const FiniteBrace& brace, std::span<const Index> gens);

AdditiveSubgroup whole(const FiniteBrace& brace);

} // namespace brace
