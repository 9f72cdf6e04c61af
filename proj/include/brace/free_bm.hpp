#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "brace/arith.hpp"
#include "brace/hom.hpp"

namespace brace {

/// Element (n_1, ..., n_m) of B_m = Z^m, m >= 2. Coordinates are stored
/// 0-based; coord(i) gives the 1-based n_i used in the formulas.
class BmElement {
public:
    /// Inline storage for small ranks avoids a heap allocation per element.
    using Storage = boost::container::small_vector<Int, 8>;

    /// Throws Error(InvalidArgument) if fewer than two coordinates are given.
    explicit BmElement(Storage coords);
    explicit BmElement(const std::vector<Int>& coords) : BmElement(Storage(coords.begin(), coords.end())) {}
    BmElement(std::initializer_list<Int> coords) : BmElement(Storage(coords.begin(), coords.end())) {}

    static BmElement zero(std::size_t m);
    /// e_i, 1 <= i <= m.
    static BmElement unit(std::size_t m, std::size_t i);
    /// b = (1, 0, ..., 0).
    static BmElement generator(std::size_t m) { return unit(m, 1); }

    std::size_t rank() const noexcept { return coords_.size(); }
    std::span<const Int> coords() const noexcept { return {coords_.data(), coords_.size()}; }
    std::vector<Int> to_vector() const { return {coords_.begin(), coords_.end()}; }
    const Int& coord(std::size_t i) const { return coords_.at(i - 1); }
    bool is_zero() const;

    BmElement& operator+=(const BmElement& other);
    BmElement& operator-=(const BmElement& other);
    friend BmElement operator+(BmElement a, const BmElement& b) { a += b; return a; }
    friend BmElement operator-(BmElement a, const BmElement& b) { a -= b; return a; }
    BmElement operator-() const;
    /// n-fold additive multiple.
    friend BmElement operator*(const Int& n, BmElement x);

    friend bool operator==(const BmElement&, const BmElement&) = default;

    std::string to_string() const;

private:
    Storage coords_;
};

/// Throws Error(RankMismatch) unless both elements have the same rank.
void require_same_rank(const BmElement& x, const BmElement& y);

/// lambda_n(t)_i = sum_{k=0}^{i-1} binom(n_1, k) t_{i-k}.
BmElement lambda_bm(const BmElement& x, const BmElement& y);
/// (xy)_i = n_i + sum_{k=0}^{i-1} binom(n_1, k) t_{i-k}.
BmElement mul_bm(const BmElement& x, const BmElement& y);
/// x * y = lambda_x(y) - y.
BmElement star_bm(const BmElement& x, const BmElement& y);
/// (t^{-1})_j = -sum_{k=0}^{j-1} binom(-t_1, k) t_{j-k}.
BmElement inv_bm(const BmElement& x);
/// x^n by repeated multiplication (x^{-1} for negative n).
BmElement power_bm(const BmElement& x, const Int& n);

/// Left multiplication by a fixed x, with binom(n_1, k) computed once.
class BmLeft {
public:
    explicit BmLeft(const BmElement& x);
    BmElement lambda(const BmElement& y) const;
    BmElement mul(const BmElement& y) const;
    BmElement star(const BmElement& y) const;

private:
    BmElement combine(const BmElement& y, bool with_x, bool with_y) const;

    BmElement x_;
    std::vector<Int> row_;
};

/// [a_1, ..., a_m] with a_1 = a and a_{j+1} = a * a_j.
std::vector<BmElement> star_powers(const BmElement& a);
/// a_j for any j >= 1; a_j is 0 for j > m.
BmElement star_power(const BmElement& a, std::size_t j);

/// Closed form sum_{k=1}^{m-j} binom(n, k) a_{k+j} of (na) * a_j, any integer n.
/// Throws Error(InvalidArgument) unless 1 <= j <= m.
BmElement na_star_aj(const Int& n, std::size_t j, const BmElement& a);

/// Term r of the left series of B_m: elements whose coordinates 1..r-1 vanish
/// for r <= m, and {0} for r > m.
class Filtration {
public:
    Filtration(std::int64_t r, std::size_t m);

    std::int64_t r() const noexcept { return r_; }
    std::size_t m() const noexcept { return m_; }
    bool is_zero_set() const noexcept { return r_ > static_cast<std::int64_t>(m_); }
    bool is_everything() const noexcept { return r_ == 1; }
    bool contains(const BmElement& x) const;
    /// Z-basis e_r, ..., e_m (empty for the zero set).
    std::vector<BmElement> basis() const;
    std::string describe() const;

private:
    std::int64_t r_;
    std::size_t m_;
};

/// Throws Error(InvalidArgument) for r < 1 or m < 2.
Filtration filtration(std::int64_t r, std::size_t m);

struct BmDomain {
    using Element = BmElement;
    std::size_t m;

    BmElement zero() const { return BmElement::zero(m); }
    BmElement add(const BmElement& a, const BmElement& b) const { return a + b; }
    BmLeft left(const BmElement& x) const { return BmLeft(x); }
    /// Every element of [-range, range]^m, then random_extra random elements
    /// drawn from the same box.
    std::vector<BmElement> sample(const SampleSpec& spec) const;
    std::string describe() const { return "free brace B_" + std::to_string(m); }
    std::string format(const BmElement& x) const { return x.to_string(); }
};

/// The homomorphism B_m -> target, (n_1..n_m) -> sum_k n_k a_k with a_k the
/// star powers of a in the target. Requires A^(3) = {0} and A^(m+1) = {0};
/// Error(PreconditionFailed) names the condition that fails.
BraceHom<BmDomain> hom_from_Bm(std::shared_ptr<const FiniteBrace> target, Index a, std::size_t m);

} // namespace brace
