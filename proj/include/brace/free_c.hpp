#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/flat_map.hpp>

#include "brace/arith.hpp"
#include "brace/hom.hpp"

namespace brace {

/// Element sum_i x_i c_i of the free abelian group on {c_i : i in Z}, kept in
/// canonical sparse form (no zero coefficients, ascending indices).
class FreeCElement {
public:
    /// Sorted by index; contiguous storage keeps shifts and sums cheap.
    using Coeffs = boost::container::flat_map<Int, Int>;

    FreeCElement() = default;
    explicit FreeCElement(Coeffs coeffs);
    FreeCElement(std::initializer_list<std::pair<const Int, Int>> terms)
        : FreeCElement(Coeffs(terms.begin(), terms.end()))
    {
    }

    /// The basis element c_i.
    static FreeCElement basis(const Int& i);

    const Coeffs& coeffs() const noexcept { return coeffs_; }
    Int coeff(const Int& i) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Every index moved up by t.
    FreeCElement shifted(const Int& t) const;

    FreeCElement& operator+=(const FreeCElement& other);
    FreeCElement& operator-=(const FreeCElement& other);
    friend FreeCElement operator+(FreeCElement a, const FreeCElement& b) { a += b; return a; }
    friend FreeCElement operator-(FreeCElement a, const FreeCElement& b) { a -= b; return a; }
    FreeCElement operator-() const;
    friend FreeCElement operator*(const Int& n, const FreeCElement& x);

    friend bool operator==(const FreeCElement&, const FreeCElement&) = default;

    std::string to_string() const;

private:
    Coeffs coeffs_;
};

/// Coefficient sum; lambda_x shifts indices by this amount.
Int weight(const FreeCElement& x);

/// lambda_x(y): y with every index shifted by weight(x).
FreeCElement lambda_c(const FreeCElement& x, const FreeCElement& y);
/// xy = x + lambda_x(y).
FreeCElement mul_c(const FreeCElement& x, const FreeCElement& y);
/// x * y = lambda_x(y) - y; always of weight 0.
FreeCElement star_c(const FreeCElement& x, const FreeCElement& y);
/// x^{-1} = -lambda_x^{-1}(x), i.e. y_i = -x_{i + weight(x)}.
FreeCElement inv_c(const FreeCElement& x);
/// x^n for any integer n.
FreeCElement power_c(const FreeCElement& x, const Int& n);

/// s_1 = c_0, s_j = c_0 * s_{j-1}, by iterating star_c. Throws for j < 1.
FreeCElement s_sequence(std::int64_t j);
/// sum_{k=0}^{j-1} (-1)^k binom(j-1,k) c_{j-k-1}. Throws for j < 1.
FreeCElement s_closed_form(std::int64_t j);

/// Membership in D = { x : weight(x) = 0 } = C * C.
bool is_in_D(const FreeCElement& x);
/// Coefficients (i, x_i), i != 0, with x = sum_i x_i (c_0^i * c_0) = sum_i x_i (c_i - c_0).
/// Throws Error(InvalidArgument) if weight(x) != 0.
std::vector<std::pair<Int, Int>> express_in_star_generators(const FreeCElement& x);
/// sum_i x_i (c_0^i * c_0), computed with mul_c and star_c.
FreeCElement from_star_generators(const std::vector<std::pair<Int, Int>>& terms);

struct FreeCDomain {
    using Element = FreeCElement;

    struct Left {
        FreeCElement x;
        Int shift;
        FreeCElement mul(const FreeCElement& y) const { return x + y.shifted(shift); }
        FreeCElement star(const FreeCElement& y) const { return y.shifted(shift) - y; }
    };

    FreeCElement zero() const { return {}; }
    FreeCElement add(const FreeCElement& a, const FreeCElement& b) const { return a + b; }
    Left left(const FreeCElement& x) const { return {x, weight(x)}; }
    /// Every element with support in [-range, range], at most max_terms
    /// nonzero terms and coefficients in [-coeff_bound, coeff_bound], then
    /// random_extra dense random elements in the same box.
    std::vector<FreeCElement> sample(const SampleSpec& spec) const;
    std::string describe() const { return "free brace C"; }
    std::string format(const FreeCElement& x) const { return x.to_string(); }
};

/// The homomorphism C -> target sending sum x_i c_i to sum x_i b_i, where
/// b_i = lambda_{b^i}(b). Requires target to be a brace with A^(3) = {0}
/// (Error(PreconditionFailed) otherwise).
BraceHom<FreeCDomain> hom_from_C(std::shared_ptr<const FiniteBrace> target, Index b);

} // namespace brace
