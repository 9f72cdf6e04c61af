#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "brace/axioms.hpp"
#include "brace/finite_brace.hpp"

namespace brace {

/// A finite abelian group Z/n_1 x ... x Z/n_k. Elements are encoded in mixed
/// radix with the first factor least significant, so 0 is the identity and
/// the i-th factor's generator has index n_1 * ... * n_{i-1}.
struct GroupSignature {
    std::vector<std::uint32_t> moduli;

    /// Parses "4", "2x2", "4x2"; every factor must be at least 2.
    static GroupSignature parse(std::string_view text);

    std::size_t order() const;
    std::string to_string() const;
    std::vector<std::uint32_t> digits(Index x) const;
    Index encode(const std::vector<std::uint32_t>& digits) const;
    Index generator(std::size_t factor) const;
};

/// Addition table of the group with the given signature.
Table cyclic_product_table(const GroupSignature& signature);

/// An abelian group together with a map x -> lambda_x into maps of the group.
/// Row x of lambda_table is the image list of lambda_x. Shapes are checked on
/// construction; the action laws are checked by validate_action.
class LambdaAction {
public:
    LambdaAction(Table add, std::vector<Permutation> lambda);

    std::size_t order() const noexcept { return add_.order(); }
    const Table& add_table() const noexcept { return add_; }
    const std::vector<Permutation>& lambda_table() const noexcept { return lambda_; }
    Index apply(Index x, Index y) const noexcept { return lambda_[x][y]; }

    friend bool operator==(const LambdaAction&, const LambdaAction&) = default;

private:
    Table add_;
    std::vector<Permutation> lambda_;
};

struct ActionReport {
    LawCheck additive_group{"additive_group"};
    LawCheck automorphisms{"automorphisms"};
    LawCheck additive_homomorphism{"additive_homomorphism"};
    LawCheck invariance{"invariance"};

    bool ok() const
    {
        return additive_group.holds && automorphisms.holds && additive_homomorphism.holds && invariance.holds;
    }
    std::string summary() const;
};

/// Exhaustive check that each lambda_x is an automorphism, that
/// lambda_{x+y} = lambda_x o lambda_y, and that lambda_{lambda_y(x)} = lambda_x.
ActionReport validate_action(const LambdaAction& action);

/// Brace with product xy = x + lambda_x(y). Throws Error(PreconditionFailed)
/// if the action does not validate.
FiniteBrace build_brace(const LambdaAction& action);

/// The lambda map of a brace, read back as an action of (A,+) on itself.
LambdaAction extract_action(const FiniteBrace& brace);

/// Truth of
///   [0] lambda_{a+b} = lambda_a o lambda_b
///   [1] lambda_{ab}  = lambda_a o lambda_b
///   [2] lambda_{lambda_a(b)} = lambda_b
/// over all pairs. Any two of them imply the third.
std::array<bool, 3> two_of_three(const FiniteBrace& brace);

} // namespace brace
