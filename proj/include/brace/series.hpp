#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "brace/finite_brace.hpp"
#include "brace/lambda_builder.hpp"

namespace brace {

/// Additive subgroup generated by { x * y : x in xs, y in ys }.
AdditiveSubgroup star_subgroup(const FiniteBrace& brace, std::span<const Index> xs, std::span<const Index> ys);
AdditiveSubgroup star_subgroup(const FiniteBrace& brace, const AdditiveSubgroup& xs, const AdditiveSubgroup& ys);

/// A^(1) = A, A^(r+1) = A^(r) * A, stopping before the first repeated term.
std::vector<AdditiveSubgroup> right_series(const FiniteBrace& brace);
/// A^1 = A, A^(r+1) = A * A^r, stopping before the first repeated term.
std::vector<AdditiveSubgroup> left_series(const FiniteBrace& brace);
/// Ker(lambda).
AdditiveSubgroup socle(const FiniteBrace& brace);

/// Least m with term m+1 trivial and term m nontrivial; nullopt if the series
/// stalls above {0}. A brace of order 1 has class 0.
std::optional<int> nilpotency_class(const std::vector<AdditiveSubgroup>& series);

struct SeriesReport {
    std::vector<AdditiveSubgroup> right_series;
    std::vector<AdditiveSubgroup> left_series;
    std::optional<int> right_class;
    std::optional<int> left_class;
    AdditiveSubgroup socle;
};

/// Requires a valid brace (throws Error(AxiomFailure) otherwise).
SeriesReport analyze_series(const FiniteBrace& brace);

/// Smallest subset containing gens closed under +, additive negation,
/// multiplication and multiplicative inverse. An empty generator set gives {0}.
AdditiveSubgroup subbrace_generated(const FiniteBrace& brace, std::span<const Index> gens);

struct EnumerationResult {
    GroupSignature signature;
    /// Generator-image assignments that passed the order and commutation
    /// checks and were extended to a full action.
    std::uint64_t candidates_scanned = 0;
    std::vector<LambdaAction> actions;
    /// Built braces, deduplicated by literal table equality, in discovery order.
    std::vector<FiniteBrace> braces;
};

inline constexpr std::size_t kDefaultEnumerationCap = 16;

/// Every action of (G,+) on itself by automorphisms with
/// lambda_{lambda_y(x)} = lambda_x, for G given by signature. Images of the
/// cyclic generators are chosen in Aut(G) (each of order dividing its
/// factor, pairwise commuting), extended by the homomorphism law, filtered by
/// invariance and finally checked with validate_action.
/// Throws Error(CapExceeded) when the group order exceeds cap.
EnumerationResult enumerate_actions(const GroupSignature& signature, std::size_t cap = kDefaultEnumerationCap);

/// Automorphisms of the group as image lists, identity first.
std::vector<Permutation> automorphisms(const GroupSignature& signature);

} // namespace brace
