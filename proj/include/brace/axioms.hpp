#pragma once

#include <array>
#include <string>
#include <vector>

#include "brace/finite_brace.hpp"

namespace brace {

/// Outcome of one exhaustively checked law. On failure, witness holds the
/// first offending tuple in lexicographic order.
struct LawCheck {
    std::string name;
    bool holds = true;
    std::vector<Index> witness;
    std::string detail;

    void fail(std::vector<Index> w, std::string why)
    {
        if (!holds)
            return;
        holds = false;
        witness = std::move(w);
        detail = std::move(why);
    }
};

struct AxiomReport {
    LawCheck additive_group{"additive_group"};
    LawCheck multiplicative_group{"multiplicative_group"};
    LawCheck distributivity{"distributivity"};
    LawCheck lambda_homomorphism{"lambda_homomorphism"};

    bool ok() const
    {
        return additive_group.holds && multiplicative_group.holds && distributivity.holds
               && lambda_homomorphism.holds;
    }
    std::string summary() const;
};

/// Checks every brace law on all pairs and triples. Every law is checked
/// even after an earlier one fails.
AxiomReport verify_axioms(const FiniteBrace& brace);

/// Throws Error(AxiomFailure) with the report summary unless all laws hold.
void require_brace(const FiniteBrace& brace);

/// The five characterisations of right nilpotency class at most two, each
/// evaluated on its own by brute force:
///   [0] A^(3) = {0}
///   [1] z*a = 0 for z in A^(2), a in A
///   [2] A^(2) is contained in Ker(lambda)
///   [3] lambda_{a+b} = lambda_a o lambda_b
///   [4] lambda_{lambda_a(b)} = lambda_b
struct Rn2Conditions {
    std::array<bool, 5> holds{};

    bool all() const;
    bool all_equal() const;
};

Rn2Conditions check_rn2_conditions(const FiniteBrace& brace);

} // namespace brace
