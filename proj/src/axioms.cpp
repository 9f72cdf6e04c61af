#include "brace/axioms.hpp"

#include <algorithm>
#include <sstream>

#include "brace/error.hpp"
#include "brace/series.hpp"

namespace brace {

std::string AxiomReport::summary() const
{
    std::ostringstream os;
    bool first = true;
    for (const LawCheck* law : {&additive_group, &multiplicative_group, &distributivity, &lambda_homomorphism}) {
        if (law->holds)
            continue;
        if (!first)
            os << "; ";
        first = false;
        os << law->name << ": " << law->detail;
        if (!law->witness.empty()) {
            os << " at (";
            for (std::size_t i = 0; i < law->witness.size(); ++i)
                os << (i ? ", " : "") << law->witness[i];
            os << ")";
        }
    }
    return first ? "all laws hold" : os.str();
}

namespace {

void check_group(const Table& t, bool commutative, bool inverses_ok, LawCheck& law)
{
    const auto n = static_cast<Index>(t.order());
    for (Index x = 0; x < n; ++x)
        if (t(0, x) != x || t(x, 0) != x)
            law.fail({x}, "0 is not neutral");
    for (Index a = 0; a < n && law.holds; ++a)
        for (Index b = 0; b < n && law.holds; ++b) {
            if (commutative && t(a, b) != t(b, a))
                law.fail({a, b}, "not commutative");
            for (Index c = 0; c < n && law.holds; ++c)
                if (t(t(a, b), c) != t(a, t(b, c)))
                    law.fail({a, b, c}, "not associative");
        }
    if (!inverses_ok) {
        for (Index a = 0; a < n; ++a) {
            bool found = false;
            for (Index b = 0; b < n && !found; ++b)
                found = t(a, b) == 0 && t(b, a) == 0;
            if (!found) {
                law.fail({a}, "no inverse");
                break;
            }
        }
    }
}

} // namespace

AxiomReport verify_axioms(const FiniteBrace& brace)
{
    AxiomReport report;
    const Table& add = brace.add_table();
    const Table& mul = brace.mul_table();
    const auto n = static_cast<Index>(brace.order());

    check_group(add, true, brace.has_negatives(), report.additive_group);
    check_group(mul, false, brace.has_inverses(), report.multiplicative_group);

    // a(b+c) + a = ab + ac, which needs no negation.
    for (Index a = 0; a < n && report.distributivity.holds; ++a)
        for (Index b = 0; b < n && report.distributivity.holds; ++b)
            for (Index c = 0; c < n; ++c)
                if (add(mul(a, add(b, c)), a) != add(mul(a, b), mul(a, c))) {
                    report.distributivity.fail({a, b, c}, "a(b+c) != ab - a + ac");
                    break;
                }

    LawCheck& hom = report.lambda_homomorphism;
    if (!report.additive_group.holds) {
        hom.fail({}, "lambda is undefined without an additive group");
        return report;
    }
    std::vector<Permutation> lambdas(n);
    for (Index a = 0; a < n; ++a)
        lambdas[a] = brace.lambda_map(a);
    for (Index a = 0; a < n && hom.holds; ++a) {
        const Permutation& la = lambdas[a];
        std::vector<char> hit(n, 0);
        for (Index b = 0; b < n; ++b)
            hit[la[b]] = 1;
        if (std::ranges::count(hit, 0) != 0) {
            hom.fail({a}, "lambda_a is not bijective");
            break;
        }
        for (Index b = 0; b < n && hom.holds; ++b)
            for (Index c = 0; c < n; ++c)
                if (la[add(b, c)] != add(la[b], la[c])) {
                    hom.fail({a, b, c}, "lambda_a is not additive");
                    break;
                }
    }
    for (Index a = 0; a < n && hom.holds; ++a)
        for (Index b = 0; b < n && hom.holds; ++b) {
            const Permutation& lab = lambdas[mul(a, b)];
            for (Index c = 0; c < n; ++c)
                if (lab[c] != lambdas[a][lambdas[b][c]]) {
                    hom.fail({a, b, c}, "lambda_{ab} != lambda_a o lambda_b");
                    break;
                }
        }
    return report;
}

void require_brace(const FiniteBrace& brace)
{
    auto report = verify_axioms(brace);
    if (!report.ok())
        throw Error(ErrorCode::AxiomFailure, "not a left brace: " + report.summary());
}

bool Rn2Conditions::all() const
{
    return std::ranges::all_of(holds, [](bool b) { return b; });
}

bool Rn2Conditions::all_equal() const
{
    return std::ranges::all_of(holds, [&](bool b) { return b == holds[0]; });
}

Rn2Conditions check_rn2_conditions(const FiniteBrace& brace)
{
    require_brace(brace);
    const auto n = static_cast<Index>(brace.order());
    const auto everything = whole(brace);
    const auto a2 = star_subgroup(brace, everything, everything);
    const auto a3 = star_subgroup(brace, a2, everything);

    Rn2Conditions result;
    result.holds[0] = a3.is_trivial();

    result.holds[1] = true;
    for (Index z : a2.members())
        for (Index a = 0; a < n && result.holds[1]; ++a)
            result.holds[1] = brace.star(z, a) == 0;

    result.holds[2] = true;
    for (Index z : a2.members())
        for (Index a = 0; a < n && result.holds[2]; ++a)
            result.holds[2] = brace.lambda(z, a) == a;

    std::vector<Permutation> lambdas(n);
    for (Index a = 0; a < n; ++a)
        lambdas[a] = brace.lambda_map(a);

    result.holds[3] = true;
    for (Index a = 0; a < n && result.holds[3]; ++a)
        for (Index b = 0; b < n && result.holds[3]; ++b)
            for (Index c = 0; c < n && result.holds[3]; ++c)
                result.holds[3] = lambdas[brace.add(a, b)][c] == lambdas[a][lambdas[b][c]];

    result.holds[4] = true;
    for (Index a = 0; a < n && result.holds[4]; ++a)
        for (Index b = 0; b < n && result.holds[4]; ++b)
            result.holds[4] = lambdas[lambdas[a][b]] == lambdas[b];

    return result;
}

} // namespace brace
