// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brace/axioms.hpp"
#include "brace/error.hpp"
#include "brace/free_bm.hpp"
#include "brace/free_c.hpp"
#include "brace/hom.hpp"
#include "brace/lambda_builder.hpp"
#include "brace/series.hpp"
#include "oracles.hpp"

using namespace brace;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

BmElement random_bm(std::mt19937_64& rng, std::size_t m, int bound)
{
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<Int> v(m);
    for (auto& x : v)
        x = dist(rng);
    return BmElement(v);
}

FreeCElement random_c(std::mt19937_64& rng, int support, int coeff)
{
    std::uniform_int_distribution<int> idx(-support, support), val(-coeff, coeff), len(0, 6);
    FreeCElement x;
    for (int t = len(rng); t > 0; --t)
        x += Int(val(rng)) * FreeCElement::basis(idx(rng));
    return x;
}

// a_k for k = 1..m (zero beyond m), built by repeated star.
BmElement oracle_star_power(const BmElement& a, std::size_t k)
{
    if (k > a.rank())
        return BmElement::zero(a.rank());
    BmElement p = a;
    for (std::size_t i = 1; i < k; ++i)
        p = star_bm(a, p);
    return p;
}

const std::vector<std::string> kSignatures{"2", "3", "4", "2x2", "5", "6", "7", "8", "4x2", "2x2x2"};
constexpr std::size_t kCap = 8;

std::vector<FiniteBrace> enumerated_braces()
{
    static const std::vector<FiniteBrace> braces = [] {
        std::vector<FiniteBrace> out;
        for (const auto& sig : kSignatures)
            for (auto& b : enumerate_actions(GroupSignature::parse(sig), kCap).braces)
                out.push_back(std::move(b));
        return out;
    }();
    return braces;
}

// ---------------------------------------------------------------------------

Outcome axiom_suite()
{
    Outcome o;
    std::mt19937_64 rng(101);
    std::size_t triples = 0;
    for (std::size_t m = 2; m <= 6; ++m) {
        const auto zero = BmElement::zero(m);
        for (int rep = 0; rep < 10000; ++rep, ++triples) {
            const auto a = random_bm(rng, m, 20), b = random_bm(rng, m, 20), c = random_bm(rng, m, 20);
            if (mul_bm(mul_bm(a, b), c) != mul_bm(a, mul_bm(b, c)))
                o.fail("associativity at " + a.to_string() + b.to_string() + c.to_string());
            if (mul_bm(a, zero) != a || mul_bm(zero, a) != a)
                o.fail("identity at " + a.to_string());
            const auto inv = inv_bm(a);
            if (!mul_bm(a, inv).is_zero() || !mul_bm(inv, a).is_zero())
                o.fail("inverse at " + a.to_string());
            if (a + b != b + a || (a + b) + c != a + (b + c) || !(a - a).is_zero())
                o.fail("additive group at " + a.to_string());
            if (mul_bm(a, b + c) != mul_bm(a, b) - a + mul_bm(a, c))
                o.fail("a(b+c) = ab - a + ac at " + a.to_string() + b.to_string() + c.to_string());
        }
    }
    o.detail = o.pass ? std::to_string(triples) + " triples, m=2..6" : o.detail;
    return o;
}

Outcome right_class_two()
{
    Outcome o;
    std::mt19937_64 rng(101);
    for (std::size_t m = 2; m <= 6; ++m)
        for (int rep = 0; rep < 10000; ++rep) {
            const auto x = random_bm(rng, m, 20), y = random_bm(rng, m, 20), z = random_bm(rng, m, 20);
            const auto s = star_bm(x, y);
            if (!star_bm(s, z).is_zero())
                o.fail("(x*y)*z != 0 at " + x.to_string() + y.to_string() + z.to_string());
            if (lambda_bm(s, z) != z || lambda_bm(s, x) != x || lambda_bm(s, y) != y)
                o.fail("lambda_{x*y} not identity at " + x.to_string() + y.to_string());
        }
    o.detail = o.pass ? "50000 samples, m=2..6" : o.detail;
    return o;
}

Outcome power_binomial()
{
    Outcome o;
    std::mt19937_64 rng(303);
    std::size_t checks = 0;
    for (std::size_t m = 2; m <= 8; ++m)
        for (int rep = 0; rep <= 100; ++rep) {
            const auto a = rep == 0 ? BmElement::generator(m) : random_bm(rng, m, 5);
            std::vector<BmElement> ak;
            for (std::size_t k = 1; k <= m; ++k)
                ak.push_back(oracle_star_power(a, k));
            BmElement p = a;
            for (int n = 1; n <= 30; ++n, ++checks) {
                if (n > 1)
                    p = mul_bm(p, a);
                BmElement sum = BmElement::zero(m);
                for (std::size_t k = 1; k <= std::min<std::size_t>(n, m); ++k)
                    sum += oracle::binom(n, static_cast<std::int64_t>(k)) * ak[k - 1];
                if (p != sum)
                    o.fail("a^" + std::to_string(n) + " for a=" + a.to_string());
            }
        }
    o.detail = o.pass ? std::to_string(checks) + " powers, m=2..8" : o.detail;
    return o;
}

Outcome star_integer_multiple()
{
    Outcome o;
    std::mt19937_64 rng(404);
    std::size_t checks = 0;
    for (std::size_t m = 2; m <= 6; ++m)
        for (int rep = 0; rep <= 20; ++rep) {
            const auto a = rep == 0 ? BmElement::generator(m) : random_bm(rng, m, 6);
            std::vector<BmElement> ak;
            for (std::size_t k = 1; k <= m; ++k)
                ak.push_back(oracle_star_power(a, k));
            for (int n = -30; n <= 30; ++n)
                for (std::size_t j = 1; j <= m; ++j, ++checks) {
                    BmElement expected = BmElement::zero(m);
                    for (std::size_t k = 1; k + j <= m; ++k)
                        expected += oracle::binom(n, static_cast<std::int64_t>(k)) * ak[k + j - 1];
                    const auto direct = star_bm(Int(n) * a, ak[j - 1]);
                    if (direct != expected || na_star_aj(n, j, a) != expected)
                        o.fail("n=" + std::to_string(n) + " j=" + std::to_string(j) + " a=" + a.to_string());
                }
        }
    o.detail = o.pass ? std::to_string(checks) + " cases, n in [-30,30]" : o.detail;
    return o;
}

Outcome inverse_closed_form()
{
    Outcome o;
    std::mt19937_64 rng(505);
    std::uniform_int_distribution<std::size_t> rank(2, 8);
    for (int rep = 0; rep < 10000; ++rep) {
        const auto t = random_bm(rng, rank(rng), 20);
        const auto inv = inv_bm(t);
        if (!mul_bm(t, inv).is_zero() || !mul_bm(inv, t).is_zero())
            o.fail("t=" + t.to_string());
    }
    o.detail = o.pass ? "10000 elements, m=2..8" : o.detail;
    return o;
}

Outcome free_c()
{
    Outcome o;
    std::mt19937_64 rng(606);
    const auto c0 = FreeCElement::basis(0);
    for (int rep = 0; rep < 10000; ++rep) {
        const auto x = random_c(rng, 10, 10), y = random_c(rng, 10, 10), z = random_c(rng, 10, 10);
        const auto where = x.to_string() + " ; " + y.to_string();
        if (mul_c(mul_c(x, y), z) != mul_c(x, mul_c(y, z)))
            o.fail("associativity at " + where);
        if (mul_c(x, y + z) + x != mul_c(x, y) + mul_c(x, z))
            o.fail("distributivity at " + where);
        const auto inv = inv_c(x);
        if (!mul_c(x, inv).is_zero() || !mul_c(inv, x).is_zero() || mul_c(FreeCElement(), x) != x ||
            mul_c(x, FreeCElement()) != x)
            o.fail("group laws at " + where);
        const auto s = star_c(x, y);
        if (weight(s) != 0)
            o.fail("star weight at " + where);
        const auto d = y - weight(y) * c0;
        for (const auto& e : {s, d}) {
            FreeCElement rebuilt;
            for (const auto& [i, coeff] : express_in_star_generators(e))
                rebuilt += coeff * star_c(power_c(c0, i), c0);
            if (rebuilt != e)
                o.fail("star-generator round trip at " + e.to_string());
        }
    }
    for (int j = 1; j <= 30; ++j) {
        const auto s = s_sequence(j);
        FreeCElement closed;
        for (int k = 0; k < j; ++k)
            closed += sign_power(k) * oracle::binom(j - 1, k) * FreeCElement::basis(j - k - 1);
        if (s.is_zero() || s != closed || s != s_closed_form(j))
            o.fail("s_" + std::to_string(j));
    }
    o.detail = o.pass ? "10000 triples, s_1..s_30" : o.detail;
    return o;
}

Outcome condition_equivalence()
{
    Outcome o;
    const auto braces = enumerated_braces();
    bool order4_class2 = false;
    for (const auto& b : braces) {
        if (!check_rn2_conditions(b).all_equal())
            o.fail("conditions disagree on a brace of order " + std::to_string(b.order()));
        if (b.order() == 4 && nilpotency_class(right_series(b)) == 2)
            order4_class2 = true;
    }
    // Braces outside class two must report all five false.
    std::size_t outside = 0;
    for (std::uint32_t n : {6U, 8U})
        for (const auto& b : oracle::cyclic_braces(n)) {
            const auto c = check_rn2_conditions(b);
            if (!c.all_equal())
                o.fail("conditions disagree on a cyclic brace of order " + std::to_string(n));
            outside += !c.holds[0];
        }
    if (!order4_class2)
        o.fail("no order-4 brace of right class 2");
    if (outside == 0)
        o.fail("no brace outside class two was exercised");
    if (o.pass)
        o.detail = std::to_string(braces.size()) + " enumerated braces, " + std::to_string(outside) +
                   " braces outside class two";
    return o;
}

// Breaks a valid table by swapping two entries of one multiplication row,
// keeping only results that fail the axioms.
std::vector<FiniteBrace> perturbed_tables(const std::vector<FiniteBrace>& braces, std::size_t count)
{
    std::mt19937_64 rng(808);
    std::vector<FiniteBrace> out;
    while (out.size() < count) {
        const auto& b = braces[rng() % braces.size()];
        const auto n = static_cast<Index>(b.order());
        if (n < 3)
            continue;
        Table mul = b.mul_table();
        const Index row = static_cast<Index>(rng() % n), i = static_cast<Index>(rng() % n),
                    j = static_cast<Index>(rng() % n);
        if (i == j)
            continue;
        std::swap(mul.at(row, i), mul.at(row, j));
        FiniteBrace candidate(b.add_table(), mul);
        if (!verify_axioms(candidate).ok())
            out.push_back(std::move(candidate));
    }
    return out;
}

Outcome two_of_three_exclusion()
{
    Outcome o;
    const auto braces = enumerated_braces();
    std::vector<FiniteBrace> valid = braces;
    for (const auto& b : oracle::cyclic_braces(8))
        valid.push_back(b);
    std::size_t single = 0;
    for (const auto& b : valid) {
        const auto t = two_of_three(b);
        const int count = t[0] + t[1] + t[2];
        if (count == 2)
            o.fail("exactly two true on a brace of order " + std::to_string(b.order()));
        single += count == 1;
    }
    std::size_t rejected = 0;
    for (const auto& bad : perturbed_tables(braces, 50)) {
        try {
            two_of_three(bad);
            o.fail("perturbed table accepted");
        } catch (const Error& e) {
            rejected += e.code() == ErrorCode::AxiomFailure;
        }
    }
    if (rejected != 50)
        o.fail("only " + std::to_string(rejected) + " of 50 perturbed tables rejected");
    if (o.pass)
        o.detail = std::to_string(valid.size()) + " valid braces (" + std::to_string(single) +
                   " with one true), 50 perturbed tables rejected";
    return o;
}

// Generator whose subbrace is largest (smallest index on ties); this one gets
// the full exhaustive box, every other element a smaller one.
Index principal_generator(const FiniteBrace& b)
{
    Index best = 0;
    std::size_t best_size = 0;
    for (Index a = 0; a < b.order(); ++a) {
        const std::vector<Index> gens{a};
        const auto size = subbrace_generated(b, gens).size();
        if (size > best_size) {
            best = a;
            best_size = size;
        }
    }
    return best;
}

Outcome universal_maps()
{
    Outcome o;
    std::size_t bm_maps = 0, c_maps = 0, pairs = 0, skipped = 0;
    for (const auto& b : enumerated_braces()) {
        const auto left = nilpotency_class(left_series(b));
        const auto target = std::make_shared<const FiniteBrace>(b);
        const auto order = static_cast<std::int64_t>(b.order());
        const Index principal = principal_generator(b);
        if (!left)
            ++skipped;
        for (Index a = 0; a < b.order(); ++a) {
            const bool full = a == principal;
            const std::vector<Index> gens{a};
            const auto expected = subbrace_generated(b, gens).members();
            const auto where = " into a brace of order " + std::to_string(order) + ", image " + std::to_string(a);
            if (left) {
                const auto m = std::max<std::size_t>(2, static_cast<std::size_t>(*left));
                const SampleSpec box{.range = full ? order : 2};
                const auto report = verify_hom(hom_from_Bm(target, a, m), box);
                pairs += report.pairs_checked;
                if (!report.ok() || report.image != expected)
                    o.fail("B_" + std::to_string(m) + " map" + where);
                ++bm_maps;
            }
            const SampleSpec support = full ? SampleSpec{.range = order, .coeff_bound = 2, .max_terms = 1, .random_extra = 150}
                                            : SampleSpec{.range = order, .coeff_bound = 1, .max_terms = 1};
            const auto report = verify_hom(hom_from_C(target, a), support);
            pairs += report.pairs_checked;
            if (!report.ok() || report.image != expected)
                o.fail("C map" + where);
            ++c_maps;
        }
    }
    if (o.pass)
        o.detail = std::to_string(bm_maps) + " B_m maps, " + std::to_string(c_maps) + " C maps, " +
                   std::to_string(pairs) + " pairs; " + std::to_string(skipped) +
                   " target(s) with non-nilpotent left series only receive C";
    return o;
}

Outcome filtration_series()
{
    Outcome o;
    std::mt19937_64 rng(1010);
    for (std::size_t m = 2; m <= 6; ++m) {
        // Elements of S = B_m used as left factors.
        std::vector<BmElement> xs;
        for (int n = -static_cast<int>(m) - 1; n <= static_cast<int>(m) + 1; ++n)
            xs.push_back(Int(n) * BmElement::generator(m));
        for (std::size_t i = 1; i <= m; ++i)
            xs.push_back(BmElement::unit(m, i));
        for (int rep = 0; rep < 40; ++rep)
            xs.push_back(random_bm(rng, m, 7));

        oracle::IntLattice current(m);
        for (std::size_t i = 1; i <= m; ++i)
            current.insert(BmElement::unit(m, i).to_vector());
        for (std::int64_t r = 1; r <= static_cast<std::int64_t>(m) + 2; ++r) {
            oracle::IntLattice predicted(m);
            for (const auto& e : filtration(r, m).basis())
                predicted.insert(e.to_vector());
            if (!(current == predicted))
                o.fail("S^" + std::to_string(r) + " differs from the predicate for m=" + std::to_string(m));
            for (int rep = 0; rep < 50; ++rep) {
                BmElement y = BmElement::zero(m);
                for (const auto& row : current.basis())
                    y += Int(static_cast<int>(rng() % 11) - 5) * BmElement(row);
                if (!filtration(r, m).contains(y))
                    o.fail("predicate rejects an element of S^" + std::to_string(r));
            }
            // S^{r+1} = S * S^r, additive in the right factor.
            oracle::IntLattice next(m);
            for (const auto& x : xs) {
                const BmLeft left(x);
                for (const auto& row : current.basis())
                    next.insert(left.star(BmElement(row)).to_vector());
            }
            current = next;
        }
        if (filtration(static_cast<std::int64_t>(m), m).is_zero_set() ||
            !filtration(static_cast<std::int64_t>(m) + 1, m).is_zero_set())
            o.fail("S^m / S^{m+1} boundary wrong for m=" + std::to_string(m));
    }
    o.detail = o.pass ? "m=2..6, r=1..m+2" : o.detail;
    return o;
}

} // namespace

// Optional arguments select criteria by number; no arguments runs all.
int main(int argc, char** argv)
{
    std::set<std::string> only(argv + 1, argv + argc);
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 axiom suite for B_m", axiom_suite},
        {"2 right class two in B_m", right_class_two},
        {"3 powers as binomial sums of star powers", power_binomial},
        {"4 star of integer multiples", star_integer_multiple},
        {"5 inverse closed form", inverse_closed_form},
        {"6 free brace C", free_c},
        {"7 equivalence of the class-two conditions", condition_equivalence},
        {"8 two-of-three exclusion", two_of_three_exclusion},
        {"9 universal maps from B_m and C", universal_maps},
        {"10 left series filtration of B_m", filtration_series},
    };
    int failures = 0;
    int ran = 0;
    for (const auto& [name, run] : criteria) {
        if (!only.empty() && !only.contains(name.substr(0, name.find(' '))))
            continue;
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s (%.2fs): %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), secs,
                    outcome.detail.c_str());
        std::fflush(stdout);
        failures += !outcome.pass;
    }
    std::printf("%d of %d criteria passed\n", ran - failures, ran);
    return failures == 0 ? 0 : 1;
}
