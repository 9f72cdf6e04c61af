#include "brace/series.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "brace/axioms.hpp"
#include "brace/error.hpp"

namespace brace {

AdditiveSubgroup star_subgroup(const FiniteBrace& brace, std::span<const Index> xs, std::span<const Index> ys)
{
    std::vector<Index> gens;
    for (Index x : xs)
        for (Index y : ys)
            gens.push_back(brace.star(x, y));
    std::ranges::sort(gens);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return additive_closure(brace, gens);
}

AdditiveSubgroup star_subgroup(const FiniteBrace& brace, const AdditiveSubgroup& xs, const AdditiveSubgroup& ys)
{
    return star_subgroup(brace, std::span(xs.members()), std::span(ys.members()));
}

namespace {

template <class Step>
std::vector<AdditiveSubgroup> iterate_series(const FiniteBrace& brace, Step step)
{
    std::vector<AdditiveSubgroup> series{whole(brace)};
    while (true) {
        auto next = step(series.back());
        if (next == series.back())
            break;
        series.push_back(std::move(next));
    }
    return series;
}

} // namespace

std::vector<AdditiveSubgroup> right_series(const FiniteBrace& brace)
{
    const auto all = whole(brace);
    return iterate_series(brace, [&](const AdditiveSubgroup& term) { return star_subgroup(brace, term, all); });
}

std::vector<AdditiveSubgroup> left_series(const FiniteBrace& brace)
{
    const auto all = whole(brace);
    return iterate_series(brace, [&](const AdditiveSubgroup& term) { return star_subgroup(brace, all, term); });
}

AdditiveSubgroup socle(const FiniteBrace& brace)
{
    std::vector<Index> kernel;
    for (Index a = 0; a < brace.order(); ++a) {
        bool identity = true;
        for (Index b = 0; b < brace.order() && identity; ++b)
            identity = brace.lambda(a, b) == b;
        if (identity)
            kernel.push_back(a);
    }
    return AdditiveSubgroup(std::move(kernel));
}

std::optional<int> nilpotency_class(const std::vector<AdditiveSubgroup>& series)
{
    if (series.empty() || !series.back().is_trivial())
        return std::nullopt;
    if (series.front().is_trivial())
        return 0;
    return static_cast<int>(series.size()) - 1;
}

SeriesReport analyze_series(const FiniteBrace& brace)
{
    require_brace(brace);
    SeriesReport report;
    report.right_series = right_series(brace);
    report.left_series = left_series(brace);
    report.right_class = nilpotency_class(report.right_series);
    report.left_class = nilpotency_class(report.left_series);
    report.socle = socle(brace);
    return report;
}

AdditiveSubgroup subbrace_generated(const FiniteBrace& brace, std::span<const Index> gens)
{
    const std::size_t n = brace.order();
    std::vector<char> in(n, 0);
    std::vector<Index> members;
    std::deque<Index> work;
    auto push = [&](Index x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
            work.push_back(x);
        }
    };
    push(0);
    for (Index g : gens) {
        brace.check_index(g);
        push(g);
    }
    while (!work.empty()) {
        const Index x = work.front();
        work.pop_front();
        push(brace.neg(x));
        push(brace.inverse(x));
        // Snapshot: members grows while we iterate.
        const std::size_t count = members.size();
        for (std::size_t i = 0; i < count; ++i) {
            const Index y = members[i];
            push(brace.add(x, y));
            push(brace.mul(x, y));
            push(brace.mul(y, x));
        }
    }
    return AdditiveSubgroup(std::move(members));
}

namespace {

Permutation compose(const Permutation& f, const Permutation& g)
{
    Permutation out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = f[g[i]];
    return out;
}

Permutation identity_perm(std::size_t n)
{
    Permutation p(n);
    std::iota(p.begin(), p.end(), Index{0});
    return p;
}

bool is_identity(const Permutation& p)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i)
            return false;
    return true;
}

Permutation perm_power(const Permutation& p, std::uint32_t k)
{
    Permutation out = identity_perm(p.size());
    for (std::uint32_t i = 0; i < k; ++i)
        out = compose(out, p);
    return out;
}

} // namespace

std::vector<Permutation> automorphisms(const GroupSignature& signature)
{
    const auto n = static_cast<Index>(signature.order());
    const Table add = cyclic_product_table(signature);
    const std::size_t rank = signature.moduli.size();

    // Candidate images of each generator: elements killed by its modulus.
    std::vector<std::vector<Index>> choices(rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (Index h = 0; h < n; ++h) {
            Index acc = 0;
            for (std::uint32_t k = 0; k < signature.moduli[i]; ++k)
                acc = add(acc, h);
            if (acc == 0)
                choices[i].push_back(h);
        }

    std::vector<Permutation> out;
    std::vector<Index> images(rank);
    std::function<void(std::size_t)> search = [&](std::size_t level) {
        if (level == rank) {
            Permutation f(n);
            std::vector<char> hit(n, 0);
            for (Index x = 0; x < n; ++x) {
                const auto d = signature.digits(x);
                Index v = 0;
                for (std::size_t i = 0; i < rank; ++i)
                    for (std::uint32_t k = 0; k < d[i]; ++k)
                        v = add(v, images[i]);
                f[x] = v;
                if (hit[v])
                    return;
                hit[v] = 1;
            }
            out.push_back(std::move(f));
            return;
        }
        for (Index h : choices[level]) {
            images[level] = h;
            search(level + 1);
        }
    };
    search(0);
    std::ranges::sort(out);
    return out;
}

EnumerationResult enumerate_actions(const GroupSignature& signature, std::size_t cap)
{
    const std::size_t n = signature.order();
    if (n > cap)
        throw Error(ErrorCode::CapExceeded, "group " + signature.to_string() + " has order " + std::to_string(n)
                                                + ", above the enumeration cap " + std::to_string(cap));

    EnumerationResult result;
    result.signature = signature;
    const Table add = cyclic_product_table(signature);
    const auto auts = automorphisms(signature);
    const std::size_t rank = signature.moduli.size();

    // Per factor, the automorphisms whose order divides the factor's modulus.
    std::vector<std::vector<std::size_t>> allowed(rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t a = 0; a < auts.size(); ++a)
            if (is_identity(perm_power(auts[a], signature.moduli[i])))
                allowed[i].push_back(a);

    std::vector<std::size_t> chosen(rank);
    std::set<Table> seen;
    std::function<void(std::size_t)> search = [&](std::size_t level) {
        if (level == rank) {
            ++result.candidates_scanned;
            // lambda(x) = prod_i lambda(g_i)^{x_i}
            std::vector<Permutation> lambda(n);
            for (Index x = 0; x < n; ++x) {
                const auto d = signature.digits(x);
                Permutation p = identity_perm(n);
                for (std::size_t i = 0; i < rank; ++i)
                    p = compose(p, perm_power(auts[chosen[i]], d[i]));
                lambda[x] = std::move(p);
            }
            // lambda o lambda_y = lambda for all y reduces to generators, as
            // both sides are homomorphisms of (G,+).
            for (std::size_t i = 0; i < rank; ++i)
                for (std::size_t j = 0; j < rank; ++j) {
                    const Index gi = signature.generator(i);
                    const Index gj = signature.generator(j);
                    if (lambda[lambda[gj][gi]] != lambda[gi])
                        return;
                }
            LambdaAction action(add, std::move(lambda));
            if (!validate_action(action).ok())
                return;
            FiniteBrace brace = build_brace(action);
            if (seen.insert(brace.mul_table()).second)
                result.braces.push_back(std::move(brace));
            result.actions.push_back(std::move(action));
            return;
        }
        for (std::size_t a : allowed[level]) {
            bool commutes = true;
            for (std::size_t prev = 0; prev < level && commutes; ++prev)
                commutes = compose(auts[a], auts[chosen[prev]]) == compose(auts[chosen[prev]], auts[a]);
            if (!commutes)
                continue;
            chosen[level] = a;
            search(level + 1);
        }
    };
    search(0);
    return result;
}

} // namespace brace
