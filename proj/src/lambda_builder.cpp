#include "brace/lambda_builder.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "brace/error.hpp"

namespace brace {

GroupSignature GroupSignature::parse(std::string_view text)
{
    GroupSignature sig;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find('x', start);
        const auto part = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        std::uint32_t value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || value < 2)
            throw Error(ErrorCode::InvalidArgument, "bad group signature '" + std::string(text)
                                                        + "': expected factors >= 2 joined by 'x', e.g. 4x2");
        sig.moduli.push_back(value);
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return sig;
}

std::size_t GroupSignature::order() const
{
    return std::accumulate(moduli.begin(), moduli.end(), std::size_t{1}, std::multiplies<>());
}

std::string GroupSignature::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < moduli.size(); ++i)
        out += (i ? "x" : "") + std::to_string(moduli[i]);
    return out;
}

std::vector<std::uint32_t> GroupSignature::digits(Index x) const
{
    std::vector<std::uint32_t> d(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        d[i] = x % moduli[i];
        x /= moduli[i];
    }
    return d;
}

Index GroupSignature::encode(const std::vector<std::uint32_t>& d) const
{
    Index x = 0;
    for (std::size_t i = moduli.size(); i-- > 0;)
        x = x * moduli[i] + d[i] % moduli[i];
    return x;
}

Index GroupSignature::generator(std::size_t factor) const
{
    Index stride = 1;
    for (std::size_t i = 0; i < factor; ++i)
        stride *= moduli[i];
    return stride;
}

Table cyclic_product_table(const GroupSignature& signature)
{
    const auto n = static_cast<Index>(signature.order());
    Table table(n);
    for (Index a = 0; a < n; ++a) {
        const auto da = signature.digits(a);
        for (Index b = 0; b < n; ++b) {
            auto db = signature.digits(b);
            for (std::size_t i = 0; i < db.size(); ++i)
                db[i] = (da[i] + db[i]) % signature.moduli[i];
            table.at(a, b) = signature.encode(db);
        }
    }
    return table;
}

LambdaAction::LambdaAction(Table add, std::vector<Permutation> lambda)
    : add_(std::move(add)), lambda_(std::move(lambda))
{
    const std::size_t n = add_.order();
    if (n == 0)
        throw Error(ErrorCode::MalformedTable, "action order must be positive");
    if (lambda_.size() != n)
        throw Error(ErrorCode::MalformedTable, "lambda table has " + std::to_string(lambda_.size())
                                                   + " rows, expected " + std::to_string(n));
    for (std::size_t x = 0; x < n; ++x) {
        if (lambda_[x].size() != n)
            throw Error(ErrorCode::MalformedTable, "lambda row " + std::to_string(x) + " has wrong length");
        for (Index v : lambda_[x])
            if (v >= n)
                throw Error(ErrorCode::MalformedTable, "lambda row " + std::to_string(x) + " has out-of-range entry");
    }

    // Move a neutral element sitting elsewhere to label 0.
    for (Index e = 1; e < n; ++e) {
        bool neutral = true;
        for (Index x = 0; x < n && neutral; ++x)
            neutral = add_(e, x) == x && add_(x, e) == x;
        if (!neutral)
            continue;
        Permutation swap(n);
        std::iota(swap.begin(), swap.end(), Index{0});
        std::swap(swap[0], swap[e]);
        add_ = add_.relabeled(swap);
        std::vector<Permutation> moved(n, Permutation(n));
        for (Index x = 0; x < n; ++x)
            for (Index y = 0; y < n; ++y)
                moved[swap[x]][swap[y]] = swap[lambda_[x][y]];
        lambda_ = std::move(moved);
        break;
    }
}

std::string ActionReport::summary() const
{
    std::ostringstream os;
    bool first = true;
    for (const LawCheck* law : {&additive_group, &automorphisms, &additive_homomorphism, &invariance}) {
        if (law->holds)
            continue;
        os << (first ? "" : "; ") << law->name << ": " << law->detail;
        first = false;
    }
    return first ? "all laws hold" : os.str();
}

ActionReport validate_action(const LambdaAction& action)
{
    ActionReport report;
    const Table& add = action.add_table();
    const auto n = static_cast<Index>(action.order());
    const auto& lam = action.lambda_table();

    for (Index x = 0; x < n; ++x)
        if (add(0, x) != x || add(x, 0) != x)
            report.additive_group.fail({x}, "0 is not neutral");
    for (Index a = 0; a < n && report.additive_group.holds; ++a) {
        bool has_neg = false;
        for (Index b = 0; b < n; ++b) {
            has_neg = has_neg || add(a, b) == 0;
            if (add(a, b) != add(b, a))
                report.additive_group.fail({a, b}, "not commutative");
            for (Index c = 0; c < n; ++c)
                if (add(add(a, b), c) != add(a, add(b, c)))
                    report.additive_group.fail({a, b, c}, "not associative");
        }
        if (!has_neg)
            report.additive_group.fail({a}, "no additive inverse");
    }

    for (Index x = 0; x < n && report.automorphisms.holds; ++x) {
        std::vector<char> hit(n, 0);
        for (Index v : lam[x])
            hit[v] = 1;
        if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
            report.automorphisms.fail({x}, "lambda_x is not bijective");
            break;
        }
        for (Index a = 0; a < n && report.automorphisms.holds; ++a)
            for (Index b = 0; b < n; ++b)
                if (lam[x][add(a, b)] != add(lam[x][a], lam[x][b])) {
                    report.automorphisms.fail({x, a, b}, "lambda_x(a+b) != lambda_x(a) + lambda_x(b)");
                    break;
                }
    }

    for (Index x = 0; x < n && report.additive_homomorphism.holds; ++x)
        for (Index y = 0; y < n && report.additive_homomorphism.holds; ++y)
            for (Index z = 0; z < n; ++z)
                if (lam[add(x, y)][z] != lam[x][lam[y][z]]) {
                    report.additive_homomorphism.fail({x, y, z}, "lambda_{x+y} != lambda_x o lambda_y");
                    break;
                }

    for (Index x = 0; x < n && report.invariance.holds; ++x)
        for (Index y = 0; y < n; ++y)
            if (lam[lam[y][x]] != lam[x]) {
                report.invariance.fail({x, y}, "lambda_{lambda_y(x)} != lambda_x");
                break;
            }
    return report;
}

FiniteBrace build_brace(const LambdaAction& action)
{
    const auto report = validate_action(action);
    if (!report.ok())
        throw Error(ErrorCode::PreconditionFailed, "invalid action: " + report.summary());
    const auto n = static_cast<Index>(action.order());
    Table mul(n);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            mul.at(x, y) = action.add_table()(x, action.apply(x, y));
    return FiniteBrace(action.add_table(), std::move(mul));
}

LambdaAction extract_action(const FiniteBrace& brace)
{
    std::vector<Permutation> lambda(brace.order());
    for (Index a = 0; a < brace.order(); ++a)
        lambda[a] = brace.lambda_map(a);
    return LambdaAction(brace.add_table(), std::move(lambda));
}

std::array<bool, 3> two_of_three(const FiniteBrace& brace)
{
    require_brace(brace);
    const auto n = static_cast<Index>(brace.order());
    std::vector<Permutation> lam(n);
    for (Index a = 0; a < n; ++a)
        lam[a] = brace.lambda_map(a);
    auto composed_equals = [&](const Permutation& target, Index a, Index b) {
        for (Index c = 0; c < n; ++c)
            if (target[c] != lam[a][lam[b][c]])
                return false;
        return true;
    };

    std::array<bool, 3> out{true, true, true};
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            if (out[0] && !composed_equals(lam[brace.add(a, b)], a, b))
                out[0] = false;
            if (out[1] && !composed_equals(lam[brace.mul(a, b)], a, b))
                out[1] = false;
            if (out[2] && lam[lam[a][b]] != lam[b])
                out[2] = false;
        }
    return out;
}

} // namespace brace
