#include "fixtures.hpp"

#include "brace/free_bm.hpp"

namespace brace::fixture {

FiniteBrace trivial_cyclic(std::uint32_t n)
{
    Table add(n);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            add.at(a, b) = (a + b) % n;
    return FiniteBrace::trivial(add);
}

FiniteBrace order4_example()
{
    Table add(4), mul(4);
    for (Index x = 0; x < 4; ++x)
        for (Index y = 0; y < 4; ++y) {
            add.at(x, y) = (x + y) % 4;
            const Index scale = (x % 2 == 0) ? 1 : 3;
            mul.at(x, y) = (x + scale * y) % 4;
        }
    return FiniteBrace(add, mul);
}

LambdaAction order4_action()
{
    Table add(4);
    std::vector<Permutation> lambda(4, Permutation(4));
    for (Index x = 0; x < 4; ++x)
        for (Index y = 0; y < 4; ++y) {
            add.at(x, y) = (x + y) % 4;
            lambda[x][y] = ((x % 2 == 0) ? y : 3 * y) % 4;
        }
    return LambdaAction(add, lambda);
}

FiniteBrace radical_ring_order8()
{
    // Bit i-1 of an index is the coefficient of x^i, i = 1..3.
    auto ring_mul = [](Index a, Index b) {
        Index out = 0;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                if (((a >> (i - 1)) & 1U) && ((b >> (j - 1)) & 1U) && i + j <= 3)
                    out ^= 1U << (i + j - 1);
        return out;
    };
    Table add(8), mul(8);
    for (Index a = 0; a < 8; ++a)
        for (Index b = 0; b < 8; ++b) {
            add.at(a, b) = a ^ b;
            mul.at(a, b) = a ^ b ^ ring_mul(a, b);
        }
    return FiniteBrace(add, mul);
}

FiniteBrace cyclic_radical_order8()
{
    Table add(8), mul(8);
    for (Index a = 0; a < 8; ++a)
        for (Index b = 0; b < 8; ++b) {
            add.at(a, b) = (a + b) % 8;
            mul.at(a, b) = (a + b + 2 * a * b) % 8;
        }
    return FiniteBrace(add, mul);
}

FiniteBrace reduced_bm(std::uint32_t p, std::size_t m)
{
    GroupSignature sig;
    sig.moduli.assign(m, p);
    const auto n = static_cast<Index>(sig.order());
    auto lift = [&](Index x) {
        const auto d = sig.digits(x);
        return BmElement(std::vector<Int>(d.begin(), d.end()));
    };
    auto reduce = [&](const BmElement& e) {
        std::vector<std::uint32_t> d(m);
        for (std::size_t i = 0; i < m; ++i)
            d[i] = static_cast<std::uint32_t>(mod_floor(e.coords()[i], p));
        return sig.encode(d);
    };
    std::vector<Permutation> lambda(n, Permutation(n));
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            lambda[x][y] = reduce(lambda_bm(lift(x), lift(y)));
    return build_brace(LambdaAction(cyclic_product_table(sig), lambda));
}

} // namespace brace::fixture
