#pragma once

#include <cstdint>
#include <vector>

#include "brace/finite_brace.hpp"
#include "brace/lambda_builder.hpp"

namespace brace::fixture {

/// Trivial brace (mul = add) on Z/n.
FiniteBrace trivial_cyclic(std::uint32_t n);

/// Z/4 with xy = x + 3^x y, tables written out directly.
FiniteBrace order4_example();

/// The action lambda_x = multiplication by 3^x on Z/4.
LambdaAction order4_action();

/// Circle brace a o b = a + b + ab of the radical ring x F_2[x] / (x^4);
/// order 8, A^(3) != {0}.
FiniteBrace radical_ring_order8();

/// Circle brace of the radical ring 2Z/16Z on Z/8: ab = a + b + 2ab mod 8.
FiniteBrace cyclic_radical_order8();

/// B_m with coordinates reduced mod p (requires m <= p), built from the
/// induced action on (Z/p)^m.
FiniteBrace reduced_bm(std::uint32_t p, std::size_t m);

} // namespace brace::fixture
