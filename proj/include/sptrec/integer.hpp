#pragma once

#include <gmpxx.h>

namespace sptrec {

// Exact arbitrary-precision integer. Partition counts overflow 64 bits well
// inside the ranges swept here (p(n) passes 2^64 near n = 420).
using Int = mpz_class;

inline bool is_zero(const Int& x) { return mpz_sgn(x.get_mpz_t()) == 0; }

} // namespace sptrec
