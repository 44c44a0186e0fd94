#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace ferrers {

using BigInt = mpz_class;

// Number of lattice paths; always exact and nonnegative.
using PathCount = BigInt;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

// C(n, k), exact. Zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

std::vector<std::string> to_decimal(std::span<const BigInt> values);

} // namespace ferrers
