#include "ferrers/bigint.hpp"

namespace ferrers {

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    if (k > n)
        return r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::vector<std::string> to_decimal(std::span<const BigInt> values)
{
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values)
        out.push_back(to_decimal(v));
    return out;
}

} // namespace ferrers
