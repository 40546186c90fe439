#include "rank2qi/symbols.hpp"

#include "rank2qi/primes.hpp"

#include <array>
#include <stdexcept>

namespace rank2qi {

namespace {

std::array<GaussInt, 4> powers_of(const GaussInt& g)
{
    return {GaussInt(1), g, g * g, g * g * g};
}

void require_primary_prime(const GaussInt& p, const char* what)
{
    if (!is_primary(p))
        throw std::invalid_argument(std::string(what) + ": " + p.to_string() + " is not primary");
    if (!is_gaussian_prime(p))
        throw std::invalid_argument(std::string(what) + ": " + p.to_string() + " is not prime");
}

}  // namespace

GaussInt ram_seventh_power()
{
    return {8, -8};
}

MNInvariant mn_invariants(const GaussInt& a)
{
    if (!is_primary(a))
        throw std::invalid_argument("mn_invariants: " + a.to_string() + " is not primary");
    static const std::array<GaussInt, 4> gm = powers_of(GaussInt(1, -4));
    static const std::array<GaussInt, 4> gn = powers_of(GaussInt(-1, -6));
    const GaussInt modulus = ram_seventh_power();
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            if (congruent(a, gm[m] * gn[n], modulus)) return {m, n};
    throw std::logic_error("mn_invariants: no class found for " + a.to_string());
}

int euler_symbol(const GaussInt& a, const GaussInt& p)
{
    if (!is_gaussian_prime(p))
        throw std::invalid_argument("euler_symbol: " + p.to_string() + " is not a Gaussian prime");
    if (p.is_even())
        throw std::invalid_argument("euler_symbol: modulus " + p.to_string() + " is even");
    if (divides(p, a))
        throw std::invalid_argument("euler_symbol: " + p.to_string() + " divides " + a.to_string());
    mpz_class e = (norm(p) - 1) / 2;
    GaussInt r = mod_pow(a, e, p);
    if (congruent(r, GaussInt(1), p)) return 1;
    if (congruent(r, GaussInt(-1), p)) return -1;
    throw std::logic_error("euler_symbol: residue is not +-1");
}

int symbol_i(const GaussInt& p)
{
    require_primary_prime(p, "symbol_i");
    return (mn_invariants(p).n & 1) ? -1 : 1;
}

int symbol_one_plus_i(const GaussInt& p)
{
    require_primary_prime(p, "symbol_one_plus_i");
    return (mn_invariants(p).m & 1) ? -1 : 1;
}

}  // namespace rank2qi
