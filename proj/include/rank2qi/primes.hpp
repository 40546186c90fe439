#ifndef RANK2QI_PRIMES_HPP_
#define RANK2QI_PRIMES_HPP_

#include "rank2qi/gaussian.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace rank2qi {

/* Deterministic Miller-Rabin, exact for every 64-bit input. */
bool is_prime_u64(std::uint64_t n);

/*
 * Rational primality.  Inputs below 2^64 go through is_prime_u64; larger
 * inputs use GMP's BPSW plus Miller-Rabin rounds (error < 4^-kExtraRounds
 * beyond BPSW).
 */
bool is_rational_prime(const mpz_class& n);
inline constexpr int kExtraRounds = 25;

/* Prime factorization of |n| > 0, ascending primes. */
std::vector<std::pair<mpz_class, unsigned>> factor_rational(const mpz_class& n);

/* x with x^2 = -1 mod q, for a prime q = 1 mod 4. */
mpz_class sqrt_minus_one(const mpz_class& q);

bool is_gaussian_prime(const GaussInt& a);

struct PrimaryFactorization {
    int s = 0;            // unit exponent, i^s
    unsigned long t = 0;  // exponent of 1+i
    std::vector<std::pair<GaussInt, unsigned>> factors;

    GaussInt expand() const;
};

/* a = i^s (1+i)^t prod p_j^e_j with primary p_j ordered by (norm, re, im). */
PrimaryFactorization factor_primary(const GaussInt& a);

bool is_square_free(const GaussInt& a);

struct Box {
    long re_lo, re_hi, im_lo, im_hi;

    bool empty() const { return re_lo > re_hi || im_lo > im_hi; }
    static Box centered(long r) { return {-r, r, -r, r}; }
};

struct ResidueFilter {
    GaussInt residue;
    GaussInt modulus;
};

/* Visits each Gaussian prime in the box in (re, im) lexicographic order. */
void for_each_prime_in_box(const Box& box, const std::optional<ResidueFilter>& filter,
                           const std::function<void(const GaussInt&)>& visit);

std::vector<GaussInt> primes_in_box(const Box& box,
                                    const std::optional<ResidueFilter>& filter = std::nullopt);

/* Fast primality for |re|,|im| < 2^31, same answer as is_gaussian_prime. */
bool is_gaussian_prime_small(std::int64_t re, std::int64_t im);

}  // namespace rank2qi

#endif /* RANK2QI_PRIMES_HPP_ */
