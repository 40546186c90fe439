#include "rank2qi/primes.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace rank2qi {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 b, u64 e, u64 m)
{
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool fits_u64(const mpz_class& n)
{
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

u64 to_u64(const mpz_class& n)
{
    static_assert(sizeof(unsigned long) == 8, "unsigned long must be 64-bit");
    return mpz_get_ui(n.get_mpz_t());
}

/* Brent's variant of Pollard rho; n composite, odd, not a prime power of a tiny prime. */
mpz_class pollard_brent(const mpz_class& n)
{
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, x, q = 1, g = 1, ys;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto f = [&](const mpz_class& v) {
            mpz_class t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    mpz_class diff = abs(x - y);
                    q = q * diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                mpz_class diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const mpz_class& n, std::vector<mpz_class>& out)
{
    if (n == 1) return;
    if (is_rational_prime(n)) {
        out.push_back(n);
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class s = sqrt(n);
        factor_into(s, out);
        factor_into(s, out);
        return;
    }
    mpz_class d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

GaussInt small_gauss(std::int64_t re, std::int64_t im)
{
    return {mpz_class(static_cast<long>(re)), mpz_class(static_cast<long>(im))};
}

}  // namespace

bool is_prime_u64(u64 n)
{
    if (n < 2) return false;
    static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : small) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_rational_prime(const mpz_class& n)
{
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime_u64(to_u64(n));
    return mpz_probab_prime_p(n.get_mpz_t(), 24 + kExtraRounds) != 0;
}

std::vector<std::pair<mpz_class, unsigned>> factor_rational(const mpz_class& n_in)
{
    if (n_in == 0) throw std::invalid_argument("factor_rational(0)");
    mpz_class n = abs(n_in);
    std::vector<mpz_class> primes;
    for (unsigned long p = 2; p < 1000; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.emplace_back(p);
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<mpz_class, unsigned>> out;
    for (auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

mpz_class sqrt_minus_one(const mpz_class& q)
{
    if (mpz_fdiv_ui(q.get_mpz_t(), 4) != 1)
        throw std::invalid_argument("sqrt_minus_one needs q = 1 mod 4");
    mpz_class e = (q - 1) / 4, x;
    for (mpz_class c = 2;; ++c) {
        if (mpz_legendre(c.get_mpz_t(), q.get_mpz_t()) == -1) {
            mpz_powm(x.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
            return x;
        }
    }
}

bool is_gaussian_prime(const GaussInt& a)
{
    if (a.is_zero() || a.is_unit()) return false;
    if (is_rational_prime(norm(a))) return true;
    if (a.re() == 0 || a.im() == 0) {
        mpz_class v = abs(a.re() == 0 ? a.im() : a.re());
        return mpz_fdiv_ui(v.get_mpz_t(), 4) == 3 && is_rational_prime(v);
    }
    return false;
}

bool is_gaussian_prime_small(std::int64_t re, std::int64_t im)
{
    u64 ar = static_cast<u64>(re < 0 ? -re : re);
    u64 ai = static_cast<u64>(im < 0 ? -im : im);
    if (ar == 0 || ai == 0) {
        u64 v = ar + ai;
        return v % 4 == 3 && is_prime_u64(v);
    }
    return is_prime_u64(ar * ar + ai * ai);
}

GaussInt PrimaryFactorization::expand() const
{
    GaussInt r = unit_power(s) * pow(GaussInt::one_plus_i(), t);
    for (const auto& [p, e] : factors) r *= pow(p, e);
    return r;
}

PrimaryFactorization factor_primary(const GaussInt& a)
{
    if (a.is_zero()) throw std::invalid_argument("factor_primary of zero");
    PrimaryFactorization out;
    out.t = ram_valuation(a);
    GaussInt rest = exact_div(a, pow(GaussInt::one_plus_i(), out.t));

    auto strip = [&rest](const GaussInt& p) {
        unsigned e = 0;
        while (divides(p, rest)) {
            rest = exact_div(rest, p);
            ++e;
        }
        return e;
    };

    for (const auto& [q, e] : factor_rational(norm(rest))) {
        if (q == 2) throw std::logic_error("odd part has even norm");
        if (mpz_fdiv_ui(q.get_mpz_t(), 4) == 3) {
            GaussInt p = primary_associate(GaussInt(q)).first;
            unsigned k = strip(p);
            if (2 * k != e) throw std::logic_error("inert prime exponent mismatch");
            out.factors.emplace_back(std::move(p), k);
        } else {
            GaussInt pi = gcd(GaussInt(q), GaussInt(sqrt_minus_one(q), mpz_class(1)));
            GaussInt p1 = primary_associate(pi).first;
            GaussInt p2 = primary_associate(pi.conj()).first;
            if (unsigned k = strip(p1)) out.factors.emplace_back(p1, k);
            if (unsigned k = strip(p2)) out.factors.emplace_back(p2, k);
        }
    }
    if (!rest.is_unit()) throw std::logic_error("factorization left a non-unit cofactor");
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) { return norm_order_less(x.first, y.first); });

    GaussInt partial = out.expand();  // with s = 0
    GaussInt unit = exact_div(a, partial);
    for (int s = 0; s < 4; ++s)
        if (unit_power(s) == unit) out.s = s;
    return out;
}

bool is_square_free(const GaussInt& a)
{
    PrimaryFactorization f = factor_primary(a);
    if (f.t > 1) return false;
    return std::all_of(f.factors.begin(), f.factors.end(),
                       [](const auto& pe) { return pe.second == 1; });
}

void for_each_prime_in_box(const Box& box, const std::optional<ResidueFilter>& filter,
                           const std::function<void(const GaussInt&)>& visit)
{
    if (box.empty()) return;
    constexpr long kSmall = 1L << 30;
    bool small = std::max({std::labs(box.re_lo), std::labs(box.re_hi), std::labs(box.im_lo),
                           std::labs(box.im_hi)}) < kSmall;
    if (filter && filter->modulus.is_zero())
        throw std::invalid_argument("residue filter with zero modulus");
    for (long re = box.re_lo; re <= box.re_hi; ++re) {
        for (long im = box.im_lo; im <= box.im_hi; ++im) {
            bool prime = small ? is_gaussian_prime_small(re, im)
                               : is_gaussian_prime(small_gauss(re, im));
            if (!prime) continue;
            GaussInt g = small_gauss(re, im);
            if (filter && !congruent(g, filter->residue, filter->modulus)) continue;
            visit(g);
        }
    }
}

std::vector<GaussInt> primes_in_box(const Box& box, const std::optional<ResidueFilter>& filter)
{
    std::vector<GaussInt> out;
    for_each_prime_in_box(box, filter, [&out](const GaussInt& g) { out.push_back(g); });
    return out;
}

}  // namespace rank2qi
