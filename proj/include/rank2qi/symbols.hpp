#ifndef RANK2QI_SYMBOLS_HPP_
#define RANK2QI_SYMBOLS_HPP_

#include "rank2qi/gaussian.hpp"

namespace rank2qi {

/*
 * Exponents (m, n) in Z/4 with
 *   a = (1-4i)^m (-1-6i)^n  mod (1+i)^7
 * for primary a.  Both generators have order 4 in (Z[i]/(1+i)^7)^x and
 * together cover the 16 primary classes.
 */
struct MNInvariant {
    int m = 0;
    int n = 0;

    int n_bar() const { return n & 1; }
    friend bool operator==(const MNInvariant&, const MNInvariant&) = default;
};

/* (1+i)^7 = 8 - 8i */
GaussInt ram_seventh_power();

/* Throws std::invalid_argument for non-primary input. */
MNInvariant mn_invariants(const GaussInt& a);

/*
 * Quadratic residue symbol (a / p) = a^((Nm p - 1)/2) mod p, as +1 / -1.
 * p must be an odd Gaussian prime not dividing a.
 */
int euler_symbol(const GaussInt& a, const GaussInt& p);

/* (i / p) = (-1)^n_p for primary prime p, read off the (m, n) invariants. */
int symbol_i(const GaussInt& p);

/* (1+i / p) = (-1)^m_p for primary prime p. */
int symbol_one_plus_i(const GaussInt& p);

/* log_{-1}: +1 -> 0, -1 -> 1 */
inline int log_minus_one(int symbol) { return symbol < 0 ? 1 : 0; }

}  // namespace rank2qi

#endif /* RANK2QI_SYMBOLS_HPP_ */
