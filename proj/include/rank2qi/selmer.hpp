#ifndef RANK2QI_SELMER_HPP_
#define RANK2QI_SELMER_HPP_

#include "rank2qi/f2.hpp"
#include "rank2qi/gaussian.hpp"

#include <string>
#include <vector>

namespace rank2qi {

/* Admissible shapes of the curve coefficient for the descent:
 *   Plus      a =  p1 ... pN
 *   Minus     a = -p1 ... pN
 *   NegSquare a = -p1^2 ... pN^2
 */
enum class SelmerShape { Plus, Minus, NegSquare };

std::string to_string(SelmerShape shape);
SelmerShape parse_shape(const std::string& name);

GaussInt shape_alpha(SelmerShape shape, const std::vector<GaussInt>& primes);

/* Square-free divisor class d = u * prod_{j in support} p_j with u in {1, i}. */
struct DivisorClass {
    bool times_i = false;
    F2Vector support;

    GaussInt value(const std::vector<GaussInt>& primes) const;
    /* "1", "p1*p2*p3*p4", "i*p1*p3", ... */
    std::string label() const;
    /* Coordinates in Q(i)^x / squares: support bits followed by the unit bit. */
    F2Vector square_class() const;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

struct SelmerReport {
    SelmerShape shape = SelmerShape::NegSquare;
    std::vector<GaussInt> primes;
    F2Matrix L;
    F2Vector n_bar;
    std::vector<DivisorClass> candidates;  // sorted by (times_i, support bits)
    unsigned dim = 0;
    int rank_upper = 0;
    bool is_group = false;  // candidates exactly fill their span
};

/*
 * L_ij = log_{-1} (p_i / p_j) off the diagonal, L_ii = sum_{k != i} L_ik.
 * Primes must be distinct primary Gaussian primes; at most 63 of them.
 */
F2Matrix build_L(const std::vector<GaussInt>& primes);

/* (n_{p_j} mod 2)_j */
F2Vector n_bar_vector(const std::vector<GaussInt>& primes);

/*
 * Candidate set S' containing the phi-Selmer group:
 *   d primary    with 1^(d) in ker L,  or
 *   d = i * d+   with L 1^(d) = n_bar.
 */
SelmerReport selmer_candidate_set(SelmerShape shape, const std::vector<GaussInt>& primes);

/* 2 dim - 2; dim >= 1. */
int rank_upper_bound(unsigned dim);

}  // namespace rank2qi

#endif /* RANK2QI_SELMER_HPP_ */
