#ifndef RANK2QI_CONSTELLATION_HPP_
#define RANK2QI_CONSTELLATION_HPP_

#include "rank2qi/gaussian.hpp"
#include "rank2qi/primes.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rank2qi {

/* -1-6i, the residue class mod 16 every constellation prime must lie in. */
GaussInt constellation_class();
inline constexpr long kConstellationModulus = 16;

/* p_j = beta + i^j k (1+i) for j = 1..4, in j order. */
std::array<GaussInt, 4> constellation_values(const GaussInt& beta, const mpz_class& k);

struct ConstellationHit {
    GaussInt beta;
    mpz_class k;
    std::array<GaussInt, 4> primes;
};

struct ConstellationRejection {
    std::string reason;
    int index = 0;  // 1-based prime index the reason refers to, 0 if none
};

using ConstellationResult = std::variant<ConstellationHit, ConstellationRejection>;

/* Rejection reasons, in the order the checks run. */
namespace reason {
inline const std::string kNotDistinct = "primes not distinct";
inline const std::string kPrefilter = "residue pre-filter: need 8 | k and beta = -1-6i (16 | k) or 7+2i (k = 8 mod 16) mod 16";
inline const std::string kNotCongruent = "not congruent to -1-6i modulo 16";
inline const std::string kNotPrime = "not a Gaussian prime";
}  // namespace reason

/*
 * Fast residue filter on (beta mod 16, k mod 16): 8 | k, and beta = -1-6i
 * when 16 | k, beta = 7+2i when k = 8 mod 16.  Arguments are reduced mod 16.
 */
bool prefilter_accepts(long beta_re, long beta_im, long k);

/* All four p_j = -1-6i mod 16, tested directly. */
bool direct_congruence_test(const GaussInt& beta, const mpz_class& k);

ConstellationResult constellation_at(const GaussInt& beta, const mpz_class& k);

/* Ordering key: max(|Re beta|, |Im beta|), |k|, positive k first, Re beta, Im beta. */
bool hit_order_less(const ConstellationHit& a, const ConstellationHit& b);

/* beta in the annulus ring_lo <= max(|re|, |im|) <= ring_hi, 0 < |k| <= k_max. */
struct SearchRegion {
    long ring_lo = 0;
    long ring_hi = 0;
    long k_max = 0;
};

struct SearchStats {
    std::uint64_t pairs = 0;        // (beta, k) pairs in the region
    std::uint64_t filter_passed = 0;
    std::uint64_t hits = 0;

    double pass_rate() const { return pairs ? double(filter_passed) / double(pairs) : 0.0; }
};

/* Every hit in the region in hit_order, independent of the shard count. */
std::vector<ConstellationHit> search_region(const SearchRegion& region, unsigned shards,
                                            SearchStats* stats = nullptr);

struct SearchProgress {
    SearchRegion region;
    SearchStats stats;
    std::size_t total_hits = 0;
};

/*
 * Searches rings [0, initial_radius], then doubles the outer radius until a
 * hit appears or max_radius is exhausted.  Reports each finished stage.
 */
std::vector<ConstellationHit> search_expanding(long initial_radius, long max_radius, long k_max,
                                               unsigned shards,
                                               const std::function<void(const SearchProgress&)>& progress = {});

struct DensityStats {
    std::map<std::pair<int, int>, std::uint64_t> class_counts;  // invertible (re, im) mod 16
    std::uint64_t total = 0;
    std::uint64_t target = 0;       // primes = -1-6i mod 16
    std::uint64_t associates = 0;   // primes = i^j (-1-6i) mod 16, any j

    double target_ratio() const { return total ? double(target) / double(total) : 0.0; }
    double associates_ratio() const { return total ? double(associates) / double(total) : 0.0; }
};

DensityStats prime_density_stats(const Box& box, unsigned shards = 1);

}  // namespace rank2qi

#endif /* RANK2QI_CONSTELLATION_HPP_ */
