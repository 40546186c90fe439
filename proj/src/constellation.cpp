#include "rank2qi/constellation.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

namespace rank2qi {

namespace {

long mod16(long v)
{
    return ((v % 16) + 16) % 16;
}

long mod16(const mpz_class& v)
{
    return static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), 16));
}

/* Contiguous column block [lo, hi] of shard s out of n over [-r, r]. */
std::pair<long, long> shard_columns(long r, unsigned s, unsigned n)
{
    long width = 2 * r + 1;
    long lo = -r + width * static_cast<long>(s) / static_cast<long>(n);
    long hi = -r + width * static_cast<long>(s + 1) / static_cast<long>(n) - 1;
    return {lo, hi};
}

template <class Fn>
void run_shards(unsigned shards, Fn&& fn)
{
    if (shards == 0) throw std::invalid_argument("shard count must be >= 1");
    if (shards == 1) {
        fn(0U);
        return;
    }
    std::vector<std::exception_ptr> errors(shards);
    {
        std::vector<std::jthread> pool;
        for (unsigned s = 0; s < shards; ++s)
            pool.emplace_back([&fn, &errors, s] {
                try {
                    fn(s);
                } catch (...) {
                    errors[s] = std::current_exception();
                }
            });
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

struct ShardResult {
    std::vector<ConstellationHit> hits;
    SearchStats stats;
};

void search_column(long re, const SearchRegion& region, ShardResult& out)
{
    const long lo = region.ring_lo, hi = region.ring_hi;
    auto visit_beta = [&](long im) {
        out.stats.pairs += 2 * static_cast<std::uint64_t>(region.k_max);
        long rr = mod16(re), ri = mod16(im);
        long k_start;
        if (rr == 15 && ri == 10)
            k_start = 16;
        else if (rr == 7 && ri == 2)
            k_start = 8;
        else
            return;
        for (long k = k_start; k <= region.k_max; k += 16) {
            out.stats.filter_passed += 2;  // k and -k
            if (!is_gaussian_prime_small(re - k, im + k) || !is_gaussian_prime_small(re - k, im - k)
                || !is_gaussian_prime_small(re + k, im - k) || !is_gaussian_prime_small(re + k, im + k))
                continue;
            GaussInt beta(re, im);
            for (long signed_k : {k, -k}) {
                auto res = constellation_at(beta, mpz_class(signed_k));
                if (auto* hit = std::get_if<ConstellationHit>(&res)) {
                    out.hits.push_back(std::move(*hit));
                    ++out.stats.hits;
                } else {
                    throw std::logic_error("fast constellation test disagrees with constellation_at");
                }
            }
        }
    };
    if (std::labs(re) >= lo) {
        for (long im = -hi; im <= hi; ++im) visit_beta(im);
    } else {
        for (long im = -hi; im <= -lo; ++im) visit_beta(im);
        for (long im = lo; im <= hi; ++im) visit_beta(im);
    }
}

}  // namespace

GaussInt constellation_class()
{
    return {-1, -6};
}

std::array<GaussInt, 4> constellation_values(const GaussInt& beta, const mpz_class& k)
{
    const GaussInt step = GaussInt(k) * GaussInt::one_plus_i();
    std::array<GaussInt, 4> out;
    for (int j = 1; j <= 4; ++j) out[j - 1] = beta + unit_power(j) * step;
    return out;
}

bool prefilter_accepts(long beta_re, long beta_im, long k)
{
    beta_re = mod16(beta_re);
    beta_im = mod16(beta_im);
    k = mod16(k);
    if (k == 0) return beta_re == 15 && beta_im == 10;
    if (k == 8) return beta_re == 7 && beta_im == 2;
    return false;
}

bool direct_congruence_test(const GaussInt& beta, const mpz_class& k)
{
    const GaussInt m(kConstellationModulus);
    for (const auto& p : constellation_values(beta, k))
        if (!congruent(p, constellation_class(), m)) return false;
    return true;
}

ConstellationResult constellation_at(const GaussInt& beta, const mpz_class& k)
{
    if (k == 0) return ConstellationRejection{reason::kNotDistinct, 0};
    if (!prefilter_accepts(mod16(beta.re()), mod16(beta.im()), mod16(k)))
        return ConstellationRejection{reason::kPrefilter, 0};

    ConstellationHit hit{beta, k, constellation_values(beta, k)};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < a; ++b)
            if (hit.primes[a] == hit.primes[b]) return ConstellationRejection{reason::kNotDistinct, a + 1};
    const GaussInt m(kConstellationModulus);
    for (int j = 0; j < 4; ++j)
        if (!congruent(hit.primes[j], constellation_class(), m))
            return ConstellationRejection{reason::kNotCongruent, j + 1};
    for (int j = 0; j < 4; ++j)
        if (!is_gaussian_prime(hit.primes[j])) return ConstellationRejection{reason::kNotPrime, j + 1};
    return hit;
}

bool hit_order_less(const ConstellationHit& a, const ConstellationHit& b)
{
    auto ring = [](const GaussInt& g) { return std::max(mpz_class(abs(g.re())), mpz_class(abs(g.im()))); };
    int c = cmp(ring(a.beta), ring(b.beta));
    if (c != 0) return c < 0;
    c = cmp(mpz_class(abs(a.k)), mpz_class(abs(b.k)));
    if (c != 0) return c < 0;
    if ((a.k < 0) != (b.k < 0)) return a.k > 0;
    if (a.beta.re() != b.beta.re()) return a.beta.re() < b.beta.re();
    return a.beta.im() < b.beta.im();
}

std::vector<ConstellationHit> search_region(const SearchRegion& region, unsigned shards,
                                            SearchStats* stats)
{
    if (region.ring_lo < 0 || region.k_max < 0)
        throw std::invalid_argument("search region bounds must be non-negative");
    if (region.ring_hi >= (1L << 29) || region.k_max >= (1L << 29))
        throw std::invalid_argument("search region too large for the fast sieve");
    std::vector<ShardResult> parts(shards == 0 ? 1 : shards);
    if (region.ring_lo <= region.ring_hi && region.k_max > 0) {
        run_shards(shards, [&](unsigned s) {
            auto [lo, hi] = shard_columns(region.ring_hi, s, shards);
            for (long re = lo; re <= hi; ++re) search_column(re, region, parts[s]);
        });
    }
    std::vector<ConstellationHit> hits;
    SearchStats total;
    for (auto& p : parts) {
        total.pairs += p.stats.pairs;
        total.filter_passed += p.stats.filter_passed;
        total.hits += p.stats.hits;
        std::move(p.hits.begin(), p.hits.end(), std::back_inserter(hits));
    }
    std::sort(hits.begin(), hits.end(), hit_order_less);
    if (stats) *stats = total;
    return hits;
}

std::vector<ConstellationHit> search_expanding(long initial_radius, long max_radius, long k_max,
                                               unsigned shards,
                                               const std::function<void(const SearchProgress&)>& progress)
{
    if (initial_radius < 1) throw std::invalid_argument("initial radius must be >= 1");
    std::size_t found = 0;
    long lo = 0, hi = std::min(initial_radius, max_radius);
    while (lo <= max_radius) {
        SearchRegion region{lo, hi, k_max};
        SearchStats stats;
        auto hits = search_region(region, shards, &stats);
        found += hits.size();
        if (progress) progress({region, stats, found});
        if (!hits.empty()) return hits;
        lo = hi + 1;
        hi = std::min(2 * hi, max_radius);
        if (lo > hi) break;
    }
    return {};
}

DensityStats prime_density_stats(const Box& box, unsigned shards)
{
    DensityStats out;
    if (box.empty()) return out;
    if (shards == 0) throw std::invalid_argument("shard count must be >= 1");

    std::vector<std::pair<int, int>> associate_classes;
    for (int j = 0; j < 4; ++j) {
        GaussInt a = unit_power(j) * constellation_class();
        associate_classes.emplace_back(static_cast<int>(mod16(a.re())), static_cast<int>(mod16(a.im())));
    }

    std::vector<std::array<std::uint64_t, 256>> counts(shards);
    std::vector<std::uint64_t> totals(shards, 0);
    const long width = box.re_hi - box.re_lo + 1;
    run_shards(shards, [&](unsigned s) {
        counts[s].fill(0);
        long lo = box.re_lo + width * static_cast<long>(s) / static_cast<long>(shards);
        long hi = box.re_lo + width * static_cast<long>(s + 1) / static_cast<long>(shards) - 1;
        for (long re = lo; re <= hi; ++re)
            for (long im = box.im_lo; im <= box.im_hi; ++im)
                if (is_gaussian_prime_small(re, im)) {
                    ++totals[s];
                    ++counts[s][mod16(re) * 16 + mod16(im)];
                }
    });

    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) {
            if ((r + c) % 2 == 0) continue;  // not invertible mod 16
            std::uint64_t n = 0;
            for (unsigned s = 0; s < shards; ++s) n += counts[s][r * 16 + c];
            out.class_counts[{r, c}] = n;
        }
    for (auto t : totals) out.total += t;
    out.target = out.class_counts[{15, 10}];
    for (const auto& cls : associate_classes) out.associates += out.class_counts[cls];
    return out;
}

}  // namespace rank2qi
