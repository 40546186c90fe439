#include "oracles.hpp"

#include "rank2qi/constellation.hpp"

#include <doctest.h>

#include <random>

using namespace rank2qi;

namespace {

// Four congruences p_j = -1-6i (mod 16) with machine integers:
// i^j k (1+i) for j = 1..4 is k(-1+i), k(-1-i), k(1-i), k(1+i).
bool direct_oracle(long re, long im, long k)
{
    const long dr[4] = {-k, -k, k, k}, di[4] = {k, -k, -k, k};
    for (int j = 0; j < 4; ++j)
        if (oracle::mod(re + dr[j], 16) != 15 || oracle::mod(im + di[j], 16) != 10) return false;
    return true;
}

}  // namespace

TEST_CASE("constellation values and product identity")
{
    auto v = constellation_values(GaussInt(15, 10), 16);
    CHECK(v[0] == GaussInt(-1, 26));
    CHECK(v[1] == GaussInt(-1, -6));
    CHECK(v[2] == GaussInt(31, -6));
    CHECK(v[3] == GaussInt(31, 26));

    std::mt19937_64 rng(71);
    std::uniform_int_distribution<long> d(-1000000, 1000000);
    for (int t = 0; t < 1000; ++t) {
        GaussInt beta(d(rng), d(rng));
        mpz_class k = d(rng);
        auto p = constellation_values(beta, k);
        GaussInt k4(mpz_class(k * k * k * k));
        CHECK(p[0] * p[1] * p[2] * p[3] == pow(beta, 4) + GaussInt(4) * k4);
    }
}

TEST_CASE("pre-filter is exactly the four-congruence condition")
{
    for (long r = 0; r < 16; ++r)
        for (long i = 0; i < 16; ++i)
            for (long k = 0; k < 16; ++k) {
                bool want = direct_oracle(r, i, k);
                CHECK(prefilter_accepts(r, i, k) == want);
                CHECK(direct_congruence_test(GaussInt(r, i), k) == want);
                CHECK(prefilter_accepts(r - 32, i + 48, k - 64) == want);
            }
}

TEST_CASE("constellation_at rejections")
{
    auto zero = constellation_at(GaussInt(15, 10), 0);
    REQUIRE(std::holds_alternative<ConstellationRejection>(zero));
    CHECK(std::get<ConstellationRejection>(zero).reason == reason::kNotDistinct);

    auto odd_k = constellation_at(GaussInt(15, 10), 4);
    REQUIRE(std::holds_alternative<ConstellationRejection>(odd_k));
    CHECK(std::get<ConstellationRejection>(odd_k).reason == reason::kPrefilter);

    auto composite = constellation_at(GaussInt(-1, -6), 16);  // p4 = 15+10i has norm 325
    REQUIRE(std::holds_alternative<ConstellationRejection>(composite));
    CHECK(std::get<ConstellationRejection>(composite).reason == reason::kNotPrime);
    CHECK(std::get<ConstellationRejection>(composite).index == 4);
}

TEST_CASE("constellation_at hit satisfies every invariant")
{
    auto res = constellation_at(GaussInt(15, 10), 16);
    REQUIRE(std::holds_alternative<ConstellationHit>(res));
    const auto& h = std::get<ConstellationHit>(res);
    for (int j = 0; j < 4; ++j) {
        CHECK(oracle::is_gaussian_prime(oracle::from(h.primes[j])));
        CHECK(oracle::mod(h.primes[j].re().get_si(), 16) == 15);
        CHECK(oracle::mod(h.primes[j].im().get_si(), 16) == 10);
        for (int l = 0; l < j; ++l) CHECK_FALSE(h.primes[j] == h.primes[l]);
    }
    CHECK(h.primes[0] * h.primes[1] * h.primes[2] * h.primes[3] == pow(GaussInt(15, 10), 4) + GaussInt(4 * 65536));
}

TEST_CASE("search_region")
{
    CHECK(search_region({5, 4, 100}, 4).empty());
    CHECK(search_region({0, 50, 0}, 4).empty());

    SearchStats s1, s8;
    auto a = search_region({0, 120, 120}, 1, &s1);
    auto b = search_region({0, 120, 120}, 8, &s8);
    REQUIRE(a.size() == b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(a[j].beta == b[j].beta);
        CHECK(a[j].k == b[j].k);
    }
    CHECK(s1.pairs == s8.pairs);
    CHECK(s1.filter_passed == s8.filter_passed);
    CHECK(s1.hits == a.size());

    REQUIRE_FALSE(a.empty());
    CHECK(a[0].beta == GaussInt(15, 10));
    CHECK(a[0].k == 16);
    for (std::size_t j = 1; j < a.size(); ++j) CHECK_FALSE(hit_order_less(a[j], a[j - 1]));
    for (const auto& h : a) {
        CHECK(oracle::mod(h.beta.im().get_si(), 8) == 2);
        CHECK(std::holds_alternative<ConstellationHit>(constellation_at(h.beta, h.k)));
    }
}

TEST_CASE("search_region finds exactly the brute-force hits")
{
    const long R = 40, K = 40;
    std::vector<std::pair<GaussInt, long>> want;
    for (long re = -R; re <= R; ++re)
        for (long im = -R; im <= R; ++im)
            for (long k = -K; k <= K; ++k) {
                if (k == 0 || !direct_oracle(re, im, k)) continue;
                bool ok = oracle::is_gaussian_prime({re - k, im + k}) && oracle::is_gaussian_prime({re - k, im - k})
                          && oracle::is_gaussian_prime({re + k, im - k}) && oracle::is_gaussian_prime({re + k, im + k});
                if (ok) want.emplace_back(GaussInt(re, im), k);
            }
    auto got = search_region({0, R, K}, 3);
    CHECK(got.size() == want.size());
    for (const auto& [beta, k] : want) {
        bool found = false;
        for (const auto& h : got) found = found || (h.beta == beta && h.k == k);
        CHECK(found);
    }
}

TEST_CASE("search_expanding reports progress and stops at the first ring with hits")
{
    std::vector<SearchProgress> seen;
    auto hits = search_expanding(2, 1000, 64, 2, [&](const SearchProgress& p) { seen.push_back(p); });
    REQUIRE_FALSE(hits.empty());
    CHECK(seen.size() >= 2);
    CHECK(seen.front().region.ring_lo == 0);
    for (std::size_t j = 1; j < seen.size(); ++j) CHECK(seen[j].region.ring_lo == seen[j - 1].region.ring_hi + 1);
    CHECK(hits[0].beta == GaussInt(15, 10));
    CHECK(search_expanding(1, 3, 64, 2).empty());
}

TEST_CASE("prime_density_stats")
{
    auto tiny = prime_density_stats({0, 0, 0, 0});
    CHECK(tiny.total == 0);
    CHECK(tiny.target == 0);
    auto s = prime_density_stats(Box::centered(200), 4);
    std::uint64_t total = 0, target = 0;
    for (long a = -200; a <= 200; ++a)
        for (long b = -200; b <= 200; ++b)
            if (oracle::is_gaussian_prime({a, b})) {
                ++total;
                target += oracle::mod(a, 16) == 15 && oracle::mod(b, 16) == 10;
            }
    CHECK(s.total == total);
    CHECK(s.target == target);
    std::uint64_t sum = 0;
    for (const auto& [cls, n] : s.class_counts) sum += n;
    CHECK(sum + 4 == total);  // the four associates of 1+i are the only even primes
    CHECK(s.associates > 3 * s.target);
    CHECK(s.associates < 5 * s.target);
    CHECK(prime_density_stats(Box::centered(200), 1).class_counts == s.class_counts);
}
