#include "oracles.hpp"

#include "rank2qi/selmer.hpp"
#include "rank2qi/symbols.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace rank2qi;

namespace {

std::vector<GaussInt> random_distinct_primes(std::mt19937_64& rng, unsigned n, oracle::i64 max_norm)
{
    std::set<oracle::G> seen;
    std::vector<GaussInt> out;
    while (out.size() < n) {
        auto p = oracle::random_primary_prime(rng, max_norm);
        if (seen.insert(p).second) out.push_back(oracle::to(p));
    }
    return out;
}

// S' straight from the definition, using the brute-force symbol.
std::set<std::pair<bool, std::uint64_t>> brute_candidates(const std::vector<GaussInt>& primes)
{
    const unsigned n = static_cast<unsigned>(primes.size());
    std::vector<std::vector<int>> lg(n, std::vector<int>(n, 0));
    std::vector<int> nb(n);
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b)
            if (a != b) lg[a][b] = oracle::brute_symbol(oracle::from(primes[a]), oracle::from(primes[b])) < 0;
        nb[a] = oracle::brute_symbol({0, 1}, oracle::from(primes[a])) < 0;
    }
    std::set<std::pair<bool, std::uint64_t>> out;
    for (std::uint64_t t = 0; t < (1ULL << n); ++t) {
        bool zero = true, match = true;
        for (unsigned a = 0; a < n; ++a) {
            int row = 0;
            for (unsigned b = 0; b < n; ++b) {
                int entry = (a == b) ? 0 : lg[a][b];
                if (a == b)
                    for (unsigned c = 0; c < n; ++c) entry ^= (c != a) ? lg[a][c] : 0;
                if (t >> b & 1U) row ^= entry;
            }
            zero = zero && row == 0;
            match = match && row == nb[a];
        }
        if (zero) out.insert({false, t});
        if (match) out.insert({true, t});
    }
    return out;
}

}  // namespace

TEST_CASE("build_L")
{
    CHECK(build_L({GaussInt(-1, -6)}) == F2Matrix(1, 1));
    CHECK_THROWS(build_L({}));
    CHECK_THROWS(build_L({GaussInt(-1, -6), GaussInt(-1, -6)}));
    CHECK_THROWS(build_L({GaussInt(2, 1)}));          // not primary
    CHECK_THROWS(build_L({GaussInt(-25, -2)}));       // primary, composite

    std::mt19937_64 rng(51);
    for (int t = 0; t < 100; ++t) {
        unsigned n = 2 + rng() % 5;
        auto primes = random_distinct_primes(rng, n, 3000);
        F2Matrix L = build_L(primes);
        CHECK(L.is_symmetric());
        CHECK((L * F2Vector::ones(n)).is_zero());
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b)
                if (a != b) CHECK(L.get(a, b) == (oracle::brute_symbol(oracle::from(primes[a]), oracle::from(primes[b])) < 0));
    }
}

TEST_CASE("single prime shapes")
{
    // -1-6i has n = 1, so the i-branch has no solution.
    auto r1 = selmer_candidate_set(SelmerShape::NegSquare, {GaussInt(-1, -6)});
    REQUIRE(r1.candidates.size() == 2);
    CHECK(r1.candidates[0].label() == "1");
    CHECK(r1.candidates[1].label() == "p1");
    CHECK(r1.dim == 1);
    CHECK(r1.rank_upper == 0);

    // 1-4i has n = 0.
    REQUIRE(mn_invariants(GaussInt(1, -4)).n_bar() == 0);
    auto r0 = selmer_candidate_set(SelmerShape::NegSquare, {GaussInt(1, -4)});
    std::set<std::string> labels;
    for (const auto& c : r0.candidates) labels.insert(c.label());
    CHECK(labels == std::set<std::string>{"1", "p1", "i", "i*p1"});
    CHECK(r0.dim == 2);
    CHECK(r0.rank_upper == 2);
    CHECK(r0.is_group);
}

TEST_CASE("shape parsing and alpha")
{
    std::vector<GaussInt> ps{GaussInt(-1, -6), GaussInt(1, -4)};
    GaussInt prod = ps[0] * ps[1];
    CHECK(shape_alpha(SelmerShape::Plus, ps) == prod);
    CHECK(shape_alpha(SelmerShape::Minus, ps) == -prod);
    CHECK(shape_alpha(SelmerShape::NegSquare, ps) == -(prod * prod));
    for (auto s : {SelmerShape::Plus, SelmerShape::Minus, SelmerShape::NegSquare}) CHECK(parse_shape(to_string(s)) == s);
    CHECK_THROWS(parse_shape("square"));
}

TEST_CASE("candidate set matches the definition; dim matches brute-force span")
{
    std::mt19937_64 rng(52);
    for (int t = 0; t < 60; ++t) {
        unsigned n = 1 + rng() % 6;
        auto primes = random_distinct_primes(rng, n, 2000);
        auto rep = selmer_candidate_set(SelmerShape::NegSquare, primes);
        std::set<std::pair<bool, std::uint64_t>> got;
        for (const auto& c : rep.candidates) got.insert({c.times_i, c.support.bits()});
        CHECK(got == brute_candidates(primes));
        CHECK(got.count({false, (1ULL << n) - 1}) == 1);  // the full product is always present

        std::set<std::uint64_t> span{0};
        for (const auto& c : rep.candidates) {
            std::uint64_t cls = c.support.bits() | (std::uint64_t{c.times_i} << n);
            std::set<std::uint64_t> next = span;
            for (auto s : span) next.insert(s ^ cls);
            span = next;
        }
        CHECK((1ULL << rep.dim) == span.size());
        CHECK(rep.rank_upper == 2 * static_cast<int>(rep.dim) - 2);
        CHECK(rep.is_group == (span.size() == got.size()));
        for (const auto& c : rep.candidates) {
            GaussInt v = c.times_i ? GaussInt(0, 1) : GaussInt(1);
            for (unsigned j = 0; j < n; ++j)
                if (c.support[j]) v *= primes[j];
            CHECK(c.value(primes) == v);
        }
    }
}

TEST_CASE("rank_upper_bound")
{
    CHECK(rank_upper_bound(2) == 2);
    CHECK(rank_upper_bound(1) == 0);
    CHECK(rank_upper_bound(3) == 4);
    CHECK_THROWS(rank_upper_bound(0));
}
