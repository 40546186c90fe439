// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include "oracles.hpp"

#include "rank2qi/certificate.hpp"
#include "rank2qi/constellation.hpp"
#include "rank2qi/curve.hpp"
#include "rank2qi/primes.hpp"
#include "rank2qi/selmer.hpp"
#include "rank2qi/symbols.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

using namespace rank2qi;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Check {
  public:
    void expect(bool cond, const std::string& what)
    {
        if (!cond && failures_++ < 5) first_ += (first_.empty() ? "" : "; ") + what;
    }
    Outcome done(const std::string& summary) const
    {
        if (failures_ == 0) return {true, summary};
        return {false, std::to_string(failures_) + " failures: " + first_};
    }
    long failures() const { return failures_; }

  private:
    long failures_ = 0;
    std::string first_;
};

unsigned shards()
{
    return std::max(2U, std::min(8U, std::thread::hardware_concurrency()));
}

const F2Matrix kL1 = F2Matrix::from_rows({"1001", "0011", "0110", "1100"});
const F2Matrix kL2 = F2Matrix::from_rows({"0110", "1100", "1001", "0011"});

Outcome residue_symbol_oracle()
{
    Check c;
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long> d(-1000000, 1000000);
    auto primes = oracle::primary_primes(5000);
    long pairs = 0;
    for (const auto& p : primes) {
        for (int t = 0; t < 20;) {
            oracle::G a{d(rng), d(rng)};
            if (oracle::divides(p, a)) continue;
            ++t;
            ++pairs;
            c.expect(euler_symbol(oracle::to(a), oracle::to(p)) == oracle::brute_symbol(a, p),
                     "(" + oracle::to(a).to_string() + " / " + oracle::to(p).to_string() + ")");
        }
    }
    c.expect(primes.size() > 600, "too few primary primes enumerated");
    return c.done(std::to_string(primes.size()) + " primary primes, " + std::to_string(pairs) + " symbols");
}

Outcome quartic_reciprocity()
{
    Check c;
    std::mt19937_64 rng(102);
    int n = 0;
    while (n < 200) {
        auto p = oracle::random_primary_prime(rng, 100000), q = oracle::random_primary_prime(rng, 100000);
        if (p == q) continue;
        ++n;
        GaussInt gp = oracle::to(p), gq = oracle::to(q);
        c.expect(euler_symbol(gp, gq) == euler_symbol(gq, gp), gp.to_string() + ", " + gq.to_string());
    }
    return c.done("200 pairs of distinct primary primes, norms < 1e5");
}

Outcome mn_invariant_suite()
{
    Check c;
    std::mt19937_64 rng(103);
    auto consistent = [](const GaussInt& a) {
        return congruent(a, pow(GaussInt(3, 2), static_cast<unsigned long>(mn_invariants(a).n_bar())), GaussInt(4));
    };
    for (int t = 0; t < 500; ++t) {
        GaussInt a = oracle::to(oracle::random_primary(rng, 100000)), b = oracle::to(oracle::random_primary(rng, 100000));
        MNInvariant ma = mn_invariants(a), mb = mn_invariants(b), mab = mn_invariants(a * b);
        c.expect(mab == MNInvariant{(ma.m + mb.m) % 4, (ma.n + mb.n) % 4}, "additivity at " + a.to_string());
        c.expect(consistent(a) && consistent(b) && consistent(a * b), "mod-4 consistency at " + a.to_string());
    }
    auto primes = oracle::primary_primes(10000);
    for (const auto& p : primes) {
        GaussInt g = oracle::to(p);
        c.expect(consistent(g), "mod-4 consistency at " + g.to_string());
        c.expect(symbol_i(g) == euler_symbol(GaussInt(0, 1), g), "(i / " + g.to_string() + ")");
        c.expect(symbol_one_plus_i(g) == euler_symbol(GaussInt(1, 1), g), "(1+i / " + g.to_string() + ")");
    }
    return c.done("500 additive pairs; formula = Euler on " + std::to_string(primes.size()) + " primes of norm < 1e4");
}

Outcome selmer_reproduction(const std::vector<ConstellationHit>& hits)
{
    Check c;
    int l1 = 0, l2 = 0;
    for (const auto& h : hits) {
        std::vector<GaussInt> ps(h.primes.begin(), h.primes.end());
        const std::string tag = h.beta.to_string() + ", k=" + h.k.get_str();
        F2Matrix L = build_L(ps);
        c.expect(L == kL1 || L == kL2, "L at " + tag);
        // (k / p_j) is the same for all j and selects the matrix
        int s = euler_symbol(GaussInt(h.k), ps[0]);
        for (const auto& p : ps) c.expect(euler_symbol(GaussInt(h.k), p) == s, "(k/p) not constant at " + tag);
        c.expect(L == (s == 1 ? kL1 : kL2), "matrix choice at " + tag);
        (L == kL1 ? l1 : l2)++;
        auto rep = selmer_candidate_set(SelmerShape::NegSquare, ps);
        std::vector<std::string> labels;
        for (const auto& d : rep.candidates) labels.push_back(d.label());
        c.expect(labels == std::vector<std::string>{"1", "p1*p2*p3*p4", "i*p1*p3", "i*p2*p4"}, "candidates at " + tag);
        c.expect(rep.dim == 2 && rep.rank_upper == 2 && rep.is_group, "dim at " + tag);
    }
    c.expect(l1 > 0 && l2 > 0, "both matrices should occur");
    return c.done(std::to_string(hits.size()) + " constellations (" + std::to_string(l1) + " with L1, "
                  + std::to_string(l2) + " with L2), all dim 2, rank bound 2");
}

Outcome torsion_reproduction()
{
    Check c;
    auto t = torsion_subgroup(GaussInt(0, 1));
    c.expect(t.label == TorsionLabel::Z2xZ4 && t.points.size() == 8, "gamma = i");
    bool order4 = false;
    for (const auto& p : t.points)
        if (!p.is_infinity() && !p.y().is_zero()) order4 = order4 || add(-1, p, p) == CurvePoint(0, 0);
    c.expect(order4, "no order-4 point doubling to (0,0)");

    std::mt19937_64 rng(105);
    std::uniform_int_distribution<long> d(-2000, 2000);
    int n = 0;
    while (n < 10) {
        GaussInt g(d(rng), d(rng));
        if (g.is_zero() || g == GaussInt(0, 1) || g == GaussInt(0, -1) || !is_square_free(g)) continue;
        ++n;
        const GaussRat gi(GaussInt(0, 1) * g);
        std::vector<CurvePoint> expected{CurvePoint::infinity(), CurvePoint(0, 0), CurvePoint(gi, 0), CurvePoint(-gi, 0)};
        auto tg = torsion_subgroup(g);
        c.expect(tg.label == TorsionLabel::Z2xZ2 && tg.points == expected, "gamma = " + g.to_string());
    }
    return c.done("gamma = i gives Z/2 + Z/4; 10 random square-free gamma give the four 2-torsion points");
}

Outcome isogeny_suite()
{
    Check c;
    std::mt19937_64 rng(106);
    std::uniform_int_distribution<long> d(-6, 6);
    long checked = 0;
    for (int curve = 0; curve < 5;) {
        GaussInt x(d(rng), d(rng)), z(d(rng), d(rng));
        GaussInt a = x * (z * z - x);
        if (x.is_zero() || z.is_zero() || a.is_zero()) continue;
        ++curve;
        const CurvePoint p(GaussRat(x), GaussRat(x * z)), ip = cm_apply(p);
        int taken = 0;
        for (long u = -5; u <= 5 && taken < 100; ++u)
            for (long v = -5; v <= 5 && taken < 100; ++v, ++taken) {
                CurvePoint q = add(a, multiply(a, p, u), multiply(a, ip, v));
                if ((u + v) & 1) q = add(a, q, CurvePoint(0, 0));
                CurvePoint img = phi_forward(a, q);
                c.expect(on_curve(-GaussInt(4) * a, img), "phi image off curve");
                c.expect(phi_dual(a, img) == add(a, q, q), "dual(phi(P)) != 2P");
                CurvePoint t = twist_iso(a, img);
                c.expect(on_curve(a, t), "twist image off curve");
                c.expect(twist_iso_inverse(a, t) == img, "twist round trip");
                ++checked;
            }
    }
    return c.done(std::to_string(checked) + " points over 5 curves");
}

Outcome prefilter_soundness()
{
    Check c;
    int accepted = 0;
    for (long r = 0; r < 16; ++r)
        for (long i = 0; i < 16; ++i)
            for (long k = 0; k < 16; ++k) {
                const long dr[4] = {-k, -k, k, k}, di[4] = {k, -k, -k, k};
                bool direct = true;
                for (int j = 0; j < 4; ++j)
                    direct = direct && oracle::mod(r + dr[j], 16) == 15 && oracle::mod(i + di[j], 16) == 10;
                c.expect(prefilter_accepts(r, i, k) == direct, "(" + std::to_string(r) + "," + std::to_string(i) + "," + std::to_string(k) + ")");
                c.expect(direct_congruence_test(GaussInt(r, i), k) == direct, "library direct test");
                accepted += direct;
            }
    return c.done("4096 residue combinations, " + std::to_string(accepted) + " accepted");
}

Outcome end_to_end()
{
    Check c;
    auto progress = [](const SearchProgress& p) {
        std::printf("       progress: rings %ld..%ld, |k| <= %ld, %llu pairs, pass rate %.5f, %zu hits\n",
                    p.region.ring_lo, p.region.ring_hi, p.region.k_max,
                    static_cast<unsigned long long>(p.stats.pairs), p.stats.pass_rate(), p.total_hits);
        std::fflush(stdout);
    };
    auto hits = search_expanding(2, 1L << 16, 64, shards(), progress);
    c.expect(!hits.empty(), "no hit found");
    if (hits.empty()) return c.done("");
    const auto& h = hits.front();
    // frozen from the first verified run
    c.expect(h.beta == GaussInt(15, 10) && h.k == 16, "first hit moved: " + h.beta.to_string() + ", " + h.k.get_str());

    auto res = certify(h.beta, h.k);
    c.expect(std::holds_alternative<Certificate>(res), "certify failed");
    if (!std::holds_alternative<Certificate>(res)) return c.done("");
    const auto& cert = std::get<Certificate>(res);
    c.expect(cert.alpha == GaussInt(mpz_class("-29632197361"), mpz_class("-28165350000")), "frozen alpha");
    auto rep = verify_certificate(json::parse(serialize_certificate(cert)));
    c.expect(rep.ok, "verify_certificate rejected the certificate");
    for (const auto& f : rep.failures) c.expect(false, f);

    const CurvePoint p = rank_point(h.beta, h.k);
    c.expect(on_curve(cert.alpha, p) && !p.y().is_zero(), "point");
    c.expect(!is_torsion(cert.gamma, p), "point is torsion");
    // cross-check by the group law: no small multiple of P vanishes
    CurvePoint q = p;
    for (int n = 1; n <= 12; ++n, q = add(cert.alpha, q, p)) c.expect(!q.is_infinity(), std::to_string(n) + "P = O");
    c.expect(is_genuine(h.beta, h.k).genuine && cert.genuine_witness != 0, "not genuine");
    return c.done("first hit beta = " + h.beta.to_string() + ", k = " + h.k.get_str()
                  + "; certificate verified independently");
}

Outcome density_check()
{
    auto s = prime_density_stats(Box::centered(1000), shards());
    double r = 128.0 * s.target_ratio(), ra = 32.0 * s.associates_ratio();
    Check c;
    c.expect(r >= 0.7 && r <= 1.3, "128 * ratio = " + std::to_string(r));
    c.expect(ra >= 0.7 && ra <= 1.3, "32 * associate ratio = " + std::to_string(ra));
    char buf[160];
    std::snprintf(buf, sizeof buf, "%llu of %llu primes, 128 * ratio = %.4f; associate classes 32 * ratio = %.4f",
                  static_cast<unsigned long long>(s.target), static_cast<unsigned long long>(s.total), r, ra);
    return c.done(buf);
}

Outcome symbol_pattern_check(const std::vector<ConstellationHit>& hits)
{
    Check c;
    int certified = 0;
    for (const auto& h : hits) {
        auto res = certify(h.beta, h.k);
        const std::string tag = h.beta.to_string() + ", k=" + h.k.get_str();
        c.expect(std::holds_alternative<Certificate>(res), "certify failed at " + tag);
        if (!std::holds_alternative<Certificate>(res)) continue;
        ++certified;
        const auto& pr = std::get<Certificate>(res).primes;
        c.expect(symbol_pattern(pr).holds(), "pattern at " + tag);
        auto b = [&](int x, int y) { return oracle::brute_symbol(oracle::from(pr[x]), oracle::from(pr[y])); };
        int s12 = b(0, 1), s13 = b(0, 2), s14 = b(0, 3), s23 = b(1, 2), s24 = b(1, 3), s34 = b(2, 3);
        c.expect(s14 == s23 && s23 == s24 && s12 == s13 && s13 == s34 && s14 != s12, "brute-force pattern at " + tag);
    }
    return c.done(std::to_string(certified) + " certified constellations");
}

}  // namespace

int main()
{
    using clock = std::chrono::steady_clock;
    const auto hits = search_region({0, 120, 120}, shards());

    struct Criterion {
        int id;
        const char* name;
        double limit_s;  // 0 = no limit
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "residue-symbol oracle equivalence", 60, residue_symbol_oracle},
        {2, "quartic-reciprocity symmetry", 0, quartic_reciprocity},
        {3, "(m, n) invariant suite", 0, mn_invariant_suite},
        {4, "Selmer reproduction", 0, [&] { return selmer_reproduction(hits); }},
        {5, "torsion reproduction", 10, torsion_reproduction},
        {6, "isogeny suite", 0, isogeny_suite},
        {7, "constellation pre-filter soundness", 0, prefilter_soundness},
        {8, "end-to-end search, certify, verify", 0, end_to_end},
        {9, "density of primes = -1-6i mod 16", 300, density_check},
        {10, "residue symbol pattern on certified constellations", 0, [&] { return symbol_pattern_check(hits); }},
    };

    int failed = 0;
    for (const auto& cr : criteria) {
        auto t0 = clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        if (cr.limit_s > 0 && secs > cr.limit_s) {
            o.pass = false;
            o.detail += " (over the " + std::to_string(static_cast<int>(cr.limit_s)) + " s limit)";
        }
        failed += !o.pass;
        std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", cr.id, cr.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
