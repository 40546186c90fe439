#include "rank2qi/certificate.hpp"

#include "rank2qi/primes.hpp"
#include "rank2qi/symbols.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace rank2qi {

namespace {

GaussInt quartic_form(const GaussInt& beta, const mpz_class& k)
{
    GaussInt k4(mpz_class(k * k * k * k));
    return pow(beta, 4) + GaussInt(4) * k4;
}

/*
 * (a / p) for a split prime p of prime norm q, computed in Z[i]/p = F_q
 * with i -> -c/d for p = c + di, then GMP's Legendre symbol.
 */
int residue_field_symbol(const GaussInt& a, const GaussInt& p)
{
    mpz_class q = norm(p);
    mpz_class d = p.im(), dinv;
    mpz_mod(d.get_mpz_t(), d.get_mpz_t(), q.get_mpz_t());
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), q.get_mpz_t()) == 0)
        throw std::invalid_argument("residue_field_symbol: " + p.to_string() + " is not split");
    mpz_class x = -p.re() * dinv;
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
    mpz_class v = a.re() + a.im() * x;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
    if (v == 0) throw std::invalid_argument("residue_field_symbol: p divides a");
    return mpz_legendre(v.get_mpz_t(), q.get_mpz_t());
}

bool pattern_of(int s12, int s13, int s14, int s23, int s24, int s34)
{
    return s14 == s23 && s23 == s24 && s12 == s13 && s13 == s34 && s14 != s12;
}

std::string rows_string(const json& rows)
{
    return rows.dump();
}

}  // namespace

GenuineWitness is_genuine(const GaussInt& beta, const mpz_class& k)
{
    GaussInt g = quartic_form(beta, k);
    GaussInt sq = g * g;
    return {sq.im() != 0, sq.im()};
}

CurvePoint rank_point(const GaussInt& beta, const mpz_class& k)
{
    GaussInt kk(k);
    GaussInt x = GaussInt(4) * beta * beta * kk * kk;
    GaussInt y = GaussInt(0, 2) * beta * kk * (pow(beta, 4) - GaussInt(4) * pow(kk, 4));
    return {GaussRat(x), GaussRat(y)};
}

bool SymbolPattern::holds() const
{
    return pattern_of(s12, s13, s14, s23, s24, s34);
}

SymbolPattern symbol_pattern(const std::array<GaussInt, 4>& p)
{
    return {euler_symbol(p[0], p[1]), euler_symbol(p[0], p[2]), euler_symbol(p[0], p[3]),
            euler_symbol(p[1], p[2]), euler_symbol(p[1], p[3]), euler_symbol(p[2], p[3])};
}

CertifyResult certify(const GaussInt& beta, const mpz_class& k)
{
    if (k == 0) return CertifyFailure{reason::kNotDistinct, "k = 0 makes all four p_j equal to beta"};

    GenuineWitness gw = is_genuine(beta, k);
    if (!gw.genuine)
        return CertifyFailure{reason::kNotGenuine,
                              "Im((beta^4 + 4k^4)^2) = 0, so the curve is defined over Q"};

    auto cres = constellation_at(beta, k);
    if (auto* rej = std::get_if<ConstellationRejection>(&cres)) {
        std::string detail = rej->index ? "p" + std::to_string(rej->index) : std::string();
        return CertifyFailure{rej->reason, detail};
    }
    const auto& hit = std::get<ConstellationHit>(cres);

    Certificate cert;
    cert.beta = beta;
    cert.k = k;
    cert.primes = hit.primes;
    cert.genuine = true;
    cert.genuine_witness = gw.imag;

    const GaussInt g0 = quartic_form(beta, k);
    GaussInt prod(1);
    for (const auto& p : cert.primes) prod *= p;
    if (!(prod == g0)) return CertifyFailure{reason::kProductIdentity, prod.to_string()};

    for (const auto& p : cert.primes) {
        if (!(mn_invariants(p) == MNInvariant{0, 1}))
            return CertifyFailure{reason::kSymbolPattern, "(m, n) != (0, 1) for " + p.to_string()};
    }
    if (!symbol_pattern(cert.primes).holds()) return CertifyFailure{reason::kSymbolPattern, ""};

    // g0 is a product of four distinct primes, hence square-free; so is i*g0.
    cert.alpha = -(g0 * g0);
    cert.gamma = GaussInt::i() * g0;
    cert.torsion = torsion_subgroup(cert.gamma, false);
    if (cert.torsion.label != TorsionLabel::Z2xZ2) return CertifyFailure{reason::kTorsion, ""};

    cert.point = rank_point(beta, k);
    cert.point_cm = cm_apply(cert.point);
    for (const auto* pt : {&cert.point, &cert.point_cm}) {
        if (!on_curve(cert.alpha, *pt)) return CertifyFailure{reason::kPointOffCurve, pt->to_string()};
        if (is_torsion(cert.gamma, *pt, false)) return CertifyFailure{reason::kPointTorsion, pt->to_string()};
    }

    std::vector<GaussInt> primes(cert.primes.begin(), cert.primes.end());
    cert.selmer = selmer_candidate_set(SelmerShape::NegSquare, primes);
    if (!(shape_alpha(SelmerShape::NegSquare, primes) == cert.alpha))
        return CertifyFailure{reason::kProductIdentity, "descent coefficient mismatch"};
    if (!cert.selmer.is_group || cert.selmer.dim != 2 || cert.selmer.rank_upper != 2)
        return CertifyFailure{reason::kSelmer, "dim = " + std::to_string(cert.selmer.dim)};

    cert.conclusion = kConclusion;
    return cert;
}

json certificate_to_json(const Certificate& cert)
{
    json primes = json::array();
    for (unsigned j = 0; j < 4; ++j) {
        const GaussInt& p = cert.primes[j];
        mpz_class r, i;
        mpz_fdiv_r_ui(r.get_mpz_t(), p.re().get_mpz_t(), 16);
        mpz_fdiv_r_ui(i.get_mpz_t(), p.im().get_mpz_t(), 16);
        primes.push_back({{"index", std::to_string(j + 1)},
                          {"value", to_json(p)},
                          {"norm", to_json(norm(p))},
                          {"residue_mod_16", to_json(GaussInt(r, i))}});
    }
    json cands = json::array();
    std::vector<GaussInt> pv(cert.primes.begin(), cert.primes.end());
    for (const auto& d : cert.selmer.candidates)
        cands.push_back({{"label", d.label()},
                         {"unit", d.times_i ? "i" : "1"},
                         {"support", d.support.to_string()},
                         {"value", to_json(d.value(pv))}});
    json tors = to_json(cert.torsion);
    tors["gamma"] = to_json(cert.gamma);
    tors["convention"] = kGammaConvention;

    return {{"version", {{"library", kLibraryVersion}, {"format", kCertificateFormat}}},
            {"beta", to_json(cert.beta)},
            {"k", to_json(cert.k)},
            {"primes", primes},
            {"alpha", to_json(cert.alpha)},
            {"L", cert.selmer.L.to_strings()},
            {"selmer_candidates", cands},
            {"selmer_dim", std::to_string(cert.selmer.dim)},
            {"rank_upper", std::to_string(cert.selmer.rank_upper)},
            {"point", to_json(cert.point)},
            {"point_cm", to_json(cert.point_cm)},
            {"torsion", tors},
            {"genuine", {{"value", cert.genuine}, {"im_gamma_squared", to_json(cert.genuine_witness)}}},
            {"conclusion", cert.conclusion}};
}

std::string serialize_certificate(const Certificate& cert)
{
    return certificate_to_json(cert).dump();
}

VerificationReport verify_certificate(const json& doc)
{
    VerificationReport rep;
    auto fail = [&rep](std::string msg) { rep.failures.push_back(std::move(msg)); };
    if (!doc.is_object()) throw FormatError("certificate must be a JSON object");

    const json& ver = require_field(doc, "version");
    if (!ver.is_object() || ver.value("format", "") != kCertificateFormat)
        fail("unsupported certificate format");

    const GaussInt beta = gauss_from_json(require_field(doc, "beta"));
    const mpz_class k = mpz_from_json(require_field(doc, "k"));
    if (k == 0) {
        fail(reason::kNotDistinct);
        rep.ok = false;
        return rep;
    }

    // primes p_j = beta + i^j k (1+i)
    const json& jprimes = require_field(doc, "primes");
    if (!jprimes.is_array() || jprimes.size() != 4) throw FormatError("'primes' must hold 4 entries");
    std::array<GaussInt, 4> p;
    const GaussInt step = GaussInt(k) * GaussInt(1, 1);
    GaussInt unit(0, 1);
    for (int j = 0; j < 4; ++j) {
        p[j] = beta + unit * step;
        unit *= GaussInt(0, 1);
        const json& e = jprimes[j];
        std::string tag = "p" + std::to_string(j + 1);
        if (!(gauss_from_json(require_field(e, "value")) == p[j])) fail(tag + " does not match beta + i^j k(1+i)");
        mpz_class q = norm(p[j]);
        if (mpz_from_json(require_field(e, "norm")) != q) fail(tag + " norm mismatch");
        mpz_class r = p[j].re() - (-1), s = p[j].im() - (-6);
        if (!mpz_divisible_ui_p(r.get_mpz_t(), 16) || !mpz_divisible_ui_p(s.get_mpz_t(), 16))
            fail(tag + " " + reason::kNotCongruent);
        GaussInt res = gauss_from_json(require_field(e, "residue_mod_16"));
        if (res.re() != 15 || res.im() != 10) fail(tag + " residue_mod_16 is not -1-6i");
        if (mpz_probab_prime_p(q.get_mpz_t(), 50) == 0) fail(tag + " " + reason::kNotPrime);
    }
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < a; ++b)
            if (p[a] == p[b]) fail(reason::kNotDistinct);
    if (!rep.failures.empty()) return rep;

    const GaussInt g0 = quartic_form(beta, k);
    if (!(p[0] * p[1] * p[2] * p[3] == g0)) fail(reason::kProductIdentity);
    const GaussInt alpha = -(g0 * g0);
    if (!(gauss_from_json(require_field(doc, "alpha")) == alpha)) fail("alpha != -(beta^4 + 4k^4)^2");

    const json& jg = require_field(doc, "genuine");
    const mpz_class im_sq = (g0 * g0).im();
    if (im_sq == 0) fail(reason::kNotGenuine);
    if (!jg.is_object() || jg.value("value", false) != (im_sq != 0)) fail("genuine flag mismatch");
    if (mpz_from_json(require_field(jg, "im_gamma_squared")) != im_sq) fail("genuineness witness mismatch");

    // L and n_bar through the residue fields F_q.
    int sym[4][4] = {};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a != b) sym[a][b] = residue_field_symbol(p[a], p[b]);
    std::uint32_t rows[4] = {}, n_bar = 0;
    for (int a = 0; a < 4; ++a) {
        bool diag = false;
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            if (sym[a][b] != sym[b][a]) fail("reciprocity (p/q) = (q/p) fails");
            if (sym[a][b] < 0) {
                rows[a] |= 1U << b;
                diag = !diag;
            }
        }
        if (diag) rows[a] |= 1U << a;
        if (residue_field_symbol(GaussInt(0, 1), p[a]) < 0) n_bar |= 1U << a;
    }
    json expected_L = json::array();
    for (int a = 0; a < 4; ++a) {
        std::string s(4, '0');
        for (int b = 0; b < 4; ++b)
            if (rows[a] >> b & 1U) s[b] = '1';
        expected_L.push_back(s);
    }
    if (rows_string(require_field(doc, "L")) != rows_string(expected_L)) fail("L mismatch");
    if (!pattern_of(sym[0][1], sym[0][2], sym[0][3], sym[1][2], sym[1][3], sym[2][3]))
        fail(reason::kSymbolPattern);

    // S' by enumerating all (unit, T) with T a subset of {1..4}.
    auto apply_L = [&rows](std::uint32_t t) {
        std::uint32_t out = 0;
        for (int a = 0; a < 4; ++a)
            if (std::popcount(rows[a] & t) & 1) out |= 1U << a;
        return out;
    };
    std::set<std::pair<bool, std::uint32_t>> expected;
    for (std::uint32_t t = 0; t < 16; ++t) {
        if (apply_L(t) == 0) expected.insert({false, t});
        if (apply_L(t) == n_bar) expected.insert({true, t});
    }
    std::set<std::pair<bool, std::uint32_t>> claimed;
    const json& jc = require_field(doc, "selmer_candidates");
    if (!jc.is_array()) throw FormatError("'selmer_candidates' must be an array");
    for (const json& c : jc) {
        const json& u = require_field(c, "unit");
        const json& sup = require_field(c, "support");
        if (!u.is_string() || !sup.is_string() || sup.get_ref<const std::string&>().size() != 4)
            throw FormatError("malformed Selmer candidate");
        bool ti = u.get_ref<const std::string&>() == "i";
        std::uint32_t t = 0;
        GaussInt val = ti ? GaussInt(0, 1) : GaussInt(1);
        for (int b = 0; b < 4; ++b)
            if (sup.get_ref<const std::string&>()[b] == '1') {
                t |= 1U << b;
                val *= p[b];
            }
        if (!(gauss_from_json(require_field(c, "value")) == val)) fail("Selmer candidate value mismatch");
        claimed.insert({ti, t});
    }
    if (claimed != expected || jc.size() != expected.size()) fail("Selmer candidate set mismatch");
    for (const auto& x : expected)
        for (const auto& y : expected)
            if (!expected.count({x.first != y.first, x.second ^ y.second}))
                fail("Selmer candidate set is not a group");
    unsigned dim = std::bit_width(expected.size()) - 1;
    if ((std::size_t{1} << dim) != expected.size() || dim != 2) fail(reason::kSelmer);
    if (mpz_from_json(require_field(doc, "selmer_dim")) != dim) fail("selmer_dim mismatch");
    if (mpz_from_json(require_field(doc, "rank_upper")) != 2 * static_cast<long>(dim) - 2)
        fail("rank_upper mismatch");

    // The point and its image under [i].
    const GaussInt kk(k);
    const GaussRat x0(GaussInt(4) * beta * beta * kk * kk);
    const GaussRat y0(GaussInt(0, 2) * beta * kk * (beta * beta * beta * beta - GaussInt(4) * kk * kk * kk * kk));
    auto satisfies = [&alpha](const GaussRat& x, const GaussRat& y) {
        return y * y == x * x * x + GaussRat(alpha) * x;
    };
    CurvePoint jp = point_from_json(require_field(doc, "point"));
    CurvePoint jpc = point_from_json(require_field(doc, "point_cm"));
    if (!(jp == CurvePoint(x0, y0))) fail("point mismatch");
    if (!(jpc == CurvePoint(-x0, GaussRat(GaussInt(0, 1)) * y0))) fail("point_cm mismatch");
    for (const auto* pt : {&jp, &jpc}) {
        if (pt->is_infinity() || !satisfies(pt->x(), pt->y())) fail(reason::kPointOffCurve);
        else if (pt->y().is_zero()) fail(reason::kPointTorsion);
    }

    // Torsion: gamma = i g0 is square-free (four distinct primes) and not a unit,
    // so the torsion is the 2-torsion and every non-O torsion point has y = 0.
    const json& jt = require_field(doc, "torsion");
    const GaussInt gamma = GaussInt(0, 1) * g0;
    if (!(gauss_from_json(require_field(jt, "gamma")) == gamma)) fail("torsion gamma mismatch");
    if (!(gamma * gamma == alpha)) fail("gamma^2 != alpha");
    if (norm(gamma) <= 1) fail("gamma is a unit");
    if (require_field(jt, "group") != "Z2xZ2") fail(reason::kTorsion);
    const json& jtp = require_field(jt, "points");
    if (!jtp.is_array()) throw FormatError("'torsion.points' must be an array");
    std::vector<CurvePoint> tp;
    for (const json& e : jtp) tp.push_back(point_from_json(e));
    const GaussRat gi(gamma * GaussInt(0, 1));
    std::vector<CurvePoint> want{CurvePoint::infinity(), CurvePoint(GaussRat(0), GaussRat(0)),
                                 CurvePoint(gi, GaussRat(0)), CurvePoint(-gi, GaussRat(0))};
    if (tp != want) fail("torsion points mismatch");

    if (require_field(doc, "conclusion") != kConclusion) fail("conclusion mismatch");

    if (rep.failures.empty()) {
        auto res = certify(beta, k);
        if (auto* f = std::get_if<CertifyFailure>(&res))
            fail("re-certification failed: " + f->reason);
        else if (certificate_to_json(std::get<Certificate>(res)) != doc)
            fail("certificate differs from canonical re-emission");
    }
    rep.ok = rep.failures.empty();
    return rep;
}

VerificationReport verify_certificate(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("certificate is not valid JSON: ") + e.what());
    }
    return verify_certificate(doc);
}

}  // namespace rank2qi
