#include "rank2qi/curve.hpp"

#include "rank2qi/primes.hpp"

#include <algorithm>
#include <stdexcept>

namespace rank2qi {

namespace {

CurvePoint add_unchecked(const GaussInt& a, const CurvePoint& p, const CurvePoint& q)
{
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    GaussRat lambda;
    if (p.x() == q.x()) {
        if (p.y() == -q.y()) return CurvePoint::infinity();
        lambda = (GaussRat(3) * p.x() * p.x() + GaussRat(a)) / (GaussRat(2) * p.y());
    } else {
        lambda = (q.y() - p.y()) / (q.x() - p.x());
    }
    GaussRat x3 = lambda * lambda - p.x() - q.x();
    GaussRat y3 = lambda * (p.x() - x3) - p.y();
    return {x3, y3};
}

void require_on_curve(const GaussInt& a, const CurvePoint& p, const char* what)
{
    if (!on_curve(a, p))
        throw std::invalid_argument(std::string(what) + ": point " + p.to_string()
                                    + " is not on y^2 = x^3 + (" + a.to_string() + ")x");
}

bool is_origin(const CurvePoint& p)
{
    return !p.is_infinity() && p.x().is_zero() && p.y().is_zero();
}

void require_torsion_gamma(const GaussInt& gamma, bool check_square_free)
{
    if (gamma.is_zero()) throw std::invalid_argument("gamma = 0 gives a singular curve");
    if (check_square_free && !is_square_free(gamma))
        throw std::invalid_argument("gamma = " + gamma.to_string() + " is not square-free");
}

}  // namespace

std::string CurvePoint::to_string() const
{
    if (inf_) return "O";
    return "(" + x_.to_string() + ", " + y_.to_string() + ")";
}

bool on_curve(const GaussInt& a, const CurvePoint& p)
{
    if (p.is_infinity()) return true;
    return p.y() * p.y() == p.x() * p.x() * p.x() + GaussRat(a) * p.x();
}

CurvePoint negate(const CurvePoint& p)
{
    if (p.is_infinity()) return p;
    return {p.x(), -p.y()};
}

CurvePoint add(const GaussInt& a, const CurvePoint& p, const CurvePoint& q)
{
    require_on_curve(a, p, "add");
    require_on_curve(a, q, "add");
    return add_unchecked(a, p, q);
}

CurvePoint multiply(const GaussInt& a, const CurvePoint& p, long n)
{
    require_on_curve(a, p, "multiply");
    CurvePoint base = n < 0 ? negate(p) : p;
    unsigned long k = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    CurvePoint acc = CurvePoint::infinity();
    while (k) {
        if (k & 1) acc = add_unchecked(a, acc, base);
        k >>= 1;
        if (k) base = add_unchecked(a, base, base);
    }
    return acc;
}

CurvePoint cm_apply(const CurvePoint& p)
{
    if (p.is_infinity()) return p;
    return {-p.x(), GaussRat(GaussInt::i()) * p.y()};
}

CurvePoint phi_forward(const GaussInt& a, const CurvePoint& p)
{
    require_on_curve(a, p, "phi_forward");
    if (p.is_infinity() || is_origin(p)) return CurvePoint::infinity();
    GaussRat x2 = p.x() * p.x();
    return {p.y() * p.y() / x2, p.y() * (GaussRat(a) - x2) / x2};
}

CurvePoint phi_dual(const GaussInt& a, const CurvePoint& p)
{
    const GaussInt target = GaussInt(-4) * a;
    require_on_curve(target, p, "phi_dual");
    if (p.is_infinity() || is_origin(p)) return CurvePoint::infinity();
    GaussRat x2 = p.x() * p.x();
    return {p.y() * p.y() / (GaussRat(4) * x2),
            -(p.y() * (GaussRat(GaussInt(4) * a) + x2)) / (GaussRat(8) * x2)};
}

CurvePoint twist_iso(const GaussInt& a, const CurvePoint& p)
{
    require_on_curve(GaussInt(-4) * a, p, "twist_iso");
    if (p.is_infinity()) return p;
    const GaussRat u2(pow(GaussInt::one_plus_i(), 2));
    const GaussRat u3(pow(GaussInt::one_plus_i(), 3));
    return {p.x() / u2, p.y() / u3};
}

CurvePoint twist_iso_inverse(const GaussInt& a, const CurvePoint& p)
{
    require_on_curve(a, p, "twist_iso_inverse");
    if (p.is_infinity()) return p;
    const GaussRat u2(pow(GaussInt::one_plus_i(), 2));
    const GaussRat u3(pow(GaussInt::one_plus_i(), 3));
    return {p.x() * u2, p.y() * u3};
}

std::vector<CurvePoint> two_torsion_points(const GaussInt& gamma)
{
    if (gamma.is_zero()) throw std::invalid_argument("gamma = 0 gives a singular curve");
    GaussInt gi = gamma * GaussInt::i();
    return {CurvePoint::infinity(), CurvePoint(GaussRat(0), GaussRat(0)),
            CurvePoint(GaussRat(gi), GaussRat(0)), CurvePoint(GaussRat(-gi), GaussRat(0))};
}

std::vector<GaussRat> biquadratic_roots(const GaussInt& c4, const GaussInt& c2, const GaussInt& c0)
{
    if (c4.is_zero()) throw std::invalid_argument("biquadratic_roots: leading coefficient is zero");
    std::vector<GaussRat> out;
    GaussInt disc = c2 * c2 - GaussInt(4) * c4 * c0;
    auto s = exact_sqrt(disc);
    if (!s) return out;
    for (const GaussInt& sd : {*s, -*s}) {
        GaussRat x_sq = GaussRat(-c2 + sd, GaussInt(2) * c4);
        if (auto x = exact_sqrt(x_sq)) {
            for (const GaussRat& r : {*x, -*x})
                if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
        }
    }
    return out;
}

std::vector<GaussRat> psi3_roots(const GaussInt& gamma)
{
    GaussInt g2 = gamma * gamma;
    return biquadratic_roots(GaussInt(3), GaussInt(6) * g2, -(g2 * g2));
}

std::vector<GaussRat> psi4_quartic_roots(const GaussInt& gamma)
{
    GaussInt g2 = gamma * gamma;
    return biquadratic_roots(GaussInt(1), GaussInt(6) * g2, g2 * g2);
}

std::string to_string(TorsionLabel label)
{
    return label == TorsionLabel::Z2xZ4 ? "Z2xZ4" : "Z2xZ2";
}

TorsionGroup torsion_subgroup(const GaussInt& gamma, bool check_square_free)
{
    require_torsion_gamma(gamma, check_square_free);
    if (!psi3_roots(gamma).empty())
        throw std::logic_error("psi_3 has a root in Q(i) for gamma = " + gamma.to_string());
    if (!psi4_quartic_roots(gamma).empty())
        throw std::logic_error("psi_4 quartic factor has a root in Q(i) for gamma = " + gamma.to_string());

    TorsionGroup tg;
    tg.points = two_torsion_points(gamma);
    // Order 4 forces x0^2 = gamma^2, so y0^2 = 2 x0^3.
    for (const GaussInt& x0 : {gamma, -gamma}) {
        if (auto y0 = exact_sqrt(GaussInt(2) * x0 * x0 * x0)) {
            tg.points.emplace_back(GaussRat(x0), GaussRat(*y0));
            tg.points.emplace_back(GaussRat(x0), GaussRat(-*y0));
        }
    }
    tg.label = tg.points.size() == 8 ? TorsionLabel::Z2xZ4 : TorsionLabel::Z2xZ2;
    bool gamma_is_pm_i = gamma == GaussInt::i() || gamma == -GaussInt::i();
    if ((tg.label == TorsionLabel::Z2xZ4) != gamma_is_pm_i || (tg.points.size() != 4 && tg.points.size() != 8))
        throw std::logic_error("unexpected torsion structure for gamma = " + gamma.to_string());
    return tg;
}

bool is_torsion(const GaussInt& gamma, const CurvePoint& p, bool check_square_free)
{
    require_torsion_gamma(gamma, check_square_free);
    require_on_curve(gamma * gamma, p, "is_torsion");
    if (p.is_infinity()) return true;
    if (gamma == GaussInt::i() || gamma == -GaussInt::i()) {
        auto tg = torsion_subgroup(gamma);
        return std::find(tg.points.begin(), tg.points.end(), p) != tg.points.end();
    }
    return p.y().is_zero();
}

}  // namespace rank2qi
