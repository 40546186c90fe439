#ifndef RANK2QI_CURVE_HPP_
#define RANK2QI_CURVE_HPP_

#include "rank2qi/gaussian.hpp"

#include <string>
#include <vector>

namespace rank2qi {

/* Point on E_a : y^2 = x^3 + a x over Q(i), a in Z[i]. */
class CurvePoint {
  public:
    static CurvePoint infinity() { return CurvePoint(); }
    CurvePoint(GaussRat x, GaussRat y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

    bool is_infinity() const { return inf_; }
    const GaussRat& x() const { return x_; }
    const GaussRat& y() const { return y_; }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b)
    {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }

    std::string to_string() const;

  private:
    CurvePoint() = default;
    bool inf_ = true;
    GaussRat x_, y_;
};

bool on_curve(const GaussInt& a, const CurvePoint& p);

CurvePoint negate(const CurvePoint& p);

/* Chord-tangent law; throws std::invalid_argument if an input is off the curve. */
CurvePoint add(const GaussInt& a, const CurvePoint& p, const CurvePoint& q);
CurvePoint multiply(const GaussInt& a, const CurvePoint& p, long n);

/* [i] : (x, y) -> (-x, i y) */
CurvePoint cm_apply(const CurvePoint& p);

/* phi : E_a -> E_{-4a}, (x, y) -> (y^2/x^2, y (a - x^2)/x^2), kernel {O, (0,0)} */
CurvePoint phi_forward(const GaussInt& a, const CurvePoint& p);

/* dual : E_{-4a} -> E_a, (x, y) -> (y^2/(4x^2), -y (4a + x^2)/(8x^2)) */
CurvePoint phi_dual(const GaussInt& a, const CurvePoint& p);

/* E_{-4a} -> E_a, (x, y) -> (x/(1+i)^2, y/(1+i)^3) and its inverse. */
CurvePoint twist_iso(const GaussInt& a, const CurvePoint& p);
CurvePoint twist_iso_inverse(const GaussInt& a, const CurvePoint& p);

/* {O, (0,0), (gamma i, 0), (-gamma i, 0)} on E_{gamma^2}. */
std::vector<CurvePoint> two_torsion_points(const GaussInt& gamma);

/* All x in Q(i) with c4 x^4 + c2 x^2 + c0 = 0. */
std::vector<GaussRat> biquadratic_roots(const GaussInt& c4, const GaussInt& c2, const GaussInt& c0);

/* Roots in Q(i) of psi_3 = 3x^4 + 6 gamma^2 x^2 - gamma^4. */
std::vector<GaussRat> psi3_roots(const GaussInt& gamma);
/* Roots in Q(i) of the quartic factor x^4 + 6 gamma^2 x^2 + gamma^4 of psi_4 / y. */
std::vector<GaussRat> psi4_quartic_roots(const GaussInt& gamma);

enum class TorsionLabel { Z2xZ2, Z2xZ4 };
std::string to_string(TorsionLabel label);

struct TorsionGroup {
    TorsionLabel label = TorsionLabel::Z2xZ2;
    std::vector<CurvePoint> points;
};

/*
 * Torsion of E_{gamma^2}(Q(i)) for square-free nonzero gamma.  Callers that
 * already hold a square-freeness witness may skip the factorization.
 */
TorsionGroup torsion_subgroup(const GaussInt& gamma, bool check_square_free = true);

/* Whether p in E_{gamma^2}(Q(i)) has finite order. */
bool is_torsion(const GaussInt& gamma, const CurvePoint& p, bool check_square_free = true);

}  // namespace rank2qi

#endif /* RANK2QI_CURVE_HPP_ */
