#ifndef RANK2QI_GAUSSIAN_HPP_
#define RANK2QI_GAUSSIAN_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace rank2qi {

/* Exact Gaussian integer a+bi with arbitrary-precision parts. */
class GaussInt {
  public:
    GaussInt() = default;
    GaussInt(long re, long im = 0) : re_(re), im_(im) {}
    GaussInt(mpz_class re, mpz_class im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit GaussInt(const mpz_class& re) : re_(re), im_(0) {}

    static GaussInt i() { return {0, 1}; }
    static GaussInt one_plus_i() { return {1, 1}; }

    const mpz_class& re() const { return re_; }
    const mpz_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_unit() const;
    /* divisible by 1+i */
    bool is_even() const;

    GaussInt conj() const { return {re_, -im_}; }
    GaussInt operator-() const { return {-re_, -im_}; }

    GaussInt& operator+=(const GaussInt& o);
    GaussInt& operator-=(const GaussInt& o);
    GaussInt& operator*=(const GaussInt& o);

    friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
    friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
    friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
    friend bool operator==(const GaussInt& a, const GaussInt& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /* "a+bi" style, e.g. "-1-6i", "i", "3", "5i". */
    std::string to_string() const;

  private:
    mpz_class re_;
    mpz_class im_;
};

/* Total order by (norm, re, im). */
bool norm_order_less(const GaussInt& a, const GaussInt& b);

mpz_class norm(const GaussInt& a);

/* i^s for s taken mod 4. */
GaussInt unit_power(int s);

GaussInt pow(GaussInt base, unsigned long e);

/*
 * Euclidean division n = q*d + r with norm(r) <= norm(d)/2.  Each
 * coordinate of the exact quotient n/d is rounded to the nearest integer,
 * ties going to the even integer.
 */
std::pair<GaussInt, GaussInt> divmod_nearest(const GaussInt& n, const GaussInt& d);

bool divides(const GaussInt& d, const GaussInt& n);

/* n/d, which must be exact. */
GaussInt exact_div(const GaussInt& n, const GaussInt& d);

bool congruent(const GaussInt& a, const GaussInt& b, const GaussInt& m);

/* Largest t with (1+i)^t | a; a != 0. */
unsigned long ram_valuation(const GaussInt& a);

bool is_primary(const GaussInt& a);

/*
 * Unique a+ with a = i^s a+ and a+ = 1 mod (1+i)^3.  Units map to (1, s).
 * Throws std::invalid_argument for zero or even input.
 */
std::pair<GaussInt, int> primary_associate(const GaussInt& a);

/*
 * Normal form of an associate class: a = i^s (1+i)^t u with u odd maps to
 * (1+i)^t u+.  The returned s satisfies a = i^s * canonical.
 */
std::pair<GaussInt, int> canonical_associate(const GaussInt& a);
inline GaussInt canonical(const GaussInt& a) { return canonical_associate(a).first; }

GaussInt gcd(const GaussInt& a, const GaussInt& b);

/* Canonical residue (divmod_nearest remainder) of b^e mod m. */
GaussInt mod_pow(const GaussInt& b, const mpz_class& e, const GaussInt& m);

/* w with w*w == a, if a is a square in Z[i]. */
std::optional<GaussInt> exact_sqrt(const GaussInt& a);

/* Parses "a+bi", "a-bi", "bi", "-i", "7" with optional spaces. */
GaussInt parse_gauss(std::string_view text);

/*
 * Element of Q(i) stored as num/den with gcd(num, den) a unit and den in
 * canonical associate form, so equal values compare equal structurally.
 */
class GaussRat {
  public:
    GaussRat() : num_(0), den_(1) {}
    GaussRat(long v) : num_(v), den_(1) {}
    GaussRat(GaussInt v) : num_(std::move(v)), den_(1) {}
    GaussRat(GaussInt num, GaussInt den);

    const GaussInt& num() const { return num_; }
    const GaussInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == GaussInt(1); }

    GaussRat operator-() const;
    GaussRat inverse() const;

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b);
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b);
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b);
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b);
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

  private:
    GaussInt num_;
    GaussInt den_;
};

/* Square root in Q(i), if one exists. */
std::optional<GaussRat> exact_sqrt(const GaussRat& a);

}  // namespace rank2qi

#endif /* RANK2QI_GAUSSIAN_HPP_ */
