#include "rank2qi/gaussian.hpp"

#include <cctype>
#include <stdexcept>

namespace rank2qi {

namespace {

/* Nearest integer to p/q (q > 0), ties to even. */
mpz_class round_half_even(const mpz_class& p, const mpz_class& q)
{
    mpz_class fl, rem;
    mpz_fdiv_qr(fl.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    mpz_class twice = 2 * rem;
    int c = cmp(twice, q);
    if (c > 0 || (c == 0 && mpz_odd_p(fl.get_mpz_t())))
        fl += 1;
    return fl;
}

std::string coeff_string(const mpz_class& c)
{
    if (c == 1) return "";
    if (c == -1) return "-";
    return c.get_str();
}

}  // namespace

bool GaussInt::is_unit() const
{
    return (abs(re_) == 1 && im_ == 0) || (re_ == 0 && abs(im_) == 1);
}

bool GaussInt::is_even() const
{
    return mpz_odd_p(re_.get_mpz_t()) == mpz_odd_p(im_.get_mpz_t());
}

GaussInt& GaussInt::operator+=(const GaussInt& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussInt& GaussInt::operator-=(const GaussInt& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussInt& GaussInt::operator*=(const GaussInt& o)
{
    mpz_class r = re_ * o.re_ - im_ * o.im_;
    mpz_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string GaussInt::to_string() const
{
    if (im_ == 0) return re_.get_str();
    if (re_ == 0) return coeff_string(im_) + "i";
    std::string s = re_.get_str();
    if (im_ > 0) s += "+";
    return s + coeff_string(im_) + "i";
}

bool norm_order_less(const GaussInt& a, const GaussInt& b)
{
    int c = cmp(norm(a), norm(b));
    if (c != 0) return c < 0;
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
}

mpz_class norm(const GaussInt& a)
{
    return a.re() * a.re() + a.im() * a.im();
}

GaussInt unit_power(int s)
{
    switch (((s % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

GaussInt pow(GaussInt base, unsigned long e)
{
    GaussInt r(1);
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

std::pair<GaussInt, GaussInt> divmod_nearest(const GaussInt& n, const GaussInt& d)
{
    if (d.is_zero()) throw std::domain_error("division by zero in Z[i]");
    mpz_class nd = norm(d);
    GaussInt num = n * d.conj();
    GaussInt q(round_half_even(num.re(), nd), round_half_even(num.im(), nd));
    GaussInt r = n - q * d;
    return {std::move(q), std::move(r)};
}

bool divides(const GaussInt& d, const GaussInt& n)
{
    if (d.is_zero()) return n.is_zero();
    mpz_class nd = norm(d);
    GaussInt num = n * d.conj();
    return mpz_divisible_p(num.re().get_mpz_t(), nd.get_mpz_t())
        && mpz_divisible_p(num.im().get_mpz_t(), nd.get_mpz_t());
}

GaussInt exact_div(const GaussInt& n, const GaussInt& d)
{
    if (d.is_zero()) throw std::domain_error("division by zero in Z[i]");
    mpz_class nd = norm(d);
    GaussInt num = n * d.conj();
    if (!mpz_divisible_p(num.re().get_mpz_t(), nd.get_mpz_t())
        || !mpz_divisible_p(num.im().get_mpz_t(), nd.get_mpz_t()))
        throw std::invalid_argument("inexact division " + n.to_string() + " / " + d.to_string());
    mpz_class re, im;
    mpz_divexact(re.get_mpz_t(), num.re().get_mpz_t(), nd.get_mpz_t());
    mpz_divexact(im.get_mpz_t(), num.im().get_mpz_t(), nd.get_mpz_t());
    return {std::move(re), std::move(im)};
}

bool congruent(const GaussInt& a, const GaussInt& b, const GaussInt& m)
{
    return divides(m, a - b);
}

unsigned long ram_valuation(const GaussInt& a)
{
    if (a.is_zero()) throw std::invalid_argument("ram_valuation of zero");
    // (a+bi)/(1+i) = ((a+b) + (b-a)i)/2
    unsigned long t = 0;
    mpz_class re = a.re(), im = a.im();
    while (mpz_odd_p(re.get_mpz_t()) == mpz_odd_p(im.get_mpz_t())) {
        mpz_class r2 = re + im;
        mpz_class i2 = im - re;
        mpz_divexact_ui(re.get_mpz_t(), r2.get_mpz_t(), 2);
        mpz_divexact_ui(im.get_mpz_t(), i2.get_mpz_t(), 2);
        ++t;
    }
    return t;
}

bool is_primary(const GaussInt& a)
{
    // a+bi = 1 mod (2+2i)  <=>  b even and a+b = 1 mod 4
    if (!mpz_even_p(a.im().get_mpz_t())) return false;
    mpz_class s = a.re() + a.im();
    return mpz_fdiv_ui(s.get_mpz_t(), 4) == 1;
}

std::pair<GaussInt, int> primary_associate(const GaussInt& a)
{
    if (a.is_zero()) throw std::invalid_argument("primary_associate of zero");
    if (a.is_unit()) {
        for (int s = 0; s < 4; ++s)
            if (unit_power(s) == a) return {GaussInt(1), s};
    }
    if (a.is_even())
        throw std::invalid_argument("primary_associate of even element " + a.to_string());
    for (int s = 0; s < 4; ++s) {
        GaussInt cand = a * unit_power(-s);
        if (is_primary(cand)) return {std::move(cand), s};
    }
    throw std::logic_error("no primary associate for " + a.to_string());
}

std::pair<GaussInt, int> canonical_associate(const GaussInt& a)
{
    if (a.is_zero()) throw std::invalid_argument("canonical_associate of zero");
    unsigned long t = ram_valuation(a);
    GaussInt ram = pow(GaussInt::one_plus_i(), t);
    auto [odd_plus, s] = primary_associate(exact_div(a, ram));
    return {ram * odd_plus, s};
}

GaussInt gcd(const GaussInt& a, const GaussInt& b)
{
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0)");
    GaussInt x = a, y = b;
    while (!y.is_zero()) {
        GaussInt r = divmod_nearest(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return canonical(x);
}

GaussInt mod_pow(const GaussInt& b, const mpz_class& e, const GaussInt& m)
{
    if (m.is_zero()) throw std::domain_error("mod_pow with zero modulus");
    if (e < 0) throw std::invalid_argument("mod_pow with negative exponent");
    GaussInt base = divmod_nearest(b, m).second;
    GaussInt acc = divmod_nearest(GaussInt(1), m).second;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t k = bits; k-- > 0;) {
        acc = divmod_nearest(acc * acc, m).second;
        if (mpz_tstbit(e.get_mpz_t(), k)) acc = divmod_nearest(acc * base, m).second;
    }
    return acc;
}

std::optional<GaussInt> exact_sqrt(const GaussInt& a)
{
    if (a.is_zero()) return GaussInt(0);
    mpz_class n2 = norm(a);
    if (!mpz_perfect_square_p(n2.get_mpz_t())) return std::nullopt;
    mpz_class n = sqrt(n2);
    mpz_class c2 = n + a.re();
    mpz_class d2 = n - a.re();
    if (mpz_odd_p(c2.get_mpz_t())) return std::nullopt;
    c2 /= 2;
    d2 /= 2;
    if (!mpz_perfect_square_p(c2.get_mpz_t()) || !mpz_perfect_square_p(d2.get_mpz_t()))
        return std::nullopt;
    mpz_class c = sqrt(c2), d = sqrt(d2);
    if (2 * c * d != a.im()) d = -d;
    GaussInt w(c, d);
    if (!(w * w == a)) return std::nullopt;
    return w;
}

GaussInt parse_gauss(std::string_view text)
{
    auto fail = [&]() { return std::invalid_argument("cannot parse Gaussian integer '" + std::string(text) + "'"); };
    // Spaces are allowed around signs only, so "1 2" is rejected rather than read as 12.
    std::string s;
    bool gap = false;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            gap = !s.empty();
            continue;
        }
        if (gap && std::isalnum(static_cast<unsigned char>(ch)) && std::isalnum(static_cast<unsigned char>(s.back())))
            throw fail();
        gap = false;
        s += ch;
    }
    if (s.empty()) throw std::invalid_argument("empty Gaussian integer");

    std::optional<mpz_class> re, im;
    size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw fail();
        }
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        std::string digits = s.substr(start, pos - start);
        bool imag = pos < s.size() && s[pos] == 'i';
        if (imag) ++pos;
        if (digits.empty() && !imag) throw fail();
        mpz_class v = digits.empty() ? mpz_class(1) : mpz_class(digits, 10);
        if (sign < 0) v = -v;
        auto& slot = imag ? im : re;
        if (slot) throw fail();
        slot = v;
        first = false;
    }
    return {re.value_or(0), im.value_or(0)};
}

GaussRat::GaussRat(GaussInt num, GaussInt den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw std::domain_error("zero denominator in Q(i)");
    if (num_.is_zero()) {
        den_ = GaussInt(1);
        return;
    }
    if (den_ == GaussInt(1)) return;
    GaussInt g = gcd(num_, den_);
    if (!(g == GaussInt(1))) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    auto [c, s] = canonical_associate(den_);
    den_ = std::move(c);
    if (s != 0) num_ *= unit_power(-s);
}

GaussRat GaussRat::operator-() const
{
    GaussRat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

GaussRat GaussRat::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero in Q(i)");
    return GaussRat(den_, num_);
}

GaussRat operator+(const GaussRat& a, const GaussRat& b)
{
    if (a.den_ == b.den_) return GaussRat(a.num_ + b.num_, a.den_);
    return GaussRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

GaussRat operator-(const GaussRat& a, const GaussRat& b)
{
    return a + (-b);
}

GaussRat operator*(const GaussRat& a, const GaussRat& b)
{
    return GaussRat(a.num_ * b.num_, a.den_ * b.den_);
}

GaussRat operator/(const GaussRat& a, const GaussRat& b)
{
    return a * b.inverse();
}

std::string GaussRat::to_string() const
{
    if (is_integral()) return num_.to_string();
    auto wrap = [](const GaussInt& g) {
        std::string s = g.to_string();
        return (g.re() != 0 && g.im() != 0) ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

std::optional<GaussRat> exact_sqrt(const GaussRat& a)
{
    auto w = exact_sqrt(a.num() * a.den());
    if (!w) return std::nullopt;
    return GaussRat(*w, a.den());
}

}  // namespace rank2qi
