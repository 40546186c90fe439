#include "rank2qi/selmer.hpp"

#include "rank2qi/primes.hpp"
#include "rank2qi/symbols.hpp"

#include <algorithm>
#include <stdexcept>

namespace rank2qi {

namespace {

void validate_primes(const std::vector<GaussInt>& primes)
{
    if (primes.empty()) throw std::invalid_argument("descent needs at least one prime");
    if (primes.size() >= kMaxF2Dim) throw std::invalid_argument("descent supports at most 63 primes");
    for (size_t a = 0; a < primes.size(); ++a) {
        if (!is_primary(primes[a]))
            throw std::invalid_argument(primes[a].to_string() + " is not primary");
        if (!is_gaussian_prime(primes[a]))
            throw std::invalid_argument(primes[a].to_string() + " is not a Gaussian prime");
        for (size_t b = 0; b < a; ++b)
            if (primes[a] == primes[b])
                throw std::invalid_argument("repeated prime " + primes[a].to_string());
    }
}

}  // namespace

std::string to_string(SelmerShape shape)
{
    switch (shape) {
    case SelmerShape::Plus: return "plus";
    case SelmerShape::Minus: return "minus";
    case SelmerShape::NegSquare: return "negsquare";
    }
    return "?";
}

SelmerShape parse_shape(const std::string& name)
{
    if (name == "plus") return SelmerShape::Plus;
    if (name == "minus") return SelmerShape::Minus;
    if (name == "negsquare") return SelmerShape::NegSquare;
    throw std::invalid_argument("unknown shape '" + name + "' (expected plus, minus, negsquare)");
}

GaussInt shape_alpha(SelmerShape shape, const std::vector<GaussInt>& primes)
{
    GaussInt prod(1);
    for (const auto& p : primes) prod *= p;
    switch (shape) {
    case SelmerShape::Plus: return prod;
    case SelmerShape::Minus: return -prod;
    case SelmerShape::NegSquare: return -(prod * prod);
    }
    return prod;
}

GaussInt DivisorClass::value(const std::vector<GaussInt>& primes) const
{
    GaussInt d = times_i ? GaussInt::i() : GaussInt(1);
    for (unsigned j = 0; j < support.size(); ++j)
        if (support[j]) d *= primes.at(j);
    return d;
}

std::string DivisorClass::label() const
{
    std::string s;
    if (times_i) s = "i";
    for (unsigned j = 0; j < support.size(); ++j) {
        if (!support[j]) continue;
        if (!s.empty()) s += "*";
        s += "p" + std::to_string(j + 1);
    }
    return s.empty() ? "1" : s;
}

F2Vector DivisorClass::square_class() const
{
    F2Vector v(support.size() + 1, support.bits());
    v.set(support.size(), times_i);
    return v;
}

F2Matrix build_L(const std::vector<GaussInt>& primes)
{
    validate_primes(primes);
    const unsigned n = static_cast<unsigned>(primes.size());
    F2Matrix L(n, n);
    for (unsigned r = 0; r < n; ++r) {
        bool diag = false;
        for (unsigned c = 0; c < n; ++c) {
            if (r == c) continue;
            bool bit = log_minus_one(euler_symbol(primes[r], primes[c])) != 0;
            L.set(r, c, bit);
            diag = diag != bit;
        }
        L.set(r, r, diag);
    }
    return L;
}

F2Vector n_bar_vector(const std::vector<GaussInt>& primes)
{
    F2Vector v(static_cast<unsigned>(primes.size()));
    for (unsigned j = 0; j < primes.size(); ++j) v.set(j, mn_invariants(primes[j]).n_bar());
    return v;
}

SelmerReport selmer_candidate_set(SelmerShape shape, const std::vector<GaussInt>& primes)
{
    SelmerReport rep;
    rep.shape = shape;
    rep.primes = primes;
    rep.L = build_L(primes);
    rep.n_bar = n_bar_vector(primes);

    for (const auto& x : f2_span(f2_kernel(rep.L), rep.L.cols()))
        rep.candidates.push_back({false, x});
    if (auto sol = f2_solve(rep.L, rep.n_bar))
        for (const auto& x : sol->enumerate()) rep.candidates.push_back({true, x});

    std::sort(rep.candidates.begin(), rep.candidates.end(),
              [](const DivisorClass& a, const DivisorClass& b) {
                  if (a.times_i != b.times_i) return !a.times_i;
                  return a.support.bits() < b.support.bits();
              });

    std::vector<F2Vector> classes;
    for (const auto& d : rep.candidates) classes.push_back(d.square_class());
    rep.dim = f2_rank(classes);
    rep.rank_upper = rank_upper_bound(rep.dim);
    rep.is_group = rep.dim < 63 && rep.candidates.size() == (std::size_t{1} << rep.dim);
    return rep;
}

int rank_upper_bound(unsigned dim)
{
    if (dim == 0) throw std::invalid_argument("rank_upper_bound: Selmer dimension must be >= 1");
    return 2 * static_cast<int>(dim) - 2;
}

}  // namespace rank2qi
