#include "rank2qi/json_io.hpp"

#include <cctype>

namespace rank2qi {

json to_json(const mpz_class& v)
{
    return v.get_str();
}

json to_json(const GaussInt& g)
{
    return {{"re", g.re().get_str()}, {"im", g.im().get_str()}};
}

json to_json(const GaussRat& q)
{
    return {{"num", to_json(q.num())}, {"den", to_json(q.den())}};
}

json to_json(const CurvePoint& p)
{
    if (p.is_infinity()) return "infinity";
    return {{"x", to_json(p.x())}, {"y", to_json(p.y())}};
}

json to_json(const PrimaryFactorization& f)
{
    json factors = json::array();
    for (const auto& [p, e] : f.factors)
        factors.push_back({{"prime", to_json(p)}, {"exponent", std::to_string(e)}});
    return {{"s", std::to_string(f.s)}, {"t", std::to_string(f.t)}, {"factors", factors}};
}

json to_json(const SelmerReport& r)
{
    json primes = json::array();
    for (const auto& p : r.primes) primes.push_back(to_json(p));
    json cands = json::array();
    for (const auto& d : r.candidates)
        cands.push_back({{"label", d.label()},
                         {"unit", d.times_i ? "i" : "1"},
                         {"support", d.support.to_string()},
                         {"value", to_json(d.value(r.primes))}});
    return {{"shape", to_string(r.shape)},
            {"alpha", to_json(shape_alpha(r.shape, r.primes))},
            {"primes", primes},
            {"L", r.L.to_strings()},
            {"n_bar", r.n_bar.to_string()},
            {"candidates", cands},
            {"dim", std::to_string(r.dim)},
            {"rank_upper", std::to_string(r.rank_upper)},
            {"is_group", r.is_group}};
}

json to_json(const TorsionGroup& t)
{
    json pts = json::array();
    for (const auto& p : t.points) pts.push_back(to_json(p));
    return {{"group", to_string(t.label)}, {"points", pts}};
}

json to_json(const ConstellationHit& h)
{
    json primes = json::array();
    for (const auto& p : h.primes) primes.push_back(to_json(p));
    return {{"beta", to_json(h.beta)}, {"k", to_json(h.k)}, {"primes", primes}};
}

const json& require_field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

mpz_class mpz_from_json(const json& j)
{
    if (!j.is_string()) throw FormatError("expected a decimal string, got " + j.dump());
    const std::string& s = j.get_ref<const std::string&>();
    size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start) throw FormatError("empty integer string");
    for (size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw FormatError("bad integer string '" + s + "'");
    return mpz_class(s, 10);
}

GaussInt gauss_from_json(const json& j)
{
    return {mpz_from_json(require_field(j, "re")), mpz_from_json(require_field(j, "im"))};
}

GaussRat rat_from_json(const json& j)
{
    GaussInt den = gauss_from_json(require_field(j, "den"));
    if (den.is_zero()) throw FormatError("zero denominator");
    return GaussRat(gauss_from_json(require_field(j, "num")), den);
}

CurvePoint point_from_json(const json& j)
{
    if (j.is_string() && j.get_ref<const std::string&>() == "infinity") return CurvePoint::infinity();
    return {rat_from_json(require_field(j, "x")), rat_from_json(require_field(j, "y"))};
}

}  // namespace rank2qi
