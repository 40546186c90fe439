#ifndef RANK2QI_JSON_IO_HPP_
#define RANK2QI_JSON_IO_HPP_

#include "rank2qi/constellation.hpp"
#include "rank2qi/curve.hpp"
#include "rank2qi/gaussian.hpp"
#include "rank2qi/primes.hpp"
#include "rank2qi/selmer.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace rank2qi {

using json = nlohmann::json;

/* Malformed serialized input. */
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// All integers are written as decimal strings; nothing goes through floating point.
json to_json(const mpz_class& v);
json to_json(const GaussInt& g);          // {"re": "-1", "im": "-6"}
json to_json(const GaussRat& q);          // {"num": {...}, "den": {...}}
json to_json(const CurvePoint& p);        // "infinity" or {"x": ..., "y": ...}
json to_json(const PrimaryFactorization& f);
json to_json(const SelmerReport& r);
json to_json(const TorsionGroup& t);
json to_json(const ConstellationHit& h);

mpz_class mpz_from_json(const json& j);
GaussInt gauss_from_json(const json& j);
GaussRat rat_from_json(const json& j);
CurvePoint point_from_json(const json& j);

/* j[key], or FormatError naming the missing key. */
const json& require_field(const json& j, const char* key);

}  // namespace rank2qi

#endif /* RANK2QI_JSON_IO_HPP_ */
