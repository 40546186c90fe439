#ifndef RANK2QI_CERTIFICATE_HPP_
#define RANK2QI_CERTIFICATE_HPP_

#include "rank2qi/constellation.hpp"
#include "rank2qi/curve.hpp"
#include "rank2qi/json_io.hpp"
#include "rank2qi/selmer.hpp"

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace rank2qi {

inline const std::string kLibraryVersion = "rank2qi 1.0.0";
inline const std::string kCertificateFormat = "1";
inline const std::string kConclusion = "rank = 2, E(Q(i)) = Z^2 + (Z/2Z)^2";
inline const std::string kGammaConvention =
    "gamma = i*(beta^4 + 4k^4), so the curve y^2 = x^3 - (beta^4 + 4k^4)^2 x is y^2 = x^3 + gamma^2 x";

/*
 * Record for y^2 = x^3 - (beta^4 + 4k^4)^2 x with rank 2 and torsion
 * (Z/2)^2 over Q(i).  Every field can be recomputed from (beta, k).
 */
struct Certificate {
    GaussInt beta;
    mpz_class k;
    std::array<GaussInt, 4> primes;
    GaussInt alpha;  // -(beta^4 + 4k^4)^2
    GaussInt gamma;  // i (beta^4 + 4k^4), gamma^2 = alpha
    SelmerReport selmer;
    bool genuine = false;
    mpz_class genuine_witness;  // Im((beta^4 + 4k^4)^2)
    CurvePoint point = CurvePoint::infinity();
    CurvePoint point_cm = CurvePoint::infinity();
    TorsionGroup torsion;
    std::string conclusion;
};

struct CertifyFailure {
    std::string reason;
    std::string detail;
};

using CertifyResult = std::variant<Certificate, CertifyFailure>;

namespace reason {
inline const std::string kNotGenuine = "not genuine";
inline const std::string kProductIdentity = "product identity beta^4 + 4k^4 = p1 p2 p3 p4 failed";
inline const std::string kSymbolPattern = "residue symbol pattern violated";
inline const std::string kTorsion = "torsion is not Z/2 x Z/2";
inline const std::string kPointTorsion = "point (4 beta^2 k^2, 2i beta k (beta^4 - 4k^4)) is torsion";
inline const std::string kPointOffCurve = "point (4 beta^2 k^2, 2i beta k (beta^4 - 4k^4)) is not on the curve";
inline const std::string kSelmer = "Selmer bound does not give rank <= 2";
}  // namespace reason

struct GenuineWitness {
    bool genuine = false;
    mpz_class imag;  // Im((beta^4 + 4k^4)^2)
};

/* Genuinely over Q(i) iff Im((beta^4 + 4k^4)^2) != 0. */
GenuineWitness is_genuine(const GaussInt& beta, const mpz_class& k);

/* (4 beta^2 k^2, 2 i beta k (beta^4 - 4 k^4)) */
CurvePoint rank_point(const GaussInt& beta, const mpz_class& k);

/*
 * The six symbols (p1/p2), (p1/p3), (p1/p4), (p2/p3), (p2/p4), (p3/p4) and
 * whether (p1/p4) = (p2/p3) = (p2/p4) != (p1/p2) = (p1/p3) = (p3/p4).
 */
struct SymbolPattern {
    int s12, s13, s14, s23, s24, s34;
    bool holds() const;
};
SymbolPattern symbol_pattern(const std::array<GaussInt, 4>& primes);

CertifyResult certify(const GaussInt& beta, const mpz_class& k);

json certificate_to_json(const Certificate& cert);
/* Sorted keys, no whitespace; byte-stable for a given (beta, k). */
std::string serialize_certificate(const Certificate& cert);

struct VerificationReport {
    bool ok = false;
    std::vector<std::string> failures;
};

/*
 * Recomputes every field from (beta, k) alone, partly along routes that do
 * not share code with certify (residue-field Legendre symbols, brute-force
 * Selmer enumeration, GMP primality), and compares field by field.
 * Throws FormatError if the document cannot be parsed.
 */
VerificationReport verify_certificate(const json& doc);
VerificationReport verify_certificate(const std::string& text);

}  // namespace rank2qi

#endif /* RANK2QI_CERTIFICATE_HPP_ */
