#include "rank2qi/certificate.hpp"
#include "rank2qi/constellation.hpp"
#include "rank2qi/curve.hpp"
#include "rank2qi/json_io.hpp"
#include "rank2qi/primes.hpp"
#include "rank2qi/selmer.hpp"
#include "rank2qi/symbols.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace rank2qi;

// Everything crosses the boundary as a+bi strings or JSON text; the Python
// wrapper in __init__.py turns the JSON into dicts.

namespace {

GaussInt arg(const std::string& s)
{
    try {
        return parse_gauss(s);
    } catch (const std::invalid_argument& e) {
        throw py::value_error(e.what());
    }
}

mpz_class integer(const std::string& s)
{
    GaussInt g = arg(s);
    if (g.im() != 0) throw py::value_error("expected a rational integer, got '" + s + "'");
    return g.re();
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.attr("__version__") = kLibraryVersion;

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

    m.def("norm", [](const std::string& g) { return norm(arg(g)).get_str(); });
    m.def("is_gaussian_prime", [](const std::string& g) { return is_gaussian_prime(arg(g)); });
    m.def("primary_associate", [](const std::string& g) {
        auto [p, s] = primary_associate(arg(g));
        return py::make_tuple(p.to_string(), s);
    });
    m.def("factor", [](const std::string& g) { return to_json(factor_primary(arg(g))).dump(); });
    m.def("euler_symbol", [](const std::string& a, const std::string& p) { return euler_symbol(arg(a), arg(p)); });
    m.def("mn_invariants", [](const std::string& p) {
        MNInvariant mn = mn_invariants(arg(p));
        return py::make_tuple(mn.m, mn.n);
    });
    m.def("torsion", [](const std::string& g) { return to_json(torsion_subgroup(arg(g))).dump(); });
    m.def("selmer", [](const std::string& shape, const std::vector<std::string>& primes) {
        std::vector<GaussInt> ps;
        for (const auto& p : primes) ps.push_back(arg(p));
        return to_json(selmer_candidate_set(parse_shape(shape), ps)).dump();
    });
    m.def(
        "search",
        [](long ring_hi, long k_max, unsigned shards) {
            std::vector<std::string> out;
            std::vector<ConstellationHit> hits;
            {
                py::gil_scoped_release release;
                hits = search_region({0, ring_hi, k_max}, shards);
            }
            for (const auto& h : hits) out.push_back(to_json(h).dump());
            return out;
        },
        py::arg("box"), py::arg("kmax"), py::arg("shards") = 1);
    m.def("certify", [](const std::string& beta, const std::string& k) {
        auto res = certify(arg(beta), integer(k));
        if (auto* f = std::get_if<CertifyFailure>(&res))
            return py::make_tuple(false, json{{"reason", f->reason}, {"detail", f->detail}}.dump());
        return py::make_tuple(true, serialize_certificate(std::get<Certificate>(res)));
    });
    m.def("verify", [](const std::string& text) {
        VerificationReport rep = verify_certificate(text);
        return py::make_tuple(rep.ok, rep.failures);
    });
    m.def(
        "density",
        [](long box, unsigned shards) {
            DensityStats s;
            {
                py::gil_scoped_release release;
                s = prime_density_stats(Box::centered(box), shards);
            }
            return py::make_tuple(s.total, s.target, s.associates);
        },
        py::arg("box"), py::arg("shards") = 1);
}
