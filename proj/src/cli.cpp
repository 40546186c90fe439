#include "rank2qi/cli.hpp"

#include "rank2qi/certificate.hpp"
#include "rank2qi/constellation.hpp"
#include "rank2qi/curve.hpp"
#include "rank2qi/json_io.hpp"
#include "rank2qi/primes.hpp"
#include "rank2qi/selmer.hpp"
#include "rank2qi/symbols.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace rank2qi::cli {

namespace {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

GaussInt parse_gauss_arg(const std::string& what, const std::string& text)
{
    try {
        return parse_gauss(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(what + ": cannot parse '" + text + "' as a+bi");
    }
}

mpz_class parse_integer_arg(const std::string& what, const std::string& text)
{
    GaussInt g = parse_gauss_arg(what, text);
    if (g.im() != 0) throw UsageError(what + ": expected a rational integer, got '" + text + "'");
    return g.re();
}

std::string ratio_string(double r)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", r);
    return buf;
}

json box_json(const Box& b)
{
    return {{"re_lo", std::to_string(b.re_lo)},
            {"re_hi", std::to_string(b.re_hi)},
            {"im_lo", std::to_string(b.im_lo)},
            {"im_hi", std::to_string(b.im_hi)}};
}

std::string read_input(const std::string& path)
{
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("verify: cannot open '" + path + "'");
    ss << in.rdbuf();
    return ss.str();
}

struct SearchOptions {
    long box = 0;
    long k_max = 0;
    long start_ring = 0;
    long chunk = 64;
    bool adaptive = false;
    long max_box = 1L << 16;
    bool first = false;
};

int run_search(const SearchOptions& o, unsigned shards, bool verbose, std::ostream& out, std::ostream& err)
{
    if (o.box < 0 || o.k_max < 1 || o.start_ring < 0 || o.chunk < 1)
        throw UsageError("search: --box and --start-ring must be >= 0, --kmax and --chunk >= 1");
    if (o.adaptive && o.max_box < o.box) throw UsageError("search: --max-box must be >= --box");
    const bool stop_on_hit = o.first || o.adaptive;

    std::uint64_t total_hits = 0;
    long lo = o.start_ring, box = o.box;
    for (;;) {
        while (lo <= box) {
            const long hi = std::min(lo + o.chunk - 1, box);
            SearchRegion region{lo, hi, o.k_max};
            SearchStats stats;
            auto hits = search_region(region, shards, &stats);
            for (const auto& h : hits) {
                json line = to_json(h);
                line["type"] = "hit";
                out << line.dump() << '\n';
            }
            total_hits += hits.size();
            out << json{{"type", "progress"},
                        {"ring_lo", std::to_string(lo)},
                        {"ring_hi", std::to_string(hi)},
                        {"k_max", std::to_string(o.k_max)},
                        {"pairs", std::to_string(stats.pairs)},
                        {"filter_passed", std::to_string(stats.filter_passed)},
                        {"filter_pass_rate", ratio_string(stats.pass_rate())},
                        {"hits", std::to_string(stats.hits)},
                        {"total_hits", std::to_string(total_hits)}}
                       .dump()
                << '\n';
            out << json{{"type", "checkpoint"},
                        {"next_ring", std::to_string(hi + 1)},
                        {"box", std::to_string(box)},
                        {"k_max", std::to_string(o.k_max)}}
                       .dump()
                << std::endl;
            if (verbose) err << "rings " << lo << ".." << hi << ": " << total_hits << " hits so far\n";
            lo = hi + 1;
            if (stop_on_hit && total_hits > 0) break;
        }
        if (!o.adaptive || total_hits > 0 || box >= o.max_box) break;
        box = std::min(2 * box + 1, o.max_box);
        out << json{{"type", "expand"}, {"box", std::to_string(box)}}.dump() << '\n';
    }
    out << json{{"type", "summary"}, {"searched_to_ring", std::to_string(lo - 1)},
                {"total_hits", std::to_string(total_hits)}}
               .dump()
        << '\n';
    return (o.adaptive && total_hits == 0) ? kRejected : kOk;
}

json stats_json(const Box& box, const DensityStats& s)
{
    json classes = json::array();
    for (const auto& [cls, n] : s.class_counts)
        classes.push_back({{"residue", to_json(GaussInt(cls.first, cls.second))}, {"count", std::to_string(n)}});
    return {{"box", box_json(box)},
            {"total", std::to_string(s.total)},
            {"classes", classes},
            {"target",
             {{"residue", to_json(constellation_class())},
              {"count", std::to_string(s.target)},
              {"ratio", ratio_string(s.target_ratio())},
              {"ratio_times_128", ratio_string(128.0 * s.target_ratio())}}},
            {"associates",
             {{"count", std::to_string(s.associates)},
              {"ratio", ratio_string(s.associates_ratio())},
              {"ratio_times_32", ratio_string(32.0 * s.associates_ratio())}}}};
}

}  // namespace

unsigned default_shards()
{
    if (const char* env = std::getenv("RANK2QI_SHARDS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Gaussian-prime constellations and rank-2 certificates over Q(i)", "rank2qi"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kLibraryVersion);
    unsigned shards = default_shards();
    bool verbose = false;
    app.add_option("--shards", shards, "worker threads (default $RANK2QI_SHARDS or hardware threads)")
        ->check(CLI::Range(1U, 1024U));
    app.add_flag("-v,--verbose", verbose, "progress on stderr");

    std::string a1, a2;
    std::vector<std::string> rest;

    auto* factor = app.add_subcommand("factor", "factor into i^s (1+i)^t times primary primes");
    factor->add_option("g", a1, "Gaussian integer a+bi")->required();

    auto* symbol = app.add_subcommand("symbol", "quadratic residue symbol (a/p)");
    symbol->add_option("a", a1)->required();
    symbol->add_option("p", a2, "odd Gaussian prime")->required();

    auto* inv = app.add_subcommand("invariants", "(m, n) with p = (1-4i)^m (-1-6i)^n mod (1+i)^7");
    inv->add_option("p", a1, "primary element")->required();

    auto* tors = app.add_subcommand("torsion", "torsion of y^2 = x^3 + gamma^2 x");
    tors->add_option("gamma", a1, "square-free Gaussian integer")->required();

    auto* selmer = app.add_subcommand("selmer", "Selmer candidate set for alpha = +P, -P or -P^2");
    selmer->add_option("shape", a1, "plus | minus | negsquare")->required();
    selmer->add_option("primes", rest, "distinct primary primes")->required();

    SearchOptions so;
    auto* search = app.add_subcommand("search", "search for constellations by rings max(|re|,|im|)");
    search->add_option("--box", so.box, "outermost ring to search")->required();
    search->add_option("--kmax", so.k_max, "largest |k|")->required();
    search->add_option("--start-ring", so.start_ring, "resume from a checkpoint's next_ring");
    search->add_option("--chunk", so.chunk, "rings per progress record");
    search->add_flag("--adaptive", so.adaptive, "double the box until a hit appears");
    search->add_option("--max-box", so.max_box, "adaptive upper limit");
    search->add_flag("--first", so.first, "stop after the first chunk that contains hits");
    search->add_option("--shards", shards)->check(CLI::Range(1U, 1024U));

    std::string out_path;
    auto* cert = app.add_subcommand("certify", "certify the rank-2 curve for (beta, k)");
    cert->add_option("beta", a1)->required();
    cert->add_option("k", a2)->required();
    cert->add_option("--out", out_path, "also write the certificate to this file");

    auto* verify = app.add_subcommand("verify", "re-derive and check a certificate file ('-' for stdin)");
    verify->add_option("file", a1)->required();

    long stats_box = 0;
    auto* stats = app.add_subcommand("stats", "Gaussian prime counts per residue class mod 16");
    stats->add_option("--box", stats_box, "half-width of the box |re|, |im| <= B")->required();
    stats->add_option("--shards", shards)->check(CLI::Range(1U, 1024U));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (factor->parsed()) {
            GaussInt g = parse_gauss_arg("factor", a1);
            if (g.is_zero()) throw UsageError("factor: zero has no factorization");
            json j = to_json(factor_primary(g));
            j["input"] = to_json(g);
            out << j.dump() << '\n';
            return kOk;
        }
        if (symbol->parsed()) {
            int v = euler_symbol(parse_gauss_arg("symbol", a1), parse_gauss_arg("symbol", a2));
            out << json{{"value", v}}.dump() << '\n';
            return kOk;
        }
        if (inv->parsed()) {
            MNInvariant mn = mn_invariants(parse_gauss_arg("invariants", a1));
            out << json{{"m", mn.m}, {"n", mn.n}, {"n_bar", mn.n_bar()}}.dump() << '\n';
            return kOk;
        }
        if (tors->parsed()) {
            GaussInt gamma = parse_gauss_arg("torsion", a1);
            json j = to_json(torsion_subgroup(gamma));
            j["gamma"] = to_json(gamma);
            out << j.dump() << '\n';
            return kOk;
        }
        if (selmer->parsed()) {
            SelmerShape shape;
            try {
                shape = parse_shape(a1);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("selmer: ") + e.what());
            }
            std::vector<GaussInt> primes;
            for (const auto& s : rest) primes.push_back(parse_gauss_arg("selmer", s));
            out << to_json(selmer_candidate_set(shape, primes)).dump() << '\n';
            return kOk;
        }
        if (search->parsed()) return run_search(so, shards, verbose, out, err);
        if (cert->parsed()) {
            auto res = certify(parse_gauss_arg("certify", a1), parse_integer_arg("certify", a2));
            if (auto* f = std::get_if<CertifyFailure>(&res)) {
                out << json{{"certified", false}, {"reason", f->reason}, {"detail", f->detail}}.dump() << '\n';
                return kRejected;
            }
            std::string text = serialize_certificate(std::get<Certificate>(res));
            if (!out_path.empty()) {
                std::ofstream f(out_path, std::ios::binary);
                if (!(f << text << '\n')) throw UsageError("certify: cannot write '" + out_path + "'");
            }
            out << text << '\n';
            return kOk;
        }
        if (verify->parsed()) {
            VerificationReport rep = verify_certificate(read_input(a1));
            out << json{{"ok", rep.ok}, {"failures", rep.failures}}.dump() << '\n';
            return rep.ok ? kOk : kRejected;
        }
        if (stats->parsed()) {
            if (stats_box < 0) throw UsageError("stats: --box must be >= 0");
            Box box = Box::centered(stats_box);
            out << stats_json(box, prime_density_stats(box, shards)).dump() << '\n';
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const FormatError& e) {
        err << "error: malformed certificate: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        // Domain errors (non-primary input, non-square-free gamma, ...) are mathematical rejections.
        out << json{{"error", e.what()}}.dump() << '\n';
        return kRejected;
    }
    return kUsage;
}

}  // namespace rank2qi::cli
