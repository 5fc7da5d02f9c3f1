// grassmori: command-line front end for the blow-up invariants of Grassmannians
// and prime Fano varieties.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grassmori/errors.hpp"
#include "grassmori/fano.hpp"
#include "grassmori/grassmann.hpp"
#include "grassmori/lattice.hpp"
#include "grassmori/orbits.hpp"
#include "grassmori/report.hpp"
#include "grassmori/sbld.hpp"

using namespace grassmori;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

struct RunConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 5;
    std::string output = "table";
    int bound = 100;
};

std::uint64_t default_seed()
{
    const char* env = std::getenv("GRASSMORI_SEED");
    if (!env || !*env) return 0;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("GRASSMORI_SEED is not a non-negative integer: ") + env);
    }
}

std::string scalar_text(const json& v)
{
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void print_table(const json& j, std::ostream& os, int indent = 0)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_array() && !j.empty() && j.front().is_object()) {
        std::vector<std::string> keys;
        for (auto it = j.front().begin(); it != j.front().end(); ++it) keys.push_back(it.key());
        std::vector<std::size_t> width;
        for (const auto& k : keys) {
            std::size_t w = k.size();
            for (const auto& row : j) w = std::max(w, row.contains(k) ? scalar_text(row[k]).size() : 1);
            width.push_back(w);
        }
        os << pad;
        for (std::size_t c = 0; c < keys.size(); ++c) os << std::left << std::setw(static_cast<int>(width[c] + 2)) << keys[c];
        os << "\n";
        for (const auto& row : j) {
            os << pad;
            for (std::size_t c = 0; c < keys.size(); ++c)
                os << std::left << std::setw(static_cast<int>(width[c] + 2))
                   << (row.contains(keys[c]) ? scalar_text(row[keys[c]]) : "-");
            os << "\n";
        }
        return;
    }
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it->is_object() || (it->is_array() && !it->empty() && it->front().is_object())) {
                os << pad << it.key() << ":\n";
                print_table(*it, os, indent + 2);
            } else {
                os << pad << it.key() << ": " << scalar_text(*it) << "\n";
            }
        }
        return;
    }
    os << pad << scalar_text(j) << "\n";
}

void emit(const RunConfig& run, const json& j)
{
    if (run.output == "json")
        std::cout << j.dump(2) << "\n";
    else
        print_table(j, std::cout);
}

/// "a,-b1,-b2,..." → aH - b1E1 - ...; the typed signs are kept.
lattice::DivisorClass parse_divisor(const std::string& text)
{
    std::vector<Rational> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(parse_rational(item));
    if (parts.size() < 2) throw std::invalid_argument("divisor must be given as a,-b1[,-b2,...]");
    lattice::DivisorClass d{parts[0], {}};
    for (std::size_t i = 1; i < parts.size(); ++i) d.e.push_back(-parts[i]);
    return d;
}

lattice::BlowupConfig make_config(const std::string& family, int r, int n, int k, int c)
{
    if (family == "projective") return lattice::BlowupConfig::projective_space(n, k);
    if (family == "quadric") return lattice::BlowupConfig::quadric(n, k);
    if (family == "cubic") return lattice::BlowupConfig::cubic(n, k);
    if (family == "y22") return lattice::BlowupConfig::y22(n, k);
    if (family == "g14-section") return lattice::BlowupConfig::g14_section(c, k);
    if (family == "grassmannian") return lattice::BlowupConfig::grassmannian(r, n, k);
    throw std::invalid_argument("unknown family '" + family + "'");
}

json fano_table()
{
    struct Row {
        std::string family;
        int r, n, c, kmax;
    };
    const std::vector<Row> rows = {
        {"projective", 0, 2, 0, 9}, {"projective", 0, 3, 0, 8}, {"projective", 0, 4, 0, 3},
        {"quadric", 0, 2, 0, 8},    {"quadric", 0, 3, 0, 7},    {"quadric", 0, 4, 0, 3},
        {"cubic", 0, 3, 0, 3},      {"cubic", 0, 4, 0, 3},      {"y22", 0, 3, 0, 4},
        {"y22", 0, 4, 0, 4},        {"g14-section", 0, 0, 0, 5}, {"g14-section", 0, 0, 1, 5},
        {"g14-section", 0, 0, 2, 5}, {"g14-section", 0, 0, 3, 5}, {"grassmannian", 1, 3, 0, 3},
        {"grassmannian", 1, 5, 0, 1}};
    json out = json::array();
    for (const auto& row : rows) {
        for (int k = 1; k <= row.kmax; ++k) {
            const auto cfg = make_config(row.family, row.r, row.n, k, row.c);
            const auto v = fano::classify(cfg);
            out.push_back({{"variety", cfg.describe()}, {"k", k}, {"status", fano::status_name(v.status)}});
        }
    }
    return out;
}

json complexity_table(int k, int rmax, int nmax, const RunConfig& run)
{
    json out = json::array();
    for (int r = 1; r <= rmax; ++r) {
        for (int n = 2 * r + 1; n <= nmax; ++n) {
            const grassmann::GrassmannIndex g(r, n);
            json row = {{"r", r}, {"n", n}, {"k", k}};
            try {
                const auto rep = orbits::complexity(g, k, run.seed, {run.samples, run.bound});
                row["complexity"] = rep.complexity;
                row["exact"] = rep.exact;
            } catch (const UnsupportedConfiguration&) {
                row["complexity"] = nullptr;
                row["exact"] = false;
            }
            out.push_back(std::move(row));
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact invariants of blow-ups of Grassmannians and prime Fano varieties"};
    app.require_subcommand(1);

    RunConfig run;
    try {
        run.seed = default_seed();
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    auto add_run_options = [&run](CLI::App* sub) {
        sub->add_option("--output", run.output, "json or table")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--seed", run.seed, "PRNG seed (default: GRASSMORI_SEED or 0)");
        sub->add_option("--samples", run.samples, "random points per complexity computation")
            ->check(CLI::PositiveNumber);
        sub->add_option("--bound", run.bound, "entries of random points lie in [-bound, bound]")
            ->check(CLI::PositiveNumber);
    };

    int r = 1, n = 4, k = 1, m = 0, j = 0, c = 0, rmax = 4, nmax = 16;
    std::string family, divisor, table_name = "fano";
    bool verify = false;

    auto* classify = app.add_subcommand("classify", "Fano / weak Fano verdict for X blown up at k general points");
    classify->add_option("--family", family, "projective, quadric, cubic, y22, g14-section, grassmannian")->required();
    classify->add_option("--r", r, "r for the grassmannian family");
    classify->add_option("--n", n, "dimension (for grassmannian: the n of G(r,n))");
    classify->add_option("--k", k, "number of points")->required();
    classify->add_option("--c", c, "codimension of the G(1,4) linear section");

    auto gr_options = [&](CLI::App* sub, bool with_k) {
        sub->add_option("--r", r, "r of G(r,n)")->required();
        sub->add_option("--n", n, "n of G(r,n)")->required();
        if (with_k) sub->add_option("--k", k, "number of points")->required();
    };
    auto* cx = app.add_subcommand("complexity", "Borel orbit complexity of G(r,n)_k");
    gr_options(cx, true);
    auto* sph = app.add_subcommand("spherical", "sphericity and Mori dream space verdict of G(r,n)_k");
    gr_options(sph, true);
    auto* eff = app.add_subcommand("effcone", "effective cone of a spherical G(r,n)_k");
    gr_options(eff, true);
    auto* cns = app.add_subcommand("cones", "Eff, Nef, Mov, NE and mov of G(r,n)_1");
    gr_options(cns, false);
    auto* sb = app.add_subcommand("sbld", "stable base locus chamber of aH - bE on G(r,n)_1");
    gr_options(sb, false);
    sb->add_option("--D", divisor, "a,-b for aH - bE")->required();
    auto* sch = app.add_subcommand("schubert", "Schubert loci R_m and their dimensions");
    gr_options(sch, false);
    sch->add_option("--m", m, "a single m (default: all 0..r+1)");
    sch->add_flag("--verify", verify, "recompute each dimension as a tangent rank");
    auto* osc = app.add_subcommand("osculate", "dimension of the osculating space T^m_p");
    gr_options(osc, false);
    osc->add_option("--m", m, "order")->required();
    auto* mul = app.add_subcommand("multiplicity", "multiplicity at p of the Schubert divisor D_j");
    gr_options(mul, false);
    mul->add_option("--j", j, "index of D_j, 0..r+1")->required();
    auto* tab = app.add_subcommand("table", "regenerate a classification table");
    tab->add_option("--name", table_name, "fano or complexity")->check(CLI::IsMember({"fano", "complexity"}));
    tab->add_option("--k", k, "points for the complexity table");
    tab->add_option("--rmax", rmax, "largest r in the complexity table");
    tab->add_option("--nmax", nmax, "largest n in the complexity table");

    for (auto* sub : {classify, cx, sph, eff, cns, sb, sch, osc, mul, tab}) add_run_options(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (classify->parsed()) {
            const auto cfg = make_config(family, r, n, k, c);
            json out = report::to_json(fano::classify(cfg));
            out["variety"] = cfg.describe();
            emit(run, out);
        } else if (cx->parsed()) {
            emit(run, report::to_json(orbits::complexity({r, n}, k, run.seed, {run.samples, run.bound})));
        } else if (sph->parsed()) {
            const grassmann::GrassmannIndex g(r, n);
            const auto mds = orbits::mds_verdict(g, k, run.seed, {run.samples, run.bound});
            std::optional<orbits::ComplexityReport> rep = mds.complexity;
            if (!rep) {
                try {
                    rep = orbits::complexity(g, k, run.seed, {run.samples, run.bound});
                } catch (const UnsupportedConfiguration&) {
                }
            }
            // null when no point configuration is available
            json spherical = rep ? json(rep->exact && rep->complexity == 0) : json(nullptr);
            emit(run, {{"r", r},
                       {"n", n},
                       {"k", k},
                       {"spherical", spherical},
                       {"complexity", rep ? report::to_json(*rep) : json(nullptr)},
                       {"mds", report::to_json(mds)}});
        } else if (eff->parsed()) {
            emit(run, report::to_json(orbits::effective_cone_catalog({r, n}, k)));
        } else if (cns->parsed()) {
            const auto s = sbld::cone_suite({r, n});
            json walls = json::array();
            for (const auto& w : s.walls) walls.push_back({w[0].get_si(), w[1].get_si()});
            emit(run, {{"Eff", report::to_json(s.eff)},
                       {"Nef", report::to_json(s.nef)},
                       {"Mov", report::to_json(s.mov_divisors)},
                       {"NE", report::to_json(s.ne)},
                       {"mov", report::to_json(s.mov_curves)},
                       {"walls", walls}});
        } else if (sb->parsed()) {
            const grassmann::GrassmannIndex g(r, n);
            const auto d = parse_divisor(divisor);
            json out = report::to_json(g, sbld::locate(g, d));
            out["divisor"] = report::to_json(d);
            emit(run, out);
        } else if (sch->parsed()) {
            const grassmann::GrassmannIndex g(r, n);
            json loci = json::array();
            const int lo = sch->count("--m") ? m : 0, hi = sch->count("--m") ? m : r + 1;
            for (int mm = lo; mm <= hi; ++mm) {
                json locus = report::schubert_locus(g, mm);
                if (verify) locus["rank_dim"] = grassmann::schubert_dimension_by_rank(g, mm, run.seed, run.bound);
                loci.push_back(std::move(locus));
            }
            emit(run, {{"r", r}, {"n", n}, {"loci", loci}});
        } else if (osc->parsed()) {
            const grassmann::GrassmannIndex g(r, n);
            const int d = grassmann::osculating_dimension(g, grassmann::coordinate_point(g), m);
            emit(run, {{"r", r}, {"n", n}, {"m", m}, {"dim", d}, {"ambient", g.plucker_length() - 1}});
        } else if (mul->parsed()) {
            const grassmann::GrassmannIndex g(r, n);
            const auto form = grassmann::schubert_divisor(g, grassmann::schubert_center(g, j));
            const int mult = grassmann::multiplicity_at(g, form, grassmann::coordinate_point(g));
            emit(run, {{"r", r}, {"n", n}, {"j", j}, {"multiplicity", mult}});
        } else if (tab->parsed()) {
            if (table_name == "fano")
                emit(run, fano_table());
            else
                emit(run, complexity_table(tab->count("--k") ? k : 2, rmax, nmax, run));
        }
    } catch (const UnsupportedConfiguration& ex) {
        std::cerr << "unsupported: " << ex.what() << "\n";
        return kExitUnsupported;
    } catch (const OutOfScopeError& ex) {
        std::cerr << "out of scope: " << ex.what() << "\n";
        return kExitUnsupported;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
