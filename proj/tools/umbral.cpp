// Command-line front end for the umbral moonshine series library.
#include <CLI11.hpp>

#include "umbral/holproj.hpp"
#include "umbral/jseries.hpp"
#include "umbral/rademacher.hpp"
#include "umbral/report_io.hpp"
#include "umbral/verify.hpp"
#include "umbral/weight2.hpp"

#include <fstream>
#include <iostream>

using namespace umbral;

namespace {

int exit_code_for(const Report& rep) { return rep.findings == 0 ? 0 : 1; }

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path, std::ios::binary);
        f << text << "\n";
    }
}

long default_bound(const std::string& X) {
    return GroupTable::load(X).group_order() <= 48 ? 100 : 30;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"umbral: exact umbral McKay-Thompson series and verification"};
    app.require_subcommand(1);
    bool allow_dirty = false;
    int threads = 2;
    std::string fixture_dir;
    app.add_flag("--allow-dirty-fixtures", allow_dirty,
                 "run even if fixture hashes mismatch the manifest");
    app.add_option("--threads", threads, "worker threads for series products");
    app.add_option("--fixture-dir", fixture_dir, "override the data directory");

    std::string X, cls = "1A", format = "json", out_path, suite = "mock-theta-A2^12";
    long r = 1, order = 30, bound = 0, Kmax = 4, nmax = 6, index_m = 2;
    bool do_reconstruct = false;

    auto* expand = app.add_subcommand("expand", "q-expansion of one H component");
    expand->add_option("--system", X, "root system label, e.g. A2^12")->required();
    expand->add_option("--class", cls, "conjugacy class label");
    expand->add_option("--r", r, "component index");
    expand->add_option("--order", order, "number of q-orders");
    expand->add_option("--format", format, "json|csv");
    expand->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "multiplicity integrality / reconstruction");
    verify->add_option("--system", X)->required();
    verify->add_option("--bound", bound, "coefficient bound (0 = desk-scale default)");
    verify->add_flag("--reconstruct", do_reconstruct, "run the reconstruction identity instead");
    verify->add_option("--out", out_path);

    auto* identities = app.add_subcommand("identities", "registered identity suites");
    identities->add_option("--suite", suite);
    identities->add_option("--out", out_path);

    auto* holproj = app.add_subcommand("holproj", "F = H*S + D expansion and recursion check");
    holproj->add_option("--system", X)->required();
    holproj->add_option("--class", cls);
    holproj->add_option("--r", r);
    holproj->add_option("--order", order);
    holproj->add_option("--out", out_path);

    auto* group = app.add_subcommand("group", "character table queries");
    group->add_option("--system", X)->required();
    group->add_option("--out", out_path);

    auto* rad = app.add_subcommand("rademacher", "partial Rademacher sum traces (CSV)");
    rad->add_option("--index", index_m, "theta index m");
    rad->add_option("--K", Kmax, "largest matrix cutoff");
    rad->add_option("--n", nmax, "coefficients per trace");
    rad->add_option("--out", out_path);

    auto* fixtures = app.add_subcommand("fixtures", "fixture manifest status");
    fixtures->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (!fixture_dir.empty()) setenv("UMBRAL_DATA_DIR", fixture_dir.c_str(), 1);
    set_jseries_threads(threads);

    try {
        if (*expand) {
            require_clean_fixtures(allow_dirty);
            QSeries h = mct_component(X, cls, r, Rational(order));
            if (format == "json") {
                emit(qseries_to_json(h), out_path);
            } else if (format == "csv") {
                std::ostringstream os;
                os << "exponent,coefficient\n";
                for (const auto& [k, c] : h.terms())
                    os << Rational(Int(k), Int(h.den())).str() << "," << c.rat().str() << "\n";
                emit(os.str(), out_path);
            } else {
                std::cerr << "unknown format " << format << "\n";
                return 2;
            }
            return 0;
        }
        if (*verify) {
            require_clean_fixtures(allow_dirty);
            Report rep = do_reconstruct
                             ? reconstruct_check(X, Rational(bound ? bound : 30))
                             : check_nonneg_integral(X, bound ? bound : default_bound(X));
            emit(rep.json(), out_path);
            return exit_code_for(rep);
        }
        if (*identities) {
            require_clean_fixtures(allow_dirty);
            Report rep = identity_suite(suite);
            emit(rep.json(), out_path);
            return exit_code_for(rep);
        }
        if (*holproj) {
            require_clean_fixtures(allow_dirty);
            QSeries F = holproj_F(X, cls, r, Rational(order));
            Report rep;
            rep.X = X;
            rep.grade = "exact";
            rep.bound_used = Rational(order);
            for (long N = 0; N < std::min(order, 21L); ++N) {
                bool ok = recursion_eval(X, cls, r, N) == F.coeff(Rational(N)).rat();
                rep.add({"N=" + std::to_string(N), "recursion", ok, ""});
            }
            std::ostringstream os;
            os << "{\"F\":" << qseries_to_json(F) << ",\"recursion\":" << rep.json() << "}";
            emit(os.str(), out_path);
            return exit_code_for(rep);
        }
        if (*group) {
            const GroupTable& G = GroupTable::load(X); // validates orthogonality
            std::ostringstream os;
            os << "{\"X\":\"" << G.root_system().label << "\",\"group\":\"" << G.group_name()
               << "\",\"order\":" << G.group_order().str() << ",\"classes\":[";
            bool first = true;
            for (const auto& c : G.classes()) {
                os << (first ? "" : ",") << "{\"label\":\"" << c << "\",\"centralizer\":"
                   << G.centralizer_order(c).str() << "}";
                first = false;
            }
            os << "]}";
            emit(os.str(), out_path);
            return 0;
        }
        if (*rad) {
            RadSpec spec;
            spec.index_m = index_m;
            emit(rad_trace_csv(spec, Kmax, nmax), out_path);
            return 0;
        }
        if (*fixtures) {
            std::ostringstream os;
            bool all_ok = true;
            os << "{";
            bool first = true;
            for (const auto& [name, status] : fixture_status()) {
                os << (first ? "" : ",") << "\"" << name << "\":\"" << status << "\"";
                first = false;
                if (status != "ok") all_ok = false;
            }
            os << "}";
            emit(os.str(), out_path);
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
