#include "ploi/certify.hpp"
#include "ploi/plot.hpp"
#include "ploi/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace ploi;

namespace {

enum Exit { kOk = 0, kInvalid = 2, kRejected = 3, kBudget = 4 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw IoError("cannot read '" + path + "'");
    ss << in.rdbuf();
    return ss.str();
}

void write_sink(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
}

void require_readable(const std::vector<std::string>& paths) {
    for (const auto& p : paths)
        if (p != "-" && !std::ifstream(p)) throw IoError("cannot read '" + p + "'");
}

Json read_json(const std::string& path) { return parse_json(read_source(path)); }
PLMap read_map(const std::string& path) { return plmap_from_json(read_json(path)); }
std::vector<PLMap> read_gens(const std::string& path) { return generators_from_json(read_json(path)); }

int emit_error(const std::string& kind, const std::string& message, const Json& extra = nullptr) {
    Json j{{"error", kind}, {"message", message}};
    if (!extra.is_null()) j["trace"] = extra;
    std::cerr << j.dump() << "\n";
    if (kind == "BudgetExceeded" || kind == "SearchExhausted") return kBudget;
    return kInvalid;
}

std::size_t max_elements_from_env(std::size_t fallback) {
    const char* v = std::getenv("PLOI_MAX_ELEMENTS");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    const unsigned long long n = std::strtoull(v, &end, 10);
    if (*end != '\0' || n == 0) throw ParseError("PLOI_MAX_ELEMENTS must be a positive integer");
    return static_cast<std::size_t>(n);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the group of piecewise-linear homeomorphisms of [0,1]"};
    app.require_subcommand(1);
    std::function<int()> action;
    std::size_t max_elements = 0;
    std::string out_path = "-";

    // build
    auto* build = app.add_subcommand("build", "emit a built-in map or generator family");
    std::string what;
    long build_n = 0;
    build->add_option("what", what, "alpha | beta0 | beta K | wn N | gamma N | upsilon N")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta0", "beta", "wn", "gamma", "upsilon"}));
    auto* build_n_opt = build->add_option("n", build_n, "index or size");
    build->add_option("-o,--out", out_path, "output file");
    build->callback([&] {
        action = [&] {
            const bool needs_n = what != "alpha" && what != "beta0";
            if (needs_n && build_n_opt->count() == 0) throw ParseError("'build " + what + "' needs a numeric argument");
            Json j;
            if (what == "alpha") j = to_json(alpha());
            else if (what == "beta0") j = to_json(beta0());
            else if (what == "beta") j = to_json(beta(build_n));
            else if (what == "wn") j = to_json(wn_generators(build_n));
            else if (what == "gamma") j = to_json(gamma_family(build_n));
            else j = to_json(upsilon_family(build_n));
            write_sink(out_path, dump(j));
            return kOk;
        };
    });

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a map at a point");
    std::string at, map_path = "-";
    eval->add_option("--at", at, "point p/q")->required();
    eval->add_option("map", map_path, "map file, - for stdin");
    eval->callback([&] {
        action = [&] {
            require_readable({map_path});
            const Rational x = Rational::parse(at);
            write_sink("-", dump(to_json(evaluate(read_map(map_path), x))));
            return kOk;
        };
    });

    // binary operations
    std::string lhs, rhs;
    auto binary = [&](const char* name, const char* help, PLMap (*op)(const PLMap&, const PLMap&)) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("first", lhs, "map file g, - for stdin")->required();
        sub->add_option("second", rhs, "map file h")->required();
        sub->add_option("-o,--out", out_path, "output file");
        sub->callback([&, op] {
            action = [&, op] {
                require_readable({lhs, rhs});
                const PLMap g = read_map(lhs);
                const PLMap h = read_map(rhs);
                write_sink(out_path, dump(to_json(op(g, h))));
                return kOk;
            };
        });
    };
    binary("compose", "x -> (x g) h", &compose);
    binary("conj", "conjugate g^h = h^-1 g h", &conjugate);
    binary("comm", "commutator [g,h] = g^-1 h^-1 g h", &commutator);

    auto* inv = app.add_subcommand("inverse", "inverse map");
    inv->add_option("map", map_path, "map file, - for stdin");
    inv->add_option("-o,--out", out_path, "output file");
    inv->callback([&] {
        action = [&] {
            require_readable({map_path});
            write_sink(out_path, dump(to_json(inverse(read_map(map_path)))));
            return kOk;
        };
    });

    auto* orbs = app.add_subcommand("orbitals", "orbitals of a map");
    orbs->add_option("map", map_path, "map file, - for stdin");
    orbs->callback([&] {
        action = [&] {
            require_readable({map_path});
            Json j = Json::array();
            for (const auto& o : orbitals_of_element(read_map(map_path))) j.push_back(to_json(o));
            write_sink("-", dump(j));
            return kOk;
        };
    });

    // analyze
    auto* an = app.add_subcommand("analyze", "bounded word-ball analysis of a generating set");
    std::string gens_path;
    AnalyzeConfig acfg;
    std::size_t threshold = 0;
    an->add_option("--gens", gens_path, "generators file, - for stdin")->required();
    an->add_option("--radius", acfg.radius, "word-ball radius")->check(CLI::NonNegativeNumber);
    an->add_option("--target-height", acfg.target_height, "tower height to search for")->check(CLI::PositiveNumber);
    auto* thr = an->add_option("--threshold", threshold, "flag non-solvability above this tower height");
    an->add_option("--samples", acfg.commutator_samples, "commutators sampled for the derived-series check");
    an->add_option("--report", out_path, "report file");
    an->add_option("--max-elements", max_elements, "ball size cap")->check(CLI::PositiveNumber);
    an->callback([&] {
        action = [&] {
            require_readable({gens_path});
            if (thr->count()) acfg.threshold = threshold;
            acfg.max_elements = max_elements ? max_elements : max_elements_from_env(acfg.max_elements);
            const auto gens = read_gens(gens_path);
            write_sink(out_path, dump(to_json(analyze(gens, acfg))));
            return kOk;
        };
    });

    // searches producing witness files
    auto* ts = app.add_subcommand("tower-search", "longest exemplary tower in a word ball");
    std::size_t radius = 3, height = 3;
    ts->add_option("--gens", gens_path, "generators file")->required();
    ts->add_option("--radius", radius, "word-ball radius");
    ts->add_option("--height", height, "target height")->check(CLI::PositiveNumber);
    ts->add_option("-o,--out", out_path, "output file");
    ts->add_option("--max-elements", max_elements, "ball size cap")->check(CLI::PositiveNumber);
    ts->callback([&] {
        action = [&] {
            require_readable({gens_path});
            const auto gens = read_gens(gens_path);
            const auto t = tower_search(gens, radius, height, max_elements ? max_elements : max_elements_from_env(kDefaultMaxElements));
            write_sink(out_path, dump(t ? to_json(*t) : Json(nullptr)));
            return kOk;
        };
    });

    auto* cs = app.add_subcommand("chain-search", "transition chain of length two in a word ball");
    cs->add_option("--gens", gens_path, "generators file")->required();
    cs->add_option("--radius", radius, "word-ball radius");
    cs->add_option("-o,--out", out_path, "output file");
    cs->add_option("--max-elements", max_elements, "ball size cap")->check(CLI::PositiveNumber);
    cs->callback([&] {
        action = [&] {
            require_readable({gens_path});
            const auto gens = read_gens(gens_path);
            const auto w = find_transition_chain2(gens, radius, max_elements ? max_elements : max_elements_from_env(kDefaultMaxElements));
            write_sink(out_path, dump(w ? to_json(*w) : Json(nullptr)));
            return kOk;
        };
    });

    // certify
    auto* cert = app.add_subcommand("certify", "re-verify a certificate or witness file");
    std::string cert_kind, cert_file = "-";
    cert->add_option("kind", cert_kind, "wreath | b | tower | chain")
        ->required()
        ->check(CLI::IsMember({"wreath", "b", "tower", "chain"}));
    cert->add_option("--file", cert_file, "certificate file, - for stdin");
    cert->callback([&] {
        action = [&] {
            require_readable({cert_file});
            const Verdict v = certify(cert_kind_from(cert_kind), read_json(cert_file));
            write_sink("-", dump(Json{{"accepted", v.accepted}, {"reasons", v.reasons}}));
            return v.accepted ? kOk : kRejected;
        };
    });

    // embedding drivers
    auto* ex = app.add_subcommand("extract-b", "find a copy of B in <a, b>");
    EmbedConfig ecfg;
    ex->add_option("--gens", gens_path, "file with exactly two generators")->required();
    ex->add_option("--max-power", ecfg.max_power, "cap on escalated powers")->check(CLI::PositiveNumber);
    ex->add_option("--stage-cap", ecfg.stage_cap, "cap on normalization stages")->check(CLI::PositiveNumber);
    ex->add_option("--chain-radius", ecfg.chain_radius, "radius for the transition chain search");
    ex->add_option("--spanning-length", ecfg.spanning_len, "word length for spanning searches");
    ex->add_option("-o,--out", out_path, "output file");
    ex->callback([&] {
        action = [&] {
            require_readable({gens_path});
            const auto gens = read_gens(gens_path);
            if (gens.size() != 2) throw ParseError("extract-b needs exactly two generators");
            ecfg.max_elements = max_elements_from_env(ecfg.max_elements);
            write_sink(out_path, dump(to_json(extract_b(gens[0], gens[1], ecfg))));
            return kOk;
        };
    });

    auto* tw = app.add_subcommand("tower-to-wn", "improve an exemplary tower to W_n generators");
    std::string tower_file = "-";
    long eff_cap = 64;
    tw->add_option("--file", tower_file, "tower witness file, - for stdin");
    tw->add_option("--cap", eff_cap, "cap on efficiency powers")->check(CLI::PositiveNumber);
    tw->add_option("-o,--out", out_path, "output file");
    tw->callback([&] {
        action = [&] {
            require_readable({tower_file});
            write_sink(out_path, dump(to_json(tower_to_wn(tower_from_json(read_json(tower_file)), eff_cap))));
            return kOk;
        };
    });

    auto* ww = app.add_subcommand("w-witness", "disjoint W_1..W_m families in a generated group");
    WWitnessConfig wcfg;
    ww->add_option("--gens", gens_path, "generators file")->required();
    ww->add_option("--height", wcfg.max_height, "largest height m");
    ww->add_option("--radius", wcfg.radius, "word-ball radius");
    ww->add_option("-o,--out", out_path, "output file");
    ww->callback([&] {
        action = [&] {
            require_readable({gens_path});
            wcfg.max_elements = max_elements_from_env(wcfg.max_elements);
            write_sink(out_path, dump(to_json(w_witness(read_gens(gens_path), wcfg))));
            return kOk;
        };
    });

    // plot
    auto* pl = app.add_subcommand("plot", "SVG of superimposed graphs");
    std::vector<std::string> plot_files;
    int pixels = 512;
    pl->add_option("files", plot_files, "map, list, or family files; - for stdin");
    pl->add_option("--size", pixels, "width and height in pixels")->check(CLI::PositiveNumber);
    pl->add_option("-o,--out", out_path, "output file");
    pl->callback([&] {
        action = [&] {
            if (plot_files.empty()) plot_files.push_back("-");
            require_readable(plot_files);
            std::vector<PLMap> maps;
            for (const auto& f : plot_files)
                for (auto& g : read_gens(f)) maps.push_back(std::move(g));
            write_sink(out_path, svg_plot(maps, pixels));
            return kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("UsageError", e.what());
    }

    try {
        return action ? action() : kInvalid;
    } catch (const TracedBudgetExceeded& e) {
        return emit_error("BudgetExceeded", e.what(), to_json(e.trace()));
    } catch (const Error& e) {
        return emit_error(std::string(to_string(e.kind())), e.what());
    } catch (const IoError& e) {
        return emit_error("IOError", e.what());
    } catch (const nlohmann::json::exception& e) {
        return emit_error("ParseError", e.what());
    } catch (const std::exception& e) {
        return emit_error("InternalError", e.what());
    }
}
