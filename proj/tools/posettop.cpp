#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "posettop/builtins.hpp"
#include "posettop/comparison.hpp"
#include "posettop/cubical.hpp"
#include "posettop/homotopy.hpp"
#include "posettop/miner.hpp"
#include "posettop/poset_io.hpp"
#include "posettop/simplicial.hpp"

namespace {

using namespace posettop;
using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

struct CommonOpts {
    std::string input;
    std::string builtin;
    int max_dim = 1;
    std::size_t cap = 1'000'000;
    std::string format = "text";
    std::uint64_t seed = 0;
    int threads = 0;
};

int default_threads() {
    if (const char* env = std::getenv("POSETTOP_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_input) {
    if (needs_input) {
        cmd->add_option("-i,--input", opts.input, "poset file (JSON or text), or builtin:NAME");
        cmd->add_option("--builtin", opts.builtin, "builtin poset name");
        cmd->add_option("--max-dim", opts.max_dim, "highest homology degree");
    }
    cmd->add_option("--cap", opts.cap, "cube enumeration cap per dimension");
    cmd->add_option("--format", opts.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--seed", opts.seed, "PRNG seed");
    cmd->add_option("--threads", opts.threads, "worker threads (default POSETTOP_THREADS or 1)");
}

Poset resolve_poset(const CommonOpts& opts) {
    if (!opts.builtin.empty()) return builtin_poset(opts.builtin);
    if (opts.input.rfind("builtin:", 0) == 0) return builtin_poset(opts.input.substr(8));
    if (opts.input.empty()) throw ParseError("no input poset: pass --input or --builtin");
    return load_poset_file(opts.input);
}

std::string input_name(const CommonOpts& opts) {
    return !opts.builtin.empty() ? opts.builtin : opts.input;
}

json json_int(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

json group_json(const HomologyGroup& g) {
    json torsion = json::array();
    for (const auto& t : g.torsion) torsion.push_back(json_int(t));
    return {{"betti", g.betti}, {"torsion", torsion}};
}

std::string torsion_text(const HomologyGroup& g) {
    if (g.torsion.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        if (i) out += ",";
        out += g.torsion[i].str();
    }
    return out;
}

int cmd_homology(const CommonOpts& opts, const std::string& theory,
                 const std::string& dump_prefix) {
    const Poset P = resolve_poset(opts);
    EnumerationCaps caps{opts.cap};
    const bool want_cube = theory == "cube" || theory == "both";
    const bool want_simpl = theory == "simpl" || theory == "both";
    std::vector<HomologyGroup> cube, simpl;
    if (want_cube) cube = cubical_homology(P, opts.max_dim, caps);
    if (want_simpl) simpl = simplicial_homology(order_complex(P), opts.max_dim);

    if (!dump_prefix.empty()) {
        auto write = [](const std::string& path, const std::string& text) {
            std::ofstream out(path);
            if (!out) throw Error("cannot write " + path);
            out << text;
        };
        if (want_cube) {
            CubeComplex cx(P, caps);
            for (int n = 1; n <= opts.max_dim + 1; ++n)
                write(dump_prefix + ".cube.d" + std::to_string(n) + ".mtx",
                      cx.boundary_matrix(n).to_matrix_market());
        }
        if (want_simpl) {
            auto K = order_complex(P);
            for (int n = 1; n <= opts.max_dim + 1; ++n)
                write(dump_prefix + ".simpl.d" + std::to_string(n) + ".mtx",
                      simplicial_boundary_matrix(K, n).to_matrix_market());
        }
    }

    if (opts.format == "json") {
        json out{{"schema", 1},
                 {"command", "homology"},
                 {"input", input_name(opts)},
                 {"theory", theory},
                 {"max_dim", opts.max_dim}};
        json results = json::array();
        for (int d = 0; d <= opts.max_dim; ++d) {
            json row{{"degree", d}};
            if (want_cube) row["cube"] = group_json(cube[static_cast<std::size_t>(d)]);
            if (want_simpl) row["simpl"] = group_json(simpl[static_cast<std::size_t>(d)]);
            results.push_back(row);
        }
        out["results"] = results;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "poset: " << input_name(opts) << " (" << P.size() << " elements)\n";
        std::cout << std::left << std::setw(8) << "degree";
        if (want_cube) std::cout << std::setw(14) << "cube";
        if (want_simpl) std::cout << std::setw(14) << "simpl";
        std::cout << "\n";
        for (int d = 0; d <= opts.max_dim; ++d) {
            std::cout << std::left << std::setw(8) << d;
            if (want_cube)
                std::cout << std::setw(14) << cube[static_cast<std::size_t>(d)].to_string();
            if (want_simpl)
                std::cout << std::setw(14) << simpl[static_cast<std::size_t>(d)].to_string();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_compare(const CommonOpts& opts) {
    const Poset P = resolve_poset(opts);
    EnumerationCaps caps{opts.cap};
    std::vector<InducedMapReport> reports;
    for (int d = 0; d <= opts.max_dim; ++d) reports.push_back(induced_map(P, d, caps));

    if (opts.format == "json") {
        json out{{"schema", 1}, {"command", "compare"}, {"input", input_name(opts)},
                 {"max_dim", opts.max_dim}};
        json results = json::array();
        for (const auto& r : reports) {
            results.push_back({{"degree", r.degree},
                               {"betti_cube", r.cube.betti},
                               {"torsion_cube", group_json(r.cube)["torsion"]},
                               {"betti_simpl", r.simpl.betti},
                               {"torsion_simpl", group_json(r.simpl)["torsion"]},
                               {"psi_star", r.status()}});
        }
        out["results"] = results;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "poset: " << input_name(opts) << " (" << P.size() << " elements)\n";
        std::cout << std::left << std::setw(8) << "degree" << std::setw(12) << "betti_cube"
                  << std::setw(14) << "torsion_cube" << std::setw(13) << "betti_simpl"
                  << std::setw(15) << "torsion_simpl" << "psi_star\n";
        for (const auto& r : reports)
            std::cout << std::left << std::setw(8) << r.degree << std::setw(12) << r.cube.betti
                      << std::setw(14) << torsion_text(r.cube) << std::setw(13) << r.simpl.betti
                      << std::setw(15) << torsion_text(r.simpl) << r.status() << "\n";
    }
    return 0;
}

int cmd_loop(const CommonOpts& opts, const std::string& action, const std::string& literal,
             int radius_cap, std::size_t step_cap) {
    const Poset P = resolve_poset(opts);
    EnumerationCaps caps{opts.cap};
    Loop f;
    std::string trimmed = literal;
    auto pos = trimmed.find_first_not_of(" \t");
    if (pos != std::string::npos && trimmed[pos] == '{')
        f = loop_from_json(P, trimmed);
    else
        f = parse_loop_literal(P, trimmed);

    if (action == "validate") {
        auto v = validate_loop(P, f);
        if (opts.format == "json") {
            std::cout << json{{"schema", 1},
                              {"command", "loop"},
                              {"action", "validate"},
                              {"valid", v.valid},
                              {"violations", v.violations}}
                             .dump()
                      << "\n";
        } else if (v.valid) {
            std::cout << "valid\n";
        } else {
            std::cout << "invalid\n";
            for (const auto& msg : v.violations) std::cout << "  " << msg << "\n";
        }
        return 0;
    }

    auto v = validate_loop(P, f);
    if (!v.valid) throw ParseError("invalid loop: " + v.violations.front());

    if (action == "hurewicz") {
        auto h = hurewicz(P, f, caps);
        if (opts.format == "json") {
            json cls{{"torsion", json::array()}, {"free", json::array()}};
            for (const auto& t : h.cls.torsion_coords) cls["torsion"].push_back(json_int(t));
            for (const auto& t : h.cls.free_coords) cls["free"].push_back(json_int(t));
            std::cout << json{{"schema", 1},
                              {"command", "loop"},
                              {"action", "hurewicz"},
                              {"chain", json::parse(chain_to_json(P, h.chain))},
                              {"h1", group_json(h.group)},
                              {"class", cls},
                              {"zero", h.is_zero_class()}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "chain: " << chain_to_json(P, h.chain) << "\n";
            std::cout << "H1: " << h.group.to_string() << "\n";
            std::cout << "class: free=[";
            for (std::size_t i = 0; i < h.cls.free_coords.size(); ++i)
                std::cout << (i ? "," : "") << h.cls.free_coords[i].str();
            std::cout << "] torsion=[";
            for (std::size_t i = 0; i < h.cls.torsion_coords.size(); ++i)
                std::cout << (i ? "," : "") << h.cls.torsion_coords[i].str();
            std::cout << "]\n";
            std::cout << (h.is_zero_class() ? "zero class\n" : "nonzero class\n");
        }
        return 0;
    }

    if (action == "reduce") {
        const int rc = radius_cap > 0 ? radius_cap : f.radius;
        auto r = null_homotopy_search(P, f, rc, step_cap);
        if (opts.format == "json") {
            json out{{"schema", 1},
                     {"command", "loop"},
                     {"action", "reduce"},
                     {"states", r.states_explored}};
            if (r.status == NullHomotopyStatus::Found) {
                json rows = json::array();
                for (const auto& row : r.certificate->rows) rows.push_back(loop_literal(P, row));
                out["found"] = true;
                out["certificate"] = rows;
            } else {
                out["found"] = false;
                out["reason"] = r.status == NullHomotopyStatus::StepCapReached
                                    ? "step_cap"
                                    : "exhausted";
            }
            std::cout << out.dump() << "\n";
        } else if (r.status == NullHomotopyStatus::Found) {
            std::cout << "certificate (" << r.certificate->rows.size() << " rows):\n";
            for (const auto& row : r.certificate->rows)
                std::cout << "  " << loop_literal(P, row) << "\n";
        } else {
            std::cout << "NotFoundWithinBounds (radius_cap=" << rc << ", states="
                      << r.states_explored << ")\n";
        }
        return 0;
    }
    throw ParseError("unknown loop action: " + action);
}

int cmd_mine(const CommonOpts& opts, int trials, int size, double density) {
    MineConfig cfg;
    cfg.trials = trials;
    cfg.size = size;
    cfg.density = density;
    cfg.seed = opts.seed;
    cfg.max_dim = opts.max_dim;
    cfg.caps = EnumerationCaps{opts.cap};
    cfg.threads = opts.threads > 0 ? opts.threads : default_threads();
    const MineReport report = mine(cfg);

    if (opts.format == "json") {
        json findings = json::array();
        for (const auto& f : report.findings) {
            json cube = json::array(), simpl = json::array();
            for (const auto& g : f.comparison.cube) cube.push_back(group_json(g));
            for (const auto& g : f.comparison.simpl) simpl.push_back(group_json(g));
            findings.push_back({{"trial", f.trial},
                                {"mismatch_degrees", f.comparison.mismatch_degrees},
                                {"original", json::parse(poset_to_json(f.original))},
                                {"shrunk", json::parse(poset_to_json(f.shrunk))},
                                {"cube", cube},
                                {"simpl", simpl}});
        }
        std::cout << json{{"schema", 1},
                          {"command", "mine"},
                          {"trials", report.trials},
                          {"skipped_cap", report.skipped_cap},
                          {"findings", findings}}
                         .dump()
                  << "\n";
    } else {
        for (const auto& f : report.findings) {
            std::cout << "trial " << f.trial << ": mismatch in degrees";
            for (int d : f.comparison.mismatch_degrees) std::cout << " " << d;
            std::cout << "\n  shrunk: " << poset_to_json(f.shrunk) << "\n";
        }
        std::cout << "trials=" << report.trials << " findings=" << report.findings.size()
                  << " skipped_cap=" << report.skipped_cap << "\n";
    }
    return 0;
}

int cmd_gen(const std::string& name, bool dot) {
    const Poset P = builtin_poset(name);
    std::cout << (dot ? poset_to_dot(P) : poset_to_json(P) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete cubical and simplicial homology of finite posets"};
    app.require_subcommand(1);

    CommonOpts h_opts, c_opts, l_opts, m_opts;
    std::string theory = "both";
    auto* homology = app.add_subcommand("homology", "Betti numbers and torsion per degree");
    add_common(homology, h_opts, true);
    homology->add_option("--theory", theory, "cube, simpl, or both")
        ->check(CLI::IsMember({"cube", "simpl", "both"}));
    std::string dump_prefix;
    homology->add_option("--dump-boundaries", dump_prefix,
                         "write boundary matrices as MatrixMarket files with this path prefix");

    auto* compare = app.add_subcommand("compare", "cube vs simplicial homology with psi_* status");
    add_common(compare, c_opts, true);

    auto* loop = app.add_subcommand("loop", "validate, hurewicz, or reduce a based loop");
    std::string action = "validate", literal;
    int radius_cap = 0;
    std::size_t step_cap = 100'000;
    add_common(loop, l_opts, true);
    loop->add_option("--action", action, "validate | hurewicz | reduce")
        ->check(CLI::IsMember({"validate", "hurewicz", "reduce"}));
    loop->add_option("literal", literal, "loop literal, e.g. \"b > d < a > c < b\", or JSON")
        ->required();
    loop->add_option("--radius-cap", radius_cap, "search radius cap (default: loop radius)");
    loop->add_option("--step-cap", step_cap, "search state cap");

    auto* mine_cmd = app.add_subcommand("mine", "random-poset cube/simplicial discrepancy miner");
    int trials = 100, size = 6;
    double density = 0.35;
    add_common(mine_cmd, m_opts, true);
    mine_cmd->add_option("--trials", trials, "number of random posets");
    mine_cmd->add_option("--size", size, "elements per random poset");
    mine_cmd->add_option("--density", density, "edge probability in [0,1]");

    auto* gen = app.add_subcommand("gen", "emit a builtin poset as JSON");
    std::string gen_name;
    bool gen_dot = false;
    gen->add_option("name", gen_name, "builtin name (chain{n}, fence{p}, circle4, sphere6, max5, qcube{n})")
        ->required();
    gen->add_flag("--dot", gen_dot, "emit the Hasse diagram as DOT instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (homology->parsed()) return cmd_homology(h_opts, theory, dump_prefix);
        if (compare->parsed()) return cmd_compare(c_opts);
        if (loop->parsed()) return cmd_loop(l_opts, action, literal, radius_cap, step_cap);
        if (mine_cmd->parsed()) return cmd_mine(m_opts, trials, size, density);
        if (gen->parsed()) return cmd_gen(gen_name, gen_dot);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const InternalInvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
