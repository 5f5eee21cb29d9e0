#include "freecons/cli.hpp"

#include "freecons/config.hpp"
#include "freecons/errors.hpp"
#include "freecons/genericity.hpp"
#include "freecons/wordspec.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace freecons {

namespace {

struct Common {
    std::string config_path;
    int workers = 1;
    int window = 0; // 0: use the config's window
    int search_bound = 6;
    std::string out_path;
    bool timing = false;
};

void add_common(CLI::App* cmd, Common& c, bool sweep = false) {
    cmd->add_option("--config", c.config_path, "group config file")->required();
    cmd->add_option("--window", c.window, "letter window override");
    cmd->add_option("--bound", c.search_bound, "subgroup sample window");
    if (sweep) {
        cmd->add_option("--workers", c.workers, "parallel sweep workers");
        cmd->add_option("--out", c.out_path, "write the report to a file");
        cmd->add_flag("--timing", c.timing, "include wall-clock time in reports");
    }
}

SweepOptions sweep_options(const GroupConfig& cfg, const Common& c) {
    SweepOptions o;
    o.workers = c.workers;
    o.window = c.window > 0 ? c.window : cfg.window;
    o.search_bound = c.search_bound;
    o.group_id = cfg.id;
    return o;
}

int effective_window(const GroupConfig& cfg, const Common& c) {
    return c.window > 0 ? c.window : cfg.window;
}

void deliver(std::ostringstream& out, const Common& c, const GroupConfig& cfg,
             const std::string& report) {
    out << "config_digest: " << cfg.digest << "\n";
    if (!c.out_path.empty()) {
        std::ofstream f(c.out_path);
        if (!f) throw ConfigError("cannot write report file: " + c.out_path);
        f << report << "\n";
        out << "report written to " << c.out_path << "\n";
    } else {
        out << report << "\n";
    }
}

int cmd_reduce(const GroupConfig& cfg, const std::string& word,
               std::ostringstream& out) {
    if (cfg.amalgam) {
        AmalgamWord w = parse_amalgam_word(*cfg.amalgam, word);
        out << cfg.amalgam->format(w) << " (length " << w.length() << ")\n";
    } else {
        HnnWord w = parse_hnn_word(*cfg.hnn, word);
        out << cfg.hnn->format(w) << " (t-length " << w.t_length() << ")\n";
    }
    return 0;
}

int cmd_classify(const GroupConfig& cfg, const std::string& word,
                 std::ostringstream& out) {
    if (cfg.amalgam) {
        const auto& P = *cfg.amalgam;
        AmalgamWord w = parse_amalgam_word(P, word);
        auto cf = P.cyclic_form(w);
        out << (cf.core.length() <= 1 ? "elliptic" : "hyperbolic") << "\n";
        out << "core: " << P.format(cf.core) << " (length " << cf.core.length()
            << ")\n";
        out << "conjugator: " << P.format(cf.conjugator) << "\n";
    } else {
        const auto& S = *cfg.hnn;
        HnnWord w = parse_hnn_word(S, word);
        auto cf = S.cyclic_form(w);
        out << (cf.core.t_length() == 0 ? "elliptic" : "hyperbolic") << "\n";
        out << "core: " << S.format(cf.core) << " (t-length "
            << cf.core.t_length() << ")\n";
        out << "conjugator: " << S.format(cf.conjugator) << "\n";
    }
    return 0;
}

int cmd_conjugate(const GroupConfig& cfg, const std::string& xs,
                  const std::string& ys, int window, std::ostringstream& out) {
    if (cfg.amalgam) {
        const auto& P = *cfg.amalgam;
        auto c = P.conjugator(parse_amalgam_word(P, xs), parse_amalgam_word(P, ys));
        if (c)
            out << "conjugate, witness: " << P.format(*c) << "\n";
        else
            out << "not conjugate\n";
    } else {
        const auto& S = *cfg.hnn;
        auto c = S.conjugator(parse_hnn_word(S, xs), parse_hnn_word(S, ys), window);
        if (c)
            out << "conjugate, witness: " << S.format(*c) << "\n";
        else
            out << "not conjugate\n";
    }
    return 0;
}

int cmd_roots(const GroupConfig& cfg, const std::string& word, long long d,
              int bound, std::ostringstream& out) {
    if (cfg.amalgam) {
        const auto& P = *cfg.amalgam;
        auto roots = P.dth_roots(parse_amalgam_word(P, word), d, bound);
        out << roots.size() << " root(s)\n";
        for (const auto& r : roots) out << "  " << P.format(r) << "\n";
    } else {
        const auto& S = *cfg.hnn;
        auto roots = S.dth_roots(parse_hnn_word(S, word), d, bound);
        out << roots.size() << " root(s)\n";
        for (const auto& r : roots) out << "  " << S.format(r) << "\n";
    }
    return 0;
}

int cmd_witness(const GroupConfig& cfg, long long d, long long n,
                std::ostringstream& out) {
    if (cfg.amalgam) {
        auto wa = cfg.amalgam->witness_alpha(d, n);
        out << "alpha: " << cfg.amalgam->format(wa.alpha) << "\n";
        out << "exponents: alpha=" << wa.alpha_exp << " beta=" << wa.beta_exp
            << "\n";
    } else {
        auto wa = cfg.hnn->witness_alpha(d, n);
        out << "alpha: " << cfg.hnn->format(wa.alpha) << "\n";
        out << "g: " << cfg.hnn->base().format(wa.g) << "\n";
        out << "exponents: alpha=" << wa.alpha_exp << " beta=" << wa.beta_exp
            << "\n";
    }
    return 0;
}

int cmd_verify(const GroupConfig& cfg, const Common& c, long long d, long long n,
               std::ostringstream& out) {
    SweepOptions o = sweep_options(cfg, c);
    WitnessReport rep = cfg.amalgam ? verify_witness(*cfg.amalgam, d, n, o)
                                    : verify_witness(*cfg.hnn, d, n, o);
    deliver(out, c, cfg, render_report(rep, c.timing));
    return rep.pass ? 0 : 1;
}

int cmd_census(const GroupConfig& cfg, const Common& c, long long d, int radius,
               std::ostringstream& out) {
    SweepOptions o = sweep_options(cfg, c);
    CensusReport rep = cfg.amalgam ? fs_type_census(*cfg.amalgam, d, radius, o)
                                   : fs_type_census(*cfg.hnn, d, radius, o);
    deliver(out, c, cfg, render_report(rep, c.timing));
    return 0;
}

int cmd_generosity(const GroupConfig& cfg, const Common& c, int m, int N,
                   std::ostringstream& out) {
    if (!cfg.amalgam)
        throw ConfigError("generosity search is defined for amalgam configs");
    SweepOptions o = sweep_options(cfg, c);
    GenerosityResult res = generosity_escapee(*cfg.amalgam, m, N, o);
    deliver(out, c, cfg, render_report(res, c.timing));
    return 0;
}

int cmd_detect(const GroupConfig& cfg, const Common& c, std::ostringstream& out) {
    out << "group: " << cfg.id << " (digest " << cfg.digest << ")\n";
    int window = effective_window(cfg, c);
    if (cfg.amalgam) {
        const auto& P = *cfg.amalgam;
        out << "construction: amalgam\n";
        bool deg = P.degenerate(window);
        out << "degenerate: " << (deg ? "yes" : "no");
        const auto& G = P.factor(0);
        const auto& H = P.factor(1);
        if (deg && G.finite() && H.finite() && G.order() == 2 && H.order() == 2 &&
            P.subgroup(0).kind() == SubgroupKind::Trivial)
            out << " (dihedral case: Z/2 * Z/2 with trivial amalgam)";
        out << "\n";
        if (auto t = P.witness_triple(window)) {
            out << "witnesses: g=" << P.factor(t->g_side).format(t->g);
            out << " [side " << t->g_side << "]";
            const auto& HF = P.factor(1 - t->g_side);
            out << " h=" << HF.format(t->h) << " h'=" << HF.format(t->hp);
            out << " (" << (t->strong ? "strong: distinct double cosets"
                                      : "weak: distinct elements")
                << ")\n";
        } else {
            out << "witnesses: none found\n";
        }
    } else {
        const auto& S = *cfg.hnn;
        out << "construction: hnn\n";
        auto g = S.nonascending_witness(window);
        if (g)
            out << "non-ascending: yes, witness g=" << S.base().format(*g) << "\n";
        else
            out << "non-ascending: no witness found (ascending within window)\n";
    }
    return 0;
}

} // namespace

RunResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"computations in free products with amalgamation and HNN extensions"};
    app.require_subcommand(1);

    Common c;
    std::string word, word_x, word_y;
    long long d = 2, n = 0;
    int radius = 2, m = 1, N = 4;

    auto* reduce = app.add_subcommand("reduce", "normal form of a word");
    add_common(reduce, c);
    reduce->add_option("--word", word, "word expression")->required();

    auto* classify = app.add_subcommand("classify", "elliptic/hyperbolic + cyclic form");
    add_common(classify, c);
    classify->add_option("--word", word, "word expression")->required();

    auto* conjugate = app.add_subcommand("conjugate", "conjugacy test with witness");
    add_common(conjugate, c);
    conjugate->add_option("--x", word_x, "first word")->required();
    conjugate->add_option("--y", word_y, "second word")->required();

    auto* roots = app.add_subcommand("roots", "d-th roots of a word");
    add_common(roots, c);
    roots->add_option("--word", word, "word expression")->required();
    roots->add_option("-d,--degree", d, "root degree")->required();

    auto* witness = app.add_subcommand("witness", "build the ball-escaping witness");
    add_common(witness, c);
    witness->add_option("-d,--degree", d, "power degree")->required();
    witness->add_option("-n,--radius", n, "ball radius")->required();

    auto* verify = app.add_subcommand("verify", "verify the witness over a ball");
    add_common(verify, c, true);
    verify->add_option("-d,--degree", d, "power degree")->required();
    verify->add_option("-n,--radius", n, "ball radius")->required();

    auto* census = app.add_subcommand("census", "root-count census over a ball");
    add_common(census, c, true);
    census->add_option("-d,--degree", d, "power degree")->required();
    census->add_option("--radius", radius, "ball radius")->required();

    auto* generosity = app.add_subcommand("generosity", "search for an escapee "
                                                        "of elliptic translates");
    add_common(generosity, c, true);
    generosity->add_option("-m,--translate-radius", m, "translate radius");
    generosity->add_option("-N,--target-radius", N, "search radius");

    auto* detect = app.add_subcommand("detect", "structural flags of a config");
    add_common(detect, c);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    std::ostringstream out;
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream err;
        err << "usage error: " << e.what() << "\n";
        return RunResult{2, err.str()};
    }
    try {
        GroupConfig cfg = load_config(c.config_path);
        int code = 0;
        if (reduce->parsed()) code = cmd_reduce(cfg, word, out);
        else if (classify->parsed()) code = cmd_classify(cfg, word, out);
        else if (conjugate->parsed())
            code = cmd_conjugate(cfg, word_x, word_y, effective_window(cfg, c), out);
        else if (roots->parsed()) code = cmd_roots(cfg, word, d, c.search_bound, out);
        else if (witness->parsed()) code = cmd_witness(cfg, d, n, out);
        else if (verify->parsed()) code = cmd_verify(cfg, c, d, n, out);
        else if (census->parsed()) code = cmd_census(cfg, c, d, radius, out);
        else if (generosity->parsed()) code = cmd_generosity(cfg, c, m, N, out);
        else if (detect->parsed()) code = cmd_detect(cfg, c, out);
        return RunResult{code, out.str()};
    } catch (const DegenerateError& e) {
        out << "rejected: " << e.what() << "\n";
        return RunResult{1, out.str()};
    } catch (const Error& e) {
        out << "error: " << e.what() << "\n";
        return RunResult{2, out.str()};
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return RunResult{2, out.str()};
    }
}

} // namespace freecons
