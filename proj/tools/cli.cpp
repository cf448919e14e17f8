#include "cli.hpp"

#include <CLI11.hpp>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rsc/errors.hpp"
#include "rsc/expectation.hpp"
#include "rsc/gallery.hpp"
#include "rsc/harness.hpp"
#include "rsc/json_io.hpp"
#include "rsc/subcomplex_v.hpp"
#include "rsc/subdivision.hpp"

namespace rsc::cli {

namespace {

const std::vector<std::string> kSubcommands = {"subdivide", "betti",     "vbuild", "muz",
                                               "expect",    "sample",    "enumerate",
                                               "converge",  "qcoeff",    "gallery"};

struct CommonOpts {
    int threads = 0;
    std::int64_t max_simplices = kDefaultSubdivisionCap;
    int max_enum_bits = kDefaultEnumBits;
};

void apply_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

Caps caps_of(const CommonOpts& c) {
    Caps caps;
    caps.max_simplices = c.max_simplices;
    caps.max_enum_bits = c.max_enum_bits;
    caps.max_betti_simplices = c.max_simplices;
    return caps;
}

void emit(const Json& j, const std::string& out_path, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        out << text;
    else
        write_text_file(out_path, text);
}

MuZRoute parse_route(const std::string& r) {
    if (r == "auto") return MuZRoute::Auto;
    if (r == "enum") return MuZRoute::Enumeration;
    if (r == "recursive") return MuZRoute::Recursive;
    if (r == "closed") return MuZRoute::Closed;
    throw validation_error("unknown route: " + r);
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (!args.empty() && args.front().rfind('-', 0) != 0 &&
        std::find(kSubcommands.begin(), kSubcommands.end(), args.front()) == kSubcommands.end()) {
        err << "unknown subcommand: " << args.front() << "\nusage: rsc <";
        for (std::size_t i = 0; i < kSubcommands.size(); ++i)
            err << kSubcommands[i] << (i + 1 < kSubcommands.size() ? "|" : "");
        err << "> [options]\n";
        return 64;
    }

    CLI::App app{"random subcomplexes of barycentric subdivisions"};
    app.require_subcommand(0, 1);
    app.set_config("--config");

    CommonOpts common;
    app.add_option("--threads", common.threads, "harness threads (0 = all cores)");
    app.add_option("--max-simplices", common.max_simplices, "simplex-count cap for subdivisions");
    app.add_option("--max-enum-bits", common.max_enum_bits, "exhaustive-enumeration bit cap");

    // ---- subdivide ----
    auto* sub = app.add_subcommand("subdivide", "iterated barycentric subdivision");
    std::string sub_input, sub_output;
    int sub_depth = 1;
    sub->add_option("--input", sub_input)->required();
    sub->add_option("--depth", sub_depth)->required();
    sub->add_option("--output,--out", sub_output);

    // ---- betti ----
    auto* bet = app.add_subcommand("betti", "Z/2 Betti numbers and Euler characteristic");
    std::string bet_input, bet_out;
    bet->add_option("--input", bet_input)->required();
    bet->add_option("--out", bet_out);

    // ---- vbuild ----
    auto* vb = app.add_subcommand("vbuild", "build the dual subcomplex V_eps in Sd(K)");
    std::string vb_input, vb_eps, vb_out;
    int vb_k = 1;
    vb->add_option("--input", vb_input)->required();
    vb->add_option("--k", vb_k)->required();
    vb->add_option("--epsilon", vb_eps, "cochain bits as hex")->required();
    vb->add_option("--out", vb_out);

    // ---- muz ----
    auto* mz = app.add_subcommand("muz", "measure of the cocycle subspace of a standard simplex");
    std::string mz_nu = "1/2", mz_route = "auto", mz_out;
    int mz_k = 1, mz_p = 1;
    mz->add_option("--nu", mz_nu)->required();
    mz->add_option("--k", mz_k)->required();
    mz->add_option("--p", mz_p)->required();
    mz->add_option("--route", mz_route)->check(CLI::IsMember({"auto", "enum", "recursive", "closed"}));
    mz->add_option("--out", mz_out);

    // ---- expect ----
    auto* ex = app.add_subcommand("expect", "exact expectations for random subcomplexes");
    std::string ex_input, ex_nu = "1/2", ex_what = "face", ex_out;
    int ex_k = 1;
    ex->add_option("--input", ex_input)->required();
    ex->add_option("--k", ex_k)->required();
    ex->add_option("--nu", ex_nu)->required();
    ex->add_option("--what", ex_what)->check(CLI::IsMember({"face", "chi", "cw", "blocks", "cplus"}));
    ex->add_option("--out", ex_out);

    // ---- sample ----
    auto* sa = app.add_subcommand("sample", "Monte Carlo experiment");
    std::string sa_input, sa_nu = "1/2", sa_out, sa_csv;
    int sa_k = 1, sa_depth = 0;
    std::int64_t sa_trials = 1000;
    std::uint64_t sa_seed = 0;
    bool sa_no_betti = false, sa_no_census = false;
    sa->add_option("--input", sa_input)->required();
    sa->add_option("--k", sa_k)->required();
    sa->add_option("--nu", sa_nu)->required();
    sa->add_option("--depth", sa_depth);
    sa->add_option("--trials", sa_trials)->required();
    sa->add_option("--seed", sa_seed)->required();
    sa->add_option("--out", sa_out);
    sa->add_option("--csv", sa_csv);
    sa->add_flag("--no-betti", sa_no_betti);
    sa->add_flag("--no-census", sa_no_census);

    // ---- enumerate ----
    auto* en = app.add_subcommand("enumerate", "exhaustive exact experiment");
    std::string en_input, en_nu = "1/2", en_out, en_csv;
    int en_k = 1, en_depth = 0;
    en->add_option("--input", en_input)->required();
    en->add_option("--k", en_k)->required();
    en->add_option("--nu", en_nu)->required();
    en->add_option("--depth", en_depth);
    en->add_option("--out", en_out);
    en->add_option("--csv", en_csv);

    // ---- converge ----
    auto* cv = app.add_subcommand("converge", "normalized expectations against depth");
    std::string cv_input, cv_nu = "1/2", cv_out, cv_csv;
    int cv_k = 1, cv_dmax = 3;
    std::int64_t cv_trials = 0;
    std::uint64_t cv_seed = 0;
    cv->add_option("--input", cv_input)->required();
    cv->add_option("--k", cv_k)->required();
    cv->add_option("--nu", cv_nu)->required();
    cv->add_option("--dmax", cv_dmax)->required();
    cv->add_option("--trials", cv_trials);
    cv->add_option("--seed", cv_seed);
    cv->add_option("--out", cv_out);
    cv->add_option("--csv", cv_csv);

    // ---- qcoeff ----
    auto* qc = app.add_subcommand("qcoeff", "asymptotic subdivision coefficients");
    int qc_n = 1;
    std::string qc_eval, qc_out;
    qc->add_option("--n", qc_n)->required();
    qc->add_option("--eval", qc_eval, "evaluate the generating polynomial at a rational");
    qc->add_option("--out", qc_out);

    // ---- gallery ----
    auto* ga = app.add_subcommand("gallery", "explicit surface constructions");
    auto* ga_sphere = ga->add_subcommand("sphere", "2-sphere at depth 1");
    auto* ga_holes = ga->add_subcommand("holes", "sphere with r holes at depth 1");
    auto* ga_surface = ga->add_subcommand("surface", "genus-g surface at depth d");
    int ga_r = 0, ga_genus = 1, ga_depth = 2;
    bool ga_verify = false;
    std::string ga_out;
    ga_holes->add_option("--r", ga_r)->required();
    ga_surface->add_option("--genus", ga_genus)->required();
    ga_surface->add_option("--depth", ga_depth)->required();
    for (auto* g : {ga_sphere, ga_holes, ga_surface}) {
        g->add_flag("--verify", ga_verify);
        g->add_option("--out", ga_out);
    }

    std::vector<const char*> argv;
    argv.push_back("rsc");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "argument error: " << e.what() << "\n";
        return 2;
    }

    apply_threads(common.threads);
    const Caps caps = caps_of(common);

    try {
        if (app.get_subcommands().empty()) {
            out << app.help();
            return 0;
        }

        if (sub->parsed()) {
            SimplicialComplex K = load_complex_file(sub_input);
            auto it = subdivide_iterated(K, sub_depth, caps.max_simplices);
            emit(complex_to_json(it.complex), sub_output, out);
            return 0;
        }
        if (bet->parsed()) {
            SimplicialComplex K = load_complex_file(bet_input);
            BettiVector bv = betti(K, caps.max_betti_simplices);
            Json j;
            j["betti"] = bv.b;
            j["chi"] = bv.chi();
            emit(j, bet_out, out);
            return 0;
        }
        if (vb->parsed()) {
            SimplicialComplex K = load_complex_file(vb_input);
            if (vb_k < 1 || vb_k > K.dim()) throw validation_error("vbuild: need 1 <= k <= dim");
            Cochain eps = Cochain::from_hex(vb_k - 1, K.f(vb_k - 1), vb_eps);
            VSubcomplex v = build_v(barycentric_subdivide(K, caps.max_simplices), eps, vb_k);
            Json j;
            j["artifact"] = artifact_stamp();
            j["k"] = vb_k;
            j["epsilon"] = cochain_to_json(eps, K.name());
            j["v"] = complex_to_json(v.complex);
            emit(j, vb_out, out);
            return 0;
        }
        if (mz->parsed()) {
            const Rat nu = parse_rational(mz_nu);
            const MuZRoute route = parse_route(mz_route);
            const Rat value = (route == MuZRoute::Auto)
                                  ? mu_z_cross_checked(nu, mz_k, mz_p, caps.max_enum_bits)
                                  : mu_z(nu, mz_k, mz_p, route, caps.max_enum_bits);
            Json j;
            j["nu"] = rat_to_string(nu);
            j["k"] = mz_k;
            j["p"] = mz_p;
            j["route"] = mz_route;
            j["mu_z"] = rat_to_string(value);
            emit(j, mz_out, out);
            return 0;
        }
        if (ex->parsed()) {
            SimplicialComplex K = load_complex_file(ex_input);
            const Rat nu = parse_rational(ex_nu);
            Json j;
            j["artifact"] = artifact_stamp();
            j["complex"] = K.name();
            j["k"] = ex_k;
            j["nu"] = rat_to_string(nu);
            j["what"] = ex_what;
            if (ex_what == "face") {
                Polynomial p = expected_face_polynomial(K, ex_k, nu);
                j["E_q"] = rats_to_strings(p.coefficients(K.dim() - ex_k + 1));
            } else if (ex_what == "chi") {
                j["E_chi"] = rat_to_string(expected_chi(K, ex_k, nu));
            } else if (ex_what == "cw") {
                if (ex_k != 1) throw validation_error("expect --what cw requires k = 1");
                Polynomial p = expected_cw_polynomial(K, nu);
                j["E_cw"] = rats_to_strings(p.coefficients(K.dim()));
            } else if (ex_what == "blocks") {
                j["E_blocks"] = rats_to_strings(expected_block_counts(K, ex_k, nu));
            } else {
                j["c_plus"] = rats_to_strings(c_plus(K.dim(), ex_k, nu));
                j["alternating_sum"] = rat_to_string(c_plus_alternating_sum(K.dim(), ex_k, nu));
            }
            emit(j, ex_out, out);
            return 0;
        }
        if (sa->parsed() || en->parsed()) {
            const bool mc = sa->parsed();
            ExperimentSpec spec;
            spec.complex = load_complex_file(mc ? sa_input : en_input);
            spec.k = mc ? sa_k : en_k;
            spec.nu = parse_rational(mc ? sa_nu : en_nu);
            spec.depth = mc ? sa_depth : en_depth;
            spec.mode = mc ? ExperimentMode::MonteCarlo : ExperimentMode::Exhaustive;
            spec.trials = mc ? sa_trials : 0;
            spec.seed = mc ? sa_seed : 0;
            spec.compute_betti = !(mc && sa_no_betti);
            spec.census = !(mc && sa_no_census);
            spec.caps = caps;
            ExperimentReport rep = run(spec);
            Json echo;
            echo["subcommand"] = mc ? "sample" : "enumerate";
            echo["input"] = mc ? sa_input : en_input;
            echo["k"] = spec.k;
            echo["nu"] = rat_to_string(spec.nu);
            echo["depth"] = spec.depth;
            if (mc) {
                echo["trials"] = spec.trials;
                echo["seed"] = spec.seed;
            }
            emit(report_to_json(rep, echo), mc ? sa_out : en_out, out);
            const std::string csv_path = mc ? sa_csv : en_csv;
            if (!csv_path.empty()) write_text_file(csv_path, report_to_csv(rep));
            err << "wall_seconds " << rep.wall_seconds << "\n";
            return 0;
        }
        if (cv->parsed()) {
            SimplicialComplex K = load_complex_file(cv_input);
            const Rat nu = parse_rational(cv_nu);
            ConvergenceTable table = convergence_table(K, cv_k, nu, cv_dmax, cv_trials, cv_seed, caps);
            Json echo;
            echo["subcommand"] = "converge";
            echo["input"] = cv_input;
            echo["k"] = cv_k;
            echo["nu"] = rat_to_string(nu);
            echo["dmax"] = cv_dmax;
            emit(convergence_to_json(table, echo), cv_out, out);
            if (!cv_csv.empty()) write_text_file(cv_csv, convergence_to_csv(table));
            return 0;
        }
        if (qc->parsed()) {
            Json j;
            j["n"] = qc_n;
            j["q"] = rats_to_strings(q_coefficients(qc_n));
            if (!qc_eval.empty()) {
                const Rat t = parse_rational(qc_eval);
                j["eval_at"] = rat_to_string(t);
                j["value"] = rat_to_string(q_infinity_eval(qc_n, t));
            }
            emit(j, qc_out, out);
            return 0;
        }
        if (ga->parsed()) {
            SurfaceConstruction c;
            if (ga_sphere->parsed())
                c = sphere_epsilon();
            else if (ga_holes->parsed())
                c = holed_sphere_epsilon(ga_r);
            else if (ga_surface->parsed())
                c = genus_surface_epsilon(ga_genus, ga_depth);
            else
                throw validation_error("gallery requires one of: sphere, holes, surface");

            Json j;
            j["artifact"] = artifact_stamp();
            j["target"] = c.target;
            j["depth"] = c.depth;
            if (c.target == "holed_sphere") j["holes"] = c.holes;
            if (c.target == "genus") j["genus"] = c.genus;
            j["epsilon"] = cochain_to_json(c.epsilon, c.host.name());
            j["expected_betti"] = c.expected_betti;

            GalleryVerification v = verify_construction(c, caps.max_simplices);
            j["v"] = complex_to_json(v.v);
            if (ga_verify) {
                Json vj;
                vj["pass"] = v.pass;
                vj["betti"] = v.betti_vector.b;
                vj["chi"] = v.chi;
                vj["components"] = v.components;
                vj["links_ok"] = v.links_ok;
                if (!v.pass) vj["failure"] = v.failure;
                j["verification"] = std::move(vj);
            }
            emit(j, ga_out, out);
            return (ga_verify && !v.pass) ? 1 : 0;
        }
        out << app.help();
        return 0;
    } catch (const cap_exceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const validation_error& e) {
        err << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace rsc::cli
