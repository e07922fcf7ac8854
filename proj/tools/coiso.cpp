#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "coiso/hkr.hpp"
#include "coiso/parse.hpp"
#include "coiso/resolution.hpp"
#include "coiso/star.hpp"
#include "coiso/suite.hpp"

using nlohmann::ordered_json;
using namespace coiso;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::size_t n = 2;
    std::size_t nu = 1;
    bool json = false;
    std::uint64_t seed = 1;
    unsigned order = 6;
    std::string command_echo;
};

CoisoContext context(const Options& opt) { return CoisoContext(opt.n, opt.nu); }

void emit(const Options& opt, const std::string& text, ordered_json payload = {}) {
    if (opt.json) {
        ordered_json report;
        report["command"] = opt.command_echo;
        report["context"] = {{"n", opt.n}, {"nu", opt.nu}};
        report["seed"] = opt.seed;
        report["result"] = text;
        if (!payload.empty()) report["detail"] = payload;
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << text << "\n";
        if (!payload.empty()) std::cout << payload.dump(2) << "\n";
    }
}

MultiVector arg_mv(const Options& opt, const std::string& src) {
    return parse_expr(src, ExprKind::multivector, context(opt)).multivector();
}

Cochain arg_op(const Options& opt, const std::string& src) {
    return parse_expr(src, ExprKind::cochain, context(opt)).cochain();
}

Poly arg_poly(const Options& opt, const std::string& src) {
    return parse_expr(src, ExprKind::poly, context(opt)).poly();
}

ordered_json star_report_json(const StarProduct& s, const AssociativityReport& assoc,
                              const LeftIdealReport& li, const AxiomReport& ax) {
    ordered_json j;
    j["order"] = s.order();
    if (assoc.first_failing_order)
        j["associativity_defect_first_failure"] = *assoc.first_failing_order;
    else
        j["associativity_defect_first_failure"] = nullptr;
    j["left_ideal_structural"] = li.structural;
    if (li.first_incompatible_order)
        j["left_ideal_first_incompatible_order"] = *li.first_incompatible_order;
    j["left_ideal_extensional"] = li.extensional;
    j["right_ideal_extensional_informational"] = li.right_ideal_extensional;
    j["axioms"] = {{"i", ax.axiom_i}, {"ii", ax.axiom_ii}, {"iv", ax.axiom_iv}};
    return j;
}

int run_star_checks(const Options& opt, const StarProduct& s) {
    AssociativityReport assoc = check_associativity(s, s.order());
    LeftIdealReport li = check_left_ideal(s, s.order(), opt.seed);
    AxiomReport ax = check_axioms(s);
    ordered_json j = star_report_json(s, assoc, li, ax);
    ordered_json cochains = ordered_json::array();
    for (unsigned r = 1; r <= s.order(); ++r) cochains.push_back(print_cochain(s.cochain(r)));
    j["cochains"] = cochains;
    bool pass = assoc.ok() && li.ok() && ax.all();
    emit(opt, pass ? "all star-product checks passed" : "star-product checks FAILED", j);
    return pass ? kExitOk : kExitCheckFailed;
}

ordered_json suite_json(const SuiteReport& rep) {
    ordered_json j;
    j["seed"] = rep.seed;
    ordered_json arr = ordered_json::array();
    for (const FamilyOutcome& o : rep.outcomes) {
        ordered_json fo;
        fo["invariant"] = o.name;
        fo["instances"] = o.instances;
        fo["failures"] = o.failures;
        fo["first_counterexample"] = o.first_counterexample;
        arr.push_back(fo);
    }
    j["families"] = arr;
    j["all_passed"] = rep.all_passed();
    return j;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    if (const char* env_seed = std::getenv("COISO_SEED")) {
        try {
            opt.seed = std::stoull(env_seed);
        } catch (const std::exception&) {
            std::cerr << "invalid COISO_SEED\n";
            return kExitUsage;
        }
    }
    {
        std::ostringstream echo;
        for (int i = 0; i < argc; ++i) echo << (i ? " " : "") << argv[i];
        opt.command_echo = echo.str();
    }

    CLI::App app{"exact symbolic calculus for star products on coisotropic subspaces"};
    app.require_subcommand(1);
    app.add_option("--n", opt.n, "total dimension")->capture_default_str();
    app.add_option("--nu", opt.nu, "codimension of C")->capture_default_str();
    app.add_flag("--json", opt.json, "emit JSON reports");
    app.add_option("--seed", opt.seed, "random seed (env COISO_SEED as fallback)");
    app.add_option("--order", opt.order, "hbar truncation order")->capture_default_str();

    // ---- expression commands -------------------------------------------
    std::string arg_a, arg_b;
    std::vector<std::string> arg_rest;

    auto* schouten = app.add_subcommand("schouten", "Schouten bracket of two multivectors");
    schouten->add_option("x", arg_a)->required();
    schouten->add_option("y", arg_b)->required();

    auto* wedge = app.add_subcommand("wedge", "exterior product of two multivectors");
    wedge->add_option("x", arg_a)->required();
    wedge->add_option("y", arg_b)->required();

    auto* gbracket = app.add_subcommand("gbracket", "Gerstenhaber bracket of two cochains");
    gbracket->add_option("phi", arg_a)->required();
    gbracket->add_option("psi", arg_b)->required();

    auto* cup = app.add_subcommand("cup", "cup product of two cochains");
    cup->add_option("phi", arg_a)->required();
    cup->add_option("psi", arg_b)->required();

    auto* brace_cmd = app.add_subcommand("brace", "brace {e | f1,...,fp}");
    brace_cmd->add_option("e", arg_a)->required();
    brace_cmd->add_option("fs", arg_rest, "argument cochains")->required()->expected(-1);

    auto* hochb = app.add_subcommand("hoch-b", "Hochschild coboundary b = -[., mu]_G");
    hochb->add_option("phi", arg_a)->required();

    auto* apply_cmd = app.add_subcommand("apply", "evaluate a cochain on polynomials");
    apply_cmd->add_option("phi", arg_a)->required();
    apply_cmd->add_option("fs", arg_rest, "arguments")->expected(-1);

    auto* checkc = app.add_subcommand("check-compatible", "compatibility with C");
    std::string mv_src, op_src;
    checkc->add_option("--mv", mv_src, "multivector expression");
    checkc->add_option("--op", op_src, "cochain expression");

    auto* hkr_cmd = app.add_subcommand("hkr", "HKR map multivector -> cochain");
    bool modified = false;
    hkr_cmd->add_flag("--modified", modified, "use the coisotropic map");
    hkr_cmd->add_option("x", arg_a)->required();

    auto* defect = app.add_subcommand("hkr-defect", "bracket defect certificate");
    bool defect_modified = false;
    defect->add_flag("--modified", defect_modified);
    defect->add_option("x", arg_a)->required();
    defect->add_option("y", arg_b)->required();

    auto* brst = app.add_subcommand("brst", "BRST differential of a compatible Poisson bivector");
    brst->add_option("p", arg_a)->required();
    brst->add_option("a", arg_b, "quotient element (multivector, read mod Psi)")->required();

    // ---- resolution commands -------------------------------------------
    int chain_k = -1;
    auto* bard = app.add_subcommand("bar-d", "bar boundary of a chain");
    bard->add_option("chain", arg_a)->required();
    bard->add_option("--k", chain_k, "chain degree (inferred when omitted)");

    auto* koszuld = app.add_subcommand("koszul-d", "Koszul boundary of a chain");
    koszuld->add_option("chain", arg_a)->required();

    auto* mapf = app.add_subcommand("map-f", "comparison map F: Koszul -> bar");
    mapf->add_option("chain", arg_a)->required();

    auto* mapg = app.add_subcommand("map-g", "comparison map G: bar -> Koszul");
    mapg->add_option("chain", arg_a)->required();
    mapg->add_option("--k", chain_k, "chain degree (inferred when omitted)");

    auto* theta_cmd = app.add_subcommand("theta", "projection Theta = F G");
    theta_cmd->add_option("chain", arg_a)->required();
    theta_cmd->add_option("--k", chain_k, "chain degree (inferred when omitted)");

    auto* homotopy = app.add_subcommand("homotopy", "contracting homotopy h");
    bool h_bar = false, h_koszul = false;
    homotopy->add_flag("--bar", h_bar);
    homotopy->add_flag("--koszul", h_koszul);
    homotopy->add_option("chain", arg_a)->required();
    homotopy->add_option("--k", chain_k, "chain degree (inferred when omitted)");

    // ---- star commands ---------------------------------------------------
    auto* star = app.add_subcommand("star", "star-product construction and verification");
    star->require_subcommand(1);
    auto* star_build = star->add_subcommand("build", "standard-ordered left-ideal star product");
    std::string poisson_src;
    star_build->add_option("--poisson", poisson_src, "constant compatible Poisson bivector")
        ->required();
    auto* star_verify = star->add_subcommand("verify", "verify user-supplied cochains");
    std::string cochain_file;
    star_verify->add_option("--cochains", cochain_file, "file with one cochain per hbar-order")
        ->required();
    star_verify->add_option("--poisson", poisson_src, "Poisson bivector for axiom (ii)");

    // ---- suite -----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run the invariant verification suite");
    bool suite_flag = false;
    unsigned instances = 50;
    verify->add_flag("--suite", suite_flag, "run every invariant family");
    verify->add_option("--instances", instances, "instances per family")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0) {
            std::cerr << e.what() << "\n";
            return kExitUsage;
        }
        return app.exit(e); // --help
    }

    try {
        if (schouten->parsed()) {
            emit(opt, print_multivector(schouten_bracket(arg_mv(opt, arg_a), arg_mv(opt, arg_b))));
            return kExitOk;
        }
        if (wedge->parsed()) {
            emit(opt, print_multivector(mv_wedge(arg_mv(opt, arg_a), arg_mv(opt, arg_b))));
            return kExitOk;
        }
        if (gbracket->parsed()) {
            emit(opt, print_cochain(gerstenhaber_bracket(arg_op(opt, arg_a), arg_op(opt, arg_b))));
            return kExitOk;
        }
        if (cup->parsed()) {
            emit(opt, print_cochain(cup_product(arg_op(opt, arg_a), arg_op(opt, arg_b))));
            return kExitOk;
        }
        if (brace_cmd->parsed()) {
            std::vector<Cochain> fs;
            for (const std::string& s : arg_rest) fs.push_back(arg_op(opt, s));
            emit(opt, print_cochain(brace(arg_op(opt, arg_a), fs)));
            return kExitOk;
        }
        if (hochb->parsed()) {
            emit(opt, print_cochain(hochschild_b(arg_op(opt, arg_a))));
            return kExitOk;
        }
        if (apply_cmd->parsed()) {
            std::vector<Poly> fs;
            for (const std::string& s : arg_rest) fs.push_back(arg_poly(opt, s));
            emit(opt, print_poly(op_apply(arg_op(opt, arg_a), fs)));
            return kExitOk;
        }
        if (checkc->parsed()) {
            if (mv_src.empty() == op_src.empty()) {
                std::cerr << "check-compatible needs exactly one of --mv or --op\n";
                return kExitUsage;
            }
            bool compatible = mv_src.empty() ? op_compatible(arg_op(opt, op_src))
                                             : mv_compatible(arg_mv(opt, mv_src));
            emit(opt, compatible ? "true" : "false");
            return compatible ? kExitOk : kExitCheckFailed;
        }
        if (hkr_cmd->parsed()) {
            MultiVector x = arg_mv(opt, arg_a);
            Cochain out = modified ? hkr_psi_modified(x, true) : hkr_psi(x);
            emit(opt, print_cochain(out));
            return kExitOk;
        }
        if (defect->parsed()) {
            BracketDefect d = bracket_defect(arg_mv(opt, arg_a), arg_mv(opt, arg_b),
                                             defect_modified ? HkrKind::modified
                                                             : HkrKind::classical);
            ordered_json j;
            j["defect"] = print_cochain(d.defect);
            j["is_cocycle"] = d.is_cocycle;
            j["pi_vanishes"] = d.pi_vanishes;
            bool certified = d.is_cocycle && d.pi_vanishes;
            j["exact_by_certificate"] = certified;
            emit(opt, certified ? "defect certified exact" : "defect certificate FAILED", j);
            return certified ? kExitOk : kExitCheckFailed;
        }
        if (brst->parsed()) {
            MultiVector p = arg_mv(opt, arg_a);
            QuotientMultiVector a = mv_project_psi(arg_mv(opt, arg_b));
            emit(opt, print_quotient(brst_differential(p, a)));
            return kExitOk;
        }
        if (bard->parsed()) {
            BarChain c = parse_bar_chain(arg_a, opt.n, chain_k);
            if (c.k == 0) {
                emit(opt, print_poly(augmentation(c)) + "  (augmentation: degree-0 chain)");
                return kExitOk;
            }
            emit(opt, print_bar_chain(bar_boundary(c)));
            return kExitOk;
        }
        if (koszuld->parsed()) {
            KoszulChain c = parse_koszul_chain(arg_a, opt.n);
            if (c.k == 0) {
                emit(opt, print_poly(augmentation(c)) + "  (augmentation: degree-0 chain)");
                return kExitOk;
            }
            emit(opt, print_koszul_chain(koszul_boundary(c)));
            return kExitOk;
        }
        if (mapf->parsed()) {
            emit(opt, print_bar_chain(map_F(parse_koszul_chain(arg_a, opt.n))));
            return kExitOk;
        }
        if (mapg->parsed()) {
            emit(opt, print_koszul_chain(map_G(parse_bar_chain(arg_a, opt.n, chain_k))));
            return kExitOk;
        }
        if (theta_cmd->parsed()) {
            emit(opt, print_bar_chain(theta(parse_bar_chain(arg_a, opt.n, chain_k))));
            return kExitOk;
        }
        if (homotopy->parsed()) {
            if (h_bar == h_koszul) {
                std::cerr << "homotopy needs exactly one of --bar or --koszul\n";
                return kExitUsage;
            }
            if (h_bar)
                emit(opt, print_bar_chain(bar_homotopy(parse_bar_chain(arg_a, opt.n, chain_k))));
            else
                emit(opt, print_koszul_chain(koszul_homotopy(parse_koszul_chain(arg_a, opt.n))));
            return kExitOk;
        }
        if (star_build->parsed()) {
            MultiVector p = arg_mv(opt, poisson_src);
            StarProduct s = build_standard_star(p, opt.order);
            return run_star_checks(opt, s);
        }
        if (star_verify->parsed()) {
            std::ifstream in(cochain_file);
            if (!in) {
                std::cerr << "cannot open cochain file: " << cochain_file << "\n";
                return kExitUsage;
            }
            std::vector<Cochain> cs;
            std::string line;
            while (std::getline(in, line)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                cs.push_back(arg_op(opt, line));
            }
            MultiVector p = poisson_src.empty() ? MultiVector::zero(context(opt))
                                                : arg_mv(opt, poisson_src);
            StarProduct s(context(opt), static_cast<unsigned>(cs.size()), p, cs);
            return run_star_checks(opt, s);
        }
        if (verify->parsed()) {
            if (!suite_flag) {
                std::cerr << "verify requires --suite\n";
                return kExitUsage;
            }
            SuiteBounds bounds;
            bounds.instances = instances;
            SuiteReport rep = run_suite(opt.seed, bounds);
            ordered_json j = suite_json(rep);
            if (opt.json) {
                emit(opt, rep.all_passed() ? "suite passed" : "suite FAILED", j);
            } else {
                for (const FamilyOutcome& o : rep.outcomes) {
                    std::cout << (o.passed() ? "PASS " : "FAIL ") << o.name << " ("
                              << o.instances << " instances";
                    if (!o.passed())
                        std::cout << ", " << o.failures
                                  << " failures, first counterexample: "
                                  << o.first_counterexample;
                    std::cout << ")\n";
                }
                std::cout << "seed " << opt.seed << ": "
                          << (rep.all_passed() ? "suite passed" : "suite FAILED") << "\n";
            }
            return rep.all_passed() ? kExitOk : kExitCheckFailed;
        }
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
