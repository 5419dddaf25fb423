// Command-line front end: build/export representations, run the
// verification suites, classify and quotient, check the q-exponential
// factorization, and evaluate at numeric q.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "uqgl21/acceptance.hpp"
#include "uqgl21/errors.hpp"
#include "uqgl21/factorization.hpp"
#include "uqgl21/repbuilder.hpp"
#include "uqgl21/repfile.hpp"
#include "uqgl21/structure.hpp"
#include "uqgl21/verify.hpp"

namespace {

using namespace uqgl21;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

struct ParamArgs {
    std::string j1, j2 = "0", j3 = "0";
    std::string coeffs_file;
};

void add_param_flags(CLI::App* cmd, ParamArgs* args, bool required = true) {
    auto* o = cmd->add_option("--j1", args->j1, "highest weight J1 (half-integer, e.g. 3/2)");
    if (required) o->required();
    cmd->add_option("--j2", args->j2, "highest weight J2 (half-integer)");
    cmd->add_option("--j3", args->j3, "highest weight J3 (half-integer)");
    cmd->add_option("--coeffs", args->coeffs_file,
                    "coefficient family file (lines 'Fi = <expr>'; default: standard D family)");
}

RealizationParams parse_params(const ParamArgs& args) {
    RealizationParams p;
    p.j1 = HalfInt::parse(args.j1);
    p.j2 = HalfInt::parse(args.j2);
    p.j3 = HalfInt::parse(args.j3);
    if (p.j1.twice() < 0) throw ParseError("--j1 must be a nonnegative half-integer");
    if (!args.coeffs_file.empty()) {
        std::ifstream in(args.coeffs_file);
        if (!in) throw ParseError("cannot open coefficient file " + args.coeffs_file);
        std::stringstream ss;
        ss << in.rdbuf();
        p.coeffs = CoeffFamily::parse_file_text(ss.str());
    }
    return p;
}

mpq_class parse_rational(const std::string& s) {
    try {
        mpq_class v(s);
        v.canonicalize();
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad rational '" + s + "'");
    }
}

int report_exit(const Report& r) { return r.ok() ? kExitOk : kExitCheckFailed; }

int cmd_build(const ParamArgs& args, const std::string& out, const std::string& format) {
    Representation rep = build_rep(parse_params(args));
    if (format == "csv") {
        for (const auto& f : export_rep_csv(rep, out)) std::cout << "wrote " << f << "\n";
    } else {
        export_rep(rep, out);
        std::cout << "wrote " << out << " (dimension " << rep.dim() << ")\n";
    }
    return kExitOk;
}

int cmd_verify(const ParamArgs& args, const std::string& in, long nmax, bool json) {
    Representation rep;
    RealizationParams p;
    if (!in.empty()) {
        rep = import_rep(in);
        p = rep.params;
    } else {
        p = parse_params(args);
        rep = build_rep(p);
    }
    Report report = run_matrix_suite(rep);
    report.merge(verify_fock_relations(p, nmax));
    if (json) {
        std::cout << "[";
        bool first = true;
        for (const auto& c : report.checks) {
            std::cout << (first ? "" : ",") << "\n  {\"relation\": \"" << c.relation
                      << "\", \"passed\": " << (c.passed ? "true" : "false") << "}";
            first = false;
        }
        std::cout << "\n]\n";
    } else {
        std::cout << report.to_text();
    }
    return report_exit(report);
}

int cmd_classify(const ParamArgs& args, const std::string& out) {
    RealizationParams p = parse_params(args);
    RepClass rc = classify(p.j1, p.j2);
    if (rc.kind == RepKind::Typical || rc.kind == RepKind::Excluded) {
        std::cout << rc.str() << "\n";
        if (!out.empty()) {
            std::cerr << "no quotient to write for a " << rc.str() << " point\n";
            return kExitBadInput;
        }
        return kExitOk;
    }
    Representation rep = build_rep(p);
    Subspace sub = invariant_closure(rep, tower_seeds(rep, 1));
    if (!subspace_equals_towers(rep, sub, rc.predicted_towers)) {
        std::cout << rc.str() << ", but closure(V1) disagrees with the prediction\n";
        return kExitCheckFailed;
    }
    Representation quot = quotient_rep(rep, sub);
    std::cout << rc.str() << ", quotient dim " << quot.dim() << "\n";
    if (!out.empty()) {
        export_rep(quot, out);
        std::cout << "wrote " << out << "\n";
    }
    return kExitOk;
}

int cmd_quotient(const ParamArgs& args, const std::string& out) {
    RealizationParams p = parse_params(args);
    RepClass rc = classify(p.j1, p.j2);
    if (rc.kind == RepKind::Typical || rc.kind == RepKind::Excluded) {
        std::cerr << "representation at (" << p.j1.str() << "," << p.j2.str() << ") is "
                  << rc.str() << "; no invariant subspace to quotient by\n";
        return kExitBadInput;
    }
    Representation rep = build_rep(p);
    Subspace sub = invariant_closure(rep, tower_seeds(rep, 1));
    Representation quot = quotient_rep(rep, sub);
    export_rep(quot, out);
    std::cout << rc.str() << ", quotient dim " << quot.dim() << "; wrote " << out << "\n";
    return kExitOk;
}

int cmd_factorize(const ParamArgs& args) {
    RealizationParams p = parse_params(args);
    if (!p.coeffs.is_standard)
        throw ParseError("factorize requires the standard coefficient family");
    Report report = factorization_check(p, build_rep(p));
    std::cout << report.to_text();
    return report_exit(report);
}

int cmd_limit(const ParamArgs& args, const std::string& qstr, const std::string& zstr) {
    RealizationParams p = parse_params(args);
    mpq_class z0;
    if (!zstr.empty()) {
        z0 = parse_rational(zstr);
        if (z0 == 0) throw ParseError("--z must be nonzero");
    } else {
        mpq_class q0 = parse_rational(qstr);
        if (!rational_sqrt(q0, &z0))
            throw ParseError("--q must be a positive square of a rational (e.g. 1, 4, 9/4)");
    }
    Representation rep = build_rep(p);
    auto mats = evaluate_at_z(rep, z0);
    Report report = check_relations_at(mats, z0);
    if (z0 == 1) report.merge(classical_limit_check(rep));
    std::cout << report.to_text();
    return report_exit(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact representations of the quantum superalgebra Uq[gl(2|1)] in a q-boson-fermion "
        "basis"};
    app.require_subcommand(1);

    ParamArgs args;
    std::string out, format = "json", in, qstr = "1", zstr;
    long nmax = 6;
    bool json = false;

    auto* build = app.add_subcommand("build", "build a representation and export it");
    add_param_flags(build, &args);
    build->add_option("--out", out, "output path")->required();
    build->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify", "run the relation suites");
    add_param_flags(verify, &args, false);
    verify->add_option("--in", in, "verify a representation file instead of building");
    verify->add_option("--nmax", nmax, "Fock cutoff for the realization-level suite");
    verify->add_flag("--json", json, "machine-readable report");

    auto* classify_cmd = app.add_subcommand("classify", "typical/nontypical classification");
    add_param_flags(classify_cmd, &args);
    classify_cmd->add_option("--out", out, "write the nontypical quotient here");

    auto* quotient = app.add_subcommand("quotient", "build the nontypical quotient representation");
    add_param_flags(quotient, &args);
    quotient->add_option("--out", out, "output path")->required();

    auto* factorize =
        app.add_subcommand("factorize", "check the q-exponential factorization identity");
    add_param_flags(factorize, &args);

    auto* limit = app.add_subcommand("limit", "evaluate at numeric q and re-verify the relations");
    add_param_flags(limit, &args);
    limit->add_option("--q", qstr, "rational value of q (must be a square; default 1)");
    limit->add_option("--z", zstr, "evaluate directly at z = q^(1/2) instead");

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (build->parsed()) return cmd_build(args, out, format);
        if (verify->parsed()) return cmd_verify(args, in, nmax, json);
        if (classify_cmd->parsed()) return cmd_classify(args, out);
        if (quotient->parsed()) return cmd_quotient(args, out);
        if (factorize->parsed()) return cmd_factorize(args);
        if (limit->parsed()) return cmd_limit(args, qstr, zstr);
        if (selftest->parsed()) {
            auto results = run_acceptance(std::cout, argv[0]);
            return all_passed(results) ? kExitOk : kExitCheckFailed;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const SchemaVersionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const SingularCoefficient& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
