#include "uqgl21/acceptance.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <sys/wait.h>

#include "uqgl21/factorization.hpp"
#include "uqgl21/repbuilder.hpp"
#include "uqgl21/repfile.hpp"
#include "uqgl21/structure.hpp"
#include "uqgl21/verify.hpp"

namespace uqgl21 {

namespace {

// J1 in {1/2, 1, 3/2} x J2 in {-2, -1, -1/2, 0, 1/2, 1, 3/2} x J3 in {0, 1/2},
// stored as twice-values.
const std::array<long, 3> kJ1 = {1, 2, 3};
const std::array<long, 7> kJ2 = {-4, -2, -1, 0, 1, 2, 3};
const std::array<long, 2> kJ3 = {0, 1};

RealizationParams params(long t1, long t2, long t3, const CoeffFamily& fam) {
    RealizationParams p;
    p.j1 = HalfInt(t1);
    p.j2 = HalfInt(t2);
    p.j3 = HalfInt(t3);
    p.coeffs = fam;
    return p;
}

bool grid_relations(const CoeffFamily& fam, std::string* detail) {
    for (long t1 : kJ1)
        for (long t2 : kJ2)
            for (long t3 : kJ3) {
                Report r = verify_fock_relations(params(t1, t2, t3, fam), 6);
                if (!r.ok()) {
                    *detail = "relation failure at (" + HalfInt(t1).str() + "," +
                              HalfInt(t2).str() + "," + HalfInt(t3).str() + ")";
                    return false;
                }
            }
    return true;
}

bool grid_oracle_equivalence(const CoeffFamily& fam, std::string* detail) {
    for (long t1 : kJ1)
        for (long t2 : kJ2)
            for (long t3 : kJ3) {
                RealizationParams p = params(t1, t2, t3, fam);
                Representation built = build_rep(p);
                Representation closed = closed_form_rep(p);
                for (Gen g : kAllGens) {
                    if (auto d = QMatrix::first_difference(built.matrix(g), closed.matrix(g))) {
                        *detail = std::string("entry mismatch in ") + gen_name(g) + " at (" +
                                  std::to_string(d->first) + "," + std::to_string(d->second) +
                                  ") for (" + HalfInt(t1).str() + "," + HalfInt(t2).str() + "," +
                                  HalfInt(t3).str() + ")";
                        return false;
                    }
                }
            }
    return true;
}

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::string*)> run;
};

}  // namespace

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return !results.empty();
}

std::vector<CriterionResult> run_acceptance(std::ostream& out, const std::string& cli_path) {
    const CoeffFamily standard = CoeffFamily::standard();

    std::vector<Criterion> criteria;

    criteria.push_back({1, "defining, Serre and bracket relations on the Fock space (grid, n <= 6)",
                        [&](std::string* d) { return grid_relations(standard, d); }});

    criteria.push_back({2, "realization matrices equal closed-form matrices entrywise (grid)",
                        [&](std::string* d) { return grid_oracle_equivalence(standard, d); }});

    criteria.push_back({3, "dimension 8J1+4, tower sizes, diagonal eigenvalue tables (J1 <= 3)",
                        [](std::string* d) {
                            for (long t1 = 0; t1 <= 6; ++t1) {
                                RealizationParams p =
                                    params(t1, 2, 1, CoeffFamily::standard());
                                Representation rep = build_rep(p);
                                if (rep.dim() != 4 * t1 + 4) {
                                    *d = "dimension mismatch at 2j1=" + std::to_string(t1);
                                    return false;
                                }
                                auto sizes = tower_sizes(p.j1);
                                if (sizes != std::array<long, 4>{t1 + 1, t1, t1 + 2, t1 + 1}) {
                                    *d = "tower sizes mismatch at 2j1=" + std::to_string(t1);
                                    return false;
                                }
                                for (int i = 0; i < rep.dim(); ++i) {
                                    const BasisLabel& l = rep.basis[(std::size_t)i].first;
                                    long w = l.proj.twice();
                                    long h1 = w, h2 = 0, h3 = 0;
                                    switch (l.tower) {
                                        case 1: h2 = 2 + (t1 - w) / 2; h3 = 1; break;
                                        case 2: h2 = 2 + (t1 - w + 1) / 2; h3 = 2; break;
                                        case 3: h2 = 2 + (t1 - w + 1) / 2; h3 = 2; break;
                                        case 4: h2 = 2 + (t1 - w) / 2 + 1; h3 = 3; break;
                                    }
                                    if (!(rep.matrix(Gen::H1).at(i, i) == QScalar(h1)) ||
                                        !(rep.matrix(Gen::H2).at(i, i) == QScalar(h2)) ||
                                        !(rep.matrix(Gen::H3).at(i, i) == QScalar(h3))) {
                                        *d = "eigenvalue table mismatch at " + l.str();
                                        return false;
                                    }
                                }
                            }
                            return true;
                        }});

    criteria.push_back({4, "classification matches brute-force invariant structure; quotients",
                        [](std::string* d) {
                            for (long t1 : kJ1) {
                                std::vector<long> j2s(kJ2.begin(), kJ2.end());
                                j2s.push_back(-t1 - 1);  // the class-1 locus
                                for (long t2 : j2s) {
                                    RealizationParams p =
                                        params(t1, t2, 0, CoeffFamily::standard());
                                    Representation rep = build_rep(p);
                                    RepClass rc = classify(p.j1, p.j2);
                                    auto fail = [&](const std::string& msg) {
                                        *d = msg + " at (" + p.j1.str() + "," + p.j2.str() + ")";
                                        return false;
                                    };
                                    if (rc.kind == RepKind::Typical) {
                                        if (!is_irreducible(rep))
                                            return fail("typical point reducible");
                                        continue;
                                    }
                                    Subspace closure = invariant_closure(rep, tower_seeds(rep, 1));
                                    if (!subspace_equals_towers(rep, closure,
                                                                rc.predicted_towers))
                                        return fail("closure(V1) != predicted towers");
                                    Representation q = quotient_rep(rep, closure);
                                    if (!run_matrix_suite(q).ok())
                                        return fail("quotient fails the relation suite");
                                    if (!is_irreducible(q))
                                        return fail("quotient not irreducible");
                                }
                            }
                            return true;
                        }});

    criteria.push_back({5, "q-exponential factorization identity on every basis vector (J1 in {1/2,1})",
                        [](std::string* d) {
                            for (long t1 : {1L, 2L}) {
                                for (auto [t2, t3] : {std::pair<long, long>{2, 0},
                                                      std::pair<long, long>{0, 1}}) {
                                    RealizationParams p =
                                        params(t1, t2, t3, CoeffFamily::standard());
                                    Report r = factorization_check(p, build_rep(p));
                                    if (!r.ok()) {
                                        *d = "factorization mismatch at (" + p.j1.str() + "," +
                                             p.j2.str() + "," + p.j3.str() + ")";
                                        return false;
                                    }
                                }
                            }
                            return true;
                        }});

    criteria.push_back({6, "criteria 1 and 2 with the constant-1 and q^N coefficient families",
                        [&](std::string* d) {
                            for (const char* text : {"1", "qpow(N)"}) {
                                CoeffFamily fam = CoeffFamily::uniform(text);
                                if (!grid_relations(fam, d)) {
                                    *d += std::string(" [family ") + text + "]";
                                    return false;
                                }
                                if (!grid_oracle_equivalence(fam, d)) {
                                    *d += std::string(" [family ") + text + "]";
                                    return false;
                                }
                            }
                            return true;
                        }});

    criteria.push_back({7, "classical limit at z = 1 satisfies the gl(2|1) supercommutator table (grid)",
                        [](std::string* d) {
                            for (long t1 : kJ1)
                                for (long t2 : kJ2)
                                    for (long t3 : kJ3) {
                                        RealizationParams p =
                                            params(t1, t2, t3, CoeffFamily::standard());
                                        Report r = classical_limit_check(build_rep(p));
                                        if (!r.ok()) {
                                            *d = "classical relation failure at (" +
                                                 HalfInt(t1).str() + "," + HalfInt(t2).str() +
                                                 "," + HalfInt(t3).str() + ")";
                                            return false;
                                        }
                                    }
                            return true;
                        }});

    criteria.push_back({8, "deformed oscillator and fermion relations on monomials n <= 20",
                        [](std::string* d) {
                            Report r = check_heisenberg(20);
                            if (!r.ok()) *d = "Heisenberg relation failure";
                            return r.ok();
                        }});

    criteria.push_back({9, "deterministic export/import round-trip and documented exit codes",
                        [&](std::string* d) {
                            RealizationParams p = params(1, 2, 0, CoeffFamily::standard());
                            Representation rep = build_rep(p);
                            std::string a = export_rep_json(rep);
                            std::string b = export_rep_json(build_rep(p));
                            if (a != b) {
                                *d = "repeated builds are not byte-identical";
                                return false;
                            }
                            Representation back = import_rep_json(a);
                            for (Gen g : kAllGens) {
                                if (!(back.matrix(g) == rep.matrix(g))) {
                                    *d = "round-trip not exact";
                                    return false;
                                }
                            }
                            if (export_rep_json(back) != a) {
                                *d = "re-export differs";
                                return false;
                            }
                            if (cli_path.empty()) {
                                *d = "no CLI binary provided for exit-code checks";
                                return false;
                            }
                            namespace fs = std::filesystem;
                            fs::path dir =
                                fs::temp_directory_path() / "uqgl21-acceptance";
                            fs::create_directories(dir);
                            auto runcmd = [&](const std::string& args) {
                                std::string cmd = cli_path + " " + args + " >/dev/null 2>&1";
                                int rc = std::system(cmd.c_str());
                                return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
                            };
                            fs::path repfile = dir / "rep.json";
                            if (runcmd("build --j1 1/2 --j2 1 --j3 0 --out " +
                                       repfile.string()) != 0) {
                                *d = "build exit code != 0";
                                return false;
                            }
                            if (runcmd("verify --in " + repfile.string()) != 0) {
                                *d = "verify(good file) exit code != 0";
                                return false;
                            }
                            // Tamper with one entry: scale an E21 triple.
                            {
                                std::ifstream in(repfile);
                                std::stringstream ss;
                                ss << in.rdbuf();
                                std::string text = ss.str();
                                auto pos = text.find("\"E21\"");
                                pos = text.find("\"(z", pos);
                                text.insert(pos + 2, "7*");
                                std::ofstream outp(dir / "tampered.json");
                                outp << text;
                            }
                            if (runcmd("verify --in " + (dir / "tampered.json").string()) != 1) {
                                *d = "verify(tampered file) exit code != 1";
                                return false;
                            }
                            if (runcmd("build --j1 -1/2 --j2 0 --j3 0 --out " +
                                       (dir / "x.json").string()) != 2) {
                                *d = "build(negative j1) exit code != 2";
                                return false;
                            }
                            {
                                std::ofstream outp(dir / "trunc.json");
                                outp << a.substr(0, a.size() / 2);
                            }
                            if (runcmd("verify --in " + (dir / "trunc.json").string()) != 2) {
                                *d = "verify(truncated file) exit code != 2";
                                return false;
                            }
                            return true;
                        }});

    std::vector<CriterionResult> results;
    for (const auto& c : criteria) {
        CriterionResult res;
        res.number = c.number;
        res.title = c.title;
        auto t0 = std::chrono::steady_clock::now();
        try {
            res.passed = c.run(&res.detail);
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = std::string("exception: ") + e.what();
        }
        auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.1fs", dt);
        out << "CRITERION " << res.number << " [" << (res.passed ? "PASS" : "FAIL") << "] "
            << res.title << " (" << buf << ")";
        if (!res.passed && !res.detail.empty()) out << " -- " << res.detail;
        out << "\n";
        out.flush();
        results.push_back(std::move(res));
    }
    return results;
}

}  // namespace uqgl21
