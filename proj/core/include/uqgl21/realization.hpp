#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "uqgl21/coeff.hpp"
#include "uqgl21/fock.hpp"
#include "uqgl21/halfint.hpp"
#include "uqgl21/report.hpp"

namespace uqgl21 {

enum class Gen { H1, H2, H3, E11, E22, E33, E12, E21, E23, E32, E13, E31 };

inline constexpr std::array<Gen, 12> kAllGens = {
    Gen::H1,  Gen::H2,  Gen::H3,  Gen::E11, Gen::E22, Gen::E33,
    Gen::E12, Gen::E21, Gen::E23, Gen::E32, Gen::E13, Gen::E31};

const char* gen_name(Gen g);
std::optional<Gen> gen_from_name(const std::string& name);

struct RealizationParams {
    HalfInt j1, j2, j3;
    CoeffFamily coeffs = CoeffFamily::standard();
};

/// The q-boson-fermion realization of all twelve generators on the Fock
/// space, for a fixed highest weight and coefficient family.  Operator words
/// act rightmost-first; a coefficient function of N reads the boson
/// occupation at its own slot (after everything to its right has acted); a
/// term whose accumulated coefficient hits exact zero is dropped without
/// evaluating the remaining coefficient factors.
class Realization {
  public:
    explicit Realization(RealizationParams p);

    const RealizationParams& params() const { return p_; }

    FockVector apply(Gen g, const FockVector& v) const;
    /// Cached single-monomial action.
    const FockVector& apply_monomial(Gen g, const FockMonomial& m) const;

    /// Integer eigenvalue of H_i (i = 1, 2, 3) on a canonical monomial.
    long h_eigenvalue(int i, const FockMonomial& m) const;
    /// Eigenvalue of a diagonal generator (H's and E_ii).
    long diagonal_eigenvalue(Gen g, const FockMonomial& m) const;
    static bool is_diagonal(Gen g);

  private:
    struct Factor {
        bool is_op;
        LadderOp op;
        CoeffFn fn;
    };
    struct Term {
        std::vector<Factor> factors;
    };

    void build_words();
    std::optional<std::pair<QScalar, FockMonomial>> apply_term(const Term& t,
                                                               const FockMonomial& m) const;
    QScalar eval_cached(const CoeffFn& f, long n) const;

    RealizationParams p_;
    std::map<Gen, std::vector<Term>> words_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<const void*, long>, QScalar> coeff_cache_;
    mutable std::map<std::pair<Gen, FockMonomial>, FockVector> action_cache_;
};

/// One-shot application (convenience wrapper over Realization).
FockVector gamma(Gen g, const RealizationParams& p, const FockVector& v);

/// Checks the full defining set (Cartan relations, the deformed
/// [E12,E21] = [H1]_q and {E23,E32} = [H2]_q, the Serre relations, and the
/// non-Chevalley consistency brackets) as operator identities on every
/// canonical monomial with n <= nmax.
Report verify_fock_relations(const Realization& rz, long nmax);
Report verify_fock_relations(const RealizationParams& p, long nmax);

}  // namespace uqgl21
