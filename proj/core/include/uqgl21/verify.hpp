#pragma once

#include <map>

#include "uqgl21/repbuilder.hpp"
#include "uqgl21/report.hpp"

namespace uqgl21 {

/// Cartan commutators and the deformed pair [E12,E21] = [H1]_q,
/// {E23,E32} = [H2]_q on rep's matrices, with H1 = E11 - E22 and
/// H2 = E22 + E33.  [H]_q requires an integer-diagonal H
/// (NonIntegerCartan otherwise).
Report check_defining_relations(const Representation& rep);

/// Serre relations E23^2 = E32^2 = 0, [E12,E13]_q = [E21,E31]_q = 0, and the
/// non-Chevalley consistency E13 = [E12,E23]_{q^-1}, E31 = -[E21,E32]_{q^-1}.
Report check_serre(const Representation& rep);

/// Both of the above.
Report run_matrix_suite(const Representation& rep);

/// Exact rational matrix (a representation evaluated at numeric z).
struct RationalMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<mpq_class>> a;

    RationalMatrix() = default;
    RationalMatrix(int r, int c)
        : rows(r), cols(c),
          a(static_cast<std::size_t>(r),
            std::vector<mpq_class>(static_cast<std::size_t>(c), mpq_class(0))) {}
    mpq_class& at(int r, int c) { return a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    const mpq_class& at(int r, int c) const {
        return a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
    friend RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y);
    friend RationalMatrix operator-(const RationalMatrix& x, const RationalMatrix& y);
    friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

/// All twelve matrices evaluated at z = z0 (throws SingularEvaluation when
/// any reduced entry has a pole there).
std::map<Gen, RationalMatrix> evaluate_at_z(const Representation& rep, const mpq_class& z0);

/// Defining + Serre relations on numerically evaluated matrices, with
/// q-brackets computed at q0 = z0^2.
Report check_relations_at(const std::map<Gen, RationalMatrix>& mats, const mpq_class& z0);

/// Evaluates at z = 1 and checks the full gl(2|1) supercommutator table
/// [e_ij, e_kl} = d_jk e_il - (-1)^((pi+pj)(pk+pl)) d_il e_kj with parities
/// p1 = p2 = 0, p3 = 1.
Report classical_limit_check(const Representation& rep);

}  // namespace uqgl21
