#pragma once

#include <array>
#include <map>
#include <vector>

#include "uqgl21/matrix.hpp"
#include "uqgl21/realization.hpp"
#include "uqgl21/report.hpp"

namespace uqgl21 {

/// Basis vector label: tower 1..4 (V1..V4) and projection (M, P, R, S).
struct BasisLabel {
    int tower = 1;
    HalfInt proj;

    friend constexpr auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
    std::string str() const;
};

/// Tower sizes (2J1+1, 2J1, 2J1+2, 2J1+1); total 8J1+4.
std::array<long, 4> tower_sizes(HalfInt j1);

/// Highest weight of the even-subalgebra module carried by a tower
/// (J1, J1-1/2, J1+1/2, J1).
HalfInt tower_l1(HalfInt j1, int tower);

struct Representation {
    RealizationParams params;
    std::vector<std::pair<BasisLabel, FockVector>> basis;
    std::map<Gen, QMatrix> matrices;

    int dim() const { return static_cast<int>(basis.size()); }
    /// Index of a label; -1 when absent.
    int index_of(const BasisLabel& l) const;
    const QMatrix& matrix(Gen g) const { return matrices.at(g); }
};

/// The coherent-state images of the module basis, tower-major with
/// descending projection.  Coefficient-function arguments are concrete
/// integers; a vanishing q-number factor short-circuits the coefficient
/// function beside it.
std::vector<std::pair<BasisLabel, FockVector>> build_basis(const RealizationParams& p);

/// Matrices by applying the boson-fermion realization to the basis and
/// re-expanding exactly.  Throws ExpansionFailure when an image leaves the
/// basis span.
Representation build_rep(const RealizationParams& p);

/// Matrices filled directly from the closed-form matrix elements (tower
/// shift tables), with the coefficient family's fourth slot in the places
/// the fourth coefficient function occupies.
Representation closed_form_rep(const RealizationParams& p);

/// Within-tower structure: E21 powers of each tower-highest vector
/// reproduce the lower basis vectors with the predicted q-number scalars;
/// E12/E21 have no cross-tower entries; tower bottoms annihilate.
Report lowering_check(const Representation& rep);

}  // namespace uqgl21
