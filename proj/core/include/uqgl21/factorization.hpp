#pragma once

#include "uqgl21/repbuilder.hpp"

namespace uqgl21 {

/// Coherent-state image <J| e_q^(a+ E12 + a23+ E23 + a13+ E13) |psi>|0>,
/// with the generator action taken from rep's matrices and |psi> given in
/// rep coordinates.  <J| projects onto the highest-weight coordinate (the
/// top of V1).  Fock operators pick up a Koszul sign when crossing an
/// odd-parity module vector (towers V2, V3 are odd).
FockVector cs_map(const Representation& rep, const std::vector<QScalar>& psi);

/// Checks the q-exponential factorization identity on every basis vector:
/// the full series equals {F4 a13+E13 a23+E23 + F3 a13+E13
/// + e^(F2 a+ a23+ E13) e^(F1 a23+ E23)} e_q^(a+ E12) applied inside the
/// highest-weight pairing.  rhs_family lets tests perturb the factored side.
Report factorization_check(const RealizationParams& p, const Representation& rep);
Report factorization_check(const RealizationParams& p, const Representation& rep,
                           const CoeffFamily& rhs_family);

}  // namespace uqgl21
