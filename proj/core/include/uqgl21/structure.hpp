#pragma once

#include <optional>
#include <vector>

#include "uqgl21/repbuilder.hpp"

namespace uqgl21 {

enum class RepKind { Typical, Nontypical1, Nontypical2, Excluded };

/// Classification outcome under generic-q semantics ([x]_q = 0 iff x = 0).
struct RepClass {
    RepKind kind = RepKind::Typical;
    /// Predicted invariant towers: empty, {1,3} or {1,2}.
    std::vector<int> predicted_towers;

    /// e.g. "Nontypical2, invariant = V1+V2".
    std::string str() const;
};

/// Typical iff 2J1+2J2+1 != 0 and 2J2 != 0; class 1 when the first vanishes,
/// class 2 when the second does, Excluded when both do.
RepClass classify(HalfInt j1, HalfInt j2);

/// Exact subspace in reduced (pivot-normalized) row form.
class Subspace {
  public:
    explicit Subspace(int ambient) : ambient_(ambient) {}

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<QScalar>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Reduces v against the rows; returns the reduced remainder when it is
    /// nonzero (after inserting it), nullopt when v was already contained.
    std::optional<std::vector<QScalar>> insert(std::vector<QScalar> v);
    bool contains(std::vector<QScalar> v) const;
    bool is_full() const { return dim() == ambient_; }

  private:
    void reduce(std::vector<QScalar>& v) const;
    int ambient_;
    std::vector<std::vector<QScalar>> rows_;   // sorted by pivot
    std::vector<int> pivots_;
};

/// Smallest subspace containing the seeds and closed under all generator
/// matrices (iterated exact image-and-reduce).
Subspace invariant_closure(const Representation& rep,
                           const std::vector<std::vector<QScalar>>& seeds);

/// Coordinate vector of the i-th basis vector.
std::vector<QScalar> basis_seed(const Representation& rep, int i);
/// Seeds spanning a whole tower.
std::vector<std::vector<QScalar>> tower_seeds(const Representation& rep, int tower);
/// True when sub equals the span of exactly the given towers.
bool subspace_equals_towers(const Representation& rep, const Subspace& sub,
                            const std::vector<int>& towers);

/// Induced action on coset representatives (the basis vectors at non-pivot
/// coordinates).  Throws NotInvariant when sub is not generator-closed.
Representation quotient_rep(const Representation& rep, const Subspace& sub);

/// True iff the closure of every single basis vector is the full space.
bool is_irreducible(const Representation& rep);

}  // namespace uqgl21
