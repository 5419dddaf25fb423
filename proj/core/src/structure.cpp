#include "uqgl21/structure.hpp"

#include <deque>

#include "uqgl21/errors.hpp"

namespace uqgl21 {

std::string RepClass::str() const {
    switch (kind) {
        case RepKind::Typical: return "Typical";
        case RepKind::Nontypical1: return "Nontypical1, invariant = V1⊕V3";
        case RepKind::Nontypical2: return "Nontypical2, invariant = V1⊕V2";
        case RepKind::Excluded: return "Excluded";
    }
    return "?";
}

RepClass classify(HalfInt j1, HalfInt j2) {
    // Generic q: [x]_q = 0 iff x = 0, so the bracket conditions are integer
    // conditions on 2J1+2J2+1 and 2J2.
    const bool first_zero = (j1.twice() + j2.twice() + 1) == 0;
    const bool second_zero = j2.twice() == 0;
    RepClass rc;
    if (first_zero && second_zero) {
        rc.kind = RepKind::Excluded;
    } else if (first_zero) {
        rc.kind = RepKind::Nontypical1;
        rc.predicted_towers = {1, 3};
    } else if (second_zero) {
        rc.kind = RepKind::Nontypical2;
        rc.predicted_towers = {1, 2};
    } else {
        rc.kind = RepKind::Typical;
    }
    return rc;
}

void Subspace::reduce(std::vector<QScalar>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const int p = pivots_[k];
        QScalar c = v[static_cast<std::size_t>(p)];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * rows_[k][j];
    }
}

std::optional<std::vector<QScalar>> Subspace::insert(std::vector<QScalar> v) {
    if (static_cast<int>(v.size()) != ambient_) throw Error("Subspace: wrong vector size");
    reduce(v);
    int pivot = -1;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (!v[j].is_zero()) {
            pivot = static_cast<int>(j);
            break;
        }
    }
    if (pivot < 0) return std::nullopt;
    QScalar inv = v[static_cast<std::size_t>(pivot)].inverse();
    for (auto& x : v) x *= inv;
    // Back-substitute into existing rows so the form stays fully reduced.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        QScalar c = rows_[k][static_cast<std::size_t>(pivot)];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) rows_[k][j] -= c * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    std::size_t at = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + static_cast<long>(at), v);
    return v;
}

bool Subspace::contains(std::vector<QScalar> v) const {
    reduce(v);
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Subspace invariant_closure(const Representation& rep,
                           const std::vector<std::vector<QScalar>>& seeds) {
    Subspace sub(rep.dim());
    std::deque<std::vector<QScalar>> todo;
    for (const auto& s : seeds) {
        if (auto added = sub.insert(s)) todo.push_back(std::move(*added));
    }
    while (!todo.empty()) {
        std::vector<QScalar> v = std::move(todo.front());
        todo.pop_front();
        for (Gen g : kAllGens) {
            if (sub.is_full()) return sub;
            std::vector<QScalar> w = rep.matrix(g).apply(v);
            if (auto added = sub.insert(std::move(w))) todo.push_back(std::move(*added));
        }
    }
    return sub;
}

std::vector<QScalar> basis_seed(const Representation& rep, int i) {
    std::vector<QScalar> v(static_cast<std::size_t>(rep.dim()), QScalar::zero());
    v[static_cast<std::size_t>(i)] = QScalar::one();
    return v;
}

std::vector<std::vector<QScalar>> tower_seeds(const Representation& rep, int tower) {
    std::vector<std::vector<QScalar>> out;
    for (int i = 0; i < rep.dim(); ++i)
        if (rep.basis[static_cast<std::size_t>(i)].first.tower == tower)
            out.push_back(basis_seed(rep, i));
    return out;
}

bool subspace_equals_towers(const Representation& rep, const Subspace& sub,
                            const std::vector<int>& towers) {
    long expected = 0;
    for (int t : towers)
        expected += tower_sizes(rep.params.j1)[static_cast<std::size_t>(t - 1)];
    if (sub.dim() != expected) return false;
    for (int t : towers)
        for (const auto& s : tower_seeds(rep, t))
            if (!sub.contains(s)) return false;
    return true;
}

Representation quotient_rep(const Representation& rep, const Subspace& sub) {
    const int d = rep.dim();
    for (const auto& row : sub.rows()) {
        for (Gen g : kAllGens) {
            if (!sub.contains(rep.matrix(g).apply(row)))
                throw NotInvariant(std::string("subspace is not closed under ") + gen_name(g));
        }
    }
    std::vector<int> kept;
    {
        const auto& piv = sub.pivots();
        std::size_t pi = 0;
        for (int i = 0; i < d; ++i) {
            if (pi < piv.size() && piv[pi] == i)
                ++pi;
            else
                kept.push_back(i);
        }
    }
    const int dq = static_cast<int>(kept.size());

    Representation out;
    out.params = rep.params;
    for (int i : kept) out.basis.push_back(rep.basis[static_cast<std::size_t>(i)]);

    for (Gen g : kAllGens) {
        QMatrix m(dq, dq);
        for (int jj = 0; jj < dq; ++jj) {
            std::vector<QScalar> col =
                rep.matrix(g).apply(basis_seed(rep, kept[static_cast<std::size_t>(jj)]));
            // Project modulo the invariant subspace.
            for (std::size_t k = 0; k < sub.rows().size(); ++k) {
                QScalar c = col[static_cast<std::size_t>(sub.pivots()[k])];
                if (c.is_zero()) continue;
                for (std::size_t x = 0; x < col.size(); ++x) col[x] -= c * sub.rows()[k][x];
            }
            for (int ii = 0; ii < dq; ++ii)
                m.set(ii, jj, col[static_cast<std::size_t>(kept[static_cast<std::size_t>(ii)])]);
        }
        out.matrices.emplace(g, std::move(m));
    }
    return out;
}

bool is_irreducible(const Representation& rep) {
    for (int i = 0; i < rep.dim(); ++i) {
        Subspace c = invariant_closure(rep, {basis_seed(rep, i)});
        if (!c.is_full()) return false;
    }
    return true;
}

}  // namespace uqgl21
