#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "arank/errors.hpp"
#include "arank/monomial_ideal.hpp"
#include "arank/varset.hpp"

namespace arank {

/// A simplicial complex given by its facets. The vertex set is the union of
/// the facets; the ambient size only fixes the polynomial ring the complex
/// lives in, so a complex may leave some variables unused.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Keeps the inclusion-maximal members of `faces`. An empty list, or a
    /// list of empty sets, gives the complex {∅}.
    SimplicialComplex(int ambient_n, const std::vector<VarSet>& faces) : n_(ambient_n) {
        VarSet::check_ambient(ambient_n);
        std::vector<VarSet> sorted = faces;
        for (const auto& f : sorted)
            if (f.ambient() != ambient_n)
                throw PreconditionError("SimplicialComplex: facet ambient mismatch");
        // Largest first so every kept facet is maximal when it is seen.
        std::sort(sorted.begin(), sorted.end(),
                  [](const VarSet& a, const VarSet& b) { return canonical_less(b, a); });
        for (const auto& f : sorted) {
            bool covered = std::any_of(facets_.begin(), facets_.end(),
                                       [&](const VarSet& g) { return f.is_subset_of(g); });
            if (!covered) facets_.push_back(f);
        }
        std::sort(facets_.begin(), facets_.end(), VarSetCanonicalLess{});
        if (facets_.empty()) facets_.push_back(VarSet(ambient_n));
        vertices_ = VarSet(ambient_n);
        for (const auto& f : facets_) vertices_ = vertices_ | f;
    }

    static SimplicialComplex simplex(const VarSet& vertices) {
        return SimplicialComplex(vertices.ambient(), {vertices});
    }

    int ambient() const noexcept { return n_; }
    const std::vector<VarSet>& facets() const noexcept { return facets_; }
    const VarSet& vertex_set() const noexcept { return vertices_; }
    bool is_simplex() const noexcept { return facets_.size() == 1; }

    /// max |F| - 1; the complex {∅} has dimension -1.
    int dimension() const noexcept {
        int d = -1;
        for (const auto& f : facets_) d = std::max(d, f.size() - 1);
        return d;
    }

    bool has_face(const VarSet& f) const noexcept {
        return std::any_of(facets_.begin(), facets_.end(),
                           [&](const VarSet& g) { return f.is_subset_of(g); });
    }

    /// Smallest facet (canonical order) containing `f`.
    std::optional<VarSet> facet_containing(const VarSet& f) const {
        for (const auto& g : facets_)
            if (f.is_subset_of(g)) return g;
        return std::nullopt;
    }

    /// Facets containing vertex `v`.
    int facet_count_with(int v) const noexcept {
        return static_cast<int>(std::count_if(facets_.begin(), facets_.end(),
                                              [&](const VarSet& g) { return g.contains(v); }));
    }

    SimplicialComplex widened(int ambient_n) const {
        std::vector<VarSet> fs;
        for (const auto& f : facets_) fs.push_back(f.widened(ambient_n));
        return SimplicialComplex(ambient_n, fs);
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) noexcept {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

    std::string to_string() const {
        std::string s;
        for (const auto& f : facets_) s += "{" + f.to_string(",") + "}";
        return s;
    }

private:
    std::vector<VarSet> facets_;
    VarSet vertices_;
    int n_ = 0;
};

/// Δ ∪ cone_{apex} F. The apex must be a new vertex and F a face of Δ.
inline SimplicialComplex add_cone(const SimplicialComplex& complex, int apex, const VarSet& face) {
    if (complex.vertex_set().contains(apex))
        throw PreconditionError("add_cone: apex x" + std::to_string(apex) + " is not a new vertex");
    if (!complex.has_face(face)) throw PreconditionError("add_cone: F is not a face");
    VarSet top = face;
    top.insert(apex);
    std::vector<VarSet> fs = complex.facets();
    fs.push_back(top);
    return SimplicialComplex(complex.ambient(), fs);
}

/// Minimal nonfaces of Δ inside its own vertex set X, i.e. the minimal
/// transversals of {X \ F : F facet}. A simplex yields the zero ideal.
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
    const VarSet& X = complex.vertex_set();
    std::vector<VarSet> complements;
    for (const auto& f : complex.facets()) {
        VarSet c = f.complement_in(X);
        if (c.empty()) return minimalize({}, complex.ambient());
        complements.push_back(c);
    }
    return ideal_from_supports(minimal_transversals(complements), complex.ambient());
}

/// The complex Δ on `universe` with I_Δ = I: facets are the complements of
/// the minimal primes. Every variable of `universe` must be a face, so no
/// generator may be a single variable.
inline SimplicialComplex complex_of_ideal(const MonomialIdeal& I, const VarSet& universe) {
    if (!I.support().is_subset_of(universe))
        throw PreconditionError("complex_of_ideal: ideal uses variables outside the vertex set");
    if (I.is_zero()) return SimplicialComplex::simplex(universe);
    if (indeg(I) < 2)
        throw PreconditionError("complex_of_ideal: indeg I = " + std::to_string(indeg(I)) +
                                " < 2 (a variable generator cannot be a vertex)");
    std::vector<VarSet> facets;
    for (const auto& p : prime_decomposition(I)) facets.push_back(p.variables.complement_in(universe));
    return SimplicialComplex(I.ambient(), facets);
}

inline SimplicialComplex complex_of_ideal(const MonomialIdeal& I) {
    return complex_of_ideal(I, VarSet::full(I.ambient()));
}

/// Δ* on the vertex set X of Δ. Requires dim Δ < |X| - 2 so that Δ* has the
/// same vertex set and Δ** = Δ.
inline SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
    const VarSet& X = complex.vertex_set();
    if (complex.dimension() >= X.size() - 2)
        throw PreconditionError("alexander_dual: dim Δ = " + std::to_string(complex.dimension()) +
                                " is not < n - 2 = " + std::to_string(X.size() - 2));
    std::vector<VarSet> facets;
    const MonomialIdeal I = stanley_reisner_ideal(complex);
    for (const auto& m : I.generators())
        facets.push_back(m.support().complement_in(X));
    return SimplicialComplex(complex.ambient(), facets);
}

/// The complex Γ whose facets are the complements (in `universe`) of the
/// generator supports of I, so that I = I_{Γ*}.
inline SimplicialComplex dual_complex_of_ideal(const MonomialIdeal& I, const VarSet& universe) {
    std::vector<VarSet> facets;
    for (const auto& g : I.generators()) facets.push_back(g.support().complement_in(universe));
    return SimplicialComplex(I.ambient(), facets);
}

inline SimplicialComplex dual_complex_of_ideal(const MonomialIdeal& I) {
    return dual_complex_of_ideal(I, VarSet::full(I.ambient()));
}

/// Inverse of dual_complex_of_ideal: I = (m_{X \ G} : G facet of Γ).
inline MonomialIdeal ideal_of_dual_complex(const SimplicialComplex& gamma, const VarSet& universe) {
    std::vector<VarSet> supports;
    for (const auto& g : gamma.facets()) supports.push_back(g.complement_in(universe));
    return ideal_from_supports(supports, gamma.ambient());
}

// ---------------------------------------------------------------------------
// Generalized trees

/// Attaching cone_{vertex}(face); attached_facet = face ∪ {vertex}.
struct PeelStep {
    int vertex = 0;
    VarSet face;
    VarSet attached_facet;

    friend bool operator==(const PeelStep&, const PeelStep&) = default;
};

/// A generalized tree presented as a simplex plus cone attachments, in
/// attachment order.
struct PeelSequence {
    SimplicialComplex base;
    std::vector<PeelStep> steps;
};

inline SimplicialComplex replay(const PeelSequence& seq) {
    SimplicialComplex c = seq.base;
    for (const auto& s : seq.steps) {
        if (s.attached_facet != (s.face | VarSet(s.face.ambient(), {s.vertex})))
            throw PreconditionError("replay: attached facet is not face ∪ {vertex}");
        c = add_cone(c, s.vertex, s.face);
    }
    return c;
}

/// Leaf vertices: those lying in exactly one facet. Removing one never
/// orphans another vertex, because the rest of its facet is kept as a face.
inline std::vector<int> peelable_vertices(const SimplicialComplex& c) {
    std::vector<int> out;
    if (c.is_simplex()) return out;
    for (int v : c.vertex_set().indices())
        if (c.facet_count_with(v) == 1) out.push_back(v);
    return out;
}

/// Removes leaf `v`: the facet H ∋ v is replaced by H \ {v} unless that is
/// already covered by another facet. Returns the step that undoes it.
inline PeelStep remove_leaf(SimplicialComplex& c, int v) {
    const auto& fs = c.facets();
    auto h = std::find_if(fs.begin(), fs.end(), [&](const VarSet& g) { return g.contains(v); });
    if (h == fs.end() || c.facet_count_with(v) != 1)
        throw PreconditionError("remove_leaf: x" + std::to_string(v) + " is not a leaf");
    PeelStep step{v, *h, *h};
    step.face.erase(v);
    std::vector<VarSet> rest;
    for (const auto& g : fs)
        if (!(g == *h)) rest.push_back(g);
    if (!std::any_of(rest.begin(), rest.end(),
                     [&](const VarSet& g) { return step.face.is_subset_of(g); }))
        rest.push_back(step.face);
    c = SimplicialComplex(c.ambient(), rest);
    return step;
}

/// Decomposes Γ as a generalized tree by repeatedly removing the
/// smallest-index leaf vertex. Returns nullopt when no leaf remains before
/// a simplex is reached.
inline std::optional<PeelSequence> peel(const SimplicialComplex& gamma) {
    SimplicialComplex cur = gamma;
    std::vector<PeelStep> removed;
    while (!cur.is_simplex()) {
        auto leaves = peelable_vertices(cur);
        if (leaves.empty()) return std::nullopt;
        removed.push_back(remove_leaf(cur, leaves.front()));
    }
    std::reverse(removed.begin(), removed.end());
    return PeelSequence{cur, std::move(removed)};
}

inline bool is_generalized_tree(const SimplicialComplex& gamma) { return peel(gamma).has_value(); }

}  // namespace arank
