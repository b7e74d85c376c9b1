#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "arank/errors.hpp"
#include "arank/varset.hpp"

namespace arank {

/// A squarefree monomial, identified with its support. The empty support is
/// the unit monomial.
class SquarefreeMonomial {
public:
    SquarefreeMonomial() = default;
    explicit SquarefreeMonomial(VarSet support) : support_(support) {}
    SquarefreeMonomial(int ambient_n, std::initializer_list<int> indices)
        : support_(ambient_n, indices) {}

    const VarSet& support() const noexcept { return support_; }
    int degree() const noexcept { return support_.size(); }
    int ambient() const noexcept { return support_.ambient(); }
    bool is_unit() const noexcept { return support_.empty(); }

    bool divides(const SquarefreeMonomial& o) const noexcept {
        return support_.is_subset_of(o.support_);
    }

    /// lcm of squarefree monomials is the union of supports.
    SquarefreeMonomial lcm(const SquarefreeMonomial& o) const {
        return SquarefreeMonomial(support_ | o.support_);
    }

    /// "x1*x2*x3"; the unit monomial prints as "1".
    std::string to_string() const {
        return support_.empty() ? std::string("1") : support_.to_string("*");
    }

    friend bool operator==(const SquarefreeMonomial& a, const SquarefreeMonomial& b) noexcept {
        return a.support_ == b.support_;
    }

private:
    VarSet support_;
};

struct MonomialCanonicalLess {
    bool operator()(const SquarefreeMonomial& a, const SquarefreeMonomial& b) const noexcept {
        return canonical_less(a.support(), b.support());
    }
};

/// A squarefree monomial ideal held by its minimal generating set G(I),
/// sorted canonically (degree, then lexicographic on support). Only
/// `minimalize` builds one, so the invariant always holds.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    int ambient() const noexcept { return n_; }
    const std::vector<SquarefreeMonomial>& generators() const noexcept { return gens_; }
    std::size_t num_generators() const noexcept { return gens_.size(); }
    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_unit(); }

    /// Membership of a squarefree monomial (some generator divides it).
    bool contains(const SquarefreeMonomial& m) const noexcept {
        return std::any_of(gens_.begin(), gens_.end(),
                           [&](const SquarefreeMonomial& g) { return g.divides(m); });
    }

    /// Union of generator supports.
    VarSet support() const {
        VarSet s(n_);
        for (const auto& g : gens_) s = s | g.support();
        return s;
    }

    std::vector<VarSet> generator_supports() const {
        std::vector<VarSet> out;
        out.reserve(gens_.size());
        for (const auto& g : gens_) out.push_back(g.support());
        return out;
    }

    /// Same generators in a larger ambient ring.
    MonomialIdeal widened(int ambient_n) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) noexcept {
        return a.n_ == b.n_ && a.gens_ == b.gens_;
    }

    friend MonomialIdeal minimalize(const std::vector<SquarefreeMonomial>& monomials, int ambient_n);

private:
    std::vector<SquarefreeMonomial> gens_;
    int n_ = 0;
};

/// Minimal generators of the ideal spanned by `monomials`.
inline MonomialIdeal minimalize(const std::vector<SquarefreeMonomial>& monomials, int ambient_n) {
    VarSet::check_ambient(ambient_n);
    for (const auto& m : monomials)
        if (m.ambient() != ambient_n)
            throw PreconditionError("minimalize: mixed ambient sizes (" +
                                    std::to_string(m.ambient()) + " vs " +
                                    std::to_string(ambient_n) + ")");

    std::vector<SquarefreeMonomial> sorted = monomials;
    std::sort(sorted.begin(), sorted.end(), MonomialCanonicalLess{});
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    // Canonical order is degree-first, so any divisor of m precedes it.
    MonomialIdeal I;
    I.n_ = ambient_n;
    for (const auto& m : sorted) {
        bool redundant = std::any_of(I.gens_.begin(), I.gens_.end(),
                                     [&](const SquarefreeMonomial& g) { return g.divides(m); });
        if (!redundant) I.gens_.push_back(m);
    }
    return I;
}

/// Overload inferring the ambient size from the first monomial; the empty
/// list yields the zero ideal in zero variables.
inline MonomialIdeal minimalize(const std::vector<SquarefreeMonomial>& monomials) {
    return minimalize(monomials, monomials.empty() ? 0 : monomials.front().ambient());
}

inline MonomialIdeal MonomialIdeal::widened(int ambient_n) const {
    std::vector<SquarefreeMonomial> ms;
    ms.reserve(gens_.size());
    for (const auto& g : gens_) ms.emplace_back(g.support().widened(ambient_n));
    return minimalize(ms, ambient_n);
}

inline MonomialIdeal ideal_from_supports(const std::vector<VarSet>& supports, int ambient_n) {
    std::vector<SquarefreeMonomial> ms;
    ms.reserve(supports.size());
    for (const auto& s : supports) ms.emplace_back(s);
    return minimalize(ms, ambient_n);
}

namespace detail {

// Depth-first transversal search. `chosen` is the partial transversal; a
// vertex whose every incident hit edge is also hit by another chosen vertex
// can never become necessary again, so such branches are cut.
class TransversalSearch {
public:
    explicit TransversalSearch(std::vector<std::uint64_t> edges) : edges_(std::move(edges)) {}

    std::vector<std::uint64_t> run() {
        recurse(0);
        std::vector<std::uint64_t> out(found_.begin(), found_.end());
        std::sort(out.begin(), out.end(),
                  [](std::uint64_t a, std::uint64_t b) { return VarSet::canonical_less(a, b); });
        return out;
    }

private:
    bool every_vertex_has_private_edge(std::uint64_t chosen) const {
        for (std::uint64_t m = chosen; m; m &= m - 1) {
            std::uint64_t v = m & (~m + 1);
            bool priv = false;
            for (std::uint64_t e : edges_) {
                if ((e & chosen) == v) {
                    priv = true;
                    break;
                }
            }
            if (!priv) return false;
        }
        return true;
    }

    void recurse(std::uint64_t chosen) {
        auto missed = std::find_if(edges_.begin(), edges_.end(),
                                   [&](std::uint64_t e) { return (e & chosen) == 0; });
        if (missed == edges_.end()) {
            if (every_vertex_has_private_edge(chosen)) found_.insert(chosen);
            return;
        }
        if (!visited_.insert(chosen).second) return;
        for (std::uint64_t m = *missed; m; m &= m - 1) {
            std::uint64_t next = chosen | (m & (~m + 1));
            if (!every_vertex_has_private_edge(next)) continue;
            recurse(next);
        }
    }

    std::vector<std::uint64_t> edges_;
    std::set<std::uint64_t> found_;
    std::set<std::uint64_t> visited_;
};

}  // namespace detail

/// All inclusion-minimal vertex sets meeting every edge, in canonical order.
/// With no edges the unique minimal transversal is the empty set.
inline std::vector<VarSet> minimal_transversals(const std::vector<VarSet>& hypergraph) {
    if (hypergraph.empty()) return {VarSet()};
    int n = hypergraph.front().ambient();
    std::vector<std::uint64_t> edges;
    edges.reserve(hypergraph.size());
    for (const auto& e : hypergraph) {
        if (e.ambient() != n) throw PreconditionError("minimal_transversals: mixed ambient sizes");
        if (e.empty())
            throw PreconditionError("minimal_transversals: empty edge admits no transversal");
        edges.push_back(e.mask());
    }
    std::vector<VarSet> out;
    for (std::uint64_t t : detail::TransversalSearch(std::move(edges)).run()) out.emplace_back(n, t);
    return out;
}

/// A minimal prime (x_i : i in variables) of a squarefree monomial ideal.
struct PrimeComponent {
    VarSet variables;

    std::string to_string() const { return "(" + variables.to_string(",") + ")"; }
    friend bool operator==(const PrimeComponent&, const PrimeComponent&) = default;
};

inline void require_nonzero(const MonomialIdeal& I, const char* op) {
    if (I.is_zero()) throw PreconditionError(std::string(op) + ": zero ideal");
}

inline std::vector<PrimeComponent> prime_decomposition(const MonomialIdeal& I) {
    require_nonzero(I, "prime_decomposition");
    if (I.is_unit()) throw PreconditionError("prime_decomposition: unit ideal has no primes");
    std::vector<PrimeComponent> out;
    for (const auto& t : minimal_transversals(I.generator_supports())) out.push_back({t});
    return out;
}

inline int height(const MonomialIdeal& I) {
    auto primes = prime_decomposition(I);
    int h = kMaxAmbient + 1;
    for (const auto& p : primes) h = std::min(h, p.variables.size());
    return h;
}

inline int indeg(const MonomialIdeal& I) {
    require_nonzero(I, "indeg");
    return I.generators().front().degree();  // canonical order is degree-first
}

/// The Alexander dual ideal I* = (m_P : P a minimal prime of I). For
/// squarefree I this is an involution.
inline MonomialIdeal alexander_dual(const MonomialIdeal& I) {
    std::vector<VarSet> primes;
    for (const auto& p : prime_decomposition(I)) primes.push_back(p.variables);
    return ideal_from_supports(primes, I.ambient());
}

/// Intersection of the primes, computed by lcm expansion.
inline MonomialIdeal intersect_primes(const std::vector<PrimeComponent>& primes, int ambient_n) {
    std::vector<SquarefreeMonomial> acc{SquarefreeMonomial(VarSet(ambient_n))};
    MonomialIdeal cur = minimalize(acc, ambient_n);
    for (const auto& p : primes) {
        std::vector<SquarefreeMonomial> next;
        for (const auto& g : cur.generators())
            for (int i : p.variables.indices()) {
                VarSet s = g.support();
                s.insert(i);
                next.emplace_back(s);
            }
        cur = minimalize(next, ambient_n);
    }
    return cur;
}

}  // namespace arank
