#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arank/betti.hpp"
#include "arank/errors.hpp"
#include "arank/family.hpp"
#include "arank/groebner.hpp"
#include "arank/monomial_ideal.hpp"
#include "arank/polynomial.hpp"
#include "arank/simplicial_complex.hpp"
#include "arank/verifier.hpp"

namespace arank {

/// Elements generating `target` up to radical, with how they were built.
struct GeneratorWitness {
    std::vector<Polynomial> elements;
    MonomialIdeal target;
    std::string provenance;
    bool verified = false;
    std::optional<RadicalReport> report;
};

namespace detail {

inline GeneratorWitness certified(std::vector<Polynomial> elements, const MonomialIdeal& target,
                                  std::string provenance, const char* op) {
    GeneratorWitness w{std::move(elements), target, std::move(provenance), false, std::nullopt};
    if (target.is_zero()) {
        // Only the empty family (or zeros) generates the zero ideal.
        w.verified = std::all_of(w.elements.begin(), w.elements.end(),
                                 [](const Polynomial& p) { return p.is_zero(); });
    } else {
        w.report = verify_up_to_radical(w.elements, target);
        w.verified = w.report->verdict;
    }
    if (!w.verified) throw InternalError(std::string(op) + ": constructed elements failed radical verification");
    return w;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Schmitt-Vogel base case

/// Blocks P_0, ..., P_r of generators. Valid when |P_0| = 1 and for l ≥ 1
/// any two distinct a, a'' in P_l have some a''' in an earlier block with
/// a''' | a·a''.
struct SVPartition {
    std::vector<std::vector<SquarefreeMonomial>> blocks;

    std::optional<std::string> violation() const {
        if (blocks.empty() || blocks.front().size() != 1) return "P_0 must hold exactly one monomial";
        for (std::size_t l = 1; l < blocks.size(); ++l) {
            const auto& b = blocks[l];
            for (std::size_t u = 0; u < b.size(); ++u)
                for (std::size_t v = u + 1; v < b.size(); ++v) {
                    VarSet both = b[u].support() | b[v].support();
                    bool ok = false;
                    for (std::size_t e = 0; e < l && !ok; ++e)
                        for (const auto& c : blocks[e])
                            if (c.support().is_subset_of(both)) {
                                ok = true;
                                break;
                            }
                    if (!ok)
                        return "no earlier divisor of " + b[u].to_string() + "*" + b[v].to_string() +
                               " in block " + std::to_string(l);
                }
        }
        return std::nullopt;
    }

    /// The blocks partition the minimal generators of I.
    bool partitions(const MonomialIdeal& I) const {
        std::vector<SquarefreeMonomial> all;
        for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
        if (all.size() != I.num_generators()) return false;
        std::sort(all.begin(), all.end(), MonomialCanonicalLess{});
        return std::equal(all.begin(), all.end(), I.generators().begin());
    }
};

/// q_l = Σ_{a ∈ P_l} a.
inline std::vector<Polynomial> sv_elements(const SVPartition& p) {
    if (auto why = p.violation()) throw PreconditionError("sv_elements: " + *why);
    int n = 0;
    for (const auto& b : p.blocks)
        for (const auto& m : b) n = std::max(n, m.support().ambient());
    std::vector<Polynomial> out;
    for (const auto& b : p.blocks) {
        Polynomial q(n);
        for (const auto& m : b) q += Polynomial::of(m).widened(n);
        out.push_back(std::move(q));
    }
    return out;
}

namespace detail {

inline std::optional<SVPartition> find_two_block_partition(const MonomialIdeal& I) {
    const auto& g = I.generators();
    for (std::size_t k = 0; k < g.size(); ++k) {
        SVPartition p;
        p.blocks.push_back({g[k]});
        p.blocks.emplace_back();
        for (std::size_t j = 0; j < g.size(); ++j)
            if (j != k) p.blocks.back().push_back(g[j]);
        if (!p.violation()) return p;
    }
    return std::nullopt;
}

// Two generators of √ for μ(I) ≤ 3, assuming height 2 and Cohen-Macaulay.
inline GeneratorWitness base_pair(const MonomialIdeal& I) {
    const int n = I.ambient();
    const auto& g = I.generators();
    if (g.size() <= 2) {
        std::vector<Polynomial> e;
        for (const auto& m : g) e.push_back(Polynomial::of(m));
        return certified(std::move(e), I, "base-case", "base_case_generators");
    }
    if (auto p = find_two_block_partition(I))
        return certified(sv_elements(*p), I, "base-case", "base_case_generators");
    // Not reached for height-2 Cohen-Macaulay ideals in the exhaustive checks;
    // kept as a verified search so a gap surfaces as an error, not a wrong answer.
    for (std::size_t k = 0; k < g.size(); ++k)
        for (int sign : {1, -1}) {
            std::vector<Polynomial> rest;
            for (std::size_t j = 0; j < g.size(); ++j)
                if (j != k) rest.push_back(Polynomial::of(g[j]).widened(n));
            std::vector<Polynomial> e{Polynomial::of(g[k]).widened(n), rest[0] + rest[1].scaled(sign)};
            if (verify_up_to_radical(e, I).verdict)
                return certified(std::move(e), I, "base-case-search", "base_case_generators");
        }
    throw InternalError("base_case_generators: no pair found for " + std::to_string(g.size()) + " generators");
}

inline void require_height_two_cm(const MonomialIdeal& I, const char* op) {
    require_nonzero(I, op);
    if (I.is_unit()) throw PreconditionError(std::string(op) + ": unit ideal");
    if (height(I) != 2)
        throw PreconditionError(std::string(op) + ": height I = " + std::to_string(height(I)) + ", expected 2");
    if (!is_cohen_macaulay(I)) throw PreconditionError(std::string(op) + ": R/I is not Cohen-Macaulay");
}

}  // namespace detail

/// Two elements generating I up to radical, for I of height 2, R/I
/// Cohen-Macaulay, and μ(I) ≤ 3 or indeg I = 1.
inline GeneratorWitness base_case_generators(const MonomialIdeal& I,
                                             const std::optional<SVPartition>& partition = std::nullopt) {
    detail::require_height_two_cm(I, "base_case_generators");
    if (I.num_generators() > 3 && indeg(I) != 1)
        throw PreconditionError("base_case_generators: needs at most 3 generators or indeg 1");
    if (partition) {
        if (!partition->partitions(I))
            throw PreconditionError("base_case_generators: partition does not cover the generators of I");
        return detail::certified(sv_elements(*partition), I, "base-case", "base_case_generators");
    }
    return detail::base_pair(I);
}

// ---------------------------------------------------------------------------
// Cone lift

/// Γ = Γ̄ ∪ cone_{apex} F. m0 = ∏ (U \ (F ∪ {apex})), m1 = ∏ (Ū \ G) with
/// G the facet of Γ̄ containing F.
struct ConeData {
    int apex = 0;
    VarSet face;
    VarSet facet;
    SquarefreeMonomial m0;
    SquarefreeMonomial m1;
};

/// From √(q1, q2) = Ī and m1^ℓ = a11 q1 + a12 q2, returns
/// (x0 q1 - a12 m0, x0 q2 + a11 m0).
inline std::pair<Polynomial, Polynomial> cone_lift(const Polynomial& q1, const Polynomial& q2,
                                                   const ConeData& cone, const PowerCertificate& cert) {
    if (!cone.face.is_subset_of(cone.facet)) throw PreconditionError("cone_lift: F is not inside G");
    const auto& c = cert.certificate;
    if (c.generators.size() != 2 || c.cofactors.size() != 2)
        throw PreconditionError("cone_lift: certificate must be against exactly (q1, q2)");
    const int n = std::max({q1.ambient(), q2.ambient(), cone.apex, c.target.ambient(),
                            cone.m0.support().ambient(), cone.m1.support().ambient()});
    if (!(c.generators[0].widened(n) == q1.widened(n)) || !(c.generators[1].widened(n) == q2.widened(n)))
        throw PreconditionError("cone_lift: certificate generators differ from (q1, q2)");
    Polynomial target = Polynomial::of(cone.m1).widened(n).pow(cert.exponent);
    if (!(c.target.widened(n) == target) || !cert.recombines())
        throw InternalError("cone_lift: certificate recombination failure");
    Polynomial x0 = var(n, cone.apex);
    Polynomial m0 = Polynomial::of(cone.m0).widened(n);
    Polynomial a11 = c.cofactors[0].widened(n);
    Polynomial a12 = c.cofactors[1].widened(n);
    return {x0 * q1.widened(n) - a12 * m0, x0 * q2.widened(n) + a11 * m0};
}

struct H2cmOptions {
    unsigned lmax = 0;  // 0: twice the number of variables
    OrderKind order = OrderKind::DegRevLex;  // for the power certificates
    bool verify_intermediate = true;
    /// Optional fixed certificates, consulted before power_membership.
    std::function<std::optional<PowerCertificate>(const ConeData&, const std::vector<Polynomial>&)>
        certificate_source;
    /// Optional fixed pairs for the base ideals.
    std::function<std::optional<std::vector<Polynomial>>(const MonomialIdeal&)> base_source;
};

namespace detail {

inline GeneratorWitness h2cm_rec(const MonomialIdeal& I, const VarSet& universe, const H2cmOptions& opts) {
    if (I.num_generators() <= 3 || indeg(I) == 1) {
        if (opts.base_source)
            if (auto e = opts.base_source(I)) return certified(std::move(*e), I, "base-case", "construct_h2cm");
        return base_pair(I);
    }
    SimplicialComplex gamma = dual_complex_of_ideal(I, universe);
    auto leaves = peelable_vertices(gamma);
    if (leaves.empty()) throw InternalError("construct_h2cm: dual complex has no leaf vertex");
    SimplicialComplex reduced = gamma;
    PeelStep step = remove_leaf(reduced, leaves.front());
    VarSet sub_universe = universe;
    sub_universe.erase(step.vertex);
    MonomialIdeal sub = ideal_of_dual_complex(reduced, sub_universe);
    GeneratorWitness below = h2cm_rec(sub, sub_universe, opts);

    ConeData cone;
    cone.apex = step.vertex;
    cone.face = step.face;
    auto g = reduced.facet_containing(step.face);
    if (!g) throw InternalError("construct_h2cm: F lies in no facet of the reduced complex");
    cone.facet = *g;
    cone.m1 = SquarefreeMonomial(g->complement_in(sub_universe));
    cone.m0 = SquarefreeMonomial((step.face | VarSet(universe.ambient(), {step.vertex})).complement_in(universe));

    const unsigned lmax = opts.lmax ? opts.lmax : 2u * static_cast<unsigned>(I.ambient());
    std::optional<PowerCertificate> injected;
    if (opts.certificate_source) injected = opts.certificate_source(cone, below.elements);
    PowerCertificate cert =
        injected ? std::move(*injected) : power_membership(cone.m1, below.elements, lmax, opts.order);
    auto [p1, p2] = cone_lift(below.elements[0], below.elements[1], cone, cert);
    std::vector<Polynomial> e{p1.widened(I.ambient()), p2.widened(I.ambient())};
    if (opts.verify_intermediate) return certified(std::move(e), I, "cone-lift", "construct_h2cm");
    return GeneratorWitness{std::move(e), I, "cone-lift", false, std::nullopt};
}

}  // namespace detail

/// Two elements generating I up to radical for any height-2 squarefree
/// monomial ideal with R/I Cohen-Macaulay (so ara I = 2).
inline GeneratorWitness construct_h2cm(const MonomialIdeal& I, const H2cmOptions& opts = {}) {
    detail::require_height_two_cm(I, "construct_h2cm");
    if (I.ambient() + 1 > kMaxPolyVars)
        throw PreconditionError("construct_h2cm: too many variables");
    GeneratorWitness w = detail::h2cm_rec(I, VarSet::full(I.ambient()), opts);
    if (!w.verified) w = detail::certified(std::move(w.elements), I, w.provenance, "construct_h2cm");
    return w;
}

// ---------------------------------------------------------------------------
// Adding a cone over a face

/// I' = (m0) + x0·I with x0 a new variable and m0 = ∏ (X \ F), F a face of
/// the complex whose facets are the complements of the generators of I.
inline MonomialIdeal cone_extension(const MonomialIdeal& I, const VarSet& face) {
    require_nonzero(I, "cone_extension");
    const int n = I.ambient();
    SimplicialComplex gamma = dual_complex_of_ideal(I);
    if (!gamma.has_face(face)) throw PreconditionError("cone_extension: F is not a face of the dual complex");
    const int x0 = n + 1;
    std::vector<SquarefreeMonomial> gens{SquarefreeMonomial(face.complement_in(VarSet::full(n)).widened(x0))};
    for (const auto& g : I.generators()) {
        VarSet s = g.support().widened(x0);
        s.insert(x0);
        gens.emplace_back(s);
    }
    return minimalize(gens, x0);
}

/// From √(q_1..q_h) = I, the elements m0, x0 q_1, ..., x0 q_h with
/// √(...) = I' = (m0) + x0·I.
inline GeneratorWitness ara_plus_one(const MonomialIdeal& I, const VarSet& face, const std::vector<Polynomial>& qs) {
    MonomialIdeal target = cone_extension(I, face);
    const int n1 = I.ambient() + 1;
    const SquarefreeMonomial m0(face.complement_in(VarSet::full(I.ambient())));
    std::vector<Polynomial> e{Polynomial::of(m0).widened(n1)};
    Polynomial x0 = var(n1, n1);
    for (const auto& q : qs) {
        if (q.ambient() > I.ambient()) throw PreconditionError("ara_plus_one: element outside the ring of I");
        e.push_back(x0 * q.widened(n1));
    }
    return detail::certified(std::move(e), target, "plus-one", "ara_plus_one");
}

// ---------------------------------------------------------------------------
// Stanley-Reisner cone extension

/// q̄_i = q_i², written as q̄_i = Σ_j ā_ij x_j over the variables outside G
/// (each term of q_i goes to the smallest such variable dividing it).
struct Step1Result {
    std::vector<Polynomial> qbar;
    std::vector<int> columns;  // the variables outside G, ascending
    std::vector<std::vector<Polynomial>> abar;
};

inline Step1Result bt_step1_normalize(const std::vector<Polynomial>& qs, const VarSet& facet, const VarSet& vertices) {
    if (!facet.is_subset_of(vertices)) throw PreconditionError("bt_step1_normalize: G is not inside X");
    const int n = common_ambient(qs, vertices.ambient());
    Step1Result r;
    r.columns = facet.complement_in(vertices).indices();
    std::map<int, std::size_t> col;
    for (std::size_t j = 0; j < r.columns.size(); ++j) col[r.columns[j]] = j;
    for (const auto& q0 : qs) {
        Polynomial q = q0.widened(n);
        std::vector<Polynomial> row(r.columns.size(), Polynomial(n));
        for (const auto& [t, c] : q.terms()) {
            int j = 0;
            for (int v : r.columns)
                if (t.exponent(v) > 0) {
                    j = v;
                    break;
                }
            if (j == 0)
                throw PreconditionError("bt_step1_normalize: term " + t.to_string() +
                                        " has no variable outside G (element not in I)");
            Term rest = t;
            rest.set(j, t.exponent(j) - 1);
            row[col[j]] += Polynomial::monomial(n, rest, c);
        }
        for (auto& a : row) a = a * q;
        r.qbar.push_back(q * q);
        r.abar.push_back(std::move(row));
    }
    return r;
}

namespace detail {

inline Polynomial determinant(const std::vector<std::vector<Polynomial>>& a, int n) {
    const std::size_t t = a.size();
    if (t == 0) return Polynomial::constant(n, 1);
    // Laplace expansion along rows, memoized on the set of used columns.
    std::map<std::uint32_t, Polynomial> memo;
    auto rec = [&](auto&& self, std::size_t row, std::uint32_t used) -> Polynomial {
        if (row == t) return Polynomial::constant(n, 1);
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        Polynomial sum(n);
        int sign = 1;
        for (std::size_t c = 0; c < t; ++c) {
            if (used & (1u << c)) continue;
            if (!a[row][c].is_zero()) {
                Polynomial minor = self(self, row + 1, used | (1u << c));
                if (!minor.is_zero()) sum += (sign > 0 ? a[row][c] : -a[row][c]) * minor;
            }
            sign = -sign;
        }
        memo.emplace(used, sum);
        return sum;
    };
    return rec(rec, 0, 0);
}

}  // namespace detail

struct BTData {
    int h = 0;
    int s = 0;
    int t = 0;
    int case_number = 0;
    VarSet facet;
    std::vector<int> position_to_variable;  // relabelled position p holds x_{position_to_variable[p-1]}
};

/// Δ' = Δ ∪ cone_{x0} F with x0 = x_{n+1}. From √(q_1..q_h) = I_Δ, builds
/// max(h + 1, t) elements (t = n - |F|) generating I_{Δ'} up to radical.
/// G defaults to the smallest facet containing F.
inline GeneratorWitness bt_cone_elements(const SimplicialComplex& delta, const VarSet& face,
                                         const std::vector<Polynomial>& qs,
                                         const std::optional<VarSet>& facet = std::nullopt,
                                         BTData* data = nullptr) {
    const int n = delta.ambient();
    if (!(delta.vertex_set() == VarSet::full(n)))
        throw PreconditionError("bt_cone_elements: vertex set must be x1..x" + std::to_string(n));
    if (!delta.has_face(face)) throw PreconditionError("bt_cone_elements: F is not a face of Δ");
    if (facet) {
        bool is_facet = std::find(delta.facets().begin(), delta.facets().end(), *facet) != delta.facets().end();
        if (!is_facet || !face.is_subset_of(*facet))
            throw PreconditionError("bt_cone_elements: G is not a facet of Δ containing F");
    }
    if (n + 1 > kMaxPolyVars) throw PreconditionError("bt_cone_elements: too many variables");
    const int x0 = n + 1;
    SimplicialComplex cone = add_cone(delta.widened(x0), x0, face.widened(x0));
    MonomialIdeal target = stanley_reisner_ideal(cone);
    for (const auto& q : qs)
        if (q.ambient() > n) throw PreconditionError("bt_cone_elements: element outside the ring of Δ");
    if (face == VarSet::full(n)) return detail::certified({}, target, "bt-trivial", "bt_cone_elements");
    if (qs.empty() && face.size() == n - 1) {
        // Δ a simplex and t = 1: I_{Δ'} = (x0 x_t) is principal. The Case 2
        // formula degenerates here (det A_2 = 1 leaves x_t alone).
        int v = face.complement_in(VarSet::full(n)).front();
        if (data) *data = BTData{0, 0, 1, 2, *delta.facet_containing(face), {}};
        return detail::certified({var(x0, x0) * var(x0, v)}, target, "bt-case2", "bt_cone_elements");
    }

    const VarSet G = facet ? *facet : *delta.facet_containing(face);
    const VarSet X = VarSet::full(n);
    BTData d;
    d.h = static_cast<int>(qs.size());
    d.s = n - G.size();
    d.t = n - face.size();
    d.facet = G;
    for (int v : G.complement_in(X).indices()) d.position_to_variable.push_back(v);
    for (int v : face.complement_in(G).indices()) d.position_to_variable.push_back(v);
    for (int v : face.indices()) d.position_to_variable.push_back(v);
    std::vector<int> to_pos(static_cast<std::size_t>(x0)), to_var(static_cast<std::size_t>(x0));
    for (int p = 1; p <= n; ++p) {
        int v = d.position_to_variable[static_cast<std::size_t>(p - 1)];
        to_pos[static_cast<std::size_t>(v - 1)] = p;
        to_var[static_cast<std::size_t>(p - 1)] = v;
    }
    to_pos.back() = x0;
    to_var.back() = x0;

    std::vector<Polynomial> qp;
    for (const auto& q : qs) qp.push_back(q.permuted(to_pos, x0));
    VarSet Gp(x0);
    for (int p = d.s + 1; p <= n; ++p) Gp.insert(p);
    Step1Result st = bt_step1_normalize(qp, Gp, VarSet::full(n).widened(x0));
    auto abar = [&](int i, int j) -> Polynomial {
        if (j > d.s) return Polynomial(x0);
        return st.abar[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    };
    Polynomial X0 = var(x0, x0);
    Polynomial X0t = X0.pow(static_cast<unsigned>(d.t));
    std::vector<Polynomial> e;
    if (d.h + 1 > d.t) {
        d.case_number = 1;
        std::vector<std::vector<Polynomial>> A;
        for (int i = 1; i <= d.t; ++i) {
            A.emplace_back();
            for (int j = 1; j <= d.t; ++j) A.back().push_back(i == j ? abar(i, j) + X0 : abar(i, j));
        }
        e.push_back(detail::determinant(A, x0) - X0t);
        for (int i = 1; i <= d.t; ++i) e.push_back(st.qbar[static_cast<std::size_t>(i - 1)] + X0 * var(x0, i));
        for (int i = d.t + 1; i <= d.h; ++i) e.push_back(st.qbar[static_cast<std::size_t>(i - 1)]);
    } else {
        d.case_number = 2;
        std::vector<std::vector<Polynomial>> A;
        for (int i = 1; i <= d.t - 1; ++i) {
            A.emplace_back();
            for (int j = 1; j <= d.t - 1; ++j) {
                Polynomial a = i <= d.h ? abar(i, j) : Polynomial(x0);
                A.back().push_back(i == j ? a + X0 : a);
            }
        }
        e.push_back(detail::determinant(A, x0) * (X0 + var(x0, d.t)) - X0t);
        for (int i = 1; i <= d.h; ++i) e.push_back(st.qbar[static_cast<std::size_t>(i - 1)] + X0 * var(x0, i));
        for (int i = d.h + 1; i <= d.t - 1; ++i) e.push_back(X0 * var(x0, i));
    }
    for (auto& p : e) p = p.permuted(to_var, x0);
    if (data) *data = d;
    return detail::certified(std::move(e), target, d.case_number == 1 ? "bt-case1" : "bt-case2",
                             "bt_cone_elements");
}

}  // namespace arank
