#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arank/errors.hpp"
#include "arank/family.hpp"
#include "arank/groebner.hpp"
#include "arank/monomial_ideal.hpp"
#include "arank/polynomial.hpp"

namespace arank {

/// Every term of f is divisible by a generator of I. Exact for monomial
/// ideals.
inline bool polynomial_in_monomial_ideal(const Polynomial& f, const MonomialIdeal& I) {
    for (const auto& [t, c] : f.terms()) {
        bool hit = false;
        for (const auto& g : I.generators()) {
            if (Term::of(g).divides(t)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

/// A point where every element vanishes but `generator` does not, which
/// proves generator ∉ √(elements).
struct Counterexample {
    std::vector<Rational> point;  // point[i-1] = value of x_i
    VarSet zero_variables;        // coordinate subspace sampled
    SquarefreeMonomial generator;
};

struct CoverageEntry {
    SquarefreeMonomial generator;
    bool in_radical = false;
    bool refuted_by_sampling = false;
    double seconds = 0.0;
};

/// √(elements) = I  <=>  containment_ok and every generator is covered.
struct RadicalReport {
    bool containment_ok = false;
    std::vector<CoverageEntry> coverage;
    bool verdict = false;
    double basis_seconds = 0.0;
    double total_seconds = 0.0;
    std::optional<Counterexample> counterexample;
};

struct VerifyOptions {
    bool use_sampling = true;
    std::uint64_t seed = 1;
    int trials = 50;
    int max_coordinate = 97;
};

/// Cheap refutation of coverage on coordinate subspaces V(x_S) not inside
/// V(I). Random rational points are drawn only on subspaces where every
/// element vanishes identically (each term meets S); a point there with some
/// generator nonzero is returned. Never refutes a true statement; "nullopt"
/// means inconclusive.
inline std::optional<Counterexample> fast_negative_check(const std::vector<Polynomial>& elements,
                                                         const MonomialIdeal& I,
                                                         std::uint64_t seed = 1, int trials = 50,
                                                         int max_coordinate = 97) {
    if (I.is_zero()) return std::nullopt;
    const int n = common_ambient(elements, I.ambient());
    if (n > 14) return std::nullopt;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-max_coordinate, max_coordinate);
    std::uniform_int_distribution<int> den(1, max_coordinate);

    std::vector<Polynomial> ew;
    for (const auto& e : elements) ew.push_back(e.widened(n));
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(Polynomial::of(g).widened(n));

    // Smaller zero sets first; the subspace must not lie inside V(I).
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) subsets.push_back(s);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](std::uint64_t a, std::uint64_t b) { return VarSet::canonical_less(a, b); });
    for (std::uint64_t s : subsets) {
        VarSet zeros(n, s);
        // V(x_S) ⊆ V(I) iff every generator has a variable in S.
        bool inside = std::all_of(I.generators().begin(), I.generators().end(), [&](const SquarefreeMonomial& g) {
            return (g.support().mask() & s) != 0;
        });
        if (inside) continue;
        bool vanish = std::all_of(ew.begin(), ew.end(), [&](const Polynomial& e) {
            return std::all_of(e.terms().begin(), e.terms().end(),
                               [&](const auto& tc) { return (tc.first.support_mask() & s) != 0; });
        });
        if (!vanish) continue;
        for (int trial = 0; trial < trials; ++trial) {
            std::vector<Rational> p(static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i) {
                if (zeros.contains(i)) continue;
                int a = 0;
                while (a == 0) a = num(rng);
                p[static_cast<std::size_t>(i - 1)] = Rational(a, den(rng));
            }
            bool all_vanish = std::all_of(ew.begin(), ew.end(),
                                          [&](const Polynomial& e) { return e.evaluate(p) == 0; });
            if (!all_vanish) continue;
            for (std::size_t k = 0; k < gens.size(); ++k)
                if (gens[k].evaluate(p) != 0)
                    return Counterexample{p, zeros, I.generators()[k]};
        }
    }
    return std::nullopt;
}

/// Certifies √(elements) = I for a nonzero squarefree monomial ideal I:
/// J ⊆ I termwise, and each generator of I lies in √J (Rabinowitsch).
inline RadicalReport verify_up_to_radical(const std::vector<Polynomial>& elements, const MonomialIdeal& I,
                                          const VerifyOptions& opts = {}) {
    using clock = std::chrono::steady_clock;
    auto secs = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double>(b - a).count();
    };
    require_nonzero(I, "verify_up_to_radical");
    const auto t0 = clock::now();
    RadicalReport report;
    report.containment_ok = std::all_of(elements.begin(), elements.end(),
                                        [&](const Polynomial& e) { return polynomial_in_monomial_ideal(e, I); });

    std::vector<char> refuted(I.num_generators(), 0);
    if (opts.use_sampling) {
        report.counterexample = fast_negative_check(elements, I, opts.seed, opts.trials, opts.max_coordinate);
        if (report.counterexample) {
            const auto& pt = report.counterexample->point;
            for (std::size_t k = 0; k < I.num_generators(); ++k) {
                Polynomial g = Polynomial::of(I.generators()[k]);
                std::vector<Rational> pp = pt;
                pp.resize(std::max<std::size_t>(pp.size(), static_cast<std::size_t>(g.ambient())));
                if (g.evaluate(pp) != 0) refuted[k] = 1;
            }
        }
    }

    const int n = common_ambient(elements, I.ambient());
    std::optional<RadicalOracle> oracle;
    const auto tb = clock::now();
    bool need_oracle = std::any_of(refuted.begin(), refuted.end(), [](char r) { return !r; });
    if (need_oracle) oracle.emplace(elements, n);
    report.basis_seconds = secs(tb, clock::now());

    bool all = true;
    for (std::size_t k = 0; k < I.num_generators(); ++k) {
        const auto tg = clock::now();
        CoverageEntry entry{I.generators()[k], false, refuted[k] != 0, 0.0};
        if (!refuted[k]) entry.in_radical = oracle->contains(Polynomial::of(I.generators()[k]).widened(n));
        entry.seconds = secs(tg, clock::now());
        all = all && entry.in_radical;
        report.coverage.push_back(std::move(entry));
    }
    report.verdict = report.containment_ok && all;
    report.total_seconds = secs(t0, clock::now());
    return report;
}

/// (m_1^{(n)})^{n-2} = -x_{n-2}^{n-3} q_2^{(n-1)} q_1^{(n)} + x_{n-2}^{n-3} q_1^{(n-1)} q_2^{(n)},
/// checked as an exact polynomial identity for 5 <= n <= 9.
inline bool check_family_identity(int n) {
    if (n < 5 || n > 9) throw PreconditionError("check_family_identity: n must lie in 5..9");
    auto q = detail::line_family_pairs(n);
    const auto& cur = q[static_cast<std::size_t>(n)];
    const auto& prev = q[static_cast<std::size_t>(n - 1)];
    Polynomial lhs = Polynomial::of(line_generator(n, 1, n)).pow(static_cast<unsigned>(n - 2));
    Polynomial c = Polynomial::monomial(n, Term::variable(n - 2, static_cast<unsigned>(n - 3)));
    Polynomial rhs = -(c * prev.second * cur.first) + c * prev.first * cur.second;
    return lhs == rhs;
}

}  // namespace arank
