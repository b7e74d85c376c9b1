#pragma once

#include <string>
#include <vector>

#include "arank/errors.hpp"
#include "arank/monomial_ideal.hpp"
#include "arank/polynomial.hpp"

namespace arank {

/// I_n = (m_1, ..., m_{n-1}) with m_i = x1...xn / (x_{n-i} x_{n-i+1}): the
/// Alexander dual of the path x1 - x2 - ... - xn. Height 2, Cohen-Macaulay.
struct LineFamilyMember {
    int n = 0;
    MonomialIdeal ideal;
    Polynomial q1;
    Polynomial q2;
};

/// m_i^{(k)} viewed in a ring with `ambient_n` variables.
inline SquarefreeMonomial line_generator(int k, int i, int ambient_n) {
    if (k < 2 || i < 1 || i > k - 1) throw PreconditionError("line_generator: index out of range");
    VarSet s = VarSet::from_indices(ambient_n, {});
    for (int v = 1; v <= k; ++v)
        if (v != k - i && v != k - i + 1) s.insert(v);
    return SquarefreeMonomial(s);
}

inline MonomialIdeal line_family_ideal(int n) {
    std::vector<SquarefreeMonomial> gens;
    for (int i = 1; i <= n - 1; ++i) gens.push_back(line_generator(n, i, n));
    return minimalize(gens, n);
}

namespace detail {

// q^{(k)} for k = 4..n in a ring of n variables, via the seeds at 4, 5 and
// q^{(k+1)} = x_{k+1} q^{(k)} - x_{k-2}^{k-3} q^{(k-1)} m_1^{(k+1)}.
inline std::vector<std::pair<Polynomial, Polynomial>> line_family_pairs(int n) {
    auto m = [&](int k, int i) { return Polynomial::of(line_generator(k, i, n)); };
    std::vector<std::pair<Polynomial, Polynomial>> q(static_cast<std::size_t>(n) + 1);
    q[4] = {m(4, 2), m(4, 1) + m(4, 3)};
    if (n >= 5) {
        Polynomial x5 = var(n, 5);
        Polynomial x1x2 = var(n, 1) * var(n, 2);
        Polynomial x2x3 = var(n, 2) * var(n, 3);
        q[5] = {x5 * q[4].first - x1x2 * m(5, 1), x5 * q[4].second - x2x3 * m(5, 1)};
    }
    for (int k = 5; k + 1 <= n; ++k) {
        Polynomial xk1 = var(n, k + 1);
        Polynomial coef = Polynomial::monomial(n, Term::variable(k - 2, static_cast<unsigned>(k - 3)));
        Polynomial lift = coef * m(k + 1, 1);
        auto& cur = q[static_cast<std::size_t>(k)];
        auto& prev = q[static_cast<std::size_t>(k - 1)];
        q[static_cast<std::size_t>(k + 1)] = {xk1 * cur.first - lift * prev.first,
                                              xk1 * cur.second - lift * prev.second};
    }
    return q;
}

}  // namespace detail

/// The ideal I_n with its two radical generators, 4 <= n <= 12.
inline LineFamilyMember adual_line_family(int n) {
    if (n < 4 || n > 12) throw PreconditionError("adual_line_family: n must lie in 4..12");
    auto pairs = detail::line_family_pairs(n);
    return {n, line_family_ideal(n), pairs[static_cast<std::size_t>(n)].first,
            pairs[static_cast<std::size_t>(n)].second};
}

}  // namespace arank
