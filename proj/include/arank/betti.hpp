#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "arank/errors.hpp"
#include "arank/monomial_ideal.hpp"
#include "arank/simplicial_complex.hpp"

namespace arank {

inline constexpr int kMaxBettiVars = 16;

namespace detail {

using BigInt = boost::multiprecision::mpz_int;

/// Rank over Q by fraction-free (Bareiss) elimination.
inline int rank_over_rationals(std::vector<std::vector<BigInt>> a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a.front().size();
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

inline std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline int rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a.front().size();
    for (auto& row : a)
        for (auto& x : row) x = ((x % p) + p) % p;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::int64_t inv = mod_pow(a[r][c], p - 2, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            std::int64_t f = a[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
        }
        ++r;
    }
    return static_cast<int>(r);
}

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Rank of the simplicial boundary map from `upper` faces to `lower` faces
/// (lower faces have one vertex fewer).
inline int boundary_rank(const std::vector<std::uint32_t>& lower,
                         const std::vector<std::uint32_t>& upper, int field_char) {
    if (lower.empty() || upper.empty()) return 0;
    std::map<std::uint32_t, std::size_t> row_of;
    for (std::size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = i;
    auto fill = [&](auto& m) {
        for (std::size_t c = 0; c < upper.size(); ++c) {
            int k = 0;
            for (std::uint32_t bits = upper[c]; bits; bits &= bits - 1, ++k) {
                std::uint32_t v = bits & (~bits + 1);
                m[row_of.at(upper[c] & ~v)][c] = (k % 2 == 0) ? 1 : -1;
            }
        }
    };
    if (field_char == 0) {
        std::vector<std::vector<BigInt>> m(lower.size(), std::vector<BigInt>(upper.size(), 0));
        fill(m);
        return rank_over_rationals(std::move(m));
    }
    std::vector<std::vector<std::int64_t>> m(lower.size(),
                                             std::vector<std::int64_t>(upper.size(), 0));
    fill(m);
    return rank_mod_p(std::move(m), field_char);
}

}  // namespace detail

/// Graded Betti numbers β_{i,j}(R/I) over a field of the given
/// characteristic (0 or a prime).
struct BettiTable {
    std::map<std::pair<int, int>, long> entries;  // nonzero entries only
    int field_char = 0;

    long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    /// Projective dimension of R/I.
    int pd() const {
        int p = 0;
        for (const auto& [ij, b] : entries) p = std::max(p, ij.first);
        return p;
    }

    /// reg I = max { j - i + 1 : β_{i,j}(R/I) ≠ 0, i ≥ 1 }.
    int reg_ideal() const {
        int r = -1;
        for (const auto& [ij, b] : entries)
            if (ij.first >= 1) r = std::max(r, ij.second - ij.first + 1);
        if (r < 0) throw PreconditionError("reg: zero ideal");
        return r;
    }

    /// indeg I = min { j : β_{1,j} ≠ 0 }.
    int indeg_ideal() const {
        for (const auto& [ij, b] : entries)
            if (ij.first == 1) return ij.second;
        throw PreconditionError("indeg: zero ideal");
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Hochster's formula: β_{i,j}(R/I) = Σ_{|W|=j} dim H̃_{j-i-1}(Δ|_W), where Δ
/// is the complex of squarefree monomials outside I (a variable lying in I
/// is simply a non-vertex). Exponential in the ambient size.
inline BettiTable hochster_betti(const MonomialIdeal& I, int field_char = 0) {
    const int n = I.ambient();
    if (n > kMaxBettiVars)
        throw PreconditionError("hochster_betti: " + std::to_string(n) + " variables exceeds the " +
                                std::to_string(kMaxBettiVars) + "-variable limit");
    if (field_char != 0 && !detail::is_prime(field_char))
        throw PreconditionError("hochster_betti: characteristic must be 0 or prime");
    if (I.is_unit()) throw PreconditionError("hochster_betti: unit ideal");

    const std::uint32_t total = std::uint32_t{1} << n;
    std::vector<char> is_face(total, 1);
    for (std::uint32_t s = 0; s < total; ++s)
        for (const auto& g : I.generators())
            if ((g.support().mask() & ~std::uint64_t{s}) == 0) {
                is_face[s] = 0;
                break;
            }

    BettiTable table;
    table.field_char = field_char;
    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(n) + 2);
    for (std::uint32_t w = 0; w < total; ++w) {
        for (auto& v : by_size) v.clear();
        // Faces of Δ|_W, bucketed by cardinality (the empty face included).
        for (std::uint32_t s = w;; s = (s - 1) & w) {
            if (is_face[s]) by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);
            if (s == 0) break;
        }
        for (auto& v : by_size) std::sort(v.begin(), v.end());
        const int j = std::popcount(w);
        // rank of ∂ : C_k -> C_{k-1} indexed by face size k (size 0 = empty face).
        std::vector<int> rk(static_cast<std::size_t>(n) + 2, 0);
        for (int k = 1; k <= j; ++k)
            rk[static_cast<std::size_t>(k)] =
                detail::boundary_rank(by_size[static_cast<std::size_t>(k - 1)],
                                      by_size[static_cast<std::size_t>(k)], field_char);
        for (int k = 0; k <= j; ++k) {
            // H̃ in dimension d = k - 1.
            long h = static_cast<long>(by_size[static_cast<std::size_t>(k)].size()) -
                     rk[static_cast<std::size_t>(k)] - rk[static_cast<std::size_t>(k) + 1];
            if (h == 0) continue;
            int i = j - (k - 1) - 1;
            table.entries[{i, j}] += h;
        }
    }
    return table;
}

inline BettiTable hochster_betti(const SimplicialComplex& complex, int field_char = 0) {
    return hochster_betti(stanley_reisner_ideal(complex), field_char);
}

inline int pd(const MonomialIdeal& I, int field_char = 0) { return hochster_betti(I, field_char).pd(); }

inline int reg(const MonomialIdeal& I, int field_char = 0) {
    require_nonzero(I, "reg");
    return hochster_betti(I, field_char).reg_ideal();
}

/// reg I = indeg I.
inline bool has_linear_resolution(const MonomialIdeal& I, int field_char = 0) {
    require_nonzero(I, "has_linear_resolution");
    return hochster_betti(I, field_char).reg_ideal() == indeg(I);
}

/// R/I is Cohen-Macaulay iff depth = dim, i.e. (Auslander-Buchsbaum)
/// pd R/I = height I.
inline bool is_cohen_macaulay(const MonomialIdeal& I, int field_char = 0) {
    require_nonzero(I, "is_cohen_macaulay");
    return pd(I, field_char) == height(I);
}

}  // namespace arank
