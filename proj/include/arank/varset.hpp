#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "arank/errors.hpp"

namespace arank {

inline constexpr int kMaxAmbient = 64;

/// A subset of the variables {x1, ..., xn}, stored as a bit mask
/// (bit i-1 <-> x_i). Indices are 1-based throughout the library.
class VarSet {
public:
    VarSet() = default;

    explicit VarSet(int ambient_n, std::uint64_t mask = 0) : mask_(mask), n_(ambient_n) {
        check_ambient(ambient_n);
        if (mask & ~full_mask(ambient_n))
            throw PreconditionError("VarSet: index outside 1.." + std::to_string(ambient_n));
    }

    VarSet(int ambient_n, std::initializer_list<int> indices) : VarSet(ambient_n) {
        for (int i : indices) insert(i);
    }

    static VarSet from_indices(int ambient_n, const std::vector<int>& indices) {
        VarSet s(ambient_n);
        for (int i : indices) s.insert(i);
        return s;
    }

    static VarSet full(int ambient_n) { return VarSet(ambient_n, full_mask(ambient_n)); }

    static std::uint64_t full_mask(int n) {
        return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }

    static void check_ambient(int n) {
        if (n < 0 || n > kMaxAmbient)
            throw PreconditionError("ambient variable count " + std::to_string(n) +
                                    " outside 0.." + std::to_string(kMaxAmbient));
    }

    int ambient() const noexcept { return n_; }
    std::uint64_t mask() const noexcept { return mask_; }
    int size() const noexcept { return std::popcount(mask_); }
    bool empty() const noexcept { return mask_ == 0; }

    bool contains(int i) const noexcept {
        return i >= 1 && i <= n_ && ((mask_ >> (i - 1)) & 1u);
    }

    void insert(int i) {
        if (i < 1 || i > n_)
            throw PreconditionError("variable index " + std::to_string(i) + " outside 1.." +
                                    std::to_string(n_));
        mask_ |= std::uint64_t{1} << (i - 1);
    }

    void erase(int i) {
        if (i >= 1 && i <= n_) mask_ &= ~(std::uint64_t{1} << (i - 1));
    }

    bool is_subset_of(const VarSet& o) const noexcept { return (mask_ & ~o.mask_) == 0; }
    bool intersects(const VarSet& o) const noexcept { return (mask_ & o.mask_) != 0; }

    VarSet operator|(const VarSet& o) const { return VarSet(same(o), mask_ | o.mask_); }
    VarSet operator&(const VarSet& o) const { return VarSet(same(o), mask_ & o.mask_); }
    /// Set difference.
    VarSet operator-(const VarSet& o) const { return VarSet(same(o), mask_ & ~o.mask_); }

    /// Complement relative to `universe`.
    VarSet complement_in(const VarSet& universe) const { return universe - *this; }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    /// Smallest index, or 0 when empty.
    int front() const noexcept { return mask_ ? std::countr_zero(mask_) + 1 : 0; }

    /// Same set viewed in a larger (or equal) ambient ring.
    VarSet widened(int ambient_n) const {
        if (ambient_n < n_) throw PreconditionError("VarSet::widened: cannot shrink ambient");
        return VarSet(ambient_n, mask_);
    }

    friend bool operator==(const VarSet& a, const VarSet& b) noexcept {
        return a.mask_ == b.mask_ && a.n_ == b.n_;
    }

    /// Canonical order: by size, then lexicographically on the ascending
    /// index list.
    friend bool canonical_less(const VarSet& a, const VarSet& b) noexcept {
        return canonical_less(a.mask_, b.mask_);
    }

    static bool canonical_less(std::uint64_t a, std::uint64_t b) noexcept {
        int sa = std::popcount(a), sb = std::popcount(b);
        if (sa != sb) return sa < sb;
        std::uint64_t d = a ^ b;
        if (!d) return false;
        return (a & d & (~d + 1)) != 0;
    }

    /// "x1 x3" style (space separated); empty string for the empty set.
    std::string to_string(const char* sep = " ") const {
        std::string s;
        for (int i : indices()) {
            if (!s.empty()) s += sep;
            s += "x" + std::to_string(i);
        }
        return s;
    }

private:
    int same(const VarSet& o) const {
        if (o.n_ != n_)
            throw PreconditionError("VarSet: ambient mismatch (" + std::to_string(n_) + " vs " +
                                    std::to_string(o.n_) + ")");
        return n_;
    }

    std::uint64_t mask_ = 0;
    int n_ = 0;
};

struct VarSetCanonicalLess {
    bool operator()(const VarSet& a, const VarSet& b) const noexcept { return canonical_less(a, b); }
};

}  // namespace arank

template <>
struct std::hash<arank::VarSet> {
    std::size_t operator()(const arank::VarSet& s) const noexcept {
        return std::hash<std::uint64_t>{}(s.mask()) ^ (static_cast<std::size_t>(s.ambient()) << 58);
    }
};
