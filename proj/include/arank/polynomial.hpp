#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "arank/errors.hpp"
#include "arank/monomial_ideal.hpp"

namespace arank {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Upper bound on the number of variables a polynomial may use (including
/// the slack variable added by radical membership tests).
inline constexpr int kMaxPolyVars = 32;

/// A monomial x1^e1 ... xn^en as a dense exponent vector. Index 1-based.
class Term {
public:
    Term() = default;

    static Term variable(int i, unsigned e = 1) {
        Term t;
        t.set(i, e);
        return t;
    }

    static Term of(const SquarefreeMonomial& m) {
        Term t;
        for (int i : m.support().indices()) t.set(i, 1);
        return t;
    }

    unsigned exponent(int i) const noexcept { return e_[static_cast<std::size_t>(i - 1)]; }

    void set(int i, unsigned e) {
        if (i < 1 || i > kMaxPolyVars)
            throw PreconditionError("Term: variable index " + std::to_string(i) + " outside 1.." +
                                    std::to_string(kMaxPolyVars));
        if (e > 0xFFFF) throw PreconditionError("Term: exponent overflow");
        auto& slot = e_[static_cast<std::size_t>(i - 1)];
        deg_ = deg_ - slot + e;
        slot = static_cast<std::uint16_t>(e);
        if (e) support_ |= std::uint32_t{1} << (i - 1);
        else support_ &= ~(std::uint32_t{1} << (i - 1));
    }

    unsigned degree() const noexcept { return deg_; }
    std::uint32_t support_mask() const noexcept { return support_; }
    bool is_one() const noexcept { return deg_ == 0; }

    /// Largest variable index with a nonzero exponent (0 for the unit).
    int max_index() const noexcept { return support_ ? 32 - std::countl_zero(support_) : 0; }

    bool divides(const Term& o) const noexcept {
        if ((support_ & ~o.support_) != 0 || deg_ > o.deg_) return false;
        for (std::uint32_t m = support_; m; m &= m - 1) {
            auto k = static_cast<std::size_t>(std::countr_zero(m));
            if (e_[k] > o.e_[k]) return false;
        }
        return true;
    }

    bool coprime(const Term& o) const noexcept { return (support_ & o.support_) == 0; }

    Term operator*(const Term& o) const {
        Term t;
        for (std::uint32_t m = support_ | o.support_; m; m &= m - 1) {
            auto k = static_cast<std::size_t>(std::countr_zero(m));
            unsigned e = unsigned{e_[k]} + o.e_[k];
            if (e > 0xFFFF) throw PreconditionError("Term: exponent overflow");
            t.e_[k] = static_cast<std::uint16_t>(e);
        }
        t.deg_ = deg_ + o.deg_;
        t.support_ = support_ | o.support_;
        return t;
    }

    /// this / o; requires o | this.
    Term quotient(const Term& o) const {
        Term t;
        for (std::uint32_t m = support_; m; m &= m - 1) {
            auto k = static_cast<std::size_t>(std::countr_zero(m));
            t.e_[k] = static_cast<std::uint16_t>(e_[k] - o.e_[k]);
            if (t.e_[k]) t.support_ |= std::uint32_t{1} << k;
        }
        t.deg_ = deg_ - o.deg_;
        return t;
    }

    Term lcm(const Term& o) const {
        Term t;
        for (std::uint32_t m = support_ | o.support_; m; m &= m - 1) {
            auto k = static_cast<std::size_t>(std::countr_zero(m));
            t.e_[k] = std::max(e_[k], o.e_[k]);
            t.deg_ += t.e_[k];
        }
        t.support_ = support_ | o.support_;
        return t;
    }

    Term pow(unsigned k) const {
        Term t;
        for (std::uint32_t m = support_; m; m &= m - 1) {
            auto idx = static_cast<std::size_t>(std::countr_zero(m));
            t.set(static_cast<int>(idx) + 1, unsigned{e_[idx]} * k);
        }
        return t;
    }

    friend bool operator==(const Term& a, const Term& b) noexcept { return a.e_ == b.e_; }

    /// Graded reverse lexicographic comparison with x1 > x2 > ... ;
    /// returns >0 when a is larger.
    friend int degrevlex_compare(const Term& a, const Term& b) noexcept {
        if (a.deg_ != b.deg_) return a.deg_ > b.deg_ ? 1 : -1;
        std::uint32_t diff_support = a.support_ | b.support_;
        for (int k = 31 - std::countl_zero(diff_support | 1u); k >= 0; --k) {
            auto uk = static_cast<std::size_t>(k);
            if (a.e_[uk] != b.e_[uk]) return a.e_[uk] < b.e_[uk] ? 1 : -1;
        }
        return 0;
    }

    /// "x1^2*x3"; the unit prints as "1".
    std::string to_string() const {
        if (is_one()) return "1";
        std::string s;
        for (std::uint32_t m = support_; m; m &= m - 1) {
            auto k = static_cast<std::size_t>(std::countr_zero(m));
            if (!s.empty()) s += '*';
            s += "x" + std::to_string(k + 1);
            if (e_[k] > 1) s += "^" + std::to_string(e_[k]);
        }
        return s;
    }

private:
    std::array<std::uint16_t, kMaxPolyVars> e_{};
    unsigned deg_ = 0;
    std::uint32_t support_ = 0;
};

struct TermDegRevLexGreater {
    bool operator()(const Term& a, const Term& b) const noexcept { return degrevlex_compare(a, b) > 0; }
};

/// A polynomial over Q in `ambient()` variables. Terms are kept sorted in
/// decreasing degrevlex order with no zero coefficients, so equality is
/// structural.
class Polynomial {
public:
    using TermList = std::vector<std::pair<Term, Rational>>;

    Polynomial() = default;
    explicit Polynomial(int ambient_n) : n_(check_n(ambient_n)) {}

    static Polynomial constant(int ambient_n, const Rational& c) {
        Polynomial p(ambient_n);
        if (c != 0) p.terms_.emplace_back(Term{}, c);
        return p;
    }

    static Polynomial variable(int ambient_n, int i) {
        if (i < 1 || i > ambient_n)
            throw PreconditionError("Polynomial::variable: x" + std::to_string(i) + " outside ring");
        return monomial(ambient_n, Term::variable(i), 1);
    }

    static Polynomial monomial(int ambient_n, const Term& t, const Rational& c = 1) {
        if (t.max_index() > ambient_n)
            throw PreconditionError("Polynomial::monomial: term uses variables outside the ring");
        Polynomial p(ambient_n);
        if (c != 0) p.terms_.emplace_back(t, c);
        return p;
    }

    static Polynomial of(const SquarefreeMonomial& m) {
        return monomial(m.ambient(), Term::of(m));
    }

    /// Builds from arbitrary (term, coefficient) pairs; combines duplicates.
    static Polynomial from_terms(int ambient_n, TermList terms) {
        Polynomial p(ambient_n);
        for (const auto& [t, c] : terms)
            if (t.max_index() > ambient_n)
                throw PreconditionError("Polynomial: term " + t.to_string() + " outside ring of " +
                                        std::to_string(ambient_n) + " variables");
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    int ambient() const noexcept { return n_; }
    const TermList& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

    unsigned total_degree() const noexcept {
        unsigned d = 0;
        for (const auto& [t, c] : terms_) d = std::max(d, t.degree());
        return d;
    }

    Rational coefficient(const Term& t) const {
        for (const auto& [s, c] : terms_)
            if (s == t) return c;
        return 0;
    }

    /// Largest variable index occurring.
    int max_index() const noexcept {
        int m = 0;
        for (const auto& [t, c] : terms_) m = std::max(m, t.max_index());
        return m;
    }

    /// Same polynomial in a ring with at least as many variables.
    Polynomial widened(int ambient_n) const {
        if (ambient_n < max_index())
            throw PreconditionError("Polynomial::widened: ring too small");
        Polynomial p = *this;
        p.n_ = check_n(ambient_n);
        return p;
    }

    Polynomial operator-() const {
        Polynomial p = *this;
        for (auto& [t, c] : p.terms_) c = -c;
        return p;
    }

    Polynomial operator+(const Polynomial& o) const { return combine(o, 1); }
    Polynomial operator-(const Polynomial& o) const { return combine(o, -1); }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    Polynomial operator*(const Polynomial& o) const {
        same_ring(o);
        TermList out;
        out.reserve(terms_.size() * o.terms_.size());
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : o.terms_) out.emplace_back(a * b, ca * cb);
        Polynomial p(n_);
        p.terms_ = std::move(out);
        p.normalize();
        return p;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Rational& c) const {
        if (c == 0) return Polynomial(n_);
        Polynomial p = *this;
        for (auto& [t, x] : p.terms_) x *= c;
        return p;
    }

    /// Multiply by c·t.
    Polynomial times_term(const Term& t, const Rational& c = 1) const {
        if (c == 0) return Polynomial(n_);
        if (t.max_index() > n_) throw PreconditionError("Polynomial::times_term: outside ring");
        Polynomial p(n_);
        p.terms_.reserve(terms_.size());
        for (const auto& [s, x] : terms_) p.terms_.emplace_back(s * t, x * c);
        return p;  // multiplication by a term preserves the order
    }

    Polynomial pow(unsigned k) const {
        Polynomial result = constant(n_, 1);
        Polynomial base = *this;
        while (k) {
            if (k & 1u) result = result * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return result;
    }

    /// Replace x_i by `value`.
    Polynomial substitute(int i, const Polynomial& value) const {
        same_ring(value);
        std::map<unsigned, Polynomial> powers;
        Polynomial out(n_);
        for (const auto& [t, c] : terms_) {
            unsigned e = t.exponent(i);
            Term rest = t;
            rest.set(i, 0);
            Polynomial piece = monomial(n_, rest, c);
            if (e) {
                auto it = powers.find(e);
                if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
                piece = piece * it->second;
            }
            out += piece;
        }
        return out;
    }

    /// Rename variables: x_i -> x_{perm[i-1]} in a ring of `ambient_n` variables.
    Polynomial permuted(const std::vector<int>& perm, int ambient_n) const {
        if (static_cast<int>(perm.size()) < max_index())
            throw PreconditionError("Polynomial::permuted: permutation too short");
        TermList out;
        out.reserve(terms_.size());
        for (const auto& [t, c] : terms_) {
            Term s;
            for (std::uint32_t m = t.support_mask(); m; m &= m - 1) {
                int i = std::countr_zero(m) + 1;
                s.set(perm[static_cast<std::size_t>(i - 1)], t.exponent(i));
            }
            out.emplace_back(s, c);
        }
        return from_terms(ambient_n, std::move(out));
    }

    /// Exact evaluation; point[i-1] is the value of x_i.
    Rational evaluate(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) < max_index())
            throw PreconditionError("Polynomial::evaluate: point too short");
        Rational sum = 0;
        for (const auto& [t, c] : terms_) {
            Rational v = c;
            for (std::uint32_t m = t.support_mask(); m; m &= m - 1) {
                int k = std::countr_zero(m);
                Rational x = point[static_cast<std::size_t>(k)];
                for (unsigned e = t.exponent(k + 1); e; --e) v *= x;
                if (v == 0) break;
            }
            sum += v;
        }
        return sum;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;  // ambient-insensitive, as for ideals of K[x1, x2, ...]
    }

    /// "x1*x4*x5 - x1^2*x2^2*x3" style, terms in decreasing degrevlex order.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [t, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) s += "-";
            } else {
                s += a < 0 ? " - " : " + ";
            }
            if (a < 0) a = -a;
            if (t.is_one()) {
                s += a.str();
            } else {
                if (a != 1) s += a.str() + "*";
                s += t.to_string();
            }
            first = false;
        }
        return s;
    }

private:
    static int check_n(int n) {
        if (n < 0 || n > kMaxPolyVars)
            throw PreconditionError("Polynomial: ambient " + std::to_string(n) + " outside 0.." +
                                    std::to_string(kMaxPolyVars));
        return n;
    }

    void same_ring(const Polynomial& o) const {
        if (o.n_ != n_)
            throw PreconditionError("Polynomial: ambient mismatch (" + std::to_string(n_) + " vs " +
                                    std::to_string(o.n_) + ")");
    }

    Polynomial combine(const Polynomial& o, int sign) const {
        same_ring(o);
        Polynomial p(n_);
        p.terms_.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin(), b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            int cmp = a == terms_.end() ? -1 : b == o.terms_.end() ? 1 : degrevlex_compare(a->first, b->first);
            if (cmp > 0) {
                p.terms_.push_back(*a++);
            } else if (cmp < 0) {
                p.terms_.emplace_back(b->first, sign > 0 ? b->second : Rational(-b->second));
                ++b;
            } else {
                Rational c = sign > 0 ? a->second + b->second : a->second - b->second;
                if (c != 0) p.terms_.emplace_back(a->first, std::move(c));
                ++a;
                ++b;
            }
        }
        return p;
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const auto& x, const auto& y) { return degrevlex_compare(x.first, y.first) > 0; });
        TermList out;
        out.reserve(terms_.size());
        for (auto& tc : terms_) {
            if (!out.empty() && out.back().first == tc.first) out.back().second += tc.second;
            else out.push_back(std::move(tc));
        }
        std::erase_if(out, [](const auto& tc) { return tc.second == 0; });
        terms_ = std::move(out);
    }

    TermList terms_;
    int n_ = 0;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

/// Convenience: x_i in a ring of n variables.
inline Polynomial var(int ambient_n, int i) { return Polynomial::variable(ambient_n, i); }

// ---------------------------------------------------------------------------
// Text syntax: "x1*x4*x5 - 3/2*x1^2*x2^2*x3 + 7"

namespace detail {

class PolyLexer {
public:
    PolyLexer(std::string_view text, std::size_t line, std::size_t col0)
        : s_(text), line_(line), col0_(col0) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void advance() { ++pos_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col0_ + pos_); }

    Integer read_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    std::size_t pos() const { return pos_; }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t col0_;
};

}  // namespace detail

/// Parses the polynomial syntax. When `ambient_n` is negative the ring size
/// is the largest variable index used. `line`/`column` locate the text for
/// error messages.
inline Polynomial parse_polynomial(std::string_view text, int ambient_n = -1, std::size_t line = 1,
                                   std::size_t column = 1) {
    detail::PolyLexer lx(text, line, column);
    Polynomial::TermList terms;
    bool first = true;
    if (lx.at_end()) lx.fail("empty polynomial");
    while (!lx.at_end()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            lx.advance();
        } else if (!first) {
            lx.fail(std::string("expected '+' or '-', found '") + c + "'");
        }
        first = false;
        Rational coef = sign;
        Term t;
        bool need_factor = true;
        while (need_factor) {
            char f = lx.peek();
            if (f == 'x') {
                lx.advance();
                Integer idx = lx.read_uint();
                if (idx < 1 || idx > kMaxPolyVars) lx.fail("variable index out of range");
                unsigned e = 1;
                if (lx.peek() == '^') {
                    lx.advance();
                    Integer ee = lx.read_uint();
                    if (ee > 0xFFFF) lx.fail("exponent too large");
                    e = ee.convert_to<unsigned>();
                }
                int i = idx.convert_to<int>();
                t.set(i, t.exponent(i) + e);
            } else if (std::isdigit(static_cast<unsigned char>(f))) {
                Integer num = lx.read_uint();
                Integer den = 1;
                if (lx.peek() == '/') {
                    lx.advance();
                    den = lx.read_uint();
                    if (den == 0) lx.fail("zero denominator");
                }
                coef *= Rational(num, den);
            } else {
                lx.fail(f == '\0' ? "unexpected end of polynomial"
                                  : std::string("unexpected character '") + f + "'");
            }
            if (lx.peek() == '*') {
                lx.advance();
            } else {
                need_factor = false;
            }
        }
        terms.emplace_back(t, coef);
    }
    int n = ambient_n;
    if (n < 0) {
        n = 0;
        for (const auto& [t, c] : terms) n = std::max(n, t.max_index());
    }
    return Polynomial::from_terms(n, std::move(terms));
}

}  // namespace arank
