#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arank/errors.hpp"
#include "arank/polynomial.hpp"

namespace arank {

enum class OrderKind { DegRevLex, Lex, Elimination };

/// A monomial order on K[x1..xn]. `precedence()` lists the variables from
/// most to least significant. An elimination order compares the leading
/// block by degrevlex first and breaks ties by degrevlex on the rest.
class MonomialOrder {
public:
    static MonomialOrder degrevlex(int n) { return MonomialOrder(OrderKind::DegRevLex, identity(n), 0); }
    static MonomialOrder lex(int n) { return MonomialOrder(OrderKind::Lex, identity(n), 0); }

    /// Variables in `block` are greater than all others.
    static MonomialOrder elimination(int n, const std::vector<int>& block) {
        std::vector<int> prec = block;
        for (int i = 1; i <= n; ++i)
            if (std::find(block.begin(), block.end(), i) == block.end()) prec.push_back(i);
        return MonomialOrder(OrderKind::Elimination, prec, block.size());
    }

    static MonomialOrder with_precedence(OrderKind kind, std::vector<int> precedence,
                                         std::size_t block_size = 0) {
        return MonomialOrder(kind, std::move(precedence), block_size);
    }

    static MonomialOrder from_name(const std::string& name, int n) {
        if (name == "degrevlex") return degrevlex(n);
        if (name == "lex") return lex(n);
        throw PreconditionError("unknown monomial order '" + name + "'");
    }

    OrderKind kind() const noexcept { return kind_; }
    int num_vars() const noexcept { return static_cast<int>(prec_.size()); }
    const std::vector<int>& precedence() const noexcept { return prec_; }

    std::string name() const {
        switch (kind_) {
            case OrderKind::DegRevLex: return "degrevlex";
            case OrderKind::Lex: return "lex";
            case OrderKind::Elimination: return "elimination";
        }
        return "?";
    }

    /// >0 if a > b, <0 if a < b, 0 if equal.
    int compare(const Term& a, const Term& b) const noexcept {
        switch (kind_) {
            case OrderKind::DegRevLex:
                if (plain_) return degrevlex_compare(a, b);
                return grevlex_on(a, b, 0, prec_.size());
            case OrderKind::Lex:
                for (int v : prec_)
                    if (a.exponent(v) != b.exponent(v)) return a.exponent(v) > b.exponent(v) ? 1 : -1;
                return 0;
            case OrderKind::Elimination: {
                int c = grevlex_on(a, b, 0, block_);
                return c != 0 ? c : grevlex_on(a, b, block_, prec_.size());
            }
        }
        return 0;
    }

    bool greater(const Term& a, const Term& b) const noexcept { return compare(a, b) > 0; }

private:
    MonomialOrder(OrderKind kind, std::vector<int> prec, std::size_t block)
        : kind_(kind), prec_(std::move(prec)), block_(block) {
        std::vector<int> sorted = prec_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i) + 1)
                throw PreconditionError("MonomialOrder: precedence is not a permutation of 1..n");
        if (block_ > prec_.size()) throw PreconditionError("MonomialOrder: block too large");
        plain_ = kind_ == OrderKind::DegRevLex && prec_ == identity(static_cast<int>(prec_.size()));
    }

    static std::vector<int> identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return v;
    }

    int grevlex_on(const Term& a, const Term& b, std::size_t lo, std::size_t hi) const noexcept {
        unsigned da = 0, db = 0;
        for (std::size_t k = lo; k < hi; ++k) {
            da += a.exponent(prec_[k]);
            db += b.exponent(prec_[k]);
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t k = hi; k > lo; --k) {
            int v = prec_[k - 1];
            if (a.exponent(v) != b.exponent(v)) return a.exponent(v) < b.exponent(v) ? 1 : -1;
        }
        return 0;
    }

    OrderKind kind_;
    std::vector<int> prec_;
    std::size_t block_ = 0;
    bool plain_ = false;
};

enum class SelectionStrategy { Normal, Sugar };

struct GroebnerOptions {
    bool track = false;  // keep each basis element's expression in the inputs
    SelectionStrategy strategy = SelectionStrategy::Normal;
    bool stop_on_unit = true;  // return {1} as soon as a constant appears
};

namespace detail {

using SortedTerms = std::vector<std::pair<Term, Rational>>;  // decreasing in some order

inline SortedTerms sort_by(const Polynomial& p, const MonomialOrder& order) {
    SortedTerms t = p.terms();
    std::sort(t.begin(), t.end(),
              [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
    return t;
}

struct OrderGreater {
    const MonomialOrder* order;
    bool operator()(const Term& a, const Term& b) const noexcept { return order->compare(a, b) > 0; }
};

struct Reducer {
    const SortedTerms* poly;
    std::size_t id;  // index reported in quotients
};

/// Reduces `f` by `reducers` (first divisor wins). With `full` every term is
/// reduced, otherwise only the leading one. Quotient terms per reducer id
/// are appended to `quotients` when it is non-null, so that
/// f = Σ q_id · reducer_id + remainder.
inline SortedTerms reduce(const SortedTerms& f, const std::vector<Reducer>& reducers,
                          const MonomialOrder& order, bool full,
                          std::map<std::size_t, SortedTerms>* quotients) {
    std::map<Term, Rational, OrderGreater> acc(OrderGreater{&order});
    for (const auto& [t, c] : f) acc.emplace(t, c);
    SortedTerms remainder;
    while (!acc.empty()) {
        auto top = acc.begin();
        const Term t = top->first;
        const Rational c = top->second;
        const Reducer* hit = nullptr;
        for (const auto& r : reducers) {
            if (r.poly->front().first.divides(t)) {
                hit = &r;
                break;
            }
        }
        if (!hit) {
            remainder.emplace_back(t, c);
            acc.erase(top);
            if (!full) {
                for (const auto& kv : acc) remainder.push_back(kv);
                break;
            }
            continue;
        }
        const auto& g = *hit->poly;
        const Term mult = t.quotient(g.front().first);
        const Rational factor = c / g.front().second;
        acc.erase(top);
        for (std::size_t k = 1; k < g.size(); ++k) {
            Term s = g[k].first * mult;
            Rational d = factor * g[k].second;
            auto [it, inserted] = acc.try_emplace(s, 0);
            it->second -= d;
            if (it->second == 0) acc.erase(it);
        }
        if (quotients) (*quotients)[hit->id].emplace_back(mult, factor);
    }
    return remainder;
}

inline Polynomial to_polynomial(int n, SortedTerms terms) {
    return Polynomial::from_terms(n, std::move(terms));
}

}  // namespace detail

/// f = Σ cofactors[k]·gens[k] + remainder, with no remainder term divisible
/// by a leading term of the generators.
struct DivisionResult {
    std::vector<Polynomial> cofactors;
    Polynomial remainder;
};

inline int common_ambient(const std::vector<Polynomial>& ps, int at_least = 0) {
    int n = at_least;
    for (const auto& p : ps) n = std::max(n, p.ambient());
    return n;
}

/// The multivariate division algorithm.
inline DivisionResult divide_with_cofactors(const Polynomial& f, const std::vector<Polynomial>& gens,
                                            const MonomialOrder& order) {
    const int n = f.ambient();
    std::vector<detail::SortedTerms> sorted;
    for (const auto& g : gens) {
        if (g.ambient() != n) throw PreconditionError("divide_with_cofactors: ambient mismatch");
        if (g.is_zero()) throw PreconditionError("divide_with_cofactors: zero divisor");
        sorted.push_back(detail::sort_by(g, order));
    }
    std::vector<detail::Reducer> reducers;
    for (std::size_t k = 0; k < sorted.size(); ++k) reducers.push_back({&sorted[k], k});
    std::map<std::size_t, detail::SortedTerms> q;
    auto rem = detail::reduce(detail::sort_by(f, order), reducers, order, true, &q);
    DivisionResult out{std::vector<Polynomial>(gens.size(), Polynomial(n)),
                       detail::to_polynomial(n, std::move(rem))};
    for (auto& [k, terms] : q) out.cofactors[k] = detail::to_polynomial(n, std::move(terms));
    return out;
}

/// A reduced Gröbner basis. When built with tracking, expression(k)[j] are
/// polynomials with Σ_j expression(k)[j]·generators()[j] = elements()[k].
class GroebnerBasis {
public:
    const MonomialOrder& order() const noexcept { return order_; }
    int ambient() const noexcept { return n_; }
    const std::vector<Polynomial>& elements() const noexcept { return elements_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }
    bool tracked() const noexcept { return tracked_; }
    const std::vector<Polynomial>& expression(std::size_t k) const { return expressions_.at(k); }
    bool is_unit() const noexcept { return elements_.size() == 1 && elements_[0].is_constant(); }
    std::size_t size() const noexcept { return elements_.size(); }

    Polynomial normal_form(const Polynomial& f) const {
        auto rem = detail::reduce(detail::sort_by(f.widened(n_), order_), reducers(), order_, true, nullptr);
        return detail::to_polynomial(n_, std::move(rem));
    }

    /// Normal form plus quotients q_k with f = Σ q_k·elements()[k] + remainder.
    DivisionResult divide(const Polynomial& f) const {
        std::map<std::size_t, detail::SortedTerms> q;
        auto rem = detail::reduce(detail::sort_by(f.widened(n_), order_), reducers(), order_, true, &q);
        DivisionResult out{std::vector<Polynomial>(elements_.size(), Polynomial(n_)),
                           detail::to_polynomial(n_, std::move(rem))};
        for (auto& [k, terms] : q) out.cofactors[k] = detail::to_polynomial(n_, std::move(terms));
        return out;
    }

    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    const detail::SortedTerms& sorted_element(std::size_t k) const { return sorted_.at(k); }

private:
    friend class BuchbergerEngine;

    std::vector<detail::Reducer> reducers() const {
        std::vector<detail::Reducer> rs;
        for (std::size_t k = 0; k < sorted_.size(); ++k) rs.push_back({&sorted_[k], k});
        return rs;
    }

    MonomialOrder order_ = MonomialOrder::degrevlex(0);
    int n_ = 0;
    std::vector<Polynomial> generators_;
    std::vector<Polynomial> elements_;
    std::vector<detail::SortedTerms> sorted_;
    std::vector<std::vector<Polynomial>> expressions_;
    bool tracked_ = false;
};

/// Buchberger's algorithm with the Gebauer-Möller pair criteria (which
/// subsume the coprime-leading-term criterion). Elements are kept monic.
class BuchbergerEngine {
public:
    BuchbergerEngine(MonomialOrder order, int ambient_n, GroebnerOptions opts = {})
        : order_(std::move(order)), n_(ambient_n), opts_(opts) {
        if (order_.num_vars() < n_)
            throw PreconditionError("BuchbergerEngine: order has fewer variables than the ring");
    }

    /// Resume from a finished basis; its S-pairs are known to reduce to 0.
    static BuchbergerEngine resume(const GroebnerBasis& gb, GroebnerOptions opts = {}) {
        BuchbergerEngine e(gb.order_, gb.n_, opts);
        e.opts_.track = gb.tracked_ && opts.track;
        e.inputs_ = gb.generators_;
        for (std::size_t k = 0; k < gb.sorted_.size(); ++k) {
            Element el;
            el.poly = gb.sorted_[k];
            el.sugar = el.poly.front().first.degree();
            if (e.opts_.track) el.expr = gb.expressions_[k];
            e.elements_.push_back(std::move(el));
        }
        e.unit_ = gb.is_unit();
        return e;
    }

    void add(const Polynomial& f) {
        if (f.ambient() > n_) throw PreconditionError("BuchbergerEngine::add: ambient mismatch");
        Polynomial g = f.widened(n_);
        const std::size_t idx = inputs_.size();
        inputs_.push_back(g);
        for (auto& el : elements_)
            if (opts_.track) el.expr.push_back(Polynomial(n_));
        if (unit_) return;
        std::vector<Polynomial> expr;
        if (opts_.track) {
            expr.assign(inputs_.size(), Polynomial(n_));
            expr[idx] = Polynomial::constant(n_, 1);
        }
        auto terms = detail::sort_by(g, order_);
        unsigned sugar = g.total_degree();
        insert_reduced(std::move(terms), std::move(expr), sugar);
    }

    void run() {
        while (!pairs_.empty() && !unit_) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs_.size(); ++k)
                if (pair_less(pairs_[k], pairs_[best])) best = k;
            Pair p = pairs_[best];
            pairs_[best] = pairs_.back();
            pairs_.pop_back();
            process_pair(p);
        }
    }

    GroebnerBasis finish() {
        run();
        GroebnerBasis gb;
        gb.order_ = order_;
        gb.n_ = n_;
        gb.generators_ = inputs_;
        gb.tracked_ = opts_.track;
        std::vector<std::size_t> live;
        for (std::size_t k = 0; k < elements_.size(); ++k)
            if (elements_[k].active) live.push_back(k);
        if (unit_) {
            live = {unit_index_};
        }
        std::sort(live.begin(), live.end(), [&](std::size_t a, std::size_t b) {
            return order_.compare(elements_[a].poly.front().first, elements_[b].poly.front().first) < 0;
        });
        // Tail-reduce every element against the others.
        for (std::size_t a : live) {
            std::vector<detail::Reducer> rs;
            for (std::size_t b : live)
                if (b != a) rs.push_back({&elements_[b].poly, b});
            auto& el = elements_[a];
            detail::SortedTerms tail(el.poly.begin() + 1, el.poly.end());
            std::map<std::size_t, detail::SortedTerms> q;
            auto reduced = detail::reduce(tail, rs, order_, true, opts_.track ? &q : nullptr);
            detail::SortedTerms poly;
            poly.reserve(reduced.size() + 1);
            poly.push_back(el.poly.front());
            for (auto& tc : reduced) poly.push_back(std::move(tc));
            el.poly = std::move(poly);
            if (opts_.track) subtract_quotients(el.expr, q);
        }
        for (std::size_t k : live) {
            gb.sorted_.push_back(elements_[k].poly);
            gb.elements_.push_back(detail::to_polynomial(n_, elements_[k].poly));
            if (opts_.track) gb.expressions_.push_back(elements_[k].expr);
        }
        return gb;
    }

private:
    struct Element {
        detail::SortedTerms poly;  // monic
        std::vector<Polynomial> expr;
        unsigned sugar = 0;
        bool active = true;
    };
    struct Pair {
        std::size_t i, j;
        Term lcm;
        unsigned sugar;
    };

    bool pair_less(const Pair& a, const Pair& b) const {
        if (opts_.strategy == SelectionStrategy::Sugar && a.sugar != b.sugar) return a.sugar < b.sugar;
        return order_.compare(a.lcm, b.lcm) < 0;
    }

    const Term& lm(std::size_t k) const { return elements_[k].poly.front().first; }

    std::vector<detail::Reducer> active_reducers() const {
        std::vector<detail::Reducer> rs;
        for (std::size_t k = 0; k < elements_.size(); ++k)
            if (elements_[k].active) rs.push_back({&elements_[k].poly, k});
        return rs;
    }

    void subtract_quotients(std::vector<Polynomial>& expr,
                            std::map<std::size_t, detail::SortedTerms>& q) const {
        for (auto& [id, terms] : q) {
            Polynomial qk = detail::to_polynomial(n_, std::move(terms));
            const auto& other = elements_[id].expr;
            for (std::size_t j = 0; j < expr.size(); ++j)
                if (!other[j].is_zero()) expr[j] -= qk * other[j];
        }
    }

    void insert_reduced(detail::SortedTerms f, std::vector<Polynomial> expr, unsigned sugar) {
        std::map<std::size_t, detail::SortedTerms> q;
        auto r = detail::reduce(f, active_reducers(), order_, true, opts_.track ? &q : nullptr);
        if (r.empty()) return;
        if (opts_.track) subtract_quotients(expr, q);
        Rational lc = r.front().second;
        if (lc != 1) {
            Rational inv = 1 / lc;
            for (auto& [t, c] : r) c *= inv;
            for (auto& e : expr) e = e.scaled(inv);
        }
        insert(std::move(r), std::move(expr), sugar);
    }

    void insert(detail::SortedTerms poly, std::vector<Polynomial> expr, unsigned sugar) {
        const std::size_t h = elements_.size();
        elements_.push_back(Element{std::move(poly), std::move(expr), sugar, true});
        const Term lh = lm(h);
        if (lh.is_one()) {
            unit_ = true;
            unit_index_ = h;
            if (opts_.stop_on_unit) {
                for (auto& el : elements_) el.active = false;
                elements_[h].active = true;
                pairs_.clear();
                return;
            }
        }

        // Gebauer-Möller update.
        std::vector<std::size_t> cand;
        for (std::size_t g = 0; g < h; ++g)
            if (elements_[g].active) cand.push_back(g);
        std::vector<Pair> new_pairs;
        std::vector<char> keep(cand.size(), 0);
        for (std::size_t a = 0; a < cand.size(); ++a) {
            Term la = lh.lcm(lm(cand[a]));
            if (lh.coprime(lm(cand[a]))) {
                keep[a] = 1;
                continue;
            }
            bool dominated = false;
            for (std::size_t b = 0; b < cand.size() && !dominated; ++b) {
                if (b == a) continue;
                Term lb = lh.lcm(lm(cand[b]));
                if (!lb.divides(la)) continue;
                // Equal lcms: keep only one representative (the earlier kept one).
                if (lb == la) dominated = b < a ? keep[b] != 0 : false;
                else dominated = true;
            }
            keep[a] = dominated ? 0 : 1;
        }
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (!keep[a]) continue;
            const std::size_t g = cand[a];
            if (lh.coprime(lm(g))) continue;
            Term l = lh.lcm(lm(g));
            unsigned s = std::max(elements_[g].sugar + l.degree() - lm(g).degree(),
                                  sugar_of(h) + l.degree() - lh.degree());
            new_pairs.push_back({g, h, l, s});
        }
        std::erase_if(pairs_, [&](const Pair& p) {
            if (!lh.divides(p.lcm)) return false;
            return !(lm(p.i).lcm(lh) == p.lcm) && !(lm(p.j).lcm(lh) == p.lcm);
        });
        for (auto& p : new_pairs) pairs_.push_back(std::move(p));
        for (std::size_t g = 0; g < h; ++g)
            if (elements_[g].active && lh.divides(lm(g))) elements_[g].active = false;
    }

    unsigned sugar_of(std::size_t k) const { return elements_[k].sugar; }

    void process_pair(const Pair& p) {
        const auto& a = elements_[p.i];
        const auto& b = elements_[p.j];
        Term ma = p.lcm.quotient(lm(p.i));
        Term mb = p.lcm.quotient(lm(p.j));
        std::map<Term, Rational, detail::OrderGreater> acc(detail::OrderGreater{&order_});
        for (std::size_t k = 1; k < a.poly.size(); ++k) acc.emplace(a.poly[k].first * ma, a.poly[k].second);
        for (std::size_t k = 1; k < b.poly.size(); ++k) {
            auto [it, ins] = acc.try_emplace(b.poly[k].first * mb, 0);
            it->second -= b.poly[k].second;
            if (it->second == 0) acc.erase(it);
        }
        detail::SortedTerms s(acc.begin(), acc.end());
        std::vector<Polynomial> expr;
        if (opts_.track) {
            expr.assign(inputs_.size(), Polynomial(n_));
            for (std::size_t j = 0; j < inputs_.size(); ++j) {
                Polynomial x = a.expr[j].times_term(ma) - b.expr[j].times_term(mb);
                expr[j] = std::move(x);
            }
        }
        if (s.empty()) return;
        insert_reduced(std::move(s), std::move(expr), p.sugar);
    }

    MonomialOrder order_;
    int n_;
    GroebnerOptions opts_;
    std::vector<Polynomial> inputs_;
    std::vector<Element> elements_;
    std::vector<Pair> pairs_;
    bool unit_ = false;
    std::size_t unit_index_ = 0;
};

/// Reduced Gröbner basis of (gens). Zero generators are ignored.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                GroebnerOptions opts = {}) {
    BuchbergerEngine engine(order, common_ambient(gens), opts);
    for (const auto& g : gens) engine.add(g);
    return engine.finish();
}

inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens) {
    int n = common_ambient(gens);
    return buchberger(gens, MonomialOrder::degrevlex(n));
}

/// Every S-polynomial of the basis reduces to zero modulo the basis.
inline bool s_polynomials_reduce_to_zero(const GroebnerBasis& gb) {
    const auto& order = gb.order();
    for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
            const auto& a = gb.sorted_element(i);
            const auto& b = gb.sorted_element(j);
            Term l = a.front().first.lcm(b.front().first);
            Polynomial pa = detail::to_polynomial(gb.ambient(), a).times_term(l.quotient(a.front().first),
                                                                               1 / a.front().second);
            Polynomial pb = detail::to_polynomial(gb.ambient(), b).times_term(l.quotient(b.front().first),
                                                                               1 / b.front().second);
            if (!gb.normal_form(pa - pb).is_zero()) return false;
        }
    (void)order;
    return true;
}

/// Every tracked expression recombines to its basis element.
inline bool expressions_recombine(const GroebnerBasis& gb) {
    if (!gb.tracked()) return false;
    for (std::size_t k = 0; k < gb.size(); ++k) {
        Polynomial sum(gb.ambient());
        for (std::size_t j = 0; j < gb.generators().size(); ++j)
            sum += gb.expression(k)[j] * gb.generators()[j];
        if (!(sum == gb.elements()[k])) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Membership

/// Σ cofactors[k]·generators[k] = target, exactly.
struct MembershipCertificate {
    std::vector<Polynomial> generators;
    std::vector<Polynomial> cofactors;
    Polynomial target;

    bool recombines() const {
        if (cofactors.size() != generators.size()) return false;
        Polynomial sum(target.ambient());
        for (std::size_t k = 0; k < generators.size(); ++k)
            sum += cofactors[k].widened(target.ambient()) * generators[k].widened(target.ambient());
        return sum == target;
    }
};

struct PowerCertificate {
    unsigned exponent = 0;
    MembershipCertificate certificate;

    bool recombines() const { return exponent >= 1 && certificate.recombines(); }
};

/// Membership certificate for f against a tracked basis, or nullopt.
inline std::optional<MembershipCertificate> membership(const Polynomial& f, const GroebnerBasis& gb) {
    if (!gb.tracked()) throw PreconditionError("membership: basis was built without tracking");
    const int n = gb.ambient();
    DivisionResult d = gb.divide(f);
    if (!d.remainder.is_zero()) return std::nullopt;
    MembershipCertificate cert{gb.generators(),
                               std::vector<Polynomial>(gb.generators().size(), Polynomial(n)),
                               f.widened(n)};
    for (std::size_t e = 0; e < gb.size(); ++e) {
        if (d.cofactors[e].is_zero()) continue;
        for (std::size_t k = 0; k < cert.cofactors.size(); ++k)
            if (!gb.expression(e)[k].is_zero()) cert.cofactors[k] += d.cofactors[e] * gb.expression(e)[k];
    }
    if (!cert.recombines()) throw InternalError("membership: certificate failed to recombine");
    return cert;
}

inline std::optional<MembershipCertificate> membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                                                       const MonomialOrder& order) {
    GroebnerOptions opts;
    opts.track = true;
    int n = common_ambient(gens, f.ambient());
    std::vector<Polynomial> g;
    for (const auto& x : gens) g.push_back(x.widened(n));
    if (g.empty()) {
        if (f.is_zero()) return MembershipCertificate{{}, {}, f.widened(n)};
        return std::nullopt;
    }
    BuchbergerEngine engine(order.num_vars() >= n ? order : MonomialOrder::degrevlex(n), n, opts);
    for (const auto& x : g) engine.add(x);
    return membership(f.widened(n), engine.finish());
}

inline std::optional<MembershipCertificate> membership(const Polynomial& f, const std::vector<Polynomial>& gens) {
    return membership(f, gens, MonomialOrder::degrevlex(common_ambient(gens, f.ambient())));
}

/// Radical membership via the Rabinowitsch trick: f ∈ √(gens) iff
/// 1 ∈ (gens, 1 - y·f) with y a fresh variable. The basis of (gens) is
/// computed once, in the extended ring, and reused for every query.
class RadicalOracle {
public:
    struct Options {
        /// true: slack variable in its own leading block (eliminated first);
        /// false: plain degrevlex with the slack variable last.
        bool slack_block = true;
        SelectionStrategy strategy = SelectionStrategy::Sugar;
    };

    explicit RadicalOracle(const std::vector<Polynomial>& gens, int ambient_n = -1)
        : RadicalOracle(gens, ambient_n, Options{}) {}

    RadicalOracle(const std::vector<Polynomial>& gens, int ambient_n, Options opts) : opts_(opts) {
        n_ = common_ambient(gens, std::max(ambient_n, 0));
        if (n_ + 1 > kMaxPolyVars) throw PreconditionError("RadicalOracle: too many variables");
        slack_ = n_ + 1;
        MonomialOrder order = opts_.slack_block ? MonomialOrder::elimination(slack_, {slack_})
                                                : MonomialOrder::degrevlex(slack_);
        GroebnerOptions go;
        go.strategy = opts_.strategy;
        BuchbergerEngine engine(order, slack_, go);
        for (const auto& g : gens) engine.add(g.widened(slack_));
        base_ = engine.finish();
    }

    int ambient() const noexcept { return n_; }
    const GroebnerBasis& base() const noexcept { return base_; }

    bool contains(const Polynomial& f) const {
        if (f.ambient() > n_) throw PreconditionError("RadicalOracle::contains: ambient mismatch");
        if (f.is_zero() || base_.is_unit()) return true;
        Polynomial fw = f.widened(slack_);
        // Cheap exits: f itself in the ideal.
        if (base_.contains(fw)) return true;
        GroebnerOptions go;
        go.strategy = opts_.strategy;
        BuchbergerEngine engine = BuchbergerEngine::resume(base_, go);
        engine.add(Polynomial::constant(slack_, 1) - var(slack_, slack_) * fw);
        return engine.finish().is_unit();
    }

private:
    Options opts_;
    int n_ = 0;
    int slack_ = 1;
    GroebnerBasis base_;
};

inline bool radical_membership(const Polynomial& f, const std::vector<Polynomial>& gens) {
    return RadicalOracle(gens, f.ambient()).contains(f);
}

/// Smallest ℓ ≤ lmax with m^ℓ ∈ (gens), with its certificate.
inline PowerCertificate power_membership(const Polynomial& m, const std::vector<Polynomial>& gens,
                                         unsigned lmax, OrderKind kind = OrderKind::DegRevLex) {
    int n = common_ambient(gens, m.ambient());
    GroebnerOptions opts;
    opts.track = true;
    opts.strategy = SelectionStrategy::Sugar;
    BuchbergerEngine engine(kind == OrderKind::Lex ? MonomialOrder::lex(n) : MonomialOrder::degrevlex(n), n, opts);
    for (const auto& g : gens) engine.add(g.widened(n));
    GroebnerBasis gb = engine.finish();
    Polynomial mw = m.widened(n);
    Polynomial power = Polynomial::constant(n, 1);
    for (unsigned l = 1; l <= lmax; ++l) {
        power = power * mw;
        if (auto cert = membership(power, gb)) return PowerCertificate{l, std::move(*cert)};
    }
    throw PreconditionError("power_membership: no power m^l with l <= " + std::to_string(lmax) +
                            " lies in the ideal");
}

inline PowerCertificate power_membership(const SquarefreeMonomial& m, const std::vector<Polynomial>& gens,
                                         unsigned lmax, OrderKind kind = OrderKind::DegRevLex) {
    return power_membership(Polynomial::of(m), gens, lmax, kind);
}

}  // namespace arank
