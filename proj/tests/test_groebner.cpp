#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace arank;

namespace {

Polynomial P(const char* s, int n) { return parse_polynomial(s, n); }

const std::vector<Polynomial> line4(int n = 4) { return {P("x1*x4", n), P("x1*x2 + x3*x4", n)}; }

GroebnerBasis tracked(const std::vector<Polynomial>& g, const MonomialOrder& order) {
    GroebnerOptions o;
    o.track = true;
    return buchberger(g, order, o);
}

}  // namespace

TEST_CASE("division with cofactors", "[division]") {
    auto d = divide_with_cofactors(P("x1^2", 1), {P("x1", 1)}, MonomialOrder::degrevlex(1));
    CHECK(d.cofactors[0] == P("x1", 1));
    CHECK(d.remainder.is_zero());
    auto e = divide_with_cofactors(P("x1*x2 + 1", 2), {P("x1", 2)}, MonomialOrder::degrevlex(2));
    CHECK(e.remainder == P("1", 2));
    CHECK(e.cofactors[0] == P("x2", 2));
    CHECK_THROWS_AS(divide_with_cofactors(P("x1", 1), {Polynomial(1)}, MonomialOrder::degrevlex(1)),
                    PreconditionError);
}

TEST_CASE("division recombines on random combinations", "[division][property]") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Polynomial> g;
        for (int k = 0; k < 3; ++k) g.push_back(oracle::random_polynomial(rng, 4, 3, 2, 4));
        if (std::any_of(g.begin(), g.end(), [](const Polynomial& p) { return p.is_zero(); })) continue;
        Polynomial f(4);
        for (const auto& x : g) f += oracle::random_polynomial(rng, 4, 2, 1, 3) * x;
        for (auto order : {MonomialOrder::degrevlex(4), MonomialOrder::lex(4)}) {
            auto d = divide_with_cofactors(f, g, order);
            Polynomial sum = d.remainder;
            for (std::size_t k = 0; k < g.size(); ++k) sum += d.cofactors[k] * g[k];
            CHECK(sum == f);
            // no remainder term is divisible by a leading term
            for (const auto& [t, c] : d.remainder.terms())
                for (const auto& x : g) CHECK_FALSE(detail::sort_by(x, order).front().first.divides(t));
        }
        auto gb = buchberger(g, MonomialOrder::degrevlex(4));
        CHECK(gb.contains(f));
    }
}

TEST_CASE("Groebner bases of simple ideals", "[buchberger]") {
    auto gb = buchberger({P("x1", 2), P("x2", 2)});
    CHECK(gb.elements() == std::vector<Polynomial>{P("x2", 2), P("x1", 2)});
    auto mono = buchberger({P("x1*x3", 4), P("x2*x4", 4)});
    CHECK(mono.size() == 2);
    CHECK(s_polynomials_reduce_to_zero(mono));
    auto unit = buchberger({P("x1", 2), P("x1 - 1", 2)});
    CHECK(unit.is_unit());
    auto line = tracked(line4(), MonomialOrder::degrevlex(4));
    CHECK(s_polynomials_reduce_to_zero(line));
    CHECK(expressions_recombine(line));
    CHECK(line.size() >= 2);
}

TEST_CASE("random bases satisfy Buchberger's criterion and recombine", "[buchberger][property]") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        // Lex bases of dense inputs grow quickly, so only degrevlex sees
        // exponents above one.
        const bool dense = trial % 2 == 1;
        std::vector<Polynomial> g;
        for (int k = 0; k < 3; ++k) g.push_back(oracle::random_polynomial(rng, 4, 3, dense ? 2 : 1, 3));
        std::vector<MonomialOrder> orders{MonomialOrder::degrevlex(4)};
        if (!dense) {
            orders.push_back(MonomialOrder::lex(4));
            orders.push_back(MonomialOrder::elimination(4, {2}));
        }
        for (const auto& order : orders) {
            for (auto strategy : {SelectionStrategy::Normal, SelectionStrategy::Sugar}) {
                GroebnerOptions o;
                o.track = true;
                o.strategy = strategy;
                auto gb = buchberger(g, order, o);
                CHECK(s_polynomials_reduce_to_zero(gb));
                CHECK(expressions_recombine(gb));
                for (const auto& x : g) CHECK(gb.contains(x));
            }
        }
    }
}

TEST_CASE("reduced bases do not depend on the strategy", "[buchberger][property]") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Polynomial> g;
        for (int k = 0; k < 3; ++k) g.push_back(oracle::random_polynomial(rng, 3, 3, 2, 3));
        GroebnerOptions normal, sugar;
        sugar.strategy = SelectionStrategy::Sugar;
        auto a = buchberger(g, MonomialOrder::degrevlex(3), normal);
        auto b = buchberger(g, MonomialOrder::degrevlex(3), sugar);
        CHECK(a.elements() == b.elements());
    }
}

TEST_CASE("membership certificates", "[membership]") {
    auto cert = membership(P("x1^2*x2^2", 4), line4());
    REQUIRE(cert);
    CHECK(cert->recombines());
    CHECK_FALSE(membership(P("x1*x2", 4), line4()));
    // The fixed certificate a11 = -x2x3, a12 = x1x2 is also valid.
    CHECK((P("-x2*x3", 4) * line4()[0] + P("x1*x2", 4) * line4()[1]) == P("x1^2*x2^2", 4));

    auto g = std::vector<Polynomial>{P("x1^2 + x2", 2), P("x2^3", 2)};
    auto first = membership(g[0], g);
    REQUIRE(first);
    CHECK(first->recombines());
    CHECK_FALSE(membership(P("x1", 2), std::vector<Polynomial>{}));
    CHECK(membership(Polynomial(2), std::vector<Polynomial>{}));
}

TEST_CASE("membership verdicts agree across orders", "[membership][property]") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Polynomial> g;
        for (int k = 0; k < 2; ++k) g.push_back(oracle::random_polynomial(rng, 3, 2, 2, 3));
        Polynomial f = (trial % 2) ? oracle::random_polynomial(rng, 3, 1, 2, 2) * g[0] + g[1]
                                   : oracle::random_polynomial(rng, 3, 3, 2, 3);
        auto a = membership(f, g, MonomialOrder::degrevlex(3));
        auto b = membership(f, g, MonomialOrder::lex(3));
        CHECK(a.has_value() == b.has_value());
        if (a) CHECK(a->recombines());
        if (b) CHECK(b->recombines());
    }
}

TEST_CASE("radical membership", "[radical]") {
    CHECK(radical_membership(P("x1", 1), {P("x1^2", 1)}));
    CHECK_FALSE(radical_membership(P("x1", 2), {P("x2", 2)}));
    auto lifted = std::vector<Polynomial>{P("x1*x4*x5 - x1^2*x2^2*x3", 5),
                                          P("x1*x2*x5 + x3*x4*x5 - x1*x2^2*x3^2", 5)};
    CHECK(radical_membership(P("x1*x2*x5", 5), lifted));
    CHECK_FALSE(radical_membership(P("x2*x5", 5), lifted));
    CHECK(radical_membership(P("x1*x2*x3", 5), lifted));
    CHECK_FALSE(radical_membership(P("x1*x2", 5), lifted));
    RadicalOracle plain(lifted, 5, RadicalOracle::Options{false, SelectionStrategy::Normal});
    CHECK(plain.contains(P("x1*x2*x3", 5)));
    CHECK_FALSE(plain.contains(P("x1*x2", 5)));
}

TEST_CASE("radical membership agrees with small powers", "[radical][property]") {
    std::mt19937_64 rng(79);
    int positives = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Polynomial> g;
        for (int k = 0; k < 2; ++k) g.push_back(oracle::random_polynomial(rng, 3, 2, 2, 2));
        Polynomial f = oracle::random_polynomial(rng, 3, 1, 1, 1);
        if (trial % 3 == 0)
            g.push_back(f.pow(1 + static_cast<unsigned>(rng() % 3)) * oracle::random_polynomial(rng, 3, 1, 0, 2));
        bool power = false;
        Polynomial fk = f;
        for (int k = 1; k <= 6 && !power; ++k, fk = fk * f) power = membership(fk, g).has_value();
        bool rad = radical_membership(f, g);
        if (power) {
            ++positives;
            CHECK(rad);
        }
    }
    CHECK(positives > 10);
}

TEST_CASE("power membership finds the least exponent", "[power]") {
    auto pc = power_membership(SquarefreeMonomial(VarSet(4, {1, 2})), line4(), 8);
    CHECK(pc.exponent == 2);
    CHECK(pc.recombines());
    auto one = power_membership(SquarefreeMonomial(VarSet(4, {1, 4})), line4(), 8);
    CHECK(one.exponent == 1);
    CHECK(one.certificate.cofactors[0] == P("1", 4));
    CHECK(one.certificate.cofactors[1].is_zero());
    CHECK_THROWS_AS(power_membership(SquarefreeMonomial(VarSet(4, {1, 2})), line4(), 1), PreconditionError);
}

TEST_CASE("monomial orders", "[order]") {
    auto lex = MonomialOrder::lex(3);
    CHECK(lex.greater(Term::variable(1), Term::variable(2, 5)));
    auto dr = MonomialOrder::degrevlex(3);
    CHECK(dr.greater(Term::variable(2, 5), Term::variable(1)));
    auto elim = MonomialOrder::elimination(3, {3});
    CHECK(elim.greater(Term::variable(3), Term::variable(1, 4)));
    auto rev = MonomialOrder::with_precedence(OrderKind::Lex, {3, 2, 1});
    CHECK(rev.greater(Term::variable(3), Term::variable(1, 2)));
    CHECK_THROWS_AS(MonomialOrder::with_precedence(OrderKind::Lex, {1, 1}), PreconditionError);
    CHECK_THROWS_AS(MonomialOrder::from_name("deglex", 2), PreconditionError);
    CHECK(MonomialOrder::from_name("lex", 2).kind() == OrderKind::Lex);
}
