#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace arank;

namespace {

SquarefreeMonomial mono(int n, std::initializer_list<int> idx) { return SquarefreeMonomial(VarSet(n, idx)); }

// (x1x2, x1x4, x3x4)
MonomialIdeal path_dual() { return minimalize({mono(4, {1, 2}), mono(4, {1, 4}), mono(4, {3, 4})}, 4); }

std::vector<std::uint64_t> masks(const std::vector<VarSet>& v) {
    std::vector<std::uint64_t> m;
    for (const auto& s : v) m.push_back(s.mask());
    std::sort(m.begin(), m.end());
    return m;
}

}  // namespace

TEST_CASE("VarSet basics", "[varset]") {
    VarSet a(6, {1, 3, 5});
    CHECK(a.size() == 3);
    CHECK(a.contains(3));
    CHECK_FALSE(a.contains(2));
    CHECK(a.indices() == std::vector<int>{1, 3, 5});
    CHECK(a.to_string() == "x1 x3 x5");
    CHECK((a | VarSet(6, {2})).size() == 4);
    CHECK((a & VarSet(6, {3, 4})) == VarSet(6, {3}));
    CHECK((a - VarSet(6, {1})) == VarSet(6, {3, 5}));
    CHECK(a.complement_in(VarSet::full(6)) == VarSet(6, {2, 4, 6}));
    CHECK_THROWS_AS(VarSet(3, {4}), PreconditionError);
    CHECK_THROWS_AS(VarSet::full(65), PreconditionError);
    CHECK_THROWS_AS(a | VarSet(5, {1}), PreconditionError);
    CHECK(VarSet::full(64).size() == 64);
}

TEST_CASE("canonical order is by size then ascending index list", "[varset]") {
    std::vector<VarSet> v{VarSet(4, {2, 3}), VarSet(4, {4}), VarSet(4, {1, 4}), VarSet(4, {1}), VarSet(4, {1, 2, 3})};
    std::sort(v.begin(), v.end(), VarSetCanonicalLess{});
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(x.to_string());
    CHECK(s == std::vector<std::string>{"x1", "x4", "x1 x4", "x2 x3", "x1 x2 x3"});
}

TEST_CASE("minimalize drops multiples and sorts", "[minimalize]") {
    auto I = minimalize({mono(4, {1, 2, 3}), mono(4, {3, 4}), mono(4, {1, 2}), mono(4, {1, 2})}, 4);
    REQUIRE(I.num_generators() == 2);
    CHECK(I.generators()[0].to_string() == "x1*x2");
    CHECK(I.generators()[1].to_string() == "x3*x4");
    CHECK(minimalize({}, 3).is_zero());
    CHECK(path_dual().num_generators() == 3);
    CHECK_THROWS_AS(minimalize({mono(4, {1}), mono(5, {2})}), PreconditionError);
}

TEST_CASE("minimalize is idempotent and input-order independent", "[minimalize][property]") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto I = oracle::random_ideal(rng, 6, 8);
        auto gens = I.generators();
        CHECK(minimalize(gens, 6) == I);
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(minimalize(gens, 6) == I);
    }
}

TEST_CASE("minimal transversals of small hypergraphs", "[transversals]") {
    auto t = minimal_transversals({VarSet(4, {1, 2}), VarSet(4, {1, 4}), VarSet(4, {3, 4})});
    CHECK(masks(t) == masks({VarSet(4, {1, 3}), VarSet(4, {1, 4}), VarSet(4, {2, 4})}));
    CHECK(masks(minimal_transversals({VarSet(2, {1})})) == masks({VarSet(2, {1})}));
    CHECK_THROWS_AS(minimal_transversals({VarSet(3, {1}), VarSet(3)}), PreconditionError);
    auto none = minimal_transversals({});
    REQUIRE(none.size() == 1);
    CHECK(none[0].empty());
}

TEST_CASE("minimal transversals agree with subset enumeration", "[transversals][property]") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> edge(1, 63);
    for (int trial = 0; trial < 300; ++trial) {
        int m = 1 + static_cast<int>(rng() % 7);
        std::vector<VarSet> h;
        std::vector<std::uint64_t> raw;
        for (int k = 0; k < m; ++k) {
            raw.push_back(edge(rng));
            h.emplace_back(6, raw.back());
        }
        auto got = minimal_transversals(h);
        CHECK(masks(got) == oracle::minimal_transversals(raw, 6));
        CHECK(std::is_sorted(got.begin(), got.end(), VarSetCanonicalLess{}));
    }
}

TEST_CASE("prime decomposition of small ideals", "[primes]") {
    auto primes = prime_decomposition(path_dual());
    std::vector<std::string> s;
    for (const auto& p : primes) s.push_back(p.variables.to_string());
    CHECK(s == std::vector<std::string>{"x1 x3", "x1 x4", "x2 x4"});

    auto single = prime_decomposition(minimalize({mono(2, {1})}, 2));
    REQUIRE(single.size() == 1);
    CHECK(single[0].variables == VarSet(2, {1}));

    auto ci = prime_decomposition(minimalize({mono(4, {1, 3}), mono(4, {2, 4})}, 4));
    std::vector<std::string> c;
    for (const auto& p : ci) c.push_back(p.variables.to_string());
    CHECK(c == std::vector<std::string>{"x1 x2", "x1 x4", "x2 x3", "x3 x4"});

    CHECK_THROWS_AS(prime_decomposition(minimalize({}, 3)), PreconditionError);
}

TEST_CASE("height and indeg", "[height]") {
    CHECK(height(path_dual()) == 2);
    CHECK(indeg(path_dual()) == 2);
    auto mixed = minimalize({mono(3, {1}), mono(3, {2, 3})}, 3);
    CHECK(height(mixed) == 2);
    CHECK(indeg(mixed) == 1);
    CHECK(indeg(alexander_dual(path_dual())) == height(path_dual()));
    CHECK_THROWS_AS(height(minimalize({}, 2)), PreconditionError);
    CHECK_THROWS_AS(indeg(minimalize({}, 2)), PreconditionError);
}

TEST_CASE("height equals brute-force minimum vertex cover", "[height][property]") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto I = oracle::random_ideal(rng, n, 7);
        CHECK(height(I) == oracle::min_vertex_cover(oracle::supports(I), n));
    }
}

TEST_CASE("primes are incomparable and intersect back to the ideal", "[primes][property]") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        auto I = oracle::random_ideal(rng, 6, 6);
        auto primes = prime_decomposition(I);
        for (std::size_t a = 0; a < primes.size(); ++a)
            for (std::size_t b = 0; b < primes.size(); ++b)
                if (a != b) CHECK_FALSE(primes[a].variables.is_subset_of(primes[b].variables));
        CHECK(intersect_primes(primes, 6) == I);
    }
}

TEST_CASE("height of I equals indeg of its Alexander dual", "[duality][property]") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto I = oracle::random_ideal(rng, n, 6);
        if (I.is_unit()) continue;
        CHECK(height(I) == indeg(alexander_dual(I)));
        CHECK(alexander_dual(alexander_dual(I)) == I);
    }
}

TEST_CASE("monomial ideal membership and printing", "[ideal]") {
    auto I = path_dual();
    CHECK(I.contains(mono(4, {1, 2, 3})));
    CHECK_FALSE(I.contains(mono(4, {1, 3})));
    CHECK(mono(4, {}).to_string() == "1");
    CHECK(mono(4, {2, 4}).to_string() == "x2*x4");
    CHECK(I.support() == VarSet::full(4));
    CHECK(I.widened(6).ambient() == 6);
}
