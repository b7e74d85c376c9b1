#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace arank;

namespace {

SquarefreeMonomial mono(int n, std::initializer_list<int> idx) { return SquarefreeMonomial(VarSet(n, idx)); }

MonomialIdeal path_dual() { return minimalize({mono(4, {1, 2}), mono(4, {1, 4}), mono(4, {3, 4})}, 4); }

SimplicialComplex complex_from(int n, const std::vector<std::uint64_t>& fs) {
    std::vector<VarSet> v;
    for (auto f : fs) v.emplace_back(n, f);
    return SimplicialComplex(n, v);
}

}  // namespace

TEST_CASE("Betti numbers of a principal ideal", "[betti]") {
    auto t = hochster_betti(minimalize({mono(2, {1, 2})}, 2));
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 2) == 1);
    CHECK(t.entries.size() == 2);
    CHECK(t.pd() == 1);
    auto cubic = minimalize({mono(3, {1, 2, 3})}, 3);
    CHECK(has_linear_resolution(cubic));
    CHECK(reg(cubic) == 3);
}

TEST_CASE("Betti numbers of the four-vertex path dual", "[betti]") {
    auto t = hochster_betti(path_dual());
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 2) == 3);
    CHECK(t.at(2, 3) == 2);
    CHECK(t.entries.size() == 3);
    CHECK(pd(path_dual()) == 2);
    CHECK(is_cohen_macaulay(path_dual()));
    CHECK(has_linear_resolution(alexander_dual(path_dual())));
}

TEST_CASE("hollow triangle has one cubic relation", "[betti]") {
    std::vector<VarSet> fs{VarSet(3, {1, 2}), VarSet(3, {2, 3}), VarSet(3, {1, 3})};
    auto t = hochster_betti(SimplicialComplex(3, fs));
    CHECK(t.at(1, 3) == 1);
    CHECK(t.pd() == 1);
}

TEST_CASE("variable generators are handled as non-vertices", "[betti]") {
    auto I = minimalize({mono(3, {1}), mono(3, {2, 3})}, 3);
    auto t = hochster_betti(I);
    CHECK(t.at(1, 1) == 1);
    CHECK(t.at(1, 2) == 1);
    CHECK(t.at(2, 3) == 1);
    CHECK(t.pd() == 2);
    CHECK(is_cohen_macaulay(I));
}

TEST_CASE("Betti preconditions", "[betti]") {
    CHECK_THROWS_AS(hochster_betti(minimalize({mono(17, {1, 2})}, 17)), PreconditionError);
    CHECK_THROWS_AS(hochster_betti(path_dual(), 4), PreconditionError);
    CHECK_THROWS_AS(hochster_betti(minimalize({mono(2, {})}, 2)), PreconditionError);
    CHECK_THROWS_AS(reg(minimalize({}, 2)), PreconditionError);
    CHECK(hochster_betti(minimalize({}, 2)).pd() == 0);
}

TEST_CASE("alternating Betti sums match the face count", "[betti][property]") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto I = oracle::random_ideal(rng, n, 6);
        if (I.is_unit()) continue;
        for (int p : {0, 2}) {
            auto t = hochster_betti(I, p);
            std::vector<long> k(static_cast<std::size_t>(n) + 1, 0);
            for (const auto& [ij, b] : t.entries) k[static_cast<std::size_t>(ij.second)] += (ij.first % 2 ? -1 : 1) * b;
            CHECK(k == oracle::k_polynomial_from_faces(I));
            CHECK(t.at(0, 0) == 1);
        }
    }
}

TEST_CASE("tables over Q, GF(2) and GF(3) agree on small complexes", "[betti][property]") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& fs : oracle::all_complexes(n)) {
            auto c = complex_from(n, fs);
            if (c.is_simplex()) continue;
            auto q = hochster_betti(c, 0);
            auto t2 = hochster_betti(c, 2);
            auto t3 = hochster_betti(c, 3);
            CHECK(q.entries == t2.entries);
            CHECK(q.entries == t3.entries);
        }
}

TEST_CASE("the six-vertex projective plane sees characteristic 2", "[betti]") {
    const std::vector<std::vector<int>> tri{{1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 5, 6},
                                            {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {3, 4, 6}, {4, 5, 6}};
    std::vector<VarSet> fs;
    for (const auto& t : tri) fs.push_back(VarSet::from_indices(6, t));
    // A closed surface: every edge lies in exactly two triangles.
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b) {
            int count = 0;
            for (const auto& f : fs) count += f.contains(a) && f.contains(b);
            REQUIRE(count == 2);
        }
    SimplicialComplex rp2(6, fs);
    auto q = hochster_betti(rp2, 0);
    auto t2 = hochster_betti(rp2, 2);
    auto t3 = hochster_betti(rp2, 3);
    CHECK(q.entries == t3.entries);
    CHECK(q.entries != t2.entries);
    CHECK(is_cohen_macaulay(stanley_reisner_ideal(rp2), 0));
    CHECK_FALSE(is_cohen_macaulay(stanley_reisner_ideal(rp2), 2));
}

TEST_CASE("Cohen-Macaulay exactly when the dual has a linear resolution", "[betti][property]") {
    std::mt19937_64 rng(43);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto I = oracle::random_ideal(rng, n, 5);
        if (indeg(I) < 2) continue;
        ++checked;
        CHECK(is_cohen_macaulay(I) == has_linear_resolution(alexander_dual(I)));
    }
    CHECK(checked > 50);
}

TEST_CASE("projective dimension is unchanged by a cone over a face of the dual complex", "[betti][property]") {
    // I' = (m0) + x0 I, where m0 is the product of the variables outside a face F of
    // the complex whose facets are the complements of the generators of I.
    std::mt19937_64 rng(47);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto I = oracle::random_ideal(rng, n, 5);
        if (I.is_unit() || I.is_zero() || height(I) < 2) continue;
        ++checked;
        auto gamma = dual_complex_of_ideal(I);
        std::vector<VarSet> faces;
        for (const auto& f : gamma.facets())
            for (std::uint64_t s = f.mask();; s = (s - 1) & f.mask()) {
                faces.emplace_back(n, s);
                if (s == 0) break;
            }
        const auto& F = faces[rng() % faces.size()];
        std::vector<SquarefreeMonomial> gens{SquarefreeMonomial(F.complement_in(VarSet::full(n)).widened(n + 1))};
        for (const auto& g : I.generators()) gens.emplace_back(g.support().widened(n + 1) | VarSet(n + 1, {n + 1}));
        auto grown = minimalize(gens, n + 1);
        CHECK(pd(grown) == pd(I));
        CHECK(pd(grown, 2) == pd(I, 2));
    }
    CHECK(checked > 50);
}

TEST_CASE("Betti table JSON round trip", "[betti][io]") {
    auto t = hochster_betti(path_dual());
    CHECK(betti_from_json(to_json(t)) == t);
    CHECK(to_json(t).dump() == R"({"char":0,"entries":[[0,0,1],[1,2,3],[2,3,2]]})");
}
