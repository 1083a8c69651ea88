#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include <matchspectrum/gf2.hpp>
#include <matchspectrum/graph_io.hpp>
#include <matchspectrum/krawtchouk.hpp>
#include <matchspectrum/macwilliams.hpp>

#include "oracles.hpp"

using namespace matchspectrum;

namespace {

BipartiteGraph from_text(const std::string& s) {
    std::istringstream in(s);
    return parse_graph(in);
}

Gf2Vector bits(int m, std::initializer_list<int> ones) {
    Gf2Vector v(m);
    for (int i : ones) v.set(i, true);
    return v;
}

// coefficient vector of (1-x)^j (1+x)^(m-j) by explicit polynomial product
std::vector<BigInt> poly_coeffs(int m, int j) {
    std::vector<BigInt> p{BigInt(1)};
    auto mul = [&](int a0, int a1) {  // multiply by (a0 + a1 x)
        std::vector<BigInt> q(p.size() + 1, BigInt(0));
        for (size_t i = 0; i < p.size(); ++i) {
            q[i] += a0 * p[i];
            q[i + 1] += a1 * p[i];
        }
        p = std::move(q);
    };
    for (int i = 0; i < j; ++i) mul(1, -1);
    for (int i = 0; i < m - j; ++i) mul(1, 1);
    return p;
}

}  // namespace

TEST_CASE("gf2 rank") {
    Gf2Matrix id3(3);
    for (int i = 0; i < 3; ++i) id3.add_row(bits(3, {i}));
    CHECK(gf2_rank(id3) == 3);

    Gf2Matrix zero(4);
    for (int i = 0; i < 3; ++i) zero.add_row(Gf2Vector(4));
    CHECK(gf2_rank(zero) == 0);

    auto k11 = from_text("bipartite 1 1 1\n0 0\n");
    CHECK(gf2_rank(incidence_matrix(k11)) == 1);

    SECTION("row basis spans the same space") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 30; ++trial) {
            auto m = oracles::random_gf2_matrix(rng, 1 + static_cast<int>(rng() % 6),
                                                1 + static_cast<int>(rng() % 10));
            auto basis = gf2_row_basis(m);
            CHECK(gf2_rank(basis) == basis.row_count());
            CHECK(gf2_rank(basis) == gf2_rank(m));
            // every original row reduces to zero against the basis
            Gf2Matrix joint = basis;
            for (const auto& r : m.rows) joint.add_row(r);
            CHECK(gf2_rank(joint) == basis.row_count());
        }
    }
}

TEST_CASE("cycle space basis") {
    SECTION("forest has an empty cycle space") {
        auto k11 = from_text("bipartite 1 1 1\n0 0\n");
        CHECK(cycle_space_basis(k11).row_count() == 0);
    }

    SECTION("K22 has the single 4-cycle") {
        auto k22 = from_text("bipartite 2 2 4\n0 0\n0 1\n1 0\n1 1\n");
        auto b = cycle_space_basis(k22);
        REQUIRE(b.row_count() == 1);
        CHECK(b.rows[0] == bits(4, {0, 1, 2, 3}));
    }

    SECTION("K33: four independent weight-4 fundamental cycles") {
        auto k33 = from_text("bipartite 3 3 9\n0 0\n0 1\n0 2\n1 0\n1 1\n1 2\n2 0\n2 1\n2 2\n");
        auto b = cycle_space_basis(k33);
        REQUIRE(b.row_count() == 4);  // 9 - 6 + 1
        for (const auto& row : b.rows) CHECK(row.weight() == 4);
        CHECK(gf2_rank(b) == 4);
    }

    SECTION("rows are even subgraphs orthogonal to the incidence rows") {
        std::mt19937_64 rng(13);
        for (int trial = 0; trial < 30; ++trial) {
            auto g = oracles::random_graph(rng, 1 + static_cast<int>(rng() % 5),
                                           1 + static_cast<int>(rng() % 5), 0.5);
            auto b = cycle_space_basis(g);
            CHECK(b.row_count() == g.edge_count() - g.vertex_count() + connected_components(g));
            auto a = incidence_matrix(g);
            for (const auto& cyc : b.rows) {
                for (const auto& inc : a.rows) CHECK_FALSE(cyc.dot(inc));
                // even degree at every vertex
                for (int u = 0; u < g.left_count; ++u) {
                    int deg = 0;
                    for (int e : g.left_edges[u])
                        if (cyc.get(e)) ++deg;
                    CHECK(deg % 2 == 0);
                }
                for (int v = 0; v < g.right_count; ++v) {
                    int deg = 0;
                    for (int e : g.right_edges[v])
                        if (cyc.get(e)) ++deg;
                    CHECK(deg % 2 == 0);
                }
            }
            // incidence rank identity used by the pipeline
            CHECK(gf2_rank(a) == g.vertex_count() - connected_components(g));
        }
    }
}

TEST_CASE("span weight distribution enumeration") {
    Gf2Matrix empty(4);
    auto w0 = enumerate_weight_distribution(empty, 4);
    CHECK(decimal_strings(w0) == std::vector<std::string>{"1", "0", "0", "0", "0"});

    Gf2Matrix ones(4);
    ones.add_row(bits(4, {0, 1, 2, 3}));
    CHECK(decimal_strings(enumerate_weight_distribution(ones, 4)) ==
          std::vector<std::string>{"1", "0", "0", "0", "1"});

    Gf2Matrix tri(3);
    tri.add_row(bits(3, {0, 1, 2}));
    CHECK(decimal_strings(enumerate_weight_distribution(tri, 3)) ==
          std::vector<std::string>{"1", "0", "0", "1"});

    SECTION("row cap is enforced") {
        Gf2Matrix big(2);
        for (int i = 0; i < 25; ++i) big.add_row(Gf2Vector(2));
        CHECK_THROWS_AS(enumerate_weight_distribution(big, 2), CapExceededError);
    }
}

TEST_CASE("krawtchouk table") {
    auto t1 = krawtchouk_table(1);
    CHECK(t1.at(0, 0) == 1);
    CHECK(t1.at(0, 1) == 1);
    CHECK(t1.at(1, 0) == 1);
    CHECK(t1.at(1, 1) == -1);

    CHECK(krawtchouk_table(4).at(1, 1) == 2);

    SECTION("structural invariants up to m = 16") {
        for (int m = 0; m <= 16; ++m) {
            auto t = krawtchouk_table(m);
            auto binom = binomial_table(m);
            for (int j = 0; j <= m; ++j) {
                CHECK(t.at(0, j) == 1);
                BigInt colsum = 0;
                for (int i = 0; i <= m; ++i) colsum += t.at(i, j);
                CHECK(colsum == (j == 0 ? pow2(m) : BigInt(0)));
            }
            for (int i = 0; i <= m; ++i) CHECK(t.at(i, 0) == binom[m][i]);
        }
    }

    SECTION("matches direct polynomial expansion") {
        for (int m = 0; m <= 10; ++m) {
            auto t = krawtchouk_table(m);
            for (int j = 0; j <= m; ++j) {
                auto coeffs = poly_coeffs(m, j);
                for (int i = 0; i <= m; ++i) CHECK(t.at(i, j) == coeffs[i]);
            }
        }
    }
}

TEST_CASE("macwilliams dual distribution") {
    SECTION("self-dual repetition code") {
        WeightDistribution w = WeightDistribution::zeros(2);
        w.counts = {BigInt(1), BigInt(0), BigInt(1)};
        CHECK(macwilliams_dual_distribution(w, 2, 1) == w);
    }

    SECTION("triangle cut space maps to its cycle space") {
        WeightDistribution w = WeightDistribution::zeros(3);
        w.counts = {BigInt(1), BigInt(0), BigInt(3), BigInt(0)};
        auto dual = macwilliams_dual_distribution(w, 3, 2);
        CHECK(decimal_strings(dual) == std::vector<std::string>{"1", "0", "0", "1"});
    }

    SECTION("dual of the full space is the zero code") {
        const int m = 5;
        auto binom = binomial_table(m);
        WeightDistribution w = WeightDistribution::zeros(m);
        for (int j = 0; j <= m; ++j) w.counts[j] = binom[m][j];
        auto dual = macwilliams_dual_distribution(w, m, m);
        CHECK(dual.counts[0] == 1);
        CHECK(dual.mass() == 1);
    }

    SECTION("wrong mass fails loudly") {
        WeightDistribution w = WeightDistribution::zeros(2);
        w.counts = {BigInt(1), BigInt(0), BigInt(1)};
        CHECK_THROWS_AS(macwilliams_dual_distribution(w, 2, 2), IntegrityError);
    }

    SECTION("non-code distribution fails loudly") {
        // mass 2 but no zero word: the transform would go negative
        WeightDistribution w = WeightDistribution::zeros(2);
        w.counts = {BigInt(0), BigInt(2), BigInt(0)};
        CHECK_THROWS_AS(macwilliams_dual_distribution(w, 2, 1), IntegrityError);
    }

    SECTION("matches brute-force dual enumeration; double transform is identity") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 40; ++trial) {
            int m = 1 + static_cast<int>(rng() % 12);
            int rows = static_cast<int>(rng() % (m + 1));
            auto basis = gf2_row_basis(oracles::random_gf2_matrix(rng, rows, m));
            int r = basis.row_count();

            auto w = enumerate_weight_distribution(basis, m);
            auto dual = macwilliams_dual_distribution(w, m, r);
            CHECK(dual == oracles::naive_dual_distribution(basis, m));
            CHECK(macwilliams_dual_distribution(dual, m, m - r) == w);
        }
    }

    SECTION("cut-space distribution transforms to the cycle-space one") {
        std::mt19937_64 rng(19);
        int done = 0;
        while (done < 30) {
            auto g = oracles::random_graph(rng, 1 + static_cast<int>(rng() % 4),
                                           1 + static_cast<int>(rng() % 4), 0.6);
            if (g.edge_count() > 14) continue;
            ++done;
            const int m = g.edge_count();
            const int d = connected_components(g);
            auto cut_basis = gf2_row_basis(incidence_matrix(g));
            REQUIRE(cut_basis.row_count() == g.vertex_count() - d);
            auto cut_dist = enumerate_weight_distribution(cut_basis, m);
            auto cyc_dist = enumerate_weight_distribution(cycle_space_basis(g), m);
            CHECK(macwilliams_dual_distribution(cut_dist, m, cut_basis.row_count()) ==
                  cyc_dist);
        }
    }
}
