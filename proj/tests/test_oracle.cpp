#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dirhom/dfc_homology.hpp"
#include "dirhom/oracle.hpp"
#include "dirhom/path_homology.hpp"

using namespace dirhom;
using namespace dirhom::oracle;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

bool all_zero(const DenseMatrix& m) {
    for (const auto& row : m)
        for (const Rational& v : row)
            if (v != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("oracle path homology on the pinned examples") {
    CHECK(oracle_path_betti(mlp_digraph(MlpSpec({2, 2})), 1, true).betti_vector() ==
          std::vector<Index>{0, 1});
    CHECK(oracle_path_betti(Digraph::from_edge_list(2, {{0, 1}}), 1, true).betti_vector() ==
          std::vector<Index>{0, 0});

    Digraph triangle = Digraph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(oracle_path_betti(triangle, 2, false).betti_vector() == std::vector<Index>{1, 1, 0});
    CHECK(oracle_path_betti(triangle, 2, false).degrees[2].dim_omega == 0);
}

TEST_CASE("oracle dfc homology on the pinned examples") {
    Digraph transitive = Digraph::from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(oracle_dfc_betti(transitive, 2, false).betti_vector() ==
          std::vector<Index>{1, 0, 0});
    CHECK(oracle_dfc_betti(mlp_digraph(MlpSpec({2, 2})), 1, false).betti_vector() ==
          std::vector<Index>{1, 1});
    CHECK(oracle_dfc_betti(Digraph::from_edge_list(5, {}), 1, false).betti_vector() ==
          std::vector<Index>{5, 0});
}

TEST_CASE("size guard") {
    Digraph big = Digraph::from_edge_list(13, {});
    CHECK_THROWS_AS(oracle_path_betti(big, 1, true), TooLargeForOracle);
    CHECK_THROWS_AS(oracle_dfc_betti(big, 1, true), TooLargeForOracle);
    Digraph ok = Digraph::from_edge_list(3, {});
    CHECK_THROWS_AS(oracle_path_betti(ok, 7, true), TooLargeForOracle);
}

TEST_CASE("boundary composites vanish on the full regular complex") {
    for (VertexId v : {2, 3, 4}) {
        for (int p = 2; p <= 3; ++p) {
            DenseMatrix square =
                dense_product(regular_path_boundary(v, p - 1), regular_path_boundary(v, p));
            CAPTURE(v);
            CAPTURE(p);
            CHECK(all_zero(square));
        }
    }
    for (std::uint64_t seed : {2u, 8u, 13u}) {
        Digraph g = random_digraph(seed);
        for (int p = 2; p <= 3; ++p) {
            if (naive_directed_simplices(g, p).empty()) continue;
            CHECK(all_zero(dense_product(naive_flag_boundary(g, p - 1),
                                         naive_flag_boundary(g, p))));
        }
    }
}

TEST_CASE("oracle certifies the constraint-count formula for the middle layer") {
    // dim Omega_2 of a layered (a,b,c) digraph is a*c*(b-1).
    for (const auto& widths : std::vector<std::vector<int>>{{2, 3, 2}, {2, 2, 2}, {3, 2, 3}}) {
        MlpSpec spec(widths);
        HomologySummary o = oracle_path_betti(mlp_digraph(spec), 2, true);
        Index expected = static_cast<Index>(widths[0]) * widths[2] * (widths[1] - 1);
        CHECK(o.degrees[2].dim_omega == expected);
        CHECK(omega_basis(mlp_digraph(spec), 2, kQ).dimension() == expected);
    }
}

TEST_CASE("engine agrees with the oracle on a seeded corpus") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Digraph g = random_digraph(seed);
        CAPTURE(seed);
        for (bool reduced : {false, true}) {
            CAPTURE(reduced);
            HomologySummary engine_path = path_betti(g, 3, reduced, kQ);
            HomologySummary oracle_path = oracle_path_betti(g, 3, reduced);
            CHECK(engine_path == oracle_path);

            HomologySummary engine_dfc = dfc_betti(g, 3, kQ, reduced);
            HomologySummary oracle_dfc = oracle_dfc_betti(g, 3, reduced);
            CHECK(engine_dfc == oracle_dfc);
        }
    }
}
