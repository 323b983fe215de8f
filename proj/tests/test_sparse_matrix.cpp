#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dirhom/sparse_matrix.hpp"

using namespace dirhom;

namespace {

SparseMatrix from_rows(const std::vector<std::vector<long long>>& rows, FieldSpec field) {
    Index r = static_cast<Index>(rows.size());
    Index c = rows.empty() ? 0 : static_cast<Index>(rows[0].size());
    SparseMatrix m(r, c, field);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j)
            m.set(i, j, field.from_int(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    return m;
}

SparseMatrix random_matrix(std::uint64_t seed, Index rows, Index cols, FieldSpec field) {
    std::mt19937_64 rng(seed);
    SparseMatrix m(rows, cols, field);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) {
            std::uint64_t draw = rng() % 10;
            if (draw < 4) m.set(i, j, field.from_int(static_cast<long long>(draw) - 2));
        }
    return m;
}

}  // namespace

TEST_CASE("field spec basics") {
    CHECK(FieldSpec::rationals().name() == "q");
    CHECK(FieldSpec::gf(2).name() == "gf2");
    CHECK(FieldSpec::parse("gf3") == FieldSpec::gf(3));
    CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
    CHECK_THROWS_AS(FieldSpec::gf(4), FieldError);
    CHECK_THROWS_AS(FieldSpec::gf(1), FieldError);
    CHECK_THROWS_AS(FieldSpec::parse("gfx"), FieldError);

    FieldSpec gf5 = FieldSpec::gf(5);
    CHECK(gf5.from_int(-3) == Rational(2));
    CHECK(gf5.div(gf5.from_int(1), gf5.from_int(2)) == Rational(3));  // 2 * 3 = 6 = 1 mod 5
    CHECK_THROWS_AS(gf5.div(gf5.from_int(1), gf5.from_int(5)), FieldError);
}

TEST_CASE("rank of small matrices") {
    CHECK(rank(SparseMatrix::identity(3, FieldSpec::rationals())) == 3);

    SparseMatrix ones = from_rows({{1, 1}, {1, 1}}, FieldSpec::gf(2));
    CHECK(rank(ones) == 1);

    SparseMatrix two_q = from_rows({{2}}, FieldSpec::rationals());
    SparseMatrix two_gf2 = from_rows({{2}}, FieldSpec::gf(2));
    CHECK(rank(two_q) == 1);
    CHECK(rank(two_gf2) == 0);  // 2 = 0 mod 2, entry vanishes
    CHECK(two_gf2.nonzero_count() == 0);
}

TEST_CASE("null space canonical form") {
    SUBCASE("zero matrix has full kernel") {
        SparseMatrix zero(2, 3, FieldSpec::rationals());
        SparseMatrix kernel = null_space(zero);
        CHECK(kernel == SparseMatrix::identity(3, FieldSpec::rationals()));
    }
    SUBCASE("identity has trivial kernel") {
        CHECK(null_space(SparseMatrix::identity(3, FieldSpec::rationals())).cols() == 0);
    }
    SUBCASE("sum-zero subspace") {
        SparseMatrix row = from_rows({{1, 1, 1}}, FieldSpec::rationals());
        SparseMatrix kernel = null_space(row);
        REQUIRE(kernel.cols() == 2);
        CHECK(kernel.at(0, 0) == Rational(-1));
        CHECK(kernel.at(1, 0) == Rational(1));
        CHECK(kernel.at(2, 0) == Rational(0));
        CHECK(kernel.at(0, 1) == Rational(-1));
        CHECK(kernel.at(1, 1) == Rational(0));
        CHECK(kernel.at(2, 1) == Rational(1));
    }
}

TEST_CASE("multiply") {
    FieldSpec q = FieldSpec::rationals();
    SparseMatrix m = from_rows({{1, 2}, {3, 4}, {0, 5}}, q);
    CHECK(multiply(SparseMatrix::identity(3, q), m) == m);

    SparseMatrix zero(2, 4, q);
    CHECK(multiply(m, zero).is_zero());

    CHECK_THROWS_AS(multiply(m, m), ShapeError);
    SparseMatrix gf2 = from_rows({{1, 0}, {0, 1}}, FieldSpec::gf(2));
    CHECK_THROWS_AS(multiply(m, gf2), FieldError);
}

TEST_CASE("rank-nullity and exact kernel across random matrices") {
    for (FieldSpec field : {FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(3)}) {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            SparseMatrix m = random_matrix(seed, 6, 9, field);
            SparseMatrix kernel = null_space(m);
            CAPTURE(field.name());
            CAPTURE(seed);
            CHECK(rank(m) == m.cols() - kernel.cols());
            CHECK(multiply(m, kernel).is_zero());
        }
    }
}

TEST_CASE("rank can only drop mod p for integer matrices") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        SparseMatrix over_q = random_matrix(seed, 7, 7, FieldSpec::rationals());
        for (FieldSpec field : {FieldSpec::gf(2), FieldSpec::gf(3)}) {
            SparseMatrix mod_p(7, 7, field);
            for (Index i = 0; i < 7; ++i)
                for (const auto& [j, v] : over_q.row(i)) mod_p.set(i, j, field.normalize(v));
            CAPTURE(seed);
            CAPTURE(field.name());
            CHECK(rank(mod_p) <= rank(over_q));
        }
    }
}

TEST_CASE("determinism: identical input, identical canonical kernel") {
    SparseMatrix a = random_matrix(42, 8, 12, FieldSpec::rationals());
    SparseMatrix b = random_matrix(42, 8, 12, FieldSpec::rationals());
    CHECK(a == b);
    CHECK(null_space(a) == null_space(b));
    CHECK(reduced_row_echelon(a).matrix == reduced_row_echelon(b).matrix);
}
