#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dsrg/family.hpp"
#include "dsrg/verify.hpp"

using dsrg::BigInt;
using dsrg::CompactMatrix;
using dsrg::CyclicPoly;
using dsrg::Digraph;
using dsrg::DsrgParams;
using dsrg::IntegerMatrix;

namespace {

// Test-local oracle: count length-2 paths by a plain triple loop.
long long naive_paths(const Digraph& g, int x, int y) {
    long long c = 0;
    for (int z = 0; z < g.vertex_count(); ++z)
        if (g.has_arc(x, z) && g.has_arc(z, y)) ++c;
    return c;
}

} // namespace

TEST_CASE("family parameters") {
    CHECK(dsrg::family_params(1) == DsrgParams{45, 15, 6, 3, 6});
    CHECK(dsrg::family_params(2) == DsrgParams{63, 21, 8, 5, 8});
    CHECK(dsrg::family_params(5) == DsrgParams{117, 39, 14, 11, 14});
    CHECK_THROWS_AS(dsrg::family_params(0), std::invalid_argument);
}

TEST_CASE("block count matrix") {
    IntegerMatrix c1 = dsrg::build_block_counts(1);
    const long long row7[9] = {5, 1, 1, 1, 1, 3, 1, 1, 1};
    for (int j = 0; j < 9; ++j) CHECK(c1.at(6, j) == BigInt(row7[j]));

    for (int n = 1; n <= 10; ++n) {
        IntegerMatrix c = dsrg::build_block_counts(n);
        for (int i = 0; i < 9; ++i) {
            CHECK(c.row_sum(i) == BigInt(3 * (2 * n + 3)));
            CHECK(c.col_sum(i) == BigInt(3 * (2 * n + 3)));
        }
    }
    CHECK_THROWS_AS(dsrg::build_block_counts(0), std::invalid_argument);
}

TEST_CASE("block count identities hold for n up to 50") {
    for (int n = 1; n <= 50; ++n) {
        IntegerMatrix c = dsrg::build_block_counts(n);
        IntegerMatrix lhs = c * c + c * BigInt(3);
        IntegerMatrix rhs = IntegerMatrix::uniform(9, BigInt((2LL * n + 3) * (2LL * n + 4)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("compact family member structure") {
    CHECK_THROWS_AS(dsrg::build_family_compact(1), std::invalid_argument);

    for (int n = 2; n <= 10; ++n) {
        CompactMatrix a = dsrg::build_family_compact(n);
        const int m = 2 * n + 3;
        REQUIRE(a.modulus() == m);

        // pinned entries
        CHECK(a.at(0, 1) == dsrg::make_p(n));
        CHECK(a.at(6, 1) == CyclicPoly::constant(m, BigInt(1)));
        CHECK(a.at(6, 0) == dsrg::make_q(n));

        // rows 2..6 are x-shifts of the previous row
        for (int i = 1; i < 6; ++i)
            for (int j = 0; j < 9; ++j)
                CHECK(a.at(i, j) == a.at(i - 1, j).rotated(1));

        // rows 7..9 coincide
        for (int j = 0; j < 9; ++j) {
            CHECK(a.at(7, j) == a.at(6, j));
            CHECK(a.at(8, j) == a.at(6, j));
        }

        // column 3 is x times column 2, column 8 is x times column 9
        for (int i = 0; i < 9; ++i) {
            CHECK(a.at(i, 2) == a.at(i, 1).rotated(1));
            CHECK(a.at(i, 7) == a.at(i, 8).rotated(1));
        }

        // binary entries, counts evaluate to the block count target
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j)
                CHECK(a.at(i, j).is_binary());
        CHECK(a.coeff_sums() == dsrg::build_block_counts(n));
    }
}

TEST_CASE("defining congruence of the family in compact arithmetic") {
    for (int n = 2; n <= 10; ++n) {
        CompactMatrix a = dsrg::build_family_compact(n);
        CompactMatrix lhs = a * a + a * BigInt(3);
        CompactMatrix rhs = CompactMatrix::uniform(9, BigInt(2 * n + 4) * dsrg::make_q(n));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("family digraphs are strongly regular") {
    for (int n = 2; n <= 10; ++n) {
        Digraph g = dsrg::build_family_digraph(n);
        DsrgParams p = dsrg::family_params(n);
        REQUIRE(g.vertex_count() == p.v);
        for (int u = 0; u < g.vertex_count(); ++u) {
            CHECK_FALSE(g.has_arc(u, u));
            CHECK(g.out_degree(u) == p.k);
            CHECK(g.in_degree(u) == p.k);
        }
        CHECK(dsrg::verify_matrix(g, p).ok);
        CHECK(dsrg::verify_combinatorial(g, p).ok);
    }
}

TEST_CASE("n = 3 member checked against exhaustive path counting") {
    Digraph g = dsrg::build_family_digraph(3);
    DsrgParams p = dsrg::family_params(3);
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = 0; y < g.vertex_count(); ++y) {
            long long expected = x == y ? p.t : (g.has_arc(x, y) ? p.lambda : p.mu);
            CHECK(naive_paths(g, x, y) == expected);
        }
}

TEST_CASE("row sums of the decompactified n = 2 member") {
    dsrg::BinaryMatrix m = decompactify(dsrg::build_family_compact(2));
    REQUIRE(m.order() == 63);
    for (int i = 0; i < 63; ++i) {
        CHECK(m.row_sum(i) == 21);
        CHECK(m.col_sum(i) == 21);
    }
}
