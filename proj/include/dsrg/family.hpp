#pragma once

#include <stdexcept>

#include "dsrg/block_matrix.hpp"
#include "dsrg/cyclic_poly.hpp"
#include "dsrg/digraph.hpp"
#include "dsrg/verify.hpp"

namespace dsrg {

/// Parameters of the n-th family member: (9(2n+3), 3(2n+3), 2n+4, 2n+1, 2n+4).
inline DsrgParams family_params(int n) {
    if (n < 1) throw std::invalid_argument("family_params: requires n >= 1");
    const long long m = 2LL * n + 3;
    return {9 * m, 3 * m, 2LL * n + 4, 2LL * n + 1, 2LL * n + 4};
}

/// The 9x9 integer matrix of per-block arc counts the family realizes: the
/// compact matrix of the n-th member evaluates to it at x = 1. Rows 1..6 are
/// (0, n+1, n+1, n+1, n+1, 1, 2, n+1, n+1) and rows 7..9 are
/// (2n+3, 1, 1, 1, 1, 2n+1, 2n-1, 1, 1).
inline IntegerMatrix build_block_counts(int n) {
    if (n < 1) throw std::invalid_argument("build_block_counts: requires n >= 1");
    IntegerMatrix c(9);
    const long long top[9] = {0, n + 1, n + 1, n + 1, n + 1, 1, 2, n + 1, n + 1};
    const long long bottom[9] = {2LL * n + 3, 1, 1, 1, 1, 2LL * n + 1, 2LL * n - 1, 1, 1};
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            c.at(i, j) = BigInt(i < 6 ? top[j] : bottom[j]);
    return c;
}

/// Compact form of the n-th family member (9x9 over modulus 2n+3), built from
/// the explicit template: row 1 is
///   (0, p, x p, x^(n-1) p, x^(n-2) p, x^(2n), x + x^(n+1), x^2 p, x p),
/// rows 2..6 multiply the previous row by x entrywise, and rows 7..9 are all
///   (q, 1, x, x^(n-1), x^(n-2), r, s, x^2, x).
inline CompactMatrix build_family_compact(int n) {
    if (n < 2) throw std::invalid_argument("build_family_compact: requires n >= 2");
    const int m = 2 * n + 3;
    const CyclicPoly p = make_p(n);
    const CyclicPoly q = make_q(n);
    const CyclicPoly r = make_r(n);
    const CyclicPoly s = make_s(n);

    CompactMatrix a(9, m);

    a.at(0, 0) = CyclicPoly(m);
    a.at(0, 1) = p;
    a.at(0, 2) = p.rotated(1);
    a.at(0, 3) = p.rotated(n - 1);
    a.at(0, 4) = p.rotated(n - 2);
    a.at(0, 5) = CyclicPoly::monomial(m, 2 * n);
    a.at(0, 6) = CyclicPoly::monomial(m, 1) + CyclicPoly::monomial(m, n + 1);
    a.at(0, 7) = p.rotated(2);
    a.at(0, 8) = p.rotated(1);

    for (int i = 1; i < 6; ++i)
        for (int j = 0; j < 9; ++j)
            a.at(i, j) = a.at(i - 1, j).rotated(1);

    a.at(6, 0) = q;
    a.at(6, 1) = CyclicPoly::constant(m, BigInt(1));
    a.at(6, 2) = CyclicPoly::monomial(m, 1);
    a.at(6, 3) = CyclicPoly::monomial(m, n - 1);
    a.at(6, 4) = CyclicPoly::monomial(m, n - 2);
    a.at(6, 5) = r;
    a.at(6, 6) = s;
    a.at(6, 7) = CyclicPoly::monomial(m, 2);
    a.at(6, 8) = CyclicPoly::monomial(m, 1);

    for (int i = 7; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            a.at(i, j) = a.at(6, j);

    return a;
}

/// Adjacency-level form of the n-th family member: the decompactified compact
/// matrix, a loop-free digraph on 9(2n+3) vertices.
inline Digraph build_family_digraph(int n) {
    return Digraph::from_matrix(decompactify(build_family_compact(n)));
}

} // namespace dsrg
