#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsrg/digraph.hpp"

namespace dsrg {

/// Parameter tuple (v, k, t, lambda, mu) of a strongly regular digraph:
/// every vertex has in- and out-degree k, and the number of length-2 paths
/// x -> z -> y is t when y == x, lambda when x -> y is an arc, mu otherwise.
struct DsrgParams {
    long long v = 0;
    long long k = 0;
    long long t = 0;
    long long lambda = 0;
    long long mu = 0;

    bool operator==(const DsrgParams&) const = default;

    std::string to_string() const {
        return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(t) +
               "," + std::to_string(lambda) + "," + std::to_string(mu) + ")";
    }
};

/// Outcome of a verification pass. On failure `detail` describes the first
/// violation in row-major order.
struct VerifyReport {
    bool ok = false;
    std::string detail;
};

/// Checks the matrix identities A^2 = tI + lambda*A + mu*(J - I - A) and
/// AJ = JA = kJ by plain integer matrix arithmetic on the dense adjacency.
inline VerifyReport verify_matrix(const Digraph& g, const DsrgParams& p) {
    const int v = g.vertex_count();
    if (v != p.v)
        throw std::invalid_argument("verify_matrix: graph has " + std::to_string(v) +
                                    " vertices, parameters say " + std::to_string(p.v));

    std::vector<uint8_t> a(static_cast<size_t>(v) * v, 0);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            if (g.has_arc(i, j)) a[static_cast<size_t>(i) * v + j] = 1;

    // AJ = JA = kJ reduces to all row and column sums equal to k.
    for (int i = 0; i < v; ++i) {
        long long rs = 0, cs = 0;
        for (int j = 0; j < v; ++j) {
            rs += a[static_cast<size_t>(i) * v + j];
            cs += a[static_cast<size_t>(j) * v + i];
        }
        if (rs != p.k)
            return {false, "row " + std::to_string(i + 1) + " sums to " + std::to_string(rs) +
                           ", expected k=" + std::to_string(p.k)};
        if (cs != p.k)
            return {false, "column " + std::to_string(i + 1) + " sums to " + std::to_string(cs) +
                           ", expected k=" + std::to_string(p.k)};
    }

    std::vector<long long> row(static_cast<size_t>(v));
    for (int i = 0; i < v; ++i) {
        std::fill(row.begin(), row.end(), 0);
        const uint8_t* ai = a.data() + static_cast<size_t>(i) * v;
        for (int z = 0; z < v; ++z) {
            if (!ai[z]) continue;
            const uint8_t* az = a.data() + static_cast<size_t>(z) * v;
            for (int j = 0; j < v; ++j) row[j] += az[j];
        }
        for (int j = 0; j < v; ++j) {
            long long expected = i == j ? p.t : (ai[j] ? p.lambda : p.mu);
            if (row[j] != expected)
                return {false, "A^2[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                               "] = " + std::to_string(row[j]) + ", expected " +
                               std::to_string(expected) +
                               (i == j ? " (t)" : (ai[j] ? " (lambda, adjacent pair)"
                                                         : " (mu, non-adjacent pair)"))};
        }
    }
    return {true, ""};
}

/// Checks the defining path counts directly: |out(x) & in(y)| is the number of
/// length-2 paths from x to y. Independent of the matrix-identity route.
inline VerifyReport verify_combinatorial(const Digraph& g, const DsrgParams& p) {
    const int v = g.vertex_count();
    if (v != p.v)
        throw std::invalid_argument("verify_combinatorial: graph has " + std::to_string(v) +
                                    " vertices, parameters say " + std::to_string(p.v));

    for (int x = 0; x < v; ++x) {
        if (g.out_degree(x) != p.k)
            return {false, "vertex " + std::to_string(x + 1) + " has out-degree " +
                           std::to_string(g.out_degree(x)) + ", expected " + std::to_string(p.k)};
        if (g.in_degree(x) != p.k)
            return {false, "vertex " + std::to_string(x + 1) + " has in-degree " +
                           std::to_string(g.in_degree(x)) + ", expected " + std::to_string(p.k)};
    }

    for (int x = 0; x < v; ++x)
        for (int y = 0; y < v; ++y) {
            long long paths = intersection_count(g.out(x), g.in(y));
            long long expected = x == y ? p.t : (g.has_arc(x, y) ? p.lambda : p.mu);
            if (paths != expected)
                return {false, std::to_string(paths) + " paths " + std::to_string(x + 1) +
                               " -> z -> " + std::to_string(y + 1) + ", expected " +
                               std::to_string(expected) +
                               (x == y ? " (t)" : (g.has_arc(x, y) ? " (lambda)" : " (mu)"))};
        }
    return {true, ""};
}

struct InferResult {
    bool ok = false;
    DsrgParams params;
    std::string reason;   // refutation witness when not a dsrg
};

/// Reads candidate parameters off the graph (degree of vertex 0, path counts
/// of the first applicable pairs) and confirms them with the counting verifier.
inline InferResult infer_params(const Digraph& g) {
    const int v = g.vertex_count();
    DsrgParams p;
    p.v = v;
    p.k = g.out_degree(0);
    p.t = intersection_count(g.out(0), g.in(0));

    bool have_lambda = false, have_mu = false;
    for (int x = 0; x < v && !(have_lambda && have_mu); ++x)
        for (int y = 0; y < v && !(have_lambda && have_mu); ++y) {
            if (x == y) continue;
            if (g.has_arc(x, y) && !have_lambda) {
                p.lambda = intersection_count(g.out(x), g.in(y));
                have_lambda = true;
            } else if (!g.has_arc(x, y) && !have_mu) {
                p.mu = intersection_count(g.out(x), g.in(y));
                have_mu = true;
            }
        }

    VerifyReport r = verify_combinatorial(g, p);
    if (!r.ok) return {false, p, r.detail};
    return {true, p, ""};
}

} // namespace dsrg
