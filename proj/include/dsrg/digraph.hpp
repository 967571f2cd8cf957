#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dsrg/bitset.hpp"
#include "dsrg/block_matrix.hpp"

namespace dsrg {

/// Loop-free directed graph kept as per-vertex out- and in-neighbor bitsets.
/// The in-adjacency is maintained as the exact transpose of the out-adjacency.
class Digraph {
public:
    explicit Digraph(int vertex_count)
        : v_(check_order(vertex_count)),
          out_(static_cast<size_t>(vertex_count), Bitset(vertex_count)),
          in_(static_cast<size_t>(vertex_count), Bitset(vertex_count)) {}

    static Digraph from_matrix(const BinaryMatrix& m) {
        Digraph g(m.order());
        for (int i = 0; i < m.order(); ++i)
            for (int j = 0; j < m.order(); ++j)
                if (m.get(i, j)) g.add_arc(i, j);
        return g;
    }

    BinaryMatrix to_matrix() const {
        BinaryMatrix m(v_);
        for (int i = 0; i < v_; ++i)
            out_[i].for_each([&](int j) { m.set(i, j, true); });
        return m;
    }

    int vertex_count() const { return v_; }

    void add_arc(int from, int to) {
        if (from == to)
            throw std::invalid_argument("Digraph: loop at vertex " + std::to_string(from + 1));
        if (from < 0 || from >= v_ || to < 0 || to >= v_)
            throw std::invalid_argument("Digraph: vertex index out of range");
        out_[from].set(to);
        in_[to].set(from);
    }

    void remove_arc(int from, int to) {
        out_[from].reset(to);
        in_[to].reset(from);
    }

    bool has_arc(int from, int to) const { return out_[from].test(to); }

    const Bitset& out(int vertex) const { return out_[vertex]; }
    const Bitset& in(int vertex) const { return in_[vertex]; }

    int out_degree(int vertex) const { return out_[vertex].count(); }
    int in_degree(int vertex) const { return in_[vertex].count(); }

    int arc_count() const {
        int e = 0;
        for (int i = 0; i < v_; ++i) e += out_[i].count();
        return e;
    }

    /// All arcs reversed.
    Digraph converse() const {
        Digraph g(v_);
        g.out_ = in_;
        g.in_ = out_;
        return g;
    }

    /// New graph where old vertex u becomes perm[u].
    Digraph relabeled(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != v_)
            throw std::invalid_argument("Digraph: permutation size mismatch");
        Digraph g(v_);
        for (int u = 0; u < v_; ++u)
            out_[u].for_each([&](int w) { g.add_arc(perm[u], perm[w]); });
        return g;
    }

    bool operator==(const Digraph&) const = default;

private:
    int v_;
    std::vector<Bitset> out_;
    std::vector<Bitset> in_;

    static int check_order(int v) {
        if (v < 1) throw std::invalid_argument("Digraph: vertex count must be >= 1");
        return v;
    }
};

} // namespace dsrg
