#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsrg/bigint.hpp"
#include "dsrg/bitset.hpp"
#include "dsrg/block_matrix.hpp"
#include "dsrg/digraph.hpp"

namespace dsrg {

/// Ordered partition of the vertex set: color_of[u] is the cell index of u,
/// cells are numbered 0..cell_count-1 and their numeric order is significant.
struct Coloring {
    std::vector<int> color_of;
    int cell_count = 0;

    static Coloring unit(int vertex_count) {
        return {std::vector<int>(static_cast<size_t>(vertex_count), 0), 1};
    }
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool same(int a, int b) { return find(a) == find(b); }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[a] = b;
    }

    void add_perm(const std::vector<int>& p) {
        for (int i = 0; i < static_cast<int>(p.size()); ++i) unite(i, p[i]);
    }

private:
    std::vector<int> parent_;
};

/// Individualization-refinement engine. Phase one walks the leftmost branch
/// and computes the automorphism group level by level (orbit-stabilizer
/// products along the branch); phase two runs the pruned max-certificate
/// search for a canonical labeling, using the known group for orbit pruning.
class IrEngine {
public:
    using Permutation = std::vector<int>;
    using Cells = std::vector<std::vector<int>>;

    IrEngine(const Digraph& g, long long node_budget)
        : g_(g), v_(g.vertex_count()), budget_(node_budget) {}

    void run_group() {
        build_first_path();
        order_ = BigInt(1);
        for (int level = static_cast<int>(base_.size()) - 1; level >= 0; --level) {
            const Cells& node = path_cells_[level];
            const std::vector<int>& cell = node[path_target_[level]];
            const int pivot = base_[level];
            UnionFind uf(v_);
            for (const Permutation& gen : generators_)
                if (fixes_base_prefix(gen, level)) uf.add_perm(gen);
            for (int u : cell) {
                if (u == pivot || uf.same(u, pivot)) continue;
                bump_nodes();
                Cells child = refine_cells(individualize(node, path_target_[level], u));
                uint64_t child_inv = partition_invariant(child, path_inv_[level]);
                Permutation gamma = search_mapped(level + 1, child, child_inv, level, u);
                if (!gamma.empty()) {
                    generators_.push_back(gamma);
                    uf.add_perm(generators_.back());
                }
            }
            long long orbit = 0;
            for (int u : cell)
                if (uf.same(u, pivot)) ++orbit;
            order_ *= BigInt(orbit);
        }
        group_done_ = true;
    }

    void run_canonical() {
        if (!group_done_) run_group();
        best_inv_.assign(1, path_inv_[0]);
        best_cert_valid_ = false;
        std::vector<int> prefix;
        canon_dfs(path_cells_[0], 0, prefix);
        canon_label_ = best_label_;
    }

    const BigInt& order() const { return order_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<int>& canonical_label() const { return canon_label_; }
    long long nodes_explored() const { return nodes_; }

    /// Coarsest equitable refinement: repeated full rounds of splitting every
    /// cell by (out-count, in-count) signatures against all current cells.
    /// Subcells are ordered by signature, so the result depends only on the
    /// ordered partition, not on vertex labels.
    Cells refine_cells(Cells cells) const {
        for (;;) {
            const int ncells = static_cast<int>(cells.size());
            if (ncells == v_) return cells;
            std::vector<Bitset> masks(static_cast<size_t>(ncells), Bitset(v_));
            for (int c = 0; c < ncells; ++c)
                for (int u : cells[c]) masks[c].set(u);

            bool split = false;
            Cells next;
            next.reserve(static_cast<size_t>(ncells));
            std::vector<std::pair<std::vector<int>, int>> keyed;
            for (int c = 0; c < ncells; ++c) {
                if (cells[c].size() == 1) {
                    next.push_back(cells[c]);
                    continue;
                }
                keyed.clear();
                for (int u : cells[c]) {
                    std::vector<int> sig;
                    sig.reserve(2 * static_cast<size_t>(ncells));
                    for (int d = 0; d < ncells; ++d) {
                        sig.push_back(intersection_count(g_.out(u), masks[d]));
                        sig.push_back(intersection_count(g_.in(u), masks[d]));
                    }
                    keyed.emplace_back(std::move(sig), u);
                }
                std::sort(keyed.begin(), keyed.end());
                size_t i = 0;
                size_t groups = 0;
                while (i < keyed.size()) {
                    size_t j = i;
                    std::vector<int> sub;
                    while (j < keyed.size() && keyed[j].first == keyed[i].first)
                        sub.push_back(keyed[j++].second);
                    next.push_back(std::move(sub));
                    ++groups;
                    i = j;
                }
                if (groups > 1) split = true;
            }
            cells = std::move(next);
            if (!split) return cells;
        }
    }

private:
    const Digraph& g_;
    int v_;
    long long budget_;
    long long nodes_ = 0;
    bool group_done_ = false;

    BigInt order_{1};
    std::vector<Permutation> generators_;   // generate the full group
    std::vector<Permutation> pool_;         // canonical-phase finds, pruning only

    std::vector<Cells> path_cells_;         // leftmost branch, depth 0..L
    std::vector<uint64_t> path_inv_;        // chained invariant per depth
    std::vector<int> path_target_;          // target cell index per depth 0..L-1
    std::vector<int> base_;                 // vertex individualized at each depth
    std::vector<uint64_t> first_cert_;
    std::vector<int> first_label_;

    std::vector<uint64_t> best_inv_;        // invariant prefix of the best leaf path
    std::vector<uint64_t> best_cert_;
    std::vector<int> best_label_;
    bool best_cert_valid_ = false;
    std::vector<int> canon_label_;

    void bump_nodes() {
        if (++nodes_ > budget_ && budget_ > 0)
            throw std::runtime_error("isomorphism search: node budget exceeded");
    }

    Cells unit_cells() const {
        Cells cells(1);
        cells[0].resize(static_cast<size_t>(v_));
        std::iota(cells[0].begin(), cells[0].end(), 0);
        return cells;
    }

    /// Label-independent invariant of a refined partition, chained with the
    /// parent invariant so one value summarizes the whole path to this node.
    uint64_t partition_invariant(const Cells& cells, uint64_t seed) const {
        uint64_t h = seed * 0x100000001b3ULL + 0x9e3779b97f4a7c15ULL;
        auto mix = [&h](uint64_t x) {
            h ^= x;
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        };
        const int ncells = static_cast<int>(cells.size());
        mix(static_cast<uint64_t>(ncells));
        std::vector<Bitset> masks(static_cast<size_t>(ncells), Bitset(v_));
        for (int c = 0; c < ncells; ++c)
            for (int u : cells[c]) masks[c].set(u);
        for (int c = 0; c < ncells; ++c) {
            mix(cells[c].size());
            const int rep = cells[c][0];   // cells are equitable: any member works
            for (int d = 0; d < ncells; ++d) {
                mix(static_cast<uint64_t>(intersection_count(g_.out(rep), masks[d])));
                mix(static_cast<uint64_t>(intersection_count(g_.in(rep), masks[d])));
            }
        }
        return h;
    }

    static Cells individualize(const Cells& cells, int cell_idx, int u) {
        Cells out;
        out.reserve(cells.size() + 1);
        for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
            if (c != cell_idx) {
                out.push_back(cells[c]);
                continue;
            }
            out.push_back({u});
            std::vector<int> rest;
            rest.reserve(cells[c].size() - 1);
            for (int w : cells[c])
                if (w != u) rest.push_back(w);
            out.push_back(std::move(rest));
        }
        return out;
    }

    /// First smallest non-singleton cell, or -1 when discrete.
    static int target_cell(const Cells& cells) {
        int best = -1;
        size_t best_size = static_cast<size_t>(-1);
        for (int c = 0; c < static_cast<int>(cells.size()); ++c)
            if (cells[c].size() > 1 && cells[c].size() < best_size) {
                best = c;
                best_size = cells[c].size();
            }
        return best;
    }

    std::vector<int> leaf_label(const Cells& cells) const {
        std::vector<int> label(static_cast<size_t>(v_));
        for (int p = 0; p < v_; ++p) label[cells[p][0]] = p;
        return label;
    }

    std::vector<uint64_t> certificate(const std::vector<int>& label) const {
        std::vector<int> vertex_at(static_cast<size_t>(v_));
        for (int u = 0; u < v_; ++u) vertex_at[label[u]] = u;
        std::vector<uint64_t> cert((static_cast<size_t>(v_) * v_ + 63) / 64, 0);
        size_t bit = 0;
        for (int p = 0; p < v_; ++p) {
            const Bitset& row = g_.out(vertex_at[p]);
            for (int q = 0; q < v_; ++q, ++bit)
                if (row.test(vertex_at[q])) cert[bit >> 6] |= uint64_t{1} << (bit & 63);
        }
        return cert;
    }

    bool is_automorphism(const Permutation& p) const {
        for (int u = 0; u < v_; ++u) {
            if (g_.out_degree(u) != g_.out_degree(p[u])) return false;
            bool ok = true;
            g_.out(u).for_each([&](int w) {
                if (!g_.has_arc(p[u], p[w])) ok = false;
            });
            if (!ok) return false;
        }
        return true;
    }

    static bool is_identity(const Permutation& p) {
        for (int i = 0; i < static_cast<int>(p.size()); ++i)
            if (p[i] != i) return false;
        return true;
    }

    bool fixes_base_prefix(const Permutation& gen, int count) const {
        for (int i = 0; i < count; ++i)
            if (gen[base_[i]] != base_[i]) return false;
        return true;
    }

    static bool fixes_points(const Permutation& gen, const std::vector<int>& points) {
        for (int p : points)
            if (gen[p] != p) return false;
        return true;
    }

    void build_first_path() {
        Cells cells = refine_cells(unit_cells());
        path_cells_.clear();
        path_inv_.clear();
        path_target_.clear();
        base_.clear();
        path_inv_.push_back(partition_invariant(cells, 0x6a5d9f3b21e04c77ULL));
        path_cells_.push_back(std::move(cells));
        for (;;) {
            int t = target_cell(path_cells_.back());
            if (t < 0) break;
            path_target_.push_back(t);
            const int pivot = path_cells_.back()[t][0];
            base_.push_back(pivot);
            Cells child = refine_cells(individualize(path_cells_.back(), t, pivot));
            path_inv_.push_back(partition_invariant(child, path_inv_.back()));
            path_cells_.push_back(std::move(child));
        }
        first_label_ = leaf_label(path_cells_.back());
        first_cert_ = certificate(first_label_);
    }

    /// Looks for a leaf below `cells` whose certificate equals the first
    /// leaf's; such a leaf yields an automorphism fixing base_[0..level-1]
    /// and mapping base_[level] to `mapped`. Nodes whose chained invariant
    /// differs from the first branch are pruned, which is sound because an
    /// automorphic image of the first branch has identical invariants.
    /// An empty return after full exploration proves no such automorphism.
    Permutation search_mapped(int depth, const Cells& cells, uint64_t inv, int level, int mapped) {
        if (depth >= static_cast<int>(path_inv_.size()) || inv != path_inv_[depth]) return {};
        if (static_cast<int>(cells.size()) == v_) {
            std::vector<int> label = leaf_label(cells);
            if (certificate(label) != first_cert_) return {};
            std::vector<int> vertex_at(static_cast<size_t>(v_));
            for (int x = 0; x < v_; ++x) vertex_at[label[x]] = x;
            Permutation gamma(static_cast<size_t>(v_));
            for (int x = 0; x < v_; ++x) gamma[x] = vertex_at[first_label_[x]];
            if (!is_automorphism(gamma)) return {};
            for (int i = 0; i < level; ++i)
                if (gamma[base_[i]] != base_[i]) return {};
            if (gamma[base_[level]] != mapped) return {};
            return gamma;
        }
        const int t = target_cell(cells);
        for (int u : cells[t]) {
            bump_nodes();
            Cells child = refine_cells(individualize(cells, t, u));
            uint64_t child_inv = partition_invariant(child, inv);
            Permutation gamma = search_mapped(depth + 1, child, child_inv, level, mapped);
            if (!gamma.empty()) return gamma;
        }
        return {};
    }

    /// Max-certificate canonical search. A leaf's value is the pair
    /// (invariant sequence along its path, relabeled adjacency bits), compared
    /// lexicographically; the best value over all leaves is label-independent.
    /// Siblings equivalent under an automorphism fixing the current prefix are
    /// skipped; subtrees whose invariant falls below the best prefix cannot
    /// contain the maximum and are cut.
    void canon_dfs(const Cells& cells, int depth, std::vector<int>& prefix) {
        if (static_cast<int>(cells.size()) == v_) {
            std::vector<int> label = leaf_label(cells);
            std::vector<uint64_t> cert = certificate(label);
            if (!best_cert_valid_) {
                best_cert_ = std::move(cert);
                best_label_ = std::move(label);
                best_cert_valid_ = true;
            } else if (cert > best_cert_) {
                best_cert_ = std::move(cert);
                best_label_ = std::move(label);
            } else if (cert == best_cert_) {
                std::vector<int> vertex_at(static_cast<size_t>(v_));
                for (int x = 0; x < v_; ++x) vertex_at[label[x]] = x;
                Permutation gamma(static_cast<size_t>(v_));
                for (int x = 0; x < v_; ++x) gamma[x] = vertex_at[best_label_[x]];
                if (!is_identity(gamma) && is_automorphism(gamma)) pool_.push_back(std::move(gamma));
            }
            return;
        }
        const int t = target_cell(cells);
        UnionFind uf(v_);
        for (const Permutation& gen : generators_)
            if (fixes_points(gen, prefix)) uf.add_perm(gen);
        for (const Permutation& gen : pool_)
            if (fixes_points(gen, prefix)) uf.add_perm(gen);
        std::vector<int> tried;
        for (int u : cells[t]) {
            bool skip = false;
            for (int r : tried)
                if (uf.same(u, r)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            tried.push_back(u);
            bump_nodes();
            Cells child = refine_cells(individualize(cells, t, u));
            uint64_t child_inv = partition_invariant(child, best_inv_[depth]);
            if (depth + 1 < static_cast<int>(best_inv_.size())) {
                if (child_inv < best_inv_[depth + 1]) continue;
                if (child_inv > best_inv_[depth + 1]) {
                    best_inv_.resize(static_cast<size_t>(depth) + 1);
                    best_inv_.push_back(child_inv);
                    best_cert_valid_ = false;
                }
            } else {
                best_inv_.push_back(child_inv);
            }
            prefix.push_back(u);
            canon_dfs(child, depth + 1, prefix);
            prefix.pop_back();
        }
    }
};

} // namespace detail

/// Exact group order plus a generating set of vertex permutations.
struct AutomorphismGroup {
    BigInt order;
    std::vector<std::vector<int>> generators;
};

/// Canonical labeling together with the automorphism data the search produced.
struct CanonicalResult {
    std::vector<int> label;   // maps vertex -> canonical position
    BigInt aut_order;
    std::vector<std::vector<int>> generators;
};

inline constexpr long long kDefaultNodeBudget = 10'000'000;

/// Coarsest equitable refinement of the given ordered partition: any two
/// vertices sharing a cell have equal out- and in-neighbor counts in every
/// cell. Deterministic cell ordering.
inline Coloring refine(const Digraph& g, const Coloring& start) {
    const int v = g.vertex_count();
    if (static_cast<int>(start.color_of.size()) != v)
        throw std::invalid_argument("refine: coloring size mismatch");
    std::map<int, std::vector<int>> buckets;
    for (int u = 0; u < v; ++u) buckets[start.color_of[u]].push_back(u);
    detail::IrEngine::Cells cells;
    for (auto& [color, members] : buckets) cells.push_back(std::move(members));

    detail::IrEngine engine(g, kDefaultNodeBudget);
    cells = engine.refine_cells(std::move(cells));

    Coloring out;
    out.color_of.resize(static_cast<size_t>(v));
    out.cell_count = static_cast<int>(cells.size());
    for (int c = 0; c < out.cell_count; ++c)
        for (int u : cells[c]) out.color_of[u] = c;
    return out;
}

inline CanonicalResult canonicalize(const Digraph& g, long long node_budget = kDefaultNodeBudget) {
    detail::IrEngine engine(g, node_budget);
    engine.run_group();
    engine.run_canonical();
    return {engine.canonical_label(), engine.order(), engine.generators()};
}

inline AutomorphismGroup automorphism_group(const Digraph& g,
                                            long long node_budget = kDefaultNodeBudget) {
    detail::IrEngine engine(g, node_budget);
    engine.run_group();
    return {engine.order(), engine.generators()};
}

inline std::vector<int> canonical_labeling(const Digraph& g,
                                           long long node_budget = kDefaultNodeBudget) {
    return canonicalize(g, node_budget).label;
}

inline BinaryMatrix relabeled_matrix(const Digraph& g, const std::vector<int>& label) {
    BinaryMatrix m(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        g.out(u).for_each([&](int w) { m.set(label[u], label[w], true); });
    return m;
}

/// Isomorphism-invariant adjacency matrix: isomorphic digraphs map to the
/// identical matrix.
inline BinaryMatrix canonical_form(const Digraph& g,
                                   long long node_budget = kDefaultNodeBudget) {
    return relabeled_matrix(g, canonical_labeling(g, node_budget));
}

struct IsoResult {
    bool isomorphic = false;
    std::vector<int> witness;   // maps vertices of g1 onto vertices of g2
};

inline IsoResult are_isomorphic(const Digraph& g1, const Digraph& g2,
                                long long node_budget = kDefaultNodeBudget) {
    if (g1.vertex_count() != g2.vertex_count()) return {false, {}};
    std::vector<int> l1 = canonical_labeling(g1, node_budget);
    std::vector<int> l2 = canonical_labeling(g2, node_budget);
    if (relabeled_matrix(g1, l1) != relabeled_matrix(g2, l2)) return {false, {}};
    const int v = g1.vertex_count();
    std::vector<int> inv2(static_cast<size_t>(v));
    for (int u = 0; u < v; ++u) inv2[l2[u]] = u;
    std::vector<int> witness(static_cast<size_t>(v));
    for (int u = 0; u < v; ++u) witness[u] = inv2[l1[u]];
    return {true, witness};
}

/// One isomorphism class of the classified input.
struct DigraphClass {
    std::vector<int> members;   // indices into the input list
    int representative = -1;    // first member in input order
    BigInt aut_order;
    BinaryMatrix canonical{1};
};

/// Partitions the input by canonical form; classes come out sorted by
/// (automorphism order, canonical form).
inline std::vector<DigraphClass> classify(const std::vector<Digraph>& graphs,
                                          long long node_budget = kDefaultNodeBudget) {
    std::map<std::string, DigraphClass> by_form;
    for (int idx = 0; idx < static_cast<int>(graphs.size()); ++idx) {
        CanonicalResult canon = canonicalize(graphs[idx], node_budget);
        BinaryMatrix form = relabeled_matrix(graphs[idx], canon.label);
        std::string key;
        key.reserve(static_cast<size_t>(form.order()) * form.order());
        for (int i = 0; i < form.order(); ++i)
            for (int j = 0; j < form.order(); ++j) key += form.get(i, j) ? '1' : '0';
        key = std::to_string(form.order()) + "/" + key;
        auto it = by_form.find(key);
        if (it == by_form.end()) {
            DigraphClass cls;
            cls.members = {idx};
            cls.representative = idx;
            cls.aut_order = canon.aut_order;
            cls.canonical = form;
            by_form.emplace(std::move(key), std::move(cls));
        } else {
            it->second.members.push_back(idx);
        }
    }
    std::vector<std::pair<std::string, DigraphClass>> flat;
    flat.reserve(by_form.size());
    for (auto& [key, cls] : by_form) flat.emplace_back(key, std::move(cls));
    std::sort(flat.begin(), flat.end(), [](const auto& a, const auto& b) {
        if (a.second.aut_order != b.second.aut_order)
            return a.second.aut_order < b.second.aut_order;
        return a.first < b.first;
    });
    std::vector<DigraphClass> out;
    out.reserve(flat.size());
    for (auto& [key, cls] : flat) out.push_back(std::move(cls));
    return out;
}

} // namespace dsrg
