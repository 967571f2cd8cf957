#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "dsrg/block_matrix.hpp"
#include "dsrg/cyclic_poly.hpp"
#include "dsrg/family.hpp"

namespace dsrg {

struct SearchLimits {
    long long max_nodes = -1;   // negative means unlimited
};

/// Searches for 9x9 compact matrices over modulus 2n+3 with binary entries,
/// zero constant terms on diagonal blocks, prescribed per-block coefficient
/// sums (target_counts), the fixed/derived structure of the family template,
/// and A^2 + 3A uniformly equal to (2n+4) times the all-ones block.
struct SearchSpec {
    int n;
    IntegerMatrix target_counts;
    SearchLimits limits;
    int jobs = 1;

    explicit SearchSpec(int n_)
        : n(checked(n_)), target_counts(build_block_counts(n_)) {
        if (n_ > 2) limits.max_nodes = 100'000'000;
    }

private:
    static int checked(int n) {
        if (n < 1) throw std::invalid_argument("SearchSpec: requires n >= 1");
        return n;
    }
};

struct SearchStats {
    long long nodes = 0;
    long long solution_count = 0;
    bool complete = true;
    double wall_seconds = 0;
    std::string warning;
    std::vector<long long> prunes_per_variable;
};

struct SearchResult {
    std::vector<CompactMatrix> solutions;
    SearchStats stats;
};

enum class EntryKind { Fixed, Forced, Derived, Free };

/// Reported role of one grid entry (1-based coordinates): pinned outright,
/// forced by its coefficient sum, derived from another entry, or a genuine
/// search unknown with its sum target and excluded exponents.
struct EntryRole {
    int row = 0, col = 0;
    EntryKind kind = EntryKind::Free;
    int source_row = 0, source_col = 0;   // for Derived
    int shift = 0;                        // x-power applied to the source
    long long coeff_sum = -1;             // for Free/Forced
    std::vector<int> excluded_exponents;  // positions pinned to zero (loop-freeness)
    std::string note;
};

namespace search_detail {

constexpr int kGrid = 9;
constexpr std::array<int, 7> kBaseCols = {0, 1, 3, 4, 5, 6, 8};

inline int row_shift(int i) { return i <= 5 ? i : 0; }
inline int row_source(int i) { return i <= 5 ? 0 : 6; }
inline int col_shift(int j) { return (j == 2 || j == 7) ? 1 : 0; }
inline int col_source(int j) { return j == 2 ? 1 : (j == 7 ? 8 : j); }

inline int slot_of(int r, int c) {
    const int row_part = r == 0 ? 0 : 7;
    for (int idx = 0; idx < 7; ++idx)
        if (kBaseCols[idx] == c) return row_part + idx;
    throw std::logic_error("slot_of: not a base slot");
}

struct Variable {
    int slot = -1;
    int row = 0, col = 0;       // 0-based base-slot coordinates
    long long sum = 0;
    uint32_t allowed = 0;
    std::vector<uint32_t> domain;
};

struct Check {
    int i = 0, j = 0;           // canonical W entry (0-based)
    uint16_t dep = 0;           // variable order indices it depends on
};

struct Layout {
    int n = 0, m = 0;
    bool feasible = true;
    std::string warning;
    std::array<uint32_t, 14> fixed_mask{};
    std::array<uint32_t, 14> excluded{};
    std::array<int, 14> slot_var{};        // slot -> order index, -1 when fixed
    std::vector<Variable> vars;            // instantiation order
    std::vector<Check> checks;
    std::vector<std::vector<int>> fire;    // per variable: checks that fire there
};

inline void gen_combinations(const std::vector<int>& positions, int take,
                             std::vector<uint32_t>& out) {
    if (take == 0) {
        out.push_back(0);
        return;
    }
    std::vector<int> pick(static_cast<size_t>(take));
    // lexicographic enumeration of ascending index tuples
    auto rec = [&](auto&& self, int from, int depth) -> void {
        if (depth == take) {
            uint32_t mask = 0;
            for (int d = 0; d < take; ++d) mask |= uint32_t{1} << positions[pick[d]];
            out.push_back(mask);
            return;
        }
        for (int idx = from; idx <= static_cast<int>(positions.size()) - (take - depth); ++idx) {
            pick[depth] = idx;
            self(self, idx + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
}

inline Layout build_layout(const SearchSpec& spec) {
    Layout lay;
    lay.slot_var.fill(-1);
    lay.n = spec.n;
    lay.m = 2 * spec.n + 3;
    if (lay.m > 31)
        throw std::invalid_argument("search: n too large (exponent masks hold up to 31 positions)");
    if (spec.target_counts.order() != kGrid)
        throw std::invalid_argument("search: target count matrix must be 9x9");

    long long tgt[kGrid][kGrid];
    for (int i = 0; i < kGrid; ++i)
        for (int j = 0; j < kGrid; ++j) {
            const BigInt& e = spec.target_counts.at(i, j);
            if (!e.fits_int64()) {
                lay.feasible = false;
                lay.warning = "target count out of range";
                return lay;
            }
            tgt[i][j] = e.to_int64();
        }

    // Structural consistency: derived rows and columns must carry the same
    // sums as their sources, and the pinned entries must match.
    for (int i = 1; i < kGrid; ++i) {
        if (i == 6) continue;
        const int src = row_source(i);
        for (int j = 0; j < kGrid; ++j)
            if (tgt[i][j] != tgt[src][j]) {
                lay.feasible = false;
                lay.warning = "target row " + std::to_string(i + 1) +
                              " is inconsistent with row " + std::to_string(src + 1);
                return lay;
            }
    }
    for (int j : {2, 7}) {
        const int src = col_source(j);
        for (int i = 0; i < kGrid; ++i)
            if (tgt[i][j] != tgt[i][src]) {
                lay.feasible = false;
                lay.warning = "target column " + std::to_string(j + 1) +
                              " is inconsistent with column " + std::to_string(src + 1);
                return lay;
            }
    }
    if (tgt[0][1] != spec.n + 1 || tgt[6][1] != 1) {
        lay.feasible = false;
        lay.warning = "target counts contradict the pinned entries [1,2] and [7,2]";
        return lay;
    }

    const long long want = 3LL * lay.m;
    for (int i = 0; i < kGrid; ++i) {
        long long rs = 0, cs = 0;
        for (int j = 0; j < kGrid; ++j) {
            rs += tgt[i][j];
            cs += tgt[j][i];
        }
        if (rs != want || cs != want) {
            lay.warning = "target row/column sums differ from 3(2n+3); the search is vacuous";
            break;
        }
    }

    // Exponents pinned to zero so the decompactified diagonal stays loop-free:
    // diagonal block (i,i) is a rotation of its base slot.
    for (int i = 0; i < kGrid; ++i) {
        const int slot = slot_of(row_source(i), col_source(i));
        const int rot = (row_shift(i) + col_shift(i)) % lay.m;
        lay.excluded[slot] |= uint32_t{1} << ((lay.m - rot) % lay.m);
    }

    lay.slot_var.fill(-1);
    const int p_slot = slot_of(0, 1);
    const int one_slot = slot_of(6, 1);
    for (int e = 0; e <= spec.n; ++e) lay.fixed_mask[p_slot] |= uint32_t{1} << e;
    lay.fixed_mask[one_slot] = 1;

    const uint32_t full = (uint32_t{1} << lay.m) - 1;
    std::vector<Variable> pending;
    for (int r : {6, 0})
        for (int c : kBaseCols) {
            if (c == 1) continue;   // pinned slots
            Variable var;
            var.slot = slot_of(r, c);
            var.row = r;
            var.col = c;
            var.sum = tgt[r][c];
            var.allowed = full & ~lay.excluded[var.slot];
            if (var.sum < 0 || var.sum > std::popcount(var.allowed)) {
                lay.feasible = false;
                lay.warning = "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                              ") cannot hold a binary polynomial with coefficient sum " +
                              std::to_string(var.sum);
                return lay;
            }
            pending.push_back(var);
        }

    // Row-7 unknowns first, each group in increasing coefficient-sum order.
    std::stable_sort(pending.begin(), pending.end(), [](const Variable& a, const Variable& b) {
        if (a.row != b.row) return a.row > b.row;
        if (a.sum != b.sum) return a.sum < b.sum;
        return a.col < b.col;
    });
    for (int t = 0; t < static_cast<int>(pending.size()); ++t) {
        std::vector<int> positions;
        for (int e = 0; e < lay.m; ++e)
            if (pending[t].allowed >> e & 1) positions.push_back(e);
        gen_combinations(positions, static_cast<int>(pending[t].sum), pending[t].domain);
        lay.slot_var[pending[t].slot] = t;
    }
    lay.vars = std::move(pending);

    // Canonical W entries: rows 1 and 7 against the source columns; every
    // other entry of A^2 + 3A is a rotation or copy of these.
    lay.fire.assign(lay.vars.size(), {});
    for (int i : {0, 6})
        for (int c : kBaseCols) {
            Check chk;
            chk.i = i;
            chk.j = c;
            auto add_dep = [&](int slot) {
                int t = lay.slot_var[slot];
                if (t >= 0) chk.dep |= uint16_t{1} << t;
            };
            for (int k = 0; k < kGrid; ++k) {
                add_dep(slot_of(row_source(i), col_source(k)));
                add_dep(slot_of(row_source(k), col_source(c)));
            }
            add_dep(slot_of(row_source(i), col_source(c)));
            if (chk.dep == 0) continue;   // would be constant; cannot happen with 12 unknowns
            const int last = 15 - std::countl_zero(chk.dep);
            lay.checks.push_back(chk);
            lay.fire[last].push_back(static_cast<int>(lay.checks.size()) - 1);
        }

    return lay;
}

/// Single-thread DFS over the variable domains with incremental verification
/// of every fully determined canonical entry of A^2 + 3A.
class Worker {
public:
    Worker(const Layout& lay, std::atomic<long long>& nodes, std::atomic<bool>& aborted,
           long long budget)
        : lay_(lay), nodes_(nodes), aborted_(aborted), budget_(budget),
          prunes_(lay.vars.size(), 0) {
        for (int s = 0; s < 14; ++s) value_[s] = lay_.fixed_mask[s];
    }

    void run(int first_offset, int first_stride) {
        if (lay_.vars.empty()) return;
        dfs(0, first_offset, first_stride);
    }

    std::vector<std::array<uint32_t, 14>>& raw_solutions() { return found_; }
    const std::vector<long long>& prunes() const { return prunes_; }

private:
    const Layout& lay_;
    std::atomic<long long>& nodes_;
    std::atomic<bool>& aborted_;
    long long budget_;
    std::array<uint32_t, 14> value_{};
    std::vector<std::array<uint32_t, 14>> found_;
    std::vector<long long> prunes_;

    bool bump() {
        long long seen = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (budget_ >= 0 && seen > budget_) {
            aborted_.store(true, std::memory_order_relaxed);
            return false;
        }
        return !aborted_.load(std::memory_order_relaxed);
    }

    bool check_entry(int i, int j) const {
        const int m = lay_.m;
        const int target = 2 * lay_.n + 4;
        std::array<int, 32> acc{};
        for (int k = 0; k < kGrid; ++k) {
            uint32_t am = value_[slot_of(row_source(i), col_source(k))];
            const uint32_t bm0 = value_[slot_of(row_source(k), col_source(j))];
            const int rot = row_shift(i) + col_shift(k) + row_shift(k) + col_shift(j);
            while (am) {
                const int a = std::countr_zero(am);
                am &= am - 1;
                uint32_t bm = bm0;
                while (bm) {
                    const int b = std::countr_zero(bm);
                    bm &= bm - 1;
                    ++acc[(a + b + rot) % m];
                }
            }
        }
        uint32_t self = value_[slot_of(row_source(i), col_source(j))];
        const int self_rot = row_shift(i) + col_shift(j);
        while (self) {
            const int a = std::countr_zero(self);
            self &= self - 1;
            acc[(a + self_rot) % m] += 3;
        }
        for (int q = 0; q < m; ++q)
            if (acc[q] != target) return false;
        return true;
    }

    void dfs(int t, int first_offset, int first_stride) {
        const Variable& var = lay_.vars[t];
        const size_t begin = t == 0 ? static_cast<size_t>(first_offset) : 0;
        const size_t step = t == 0 ? static_cast<size_t>(first_stride) : 1;
        for (size_t d = begin; d < var.domain.size(); d += step) {
            if (!bump()) return;
            value_[var.slot] = var.domain[d];
            bool ok = true;
            for (int c : lay_.fire[t])
                if (!check_entry(lay_.checks[c].i, lay_.checks[c].j)) {
                    ok = false;
                    break;
                }
            if (!ok) {
                ++prunes_[t];
                continue;
            }
            if (t + 1 == static_cast<int>(lay_.vars.size()))
                found_.push_back(value_);
            else
                dfs(t + 1, first_offset, first_stride);
        }
        value_[var.slot] = 0;
    }
};

inline CompactMatrix assemble(const Layout& lay, const std::array<uint32_t, 14>& value) {
    const int m = lay.m;
    std::array<CyclicPoly, 14> base{
        CyclicPoly(m), CyclicPoly(m), CyclicPoly(m), CyclicPoly(m), CyclicPoly(m),
        CyclicPoly(m), CyclicPoly(m), CyclicPoly(m), CyclicPoly(m), CyclicPoly(m),
        CyclicPoly(m), CyclicPoly(m), CyclicPoly(m), CyclicPoly(m)};
    for (int s = 0; s < 14; ++s)
        for (int e = 0; e < m; ++e)
            if (value[s] >> e & 1) base[s][e] = BigInt(1);
    CompactMatrix a(kGrid, m);
    for (int i = 0; i < kGrid; ++i)
        for (int j = 0; j < kGrid; ++j)
            a.at(i, j) = base[slot_of(row_source(i), col_source(j))]
                             .rotated(row_shift(i) + col_shift(j));
    return a;
}

inline bool compact_less(const CompactMatrix& a, const CompactMatrix& b) {
    for (int i = 0; i < a.block_dim(); ++i)
        for (int j = 0; j < a.block_dim(); ++j)
            for (int e = 0; e < a.modulus(); ++e) {
                const auto cmp = a.at(i, j)[e] <=> b.at(i, j)[e];
                if (cmp != 0) return cmp < 0;
            }
    return false;
}

} // namespace search_detail

/// Role of every grid entry under the structural constraints: which entries
/// are pinned, which follow from others, and which remain true unknowns
/// together with their coefficient-sum targets.
inline std::vector<EntryRole> free_variables(const SearchSpec& spec) {
    using namespace search_detail;
    Layout lay = build_layout(spec);
    std::vector<EntryRole> roles;
    roles.reserve(81);
    for (int i = 0; i < kGrid; ++i)
        for (int j = 0; j < kGrid; ++j) {
            EntryRole role;
            role.row = i + 1;
            role.col = j + 1;
            if (i >= 1 && i <= 5) {
                role.kind = EntryKind::Derived;
                role.source_row = i;
                role.source_col = j + 1;
                role.shift = 1;
                role.note = "x-shift of the entry above";
            } else if (i >= 7) {
                role.kind = EntryKind::Derived;
                role.source_row = 7;
                role.source_col = j + 1;
                role.shift = 0;
                role.note = "copy of row 7";
            } else if (j == 2 || j == 7) {
                role.kind = EntryKind::Derived;
                role.source_row = i + 1;
                role.source_col = col_source(j) + 1;
                role.shift = 1;
                role.note = "x-shift of column " + std::to_string(col_source(j) + 1);
            } else if (i == 0 && j == 1) {
                role.kind = EntryKind::Fixed;
                role.coeff_sum = spec.n + 1;
                role.note = "pinned to 1+x+...+x^n";
            } else if (i == 6 && j == 1) {
                role.kind = EntryKind::Fixed;
                role.coeff_sum = 1;
                role.note = "pinned to 1";
            } else {
                const int slot = slot_of(i, j);
                const int t = lay.slot_var[slot];
                for (int e = 0; e < lay.m; ++e)
                    if (lay.excluded[slot] >> e & 1) role.excluded_exponents.push_back(e);
                if (t < 0) {   // layout declared infeasible before variables were built
                    role.kind = EntryKind::Free;
                    role.note = "unknown (infeasible target: " + lay.warning + ")";
                } else if (lay.vars[t].domain.size() <= 1) {
                    role.kind = EntryKind::Forced;
                    role.coeff_sum = lay.vars[t].sum;
                    role.note = lay.vars[t].sum == 0
                                    ? "forced to the zero polynomial"
                                    : "forced: coefficient sum fills every allowed exponent";
                } else {
                    role.kind = EntryKind::Free;
                    role.coeff_sum = lay.vars[t].sum;
                    role.note = "free unknown over " + std::to_string(lay.vars[t].domain.size()) +
                                " candidates";
                }
            }
            roles.push_back(std::move(role));
        }
    return roles;
}

/// Exhaustive backtracking over the free entries. Solutions come out in a
/// deterministic order (lexicographic on concatenated coefficient vectors)
/// regardless of the number of worker threads.
inline SearchResult search(const SearchSpec& spec) {
    using namespace search_detail;
    const auto start = std::chrono::steady_clock::now();
    Layout lay = build_layout(spec);
    SearchResult result;
    result.stats.prunes_per_variable.assign(lay.vars.size(), 0);
    result.stats.warning = lay.warning;
    if (!lay.feasible) {
        result.stats.complete = true;
        result.stats.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }

    std::atomic<long long> nodes{0};
    std::atomic<bool> aborted{false};
    const long long budget = spec.limits.max_nodes;

    int jobs = std::max(1, spec.jobs);
    if (!lay.vars.empty())
        jobs = std::min(jobs, std::max(1, static_cast<int>(lay.vars[0].domain.size())));

    std::vector<Worker> workers;
    workers.reserve(static_cast<size_t>(jobs));
    for (int w = 0; w < jobs; ++w) workers.emplace_back(lay, nodes, aborted, budget);

    if (jobs == 1) {
        workers[0].run(0, 1);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            threads.emplace_back([&, w] { workers[w].run(w, jobs); });
        for (auto& th : threads) th.join();
    }

    std::vector<CompactMatrix> solutions;
    for (auto& worker : workers) {
        for (const auto& raw : worker.raw_solutions()) solutions.push_back(assemble(lay, raw));
        for (size_t t = 0; t < worker.prunes().size(); ++t)
            result.stats.prunes_per_variable[t] += worker.prunes()[t];
    }
    std::sort(solutions.begin(), solutions.end(), compact_less);

    for (const auto& sol : solutions)
        if (!(sol.coeff_sums() == spec.target_counts))
            throw std::logic_error("search: emitted solution violates the count target");

    result.solutions = std::move(solutions);
    result.stats.nodes = nodes.load();
    result.stats.solution_count = static_cast<long long>(result.solutions.size());
    result.stats.complete = !aborted.load();
    result.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace dsrg
