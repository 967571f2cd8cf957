#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsrg/bigint.hpp"
#include "dsrg/cyclic_poly.hpp"

namespace dsrg {

/// Square 0/1 matrix; adjacency matrices live here.
class BinaryMatrix {
public:
    explicit BinaryMatrix(int order)
        : order_(check_order(order)), bits_(static_cast<size_t>(order) * order, 0) {}

    static BinaryMatrix identity(int order) {
        BinaryMatrix m(order);
        for (int i = 0; i < order; ++i) m.set(i, i, true);
        return m;
    }

    int order() const { return order_; }

    bool get(int i, int j) const { return bits_[static_cast<size_t>(i) * order_ + j] != 0; }
    void set(int i, int j, bool value) { bits_[static_cast<size_t>(i) * order_ + j] = value ? 1 : 0; }

    int row_sum(int i) const {
        int s = 0;
        for (int j = 0; j < order_; ++j) s += get(i, j);
        return s;
    }

    int col_sum(int j) const {
        int s = 0;
        for (int i = 0; i < order_; ++i) s += get(i, j);
        return s;
    }

    bool operator==(const BinaryMatrix&) const = default;

private:
    int order_;
    std::vector<uint8_t> bits_;

    static int check_order(int v) {
        if (v < 1) throw std::invalid_argument("BinaryMatrix: order must be >= 1");
        return v;
    }
};

/// Small square matrix of exact integers; the result type of coefficient-sum
/// evaluation and the block arc-count targets.
class IntegerMatrix {
public:
    explicit IntegerMatrix(int order)
        : order_(check_order(order)), entries_(static_cast<size_t>(order) * order) {}

    static IntegerMatrix identity(int order) {
        IntegerMatrix m(order);
        for (int i = 0; i < order; ++i) m.at(i, i) = BigInt(1);
        return m;
    }

    static IntegerMatrix uniform(int order, BigInt value) {
        IntegerMatrix m(order);
        for (auto& e : m.entries_) e = value;
        return m;
    }

    int order() const { return order_; }

    const BigInt& at(int i, int j) const { return entries_[static_cast<size_t>(i) * order_ + j]; }
    BigInt& at(int i, int j) { return entries_[static_cast<size_t>(i) * order_ + j]; }

    BigInt row_sum(int i) const {
        BigInt s;
        for (int j = 0; j < order_; ++j) s += at(i, j);
        return s;
    }

    BigInt col_sum(int j) const {
        BigInt s;
        for (int i = 0; i < order_; ++i) s += at(i, j);
        return s;
    }

    friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
        a.require_same_order(b);
        IntegerMatrix out(a.order_);
        for (size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
        return out;
    }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
        a.require_same_order(b);
        IntegerMatrix out(a.order_);
        for (int i = 0; i < a.order_; ++i)
            for (int k = 0; k < a.order_; ++k) {
                const BigInt& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.order_; ++j)
                    out.at(i, j) += aik * b.at(k, j);
            }
        return out;
    }

    friend IntegerMatrix operator*(IntegerMatrix a, const BigInt& scalar) {
        for (auto& e : a.entries_) e *= scalar;
        return a;
    }

    bool operator==(const IntegerMatrix&) const = default;

private:
    int order_;
    std::vector<BigInt> entries_;

    static int check_order(int v) {
        if (v < 1) throw std::invalid_argument("IntegerMatrix: order must be >= 1");
        return v;
    }

    void require_same_order(const IntegerMatrix& rhs) const {
        if (order_ != rhs.order_)
            throw std::invalid_argument("IntegerMatrix: order mismatch");
    }
};

/// b-by-b grid of cyclic polynomials over a shared modulus m: the compact form
/// of a block matrix whose blocks are circulants of order m.
class CompactMatrix {
public:
    CompactMatrix(int block_dim, int modulus)
        : block_dim_(check_dim(block_dim)), modulus_(modulus),
          entries_(static_cast<size_t>(block_dim) * block_dim, CyclicPoly(modulus)) {}

    static CompactMatrix identity(int block_dim, int modulus) {
        CompactMatrix m(block_dim, modulus);
        for (int i = 0; i < block_dim; ++i) m.at(i, i) = CyclicPoly::constant(modulus, BigInt(1));
        return m;
    }

    /// Every entry equal to the given polynomial.
    static CompactMatrix uniform(int block_dim, const CyclicPoly& value) {
        CompactMatrix m(block_dim, value.modulus());
        for (auto& e : m.entries_) e = value;
        return m;
    }

    int block_dim() const { return block_dim_; }
    int modulus() const { return modulus_; }

    const CyclicPoly& at(int i, int j) const { return entries_[static_cast<size_t>(i) * block_dim_ + j]; }
    CyclicPoly& at(int i, int j) { return entries_[static_cast<size_t>(i) * block_dim_ + j]; }

    friend CompactMatrix operator+(const CompactMatrix& a, const CompactMatrix& b) {
        a.require_same_shape(b);
        CompactMatrix out(a.block_dim_, a.modulus_);
        for (size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
        return out;
    }

    friend CompactMatrix operator*(const CompactMatrix& a, const CompactMatrix& b) {
        a.require_same_shape(b);
        CompactMatrix out(a.block_dim_, a.modulus_);
        for (int i = 0; i < a.block_dim_; ++i)
            for (int k = 0; k < a.block_dim_; ++k) {
                const CyclicPoly& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.block_dim_; ++j)
                    out.at(i, j) += aik * b.at(k, j);
            }
        return out;
    }

    friend CompactMatrix operator*(CompactMatrix a, const BigInt& scalar) {
        for (auto& e : a.entries_) e = e * scalar;
        return a;
    }

    /// Entrywise evaluation at x = 1.
    IntegerMatrix coeff_sums() const {
        IntegerMatrix out(block_dim_);
        for (int i = 0; i < block_dim_; ++i)
            for (int j = 0; j < block_dim_; ++j)
                out.at(i, j) = at(i, j).coeff_sum();
        return out;
    }

    bool operator==(const CompactMatrix&) const = default;

private:
    int block_dim_;
    int modulus_;
    std::vector<CyclicPoly> entries_;

    static int check_dim(int b) {
        if (b < 1) throw std::invalid_argument("CompactMatrix: block dimension must be >= 1");
        return b;
    }

    void require_same_shape(const CompactMatrix& rhs) const {
        if (block_dim_ != rhs.block_dim_ || modulus_ != rhs.modulus_)
            throw std::invalid_argument("CompactMatrix: shape or modulus mismatch");
    }
};

/// Replaces each circulant block of M by its polynomial: block (I,J) maps to
/// the polynomial whose coefficient vector is the block's first row. The block
/// structure (b blocks of order m per side) is explicit, never inferred.
/// Throws if dimensions do not match or some block is not a circulant
/// (row i+1 must be row i cyclically shifted right by one).
inline CompactMatrix compactify(const BinaryMatrix& m, int block_dim, int block_order) {
    if (block_dim < 1 || block_order < 1)
        throw std::invalid_argument("compactify: block structure must be positive");
    if (m.order() != block_dim * block_order)
        throw std::invalid_argument("compactify: matrix order " + std::to_string(m.order()) +
                                    " does not equal " + std::to_string(block_dim) + "*" +
                                    std::to_string(block_order));
    CompactMatrix out(block_dim, block_order);
    for (int bi = 0; bi < block_dim; ++bi)
        for (int bj = 0; bj < block_dim; ++bj) {
            const int r0 = bi * block_order;
            const int c0 = bj * block_order;
            for (int i = 1; i < block_order; ++i)
                for (int j = 0; j < block_order; ++j) {
                    int src = j - i;
                    if (src < 0) src += block_order;
                    if (m.get(r0 + i, c0 + j) != m.get(r0, c0 + src))
                        throw std::invalid_argument("compactify: block (" + std::to_string(bi + 1) +
                                                    "," + std::to_string(bj + 1) + ") is not circulant");
                }
            CyclicPoly p(block_order);
            for (int j = 0; j < block_order; ++j)
                if (m.get(r0, c0 + j)) p[j] = BigInt(1);
            out.at(bi, bj) = p;
        }
    return out;
}

/// Exact inverse of compactify; requires every entry to be a 0/1 polynomial.
inline BinaryMatrix decompactify(const CompactMatrix& c) {
    const int b = c.block_dim();
    const int m = c.modulus();
    for (int bi = 0; bi < b; ++bi)
        for (int bj = 0; bj < b; ++bj) {
            const CyclicPoly& p = c.at(bi, bj);
            for (int e = 0; e < m; ++e)
                if (!p[e].is_zero() && p[e] != BigInt(1))
                    throw std::invalid_argument("decompactify: entry (" + std::to_string(bi + 1) +
                                                "," + std::to_string(bj + 1) +
                                                ") has non-binary coefficient at exponent " +
                                                std::to_string(e));
        }
    BinaryMatrix out(b * m);
    for (int bi = 0; bi < b; ++bi)
        for (int bj = 0; bj < b; ++bj) {
            const CyclicPoly& p = c.at(bi, bj);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    int src = j - i;
                    if (src < 0) src += m;
                    if (!p[src].is_zero()) out.set(bi * m + i, bj * m + j, true);
                }
        }
    return out;
}

} // namespace dsrg
