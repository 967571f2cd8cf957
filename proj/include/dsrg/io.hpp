#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsrg/block_matrix.hpp"
#include "dsrg/cyclic_poly.hpp"
#include "dsrg/digraph.hpp"

namespace dsrg {

/// Malformed textual input.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

namespace io_detail {

inline std::string next_line(std::istream& in, const char* what) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return line;
    }
    throw parse_error(std::string("unexpected end of input, expected ") + what);
}

inline std::vector<long long> split_ints(const std::string& line, const char* what) {
    std::istringstream ss(line);
    std::vector<long long> out;
    long long v;
    while (ss >> v) out.push_back(v);
    std::string rest;
    if (ss.fail() && !ss.eof()) throw parse_error(std::string("expected integers in ") + what +
                                                  " line: '" + line + "'");
    return out;
}

} // namespace io_detail

// --- BinaryMatrix: header "v", then v lines of v characters from {0,1} ---

inline void write_binary_matrix(std::ostream& out, const BinaryMatrix& m) {
    out << m.order() << '\n';
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) out << (m.get(i, j) ? '1' : '0');
        out << '\n';
    }
}

inline BinaryMatrix read_binary_matrix(std::istream& in) {
    auto header = io_detail::split_ints(io_detail::next_line(in, "matrix header"), "matrix header");
    if (header.size() != 1 || header[0] < 1)
        throw parse_error("matrix header must be a single positive vertex count");
    const int v = static_cast<int>(header[0]);
    BinaryMatrix m(v);
    for (int i = 0; i < v; ++i) {
        std::string row = io_detail::next_line(in, "matrix row");
        if (static_cast<int>(row.size()) != v)
            throw parse_error("matrix row " + std::to_string(i + 1) + " has length " +
                              std::to_string(row.size()) + ", expected " + std::to_string(v));
        for (int j = 0; j < v; ++j) {
            if (row[j] == '1') m.set(i, j, true);
            else if (row[j] != '0')
                throw parse_error("matrix row " + std::to_string(i + 1) +
                                  " contains character '" + std::string(1, row[j]) + "'");
        }
    }
    return m;
}

// --- Edge list: header "v e", then e lines "i j" with 1-based endpoints ---

inline void write_edge_list(std::ostream& out, const Digraph& g) {
    out << g.vertex_count() << ' ' << g.arc_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u)
        g.out(u).for_each([&](int w) { out << (u + 1) << ' ' << (w + 1) << '\n'; });
}

inline Digraph read_edge_list(std::istream& in) {
    auto header = io_detail::split_ints(io_detail::next_line(in, "edge list header"),
                                        "edge list header");
    if (header.size() != 2 || header[0] < 1 || header[1] < 0)
        throw parse_error("edge list header must be 'v e'");
    const int v = static_cast<int>(header[0]);
    const long long e = header[1];
    Digraph g(v);
    for (long long a = 0; a < e; ++a) {
        auto arc = io_detail::split_ints(io_detail::next_line(in, "arc"), "arc");
        if (arc.size() != 2) throw parse_error("arc line must be 'i j'");
        if (arc[0] < 1 || arc[0] > v || arc[1] < 1 || arc[1] > v)
            throw parse_error("arc endpoint out of range: " + std::to_string(arc[0]) + " " +
                              std::to_string(arc[1]));
        g.add_arc(static_cast<int>(arc[0]) - 1, static_cast<int>(arc[1]) - 1);
    }
    return g;
}

// --- CompactMatrix: header "b m", then b lines of b comma-joined coefficient
//     vectors separated by spaces (modulus prefix omitted, taken from header) ---

inline void write_compact_matrix(std::ostream& out, const CompactMatrix& c) {
    out << c.block_dim() << ' ' << c.modulus() << '\n';
    for (int i = 0; i < c.block_dim(); ++i) {
        for (int j = 0; j < c.block_dim(); ++j) {
            if (j) out << ' ';
            const CyclicPoly& p = c.at(i, j);
            for (int e = 0; e < c.modulus(); ++e) {
                if (e) out << ',';
                out << p[e].to_string();
            }
        }
        out << '\n';
    }
}

inline CompactMatrix read_compact_matrix(std::istream& in) {
    auto header = io_detail::split_ints(io_detail::next_line(in, "compact header"),
                                        "compact header");
    if (header.size() != 2 || header[0] < 1 || header[1] < 1)
        throw parse_error("compact header must be 'b m'");
    const int b = static_cast<int>(header[0]);
    const int m = static_cast<int>(header[1]);
    CompactMatrix c(b, m);
    for (int i = 0; i < b; ++i) {
        std::istringstream row(io_detail::next_line(in, "compact row"));
        std::string tok;
        for (int j = 0; j < b; ++j) {
            if (!(row >> tok))
                throw parse_error("compact row " + std::to_string(i + 1) + " has fewer than " +
                                  std::to_string(b) + " entries");
            try {
                c.at(i, j) = CyclicPoly::parse_coeffs(tok, m);
            } catch (const std::invalid_argument& ex) {
                throw parse_error("compact entry (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + "): " + ex.what());
            }
        }
        if (row >> tok)
            throw parse_error("compact row " + std::to_string(i + 1) + " has extra entries");
    }
    return c;
}

// --- Format detection for graph-bearing files ---

enum class GraphFormat { Matrix, Edges, Compact };

/// Heuristic: a one-integer header is a matrix; a two-integer header is an
/// edge list unless the following line contains commas (compact form).
inline GraphFormat detect_format(std::istream& in) {
    std::streampos start = in.tellg();
    std::string first, second;
    std::getline(in, first);
    std::getline(in, second);
    in.clear();
    in.seekg(start);
    auto ints = io_detail::split_ints(first, "header");
    if (ints.size() == 1) return GraphFormat::Matrix;
    if (ints.size() == 2)
        return second.find(',') != std::string::npos ? GraphFormat::Compact : GraphFormat::Edges;
    throw parse_error("unrecognized input header: '" + first + "'");
}

// --- Permutations: one line of space-separated 1-based images of 1..v ---

inline void write_permutation(std::ostream& out, const std::vector<int>& perm) {
    for (size_t i = 0; i < perm.size(); ++i) {
        if (i) out << ' ';
        out << perm[i] + 1;
    }
    out << '\n';
}

} // namespace dsrg
