// Command-line front end: generate family members, verify and classify
// digraphs, run the compact-matrix search, compute automorphism groups, and
// convert between the text formats.
//
// Exit codes: 0 ok, 1 verification failed, 2 domain error, 3 parse/IO error,
// 4 search budget exhausted.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dsrg/block_matrix.hpp"
#include "dsrg/canonical.hpp"
#include "dsrg/cyclic_poly.hpp"
#include "dsrg/digraph.hpp"
#include "dsrg/family.hpp"
#include "dsrg/io.hpp"
#include "dsrg/search.hpp"
#include "dsrg/verify.hpp"

namespace {

namespace fs = std::filesystem;

enum ExitCode {
    kOk = 0,
    kVerifyFailed = 1,
    kDomainError = 2,
    kParseError = 3,
    kBudgetExhausted = 4,
};

dsrg::Digraph load_digraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dsrg::parse_error("cannot open '" + path + "'");
    switch (dsrg::detect_format(in)) {
        case dsrg::GraphFormat::Matrix:
            return dsrg::Digraph::from_matrix(dsrg::read_binary_matrix(in));
        case dsrg::GraphFormat::Edges:
            return dsrg::read_edge_list(in);
        case dsrg::GraphFormat::Compact:
            return dsrg::Digraph::from_matrix(dsrg::decompactify(dsrg::read_compact_matrix(in)));
    }
    throw dsrg::parse_error("unreachable");
}

dsrg::DsrgParams parse_params(const std::string& text) {
    std::vector<long long> vals;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            vals.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("--params expects five integers v,k,t,l,m");
        }
    }
    if (vals.size() != 5) throw std::invalid_argument("--params expects five integers v,k,t,l,m");
    return {vals[0], vals[1], vals[2], vals[3], vals[4]};
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw dsrg::parse_error("cannot open '" + path + "' for writing");
    return out;
}

void write_digraph(std::ostream& out, const dsrg::Digraph& g, const std::string& format,
                   int block_dim) {
    if (format == "matrix") {
        dsrg::write_binary_matrix(out, g.to_matrix());
    } else if (format == "edges") {
        dsrg::write_edge_list(out, g);
    } else if (format == "compact") {
        if (block_dim <= 0)
            throw std::invalid_argument("compact output needs --blocks (block count per side)");
        if (g.vertex_count() % block_dim != 0)
            throw std::invalid_argument("vertex count is not divisible by the block count");
        dsrg::write_compact_matrix(out,
                                   compactify(g.to_matrix(), block_dim,
                                              g.vertex_count() / block_dim));
    } else {
        throw std::invalid_argument("unknown format '" + format + "'");
    }
}

int cmd_generate(int n, const std::string& out_path, const std::string& format) {
    if (n < 2)
        throw std::invalid_argument("the family construction is defined for n >= 2");
    dsrg::DsrgParams params = dsrg::family_params(n);
    dsrg::CompactMatrix compact = dsrg::build_family_compact(n);
    dsrg::Digraph g = dsrg::Digraph::from_matrix(dsrg::decompactify(compact));

    const bool to_file = !out_path.empty();
    if (to_file) {
        auto out = open_output(out_path);
        if (format == "compact")
            dsrg::write_compact_matrix(out, compact);
        else
            write_digraph(out, g, format, 9);
    } else {
        if (format == "compact")
            dsrg::write_compact_matrix(std::cout, compact);
        else
            write_digraph(std::cout, g, format, 9);
    }

    bool ok = dsrg::verify_matrix(g, params).ok && dsrg::verify_combinatorial(g, params).ok;
    std::ostream& summary = to_file ? std::cout : std::cerr;
    summary << "dsrg" << params.to_string() << (ok ? ": VERIFIED" : ": FAILED") << "\n";
    return ok ? kOk : kVerifyFailed;
}

int cmd_verify(const std::string& params_text, const std::string& in_path,
               const std::string& method) {
    dsrg::DsrgParams params = parse_params(params_text);
    dsrg::Digraph g = load_digraph(in_path);
    if (g.vertex_count() != params.v) {
        std::cerr << "graph has " << g.vertex_count() << " vertices, parameters say " << params.v
                  << "\n";
        return kVerifyFailed;
    }
    bool ok = true;
    if (method == "matrix" || method == "both") {
        dsrg::VerifyReport r = dsrg::verify_matrix(g, params);
        std::cout << "matrix identity: " << (r.ok ? "ok" : "violated") << "\n";
        if (!r.ok) {
            std::cerr << r.detail << "\n";
            ok = false;
        }
    }
    if (method == "count" || method == "both") {
        dsrg::VerifyReport r = dsrg::verify_combinatorial(g, params);
        std::cout << "path counts: " << (r.ok ? "ok" : "violated") << "\n";
        if (!r.ok) {
            std::cerr << r.detail << "\n";
            ok = false;
        }
    }
    if (ok) std::cout << "VERIFIED dsrg" << params.to_string() << "\n";
    return ok ? kOk : kVerifyFailed;
}

int cmd_infer(const std::string& in_path) {
    dsrg::InferResult r = dsrg::infer_params(load_digraph(in_path));
    if (!r.ok) {
        std::cerr << "not a dsrg: " << r.reason << "\n";
        return kVerifyFailed;
    }
    std::cout << "dsrg" << r.params.to_string() << "\n";
    return kOk;
}

int cmd_aut(const std::string& in_path) {
    dsrg::AutomorphismGroup aut = dsrg::automorphism_group(load_digraph(in_path));
    std::cout << "order: " << aut.order.to_string() << "\n";
    std::cout << "generators: " << aut.generators.size() << "\n";
    for (const auto& gen : aut.generators) dsrg::write_permutation(std::cout, gen);
    return kOk;
}

std::vector<std::string> solution_files(const std::string& dir) {
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".cm")
            names.push_back(entry.path().filename().string());
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return names;
}

int cmd_classify(const std::string& dir) {
    if (!fs::is_directory(dir)) throw dsrg::parse_error("'" + dir + "' is not a directory");
    std::vector<std::string> names = solution_files(dir);
    if (names.empty()) throw dsrg::parse_error("no .cm files in '" + dir + "'");
    std::vector<dsrg::Digraph> graphs;
    for (const auto& name : names) {
        std::ifstream in(fs::path(dir) / name);
        if (!in) throw dsrg::parse_error("cannot open '" + name + "'");
        graphs.push_back(
            dsrg::Digraph::from_matrix(dsrg::decompactify(dsrg::read_compact_matrix(in))));
    }
    auto classes = dsrg::classify(graphs);
    std::cout << "class size aut_order representative\n";
    for (size_t c = 0; c < classes.size(); ++c)
        std::cout << c + 1 << " " << classes[c].members.size() << " "
                  << classes[c].aut_order.to_string() << " "
                  << names[static_cast<size_t>(classes[c].representative)] << "\n";
    std::cout << "classes: " << classes.size() << "\n";
    return kOk;
}

int cmd_search(int n, long long budget, int jobs, const std::string& out_dir, bool no_classify) {
    dsrg::SearchSpec spec(n);
    if (budget >= 0) spec.limits.max_nodes = budget;
    spec.jobs = jobs;
    dsrg::SearchResult result = dsrg::search(spec);

    fs::create_directories(out_dir);
    for (size_t i = 0; i < result.solutions.size(); ++i) {
        auto out = open_output((fs::path(out_dir) / ("sol_" + std::to_string(i + 1) + ".cm")).string());
        dsrg::write_compact_matrix(out, result.solutions[i]);
    }

    std::cout << "n: " << n << "\n";
    std::cout << "params: " << dsrg::family_params(n).to_string() << "\n";
    std::cout << "nodes: " << result.stats.nodes << "\n";
    if (!result.stats.warning.empty()) std::cout << "warning: " << result.stats.warning << "\n";
    std::cout << "solutions: " << result.solutions.size() << "\n";

    long long classes = -1;
    if (!no_classify && !result.solutions.empty()) {
        std::vector<dsrg::Digraph> graphs;
        graphs.reserve(result.solutions.size());
        for (const auto& sol : result.solutions)
            graphs.push_back(dsrg::Digraph::from_matrix(dsrg::decompactify(sol)));
        classes = static_cast<long long>(dsrg::classify(graphs).size());
    }

    {
        auto stats = open_output((fs::path(out_dir) / "stats.txt").string());
        stats << "n: " << n << "\n";
        stats << "nodes: " << result.stats.nodes << "\n";
        stats << "solutions: " << result.solutions.size() << "\n";
        stats << "complete: " << (result.stats.complete ? "true" : "false") << "\n";
        stats << "wall_ms: " << static_cast<long long>(result.stats.wall_seconds * 1000) << "\n";
        if (!result.stats.warning.empty()) stats << "warning: " << result.stats.warning << "\n";
        if (classes >= 0) stats << "classes: " << classes << "\n";
        stats << "prunes:";
        for (long long p : result.stats.prunes_per_variable) stats << " " << p;
        stats << "\n";
    }

    if (classes >= 0) std::cout << "classes: " << classes << "\n";
    if (!result.stats.complete) {
        std::cerr << "search stopped: node budget exhausted, results are partial\n";
        return kBudgetExhausted;
    }
    return kOk;
}

int cmd_convert(const std::string& in_path, const std::string& to, const std::string& out_path,
                int block_dim) {
    dsrg::Digraph g = load_digraph(in_path);
    if (!out_path.empty()) {
        auto out = open_output(out_path);
        write_digraph(out, g, to, block_dim);
    } else {
        write_digraph(std::cout, g, to, block_dim);
    }
    return kOk;
}

int cmd_demo() {
    const char* rows[8] = {
        "00010110", "10000011", "01001001", "00101100",
        "00110100", "10010010", "11000001", "01101000"};
    dsrg::BinaryMatrix s(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (rows[i][j] == '1') s.set(i, j, true);

    std::cout << "dsrg(8,3,2,1,1) as a 2x2 grid of circulant blocks of order 4\n\n";
    std::cout << "adjacency matrix:\n";
    dsrg::write_binary_matrix(std::cout, s);

    dsrg::CompactMatrix sx = compactify(s, 2, 4);
    std::vector<std::vector<std::string>> pretty(2, std::vector<std::string>(2));
    size_t width = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            pretty[i][j] = sx.at(i, j).pretty();
            width = std::max(width, pretty[i][j].size());
        }
    std::cout << "\ncompact form:\n";
    for (int i = 0; i < 2; ++i) {
        std::cout << "[ ";
        for (int j = 0; j < 2; ++j)
            std::cout << pretty[i][j] << std::string(width - pretty[i][j].size() + 2, ' ');
        std::cout << "]\n";
    }

    dsrg::Digraph g = dsrg::Digraph::from_matrix(s);
    dsrg::DsrgParams params{8, 3, 2, 1, 1};
    bool m_ok = dsrg::verify_matrix(g, params).ok;
    bool c_ok = dsrg::verify_combinatorial(g, params).ok;
    std::cout << "\nmatrix identity check: " << (m_ok ? "VERIFIED" : "FAILED") << "\n";
    std::cout << "path counting check:   " << (c_ok ? "VERIFIED" : "FAILED") << "\n";
    dsrg::InferResult inferred = dsrg::infer_params(g);
    if (inferred.ok) std::cout << "inferred parameters:   dsrg" << inferred.params.to_string() << "\n";
    return m_ok && c_ok ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-circulant constructions, search and verification of "
                 "directed strongly regular graphs"};
    app.require_subcommand(1);

    int rc = kOk;

    // generate
    auto* generate = app.add_subcommand("generate", "build a family member digraph (n >= 2)");
    int gen_n = 0;
    std::string gen_out, gen_format = "matrix";
    generate->add_option("--n", gen_n, "family index")->required();
    generate->add_option("--out", gen_out, "output file (default: stdout)");
    generate->add_option("--format", gen_format, "matrix|edges|compact")
        ->check(CLI::IsMember({"matrix", "edges", "compact"}));
    generate->callback([&] { rc = cmd_generate(gen_n, gen_out, gen_format); });

    // verify
    auto* verify = app.add_subcommand("verify", "check a digraph against dsrg parameters");
    std::string ver_params, ver_in, ver_method = "both";
    verify->add_option("--params", ver_params, "v,k,t,l,m")->required();
    verify->add_option("--in", ver_in, "input file (matrix, edge list or compact)")->required();
    verify->add_option("--method", ver_method, "matrix|count|both")
        ->check(CLI::IsMember({"matrix", "count", "both"}));
    verify->callback([&] { rc = cmd_verify(ver_params, ver_in, ver_method); });

    // infer
    auto* infer = app.add_subcommand("infer", "read parameters off a digraph and confirm them");
    std::string inf_in;
    infer->add_option("--in", inf_in, "input file")->required();
    infer->callback([&] { rc = cmd_infer(inf_in); });

    // search
    auto* search = app.add_subcommand("search", "enumerate compact matrices for index n");
    int sea_n = 0, sea_jobs = 1;
    long long sea_budget = -1;
    std::string sea_out;
    bool sea_no_classify = false;
    search->add_option("--n", sea_n, "family index")->required();
    search->add_option("--budget", sea_budget, "node budget (default: unlimited for n <= 2)");
    search->add_option("--jobs", sea_jobs, "worker threads")->check(CLI::PositiveNumber);
    search->add_option("--out", sea_out, "output directory")->required();
    search->add_flag("--no-classify", sea_no_classify, "skip isomorphism classification");
    search->callback(
        [&] { rc = cmd_search(sea_n, sea_budget, sea_jobs, sea_out, sea_no_classify); });

    // classify
    auto* classify = app.add_subcommand("classify", "group solution files by isomorphism");
    std::string cls_in;
    classify->add_option("--in", cls_in, "directory of .cm files")->required();
    classify->callback([&] { rc = cmd_classify(cls_in); });

    // aut
    auto* aut = app.add_subcommand("aut", "automorphism group order and generators");
    std::string aut_in;
    aut->add_option("--in", aut_in, "input file")->required();
    aut->callback([&] { rc = cmd_aut(aut_in); });

    // convert
    auto* convert = app.add_subcommand("convert", "transcode between matrix, edges and compact");
    std::string con_in, con_to, con_out;
    int con_blocks = 0;
    convert->add_option("--in", con_in, "input file")->required();
    convert->add_option("--to", con_to, "matrix|edges|compact")
        ->required()
        ->check(CLI::IsMember({"matrix", "edges", "compact"}));
    convert->add_option("--out", con_out, "output file (default: stdout)");
    convert->add_option("--blocks", con_blocks, "blocks per side (required for compact output)");
    convert->callback([&] { rc = cmd_convert(con_in, con_to, con_out, con_blocks); });

    // demo
    auto* demo = app.add_subcommand("demo", "walk through the 8-vertex worked example");
    demo->callback([&] { rc = cmd_demo(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kDomainError;
    } catch (const dsrg::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    }
    return rc;
}
