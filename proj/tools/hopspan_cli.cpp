// Command-line front end: generators, builders, verifiers, and a benchmark
// harness. Exit status: 0 success, 1 usage/IO error, 2 verification violation.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "hopspan/decomp.hpp"
#include "hopspan/desteinerize.hpp"
#include "hopspan/gen.hpp"
#include "hopspan/geo.hpp"
#include "hopspan/io.hpp"
#include "hopspan/slow_funcs.hpp"
#include "hopspan/steiner_tree.hpp"
#include "hopspan/tree_spanner.hpp"
#include "hopspan/verify.hpp"

namespace {

using namespace hopspan;

constexpr const char* kVersion = "hopspan 1.0 (format 1)";

struct Usage : std::runtime_error {
    explicit Usage(const std::string& w) : std::runtime_error(w) {}
};

class Args {
  public:
    Args(int argc, char** argv, int start) {
        for (int i = start; i < argc; ++i) {
            std::string tok = argv[i];
            if (tok.rfind("--", 0) != 0) throw Usage("unexpected argument: " + tok);
            std::string key = tok.substr(2);
            if (i + 1 < argc && std::string(argv[i + 1]).rfind("--", 0) != 0) {
                kv_[key] = argv[++i];
            } else {
                kv_[key] = "";  // boolean flag
            }
        }
    }

    bool flag(const std::string& k) {
        auto it = kv_.find(k);
        if (it == kv_.end()) return false;
        used_.insert(k);
        return true;
    }
    std::optional<std::string> opt(const std::string& k) {
        auto it = kv_.find(k);
        if (it == kv_.end()) return std::nullopt;
        used_.insert(k);
        return it->second;
    }
    std::string str(const std::string& k) {
        auto v = opt(k);
        if (!v) throw Usage("missing required flag --" + k);
        return *v;
    }
    std::string str_or(const std::string& k, const std::string& dflt) {
        auto v = opt(k);
        return v ? *v : dflt;
    }
    std::int64_t num(const std::string& k) { return parse_int(str(k), k); }
    std::int64_t num_or(const std::string& k, std::int64_t dflt) {
        auto v = opt(k);
        return v ? parse_int(*v, k) : dflt;
    }
    double real(const std::string& k) { return parse_real(str(k), k); }
    double real_or(const std::string& k, double dflt) {
        auto v = opt(k);
        return v ? parse_real(*v, k) : dflt;
    }
    void done() const {
        for (const auto& [k, v] : kv_)
            if (!used_.count(k)) throw Usage("unknown flag --" + k);
    }

  private:
    static std::int64_t parse_int(const std::string& s, const std::string& k) {
        try {
            std::size_t pos;
            std::int64_t v = std::stoll(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (...) {
            throw Usage("flag --" + k + " expects an integer, got '" + s + "'");
        }
    }
    static double parse_real(const std::string& s, const std::string& k) {
        try {
            std::size_t pos;
            double v = std::stod(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (...) {
            throw Usage("flag --" + k + " expects a number, got '" + s + "'");
        }
    }

    std::map<std::string, std::string> kv_;
    std::set<std::string> used_;
};

// "-" means standard input/output.
std::ifstream open_file_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Usage("cannot open input file: " + path);
    return f;
}

template <typename F>
void with_input(const std::string& path, F&& f) {
    if (path == "-") {
        f(std::cin);
    } else {
        auto fs = open_file_in(path);
        f(fs);
    }
}

template <typename F>
void with_output(const std::string& path, F&& f) {
    if (path.empty() || path == "-") {
        f(std::cout);
    } else {
        std::ofstream fs(path);
        if (!fs) throw Usage("cannot open output file: " + path);
        f(fs);
    }
}

std::string join_ids(const std::vector<Vertex>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

DumbbellConfig cover_config(Args& args) {
    DumbbellConfig cfg;
    cfg.separation = args.real_or("separation", 0.0);
    cfg.length_group = static_cast<int>(args.num_or("length-group", 3));
    cfg.max_trees = static_cast<int>(args.num_or("max-trees", 64));
    cfg.inflate = args.real_or("inflate", 0.0);
    return cfg;
}

int cmd_alpha(Args& args) {
    const auto k = static_cast<int>(args.num("k"));
    const auto n = args.num("n");
    const bool prime = args.flag("prime");
    args.done();
    slow_funcs::AlphaEvaluator ev(std::max(2, k), std::max<std::int64_t>(n, 4));
    std::cout << (prime ? ev.alpha_prime(k, n) : ev.alpha(k, n)) << '\n';
    return 0;
}

int cmd_alpha_table(Args& args) {
    const auto max_k = static_cast<int>(args.num("max-k"));
    const auto max_n = args.num("max-n");
    args.done();
    slow_funcs::AlphaEvaluator ev(std::max(2, max_k), std::max<std::int64_t>(max_n, 4));
    for (int k = 0; k <= max_k; ++k)
        for (std::int64_t n = 0; n <= max_n; ++n)
            std::cout << k << '\t' << n << '\t' << ev.alpha(k, n) << '\t' << ev.alpha_prime(k, n)
                      << '\n';
    return 0;
}

int cmd_gen_tree(Args& args) {
    const auto n = args.num("n");
    const double frac = args.real_or("required-frac", 0.5);
    const auto seed = static_cast<std::uint64_t>(args.num_or("seed", 0));
    const TreeShape shape = tree_shape_from_string(args.str_or("shape", "random"));
    const std::string out = args.str_or("out", "-");
    args.done();
    RootedSteinerTree t = gen_tree(n, frac, seed, shape);
    with_output(out, [&](std::ostream& os) { io::write_tree(os, t); });
    return 0;
}

int cmd_decomp(Args& args) {
    const std::string tree_path = args.str("tree");
    const auto ell = args.num("ell");
    args.done();
    RootedSteinerTree t;
    with_input(tree_path, [&](std::istream& is) { t = io::read_tree(is); });
    Decomposition d = decompose(t, ell);
    std::cout << "cut=" << join_ids(d.cut_vertices) << '\n';
    for (std::size_t i = 0; i < d.subtrees.size(); ++i) {
        std::cout << "size=" << d.subtrees[i].tree.required_size() << '\n';
        std::cout << "border=" << join_ids(d.borders[i]) << '\n';
    }
    return 0;
}

int cmd_build_tree_spanner(Args& args) {
    const std::string tree_path = args.str("tree");
    const auto k = static_cast<int>(args.num("k"));
    const std::string out = args.str_or("out", "");
    args.done();
    RootedSteinerTree t;
    with_input(tree_path, [&](std::istream& is) { t = io::read_tree(is); });
    SpannerStats stats;
    TreeSpannerResult r = spanner_for_tree(t, k, &stats);
    const std::int64_t n = r.pruned.required_size();
    if (!out.empty()) {
        with_output(out, [&](std::ostream& os) { io::write_edges(os, r.edges.edges); });
    } else {
        io::write_edges(std::cout, r.edges.edges);
    }
    std::cout << "n=" << n << '\n';
    std::cout << "k=" << k << '\n';
    std::cout << "edges=" << r.edges.size() << '\n';
    std::cout << "budget=" << edge_budget(n, k) << '\n';
    std::cout << "ell=" << stats.top_ell << '\n';
    return 0;
}

int cmd_verify_tree_spanner(Args& args) {
    const std::string tree_path = args.str("tree");
    const std::string edges_path = args.str("edges");
    const auto k = static_cast<int>(args.num("k"));
    args.done();
    RootedSteinerTree t;
    with_input(tree_path, [&](std::istream& is) { t = io::read_tree(is); });
    PruneResult pr = prune(t);
    ShortcutEdgeSet h;
    with_input(edges_path, [&](std::istream& is) { h.edges = io::read_edges(is); });
    for (auto& [u, v] : h.edges)
        if (u > v) std::swap(u, v);
    std::sort(h.edges.begin(), h.edges.end());
    MonotoneDiameterReport rep = monotone_diameter(pr.tree, h, true);
    BudgetAudit budget = audit_budgets(pr.tree.required_size(), k, h.size());
    const bool diameter_ok = rep.diameter <= k;
    std::cout << "n=" << pr.tree.required_size() << '\n';
    std::cout << "edges=" << h.size() << '\n';
    std::cout << "budget=" << budget.bound << '\n';
    if (rep.diameter == kUnreachable)
        std::cout << "diameter=unreachable\n";
    else
        std::cout << "diameter=" << rep.diameter << '\n';
    if (rep.witness_pair)
        std::cout << "witness=" << rep.witness_pair->first << ',' << rep.witness_pair->second
                  << '\n';
    const bool pass = diameter_ok && budget.pass;
    std::cout << "pass=" << (pass ? "yes" : "no") << '\n';
    return pass ? 0 : 2;
}

int cmd_gen_points(Args& args) {
    const auto n = args.num("n");
    const auto d = static_cast<int>(args.num_or("d", 2));
    const PointDist dist = point_dist_from_string(args.str_or("dist", "uniform"));
    const auto seed = static_cast<std::uint64_t>(args.num_or("seed", 0));
    const std::string out = args.str_or("out", "-");
    args.done();
    PointSet ps = gen_points(n, d, dist, seed);
    with_output(out, [&](std::ostream& os) { io::write_points(os, ps); });
    return 0;
}

int cmd_build_euclidean(Args& args) {
    const std::string points_path = args.str("points");
    const auto k = static_cast<int>(args.num("k"));
    const double eps = args.real("eps");
    const std::string out = args.str_or("out", "");
    DumbbellConfig cfg = cover_config(args);
    const auto sample = args.num_or("stretch-sample", 10000);
    const auto seed = static_cast<std::uint64_t>(args.num_or("seed", 0));
    args.done();
    PointSet ps;
    with_input(points_path, [&](std::istream& is) { ps = io::read_points(is); });
    EuclideanSpannerStats stats;
    GeometricGraph g = euclidean_spanner(ps, k, eps, cfg, &stats);
    if (!out.empty()) {
        with_output(out, [&](std::ostream& os) { io::write_weighted_edges(os, g.edges); });
    } else {
        io::write_weighted_edges(std::cout, g.edges);
    }
    StretchReport sr = stretch_report(ps, g.edges, k, eps, sample, seed);
    std::cout << "trees=" << stats.trees << '\n';
    std::cout << "edges=" << stats.edges << '\n';
    std::cout << "budget_per_tree=" << stats.budget_per_tree << '\n';
    std::cout << "max_stretch_sampled=" << io::format_double(sr.max_stretch) << '\n';
    std::cout << "separation=" << io::format_double(stats.cover.separation) << '\n';
    std::cout << "length_group=" << stats.cover.group_modulus << '\n';
    std::cout << "inflate=" << io::format_double(stats.cover.inflate) << '\n';
    std::cout << "dumbbells=" << stats.cover.dumbbells << '\n';
    return 0;
}

int cmd_verify_euclidean(Args& args) {
    const std::string points_path = args.str("points");
    const std::string edges_path = args.str("edges");
    const auto k = static_cast<int>(args.num("k"));
    const double eps = args.real("eps");
    const auto pairs = args.num_or("pairs", 0);
    const auto seed = static_cast<std::uint64_t>(args.num_or("seed", 0));
    args.done();
    PointSet ps;
    with_input(points_path, [&](std::istream& is) { ps = io::read_points(is); });
    std::vector<GeoEdge> edges;
    with_input(edges_path, [&](std::istream& is) { edges = io::read_weighted_edges(is); });
    StretchReport rep = stretch_report(ps, edges, k, eps, pairs, seed);
    std::cout << "pairs_checked=" << rep.pairs_checked << '\n';
    std::cout << "max_stretch=" << io::format_double(rep.max_stretch) << '\n';
    if (rep.violating_pair)
        std::cout << "violating_pair=" << rep.violating_pair->first << ','
                  << rep.violating_pair->second << '\n';
    std::cout << "pass=" << (rep.pass ? "yes" : "no") << '\n';
    return rep.pass ? 0 : 2;
}

int cmd_desteinerize(Args& args) {
    const std::string points_path = args.str("points");
    const std::string edges_path = args.str("edges");
    const auto r = static_cast<std::int32_t>(args.num("required-count"));
    const std::string out = args.str_or("out", "");
    const auto samples = args.num_or("samples", 200);
    const auto seed = static_cast<std::uint64_t>(args.num_or("seed", 0));
    args.done();
    GeometricGraph g;
    with_input(points_path, [&](std::istream& is) { g.points = io::read_points(is); });
    with_input(edges_path, [&](std::istream& is) { g.edges = io::read_weighted_edges(is); });
    const auto m_in = static_cast<std::int64_t>(g.edges.size());
    AxisInstance inst = AxisInstance::build(std::move(g), r);
    GeometricGraph h = desteinerize(inst);
    if (!out.empty()) {
        with_output(out, [&](std::ostream& os) { io::write_weighted_edges(os, h.edges); });
    } else {
        io::write_weighted_edges(std::cout, h.edges);
    }
    TransferAudit audit = transfer_audit(inst, samples, seed);
    std::cout << "m_in=" << m_in << '\n';
    std::cout << "m_out=" << h.edges.size() << '\n';
    std::cout << "ratio="
              << io::format_double(m_in == 0 ? 0.0
                                             : static_cast<double>(h.edges.size()) /
                                                   static_cast<double>(m_in))
              << '\n';
    std::cout << "hop_preserved=" << (audit.hop_preserved ? "yes" : "no") << '\n';
    return audit.hop_preserved ? 0 : 2;
}

int cmd_bench(Args& args) {
    const std::string mode = args.str_or("mode", "tree");
    const std::string ns = args.str("ns");
    const auto k = static_cast<int>(args.num("k"));
    const double eps = args.real_or("eps", 0.5);
    const auto seed = static_cast<std::uint64_t>(args.num_or("seed", 0));
    const TreeShape shape = tree_shape_from_string(args.str_or("shape", "random"));
    args.done();

    std::vector<std::int64_t> sizes;
    {
        std::istringstream is(ns);
        std::string tok;
        while (std::getline(is, tok, ',')) sizes.push_back(std::stoll(tok));
    }
    std::cout << "n\tk\teps\tedges\tbuild_ms\talpha_k_n\tedges_per_n_alpha\n";
    for (std::int64_t n : sizes) {
        slow_funcs::AlphaEvaluator ev(std::max(2, k), std::max<std::int64_t>(n, 4));
        const std::int64_t a = ev.alpha(k, n);
        std::int64_t edges = 0;
        double ms = 0;
        if (mode == "tree") {
            RootedSteinerTree t = gen_tree_exact(n, n, seed, shape);
            PruneResult pr = prune(t);
            double best = 1e100;
            for (int rep = 0; rep < 3; ++rep) {
                auto t0 = std::chrono::steady_clock::now();
                ShortcutEdgeSet e = tree_one_spanner(pr.tree, pr.tree.required_size(), k, ev);
                auto t1 = std::chrono::steady_clock::now();
                best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
                edges = e.size();
            }
            ms = best;
        } else if (mode == "euclid") {
            PointSet ps = gen_points(n, 2, PointDist::Uniform, seed);
            auto t0 = std::chrono::steady_clock::now();
            GeometricGraph g = euclidean_spanner(ps, k, eps);
            auto t1 = std::chrono::steady_clock::now();
            ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            edges = static_cast<std::int64_t>(g.edges.size());
        } else {
            throw Usage("bench: mode must be tree or euclid");
        }
        const double denom = static_cast<double>(n) * std::max<std::int64_t>(1, a);
        std::cout << n << '\t' << k << '\t' << (mode == "euclid" ? io::format_double(eps) : "-")
                  << '\t' << edges << '\t' << io::format_double(ms) << '\t' << a << '\t'
                  << io::format_double(static_cast<double>(edges) / denom) << '\n';
    }
    return 0;
}

void print_usage(std::ostream& os) {
    os << "usage: hopspan <subcommand> [--flag value ...]\n"
          "  alpha --k K --n N [--prime]\n"
          "  alpha-table --max-k K --max-n N\n"
          "  gen-tree --n N [--required-frac F] [--seed S] [--shape random|path|binary|caterpillar] [--out FILE]\n"
          "  decomp --tree FILE --ell L\n"
          "  build-tree-spanner --tree FILE --k K [--out FILE]\n"
          "  verify-tree-spanner --tree FILE --edges FILE --k K\n"
          "  gen-points --n N [--d D] [--dist uniform|clustered|collinear] [--seed S] [--out FILE]\n"
          "  build-euclidean --points FILE --k K --eps E [--out FILE] [--max-trees M]\n"
          "  verify-euclidean --points FILE --edges FILE --k K --eps E [--pairs B] [--seed S]\n"
          "  desteinerize --points FILE --edges FILE --required-count R [--out FILE]\n"
          "  bench --mode tree|euclid --ns N1,N2,... --k K [--eps E] [--shape X] [--seed S]\n"
          "  --version\n"
          "FILE may be - for standard input/output.\n";
}

}  // namespace

int main(int argc, char** argv) {
    try {
        if (argc < 2) {
            print_usage(std::cerr);
            return 1;
        }
        const std::string cmd = argv[1];
        if (cmd == "--version") {
            std::cout << kVersion << '\n';
            return 0;
        }
        Args args(argc, argv, 2);
        if (cmd == "alpha") return cmd_alpha(args);
        if (cmd == "alpha-table") return cmd_alpha_table(args);
        if (cmd == "gen-tree") return cmd_gen_tree(args);
        if (cmd == "decomp") return cmd_decomp(args);
        if (cmd == "build-tree-spanner") return cmd_build_tree_spanner(args);
        if (cmd == "verify-tree-spanner") return cmd_verify_tree_spanner(args);
        if (cmd == "gen-points") return cmd_gen_points(args);
        if (cmd == "build-euclidean") return cmd_build_euclidean(args);
        if (cmd == "verify-euclidean") return cmd_verify_euclidean(args);
        if (cmd == "desteinerize") return cmd_desteinerize(args);
        if (cmd == "bench") return cmd_bench(args);
        print_usage(std::cerr);
        std::cerr << "unknown subcommand: " << cmd << '\n';
        return 1;
    } catch (const Usage& u) {
        std::cerr << "error: " << u.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
