#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "vck/confluence.hpp"
#include "vck/engine.hpp"
#include "vck/forward_rules.hpp"
#include "vck/graph_io.hpp"
#include "vck/lifting.hpp"
#include "vck/search.hpp"
#include "vck/solver.hpp"

using namespace vck;
using nlohmann::json;

namespace {

struct Common {
    std::string in, format, out, out_format, trace, manifest;
    std::uint64_t seed = 1;
};

struct Manifest {
    json j;
    std::string path;

    Manifest(const std::string& command, const Common& c) : path(c.manifest) {
        j["command"] = command;
        j["input"] = c.in;
        j["seed"] = c.seed;
        j["config"] = json::object();
        j["outputs"] = json::object();
    }
    void sizes(const char* key, const Instance& inst) {
        j[key] = {{"n", inst.graph.num_vertices()}, {"m", inst.graph.num_edges()}, {"k", inst.k}};
    }
    void write() const {
        std::string text = j.dump(2) + "\n";
        if (path.empty()) std::cerr << text;
        else write_text_file(path, text);
    }
};

std::optional<GraphFormat> fmt(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto f = parse_format(s);
    if (!f) throw InvalidArgument("unknown format: " + s);
    return f;
}

Graph load(const Common& c) { return read_graph_file(c.in, fmt(c.format)); }

GraphFormat out_format(const Common& c, const std::string& path) {
    if (auto f = fmt(c.out_format)) return *f;
    if (auto f = fmt(c.format)) return *f;
    return guess_format(path);
}

// kernel graph, trace and manifest entries shared by the reducing commands
void write_outputs(const Common& c, Manifest& m, const Instance& fin, std::span<const ModificationRecord> trace) {
    if (!c.out.empty()) {
        write_text_file(c.out, emit_graph(fin.graph, out_format(c, c.out)));
        m.j["outputs"]["kernel"] = c.out;
    }
    if (!c.trace.empty()) {
        write_text_file(c.trace, emit_json(trace));
        m.j["outputs"]["trace"] = c.trace;
    }
    m.j["trace_length"] = trace.size();
}

void add_common(CLI::App* app, Common& c, bool reduces = true) {
    app->add_option("-i,--in", c.in, "input graph")->required()->check(CLI::ExistingFile);
    app->add_option("--format", c.format, "input format: pace, edgelist, graph6 (default: by extension)");
    app->add_option("--manifest", c.manifest, "run manifest path (default: stderr)");
    app->add_option("--seed", c.seed, "random seed");
    if (reduces) {
        app->add_option("-o,--out", c.out, "reduced graph");
        app->add_option("--out-format", c.out_format, "output format");
        app->add_option("--trace", c.trace, "trace (JSON lines)");
    }
}

void print_sizes(const char* label, const Instance& inst) {
    std::cerr << label << ": n=" << inst.graph.num_vertices() << " m=" << inst.graph.num_edges() << " k=" << inst.k
              << "\n";
}

std::vector<std::string> names(const std::vector<Rule>& rs) {
    std::vector<std::string> out;
    for (Rule r : rs) out.emplace_back(rule_name(r));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex cover kernelization with forward and backward reduction rules"};
    app.require_subcommand(1);
    Common c;

    // kernelize
    auto* kern = app.add_subcommand("kernelize", "exhaustive forward reduction");
    add_common(kern, c);
    std::string rules_s = "preset", order = "fixed";
    std::optional<std::int64_t> budget;
    int kappa = 4;
    kern->add_option("--rules", rules_s, "comma separated rules, or table1 / preset");
    kern->add_option("--order", order, "fixed or random")->check(CLI::IsMember({"fixed", "random"}));
    kern->add_option("--k", budget, "parameter k (budget mode, enables DegGtK)");
    kern->add_option("--kappa", kappa, "kappa for Unconfined-kappa");

    // find / far
    auto* findc = app.add_subcommand("find", "search for shrinking rule sequences");
    auto* farc = app.add_subcommand("far", "find-and-reduce");
    std::size_t depth = 2;
    double time_limit = 60;
    std::string forward_s = "table1", backward_s = "backward", report, dot;
    for (auto* sc : {findc, farc}) {
        add_common(sc, c, sc == farc);
        sc->add_option("--depth", depth, "maximum sequence length")->check(CLI::Range(1, 3));
        sc->add_option("--time-limit", time_limit, "seconds");
        sc->add_option("--forward", forward_s, "forward rules tried by the search");
        sc->add_option("--backward", backward_s, "backward rules tried by the search");
        sc->add_option("--kappa", kappa, "kappa for Unconfined-kappa");
    }
    findc->add_option("--report", report, "sequences report (JSON)");
    findc->add_option("--dot", dot, "sequences as DOT");
    farc->add_option("--preset", rules_s, "rules for the interleaved exhaustive reduction");
    std::string log_path;
    farc->add_option("--log", log_path, "per-iteration log (JSON lines)");

    // id / lid
    auto* idc = app.add_subcommand("id", "inflate-deflate");
    auto* lidc = app.add_subcommand("lid", "local inflate-deflate");
    double alpha = 0.1;
    std::size_t iterations = std::numeric_limits<std::size_t>::max(), radius = 2;
    bool no_initial = false;
    for (auto* sc : {idc, lidc}) {
        add_common(sc, c);
        sc->add_option("--alpha", alpha, "inflation ratio")->check(CLI::PositiveNumber);
        sc->add_option("--iterations", iterations, "iteration limit");
        sc->add_option("--time-limit", time_limit, "seconds");
        sc->add_option("--forward", forward_s, "forward rules");
        sc->add_option("--backward", backward_s, "backward rules");
        sc->add_option("--log", log_path, "per-iteration log (JSON lines)");
        sc->add_flag("--no-initial-deflate", no_initial, "skip the deflation before the first iteration");
        sc->add_option("--kappa", kappa, "kappa for Unconfined-kappa");
    }
    lidc->add_option("--radius", radius, "ball radius")->check(CLI::PositiveNumber);

    // confluence
    auto* conf = app.add_subcommand("confluence", "randomized confluence test of rule pairs");
    std::size_t max_n = 7, trials = 20;
    unsigned jobs = 1;
    std::string pairs = "all", conf_rules = "table1", conf_out;
    std::uint64_t conf_seed = 1;
    std::string conf_manifest;
    conf->add_option("--max-n", max_n, "largest graph order")->check(CLI::Range(1, 9));
    conf->add_option("--trials", trials, "reductions per graph");
    conf->add_option("--pairs", pairs, "all, or a,b");
    conf->add_option("--rules", conf_rules, "rules for --pairs all");
    conf->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    conf->add_option("--seed", conf_seed, "random seed");
    conf->add_option("-o,--out", conf_out, "matrix report (JSON)");
    conf->add_option("--manifest", conf_manifest, "run manifest path (default: stderr)");

    // solve
    auto* solve = app.add_subcommand("solve", "minimum vertex cover");
    add_common(solve, c, false);
    std::string method = "bnr", sol_out;
    solve->add_option("--method", method, "brute or bnr")->check(CLI::IsMember({"brute", "bnr"}));
    solve->add_option("-o,--out", sol_out, "solution file");

    // lift
    auto* lift = app.add_subcommand("lift", "lift a kernel solution to the input graph");
    add_common(lift, c, false);
    std::string trace_in, sol_in;
    lift->add_option("--trace", trace_in, "trace produced from --in")->required()->check(CLI::ExistingFile);
    lift->add_option("--solution", sol_in, "kernel solution")->required()->check(CLI::ExistingFile);
    lift->add_option("-o,--out", sol_out, "lifted solution");

    // convert
    auto* conv = app.add_subcommand("convert", "convert between graph formats");
    add_common(conv, c, false);
    std::string to;
    conv->add_option("--from", c.format, "input format");
    conv->add_option("--to", to, "output format")->required();
    conv->add_option("-o,--out", c.out, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        RuleConfig rc;
        rc.kappa = kappa;

        if (*kern) {
            Manifest m("kernelize", c);
            Instance inst{load(c)};
            if (budget) {
                inst.k = *budget;
                inst.mode = Mode::Budget;
            }
            m.sizes("start", inst);
            auto rules = parse_rule_list(rules_s);
            m.j["config"] = {{"rules", names(rules)}, {"order", order}, {"kappa", kappa}};
            if (budget) m.j["config"]["k"] = *budget;
            Engine e(inst, rc);
            if (order == "fixed") {
                e.reduce_in_order(rules);
            } else {
                Rng rng(c.seed);
                e.deflate(rules, rng);
            }
            print_sizes("before", inst);
            print_sizes("after", e.instance());
            if (budget && buss_no_instance_check(e.instance())) std::cerr << "no-instance (Buss bound)\n";
            m.sizes("end", e.instance());
            write_outputs(c, m, e.instance(), e.trace());
            m.write();
            return 0;
        }

        if (*findc || *farc) {
            Manifest m(*findc ? "find" : "far", c);
            Instance inst{load(c)};
            m.sizes("start", inst);
            FindConfig fc;
            fc.max_depth = depth;
            fc.time_limit = time_limit;
            fc.forward = parse_rule_list(forward_s);
            fc.backward = parse_rule_list(backward_s);
            m.j["config"] = {{"depth", depth},
                             {"time_limit", time_limit},
                             {"forward", names(fc.forward)},
                             {"backward", names(fc.backward)},
                             {"kappa", kappa}};
            if (*findc) {
                auto found = find(inst, fc, rc);
                json seqs = json::array();
                std::string dots;
                for (const auto& f : found) {
                    json recs = json::array();
                    std::istringstream lines(emit_json(f.records));
                    for (std::string line; std::getline(lines, line);) recs.push_back(json::parse(line));
                    seqs.push_back({{"root", f.root}, {"rules", names(f.rules)}, {"dn", f.dn}, {"dk", f.dk},
                                    {"records", recs}});
                    dots += emit_dot(f.records);
                }
                std::cerr << found.size() << " accepted sequences\n";
                if (!report.empty()) {
                    write_text_file(report, json{{"sequences", seqs}}.dump(2) + "\n");
                    m.j["outputs"]["report"] = report;
                } else {
                    std::cout << json{{"sequences", seqs}}.dump(2) << "\n";
                }
                if (!dot.empty()) {
                    write_text_file(dot, dots);
                    m.j["outputs"]["dot"] = dot;
                }
                m.j["sequences"] = found.size();
                m.sizes("end", inst);
            } else {
                auto preset = parse_rule_list(rules_s);
                m.j["config"]["preset"] = names(preset);
                auto res = find_and_reduce(inst, fc, rc, preset);
                print_sizes("before", inst);
                print_sizes("after", res.final);
                m.sizes("end", res.final);
                m.j["accepted"] = res.accepted;
                write_outputs(c, m, res.final, res.trace);
                if (!log_path.empty()) {
                    std::string t;
                    for (const auto& l : res.log) t += l + "\n";
                    write_text_file(log_path, t);
                    m.j["outputs"]["log"] = log_path;
                }
            }
            m.write();
            return 0;
        }

        if (*idc || *lidc) {
            Manifest m(*idc ? "id" : "lid", c);
            Instance inst{load(c)};
            m.sizes("start", inst);
            InflateDeflateConfig cfg;
            cfg.alpha = alpha;
            cfg.iterations = iterations;
            cfg.time_limit = time_limit;
            cfg.forward = parse_rule_list(forward_s);
            cfg.backward = parse_rule_list(backward_s);
            cfg.initial_deflate = !no_initial;
            m.j["config"] = {{"alpha", alpha},
                             {"time_limit", time_limit},
                             {"forward", names(cfg.forward)},
                             {"backward", names(cfg.backward)},
                             {"initial_deflate", cfg.initial_deflate},
                             {"kappa", kappa}};
            if (iterations != std::numeric_limits<std::size_t>::max()) m.j["config"]["iterations"] = iterations;
            Rng rng(c.seed);
            SearchResult res;
            if (*idc) {
                res = inflate_deflate(inst, cfg, rng, rc);
            } else {
                cfg.radius = radius;
                m.j["config"]["radius"] = radius;
                res = local_inflate_deflate(inst, cfg, rng, rc);
            }
            print_sizes("before", inst);
            print_sizes("after", res.final);
            m.sizes("end", res.final);
            m.j["iterations"] = res.iterations;
            m.j["accepted"] = res.accepted;
            write_outputs(c, m, res.final, res.trace);
            if (!log_path.empty()) {
                std::string t;
                for (const auto& l : res.log) t += l + "\n";
                write_text_file(log_path, t);
                m.j["outputs"]["log"] = log_path;
            }
            m.write();
            return 0;
        }

        if (*conf) {
            Common cc;
            cc.seed = conf_seed;
            cc.manifest = conf_manifest;
            Manifest m("confluence", cc);
            std::vector<Rule> rules;
            std::vector<std::pair<Rule, Rule>> todo;
            if (pairs == "all") {
                rules = parse_rule_list(conf_rules);
                for (std::size_t i = 0; i < rules.size(); ++i)
                    for (std::size_t j = i; j < rules.size(); ++j) todo.emplace_back(rules[i], rules[j]);
            } else {
                auto pos = pairs.find(',');
                auto a = parse_rule(pairs.substr(0, pos));
                auto b = pos == std::string::npos ? a : parse_rule(pairs.substr(pos + 1));
                if (!a || !b) throw InvalidArgument("bad --pairs: " + pairs);
                rules = {*a};
                if (*b != *a) rules.push_back(*b);
                todo.emplace_back(*a, *b);
            }
            auto graphs = enumerate_graphs(max_n);
            std::vector<ConfluenceVerdict> verdicts(todo.size());
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (std::size_t i; (i = next++) < todo.size();)
                    verdicts[i] = test_pair(todo[i].first, todo[i].second, graphs, trials, conf_seed, rc);
            };
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
            std::cerr << emit_matrix_text(rules, verdicts);
            std::string mj = emit_matrix_json(rules, verdicts);
            if (!conf_out.empty()) {
                write_text_file(conf_out, mj);
                m.j["outputs"]["matrix"] = conf_out;
            }
            std::size_t bad = 0;
            for (const auto& v : verdicts) bad += v.non_confluent;
            m.j["config"] = {{"max_n", max_n}, {"trials", trials}, {"rules", names(rules)}, {"pairs", pairs}};
            m.j["graphs"] = graphs.size();
            m.j["non_confluent_pairs"] = bad;
            m.write();
            return 0;
        }

        if (*solve) {
            Manifest m("solve", c);
            Graph g = load(c);
            m.sizes("start", Instance{g});
            m.j["config"] = {{"method", method}};
            CoverResult r = method == "brute" ? brute_force_cover(g) : branch_and_reduce_solve(g);
            if (!verify_cover(g, r.cover)) throw Error("solver returned a non-cover");
            // ids are positions among the live vertices, as in the emitted graph files
            VertexList ids = g.vertex_list();
            VertexSet pos;
            for (VertexId v : r.cover)
                pos.insert(static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()));
            std::string text = emit_solution(pos);
            if (sol_out.empty()) {
                std::cout << text;
            } else {
                write_text_file(sol_out, text);
                m.j["outputs"]["solution"] = sol_out;
            }
            m.j["size"] = r.size;
            std::cerr << "tau=" << r.size << "\n";
            m.write();
            return 0;
        }

        if (*lift) {
            Manifest m("lift", c);
            Graph g = load(c);
            Trace trace = parse_json(read_text_file(trace_in));
            Instance fin{g};
            for (const auto& rec : trace) replay(fin, rec);
            VertexList ids = fin.graph.vertex_list();
            VertexSet kernel_cover;
            for (VertexId p : parse_solution(read_text_file(sol_in))) {
                if (p >= ids.size()) throw InvalidSolution("solution vertex " + std::to_string(p) + " out of range");
                kernel_cover.insert(ids[p]);
            }
            VertexSet lifted = lift_solution(fin.graph, trace, kernel_cover);
            if (!verify_cover(g, lifted)) throw Error("lifted set is not a cover");
            std::string text = emit_solution(lifted);
            if (sol_out.empty()) {
                std::cout << text;
            } else {
                write_text_file(sol_out, text);
                m.j["outputs"]["solution"] = sol_out;
            }
            m.j["kernel_cover"] = kernel_cover.size();
            m.j["k_final"] = fin.k;
            m.j["size"] = lifted.size();
            m.j["verified"] = true;
            std::cerr << "lifted cover size " << lifted.size() << " (verified)\n";
            m.write();
            return 0;
        }

        if (*conv) {
            Graph g = load(c);
            auto f = fmt(to);
            std::string text = emit_graph(g, *f);
            if (c.out.empty()) {
                std::cout << text;
            } else {
                write_text_file(c.out, text);
                Manifest m("convert", c);
                m.j["config"] = {{"to", to}};
                m.j["outputs"]["graph"] = c.out;
                m.sizes("start", Instance{g});
                m.write();
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
