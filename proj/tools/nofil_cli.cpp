#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "nofil/bounds.hpp"
#include "nofil/embed.hpp"
#include "nofil/game.hpp"
#include "nofil/generate.hpp"
#include "nofil/kayles.hpp"
#include "nofil/solver.hpp"
#include "nofil/sts.hpp"

namespace {

using namespace nofil;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError(DomainError::Code::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<SteinerTripleSystem> load_systems(const std::string& builtin,
                                              const std::string& file) {
    if (!builtin.empty() && !file.empty())
        throw DomainError(DomainError::Code::ParseError,
                          "--builtin and --file are mutually exclusive");
    if (!builtin.empty()) return {builtin_sts(builtin)};
    if (!file.empty()) return parse_archive(read_file(file));
    throw DomainError(DomainError::Code::ParseError, "need --builtin NAME or --file PATH");
}

std::string join_points(const std::vector<int>& xs, int shift = 0) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(xs[i] + shift);
    }
    return out.empty() ? "-" : out;
}

std::vector<int> parse_point_list(const std::string& csv) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

void print_census(const BlockCensus& c, bool lists) {
    for (int t = 0; t < kNumBlockTypes; ++t) {
        auto type = static_cast<BlockType>(t);
        std::cout << block_type_name(type) << "\t" << c.count(type);
        if (lists) {
            for (const Triple& b : c.list(type))
                std::cout << "  {" << b[0] << "," << b[1] << "," << b[2] << "}";
        }
        std::cout << "\n";
    }
    std::cout << "total\t" << c.total() << "\n";
}

int run_survey(const std::vector<SteinerTripleSystem>& systems, int jobs) {
    std::vector<int> values(systems.size(), -1);
    std::atomic<std::size_t> next{0};
    Solver solver;   // shared cache; values are pure
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= systems.size()) return;
            Position pos = Position::initial(
                std::make_shared<const SteinerTripleSystem>(systems[i]));
            values[i] = solver.grundy(pos);
        }
    };
    jobs = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::map<int, int> histogram;
    for (int v : values) ++histogram[v];
    for (auto [value, count] : histogram) std::cout << value << "\t" << count << "\n";
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"workbench for the point game on Steiner triple systems"};
    app.require_subcommand(1);

    std::string builtin, file, graph_file, played_csv;
    int order = 0, count = 1, depth = -1, jobs = 1;
    std::uint64_t seed = 1;
    bool iso_reduce = false, integral = false, lists = false;

    auto* validate = app.add_subcommand("validate", "check a system file");
    validate->add_option("--file", file, "system or archive file");
    validate->add_option("--builtin", builtin, "builtin system name");

    auto* generate = app.add_subcommand("generate", "hill-climb distinct systems");
    generate->add_option("--order", order, "number of points")->required();
    generate->add_option("--count", count, "how many pairwise non-isomorphic systems");
    generate->add_option("--seed", seed, "random seed");

    auto* solve = app.add_subcommand("solve", "nim-value, outcome and best moves");
    solve->add_option("--builtin", builtin, "builtin system name");
    solve->add_option("--file", file, "system or archive file");

    auto* gametree = app.add_subcommand("gametree", "emit the game tree as DOT");
    gametree->add_option("--builtin", builtin, "builtin system name");
    gametree->add_option("--file", file, "system or archive file");
    gametree->add_option("--depth", depth, "expansion depth (default: full game)");
    gametree->add_flag("--iso-reduce", iso_reduce, "merge isomorphic children");

    auto* census_cmd = app.add_subcommand("census", "block counts by P/A/U type");
    census_cmd->add_option("--builtin", builtin, "builtin system name");
    census_cmd->add_option("--file", file, "system file");
    census_cmd->add_option("--played", played_csv, "comma separated played points")->required();
    census_cmd->add_flag("--lists", lists, "print the blocks of each type");

    auto* bounds_cmd = app.add_subcommand("bounds", "feasibility window for (a, e, v)");
    int arg_a = 0, arg_v = 0;
    long long arg_e = 0;
    bounds_cmd->add_option("a", arg_a, "number of available points")->required();
    bounds_cmd->add_option("e", arg_e, "number of graph edges")->required();
    bounds_cmd->add_option("v", arg_v, "system order")->required();
    bounds_cmd->add_option("--graph", graph_file, "graph file for the colouring bounds");

    auto* exceptions_cmd = app.add_subcommand("exceptions", "orders excluded by the window pair");
    exceptions_cmd->add_flag("--integral", integral, "restrict to admissible orders, integer u");

    auto* embed_cmd = app.add_subcommand("embed", "embed a graph as an endgame");
    embed_cmd->add_option("--graph", graph_file, "graph file")->required();
    embed_cmd->add_option("--order", order, "system order")->required();
    embed_cmd->add_option("--seed", seed, "random seed");

    auto* survey = app.add_subcommand("survey", "nim-value histogram over many systems");
    survey->add_option("--order", order, "generate systems of this order");
    survey->add_option("--count", count, "how many systems to generate");
    survey->add_option("--seed", seed, "random seed");
    survey->add_option("--file", file, "or: solve every system in this archive");
    survey->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);   // prints the usage message
        return 2;
    }

    if (validate->parsed()) {
        if (!file.empty()) {
            // parse without validation first so every violation can be shown
            std::vector<SteinerTripleSystem> systems = parse_archive(read_file(file));
            std::cout << systems.size() << " valid system(s)\n";
            return 0;
        }
        SteinerTripleSystem sts = builtin_sts(builtin);
        std::cout << "valid STS(" << sts.order() << ") with " << sts.num_blocks()
                  << " blocks\n";
        return 0;
    }

    if (generate->parsed()) {
        DistinctBatch batch = generate_distinct(order, count, seed);
        std::cout << serialize_archive(batch.systems);
        std::cerr << batch.systems.size() << " system(s) in " << batch.attempts
                  << " attempt(s)\n";
        if (batch.exhausted) {
            std::cerr << "attempt budget exhausted before reaching " << count << "\n";
            return 1;
        }
        return 0;
    }

    if (solve->parsed()) {
        Solver solver;
        for (const SteinerTripleSystem& sts : load_systems(builtin, file)) {
            Position pos = Position::initial(std::make_shared<const SteinerTripleSystem>(sts));
            int value = solver.grundy(pos);
            std::vector<int> best = solver.best_moves(pos);
            std::cout << "order " << sts.order() << "\n";
            std::cout << "nim-value " << value << "\n";
            std::cout << "outcome " << (value == 0 ? "P" : "N") << "\n";
            std::cout << "best moves (0-based): " << join_points(best) << "\n";
            std::cout << "best moves (1-based): " << join_points(best, 1) << "\n";
        }
        return 0;
    }

    if (gametree->parsed()) {
        Solver solver;
        std::vector<SteinerTripleSystem> systems = load_systems(builtin, file);
        GameTreeOptions opts;
        opts.max_depth = depth;
        opts.iso_reduce = iso_reduce;
        Position pos =
            Position::initial(std::make_shared<const SteinerTripleSystem>(systems.front()));
        std::cout << to_dot(game_tree(solver, pos, opts));
        return 0;
    }

    if (census_cmd->parsed()) {
        std::vector<SteinerTripleSystem> systems = load_systems(builtin, file);
        std::vector<int> played = parse_point_list(played_csv);
        Position pos = Position::from_played(
            std::make_shared<const SteinerTripleSystem>(systems.front()), played);
        std::cout << "P (0-based): " << join_points(pos.played()) << "\n";
        std::cout << "P (1-based): " << join_points(pos.played(), 1) << "\n";
        std::cout << "A (0-based): " << join_points(pos.available()) << "\n";
        std::cout << "A (1-based): " << join_points(pos.available(), 1) << "\n";
        std::cout << "U (0-based): " << join_points(pos.unplayable()) << "\n";
        std::cout << "U (1-based): " << join_points(pos.unplayable(), 1) << "\n";
        print_census(census(systems.front(), played), lists);
        return 0;
    }

    if (bounds_cmd->parsed()) {
        std::optional<std::pair<int, int>> chi;
        if (!graph_file.empty()) {
            SimpleGraph g = parse_graph(read_file(graph_file));
            chi = std::make_pair(chromatic_index_exact(g),
                                 chromatic_index_exact(complement_graph(g)));
        }
        std::cout << u_interval(arg_a, arg_e, arg_v, chi).str();
        return 0;
    }

    if (exceptions_cmd->parsed()) {
        auto triples = enumerate_exceptions(integral);
        std::cout << "a\te\tv\n";
        for (const auto& t : triples)
            std::cout << t[0] << "\t" << t[1] << "\t" << t[2] << "\n";
        std::cerr << triples.size() << " triple(s)\n";
        return 0;
    }

    if (embed_cmd->parsed()) {
        SimpleGraph g = parse_graph(read_file(graph_file));
        EmbedResult res = embed_graph(g, order, seed);
        if (!res.ok()) {
            std::cerr << "embedding failed\n";
            for (const std::string& d : res.diagnostics) std::cerr << "  " << d << "\n";
            return 1;
        }
        std::cout << serialize_sts(*res.sts);
        std::cout << "played: " << join_points(res.played) << "\n";
        std::cerr << "p=" << res.p << " u=" << res.u << " seed=" << res.seed_used << "\n";
        return 0;
    }

    if (survey->parsed()) {
        std::vector<SteinerTripleSystem> systems;
        if (!file.empty()) {
            systems = parse_archive(read_file(file));
        } else {
            if (order <= 0)
                throw DomainError(DomainError::Code::ParseError,
                                  "survey needs --order or --file");
            DistinctBatch batch = generate_distinct(order, count, seed);
            if (batch.exhausted)
                std::cerr << "only " << batch.systems.size() << " distinct system(s) found\n";
            systems = std::move(batch.systems);
        }
        return run_survey(systems, jobs);
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const CLI::ParseError&) {
        return 2;
    } catch (const DomainError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 1;
    }
}
