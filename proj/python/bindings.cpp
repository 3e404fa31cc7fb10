#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nofil/bounds.hpp"
#include "nofil/embed.hpp"
#include "nofil/game.hpp"
#include "nofil/generate.hpp"
#include "nofil/kayles.hpp"
#include "nofil/solver.hpp"
#include "nofil/sts.hpp"

namespace py = pybind11;
using namespace nofil;

namespace {

std::vector<Triple> to_triples(const std::vector<std::array<int, 3>>& blocks) {
    std::vector<Triple> out;
    out.reserve(blocks.size());
    for (const auto& b : blocks) out.push_back({b[0], b[1], b[2]});
    return out;
}

SimpleGraph to_graph(int n, const std::vector<std::array<int, 2>>& edges) {
    SimpleGraph g;
    g.n = n;
    g.edges = edges;
    g.normalize();
    return g;
}

py::dict census_dict(const BlockCensus& c) {
    py::dict out;
    for (int t = 0; t < kNumBlockTypes; ++t) {
        auto type = static_cast<BlockType>(t);
        py::list blocks;
        for (const Triple& b : c.list(type)) blocks.append(py::make_tuple(b[0], b[1], b[2]));
        out[block_type_name(type)] = py::make_tuple(c.count(type), blocks);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_nofil, m) {
    m.doc() = "point game on Steiner triple systems: solver and embedding tools";

    py::register_exception<DomainError>(m, "DomainError");

    py::class_<SteinerTripleSystem>(m, "SteinerTripleSystem")
        .def_property_readonly("v", &SteinerTripleSystem::order)
        .def_property_readonly("blocks",
                               [](const SteinerTripleSystem& sts) {
                                   py::list out;
                                   for (const Triple& b : sts.blocks())
                                       out.append(py::make_tuple(b[0], b[1], b[2]));
                                   return out;
                               })
        .def("certificate",
             [](const SteinerTripleSystem& sts) { return certificate(sts).hex(); })
        .def("__repr__", [](const SteinerTripleSystem& sts) {
            return "<SteinerTripleSystem v=" + std::to_string(sts.order()) + " blocks=" +
                   std::to_string(sts.num_blocks()) + ">";
        });

    m.def("validate", [](int v, const std::vector<std::array<int, 3>>& blocks) {
        ValidationResult res = validate_sts(v, to_triples(blocks));
        std::vector<std::string> msgs;
        for (const Violation& viol : res.violations) msgs.push_back(viol.message);
        return py::make_tuple(res.ok(), msgs);
    });
    m.def("builtin", &builtin_sts, py::arg("name"));
    m.def("builtin_names", &builtin_names);
    m.def("from_cyclic_base_blocks", [](int v, const std::vector<std::array<int, 3>>& bases) {
        return from_cyclic_base_blocks(v, to_triples(bases));
    });
    m.def("parse_archive", &parse_archive);
    m.def("serialize", &serialize_sts);
    m.def("serialize_archive", &serialize_archive);

    m.def("hill_climb", [](int v, std::uint64_t seed) { return hill_climb_sts(v, seed); },
          py::arg("v"), py::arg("seed"));
    m.def(
        "generate_distinct",
        [](int v, int count, std::uint64_t seed) {
            DistinctBatch batch = generate_distinct(v, count, seed);
            return py::make_tuple(batch.systems, batch.attempts, batch.exhausted);
        },
        py::arg("v"), py::arg("count"), py::arg("seed"));

    m.def("mex", [](const std::vector<int>& xs) { return mex(xs); });
    m.def(
        "grundy",
        [](const SteinerTripleSystem& sts, const std::vector<int>& played) {
            Solver solver;
            return solver.grundy(Position::from_played(
                std::make_shared<const SteinerTripleSystem>(sts), played));
        },
        py::arg("sts"), py::arg("played") = std::vector<int>{});
    m.def(
        "best_moves",
        [](const SteinerTripleSystem& sts, const std::vector<int>& played) {
            Solver solver;
            return solver.best_moves(Position::from_played(
                std::make_shared<const SteinerTripleSystem>(sts), played));
        },
        py::arg("sts"), py::arg("played") = std::vector<int>{});
    m.def(
        "outcome",
        [](const SteinerTripleSystem& sts, const std::vector<int>& played) {
            Solver solver;
            Position pos = Position::from_played(
                std::make_shared<const SteinerTripleSystem>(sts), played);
            return solver.grundy(pos) == 0 ? "P" : "N";
        },
        py::arg("sts"), py::arg("played") = std::vector<int>{});

    m.def(
        "census",
        [](const SteinerTripleSystem& sts, const std::vector<int>& played) {
            return census_dict(census(sts, played));
        },
        py::arg("sts"), py::arg("played"));

    m.def(
        "kayles_grundy",
        [](int n, const std::vector<std::array<int, 2>>& edges) {
            return kayles_grundy(to_graph(n, edges));
        },
        py::arg("n"), py::arg("edges"));
    m.def(
        "kayles_bruteforce",
        [](int n, const std::vector<std::array<int, 2>>& edges) {
            return kayles_bruteforce(to_graph(n, edges));
        },
        py::arg("n"), py::arg("edges"));

    m.def(
        "census_formulas",
        [](long long p, long long a, long long u, long long e) {
            CensusPrediction c = census_formulas(p, a, u, e);
            py::dict out;
            const char* names[7] = {"PPU", "PAA", "PAU", "PUU", "AAU", "AUU", "UUU"};
            auto values = c.as_array();
            for (int i = 0; i < 7; ++i)
                out[names[i]] = py::make_tuple(values[static_cast<std::size_t>(i)].num,
                                               values[static_cast<std::size_t>(i)].den);
            return out;
        },
        py::arg("p"), py::arg("a"), py::arg("u"), py::arg("e"));
    m.def(
        "feasible_u",
        [](int a, long long e, int v) {
            FeasibilityReport rep = u_interval(a, e, v);
            return py::make_tuple(rep.feasible_u, rep.real_lower.approx(),
                                  rep.real_upper.approx());
        },
        py::arg("a"), py::arg("e"), py::arg("v"));
    m.def(
        "min_admissible_v",
        [](int a, long long e) {
            AdmissibleV res = min_admissible_v(a, e);
            return py::make_tuple(res.v_min, res.formula.approx());
        },
        py::arg("a"), py::arg("e"));
    m.def("exceptions", &enumerate_exceptions, py::arg("integral") = false);
    m.def(
        "chromatic_index",
        [](int n, const std::vector<std::array<int, 2>>& edges) {
            return chromatic_index_exact(to_graph(n, edges));
        },
        py::arg("n"), py::arg("edges"));

    m.def(
        "embed_graph",
        [](int n, const std::vector<std::array<int, 2>>& edges, int v, std::uint64_t seed)
            -> py::object {
            EmbedResult res = embed_graph(to_graph(n, edges), v, seed);
            if (!res.ok()) return py::none();
            return py::make_tuple(*res.sts, res.played);
        },
        py::arg("n"), py::arg("edges"), py::arg("v"), py::arg("seed") = 1);
    m.def(
        "verify_embedding",
        [](const SteinerTripleSystem& sts, const std::vector<int>& played, int n,
           const std::vector<std::array<int, 2>>& edges) {
            VerifyReport rep = verify_embedding(sts, played, to_graph(n, edges));
            py::dict out;
            out["unplayable_all_blocked"] = rep.unplayable_all_blocked;
            out["available_none_blocked"] = rep.available_none_blocked;
            out["graph_isomorphic"] = rep.graph_isomorphic;
            out["value_matches"] = rep.value_matches;
            out["position_value"] = rep.position_value;
            out["graph_value"] = rep.graph_value;
            out["all_pass"] = rep.all_pass();
            return out;
        },
        py::arg("sts"), py::arg("played"), py::arg("n"), py::arg("edges"));
}
