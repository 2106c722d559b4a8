#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ketool/graph.hpp"
#include "ketool/hke.hpp"
#include "ketool/io.hpp"
#include "ketool/sets.hpp"

namespace py = pybind11;

namespace {

ke::Bitset subfamily_mask(const ke::SetSystem& family, const std::vector<std::size_t>& indices) {
    for (std::size_t i : indices) {
        if (i >= family.member_count())
            throw ke::PreconditionError("member index " + std::to_string(i) + " out of range");
    }
    return ke::Bitset::from_indices(family.member_count(), indices);
}

ke::Bitset vertex_mask(const ke::Graph& graph, const std::vector<std::string>& labels) {
    ke::Bitset out(graph.vertex_count());
    for (const auto& label : labels) {
        auto idx = graph.vertices().index_of(label);
        if (!idx) throw ke::PreconditionError("unknown vertex '" + label + "'");
        out.set(*idx);
    }
    return out;
}

std::vector<std::vector<std::string>> member_lists(const ke::SetSystem& family) {
    std::vector<std::vector<std::string>> out;
    out.reserve(family.member_count());
    for (const auto& member : family.members()) out.push_back(family.labels_of(member));
    return out;
}

std::vector<std::pair<std::string, std::string>> edge_labels(const ke::Graph& graph,
                                                             const ke::Matching& matching) {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(matching.edges.size());
    for (const auto& [u, v] : matching.edges)
        out.emplace_back(graph.vertices().label(u), graph.vertices().label(v));
    return out;
}

py::object verdict_or_none(const std::optional<ke::HkeVerdict>& verdict) {
    if (!verdict) return py::none();
    return py::cast(*verdict);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Verification toolkit for Konig-Egervary set-systems and graphs";

    py::register_exception<ke::ParseError>(m, "ParseError");
    py::register_exception<ke::PreconditionError>(m, "PreconditionError");
    py::register_exception<ke::TheoremViolation>(m, "TheoremViolation");

    py::class_<ke::SetSystem>(m, "SetSystem")
        .def(py::init([](const std::vector<std::vector<std::string>>& sets,
                         std::optional<std::vector<std::string>> ground) {
                 return ke::SetSystem::from_labels(sets, std::move(ground));
             }),
             py::arg("sets"), py::arg("ground") = std::nullopt)
        .def_property_readonly("member_count", &ke::SetSystem::member_count)
        .def_property_readonly("ground_labels",
                               [](const ke::SetSystem& s) { return s.ground().labels(); })
        .def_property_readonly("members", &member_lists)
        .def("restrict",
             [](const ke::SetSystem& s, const std::vector<std::size_t>& indices) {
                 return s.restrict(subfamily_mask(s, indices));
             },
             py::arg("indices"))
        .def("render", [](const ke::SetSystem& s) { return ke::render_setsystem(s); })
        .def("__eq__", [](const ke::SetSystem& a, const ke::SetSystem& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const ke::SetSystem& s) {
            return "SetSystem(" + std::to_string(s.member_count()) + " members over " +
                   std::to_string(s.ground().size()) + " elements)";
        });

    py::class_<ke::Witness>(m, "Witness")
        .def_property_readonly(
            "kind", [](const ke::Witness& w) { return std::string(ke::witness_kind_name(w.kind)); })
        .def_property_readonly("gamma1", [](const ke::Witness& w) { return w.gamma1.indices(); })
        .def_property_readonly("gamma2", [](const ke::Witness& w) { return w.gamma2.indices(); })
        .def_readonly("lhs", &ke::Witness::lhs)
        .def_readonly("rhs", &ke::Witness::rhs)
        .def("__repr__", [](const ke::Witness& w) {
            return "Witness(" + std::string(ke::witness_kind_name(w.kind)) +
                   ", lhs=" + std::to_string(w.lhs) + ", rhs=" + std::to_string(w.rhs) + ")";
        });

    py::class_<ke::HkeVerdict>(m, "HkeVerdict")
        .def_readonly("holds", &ke::HkeVerdict::holds)
        .def_property_readonly("alpha", [](const ke::HkeVerdict& v) { return v.alpha; })
        .def_property_readonly("witness", [](const ke::HkeVerdict& v) { return v.witness; })
        .def_property_readonly(
            "method", [](const ke::HkeVerdict& v) { return std::string(ke::oracle_name(v.method)); })
        .def("__repr__", [](const ke::HkeVerdict& v) {
            return std::string("HkeVerdict(") + (v.holds ? "holds" : "fails") + ", method=" +
                   std::string(ke::oracle_name(v.method)) + ")";
        });

    py::class_<ke::EquivalenceReport>(m, "EquivalenceReport")
        .def_property_readonly(
            "brute_force", [](const ke::EquivalenceReport& r) { return r.brute_force.verdict; })
        .def_property_readonly("pairs",
                               [](const ke::EquivalenceReport& r) { return r.pairs.verdict; })
        .def_property_readonly("partition",
                               [](const ke::EquivalenceReport& r) { return r.partition.verdict; })
        .def_readonly("holds", &ke::EquivalenceReport::holds);

    m.def("family_union",
          [](const ke::SetSystem& s, const std::vector<std::size_t>& indices) {
              return s.labels_of(ke::family_union(s, subfamily_mask(s, indices)));
          },
          py::arg("family"), py::arg("indices"));
    m.def("family_intersection",
          [](const ke::SetSystem& s, const std::vector<std::size_t>& indices) {
              return s.labels_of(ke::family_intersection(s, subfamily_mask(s, indices)));
          },
          py::arg("family"), py::arg("indices"));
    m.def("uniform_alpha", [](const ke::SetSystem& s) { return ke::uniform_alpha(s); },
          py::arg("family"));
    m.def("ke_check", [](const ke::SetSystem& s) { return ke::ke_check(s); }, py::arg("family"));
    m.def("atom_profile",
          [](const ke::SetSystem& s) {
              auto profile = ke::atom_profile(s);
              std::vector<std::pair<std::vector<std::size_t>, std::vector<std::string>>> out;
              for (const auto& [signature, cell] : profile.cells())
                  out.emplace_back(signature.indices(), s.labels_of(cell));
              return out;
          },
          py::arg("family"));
    m.def("duality_equality",
          [](const ke::SetSystem& s, const std::vector<std::size_t>& g1,
             const std::vector<std::size_t>& g2) {
              auto r = ke::duality_equality(s, subfamily_mask(s, g1), subfamily_mask(s, g2));
              return py::make_tuple(r.lhs, r.rhs, r.holds);
          },
          py::arg("family"), py::arg("gamma1"), py::arg("gamma2"));

    m.def("hke_bruteforce", &ke::hke_bruteforce, py::arg("family"),
          py::arg("member_cap") = ke::kBruteForceMemberCap);
    m.def("hke_pairs", &ke::hke_pairs, py::arg("family"),
          py::arg("member_cap") = ke::kPairsMemberCap);
    m.def("hke_partition", &ke::hke_partition, py::arg("family"));
    m.def("equivalence_audit", &ke::equivalence_audit, py::arg("family"));
    m.def("generate_hke", &ke::generate_hke, py::arg("members"), py::arg("cell_size_bound"),
          py::arg("seed"));
    m.def("exercise_identities",
          [](const ke::SetSystem& s) {
              auto r = ke::exercise_identities(s);
              return py::make_tuple(
                  py::make_tuple(r.difference_identity.lhs, r.difference_identity.rhs,
                                 r.difference_identity.holds),
                  py::make_tuple(r.pair_difference_identity.lhs, r.pair_difference_identity.rhs,
                                 r.pair_difference_identity.holds));
          },
          py::arg("family"));
    m.def("random_setsystem", &ke::random_setsystem, py::arg("members"), py::arg("ground_size"),
          py::arg("density"), py::arg("seed"));
    m.def("parse_setsystem",
          [](const std::string& text) {
              auto parsed = ke::parse_setsystem(text);
              return py::make_tuple(parsed.system, parsed.warnings);
          },
          py::arg("text"));
    m.def("render_setsystem", &ke::render_setsystem, py::arg("family"));

    py::class_<ke::Graph>(m, "Graph")
        .def(py::init([](const std::vector<std::string>& vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
                 return ke::Graph::from_labels(vertices, edges);
             }),
             py::arg("vertices"), py::arg("edges"))
        .def_property_readonly("vertex_labels",
                               [](const ke::Graph& g) { return g.vertices().labels(); })
        .def_property_readonly("edges",
                               [](const ke::Graph& g) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (const auto& [u, v] : g.edges())
                                       out.emplace_back(g.vertices().label(u),
                                                        g.vertices().label(v));
                                   return out;
                               })
        .def("render", [](const ke::Graph& g) { return ke::render_graph(g); })
        .def("__eq__", [](const ke::Graph& a, const ke::Graph& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const ke::Graph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges)";
        });

    py::class_<ke::OmegaFamily>(m, "OmegaFamily")
        .def_readonly("sets", &ke::OmegaFamily::sets)
        .def_readonly("alpha", &ke::OmegaFamily::alpha);

    m.def("parse_graph",
          [](const std::string& text) {
              auto parsed = ke::parse_graph(text);
              return py::make_tuple(parsed.graph, parsed.warnings);
          },
          py::arg("text"));
    m.def("render_graph", &ke::render_graph, py::arg("graph"));
    m.def("random_graph", &ke::random_graph, py::arg("vertex_count"), py::arg("density"),
          py::arg("seed"));
    m.def("independence", &ke::independence, py::arg("graph"),
          py::arg("vertex_cap") = ke::kExactSearchVertexCap);
    m.def("matching_number",
          [](const ke::Graph& g, std::size_t vertex_cap) {
              auto result = ke::matching_number(g, vertex_cap);
              return py::make_tuple(result.number, edge_labels(g, result.matching));
          },
          py::arg("graph"), py::arg("vertex_cap") = ke::kExactSearchVertexCap);
    m.def("is_ke_graph", &ke::is_ke_graph, py::arg("graph"),
          py::arg("vertex_cap") = ke::kExactSearchVertexCap);
    m.def("omega_is_hke", &ke::omega_is_hke, py::arg("graph"),
          py::arg("vertex_cap") = ke::kExactSearchVertexCap);
    m.def("ke_subfamily_implies_hke",
          [](const ke::Graph& g, const ke::SetSystem& family) {
              auto report = ke::ke_subfamily_implies_hke(g, family);
              py::dict out;
              out["applicable"] = report.applicable;
              out["union_size"] = report.union_size;
              out["intersection_size"] = report.intersection_size;
              out["partition"] = verdict_or_none(report.partition_verdict);
              return out;
          },
          py::arg("graph"), py::arg("family"));
    m.def("saturating_matching",
          [](const ke::Graph& g, const std::vector<std::string>& from,
             const std::vector<std::string>& into)
              -> std::optional<std::vector<std::pair<std::string, std::string>>> {
              auto matching = ke::saturating_matching(g, vertex_mask(g, from), vertex_mask(g, into));
              if (!matching) return std::nullopt;
              return edge_labels(g, *matching);
          },
          py::arg("graph"), py::arg("cover"), py::arg("into"));
    m.def("verify_characterization",
          [](const ke::Graph& g, std::size_t search_cap) {
              auto report = ke::verify_characterization(g, search_cap);
              py::dict out;
              out["ke"] = report.ke;
              out["alpha"] = report.alpha;
              out["mu"] = report.mu;
              out["omega"] = member_lists(report.omega.sets);
              if (report.certificate) {
                  const auto& cert = *report.certificate;
                  py::dict c;
                  c["subfamily"] = cert.subfamily.indices();
                  std::vector<std::vector<std::string>> sets;
                  for (std::size_t i = cert.subfamily.find_first(); i != ke::Bitset::npos;
                       i = cert.subfamily.find_next(i))
                      sets.push_back(report.omega.sets.labels_of(report.omega.sets.member(i)));
                  c["sets"] = sets;
                  c["matching"] = edge_labels(g, cert.matching);
                  c["union_size"] = cert.union_size;
                  c["intersection_size"] = cert.intersection_size;
                  c["outside_size"] = cert.outside_size;
                  c["partition_holds"] = cert.partition_holds;
                  c["pairs_holds"] = cert.pairs_holds ? py::cast(*cert.pairs_holds) : py::none();
                  out["certificate"] = c;
              } else {
                  out["certificate"] = py::none();
              }
              out["converse_exhausted"] = report.converse_exhausted
                                              ? py::cast(*report.converse_exhausted)
                                              : py::none();
              out["full_omega_certifies"] = report.full_omega_certifies;
              return out;
          },
          py::arg("graph"), py::arg("search_cap") = 20);
}
