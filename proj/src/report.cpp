#include "ketool/report.hpp"

#include <chrono>

namespace ke {

namespace {

using nlohmann::ordered_json;

std::string scalar_text(const ordered_json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_null()) return "none";
    return value.dump();
}

bool all_scalars(const ordered_json& array) {
    for (const auto& item : array)
        if (item.is_object() || item.is_array()) return false;
    return true;
}

std::string inline_array(const ordered_json& array) {
    std::string out = "[";
    bool first = true;
    for (const auto& item : array) {
        if (!first) out += ", ";
        first = false;
        out += scalar_text(item);
    }
    return out + "]";
}

void render_lines(std::string& out, const ordered_json& object, std::size_t indent) {
    const std::string pad(indent, ' ');
    for (const auto& [key, value] : object.items()) {
        if (value.is_object()) {
            out += pad + key + ":\n";
            render_lines(out, value, indent + 2);
        } else if (value.is_array() && !all_scalars(value)) {
            out += pad + key + ":\n";
            for (const auto& item : value) {
                if (item.is_object()) {
                    out += pad + "  -\n";
                    render_lines(out, item, indent + 4);
                } else if (item.is_array()) {
                    out += pad + "  - " + inline_array(item) + "\n";
                } else {
                    out += pad + "  - " + scalar_text(item) + "\n";
                }
            }
        } else if (value.is_array()) {
            out += pad + key + ": " + inline_array(value) + "\n";
        } else {
            out += pad + key + ": " + scalar_text(value) + "\n";
        }
    }
}

// The digest pins everything present so far; timing gets attached after.
Report finalize(ordered_json doc, std::optional<ordered_json> timing) {
    Report report;
    report.exit_code = doc["exit_code"].get<int>();
    doc["report_digest"] = fnv1a_hex(doc.dump());
    if (timing) doc["elapsed_us"] = *timing;
    report.doc = std::move(doc);
    return report;
}

ordered_json labels_json(const SetSystem& family, const ElementSet& set) {
    return ordered_json(family.labels_of(set));
}

ordered_json subfamily_sets_json(const SetSystem& family, const Bitset& subfamily) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = subfamily.find_first(); i != Bitset::npos; i = subfamily.find_next(i))
        out.push_back(labels_json(family, family.member(i)));
    return out;
}

std::int64_t now_us() {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

}  // namespace

std::string Report::to_json() const { return doc.dump(2) + "\n"; }

std::string Report::to_text() const {
    std::string out;
    render_lines(out, doc, 0);
    return out;
}

nlohmann::ordered_json witness_to_json(const SetSystem& family, const Witness& witness) {
    ordered_json out;
    out["kind"] = std::string(witness_kind_name(witness.kind));
    out["gamma1"] = witness.gamma1.indices();
    out["gamma1_sets"] = subfamily_sets_json(family, witness.gamma1);
    out["gamma2"] = witness.gamma2.indices();
    out["gamma2_sets"] = subfamily_sets_json(family, witness.gamma2);
    out["lhs"] = witness.lhs;
    out["rhs"] = witness.rhs;
    return out;
}

nlohmann::ordered_json verdict_to_json(const SetSystem& family, const HkeVerdict& verdict) {
    ordered_json out;
    out["method"] = std::string(oracle_name(verdict.method));
    out["holds"] = verdict.holds;
    out["alpha"] = verdict.alpha ? ordered_json(*verdict.alpha) : ordered_json(nullptr);
    out["witness"] =
        verdict.witness ? witness_to_json(family, *verdict.witness) : ordered_json(nullptr);
    return out;
}

Report hke_check_report(const SetSystem& family, const std::vector<std::string>& warnings,
                        std::string_view method, bool with_timing) {
    ordered_json doc;
    doc["command"] = "hke check";
    doc["input_digest"] = fnv1a_hex(render_setsystem(family));
    doc["warnings"] = warnings;
    doc["ground_size"] = family.ground().size();
    doc["member_count"] = family.member_count();
    doc["method"] = std::string(method);

    ordered_json verdicts = ordered_json::array();
    std::optional<ordered_json> timing;
    bool holds = false;
    if (method == "all") {
        EquivalenceReport audit = equivalence_audit(family);
        verdicts.push_back(verdict_to_json(family, audit.brute_force.verdict));
        verdicts.push_back(verdict_to_json(family, audit.pairs.verdict));
        verdicts.push_back(verdict_to_json(family, audit.partition.verdict));
        holds = audit.holds;
        if (with_timing) {
            ordered_json t;
            t["brute-force"] = audit.brute_force.elapsed.count();
            t["pairs"] = audit.pairs.elapsed.count();
            t["partition"] = audit.partition.elapsed.count();
            timing = t;
        }
    } else {
        std::int64_t start = now_us();
        HkeVerdict verdict;
        if (method == "brute")
            verdict = hke_bruteforce(family);
        else if (method == "pairs")
            verdict = hke_pairs(family);
        else if (method == "partition")
            verdict = hke_partition(family);
        else
            throw PreconditionError("unknown method '" + std::string(method) + "'");
        verdicts.push_back(verdict_to_json(family, verdict));
        holds = verdict.holds;
        if (with_timing) {
            ordered_json t;
            t[std::string(oracle_name(verdict.method))] = now_us() - start;
            timing = t;
        }
    }
    doc["verdicts"] = verdicts;
    doc["holds"] = holds;
    doc["exit_code"] = holds ? 0 : 1;
    return finalize(std::move(doc), timing);
}

Report hke_atoms_report(const SetSystem& family, const std::vector<std::string>& warnings) {
    ordered_json doc;
    doc["command"] = "hke atoms";
    doc["input_digest"] = fnv1a_hex(render_setsystem(family));
    doc["warnings"] = warnings;
    doc["ground_size"] = family.ground().size();
    doc["member_count"] = family.member_count();
    AtomProfile profile = atom_profile(family);
    ordered_json cells = ordered_json::array();
    for (const auto& [signature, cell] : profile.cells()) {
        ordered_json entry;
        entry["signature"] = signature.indices();
        entry["elements"] = labels_json(family, cell);
        entry["size"] = cell.count();
        cells.push_back(std::move(entry));
    }
    doc["cells"] = cells;
    doc["exit_code"] = 0;
    return finalize(std::move(doc), std::nullopt);
}

Report graph_ke_report(const Graph& graph, const std::vector<std::string>& warnings,
                       bool with_timing) {
    ordered_json doc;
    doc["command"] = "graph ke";
    doc["input_digest"] = fnv1a_hex(render_graph(graph));
    doc["warnings"] = warnings;
    doc["vertex_count"] = graph.vertex_count();
    doc["edge_count"] = graph.edge_count();
    std::int64_t start = now_us();
    OmegaFamily omega = independence(graph);
    MatchingResult matching = matching_number(graph);
    bool ke = omega.alpha + matching.number == graph.vertex_count();
    doc["alpha"] = omega.alpha;
    doc["mu"] = matching.number;
    doc["ke"] = ke;
    doc["exit_code"] = ke ? 0 : 1;
    std::optional<ordered_json> timing;
    if (with_timing) timing = ordered_json{{"total", now_us() - start}};
    return finalize(std::move(doc), timing);
}

Report graph_omega_report(const Graph& graph, const std::vector<std::string>& warnings,
                          bool with_timing) {
    ordered_json doc;
    doc["command"] = "graph omega";
    doc["input_digest"] = fnv1a_hex(render_graph(graph));
    doc["warnings"] = warnings;
    doc["vertex_count"] = graph.vertex_count();
    doc["edge_count"] = graph.edge_count();
    std::int64_t start = now_us();
    OmegaFamily omega = independence(graph);
    HkeVerdict verdict = omega_is_hke(graph);
    doc["alpha"] = omega.alpha;
    doc["omega_count"] = omega.sets.member_count();
    ordered_json sets = ordered_json::array();
    for (const auto& member : omega.sets.members())
        sets.push_back(labels_json(omega.sets, member));
    doc["omega"] = sets;
    doc["verdict"] = verdict_to_json(omega.sets, verdict);
    doc["crosschecked"] = omega.sets.member_count() <= 8;
    doc["exit_code"] = verdict.holds ? 0 : 1;
    std::optional<ordered_json> timing;
    if (with_timing) timing = ordered_json{{"total", now_us() - start}};
    return finalize(std::move(doc), timing);
}

Report graph_verify_report(const Graph& graph, const std::vector<std::string>& warnings,
                           std::size_t search_cap, bool with_timing) {
    ordered_json doc;
    doc["command"] = "graph verify";
    doc["input_digest"] = fnv1a_hex(render_graph(graph));
    doc["warnings"] = warnings;
    doc["vertex_count"] = graph.vertex_count();
    doc["edge_count"] = graph.edge_count();
    std::int64_t start = now_us();
    CharacterizationReport result = verify_characterization(graph, search_cap);
    doc["alpha"] = result.alpha;
    doc["mu"] = result.mu;
    doc["ke"] = result.ke;
    doc["omega_count"] = result.omega.sets.member_count();
    doc["search_cap"] = search_cap;
    if (result.certificate) {
        const Certificate& cert = *result.certificate;
        ordered_json c;
        c["subfamily"] = cert.subfamily.indices();
        c["sets"] = subfamily_sets_json(result.omega.sets, cert.subfamily);
        c["union_size"] = cert.union_size;
        c["intersection_size"] = cert.intersection_size;
        c["outside_size"] = cert.outside_size;
        ordered_json matching = ordered_json::array();
        for (const auto& [u, v] : cert.matching.edges) {
            matching.push_back(
                ordered_json::array({graph.vertices().label(u), graph.vertices().label(v)}));
        }
        c["matching"] = matching;
        c["matching_size"] = cert.matching.size();
        c["partition_holds"] = cert.partition_holds;
        c["pairs_holds"] =
            cert.pairs_holds ? ordered_json(*cert.pairs_holds) : ordered_json(nullptr);
        doc["certificate"] = c;
    } else {
        doc["certificate"] = nullptr;
    }
    doc["converse_exhausted"] = result.converse_exhausted ? ordered_json(*result.converse_exhausted)
                                                          : ordered_json(nullptr);
    doc["full_omega_certifies"] = result.full_omega_certifies;
    doc["exit_code"] = result.ke ? 0 : 1;
    std::optional<ordered_json> timing;
    if (with_timing) timing = ordered_json{{"total", now_us() - start}};
    return finalize(std::move(doc), timing);
}

}  // namespace ke
