#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ketool/graph.hpp"
#include "ketool/hke.hpp"
#include "ketool/io.hpp"

namespace ke {

/// A structured run report. Fields are emitted in a fixed order per
/// command, so rendered output is byte-stable; `report_digest` covers
/// everything except the optional timing block, which is only attached
/// when requested.
struct Report {
    nlohmann::ordered_json doc;
    int exit_code = 0;

    std::string to_json() const;
    std::string to_text() const;
};

nlohmann::ordered_json witness_to_json(const SetSystem& family, const Witness& witness);
nlohmann::ordered_json verdict_to_json(const SetSystem& family, const HkeVerdict& verdict);

/// `method` is one of brute|pairs|partition|all.
Report hke_check_report(const SetSystem& family, const std::vector<std::string>& warnings,
                        std::string_view method, bool with_timing);

Report hke_atoms_report(const SetSystem& family, const std::vector<std::string>& warnings);

Report graph_ke_report(const Graph& graph, const std::vector<std::string>& warnings,
                       bool with_timing);

Report graph_omega_report(const Graph& graph, const std::vector<std::string>& warnings,
                          bool with_timing);

Report graph_verify_report(const Graph& graph, const std::vector<std::string>& warnings,
                           std::size_t search_cap, bool with_timing);

}  // namespace ke
