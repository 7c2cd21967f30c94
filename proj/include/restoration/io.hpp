// io.hpp - text formats and JSON serialization.
//
// Graph files: header "n m weighted" (weighted is 0 or 1), then m lines
// "u v" (weight 1) or "u v w". Fault files: one "u v" line per fault; every
// fault must name an existing edge. Decompositions exchange as JSON objects
// {"boundaries", "fault_sets", "separators", "q", "budget"}.
#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "restoration/instance.hpp"
#include "restoration/lowerbound.hpp"
#include "restoration/oracle.hpp"

namespace restoration {

using ordered_json = nlohmann::ordered_json;

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

FaultSet read_faults(std::istream& in, const Graph& g);
void write_faults(std::ostream& out, const FaultSet& fs);
FaultSet load_faults(const std::string& path, const Graph& g);
void save_faults(const std::string& path, const FaultSet& fs);

ordered_json decomposition_to_json(const Decomposition& d, int budget);
// Reads back the schema above; the budget rides along in the JSON, so the
// returned pair is (decomposition, budget).
std::pair<Decomposition, int> decomposition_from_json(const nlohmann::json& j);

ordered_json verifier_report_to_json(const VerifierReport& rep);

// Full instance dump for generated families: graph + faults inline plus the
// endpoints, per-copy fault partition, and half-arc markers.
ordered_json lowerbound_to_json(const LowerBoundInstance& lbi);

// FNV-1a over a canonical serialization of (graph, faults, s, t); stable
// across runs and platforms, used to label experiment records.
std::string instance_digest(const ReplacementInstance& inst);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace restoration
