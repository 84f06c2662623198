#ifndef CHROMASTAT_DOCUMENT_HPP
#define CHROMASTAT_DOCUMENT_HPP

#include <string>

#include "json.hpp"

#include "chromastat/closed_forms.hpp"
#include "chromastat/coloring.hpp"
#include "chromastat/graph.hpp"
#include "chromastat/rational.hpp"
#include "chromastat/stats.hpp"

namespace chromastat {

// Insertion-ordered so output bytes are stable run to run.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0.0";

// Rationals always carry the exact "p/q" form; the decimal is advisory.
Json rational_json(const Rational& r);

Json classification_json(const Classification& c);

// Witness coloring in color order: sizes theta(1..k) and the vertex
// classes taking each color.
Json witness_json(const LabeledColoring& coloring);

Json graph_json(const Graph& g, const Diagnostics& d);

// Results payload of the `stats` command. `source` describes where the
// graph came from, e.g. {"family": "cycle(5)"} or {"path": "g.col"}.
Json stats_results(const Graph& g, const Diagnostics& d, const ChromaticSummary& summary,
                   const Json& source);

// Results payload of the `report` command.
Json report_results(const DiscrepancyReport& report, const Json& parameters);

// Top-level envelopes.
Json envelope(const std::string& command, const Json& arguments, const Json& results);
Json error_envelope(const std::string& command, const Json& arguments, const std::string& type,
                    const std::string& message, int exit_code);

// Renderers. JSON is the envelope itself; CSV and text render the same
// results payloads (CSV covers the tabular portion, with a header row and
// LF line endings).
std::string render_json(const Json& doc);
std::string stats_csv(const Json& results);
std::string stats_text(const Json& results);
std::string report_csv(const Json& results);
std::string report_text(const Json& results);
std::string verify_text(const Json& results);

}  // namespace chromastat

#endif
