#include "chromastat/document.hpp"

#include <sstream>

namespace chromastat {

namespace {

Json optional_rational_json(const std::optional<Rational>& r) {
    return r ? rational_json(*r) : Json(nullptr);
}

std::string csv_join(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += fields[i];
    }
    line += '\n';
    return line;
}

// CSV cells: quote only when the content requires it.
std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string number_text(double value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

// "9/5 (= 1.8)" for text output.
std::string rational_text(const Json& r) {
    if (r.is_null()) return "-";
    return r.at("exact").get<std::string>() + " (= " + number_text(r.at("approx").get<double>()) +
           ")";
}

std::string exact_or_dash(const Json& r) {
    return r.is_null() ? "-" : r.at("exact").get<std::string>();
}

std::string int_list_text(const Json& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(values[i].get<long long>());
    }
    out += "]";
    return out;
}

std::string int_list_csv(const Json& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values[i].get<long long>());
    }
    return out;
}

std::string bool_text(const Json& b) {
    if (b.is_null()) return "-";
    return b.get<bool>() ? "true" : "false";
}

void stats_side_text(std::ostringstream& os, const char* title, const Json& side) {
    os << title << ": mean " << rational_text(side.at("mean")) << ", variance "
       << rational_text(side.at("variance")) << ", classification "
       << side.at("classification").at("label").get<std::string>() << "\n";
    os << "        class sizes by color " << int_list_text(side.at("witness").at("class_sizes_by_color"))
       << "; optimal partitions " << side.at("optimal_partition_count").dump()
       << "; variance ambiguous: " << side.at("variance_ambiguous").get<std::string>() << "\n";
}

}  // namespace

Json rational_json(const Rational& r) {
    Json out;
    out["exact"] = format_rational(r);
    out["approx"] = rational_approx(r);
    return out;
}

Json classification_json(const Classification& c) {
    Json out;
    out["label"] = c.label();
    out["k"] = c.k;
    out["uniform"] = c.uniform;
    out["two_point"] = c.two_point;
    return out;
}

Json witness_json(const LabeledColoring& coloring) {
    Json out;
    out["class_sizes_by_color"] = coloring.theta();
    Json classes = Json::array();
    for (int color = 1; color <= coloring.k(); ++color) {
        for (int j = 0; j < coloring.k(); ++j) {
            if (coloring.labels[j] == color) {
                classes.push_back(coloring.partition.classes[j]);
                break;
            }
        }
    }
    out["classes_by_color"] = classes;
    return out;
}

Json graph_json(const Graph& g, const Diagnostics& d) {
    Json out;
    out["vertices"] = g.vertex_count();
    out["edges"] = g.edge_count();
    out["connected"] = d.connected;
    out["components"] = d.component_count;
    out["min_degree"] = d.min_degree;
    out["max_degree"] = d.max_degree;
    return out;
}

namespace {

Json stats_side(const Rational& mean_value, const Rational& variance_value,
                const LabeledColoring& witness, Ambiguity ambiguous,
                const std::optional<unsigned long long>& partition_count) {
    Json side;
    side["mean"] = rational_json(mean_value);
    side["variance"] = rational_json(variance_value);
    side["classification"] = classification_json(classify(pmf(witness)));
    side["witness"] = witness_json(witness);
    if (partition_count) {
        side["optimal_partition_count"] = *partition_count;
    } else {
        side["optimal_partition_count"] = Json(nullptr);
    }
    side["variance_ambiguous"] = ambiguity_name(ambiguous);
    return side;
}

}  // namespace

Json stats_results(const Graph& g, const Diagnostics& d, const ChromaticSummary& summary,
                   const Json& source) {
    Json results;
    Json graph = Json::object();
    graph["source"] = source;
    graph.update(graph_json(g, d));
    results["graph"] = graph;
    results["chi"] = summary.chi;
    results["omega_min"] = summary.omega_min;
    results["omega_max"] = summary.omega_max;
    results["chi_stats"] = stats_side(summary.mean_chi, summary.var_chi, summary.witness_min,
                                      summary.variance_ambiguous_chi,
                                      summary.optimal_partition_count_min);
    results["chi_plus_stats"] =
        stats_side(summary.mean_chi_plus, summary.var_chi_plus, summary.witness_max,
                   summary.variance_ambiguous_chi_plus, summary.optimal_partition_count_max);
    return results;
}

Json report_results(const DiscrepancyReport& report, const Json& parameters) {
    Json results;
    results["parameters"] = parameters;

    Json rows = Json::array();
    long long published_mismatches = 0;
    long long negative_variances = 0;
    long long skipped = 0;
    for (const ReportRow& row : report.rows) {
        Json r;
        r["family"] = row.spec.name();
        r["extreme"] = row.extreme;
        r["chi"] = row.chi;
        r["skipped"] = row.skipped;
        if (row.skipped) {
            r["skip_reason"] = row.skip_reason;
            ++skipped;
        }
        Json engine;
        engine["mean"] = optional_rational_json(row.engine_mean);
        engine["variance"] = optional_rational_json(row.engine_variance);
        r["engine"] = engine;
        Json derived;
        derived["mean"] = rational_json(row.derived_mean);
        derived["variance"] = rational_json(row.derived_variance);
        r["derived"] = derived;
        Json published;
        published["mean"] = optional_rational_json(row.published_mean);
        published["variance"] = optional_rational_json(row.published_variance);
        r["published"] = published;
        r["derived_matches_engine"] =
            row.derived_matches_engine ? Json(*row.derived_matches_engine) : Json(nullptr);
        r["published_matches_derived"] =
            row.published_matches_derived ? Json(*row.published_matches_derived) : Json(nullptr);
        r["published_variance_negative"] = row.published_variance_negative;
        r["notes"] = row.notes;
        if (row.published_matches_derived && !*row.published_matches_derived) {
            ++published_mismatches;
        }
        if (row.published_variance_negative) ++negative_variances;
        rows.push_back(std::move(r));
    }
    results["rows"] = rows;

    Json checks = Json::array();
    long long mean_violations = 0;
    long long variance_violations = 0;
    for (const OrderingCheck& check : report.ordering_checks) {
        Json c;
        c["family"] = check.spec.name();
        c["skipped"] = check.skipped;
        if (check.skipped) {
            c["skip_reason"] = check.skip_reason;
            checks.push_back(std::move(c));
            continue;
        }
        c["mean_ordering_ok"] = check.mean_ordering_ok;
        c["variance_ordering_ok"] = check.variance_ordering_ok;
        Json bounds;
        bounds["mean_chi"] = rational_json(check.mean_chi);
        bounds["mean_chi_plus"] = rational_json(check.mean_chi_plus);
        bounds["var_chi"] = rational_json(check.var_chi);
        bounds["var_chi_plus"] = rational_json(check.var_chi_plus);
        c["bounds"] = bounds;
        if (check.variance_violation) {
            Json v;
            v["sizes_by_color"] = check.variance_violation->sizes_by_color;
            v["sigma_squared"] = rational_json(check.variance_violation->sigma_squared);
            c["variance_violation"] = v;
        } else {
            c["variance_violation"] = Json(nullptr);
        }
        if (!check.mean_ordering_ok) ++mean_violations;
        if (!check.variance_ordering_ok) ++variance_violations;
        checks.push_back(std::move(c));
    }
    results["ordering_checks"] = checks;

    Json summary;
    summary["rows"] = report.rows.size();
    summary["published_mismatch_rows"] = published_mismatches;
    summary["negative_published_variance_rows"] = negative_variances;
    summary["skipped_rows"] = skipped;
    summary["mean_ordering_violations"] = mean_violations;
    summary["variance_ordering_violations"] = variance_violations;
    results["summary"] = summary;
    return results;
}

Json envelope(const std::string& command, const Json& arguments, const Json& results) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["arguments"] = arguments;
    doc["results"] = results;
    return doc;
}

Json error_envelope(const std::string& command, const Json& arguments, const std::string& type,
                    const std::string& message, int exit_code) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["arguments"] = arguments;
    Json error;
    error["type"] = type;
    error["message"] = message;
    error["exit_code"] = exit_code;
    doc["error"] = error;
    return doc;
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string stats_csv(const Json& results) {
    std::string out = csv_join({"graph", "vertices", "edges", "chi", "omega_min", "omega_max",
                                "extreme", "mean", "variance", "classification",
                                "class_sizes_by_color", "optimal_partition_count",
                                "variance_ambiguous"});
    const Json& graph = results.at("graph");
    std::string name;
    const Json& source = graph.at("source");
    if (source.contains("family")) {
        name = source.at("family").get<std::string>();
    } else {
        name = source.at("path").get<std::string>();
    }
    for (const char* extreme : {"chi", "chi_plus"}) {
        const Json& side = results.at(std::string(extreme) + "_stats");
        out += csv_join({csv_escape(name), graph.at("vertices").dump(), graph.at("edges").dump(),
                         results.at("chi").dump(), results.at("omega_min").dump(),
                         results.at("omega_max").dump(), extreme,
                         side.at("mean").at("exact").get<std::string>(),
                         side.at("variance").at("exact").get<std::string>(),
                         side.at("classification").at("label").get<std::string>(),
                         int_list_csv(side.at("witness").at("class_sizes_by_color")),
                         side.at("optimal_partition_count").dump(),
                         side.at("variance_ambiguous").get<std::string>()});
    }
    return out;
}

std::string stats_text(const Json& results) {
    std::ostringstream os;
    const Json& graph = results.at("graph");
    const Json& source = graph.at("source");
    std::string name = source.contains("family") ? source.at("family").get<std::string>()
                                                 : source.at("path").get<std::string>();
    os << "graph: " << name << " (" << graph.at("vertices").get<int>() << " vertices, "
       << graph.at("edges").get<int>() << " edges, "
       << (graph.at("connected").get<bool>() ? "connected" : "disconnected") << ")\n";
    os << "chi: " << results.at("chi").get<int>() << "\n";
    os << "omega: min " << results.at("omega_min").get<long long>() << ", max "
       << results.at("omega_max").get<long long>() << "\n";
    stats_side_text(os, "chi    ", results.at("chi_stats"));
    stats_side_text(os, "chi_plus", results.at("chi_plus_stats"));
    return os.str();
}

std::string report_csv(const Json& results) {
    std::string out = csv_join({"family", "extreme", "chi", "skipped", "engine_mean",
                                "engine_variance", "derived_mean", "derived_variance",
                                "published_mean", "published_variance", "derived_matches_engine",
                                "published_matches_derived", "published_variance_negative",
                                "notes"});
    for (const Json& row : results.at("rows")) {
        std::string notes;
        for (const Json& note : row.at("notes")) {
            if (!notes.empty()) notes += "; ";
            notes += note.get<std::string>();
        }
        out += csv_join({csv_escape(row.at("family").get<std::string>()),
                         row.at("extreme").get<std::string>(), row.at("chi").dump(),
                         row.at("skipped").get<bool>() ? "true" : "false",
                         exact_or_dash(row.at("engine").at("mean")),
                         exact_or_dash(row.at("engine").at("variance")),
                         row.at("derived").at("mean").at("exact").get<std::string>(),
                         row.at("derived").at("variance").at("exact").get<std::string>(),
                         exact_or_dash(row.at("published").at("mean")),
                         exact_or_dash(row.at("published").at("variance")),
                         bool_text(row.at("derived_matches_engine")),
                         bool_text(row.at("published_matches_derived")),
                         row.at("published_variance_negative").get<bool>() ? "true" : "false",
                         csv_escape(notes)});
    }
    return out;
}

std::string report_text(const Json& results) {
    std::ostringstream os;
    for (const Json& row : results.at("rows")) {
        os << row.at("family").get<std::string>() << " " << row.at("extreme").get<std::string>()
           << ": ";
        if (row.at("skipped").get<bool>()) {
            os << "skipped (" << row.at("skip_reason").get<std::string>() << ")\n";
            continue;
        }
        os << "engine " << exact_or_dash(row.at("engine").at("mean")) << ", "
           << exact_or_dash(row.at("engine").at("variance"));
        os << " | derived " << row.at("derived").at("mean").at("exact").get<std::string>() << ", "
           << row.at("derived").at("variance").at("exact").get<std::string>();
        os << (row.at("derived_matches_engine").get<bool>() ? " [match]" : " [MISMATCH]");
        os << " | published " << exact_or_dash(row.at("published").at("mean")) << ", "
           << exact_or_dash(row.at("published").at("variance"));
        const Json& pm = row.at("published_matches_derived");
        if (pm.is_null()) {
            os << " [none]";
        } else {
            os << (pm.get<bool>() ? " [match]" : " [MISMATCH]");
        }
        if (row.at("published_variance_negative").get<bool>()) os << " [negative]";
        os << "\n";
        for (const Json& note : row.at("notes")) {
            os << "    note: " << note.get<std::string>() << "\n";
        }
    }
    for (const Json& check : results.at("ordering_checks")) {
        os << "ordering " << check.at("family").get<std::string>() << ": ";
        if (check.at("skipped").get<bool>()) {
            os << "skipped (" << check.at("skip_reason").get<std::string>() << ")\n";
            continue;
        }
        os << "mean " << (check.at("mean_ordering_ok").get<bool>() ? "ok" : "VIOLATED");
        os << ", variance "
           << (check.at("variance_ordering_ok").get<bool>() ? "ok" : "VIOLATED");
        const Json& violation = check.at("variance_violation");
        if (!violation.is_null()) {
            os << " (sizes by color " << int_list_text(violation.at("sizes_by_color"))
               << " give sigma^2 " << violation.at("sigma_squared").at("exact").get<std::string>()
               << ", outside ["
               << check.at("bounds").at("var_chi").at("exact").get<std::string>() << ", "
               << check.at("bounds").at("var_chi_plus").at("exact").get<std::string>() << "])";
        }
        os << "\n";
    }
    const Json& summary = results.at("summary");
    os << "rows: " << summary.at("rows").get<long long>() << ", published mismatches: "
       << summary.at("published_mismatch_rows").get<long long>()
       << ", negative published variances: "
       << summary.at("negative_published_variance_rows").get<long long>()
       << ", skipped: " << summary.at("skipped_rows").get<long long>() << "\n";
    os << "ordering: mean violations " << summary.at("mean_ordering_violations").get<long long>()
       << ", variance violations "
       << summary.at("variance_ordering_violations").get<long long>() << "\n";
    return os.str();
}

std::string verify_text(const Json& results) {
    std::ostringstream os;
    for (const Json& c : results.at("cases")) {
        os << (c.at("match").get<bool>() ? "pass" : "FAIL") << " "
           << c.at("name").get<std::string>() << ": engine chi "
           << c.at("engine").at("chi").get<int>() << " omega ["
           << c.at("engine").at("omega_min").get<long long>() << ", "
           << c.at("engine").at("omega_max").get<long long>() << "], oracle chi "
           << c.at("oracle").at("chi").get<int>() << " omega ["
           << c.at("oracle").at("omega_min").get<long long>() << ", "
           << c.at("oracle").at("omega_max").get<long long>() << "]\n";
    }
    const Json& totals = results.at("totals");
    os << "cases: " << totals.at("cases").get<long long>() << ", mismatches: "
       << totals.at("mismatches").get<long long>() << "\n";
    return os.str();
}

}  // namespace chromastat
