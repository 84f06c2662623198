#include "chromastat/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "chromastat/errors.hpp"

namespace chromastat {

namespace {

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> out;
    std::string t;
    while (iss >> t) out.push_back(t);
    return out;
}

long long parse_int(const std::string& tok, int line_no) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line_no, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) {
        throw ParseError(line_no, "expected an integer, got '" + tok + "'");
    }
    return value;
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
    std::optional<int> declared_n;
    std::vector<Graph::Edge> edges;
    std::string line;
    int line_no = 0;
    int p_line = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line) || line[0] == 'c') continue;
        auto toks = tokens(line);
        if (toks[0] == "p") {
            if (declared_n) {
                throw ParseError(line_no, "duplicate 'p' line (first at line " +
                                              std::to_string(p_line) + ")");
            }
            if (toks.size() != 4 ||
                (toks[1] != "edge" && toks[1] != "edges" && toks[1] != "col")) {
                throw ParseError(line_no, "malformed problem line, expected 'p edge N M'");
            }
            long long n = parse_int(toks[2], line_no);
            parse_int(toks[3], line_no);  // declared edge count, informational
            if (n < 1) {
                throw ParseError(line_no, "vertex count must be at least 1");
            }
            declared_n = static_cast<int>(n);
            p_line = line_no;
        } else if (toks[0] == "e") {
            if (!declared_n) {
                throw ParseError(line_no, "edge line before 'p' line");
            }
            if (toks.size() != 3) {
                throw ParseError(line_no, "malformed edge line, expected 'e u v'");
            }
            long long u = parse_int(toks[1], line_no);
            long long v = parse_int(toks[2], line_no);
            if (u < 1 || v < 1 || u > *declared_n || v > *declared_n) {
                throw ParseError(line_no, "edge endpoint out of range [1, " +
                                              std::to_string(*declared_n) + "]");
            }
            if (u == v) {
                throw ParseError(line_no, "self-loop 'e " + std::to_string(u) + " " +
                                              std::to_string(v) + "'");
            }
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw ParseError(line_no, "unrecognized line type '" + toks[0] + "'");
        }
    }
    if (!declared_n) {
        throw ParseError("missing 'p' line");
    }
    std::vector<std::string> labels(*declared_n);
    for (int i = 0; i < *declared_n; ++i) labels[i] = std::to_string(i + 1);
    return Graph(*declared_n, std::move(edges), std::move(labels));
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

Graph parse_edge_list(std::istream& in) {
    std::optional<int> declared_n;
    std::vector<Graph::Edge> edges;
    int max_index = -1;
    std::string line;
    int line_no = 0;
    bool first_content_line = true;

    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        auto toks = tokens(line);
        if (first_content_line && toks[0] == "n") {
            if (toks.size() != 2) {
                throw ParseError(line_no, "malformed count line, expected 'n <count>'");
            }
            long long n = parse_int(toks[1], line_no);
            if (n < 1) {
                throw ParseError(line_no, "vertex count must be at least 1");
            }
            declared_n = static_cast<int>(n);
            first_content_line = false;
            continue;
        }
        first_content_line = false;
        if (toks.size() != 2) {
            throw ParseError(line_no, "expected 'u v' pair");
        }
        long long u = parse_int(toks[0], line_no);
        long long v = parse_int(toks[1], line_no);
        if (u < 0 || v < 0) {
            throw ParseError(line_no, "vertex indices are 0-based, negative index not allowed");
        }
        if (u == v) {
            throw ParseError(line_no, "self-loop '" + std::to_string(u) + " " +
                                          std::to_string(v) + "'");
        }
        max_index = std::max(max_index, static_cast<int>(std::max(u, v)));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }

    if (declared_n) {
        if (max_index >= *declared_n) {
            throw ParseError("declared n " + std::to_string(*declared_n) +
                             " smaller than max vertex index " + std::to_string(max_index) +
                             " + 1");
        }
        return Graph(*declared_n, std::move(edges));
    }
    if (max_index < 0) {
        throw ParseError("empty input: no edges and no 'n <count>' line");
    }
    return Graph(max_index + 1, std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) {
        out << "e " << u + 1 << " " << v + 1 << "\n";
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) {
        out << u << " " << v << "\n";
    }
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    write_dimacs(out, g);
    return out.str();
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

GraphFormat detect_format(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (blank(line)) continue;
        auto toks = tokens(line);
        if (toks[0] == "c" || toks[0] == "p") return GraphFormat::dimacs;
        return GraphFormat::edge_list;
    }
    return GraphFormat::edge_list;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (detect_format(text) == GraphFormat::dimacs) {
        return parse_dimacs(text);
    }
    return parse_edge_list(text);
}

}  // namespace chromastat
