#include "chromastat/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chromastat {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

int FamilySpec::vertex_count() const {
    if (family == Family::complete_bipartite || family == Family::complete_multipartite) {
        return std::accumulate(parts.begin(), parts.end(), 0);
    }
    return n;
}

std::string FamilySpec::name() const {
    std::ostringstream out;
    out << family_name(family) << "(";
    if (family == Family::complete_bipartite || family == Family::complete_multipartite) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out << ",";
            out << parts[i];
        }
    } else {
        out << n;
    }
    out << ")";
    return out.str();
}

void check_family_spec(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::complete:
            require(spec.n >= 1, "complete graph needs n >= 1");
            break;
        case Family::path:
            require(spec.n >= 1, "path needs n >= 1");
            break;
        case Family::cycle:
            require(spec.n >= 3, "cycle needs n >= 3");
            break;
        case Family::wheel:
            require(spec.n >= 4, "wheel needs n >= 4");
            break;
        case Family::star:
            require(spec.n >= 2, "star needs n >= 2");
            break;
        case Family::complete_bipartite:
            require(spec.parts.size() == 2, "complete_bipartite needs exactly 2 part sizes");
            for (int m : spec.parts) require(m >= 1, "part sizes must be >= 1");
            break;
        case Family::complete_multipartite:
            require(spec.parts.size() >= 2, "complete_multipartite needs k >= 2 parts");
            for (int m : spec.parts) require(m >= 1, "part sizes must be >= 1");
            break;
    }
}

namespace {

Graph build_complete(int n) {
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph build_path(int n) {
    std::vector<Graph::Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph build_cycle(int n) {
    std::vector<Graph::Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(edges));
}

// Hub is vertex 0; rim 1..n-1 forms a cycle.
Graph build_wheel(int n) {
    std::vector<Graph::Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    for (int v = 1; v < n; ++v) {
        int next = v == n - 1 ? 1 : v + 1;
        edges.emplace_back(v, next);
    }
    return Graph(n, std::move(edges));
}

Graph build_multipartite(const std::vector<int>& parts) {
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> part_of;
    part_of.reserve(n);
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < parts[p]; ++i) part_of.push_back(static_cast<int>(p));
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

}  // namespace

Graph generate_family(const FamilySpec& spec) {
    check_family_spec(spec);
    switch (spec.family) {
        case Family::complete:
            return build_complete(spec.n);
        case Family::path:
            return build_path(spec.n);
        case Family::cycle:
            return build_cycle(spec.n);
        case Family::wheel:
            return build_wheel(spec.n);
        case Family::star:
            return build_multipartite({1, spec.n - 1});
        case Family::complete_bipartite:
        case Family::complete_multipartite:
            return build_multipartite(spec.parts);
    }
    throw std::invalid_argument("unknown family");
}

const char* family_name(Family family) {
    switch (family) {
        case Family::complete: return "complete";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::wheel: return "wheel";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::complete_multipartite: return "complete_multipartite";
        case Family::star: return "star";
    }
    return "unknown";
}

Family parse_family_name(const std::string& name) {
    std::string canon = name;
    std::replace(canon.begin(), canon.end(), '-', '_');
    if (canon == "complete") return Family::complete;
    if (canon == "path") return Family::path;
    if (canon == "cycle") return Family::cycle;
    if (canon == "wheel") return Family::wheel;
    if (canon == "complete_bipartite") return Family::complete_bipartite;
    if (canon == "complete_multipartite") return Family::complete_multipartite;
    if (canon == "star") return Family::star;
    throw std::invalid_argument("unknown family name: " + name);
}

}  // namespace chromastat
