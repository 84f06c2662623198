#include "chromastat/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chromastat {

int ColorPartition::vertex_count() const {
    int total = 0;
    for (const auto& c : classes) total += static_cast<int>(c.size());
    return total;
}

std::vector<int> ColorPartition::class_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(classes.size());
    for (const auto& c : classes) sizes.push_back(static_cast<int>(c.size()));
    return sizes;
}

ColorPartition make_canonical_partition(std::vector<std::vector<int>> classes) {
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return ColorPartition{std::move(classes)};
}

bool partition_less(const ColorPartition& a, const ColorPartition& b) {
    return a.classes < b.classes;
}

void validate_partition(const Graph& g, const ColorPartition& p) {
    const int n = g.vertex_count();
    std::vector<int> owner(n, -1);
    for (int j = 0; j < p.k(); ++j) {
        const auto& cls = p.classes[j];
        if (cls.empty()) throw std::invalid_argument("empty color class");
        for (int v : cls) {
            if (v < 0 || v >= n) {
                throw std::invalid_argument("class vertex out of range: " + std::to_string(v));
            }
            if (owner[v] != -1) {
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " appears in two classes");
            }
            owner[v] = j;
        }
        for (std::size_t a = 0; a < cls.size(); ++a) {
            for (std::size_t b = a + 1; b < cls.size(); ++b) {
                if (g.has_edge(cls[a], cls[b])) {
                    throw std::invalid_argument(
                        "class is not independent: edge " + std::to_string(cls[a]) + "-" +
                        std::to_string(cls[b]));
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (owner[v] == -1) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " is uncovered");
        }
    }
}

std::vector<int> LabeledColoring::theta() const {
    std::vector<int> out(k(), 0);
    for (int j = 0; j < k(); ++j) {
        out[labels[j] - 1] = static_cast<int>(partition.classes[j].size());
    }
    return out;
}

std::vector<int> LabeledColoring::vertex_colors() const {
    std::vector<int> colors(vertex_count(), 0);
    for (int j = 0; j < k(); ++j) {
        for (int v : partition.classes[j]) colors[v] = labels[j];
    }
    return colors;
}

LabeledColoring labeled_from_vertex_colors(const std::vector<int>& colors) {
    if (colors.empty()) throw std::invalid_argument("no vertices");
    int k = *std::max_element(colors.begin(), colors.end());
    std::vector<std::vector<int>> by_color(k);
    for (int v = 0; v < static_cast<int>(colors.size()); ++v) {
        int c = colors[v];
        if (c < 1 || c > k) {
            throw std::invalid_argument("color out of range at vertex " + std::to_string(v));
        }
        by_color[c - 1].push_back(v);
    }
    for (int i = 0; i < k; ++i) {
        if (by_color[i].empty()) {
            throw std::invalid_argument("color " + std::to_string(i + 1) +
                                        " unused; coloring must be surjective");
        }
    }
    // Canonicalize the partition, then attach the original color per class.
    std::vector<std::vector<int>> classes = by_color;
    ColorPartition p = make_canonical_partition(std::move(classes));
    std::vector<int> labels(k);
    for (int j = 0; j < k; ++j) {
        labels[j] = colors[p.classes[j].front()];
    }
    return LabeledColoring{std::move(p), std::move(labels)};
}

void validate_labeled_coloring(const LabeledColoring& c) {
    const int k = c.k();
    if (static_cast<int>(c.labels.size()) != k) {
        throw std::invalid_argument("label count does not match class count");
    }
    std::vector<char> used(k, 0);
    for (int label : c.labels) {
        if (label < 1 || label > k) {
            throw std::invalid_argument("label out of range: " + std::to_string(label));
        }
        if (used[label - 1]) {
            throw std::invalid_argument("label used twice: " + std::to_string(label));
        }
        used[label - 1] = 1;
    }
}

void validate_labeled_coloring(const Graph& g, const LabeledColoring& c) {
    validate_labeled_coloring(c);
    validate_partition(g, c.partition);
}

long long coloring_sum(const LabeledColoring& c) {
    long long omega = 0;
    for (int j = 0; j < c.k(); ++j) {
        omega += static_cast<long long>(c.labels[j]) *
                 static_cast<long long>(c.partition.classes[j].size());
    }
    return omega;
}

LabeledColoring label_for_min(const ColorPartition& p) {
    std::vector<int> labels(p.k());
    std::iota(labels.begin(), labels.end(), 1);
    return LabeledColoring{p, std::move(labels)};
}

LabeledColoring label_for_max(const ColorPartition& p) {
    std::vector<int> labels(p.k());
    for (int j = 0; j < p.k(); ++j) labels[j] = p.k() - j;
    return LabeledColoring{p, std::move(labels)};
}

}  // namespace chromastat
