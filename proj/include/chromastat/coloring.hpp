#ifndef CHROMASTAT_COLORING_HPP
#define CHROMASTAT_COLORING_HPP

#include <vector>

#include "chromastat/graph.hpp"

namespace chromastat {

// Partition of the vertex set into nonempty independent classes.
// Canonical order: classes sorted by size descending, ties broken by the
// smallest contained vertex; each class sorted ascending.
struct ColorPartition {
    std::vector<std::vector<int>> classes;

    int k() const { return static_cast<int>(classes.size()); }
    int vertex_count() const;
    std::vector<int> class_sizes() const;

    bool operator==(const ColorPartition& other) const {
        return classes == other.classes;
    }
};

// Sorts classes into canonical order (input classes need not be sorted).
ColorPartition make_canonical_partition(std::vector<std::vector<int>> classes);

// Total order on canonical partitions: compare the class lists
// lexicographically. Used to pick a deterministic witness among ties.
bool partition_less(const ColorPartition& a, const ColorPartition& b);

// Throws std::invalid_argument unless classes are nonempty, disjoint,
// cover all vertices of g, and each is an independent set.
void validate_partition(const Graph& g, const ColorPartition& p);

// A partition plus a bijection from classes to color indices 1..k
// (surjective coloring: every color used once per class).
struct LabeledColoring {
    ColorPartition partition;
    std::vector<int> labels;  // labels[j] = 1-based color of partition.classes[j]

    int k() const { return partition.k(); }
    int vertex_count() const { return partition.vertex_count(); }

    // theta[i-1] = number of vertices with color i.
    std::vector<int> theta() const;
    // Per-vertex colors, 1-based.
    std::vector<int> vertex_colors() const;
};

// Builds a LabeledColoring from per-vertex colors (1-based, all of 1..k
// used). Throws std::invalid_argument on gaps or out-of-range colors.
LabeledColoring labeled_from_vertex_colors(const std::vector<int>& colors);

// Checks the label bijection and, when a graph is given, properness.
void validate_labeled_coloring(const LabeledColoring& c);
void validate_labeled_coloring(const Graph& g, const LabeledColoring& c);

// omega = sum over colors i of i * theta(i).
long long coloring_sum(const LabeledColoring& c);

// Labels a canonical partition to minimize omega: color 1 to the largest
// class, color 2 to the next, and so on (rearrangement argument).
LabeledColoring label_for_min(const ColorPartition& p);

// Mirror image: color 1 to the smallest class; maximizes omega.
LabeledColoring label_for_max(const ColorPartition& p);

}  // namespace chromastat

#endif
