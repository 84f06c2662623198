#ifndef CHROMASTAT_FAMILIES_HPP
#define CHROMASTAT_FAMILIES_HPP

#include <string>
#include <vector>

#include "chromastat/graph.hpp"

namespace chromastat {

enum class Family {
    complete,
    path,
    cycle,
    wheel,
    complete_bipartite,
    complete_multipartite,
    star,
};

// A graph family instance: `n` for single-parameter families, `parts` for
// the partite ones. The wheel W_n has n vertices total: a hub joined to a
// cycle on n-1 rim vertices.
struct FamilySpec {
    Family family;
    int n = 0;
    std::vector<int> parts;

    static FamilySpec sized(Family family, int n) { return FamilySpec{family, n, {}}; }
    static FamilySpec partite(Family family, std::vector<int> parts) {
        return FamilySpec{family, 0, std::move(parts)};
    }

    int vertex_count() const;
    // e.g. "cycle(5)", "complete_bipartite(2,3)"
    std::string name() const;
};

// Throws std::invalid_argument when a parameter is below the family minimum
// (path n>=1, cycle n>=3, wheel n>=4, complete n>=1, star n>=2, bipartite
// parts >=1, multipartite >=2 parts each >=1).
void check_family_spec(const FamilySpec& spec);

Graph generate_family(const FamilySpec& spec);

const char* family_name(Family family);
// Accepts both underscore and hyphen spellings ("complete_bipartite",
// "complete-bipartite"). Throws std::invalid_argument on unknown names.
Family parse_family_name(const std::string& name);

}  // namespace chromastat

#endif
