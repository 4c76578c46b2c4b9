#ifndef DENDRIC_EXTENSIONS_HPP
#define DENDRIC_EXTENSIONS_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dendric/words.hpp"

namespace dendric {

// Bipartite graph of left/right extensions of a word.  Vertex sets are
// kept explicitly; the invariant "no isolated vertex" holds for graphs
// built by extension_graph and is re-established by the removal helpers.
struct ExtensionGraph {
    std::string word;
    std::set<char> left, right;
    std::set<std::pair<char, char>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int vertex_count() const { return static_cast<int>(left.size() + right.size()); }
    bool operator==(const ExtensionGraph& o) const { return left == o.left && right == o.right && edges == o.edges; }
};

ExtensionGraph extension_graph(const FiniteLanguage& l, const std::string& w);

bool is_connected(const ExtensionGraph& g);
bool is_acyclic(const ExtensionGraph& g);
bool is_tree(const ExtensionGraph& g);
bool is_dendric_word(const FiniteLanguage& l, const std::string& w);

int bilateral_multiplicity(const ExtensionGraph& g);

struct WordClass {
    bool left_special = false, right_special = false, bispecial = false, ordinary = false, dendric = false;
};
WordClass classify_word(const FiniteLanguage& l, const std::string& w);

// drop one side's vertex together with its edges, then any isolated vertices
ExtensionGraph remove_vertex(const ExtensionGraph& g, char letter, bool left_side);

struct AuditReport {
    bool pass = false;
    int n_max_effective = 0;
    std::vector<std::string> non_dendric;           // offending words
    std::vector<std::string> multiplicity_failures; // bispecial words violating #E - #E^- - #E^+ + 1 = 0
    std::vector<long long> complexity;              // p(0..n_max_effective)
};

AuditReport dendricity_audit(const FiniteLanguage& l, int n_max);

std::string dump(const ExtensionGraph& g);    // vertex headers + edge list "a-b"
std::string to_dot(const ExtensionGraph& g);  // Graphviz export

}  // namespace dendric

#endif
