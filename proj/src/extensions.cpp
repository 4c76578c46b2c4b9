#include "dendric/extensions.hpp"

#include <map>
#include <stdexcept>

namespace dendric {

ExtensionGraph extension_graph(const FiniteLanguage& l, const std::string& w) {
    if (static_cast<int>(w.size()) + 2 > l.horizon()) {
        throw std::out_of_range("extension graph needs |w| + 2 <= horizon");
    }
    if (!l.contains(w)) throw std::invalid_argument("word not in language: " + w);
    ExtensionGraph g;
    g.word = w;
    const auto& alpha = l.alphabet();
    for (int i = 0; i < alpha.size(); ++i) {
        for (int j = 0; j < alpha.size(); ++j) {
            char a = alpha.letter(i), b = alpha.letter(j);
            if (l.contains(a + w + b)) {
                g.edges.insert({a, b});
                g.left.insert(a);
                g.right.insert(b);
            }
        }
    }
    return g;
}

namespace {
// vertices encoded as (side, letter); side 0 = left
using V = std::pair<int, char>;

std::map<V, std::vector<V>> adjacency(const ExtensionGraph& g) {
    std::map<V, std::vector<V>> adj;
    for (char a : g.left) adj[{0, a}];
    for (char b : g.right) adj[{1, b}];
    for (const auto& [a, b] : g.edges) {
        adj[{0, a}].push_back({1, b});
        adj[{1, b}].push_back({0, a});
    }
    return adj;
}
}  // namespace

bool is_connected(const ExtensionGraph& g) {
    auto adj = adjacency(g);
    if (adj.empty()) return true;
    std::set<V> seen{adj.begin()->first};
    std::vector<V> stack{adj.begin()->first};
    while (!stack.empty()) {
        V v = stack.back();
        stack.pop_back();
        for (const auto& w : adj[v]) {
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    return seen.size() == adj.size();
}

bool is_acyclic(const ExtensionGraph& g) {
    // acyclic iff #edges = #vertices - #components
    auto adj = adjacency(g);
    int components = 0;
    std::set<V> seen;
    for (const auto& [v, ignored] : adj) {
        if (seen.count(v)) continue;
        ++components;
        std::vector<V> stack{v};
        seen.insert(v);
        while (!stack.empty()) {
            V cur = stack.back();
            stack.pop_back();
            for (const auto& w : adj[cur]) {
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
    }
    return g.edge_count() == g.vertex_count() - components;
}

bool is_tree(const ExtensionGraph& g) {
    return g.vertex_count() > 0 && is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

bool is_dendric_word(const FiniteLanguage& l, const std::string& w) { return is_tree(extension_graph(l, w)); }

int bilateral_multiplicity(const ExtensionGraph& g) {
    return g.edge_count() - static_cast<int>(g.left.size()) - static_cast<int>(g.right.size()) + 1;
}

WordClass classify_word(const FiniteLanguage& l, const std::string& w) {
    ExtensionGraph g = extension_graph(l, w);
    WordClass c;
    c.left_special = g.left.size() >= 2;
    c.right_special = g.right.size() >= 2;
    c.bispecial = c.left_special && c.right_special;
    c.dendric = is_tree(g);
    if (c.bispecial) {
        for (const auto& [a, b] : g.edges) {
            bool ok = true;
            for (const auto& [x, y] : g.edges) {
                if (x != a && y != b) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                c.ordinary = true;
                break;
            }
        }
    }
    return c;
}

ExtensionGraph remove_vertex(const ExtensionGraph& g, char letter, bool left_side) {
    ExtensionGraph r;
    r.word = g.word;
    for (const auto& [a, b] : g.edges) {
        if (left_side && a == letter) continue;
        if (!left_side && b == letter) continue;
        r.edges.insert({a, b});
        r.left.insert(a);
        r.right.insert(b);
    }
    return r;
}

AuditReport dendricity_audit(const FiniteLanguage& l, int n_max) {
    if (n_max + 2 > l.horizon()) throw std::out_of_range("audit needs n_max + 2 <= horizon");
    AuditReport r;
    r.n_max_effective = n_max;
    for (int n = 0; n <= n_max; ++n) {
        r.complexity.push_back(l.complexity(n));
        for (const auto& w : l.words_of_length(n)) {
            ExtensionGraph g = extension_graph(l, w);
            if (!is_tree(g)) r.non_dendric.push_back(w.empty() ? "@" : w);
            if (g.left.size() >= 2 && g.right.size() >= 2 && bilateral_multiplicity(g) != 0) {
                r.multiplicity_failures.push_back(w.empty() ? "@" : w);
            }
        }
    }
    r.pass = r.non_dendric.empty() && r.multiplicity_failures.empty();
    return r;
}

std::string dump(const ExtensionGraph& g) {
    std::string out = "left:";
    for (char a : g.left) out += std::string(" ") + a;
    out += "\nright:";
    for (char b : g.right) out += std::string(" ") + b;
    out += "\n";
    for (const auto& [a, b] : g.edges) {
        out += a;
        out += '-';
        out += b;
        out += '\n';
    }
    return out;
}

std::string to_dot(const ExtensionGraph& g) {
    std::string out = "graph extension {\n  rankdir=LR;\n";
    for (char a : g.left) out += std::string("  L") + a + " [label=\"" + a + "\"];\n";
    for (char b : g.right) out += std::string("  R") + b + " [label=\"" + b + "\"];\n";
    for (const auto& [a, b] : g.edges) out += std::string("  L") + a + " -- R" + b + ";\n";
    out += "}\n";
    return out;
}

}  // namespace dendric
