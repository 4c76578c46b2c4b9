#ifndef DENDRIC_TERNARY_HPP
#define DENDRIC_TERNARY_HPP

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dendric/catalog.hpp"
#include "dendric/extensions.hpp"
#include "dendric/words.hpp"

namespace dendric {

// [l, r] over {0,1,2,3}; 0 encodes the empty set.
struct ClassLabel {
    int l = 0, r = 0;
    bool operator==(const ClassLabel& o) const = default;
    bool operator<(const ClassLabel& o) const { return l < o.l || (l == o.l && r < o.r); }
    std::string str() const { return "[" + std::to_string(l) + "," + std::to_string(r) + "]"; }
};

// permutations act on labels with pi(0) = 0
ClassLabel apply_perm(const Permutation& p, const ClassLabel& c);

struct ConditionViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Image class of c under a wrapped catalog morphism; throws
// ConditionViolation when the row conditions fail.
ClassLabel class_image(const ClassLabel& c, const TernaryLabel& label);

struct ClassEdge {
    int from = 0, to = 0;  // vertex indices
    TernaryLabel label;    // k symbolic for Delta/Zeta families
    bool operator==(const ClassEdge& o) const = default;
};

struct ClassGraph {
    std::string name;
    std::vector<ClassLabel> vertices;
    std::vector<ClassEdge> edges;  // plus an implicit Sigma3 edge into every vertex

    int vertex_index(const ClassLabel& c) const;
    std::vector<ClassEdge> edges_from(int v) const;
};

ClassGraph build_g_prime();
ClassGraph build_g();
ClassGraph build_g_iet();

// letters whose removal disconnects the extension graph
struct CSets {
    std::set<char> minus, plus;
};
CSets c_sets(const FiniteLanguage& l, const std::string& w);

struct ShiftClass {
    ClassLabel label;
    int stable_at_minus = -1, stable_at_plus = -1;  // bispecial length where the side settled
};

// Union of c_sets over bispecial words, scanned up to scan_max (with a
// stabilization window); audits dendricity first.
ShiftClass classify_shift(const FiniteLanguage& l, int scan_max, int stable_window = 8);

struct PathCheckResult {
    bool accepted = false;
    std::vector<std::vector<ClassLabel>> vertex_paths;  // capped witness list
};

PathCheckResult path_check(const std::vector<Morphism>& prefix, const ClassGraph& g, size_t path_cap = 64);

// state predicate: (vertex index, accumulated permutation index)
using StateConstraint = std::function<bool(int, int)>;

struct EquivalenceWitness {
    std::vector<int> vertices;      // visited vertices, length n+1
    std::vector<int> permutations;  // xi_1 .. xi_{n+1}
    std::vector<TernaryLabel> labels;
};

// Does some sequence equivalent to the prefix label a path in g?  The
// search runs over (vertex, accumulated permutation) states, initial
// permutation edges included.
std::optional<EquivalenceWitness> equivalent_path(const std::vector<Morphism>& prefix, const ClassGraph& g,
                                                  const StateConstraint& constraint = nullptr);
bool equivalent_path_exists(const std::vector<Morphism>& prefix, const ClassGraph& g,
                            const StateConstraint& constraint = nullptr);

// sigma_1..sigma_n pi_n = tau_1..tau_n for all n, with xi_1 = id
bool sequences_equivalent(const std::vector<Morphism>& sigma, const std::vector<Morphism>& tau);

struct DeriveStep {
    TernaryLabel label;
    Morphism sigma;           // the emitted Sigma3 S3 Sigma3 morphism
    FiniteLanguage derived;   // relabeled derived language
    char special_letter = 0;  // the left special letter that was derived
};

// One step of the ternary derivation pipeline: template-match the
// extension graph of the empty word, derive by the designated left
// special letter, and express the coding morphism in Sigma3 S3 Sigma3.
DeriveStep ternary_derive_step(const FiniteLanguage& l);

}  // namespace dendric

#endif
