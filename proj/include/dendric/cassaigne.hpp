#ifndef DENDRIC_CASSAIGNE_HPP
#define DENDRIC_CASSAIGNE_HPP

#include <optional>
#include <string>
#include <vector>

#include "dendric/catalog.hpp"
#include "dendric/ternary.hpp"

namespace dendric {

// word over {c1, c2}, stored as a string of '1'/'2'
struct CassaigneSequence {
    std::string symbols;
    static CassaigneSequence parse(const std::string& literal);  // "121" means c1 c2 c1
    std::vector<Morphism> morphisms() const;
};

// Bounded primitivity: false iff some even-length suffix of the inspected
// window splits into doubled pairs.
bool is_primitive_cassaigne(const CassaigneSequence& seq, int window);

// the six products over {c1,c2} and their bar-free catalog expressions
enum class ScProduct { C11, C22, C122, C211, C121, C212 };

std::string sc_product_name(ScProduct p);
Morphism sc_product_morphism(ScProduct p);   // the exact composition of c-letters
TernaryLabel sc_label(ScProduct p);          // the recorded Sigma3 S3 Sigma3 expression
std::string sc_cword(ScProduct p);           // underlying c-letters, e.g. "122"

struct ScRepresentation {
    std::vector<ScProduct> products;
    std::string trailing;  // unpaired final symbols, empty when none
};

// Greedy shortest-first recoding of a c-word into the product alphabet;
// composition equality with the consumed prefix is the contract.
ScRepresentation sc_representation(const CassaigneSequence& seq);

enum class CheckStatus { Excluded, UndecidedAtBound, Counterexample };

struct WordVerdict {
    std::vector<ScProduct> word;
    CheckStatus ar_status;
    CheckStatus iet_status;
};

struct DisjointnessReport {
    int max_len = 0;
    long long words_checked = 0;
    long long primitive_compatible = 0;
    std::vector<WordVerdict> counterexamples;  // empty on pass
    bool pass() const { return counterexamples.empty(); }
};

// Bounded disjointness: no primitive-compatible product word of length up
// to max_len is consistent with an Arnoux-Rauzy labeling, and none admits
// an equivalent interval-exchange-graph path from a class a primitive
// Cassaigne shift can inhabit.
DisjointnessReport disjointness_check(int max_len);

// over-approximation of the classes of primitive Cassaigne shifts
std::vector<ClassLabel> cassaigne_class_closure();

}  // namespace dendric

#endif
