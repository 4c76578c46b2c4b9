#ifndef DENDRIC_CATALOG_HPP
#define DENDRIC_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "dendric/morphisms.hpp"

namespace dendric {

const Alphabet& ternary_alphabet();  // {1,2,3}

// the S3 family
Morphism cat_alpha();
Morphism cat_beta();
Morphism cat_gamma();
Morphism cat_delta(int k);
Morphism cat_zeta(int k);
Morphism cat_eta();

// Arnoux-Rauzy morphisms on an arbitrary alphabet
Morphism ar_alpha(const Alphabet& a, char letter);      // letter -> letter, b -> letter b
Morphism ar_alpha_bar(const Alphabet& a, char letter);  // letter -> letter, b -> b letter

// Cassaigne generators
Morphism cat_c1();
Morphism cat_c2();

// the six ternary permutations in canonical order 123,132,213,231,312,321
const std::vector<Permutation>& ternary_permutations();
const Permutation& perm(int index);
int perm_index(const Permutation& p);
Permutation perm_by_name(const std::string& images);  // "213" etc.

// Expression grammar: atoms a,b,g,e,d<k>,z<k>,p<abc>,ar<x>,arb<x>,c1,c2
// joined by '.', leftmost applied last.
Morphism parse_morphism_expr(const std::string& expr, int k_cap = 64);

// JSON morphism format: {"1":"1","2":"12",...} with optional "domain"/"codomain"
Morphism morphism_from_json(const std::string& text);
std::string morphism_to_json(const Morphism& m);

enum class CoreKind { Alpha, Beta, Gamma, Delta, Zeta, Eta };

std::string core_name(CoreKind k);
Morphism core_morphism(CoreKind kind, int k);

// A morphism in Sigma3 S3 Sigma3 written pi . core . pi'.  k is the
// parameter for Delta/Zeta cores; kSymbolic marks an edge family.
constexpr int kSymbolic = -1;

struct TernaryLabel {
    int pre = 0;   // permutation index of the outer (last applied) pi
    CoreKind kind = CoreKind::Alpha;
    int k = 0;     // 0 for non-parametric cores, >= 1 concrete, kSymbolic for families
    int post = 0;  // permutation index of the inner pi'

    bool operator==(const TernaryLabel& o) const = default;
    bool matches(const TernaryLabel& concrete) const;  // symbolic k matches any k >= 1
};

std::optional<TernaryLabel> decompose_ternary(const Morphism& m);
Morphism label_morphism(const TernaryLabel& l);  // requires concrete k
std::string label_expr(const TernaryLabel& l);   // grammar string, symbolic k printed as d<k>/z<k>

}  // namespace dendric

#endif
