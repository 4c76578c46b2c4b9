#ifndef DENDRIC_IET_HPP
#define DENDRIC_IET_HPP

#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "dendric/catalog.hpp"
#include "dendric/rational.hpp"
#include "dendric/words.hpp"

namespace dendric {

// Interval exchange with exact rational data.  top[i] / bottom[i] hold the
// 0-based cell label at position i (left to right), so the pair 123/231 is
// top = {0,1,2}, bottom = {1,2,0}.
struct Iet {
    Rational lo, hi;
    std::vector<Rational> lambda;
    std::vector<int> top, bottom;

    int size() const { return static_cast<int>(lambda.size()); }
    std::string pair_str() const;  // "123/231"
};

Iet make_iet(std::vector<Rational> lambda, const std::string& pair, Rational lo = Rational(0));

std::vector<Rational> top_breakpoints(const Iet& t);     // mu_0 .. mu_d
std::vector<Rational> bottom_breakpoints(const Iet& t);  // nu_0 .. nu_d

Rational iet_apply(const Iet& t, const Rational& x);
Iet normalize(const Iet& t);
Iet reflect(const Iet& t);
bool indecomposable(const std::vector<int>& top, const std::vector<int>& bottom);

// maximal intervals of constant translation: (start, end, shift)
std::vector<std::tuple<Rational, Rational, Rational>> piecewise_form(const Iet& t);
bool same_map(const Iet& a, const Iet& b);

// all words of length <= n whose cylinder is non-empty
FiniteLanguage coding_factors(const Iet& t, int n);

bool is_regular_up_to(const Iet& t, int steps);

enum class Side { L, R };

struct RauzyStep {
    Iet next;
    Morphism sigma;
};
struct Connection {};
using RauzyResult = std::variant<RauzyStep, Connection>;

// One Rauzy induction of a 3-IET whose pair lies in the induction tables.
RauzyResult rauzy_induction(const Iet& t, Side side);

// exact first-return map on [lo, hi) by orbit refinement
Iet induced_on_interval(const Iet& t, const Rational& lo, const Rational& hi, int step_cap = 4096);

struct ExpansionStep {
    TernaryLabel label;
    Morphism sigma;
};

struct Expansion {
    std::vector<ExpansionStep> steps;
    std::vector<int> class_path;        // 0 = [3,2], 1 = [3,3]; length steps+1
    std::optional<int> connection_at;   // 1-based step where an equality stopped the expansion
};

// Case-split expansion of a 3-IET into a directive prefix labeling a path
// in the interval exchange graph.
Expansion iet_expansion(const Iet& t, int depth);

// normalized incidence product applied to (1,1,1)
std::vector<Rational> frequencies(const std::vector<Morphism>& prefix, int n);

}  // namespace dendric

#endif
