#include "dendric/ternary.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dendric/sadic.hpp"

namespace dendric {

ClassLabel apply_perm(const Permutation& p, const ClassLabel& c) {
    auto act = [&](int x) { return x == 0 ? 0 : ternary_alphabet().rank(p.apply(ternary_alphabet().letter(x - 1))) + 1; };
    return {act(c.l), act(c.r)};
}

ClassLabel class_image(const ClassLabel& c, const TernaryLabel& label) {
    ClassLabel inner = apply_perm(perm(label.post), c);
    ClassLabel image;
    switch (label.kind) {
        case CoreKind::Alpha:
            image = inner;
            break;
        case CoreKind::Beta:
            if (inner.l == 1) throw ConditionViolation("beta requires l != 1 (wrapped class " + inner.str() + ")");
            image = {1, inner.r};
            break;
        case CoreKind::Gamma:
            if (inner.r == 1) throw ConditionViolation("gamma requires r != 1 (wrapped class " + inner.str() + ")");
            image = {inner.l, 1};
            break;
        case CoreKind::Delta:
            if (inner.l == 1 || inner.r == 1) {
                throw ConditionViolation("delta requires l, r != 1 (wrapped class " + inner.str() + ")");
            }
            image = {3, 1};
            break;
        case CoreKind::Zeta:
            if (inner.l == 2 || inner.r == 2) {
                throw ConditionViolation("zeta requires l, r != 2 (wrapped class " + inner.str() + ")");
            }
            image = {3, 3};
            break;
        case CoreKind::Eta:
            if (inner.l == 2 || inner.r == 1) {
                throw ConditionViolation("eta requires l != 2 and r != 1 (wrapped class " + inner.str() + ")");
            }
            image = {2, 3};
            break;
    }
    return apply_perm(perm(label.pre), image);
}

int ClassGraph::vertex_index(const ClassLabel& c) const {
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] == c) return static_cast<int>(i);
    }
    throw std::invalid_argument("class " + c.str() + " is not a vertex of " + name);
}

std::vector<ClassEdge> ClassGraph::edges_from(int v) const {
    std::vector<ClassEdge> out;
    for (const auto& e : edges) {
        if (e.from == v) out.push_back(e);
    }
    return out;
}

namespace {

const std::vector<CoreKind> kAllCores = {CoreKind::Alpha, CoreKind::Beta, CoreKind::Gamma,
                                         CoreKind::Delta, CoreKind::Zeta, CoreKind::Eta};

int core_k(CoreKind kind) { return (kind == CoreKind::Delta || kind == CoreKind::Zeta) ? kSymbolic : 0; }

// canonical representative of a symbolic label (resolves the alpha symmetry
// pi.a.pi' == (pi p132).a.(p132 pi') like decompose_ternary does)
TernaryLabel canonical_label(const TernaryLabel& l) {
    if (l.kind != CoreKind::Alpha) return l;
    const Permutation& p132 = perm(1);
    TernaryLabel other{perm_index(perm(l.pre).after(p132)), l.kind, l.k, perm_index(p132.after(perm(l.post)))};
    auto better = [](const TernaryLabel& x, const TernaryLabel& y) {
        bool xs = x.pre == x.post, ys = y.pre == y.post;
        if (xs != ys) return xs;
        if (x.pre != y.pre) return x.pre < y.pre;
        return x.post < y.post;
    };
    return better(l, other) ? l : other;
}

// image class of a symbolic label (k plays no role in class transport)
std::optional<ClassLabel> symbolic_image(const ClassLabel& c, const TernaryLabel& l) {
    try {
        TernaryLabel concrete = l;
        if (concrete.k == kSymbolic) concrete.k = 1;
        return class_image(c, concrete);
    } catch (const ConditionViolation&) {
        return std::nullopt;
    }
}

ClassGraph restrict_graph(const ClassGraph& g, const std::vector<ClassLabel>& keep, const std::string& name) {
    ClassGraph out;
    out.name = name;
    out.vertices = keep;
    for (const auto& e : g.edges) {
        const ClassLabel &from = g.vertices[static_cast<size_t>(e.from)], &to = g.vertices[static_cast<size_t>(e.to)];
        bool has_from = std::find(keep.begin(), keep.end(), from) != keep.end();
        bool has_to = std::find(keep.begin(), keep.end(), to) != keep.end();
        if (has_from && has_to) out.edges.push_back({out.vertex_index(from), out.vertex_index(to), e.label});
    }
    return out;
}

}  // namespace

ClassGraph build_g_prime() {
    ClassGraph g;
    g.name = "G'";
    g.vertices = {{0, 0}, {0, 3}, {3, 0}, {3, 2}, {3, 3}};
    for (CoreKind kind : kAllCores) {
        for (int pre = 0; pre < 6; ++pre) {
            for (int post = 0; post < 6; ++post) {
                TernaryLabel label = canonical_label({pre, kind, core_k(kind), post});
                for (const auto& target : g.vertices) {  // target carries the preimage shift
                    auto source = symbolic_image(target, label);
                    if (!source) continue;
                    auto it = std::find(g.vertices.begin(), g.vertices.end(), *source);
                    if (it == g.vertices.end()) continue;
                    ClassEdge e{g.vertex_index(*source), g.vertex_index(target), label};
                    if (std::find(g.edges.begin(), g.edges.end(), e) == g.edges.end()) g.edges.push_back(e);
                }
            }
        }
    }
    return g;
}

namespace {

// chosen representative for each sigma / sigma p213 pair of [3,3]-incoming
// edges; recorded as data since no canonical minimization criterion exists
bool halving_keeps(const TernaryLabel& l) {
    auto is = [&](int pre, CoreKind kind, int post) { return l.pre == pre && l.kind == kind && l.post == post; };
    switch (l.kind) {
        case CoreKind::Alpha:
            return is(0, CoreKind::Alpha, 0) || is(2, CoreKind::Alpha, 2) || is(5, CoreKind::Alpha, 5);
        case CoreKind::Zeta:
            return l.post == 2 || l.post == 3;  // zeta p213, zeta p231 shapes
        case CoreKind::Beta:
            // p312 b p213, p321 b p312
            return is(4, CoreKind::Beta, 2) || is(5, CoreKind::Beta, 4);
        case CoreKind::Gamma:
            // p213 g, p231 g p132
            return is(2, CoreKind::Gamma, 0) || is(3, CoreKind::Gamma, 1);
        case CoreKind::Delta:
            // p213 d, p213 d p132
            return l.pre == 2 && (l.post == 0 || l.post == 1);
        case CoreKind::Eta:
            return is(1, CoreKind::Eta, 0);  // p132 e
    }
    return false;
}

}  // namespace

ClassGraph build_g() {
    ClassGraph gp = build_g_prime();
    ClassGraph g = restrict_graph(gp, {{3, 2}, {3, 3}}, "G");

    // halve the [3,3]-incoming pairs sigma / sigma p213
    int v33 = g.vertex_index({3, 3});
    std::vector<ClassEdge> kept;
    for (const auto& e : g.edges) {
        if (e.to != v33) {
            kept.push_back(e);
            continue;
        }
        TernaryLabel partner = canonical_label(
            {e.label.pre, e.label.kind, e.label.k, perm_index(perm(e.label.post).after(perm(2)))});
        bool partner_present = std::any_of(g.edges.begin(), g.edges.end(), [&](const ClassEdge& o) {
            return o.from == e.from && o.to == e.to && o.label == partner;
        });
        if (!partner_present) throw std::logic_error("unpaired [3,3]-incoming edge " + label_expr(e.label));
        bool keep_this = halving_keeps(e.label);
        bool keep_partner = halving_keeps(partner);
        if (keep_this == keep_partner) {
            throw std::logic_error("halving data must keep exactly one of " + label_expr(e.label) + " / " +
                                   label_expr(partner));
        }
        if (keep_this) kept.push_back(e);
    }
    g.edges = std::move(kept);
    return g;
}

ClassGraph build_g_iet() {
    // edges read off the induction case analysis (one per case); the
    // expansion tables in iet.cpp are derived from the same lists
    ClassGraph g;
    g.name = "Giet";
    g.vertices = {{3, 2}, {3, 3}};
    auto add = [&](const ClassLabel& from, const ClassLabel& to, int pre, CoreKind kind, int post) {
        g.edges.push_back({g.vertex_index(from), g.vertex_index(to), {pre, kind, core_k(kind), post}});
    };
    // from [3,2]: lambda1 dominant stays, eta-case stays, beta/gamma/delta cases move to [3,3]
    add({3, 2}, {3, 2}, 0, CoreKind::Alpha, 0);
    add({3, 2}, {3, 2}, 1, CoreKind::Eta, 5);    // p132 e p321
    add({3, 2}, {3, 3}, 4, CoreKind::Beta, 2);   // p312 b p213
    add({3, 2}, {3, 3}, 2, CoreKind::Gamma, 0);  // p213 g
    add({3, 2}, {3, 3}, 2, CoreKind::Delta, 0);  // p213 d^k
    // from [3,3]: everything stays
    add({3, 3}, {3, 3}, 0, CoreKind::Alpha, 0);
    add({3, 3}, {3, 3}, 2, CoreKind::Alpha, 2);  // p213 a p213
    add({3, 3}, {3, 3}, 0, CoreKind::Zeta, 2);   // z^k p213
    add({3, 3}, {3, 3}, 2, CoreKind::Zeta, 2);   // p213 z^k p213
    return g;
}

CSets c_sets(const FiniteLanguage& l, const std::string& w) {
    ExtensionGraph g = extension_graph(l, w);
    CSets out;
    for (char a : g.left) {
        if (!is_connected(remove_vertex(g, a, true))) out.minus.insert(a);
    }
    for (char b : g.right) {
        if (!is_connected(remove_vertex(g, b, false))) out.plus.insert(b);
    }
    return out;
}

ShiftClass classify_shift(const FiniteLanguage& l, int scan_max, int stable_window) {
    if (scan_max + 2 > l.horizon()) throw std::out_of_range("classification scan exceeds horizon");
    AuditReport audit = dendricity_audit(l, scan_max);
    if (!audit.pass) {
        throw std::invalid_argument("dendricity audit failed at " +
                                    (audit.non_dendric.empty() ? audit.multiplicity_failures.front() : audit.non_dendric.front()));
    }
    ShiftClass out;
    std::set<char> minus, plus;
    int last_new = 0;
    for (int n = 0; n <= scan_max; ++n) {
        for (const auto& w : l.words_of_length(n)) {
            ExtensionGraph g = extension_graph(l, w);
            if (g.left.size() < 2 || g.right.size() < 2) continue;
            CSets cs = c_sets(l, w);
            for (char a : cs.minus) {
                if (minus.insert(a).second) {
                    last_new = n;
                    out.stable_at_minus = n;
                }
            }
            for (char b : cs.plus) {
                if (plus.insert(b).second) {
                    last_new = n;
                    out.stable_at_plus = n;
                }
            }
        }
        if (minus.size() > 1 || plus.size() > 1) {
            throw std::invalid_argument("two letters found on one side; language is not dendric");
        }
        if (!minus.empty() && !plus.empty()) break;                 // nothing can change any more
        if (n - last_new >= stable_window && n >= stable_window) break;  // stabilized
    }
    auto encode = [&](const std::set<char>& s) { return s.empty() ? 0 : ternary_alphabet().rank(*s.begin()) + 1; };
    out.label = {encode(minus), encode(plus)};
    return out;
}

namespace {

// extension graph of the empty word in an image under each catalog
// morphism; these templates identify the derivation case
ExtensionGraph template_epsilon_graph(CoreKind kind) {
    ExtensionGraph g;
    auto set_edges = [&](std::initializer_list<std::pair<char, char>> edges) {
        for (auto [a, b] : edges) {
            g.edges.insert({a, b});
            g.left.insert(a);
            g.right.insert(b);
        }
    };
    switch (kind) {
        case CoreKind::Alpha: set_edges({{'1', '1'}, {'1', '2'}, {'1', '3'}, {'2', '1'}, {'3', '1'}}); break;
        case CoreKind::Beta: set_edges({{'1', '1'}, {'1', '2'}, {'1', '3'}, {'2', '1'}, {'3', '2'}}); break;
        case CoreKind::Gamma: set_edges({{'1', '1'}, {'1', '2'}, {'2', '1'}, {'2', '3'}, {'3', '1'}}); break;
        case CoreKind::Delta: set_edges({{'1', '1'}, {'1', '2'}, {'2', '3'}, {'3', '1'}, {'3', '3'}}); break;
        case CoreKind::Zeta: set_edges({{'1', '2'}, {'1', '3'}, {'2', '1'}, {'3', '1'}, {'3', '3'}}); break;
        case CoreKind::Eta: set_edges({{'1', '2'}, {'1', '3'}, {'2', '1'}, {'2', '3'}, {'3', '1'}}); break;
    }
    return g;
}

// all graph labels that equal m (symbolic k instantiated from m itself)
bool label_matches(const TernaryLabel& edge_label, const Morphism& m) {
    auto d = decompose_ternary(m);
    if (!d) return false;
    if (edge_label.matches(*d)) return true;
    if (d->kind == CoreKind::Alpha) {
        // compare against the non-canonical twin as well
        const Permutation& p132 = perm(1);
        TernaryLabel twin{perm_index(perm(d->pre).after(p132)), d->kind, d->k, perm_index(p132.after(perm(d->post)))};
        return edge_label.matches(twin);
    }
    return false;
}

}  // namespace

PathCheckResult path_check(const std::vector<Morphism>& prefix, const ClassGraph& g, size_t path_cap) {
    for (const auto& m : prefix) {
        if (!decompose_ternary(m)) {
            throw std::invalid_argument("morphism is not in Sigma3 S3 Sigma3: " + m.describe());
        }
    }
    // acceptance runs on the full vertex state set; the cap only limits the
    // witness paths kept for reporting
    std::set<int> states;
    std::vector<std::vector<int>> paths;
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        states.insert(static_cast<int>(v));
        paths.push_back({static_cast<int>(v)});
    }
    for (const auto& m : prefix) {
        std::set<int> next_states;
        for (int v : states) {
            for (const auto& e : g.edges_from(v)) {
                if (label_matches(e.label, m)) next_states.insert(e.to);
            }
        }
        std::vector<std::vector<int>> next;
        for (const auto& path : paths) {
            for (const auto& e : g.edges_from(path.back())) {
                if (!label_matches(e.label, m)) continue;
                if (next.size() >= path_cap) break;
                auto extended = path;
                extended.push_back(e.to);
                next.push_back(std::move(extended));
            }
        }
        states = std::move(next_states);
        paths = std::move(next);
        if (states.empty()) break;
    }
    PathCheckResult r;
    r.accepted = !states.empty();
    for (const auto& path : paths) {
        if (static_cast<int>(path.size()) != static_cast<int>(prefix.size()) + 1) continue;
        std::vector<ClassLabel> labels;
        for (int v : path) labels.push_back(g.vertices[static_cast<size_t>(v)]);
        r.vertex_paths.push_back(std::move(labels));
    }
    return r;
}

std::optional<EquivalenceWitness> equivalent_path(const std::vector<Morphism>& prefix, const ClassGraph& g,
                                                  const StateConstraint& constraint) {
    for (const auto& m : prefix) {
        if (!decompose_ternary(m)) {
            throw std::invalid_argument("morphism is not in Sigma3 S3 Sigma3: " + m.describe());
        }
    }
    struct State {
        int vertex, xi;
        std::vector<int> vs, xis;
        std::vector<TernaryLabel> labels;
    };
    std::vector<State> states;
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        for (int xi = 0; xi < 6; ++xi) {
            if (constraint && !constraint(static_cast<int>(v), xi)) continue;
            states.push_back({static_cast<int>(v), xi, {static_cast<int>(v)}, {xi}, {}});
        }
    }
    for (const auto& m : prefix) {
        std::vector<State> next;
        std::set<std::pair<int, int>> seen;
        for (const auto& st : states) {
            for (int xi2 = 0; xi2 < 6; ++xi2) {
                // tau = xi^-1 . m . xi2
                Morphism tau = compose(compose(perm(st.xi).inverse().to_morphism(), m), perm(xi2).to_morphism());
                for (const auto& e : g.edges_from(st.vertex)) {
                    if (!label_matches(e.label, tau)) continue;
                    if (constraint && !constraint(e.to, xi2)) continue;
                    if (!seen.insert({e.to, xi2}).second) continue;
                    State ns = st;
                    ns.vertex = e.to;
                    ns.xi = xi2;
                    ns.vs.push_back(e.to);
                    ns.xis.push_back(xi2);
                    TernaryLabel lab = e.label;
                    if (lab.k == kSymbolic) lab.k = decompose_ternary(tau)->k;
                    ns.labels.push_back(lab);
                    next.push_back(std::move(ns));
                }
            }
        }
        states = std::move(next);
        if (states.empty()) return std::nullopt;
    }
    EquivalenceWitness w;
    w.vertices = states.front().vs;
    w.permutations = states.front().xis;
    w.labels = states.front().labels;
    return w;
}

bool equivalent_path_exists(const std::vector<Morphism>& prefix, const ClassGraph& g, const StateConstraint& constraint) {
    return equivalent_path(prefix, g, constraint).has_value();
}

bool sequences_equivalent(const std::vector<Morphism>& sigma, const std::vector<Morphism>& tau) {
    if (sigma.size() != tau.size()) return false;
    std::set<int> xis{0};  // xi_1 = id
    for (size_t n = 0; n < sigma.size(); ++n) {
        std::set<int> next;
        for (int xi : xis) {
            for (int xi2 = 0; xi2 < 6; ++xi2) {
                Morphism candidate = compose(compose(perm(xi).inverse().to_morphism(), sigma[n]), perm(xi2).to_morphism());
                if (candidate == tau[n]) next.insert(xi2);
            }
        }
        if (next.empty()) return false;
        xis = std::move(next);
    }
    return true;
}

DeriveStep ternary_derive_step(const FiniteLanguage& l) {
    if (l.alphabet() != ternary_alphabet()) throw std::invalid_argument("ternary derivation needs alphabet {1,2,3}");
    ExtensionGraph eps = extension_graph(l, "");

    // locate the template case: one simultaneous relabeling onto a catalog
    // epsilon-graph identifies the designated left special letter
    std::optional<char> designated;
    for (CoreKind kind : kAllCores) {
        for (int pi = 0; pi < 6 && !designated; ++pi) {
            const Permutation& rho = perm(pi);
            ExtensionGraph relabeled;
            for (const auto& [a, b] : eps.edges) {
                relabeled.edges.insert({rho.apply(a), rho.apply(b)});
                relabeled.left.insert(rho.apply(a));
                relabeled.right.insert(rho.apply(b));
            }
            if (relabeled == template_epsilon_graph(kind)) designated = rho.inverse().apply('1');
        }
        if (designated) break;
    }
    if (!designated) throw std::invalid_argument("extension graph of the empty word matches no catalog case");

    DerivedLanguage d = derived_language(l, *designated);
    for (int relabel = 0; relabel < 6; ++relabel) {
        Morphism candidate = compose(d.coding, perm(relabel).to_morphism());
        auto label = decompose_ternary(candidate);
        if (!label) continue;
        const std::string& from = ternary_alphabet().symbols();
        std::string to;
        for (char c : from) to += perm(relabel).inverse().apply(c);
        return DeriveStep{*label, candidate, d.language.relabeled(from, to, ternary_alphabet()), *designated};
    }
    throw std::invalid_argument("coding morphism is not expressible in Sigma3 S3 Sigma3");
}

}  // namespace dendric
