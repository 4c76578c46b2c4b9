#include "dendric/iet.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dendric {

namespace {

std::vector<int> parse_order(const std::string& s) {
    std::vector<int> order;
    for (char c : s) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad permutation string: " + s);
        order.push_back(c - '1');
    }
    std::vector<int> seen(order.size(), 0);
    for (int v : order) {
        if (v < 0 || v >= static_cast<int>(order.size()) || seen[static_cast<size_t>(v)]++) {
            throw std::invalid_argument("bad permutation string: " + s);
        }
    }
    return order;
}

std::string order_str(const std::vector<int>& order) {
    std::string s;
    for (int v : order) s += static_cast<char>('1' + v);
    return s;
}

// position of a cell in an order
int position(const std::vector<int>& order, int cell) {
    for (size_t i = 0; i < order.size(); ++i) {
        if (order[i] == cell) return static_cast<int>(i);
    }
    throw std::logic_error("cell missing from order");
}

Rational cell_start(const Iet& t, const std::vector<int>& order, int cell) {
    Rational s = t.lo;
    for (int i = 0; i < position(order, cell); ++i) s = s + t.lambda[static_cast<size_t>(order[static_cast<size_t>(i)])];
    return s;
}

}  // namespace

std::string Iet::pair_str() const { return order_str(top) + "/" + order_str(bottom); }

Iet make_iet(std::vector<Rational> lambda, const std::string& pair, Rational lo) {
    auto slash = pair.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("pair must look like 123/231");
    Iet t;
    t.top = parse_order(pair.substr(0, slash));
    t.bottom = parse_order(pair.substr(slash + 1));
    if (t.top.size() != lambda.size() || t.bottom.size() != lambda.size()) {
        throw std::invalid_argument("length vector and permutations disagree on d");
    }
    for (const auto& l : lambda) {
        if (!(l > Rational(0))) throw std::invalid_argument("interval lengths must be positive");
    }
    t.lambda = std::move(lambda);
    t.lo = std::move(lo);
    t.hi = t.lo;
    for (const auto& l : t.lambda) t.hi = t.hi + l;
    return t;
}

std::vector<Rational> top_breakpoints(const Iet& t) {
    std::vector<Rational> mu{t.lo};
    for (int cell : t.top) mu.push_back(mu.back() + t.lambda[static_cast<size_t>(cell)]);
    return mu;
}

std::vector<Rational> bottom_breakpoints(const Iet& t) {
    std::vector<Rational> nu{t.lo};
    for (int cell : t.bottom) nu.push_back(nu.back() + t.lambda[static_cast<size_t>(cell)]);
    return nu;
}

Rational iet_apply(const Iet& t, const Rational& x) {
    if (x < t.lo || !(x < t.hi)) throw std::out_of_range("point outside the support");
    Rational start = t.lo;
    for (int cell : t.top) {
        Rational end = start + t.lambda[static_cast<size_t>(cell)];
        if (x < end) return x - start + cell_start(t, t.bottom, cell);
        start = end;
    }
    throw std::logic_error("point fell between cells");
}

Iet normalize(const Iet& t) {
    Rational span = t.hi - t.lo;
    Iet r = t;
    r.lo = Rational(0);
    r.hi = Rational(1);
    for (auto& l : r.lambda) l = l / span;
    return r;
}

Iet reflect(const Iet& t) {
    Iet r = t;
    std::reverse(r.top.begin(), r.top.end());
    std::reverse(r.bottom.begin(), r.bottom.end());
    return r;
}

bool indecomposable(const std::vector<int>& top, const std::vector<int>& bottom) {
    for (size_t k = 1; k < top.size(); ++k) {
        std::vector<int> a(top.begin(), top.begin() + static_cast<long>(k));
        std::vector<int> b(bottom.begin(), bottom.begin() + static_cast<long>(k));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a == b) return false;
    }
    return true;
}

std::vector<std::tuple<Rational, Rational, Rational>> piecewise_form(const Iet& t) {
    std::vector<std::tuple<Rational, Rational, Rational>> pieces;
    Rational start = t.lo;
    for (int cell : t.top) {
        Rational end = start + t.lambda[static_cast<size_t>(cell)];
        pieces.emplace_back(start, end, cell_start(t, t.bottom, cell) - start);
        start = end;
    }
    // merge neighbours with equal shift
    std::vector<std::tuple<Rational, Rational, Rational>> merged;
    for (auto& p : pieces) {
        if (!merged.empty() && std::get<2>(merged.back()) == std::get<2>(p) && std::get<1>(merged.back()) == std::get<0>(p)) {
            std::get<1>(merged.back()) = std::get<1>(p);
        } else {
            merged.push_back(p);
        }
    }
    return merged;
}

bool same_map(const Iet& a, const Iet& b) { return a.lo == b.lo && a.hi == b.hi && piecewise_form(a) == piecewise_form(b); }

namespace {

using IntervalSet = std::vector<std::pair<Rational, Rational>>;  // sorted, disjoint, half-open

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    IntervalSet out;
    for (const auto& [a1, a2] : a) {
        for (const auto& [b1, b2] : b) {
            Rational lo = std::max(a1, b1), hi = std::min(a2, b2);
            if (lo < hi) out.emplace_back(lo, hi);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

IntervalSet preimage(const Iet& t, const IntervalSet& s) {
    IntervalSet out;
    Rational start = t.lo;
    for (int cell : t.top) {
        Rational end = start + t.lambda[static_cast<size_t>(cell)];
        Rational shift = cell_start(t, t.bottom, cell) - start;  // T = x + shift on this cell
        for (const auto& [a, b] : s) {
            Rational lo = std::max(start, a - shift), hi = std::min(end, b - shift);
            if (lo < hi) out.emplace_back(lo, hi);
        }
        start = end;
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

}  // namespace

FiniteLanguage coding_factors(const Iet& t, int n) {
    if (n < 1) throw std::invalid_argument("coding horizon must be >= 1");
    if (t.size() > 9) throw std::invalid_argument("alphabets beyond 9 cells are not supported");
    std::string symbols;
    for (int i = 0; i < t.size(); ++i) symbols += static_cast<char>('1' + i);
    Alphabet alpha(symbols);

    std::map<std::string, IntervalSet> level;
    Rational start = t.lo;
    for (int i = 0; i < t.size(); ++i) {
        int cell = t.top[static_cast<size_t>(i)];
        Rational end = start + t.lambda[static_cast<size_t>(cell)];
        level[std::string(1, static_cast<char>('1' + cell))] = {{start, end}};
        start = end;
    }
    for (int len = 2; len <= n; ++len) {
        std::map<std::string, IntervalSet> next;
        for (const auto& [w, set] : level) {
            IntervalSet pre = preimage(t, set);
            Rational cs = t.lo;
            for (int i = 0; i < t.size(); ++i) {
                int cell = t.top[static_cast<size_t>(i)];
                Rational ce = cs + t.lambda[static_cast<size_t>(cell)];
                IntervalSet cut = intersect(pre, {{cs, ce}});
                if (!cut.empty()) next[std::string(1, static_cast<char>('1' + cell)) + w] = std::move(cut);
                cs = ce;
            }
        }
        level = std::move(next);
        if (level.empty()) break;
    }
    std::vector<std::string> gens;
    for (const auto& [w, set] : level) gens.push_back(w);
    return FiniteLanguage::from_words(alpha, n, std::move(gens));
}

bool is_regular_up_to(const Iet& t, int steps) {
    auto mu = top_breakpoints(t);
    std::vector<Rational> points(mu.begin() + 1, mu.end() - 1);
    std::map<std::string, std::pair<size_t, int>> seen;  // value -> (orbit, step)
    std::vector<Rational> current = points;
    for (size_t i = 0; i < points.size(); ++i) seen[points[i].str()] = {i, 0};
    for (int k = 1; k <= steps; ++k) {
        for (size_t i = 0; i < current.size(); ++i) {
            current[i] = iet_apply(t, current[i]);
            auto [it, fresh] = seen.insert({current[i].str(), {i, k}});
            if (!fresh) return false;  // hit another discontinuity orbit (or a mu_j at step 0)
        }
    }
    return true;
}

namespace {

struct RauzyEdgeRow {
    const char* pair;
    bool first_smaller;  // condition lambda_{pi0 end} < lambda_{pi1 end}
    const char* next_pair;
    const char* img1;
    const char* img2;
    const char* img3;
};

// Induction tables: comparing the outermost top and bottom cells.
const RauzyEdgeRow kLeftTable[] = {
    {"123/231", true, "123/231", "21", "2", "3"},
    {"123/231", false, "132/231", "1", "3", "21"},
    {"132/231", true, "321/132", "2", "21", "3"},
    {"132/231", false, "123/231", "1", "3", "21"},
    {"321/132", true, "132/231", "2", "1", "13"},
    {"321/132", false, "321/132", "13", "2", "3"},
};
const RauzyEdgeRow kRightTable[] = {
    {"123/231", false, "123/231", "13", "2", "3"},
    {"123/231", true, "132/231", "1", "2", "13"},
    {"132/231", false, "321/132", "2", "3", "12"},
    {"132/231", true, "123/231", "1", "12", "3"},
    {"321/132", false, "132/231", "3", "1", "21"},
    {"321/132", true, "321/132", "21", "2", "3"},
};

std::vector<Rational> pull_back_lengths(const Morphism& sigma, const std::vector<Rational>& lambda) {
    // solve M x = lambda exactly (3x3, integer M with det +-1)
    IncidenceMatrix mi = sigma.incidence_matrix();
    const auto& m = mi.m;
    long long det = mi.det3();
    if (det == 0) throw std::logic_error("singular incidence matrix");
    auto cof = [&](int r, int c) {
        int r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
        if (r1 > r2) std::swap(r1, r2);
        if (c1 > c2) std::swap(c1, c2);
        long long minor = m[static_cast<size_t>(r1)][static_cast<size_t>(c1)] * m[static_cast<size_t>(r2)][static_cast<size_t>(c2)] -
                          m[static_cast<size_t>(r1)][static_cast<size_t>(c2)] * m[static_cast<size_t>(r2)][static_cast<size_t>(c1)];
        return ((r + c) % 2 == 0) ? minor : -minor;
    };
    std::vector<Rational> x(3, Rational(0));
    for (int i = 0; i < 3; ++i) {
        Rational acc(0);
        for (int j = 0; j < 3; ++j) acc = acc + Rational(cof(j, i)) * lambda[static_cast<size_t>(j)];  // adjugate
        x[static_cast<size_t>(i)] = acc / Rational(det);
    }
    return x;
}

}  // namespace

RauzyResult rauzy_induction(const Iet& t, Side side) {
    if (t.size() != 3) throw std::invalid_argument("the induction tables cover 3-IETs only");
    std::string pair = t.pair_str();
    int top_cell = side == Side::L ? t.top.front() : t.top.back();
    int bottom_cell = side == Side::L ? t.bottom.front() : t.bottom.back();
    const Rational& a = t.lambda[static_cast<size_t>(top_cell)];
    const Rational& b = t.lambda[static_cast<size_t>(bottom_cell)];
    if (a == b) return Connection{};
    bool first_smaller = a < b;

    const auto& table = side == Side::L ? kLeftTable : kRightTable;
    for (const auto& row : table) {
        if (pair != row.pair || first_smaller != row.first_smaller) continue;
        Morphism sigma(ternary_alphabet(), ternary_alphabet(), {row.img1, row.img2, row.img3});
        std::vector<Rational> lambda = pull_back_lengths(sigma, t.lambda);
        for (const auto& l : lambda) {
            if (!(l > Rational(0))) throw std::logic_error("induction produced a non-positive length");
        }
        Iet next = make_iet(lambda, row.next_pair, side == Side::L ? t.lo + std::min(a, b) : t.lo);
        return RauzyStep{std::move(next), std::move(sigma)};
    }
    throw std::invalid_argument("pair " + pair + " is outside the induction tables");
}

Iet induced_on_interval(const Iet& t, const Rational& lo, const Rational& hi, int step_cap) {
    if (lo < t.lo || t.hi < hi || !(lo < hi)) throw std::invalid_argument("target interval must sit inside the support");

    struct Piece {
        Rational a, b, shift;
        int steps;
        std::string itinerary;  // top-cell labels visited so far
    };
    std::vector<Piece> queue{{lo, hi, Rational(0), 0, ""}};
    std::vector<Piece> done;
    while (!queue.empty()) {
        Piece p = queue.back();
        queue.pop_back();
        if (p.steps > 0) {
            Rational ia = p.a + p.shift, ib = p.b + p.shift;
            // returned part
            Rational rlo = std::max(ia, lo), rhi = std::min(ib, hi);
            if (rlo < rhi) {
                done.push_back({rlo - p.shift, rhi - p.shift, p.shift, p.steps, p.itinerary});
                if (ia < rlo) queue.push_back({p.a, rlo - p.shift, p.shift, p.steps, p.itinerary});
                if (rhi < ib) queue.push_back({rhi - p.shift, p.b, p.shift, p.steps, p.itinerary});
                continue;
            }
        }
        if (p.steps >= step_cap) throw std::runtime_error("return-time cap exceeded on the target interval");
        // advance one application of T, splitting at cell boundaries
        Rational start = t.lo;
        for (int cell : t.top) {
            Rational end = start + t.lambda[static_cast<size_t>(cell)];
            Rational xa = std::max(p.a + p.shift, start), xb = std::min(p.b + p.shift, end);
            if (xa < xb) {
                Rational delta = cell_start(t, t.bottom, cell) - start;
                queue.push_back({xa - p.shift, xb - p.shift, p.shift + delta, p.steps + 1,
                                 p.itinerary + static_cast<char>('1' + cell)});
            }
            start = end;
        }
    }

    std::sort(done.begin(), done.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
    // cells are return-itinerary cylinders, not just constant-translation runs
    std::vector<Piece> cells;
    for (const auto& p : done) {
        if (!cells.empty() && cells.back().b == p.a && cells.back().itinerary == p.itinerary) {
            cells.back().b = p.b;
        } else {
            cells.push_back(p);
        }
    }
    Rational covered(0);
    for (const auto& c : cells) covered = covered + (c.b - c.a);
    if (covered != hi - lo || cells.front().a != lo || cells.back().b != hi) {
        throw std::runtime_error("target interval is not fully recurrent within the cap");
    }

    Iet r;
    r.lo = lo;
    r.hi = hi;
    for (size_t i = 0; i < cells.size(); ++i) {
        r.lambda.push_back(cells[i].b - cells[i].a);
        r.top.push_back(static_cast<int>(i));
    }
    std::vector<size_t> by_image(cells.size());
    for (size_t i = 0; i < cells.size(); ++i) by_image[i] = i;
    std::sort(by_image.begin(), by_image.end(),
              [&](size_t x, size_t y) { return cells[x].a + cells[x].shift < cells[y].a + cells[y].shift; });
    for (size_t i = 0; i < cells.size(); ++i) r.bottom.push_back(static_cast<int>(by_image[i]));
    return r;
}

namespace {

struct CaseOutcome {
    TernaryLabel label;
    int next_class;  // 0 = [3,2], 1 = [3,3]
};

// Prop.-style case split on exact lengths; nullopt signals a connection.
std::optional<CaseOutcome> expansion_case(int cls, const std::vector<Rational>& l, bool* connection) {
    const Rational &l1 = l[0], &l2 = l[1], &l3 = l[2];
    auto eq = [&](const Rational& x, const Rational& y) { return x == y; };
    *connection = false;
    if (cls == 0) {  // pair 123/231
        if (eq(l1, l2) || eq(l1, l3) || eq(l1, l2 + l3)) {
            *connection = true;
            return std::nullopt;
        }
        if (l2 + l3 < l1) return CaseOutcome{{0, CoreKind::Alpha, 0, 0}, 0};
        if (l2 < l1 && l3 < l1) return CaseOutcome{{1, CoreKind::Eta, 0, 5}, 0};         // p132 e p321
        if (l2 < l1 && l1 < l3) return CaseOutcome{{4, CoreKind::Beta, 0, 2}, 1};        // p312 b p213
        if (l3 < l1 && l1 < l2) return CaseOutcome{{2, CoreKind::Gamma, 0, 0}, 1};       // p213 g
        // l1 < l2, l1 < l3: k l1 < l3 < (k+1) l1
        Rational ratio = l3 / l1;
        BigInt k = ratio.num() / ratio.den();
        if (Rational(k, BigInt(1)) == ratio) {
            *connection = true;
            return std::nullopt;
        }
        int kk = static_cast<int>(k.to_double());
        return CaseOutcome{{2, CoreKind::Delta, kk, 0}, 1};  // p213 d^k
    }
    // pair 132/231
    if (eq(l1, l2) || eq(l1, l2 + l3) || eq(l2, l1 + l3)) {
        *connection = true;
        return std::nullopt;
    }
    if (l2 + l3 < l1) return CaseOutcome{{0, CoreKind::Alpha, 0, 0}, 1};
    if (l1 + l3 < l2) return CaseOutcome{{2, CoreKind::Alpha, 0, 2}, 1};  // p213 a p213
    Rational diff = l2 < l1 ? l1 - l2 : l2 - l1;
    Rational ratio = l3 / diff;
    BigInt k = ratio.num() / ratio.den();
    if (Rational(k, BigInt(1)) == ratio) {
        *connection = true;
        return std::nullopt;
    }
    int kk = static_cast<int>(k.to_double());
    if (l2 < l1) return CaseOutcome{{0, CoreKind::Zeta, kk, 2}, 1};  // z^k p213
    return CaseOutcome{{2, CoreKind::Zeta, kk, 2}, 1};               // p213 z^k p213
}

}  // namespace

Expansion iet_expansion(const Iet& t, int depth) {
    if (t.size() != 3) throw std::invalid_argument("expansion covers 3-IETs only");
    Iet current = t;
    std::string pair = current.pair_str();
    if (pair == "321/132") {
        current = reflect(current);  // coding-invariant change of pair
        pair = current.pair_str();
    }
    int cls;
    if (pair == "123/231") {
        cls = 0;
    } else if (pair == "132/231") {
        cls = 1;
    } else {
        throw std::invalid_argument("pair " + pair + " is not an expansion class form");
    }

    Expansion out;
    out.class_path.push_back(cls);
    std::vector<Rational> lambda = current.lambda;
    for (int step = 1; step <= depth; ++step) {
        bool connection = false;
        auto c = expansion_case(cls, lambda, &connection);
        if (connection) {
            out.connection_at = step;
            break;
        }
        Morphism sigma = label_morphism(c->label);
        lambda = pull_back_lengths(sigma, lambda);
        for (const auto& l : lambda) {
            if (!(l > Rational(0))) throw std::logic_error("expansion produced a non-positive length");
        }
        out.steps.push_back({c->label, std::move(sigma)});
        cls = c->next_class;
        out.class_path.push_back(cls);
    }
    return out;
}

std::vector<Rational> frequencies(const std::vector<Morphism>& prefix, int n) {
    if (n > static_cast<int>(prefix.size())) throw std::invalid_argument("prefix shorter than requested depth");
    std::vector<BigInt> v{BigInt(1), BigInt(1), BigInt(1)};
    for (int i = n; i-- > 0;) {
        IncidenceMatrix m = prefix[static_cast<size_t>(i)].incidence_matrix();
        std::vector<BigInt> next(3, BigInt(0));
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                next[static_cast<size_t>(r)] =
                    next[static_cast<size_t>(r)] + BigInt(m.m[static_cast<size_t>(r)][static_cast<size_t>(c)]) * v[static_cast<size_t>(c)];
            }
        }
        v = std::move(next);
    }
    BigInt total = v[0] + v[1] + v[2];
    return {Rational(v[0], total), Rational(v[1], total), Rational(v[2], total)};
}

}  // namespace dendric
