#include "lexidim/survey.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "lexidim/enumerate.hpp"
#include "lexidim/error.hpp"
#include "lexidim/io.hpp"
#include "lexidim/lex_formula.hpp"
#include "lexidim/twins.hpp"

namespace lexidim::survey {

namespace {

struct CheckName {
    Check check;
    std::string_view name;
    std::string_view alias;
    bool pair;
};

constexpr CheckName kNames[] = {
    {Check::complement_invariance, "complement-invariance", "prop2.2", false},
    {Check::twin_identity, "twin-identity", "twin-count", false},
    {Check::twin_equivalence, "twin-equivalence", "twin-relation", false},
    {Check::metric_le_adjacency, "metric-le-adjacency", "prop2.1", false},
    {Check::diameter_two, "diameter-two", "diam2", false},
    {Check::twin_swap, "twin-swap", "obs1.1", false},
    {Check::universal_vertex, "universal-vertex", "lemma2.3", false},
    {Check::join_bounds, "join-bounds", "prop2.4", false},
    {Check::extremes, "extremes", "prop2.3", false},
    {Check::witness_minimality, "witness-minimality", "minimality", false},
    {Check::lex_formula, "lex-formula", "thm3", true},
    {Check::lex_witness, "lex-witness", "witness", true},
    {Check::row_projection, "row-projection", "lemma3.1", true},
    {Check::lex_distance, "lex-distance", "distance", true},
    {Check::complement_symmetry, "complement-symmetry", "complement", true},
    {Check::twin_free_collapse, "twin-free-collapse", "cor3.6", true},
};

CheckOutcome verdict(Check check, bool ok, std::string detail = {}) {
    return {check, ok ? Status::pass : Status::fail, std::move(detail)};
}

CheckOutcome skip(Check check, std::string detail) { return {check, Status::skipped, std::move(detail)}; }

bool is_complete(const Graph& g) { return g.edge_count() == g.order() * (g.order() - 1) / 2; }

// Calls fn(mask) for every nonempty subset of the vertex set.
template <typename Fn>
void for_each_subset(std::size_t n, Fn&& fn) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < limit; ++mask) fn(mask);
}

std::vector<RepKind> applicable_kinds(const Graph& g) {
    if (g.connected()) return {RepKind::metric, RepKind::adjacency};
    return {RepKind::adjacency};
}

CheckOutcome check_twin_identity(const Graph& g) {
    const TwinPartition t = twin_partition(g);
    const bool identity = t.iota + t.a + t.b == g.order() + t.iota_n + t.iota_k;
    return verdict(Check::twin_identity, identity,
                   "iota=" + std::to_string(t.iota) + " a=" + std::to_string(t.a) + " b=" + std::to_string(t.b) +
                       " iota_K=" + std::to_string(t.iota_k) + " iota_N=" + std::to_string(t.iota_n));
}

CheckOutcome check_twin_equivalence(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<char> twin(n * n, 0);
    for (Vertex u = 0; u < n; ++u) {
        twin[u * n + u] = 1;
        for (Vertex v = u + 1; v < n; ++v) twin[u * n + v] = twin[v * n + u] = are_twins(g, u, v) ? 1 : 0;
    }
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (!twin[u * n + v]) continue;
            for (Vertex w = 0; w < n; ++w) {
                if (twin[v * n + w] && !twin[u * n + w]) {
                    return verdict(Check::twin_equivalence, false,
                                   "not transitive at " + std::to_string(u) + "," + std::to_string(v) + "," +
                                       std::to_string(w));
                }
            }
        }
    }
    return verdict(Check::twin_equivalence, true);
}

CheckOutcome check_twin_swap(const Graph& g) {
    if (g.order() > kSubsetWalkOrder) return skip(Check::twin_swap, "order above subset walk limit");
    const TwinPartition t = twin_partition(g);
    std::vector<std::pair<Vertex, Vertex>> twin_pairs;
    for (const VertexSet& cls : t.classes) {
        for (Vertex u : cls) {
            for (Vertex v : cls) {
                if (u != v) twin_pairs.emplace_back(u, v);
            }
        }
    }
    std::string failure;
    for (RepKind kind : applicable_kinds(g)) {
        for_each_subset(g.order(), [&](std::uint64_t mask) {
            if (!failure.empty()) return;
            const VertexSet w = VertexSet::from_mask(mask);
            if (!is_resolving(g, w, kind)) return;
            for (const auto& [u, v] : twin_pairs) {
                if (!w.contains(u) && !w.contains(v)) {
                    failure = std::string(to_string(kind)) + " set " + w.to_string() + " misses twins " +
                              std::to_string(u) + "," + std::to_string(v);
                    return;
                }
                if (w.contains(u) && !w.contains(v) && !is_resolving(g, w.without(u).with(v), kind)) {
                    failure = std::string(to_string(kind)) + " swap " + std::to_string(u) + "->" +
                              std::to_string(v) + " breaks " + w.to_string();
                    return;
                }
            }
        });
    }
    return verdict(Check::twin_swap, failure.empty(), failure);
}

CheckOutcome check_witness_minimality(const Graph& g, const SearchCaps& caps) {
    if (g.order() > kSubsetWalkOrder) return skip(Check::witness_minimality, "order above subset walk limit");
    std::string failure;
    for (RepKind kind : applicable_kinds(g)) {
        const DimensionResult d = dimension(g, kind, false, caps);
        if (d.witness.size() != d.value || !is_resolving(g, d.witness, kind)) {
            failure = std::string(to_string(kind)) + " witness " + d.witness.to_string() + " does not resolve";
            break;
        }
        for_each_subset(g.order(), [&](std::uint64_t mask) {
            if (!failure.empty() || static_cast<std::size_t>(std::popcount(mask)) != d.value - 1) return;
            const VertexSet w = VertexSet::from_mask(mask);
            if (is_resolving(g, w, kind)) {
                failure = std::string(to_string(kind)) + " smaller set " + w.to_string() + " resolves";
            }
        });
        if (!failure.empty()) break;
    }
    return verdict(Check::witness_minimality, failure.empty(), failure);
}

CheckOutcome check_universal_vertex(const Graph& g, const SearchCaps& caps) {
    std::vector<Vertex> universal;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) + 1 == g.order()) universal.push_back(v);
    }
    if (universal.empty()) return skip(Check::universal_vertex, "no universal vertex");
    const std::vector<VertexSet> bases = enumerate_bases(g, RepKind::metric, caps);
    for (Vertex u : universal) {
        const bool avoided = std::any_of(bases.begin(), bases.end(), [u](const VertexSet& b) { return !b.contains(u); });
        if (!avoided) return verdict(Check::universal_vertex, false, "every basis contains " + std::to_string(u));
    }
    return verdict(Check::universal_vertex, true);
}

CheckOutcome check_join_bounds(const Graph& g, const SearchCaps& caps) {
    const std::size_t joined = dimension(join(g, family::complete(1)), RepKind::metric, false, caps).value;
    const std::vector<VertexSet> bases = enumerate_adjacency_bases(g, caps);
    const std::size_t beta2 = bases.front().size();
    const bool bounds = joined <= beta2 + 1 && beta2 <= joined;
    const bool some_basis_free = std::any_of(bases.begin(), bases.end(), [&](const VertexSet& b) {
        return !profile_basis(g, b).has_all_one;
    });
    const bool equality_rule = (beta2 == joined) == some_basis_free;
    return verdict(Check::join_bounds, bounds && equality_rule,
                   "beta(g+K1)=" + std::to_string(joined) + " beta2=" + std::to_string(beta2) +
                       (some_basis_free ? " basis-without-all-1" : " every-basis-has-all-1"));
}

CheckOutcome check_extremes(const Graph& g, const SearchCaps& caps) {
    const std::size_t beta2 = dimension(g, RepKind::adjacency, false, caps).value;
    const bool low_rule = (beta2 == 1) == is_small_path_or_complement(g);
    const bool high_rule = (beta2 + 1 == g.order()) == (is_complete(g) || g.edge_count() == 0);
    return verdict(Check::extremes, low_rule && high_rule, "beta2=" + std::to_string(beta2));
}

CheckOutcome run_graph_check(const Graph& g, Check check, const SearchCaps& caps) {
    const bool small = g.order() < 2;
    switch (check) {
        case Check::complement_invariance: {
            if (small) return skip(check, "order 1");
            const std::size_t a = dimension(g, RepKind::adjacency, false, caps).value;
            const std::size_t b = dimension(complement(g), RepKind::adjacency, false, caps).value;
            return verdict(check, a == b, "beta2=" + std::to_string(a) + " complement=" + std::to_string(b));
        }
        case Check::twin_identity: return check_twin_identity(g);
        case Check::twin_equivalence: return check_twin_equivalence(g);
        case Check::metric_le_adjacency: {
            if (small || !g.connected()) return skip(check, "needs a connected graph of order >= 2");
            const std::size_t b = dimension(g, RepKind::metric, false, caps).value;
            const std::size_t b2 = dimension(g, RepKind::adjacency, false, caps).value;
            return verdict(check, b <= b2, "beta=" + std::to_string(b) + " beta2=" + std::to_string(b2));
        }
        case Check::diameter_two: {
            if (small || !g.connected() || g.distances().max_finite() != 2) return skip(check, "diameter is not 2");
            const std::size_t b = dimension(g, RepKind::metric, false, caps).value;
            const std::size_t b2 = dimension(g, RepKind::adjacency, false, caps).value;
            return verdict(check, b == b2, "beta=" + std::to_string(b) + " beta2=" + std::to_string(b2));
        }
        case Check::twin_swap:
            if (small) return skip(check, "order 1");
            return check_twin_swap(g);
        case Check::universal_vertex:
            if (small || !g.connected()) return skip(check, "needs a connected graph of order >= 2");
            return check_universal_vertex(g, caps);
        case Check::join_bounds:
            if (small) return skip(check, "order 1");
            return check_join_bounds(g, caps);
        case Check::extremes:
            if (small) return skip(check, "order 1");
            return check_extremes(g, caps);
        case Check::witness_minimality:
            if (small) return skip(check, "order 1");
            return check_witness_minimality(g, caps);
        default: return skip(check, "pair check");
    }
}

// Lazily shared work for the checks of one (G, H) pair.
class PairContext {
public:
    PairContext(const Graph& g, const Graph& h, const SearchCaps& caps) : g_(g), h_(h), caps_(caps) {}

    const LexReport& report() {
        if (!report_) report_ = lex_dimension(g_, h_, true, caps_);
        return *report_;
    }
    const Graph& product() {
        if (!product_) product_ = lex_product(g_, h_);
        return *product_;
    }
    const std::vector<VertexSet>& product_bases() {
        if (!bases_) bases_ = enumerate_bases(product(), RepKind::metric, caps_);
        return *bases_;
    }

    const Graph& g() const { return g_; }
    const Graph& h() const { return h_; }
    const SearchCaps& caps() const { return caps_; }

private:
    const Graph& g_;
    const Graph& h_;
    SearchCaps caps_;
    std::optional<LexReport> report_;
    std::optional<Graph> product_;
    std::optional<std::vector<VertexSet>> bases_;
};

CheckOutcome check_row_projection(PairContext& ctx) {
    const std::size_t n = ctx.g().order();
    const std::size_t m = ctx.h().order();
    const std::vector<VertexSet>& bases = ctx.product_bases();
    for (const VertexSet& basis : bases) {
        for (Vertex i = 0; i < n; ++i) {
            const VertexSet projection = project_onto_h(basis, i, m);
            // A single vertex is resolved by any set, including the empty one.
            if (m >= 2 && !is_resolving(ctx.h(), projection, RepKind::adjacency)) {
                return verdict(Check::row_projection, false,
                               "basis " + basis.to_string() + " row " + std::to_string(i) + " projects to " +
                                   projection.to_string());
            }
        }
    }
    const std::size_t beta = bases.front().size();
    if (m >= 2) {
        const std::size_t beta2 = dimension(ctx.h(), RepKind::adjacency, false, ctx.caps()).value;
        if (beta < n * beta2) {
            return verdict(Check::row_projection, false,
                           "beta(G[H])=" + std::to_string(beta) + " < n*beta2=" + std::to_string(n * beta2));
        }
    }
    return verdict(Check::row_projection, true, std::to_string(bases.size()) + " bases");
}

CheckOutcome check_lex_distance(PairContext& ctx) {
    const Graph& g = ctx.g();
    const Graph& h = ctx.h();
    const Graph& product = ctx.product();
    const std::size_t m = h.order();
    for (Vertex x = 0; x < product.order(); ++x) {
        for (Vertex y = 0; y < product.order(); ++y) {
            const Vertex i = x / m, j = x % m, r = y / m, s = y % m;
            const std::uint32_t expected = i != r ? g.distance(i, r) : adjacency_code(h, j, s);
            if (product.distance(x, y) != expected) {
                return verdict(Check::lex_distance, false,
                               "pair " + std::to_string(x) + "," + std::to_string(y) + " BFS " +
                                   std::to_string(product.distance(x, y)) + " rule " + std::to_string(expected));
            }
        }
    }
    return verdict(Check::lex_distance, true);
}

LexCase mirrored(LexCase c) {
    switch (c) {
        case LexCase::all_one_forced: return LexCase::all_two_forced;
        case LexCase::all_two_forced: return LexCase::all_one_forced;
        default: return c;
    }
}

CheckOutcome check_complement_symmetry(PairContext& ctx) {
    const HClassification& cls = *ctx.report().classification;
    const HClassification other = classify_h(complement(ctx.h()), ctx.caps());
    std::vector<VertexSet> bases, other_bases;
    for (const auto& p : cls.profiles) bases.push_back(p.basis);
    for (const auto& p : other.profiles) other_bases.push_back(p.basis);
    if (bases != other_bases) return verdict(Check::complement_symmetry, false, "basis lists differ");
    if (other.lex_case != mirrored(cls.lex_case)) {
        return verdict(Check::complement_symmetry, false,
                       std::string(case_tag(cls.lex_case)) + " vs complement " + std::string(case_tag(other.lex_case)));
    }
    const TwinPartition& t = ctx.report().twin_stats;
    const std::size_t n = ctx.g().order();
    if ((cls.lex_case == LexCase::free_bases || cls.lex_case == LexCase::both_forced) &&
        case_formula(cls.lex_case, cls.beta2, n, t) != case_formula(other.lex_case, other.beta2, n, t)) {
        return verdict(Check::complement_symmetry, false, "formula values differ");
    }
    return verdict(Check::complement_symmetry, true, std::string(case_tag(cls.lex_case)));
}

CheckOutcome run_pair_check(PairContext& ctx, Check check) {
    const bool trivial_h = ctx.h().order() < 2;
    switch (check) {
        case Check::lex_formula: {
            const LexReport& r = ctx.report();
            if (r.oracle_capped) return skip(check, "oracle cap");
            return verdict(check, r.oracle_value == r.formula_value,
                           "formula=" + std::to_string(r.formula_value) + " oracle=" + std::to_string(*r.oracle_value));
        }
        case Check::lex_witness: {
            const LexReport& r = ctx.report();
            return verdict(check, r.witness_resolves && r.witness.size() == r.formula_value,
                           "witness " + r.witness.to_string());
        }
        case Check::row_projection: return check_row_projection(ctx);
        case Check::lex_distance: return check_lex_distance(ctx);
        case Check::complement_symmetry:
            if (trivial_h) return skip(check, "H has order 1");
            return check_complement_symmetry(ctx);
        case Check::twin_free_collapse: {
            if (trivial_h) return skip(check, "H has order 1");
            const LexReport& r = ctx.report();
            if (!r.twin_stats.twin_free()) return skip(check, "G has twins");
            return verdict(check, r.formula_value == r.n * r.classification->beta2,
                           "formula=" + std::to_string(r.formula_value));
        }
        default: return skip(check, "graph check");
    }
}

}  // namespace

std::string_view name(Check check) {
    for (const auto& entry : kNames) {
        if (entry.check == check) return entry.name;
    }
    return "?";
}

std::optional<Check> parse_check(std::string_view text) {
    for (const auto& entry : kNames) {
        if (entry.name == text || entry.alias == text) return entry.check;
    }
    return std::nullopt;
}

bool is_pair_check(Check check) {
    for (const auto& entry : kNames) {
        if (entry.check == check) return entry.pair;
    }
    return false;
}

std::vector<Check> graph_checks() {
    std::vector<Check> out;
    for (const auto& entry : kNames) {
        if (!entry.pair) out.push_back(entry.check);
    }
    return out;
}

std::vector<Check> pair_checks() {
    std::vector<Check> out;
    for (const auto& entry : kNames) {
        if (entry.pair) out.push_back(entry.check);
    }
    return out;
}

std::string_view to_string(Status status) {
    switch (status) {
        case Status::pass: return "pass";
        case Status::fail: return "FAIL";
        case Status::skipped: return "skip";
    }
    return "?";
}

std::vector<CheckOutcome> run_graph_checks(const Graph& g, std::span<const Check> checks, const SearchCaps& caps) {
    std::vector<CheckOutcome> out;
    for (Check check : checks) {
        if (!is_pair_check(check)) out.push_back(run_graph_check(g, check, caps));
    }
    return out;
}

std::vector<CheckOutcome> run_pair_checks(const Graph& g, const Graph& h, std::span<const Check> checks,
                                          const SearchCaps& caps) {
    std::vector<CheckOutcome> out;
    const bool applicable = g.order() >= 2 && g.connected();
    PairContext ctx(g, h, caps);
    for (Check check : checks) {
        if (!is_pair_check(check)) continue;
        out.push_back(applicable ? run_pair_check(ctx, check) : skip(check, "G must be connected with order >= 2"));
    }
    return out;
}

bool Row::violated() const {
    return std::any_of(outcomes.begin(), outcomes.end(), [](const CheckOutcome& o) { return o.status == Status::fail; });
}

std::vector<Row> run(std::size_t count, const std::function<Item(std::size_t)>& item_at, std::span<const Check> checks,
                     const SearchCaps& caps, unsigned threads) {
    std::vector<Row> rows(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            Row& row = rows[i];
            row.index = i;
            try {
                const Item item = item_at(i);
                row.label = item.label;
                if (!item.g) {
                    row.error = item.error;
                    continue;
                }
                row.outcomes = item.h ? run_pair_checks(*item.g, *item.h, checks, caps)
                                      : run_graph_checks(*item.g, checks, caps);
            } catch (const CapExceeded& e) {
                row.cap_exceeded = true;
                row.error = e.what();
            } catch (const Error& e) {
                row.error = e.what();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return rows;
}

Summary summarize(std::span<const Row> rows) {
    Summary s;
    s.rows = rows.size();
    for (const Row& row : rows) {
        if (row.error) ++s.errors;
        if (row.violated()) ++s.violations;
        for (const CheckOutcome& o : row.outcomes) {
            switch (o.status) {
                case Status::pass: ++s.passed; break;
                case Status::fail: ++s.failed; break;
                case Status::skipped: ++s.skipped; break;
            }
        }
    }
    return s;
}

std::vector<Item> labeled_items(std::size_t min_order, std::size_t max_order) {
    std::vector<Item> items;
    for (std::size_t n = std::max<std::size_t>(min_order, 1); n <= max_order; ++n) {
        const std::uint64_t count = labeled_graph_count(n);
        for (std::uint64_t code = 0; code < count; ++code) {
            Graph g = labeled_graph(n, code);
            items.push_back(Item{emit_graph6(g), std::move(g), std::nullopt, {}});
        }
    }
    return items;
}

std::vector<Item> labeled_pair_items(std::size_t g_max, std::size_t h_max) {
    std::vector<Graph> gs, hs;
    for (std::size_t n = 2; n <= g_max; ++n) {
        for (std::uint64_t code = 0; code < labeled_graph_count(n); ++code) {
            Graph g = labeled_graph(n, code);
            if (g.connected()) gs.push_back(std::move(g));
        }
    }
    for (std::size_t m = 1; m <= h_max; ++m) {
        for (std::uint64_t code = 0; code < labeled_graph_count(m); ++code) hs.push_back(labeled_graph(m, code));
    }
    std::vector<Item> items;
    items.reserve(gs.size() * hs.size());
    for (const Graph& g : gs) {
        for (const Graph& h : hs) items.push_back(Item{emit_graph6(g) + " " + emit_graph6(h), g, h, {}});
    }
    return items;
}

bool is_small_path_or_complement(const Graph& g) {
    if (g.order() == 2) return true;
    return g.order() == 3 && (g.edge_count() == 1 || g.edge_count() == 2);
}

}  // namespace lexidim::survey
