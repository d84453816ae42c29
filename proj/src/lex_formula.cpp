#include "lexidim/lex_formula.hpp"

#include <algorithm>

#include "lexidim/error.hpp"

namespace lexidim {

std::string_view case_tag(LexCase c) {
    switch (c) {
        case LexCase::free_bases: return "Case32";
        case LexCase::both_forced: return "Case33";
        case LexCase::all_one_forced: return "Case34";
        case LexCase::all_two_forced: return "Case35";
    }
    return "?";
}

const BasisProfile& HClassification::profile_of(const VertexSet& basis) const {
    for (const BasisProfile& p : profiles) {
        if (p.basis == basis) return p;
    }
    throw InternalError("basis " + basis.to_string() + " is not an adjacency basis of H");
}

VertexSet row(const Graph& product, Vertex i, std::size_t m) {
    if (m == 0 || product.order() % m != 0) throw InputError("row width does not divide product order");
    if ((i + 1) * m > product.order()) throw InputError("row index out of range");
    return VertexSet::range(i * m, (i + 1) * m);
}

VertexSet project_onto_h(const VertexSet& s, Vertex i, std::size_t m) {
    std::vector<Vertex> out;
    for (Vertex v : s) {
        if (v / m == i) out.push_back(v % m);
    }
    return VertexSet(std::move(out));
}

BasisProfile profile_basis(const Graph& h, const VertexSet& basis) {
    BasisProfile p;
    p.basis = basis;
    for (Vertex u = 0; u < h.order(); ++u) {
        if (basis.contains(u)) continue;
        bool all_one = true, all_two = true;
        for (Vertex w : basis) {
            const std::uint32_t c = adjacency_code(h, u, w);
            all_one = all_one && c == 1;
            all_two = all_two && c == 2;
        }
        if (all_one && !p.has_all_one) {
            p.has_all_one = true;
            p.all_one_witness = u;
        }
        if (all_two && !p.has_all_two) {
            p.has_all_two = true;
            p.all_two_witness = u;
        }
    }
    return p;
}

HClassification classify_h(const Graph& h, const SearchCaps& caps) {
    HClassification out;
    for (const VertexSet& basis : enumerate_adjacency_bases(h, caps)) {
        out.profiles.push_back(profile_basis(h, basis));
    }
    out.beta2 = out.profiles.front().basis.size();

    const auto first_without_all_one = std::find_if(out.profiles.begin(), out.profiles.end(),
                                                    [](const BasisProfile& p) { return !p.has_all_one; });
    const auto first_without_all_two = std::find_if(out.profiles.begin(), out.profiles.end(),
                                                     [](const BasisProfile& p) { return !p.has_all_two; });
    const bool some_lacks_one = first_without_all_one != out.profiles.end();
    const bool some_lacks_two = first_without_all_two != out.profiles.end();

    if (some_lacks_one && some_lacks_two) {
        out.lex_case = LexCase::free_bases;
        out.chosen_w1 = first_without_all_one->basis;
        out.chosen_w2 = first_without_all_two->basis;
    } else if (!some_lacks_one && !some_lacks_two) {
        out.lex_case = LexCase::both_forced;
        out.chosen_w1 = out.chosen_w2 = out.profiles.front().basis;
    } else if (!some_lacks_one) {
        out.lex_case = LexCase::all_one_forced;
        out.chosen_w1 = out.chosen_w2 = first_without_all_two->basis;
    } else {
        out.lex_case = LexCase::all_two_forced;
        out.chosen_w1 = out.chosen_w2 = first_without_all_one->basis;
    }
    return out;
}

std::size_t case_formula(LexCase c, std::size_t beta2, std::size_t n, const TwinPartition& t) {
    switch (c) {
        case LexCase::free_bases: return n * beta2;
        case LexCase::both_forced: return n * (beta2 + 1) - t.iota;
        case LexCase::all_one_forced: return n * beta2 + t.a - t.iota_k;
        case LexCase::all_two_forced: return n * beta2 + t.b - t.iota_n;
    }
    throw InternalError("unknown lex case");
}

VertexSet construct_witness(const Graph& g, const Graph& h, const HClassification& cls) {
    const std::size_t n = g.order();
    const std::size_t m = h.order();
    const TwinPartition twins = twin_partition(g);
    std::vector<Vertex> members;

    auto add_columns = [&](Vertex i, const VertexSet& columns) {
        for (Vertex j : columns) members.push_back(i * m + j);
    };
    // Column `u` on every non-representative vertex of classes of `type`.
    auto add_twin_extras = [&](TwinType type, Vertex u) {
        for (std::size_t c = 0; c < twins.classes.size(); ++c) {
            if (twins.types[c] != type) continue;
            const VertexSet& members_of_class = twins.classes[c];
            for (std::size_t k = 1; k < members_of_class.size(); ++k) {
                members.push_back(members_of_class[k] * m + u);
            }
        }
    };

    switch (cls.lex_case) {
        case LexCase::free_bases:
            for (Vertex i = 0; i < n; ++i) {
                add_columns(i, twins.k_vertices.contains(i) ? cls.chosen_w1 : cls.chosen_w2);
            }
            break;
        case LexCase::both_forced: {
            const BasisProfile& p = cls.profile_of(cls.chosen_w1);
            for (Vertex i = 0; i < n; ++i) add_columns(i, p.basis);
            add_twin_extras(TwinType::clique, *p.all_one_witness);
            add_twin_extras(TwinType::independent, *p.all_two_witness);
            break;
        }
        case LexCase::all_one_forced: {
            const BasisProfile& p = cls.profile_of(cls.chosen_w1);
            for (Vertex i = 0; i < n; ++i) add_columns(i, p.basis);
            add_twin_extras(TwinType::clique, *p.all_one_witness);
            break;
        }
        case LexCase::all_two_forced: {
            const BasisProfile& p = cls.profile_of(cls.chosen_w1);
            for (Vertex i = 0; i < n; ++i) add_columns(i, p.basis);
            add_twin_extras(TwinType::independent, *p.all_two_witness);
            break;
        }
    }
    return VertexSet(std::move(members));
}

LexReport lex_dimension(const Graph& g, const Graph& h, bool verify, const SearchCaps& caps) {
    LexReport report;
    report.n = g.order();
    report.m = h.order();
    report.twin_stats = twin_partition(g);

    if (g.order() == 1 || h.order() == 1) {
        // K_1[H] = H and G[K_1] = G.
        const Graph& other = g.order() == 1 ? h : g;
        if (!other.connected()) throw InputError("the non-trivial factor must be connected");
        if (other.order() == 1) throw InputError("K1[K1] has no resolving set of positive size");
        const DimensionResult d = dimension(other, RepKind::metric, false, caps);
        report.route = LexRoute::trivial_factor;
        report.formula_value = d.value;
        report.witness = d.witness;
        report.witness_resolves = true;
        report.oracle_value = d.value;
        report.oracle_witness = d.witness;
        return report;
    }
    if (!g.connected()) throw InputError("G must be connected");

    report.classification = classify_h(h, caps);
    const HClassification& cls = *report.classification;
    report.formula_value = case_formula(cls.lex_case, cls.beta2, g.order(), report.twin_stats);
    report.witness = construct_witness(g, h, cls);

    const Graph product = lex_product(g, h);
    report.witness_resolves = is_resolving(product, report.witness, RepKind::metric);

    if (verify) {
        if (product.order() > std::min(caps.search_order, kMaxCap)) {
            report.oracle_capped = true;
        } else {
            const DimensionResult d = dimension(product, RepKind::metric, false, caps);
            report.oracle_value = d.value;
            report.oracle_witness = d.witness;
        }
    }
    return report;
}

}  // namespace lexidim
