#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexidim/error.hpp"
#include "lexidim/io.hpp"
#include "lexidim/lex_formula.hpp"
#include "lexidim/resolving.hpp"
#include "lexidim/survey.hpp"
#include "lexidim/twins.hpp"

namespace lexidim::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct CommonOptions {
    bool json = false;
    std::size_t cap = 0;       // 0: environment or default
    std::size_t enum_cap = 0;
};

std::size_t env_size(const char* name, std::size_t fallback) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0') return fallback;
    try {
        std::size_t used = 0;
        const unsigned long long parsed = std::stoull(value, &used);
        if (used != std::string(value).size()) throw std::invalid_argument(name);
        return static_cast<std::size_t>(parsed);
    } catch (const std::exception&) {
        throw InputError(std::string("environment variable ") + name + " is not a number");
    }
}

SearchCaps resolve_caps(const CommonOptions& opts) {
    SearchCaps caps;
    caps.search_order = opts.cap != 0 ? opts.cap : env_size("LEXIDIM_CAP", caps.search_order);
    caps.enumeration_order = opts.enum_cap != 0 ? opts.enum_cap : env_size("LEXIDIM_ENUM_CAP", caps.enumeration_order);
    for (std::size_t c : {caps.search_order, caps.enumeration_order}) {
        if (c == 0 || c > kMaxCap) throw InputError("caps must lie in [1, " + std::to_string(kMaxCap) + "]");
    }
    return caps;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::vector<std::string> nonblank_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

bool blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

GraphFormat file_format(const std::string& path) {
    return ends_with(path, ".edges") ? GraphFormat::edge_list : GraphFormat::graph6;
}

// Family DSL, "g6:<graph6>", an inline edge list (contains ';'), or
// "@file.g6" / "@file.edges" (first nonblank line).
Graph load_graph(const std::string& descriptor) {
    if (!descriptor.empty() && descriptor.front() == '@') {
        const std::string path = descriptor.substr(1);
        for (const std::string& line : nonblank_lines(read_file(path))) {
            if (!blank(line)) return parse(line, file_format(path));
        }
        throw InputError(path + " contains no graph");
    }
    if (descriptor.rfind("g6:", 0) == 0) return parse_graph6(std::string_view(descriptor).substr(3));
    if (descriptor.find(';') != std::string::npos) return parse_edge_list(descriptor);
    return parse_family(descriptor);
}

json set_json(const VertexSet& s) { return json(std::vector<Vertex>(s.begin(), s.end())); }

std::string labelled(const Graph& g, const VertexSet& s) {
    if (!g.has_labels()) return s.to_string();
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != 0) out += ",";
        out += g.label(s[i]);
    }
    return out + "}";
}

json caps_json(const SearchCaps& caps) {
    return {{"search_order", caps.search_order}, {"enumeration_order", caps.enumeration_order}};
}

json twin_json(const TwinPartition& t) {
    json classes = json::array();
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
        classes.push_back({{"members", set_json(t.classes[c])}, {"type", std::string(to_string(t.types[c]))}});
    }
    return {{"iota", t.iota}, {"iota_k", t.iota_k}, {"iota_n", t.iota_n}, {"a", t.a}, {"b", t.b}, {"classes", classes}};
}

json optional_vertex(const std::optional<Vertex>& v) { return v ? json(*v) : json(nullptr); }

json classification_json(const HClassification& cls) {
    json profiles = json::array();
    for (const BasisProfile& p : cls.profiles) {
        profiles.push_back({{"basis", set_json(p.basis)},
                            {"all_one", optional_vertex(p.all_one_witness)},
                            {"all_two", optional_vertex(p.all_two_witness)}});
    }
    return {{"beta2", cls.beta2},
            {"case", std::string(case_tag(cls.lex_case))},
            {"chosen_w1", set_json(cls.chosen_w1)},
            {"chosen_w2", set_json(cls.chosen_w2)},
            {"profiles", profiles}};
}

json base_report(const std::string& command, const std::vector<std::string>& inputs, const SearchCaps& caps) {
    return {{"command", command}, {"inputs", inputs}, {"result", nullptr}, {"witness", nullptr},
            {"oracle", nullptr},  {"case", nullptr},  {"timings_ms", 0.0},  {"caps", caps_json(caps)}};
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void print_classification(std::ostream& out, const HClassification& cls) {
    out << "beta2: " << cls.beta2 << "\n";
    out << "case: " << case_tag(cls.lex_case) << "\n";
    out << "W1: " << cls.chosen_w1.to_string() << "\n";
    out << "W2: " << cls.chosen_w2.to_string() << "\n";
    out << "bases:\n";
    for (const BasisProfile& p : cls.profiles) {
        out << "  " << std::left << std::setw(16) << p.basis.to_string()
            << " all-1: " << (p.all_one_witness ? std::to_string(*p.all_one_witness) : "-")
            << "  all-2: " << (p.all_two_witness ? std::to_string(*p.all_two_witness) : "-") << "\n";
    }
}

int cmd_dim(const std::string& input, bool adjacency, bool all, const CommonOptions& opts, std::ostream& out) {
    const auto start = Clock::now();
    const SearchCaps caps = resolve_caps(opts);
    const Graph g = load_graph(input);
    const RepKind kind = adjacency ? RepKind::adjacency : RepKind::metric;
    const DimensionResult d = dimension(g, kind, all, caps);

    if (opts.json) {
        json report = base_report("dim", {input}, caps);
        json result = {{"kind", std::string(to_string(kind))}, {"order", g.order()}, {"value", d.value}};
        if (d.all_bases) {
            json bases = json::array();
            for (const VertexSet& b : *d.all_bases) bases.push_back(set_json(b));
            result["bases"] = bases;
        }
        report["result"] = result;
        report["witness"] = set_json(d.witness);
        report["timings_ms"] = elapsed_ms(start);
        out << report.dump(2) << "\n";
    } else {
        out << "graph: " << input << " (order " << g.order() << ")\n";
        out << to_string(kind) << " dimension: " << d.value << "\n";
        out << "witness: " << labelled(g, d.witness) << "\n";
        if (d.all_bases) {
            out << "bases (" << d.all_bases->size() << "):\n";
            for (const VertexSet& b : *d.all_bases) out << "  " << labelled(g, b) << "\n";
        }
    }
    return kSuccess;
}

int cmd_classify(const std::string& input, const CommonOptions& opts, std::ostream& out) {
    const auto start = Clock::now();
    const SearchCaps caps = resolve_caps(opts);
    const Graph h = load_graph(input);
    const HClassification cls = classify_h(h, caps);
    if (opts.json) {
        json report = base_report("classify", {input}, caps);
        report["result"] = classification_json(cls);
        report["case"] = std::string(case_tag(cls.lex_case));
        report["timings_ms"] = elapsed_ms(start);
        out << report.dump(2) << "\n";
    } else {
        out << "graph: " << input << " (order " << h.order() << ")\n";
        print_classification(out, cls);
    }
    return kSuccess;
}

int cmd_lex(const std::string& g_input, const std::string& h_input, bool verify, bool witness_only,
            const CommonOptions& opts, std::ostream& out) {
    const auto start = Clock::now();
    const SearchCaps caps = resolve_caps(opts);
    const Graph g = load_graph(g_input);
    const Graph h = load_graph(h_input);
    const LexReport r = lex_dimension(g, h, verify, caps);

    int code = kSuccess;
    if (!r.witness_resolves) code = kVerificationFailure;
    if (verify) {
        if (r.oracle_capped) {
            if (code == kSuccess) code = kCapExceeded;
        } else if (*r.oracle_value != r.formula_value) code = kVerificationFailure;
    }
    const std::string verdict = !verify ? "" : r.oracle_capped ? "CAPPED" : code == kSuccess ? "PASS" : "FAIL";
    const std::string tag = r.classification ? std::string(case_tag(r.classification->lex_case)) : "trivial-factor";

    if (opts.json) {
        json report = base_report(witness_only ? "construct" : "lex", {g_input, h_input}, caps);
        json result = {{"n", r.n},
                       {"m", r.m},
                       {"route", r.route == LexRoute::case_formula ? "case-formula" : "trivial-factor"},
                       {"formula_value", r.formula_value},
                       {"witness_resolves", r.witness_resolves},
                       {"twin_stats", twin_json(r.twin_stats)}};
        if (r.classification) result["classification"] = classification_json(*r.classification);
        report["result"] = result;
        report["witness"] = set_json(r.witness);
        report["case"] = tag;
        if (verify) {
            report["oracle"] = r.oracle_value
                                   ? json{{"value", *r.oracle_value},
                                          {"witness", set_json(*r.oracle_witness)},
                                          {"status", verdict}}
                                   : json{{"value", nullptr}, {"status", verdict}};
        }
        report["timings_ms"] = elapsed_ms(start);
        out << report.dump(2) << "\n";
        return code;
    }

    if (witness_only) {
        out << r.witness.to_string() << "\n";
        return code;
    }
    out << "G: " << g_input << " (order " << r.n << ")  H: " << h_input << " (order " << r.m << ")\n";
    out << "case: " << tag << "\n";
    if (r.classification) out << "beta2(H): " << r.classification->beta2 << "\n";
    out << "twins of G: iota=" << r.twin_stats.iota << " iota_K=" << r.twin_stats.iota_k
        << " iota_N=" << r.twin_stats.iota_n << " a=" << r.twin_stats.a << " b=" << r.twin_stats.b << "\n";
    out << "beta(G[H]): " << r.formula_value << "\n";
    out << "witness: " << r.witness.to_string() << (r.witness_resolves ? " (resolving)" : " (NOT resolving)") << "\n";
    if (verify) {
        if (r.oracle_value) out << "oracle: " << *r.oracle_value << "\n";
        out << verdict << "\n";
    }
    return code;
}

struct SurveyOptions {
    std::string corpus;
    std::size_t labeled_upto = 0;
    std::size_t labeled_min = 2;
    bool pairs = false;
    std::size_t g_upto = 0;
    std::size_t h_upto = 0;
    std::vector<std::string> checks;
    bool quiet = false;
    unsigned threads = 0;
};

std::vector<survey::Item> corpus_items(const std::string& path) {
    std::vector<survey::Item> items;
    const GraphFormat format = file_format(path);
    std::size_t line_no = 0;
    for (const std::string& line : nonblank_lines(read_file(path))) {
        ++line_no;
        if (blank(line)) continue;
        survey::Item item;
        item.label = path + ":" + std::to_string(line_no);
        try {
            item.g = parse(line, format);
        } catch (const Error& e) {
            item.error = "line " + std::to_string(line_no) + ": " + e.what();
        }
        items.push_back(std::move(item));
    }
    return items;
}

int cmd_survey(const SurveyOptions& so, const CommonOptions& opts, std::ostream& out) {
    const auto start = Clock::now();
    const SearchCaps caps = resolve_caps(opts);

    std::vector<survey::Item> items;
    std::vector<std::string> inputs;
    if (so.pairs) {
        if (!so.corpus.empty()) {
            const std::vector<survey::Item> base = corpus_items(so.corpus);
            for (const auto& a : base) {
                for (const auto& b : base) {
                    survey::Item item{a.label + " " + b.label, a.g, b.g, a.error.empty() ? b.error : a.error};
                    if (!item.h) item.g.reset();
                    items.push_back(std::move(item));
                }
            }
            inputs.push_back(so.corpus);
        } else {
            if (so.g_upto < 2 || so.h_upto < 1) throw InputError("--pairs needs --g-upto >= 2 and --h-upto >= 1");
            items = survey::labeled_pair_items(so.g_upto, so.h_upto);
            inputs.push_back("pairs g<=" + std::to_string(so.g_upto) + " h<=" + std::to_string(so.h_upto));
        }
    } else if (!so.corpus.empty()) {
        items = corpus_items(so.corpus);
        inputs.push_back(so.corpus);
    } else if (so.labeled_upto != 0) {
        if (so.labeled_min > so.labeled_upto) throw InputError("--labeled-min exceeds --labeled-upto");
        items = survey::labeled_items(so.labeled_min, so.labeled_upto);
        inputs.push_back("labeled " + std::to_string(so.labeled_min) + ".." + std::to_string(so.labeled_upto));
    } else {
        throw InputError("survey needs a corpus file, --labeled-upto N, or --pairs");
    }

    std::vector<survey::Check> checks;
    for (const std::string& name : so.checks) {
        const auto check = survey::parse_check(name);
        if (!check) throw InputError("unknown check '" + name + "'");
        if (survey::is_pair_check(*check) != so.pairs) {
            throw InputError("check '" + name + (so.pairs ? "' needs single graphs" : "' needs --pairs"));
        }
        checks.push_back(*check);
    }
    if (checks.empty()) checks = so.pairs ? survey::pair_checks() : survey::graph_checks();

    const std::vector<survey::Row> rows = survey::run(
        items.size(), [&](std::size_t i) { return items[i]; }, checks, caps, so.threads);
    const survey::Summary s = survey::summarize(rows);

    const bool capped = std::any_of(rows.begin(), rows.end(), [](const survey::Row& r) { return r.cap_exceeded; });
    const bool input_errors =
        std::any_of(rows.begin(), rows.end(), [](const survey::Row& r) { return r.error && !r.cap_exceeded; });
    int code = kSuccess;
    if (s.violations != 0) code = kVerificationFailure;
    else if (input_errors) code = kInputError;
    else if (capped) code = kCapExceeded;

    std::vector<std::string> check_names;
    for (survey::Check c : checks) check_names.emplace_back(survey::name(c));

    if (opts.json) {
        json report = base_report("survey", inputs, caps);
        json row_list = json::array();
        for (const survey::Row& row : rows) {
            if (so.quiet && !row.violated() && !row.error) continue;
            json entry = {{"index", row.index}, {"input", row.label}};
            if (row.error) entry["error"] = *row.error;
            json results = json::object();
            for (const survey::CheckOutcome& o : row.outcomes) {
                results[std::string(survey::name(o.check))] = {{"status", std::string(survey::to_string(o.status))},
                                                               {"detail", o.detail}};
            }
            entry["checks"] = results;
            row_list.push_back(entry);
        }
        report["result"] = {{"checks", check_names},
                            {"summary",
                             {{"rows", s.rows},
                              {"violations", s.violations},
                              {"errors", s.errors},
                              {"passed", s.passed},
                              {"failed", s.failed},
                              {"skipped", s.skipped}}},
                            {"rows", row_list}};
        report["timings_ms"] = elapsed_ms(start);
        out << report.dump(2) << "\n";
        return code;
    }

    for (const survey::Row& row : rows) {
        if (so.quiet && !row.violated() && !row.error) continue;
        out << std::setw(6) << row.index << "  " << row.label;
        if (row.error) out << "  ERROR " << *row.error;
        for (const survey::CheckOutcome& o : row.outcomes) {
            out << "  " << survey::name(o.check) << "=" << survey::to_string(o.status);
            if (o.status == survey::Status::fail) out << " [" << o.detail << "]";
        }
        out << "\n";
    }
    out << "checks: ";
    for (std::size_t i = 0; i < check_names.size(); ++i) out << (i ? "," : "") << check_names[i];
    out << "\n";
    out << "rows: " << s.rows << "  violations: " << s.violations << "  errors: " << s.errors
        << "  passed: " << s.passed << "  failed: " << s.failed << "  skipped: " << s.skipped << "\n";
    return code;
}

void add_common(CLI::App* sub, CommonOptions& opts) {
    sub->add_flag("--json", opts.json, "Emit a JSON report");
    sub->add_option("--cap", opts.cap, "Order cap for exact search (env LEXIDIM_CAP, default 24)");
    sub->add_option("--enum-cap", opts.enum_cap,
                    "Order cap for full basis enumeration (env LEXIDIM_ENUM_CAP, default 12)");
}

int report_error(std::ostream& out, std::ostream& err, bool as_json, const std::string& message, int code) {
    err << "error: " << message << "\n";
    if (as_json) out << json{{"error", message}, {"exit_code", code}}.dump(2) << "\n";
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact metric and adjacency dimension toolkit with lexicographic product formulas", "lexidim"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string graph_a, graph_b;
    bool adjacency = false, all = false, verify = false;
    SurveyOptions so;

    CLI::App* dim = app.add_subcommand("dim", "Metric (or adjacency) dimension of a graph");
    dim->add_option("graph", graph_a, "Graph descriptor")->required();
    dim->add_flag("--adj", adjacency, "Adjacency dimension instead of metric");
    dim->add_flag("--all", all, "List every basis");
    add_common(dim, opts);

    CLI::App* classify = app.add_subcommand("classify", "Classify H by the all-1 / all-2 vertices of its adjacency bases");
    classify->add_option("graph", graph_a, "Graph descriptor")->required();
    add_common(classify, opts);

    CLI::App* lex = app.add_subcommand("lex", "Metric dimension of the lexicographic product G[H]");
    lex->add_option("G", graph_a, "Connected base graph")->required();
    lex->add_option("H", graph_b, "Fibre graph")->required();
    lex->add_flag("--verify", verify, "Compare against the brute-force dimension of the product");
    add_common(lex, opts);

    CLI::App* construct = app.add_subcommand("construct", "Emit the constructed resolving set of G[H]");
    construct->add_option("G", graph_a, "Connected base graph")->required();
    construct->add_option("H", graph_b, "Fibre graph")->required();
    add_common(construct, opts);

    CLI::App* surv = app.add_subcommand("survey", "Check identities over a corpus or generated labeled graphs");
    surv->add_option("corpus", so.corpus, "graph6 (.g6) or edge-list (.edges) file, one graph per line");
    surv->add_option("--labeled-upto", so.labeled_upto, "Every labeled graph up to this order");
    surv->add_option("--labeled-min", so.labeled_min, "Smallest labeled order (default 2)");
    surv->add_flag("--pairs", so.pairs, "Check (G, H) pair identities");
    surv->add_option("--g-upto", so.g_upto, "Largest order of G for --pairs");
    surv->add_option("--h-upto", so.h_upto, "Largest order of H for --pairs");
    surv->add_option("--check", so.checks, "Checks to run (repeatable or comma separated)")->delimiter(',');
    surv->add_flag("--quiet", so.quiet, "Only print failing rows");
    surv->add_option("--threads", so.threads, "Worker threads (default: hardware concurrency)");
    add_common(surv, opts);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (dim->parsed()) return cmd_dim(graph_a, adjacency, all, opts, out);
        if (classify->parsed()) return cmd_classify(graph_a, opts, out);
        if (lex->parsed()) return cmd_lex(graph_a, graph_b, verify, false, opts, out);
        if (construct->parsed()) return cmd_lex(graph_a, graph_b, false, true, opts, out);
        if (surv->parsed()) return cmd_survey(so, opts, out);
    } catch (const CapExceeded& e) {
        return report_error(out, err, opts.json, e.what(), kCapExceeded);
    } catch (const InternalError& e) {
        return report_error(out, err, opts.json, e.what(), kVerificationFailure);
    } catch (const Error& e) {
        return report_error(out, err, opts.json, e.what(), kInputError);
    }
    return kInputError;
}

}  // namespace lexidim::cli
