#include "quiverhh/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "quiverhh/algebra.hpp"
#include "quiverhh/cycles.hpp"
#include "quiverhh/error.hpp"
#include "quiverhh/hochschild.hpp"
#include "quiverhh/resolutions.hpp"

namespace quiverhh {

using json = nlohmann::ordered_json;

std::string_view error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::unknown_arrow: return "UnknownArrow";
    case ErrorCode::non_composable_path: return "NonComposablePath";
    case ErrorCode::non_parallel_relation: return "NonParallelRelation";
    case ErrorCode::not_admissible: return "NotAdmissible";
    case ErrorCode::infinite_dimensional: return "InfiniteDimensional";
    case ErrorCode::nilbound_violated: return "NilboundViolated";
    case ErrorCode::missing_nilbound: return "MissingNilbound";
    case ErrorCode::endpoint_mismatch: return "EndpointMismatch";
    case ErrorCode::not_two_truncated: return "NotTwoTruncated";
    case ErrorCode::not_monomial: return "NotMonomial";
    case ErrorCode::invalid_witness: return "InvalidWitness";
    case ErrorCode::relation_violation: return "RelationViolation";
    case ErrorCode::resource_limit: return "ResourceLimit";
    case ErrorCode::generation_exhausted: return "GenerationExhausted";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

Field parse_field_flag(const std::string& flag)
{
    if (flag == "q" || flag == "Q")
        return Field::rationals();
    if (flag.rfind("fp:", 0) == 0) {
        std::string digits = flag.substr(3);
        if (!digits.empty() && digits.size() < 19 &&
            std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            return Field::prime(std::stoull(digits));
    }
    throw Error(ErrorCode::invalid_argument, "--field expects 'q' or 'fp:<prime>', got '" + flag + "'");
}

namespace {

std::string path_name(const Algebra& a, std::size_t basis_index)
{
    return path_to_string(a.quiver(), a.basis().path(basis_index));
}

json path_list(const Quiver& q, const std::vector<Path>& paths)
{
    json out = json::array();
    for (const Path& p : paths)
        out.push_back(path_to_string(q, p));
    return out;
}

json arrow_names(const Quiver& q, const std::vector<std::size_t>& arrows)
{
    json out = json::array();
    for (std::size_t a : arrows)
        out.push_back(q.arrow(a).name);
    return out;
}

json chain_json(const Algebra& a, const ChainVector& v)
{
    json out = json::array();
    for (const auto& [t, c] : v.terms) {
        json tuple = json::array();
        for (std::size_t x : t)
            tuple.push_back(path_name(a, x));
        out.push_back(json{{"tuple", tuple}, {"coefficient", c.get_str()}});
    }
    return out;
}

json algebra_summary(const Algebra& a)
{
    return json{{"dim", a.dimension()},
                {"nilpotency", a.nilpotency_index()},
                {"monomial", a.is_monomial()},
                {"vertices", a.quiver().vertex_count()},
                {"arrows", a.quiver().arrow_count()}};
}

std::size_t find_vertex(const Algebra& a, const std::string& label)
{
    auto v = a.quiver().find_vertex(label);
    if (!v)
        throw Error(ErrorCode::invalid_argument, "unknown vertex '" + label + "'");
    return *v;
}

OrientedCycle parse_cycle(const Algebra& a, const std::string& word)
{
    std::vector<std::size_t> arrows;
    std::stringstream in(word);
    std::string name;
    while (std::getline(in, name, ',')) {
        auto arrow = a.quiver().find_arrow(name);
        if (!arrow)
            throw Error(ErrorCode::unknown_arrow, "unknown arrow '" + name + "' in --cycle");
        arrows.push_back(*arrow);
    }
    return OrientedCycle(a.quiver(), std::move(arrows));
}

json pd_json(const Algebra& a, const PdResult& r)
{
    json out;
    if (r.is_infinite())
        out["value"] = "infinite";
    else
        out["value"] = *r.value;
    json witness = json::array();
    for (std::size_t p : r.witness)
        witness.push_back(path_name(a, p));
    out["witness_kind"] = r.is_infinite() ? "cycle" : "chain";
    out["witness"] = witness;
    return out;
}

json cutoff_json(const CutoffPd& r)
{
    json out;
    if (r.value) {
        out["value"] = *r.value;
    } else {
        out["value"] = nullptr;
        out["at_least"] = r.at_least;
    }
    out["syzygy_dimensions"] = r.syzygy_dimensions;
    return out;
}

HochschildOptions hoch_options(const Command& c)
{
    HochschildOptions o;
    o.chain_cap = c.chain_cap;
    return o;
}

json run_validate(const AlgebraPresentation& p, Report& report)
{
    ValidationReport v = validate_presentation(p);
    json out{{"ok", v.ok}, {"dimension", v.dimension}, {"nilpotency_index", v.nilpotency_index},
             {"monomial", v.monomial}};
    if (!v.ok) {
        out["error"] = json{{"code", error_code_name(*v.error)}, {"message", v.message}};
        report.exit_code = ExitCode::validation_error;
    }
    return out;
}

json run_basis(const Algebra& a)
{
    json out{{"dimension", a.dimension()}, {"nilpotency_index", a.nilpotency_index()}};
    out["basis"] = path_list(a.quiver(), a.basis().paths());
    return out;
}

json witness_json(const Quiver& q, const TruncationWitness& w)
{
    return json{{"cycle", arrow_names(q, w.cycle.arrows())},
                {"length", w.cycle.length()},
                {"m", w.m},
                {"zero_windows", path_list(q, w.zero_windows)},
                {"nonzero_windows", path_list(q, w.nonzero_windows)}};
}

json run_cycles(const Command& c, const Algebra& a)
{
    std::size_t m = c.m.value_or(2);
    std::size_t max_len = c.max_length ? *c.max_length : default_max_length(a, m);
    json out{{"m", m}, {"max_length", max_len}};
    json witnesses = json::array();
    for (const auto& w : find_truncated_cycles(a, m, max_len))
        witnesses.push_back(witness_json(a.quiver(), w));
    out["witnesses"] = witnesses;
    if (m == 2) {
        auto minimal = minimal_two_truncated(a);
        out["minimal_two_truncated"] = minimal ? arrow_names(a.quiver(), minimal->arrows()) : json(nullptr);
    }
    return out;
}

json run_hh(const Command& c, const Algebra& a, Report& report)
{
    HochschildOptions opts = hoch_options(c);
    std::size_t degree = c.max_degree ? *c.max_degree : default_max_degree(a, opts);
    HochschildDimensions d = hh_dimensions_partial(a, degree, opts);
    json out{{"max_degree", degree}, {"hh_dimensions", d.hh}, {"chain_dimensions", d.chain_dims},
             {"boundary_ranks", d.boundary_ranks}, {"hh0_direct", hh0_direct(a)}, {"complete", d.complete}};
    if (!d.complete) {
        out["error"] = json{{"code", error_code_name(ErrorCode::resource_limit)}, {"message", d.limit_message}};
        report.exit_code = ExitCode::resource_limit;
    }
    return out;
}

json run_certify(const Command& c, const Algebra& a)
{
    std::optional<OrientedCycle> cycle;
    if (c.cycle)
        cycle = parse_cycle(a, *c.cycle);
    else
        cycle = minimal_two_truncated(a);
    if (!cycle)
        throw Error(ErrorCode::not_two_truncated, "the algebra has no 2-truncated oriented cycle");
    // The certificate's repetition count; --m is accepted as a synonym.
    std::size_t reps = c.repetitions;
    if (c.repetitions == 1 && c.m)
        reps = *c.m;
    Certificate cert = certify_nonvanishing(a, *cycle, reps, hoch_options(c));
    json out{{"cycle", arrow_names(a.quiver(), cert.cycle.arrows())},
             {"repetitions", cert.repetitions},
             {"degree", cert.degree},
             {"xi", chain_json(a, cert.xi)},
             {"boundary_of_xi", chain_json(a, cert.boundary_of_xi)},
             {"is_cycle", cert.is_cycle},
             {"boundary_status", cert.boundary_status == BoundaryStatus::not_in_image ? "not-in-image"
                                                                                   : "in-image"}};
    out["preimage"] = cert.preimage ? chain_json(a, *cert.preimage) : json(nullptr);
    out["hh_lower_bound"] = cert.hh_lower_bound;
    return out;
}

json limit_json(const Error& e, Report& report)
{
    if (!e.is_resource_limit())
        throw e;
    report.exit_code = ExitCode::resource_limit;
    return json{{"code", error_code_name(e.code())}, {"message", e.what()}};
}

json run_gldim(const Command& c, const Algebra& a, Report& report)
{
    json out;
    if (a.is_monomial()) {
        out["method"] = "monomial";
        PdResult r = gldim_monomial(a);
        json pd = pd_json(a, r);
        for (auto it = pd.begin(); it != pd.end(); ++it)
            out[it.key()] = it.value();
        if (!c.cutoff)
            return out;
    }
    ResolutionOptions ro;
    ro.dimension_cap = c.module_cap;
    std::size_t cutoff = c.cutoff ? *c.cutoff : default_cutoff(a);
    GldimCutoff g;
    try {
        g = gldim_cutoff(a, cutoff, ro);
    } catch (const Error& e) {
        if (!a.is_monomial())
            throw;
        out["cutoff_report"] = json{{"cutoff", cutoff}, {"error", limit_json(e, report)}};
        return out;
    }
    json table = json::array();
    for (std::size_t v = 0; v < g.per_vertex.size(); ++v) {
        json row = cutoff_json(g.per_vertex[v]);
        row["vertex"] = a.quiver().vertex_label(v);
        table.push_back(row);
    }
    json cut{{"cutoff", cutoff}, {"per_simple", table}};
    if (g.exact)
        cut["value"] = *g.exact;
    else
        cut["at_least"] = g.at_least;
    if (a.is_monomial()) {
        out["cutoff_report"] = cut;
    } else {
        out["method"] = "cutoff";
        for (auto it = cut.begin(); it != cut.end(); ++it)
            out[it.key()] = it.value();
    }
    return out;
}

json run_pd(const Command& c, const Algebra& a, Report& report)
{
    std::vector<std::size_t> vertices;
    if (c.vertex) {
        vertices.push_back(find_vertex(a, *c.vertex));
    } else {
        for (std::size_t v = 0; v < a.quiver().vertex_count(); ++v)
            vertices.push_back(v);
    }
    ResolutionOptions ro;
    ro.dimension_cap = c.module_cap;
    json table = json::array();
    std::optional<SuccessorGraph> graph;
    if (a.is_monomial())
        graph = build_successor_graph(a);
    for (std::size_t v : vertices) {
        json row{{"vertex", a.quiver().vertex_label(v)}};
        if (graph)
            row["monomial"] = pd_json(a, pd_simple_monomial(a, *graph, v));
        if (!graph || c.cutoff) {
            std::size_t cutoff = c.cutoff ? *c.cutoff : default_cutoff(a);
            json cut;
            try {
                cut = cutoff_json(pd_simple_cutoff(a, v, cutoff, ro));
            } catch (const Error& e) {
                cut = json{{"error", limit_json(e, report)}};
            }
            cut["cutoff"] = cutoff;
            row["cutoff"] = cut;
        }
        table.push_back(row);
    }
    return json{{"simples", table}};
}

json run_compare(const Command& c, const Algebra& a)
{
    if (!a.is_monomial())
        throw Error(ErrorCode::not_monomial, "the direct-summand comparison needs a monomial algebra");
    std::size_t m = c.m.value_or(2);
    std::vector<TruncationWitness> witnesses;
    if (c.cycle) {
        OrientedCycle cycle = parse_cycle(a, *c.cycle);
        TruncationCheck check = is_m_truncated(cycle, m, a);
        if (!check.truncated)
            throw Error(ErrorCode::invalid_witness,
                        cycle.to_string(a.quiver()) + " is not " + std::to_string(m) + "-truncated");
        witnesses.push_back({cycle, m, check.zero_windows, check.nonzero_windows});
    } else {
        witnesses = find_truncated_cycles(a, m, c.max_length);
    }
    HochschildOptions opts = hoch_options(c);
    std::size_t degree = c.max_degree ? *c.max_degree : std::min<std::size_t>(6, default_max_degree(a, opts));
    json rows = json::array();
    for (const auto& w : witnesses) {
        SummandComparison cmp = hh_compare_summand(a, w, degree, opts);
        rows.push_back(json{{"cycle", arrow_names(a.quiver(), w.cycle.arrows())},
                            {"l", cmp.cycle_length},
                            {"m", cmp.truncation},
                            {"hh_algebra", cmp.hh_algebra},
                            {"hh_cycle_algebra", cmp.hh_cycle_algebra},
                            {"holds", cmp.holds}});
    }
    return json{{"m", m}, {"max_degree", degree}, {"comparisons", rows}};
}

json run_corpus(const Command& c, Report& report)
{
    std::vector<std::string> names;
    std::stringstream in(c.check);
    std::string name;
    while (std::getline(in, name, ','))
        names.push_back(name);
    PropertyOptions po;
    po.chain_cap = std::min<std::uint64_t>(c.chain_cap, 20000);
    if (c.max_degree)
        po.max_degree = *c.max_degree;
    PropertyReport r = check_corpus_properties(c.seed, c.count, names, c.corpus, po);
    json props = json::object();
    for (const auto& [n, o] : r.properties)
        props[n] = json{{"checked", o.checked}, {"violations", o.violations}};
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back(json{{"property", v.property}, {"seed", v.seed}, {"detail", v.detail}});
    if (!r.violations.empty())
        report.exit_code = ExitCode::validation_error;
    return json{{"seed", c.seed},
                {"count", c.count},
                {"params",
                 json{{"max_vertices", c.corpus.max_vertices},
                      {"max_arrows", c.corpus.max_arrows},
                      {"max_rel_len", c.corpus.max_rel_len},
                      {"max_rels", c.corpus.max_rels},
                      {"max_dimension", c.corpus.max_dimension}}},
                {"algebras", r.algebras},
                {"properties", props},
                {"violations", violations}};
}

json command_echo(const Command& c)
{
    json out{{"verb", c.verb}, {"input", c.input}};
    out["field_override"] = c.field ? json(*c.field) : json(nullptr);
    out["m"] = c.m ? json(*c.m) : json(nullptr);
    out["repetitions"] = c.repetitions;
    out["max_degree"] = c.max_degree ? json(*c.max_degree) : json(nullptr);
    out["max_length"] = c.max_length ? json(*c.max_length) : json(nullptr);
    out["cutoff"] = c.cutoff ? json(*c.cutoff) : json(nullptr);
    out["vertex"] = c.vertex ? json(*c.vertex) : json(nullptr);
    out["cycle"] = c.cycle ? json(*c.cycle) : json(nullptr);
    if (c.verb == "corpus") {
        out["seed"] = c.seed;
        out["count"] = c.count;
        out["check"] = c.check;
    }
    return out;
}

} // namespace

Report run(const Command& c)
{
    Report report;
    json& doc = report.json;
    doc["version"] = tool_version;
    doc["input_digest"] = nullptr;
    doc["algebra"] = nullptr;
    doc["command"] = command_echo(c);
    doc["results"] = nullptr;
    doc["timing_ms"] = 0;

    auto start = std::chrono::steady_clock::now();
    try {
        static const std::vector<std::string> verbs{"validate", "basis", "cycles", "hh", "certify",
                                                    "gldim", "pd", "compare", "corpus"};
        if (std::find(verbs.begin(), verbs.end(), c.verb) == verbs.end())
            throw Error(ErrorCode::invalid_argument, "unknown command '" + c.verb + "'");
        if (c.verb == "corpus") {
            doc["results"] = run_corpus(c, report);
        } else {
            std::ifstream in(c.input);
            if (!in)
                throw Error(ErrorCode::parse_error, "cannot read '" + c.input + "'");
            std::stringstream buffer;
            buffer << in.rdbuf();
            const std::string text = buffer.str();
            doc["input_digest"] = input_digest(text);
            std::optional<Field> field;
            if (c.field)
                field = parse_field_flag(*c.field);
            AlgebraPresentation p = parse_presentation(text, field);
            if (c.verb == "validate") {
                doc["results"] = run_validate(p, report);
                if (report.exit_code == ExitCode::ok)
                    doc["algebra"] = algebra_summary(Algebra(p));
            } else {
                Algebra a(p);
                doc["algebra"] = algebra_summary(a);
                if (c.verb == "basis")
                    doc["results"] = run_basis(a);
                else if (c.verb == "cycles")
                    doc["results"] = run_cycles(c, a);
                else if (c.verb == "hh")
                    doc["results"] = run_hh(c, a, report);
                else if (c.verb == "certify")
                    doc["results"] = run_certify(c, a);
                else if (c.verb == "gldim")
                    doc["results"] = run_gldim(c, a, report);
                else if (c.verb == "pd")
                    doc["results"] = run_pd(c, a, report);
                else if (c.verb == "compare")
                    doc["results"] = run_compare(c, a);
            }
        }
    } catch (const Error& e) {
        doc["error"] = json{{"code", error_code_name(e.code())}, {"message", e.what()}};
        report.exit_code = e.is_resource_limit() ? ExitCode::resource_limit : ExitCode::validation_error;
    }
    auto elapsed = std::chrono::steady_clock::now() - start;
    doc["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    return report;
}

namespace {

bool is_flat(const json& v)
{
    if (!v.is_array())
        return !v.is_object();
    return std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
}

std::string flat_text(const json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "-";
    if (v.is_array()) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            out += (i ? ", " : "") + flat_text(v[i]);
        return out + "]";
    }
    return v.dump();
}

void write_text(std::ostream& out, const json& v, int indent)
{
    const std::string pad(indent, ' ');
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (is_flat(it.value())) {
                out << pad << it.key() << ": " << flat_text(it.value()) << "\n";
            } else {
                out << pad << it.key() << ":\n";
                write_text(out, it.value(), indent + 2);
            }
        }
    } else if (v.is_array()) {
        for (const auto& item : v) {
            if (is_flat(item)) {
                out << pad << "- " << flat_text(item) << "\n";
            } else {
                out << pad << "-\n";
                write_text(out, item, indent + 2);
            }
        }
    } else {
        out << pad << flat_text(v) << "\n";
    }
}

} // namespace

std::string emit_report(const Report& report, const std::string& format)
{
    if (format == "json")
        return report.json.dump(2) + "\n";
    if (format != "text")
        throw Error(ErrorCode::invalid_argument, "unknown format '" + format + "'");
    std::ostringstream out;
    write_text(out, report.json, 0);
    return out.str();
}

} // namespace quiverhh
