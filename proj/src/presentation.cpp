#include "quiverhh/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "quiverhh/error.hpp"

namespace quiverhh {

std::size_t Quiver::add_vertex(std::string label)
{
    if (find_vertex(label))
        throw Error(ErrorCode::parse_error, "duplicate vertex '" + label + "'");
    vertex_labels_.push_back(std::move(label));
    return vertex_labels_.size() - 1;
}

std::size_t Quiver::add_arrow(std::string name, std::size_t source, std::size_t target)
{
    if (find_arrow(name))
        throw Error(ErrorCode::parse_error, "duplicate arrow '" + name + "'");
    if (source >= vertex_count() || target >= vertex_count())
        throw Error(ErrorCode::parse_error, "arrow '" + name + "' has an undeclared endpoint");
    arrows_.push_back(Arrow{std::move(name), source, target});
    return arrows_.size() - 1;
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view label) const
{
    auto it = std::find(vertex_labels_.begin(), vertex_labels_.end(), label);
    if (it == vertex_labels_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - vertex_labels_.begin());
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view name) const
{
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].name == name)
            return a;
    return std::nullopt;
}

std::vector<std::size_t> Quiver::arrows_from(std::size_t v) const
{
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].source == v)
            out.push_back(a);
    return out;
}

Path Path::of_arrow(const Quiver& q, std::size_t arrow)
{
    const Arrow& a = q.arrow(arrow);
    return Path{a.source, a.target, {arrow}};
}

Path Path::of_arrows(const Quiver& q, std::vector<std::size_t> arrows)
{
    if (arrows.empty())
        throw Error(ErrorCode::invalid_argument, "empty arrow word");
    for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
        if (q.arrow(arrows[i]).target != q.arrow(arrows[i + 1]).source)
            throw Error(ErrorCode::non_composable_path,
                        "'" + q.arrow(arrows[i]).name + "' does not end where '" +
                            q.arrow(arrows[i + 1]).name + "' starts");
    }
    std::size_t s = q.arrow(arrows.front()).source;
    std::size_t t = q.arrow(arrows.back()).target;
    return Path{s, t, std::move(arrows)};
}

bool operator<(const Path& a, const Path& b)
{
    if (a.length() != b.length())
        return a.length() < b.length();
    if (a.is_trivial())
        return a.source < b.source;
    return a.arrows < b.arrows;
}

std::optional<Path> compose_paths(const Path& p, const Path& q)
{
    if (p.target != q.source)
        return std::nullopt;
    Path out{p.source, q.target, p.arrows};
    out.arrows.insert(out.arrows.end(), q.arrows.begin(), q.arrows.end());
    return out;
}

std::string path_to_string(const Quiver& q, const Path& p)
{
    if (p.is_trivial())
        return "e" + q.vertex_label(p.source);
    std::string out;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i > 0)
            out += '*';
        out += q.arrow(p.arrows[i]).name;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(std::string_view s)
{
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

bool is_identifier(std::string_view s)
{
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0])))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    });
}

[[noreturn]] void fail(ErrorCode code, std::size_t line, const std::string& msg)
{
    throw Error(code, "line " + std::to_string(line) + ": " + msg);
}

struct Directive {
    std::size_t line;
    std::string key;
    std::string body;
};

Path parse_path(const Quiver& q, std::string_view text, std::size_t line)
{
    std::vector<std::size_t> arrows;
    std::string_view rest = text;
    while (true) {
        auto star = rest.find('*');
        std::string name = trim(rest.substr(0, star));
        if (!is_identifier(name))
            fail(ErrorCode::parse_error, line, "bad arrow name '" + name + "'");
        auto a = q.find_arrow(name);
        if (!a)
            fail(ErrorCode::unknown_arrow, line, "unknown arrow '" + name + "'");
        arrows.push_back(*a);
        if (star == std::string_view::npos)
            break;
        rest = rest.substr(star + 1);
    }
    try {
        return Path::of_arrows(q, std::move(arrows));
    } catch (const Error& e) {
        fail(e.code(), line, e.what());
    }
}

FreeElement parse_relation(const Quiver& q, const Field& field, const std::string& body, std::size_t line)
{
    // Split into signed terms at top-level '+' / '-'.
    std::vector<std::pair<int, std::string>> terms;
    int sign = 1;
    std::string current;
    bool seen_content = false;
    for (char c : body) {
        if (c == '+' || c == '-') {
            if (seen_content) {
                terms.emplace_back(sign, current);
                current.clear();
                seen_content = false;
                sign = 1;
            }
            if (c == '-')
                sign = -sign;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(c)))
            seen_content = true;
        current += c;
    }
    if (!seen_content)
        fail(ErrorCode::parse_error, line, "empty relation term");
    terms.emplace_back(sign, current);

    FreeElement rel;
    for (auto& [s, raw] : terms) {
        std::string term = trim(raw);
        Rational coeff = 1;
        std::size_t i = 0;
        while (i < term.size() && (std::isdigit(static_cast<unsigned char>(term[i])) || term[i] == '/'))
            ++i;
        if (i > 0) {
            coeff = parse_rational(term.substr(0, i));
            std::string rest = trim(std::string_view(term).substr(i));
            if (!rest.empty() && rest.front() == '*')
                rest = trim(std::string_view(rest).substr(1));
            term = rest;
        }
        if (term.empty())
            fail(ErrorCode::parse_error, line, "relation term without a path");
        Path p = parse_path(q, term, line);
        rel[p] += s * coeff;
    }
    FreeElement out;
    for (auto& [p, c] : rel) {
        Rational r = field.reduce(c);
        if (r != 0)
            out.emplace(p, r);
    }
    return out;
}

} // namespace

void check_relations(AlgebraPresentation& p)
{
    p.monomial = true;
    for (const FreeElement& rel : p.relations) {
        if (rel.empty())
            continue;
        const Path& first = rel.begin()->first;
        for (const auto& [path, coeff] : rel) {
            if (path.length() < 2)
                throw Error(ErrorCode::not_admissible,
                            "relation term '" + path_to_string(p.quiver, path) + "' has length < 2");
            if (path.source != first.source || path.target != first.target)
                throw Error(ErrorCode::non_parallel_relation,
                            "relation terms '" + path_to_string(p.quiver, first) + "' and '" +
                                path_to_string(p.quiver, path) + "' are not parallel");
        }
        if (rel.size() > 1)
            p.monomial = false;
    }
}

AlgebraPresentation parse_presentation(std::string_view text, std::optional<Field> field_override)
{
    std::vector<Directive> directives;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
        if (line.empty())
            continue;
        std::size_t key_end = 0;
        while (key_end < line.size() && std::isalpha(static_cast<unsigned char>(line[key_end])))
            ++key_end;
        std::string key = line.substr(0, key_end);
        std::string body = trim(std::string_view(line).substr(key_end));
        if (key == "field" || key == "vertices" || key == "nilbound") {
            if (body.empty() || body.front() != ':')
                fail(ErrorCode::parse_error, line_no, "expected ':' after '" + key + "'");
            body = trim(std::string_view(body).substr(1));
        } else if (key != "arrow" && key != "relation") {
            fail(ErrorCode::parse_error, line_no, "unknown directive '" + line + "'");
        }
        directives.push_back({line_no, key, body});
    }

    AlgebraPresentation p;
    bool have_field = false, have_vertices = false;
    for (const auto& d : directives) {
        if (d.key == "field") {
            if (have_field)
                fail(ErrorCode::parse_error, d.line, "duplicate field line");
            have_field = true;
            auto toks = split_ws(d.body);
            if (toks.size() == 1 && toks[0] == "Q") {
                p.field = Field::rationals();
            } else if (!toks.empty() && toks[0].rfind("Fp", 0) == 0) {
                std::string digits = toks[0].size() > 2 ? toks[0].substr(2) : (toks.size() == 2 ? toks[1] : "");
                if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) ||
                    toks.size() > (toks[0].size() > 2 ? 1u : 2u))
                    fail(ErrorCode::parse_error, d.line, "expected 'Fp <prime>'");
                try {
                    p.field = Field::prime(std::stoull(digits));
                } catch (const Error& e) {
                    fail(ErrorCode::parse_error, d.line, e.what());
                } catch (const std::out_of_range&) {
                    fail(ErrorCode::parse_error, d.line, "characteristic out of range");
                }
            } else {
                fail(ErrorCode::parse_error, d.line, "expected 'Q' or 'Fp <prime>'");
            }
        } else if (d.key == "vertices") {
            if (have_vertices)
                fail(ErrorCode::parse_error, d.line, "duplicate vertices line");
            have_vertices = true;
            for (auto& label : split_ws(d.body)) {
                try {
                    p.quiver.add_vertex(label);
                } catch (const Error& e) {
                    fail(e.code(), d.line, e.what());
                }
            }
        } else if (d.key == "nilbound") {
            auto toks = split_ws(d.body);
            if (toks.size() != 1 || !std::all_of(toks[0].begin(), toks[0].end(), ::isdigit) || toks[0].size() > 6)
                fail(ErrorCode::parse_error, d.line, "nilbound must be a natural number");
            p.nilbound = std::stoul(toks[0]);
        }
    }
    if (!have_vertices)
        throw Error(ErrorCode::parse_error, "missing 'vertices:' line");
    if (field_override)
        p.field = *field_override;

    for (const auto& d : directives) {
        if (d.key != "arrow")
            continue;
        auto colon = d.body.find(':');
        auto arrow_pos = d.body.find("->");
        if (colon == std::string::npos || arrow_pos == std::string::npos || arrow_pos < colon)
            fail(ErrorCode::parse_error, d.line, "expected 'arrow <name>: <source> -> <target>'");
        std::string name = trim(std::string_view(d.body).substr(0, colon));
        std::string src = trim(std::string_view(d.body).substr(colon + 1, arrow_pos - colon - 1));
        std::string tgt = trim(std::string_view(d.body).substr(arrow_pos + 2));
        if (!is_identifier(name))
            fail(ErrorCode::parse_error, d.line, "bad arrow name '" + name + "'");
        auto s = p.quiver.find_vertex(src);
        auto t = p.quiver.find_vertex(tgt);
        if (!s || !t)
            fail(ErrorCode::parse_error, d.line, "arrow '" + name + "' has an undeclared endpoint");
        try {
            p.quiver.add_arrow(name, *s, *t);
        } catch (const Error& e) {
            fail(e.code(), d.line, e.what());
        }
    }

    for (const auto& d : directives) {
        if (d.key != "relation")
            continue;
        std::string_view rest = d.body;
        while (true) {
            auto comma = rest.find(',');
            FreeElement rel = parse_relation(p.quiver, p.field, std::string(rest.substr(0, comma)), d.line);
            if (!rel.empty())
                p.relations.push_back(std::move(rel));
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
    }
    check_relations(p);
    return p;
}

AlgebraPresentation load_presentation(const std::string& file, std::optional<Field> field_override)
{
    std::ifstream in(file);
    if (!in)
        throw Error(ErrorCode::parse_error, "cannot read '" + file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_presentation(buffer.str(), field_override);
}

std::string format_presentation(const AlgebraPresentation& p)
{
    std::ostringstream out;
    out << "field: " << p.field.name() << "\n";
    out << "vertices:";
    for (std::size_t v = 0; v < p.quiver.vertex_count(); ++v)
        out << ' ' << p.quiver.vertex_label(v);
    out << "\n";
    for (const Arrow& a : p.quiver.arrows())
        out << "arrow " << a.name << ": " << p.quiver.vertex_label(a.source) << " -> "
            << p.quiver.vertex_label(a.target) << "\n";
    for (const FreeElement& rel : p.relations) {
        out << "relation";
        bool first = true;
        for (const auto& [path, c] : rel) {
            Rational mag = abs(c);
            if (first)
                out << (c < 0 ? " -" : " ");
            else
                out << (c < 0 ? " - " : " + ");
            if (mag != 1)
                out << mag.get_str() << ' ';
            out << path_to_string(p.quiver, path);
            first = false;
        }
        out << "\n";
    }
    if (p.nilbound)
        out << "nilbound: " << *p.nilbound << "\n";
    return out.str();
}

std::string input_digest(std::string_view text)
{
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&](char c) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    };
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        auto toks = split_ws(std::string_view(raw).substr(0, raw.find('#')));
        if (toks.empty())
            continue;
        for (std::size_t i = 0; i < toks.size(); ++i) {
            if (i > 0)
                feed(' ');
            for (char c : toks[i])
                feed(c);
        }
        feed('\n');
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

} // namespace quiverhh
