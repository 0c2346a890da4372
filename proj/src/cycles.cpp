#include "quiverhh/cycles.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace quiverhh {

std::size_t least_rotation_offset(const std::vector<std::size_t>& word)
{
    const std::size_t n = word.size();
    if (n == 0)
        return 0;
    // Booth's algorithm over the doubled word.
    std::vector<std::size_t> s(word);
    s.insert(s.end(), word.begin(), word.end());
    std::vector<long> f(s.size(), -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < s.size(); ++j) {
        std::size_t sj = s[j];
        long i = f[j - k - 1];
        while (i != -1 && sj != s[k + i + 1]) {
            if (sj < s[k + i + 1])
                k = j - i - 1;
            i = f[i];
        }
        if (sj != s[k + i + 1]) { // i == -1
            if (sj < s[k])
                k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

std::vector<std::size_t> least_rotation(const std::vector<std::size_t>& word)
{
    std::size_t k = least_rotation_offset(word);
    std::vector<std::size_t> out(word.begin() + k, word.end());
    out.insert(out.end(), word.begin(), word.begin() + k);
    return out;
}

// ---------------------------------------------------------------------------

OrientedCycle::OrientedCycle(const Quiver& q, std::vector<std::size_t> arrows) : arrows_(std::move(arrows))
{
    if (arrows_.empty())
        throw Error(ErrorCode::endpoint_mismatch, "an oriented cycle needs at least one arrow");
    for (std::size_t a : arrows_) {
        if (a >= q.arrow_count())
            throw Error(ErrorCode::invalid_argument, "arrow index out of range");
        sources_.push_back(q.arrow(a).source);
        targets_.push_back(q.arrow(a).target);
    }
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        std::size_t next = (i + 1) % arrows_.size();
        if (targets_[i] != sources_[next])
            throw Error(ErrorCode::endpoint_mismatch,
                        "'" + q.arrow(arrows_[i]).name + "' does not end where '" +
                            q.arrow(arrows_[next]).name + "' starts");
    }
}

bool OrientedCycle::is_aperiodic() const
{
    const std::size_t n = arrows_.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0)
            continue;
        bool periodic = true;
        for (std::size_t i = 0; i < n && periodic; ++i)
            periodic = arrows_[i] == arrows_[(i + p) % n];
        if (periodic)
            return false;
    }
    return true;
}

OrientedCycle OrientedCycle::rotated(std::size_t k) const
{
    k %= arrows_.size();
    auto rot = [k](const std::vector<std::size_t>& v) {
        std::vector<std::size_t> out(v.begin() + k, v.end());
        out.insert(out.end(), v.begin(), v.begin() + k);
        return out;
    };
    return OrientedCycle(rot(arrows_), rot(sources_), rot(targets_));
}

OrientedCycle OrientedCycle::repeated(std::size_t times) const
{
    std::vector<std::size_t> a, s, t;
    for (std::size_t r = 0; r < times; ++r) {
        a.insert(a.end(), arrows_.begin(), arrows_.end());
        s.insert(s.end(), sources_.begin(), sources_.end());
        t.insert(t.end(), targets_.begin(), targets_.end());
    }
    if (a.empty())
        throw Error(ErrorCode::invalid_argument, "repetition count must be positive");
    return OrientedCycle(std::move(a), std::move(s), std::move(t));
}

Path OrientedCycle::window(std::size_t i, std::size_t len) const
{
    const std::size_t l = arrows_.size();
    i %= l;
    if (len == 0)
        return Path::trivial(sources_[i]);
    Path p{sources_[i], targets_[(i + len - 1) % l], {}};
    for (std::size_t k = 0; k < len; ++k)
        p.arrows.push_back(arrows_[(i + k) % l]);
    return p;
}

std::string OrientedCycle::to_string(const Quiver& q) const
{
    std::string out = "(";
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        if (i > 0)
            out += ",";
        out += q.arrow(arrows_[i]).name;
    }
    return out + ")";
}

// ---------------------------------------------------------------------------

TruncationCheck is_m_truncated(const OrientedCycle& cycle, std::size_t m, const Algebra& a)
{
    if (m < 2)
        throw Error(ErrorCode::invalid_argument, "truncation order m must be at least 2");
    for (std::size_t arrow : cycle.arrows())
        if (arrow >= a.quiver().arrow_count())
            throw Error(ErrorCode::invalid_argument, "cycle uses an arrow outside the quiver");
    TruncationCheck check;
    check.truncated = true;
    for (std::size_t i = 0; i < cycle.length(); ++i) {
        Path zero = cycle.window(i, m);
        Path nonzero = cycle.window(i, m - 1);
        if (check.truncated && !a.is_zero(zero)) {
            check.truncated = false;
            check.failing_window = zero;
        }
        if (check.truncated && a.is_zero(nonzero)) {
            check.truncated = false;
            check.failing_window = nonzero;
        }
        check.zero_windows.push_back(std::move(zero));
        check.nonzero_windows.push_back(std::move(nonzero));
    }
    return check;
}

std::size_t WindowGraph::edge_count() const
{
    std::size_t n = 0;
    for (const auto& out : adjacency)
        n += out.size();
    return n;
}

WindowGraph build_window_graph(const Algebra& a, std::size_t m)
{
    if (m < 2)
        throw Error(ErrorCode::invalid_argument, "truncation order m must be at least 2");
    const Quiver& q = a.quiver();
    WindowGraph g;
    g.m = m;

    // Nonzero words of length m-1; zero words have no nonzero extensions.
    std::vector<Path> level;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        level.push_back(Path::trivial(v));
    for (std::size_t len = 1; len < m && !level.empty(); ++len) {
        std::vector<Path> next;
        for (const Path& p : level)
            for (std::size_t c : q.arrows_from(p.target)) {
                Path ext = *compose_paths(p, Path::of_arrow(q, c));
                if (!a.is_zero(ext))
                    next.push_back(std::move(ext));
            }
        level = std::move(next);
    }
    g.nodes = std::move(level);

    std::map<std::vector<std::size_t>, std::size_t> node_of;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        node_of.emplace(g.nodes[i].arrows, i);
    g.adjacency.resize(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const Path& w = g.nodes[i];
        for (std::size_t c : q.arrows_from(w.target)) {
            Path word = *compose_paths(w, Path::of_arrow(q, c));
            if (!a.is_zero(word))
                continue;
            std::vector<std::size_t> shifted(word.arrows.begin() + 1, word.arrows.end());
            auto it = node_of.find(shifted);
            if (it != node_of.end())
                g.adjacency[i].emplace_back(it->second, c);
        }
        std::sort(g.adjacency[i].begin(), g.adjacency[i].end());
    }
    return g;
}

std::size_t default_max_length(const Algebra& a, std::size_t m)
{
    if (m == 2)
        return 2 * a.quiver().arrow_count();
    return 2 * build_window_graph(a, m).nodes.size();
}

namespace {

/// Elementary cycles of length <= max_len, each reported once, starting from
/// its smallest node. Nodes are pruned when they cannot return to the start
/// within the remaining budget.
std::vector<std::vector<std::size_t>> elementary_cycles(const WindowGraph& g, std::size_t max_len)
{
    const std::size_t n = g.nodes.size();
    constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();
    std::vector<std::vector<std::size_t>> reverse(n);
    for (std::size_t u = 0; u < n; ++u)
        for (const auto& [v, c] : g.adjacency[u])
            reverse[v].push_back(u);

    std::vector<std::vector<std::size_t>> cycles;
    std::vector<std::size_t> dist(n);
    std::vector<bool> on_stack(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        // Distance to `start` inside the subgraph of nodes >= start.
        std::fill(dist.begin(), dist.end(), unreachable);
        dist[start] = 0;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t u : reverse[v])
                if (u > start && dist[u] == unreachable) {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
        }

        std::vector<std::size_t> path{start};
        std::vector<std::size_t> next_edge{0};
        on_stack[start] = true;
        while (!path.empty()) {
            std::size_t u = path.back();
            std::size_t& e = next_edge.back();
            if (e == g.adjacency[u].size()) {
                on_stack[u] = false;
                path.pop_back();
                next_edge.pop_back();
                continue;
            }
            std::size_t v = g.adjacency[u][e++].first;
            std::size_t depth = path.size(); // edges used after taking u -> v
            if (v == start) {
                if (depth <= max_len)
                    cycles.push_back(path);
                continue;
            }
            if (v < start || on_stack[v] || dist[v] == unreachable || depth + dist[v] > max_len)
                continue;
            on_stack[v] = true;
            path.push_back(v);
            next_edge.push_back(0);
        }
    }
    return cycles;
}

/// The cycle's arrow word: the first arrow of each window along the walk.
std::vector<std::size_t> arrow_word(const WindowGraph& g, const std::vector<std::size_t>& node_cycle)
{
    std::vector<std::size_t> word;
    for (std::size_t node : node_cycle)
        word.push_back(g.nodes[node].arrows.front());
    return word;
}

} // namespace

std::vector<TruncationWitness> find_truncated_cycles(const Algebra& a, std::size_t m,
                                                     std::optional<std::size_t> max_len)
{
    WindowGraph g = build_window_graph(a, m);
    std::size_t bound = max_len ? *max_len : (m == 2 ? 2 * a.quiver().arrow_count() : 2 * g.nodes.size());

    std::set<std::pair<std::size_t, std::vector<std::size_t>>> seen;
    for (const auto& node_cycle : elementary_cycles(g, bound))
        seen.emplace(node_cycle.size(), least_rotation(arrow_word(g, node_cycle)));

    std::vector<TruncationWitness> out;
    for (const auto& [len, word] : seen) {
        OrientedCycle cycle(a.quiver(), word);
        TruncationCheck check = is_m_truncated(cycle, m, a);
        if (!check.truncated)
            throw Error(ErrorCode::invalid_witness, "window graph produced an invalid cycle " +
                                                        cycle.to_string(a.quiver()));
        out.push_back(TruncationWitness{std::move(cycle), m, std::move(check.zero_windows),
                                        std::move(check.nonzero_windows)});
    }
    return out;
}

std::optional<OrientedCycle> minimal_two_truncated(const Algebra& a)
{
    WindowGraph g = build_window_graph(a, 2);
    const std::size_t n = g.nodes.size();
    constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();
    std::size_t girth = unreachable;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> dist(n, unreachable);
        std::deque<std::size_t> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (const auto& [v, c] : g.adjacency[u]) {
                if (v == s)
                    girth = std::min(girth, dist[u] + 1);
                if (dist[v] == unreachable) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    if (girth == unreachable)
        return std::nullopt;
    std::optional<std::vector<std::size_t>> best;
    for (const auto& node_cycle : elementary_cycles(g, girth)) {
        if (node_cycle.size() != girth)
            continue;
        auto word = least_rotation(arrow_word(g, node_cycle));
        if (!best || word < *best)
            best = std::move(word);
    }
    return OrientedCycle(a.quiver(), *best);
}

} // namespace quiverhh
