#include "tgp/arrow.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tgp/trace.hpp"

namespace tgp {

ArrowPresentation::ArrowPresentation(std::vector<Circle> circles) : circles_(std::move(circles)) {
    index_labels();
}

void ArrowPresentation::index_labels() {
    std::map<std::string, int> counts;
    std::map<std::string, int> mark_counts;
    for (const auto& circle : circles_) {
        for (const auto& tok : circle) {
            if (is_arrow(tok)) {
                const Arrow& a = as_arrow(tok);
                if (a.sign != 1 && a.sign != -1)
                    throw MalformedPresentation("arrow sign must be +1 or -1: " + a.edge);
                ++counts[a.edge];
            } else {
                ++mark_counts[as_mark(tok).name];
            }
        }
    }
    labels_.clear();
    for (const auto& [label, count] : counts) {
        if (count != 2)
            throw MalformedPresentation("label '" + label + "' occurs " + std::to_string(count) +
                                        " times, expected exactly 2");
        labels_.push_back(label);
    }
    for (const auto& [name, count] : mark_counts) {
        if (count != 1) throw MalformedPresentation("mark '" + name + "' occurs more than once");
    }
}

ArrowPresentation ArrowPresentation::parse(const std::string& text) {
    std::vector<Circle> circles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '('", i);
        ++i;
        Circle circle;
        while (true) {
            skip_ws();
            if (i >= text.size()) throw ParseError("unterminated circle", i);
            if (text[i] == ')') {
                ++i;
                break;
            }
            std::size_t start = i;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            if (i == start) throw ParseError("expected edge label", i);
            std::string label = text.substr(start, i - start);
            if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
                throw ParseError("expected sign '+' or '-' after label '" + label + "'", i);
            int sign = (text[i] == '+') ? 1 : -1;
            ++i;
            circle.push_back(Arrow{label, sign});
        }
        circles.push_back(std::move(circle));
        skip_ws();
    }
    return ArrowPresentation(std::move(circles));
}

bool ArrowPresentation::has_edge(const std::string& label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool ArrowPresentation::has_marks() const {
    for (const auto& circle : circles_)
        for (const auto& tok : circle)
            if (!is_arrow(tok)) return true;
    return false;
}

std::pair<ArrowOcc, ArrowOcc> ArrowPresentation::occurrences(const std::string& label) const {
    if (!has_edge(label)) throw UnknownEdge(label);
    std::vector<ArrowOcc> found;
    for (int ci = 0; ci < static_cast<int>(circles_.size()); ++ci) {
        const Circle& circle = circles_[static_cast<std::size_t>(ci)];
        for (int pi = 0; pi < static_cast<int>(circle.size()); ++pi) {
            const Token& tok = circle[static_cast<std::size_t>(pi)];
            if (is_arrow(tok) && as_arrow(tok).edge == label)
                found.push_back(ArrowOcc{ci, pi, as_arrow(tok).sign});
        }
    }
    return {found[0], found[1]};
}

std::string ArrowPresentation::str() const {
    std::ostringstream out;
    for (const auto& circle : circles_) {
        out << "(";
        bool first = true;
        for (const auto& tok : circle) {
            if (!first) out << " ";
            first = false;
            if (is_arrow(tok)) {
                const Arrow& a = as_arrow(tok);
                out << a.edge << (a.sign > 0 ? '+' : '-');
            } else {
                out << "[" << as_mark(tok).name << "]";
            }
        }
        out << ")";
    }
    return out.str();
}

namespace {

using TokenKey = std::tuple<int, std::string, int>;

TokenKey token_key(const Token& tok) {
    if (is_arrow(tok)) return {0, as_arrow(tok).edge, as_arrow(tok).sign};
    return {1, as_mark(tok).name, 0};
}

std::vector<TokenKey> min_rotation(const Circle& circle) {
    std::vector<TokenKey> keys;
    keys.reserve(circle.size());
    for (const auto& tok : circle) keys.push_back(token_key(tok));
    if (keys.empty()) return keys;
    std::vector<TokenKey> best = keys;
    std::vector<TokenKey> rot = keys;
    for (std::size_t i = 1; i < keys.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

}  // namespace

bool ArrowPresentation::operator==(const ArrowPresentation& o) const {
    if (circles_.size() != o.circles_.size()) return false;
    std::vector<std::vector<TokenKey>> lhs, rhs;
    for (const auto& c : circles_) lhs.push_back(min_rotation(c));
    for (const auto& c : o.circles_) rhs.push_back(min_rotation(c));
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
}

std::vector<BoundaryWalk> boundary_components(const ArrowPresentation& ap,
                                              const std::set<std::string>& keep) {
    for (const auto& label : keep)
        if (!ap.has_edge(label)) throw UnknownEdge(label);
    Tracer tracer(ap);
    const auto& labels = tracer.edge_labels();
    std::vector<Transition> per_edge(labels.size());
    std::vector<bool> kept(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        kept[i] = keep.count(labels[i]) > 0;
        per_edge[i] = kept[i] ? Transition::White : Transition::Black;
    }
    auto walk_set = tracer.walks(per_edge);
    std::vector<BoundaryWalk> out;
    for (const auto& walk : walk_set.walks) {
        BoundaryWalk bw;
        bw.marks = walk.marks;
        for (int ep : walk.endpoint_ids)
            if (kept[static_cast<std::size_t>(ep / 4)]) ++bw.endpoints;
        out.push_back(std::move(bw));
    }
    return out;
}

int boundary_component_count(const ArrowPresentation& ap, const std::set<std::string>& keep) {
    for (const auto& label : keep)
        if (!ap.has_edge(label)) throw UnknownEdge(label);
    Tracer tracer(ap);
    const auto& labels = tracer.edge_labels();
    std::vector<Transition> per_edge(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        per_edge[i] = keep.count(labels[i]) ? Transition::White : Transition::Black;
    return tracer.count_cycles(per_edge);
}

bool is_orientable(const ArrowPresentation& ap) {
    // Orientable iff the circles can be co-oriented so that every edge is
    // twist-free: arrows with equal signs need equally oriented circles.
    int n = ap.vertex_count();
    std::vector<int> colour(static_cast<std::size_t>(n), 0);  // 0 unset, +1/-1 chosen
    struct Constraint {
        int other;
        int relation;  // +1 same, -1 opposite
    };
    std::vector<std::vector<Constraint>> adj(static_cast<std::size_t>(n));
    for (const auto& label : ap.edge_labels()) {
        auto [a, b] = ap.occurrences(label);
        int rel = a.sign * b.sign;
        if (a.circle == b.circle) {
            if (rel < 0) return false;
            continue;
        }
        adj[static_cast<std::size_t>(a.circle)].push_back({b.circle, rel});
        adj[static_cast<std::size_t>(b.circle)].push_back({a.circle, rel});
    }
    for (int start = 0; start < n; ++start) {
        if (colour[static_cast<std::size_t>(start)] != 0) continue;
        colour[static_cast<std::size_t>(start)] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& [w, rel] : adj[static_cast<std::size_t>(u)]) {
                int want = colour[static_cast<std::size_t>(u)] * rel;
                int& cw = colour[static_cast<std::size_t>(w)];
                if (cw == 0) {
                    cw = want;
                    stack.push_back(w);
                } else if (cw != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

Multigraph underlying_graph(const ArrowPresentation& ap) {
    Multigraph g;
    g.n = ap.vertex_count();
    for (const auto& label : ap.edge_labels()) {
        auto [a, b] = ap.occurrences(label);
        g.edges.push_back({label, a.circle, b.circle});
    }
    return g;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

int component_count(const Multigraph& g) {
    UnionFind uf(g.n);
    for (const auto& e : g.edges) uf.unite(e.u, e.v);
    int c = 0;
    for (int i = 0; i < g.n; ++i)
        if (uf.find(i) == i) ++c;
    return c;
}

bool is_connected(const Multigraph& g) { return component_count(g) <= 1; }

bool is_bipartite(const Multigraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (const auto& e : g.edges) {
        if (e.u == e.v) return false;
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<int> colour(static_cast<std::size_t>(g.n), 0);
    for (int start = 0; start < g.n; ++start) {
        if (colour[static_cast<std::size_t>(start)] != 0) continue;
        colour[static_cast<std::size_t>(start)] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (colour[static_cast<std::size_t>(w)] == 0) {
                    colour[static_cast<std::size_t>(w)] = -colour[static_cast<std::size_t>(u)];
                    stack.push_back(w);
                } else if (colour[static_cast<std::size_t>(w)] == colour[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

RibbonInvariants invariants(const ArrowPresentation& ap) {
    RibbonInvariants inv;
    inv.v = ap.vertex_count();
    inv.e = ap.edge_count();
    inv.c = component_count(underlying_graph(ap));
    std::set<std::string> all(ap.edge_labels().begin(), ap.edge_labels().end());
    inv.f = boundary_component_count(ap, all);
    inv.r = inv.v - inv.c;
    inv.n = inv.e - inv.r;
    inv.gamma = 2 * inv.c - inv.v + inv.e - inv.f;
    inv.orientable = is_orientable(ap);
    return inv;
}

bool is_checkerboard_colourable(const ArrowPresentation& ap) {
    // Face-adjacency multigraph: one vertex per boundary walk with every edge
    // kept; each edge of the graph joins the walks its two sides lie on.
    Tracer tracer(ap);
    std::vector<Transition> per_edge(static_cast<std::size_t>(tracer.edge_count()), Transition::White);
    auto walk_set = tracer.walks(per_edge);
    Multigraph faces;
    faces.n = static_cast<int>(walk_set.walks.size());
    for (std::size_t i = 0; i < walk_set.edge_walks.size(); ++i) {
        const auto& sides = walk_set.edge_walks[i];
        faces.edges.push_back({tracer.edge_labels()[i], sides[0], sides[1]});
    }
    return is_bipartite(faces);
}

}  // namespace tgp
