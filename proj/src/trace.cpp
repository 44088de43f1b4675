#include "tgp/trace.hpp"

#include <algorithm>

namespace tgp {

Tracer::Tracer(const ArrowPresentation& ap) {
    labels_ = ap.edge_labels();
    n_edges_ = static_cast<int>(labels_.size());
    auto edge_index = [&](const std::string& label) {
        return static_cast<int>(std::lower_bound(labels_.begin(), labels_.end(), label) - labels_.begin());
    };

    free_partner_.assign(static_cast<std::size_t>(4 * n_edges_), -1);
    free_arc_of_.assign(static_cast<std::size_t>(4 * n_edges_), -1);
    std::vector<int> occurrence_seen(static_cast<std::size_t>(n_edges_), 0);

    for (const auto& circle : ap.circles()) {
        struct OccInfo {
            int first_ep;   // endpoint met first along the circle
            int second_ep;  // endpoint met second
        };
        std::vector<OccInfo> occs;
        std::vector<std::vector<std::string>> gaps;  // gaps[i]: marks after arrow i (cyclic)
        std::vector<std::string> before_first;
        for (const auto& tok : circle) {
            if (is_arrow(tok)) {
                const Arrow& a = as_arrow(tok);
                int ei = edge_index(a.edge);
                int occ = occurrence_seen[static_cast<std::size_t>(ei)]++;
                int tail = tail_id(ei, occ);
                int head = head_id(ei, occ);
                occs.push_back({a.sign > 0 ? tail : head, a.sign > 0 ? head : tail});
                gaps.emplace_back();
            } else if (occs.empty()) {
                before_first.push_back(as_mark(tok).name);
            } else {
                gaps.back().push_back(as_mark(tok).name);
            }
        }
        if (occs.empty()) {
            bare_marks_.push_back(std::move(before_first));
            continue;
        }
        // Marks preceding the first arrow belong to the wrap-around gap.
        gaps.back().insert(gaps.back().end(), before_first.begin(), before_first.end());
        for (std::size_t i = 0; i < occs.size(); ++i) {
            std::size_t j = (i + 1) % occs.size();
            FreeArc arc;
            arc.from = occs[i].second_ep;
            arc.to = occs[j].first_ep;
            arc.marks = std::move(gaps[i]);
            int idx = static_cast<int>(arcs_.size());
            free_partner_[static_cast<std::size_t>(arc.from)] = arc.to;
            free_partner_[static_cast<std::size_t>(arc.to)] = arc.from;
            free_arc_of_[static_cast<std::size_t>(arc.from)] = idx;
            free_arc_of_[static_cast<std::size_t>(arc.to)] = idx;
            arcs_.push_back(std::move(arc));
        }
    }
}

void Tracer::side_pairs(const std::vector<Transition>& per_edge, std::vector<int>& side) const {
    side.assign(static_cast<std::size_t>(4 * n_edges_), -1);
    for (int ei = 0; ei < n_edges_; ++ei) {
        int t1 = tail_id(ei, 0), h1 = head_id(ei, 0);
        int t2 = tail_id(ei, 1), h2 = head_id(ei, 1);
        int a, b, c, d;
        switch (per_edge[static_cast<std::size_t>(ei)]) {
            case Transition::White: a = h1, b = t2, c = h2, d = t1; break;
            case Transition::Black: a = t1, b = h1, c = t2, d = h2; break;
            case Transition::Crossing: a = h1, b = h2, c = t1, d = t2; break;
        }
        side[static_cast<std::size_t>(a)] = b;
        side[static_cast<std::size_t>(b)] = a;
        side[static_cast<std::size_t>(c)] = d;
        side[static_cast<std::size_t>(d)] = c;
    }
}

int Tracer::count_cycles(const std::vector<Transition>& per_edge) const {
    std::vector<int> side;
    side_pairs(per_edge, side);
    std::vector<bool> visited(static_cast<std::size_t>(4 * n_edges_), false);
    int cycles = bare_circle_count();
    for (int start = 0; start < 4 * n_edges_; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        ++cycles;
        int cur = start;
        bool via_free = true;  // next hop uses the free link
        while (true) {
            visited[static_cast<std::size_t>(cur)] = true;
            int next = via_free ? free_partner_[static_cast<std::size_t>(cur)]
                                : side[static_cast<std::size_t>(cur)];
            via_free = !via_free;
            if (next == start && via_free) break;
            cur = next;
        }
    }
    return cycles;
}

Tracer::WalkSet Tracer::walks(const std::vector<Transition>& per_edge) const {
    std::vector<int> side;
    side_pairs(per_edge, side);
    WalkSet out;
    out.edge_walks.assign(static_cast<std::size_t>(n_edges_), {-1, -1});
    std::vector<bool> visited(static_cast<std::size_t>(4 * n_edges_), false);
    for (int start = 0; start < 4 * n_edges_; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        int walk_id = static_cast<int>(out.walks.size());
        Walk walk;
        int cur = start;
        bool via_free = true;
        while (true) {
            visited[static_cast<std::size_t>(cur)] = true;
            walk.endpoint_ids.push_back(cur);
            int next;
            if (via_free) {
                const FreeArc& arc = arcs_[static_cast<std::size_t>(free_arc_of_[static_cast<std::size_t>(cur)])];
                if (cur == arc.from) {
                    walk.marks.insert(walk.marks.end(), arc.marks.begin(), arc.marks.end());
                } else {
                    walk.marks.insert(walk.marks.end(), arc.marks.rbegin(), arc.marks.rend());
                }
                next = free_partner_[static_cast<std::size_t>(cur)];
            } else {
                int edge = cur / 4;
                auto& ew = out.edge_walks[static_cast<std::size_t>(edge)];
                if (ew[0] < 0)
                    ew[0] = walk_id;
                else if (ew[1] < 0)
                    ew[1] = walk_id;
                next = side[static_cast<std::size_t>(cur)];
            }
            via_free = !via_free;
            if (next == start && via_free) break;
            cur = next;
        }
        out.walks.push_back(std::move(walk));
    }
    for (const auto& marks : bare_marks_) {
        Walk walk;
        walk.marks = marks;
        out.walks.push_back(std::move(walk));
    }
    return out;
}

}  // namespace tgp
