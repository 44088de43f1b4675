#pragma once

#include <array>
#include <string>
#include <vector>

#include "tgp/arrow.hpp"

namespace tgp {

// Medial vertex state at one edge: how the four arrow endpoints pair up.
// White keeps the edge as attached, Black erases it (the walk runs along the
// vertex boundary), Crossing is the half-twisted attachment.
enum class Transition { White, Black, Crossing };

// Endpoint/free-arc incidence structure of a presentation, built once and
// traversed per state. Endpoint ids: 4*edge_index + k with k = 0 tail/1 head
// of the first occurrence, 2 tail/3 head of the second (occurrence order =
// scan order; edge_index over sorted labels).
class Tracer {
public:
    explicit Tracer(const ArrowPresentation& ap);

    int edge_count() const { return n_edges_; }
    const std::vector<std::string>& edge_labels() const { return labels_; }
    int bare_circle_count() const { return static_cast<int>(bare_marks_.size()); }
    const std::vector<std::vector<std::string>>& bare_circle_marks() const { return bare_marks_; }

    struct FreeArc {
        int from;  // endpoint id the circle leaves
        int to;    // endpoint id it next reaches
        std::vector<std::string> marks;
    };
    const std::vector<FreeArc>& free_arcs() const { return arcs_; }

    // Number of closed curves of the state, bare circles included.
    int count_cycles(const std::vector<Transition>& per_edge) const;

    struct Walk {
        std::vector<int> endpoint_ids;  // in traversal order
        std::vector<std::string> marks;
    };
    struct WalkSet {
        std::vector<Walk> walks;                     // bare-circle walks last
        std::vector<std::array<int, 2>> edge_walks;  // per edge: walk ids over its two side links
    };
    WalkSet walks(const std::vector<Transition>& per_edge) const;

    static int tail_id(int edge_index, int occurrence) { return 4 * edge_index + 2 * occurrence; }
    static int head_id(int edge_index, int occurrence) { return 4 * edge_index + 2 * occurrence + 1; }

private:
    void side_pairs(const std::vector<Transition>& per_edge, std::vector<int>& side) const;

    int n_edges_ = 0;
    std::vector<std::string> labels_;
    std::vector<FreeArc> arcs_;
    std::vector<int> free_partner_;   // endpoint -> endpoint across its free arc
    std::vector<int> free_arc_of_;    // endpoint -> arc index
    std::vector<std::vector<std::string>> bare_marks_;
};

}  // namespace tgp
