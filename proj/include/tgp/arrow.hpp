#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tgp/errors.hpp"

namespace tgp {

// An arrow presentation: circles (vertex boundaries) carrying directed,
// labelled arrows, exactly two per edge label. Sign +1 means the arrow points
// along the listed traversal direction of its circle, -1 against it.
//
// Circles may additionally carry named zero-width marks; these are inert
// passengers used internally to follow distinguished boundary points through
// surgeries. Parsed presentations never contain marks.
struct Arrow {
    std::string edge;
    int sign;  // +1 or -1
    bool operator==(const Arrow&) const = default;
};

struct Mark {
    std::string name;
    bool operator==(const Mark&) const = default;
};

using Token = std::variant<Arrow, Mark>;
using Circle = std::vector<Token>;

inline bool is_arrow(const Token& t) { return std::holds_alternative<Arrow>(t); }
inline const Arrow& as_arrow(const Token& t) { return std::get<Arrow>(t); }
inline const Mark& as_mark(const Token& t) { return std::get<Mark>(t); }

// Position of one arrow occurrence.
struct ArrowOcc {
    int circle;
    int pos;
    int sign;
};

class ArrowPresentation {
public:
    ArrowPresentation() = default;
    explicit ArrowPresentation(std::vector<Circle> circles);

    // Arrow-format text: Circle := '(' Token* ')', Token := LABEL('+'|'-'),
    // whitespace-separated; each LABEL appears exactly twice overall.
    static ArrowPresentation parse(const std::string& text);

    const std::vector<Circle>& circles() const { return circles_; }
    int vertex_count() const { return static_cast<int>(circles_.size()); }
    int edge_count() const { return static_cast<int>(labels_.size()); }
    // Sorted unique edge labels.
    const std::vector<std::string>& edge_labels() const { return labels_; }
    bool has_edge(const std::string& label) const;
    bool has_marks() const;

    // The two occurrences of `label` in scan order (circle-major).
    std::pair<ArrowOcc, ArrowOcc> occurrences(const std::string& label) const;

    std::string str() const;

    // Equality of presentations up to cyclic rotation of circles and circle
    // reordering (a safe subset of the full equivalence).
    bool operator==(const ArrowPresentation& o) const;

private:
    void index_labels();

    std::vector<Circle> circles_;
    std::vector<std::string> labels_;
};

struct RibbonInvariants {
    int v = 0;
    int e = 0;
    int c = 0;
    int f = 0;
    int r = 0;       // rank v - c
    int n = 0;       // nullity e - r
    int gamma = 0;   // Euler genus 2c - v + e - f
    bool orientable = true;
    bool operator==(const RibbonInvariants&) const = default;
};

// One closed boundary curve of the ribbon surface of the spanning subgraph
// (V, keep). Endpoint count is over kept arrows only; marks are listed in
// traversal order (cyclic, direction arbitrary).
struct BoundaryWalk {
    int endpoints = 0;
    std::vector<std::string> marks;
};

std::vector<BoundaryWalk> boundary_components(const ArrowPresentation& ap,
                                              const std::set<std::string>& keep);
int boundary_component_count(const ArrowPresentation& ap, const std::set<std::string>& keep);

bool is_orientable(const ArrowPresentation& ap);

RibbonInvariants invariants(const ArrowPresentation& ap);

struct MultiEdge {
    std::string label;
    int u;
    int v;
};

struct Multigraph {
    int n = 0;  // vertices 0..n-1
    std::vector<MultiEdge> edges;
};

Multigraph underlying_graph(const ArrowPresentation& ap);

int component_count(const Multigraph& g);
bool is_bipartite(const Multigraph& g);
bool is_connected(const Multigraph& g);

// Faces 2-colourable, i.e. the face-adjacency multigraph is bipartite.
bool is_checkerboard_colourable(const ArrowPresentation& ap);

}  // namespace tgp
