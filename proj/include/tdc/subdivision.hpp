#pragma once

#include "tdc/graph.hpp"
#include "tdc/rational.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tdc {

/// A point strictly inside an edge, at fraction t of the way from its tail.
struct SubdivisionPoint {
    std::size_t edge = 0;
    Rational t;

    friend bool operator==(const SubdivisionPoint&, const SubdivisionPoint&) = default;
    friend bool operator<(const SubdivisionPoint& a, const SubdivisionPoint& b) {
        return a.edge != b.edge ? a.edge < b.edge : a.t < b.t;
    }
};

/// Parses `<edge><sep><t>` with 0 < t < 1, e.g. `e1:1/3` (sep ':') or
/// `e1@1/3` (sep '@').
SubdivisionPoint parse_point(const AugmentedMetricGraph& g, std::string_view text, char sep);

struct Node {
    std::string name;                      // vertex id, or `edge@t`
    std::optional<std::size_t> vertex;     // set for original vertices
    std::optional<SubdivisionPoint> point; // set for subdivision points
};

/// Piece of an edge between consecutive nodes, oriented like the edge.
struct Segment {
    std::string name;  // `edge#k`, k-th piece from the tail
    std::size_t edge = 0;
    Rational t0, t1;   // fractional positions along the edge
    std::size_t tail = 0;
    std::size_t head = 0;
    Rational length;
};

/// One end of a segment at a node. `sign` is +1 at the tail (the segment
/// leaves the node in its own direction) and -1 at the head.
struct Incidence {
    std::size_t segment;
    int sign;
};

/// Cell structure of a metric graph refined at finitely many interior
/// points. Nodes 0..V-1 are the original vertices; point nodes follow in
/// (edge, t) order. Immutable; shared via shared_ptr<const Subdivision>.
class Subdivision {
public:
    using Ptr = std::shared_ptr<const Subdivision>;

    static Ptr create(const AugmentedMetricGraph& g, std::vector<SubdivisionPoint> points = {});
    static Ptr create(std::shared_ptr<const AugmentedMetricGraph> g, std::vector<SubdivisionPoint> points = {});

    const AugmentedMetricGraph& graph() const { return *graph_; }
    const std::shared_ptr<const AugmentedMetricGraph>& graph_ptr() const { return graph_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Segment>& segments() const { return segments_; }
    const std::vector<Incidence>& incidences(std::size_t node) const { return incidences_.at(node); }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t segment_count() const { return segments_.size(); }

    /// All subdivision points, sorted.
    std::vector<SubdivisionPoint> points() const;

    std::optional<std::size_t> find_point(const SubdivisionPoint& p) const;
    std::optional<std::size_t> find_node(std::string_view name) const;
    /// Node addressed as a vertex id or `edge@t`; throws std::invalid_argument
    /// if it is not a node of this subdivision.
    std::size_t node_at(std::string_view address) const;
    /// Segment of `edge` whose open interval contains t.
    std::size_t segment_containing(std::size_t edge, const Rational& t) const;

    /// Same graph, refined at the extra points as well.
    Ptr refined(const std::vector<SubdivisionPoint>& extra) const;

    /// The subdivided graph: one genus-0 vertex per point, one edge per segment.
    AugmentedMetricGraph as_graph() const;

    /// Whether both subdivide the same graph (compared by value).
    bool same_graph(const Subdivision& other) const;

private:
    Subdivision() = default;

    std::shared_ptr<const AugmentedMetricGraph> graph_;
    std::vector<Node> nodes_;
    std::vector<Segment> segments_;
    std::vector<std::vector<Incidence>> incidences_;
    std::map<SubdivisionPoint, std::size_t> point_index_;
    std::vector<std::vector<std::size_t>> edge_segments_;  // per edge, in t order
};

/// Convenience: subdivide g at the points (coincident points collapse).
Subdivision::Ptr subdivide(const AugmentedMetricGraph& g, const std::vector<SubdivisionPoint>& points);

/// Smallest subdivision refining both.
Subdivision::Ptr common_refinement(const Subdivision::Ptr& a, const Subdivision::Ptr& b);

}  // namespace tdc
