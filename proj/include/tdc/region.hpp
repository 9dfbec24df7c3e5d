#pragma once

#include "tdc/subdivision.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tdc {

/// Open end of a scope: segment `segment` belongs to the scope but its
/// endpoint on `side` (0 = tail, 1 = head) does not.
struct End {
    std::size_t segment;
    int side;
    friend bool operator==(const End&, const End&) = default;
};

/// Open subset of a subdivided graph made of whole cells: a set of nodes and
/// open segments such that every segment at a member node is a member.
/// Segments with an endpoint outside the scope are legs; each such endpoint
/// is an End. Scopes need not be connected.
class Scope {
public:
    Scope(Subdivision::Ptr sub, std::vector<bool> nodes, std::vector<bool> segments);
    static Scope whole(Subdivision::Ptr sub);

    const Subdivision& subdivision() const { return *sub_; }
    const Subdivision::Ptr& subdivision_ptr() const { return sub_; }

    bool has_node(std::size_t n) const { return nodes_.at(n); }
    bool has_segment(std::size_t s) const { return segments_.at(s); }
    std::vector<std::size_t> node_list() const;
    std::vector<std::size_t> segment_list() const;
    bool empty() const;

    std::vector<End> ends() const;
    std::size_t end_count() const { return ends().size(); }
    /// No open ends: a union of components of the graph.
    bool is_compact() const { return ends().empty(); }

    /// Whether the original vertex v lies in the scope.
    bool has_vertex(std::size_t v) const { return nodes_.at(v); }

    /// Segments with an endpoint outside the scope.
    std::vector<bool> collar_segments() const;
    /// Member nodes incident to a collar segment.
    std::vector<bool> collar_nodes() const;

    std::vector<Scope> components() const;
    /// First Betti number of the scope with every end kept distinct.
    std::size_t cycle_rank() const;

    Scope intersect(const Scope& other) const;
    Scope unite(const Scope& other) const;

    /// The same open set described on a finer subdivision of the same graph.
    Scope refined_to(const Subdivision::Ptr& finer) const;

    /// Refines so that every leg ends in a collar: the outer segment of each
    /// leg is followed by a degree-2 subdivision node whose other segment
    /// has both endpoints inside. Returns *this when that already holds.
    Scope collared() const;
    bool is_collared() const;

    friend bool operator==(const Scope& a, const Scope& b);

private:
    Subdivision::Ptr sub_;
    std::vector<bool> nodes_;
    std::vector<bool> segments_;
};

/// Connected open sub-star grown from a vertex and cut at interior points.
struct Region {
    Scope scope;
    std::size_t seed = 0;  // vertex index
    std::vector<SubdivisionPoint> cuts;
    std::size_t boundary_count = 0;  // k: number of leg ends
    bool strictly_simple = false;
};

/// The component of (graph minus cut points) containing the seed vertex, on
/// the subdivision at the cut points.
Region extract_region(const AugmentedMetricGraph& g, std::string_view seed, const std::vector<SubdivisionPoint>& cuts);

/// Same, on a given subdivision that already contains every cut point.
Region extract_region(const Subdivision::Ptr& sub, std::size_t seed, const std::vector<SubdivisionPoint>& cuts);

/// Region syntax: `seed=v1 cut=e1:1/3 cut=e2:1/2`.
struct RegionSpec {
    std::string seed;
    std::vector<SubdivisionPoint> cuts;
};
RegionSpec parse_region_spec(const AugmentedMetricGraph& g, std::string_view text);

}  // namespace tdc
