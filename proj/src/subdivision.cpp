#include "tdc/subdivision.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tdc {

SubdivisionPoint parse_point(const AugmentedMetricGraph& g, std::string_view text, char sep) {
    const auto at = text.rfind(sep);
    if (at == std::string_view::npos)
        throw std::invalid_argument("expected <edge>" + std::string(1, sep) + "<t>, got '" + std::string(text) + "'");
    SubdivisionPoint p;
    p.edge = g.edge_index(text.substr(0, at));
    p.t = parse_rational(text.substr(at + 1));
    if (sgn(p.t) <= 0 || p.t >= 1)
        throw std::invalid_argument("point parameter must satisfy 0 < t < 1, got '" + std::string(text) + "'");
    return p;
}

Subdivision::Ptr Subdivision::create(const AugmentedMetricGraph& g, std::vector<SubdivisionPoint> points) {
    return create(std::make_shared<const AugmentedMetricGraph>(g), std::move(points));
}

Subdivision::Ptr Subdivision::create(std::shared_ptr<const AugmentedMetricGraph> g, std::vector<SubdivisionPoint> points) {
    // a two-integer mpq_class is not reduced, and unreduced values compare unequal
    for (auto& p : points) p.t.canonicalize();
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::shared_ptr<Subdivision> s(new Subdivision());
    s->graph_ = std::move(g);
    const auto& graph = *s->graph_;

    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        s->nodes_.push_back(Node{graph.vertices()[v].id, v, std::nullopt});
    }
    for (const auto& p : points) {
        if (p.edge >= graph.edge_count()) throw std::invalid_argument("subdivision point on unknown edge");
        if (sgn(p.t) <= 0 || p.t >= 1) throw std::invalid_argument("subdivision point must be interior (0 < t < 1)");
        s->point_index_.emplace(p, s->nodes_.size());
        s->nodes_.push_back(Node{graph.edges()[p.edge].id + "@" + to_string(p.t), std::nullopt, p});
    }

    s->edge_segments_.resize(graph.edge_count());
    auto next_point = points.begin();
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        const Edge& edge = graph.edges()[e];
        std::size_t prev_node = edge.tail;
        Rational prev_t = 0;
        std::size_t piece = 0;
        auto add_segment = [&](std::size_t to_node, const Rational& to_t) {
            Segment seg;
            seg.name = edge.id + "#" + std::to_string(piece++);
            seg.edge = e;
            seg.t0 = prev_t;
            seg.t1 = to_t;
            seg.tail = prev_node;
            seg.head = to_node;
            seg.length = edge.length * (to_t - prev_t);
            s->edge_segments_[e].push_back(s->segments_.size());
            s->segments_.push_back(std::move(seg));
            prev_node = to_node;
            prev_t = to_t;
        };
        for (; next_point != points.end() && next_point->edge == e; ++next_point) {
            add_segment(s->point_index_.at(*next_point), next_point->t);
        }
        add_segment(edge.head, Rational(1));
    }

    s->incidences_.resize(s->nodes_.size());
    for (std::size_t i = 0; i < s->segments_.size(); ++i) {
        s->incidences_[s->segments_[i].tail].push_back({i, +1});
        s->incidences_[s->segments_[i].head].push_back({i, -1});
    }
    return s;
}

std::vector<SubdivisionPoint> Subdivision::points() const {
    std::vector<SubdivisionPoint> out;
    for (const auto& [p, _] : point_index_) out.push_back(p);
    return out;
}

std::optional<std::size_t> Subdivision::find_point(const SubdivisionPoint& p) const {
    auto it = point_index_.find(p);
    if (it == point_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Subdivision::find_node(std::string_view name) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].name == name) return i;
    return std::nullopt;
}

std::size_t Subdivision::node_at(std::string_view address) const {
    if (auto v = graph_->find_vertex(address)) return *v;
    if (address.find('@') != std::string_view::npos) {
        const SubdivisionPoint p = parse_point(*graph_, address, '@');
        if (auto n = find_point(p)) return *n;
        throw std::invalid_argument("'" + std::string(address) + "' is not a node of this subdivision");
    }
    throw std::invalid_argument("unknown node '" + std::string(address) + "'");
}

std::size_t Subdivision::segment_containing(std::size_t edge, const Rational& t) const {
    for (std::size_t s : edge_segments_.at(edge)) {
        if (segments_[s].t0 < t && t < segments_[s].t1) return s;
    }
    throw std::invalid_argument("no segment contains the parameter (it is a node)");
}

Subdivision::Ptr Subdivision::refined(const std::vector<SubdivisionPoint>& extra) const {
    auto all = points();
    all.insert(all.end(), extra.begin(), extra.end());
    return create(graph_, std::move(all));
}

AugmentedMetricGraph Subdivision::as_graph() const {
    // segment names contain '#', which is reserved in edge ids
    std::set<std::string> used;
    auto fresh = [&](std::string id) {
        std::replace(id.begin(), id.end(), '#', '.');
        while (!used.insert(id).second) id += '\'';
        return id;
    };
    std::vector<Vertex> vertices = graph_->vertices();
    for (const auto& v : vertices) used.insert(v.id);
    for (std::size_t n = graph_->vertex_count(); n < nodes_.size(); ++n)
        vertices.push_back(Vertex{fresh(nodes_[n].name), 0, 0});
    std::vector<Edge> edges;
    for (const auto& seg : segments_) edges.push_back(Edge{fresh(seg.name), seg.tail, seg.head, seg.length});
    return AugmentedMetricGraph(std::move(vertices), std::move(edges));
}

bool Subdivision::same_graph(const Subdivision& other) const {
    return graph_ == other.graph_ || *graph_ == *other.graph_;
}

Subdivision::Ptr subdivide(const AugmentedMetricGraph& g, const std::vector<SubdivisionPoint>& points) {
    return Subdivision::create(g, points);
}

Subdivision::Ptr common_refinement(const Subdivision::Ptr& a, const Subdivision::Ptr& b) {
    if (!a->same_graph(*b)) throw std::invalid_argument("subdivisions of different graphs");
    auto pb = b->points();
    auto pa = a->points();
    if (std::includes(pa.begin(), pa.end(), pb.begin(), pb.end())) return a;
    return a->refined(pb);
}

}  // namespace tdc
