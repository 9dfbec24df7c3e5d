#include "tdc/region.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace tdc {

namespace {

std::size_t endpoint(const Segment& s, int side) { return side == 0 ? s.tail : s.head; }

}  // namespace

Scope::Scope(Subdivision::Ptr sub, std::vector<bool> nodes, std::vector<bool> segments)
    : sub_(std::move(sub)), nodes_(std::move(nodes)), segments_(std::move(segments)) {
    if (nodes_.size() != sub_->node_count() || segments_.size() != sub_->segment_count())
        throw std::invalid_argument("scope masks do not match the subdivision");
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
        if (!nodes_[n]) continue;
        for (const auto& inc : sub_->incidences(n))
            if (!segments_[inc.segment]) throw std::invalid_argument("scope is not open at node " + sub_->nodes()[n].name);
    }
}

Scope Scope::whole(Subdivision::Ptr sub) {
    std::vector<bool> n(sub->node_count(), true), s(sub->segment_count(), true);
    return Scope(std::move(sub), std::move(n), std::move(s));
}

std::vector<std::size_t> Scope::node_list() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i]) out.push_back(i);
    return out;
}

std::vector<std::size_t> Scope::segment_list() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < segments_.size(); ++i)
        if (segments_[i]) out.push_back(i);
    return out;
}

bool Scope::empty() const {
    return std::none_of(nodes_.begin(), nodes_.end(), [](bool b) { return b; }) &&
           std::none_of(segments_.begin(), segments_.end(), [](bool b) { return b; });
}

std::vector<End> Scope::ends() const {
    std::vector<End> out;
    for (std::size_t s = 0; s < segments_.size(); ++s) {
        if (!segments_[s]) continue;
        const Segment& seg = sub_->segments()[s];
        for (int side = 0; side < 2; ++side)
            if (!nodes_[endpoint(seg, side)]) out.push_back({s, side});
    }
    return out;
}

std::vector<bool> Scope::collar_segments() const {
    std::vector<bool> out(segments_.size(), false);
    for (const auto& e : ends()) out[e.segment] = true;
    return out;
}

std::vector<bool> Scope::collar_nodes() const {
    std::vector<bool> out(nodes_.size(), false);
    const auto collar = collar_segments();
    for (std::size_t s = 0; s < collar.size(); ++s) {
        if (!collar[s]) continue;
        const Segment& seg = sub_->segments()[s];
        if (nodes_[seg.tail]) out[seg.tail] = true;
        if (nodes_[seg.head]) out[seg.head] = true;
    }
    return out;
}

std::vector<Scope> Scope::components() const {
    std::vector<Scope> out;
    std::vector<bool> seen_node(nodes_.size(), false), seen_seg(segments_.size(), false);
    auto flood = [&](std::vector<bool>& cn, std::vector<bool>& cs, std::deque<std::size_t> queue) {
        while (!queue.empty()) {
            std::size_t n = queue.front();
            queue.pop_front();
            for (const auto& inc : sub_->incidences(n)) {
                if (seen_seg[inc.segment]) continue;
                seen_seg[inc.segment] = cs[inc.segment] = true;
                const Segment& seg = sub_->segments()[inc.segment];
                for (std::size_t m : {seg.tail, seg.head}) {
                    if (nodes_[m] && !seen_node[m]) {
                        seen_node[m] = cn[m] = true;
                        queue.push_back(m);
                    }
                }
            }
        }
    };
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
        if (!nodes_[n] || seen_node[n]) continue;
        std::vector<bool> cn(nodes_.size(), false), cs(segments_.size(), false);
        seen_node[n] = cn[n] = true;
        flood(cn, cs, {n});
        out.emplace_back(sub_, std::move(cn), std::move(cs));
    }
    for (std::size_t s = 0; s < segments_.size(); ++s) {
        if (!segments_[s] || seen_seg[s]) continue;
        // open interval with both endpoints outside
        std::vector<bool> cn(nodes_.size(), false), cs(segments_.size(), false);
        seen_seg[s] = cs[s] = true;
        out.emplace_back(sub_, std::move(cn), std::move(cs));
    }
    return out;
}

std::size_t Scope::cycle_rank() const {
    const std::size_t cells = segment_list().size() + components().size();
    const std::size_t points = node_list().size() + end_count();
    return cells - points;
}

Scope Scope::intersect(const Scope& other) const {
    if (sub_ != other.sub_) throw std::invalid_argument("scopes live on different subdivisions");
    std::vector<bool> n(nodes_.size()), s(segments_.size());
    for (std::size_t i = 0; i < n.size(); ++i) n[i] = nodes_[i] && other.nodes_[i];
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = segments_[i] && other.segments_[i];
    return Scope(sub_, std::move(n), std::move(s));
}

Scope Scope::unite(const Scope& other) const {
    if (sub_ != other.sub_) throw std::invalid_argument("scopes live on different subdivisions");
    std::vector<bool> n(nodes_.size()), s(segments_.size());
    for (std::size_t i = 0; i < n.size(); ++i) n[i] = nodes_[i] || other.nodes_[i];
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = segments_[i] || other.segments_[i];
    return Scope(sub_, std::move(n), std::move(s));
}

Scope Scope::refined_to(const Subdivision::Ptr& finer) const {
    if (finer == sub_) return *this;
    if (!sub_->same_graph(*finer)) throw std::invalid_argument("refinement of a different graph");
    std::vector<bool> n(finer->node_count()), s(finer->segment_count());
    for (std::size_t i = 0; i < finer->node_count(); ++i) {
        const Node& node = finer->nodes()[i];
        if (node.vertex) {
            n[i] = nodes_[*node.vertex];
        } else if (auto coarse = sub_->find_point(*node.point)) {
            n[i] = nodes_[*coarse];
        } else {
            n[i] = segments_[sub_->segment_containing(node.point->edge, node.point->t)];
        }
    }
    for (std::size_t i = 0; i < finer->segment_count(); ++i) {
        const Segment& seg = finer->segments()[i];
        const Rational mid = (seg.t0 + seg.t1) / 2;
        s[i] = segments_[sub_->segment_containing(seg.edge, mid)];
    }
    return Scope(finer, std::move(n), std::move(s));
}

namespace {

// The collar condition for a leg with exactly one outside endpoint.
bool leg_is_collared(const Scope& scope, const std::vector<bool>& collar, std::size_t s, int inner_side) {
    const Subdivision& sub = scope.subdivision();
    const std::size_t inner = endpoint(sub.segments()[s], inner_side);
    if (sub.nodes()[inner].vertex) return false;
    const auto& inc = sub.incidences(inner);
    if (inc.size() != 2) return false;
    const std::size_t other = inc[0].segment == s ? inc[1].segment : inc[0].segment;
    return other != s && !collar[other];
}

}  // namespace

bool Scope::is_collared() const {
    const auto collar = collar_segments();
    for (std::size_t s = 0; s < segments_.size(); ++s) {
        if (!collar[s]) continue;
        const Segment& seg = sub_->segments()[s];
        const bool tail_in = nodes_[seg.tail], head_in = nodes_[seg.head];
        if (!tail_in && !head_in) return false;
        if (!leg_is_collared(*this, collar, s, tail_in ? 0 : 1)) return false;
    }
    return true;
}

Scope Scope::collared() const {
    const auto collar = collar_segments();
    std::vector<SubdivisionPoint> extra;
    for (std::size_t s = 0; s < segments_.size(); ++s) {
        if (!collar[s]) continue;
        const Segment& seg = sub_->segments()[s];
        const bool tail_in = nodes_[seg.tail], head_in = nodes_[seg.head];
        const Rational span = seg.t1 - seg.t0;
        if (!tail_in && !head_in) {
            extra.push_back({seg.edge, seg.t0 + span / 3});
            extra.push_back({seg.edge, seg.t0 + 2 * span / 3});
        } else if (!leg_is_collared(*this, collar, s, tail_in ? 0 : 1)) {
            extra.push_back({seg.edge, seg.t0 + span / 2});
        }
    }
    if (extra.empty()) return *this;
    return refined_to(sub_->refined(extra));
}

bool operator==(const Scope& a, const Scope& b) {
    return (a.sub_ == b.sub_) && a.nodes_ == b.nodes_ && a.segments_ == b.segments_;
}

Region extract_region(const AugmentedMetricGraph& g, std::string_view seed, const std::vector<SubdivisionPoint>& cuts) {
    const std::size_t v = g.vertex_index(seed);
    return extract_region(Subdivision::create(g, cuts), v, cuts);
}

Region extract_region(const Subdivision::Ptr& sub, std::size_t seed, const std::vector<SubdivisionPoint>& cuts) {
    if (seed >= sub->graph().vertex_count()) throw std::invalid_argument("seed is not a vertex");
    std::vector<bool> is_cut(sub->node_count(), false);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (cuts[i] == cuts[j]) throw std::invalid_argument("duplicate cut point");
        auto n = sub->find_point(cuts[i]);
        if (!n) throw std::invalid_argument("cut point is not a node of the subdivision");
        is_cut[*n] = true;
    }
    if (is_cut[seed]) throw std::invalid_argument("seed lies on a cut point");

    std::vector<bool> nodes(sub->node_count(), false), segments(sub->segment_count(), false);
    std::deque<std::size_t> queue{seed};
    nodes[seed] = true;
    while (!queue.empty()) {
        const std::size_t n = queue.front();
        queue.pop_front();
        for (const auto& inc : sub->incidences(n)) {
            segments[inc.segment] = true;
            const Segment& seg = sub->segments()[inc.segment];
            for (std::size_t m : {seg.tail, seg.head}) {
                if (!is_cut[m] && !nodes[m]) {
                    nodes[m] = true;
                    queue.push_back(m);
                }
            }
        }
    }

    Region r{Scope(sub, std::move(nodes), std::move(segments)), seed, cuts, 0, false};
    if (r.scope.empty()) throw std::invalid_argument("region is empty");
    r.boundary_count = r.scope.end_count();
    r.strictly_simple = r.boundary_count >= 1 && r.scope.cycle_rank() == 0;
    return r;
}

RegionSpec parse_region_spec(const AugmentedMetricGraph& g, std::string_view text) {
    RegionSpec spec;
    std::size_t i = 0;
    bool have_seed = false;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) break;
        const std::string_view token = text.substr(i, j - i);
        i = j;
        if (token.starts_with("seed=")) {
            if (have_seed) throw std::invalid_argument("region spec has two seeds");
            spec.seed = std::string(token.substr(5));
            g.vertex_index(spec.seed);
            have_seed = true;
        } else if (token.starts_with("cut=")) {
            spec.cuts.push_back(parse_point(g, token.substr(4), ':'));
        } else {
            throw std::invalid_argument("unexpected region token '" + std::string(token) + "'");
        }
    }
    if (!have_seed) throw std::invalid_argument("region spec needs seed=<vertex>");
    return spec;
}

}  // namespace tdc
