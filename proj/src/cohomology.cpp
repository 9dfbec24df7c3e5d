#include "tdc/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdc {

std::string_view to_string(Support s) { return s == Support::Full ? "full" : "compact"; }

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::size_t endpoint(const Segment& s, int side) { return side == 0 ? s.tail : s.head; }

std::size_t index_in(const std::vector<std::size_t>& cells, std::size_t x) {
    auto it = std::lower_bound(cells.begin(), cells.end(), x);
    return it != cells.end() && *it == x ? static_cast<std::size_t>(it - cells.begin()) : npos;
}

}  // namespace

CochainComplex::CochainComplex(const Scope& scope, int p, Support support)
    : scope_(support == Support::Compact ? scope.collared() : scope), p_(p), support_(support) {
    if (p != 0 && p != 1) throw DegreeError("p must be 0 or 1");
    const Subdivision& sub = scope_.subdivision();

    if (support_ == Support::Full) {
        segments_ = scope_.segment_list();
        nodes_ = scope_.node_list();
        if (p_ == 0) ends_ = scope_.ends();
    } else {
        const auto collar_seg = scope_.collar_segments();
        const auto collar_node = scope_.collar_nodes();
        for (std::size_t s : scope_.segment_list())
            if (!collar_seg[s]) segments_.push_back(s);
        for (std::size_t n : scope_.node_list())
            if (p_ == 1 || !collar_node[n]) nodes_.push_back(n);
    }

    if (p_ == 0) {
        d_ = linalg::Matrix(segments_.size(), nodes_.size() + ends_.size());
        for (std::size_t i = 0; i < segments_.size(); ++i) {
            const Segment& seg = sub.segments()[segments_[i]];
            const Rational w = 1 / seg.length;
            for (int side = 0; side < 2; ++side) {
                const std::size_t n = endpoint(seg, side);
                std::size_t col = scope_.has_node(n) ? slot_of_node(n) : slot_of_end({segments_[i], side});
                if (col == npos) continue;  // collar node in the compact model: value 0
                d_(i, col) += side == 0 ? -w : w;
            }
        }
    } else {
        d_ = linalg::Matrix(nodes_.size(), segments_.size());
        for (std::size_t j = 0; j < segments_.size(); ++j) {
            const Segment& seg = sub.segments()[segments_[j]];
            if (scope_.has_node(seg.tail)) d_(slot_of_atom(seg.tail), j) += 1;
            if (scope_.has_node(seg.head)) d_(slot_of_atom(seg.head), j) -= 1;
        }
    }
}

std::size_t CochainComplex::slot_of_node(std::size_t n) const { return index_in(nodes_, n); }

std::size_t CochainComplex::slot_of_end(const End& e) const {
    auto it = std::find(ends_.begin(), ends_.end(), e);
    return it == ends_.end() ? npos : nodes_.size() + static_cast<std::size_t>(it - ends_.begin());
}

std::size_t CochainComplex::slot_of_segment(std::size_t s) const { return index_in(segments_, s); }

std::size_t CochainComplex::slot_of_atom(std::size_t n) const { return index_in(nodes_, n); }

Form CochainComplex::form(int degree, const linalg::Vector& x) const {
    if (x.size() != dim(degree)) throw std::invalid_argument("cochain has the wrong length");
    const Subdivision& sub = scope_.subdivision();
    std::vector<Poly> segs(sub.segment_count());
    std::vector<Rational> nodes(sub.node_count());

    if (p_ == 0 && degree == 0) {
        for (std::size_t i = 0; i < nodes_.size(); ++i) nodes[nodes_[i]] = x[i];
        for (std::size_t s : scope_.segment_list()) {
            if (support_ == Support::Compact && slot_of_segment(s) == npos) continue;
            const Segment& seg = sub.segments()[s];
            Rational value[2];
            for (int side = 0; side < 2; ++side) {
                const std::size_t n = endpoint(seg, side);
                if (scope_.has_node(n)) {
                    value[side] = nodes[n];
                } else if (std::size_t slot = slot_of_end({s, side}); slot != npos) {
                    value[side] = x[slot];
                }
            }
            segs[s] = Poly::linear(value[0], value[1]);
        }
        return Form(scope_, {0, 0}, std::move(segs), std::move(nodes));
    }
    if (p_ == 1 && degree == 1) {
        for (std::size_t i = 0; i < nodes_.size(); ++i) nodes[nodes_[i]] = x[i];
        return Form(scope_, {1, 1}, std::move(segs), std::move(nodes));
    }
    for (std::size_t i = 0; i < segments_.size(); ++i) segs[segments_[i]] = Poly::constant(x[i]);
    return Form(scope_, {p_, degree}, std::move(segs), std::move(nodes));
}

linalg::Matrix CochainComplex::restriction(const CochainComplex& smaller, int degree) const {
    if (support_ != Support::Full || smaller.support_ != Support::Full)
        throw std::invalid_argument("restriction is defined between full-support complexes");
    if (p_ != smaller.p_) throw std::invalid_argument("restriction between different p");
    if (scope_.subdivision_ptr() != smaller.scope_.subdivision_ptr())
        throw std::invalid_argument("regions are not on a common subdivision");
    if (!(scope_.intersect(smaller.scope_) == smaller.scope_)) throw std::invalid_argument("restriction to a scope that is not a subset");

    const Subdivision& sub = scope_.subdivision();
    linalg::Matrix r(smaller.dim(degree), dim(degree));
    const bool segment_cells = (p_ == 0) == (degree == 1);
    if (segment_cells) {
        for (std::size_t i = 0; i < smaller.segments_.size(); ++i) r(i, slot_of_segment(smaller.segments_[i])) = 1;
        return r;
    }
    for (std::size_t i = 0; i < smaller.nodes_.size(); ++i) r(i, slot_of_node(smaller.nodes_[i])) = 1;
    for (std::size_t i = 0; i < smaller.ends_.size(); ++i) {
        const End& e = smaller.ends_[i];
        const std::size_t n = endpoint(sub.segments()[e.segment], e.side);
        const std::size_t col = scope_.has_node(n) ? slot_of_node(n) : slot_of_end(e);
        r(smaller.nodes_.size() + i, col) = 1;
    }
    return r;
}

std::vector<std::string> CochainComplex::cell_names(int degree) const {
    const Subdivision& sub = scope_.subdivision();
    std::vector<std::string> out;
    const bool segment_cells = (p_ == 0) == (degree == 1);
    if (segment_cells) {
        for (std::size_t s : segments_) out.push_back(sub.segments()[s].name);
        return out;
    }
    for (std::size_t n : nodes_) out.push_back(sub.nodes()[n].name);
    for (const End& e : ends_) out.push_back(sub.segments()[e.segment].name + (e.side == 0 ? "<" : ">"));
    return out;
}

CohomologyBasis::CohomologyBasis(CochainComplex complex, int q) : complex_(std::move(complex)), q_(q) {
    if (q != 0 && q != 1) throw DegreeError("q must be 0 or 1");
    if (q_ == 0) {
        kernel_ = linalg::kernel(complex_.d());
        cochains_ = kernel_.basis;
    } else {
        cokernel_.emplace(complex_.d());
        for (std::size_t i : cokernel_->complement()) {
            linalg::Vector e(complex_.dim(1));
            e[i] = 1;
            cochains_.push_back(std::move(e));
        }
    }
}

std::vector<Form> CohomologyBasis::representatives() const {
    std::vector<Form> out;
    for (const auto& c : cochains_) out.push_back(complex_.form(q_, c));
    return out;
}

linalg::Vector CohomologyBasis::coordinates(const linalg::Vector& cocycle) const {
    if (q_ == 0) {
        if (!linalg::is_zero(complex_.d() * cocycle)) throw std::invalid_argument("cochain is not a cocycle");
        return kernel_.coordinates(cocycle);
    }
    return cokernel_->coordinates(cocycle);
}

bool CohomologyBasis::is_trivial(const linalg::Vector& cocycle) const {
    if (q_ == 0) return linalg::is_zero(cocycle);
    return cokernel_->contains_image(cocycle);
}

bool CohomologyBasis::verify() const {
    const auto& d = complex_.d();
    if (cochains_.empty()) return true;
    if (q_ == 0) {
        for (const auto& c : cochains_)
            if (!linalg::is_zero(d * c)) return false;
        return linalg::rank(linalg::Matrix::from_columns(d.cols(), cochains_)) == cochains_.size();
    }
    const auto reps = linalg::Matrix::from_columns(d.rows(), cochains_);
    return linalg::rank(linalg::Matrix::hstack(d, reps)) == linalg::rank(d) + cochains_.size();
}

CohomologyBasis cohomology(const Scope& scope, int p, int q, Support support) {
    return CohomologyBasis(CochainComplex(scope, p, support), q);
}

linalg::Matrix induced_map(const CohomologyBasis& from, const CohomologyBasis& to, const linalg::Matrix& map) {
    linalg::Matrix m(to.dimension(), from.dimension());
    for (std::size_t j = 0; j < from.dimension(); ++j) {
        const auto image = to.coordinates(map * from.cochains()[j]);
        for (std::size_t i = 0; i < image.size(); ++i) m(i, j) = image[i];
    }
    return m;
}

CellularHodge cellular_hodge(const Scope& scope) {
    CellularHodge h;
    for (int support = 0; support < 2; ++support) {
        auto& table = support == 0 ? h.full : h.compact;
        for (int p = 0; p < 2; ++p) {
            const CochainComplex c(scope, p, support == 0 ? Support::Full : Support::Compact);
            const std::size_t r = linalg::rank(c.d());
            table[2 * p] = c.dim(0) - r;
            table[2 * p + 1] = c.dim(1) - r;
        }
    }
    return h;
}

}  // namespace tdc
