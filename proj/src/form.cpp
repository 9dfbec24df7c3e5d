#include "tdc/form.hpp"

#include <sstream>

namespace tdc {

Poly::Poly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::linear(const Rational& a, const Rational& b) { return Poly({a, b - a}); }

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Poly::operator()(const Rational& u) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return Poly(std::move(d));
}

Rational Poly::integral() const {
    Rational s = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) s += c_[i] / static_cast<long>(i + 1);
    return s;
}

Poly Poly::reparametrized(const Rational& offset, const Rational& scale) const {
    const Poly inner({offset, scale});
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> c = p.c_;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    if (c_.size() == 1) return tdc::to_string(c_[0]);
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        if (!out.empty()) out += " + ";
        out += tdc::to_string(c_[i]);
        if (i == 1) out += "*u";
        if (i > 1) out += "*u^" + std::to_string(i);
    }
    return out;
}

namespace {

bool is_degree_one(Bidegree d) { return d.p + d.q == 1; }

void check_bidegree(Bidegree d) {
    if (d.p < 0 || d.q < 0 || d.p > 1 || d.q > 1) throw DegreeError("bidegree " + d.to_string() + " out of range on a curve");
}

}  // namespace

Form::Form(Scope scope, Bidegree deg, std::vector<Poly> segments, std::vector<Rational> nodes)
    : scope_(std::move(scope)), deg_(deg), segments_(std::move(segments)), nodes_(std::move(nodes)) {
    check_bidegree(deg_);
    const Subdivision& sub = scope_.subdivision();
    if (segments_.size() != sub.segment_count() || nodes_.size() != sub.node_count())
        throw std::invalid_argument("form data does not match the subdivision");
    for (std::size_t s = 0; s < segments_.size(); ++s)
        if (!scope_.has_segment(s) && !segments_[s].is_zero()) throw std::invalid_argument("form data outside its scope");
    for (std::size_t n = 0; n < nodes_.size(); ++n)
        if (!scope_.has_node(n) && sgn(nodes_[n]) != 0) throw std::invalid_argument("form data outside its scope");
    if (is_degree_one(deg_))
        for (const auto& x : nodes_)
            if (sgn(x) != 0) throw std::invalid_argument("degree-one forms carry no node data");
    if (deg_ == Bidegree{0, 0}) {
        for (std::size_t s = 0; s < segments_.size(); ++s) {
            if (!scope_.has_segment(s)) continue;
            const Segment& seg = sub.segments()[s];
            if ((scope_.has_node(seg.tail) && segments_[s](0) != nodes_[seg.tail]) ||
                (scope_.has_node(seg.head) && segments_[s](1) != nodes_[seg.head]))
                throw std::invalid_argument("(0,0)-form is discontinuous at a node of segment " + seg.name);
        }
    }
}

Form Form::zero(const Scope& scope, Bidegree deg) {
    const Subdivision& sub = scope.subdivision();
    return Form(scope, deg, std::vector<Poly>(sub.segment_count()), std::vector<Rational>(sub.node_count()));
}

Form Form::function(const PLFunction& f) {
    const Subdivision& sub = f.subdivision();
    std::vector<Poly> segs;
    for (const auto& s : sub.segments()) segs.push_back(Poly::linear(f.value(s.tail), f.value(s.head)));
    return Form(Scope::whole(f.subdivision_ptr()), {0, 0}, std::move(segs), f.values());
}

Form Form::measure(const DiscreteMeasure& mu) {
    const Subdivision& sub = mu.subdivision();
    return Form(Scope::whole(mu.subdivision_ptr()), {1, 1}, std::vector<Poly>(sub.segment_count()), mu.dense());
}

Poly Form::on_segment(std::size_t s, int sign) const {
    const Poly& p = segments_.at(s);
    if (sign > 0) return p;
    const Poly reversed = p.reparametrized(1, -1);
    return is_degree_one(deg_) ? Rational(-1) * reversed : reversed;
}

bool Form::is_zero() const {
    for (const auto& p : segments_)
        if (!p.is_zero()) return false;
    for (const auto& x : nodes_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Form::is_compactly_supported() const {
    const auto collar = scope_.collar_segments();
    for (std::size_t s = 0; s < segments_.size(); ++s)
        if (collar[s] && !segments_[s].is_zero()) return false;
    return true;
}

Form Form::refined_to(const Subdivision::Ptr& finer) const {
    if (finer == scope_.subdivision_ptr()) return *this;
    const Subdivision& coarse = scope_.subdivision();
    Scope scope = scope_.refined_to(finer);
    std::vector<Poly> segs(finer->segment_count());
    for (std::size_t i = 0; i < finer->segment_count(); ++i) {
        const Segment& fs = finer->segments()[i];
        const std::size_t c = coarse.segment_containing(fs.edge, (fs.t0 + fs.t1) / 2);
        const Segment& cs = coarse.segments()[c];
        const Rational span = cs.t1 - cs.t0;
        segs[i] = segments_[c].reparametrized((fs.t0 - cs.t0) / span, (fs.t1 - fs.t0) / span);
    }
    std::vector<Rational> nodes(finer->node_count());
    for (std::size_t i = 0; i < finer->node_count(); ++i) {
        const Node& node = finer->nodes()[i];
        std::optional<std::size_t> same = node.vertex ? node.vertex : coarse.find_point(*node.point);
        if (same) {
            nodes[i] = nodes_[*same];
        } else if (deg_ == Bidegree{0, 0} && scope.has_node(i)) {
            const std::size_t c = coarse.segment_containing(node.point->edge, node.point->t);
            const Segment& cs = coarse.segments()[c];
            nodes[i] = segments_[c]((node.point->t - cs.t0) / (cs.t1 - cs.t0));
        }
    }
    return Form(std::move(scope), deg_, std::move(segs), std::move(nodes));
}

Form operator+(const Form& a, const Form& b) {
    if (!(a.scope_ == b.scope_)) throw std::invalid_argument("sum of forms on different scopes");
    if (a.deg_ != b.deg_) throw DegreeError("sum of forms of different bidegrees");
    std::vector<Poly> segs(a.segments_.size());
    for (std::size_t i = 0; i < segs.size(); ++i) segs[i] = a.segments_[i] + b.segments_[i];
    std::vector<Rational> nodes(a.nodes_.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = a.nodes_[i] + b.nodes_[i];
    return Form(a.scope_, a.deg_, std::move(segs), std::move(nodes));
}

Form operator*(const Rational& s, const Form& f) {
    std::vector<Poly> segs;
    for (const auto& p : f.segments_) segs.push_back(s * p);
    std::vector<Rational> nodes;
    for (const auto& x : f.nodes_) nodes.push_back(s * x);
    return Form(f.scope_, f.deg_, std::move(segs), std::move(nodes));
}

bool operator==(const Form& a, const Form& b) {
    return a.scope_ == b.scope_ && a.deg_ == b.deg_ && a.segments_ == b.segments_ && a.nodes_ == b.nodes_;
}

std::string Form::to_text() const {
    const Subdivision& sub = scope_.subdivision();
    std::ostringstream out;
    out << "form " << deg_.to_string() << '\n';
    for (std::size_t s : scope_.segment_list()) {
        const Segment& seg = sub.segments()[s];
        out << "orientation " << seg.name << ' ' << sub.nodes()[seg.tail].name << "->" << sub.nodes()[seg.head].name << '\n';
    }
    for (std::size_t s : scope_.segment_list())
        if (!segments_[s].is_zero()) out << sub.segments()[s].name << '=' << segments_[s].to_string() << '\n';
    for (std::size_t n : scope_.node_list())
        if (sgn(nodes_[n]) != 0) out << sub.nodes()[n].name << '=' << to_string(nodes_[n]) << '\n';
    return out.str();
}

namespace {

// d'' on (0,0) and d' on (0,0) share their data; only the bidegree differs.
Form derivative_of_function(const Form& f, Bidegree target) {
    const Subdivision& sub = f.scope().subdivision();
    std::vector<Poly> segs(sub.segment_count());
    for (std::size_t s : f.scope().segment_list())
        segs[s] = Rational(1) / sub.segments()[s].length * f.on_segment(s).derivative();
    return Form(f.scope(), target, std::move(segs), std::vector<Rational>(sub.node_count()));
}

// Boundary-balancing operator on degree-one data: atoms collect outgoing
// coefficients, the density is the arclength derivative.
Form divergence(const Form& w) {
    const Scope& scope = w.scope();
    const Subdivision& sub = scope.subdivision();
    std::vector<Poly> segs(sub.segment_count());
    std::vector<Rational> nodes(sub.node_count());
    for (std::size_t s : scope.segment_list()) {
        const Segment& seg = sub.segments()[s];
        const Poly& a = w.on_segment(s);
        segs[s] = Rational(1) / seg.length * a.derivative();
        if (scope.has_node(seg.tail)) nodes[seg.tail] += a(0);
        if (scope.has_node(seg.head)) nodes[seg.head] -= a(1);
    }
    return Form(scope, {1, 1}, std::move(segs), std::move(nodes));
}

}  // namespace

Form d_second(const Form& w) {
    const Bidegree d = w.bidegree();
    if (d.q != 0) throw DegreeError("d'' of a " + d.to_string() + "-form: degree overflow");
    if (d.p == 0) return derivative_of_function(w, {0, 1});
    return divergence(w);
}

Form d_prime(const Form& w) {
    const Bidegree d = w.bidegree();
    if (d.p != 0) throw DegreeError("d' of a " + d.to_string() + "-form: degree overflow");
    if (d.q == 0) return derivative_of_function(w, {1, 0});
    return Rational(-1) * divergence(w);
}

Form wedge(const Form& a_in, const Form& b_in) {
    const Bidegree da = a_in.bidegree(), db = b_in.bidegree();
    const Bidegree d{da.p + db.p, da.q + db.q};
    if (d.p > 1 || d.q > 1) throw DegreeError("wedge " + da.to_string() + " ^ " + db.to_string() + ": degree overflow");

    Form a = a_in, b = b_in;
    if (a.scope().subdivision_ptr() != b.scope().subdivision_ptr()) {
        const auto common = common_refinement(a.scope().subdivision_ptr(), b.scope().subdivision_ptr());
        a = a.refined_to(common);
        b = b.refined_to(common);
    }
    const Scope scope = a.scope().intersect(b.scope());
    const Subdivision& sub = scope.subdivision();
    std::vector<Poly> segs(sub.segment_count());
    std::vector<Rational> nodes(sub.node_count());

    int sign = 1;
    if (da == Bidegree{0, 1} && db == Bidegree{1, 0}) sign = -1;
    for (std::size_t s : scope.segment_list()) segs[s] = Rational(sign) * (a.on_segment(s) * b.on_segment(s));

    if (da == Bidegree{0, 0} || db == Bidegree{0, 0}) {
        const Form& f = da == Bidegree{0, 0} ? a : b;
        const Form& g = da == Bidegree{0, 0} ? b : a;
        if (g.bidegree() == Bidegree{0, 0} || g.bidegree() == Bidegree{1, 1})
            for (std::size_t n : scope.node_list()) nodes[n] = f.at_node(n) * g.at_node(n);
    }
    return Form(scope, d, std::move(segs), std::move(nodes));
}

Rational integrate(const Form& w) {
    if (w.bidegree() != Bidegree{1, 1}) throw DegreeError("only (1,1)-forms integrate, got " + w.bidegree().to_string());
    if (!w.is_compactly_supported()) throw std::domain_error("integrand is not compactly supported in its scope");
    const Scope& scope = w.scope();
    Rational total = 0;
    for (std::size_t n : scope.node_list()) total += w.at_node(n);
    for (std::size_t s : scope.segment_list()) total += scope.subdivision().segments()[s].length * w.on_segment(s).integral();
    return total;
}

}  // namespace tdc
