#include "tdc/potential.hpp"

#include <random>
#include <sstream>

namespace tdc {

PLFunction::PLFunction(Subdivision::Ptr sub, std::vector<Rational> values) : sub_(std::move(sub)), values_(std::move(values)) {
    if (values_.size() != sub_->node_count()) throw std::invalid_argument("PLFunction needs one value per node");
}

PLFunction PLFunction::constant(Subdivision::Ptr sub, const Rational& c) {
    const auto n = sub->node_count();
    return PLFunction(std::move(sub), std::vector<Rational>(n, c));
}

Rational PLFunction::slope(std::size_t segment) const {
    const Segment& s = sub_->segments().at(segment);
    return (values_[s.head] - values_[s.tail]) / s.length;
}

PLFunction PLFunction::refined_to(const Subdivision::Ptr& finer) const {
    if (finer == sub_) return *this;
    if (!sub_->same_graph(*finer)) throw std::invalid_argument("refinement of a different graph");
    std::vector<Rational> out(finer->node_count());
    for (std::size_t i = 0; i < finer->node_count(); ++i) {
        const Node& node = finer->nodes()[i];
        if (node.vertex) {
            out[i] = values_[*node.vertex];
        } else if (auto c = sub_->find_point(*node.point)) {
            out[i] = values_[*c];
        } else {
            const Segment& s = sub_->segments()[sub_->segment_containing(node.point->edge, node.point->t)];
            const Rational u = (node.point->t - s.t0) / (s.t1 - s.t0);
            out[i] = values_[s.tail] + u * (values_[s.head] - values_[s.tail]);
        }
    }
    return PLFunction(finer, std::move(out));
}

PLFunction PLFunction::restricted_to(const Subdivision::Ptr& coarser) const {
    if (!sub_->same_graph(*coarser)) throw std::invalid_argument("restriction to a different graph");
    std::vector<Rational> out(coarser->node_count());
    for (std::size_t i = 0; i < coarser->node_count(); ++i) {
        const Node& node = coarser->nodes()[i];
        if (node.vertex) {
            out[i] = values_[*node.vertex];
        } else if (auto n = sub_->find_point(*node.point)) {
            out[i] = values_[*n];
        } else {
            throw std::invalid_argument("coarser node " + node.name + " is not a node here");
        }
    }
    return PLFunction(coarser, std::move(out));
}

PLFunction operator+(const PLFunction& a, const PLFunction& b) {
    if (a.sub_ != b.sub_) throw std::invalid_argument("PL functions on different subdivisions");
    std::vector<Rational> v(a.values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] + b.values_[i];
    return PLFunction(a.sub_, std::move(v));
}

PLFunction operator*(const Rational& s, const PLFunction& f) {
    std::vector<Rational> v(f.values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * f.values_[i];
    return PLFunction(f.sub_, std::move(v));
}

PLFunction operator-(const PLFunction& a, const PLFunction& b) { return a + Rational(-1) * b; }

bool operator==(const PLFunction& a, const PLFunction& b) { return a.sub_ == b.sub_ && a.values_ == b.values_; }

std::string PLFunction::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < values_.size(); ++i) out << sub_->nodes()[i].name << '=' << to_string(values_[i]) << '\n';
    return out.str();
}

DiscreteMeasure::DiscreteMeasure(Subdivision::Ptr sub, std::map<std::size_t, Rational> atoms) : sub_(std::move(sub)) {
    for (auto& [node, w] : atoms) {
        if (node >= sub_->node_count()) throw std::invalid_argument("measure atom on unknown node");
        if (sgn(w) != 0) atoms_.emplace(node, std::move(w));
    }
}

Rational DiscreteMeasure::weight(std::size_t node) const {
    auto it = atoms_.find(node);
    return it == atoms_.end() ? Rational(0) : it->second;
}

Rational DiscreteMeasure::mass() const {
    Rational m = 0;
    for (const auto& [_, w] : atoms_) m += w;
    return m;
}

linalg::Vector DiscreteMeasure::dense() const {
    linalg::Vector v(sub_->node_count());
    for (const auto& [n, w] : atoms_) v[n] = w;
    return v;
}

DiscreteMeasure operator+(const DiscreteMeasure& a, const DiscreteMeasure& b) {
    if (a.sub_ != b.sub_) throw std::invalid_argument("measures on different subdivisions");
    auto atoms = a.atoms_;
    for (const auto& [n, w] : b.atoms_) atoms[n] += w;
    return DiscreteMeasure(a.sub_, std::move(atoms));
}

DiscreteMeasure operator*(const Rational& s, const DiscreteMeasure& m) {
    auto atoms = m.atoms_;
    for (auto& [_, w] : atoms) w *= s;
    return DiscreteMeasure(m.sub_, std::move(atoms));
}

bool operator==(const DiscreteMeasure& a, const DiscreteMeasure& b) { return a.sub_ == b.sub_ && a.atoms_ == b.atoms_; }

std::string DiscreteMeasure::to_text() const {
    std::ostringstream out;
    for (const auto& [n, w] : atoms_) out << sub_->nodes()[n].name << '=' << to_string(w) << '\n';
    return out.str();
}

NodeAddress parse_node_address(const AugmentedMetricGraph& g, std::string_view text) {
    if (auto v = g.find_vertex(text)) return *v;
    if (text.find('@') != std::string_view::npos) return parse_point(g, text, '@');
    throw std::invalid_argument("unknown node '" + std::string(text) + "'");
}

MeasureSpec parse_measure_spec(const AugmentedMetricGraph& g, std::string_view text) {
    MeasureSpec spec;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        const auto colon = token.rfind(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == token.size())
            throw std::invalid_argument("expected node:weight, got '" + token + "'");
        spec.atoms.emplace_back(parse_node_address(g, std::string_view(token).substr(0, colon)),
                                parse_rational(std::string_view(token).substr(colon + 1)));
    }
    return spec;
}

std::vector<SubdivisionPoint> support_points(const MeasureSpec& spec) {
    std::vector<SubdivisionPoint> out;
    for (const auto& [a, _] : spec.atoms)
        if (auto p = std::get_if<SubdivisionPoint>(&a)) out.push_back(*p);
    return out;
}

std::size_t node_of(const Subdivision& sub, const NodeAddress& a) {
    if (auto v = std::get_if<std::size_t>(&a)) return *v;
    const auto& p = std::get<SubdivisionPoint>(a);
    if (auto n = sub.find_point(p)) return *n;
    throw std::invalid_argument("measure point is not a node of the subdivision");
}

DiscreteMeasure make_measure(const Subdivision::Ptr& sub, const MeasureSpec& spec) {
    std::map<std::size_t, Rational> atoms;
    for (const auto& [a, w] : spec.atoms) atoms[node_of(*sub, a)] += w;
    return DiscreteMeasure(sub, std::move(atoms));
}

DiscreteMeasure ddc(const PLFunction& f) {
    const Subdivision& sub = f.subdivision();
    std::map<std::size_t, Rational> atoms;
    for (std::size_t s = 0; s < sub.segment_count(); ++s) {
        const Rational slope = f.slope(s);
        if (sgn(slope) == 0) continue;
        atoms[sub.segments()[s].tail] += slope;
        atoms[sub.segments()[s].head] -= slope;
    }
    return DiscreteMeasure(f.subdivision_ptr(), std::move(atoms));
}

linalg::Matrix laplacian(const Subdivision& sub) {
    linalg::Matrix l(sub.node_count(), sub.node_count());
    for (const auto& s : sub.segments()) {
        const Rational w = 1 / s.length;
        // outgoing slope at tail is (f(head) - f(tail)) / len; at head, its negative
        l(s.tail, s.head) += w;
        l(s.tail, s.tail) -= w;
        l(s.head, s.tail) += w;
        l(s.head, s.head) -= w;
    }
    return l;
}

NoSolution::NoSolution(const Rational& mass)
    : std::domain_error("no solution: total mass nonzero (mass = " + to_string(mass) + ")"), mass_(mass) {}

PLFunction green_solve(const DiscreteMeasure& mu, std::size_t basepoint) {
    const Subdivision& sub = mu.subdivision();
    if (basepoint >= sub.node_count()) throw std::invalid_argument("basepoint is not a node");
    const std::size_t n = sub.node_count();
    linalg::Matrix pin(1, n);
    pin(0, basepoint) = 1;
    const linalg::Matrix system = linalg::Matrix::vstack(laplacian(sub), pin);
    linalg::Vector rhs = mu.dense();
    rhs.emplace_back(0);
    auto x = linalg::solve(system, rhs);
    if (!x) throw NoSolution(mu.mass());
    return PLFunction(mu.subdivision_ptr(), std::move(*x));
}

std::vector<PLFunction> harmonic_space(const Subdivision::Ptr& sub) {
    std::vector<PLFunction> out;
    for (auto& v : linalg::kernel(laplacian(*sub)).basis) out.emplace_back(sub, std::move(v));
    return out;
}

ResolutionAudit resolution_audit(const AugmentedMetricGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> weight(-9, 9);
    std::uniform_int_distribution<int> denominator(1, 7);

    // one interior point per edge exercises support off the vertex set
    std::vector<SubdivisionPoint> points;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const int d = denominator(rng) + 1;
        points.push_back({e, Rational(1, d)});
    }
    const auto sub = Subdivision::create(g, points);
    const std::size_t n = sub->node_count();

    ResolutionAudit audit;
    audit.l0_dim = n;
    audit.l1_dim = n;
    const std::size_t r = linalg::rank(laplacian(*sub));
    audit.ker_dim = n - r;
    audit.coker_dim = n - r;

    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    auto random_measure = [&] {
        std::map<std::size_t, Rational> atoms;
        for (int i = 0; i < 4; ++i) {
            Rational w(weight(rng), denominator(rng));
            w.canonicalize();
            atoms[pick(rng)] += w;
        }
        return atoms;
    };

    auto balanced = random_measure();
    Rational total = 0;
    for (const auto& [_, w] : balanced) total += w;
    balanced[pick(rng)] -= total;
    const DiscreteMeasure mu0(sub, balanced);
    try {
        audit.mass_zero_solved = ddc(green_solve(mu0, 0)) == mu0;
    } catch (const NoSolution&) {
        audit.mass_zero_solved = false;
    }

    auto unbalanced = random_measure();
    Rational mass = 0;
    for (const auto& [_, w] : unbalanced) mass += w;
    if (sgn(mass) == 0) unbalanced[0] += 1;
    try {
        green_solve(DiscreteMeasure(sub, unbalanced), 0);
        audit.nonzero_mass_rejected = false;
    } catch (const NoSolution&) {
        audit.nonzero_mass_rejected = true;
    }
    return audit;
}

}  // namespace tdc
