#include "tdc/mayer_vietoris.hpp"

namespace tdc {

const Scope& Cover::part(std::size_t i) const {
    switch (i) {
        case 0: return u;
        case 1: return u1;
        case 2: return u2;
        case 3: return u12;
    }
    throw std::out_of_range("cover part index");
}

std::string_view cover_part_name(std::size_t i) {
    static constexpr std::string_view names[] = {"U", "U1", "U2", "U12"};
    return names[i];
}

Cover make_cover(const AugmentedMetricGraph& g, const RegionSpec& u, const RegionSpec& u1, const RegionSpec& u2) {
    std::vector<SubdivisionPoint> all;
    for (const RegionSpec* spec : {&u, &u1, &u2}) all.insert(all.end(), spec->cuts.begin(), spec->cuts.end());
    const auto sub = Subdivision::create(g, all);
    auto extract = [&](const RegionSpec& spec) { return extract_region(sub, g.vertex_index(spec.seed), spec.cuts).scope; };
    Cover c{extract(u), extract(u1), extract(u2), Scope::whole(sub)};
    if (!(c.u1.unite(c.u2) == c.u)) throw std::invalid_argument("U1 and U2 do not cover U");
    c.u12 = c.u1.intersect(c.u2);
    return c;
}

Cover refined_cover(const Cover& c, const Subdivision::Ptr& finer) {
    return {c.u.refined_to(finer), c.u1.refined_to(finer), c.u2.refined_to(finer), c.u12.refined_to(finer)};
}

namespace {

linalg::Matrix negated(linalg::Matrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
    return m;
}

}  // namespace

bool MvAudit::exact() const {
    for (bool b : exact_at)
        if (!b) return false;
    return compositions_vanish;
}

MvAudit mv_audit(const Cover& c, int p) {
    const CochainComplex cu(c.u, p, Support::Full), c1(c.u1, p, Support::Full), c2(c.u2, p, Support::Full),
        c12(c.u12, p, Support::Full);
    const CohomologyBasis hu0(cu, 0), h10(c1, 0), h20(c2, 0), h120(c12, 0);
    const CohomologyBasis hu1(cu, 1), h11(c1, 1), h21(c2, 1), h121(c12, 1);

    linalg::Matrix r[2][2], s[2][2];  // [region][degree]
    for (int q = 0; q < 2; ++q) {
        r[0][q] = cu.restriction(c1, q);
        r[1][q] = cu.restriction(c2, q);
        s[0][q] = c1.restriction(c12, q);
        s[1][q] = c2.restriction(c12, q);
    }

    MvAudit a;
    a.p = p;
    a.dims = {hu0.dimension(), h10.dimension() + h20.dimension(), h120.dimension(),
              hu1.dimension(), h11.dimension() + h21.dimension(), h121.dimension()};

    a.maps[0] = linalg::Matrix::vstack(induced_map(hu0, h10, r[0][0]), induced_map(hu0, h20, r[1][0]));
    a.maps[1] = linalg::Matrix::hstack(induced_map(h10, h120, s[0][0]), negated(induced_map(h20, h120, s[1][0])));
    a.maps[3] = linalg::Matrix::vstack(induced_map(hu1, h11, r[0][1]), induced_map(hu1, h21, r[1][1]));
    a.maps[4] = linalg::Matrix::hstack(induced_map(h11, h121, s[0][1]), negated(induced_map(h21, h121, s[1][1])));

    // connecting map: lift z to C0(U1) + C0(U2), differentiate, and pull the
    // result back from C1(U1) + C1(U2) to C1(U)
    const linalg::Matrix difference = linalg::Matrix::hstack(s[0][0], negated(s[1][0]));
    const linalg::Matrix both = linalg::Matrix::vstack(r[0][1], r[1][1]);
    const linalg::Matrix d12 = linalg::Matrix::direct_sum(c1.d(), c2.d());
    a.maps[2] = linalg::Matrix(hu1.dimension(), h120.dimension());
    for (std::size_t j = 0; j < h120.dimension(); ++j) {
        const auto x = linalg::solve(difference, h120.cochains()[j]);
        if (!x) throw ConsistencyError("Mayer-Vietoris difference map is not surjective on cochains");
        const auto y = linalg::solve(both, d12 * *x);
        if (!y) throw ConsistencyError("connecting cochain does not come from U");
        const auto coords = hu1.coordinates(*y);
        for (std::size_t i = 0; i < coords.size(); ++i) a.maps[2](i, j) = coords[i];
    }

    for (std::size_t i = 0; i < 5; ++i) a.ranks[i] = linalg::rank(a.maps[i]);
    a.exact_at[0] = a.ranks[0] == a.dims[0];
    for (std::size_t i = 1; i < 5; ++i) a.exact_at[i] = a.ranks[i - 1] + a.ranks[i] == a.dims[i];
    a.exact_at[5] = a.ranks[4] == a.dims[5];
    a.compositions_vanish = true;
    for (std::size_t i = 0; i + 1 < 5; ++i)
        if (!(a.maps[i + 1] * a.maps[i]).is_zero()) a.compositions_vanish = false;
    return a;
}

std::string_view to_string(PdState s) { return s == PdState::Perfect ? "perfect" : "degenerate"; }

ThreeOfFour three_of_four(const Cover& c, ResidueModel m, std::size_t unknown) {
    if (unknown > 3) throw std::out_of_range("cover part index");
    ThreeOfFour t;
    t.unknown = unknown;
    std::size_t degenerate = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i == unknown) continue;
        try {
            t.known[i] = pd_check(c.part(i), m).perfect ? PdState::Perfect : PdState::Degenerate;
        } catch (const Refusal& e) {
            throw std::invalid_argument("fewer than three verdicts available: " + std::string(cover_part_name(i)) + ": " + e.what());
        }
        if (*t.known[i] == PdState::Degenerate) ++degenerate;
    }
    if (degenerate == 0) t.predicted = PdState::Perfect;
    if (degenerate == 1) t.predicted = PdState::Degenerate;
    t.actual = pd_check(c.part(unknown), m).perfect ? PdState::Perfect : PdState::Degenerate;
    t.confirmed = t.predicted && *t.predicted == t.actual;
    return t;
}

SubsetHodge subset_hodge(const Region& r, ResidueModel m) {
    if (!r.strictly_simple)
        throw NotStrictlySimple("region is not strictly simple (k=" + std::to_string(r.boundary_count) +
                                ", cycle rank " + std::to_string(r.scope.cycle_rank()) + ")");
    const AugmentedMetricGraph& g = r.scope.subdivision().graph();
    bool positive_genus_inside = false;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (r.scope.has_vertex(v) && g.vertices()[v].genus > 0) positive_genus_inside = true;

    SubsetHodge out;
    out.k = r.boundary_count;
    out.in_theorem_scope = s_dimension(g, m) == Dim(0) || !positive_genus_inside;
    const CellularHodge cells = cellular_hodge(r.scope);
    for (std::size_t i = 0; i < 4; ++i) {
        out.full.h[i] = cells.full[i];
        out.compact.h[i] = cells.compact[i];
        out.full.provenance[i] = out.compact.provenance[i] = Provenance::ComputedByCochain;
    }
    if (out.in_theorem_scope) {
        const std::size_t k = out.k;
        const std::array<std::size_t, 4> full{1, 0, k - 1, 0}, compact{0, k - 1, 0, 1};
        if (cells.full != full || cells.compact != compact)
            throw ConsistencyError("strictly simple region with k=" + std::to_string(k) + " has tables " +
                                   out.full.to_string() + " / " + out.compact.to_string());
    } else {
        out.full.h[3] = out.full.h[3] + local_extra(r.scope, m);
        out.full.provenance[3] = Provenance::ModelValue;
    }
    return out;
}

}  // namespace tdc
