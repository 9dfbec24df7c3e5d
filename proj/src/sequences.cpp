#include "tdc/sequences.hpp"

#include "tdc/cohomology.hpp"
#include "tdc/potential.hpp"

namespace tdc {

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::ComputedByCochain: return "computed-by-cochain";
        case Provenance::DerivedBySequence: return "derived-by-sequence";
        case Provenance::ModelValue: return "model-value";
    }
    return "?";
}

std::string HodgeTable::to_string() const {
    return "(" + h[0].to_string() + "," + h[1].to_string() + "," + h[2].to_string() + "," + h[3].to_string() + ")";
}

Dim aff_h1_dim(const AugmentedMetricGraph& g, ResidueModel m) { return s_dimension(g, m) + 1; }

HodgeTable hodge_table(const Subdivision::Ptr& sub, ResidueModel m) {
    const AugmentedMetricGraph& g = sub->graph();
    const CellularHodge cells = cellular_hodge(Scope::whole(sub));
    const Dim s = s_dimension(g, m);
    const std::size_t b = betti(g);

    if (cells.full[2] != cells.full[1])
        throw ConsistencyError("h10 and h01 disagree between the two cellular complexes");
    if (cells.full[1] != b) throw ConsistencyError("h01 differs from the first Betti number");

    HodgeTable t;
    t.h[0] = cells.full[0];
    t.h[1] = cells.full[1];
    t.h[2] = cells.full[2];
    t.provenance[0] = t.provenance[1] = Provenance::ComputedByCochain;
    t.provenance[2] = s == Dim(0) ? Provenance::ComputedByCochain : Provenance::ModelValue;
    t.provenance[3] = Provenance::DerivedBySequence;

    const Dim aff = aff_h1_dim(g, m);
    if (aff.is_infinite()) {
        t.h[3] = Dim::infinite();
    } else {
        // exactness: h11 = aff - h01 + h10
        t.h[3] = aff.value() + t.h[2].value() - t.h[1].value();
    }
    if (s == Dim(0) && !(t.h[0] == Dim(1) && t.h[3] == Dim(cells.full[3]) && t.h[1] == t.h[2]))
        throw ConsistencyError("Hodge table with S_X = 0 is not (1,b,b,1): " + t.to_string());
    return t;
}

HodgeTable hodge_table(const AugmentedMetricGraph& g, ResidueModel m) { return hodge_table(Subdivision::create(g), m); }

std::string_view to_string(PdVerdict v) {
    switch (v) {
        case PdVerdict::Holds: return "holds";
        case PdVerdict::Fails: return "fails";
        case PdVerdict::FailsInfinite: return "fails-infinite";
    }
    return "?";
}

PdReport pd_verdict(const Subdivision::Ptr& sub, ResidueModel m) {
    const Dim s = s_dimension(sub->graph(), m);
    const HodgeTable t = hodge_table(sub, m);

    PdReport r{};
    r.by_s_dimension = s == Dim(0) ? PdVerdict::Holds : s.is_infinite() ? PdVerdict::FailsInfinite : PdVerdict::Fails;
    if (t.at(1, 1).is_infinite())
        r.by_hodge_table = PdVerdict::FailsInfinite;
    else
        r.by_hodge_table = t.at(1, 1) == Dim(1) && t.at(1, 0) == t.at(0, 1) ? PdVerdict::Holds : PdVerdict::Fails;
    if (r.by_s_dimension != r.by_hodge_table)
        throw ConsistencyError("PD routes disagree: S_X gives " + std::string(to_string(r.by_s_dimension)) +
                               ", Hodge table gives " + std::string(to_string(r.by_hodge_table)));
    r.verdict = r.by_s_dimension;
    switch (r.verdict) {
        case PdVerdict::Holds: r.reason = "S_X=0"; break;
        case PdVerdict::Fails: r.reason = "S_X=" + s.to_string() + " h11=" + t.at(1, 1).to_string(); break;
        case PdVerdict::FailsInfinite: r.reason = "S_X=inf h11=inf"; break;
    }
    return r;
}

PdReport pd_verdict(const AugmentedMetricGraph& g, ResidueModel m) { return pd_verdict(Subdivision::create(g), m); }

std::string_view to_string(Finiteness f) { return f == Finiteness::Finite ? "finite" : "infinite"; }

Finiteness finiteness_verdict(const AugmentedMetricGraph& g, ResidueModel m) {
    return m == ResidueModel::Complex && !positive_genus_vertices(g).empty() ? Finiteness::Infinite : Finiteness::Finite;
}

LiuCheck liu_check(const AugmentedMetricGraph& g, ResidueModel m) {
    if (m != ResidueModel::Torsion) throw std::invalid_argument("liu_check needs the torsion residue model");
    const HodgeTable t = hodge_table(g, m);
    return {t.at(1, 0) == t.at(0, 1) && t.at(1, 0).is_finite(), t.at(1, 0), t.at(0, 1)};
}

namespace {

SequenceAudit audit_of(std::string id, std::vector<Dim> terms, bool extra_ok = true) {
    SequenceAudit a{std::move(id), std::move(terms), std::nullopt};
    bool finite = true;
    for (const auto& d : a.terms) finite = finite && d.is_finite();
    if (!finite) return a;
    std::int64_t alt = 0;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        const auto v = static_cast<std::int64_t>(a.terms[i].value());
        alt += i % 2 == 0 ? v : -v;
    }
    a.exact = alt == 0 && extra_ok;
    return a;
}

}  // namespace

std::vector<SequenceAudit> sequence_audit(const AugmentedMetricGraph& g, ResidueModel m, std::uint64_t seed) {
    std::vector<SequenceAudit> out;

    const ResolutionAudit res = resolution_audit(g, seed);
    out.push_back(audit_of("resolution", {res.ker_dim, res.l0_dim, res.l1_dim, res.coker_dim}, res.passed()));

    const Dim s = s_dimension(g, m);
    out.push_back(audit_of("harmonic", {s, aff_h1_dim(g, m), res.coker_dim}));

    const auto sub = Subdivision::create(g);
    const HodgeTable t = hodge_table(sub, m);
    Dim h11 = t.at(1, 1);
    // with S_X = 0 the last term is measured, not derived
    if (s == Dim(0)) h11 = cellular_hodge(Scope::whole(sub)).full[3];
    out.push_back(audit_of("exponential", {t.at(1, 0), t.at(0, 1), aff_h1_dim(g, m), h11}));
    return out;
}

}  // namespace tdc
