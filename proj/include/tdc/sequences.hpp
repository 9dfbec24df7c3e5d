#pragma once

#include "tdc/dim.hpp"
#include "tdc/graph.hpp"
#include "tdc/subdivision.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tdc {

/// Two computations that must agree did not. Always a bug or a broken
/// invariant, never bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Provenance { ComputedByCochain, DerivedBySequence, ModelValue };
std::string_view to_string(Provenance p);

/// h^{p,q} for p, q in {0, 1}, stored in (00, 01, 10, 11) order.
struct HodgeTable {
    std::array<Dim, 4> h{};
    std::array<Provenance, 4> provenance{};

    const Dim& at(int p, int q) const { return h[static_cast<std::size_t>(2 * p + q)]; }
    Provenance provenance_at(int p, int q) const { return provenance[static_cast<std::size_t>(2 * p + q)]; }
    bool symmetric() const { return h[0] == h[3] && h[1] == h[2]; }
    /// `(h00,h01,h10,h11)`.
    std::string to_string() const;
};

/// dim H^1(X, Aff) = dim S_X + 1.
Dim aff_h1_dim(const AugmentedMetricGraph& g, ResidueModel m);

/// Global table: h00, h01 and h10 from the cellular complexes on `sub`
/// (h10 is only a model value when S_X != 0), h11 from exactness of
/// 0 -> H^{1,0} -> H^{0,1} -> H^1(Aff) -> H^{1,1} -> 0.
HodgeTable hodge_table(const Subdivision::Ptr& sub, ResidueModel m);
HodgeTable hodge_table(const AugmentedMetricGraph& g, ResidueModel m);

enum class PdVerdict { Holds, Fails, FailsInfinite };
std::string_view to_string(PdVerdict v);

struct PdReport {
    PdVerdict verdict;
    PdVerdict by_s_dimension;  // holds iff S_X = 0
    PdVerdict by_hodge_table;  // holds iff h11 = 1 and h10 = h01
    std::string reason;
};

/// Throws ConsistencyError when the two routes disagree.
PdReport pd_verdict(const Subdivision::Ptr& sub, ResidueModel m);
PdReport pd_verdict(const AugmentedMetricGraph& g, ResidueModel m);

enum class Finiteness { Finite, Infinite };
std::string_view to_string(Finiteness f);
Finiteness finiteness_verdict(const AugmentedMetricGraph& g, ResidueModel m);

struct LiuCheck {
    bool passed = false;
    Dim h10;
    Dim h01;
};
/// h10 = h01, both finite. Torsion model only (std::invalid_argument).
LiuCheck liu_check(const AugmentedMetricGraph& g, ResidueModel m);

struct SequenceAudit {
    std::string id;  // resolution | harmonic | exponential
    std::vector<Dim> terms;
    std::optional<bool> exact;  // empty when a term is infinite
    std::string exact_text() const { return exact ? (*exact ? "yes" : "no") : "n/a"; }
};

/// Dimension audits of the resolution, harmonic and exponential sequences.
std::vector<SequenceAudit> sequence_audit(const AugmentedMetricGraph& g, ResidueModel m, std::uint64_t seed = 1);

}  // namespace tdc
