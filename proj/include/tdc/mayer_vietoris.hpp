#pragma once

#include "tdc/pairing.hpp"
#include "tdc/region.hpp"
#include "tdc/sequences.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace tdc {

/// U = U1 u U2 with U12 = U1 n U2, all on one subdivision.
struct Cover {
    Scope u;
    Scope u1;
    Scope u2;
    Scope u12;

    const Scope& part(std::size_t i) const;  // 0..3 = U, U1, U2, U12
};

std::string_view cover_part_name(std::size_t i);

/// Extracts the three regions on the subdivision at all of their cut points.
/// Throws std::invalid_argument unless U1 and U2 cover U.
Cover make_cover(const AugmentedMetricGraph& g, const RegionSpec& u, const RegionSpec& u1, const RegionSpec& u2);
/// Same cover moved to a finer subdivision.
Cover refined_cover(const Cover& c, const Subdivision::Ptr& finer);

/// The six-term sequence
///   0 -> H^{p,0}(U) -> H^{p,0}(U1) + H^{p,0}(U2) -> H^{p,0}(U12)
///     -> H^{p,1}(U) -> H^{p,1}(U1) + H^{p,1}(U2) -> H^{p,1}(U12) -> 0
/// with the maps computed from cochain restrictions.
struct MvAudit {
    int p = 0;
    std::array<std::size_t, 6> dims{};
    std::array<linalg::Matrix, 5> maps;  // maps[i]: term i -> term i+1
    std::array<std::size_t, 5> ranks{};
    std::array<bool, 6> exact_at{};     // exactness at each term
    bool compositions_vanish = false;

    bool exact() const;
};

MvAudit mv_audit(const Cover& c, int p);

enum class PdState { Perfect, Degenerate };
std::string_view to_string(PdState s);

struct ThreeOfFour {
    std::size_t unknown = 0;                      // part index predicted
    std::array<std::optional<PdState>, 4> known;  // empty at `unknown`
    std::optional<PdState> predicted;             // empty when undetermined
    PdState actual = PdState::Perfect;
    bool confirmed = false;
};

/// Predicts the PD state of part `unknown` from the other three: all perfect
/// forces perfect; exactly one degenerate forces degenerate (if the fourth
/// were perfect the lemma would make the degenerate one perfect). Then
/// computes it directly. Throws std::invalid_argument when one of the three
/// known parts has no finite verdict.
ThreeOfFour three_of_four(const Cover& c, ResidueModel m, std::size_t unknown);

class NotStrictlySimple : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SubsetHodge {
    std::size_t k = 0;
    HodgeTable full;
    HodgeTable compact;
    bool in_theorem_scope = false;  // S_X = 0 or no positive-genus vertex inside
};

/// Cellular tables of a strictly simple region. Inside the theorem's scope
/// they must be full (1,0,k-1,0) and compact (0,k-1,0,1), else
/// ConsistencyError. Outside it the full h11 also counts local_extra.
SubsetHodge subset_hodge(const Region& r, ResidueModel m);

}  // namespace tdc
