#pragma once

#include "tdc/linalg.hpp"
#include "tdc/subdivision.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tdc {

/// Continuous function, affine on every segment, given by its node values.
class PLFunction {
public:
    PLFunction(Subdivision::Ptr sub, std::vector<Rational> values);
    static PLFunction constant(Subdivision::Ptr sub, const Rational& c);

    const Subdivision& subdivision() const { return *sub_; }
    const Subdivision::Ptr& subdivision_ptr() const { return sub_; }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& value(std::size_t node) const { return values_.at(node); }

    /// Slope along the segment in its own orientation.
    Rational slope(std::size_t segment) const;

    /// Same function on a finer subdivision (interpolated at new nodes).
    PLFunction refined_to(const Subdivision::Ptr& finer) const;
    /// Values at the nodes of a coarser subdivision. The coarser nodes must
    /// be nodes here.
    PLFunction restricted_to(const Subdivision::Ptr& coarser) const;

    friend PLFunction operator+(const PLFunction& a, const PLFunction& b);
    friend PLFunction operator*(const Rational& s, const PLFunction& f);
    friend PLFunction operator-(const PLFunction& a, const PLFunction& b);
    friend bool operator==(const PLFunction& a, const PLFunction& b);

    /// `node=value` lines in node order.
    std::string to_text() const;

private:
    Subdivision::Ptr sub_;
    std::vector<Rational> values_;
};

/// Finite atomic measure on the nodes of a subdivision. Zero atoms are
/// dropped on construction.
class DiscreteMeasure {
public:
    explicit DiscreteMeasure(Subdivision::Ptr sub, std::map<std::size_t, Rational> atoms = {});

    const Subdivision& subdivision() const { return *sub_; }
    const Subdivision::Ptr& subdivision_ptr() const { return sub_; }
    const std::map<std::size_t, Rational>& atoms() const { return atoms_; }
    Rational weight(std::size_t node) const;
    Rational mass() const;
    bool is_zero() const { return atoms_.empty(); }

    /// Dense weight vector indexed by node.
    linalg::Vector dense() const;

    friend DiscreteMeasure operator+(const DiscreteMeasure& a, const DiscreteMeasure& b);
    friend DiscreteMeasure operator*(const Rational& s, const DiscreteMeasure& m);
    friend bool operator==(const DiscreteMeasure& a, const DiscreteMeasure& b);

    std::string to_text() const;

private:
    Subdivision::Ptr sub_;
    std::map<std::size_t, Rational> atoms_;
};

/// Address of a measure atom before a subdivision exists: a vertex index
/// or an interior point.
using NodeAddress = std::variant<std::size_t, SubdivisionPoint>;

struct MeasureSpec {
    std::vector<std::pair<NodeAddress, Rational>> atoms;
};

/// Measure literal: whitespace-separated `node:weight` with node a vertex id
/// or `edge@t`, e.g. `v1:1 e2@1/3:-1`.
MeasureSpec parse_measure_spec(const AugmentedMetricGraph& g, std::string_view text);
NodeAddress parse_node_address(const AugmentedMetricGraph& g, std::string_view text);

/// Interior points referenced by the spec.
std::vector<SubdivisionPoint> support_points(const MeasureSpec& spec);

/// Places the measure spec on `sub`; every referenced point must be a node of it.
DiscreteMeasure make_measure(const Subdivision::Ptr& sub, const MeasureSpec& spec);
std::size_t node_of(const Subdivision& sub, const NodeAddress& a);

/// The measure-valued Laplacian: the atom at p is the sum of the outgoing
/// slopes of f along all directions at p.
DiscreteMeasure ddc(const PLFunction& f);

/// Weighted graph Laplacian of the subdivision, the matrix of ddc in node
/// coordinates.
linalg::Matrix laplacian(const Subdivision& sub);

class NoSolution : public std::domain_error {
public:
    explicit NoSolution(const Rational& mass);
    const Rational& mass() const { return mass_; }

private:
    Rational mass_;
};

/// The unique PL function f on mu's subdivision with ddc f = mu and
/// f(basepoint) = 0. Throws NoSolution when mu has nonzero total mass.
PLFunction green_solve(const DiscreteMeasure& mu, std::size_t basepoint);

/// Basis of {f : ddc f = 0} on the subdivision.
std::vector<PLFunction> harmonic_space(const Subdivision::Ptr& sub);

/// Numerical certificate for 0 -> H -> L0 -> L1 -> coker -> 0 on a graph.
struct ResolutionAudit {
    std::size_t ker_dim = 0;
    std::size_t coker_dim = 0;
    std::size_t l0_dim = 0;  // PL functions on the audited subdivision
    std::size_t l1_dim = 0;  // atomic measures on the same nodes
    bool mass_zero_solved = false;      // random mass-zero measure was solved exactly
    bool nonzero_mass_rejected = false; // random nonzero-mass measure was rejected
    bool passed() const { return ker_dim == 1 && coker_dim == 1 && mass_zero_solved && nonzero_mass_rejected; }
};

ResolutionAudit resolution_audit(const AugmentedMetricGraph& g, std::uint64_t seed = 1);

}  // namespace tdc
