#pragma once

#include "tdc/form.hpp"
#include "tdc/linalg.hpp"
#include "tdc/region.hpp"

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace tdc {

enum class Support { Full, Compact };
std::string_view to_string(Support s);

/// Cellular model C0 -d-> C1 of the d''-complex in bidegrees (p,0) -> (p,1).
///
/// Full support:
///   p = 0: C0 = values at member nodes and at every open end, C1 = segment
///          slopes; d is the slope map.
///   p = 1: C0 = segment coefficients, C1 = atoms at member nodes; d puts
///          the outgoing coefficient sums on the nodes.
/// Compact support works on the collared scope and drops the collar:
///   p = 0: C0 = non-collar member nodes, C1 = non-collar segments.
///   p = 1: C0 = non-collar segments, C1 = all member nodes.
class CochainComplex {
public:
    /// With Compact support the scope is collared first; scope() returns the
    /// collared one.
    CochainComplex(const Scope& scope, int p, Support support);

    const Scope& scope() const { return scope_; }
    int p() const { return p_; }
    Support support() const { return support_; }
    const linalg::Matrix& d() const { return d_; }
    std::size_t dim(int degree) const { return degree == 0 ? d_.cols() : d_.rows(); }

    /// The (p,degree)-form with the given cochain coordinates.
    Form form(int degree, const linalg::Vector& x) const;

    /// Matrix of the restriction C^degree(*this) -> C^degree(smaller). Both
    /// complexes must have full support, the same p and the same
    /// subdivision, and smaller's scope must lie inside this one.
    linalg::Matrix restriction(const CochainComplex& smaller, int degree) const;

    /// Human-readable cell names of C^degree.
    std::vector<std::string> cell_names(int degree) const;

private:
    std::size_t slot_of_node(std::size_t n) const;        // p = 0, degree 0
    std::size_t slot_of_end(const End& e) const;          // p = 0, degree 0
    std::size_t slot_of_segment(std::size_t s) const;     // segment slot in its degree
    std::size_t slot_of_atom(std::size_t n) const;        // p = 1, degree 1

    Scope scope_;
    int p_;
    Support support_;
    std::vector<std::size_t> nodes_;     // node cells in order
    std::vector<End> ends_;              // p = 0 full: ghost cells after the nodes
    std::vector<std::size_t> segments_;  // segment cells in order
    linalg::Matrix d_;
};

/// Basis of H^{p,q} for one complex. q = 0: the kernel basis of d (a 1 at a
/// free column). q = 1: unit cochains at the non-pivot coordinates of d.
class CohomologyBasis {
public:
    CohomologyBasis(CochainComplex complex, int q);

    const CochainComplex& complex() const { return complex_; }
    Bidegree bidegree() const { return {complex_.p(), q_}; }
    Support support() const { return complex_.support(); }
    const Scope& scope() const { return complex_.scope(); }
    std::size_t dimension() const { return cochains_.size(); }
    const std::vector<linalg::Vector>& cochains() const { return cochains_; }
    std::vector<Form> representatives() const;

    /// Coordinates of the class of a q-cocycle.
    linalg::Vector coordinates(const linalg::Vector& cocycle) const;
    /// Whether a q-cochain is a cocycle whose class vanishes.
    bool is_trivial(const linalg::Vector& cocycle) const;

    /// Representatives are cocycles and their classes are independent.
    bool verify() const;

private:
    CochainComplex complex_;
    int q_;
    std::vector<linalg::Vector> cochains_;
    linalg::Kernel kernel_;
    std::optional<linalg::Cokernel> cokernel_;
};

CohomologyBasis cohomology(const Scope& scope, int p, int q, Support support);

/// Matrix of the map induced on cohomology by a cochain map `map` from
/// `from`'s complex to `to`'s complex (same degree q on both sides).
linalg::Matrix induced_map(const CohomologyBasis& from, const CohomologyBasis& to, const linalg::Matrix& map);

/// The eight cellular Hodge numbers of a scope, in (00, 01, 10, 11) order.
struct CellularHodge {
    std::array<std::size_t, 4> full{};
    std::array<std::size_t, 4> compact{};
};
CellularHodge cellular_hodge(const Scope& scope);

}  // namespace tdc
