#pragma once

#include "tdc/cohomology.hpp"
#include "tdc/dim.hpp"
#include "tdc/graph.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tdc {

/// A requested pairing involves an infinite-dimensional space.
class Refusal : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Sum of the vertex ranks of the original vertices lying in the scope.
/// These classes live in H^{1,1} of the scope (and in H^{1,1}_c when the
/// scope is compact) and pair to zero with every cellular class.
Dim local_extra(const Scope& scope, ResidueModel m);

struct PairingMatrix {
    Bidegree left;   // full support
    Bidegree right;  // compact support, (1-p, 1-q)
    linalg::Matrix matrix;
    std::size_t cellular_rows = 0;
    std::size_t cellular_cols = 0;
    std::size_t rank = 0;

    bool square() const { return matrix.rows() == matrix.cols(); }
    bool invertible() const { return square() && rank == matrix.rows(); }
};

/// Entry (i, j) is the integral of alpha_i ^ beta_j, alpha_i running over
/// H^{p,q}(U) and beta_j over H_c^{1-p,1-q}(U), both on the collared scope.
/// Rows and columns for the classes counted by local_extra are zero.
PairingMatrix pairing_matrix(const Scope& scope, ResidueModel m, int p, int q);

struct PdCheck {
    bool perfect = false;
    std::size_t rank = 0;  // sum of the ranks of the four matrices
    std::size_t size = 0;  // sum of max(rows, cols)
    std::vector<PairingMatrix> matrices;  // (0,0), (0,1), (1,0), (1,1)
    std::string reason;
};

/// Perfect iff all four pairings are square and invertible. Throws Refusal
/// for scopes with infinite local_extra.
PdCheck pd_check(const Scope& scope, ResidueModel m);

}  // namespace tdc
