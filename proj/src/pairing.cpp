#include "tdc/pairing.hpp"

#include <algorithm>

namespace tdc {

Dim local_extra(const Scope& scope, ResidueModel m) {
    const AugmentedMetricGraph& g = scope.subdivision().graph();
    Dim total = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (scope.has_vertex(v)) total += vertex_rank(g, v, m);
    return total;
}

PairingMatrix pairing_matrix(const Scope& scope, ResidueModel m, int p, int q) {
    const Scope collared = scope.collared();
    const CohomologyBasis full = cohomology(collared, p, q, Support::Full);
    const CohomologyBasis compact = cohomology(collared, 1 - p, 1 - q, Support::Compact);

    std::size_t extra_rows = 0, extra_cols = 0;
    const bool rows_extra = p == 1 && q == 1;
    const bool cols_extra = p == 0 && q == 0 && collared.is_compact();
    if (rows_extra || cols_extra) {
        const Dim extra = local_extra(collared, m);
        if (extra.is_infinite())
            throw Refusal("H^{1,1} is infinite-dimensional on this scope (positive genus under the complex model)");
        (rows_extra ? extra_rows : extra_cols) = extra.value();
    }

    PairingMatrix pm;
    pm.left = {p, q};
    pm.right = {1 - p, 1 - q};
    pm.cellular_rows = full.dimension();
    pm.cellular_cols = compact.dimension();
    pm.matrix = linalg::Matrix(full.dimension() + extra_rows, compact.dimension() + extra_cols);
    const auto alphas = full.representatives();
    const auto betas = compact.representatives();
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = 0; j < betas.size(); ++j) pm.matrix(i, j) = integrate(wedge(alphas[i], betas[j]));
    pm.rank = linalg::rank(pm.matrix);
    return pm;
}

PdCheck pd_check(const Scope& scope, ResidueModel m) {
    PdCheck c;
    c.perfect = true;
    bool shape_mismatch = false;
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            PairingMatrix pm = pairing_matrix(scope, m, p, q);
            c.rank += pm.rank;
            c.size += std::max(pm.matrix.rows(), pm.matrix.cols());
            if (!pm.square()) shape_mismatch = true;
            if (!pm.invertible()) c.perfect = false;
            c.matrices.push_back(std::move(pm));
        }
    }
    if (!c.perfect) c.reason = shape_mismatch ? "dimension obstruction" : "singular pairing";
    return c;
}

}  // namespace tdc
