#include "tkkforge/homology.hpp"

namespace tkkforge {

Matrix boundary_matrix(const GradedLieAlgebra& l, unsigned n, bool graded, kernels::Mode mode) {
    if (n < 1) throw std::invalid_argument("boundary: n must be >= 1");
    const Field& f = l.total().field();
    WedgeSpace wlow(l.dim(), l.degrees(), n);
    WedgeSpace whigh(l.dim(), l.degrees(), n + 1);

    std::vector<Index> rows_idx, cols_idx;
    if (graded) {
        rows_idx = wlow.degree_slice(0);
        cols_idx = whigh.degree_slice(0);
    } else {
        for (Index t = 0; t < wlow.size(); ++t) rows_idx.push_back(t);
        for (Index t = 0; t < whigh.size(); ++t) cols_idx.push_back(t);
    }
    std::vector<Index> rowpos(wlow.size(), wlow.size());
    for (Index r = 0; r < rows_idx.size(); ++r) rowpos[rows_idx[r]] = r;

    // assemble the transpose (one row per wedge^{n+1} tuple), then flip
    Matrix bt = kernels::assemble_rows(
        cols_idx.size(), rows_idx.size(), f,
        [&](Index c) {
            Vec out(f, rows_idx.size());
            const std::vector<Index>& t = whigh.tuple(cols_idx[c]);
            for (Index i = 0; i < t.size(); ++i)
                for (Index j = i + 1; j < t.size(); ++j) {
                    Vec w = l.bracket_basis(t[i], t[j]);
                    if (w.is_zero()) continue;
                    int outer = ((i + 1) + (j + 1)) % 2 == 0 ? 1 : -1;  // (-1)^{i+j}, 1-based
                    std::vector<Index> rest;
                    rest.reserve(n);
                    for (Index r2 = 0; r2 < t.size(); ++r2)
                        if (r2 != i && r2 != j) rest.push_back(t[r2]);
                    for (Index b = 0; b < l.dim(); ++b) {
                        if (w[b].is_zero()) continue;
                        std::vector<Index> target;
                        target.reserve(n);
                        target.push_back(b);  // the bracket factor leads
                        target.insert(target.end(), rest.begin(), rest.end());
                        auto loc = wlow.locate(std::move(target));
                        if (!loc) continue;  // repeated factor, wedge vanishes
                        Index rp = rowpos[loc->first];
                        if (rp == wlow.size()) continue;  // outside the degree slice
                        Scalar coeff = w[b];
                        if (outer * loc->second < 0) coeff = -coeff;
                        out[rp] += coeff;
                    }
                }
            return out;
        },
        mode);
    return bt.transpose();
}

H2Result h2_graded(const GradedLieAlgebra& l) {
    l.require_certified();
    Matrix d1 = boundary_matrix(l, 1, true);
    Matrix d2 = boundary_matrix(l, 2, true);
    std::vector<Vec> cycles = kernel_basis(d1);
    Index r2 = rank(d2);
    Index dim = cycles.size() - r2;

    std::vector<Vec> gens;
    for (Index c = 0; c < d2.cols(); ++c) gens.push_back(d2.col(c));
    std::vector<Vec> witnesses;
    SpanBasis cur(d1.field(), d1.cols(), gens);
    for (const Vec& z : cycles) {
        if (cur.contains(z)) continue;
        witnesses.push_back(z);
        gens.push_back(z);
        cur = SpanBasis(d1.field(), d1.cols(), gens);
    }
    if (witnesses.size() != dim) throw std::logic_error("h2: witness count mismatch");
    return {dim, std::move(witnesses)};
}

Index h2_cohomology_graded(const GradedLieAlgebra& l, Index m) {
    l.require_certified();
    if (m == 0) return 0;
    Matrix d1t = boundary_matrix(l, 1, true).transpose();
    Matrix d2t = boundary_matrix(l, 2, true).transpose();
    // cocycles: functionals on (wedge^2)_0 killed by d2^T; coboundaries:
    // image of d1^T
    Index z2 = d2t.cols() - rank(d2t);
    Index b2 = rank(d1t);
    return m * (z2 - b2);
}

Index h2_ungraded(const GradedLieAlgebra& l) {
    l.require_certified();
    if (l.dim() > 24)
        throw std::invalid_argument("h2_ungraded: total dimension exceeds the desk-scale cap 24");
    Matrix d1 = boundary_matrix(l, 1, false);
    Matrix d2 = boundary_matrix(l, 2, false);
    return (d1.cols() - rank(d1)) - rank(d2);
}

}  // namespace tkkforge
