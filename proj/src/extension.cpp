#include "tkkforge/extension.hpp"

namespace tkkforge {

namespace {

Scalar dot(const Vec& a, const Vec& b) {
    Scalar s = Scalar::zero(a.field());
    for (Index i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

}  // namespace

CheckResult certify_central_zero_extension(const CentralExtension& ext) {
    if (auto r = ext.total.check_graded_lie(); !r.ok()) return r;
    if (auto r = ext.base.check_graded_lie(); !r.ok()) return r;
    if (auto r = check_graded_hom(ext.total, ext.base, GradedHom{ext.phi}); !r.ok()) return r;
    if (rank(ext.phi) != ext.base.dim())
        return CheckResult::fail({"extension: phi surjective", {}, ""});
    for (Index z = 0; z < ext.kernel.size(); ++z) {
        const Vec& v = ext.kernel[z];
        if (!(ext.phi * v).is_zero())
            return CheckResult::fail({"extension: listed kernel vector not in Kr(phi)", {z}, ""});
        for (Index i = 0; i < v.size(); ++i)
            if (!v[i].is_zero() && ext.total.degree(i) != 0)
                return CheckResult::fail({"extension: Kr(phi) inside K_0", {z, i}, ""});
        if (!ext.total.ad(v).is_zero())
            return CheckResult::fail({"extension: Kr(phi) central", {z}, ""});
    }
    if (ext.kernel.size() != ext.total.dim() - ext.base.dim())
        return CheckResult::fail({"extension: kernel basis incomplete", {}, ""});
    return CheckResult::pass();
}

CentralExtension make_central_extension(GradedLieAlgebra total, GradedLieAlgebra base, Matrix phi) {
    std::vector<Vec> kernel = kernel_basis(phi);
    CentralExtension ext{std::move(total), std::move(base), std::move(phi), std::move(kernel)};
    if (auto r = certify_central_zero_extension(ext); !r.ok()) throw CheckFailed(*r.violation);
    return ext;
}

CentralExtension upsilon_extension(const UtkkAlgebra& u) {
    return make_central_extension(u.lie, u.base.lie, u.upsilon);
}

SplitResult split_central_zero_extension(const CentralExtension& ext) {
    if (auto r = certify_central_zero_extension(ext); !r.ok()) throw CheckFailed(*r.violation);
    if (!is_zero_perfect(ext.base))
        throw std::invalid_argument("split: base must be 0-perfect");
    const Field& f = ext.base.total().field();
    const Index bd = ext.base.dim(), td = ext.total.dim();

    // graded linear section eta, canonical (free variables zero) per degree
    Matrix eta(f, td, bd);
    for (int d : ext.base.support()) {
        const auto& bidx = ext.base.component(d);
        const auto& tidx = ext.total.component(d);
        Matrix phid(f, bidx.size(), tidx.size());
        for (Index r = 0; r < bidx.size(); ++r)
            for (Index c = 0; c < tidx.size(); ++c) phid(r, c) = ext.phi(bidx[r], tidx[c]);
        for (Index r = 0; r < bidx.size(); ++r) {
            auto x = solve(phid, Vec::unit(f, bidx.size(), r));
            if (!x) throw std::logic_error("split: certified phi failed to lift");
            for (Index c = 0; c < tidx.size(); ++c) eta(tidx[c], bidx[r]) = (*x)[c];
        }
    }

    SpanBasis ker(f, td, ext.kernel);
    const Index m = ker.dim();

    WedgeSpace w2(bd, ext.base.degrees(), 2);
    std::vector<Index> slice = w2.degree_slice(0);

    // sigma(x^y) = [eta x, eta y] - eta([x,y]), valued in Kr(phi)
    Matrix sigma(f, m, slice.size());
    for (Index c = 0; c < slice.size(); ++c) {
        const auto& t = w2.tuple(slice[c]);
        Vec v = ext.total.bracket(eta.col(t[0]), eta.col(t[1])) -
                eta * ext.base.bracket_basis(t[0], t[1]);
        auto coords = ker.coords(v);
        if (!coords) throw std::logic_error("split: cocycle left the kernel");
        sigma.set_col(c, *coords);
    }

    // bracket matrix beta: (wedge^2)_0 -> L_0 (beta = -d_1)
    const auto& comp0 = ext.base.component(0);
    Matrix beta(f, comp0.size(), slice.size());
    for (Index c = 0; c < slice.size(); ++c) {
        const auto& t = w2.tuple(slice[c]);
        Vec w = ext.base.bracket_basis(t[0], t[1]);
        for (Index r = 0; r < comp0.size(); ++r) beta(r, c) = w[comp0[r]];
    }

    // solve tau . beta = sigma row by row
    Matrix betat = beta.transpose();
    Matrix tau(f, m, comp0.size());
    for (Index r = 0; r < m; ++r) {
        auto x = solve(betat, sigma.row(r));
        if (!x) {
            // obstruction: a degree-0 cycle on which sigma is nonzero
            for (const Vec& z : kernel_basis(beta)) {
                Vec val(f, m);
                for (Index rr = 0; rr < m; ++rr) val[rr] = dot(sigma.row(rr), z);
                if (!val.is_zero()) return {std::nullopt, z};
            }
            throw std::logic_error("split: unsolvable but no obstructing cycle found");
        }
        tau.set_row(r, *x);
    }

    Matrix psi = eta;
    for (Index s = 0; s < comp0.size(); ++s)
        for (Index r = 0; r < m; ++r) {
            if (tau(r, s).is_zero()) continue;
            for (Index i = 0; i < td; ++i) psi(i, comp0[s]) += tau(r, s) * ker.basis()(r, i);
        }

    if (ext.phi * psi != Matrix::identity(f, bd))
        throw std::logic_error("split: phi . psi != id");
    if (auto r = check_graded_hom(ext.base, ext.total, GradedHom{psi}); !r.ok())
        throw CheckFailed(*r.violation);
    return {std::move(psi), std::nullopt};
}

bool is_centrally_zero_closed(const GradedLieAlgebra& l) {
    if (!is_zero_perfect(l))
        throw std::invalid_argument("is_centrally_zero_closed: l must be 0-perfect");
    return h2_graded(l).dim == 0;
}

CentralExtension twist_by_cocycle(const GradedLieAlgebra& l, const Vec& cocycle) {
    l.require_certified();
    const Field& f = l.total().field();
    const Index d = l.dim();
    WedgeSpace w2(d, l.degrees(), 2);
    std::vector<Index> slice = w2.degree_slice(0);
    if (cocycle.size() != slice.size())
        throw std::invalid_argument("twist: cocycle coordinate size mismatch");
    std::vector<Index> slicepos(w2.size(), w2.size());
    for (Index c = 0; c < slice.size(); ++c) slicepos[slice[c]] = c;

    std::vector<std::string> labels = l.total().labels();
    labels.push_back("Zc");
    std::vector<int> degrees = l.degrees();
    degrees.push_back(0);
    FreeModule total(f, std::move(labels));

    BilinearMap br(total, total, total);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) {
            if (i == j) continue;
            Vec w = l.bracket_basis(i, j);
            Vec col(f, d + 1);
            for (Index k = 0; k < d; ++k) col[k] = w[k];
            if (l.degree(i) + l.degree(j) == 0 && i != j) {
                auto loc = w2.locate({i, j});
                if (loc && slicepos[loc->first] != w2.size()) {
                    Scalar c = cocycle[slicepos[loc->first]];
                    if (loc->second < 0) c = -c;
                    col[d] += c;
                }
            }
            br.set_column(i, j, col);
        }

    GradedLieAlgebra twisted(std::move(total), std::move(degrees), std::move(br));
    Matrix phi(f, d, d + 1);
    for (Index i = 0; i < d; ++i) phi(i, i) = Scalar::one(f);
    return make_central_extension(std::move(twisted), l, std::move(phi));
}

Vec cocycle_from_witness(const GradedLieAlgebra& l, const Vec& cycle) {
    Matrix d2t = boundary_matrix(l, 2, true).transpose();
    for (const Vec& k : kernel_basis(d2t)) {
        Scalar v = dot(k, cycle);
        if (!v.is_zero()) {
            Vec out = k;
            out *= v.inverse();
            return out;
        }
    }
    throw std::invalid_argument("cocycle_from_witness: cycle is a boundary");
}

GradedHom extend_pair_hom(const UtkkAlgebra& u, const PairHom& gamma,
                          const GradedLieAlgebra& target) {
    target.require_certified();
    JordanPair fjp = forget_to_pair(target);
    if (auto r = check_pair_hom(u.pair, fjp, gamma); !r.ok()) throw CheckFailed(*r.violation);

    const Field& f = target.total().field();
    const Index dm = u.pair.minus().dim(), dp = u.pair.plus().dim();
    const Index q0 = u.deg0.dim();
    const Index td = target.dim(), ud = u.lie.dim();

    // phi(a (x) b) = [gamma-(a), gamma+(b)] on tensor coordinates
    Matrix ph(f, td, dm * dp);
    for (Index i = 0; i < dm; ++i) {
        Vec gi = target.embed(-1, gamma.minus_map.matrix().col(i));
        for (Index j = 0; j < dp; ++j)
            ph.set_col(i * dp + j, target.bracket(gi, target.embed(1, gamma.plus_map.matrix().col(j))));
    }
    // well-definedness on the quotient: relation generators map to zero
    {
        std::vector<Vec> rel = relation_submodule(u.pair);
        for (Index g = 0; g < rel.size(); ++g)
            if (!(ph * rel[g]).is_zero())
                throw CheckFailed(
                    {"extend: relation generator does not vanish (invalid gamma)", {g}, ""});
    }

    Matrix h(f, td, ud);
    for (Index i = 0; i < dm; ++i)
        h.set_col(i, target.embed(-1, gamma.minus_map.matrix().col(i)));
    for (Index r = 0; r < q0; ++r)
        h.set_col(dm + r, ph * u.deg0.lift(Vec::unit(f, q0, r)));
    for (Index j = 0; j < dp; ++j)
        h.set_col(dm + q0 + j, target.embed(1, gamma.plus_map.matrix().col(j)));

    GradedHom out{std::move(h)};
    if (auto r = check_graded_hom(u.lie, target, out); !r.ok()) throw CheckFailed(*r.violation);
    // restriction to degrees +-1 equals gamma exactly, by construction;
    // assert it anyway
    for (Index i = 0; i < dm; ++i)
        if (target.extract(-1, out.m.col(i)) != gamma.minus_map.matrix().col(i))
            throw std::logic_error("extend: restriction to degree -1 differs from gamma");
    for (Index j = 0; j < dp; ++j)
        if (target.extract(1, out.m.col(dm + q0 + j)) != gamma.plus_map.matrix().col(j))
            throw std::logic_error("extend: restriction to degree +1 differs from gamma");
    return out;
}

GradedHom extend_jts_hom(const JordanTriple& t, const UtkkInvolution& u, const LinearMap& gamma,
                         const GradedLieAlgebra& target, const AntiGradedInvolution& eps) {
    if (auto r = check_anti_graded_involution(target, eps); !r.ok()) throw CheckFailed(*r.violation);
    JordanTriple ft = forget_to_jts(target, eps);
    if (auto r = check_triple_hom(t, ft, gamma); !r.ok()) throw CheckFailed(*r.violation);

    const Field& f = target.total().field();
    const Index n = t.module().dim();
    const auto& im = target.component(-1);
    const auto& ip = target.component(1);

    // pair homomorphism (eps gamma, gamma): (T, T) -> F_JP(target)
    Matrix gm(f, im.size(), n);
    for (Index c = 0; c < n; ++c)
        gm.set_col(c, target.extract(-1, eps.m * target.embed(1, gamma.matrix().col(c))));
    PairHom ph{LinearMap(u.u.pair.minus(), target.component_module(-1), std::move(gm)),
               LinearMap(u.u.pair.plus(), target.component_module(1), gamma.matrix())};
    (void)ip;

    GradedHom out = extend_pair_hom(u.u, ph, target);
    if (out.m * u.kappa_hat.m != eps.m * out.m)
        throw CheckFailed({"extend_jts: extension is not involutary", {}, ""});
    return out;
}

GradedHom extend_ja_hom(const JordanAlgebra& j, const UtkkSl2& u, const LinearMap& gamma,
                        const GradedLieAlgebra& target, const Sl2Triple& s) {
    if (!grading_matches_canonical(target, s))
        throw std::invalid_argument("extend_ja: (target, s) is not canonically A1-graded");
    JordanAlgebra fj = forget_to_ja(target, s);
    if (auto r = check_algebra_hom(j, fj, gamma); !r.ok()) throw CheckFailed(*r.violation);

    const Field& f = target.total().field();
    const Index n = j.module().dim();
    const auto& im = target.component(-1);
    const Scalar minus_half = Scalar::of_fraction(f, -1, 2);

    // anti-graded involution component on L_1: -1/2 (ad f)^2
    Matrix adf = target.ad(s.f);
    Matrix adf2 = (adf * adf).scaled(minus_half);
    Matrix gm(f, im.size(), n);
    for (Index c = 0; c < n; ++c)
        gm.set_col(c, target.extract(-1, adf2 * target.embed(1, gamma.matrix().col(c))));
    PairHom ph{LinearMap(u.u.pair.minus(), target.component_module(-1), std::move(gm)),
               LinearMap(u.u.pair.plus(), target.component_module(1), gamma.matrix())};

    GradedHom out = extend_pair_hom(u.u, ph, target);
    if (out.m * u.s.h != s.h || out.m * u.s.e != s.e || out.m * u.s.f != s.f)
        throw CheckFailed({"extend_ja: sl2-triple not preserved element-wise", {}, ""});
    return out;
}

UniversalityReport verify_universal(const CentralExtension& ext) {
    if (auto r = certify_central_zero_extension(ext); !r.ok()) throw CheckFailed(*r.violation);
    if (!is_zero_perfect(ext.base))
        throw std::invalid_argument("verify_universal: base must be 0-perfect");
    UniversalityReport rep{false, std::nullopt, false, ""};
    rep.total_zero_perfect = is_zero_perfect(ext.total);
    if (!rep.total_zero_perfect) {
        rep.reason = "total not 0-perfect";
        return rep;
    }
    rep.total_h2 = h2_graded(ext.total).dim;
    if (*rep.total_h2 != 0) {
        rep.reason = "total not centrally 0-closed (H2^gr != 0)";
        return rep;
    }
    rep.universal = true;
    return rep;
}

RoundtripResult roundtrip_iso(const GradedLieAlgebra& l) {
    l.require_certified();
    JordanPair p = forget_to_pair(l);
    UtkkAlgebra u = utkk(p);
    PairHom id{LinearMap(u.pair.minus(), l.component_module(-1),
                         Matrix::identity(l.total().field(), u.pair.minus().dim())),
               LinearMap(u.pair.plus(), l.component_module(1),
                         Matrix::identity(l.total().field(), u.pair.plus().dim()))};
    GradedHom h = extend_pair_hom(u, id, l);

    bool iso = u.lie.dim() == l.dim() && rank(h.m) == l.dim();
    bool zp = is_zero_perfect(l);
    Index h2 = h2_graded(l).dim;
    if (iso != (zp && h2 == 0))
        throw std::logic_error("roundtrip: biconditional of the equivalence theorem failed");
    std::string reason;
    if (!iso) {
        if (!zp) reason = "not 0-perfect";
        if (h2 != 0) reason += (reason.empty() ? "" : "; ") + std::string("H2^gr(L) != 0");
    }
    return {iso, std::move(h), zp, h2, std::move(reason)};
}

}  // namespace tkkforge
