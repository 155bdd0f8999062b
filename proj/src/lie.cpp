#include "tkkforge/lie.hpp"

#include <algorithm>

namespace tkkforge {

GradedLieAlgebra::GradedLieAlgebra(FreeModule total, std::vector<int> degrees, BilinearMap bracket)
    : total_(std::move(total)), degree_(std::move(degrees)), bracket_(std::move(bracket)) {
    if (degree_.size() != total_.dim())
        throw std::invalid_argument("graded lie: degree list size mismatch");
    if (bracket_.domain1() != total_ || bracket_.domain2() != total_ ||
        bracket_.codomain() != total_)
        throw std::invalid_argument("graded lie: bracket must map L x L -> L");
    for (Index i = 0; i < degree_.size(); ++i) components_[degree_[i]].push_back(i);
}

std::vector<int> GradedLieAlgebra::support() const {
    std::vector<int> out;
    for (const auto& [d, idx] : components_)
        if (!idx.empty()) out.push_back(d);
    return out;
}

const std::vector<Index>& GradedLieAlgebra::component(int d) const {
    static const std::vector<Index> empty;
    auto it = components_.find(d);
    return it == components_.end() ? empty : it->second;
}

bool GradedLieAlgebra::three_graded() const {
    return std::all_of(degree_.begin(), degree_.end(), [](int d) { return d >= -1 && d <= 1; });
}

Matrix GradedLieAlgebra::ad(const Vec& x) const {
    Matrix m(total_.field(), dim(), dim());
    for (Index j = 0; j < dim(); ++j) m.set_col(j, bracket_.apply_vb(x, j));
    return m;
}

Vec GradedLieAlgebra::embed(int d, const Vec& comp) const {
    const auto& idx = component(d);
    if (comp.size() != idx.size()) throw std::invalid_argument("graded lie: embed size mismatch");
    Vec v = total_.zero();
    for (Index i = 0; i < idx.size(); ++i) v[idx[i]] = comp[i];
    return v;
}

Vec GradedLieAlgebra::extract(int d, const Vec& total) const {
    if (total.size() != dim()) throw std::invalid_argument("graded lie: extract size mismatch");
    const auto& idx = component(d);
    Vec v(total_.field(), idx.size());
    for (Index i = 0; i < idx.size(); ++i) v[i] = total[idx[i]];
    return v;
}

FreeModule GradedLieAlgebra::component_module(int d) const {
    std::vector<std::string> labels;
    for (Index i : component(d)) labels.push_back(total_.label(i));
    return FreeModule(total_.field(), std::move(labels));
}

CheckResult GradedLieAlgebra::check_graded_lie(kernels::Mode mode) const {
    const Index d = dim();

    auto anti = kernels::first_failure(
        d * d,
        [&](Index idx) {
            Index i = idx / d, j = idx % d;
            if (i > j) return true;
            if (i == j) return bracket_.on_basis(i, i).is_zero();
            return bracket_.on_basis(i, j) == -bracket_.on_basis(j, i);
        },
        mode);
    if (anti)
        return CheckResult::fail({"antisymmetry [x,y]=-[y,x], [x,x]=0", {*anti / d, *anti % d}, ""});

    auto grading = kernels::first_failure(
        d * d,
        [&](Index idx) {
            Index i = idx / d, j = idx % d;
            Vec w = bracket_.on_basis(i, j);
            int target = degree_[i] + degree_[j];
            for (Index k = 0; k < d; ++k)
                if (!w[k].is_zero() && degree_[k] != target) return false;
            return true;
        },
        mode);
    if (grading)
        return CheckResult::fail(
            {"grading [L_i,L_j] in L_{i+j}", {*grading / d, *grading % d}, ""});

    // Jacobi on i < j < k; alternating once antisymmetry holds.
    auto jac = kernels::first_failure(
        d * d * d,
        [&](Index idx) {
            Index k = idx % d;
            idx /= d;
            Index j = idx % d;
            Index i = idx / d;
            if (!(i < j && j < k)) return true;
            Vec s = bracket_.apply_vb(bracket_.on_basis(i, j), k);
            s += bracket_.apply_vb(bracket_.on_basis(j, k), i);
            s += bracket_.apply_vb(bracket_.on_basis(k, i), j);
            return s.is_zero();
        },
        mode);
    if (jac) {
        Index idx = *jac;
        Index k = idx % d;
        idx /= d;
        return CheckResult::fail({"Jacobi identity", {idx / d, idx % d, k}, ""});
    }

    certified_.set();
    return CheckResult::pass();
}

void GradedLieAlgebra::require_certified() const {
    if (certified_.get()) return;
    if (auto r = check_graded_lie(); !r.ok()) throw CheckFailed(*r.violation);
}

CheckResult check_graded_hom(const GradedLieAlgebra& source, const GradedLieAlgebra& target,
                             const GradedHom& h) {
    const Index ds = source.dim(), dt = target.dim();
    if (h.m.rows() != dt || h.m.cols() != ds)
        return CheckResult::fail({"graded hom shape", {}, "matrix dimensions"});
    for (Index j = 0; j < ds; ++j) {
        Vec img = h.m.col(j);
        for (Index i = 0; i < dt; ++i)
            if (!img[i].is_zero() && target.degree(i) != source.degree(j))
                return CheckResult::fail({"degree preservation a(L_i) in K_i", {j, i}, ""});
    }
    for (Index i = 0; i < ds; ++i)
        for (Index j = i + 1; j < ds; ++j) {
            Vec lhs = h.m * source.bracket_basis(i, j);
            Vec rhs = target.bracket(h.m.col(i), h.m.col(j));
            if (lhs != rhs)
                return CheckResult::fail({"bracket preservation a[x,y]=[ax,ay]", {i, j}, ""});
        }
    return CheckResult::pass();
}

CheckResult check_anti_graded_involution(const GradedLieAlgebra& l,
                                         const AntiGradedInvolution& e) {
    const Index d = l.dim();
    if (e.m.rows() != d || e.m.cols() != d)
        return CheckResult::fail({"involution shape", {}, ""});
    if (e.m * e.m != Matrix::identity(l.total().field(), d))
        return CheckResult::fail({"involution period 2", {}, ""});
    for (Index j = 0; j < d; ++j) {
        Vec img = e.m.col(j);
        for (Index i = 0; i < d; ++i)
            if (!img[i].is_zero() && l.degree(i) != -l.degree(j))
                return CheckResult::fail({"anti-grading eps(L_i) in L_{-i}", {j, i}, ""});
    }
    for (Index i = 0; i < d; ++i)
        for (Index j = i + 1; j < d; ++j) {
            Vec lhs = e.m * l.bracket_basis(i, j);
            Vec rhs = l.bracket(e.m.col(i), e.m.col(j));
            if (lhs != rhs)
                return CheckResult::fail({"involution is a Lie homomorphism", {i, j}, ""});
        }
    return CheckResult::pass();
}

CheckResult check_sl2_triple(const GradedLieAlgebra& l, const Sl2Triple& s) {
    const Field& f = l.total().field();
    Scalar two = Scalar::of_int(f, 2);
    if (l.bracket(s.e, s.f) != s.h) return CheckResult::fail({"sl2 relation [e,f]=h", {}, ""});
    if (l.bracket(s.h, s.e) != two * s.e)
        return CheckResult::fail({"sl2 relation [h,e]=2e", {}, ""});
    if (l.bracket(s.h, s.f) != -(two * s.f))
        return CheckResult::fail({"sl2 relation [h,f]=-2f", {}, ""});
    return CheckResult::pass();
}

namespace {

void require_three_graded(const GradedLieAlgebra& l) {
    if (!l.three_graded())
        throw std::invalid_argument("forgetful functor: algebra is not 3-graded");
}

}  // namespace

JordanPair forget_to_pair(const GradedLieAlgebra& l) {
    l.require_certified();
    require_three_graded(l);
    FreeModule pm = l.component_module(-1);
    FreeModule pp = l.component_module(1);
    const auto& im = l.component(-1);
    const auto& ip = l.component(1);

    TrilinearMap tm(pm, pp, pm, pm);
    for (Index a = 0; a < im.size(); ++a)
        for (Index b = 0; b < ip.size(); ++b) {
            Vec inner = l.bracket_basis(im[a], ip[b]);
            for (Index c = 0; c < im.size(); ++c)
                tm.set_column(a, b, c,
                              l.extract(-1, l.bracket_vb(inner, im[c])));
        }
    TrilinearMap tp(pp, pm, pp, pp);
    for (Index a = 0; a < ip.size(); ++a)
        for (Index b = 0; b < im.size(); ++b) {
            Vec inner = l.bracket_basis(ip[a], im[b]);
            for (Index c = 0; c < ip.size(); ++c)
                tp.set_column(a, b, c,
                              l.extract(1, l.bracket_vb(inner, ip[c])));
        }
    JordanPair p(std::move(pm), std::move(pp), std::move(tm), std::move(tp));
    p.require_certified();
    return p;
}

JordanTriple forget_to_jts(const GradedLieAlgebra& l, const AntiGradedInvolution& eps) {
    l.require_certified();
    require_three_graded(l);
    if (auto r = check_anti_graded_involution(l, eps); !r.ok()) throw CheckFailed(*r.violation);
    FreeModule t = l.component_module(1);
    const auto& ip = l.component(1);
    TrilinearMap prod(t, t, t, t);
    for (Index a = 0; a < ip.size(); ++a)
        for (Index b = 0; b < ip.size(); ++b) {
            Vec inner = l.bracket(l.total().basis(ip[a]), eps.m.col(ip[b]));
            for (Index c = 0; c < ip.size(); ++c)
                prod.set_column(a, b, c, l.extract(1, l.bracket_vb(inner, ip[c])));
        }
    JordanTriple out(std::move(t), std::move(prod));
    out.require_certified();
    return out;
}

JordanAlgebra forget_to_ja(const GradedLieAlgebra& l, const Sl2Triple& s) {
    l.require_certified();
    if (!grading_matches_canonical(l, s))
        throw std::invalid_argument("forget_to_ja: (l, s) is not canonically A1-graded");
    FreeModule j = l.component_module(1);
    const auto& ip = l.component(1);
    BilinearMap prod(j, j, j);
    for (Index a = 0; a < ip.size(); ++a) {
        Vec inner = l.bracket(l.total().basis(ip[a]), s.f);
        for (Index b = 0; b < ip.size(); ++b)
            prod.set_column(a, b, l.extract(1, l.bracket_vb(inner, ip[b])));
    }
    Vec unit = l.extract(1, s.e);
    unit *= Scalar::of_fraction(l.total().field(), 1, 2);
    JordanAlgebra out(std::move(j), std::move(prod), std::move(unit));
    out.require_certified();
    return out;
}

PairInvolution restrict_involution(const GradedLieAlgebra& l, const AntiGradedInvolution& eps) {
    const auto& im = l.component(-1);
    const auto& ip = l.component(1);
    FreeModule pm = l.component_module(-1);
    FreeModule pp = l.component_module(1);
    Matrix em(l.total().field(), ip.size(), im.size());
    for (Index j = 0; j < im.size(); ++j) em.set_col(j, l.extract(1, eps.m.col(im[j])));
    Matrix ep(l.total().field(), im.size(), ip.size());
    for (Index j = 0; j < ip.size(); ++j) ep.set_col(j, l.extract(-1, eps.m.col(ip[j])));
    return {LinearMap(pm, pp, std::move(em)), LinearMap(pp, pm, std::move(ep))};
}

A1Grading grading_from_sl2(const GradedLieAlgebra& l, const Sl2Triple& s) {
    l.require_certified();
    if (auto r = check_sl2_triple(l, s); !r.ok()) throw CheckFailed(*r.violation);
    const Field& f = l.total().field();
    const Index d = l.dim();
    Matrix adh = l.ad(s.h);

    std::vector<std::vector<Vec>> eig;  // eigenvalues -2, 0, 2
    Index total = 0;
    for (int i = -1; i <= 1; ++i) {
        Matrix m = adh - Matrix::identity(f, d).scaled(Scalar::of_int(f, 2 * i));
        eig.push_back(kernel_basis(m));
        total += eig.back().size();
    }
    A1Grading out{std::nullopt, Matrix(f, d, d), Matrix(f, d, d), std::nullopt};
    if (total != d) {
        for (int odd : {-1, 1}) {
            Matrix m = adh - Matrix::identity(f, d).scaled(Scalar::of_int(f, odd));
            if (!kernel_basis(m).empty()) {
                out.error = NotA1Reason::non_integral_weights;
                return out;
            }
        }
        out.error = NotA1Reason::residual_eigenspace;
        return out;
    }

    Matrix basis(f, d, d);
    std::vector<int> degrees;
    std::vector<std::string> labels;
    Index col = 0;
    for (int i = -1; i <= 1; ++i)
        for (const Vec& v : eig[i + 1]) {
            basis.set_col(col, v);
            degrees.push_back(i);
            labels.push_back((i == -1 ? "n" : i == 0 ? "z" : "p") + std::to_string(col + 1));
            ++col;
        }

    // invert the eigenbasis via RREF of [B | I]
    Matrix aug(f, d, 2 * d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) {
            aug(i, j) = basis(i, j);
            aug(i, d + j) = i == j ? Scalar::one(f) : Scalar::zero(f);
        }
    RrefResult r = rref(aug);
    Matrix binv(f, d, d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) binv(i, j) = r.m(i, d + j);

    FreeModule mod(f, labels);
    BilinearMap br(mod, mod, mod);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) {
            Vec w = l.bracket(basis.col(i), basis.col(j));
            br.set_column(i, j, binv * w);
        }
    GradedLieAlgebra g(std::move(mod), std::move(degrees), std::move(br));
    if (auto c = g.check_graded_lie(); !c.ok()) throw CheckFailed(*c.violation);
    if (!is_zero_perfect(g)) {
        out.error = NotA1Reason::not_zero_perfect;
        return out;
    }
    out.algebra = std::move(g);
    out.basis = std::move(basis);
    out.basis_inv = std::move(binv);
    return out;
}

bool grading_matches_canonical(const GradedLieAlgebra& l, const Sl2Triple& s) {
    l.require_certified();
    if (!l.three_graded()) return false;
    if (auto r = check_sl2_triple(l, s); !r.ok()) return false;
    const Field& f = l.total().field();
    for (Index i = 0; i < l.dim(); ++i) {
        Vec lhs = l.bracket(s.h, l.total().basis(i));
        Vec rhs = Scalar::of_int(f, 2 * l.degree(i)) * l.total().basis(i);
        if (lhs != rhs) return false;
    }
    return is_zero_perfect(l);
}

bool is_zero_perfect(const GradedLieAlgebra& l) {
    l.require_certified();
    std::vector<Vec> brackets;
    for (Index a : l.component(-1))
        for (Index b : l.component(1)) brackets.push_back(l.bracket_basis(a, b));
    std::vector<Vec> comp0;
    for (Index k : l.component(0)) comp0.push_back(l.total().basis(k));
    return subspace_equal(brackets, comp0, l.dim(), l.total().field());
}

std::vector<Vec> center(const GradedLieAlgebra& l) {
    const Index d = l.dim();
    Matrix m(l.total().field(), d * d, d);
    for (Index j = 0; j < d; ++j)
        for (Index b = 0; b < d; ++b) {
            Vec w = l.bracket_basis(j, b);
            for (Index c = 0; c < d; ++c) m(b * d + c, j) = w[c];
        }
    return kernel_basis(m);
}

std::string not_a1_reason_str(NotA1Reason r) {
    switch (r) {
        case NotA1Reason::residual_eigenspace: return "residual eigenspace";
        case NotA1Reason::non_integral_weights: return "non-integral weight structure";
        case NotA1Reason::not_zero_perfect: return "not 0-perfect";
    }
    return "?";
}

}  // namespace tkkforge
