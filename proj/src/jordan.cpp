#include "tkkforge/jordan.hpp"

#include <sstream>

namespace tkkforge {

namespace {

// Outer symmetry {a,b,c} = {c,b,a} and the V-operator identity
// [V_{a,b}, V_{c,d}] = V_{{a,b,c},d} - V_{c,{b,a,d}} for one sigma.
// `ts` is the product on P_sigma, `to` the one on P_{-sigma}.
CheckResult check_pair_laws(const TrilinearMap& ts, const TrilinearMap& to, const char* tag,
                            kernels::Mode mode) {
    const Index ds = ts.domain1().dim();
    const Index dop = ts.domain2().dim();

    auto sym = kernels::first_failure(
        ds * dop * ds,
        [&](Index idx) {
            Index a = idx / (dop * ds), r = idx % (dop * ds);
            Index b = r / ds, c = r % ds;
            return ts.on_basis(a, b, c) == ts.on_basis(c, b, a);
        },
        mode);
    if (sym) {
        Index idx = *sym;
        Index a = idx / (dop * ds), r = idx % (dop * ds);
        return CheckResult::fail({std::string("outer symmetry {a,b,c}={c,b,a} ") + tag,
                                  {a, r / ds, r % ds},
                                  ""});
    }

    auto vop = kernels::first_failure(
        ds * dop * ds * dop * ds,
        [&](Index idx) {
            Index e = idx % ds;
            idx /= ds;
            Index d = idx % dop;
            idx /= dop;
            Index c = idx % ds;
            idx /= ds;
            Index b = idx % dop;
            Index a = idx / dop;
            // lhs: {a,b,{c,d,e}} - {c,d,{a,b,e}}
            Vec lhs = ts.apply_bbv(a, b, ts.on_basis(c, d, e)) -
                      ts.apply_bbv(c, d, ts.on_basis(a, b, e));
            // rhs: {{a,b,c},d,e} - {c,{b,a,d},e}
            Vec rhs = ts.apply_vbb(ts.on_basis(a, b, c), d, e) -
                      ts.apply_bvb(c, to.on_basis(b, a, d), e);
            return lhs == rhs;
        },
        mode);
    if (vop) {
        Index idx = *vop;
        Index e = idx % ds;
        idx /= ds;
        Index d = idx % dop;
        idx /= dop;
        Index c = idx % ds;
        idx /= ds;
        Index b = idx % dop;
        Index a = idx / dop;
        return CheckResult::fail({std::string("V-operator identity ") + tag, {a, b, c, d, e}, ""});
    }
    return CheckResult::pass();
}

}  // namespace

JordanPair::JordanPair(FreeModule minus, FreeModule plus, TrilinearMap tminus, TrilinearMap tplus)
    : minus_(std::move(minus)),
      plus_(std::move(plus)),
      tminus_(std::move(tminus)),
      tplus_(std::move(tplus)) {
    if (tminus_.domain1() != minus_ || tminus_.domain2() != plus_ || tminus_.domain3() != minus_ ||
        tminus_.codomain() != minus_)
        throw std::invalid_argument("jordan pair: t- must map P- x P+ x P- -> P-");
    if (tplus_.domain1() != plus_ || tplus_.domain2() != minus_ || tplus_.domain3() != plus_ ||
        tplus_.codomain() != plus_)
        throw std::invalid_argument("jordan pair: t+ must map P+ x P- x P+ -> P+");
}

CheckResult JordanPair::check_axioms(kernels::Mode mode) const {
    if (auto r = check_pair_laws(tminus_, tplus_, "(sigma=-)", mode); !r.ok()) return r;
    if (auto r = check_pair_laws(tplus_, tminus_, "(sigma=+)", mode); !r.ok()) return r;
    certified_.set();
    return CheckResult::pass();
}

void JordanPair::require_certified() const {
    if (certified_.get()) return;
    if (auto r = check_axioms(); !r.ok()) throw CheckFailed(*r.violation);
}

JordanTriple::JordanTriple(FreeModule module, TrilinearMap product)
    : mod_(std::move(module)), t_(std::move(product)) {
    if (t_.domain1() != mod_ || t_.domain2() != mod_ || t_.domain3() != mod_ ||
        t_.codomain() != mod_)
        throw std::invalid_argument("jordan triple: product must map T x T x T -> T");
}

CheckResult JordanTriple::check_axioms(kernels::Mode mode) const {
    if (auto r = check_pair_laws(t_, t_, "(triple)", mode); !r.ok()) return r;
    certified_.set();
    return CheckResult::pass();
}

void JordanTriple::require_certified() const {
    if (certified_.get()) return;
    if (auto r = check_axioms(); !r.ok()) throw CheckFailed(*r.violation);
}

JordanAlgebra::JordanAlgebra(FreeModule module, BilinearMap product, Vec unit)
    : mod_(std::move(module)), prod_(std::move(product)), unit_(std::move(unit)) {
    if (prod_.domain1() != mod_ || prod_.domain2() != mod_ || prod_.codomain() != mod_)
        throw std::invalid_argument("jordan algebra: product must map J x J -> J");
    if (unit_.size() != mod_.dim())
        throw std::invalid_argument("jordan algebra: unit dimension mismatch");
}

CheckResult JordanAlgebra::check_axioms(std::uint64_t seed, kernels::Mode mode) const {
    const Index d = mod_.dim();

    auto comm = kernels::first_failure(
        d * d, [&](Index idx) { return prod_.on_basis(idx / d, idx % d) ==
                                       prod_.on_basis(idx % d, idx / d); },
        mode);
    if (comm)
        return CheckResult::fail({"commutativity a*b=b*a", {*comm / d, *comm % d}, ""});

    auto unit_law = kernels::first_failure(
        d, [&](Index i) { return prod_.apply_vb(unit_, i) == mod_.basis(i); }, mode);
    if (unit_law) return CheckResult::fail({"unit law 1*a=a", {*unit_law}, ""});

    // Full linearization of (a^2*b)*a = a^2*(b*a) in a over (x,y,z);
    // equivalent to the Jordan identity over char 0 or p >= 5:
    //   sum over {x,y},{x,z},{y,z} of ((u*v)*b)*w  =  same sum of (u*v)*(b*w).
    auto jordan = kernels::first_failure(
        d * d * d * d,
        [&](Index idx) {
            Index b = idx % d;
            idx /= d;
            Index z = idx % d;
            idx /= d;
            Index y = idx % d;
            Index x = idx / d;
            const Vec xy = prod_.on_basis(x, y);
            const Vec xz = prod_.on_basis(x, z);
            const Vec yz = prod_.on_basis(y, z);
            Vec lhs = prod_.apply_vb(prod_.apply_vb(xy, b), z) +
                      prod_.apply_vb(prod_.apply_vb(xz, b), y) +
                      prod_.apply_vb(prod_.apply_vb(yz, b), x);
            Vec rhs = prod_.apply(xy, prod_.on_basis(b, z)) +
                      prod_.apply(xz, prod_.on_basis(b, y)) +
                      prod_.apply(yz, prod_.on_basis(b, x));
            return lhs == rhs;
        },
        mode);
    if (jordan) {
        Index idx = *jordan;
        Index b = idx % d;
        idx /= d;
        Index z = idx % d;
        idx /= d;
        return CheckResult::fail(
            {"linearized Jordan identity", {idx / d, idx % d, z, b}, ""});
    }

    // Spot checks of the original (non-multilinear) identity.
    const Index nsamples = 8;
    auto samples = sample_vectors(mod_.field(), d, 2 * nsamples, seed);
    auto spot = kernels::first_failure(
        nsamples,
        [&](Index s) {
            const Vec& a = samples[2 * s];
            const Vec& b = samples[2 * s + 1];
            Vec a2 = prod_.apply(a, a);
            return prod_.apply(prod_.apply(a2, b), a) == prod_.apply(a2, prod_.apply(b, a));
        },
        mode);
    if (spot) {
        std::ostringstream os;
        os << "a=" << samples[2 * *spot].str() << " b=" << samples[2 * *spot + 1].str();
        return CheckResult::fail({"Jordan identity (seeded sample)", {*spot}, os.str()});
    }

    certified_.set();
    return CheckResult::pass();
}

void JordanAlgebra::require_certified() const {
    if (certified_.get()) return;
    if (auto r = check_axioms(); !r.ok()) throw CheckFailed(*r.violation);
}

CheckResult check_pair_hom(const JordanPair& source, const JordanPair& target, const PairHom& h) {
    struct Leg {
        Sigma s;
        const LinearMap* gs;
        const LinearMap* go;
        const char* tag;
    };
    const Leg legs[2] = {{Sigma::minus, &h.minus_map, &h.plus_map, "(sigma=-)"},
                         {Sigma::plus, &h.plus_map, &h.minus_map, "(sigma=+)"}};
    for (const Leg& leg : legs) {
        const FreeModule& ps = source.component(leg.s);
        const FreeModule& po = source.component(flip(leg.s));
        for (Index a = 0; a < ps.dim(); ++a)
            for (Index b = 0; b < po.dim(); ++b)
                for (Index c = 0; c < ps.dim(); ++c) {
                    Vec lhs = leg.gs->apply(source.product(leg.s).on_basis(a, b, c));
                    Vec rhs = target.triple(leg.s, leg.gs->matrix().col(a),
                                            leg.go->matrix().col(b), leg.gs->matrix().col(c));
                    if (lhs != rhs)
                        return CheckResult::fail(
                            {std::string("pair homomorphism law ") + leg.tag, {a, b, c}, ""});
                }
    }
    return CheckResult::pass();
}

CheckResult check_triple_hom(const JordanTriple& source, const JordanTriple& target,
                             const LinearMap& g) {
    const Index d = source.module().dim();
    for (Index a = 0; a < d; ++a)
        for (Index b = 0; b < d; ++b)
            for (Index c = 0; c < d; ++c) {
                Vec lhs = g.apply(source.product().on_basis(a, b, c));
                Vec rhs = target.triple(g.matrix().col(a), g.matrix().col(b), g.matrix().col(c));
                if (lhs != rhs)
                    return CheckResult::fail({"triple homomorphism law", {a, b, c}, ""});
            }
    return CheckResult::pass();
}

CheckResult check_algebra_hom(const JordanAlgebra& source, const JordanAlgebra& target,
                              const LinearMap& g) {
    if (g.apply(source.unit()) != target.unit())
        return CheckResult::fail({"unital homomorphism: g(1)=1", {}, ""});
    const Index d = source.module().dim();
    for (Index a = 0; a < d; ++a)
        for (Index b = 0; b < d; ++b) {
            Vec lhs = g.apply(source.product().on_basis(a, b));
            Vec rhs = target.mul(g.matrix().col(a), g.matrix().col(b));
            if (lhs != rhs) return CheckResult::fail({"algebra homomorphism law", {a, b}, ""});
        }
    return CheckResult::pass();
}

CheckResult check_involution(const JordanPair& p, const PairInvolution& e) {
    const Index dm = p.minus().dim(), dp = p.plus().dim();
    if (e.eps_minus.matrix().rows() != dp || e.eps_minus.matrix().cols() != dm ||
        e.eps_plus.matrix().rows() != dm || e.eps_plus.matrix().cols() != dp)
        return CheckResult::fail({"involution shape", {}, "component map dimensions"});
    if (e.eps_plus.matrix() * e.eps_minus.matrix() != Matrix::identity(p.minus().field(), dm))
        return CheckResult::fail({"involution period 2 (eps+ . eps- = id)", {}, ""});
    if (e.eps_minus.matrix() * e.eps_plus.matrix() != Matrix::identity(p.minus().field(), dp))
        return CheckResult::fail({"involution period 2 (eps- . eps+ = id)", {}, ""});
    // homomorphism into the opposite pair:
    // eps_s({a,b,c}_s) = {eps_s a, eps_{-s} b, eps_s c}_{-s}
    for (Index a = 0; a < dm; ++a)
        for (Index b = 0; b < dp; ++b)
            for (Index c = 0; c < dm; ++c) {
                Vec lhs = e.eps_minus.apply(p.product(Sigma::minus).on_basis(a, b, c));
                Vec rhs = p.triple(Sigma::plus, e.eps_minus.matrix().col(a),
                                   e.eps_plus.matrix().col(b), e.eps_minus.matrix().col(c));
                if (lhs != rhs)
                    return CheckResult::fail({"involution hom law (sigma=-)", {a, b, c}, ""});
            }
    for (Index a = 0; a < dp; ++a)
        for (Index b = 0; b < dm; ++b)
            for (Index c = 0; c < dp; ++c) {
                Vec lhs = e.eps_plus.apply(p.product(Sigma::plus).on_basis(a, b, c));
                Vec rhs = p.triple(Sigma::minus, e.eps_plus.matrix().col(a),
                                   e.eps_minus.matrix().col(b), e.eps_plus.matrix().col(c));
                if (lhs != rhs)
                    return CheckResult::fail({"involution hom law (sigma=+)", {a, b, c}, ""});
            }
    return CheckResult::pass();
}

CheckResult check_involutary_hom(const JordanPair& source, const PairInvolution& es,
                                 const JordanPair& target, const PairInvolution& et,
                                 const PairHom& h) {
    if (auto r = check_pair_hom(source, target, h); !r.ok()) return r;
    if (et.eps_minus.matrix() * h.minus_map.matrix() !=
        h.plus_map.matrix() * es.eps_minus.matrix())
        return CheckResult::fail({"involutary condition (sigma=-)", {}, ""});
    if (et.eps_plus.matrix() * h.plus_map.matrix() !=
        h.minus_map.matrix() * es.eps_plus.matrix())
        return CheckResult::fail({"involutary condition (sigma=+)", {}, ""});
    return CheckResult::pass();
}

LinearMap v_operator(const JordanPair& p, Sigma s, const Vec& a, const Vec& b) {
    const FreeModule& ps = p.component(s);
    if (a.size() != ps.dim() || b.size() != p.component(flip(s)).dim())
        throw std::invalid_argument("v_operator: component mismatch");
    Matrix m(ps.field(), ps.dim(), ps.dim());
    for (Index c = 0; c < ps.dim(); ++c) m.set_col(c, p.triple(s, a, b, ps.basis(c)));
    return LinearMap(ps, ps, std::move(m));
}

JordanPair opposite(const JordanPair& p) {
    return JordanPair(p.plus(), p.minus(), p.product(Sigma::plus), p.product(Sigma::minus));
}

DoubledTriple double_jts(const JordanTriple& t) {
    t.require_certified();
    JordanPair pair(t.module(), t.module(), t.product(), t.product());
    pair.require_certified();
    PairInvolution kappa{LinearMap::identity(t.module()), LinearMap::identity(t.module())};
    if (auto r = check_involution(pair, kappa); !r.ok()) throw CheckFailed(*r.violation);
    return {std::move(pair), std::move(kappa)};
}

JordanTriple algebra_to_triple(const JordanAlgebra& j) {
    j.require_certified();
    const FreeModule& m = j.module();
    TrilinearMap t(m, m, m, m);
    for (Index a = 0; a < m.dim(); ++a)
        for (Index b = 0; b < m.dim(); ++b)
            for (Index c = 0; c < m.dim(); ++c) {
                Vec col = j.mul(j.product().on_basis(a, b), m.basis(c)) +
                          j.mul(m.basis(a), j.product().on_basis(b, c)) -
                          j.mul(m.basis(b), j.product().on_basis(c, a));
                t.set_column(a, b, c, col);
            }
    JordanTriple out(m, std::move(t));
    out.require_certified();
    return out;
}

AlgebraPair algebra_to_pair(const JordanAlgebra& j) {
    DoubledTriple d = double_jts(algebra_to_triple(j));
    AlgebraPair out{std::move(d.pair), j.unit()};
    if (!is_invertible(out.pair, Sigma::plus, out.unit_plus))
        throw CheckFailed({"algebra_to_pair: unit not invertible in the doubled pair", {}, ""});
    return out;
}

bool is_invertible(const JordanPair& p, Sigma s, const Vec& b) {
    const FreeModule& ps = p.component(s);
    const FreeModule& po = p.component(flip(s));
    if (b.size() != ps.dim()) throw std::invalid_argument("is_invertible: component mismatch");
    if (ps.dim() != po.dim()) return false;
    Matrix m(ps.field(), ps.dim(), po.dim());
    for (Index c = 0; c < po.dim(); ++c) m.set_col(c, p.triple(s, b, po.basis(c), b));
    return rank(m) == ps.dim();
}

}  // namespace tkkforge
