#pragma once

#include "tkkforge/check.hpp"
#include "tkkforge/freemod.hpp"
#include "tkkforge/kernels.hpp"

namespace tkkforge {

enum class Sigma { minus, plus };
inline Sigma flip(Sigma s) { return s == Sigma::minus ? Sigma::plus : Sigma::minus; }

// Jordan pair (P-, P+) with trilinear products
// t-: P- x P+ x P- -> P-  and  t+: P+ x P- x P+ -> P+.
class JordanPair {
  public:
    JordanPair(FreeModule minus, FreeModule plus, TrilinearMap tminus, TrilinearMap tplus);

    const FreeModule& component(Sigma s) const { return s == Sigma::minus ? minus_ : plus_; }
    const FreeModule& minus() const { return minus_; }
    const FreeModule& plus() const { return plus_; }
    const TrilinearMap& product(Sigma s) const { return s == Sigma::minus ? tminus_ : tplus_; }

    // {a, b, c}_sigma with a, c in P_sigma and b in P_{-sigma}
    Vec triple(Sigma s, const Vec& a, const Vec& b, const Vec& c) const {
        return product(s).apply(a, b, c);
    }

    // Outer symmetry and the V-operator identity on all basis tuples.
    CheckResult check_axioms(kernels::Mode mode = kernels::default_mode()) const;
    void require_certified() const;
    bool certified() const { return certified_.get(); }

    friend bool operator==(const JordanPair& a, const JordanPair& b) {
        return a.minus_ == b.minus_ && a.plus_ == b.plus_ && a.tminus_ == b.tminus_ &&
               a.tplus_ == b.tplus_;
    }

  private:
    FreeModule minus_, plus_;
    TrilinearMap tminus_, tplus_;
    mutable CertFlag certified_;
};

class JordanTriple {
  public:
    JordanTriple(FreeModule module, TrilinearMap product);

    const FreeModule& module() const { return mod_; }
    const TrilinearMap& product() const { return t_; }
    Vec triple(const Vec& a, const Vec& b, const Vec& c) const { return t_.apply(a, b, c); }

    CheckResult check_axioms(kernels::Mode mode = kernels::default_mode()) const;
    void require_certified() const;

    friend bool operator==(const JordanTriple& a, const JordanTriple& b) {
        return a.mod_ == b.mod_ && a.t_ == b.t_;
    }

  private:
    FreeModule mod_;
    TrilinearMap t_;
    mutable CertFlag certified_;
};

// Unital Jordan algebra. The Jordan identity is checked through its full
// linearization on basis quadruples (sound and complete over char 0 or
// p >= 5) plus seeded spot checks of the original identity.
class JordanAlgebra {
  public:
    JordanAlgebra(FreeModule module, BilinearMap product, Vec unit);

    const FreeModule& module() const { return mod_; }
    const BilinearMap& product() const { return prod_; }
    const Vec& unit() const { return unit_; }
    Vec mul(const Vec& a, const Vec& b) const { return prod_.apply(a, b); }

    CheckResult check_axioms(std::uint64_t seed = kDefaultSeed,
                             kernels::Mode mode = kernels::default_mode()) const;
    void require_certified() const;

    friend bool operator==(const JordanAlgebra& a, const JordanAlgebra& b) {
        return a.mod_ == b.mod_ && a.prod_ == b.prod_ && a.unit_ == b.unit_;
    }

  private:
    FreeModule mod_;
    BilinearMap prod_;
    Vec unit_;
    mutable CertFlag certified_;
};

struct PairHom {
    LinearMap minus_map;  // P- -> Q-
    LinearMap plus_map;   // P+ -> Q+
    static PairHom identity(const JordanPair& p) {
        return {LinearMap::identity(p.minus()), LinearMap::identity(p.plus())};
    }
};

// Involution of P: a pair homomorphism P -> P^op of period two;
// eps_minus: P- -> P+, eps_plus: P+ -> P-.
struct PairInvolution {
    LinearMap eps_minus;
    LinearMap eps_plus;
};

CheckResult check_pair_hom(const JordanPair& source, const JordanPair& target, const PairHom& h);
CheckResult check_triple_hom(const JordanTriple& source, const JordanTriple& target,
                             const LinearMap& g);
CheckResult check_algebra_hom(const JordanAlgebra& source, const JordanAlgebra& target,
                              const LinearMap& g);
CheckResult check_involution(const JordanPair& p, const PairInvolution& e);
// Involutary condition eps_Q . gamma = gamma^op . eps_P on top of the hom law.
CheckResult check_involutary_hom(const JordanPair& source, const PairInvolution& es,
                                 const JordanPair& target, const PairInvolution& et,
                                 const PairHom& h);

// Matrix of c -> {a, b, c}_sigma on P_sigma (a in P_sigma, b in P_{-sigma}).
LinearMap v_operator(const JordanPair& p, Sigma s, const Vec& a, const Vec& b);

JordanPair opposite(const JordanPair& p);

struct DoubledTriple {
    JordanPair pair;
    PairInvolution kappa;  // canonical involution: identity on both copies
};
DoubledTriple double_jts(const JordanTriple& t);

// {a,b,c} := (a.b).c + a.(b.c) - b.(c.a)
JordanTriple algebra_to_triple(const JordanAlgebra& j);

struct AlgebraPair {
    JordanPair pair;
    Vec unit_plus;  // coordinates of 1 in P+
};
AlgebraPair algebra_to_pair(const JordanAlgebra& j);

// True iff a -> {b, a, b}_sigma : P_{-sigma} -> P_sigma has full rank.
bool is_invertible(const JordanPair& p, Sigma s, const Vec& b);

}  // namespace tkkforge
