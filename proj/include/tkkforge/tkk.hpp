#pragma once

#include "tkkforge/lie.hpp"

namespace tkkforge {

// nu(a, b) = (V_{a,b}, -V_{b,a}) acting on (P-, P+), for a in P-, b in P+.
struct NuPair {
    Matrix on_minus;
    Matrix on_plus;

    friend NuPair operator+(const NuPair& x, const NuPair& y) {
        return {x.on_minus + y.on_minus, x.on_plus + y.on_plus};
    }
    friend NuPair operator-(const NuPair& x, const NuPair& y) {
        return {x.on_minus - y.on_minus, x.on_plus - y.on_plus};
    }
    NuPair scaled(const Scalar& s) const { return {on_minus.scaled(s), on_plus.scaled(s)}; }
    // componentwise matrix commutator
    friend NuPair commutator(const NuPair& x, const NuPair& y) {
        return {x.on_minus * y.on_minus - y.on_minus * x.on_minus,
                x.on_plus * y.on_plus - y.on_plus * x.on_plus};
    }
    friend bool operator==(const NuPair& x, const NuPair& y) {
        return x.on_minus == y.on_minus && x.on_plus == y.on_plus;
    }
};

NuPair nu(const JordanPair& p, const Vec& a, const Vec& b);

// Flattened operator coordinates: row-major on_minus, then on_plus.
Vec flatten(const NuPair& x);
NuPair unflatten(const JordanPair& p, const Vec& v);

// X(c⊗d) = Xc⊗d + c⊗Xd on P-⊗P+ coordinates ((i,j) at i*dim(P+) + j).
Vec act_on_tensor(const NuPair& x, const Vec& w);
Vec pure_tensor(const Vec& u, const Vec& v);

// Span of the nu(e_i, f_j): canonical RREF basis over flattened operator
// coordinates, bracket structure constants, and the expression of every
// generator in the basis. Construction asserts the bracket identity
// [nu(a,b), nu(c,d)] = nu(nu(a,b)c, d) + nu(c, nu(a,b)d) on generator
// quadruples.
class InnerStructureAlgebra {
  public:
    InnerStructureAlgebra(const JordanPair& p, kernels::Mode mode);

    Index dim() const { return module_.dim(); }
    const FreeModule& module() const { return module_; }
    const SpanBasis& span() const { return span_; }
    const BilinearMap& bracket() const { return bracket_; }
    // basis operator r
    const NuPair& op(Index r) const { return ops_[r]; }
    // coords of nu(e_i, f_j), rows ordered by (i, j)
    const Matrix& generator_coords() const { return gen_coords_; }
    std::optional<Vec> coords(const NuPair& x) const { return span_.coords(flatten(x)); }
    NuPair op_of(const Vec& coords) const;

  private:
    Index dm_, dp_;
    FreeModule module_;
    SpanBasis span_;
    std::vector<NuPair> ops_;
    Matrix gen_coords_;
    BilinearMap bracket_;
};

InnerStructureAlgebra inner_structure_algebra(const JordanPair& p,
                                              kernels::Mode mode = kernels::default_mode());

// Eigenspace split of ins(T) under nu(x,y) -> -nu(y,x) for a doubled pair:
// minus_part = span{nu(a,b)+nu(b,a)}, plus_part = inner derivations
// span{nu(a,b)-nu(b,a)}. Coordinates in the ins basis.
struct InsDecomposition {
    InnerStructureAlgebra ins;
    std::vector<Vec> minus_part;
    std::vector<Vec> plus_part;
};
InsDecomposition ins_decomposition_jts(const JordanTriple& t);

// Eq-(5) shape for unital algebras: the nu(a,a) span equals the
// right-multiplication span {(R_x, -R_x)}.
bool ins_right_multiplication_match(const JordanAlgebra& j);

// TKK(P) = P- ⊕ ins(P) ⊕ P+ in degrees (-1, 0, +1).
struct TkkAlgebra {
    JordanPair pair;
    InnerStructureAlgebra ins;
    GradedLieAlgebra lie;
};
TkkAlgebra tkk(const JordanPair& p);

// Generators nu(e_i,f_j)(e_k⊗f_l) + nu(e_k,f_l)(e_i⊗f_j) of A(P-⊗P+),
// ordered by (i,j,k,l).
std::vector<Vec> relation_submodule(const JordanPair& p);

// Sampling oracle for the A(M) = span{lambda(m)·m} description: seeded
// sample vectors m must satisfy lambda(m)·m ∈ span(generators) (exact),
// and the sampled elements must span the generators back (generic).
bool relation_submodule_sample_check(const JordanPair& p, Index samples = 0,
                                     std::uint64_t seed = kDefaultSeed);

// uTKK(P) = P- ⊕ (P-⊗P+)/A ⊕ P+ with upsilon onto TKK(P).
struct UtkkAlgebra {
    JordanPair pair;
    TkkAlgebra base;
    QuotientSpace deg0;
    GradedLieAlgebra lie;
    Matrix upsilon;                  // dim TKK x dim uTKK
    std::vector<Vec> upsilon_kernel; // basis, uTKK coordinates
};
UtkkAlgebra utkk(const JordanPair& p);

// kappa-hat on uTKK(double T): a- + <c,d> + b+ |-> b- - <d,c> + a+,
// certified anti-graded; kappa_bar is the matching involution on TKK and
// upsilon intertwines them.
struct UtkkInvolution {
    UtkkAlgebra u;
    AntiGradedInvolution kappa_hat;
    AntiGradedInvolution kappa_bar;  // on u.base.lie
};
UtkkInvolution utkk_involution(const JordanTriple& t);

// sl2-triple on uTKK(double J): e = 2·1 in P+, f = 1 in P-, and h taken
// from whichever printed form certifies: -<1, 2·1> or <2·1, 1>.
struct UtkkSl2 {
    UtkkAlgebra u;
    Sl2Triple s;
    Sl2Triple s_bar;             // image on TKK
    std::string certified_form;  // "h = -<1,2>" or "h = <2,1>"
};
UtkkSl2 utkk_sl2(const JordanAlgebra& j);

// Builds <J,J> by quotienting J⊗J by the linearized span of
// a²⊗a - 1⊗a³ and machine-checks that this span equals the generic
// relation submodule of the doubled pair before assembling the bracket.
UtkkAlgebra utkk_algebra_shortcut(const JordanAlgebra& j);

// A(J⊗J) = A_symm ⊕ A_skew with
// A_symm = A ∩ S²(J) = span{2a⊗a + 1⊗a² + a²⊗1},
// A_skew = A ∩ (J∧J) = span{a²⊗a - a⊗a²}; all four identifications are
// asserted. Bases are canonical (RREF) in J⊗J coordinates.
struct SymmSkewSplit {
    std::vector<Vec> symm;
    std::vector<Vec> skew;
    Index relation_dim;
};
SymmSkewSplit symm_skew_split(const JordanAlgebra& j);

}  // namespace tkkforge
