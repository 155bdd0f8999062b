#pragma once

#include <atomic>
#include <map>

#include "tkkforge/jordan.hpp"

namespace tkkforge {

// Z-graded Lie algebra with explicit degrees on the basis and bracket
// structure constants on the total module.
class GradedLieAlgebra {
  public:
    GradedLieAlgebra(FreeModule total, std::vector<int> degrees, BilinearMap bracket);

    const FreeModule& total() const { return total_; }
    Index dim() const { return total_.dim(); }
    const std::vector<int>& degrees() const { return degree_; }
    int degree(Index i) const { return degree_[i]; }
    const BilinearMap& bracket_map() const { return bracket_; }

    // Degrees with nonzero component, increasing.
    std::vector<int> support() const;
    const std::vector<Index>& component(int d) const;
    Index component_dim(int d) const { return component(d).size(); }
    bool three_graded() const;

    Vec bracket(const Vec& x, const Vec& y) const { return bracket_.apply(x, y); }
    Vec bracket_basis(Index i, Index j) const { return bracket_.on_basis(i, j); }
    // [x, e_k] through the (i, k) columns
    Vec bracket_vb(const Vec& x, Index k) const { return bracket_.apply_vb(x, k); }
    Matrix ad(const Vec& x) const;

    // Component coordinates <-> total coordinates.
    Vec embed(int d, const Vec& comp) const;
    Vec extract(int d, const Vec& total) const;
    FreeModule component_module(int d) const;

    // Antisymmetry (including [x,x] = 0), Jacobi, grading compatibility.
    CheckResult check_graded_lie(kernels::Mode mode = kernels::default_mode()) const;
    void require_certified() const;

    friend bool operator==(const GradedLieAlgebra& a, const GradedLieAlgebra& b) {
        return a.total_ == b.total_ && a.degree_ == b.degree_ && a.bracket_ == b.bracket_;
    }

  private:
    FreeModule total_;
    std::vector<int> degree_;
    BilinearMap bracket_;
    std::map<int, std::vector<Index>> components_;
    mutable CertFlag certified_;
};

struct GradedHom {
    Matrix m;  // dim(target) x dim(source), total coordinates
};

CheckResult check_graded_hom(const GradedLieAlgebra& source, const GradedLieAlgebra& target,
                             const GradedHom& h);

// Period-2 Lie automorphism with eps(L_i) contained in L_{-i}.
struct AntiGradedInvolution {
    Matrix m;
};

CheckResult check_anti_graded_involution(const GradedLieAlgebra& l, const AntiGradedInvolution& e);

struct Sl2Triple {
    Vec h, e, f;
};

CheckResult check_sl2_triple(const GradedLieAlgebra& l, const Sl2Triple& s);

// (L_{-1}, L_1) with {a,b,c} = [[a,b],c]; certifies the result.
JordanPair forget_to_pair(const GradedLieAlgebra& l);

// Jordan triple on L_1 with {a,b,c} = [[a, eps(b)], c]; certifies the result.
JordanTriple forget_to_jts(const GradedLieAlgebra& l, const AntiGradedInvolution& eps);

// Unital Jordan algebra on L_1 with a.b = [[a,f],b] and identity e/2;
// requires the canonical A1-grading and certifies the result.
JordanAlgebra forget_to_ja(const GradedLieAlgebra& l, const Sl2Triple& s);

// The pair involution induced by an anti-graded involution on the
// degree +-1 components.
PairInvolution restrict_involution(const GradedLieAlgebra& l, const AntiGradedInvolution& eps);

enum class NotA1Reason { residual_eigenspace, non_integral_weights, not_zero_perfect };

struct A1Grading {
    std::optional<GradedLieAlgebra> algebra;  // in the eigenbasis, degrees -1/0/+1
    Matrix basis;       // columns: eigenbasis in input coordinates
    Matrix basis_inv;
    std::optional<NotA1Reason> error;
    bool ok() const { return algebra.has_value(); }
};

// Eigenspace decomposition for ad(h) with eigenvalues {-2, 0, 2};
// detected by rank/kernel computations, no eigensolver.
A1Grading grading_from_sl2(const GradedLieAlgebra& l, const Sl2Triple& s);

// True iff ad(h) acts on every graded component L_d as 2d and (l, s) is
// 0-perfect 3-graded, i.e. the sl2-induced grading is l's own grading.
bool grading_matches_canonical(const GradedLieAlgebra& l, const Sl2Triple& s);

bool is_zero_perfect(const GradedLieAlgebra& l);

// Basis of {x : [x, L] = 0} from the kernel of the stacked ad matrix.
std::vector<Vec> center(const GradedLieAlgebra& l);

std::string not_a1_reason_str(NotA1Reason r);

}  // namespace tkkforge
