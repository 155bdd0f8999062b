#pragma once

#include "tkkforge/homology.hpp"
#include "tkkforge/tkk.hpp"

namespace tkkforge {

// Graded surjection phi: K -> L with central kernel inside K_0.
struct CentralExtension {
    GradedLieAlgebra total;
    GradedLieAlgebra base;
    Matrix phi;               // dim(base) x dim(total)
    std::vector<Vec> kernel;  // basis of Kr(phi), total coordinates
};

CheckResult certify_central_zero_extension(const CentralExtension& ext);
// computes the kernel and certifies; throws CheckFailed on violation
CentralExtension make_central_extension(GradedLieAlgebra total, GradedLieAlgebra base, Matrix phi);

// upsilon: uTKK(P) -> TKK(P) as a certified central 0-extension.
CentralExtension upsilon_extension(const UtkkAlgebra& u);

struct SplitResult {
    std::optional<Matrix> psi;       // section: dim(total) x dim(base)
    std::optional<Vec> obstruction;  // degree-0 cycle with nonzero cocycle value
    bool split() const { return psi.has_value(); }
};

// Constructive splitting through the graded section, the 2-cocycle
// sigma(x^y) = [eta x, eta y] - eta[x,y], and tau with sigma = tau([.,.]).
// Requires a 0-perfect base.
SplitResult split_central_zero_extension(const CentralExtension& ext);

// Equivalent to h2_graded(l) = 0; requires l 0-perfect.
bool is_centrally_zero_closed(const GradedLieAlgebra& l);

// L + k z with bracket twisted by a degree-0 2-cocycle; z is central of
// degree 0. The cocycle is a functional on (wedge^2 L)_0 coordinates.
CentralExtension twist_by_cocycle(const GradedLieAlgebra& l, const Vec& cocycle);

// Functional vanishing on im d_2 with value 1 on the given cycle witness.
Vec cocycle_from_witness(const GradedLieAlgebra& l, const Vec& cycle);

// The unique graded homomorphism uTKK(P) -> L restricting to gamma on
// degrees +-1 (gamma: P -> F_JP(L) certified inside).
GradedHom extend_pair_hom(const UtkkAlgebra& u, const PairHom& gamma,
                          const GradedLieAlgebra& target);

// Lift of a triple homomorphism gamma: T -> F_JTS(L, eps) through
// (eps gamma, gamma); asserts the result is involutary.
GradedHom extend_jts_hom(const JordanTriple& t, const UtkkInvolution& u, const LinearMap& gamma,
                         const GradedLieAlgebra& target, const AntiGradedInvolution& eps);

// Lift of a unital algebra homomorphism gamma: J -> F_JA(L, s) through the
// involution (-1/2 (ad e)^2, -1/2 (ad f)^2); asserts sl2-triple preservation.
GradedHom extend_ja_hom(const JordanAlgebra& j, const UtkkSl2& u, const LinearMap& gamma,
                        const GradedLieAlgebra& target, const Sl2Triple& s);

struct UniversalityReport {
    bool total_zero_perfect;
    std::optional<Index> total_h2;  // set when 0-perfect
    bool universal;
    std::string reason;  // empty when universal
};

// Recognition: a central 0-extension of a 0-perfect base is universal iff
// the total algebra is 0-perfect and centrally 0-closed.
UniversalityReport verify_universal(const CentralExtension& ext);

struct RoundtripResult {
    bool iso;
    GradedHom upsilon_hat;
    bool zero_perfect;
    Index h2_dim;
    std::string failure_reason;  // empty when iso
};

// upsilon-hat = extend_pair_hom(id, l): an isomorphism iff l is 0-perfect
// with vanishing H2^gr; the biconditional is asserted per instance.
RoundtripResult roundtrip_iso(const GradedLieAlgebra& l);

}  // namespace tkkforge
