#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tkkforge/linalg.hpp"

namespace tkkforge {

// Finite free module with a labeled ordered basis.
class FreeModule {
  public:
    FreeModule(const Field& f, std::vector<std::string> labels);
    static FreeModule standard(const Field& f, Index dim, const std::string& stem);

    const Field& field() const { return f_; }
    Index dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Index i) const { return labels_[i]; }

    Vec zero() const { return Vec(f_, dim()); }
    Vec basis(Index i) const { return Vec::unit(f_, dim(), i); }

    friend bool operator==(const FreeModule& a, const FreeModule& b) {
        return a.f_ == b.f_ && a.labels_ == b.labels_;
    }
    friend bool operator!=(const FreeModule& a, const FreeModule& b) { return !(a == b); }

  private:
    Field f_;
    std::vector<std::string> labels_;
};

// Basis labels are pairs "(a⊗b)", ordered lexicographically in (i, j);
// the pair (i, j) sits at position i*dim(m2) + j.
FreeModule tensor(const FreeModule& m1, const FreeModule& m2);

class LinearMap {
  public:
    LinearMap(FreeModule domain, FreeModule codomain, Matrix m);
    static LinearMap identity(const FreeModule& m);
    static LinearMap zero(const FreeModule& domain, const FreeModule& codomain);

    const FreeModule& domain() const { return dom_; }
    const FreeModule& codomain() const { return cod_; }
    const Matrix& matrix() const { return m_; }

    Vec apply(const Vec& v) const { return m_ * v; }
    LinearMap compose(const LinearMap& inner) const;  // this ∘ inner

    friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.m_ == b.m_; }

  private:
    FreeModule dom_, cod_;
    Matrix m_;
};

// Bilinear map as a sparse structure-constant tensor:
// (e_i, e_j) -> sum_l c[i,j,l] e_l.
class BilinearMap {
  public:
    BilinearMap(FreeModule d1, FreeModule d2, FreeModule cod);

    const FreeModule& domain1() const { return d1_; }
    const FreeModule& domain2() const { return d2_; }
    const FreeModule& codomain() const { return cod_; }

    void set(Index i, Index j, Index l, const Scalar& c);
    void set_column(Index i, Index j, const Vec& value);
    const std::map<std::array<Index, 3>, Scalar>& entries() const { return c_; }

    Vec on_basis(Index i, Index j) const;
    Vec apply(const Vec& x, const Vec& y) const;
    // apply(x, e_j) through the (i, j) columns; cheaper than a full apply
    Vec apply_vb(const Vec& x, Index j) const;

    friend bool operator==(const BilinearMap& a, const BilinearMap& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BilinearMap& a, const BilinearMap& b) { return !(a == b); }

  private:
    FreeModule d1_, d2_, cod_;
    std::map<std::array<Index, 3>, Scalar> c_;  // zero entries dropped
};

// Trilinear map: (e_i, e_j, e_k) -> sum_l c[i,j,k,l] e_l.
class TrilinearMap {
  public:
    TrilinearMap(FreeModule d1, FreeModule d2, FreeModule d3, FreeModule cod);

    const FreeModule& domain1() const { return d1_; }
    const FreeModule& domain2() const { return d2_; }
    const FreeModule& domain3() const { return d3_; }
    const FreeModule& codomain() const { return cod_; }

    void set(Index i, Index j, Index k, Index l, const Scalar& c);
    void set_column(Index i, Index j, Index k, const Vec& value);
    const std::map<std::array<Index, 4>, Scalar>& entries() const { return c_; }

    Vec on_basis(Index i, Index j, Index k) const;
    Vec apply(const Vec& x, const Vec& y, const Vec& z) const;
    // partial applications with basis vectors in the named slots
    Vec apply_bbv(Index i, Index j, const Vec& z) const;
    Vec apply_bvb(Index i, const Vec& y, Index k) const;
    Vec apply_vbb(const Vec& x, Index j, Index k) const;

    friend bool operator==(const TrilinearMap& a, const TrilinearMap& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TrilinearMap& a, const TrilinearMap& b) { return !(a == b); }

  private:
    FreeModule d1_, d2_, d3_, cod_;
    std::map<std::array<Index, 4>, Scalar> c_;
};

// n-th exterior power of a graded module: basis of strictly increasing
// n-tuples in lexicographic order, each carrying its total degree.
class WedgeSpace {
  public:
    WedgeSpace(Index underlying_dim, std::vector<int> degrees, unsigned n);

    Index underlying_dim() const { return udim_; }
    unsigned exponent() const { return n_; }
    Index size() const { return tuples_.size(); }
    const std::vector<Index>& tuple(Index t) const { return tuples_[t]; }
    int degree(Index t) const { return degree_[t]; }

    // Indices of basis tuples of total degree d, in basis order.
    std::vector<Index> degree_slice(int d) const;

    // Position and sign of an arbitrary index tuple; nullopt when an index
    // repeats (the wedge vanishes).
    std::optional<std::pair<Index, int>> locate(std::vector<Index> t) const;

  private:
    Index udim_;
    std::vector<int> udeg_;
    unsigned n_;
    std::vector<std::vector<Index>> tuples_;
    std::vector<int> degree_;
    std::map<std::vector<Index>, Index> pos_;
};

}  // namespace tkkforge
