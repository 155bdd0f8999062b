#include "tkkforge/freemod.hpp"

#include <algorithm>
#include <set>

namespace tkkforge {

FreeModule::FreeModule(const Field& f, std::vector<std::string> labels)
    : f_(f), labels_(std::move(labels)) {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw std::invalid_argument("module: duplicate basis labels");
}

FreeModule FreeModule::standard(const Field& f, Index dim, const std::string& stem) {
    std::vector<std::string> labels;
    labels.reserve(dim);
    for (Index i = 0; i < dim; ++i) labels.push_back(stem + std::to_string(i + 1));
    return FreeModule(f, std::move(labels));
}

FreeModule tensor(const FreeModule& m1, const FreeModule& m2) {
    if (m1.field() != m2.field()) throw std::invalid_argument("tensor: field mismatch");
    std::vector<std::string> labels;
    labels.reserve(m1.dim() * m2.dim());
    for (Index i = 0; i < m1.dim(); ++i)
        for (Index j = 0; j < m2.dim(); ++j)
            labels.push_back("(" + m1.label(i) + "(x)" + m2.label(j) + ")");
    return FreeModule(m1.field(), std::move(labels));
}

LinearMap::LinearMap(FreeModule domain, FreeModule codomain, Matrix m)
    : dom_(std::move(domain)), cod_(std::move(codomain)), m_(std::move(m)) {
    if (m_.rows() != cod_.dim() || m_.cols() != dom_.dim())
        throw std::invalid_argument("linear map: matrix shape mismatch");
}

LinearMap LinearMap::identity(const FreeModule& m) {
    return LinearMap(m, m, Matrix::identity(m.field(), m.dim()));
}

LinearMap LinearMap::zero(const FreeModule& domain, const FreeModule& codomain) {
    return LinearMap(domain, codomain, Matrix(domain.field(), codomain.dim(), domain.dim()));
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
    if (inner.cod_ != dom_) throw std::invalid_argument("linear map: composition mismatch");
    return LinearMap(inner.dom_, cod_, m_ * inner.m_);
}

BilinearMap::BilinearMap(FreeModule d1, FreeModule d2, FreeModule cod)
    : d1_(std::move(d1)), d2_(std::move(d2)), cod_(std::move(cod)) {}

void BilinearMap::set(Index i, Index j, Index l, const Scalar& c) {
    if (i >= d1_.dim() || j >= d2_.dim() || l >= cod_.dim())
        throw std::out_of_range("bilinear: index out of range");
    if (c.is_zero())
        c_.erase({i, j, l});
    else
        c_[{i, j, l}] = c;
}

void BilinearMap::set_column(Index i, Index j, const Vec& value) {
    for (Index l = 0; l < cod_.dim(); ++l) set(i, j, l, value[l]);
}

Vec BilinearMap::on_basis(Index i, Index j) const {
    Vec v = cod_.zero();
    auto it = c_.lower_bound({i, j, 0});
    for (; it != c_.end() && it->first[0] == i && it->first[1] == j; ++it)
        v[it->first[2]] += it->second;
    return v;
}

Vec BilinearMap::apply_vb(const Vec& x, Index j) const {
    Vec v = cod_.zero();
    for (Index i = 0; i < d1_.dim(); ++i) {
        if (x[i].is_zero()) continue;
        auto it = c_.lower_bound({i, j, 0});
        for (; it != c_.end() && it->first[0] == i && it->first[1] == j; ++it)
            v[it->first[2]] += it->second * x[i];
    }
    return v;
}

Vec BilinearMap::apply(const Vec& x, const Vec& y) const {
    if (x.size() != d1_.dim() || y.size() != d2_.dim())
        throw std::invalid_argument("bilinear: argument dimension mismatch");
    Vec v = cod_.zero();
    for (const auto& [idx, c] : c_) {
        const Scalar& xi = x[idx[0]];
        const Scalar& yj = y[idx[1]];
        if (!xi.is_zero() && !yj.is_zero()) v[idx[2]] += c * xi * yj;
    }
    return v;
}

TrilinearMap::TrilinearMap(FreeModule d1, FreeModule d2, FreeModule d3, FreeModule cod)
    : d1_(std::move(d1)), d2_(std::move(d2)), d3_(std::move(d3)), cod_(std::move(cod)) {}

void TrilinearMap::set(Index i, Index j, Index k, Index l, const Scalar& c) {
    if (i >= d1_.dim() || j >= d2_.dim() || k >= d3_.dim() || l >= cod_.dim())
        throw std::out_of_range("trilinear: index out of range");
    if (c.is_zero())
        c_.erase({i, j, k, l});
    else
        c_[{i, j, k, l}] = c;
}

void TrilinearMap::set_column(Index i, Index j, Index k, const Vec& value) {
    for (Index l = 0; l < cod_.dim(); ++l) set(i, j, k, l, value[l]);
}

Vec TrilinearMap::on_basis(Index i, Index j, Index k) const {
    Vec v = cod_.zero();
    auto it = c_.lower_bound({i, j, k, 0});
    for (; it != c_.end() && it->first[0] == i && it->first[1] == j && it->first[2] == k; ++it)
        v[it->first[3]] += it->second;
    return v;
}

Vec TrilinearMap::apply_bbv(Index i, Index j, const Vec& z) const {
    Vec v = cod_.zero();
    auto it = c_.lower_bound({i, j, 0, 0});
    for (; it != c_.end() && it->first[0] == i && it->first[1] == j; ++it)
        if (!z[it->first[2]].is_zero()) v[it->first[3]] += it->second * z[it->first[2]];
    return v;
}

Vec TrilinearMap::apply_bvb(Index i, const Vec& y, Index k) const {
    Vec v = cod_.zero();
    for (Index j = 0; j < d2_.dim(); ++j) {
        if (y[j].is_zero()) continue;
        auto it = c_.lower_bound({i, j, k, 0});
        for (; it != c_.end() && it->first[0] == i && it->first[1] == j && it->first[2] == k; ++it)
            v[it->first[3]] += it->second * y[j];
    }
    return v;
}

Vec TrilinearMap::apply_vbb(const Vec& x, Index j, Index k) const {
    Vec v = cod_.zero();
    for (Index i = 0; i < d1_.dim(); ++i) {
        if (x[i].is_zero()) continue;
        auto it = c_.lower_bound({i, j, k, 0});
        for (; it != c_.end() && it->first[0] == i && it->first[1] == j && it->first[2] == k; ++it)
            v[it->first[3]] += it->second * x[i];
    }
    return v;
}

Vec TrilinearMap::apply(const Vec& x, const Vec& y, const Vec& z) const {
    if (x.size() != d1_.dim() || y.size() != d2_.dim() || z.size() != d3_.dim())
        throw std::invalid_argument("trilinear: argument dimension mismatch");
    Vec v = cod_.zero();
    for (const auto& [idx, c] : c_) {
        const Scalar& xi = x[idx[0]];
        if (xi.is_zero()) continue;
        const Scalar& yj = y[idx[1]];
        if (yj.is_zero()) continue;
        const Scalar& zk = z[idx[2]];
        if (zk.is_zero()) continue;
        v[idx[3]] += c * xi * yj * zk;
    }
    return v;
}

WedgeSpace::WedgeSpace(Index underlying_dim, std::vector<int> degrees, unsigned n)
    : udim_(underlying_dim), udeg_(std::move(degrees)), n_(n) {
    if (n_ == 0) throw std::invalid_argument("wedge: exponent must be >= 1");
    if (udeg_.size() != udim_) throw std::invalid_argument("wedge: degree list size mismatch");
    if (n_ > udim_) return;  // empty basis
    std::vector<Index> t(n_);
    for (unsigned i = 0; i < n_; ++i) t[i] = i;
    while (true) {
        int d = 0;
        for (Index i : t) d += udeg_[i];
        pos_[t] = tuples_.size();
        tuples_.push_back(t);
        degree_.push_back(d);
        // next increasing tuple in lexicographic order
        int k = static_cast<int>(n_) - 1;
        while (k >= 0 && t[k] == udim_ - n_ + k) --k;
        if (k < 0) break;
        ++t[k];
        for (unsigned i = k + 1; i < n_; ++i) t[i] = t[i - 1] + 1;
    }
}

std::vector<Index> WedgeSpace::degree_slice(int d) const {
    std::vector<Index> out;
    for (Index t = 0; t < size(); ++t)
        if (degree_[t] == d) out.push_back(t);
    return out;
}

std::optional<std::pair<Index, int>> WedgeSpace::locate(std::vector<Index> t) const {
    if (t.size() != n_) throw std::invalid_argument("wedge: tuple arity mismatch");
    int sign = 1;
    // insertion sort, tracking the permutation parity
    for (Index i = 1; i < t.size(); ++i) {
        Index j = i;
        while (j > 0 && t[j - 1] > t[j]) {
            std::swap(t[j - 1], t[j]);
            sign = -sign;
            --j;
        }
    }
    for (Index i = 1; i < t.size(); ++i)
        if (t[i - 1] == t[i]) return std::nullopt;
    auto it = pos_.find(t);
    if (it == pos_.end()) throw std::logic_error("wedge: tuple outside basis");
    return std::make_pair(it->second, sign);
}

}  // namespace tkkforge
