#include "tkkforge/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace tkkforge {

Vec Vec::unit(const Field& f, Index n, Index i) {
    Vec v(f, n);
    v[i] = Scalar::one(f);
    return v;
}

bool Vec::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec& Vec::operator+=(const Vec& o) {
    if (o.size() != size()) throw std::logic_error("vec: size mismatch");
    for (Index i = 0; i < size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    if (o.size() != size()) throw std::logic_error("vec: size mismatch");
    for (Index i = 0; i < size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

Vec Vec::operator-() const {
    Vec v = *this;
    for (Index i = 0; i < v.size(); ++i) v[i] = -v[i];
    return v;
}

void Vec::add_scaled(const Scalar& s, const Vec& o) {
    if (o.size() != size()) throw std::logic_error("vec: size mismatch");
    if (s.is_zero()) return;
    for (Index i = 0; i < size(); ++i)
        if (!o.c_[i].is_zero()) c_[i] += s * o.c_[i];
}

std::string Vec::str() const {
    std::ostringstream os;
    os << "(";
    for (Index i = 0; i < size(); ++i) os << (i ? ", " : "") << c_[i].str();
    os << ")";
    return os.str();
}

Matrix Matrix::identity(const Field& f, Index n) {
    Matrix m(f, n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, Index cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (Index i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Matrix Matrix::from_cols(const Field& f, Index rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (Index j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

Vec Matrix::row(Index i) const {
    Vec v(f_, cols_);
    for (Index j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

Vec Matrix::col(Index j) const {
    Vec v(f_, rows_);
    for (Index i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_row(Index i, const Vec& v) {
    if (v.size() != cols_) throw std::logic_error("matrix: row size mismatch");
    for (Index j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Matrix::set_col(Index j, const Vec& v) {
    if (v.size() != rows_) throw std::logic_error("matrix: col size mismatch");
    for (Index i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
    Matrix t(f_, cols_, rows_);
    for (Index i = 0; i < rows_; ++i)
        for (Index j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::logic_error("matrix: product shape mismatch");
    Matrix r(f_, rows_, o.cols_);
    for (Index i = 0; i < rows_; ++i)
        for (Index k = 0; k < cols_; ++k) {
            const Scalar& aik = (*this)(i, k);
            if (aik.is_zero()) continue;
            for (Index j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) r(i, j) += aik * o(k, j);
        }
    return r;
}

Vec Matrix::operator*(const Vec& v) const {
    if (cols_ != v.size()) throw std::logic_error("matrix: apply shape mismatch");
    Vec r(f_, rows_);
    for (Index i = 0; i < rows_; ++i)
        for (Index j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix: shape mismatch");
    Matrix r = *this;
    for (Index i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix: shape mismatch");
    Matrix r = *this;
    for (Index i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& s : r.a_) s = -s;
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r = *this;
    for (auto& c : r.a_) c *= s;
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (Index i = 0; i < rows_; ++i) {
        os << "[";
        for (Index j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).str();
        os << "]" << (i + 1 < rows_ ? "\n" : "");
    }
    return os.str();
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<Index> pivots;
    Index lead = 0;
    for (Index col = 0; col < r.cols() && lead < r.rows(); ++col) {
        Index piv = lead;
        while (piv < r.rows() && r(piv, col).is_zero()) ++piv;
        if (piv == r.rows()) continue;
        if (piv != lead)
            for (Index j = 0; j < r.cols(); ++j) std::swap(r(piv, j), r(lead, j));
        Scalar inv = r(lead, col).inverse();
        for (Index j = col; j < r.cols(); ++j) r(lead, j) *= inv;
        for (Index i = 0; i < r.rows(); ++i) {
            if (i == lead || r(i, col).is_zero()) continue;
            Scalar factor = r(i, col);
            for (Index j = col; j < r.cols(); ++j) r(i, j) -= factor * r(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    Index rk = pivots.size();
    return {std::move(r), std::move(pivots), rk};
}

Index rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (Index p : r.pivot_cols) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (Index fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(m.field(), m.cols());
        v[fc] = Scalar::one(m.field());
        for (Index i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.m(i, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw std::logic_error("solve: shape mismatch");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    if (!r.pivot_cols.empty() && r.pivot_cols.back() == a.cols()) return std::nullopt;
    Vec x(a.field(), a.cols());
    for (Index i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = r.m(i, a.cols());
    return x;
}

SpanBasis::SpanBasis(const Field& f, Index ambient_dim, const std::vector<Vec>& generators)
    : f_(f), ambient_(ambient_dim), basis_(f, 0, ambient_dim) {
    for (const Vec& g : generators)
        if (g.size() != ambient_dim) throw std::logic_error("span: generator dimension mismatch");
    RrefResult r = rref(Matrix::from_rows(f, ambient_dim, generators));
    Matrix b(f, r.rank, ambient_dim);
    for (Index i = 0; i < r.rank; ++i) b.set_row(i, r.m.row(i));
    basis_ = std::move(b);
    pivots_ = std::move(r.pivot_cols);
}

Vec SpanBasis::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw std::logic_error("span: vector dimension mismatch");
    Vec w = v;
    for (Index i = 0; i < dim(); ++i) {
        const Scalar& c = w[pivots_[i]];
        if (!c.is_zero()) w.add_scaled(-c, basis_.row(i));
    }
    return w;
}

bool SpanBasis::contains(const Vec& v) const { return reduce(v).is_zero(); }

std::optional<Vec> SpanBasis::coords(const Vec& v) const {
    Vec w = v;
    Vec c(f_, dim());
    for (Index i = 0; i < dim(); ++i) {
        c[i] = w[pivots_[i]];
        if (!c[i].is_zero()) w.add_scaled(-c[i], basis_.row(i));
    }
    if (!w.is_zero()) return std::nullopt;
    return c;
}

bool subspace_equal(const std::vector<Vec>& gens_a, const std::vector<Vec>& gens_b,
                    Index ambient_dim, const Field& f) {
    return SpanBasis(f, ambient_dim, gens_a) == SpanBasis(f, ambient_dim, gens_b);
}

std::vector<Vec> span_intersection(const std::vector<Vec>& gens_a, const std::vector<Vec>& gens_b,
                                   Index ambient_dim, const Field& f) {
    SpanBasis a(f, ambient_dim, gens_a);
    SpanBasis b(f, ambient_dim, gens_b);
    // x = alpha A = beta B; kernel of [A^T | -B^T] gives the coefficient pairs.
    Matrix sys(f, ambient_dim, a.dim() + b.dim());
    for (Index j = 0; j < a.dim(); ++j) sys.set_col(j, a.basis().row(j));
    for (Index j = 0; j < b.dim(); ++j) {
        Vec v = -b.basis().row(j);
        sys.set_col(a.dim() + j, v);
    }
    std::vector<Vec> gens;
    for (const Vec& k : kernel_basis(sys)) {
        Vec x(f, ambient_dim);
        for (Index j = 0; j < a.dim(); ++j) x.add_scaled(k[j], a.basis().row(j));
        gens.push_back(std::move(x));
    }
    SpanBasis inter(f, ambient_dim, gens);
    std::vector<Vec> out;
    for (Index i = 0; i < inter.dim(); ++i) out.push_back(inter.basis().row(i));
    return out;
}

QuotientSpace::QuotientSpace(const Field& f, Index ambient_dim, const std::vector<Vec>& generators)
    : f_(f), sub_(f, ambient_dim, generators) {
    std::vector<bool> is_pivot(ambient_dim, false);
    for (Index p : sub_.pivot_cols()) is_pivot[p] = true;
    for (Index c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) free_cols_.push_back(c);
}

Vec QuotientSpace::project(const Vec& v) const {
    Vec w = sub_.reduce(v);
    Vec c(f_, dim());
    for (Index i = 0; i < dim(); ++i) c[i] = w[free_cols_[i]];
    return c;
}

Vec QuotientSpace::lift(const Vec& coset) const {
    if (coset.size() != dim()) throw std::logic_error("quotient: coset dimension mismatch");
    Vec v(f_, ambient_dim());
    for (Index i = 0; i < dim(); ++i) v[free_cols_[i]] = coset[i];
    return v;
}

}  // namespace tkkforge
