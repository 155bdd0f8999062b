#include "tkkforge/field.hpp"

namespace tkkforge {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

void Field::validate() const {
    if (p == 0) return;
    if (p < 5) throw std::invalid_argument("field: prime must be >= 5 (no 2- or 3-torsion)");
    if (p >= (std::int64_t{1} << 31)) throw std::invalid_argument("field: prime must be < 2^31");
    if (!is_prime(p)) throw std::invalid_argument("field: " + std::to_string(p) + " is not prime");
}

namespace {

std::int64_t mod_pos(std::int64_t n, std::int64_t p) {
    std::int64_t r = n % p;
    return r < 0 ? r + p : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("scalar: not invertible mod p");
    return mod_pos(t, p);
}

}  // namespace

Scalar Scalar::of_int(const Field& f, std::int64_t n) {
    Scalar s(f);
    if (f.rational())
        s.q_ = n;
    else
        s.r_ = mod_pos(n, f.p);
    return s;
}

Scalar Scalar::of_fraction(const Field& f, std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("scalar: zero denominator");
    Scalar s(f);
    if (f.rational()) {
        s.q_ = mpq_class(num, den);
        s.q_.canonicalize();
    } else {
        std::int64_t d = mod_pos(den, f.p);
        if (d == 0) throw std::domain_error("scalar: denominator vanishes mod p");
        s.r_ = mul_mod(mod_pos(num, f.p), inv_mod(d, f.p), f.p);
    }
    return s;
}

Scalar Scalar::of_rational(const Field& f, const mpq_class& q) {
    Scalar s(f);
    if (f.rational()) {
        s.q_ = q;
        s.q_.canonicalize();
    } else {
        mpz_class p(static_cast<long>(f.p));
        mpz_class num = q.get_num() % p;
        mpz_class den = q.get_den() % p;
        std::int64_t d = mod_pos(den.get_si(), f.p);
        if (d == 0) throw std::domain_error("scalar: denominator vanishes mod p");
        s.r_ = mul_mod(mod_pos(num.get_si(), f.p), inv_mod(d, f.p), f.p);
    }
    return s;
}

bool Scalar::is_zero() const { return f_.rational() ? q_ == 0 : r_ == 0; }

void Scalar::check_field(const Scalar& o) const {
    if (f_ != o.f_) throw std::logic_error("scalar: mixed fields");
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_field(o);
    if (f_.rational())
        q_ += o.q_;
    else
        r_ = (r_ + o.r_) % f_.p;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_field(o);
    if (f_.rational())
        q_ -= o.q_;
    else
        r_ = mod_pos(r_ - o.r_, f_.p);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_field(o);
    if (f_.rational())
        q_ *= o.q_;
    else
        r_ = mul_mod(r_, o.r_, f_.p);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_field(o);
    if (o.is_zero()) throw std::domain_error("scalar: division by zero");
    if (f_.rational())
        q_ /= o.q_;
    else
        r_ = mul_mod(r_, inv_mod(o.r_, f_.p), f_.p);
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar s(f_);
    if (f_.rational())
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : f_.p - r_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("scalar: inverse of zero");
    Scalar s(f_);
    if (f_.rational())
        s.q_ = 1 / q_;
    else
        s.r_ = inv_mod(r_, f_.p);
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.check_field(b);
    return a.f_.rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::str() const {
    return f_.rational() ? q_.get_str() : std::to_string(r_);
}

const mpq_class& Scalar::rat() const {
    if (!f_.rational()) throw std::logic_error("scalar: rat() on GF(p) element");
    return q_;
}

std::int64_t Scalar::residue() const {
    if (f_.rational()) throw std::logic_error("scalar: residue() on rational");
    return r_;
}

}  // namespace tkkforge
