#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tkkforge {

// Ground field descriptor: the rationals (p == 0) or GF(p) for a prime
// p >= 5. Primes are capped below 2^31 so residue products fit in int64.
struct Field {
    std::int64_t p = 0;

    bool rational() const { return p == 0; }

    void validate() const;

    std::string str() const { return rational() ? "rational" : "prime " + std::to_string(p); }

    friend bool operator==(const Field& a, const Field& b) { return a.p == b.p; }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }
};

bool is_prime(std::int64_t n);

// Exact field element. Rationals are GMP mpq values (always reduced,
// denominator > 0, maintained by GMP); GF(p) elements are residues in [0, p).
class Scalar {
  public:
    Scalar() = default;  // rational zero

    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f) { return of_int(f, 1); }
    static Scalar of_int(const Field& f, std::int64_t n);
    static Scalar of_fraction(const Field& f, std::int64_t num, std::int64_t den);
    // Reduce an exact rational into the field (mod-p image for GF(p);
    // throws if the denominator vanishes mod p).
    static Scalar of_rational(const Field& f, const mpq_class& q);

    const Field& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const { return *this == one(f_); }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // "n", "-n/d" for rationals; the residue for GF(p).
    std::string str() const;

    // Rational value (rational fields only).
    const mpq_class& rat() const;
    // Residue value (GF(p) only).
    std::int64_t residue() const;

  private:
    explicit Scalar(const Field& f) : f_(f) {}
    void check_field(const Scalar& o) const;

    Field f_{};
    mpq_class q_{0};       // used when f_.rational()
    std::int64_t r_ = 0;   // used for GF(p)
};

}  // namespace tkkforge
