#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace fsforge {

enum class FieldKind { prime_field, rational };

// Coefficient field: F_p for a prime 2 <= p <= 97, or arbitrary-precision Q.
struct FieldSpec {
    FieldKind kind = FieldKind::rational;
    unsigned p = 0;

    static FieldSpec prime(unsigned p);
    static FieldSpec rationals() { return FieldSpec{FieldKind::rational, 0}; }

    bool is_prime_field() const { return kind == FieldKind::prime_field; }
    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

bool is_prime(unsigned n);

// Exact scalar in canonical form: residue 0..p-1, or reduced fraction with
// positive denominator.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()), q_(0) {}
    Scalar(const FieldSpec& f, long v);
    static Scalar from_fraction(const mpq_class& q);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // throws std::domain_error on zero

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // total order within one field (residue order / rational order); used for
    // deterministic scans
    bool operator<(const Scalar& o) const;

    unsigned long residue() const;      // prime-field mode only
    const mpq_class& fraction() const;  // rational mode only

    std::string str() const;  // canonical: decimal residue or "a/b" (b >= 1)
    static Scalar parse(const FieldSpec& f, const std::string& text);

private:
    FieldSpec field_;
    unsigned long r_ = 0;
    mpq_class q_;
    void require_same(const Scalar& o) const;
};

inline Scalar zero_of(const FieldSpec& f) { return Scalar(f, 0); }
inline Scalar one_of(const FieldSpec& f) { return Scalar(f, 1); }

}  // namespace fsforge
