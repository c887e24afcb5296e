#include "fsforge/field.hpp"

namespace fsforge {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(unsigned p) {
    if (!is_prime(p) || p < 2 || p > 97)
        throw std::invalid_argument("modulus must be a prime in [2, 97], got " + std::to_string(p));
    return FieldSpec{FieldKind::prime_field, p};
}

Scalar::Scalar(const FieldSpec& f, long v) : field_(f) {
    if (f.is_prime_field()) {
        long m = v % (long)f.p;
        if (m < 0) m += f.p;
        r_ = (unsigned long)m;
    } else {
        q_ = v;
    }
}

Scalar Scalar::from_fraction(const mpq_class& q) {
    Scalar s;
    s.field_ = FieldSpec::rationals();
    s.q_ = q;
    s.q_.canonicalize();
    return s;
}

void Scalar::require_same(const Scalar& o) const {
    if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch");
}

bool Scalar::is_zero() const { return field_.is_prime_field() ? r_ == 0 : q_ == 0; }
bool Scalar::is_one() const { return field_.is_prime_field() ? r_ == 1 % field_.p : q_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(o);
    Scalar s(*this);
    if (field_.is_prime_field())
        s.r_ = (r_ + o.r_) % field_.p;
    else
        s.q_ = q_ + o.q_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same(o);
    Scalar s(*this);
    if (field_.is_prime_field())
        s.r_ = (r_ + field_.p - o.r_) % field_.p;
    else
        s.q_ = q_ - o.q_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(o);
    Scalar s(*this);
    if (field_.is_prime_field())
        s.r_ = (r_ * o.r_) % field_.p;
    else
        s.q_ = q_ * o.q_;
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (field_.is_prime_field())
        s.r_ = r_ == 0 ? 0 : field_.p - r_;
    else
        s.q_ = -q_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s(*this);
    if (field_.is_prime_field()) {
        // Fermat; p <= 97 so this is cheap
        unsigned long b = r_, e = field_.p - 2, acc = 1;
        while (e) {
            if (e & 1) acc = acc * b % field_.p;
            b = b * b % field_.p;
            e >>= 1;
        }
        s.r_ = acc;
    } else {
        s.q_ = 1 / q_;
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    return field_ == o.field_ && (field_.is_prime_field() ? r_ == o.r_ : q_ == o.q_);
}

bool Scalar::operator<(const Scalar& o) const {
    require_same(o);
    return field_.is_prime_field() ? r_ < o.r_ : q_ < o.q_;
}

unsigned long Scalar::residue() const {
    if (!field_.is_prime_field()) throw std::logic_error("residue() on rational scalar");
    return r_;
}

const mpq_class& Scalar::fraction() const {
    if (field_.is_prime_field()) throw std::logic_error("fraction() on prime-field scalar");
    return q_;
}

std::string Scalar::str() const {
    if (field_.is_prime_field()) return std::to_string(r_);
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    if (f.is_prime_field()) {
        size_t pos = 0;
        long v = std::stol(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("bad scalar literal: " + text);
        return Scalar(f, v);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    q.canonicalize();
    if (q.get_den() < 0) throw std::invalid_argument("bad rational literal: " + text);
    return from_fraction(q);
}

}  // namespace fsforge
