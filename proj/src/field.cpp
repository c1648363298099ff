#include "confsphere/field.hpp"

namespace confsphere {

namespace {

bool is_prime(unsigned long n) {
    if (n < 2)
        return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// a^-1 mod p by extended Euclid.
unsigned long mod_inverse(unsigned long a, unsigned long p) {
    long long t = 0, newt = 1;
    long long r = (long long)p, newr = (long long)(a % p);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1)
        throw std::domain_error("not invertible mod p");
    if (t < 0)
        t += p;
    return (unsigned long)t;
}

}  // namespace

FieldSpec::FieldSpec(unsigned long characteristic) : p_(characteristic) {
    if (p_ != 0 && !is_prime(p_))
        throw std::invalid_argument("field characteristic must be 0 or a prime, got " +
                                    std::to_string(p_));
}

std::string FieldSpec::str() const {
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::rational(mpq_class v) {
    Scalar s;
    if (v != 0)
        s.q_ = std::make_unique<mpq_class>(std::move(v));
    return s;
}

Scalar Scalar::zero(const FieldSpec& f) {
    Scalar s;
    s.p_ = f.characteristic();
    return s;
}

Scalar Scalar::one(const FieldSpec& f) {
    return from_long(1, f);
}

Scalar Scalar::from_long(long v, const FieldSpec& f) {
    Scalar s;
    s.p_ = f.characteristic();
    if (s.p_ == 0) {
        if (v != 0)
            s.q_ = std::make_unique<mpq_class>(v);
    } else {
        long m = v % (long)s.p_;
        if (m < 0)
            m += (long)s.p_;
        s.r_ = (unsigned long)m;
    }
    return s;
}

bool Scalar::is_one() const {
    if (p_ == 0)
        return q_ && *q_ == 1;
    return r_ == 1 % p_;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (p_ != o.p_)
        throw std::invalid_argument("scalar field mismatch");
    if (p_ != 0) {
        Scalar s;
        s.p_ = p_;
        s.r_ = (r_ + o.r_) % p_;
        return s;
    }
    if (!q_)
        return o;
    if (!o.q_)
        return *this;
    return rational(*q_ + *o.q_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (p_ != o.p_)
        throw std::invalid_argument("scalar field mismatch");
    if (p_ != 0) {
        Scalar s;
        s.p_ = p_;
        s.r_ = (r_ + p_ - o.r_) % p_;
        return s;
    }
    if (!o.q_)
        return *this;
    if (!q_)
        return rational(-*o.q_);
    return rational(*q_ - *o.q_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (p_ != o.p_)
        throw std::invalid_argument("scalar field mismatch");
    if (p_ != 0) {
        Scalar s;
        s.p_ = p_;
        s.r_ = (r_ * o.r_) % p_;
        return s;
    }
    if (!q_ || !o.q_) {
        Scalar s;
        return s;
    }
    return rational(*q_ * *o.q_);
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.p_ = p_;
    if (p_ == 0) {
        if (q_)
            s.q_ = std::make_unique<mpq_class>(-*q_);
    } else {
        s.r_ = r_ == 0 ? 0 : p_ - r_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw std::domain_error("inverse of zero");
    Scalar s;
    s.p_ = p_;
    if (p_ == 0)
        s.q_ = std::make_unique<mpq_class>(1 / *q_);
    else
        s.r_ = mod_inverse(r_, p_);
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_)
        return false;
    if (p_ != 0)
        return r_ == o.r_;
    if (!q_ || !o.q_)
        return !q_ && !o.q_;
    return *q_ == *o.q_;
}

std::string Scalar::str() const {
    if (p_ == 0)
        return q_ ? q_->get_str() : "0";
    return std::to_string(r_);
}

}  // namespace confsphere
