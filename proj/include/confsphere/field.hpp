#ifndef CONFSPHERE_FIELD_HPP
#define CONFSPHERE_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

namespace confsphere {

/// Coefficient field: characteristic 0 (the rationals) or a prime p.
class FieldSpec {
public:
    explicit FieldSpec(unsigned long characteristic);

    unsigned long characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }
    bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

    std::string str() const;

private:
    unsigned long p_;
};

// Exact field element. Rationals live behind a lazily allocated mpq_class
// kept in lowest terms (null means zero), so prime-field scalars stay plain
// machine integers; residues are reduced mod p.
class Scalar {
public:
    Scalar() : p_(0), r_(0) {}  // zero over Q

    Scalar(const Scalar& o) : p_(o.p_), r_(o.r_) {
        if (o.q_)
            q_ = std::make_unique<mpq_class>(*o.q_);
    }
    Scalar(Scalar&&) noexcept = default;
    Scalar& operator=(const Scalar& o) {
        if (this != &o) {
            p_ = o.p_;
            r_ = o.r_;
            q_ = o.q_ ? std::make_unique<mpq_class>(*o.q_) : nullptr;
        }
        return *this;
    }
    Scalar& operator=(Scalar&&) noexcept = default;

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_long(long v, const FieldSpec& f);

    unsigned long characteristic() const { return p_; }
    bool is_zero() const { return p_ == 0 ? q_ == nullptr : r_ == 0; }
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // throws on zero
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    static Scalar rational(mpq_class v);

    unsigned long p_;   // 0 = rationals
    unsigned long r_;   // residue in [0, p) when p_ > 0
    std::unique_ptr<mpq_class> q_;  // nonzero value when p_ == 0
};

}  // namespace confsphere

#endif
