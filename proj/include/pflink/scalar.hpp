#ifndef PFLINK_SCALAR_HPP
#define PFLINK_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pflink {

/// Coefficient domain of every value in the library: the rationals with
/// arbitrary-precision integers, or the two-element field.
enum class Domain : unsigned char { Rat, F2 };

inline const char* domain_name(Domain d) { return d == Domain::Rat ? "Q" : "F2"; }

/// Exact scalar in one of the two domains. Rat values are stored as reduced
/// fractions with positive denominator (mpq canonical form); F2 values are
/// stored as 0 or 1.
class Scalar {
public:
    Scalar() : dom_(Domain::Rat), v_(0) {}

    static Scalar zero(Domain d) { return Scalar(d, mpq_class(0)); }
    static Scalar one(Domain d) { return Scalar(d, mpq_class(1)); }

    static Scalar of(Domain d, long value) { return of(d, mpq_class(value)); }

    static Scalar of(Domain d, mpq_class value) {
        value.canonicalize();
        if (d == Domain::F2) {
            if (value.get_den() % 2 == 0)
                throw std::invalid_argument("scalar: even denominator has no image in F2");
            value = mpq_class(mpz_class(value.get_num() % 2 != 0 ? 1 : 0));
        }
        return Scalar(d, std::move(value));
    }

    Domain domain() const { return dom_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    /// Underlying rational value; for F2 this is the bit as 0/1.
    const mpq_class& value() const { return v_; }

    Scalar operator+(const Scalar& o) const { return combine(o, v_ + o.v_); }
    Scalar operator-(const Scalar& o) const { return combine(o, v_ - o.v_); }
    Scalar operator*(const Scalar& o) const { return combine(o, v_ * o.v_); }

    Scalar operator/(const Scalar& o) const {
        if (o.is_zero()) throw std::domain_error("scalar: division by zero");
        if (dom_ == Domain::F2) return combine(o, v_);  // only unit is 1
        return combine(o, v_ / o.v_);
    }

    Scalar operator-() const {
        if (dom_ == Domain::F2) return *this;
        return Scalar(dom_, -v_);
    }

    Scalar inverse() const { return one(dom_) / *this; }

    bool operator==(const Scalar& o) const { return dom_ == o.dom_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// True when the Rat value is negative; always false over F2.
    bool is_negative() const { return sgn(v_) < 0; }

    std::string str() const { return v_.get_str(); }

private:
    Scalar(Domain d, mpq_class v) : dom_(d), v_(std::move(v)) {}

    Scalar combine(const Scalar& o, mpq_class raw) const {
        if (dom_ != o.dom_) throw std::invalid_argument("scalar: domain mismatch");
        if (dom_ == Domain::F2) {
            raw.canonicalize();
            raw = mpq_class(mpz_class(raw.get_num() % 2 != 0 ? 1 : 0));
        } else {
            raw.canonicalize();
        }
        return Scalar(dom_, std::move(raw));
    }

    Domain dom_;
    mpq_class v_;
};

} // namespace pflink

#endif
