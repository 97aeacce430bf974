#ifndef PFLINK_RATFUNC_HPP
#define PFLINK_RATFUNC_HPP

#include "pflink/multipoly.hpp"

#include <span>
#include <string>

namespace pflink {

/// Element of the rational function field over Q or F2, kept in canonical
/// form: gcd(num, den) is a unit, the denominator is normalized (monic over
/// F2, integer-primitive with positive leading coefficient over Q), and zero
/// is 0/1.
class RatFunc {
public:
    RatFunc() : num_(MultiPoly::zero(Domain::Rat, 0)), den_(MultiPoly::constant(Domain::Rat, 0, 1)) {}

    static RatFunc zero(Domain d, int nvars);
    static RatFunc one(Domain d, int nvars);
    static RatFunc constant(Domain d, int nvars, long c);
    static RatFunc variable(Domain d, int nvars, int index);
    static RatFunc from_poly(MultiPoly p);
    static RatFunc make(MultiPoly num, MultiPoly den);

    Domain domain() const { return num_.domain(); }
    int nvars() const { return num_.nvars(); }
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_poly() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc inverse() const;
    RatFunc pow(unsigned k) const;
    RatFunc squared() const { return *this * *this; }

    /// Canonical forms are unique, so equality is representation identity.
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    Scalar eval(const std::vector<Scalar>& point) const;

    std::string str() const;

private:
    RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {}

    MultiPoly num_;
    MultiPoly den_;
};

/// Value of the diagonal symmetric bilinear form with the given diagonal
/// entries on (v, v): sum of entries[i] * v[i]^2.
RatFunc eval_bilinear(std::span<const RatFunc> entries, std::span<const RatFunc> v);

/// The tuple (x1, ..., xn) as field elements.
std::vector<RatFunc> variable_tuple(Domain d, int nvars);

} // namespace pflink

#endif
