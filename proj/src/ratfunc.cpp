#include "pflink/ratfunc.hpp"

#include <stdexcept>

namespace pflink {

RatFunc RatFunc::zero(Domain d, int nvars) {
    return RatFunc(MultiPoly::zero(d, nvars), MultiPoly::constant(d, nvars, 1));
}

RatFunc RatFunc::one(Domain d, int nvars) {
    return from_poly(MultiPoly::constant(d, nvars, 1));
}

RatFunc RatFunc::constant(Domain d, int nvars, long c) {
    return from_poly(MultiPoly::constant(d, nvars, c));
}

RatFunc RatFunc::variable(Domain d, int nvars, int index) {
    return from_poly(MultiPoly::variable(d, nvars, index));
}

RatFunc RatFunc::from_poly(MultiPoly p) {
    Domain d = p.domain();
    int n = p.nvars();
    return RatFunc(std::move(p), MultiPoly::constant(d, n, 1));
}

RatFunc RatFunc::make(MultiPoly num, MultiPoly den) {
    if (num.domain() != den.domain() || num.nvars() != den.nvars())
        throw std::invalid_argument("ratfunc: domain/arity mismatch");
    if (den.is_zero()) throw std::domain_error("ratfunc: zero denominator");
    if (num.is_zero()) return zero(num.domain(), num.nvars());
    MultiPoly g = MultiPoly::gcd(num, den);
    num = num.divexact(g);
    den = den.divexact(g);
    Scalar u = den.unit();
    if (!u.is_one()) {
        Scalar inv = u.inverse();
        den = den.scaled(inv);
        num = num.scaled(inv);
    }
    return RatFunc(std::move(num), std::move(den));
}

bool RatFunc::is_one() const {
    return num_.is_constant() && num_.constant_value().is_one() && den_.is_constant() &&
           den_.constant_value().is_one();
}

bool RatFunc::is_poly() const {
    return den_.is_constant() && den_.constant_value().is_one();
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return make(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return make(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("ratfunc: division by zero");
    return make(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("ratfunc: inverse of zero");
    return make(den_, num_);
}

RatFunc RatFunc::pow(unsigned k) const {
    RatFunc r = one(domain(), nvars());
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

Scalar RatFunc::eval(const std::vector<Scalar>& point) const {
    Scalar d = den_.eval(point);
    if (d.is_zero()) throw std::domain_error("ratfunc: evaluation point is a pole");
    return num_.eval(point) / d;
}

std::string RatFunc::str() const {
    if (is_poly()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc eval_bilinear(std::span<const RatFunc> entries, std::span<const RatFunc> v) {
    if (entries.size() != v.size())
        throw std::invalid_argument("eval_bilinear: entry/vector length mismatch");
    if (entries.empty()) throw std::invalid_argument("eval_bilinear: empty form");
    RatFunc acc = RatFunc::zero(entries[0].domain(), entries[0].nvars());
    for (std::size_t i = 0; i < entries.size(); ++i) acc = acc + entries[i] * v[i].squared();
    return acc;
}

std::vector<RatFunc> variable_tuple(Domain d, int nvars) {
    std::vector<RatFunc> xs;
    xs.reserve(nvars);
    for (int i = 1; i <= nvars; ++i) xs.push_back(RatFunc::variable(d, nvars, i));
    return xs;
}

} // namespace pflink
