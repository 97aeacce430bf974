#include "pflink/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pflink {

bool GrlexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
    unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

MultiPoly MultiPoly::zero(Domain d, int nvars) {
    MultiPoly p;
    p.dom_ = d;
    p.nvars_ = nvars;
    return p;
}

MultiPoly MultiPoly::constant(Domain d, int nvars, const Scalar& c) {
    MultiPoly p = zero(d, nvars);
    if (c.domain() != d) throw std::invalid_argument("polynomial: scalar domain mismatch");
    if (!c.is_zero()) p.terms_.emplace(ExpVec(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::constant(Domain d, int nvars, long c) {
    return constant(d, nvars, Scalar::of(d, c));
}

MultiPoly MultiPoly::variable(Domain d, int nvars, int index) {
    if (index < 1 || index > nvars)
        throw std::invalid_argument("polynomial: variable index out of range");
    ExpVec e(nvars, 0);
    e[index - 1] = 1;
    return monomial(d, nvars, std::move(e), Scalar::one(d));
}

MultiPoly MultiPoly::monomial(Domain d, int nvars, ExpVec e, const Scalar& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("polynomial: exponent vector arity mismatch");
    MultiPoly p = zero(d, nvars);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const ExpVec& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Scalar MultiPoly::constant_value() const {
    if (is_zero()) return Scalar::zero(dom_);
    if (!is_constant()) throw std::domain_error("polynomial: not a constant");
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const ExpVec& e = terms_.rbegin()->first;  // grlex max has max total degree
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

int MultiPoly::degree_in(int var) const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var - 1]));
    return d;
}

const std::pair<const ExpVec, Scalar>& MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("polynomial: leading term of zero");
    return *terms_.rbegin();
}

void MultiPoly::add_term(const ExpVec& e, const Scalar& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    Scalar s = it->second + c;
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (dom_ != o.dom_ || nvars_ != o.nvars_)
        throw std::invalid_argument("polynomial: domain/arity mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = zero(dom_, nvars_);
    ExpVec e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly r = constant(dom_, nvars_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return dom_ == o.dom_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& d) const {
    check_compatible(d);
    if (d.is_zero()) throw std::domain_error("polynomial: division by zero");
    MultiPoly q = zero(dom_, nvars_);
    MultiPoly r = *this;
    const auto& [ed, cd] = d.leading_term();
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading_term();
        ExpVec e(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            if (er[i] < ed[i]) return std::nullopt;  // stuck: not an exact division
            e[i] = er[i] - ed[i];
        }
        MultiPoly t = monomial(dom_, nvars_, std::move(e), cr / cd);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

MultiPoly MultiPoly::divexact(const MultiPoly& d) const {
    auto q = try_divide(d);
    if (!q) throw std::domain_error("polynomial: inexact division");
    return *q;
}

Scalar MultiPoly::unit() const {
    if (dom_ == Domain::F2 || is_zero()) return Scalar::one(dom_);
    // lcm of denominators, gcd of scaled numerators, sign of the leading coefficient
    mpz_class den_lcm = 1;
    for (const auto& [e, c] : terms_) den_lcm = lcm(den_lcm, c.value().get_den());
    mpz_class num_gcd = 0;
    for (const auto& [e, c] : terms_)
        num_gcd = gcd(num_gcd, mpz_class(c.value().get_num() * (den_lcm / c.value().get_den())));
    mpq_class u(num_gcd, den_lcm);
    if (terms_.rbegin()->second.is_negative()) u = -u;
    return Scalar::of(dom_, u);
}

MultiPoly MultiPoly::normalized() const {
    if (is_zero()) return *this;
    return scaled(unit().inverse());
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    if (c.is_zero()) throw std::invalid_argument("polynomial: scaling by zero");
    MultiPoly r = *this;
    for (auto& [e, coeff] : r.terms_) coeff = coeff * c;
    return r;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("polynomial: evaluation point arity mismatch");
    Scalar acc = Scalar::zero(dom_);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (int i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) t = t * point[i];
        acc = acc + t;
    }
    return acc;
}

namespace {

// Coefficient of x_var^k, with the x_var exponent zeroed out.
MultiPoly coeff_in(const MultiPoly& p, int var, unsigned k) {
    MultiPoly r = MultiPoly::zero(p.domain(), p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var - 1] != k) continue;
        ExpVec e2 = e;
        e2[var - 1] = 0;
        r = r + MultiPoly::monomial(p.domain(), p.nvars(), std::move(e2), c);
    }
    return r;
}

MultiPoly leading_coeff_in(const MultiPoly& p, int var) {
    return coeff_in(p, var, static_cast<unsigned>(p.degree_in(var)));
}

MultiPoly mul_var_pow(const MultiPoly& p, int var, unsigned k) {
    ExpVec e(p.nvars(), 0);
    e[var - 1] = k;
    return p * MultiPoly::monomial(p.domain(), p.nvars(), std::move(e), Scalar::one(p.domain()));
}

// Pseudo-remainder of a by b with respect to x_var:
// lc(b)^(deg a - deg b + 1) * a  =  q*b + prem, with deg_var(prem) < deg_var(b).
MultiPoly prem(const MultiPoly& a, const MultiPoly& b, int var) {
    int d = a.degree_in(var);
    int e = b.degree_in(var);
    MultiPoly lb = leading_coeff_in(b, var);
    MultiPoly r = a;
    int steps = 0;
    while (!r.is_zero() && r.degree_in(var) >= e) {
        int dr = r.degree_in(var);
        r = lb * r - mul_var_pow(leading_coeff_in(r, var), var, static_cast<unsigned>(dr - e)) * b;
        ++steps;
    }
    for (int i = steps; i < d - e + 1; ++i) r = lb * r;
    return r;
}

// Content of p with respect to x_var: gcd of the coefficients of the powers
// of x_var, each a polynomial in the remaining variables.
MultiPoly content_in(const MultiPoly& p, int var) {
    MultiPoly c = MultiPoly::zero(p.domain(), p.nvars());
    for (int k = 0; k <= p.degree_in(var); ++k) {
        MultiPoly ck = coeff_in(p, var, static_cast<unsigned>(k));
        if (ck.is_zero()) continue;
        c = MultiPoly::gcd(c, ck);
        if (c.is_constant()) break;  // content is already a unit
    }
    return c;
}

// Brown's subresultant remainder sequence on inputs primitive in x_var, both
// of positive x_var-degree. Returns the gcd of the primitive parts.
MultiPoly subresultant_gcd(MultiPoly a, MultiPoly b, int var) {
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    MultiPoly g = MultiPoly::constant(a.domain(), a.nvars(), 1);
    MultiPoly h = g;
    while (true) {
        int delta = a.degree_in(var) - b.degree_in(var);
        MultiPoly r = prem(a, b, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) return MultiPoly::constant(a.domain(), a.nvars(), 1);
        a = b;
        b = r.divexact(g * h.pow(static_cast<unsigned>(delta)));
        g = leading_coeff_in(a, var);
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = g.pow(static_cast<unsigned>(delta)).divexact(h.pow(static_cast<unsigned>(delta - 1)));
    }
    return b.divexact(content_in(b, var));
}

} // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    if (a.is_constant() || b.is_constant()) return constant(a.dom_, a.nvars_, 1);

    int var = 0;
    for (int v = 1; v <= a.nvars_ && var == 0; ++v)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) var = v;

    MultiPoly ca = content_in(a, var);
    MultiPoly cb = content_in(b, var);
    MultiPoly c = gcd(ca, cb);
    MultiPoly pa = a.divexact(ca);
    MultiPoly pb = b.divexact(cb);

    MultiPoly g = (pa.degree_in(var) == 0 || pb.degree_in(var) == 0)
                      ? constant(a.dom_, a.nvars_, 1)
                      : subresultant_gcd(pa, pb, var);
    return (c * g).normalized();
}

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c.is_negative();
        Scalar mag = neg ? -c : c;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out << mag.str();
        else if (mag.is_one())
            out << mono;
        else
            out << mag.str() << "*" << mono;
        first = false;
    }
    return out.str();
}

} // namespace pflink
