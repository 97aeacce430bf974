#ifndef PFLINK_MULTIPOLY_HPP
#define PFLINK_MULTIPOLY_HPP

#include "pflink/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pflink {

/// Exponent vector of a monomial; entry i is the exponent of x_{i+1}.
using ExpVec = std::vector<unsigned>;

/// Graded-lexicographic order with x1 > x2 > ... > xn: compare total degree
/// first, then the exponent of x1, x2, ... The library's canonical term
/// order for display and leading-term queries.
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse multivariate polynomial over one of the two scalar domains.
/// Invariants: no zero coefficients stored; every exponent vector has length
/// exactly nvars(); terms are kept in graded-lexicographic order.
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, Scalar, GrlexLess>;

    MultiPoly() : dom_(Domain::Rat), nvars_(0) {}

    static MultiPoly zero(Domain d, int nvars);
    static MultiPoly constant(Domain d, int nvars, const Scalar& c);
    static MultiPoly constant(Domain d, int nvars, long c);
    /// x_index, with 1 <= index <= nvars.
    static MultiPoly variable(Domain d, int nvars, int index);
    static MultiPoly monomial(Domain d, int nvars, ExpVec e, const Scalar& c);

    Domain domain() const { return dom_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value; zero polynomial yields 0. Throws if nonconstant.
    Scalar constant_value() const;

    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(int var) const;
    /// Grlex-leading term; throws on the zero polynomial.
    const std::pair<const ExpVec, Scalar>& leading_term() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly pow(unsigned k) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Exact division; throws std::domain_error when the division is not exact.
    MultiPoly divexact(const MultiPoly& d) const;
    std::optional<MultiPoly> try_divide(const MultiPoly& d) const;

    /// Unit u such that *this / u is the canonical representative: monic over
    /// F2; integer-coprime coefficients with positive leading coefficient
    /// over Q. unit() of zero is 1.
    Scalar unit() const;
    MultiPoly normalized() const;

    /// Multiply every coefficient by a nonzero scalar.
    MultiPoly scaled(const Scalar& c) const;

    Scalar eval(const std::vector<Scalar>& point) const;

    /// Greatest common divisor, normalized; content-primitive reduction with
    /// subresultant remainder sequences. gcd(0, 0) = 0.
    static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

    std::string str() const;

private:
    void add_term(const ExpVec& e, const Scalar& c);
    void check_compatible(const MultiPoly& o) const;

    Domain dom_;
    int nvars_;
    TermMap terms_;
};

} // namespace pflink

#endif
