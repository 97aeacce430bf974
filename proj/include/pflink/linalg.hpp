#ifndef PFLINK_LINALG_HPP
#define PFLINK_LINALG_HPP

#include "pflink/ratfunc.hpp"

#include <optional>
#include <vector>

namespace pflink {

/// Dense matrix over a rational function field, row-major.
using FieldMatrix = std::vector<std::vector<RatFunc>>;

/// Reduced row echelon form data: nonzero rows with pivots normalized to 1
/// and strictly increasing pivot columns.
struct Rref {
    FieldMatrix rows;
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(rows.size()); }
};

/// Row reduction with exact arithmetic. Forward elimination is fraction-free
/// on denominator-cleared rows, dividing out the content after every pivot
/// step; back substitution then normalizes pivots to 1 over the field.
Rref row_reduce(FieldMatrix m);

/// One solution of A x = b with A given by columns, or nullopt when the
/// system is inconsistent. Free variables are set to zero.
std::optional<std::vector<RatFunc>> solve_columns(const std::vector<std::vector<RatFunc>>& columns,
                                                  const std::vector<RatFunc>& rhs);

/// Basis of the null space of the matrix with the given columns, one vector
/// per free column, in ascending free-column order.
std::vector<std::vector<RatFunc>> kernel_columns(const std::vector<std::vector<RatFunc>>& columns);

} // namespace pflink

#endif
