#include "pflink/linalg.hpp"

#include <stdexcept>

namespace pflink {

namespace {

using PolyRow = std::vector<MultiPoly>;

MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b) {
    return (a * b).divexact(MultiPoly::gcd(a, b)).normalized();
}

// Multiply out denominators so every entry is a polynomial.
PolyRow clear_denominators(const std::vector<RatFunc>& row) {
    Domain d = row[0].domain();
    int n = row[0].nvars();
    MultiPoly l = MultiPoly::constant(d, n, 1);
    for (const RatFunc& e : row)
        if (!e.is_poly()) l = poly_lcm(l, e.den());
    PolyRow out;
    out.reserve(row.size());
    for (const RatFunc& e : row) out.push_back(e.num() * l.divexact(e.den()));
    return out;
}

// Divide a polynomial row by the gcd of its entries and normalize the
// scalar content; keeps the entries integer-primitive over Q.
void strip_content(PolyRow& row) {
    MultiPoly g = MultiPoly::zero(row[0].domain(), row[0].nvars());
    for (const MultiPoly& e : row) {
        g = MultiPoly::gcd(g, e);
        if (!g.is_zero() && g.is_constant()) break;
    }
    if (g.is_zero()) return;  // zero row
    if (!g.is_constant())
        for (MultiPoly& e : row) e = e.divexact(g);
    if (row[0].domain() == Domain::F2) return;
    // pull out the common rational unit across all coefficients
    mpz_class den_lcm = 1;
    for (const MultiPoly& e : row)
        for (const auto& [exp, c] : e.terms()) den_lcm = lcm(den_lcm, c.value().get_den());
    mpz_class num_gcd = 0;
    for (const MultiPoly& e : row)
        for (const auto& [exp, c] : e.terms())
            num_gcd = gcd(num_gcd, mpz_class(c.value().get_num() * (den_lcm / c.value().get_den())));
    if (num_gcd == 0) return;
    Scalar u = Scalar::of(Domain::Rat, mpq_class(den_lcm, num_gcd));
    for (MultiPoly& e : row)
        if (!e.is_zero()) e = e.scaled(u);
}

bool is_zero_row(const PolyRow& row) {
    for (const MultiPoly& e : row)
        if (!e.is_zero()) return false;
    return true;
}

} // namespace

Rref row_reduce(FieldMatrix m) {
    Rref out;
    if (m.empty()) return out;
    const std::size_t width = m[0].size();
    for (const auto& row : m)
        if (row.size() != width) throw std::invalid_argument("row_reduce: ragged matrix");

    std::vector<PolyRow> rows;
    for (const auto& row : m) {
        PolyRow pr = clear_denominators(row);
        if (is_zero_row(pr)) continue;
        strip_content(pr);
        rows.push_back(std::move(pr));
    }

    // fraction-free forward elimination
    std::vector<int> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < width && next < rows.size(); ++col) {
        std::size_t sel = next;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[next], rows[sel]);
        const PolyRow pivot_row = rows[next];
        const MultiPoly& p = pivot_row[col];
        for (std::size_t i = next + 1; i < rows.size(); ++i) {
            if (rows[i][col].is_zero()) continue;
            const MultiPoly f = rows[i][col];
            for (std::size_t j = 0; j < width; ++j) rows[i][j] = rows[i][j] * p - pivot_row[j] * f;
            strip_content(rows[i]);
        }
        // drop rows that became zero to keep the scan linear
        std::vector<PolyRow> keep(rows.begin(), rows.begin() + next + 1);
        for (std::size_t i = next + 1; i < rows.size(); ++i)
            if (!is_zero_row(rows[i])) keep.push_back(std::move(rows[i]));
        rows = std::move(keep);
        pivots.push_back(static_cast<int>(col));
        ++next;
    }

    Domain d = m[0][0].domain();
    int n = m[0][0].nvars();
    out.pivot_cols = pivots;
    out.rows.reserve(rows.size());
    for (const PolyRow& pr : rows) {
        std::vector<RatFunc> fr;
        fr.reserve(width);
        for (const MultiPoly& e : pr) fr.push_back(RatFunc::from_poly(e));
        out.rows.push_back(std::move(fr));
    }

    // back substitution: pivots to 1, clear entries above each pivot
    for (int r = out.rank() - 1; r >= 0; --r) {
        int pc = out.pivot_cols[r];
        RatFunc inv = out.rows[r][pc].inverse();
        for (std::size_t j = 0; j < width; ++j)
            out.rows[r][j] = out.rows[r][j] * inv;
        for (int i = 0; i < r; ++i) {
            RatFunc f = out.rows[i][pc];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < width; ++j)
                out.rows[i][j] = out.rows[i][j] - f * out.rows[r][j];
        }
    }
    (void)d;
    (void)n;
    return out;
}

std::optional<std::vector<RatFunc>> solve_columns(const std::vector<std::vector<RatFunc>>& columns,
                                                  const std::vector<RatFunc>& rhs) {
    const std::size_t k = columns.size();
    const std::size_t dim = rhs.size();
    for (const auto& c : columns)
        if (c.size() != dim) throw std::invalid_argument("solve_columns: column length mismatch");

    bool rhs_zero = true;
    for (const RatFunc& e : rhs)
        if (!e.is_zero()) rhs_zero = false;
    if (rhs_zero) {
        Domain d = rhs.empty() ? Domain::F2 : rhs[0].domain();
        int n = rhs.empty() ? 0 : rhs[0].nvars();
        return std::vector<RatFunc>(k, RatFunc::zero(d, n));
    }
    if (k == 0) return std::nullopt;

    FieldMatrix aug(dim, std::vector<RatFunc>());
    for (std::size_t r = 0; r < dim; ++r) {
        aug[r].reserve(k + 1);
        for (std::size_t c = 0; c < k; ++c) aug[r].push_back(columns[c][r]);
        aug[r].push_back(rhs[r]);
    }
    Rref rr = row_reduce(std::move(aug));

    Domain d = rhs[0].domain();
    int n = rhs[0].nvars();
    std::vector<RatFunc> x(k, RatFunc::zero(d, n));
    for (int r = 0; r < rr.rank(); ++r) {
        if (rr.pivot_cols[r] == static_cast<int>(k)) return std::nullopt;  // pivot in rhs column
        x[rr.pivot_cols[r]] = rr.rows[r][k];
    }
    return x;
}

std::vector<std::vector<RatFunc>> kernel_columns(const std::vector<std::vector<RatFunc>>& columns) {
    std::vector<std::vector<RatFunc>> out;
    if (columns.empty()) return out;
    const std::size_t dim = columns[0].size();
    const std::size_t k = columns.size();
    Domain d = columns[0][0].domain();
    int n = columns[0][0].nvars();

    FieldMatrix m(dim, std::vector<RatFunc>());
    for (std::size_t r = 0; r < dim; ++r) {
        m[r].reserve(k);
        for (std::size_t c = 0; c < k; ++c) m[r].push_back(columns[c][r]);
    }
    Rref rr = row_reduce(std::move(m));

    std::vector<bool> is_pivot(k, false);
    for (int pc : rr.pivot_cols) is_pivot[pc] = true;
    for (std::size_t f = 0; f < k; ++f) {
        if (is_pivot[f]) continue;
        std::vector<RatFunc> v(k, RatFunc::zero(d, n));
        v[f] = RatFunc::one(d, n);
        for (int r = 0; r < rr.rank(); ++r) v[rr.pivot_cols[r]] = -rr.rows[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace pflink
