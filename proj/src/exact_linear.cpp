#include "tfano/exact_linear.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace tfano {

namespace {

std::strong_ordering compare(const Integer& a, const Integer& b) {
    const int c = cmp(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// row_a <- row_a + factor * row_b
void add_row_multiple(IntMatrix& m, std::size_t a, std::size_t b, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) += factor * m(b, j);
}

void add_col_multiple(IntMatrix& m, std::size_t a, std::size_t b, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) += factor * m(i, b);
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::vector<Rational>> work(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work[i][j] = a(i, j);
        work[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && work[p][c] == 0) ++p;
        if (p == n) throw LinearAlgebraError("singular matrix");
        std::swap(work[p], work[c]);
        const Rational inv = 1 / work[c][c];
        for (auto& x : work[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || work[r][c] == 0) continue;
            const Rational f = work[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j) work[r][j] -= f * work[c][j];
        }
    }
    for (auto& row : work) row.erase(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
    return work;
}

}  // namespace

IntVector::IntVector(std::initializer_list<long> values) {
    coords_.reserve(values.size());
    for (long v : values) coords_.emplace_back(v);
}

bool IntVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
}

std::strong_ordering operator<=>(const IntVector& a, const IntVector& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = compare(a[i], b[i]); c != 0) return c;
    }
    return a.size() <=> b.size();
}

IntVector operator+(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVector operator-(const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

IntVector operator*(const Integer& s, const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

std::ostream& operator<<(std::ostream& os, const IntVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os << ')';
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw LinearAlgebraError("dimension mismatch in dot product");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVector cross(const IntVector& a, const IntVector& b) {
    if (a.size() != 3 || b.size() != 3) throw LinearAlgebraError("cross product needs 3-vectors");
    IntVector r(3);
    r[0] = a[1] * b[2] - a[2] * b[1];
    r[1] = a[2] * b[0] - a[0] * b[2];
    r[2] = a[0] * b[1] - a[1] * b[0];
    return r;
}

Integer content(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

bool is_primitive(const IntVector& v) { return !v.empty() && content(v) == 1; }

IntVector primitivize(const IntVector& v) {
    const Integer g = content(v);
    if (g == 0) throw LinearAlgebraError("zero vector has no primitive generator");
    if (g == 1) return v;
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(r[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows, IntVector(cols)) {}

IntMatrix::IntMatrix(std::vector<IntVector> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (r.size() != rows_.front().size()) throw LinearAlgebraError("ragged matrix rows");
    }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    for (const auto& r : rows) rows_.emplace_back(r);
    for (const auto& r : rows_) {
        if (r.size() != rows_.front().size()) throw LinearAlgebraError("ragged matrix rows");
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns) {
    if (columns.empty()) return {};
    IntMatrix m(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != m.rows()) throw LinearAlgebraError("ragged matrix columns");
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = columns[j][i];
    }
    return m;
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector c(rows());
    for (std::size_t i = 0; i < rows(); ++i) c[i] = rows_[i][j];
    return c;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols(), rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) t(j, i) = rows_[i][j];
    return t;
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    for (auto& r : rows_) std::swap(r[a], r[b]);
}

std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b) {
    return std::lexicographical_compare_three_way(a.rows_.begin(), a.rows_.end(), b.rows_.begin(),
                                                  b.rows_.end());
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw LinearAlgebraError("dimension mismatch in matrix product");
    IntMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols() != v.size()) throw LinearAlgebraError("dimension mismatch in matrix-vector product");
    IntVector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) r[i] = dot(a.row(i), v);
    return r;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? "," : "") << m.row(i);
    return os << ']';
}

HermiteForm hnf(const IntMatrix& m) {
    if (m.empty()) throw LinearAlgebraError("hnf of an empty matrix");
    HermiteForm out{m, IntMatrix::identity(m.rows())};
    IntMatrix& h = out.h;
    IntMatrix& u = out.u;
    const std::size_t nrows = h.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < nrows; ++c) {
        // Euclid on column c below row r; the smallest nonzero entry (lowest
        // row index on ties) becomes the pivot.
        for (;;) {
            std::size_t piv = nrows;
            for (std::size_t i = r; i < nrows; ++i) {
                if (h(i, c) == 0) continue;
                if (piv == nrows || mpz_cmpabs(h(i, c).get_mpz_t(), h(piv, c).get_mpz_t()) < 0) piv = i;
            }
            if (piv == nrows) break;
            if (piv != r) {
                h.swap_rows(piv, r);
                u.swap_rows(piv, r);
            }
            bool done = true;
            for (std::size_t i = r + 1; i < nrows; ++i) {
                if (h(i, c) == 0) continue;
                const Integer q = -floor_div(h(i, c), h(r, c));
                add_row_multiple(h, i, r, q);
                add_row_multiple(u, i, r, q);
                if (h(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            negate_row(h, r);
            negate_row(u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            const Integer q = -floor_div(h(i, c), h(r, c));
            add_row_multiple(h, i, r, q);
            add_row_multiple(u, i, r, q);
        }
        ++r;
    }
    return out;
}

SmithForm snf(const IntMatrix& m) {
    if (m.empty()) throw LinearAlgebraError("snf of an empty matrix");
    SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& d = out.d;
    const std::size_t nr = d.rows();
    const std::size_t nc = d.cols();
    for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
        for (;;) {
            // Move the smallest nonzero entry of the trailing block to (t, t).
            std::size_t pi = nr;
            std::size_t pj = nc;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j) {
                    if (d(i, j) == 0) continue;
                    if (pi == nr || mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == nr) return out;
            if (pi != t) {
                d.swap_rows(pi, t);
                out.u.swap_rows(pi, t);
            }
            if (pj != t) {
                d.swap_cols(pj, t);
                out.v.swap_cols(pj, t);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                const Integer q = -floor_div(d(i, t), d(t, t));
                add_row_multiple(d, i, t, q);
                add_row_multiple(out.u, i, t, q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                const Integer q = -floor_div(d(t, j), d(t, t));
                add_col_multiple(d, j, t, q);
                add_col_multiple(out.v, j, t, q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: fold an offending row into row t and retry.
            std::size_t bad = nr;
            for (std::size_t i = t + 1; i < nr && bad == nr; ++i)
                for (std::size_t j = t + 1; j < nc; ++j) {
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
                }
            if (bad == nr) break;
            add_row_multiple(d, t, bad, Integer(1));
            add_row_multiple(out.u, t, bad, Integer(1));
        }
        if (d(t, t) < 0) {
            negate_row(d, t);
            negate_row(out.u, t);
        }
    }
    return out;
}

Integer det3(const IntMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3) throw LinearAlgebraError("det3 needs a 3x3 matrix");
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// Bareiss fraction-free elimination.
Integer det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw LinearAlgebraError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
    if (m.empty()) return 0;
    const HermiteForm f = hnf(m);
    std::size_t r = 0;
    for (std::size_t i = 0; i < f.h.rows(); ++i)
        if (!f.h.row(i).is_zero()) ++r;
    return r;
}

bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) return false;
    const Integer d = det(m);
    return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!is_unimodular(m)) throw LinearAlgebraError("matrix is not unimodular");
    const auto inv = rational_inverse(m);
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = inv[i][j].get_num();
    return r;
}

std::optional<IntMatrix> solve_left_integral(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != a.cols() || b.cols() != a.rows()) throw LinearAlgebraError("dimension mismatch in solve");
    const auto inv = rational_inverse(a);
    IntMatrix x(b.rows(), a.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < a.rows(); ++k) s += b(i, k) * inv[k][j];
            if (s.get_den() != 1) return std::nullopt;
            x(i, j) = s.get_num();
        }
    return x;
}

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << '/' << q.get_den();
    return os.str();
}

}  // namespace tfano
