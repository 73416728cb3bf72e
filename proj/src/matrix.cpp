#include "kummercalc/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace kummer {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    const std::size_t cols = rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DomainError("from_rows: ragged row lengths");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec IntMatrix::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

Vec IntMatrix::col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DomainError("matrix product: shape mismatch");
    IntMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                p.at(i, j) += a * rhs.at(k, j);
        }
    return p;
}

Vec IntMatrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw DomainError("matrix apply: size mismatch");
    Vec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != Int(i == j ? 1 : 0)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& v) { return v == 0; });
}

Int IntMatrix::det() const {
    if (rows_ != cols_) throw DomainError("det: matrix not square");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = t / prev; // divides exactly (Bareiss)
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += factor * at(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += factor * at(r, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

std::vector<Int> SnfDecomposition::diagonal() const {
    std::vector<Int> d;
    const std::size_t n = std::min(D.rows(), D.cols());
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(D.at(i, i));
    return d;
}

namespace {

// true when every off-(t,t) entry of row t / column t is zero
bool pivot_isolated(const IntMatrix& m, std::size_t t) {
    for (std::size_t i = t + 1; i < m.rows(); ++i)
        if (m.at(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < m.cols(); ++j)
        if (m.at(t, j) != 0) return false;
    return true;
}

bool find_min_pivot(const IntMatrix& m, std::size_t t, std::size_t& bi, std::size_t& bj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            if (m.at(i, j) == 0) continue;
            Int a = int_abs(m.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                bi = i;
                bj = j;
            }
        }
    return found;
}

} // namespace

SnfDecomposition smith_normal_form(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    SnfDecomposition out{IntMatrix::identity(m), A, IntMatrix::identity(n)};
    IntMatrix& U = out.U;
    IntMatrix& D = out.D;
    IntMatrix& V = out.V;

    const std::size_t k = std::min(m, n);
    for (std::size_t t = 0; t < k; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_min_pivot(D, t, pi, pj)) break; // remaining block is zero

        for (;;) {
            // move the entry of least magnitude into position (t,t)
            find_min_pivot(D, t, pi, pj);
            D.swap_rows(t, pi);
            U.swap_rows(t, pi);
            D.swap_cols(t, pj);
            V.swap_cols(t, pj);

            bool reduced = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = D.at(i, t) / D.at(t, t);
                if (q != 0) {
                    D.add_row_multiple(i, t, -q);
                    U.add_row_multiple(i, t, -q);
                }
                if (D.at(i, t) != 0) reduced = false; // a smaller remainder appeared
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = D.at(t, j) / D.at(t, t);
                if (q != 0) {
                    D.add_col_multiple(j, t, -q);
                    V.add_col_multiple(j, t, -q);
                }
                if (D.at(t, j) != 0) reduced = false;
            }
            if (!reduced || !pivot_isolated(D, t)) continue;

            // enforce d_t | remaining block
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n && divides; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        D.add_row_multiple(t, i, 1);
                        U.add_row_multiple(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (D.at(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
    return out;
}

HnfResult hnf_rows_with_transform(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    HnfResult out{A, IntMatrix::identity(m), 0};
    IntMatrix& H = out.hnf;
    IntMatrix& T = out.transform;

    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        // gcd-reduce column j below row r to a single entry
        for (;;) {
            std::size_t best = m;
            Int bestAbs = 0;
            for (std::size_t i = r; i < m; ++i) {
                if (H.at(i, j) == 0) continue;
                Int a = int_abs(H.at(i, j));
                if (best == m || a < bestAbs) {
                    best = i;
                    bestAbs = a;
                }
            }
            if (best == m) break; // column zero below r
            H.swap_rows(r, best);
            T.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (H.at(i, j) == 0) continue;
                Int q = H.at(i, j) / H.at(r, j);
                if (q != 0) {
                    H.add_row_multiple(i, r, -q);
                    T.add_row_multiple(i, r, -q);
                }
                if (H.at(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (H.at(r, j) == 0) continue;
        if (H.at(r, j) < 0) {
            H.negate_row(r);
            T.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(H.at(i, j), H.at(r, j));
            if (q != 0) {
                H.add_row_multiple(i, r, -q);
                T.add_row_multiple(i, r, -q);
            }
        }
        ++r;
    }
    out.rank = r;
    return out;
}

IntMatrix hnf_rows(const IntMatrix& A) {
    HnfResult full = hnf_rows_with_transform(A);
    IntMatrix basis(full.rank, A.cols());
    for (std::size_t i = 0; i < full.rank; ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) basis.at(i, j) = full.hnf.at(i, j);
    return basis;
}

IntMatrix inverse_unimodular(const IntMatrix& U) {
    if (U.rows() != U.cols()) throw DomainError("inverse_unimodular: not square");
    HnfResult h = hnf_rows_with_transform(U);
    if (h.rank != U.rows() || !h.hnf.is_identity())
        throw DomainError("inverse_unimodular: matrix is not unimodular");
    return h.transform;
}

std::optional<Vec> hnf_solve(const IntMatrix& H, const Vec& x) {
    if (x.size() != H.cols()) throw DomainError("hnf_solve: size mismatch");
    Vec rest = x;
    Vec coords(H.rows());
    for (std::size_t i = 0; i < H.rows(); ++i) {
        std::size_t p = 0;
        while (p < H.cols() && H.at(i, p) == 0) ++p;
        if (p == H.cols()) throw DomainError("hnf_solve: basis has a zero row");
        if (rest[p] % H.at(i, p) != 0) return std::nullopt;
        Int c = rest[p] / H.at(i, p);
        coords[i] = c;
        if (c != 0)
            for (std::size_t j = 0; j < H.cols(); ++j) rest[j] -= c * H.at(i, j);
    }
    if (!vec_is_zero(rest)) return std::nullopt;
    return coords;
}

std::vector<Vec> kernel_basis(const IntMatrix& A) {
    SnfDecomposition snf = smith_normal_form(A);
    const std::size_t n = A.cols();
    const std::size_t k = std::min(A.rows(), n);
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < n; ++j) {
        if (j < k && snf.D.at(j, j) != 0) continue;
        basis.push_back(snf.V.col(j));
    }
    return basis;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vec vec_scale(const Int& k, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& v) { return v == 0; });
}

Int dot(const Vec& a, const Vec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string vec_to_string(const Vec& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ")";
    return os.str();
}

} // namespace kummer
