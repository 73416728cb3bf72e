#include "kummercalc/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kummer {

namespace {

constexpr std::size_t kMaxConeRank = 4;
constexpr std::size_t kFmRowCap = 20000;

Vec normalized(Vec v) {
    Int g = 0;
    for (const Int& c : v) g = int_gcd(g, c);
    if (g > 1)
        for (Int& c : v) c /= g;
    return v;
}

// One Fourier-Motzkin elimination step on homogeneous rows.
std::vector<Vec> fm_eliminate(const std::vector<Vec>& rows, std::size_t var) {
    std::vector<Vec> zero, pos, neg;
    for (const Vec& r : rows) {
        if (r[var] == 0)
            zero.push_back(r);
        else if (r[var] > 0)
            pos.push_back(r);
        else
            neg.push_back(r);
    }
    std::set<Vec> out(zero.begin(), zero.end());
    for (const Vec& p : pos)
        for (const Vec& n : neg) {
            Vec combined(p.size());
            for (std::size_t i = 0; i < p.size(); ++i)
                combined[i] = (-n[var]) * p[i] + p[var] * n[i];
            if (vec_is_zero(combined)) continue;
            out.insert(normalized(std::move(combined)));
            if (out.size() > kFmRowCap)
                throw CapabilityError("Fourier-Motzkin elimination exceeded the row cap");
        }
    return {out.begin(), out.end()};
}

} // namespace

ConeIneqs cone_from_generators(const std::vector<Vec>& gens, std::size_t dim) {
    if (dim > kMaxConeRank)
        throw CapabilityError("cone computations are supported up to ambient rank 4");
    const std::size_t m = gens.size();
    // variables: x_0..x_{dim-1}, lambda_0..lambda_{m-1}
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m; ++i) {
        Vec r(dim + m);
        r[dim + i] = 1;
        rows.push_back(r);
    }
    for (std::size_t j = 0; j < dim; ++j) {
        Vec r(dim + m);
        r[j] = 1;
        for (std::size_t i = 0; i < m; ++i) r[dim + i] = -gens[i][j];
        rows.push_back(normalized(r));
        rows.push_back(normalized(vec_neg(r)));
    }
    for (std::size_t v = dim + m; v-- > dim;) rows = fm_eliminate(rows, v);

    ConeIneqs cone{dim, {}};
    std::set<Vec> seen;
    for (const Vec& r : rows) {
        Vec head(r.begin(), r.begin() + dim);
        if (vec_is_zero(head)) continue;
        if (seen.insert(head).second) cone.rows.push_back(head);
    }
    return cone;
}

bool cone_contains(const ConeIneqs& cone, const Vec& x) {
    if (x.size() != cone.dim) throw DomainError("cone membership: dimension mismatch");
    for (const Vec& r : cone.rows)
        if (dot(r, x) < 0) return false;
    return true;
}

ConeGenerators cone_generators_from_ineqs(const ConeIneqs& cone) {
    const std::size_t k = cone.dim;
    ConeGenerators out;
    if (k == 0) return out;
    if (cone.rows.empty()) {
        for (std::size_t i = 0; i < k; ++i) {
            Vec e(k);
            e[i] = 1;
            out.lineality.push_back(e);
        }
        return out;
    }
    IntMatrix A = IntMatrix::from_rows(cone.rows);
    out.lineality = kernel_basis(A);
    const std::size_t lin = out.lineality.size();
    if (lin == k) return out;

    // quotient coordinates killing the lineality: c = V^T y with the first
    // `lin` coordinates spanning the lineality lattice
    IntMatrix Vt = IntMatrix::identity(k);
    if (lin > 0) {
        SnfDecomposition s = smith_normal_form(IntMatrix::from_rows(out.lineality));
        Vt = s.V.transpose();
    }
    IntMatrix lift = inverse_unimodular(Vt); // columns lift quotient basis vectors
    const std::size_t kq = k - lin;

    // image inequalities: last kq columns of A * lift
    IntMatrix Aq_full = A * lift;
    std::vector<Vec> qrows;
    for (std::size_t i = 0; i < Aq_full.rows(); ++i) {
        Vec r(kq);
        for (std::size_t j = 0; j < kq; ++j) r[j] = Aq_full.at(i, lin + j);
        if (!vec_is_zero(r)) qrows.push_back(normalized(r));
    }
    std::sort(qrows.begin(), qrows.end());
    qrows.erase(std::unique(qrows.begin(), qrows.end()), qrows.end());

    // rays of the pointed image cone: one-dimensional kernels of
    // (kq-1)-subsets of the rows, kept when they satisfy every inequality
    std::set<Vec> rays;
    auto consider = [&](Vec v) {
        v = normalized(std::move(v));
        bool ok = true, okNeg = true;
        for (const Vec& r : qrows) {
            Int d = dot(r, v);
            if (d < 0) ok = false;
            if (d > 0) okNeg = false;
        }
        if (ok)
            rays.insert(v);
        else if (okNeg)
            rays.insert(vec_neg(v));
    };
    if (kq == 1) {
        consider(Vec{Int(1)});
    } else {
        std::vector<std::size_t> idx(kq - 1);
        const std::size_t nrows = qrows.size();
        // iterate over (kq-1)-subsets of rows
        std::vector<std::size_t> comb;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (comb.size() == kq - 1) {
                std::vector<Vec> sub;
                for (std::size_t i : comb) sub.push_back(qrows[i]);
                auto ker = kernel_basis(IntMatrix::from_rows(sub));
                if (ker.size() == 1) consider(ker.front());
                return;
            }
            for (std::size_t i = start; i < nrows; ++i) {
                comb.push_back(i);
                self(self, i + 1);
                comb.pop_back();
            }
        };
        if (nrows >= kq - 1) rec(rec, 0);
        (void)idx;
    }

    // lift rays back to the original coordinates (first `lin` quotient
    // coordinates zero)
    for (const Vec& r : rays) {
        Vec c(k);
        for (std::size_t j = 0; j < kq; ++j) c[lin + j] = r[j];
        out.rays.push_back(lift.apply(c));
    }
    return out;
}

namespace {

// affine rows: a.lambda + constant >= 0, stored as [a_0..a_{m-1}, constant]
struct AffineFm {
    std::vector<std::vector<Vec>> history; // rows alive before eliminating var v
};

std::vector<Vec> fm_affine_eliminate(const std::vector<Vec>& rows, std::size_t var) {
    std::vector<Vec> zero, pos, neg;
    for (const Vec& r : rows) {
        if (r[var] == 0)
            zero.push_back(r);
        else if (r[var] > 0)
            pos.push_back(r);
        else
            neg.push_back(r);
    }
    std::set<Vec> out(zero.begin(), zero.end());
    for (const Vec& p : pos)
        for (const Vec& n : neg) {
            Vec combined(p.size());
            for (std::size_t i = 0; i < p.size(); ++i)
                combined[i] = (-n[var]) * p[i] + p[var] * n[i];
            out.insert(normalized(std::move(combined)));
            if (out.size() > kFmRowCap)
                throw CapabilityError("Fourier-Motzkin elimination exceeded the row cap");
        }
    return {out.begin(), out.end()};
}

} // namespace

std::optional<std::vector<Rat>> nonneg_combination(const std::vector<Vec>& gens, const Vec& x) {
    const std::size_t m = gens.size();
    const std::size_t d = x.size();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m; ++i) {
        Vec r(m + 1);
        r[i] = 1;
        rows.push_back(r);
    }
    for (std::size_t j = 0; j < d; ++j) {
        Vec r(m + 1);
        for (std::size_t i = 0; i < m; ++i) r[i] = gens[i][j];
        r[m] = -x[j];
        rows.push_back(normalized(r));
        rows.push_back(normalized(vec_neg(r)));
    }

    std::vector<std::vector<Vec>> history;
    for (std::size_t v = m; v-- > 0;) {
        history.push_back(rows);
        rows = fm_affine_eliminate(rows, v);
    }
    for (const Vec& r : rows)
        if (r[m] < 0) return std::nullopt; // constant row violated: infeasible

    // back substitution, tightest bounds first
    std::vector<Rat> lambda(m);
    for (std::size_t v = 0; v < m; ++v) {
        const std::vector<Vec>& level = history[m - 1 - v];
        bool hasLo = false, hasHi = false;
        Rat lo = 0, hi = 0;
        for (const Vec& r : level) {
            if (r[v] == 0) continue;
            Rat rest = r[m];
            for (std::size_t i = v + 1; i < m; ++i) rest += Rat(r[i]) * lambda[i];
            Rat bound = -rest / Rat(r[v]);
            if (r[v] > 0) {
                if (!hasLo || bound > lo) lo = bound;
                hasLo = true;
            } else {
                if (!hasHi || bound < hi) hi = bound;
                hasHi = true;
            }
        }
        if (hasLo && hasHi)
            lambda[v] = (lo + hi) / 2;
        else if (hasLo)
            lambda[v] = lo;
        else if (hasHi)
            lambda[v] = hi;
        else
            lambda[v] = 0;
    }
    // paranoia: verify the witness
    for (std::size_t j = 0; j < d; ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < m; ++i) s += lambda[i] * Rat(gens[i][j]);
        if (s != Rat(x[j])) return std::nullopt;
    }
    for (const Rat& l : lambda)
        if (l < 0) return std::nullopt;
    return lambda;
}

std::vector<Vec> hilbert_basis_pointed(const std::vector<Vec>& gens, const ConeIneqs& ineqs) {
    const std::size_t k = ineqs.dim;
    std::vector<Vec> nz;
    for (const Vec& g : gens)
        if (!vec_is_zero(g)) nz.push_back(g);
    if (nz.empty() || k == 0) return {};

    Vec lfun(k);
    for (const Vec& r : ineqs.rows) lfun = vec_add(lfun, r);
    for (const Vec& g : nz)
        if (dot(lfun, g) <= 0)
            throw CapabilityError("Hilbert basis enumeration requires a pointed cone");

    Int maxNorm = 0, sumNorm = 0;
    for (const Vec& g : nz) {
        Int n = 0;
        for (const Int& c : g) n = std::max(n, int_abs(c));
        maxNorm = std::max(maxNorm, n);
        sumNorm += n;
    }
    Int radius = std::min(Int(k) * maxNorm, sumNorm);
    if (radius > 64) throw CapabilityError("Hilbert basis box radius too large");
    const long R = radius.convert_to<long>();

    // enumerate the box, keep cone points
    std::vector<Vec> candidates;
    Vec cur(k, Int(-R));
    for (;;) {
        if (!vec_is_zero(cur) && cone_contains(ineqs, cur)) candidates.push_back(cur);
        std::size_t i = 0;
        while (i < k) {
            if (++cur[i] <= R) break;
            cur[i] = -R;
            ++i;
        }
        if (i == k) break;
        if (candidates.size() > 2000000)
            throw CapabilityError("Hilbert basis enumeration exceeded the point cap");
    }

    std::sort(candidates.begin(), candidates.end(), [&](const Vec& a, const Vec& b) {
        Int la = dot(lfun, a), lb = dot(lfun, b);
        if (la != lb) return la < lb;
        return a < b;
    });

    std::vector<Vec> basis;
    for (const Vec& x : candidates) {
        bool reducible = false;
        for (const Vec& h : basis) {
            if (h == x) {
                reducible = true;
                break;
            }
            if (cone_contains(ineqs, vec_sub(x, h))) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(x);
    }
    return basis;
}

} // namespace kummer
