#include "ellwall/linalg.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdlib>

namespace ellwall {

namespace {

Int iabs(Int v) { return v < 0 ? -v : v; }

Int mul_check(Int a, Int b) { return detail::checked_cast(static_cast<__int128>(a) * b); }

// row[i] -= q * row[k], etc. All through checked arithmetic.
void row_axpy(IntMat& m, Eigen::Index dst, Eigen::Index src, Int q) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        m(dst, j) = detail::checked_cast(static_cast<__int128>(m(dst, j)) - static_cast<__int128>(q) * m(src, j));
}

void col_axpy(IntMat& m, Eigen::Index dst, Eigen::Index src, Int q) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        m(i, dst) = detail::checked_cast(static_cast<__int128>(m(i, dst)) - static_cast<__int128>(q) * m(i, src));
}

} // namespace

SmithResult smith_normal_form(const IntMat& a) {
    SmithResult r;
    r.s = a;
    r.u = IntMat::Identity(a.rows(), a.rows());
    r.v = IntMat::Identity(a.cols(), a.cols());
    IntMat& s = r.s;

    const Eigen::Index nmin = std::min(s.rows(), s.cols());
    for (Eigen::Index t = 0; t < nmin; ++t) {
        // Find the smallest nonzero |entry| in the trailing block and move it to (t,t).
        Eigen::Index pi = -1, pj = -1;
        Int best = 0;
        for (Eigen::Index i = t; i < s.rows(); ++i)
            for (Eigen::Index j = t; j < s.cols(); ++j)
                if (s(i, j) != 0 && (pi < 0 || iabs(s(i, j)) < best)) {
                    best = iabs(s(i, j));
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break; // trailing block is zero

        s.row(t).swap(s.row(pi));
        r.u.row(t).swap(r.u.row(pi));
        s.col(t).swap(s.col(pj));
        r.v.col(t).swap(r.v.col(pj));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (Eigen::Index i = t + 1; i < s.rows(); ++i) {
                if (s(i, t) == 0) continue;
                Int q = s(i, t) / s(t, t);
                row_axpy(s, i, t, q);
                row_axpy(r.u, i, t, q);
                if (s(i, t) != 0) {
                    // remainder smaller than pivot: swap up and restart
                    s.row(t).swap(s.row(i));
                    r.u.row(t).swap(r.u.row(i));
                    clean = false;
                }
            }
            for (Eigen::Index j = t + 1; j < s.cols(); ++j) {
                if (s(t, j) == 0) continue;
                Int q = s(t, j) / s(t, t);
                col_axpy(s, j, t, q);
                col_axpy(r.v, j, t, q);
                if (s(t, j) != 0) {
                    s.col(t).swap(s.col(j));
                    r.v.col(t).swap(r.v.col(j));
                    clean = false;
                }
            }
            // Divisibility condition: pivot must divide the trailing block.
            if (clean) {
                for (Eigen::Index i = t + 1; i < s.rows() && clean; ++i)
                    for (Eigen::Index j = t + 1; j < s.cols() && clean; ++j)
                        if (s(i, j) % s(t, t) != 0) {
                            // fold row i into row t so the stray entry enters the pivot's row
                            for (Eigen::Index k = 0; k < s.cols(); ++k)
                                s(t, k) = detail::checked_cast(static_cast<__int128>(s(t, k)) + s(i, k));
                            for (Eigen::Index k = 0; k < r.u.cols(); ++k)
                                r.u(t, k) = detail::checked_cast(static_cast<__int128>(r.u(t, k)) + r.u(i, k));
                            clean = false;
                        }
            }
        }
        if (s(t, t) < 0) {
            s.row(t) = -s.row(t);
            r.u.row(t) = -r.u.row(t);
        }
    }
    return r;
}

std::vector<Int> elementary_divisors(const IntMat& a) {
    SmithResult r = smith_normal_form(a);
    std::vector<Int> d;
    const Eigen::Index nmin = std::min(r.s.rows(), r.s.cols());
    for (Eigen::Index t = 0; t < nmin; ++t)
        if (r.s(t, t) != 0) d.push_back(r.s(t, t));
    return d;
}

IntMat integer_kernel(const IntMat& a) {
    // A = U S V  =>  A x = 0 iff S (V x) = 0 iff (V x)_i = 0 whenever s_i != 0.
    // Kernel basis: columns of V^{-1} at the zero diagonal positions.
    SmithResult r = smith_normal_form(a);
    IntMat vinv = unimodular_inverse(r.v);
    const Eigen::Index n = a.cols();
    const Eigen::Index nmin = std::min(a.rows(), a.cols());
    std::vector<Eigen::Index> zero_pos;
    for (Eigen::Index t = 0; t < nmin; ++t)
        if (r.s(t, t) == 0) zero_pos.push_back(t);
    for (Eigen::Index t = nmin; t < n; ++t) zero_pos.push_back(t);

    IntMat k(n, static_cast<Eigen::Index>(zero_pos.size()));
    for (Eigen::Index c = 0; c < k.cols(); ++c) k.col(c) = vinv.col(zero_pos[static_cast<size_t>(c)]);
    return k;
}

int rational_rank(RatMat m) {
    int rank = 0;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = row; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        m.row(row).swap(m.row(piv));
        for (Eigen::Index i = row + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            Rat f = m(i, col) / m(row, col);
            for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

RatVec rational_solve(RatMat a, RatVec rhs) {
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    std::vector<Eigen::Index> pivot_col;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = row; i < rows; ++i)
            if (!a(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        a.row(row).swap(a.row(piv));
        std::swap(rhs(row), rhs(piv));
        Rat inv = Rat(1) / a(row, col);
        for (Eigen::Index j = col; j < cols; ++j) a(row, j) *= inv;
        rhs(row) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            Rat f = a(i, col);
            for (Eigen::Index j = col; j < cols; ++j) a(i, j) -= f * a(row, j);
            rhs(i) -= f * rhs(row);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (Eigen::Index i = row; i < rows; ++i)
        if (!rhs(i).is_zero()) throw std::domain_error("rational_solve: inconsistent system");

    RatVec x = RatVec::Constant(cols, Rat(0));
    for (Eigen::Index r = 0; r < row; ++r) x(pivot_col[static_cast<size_t>(r)]) = rhs(r);
    return x;
}

IntMat unimodular_inverse(const IntMat& m) {
    const Eigen::Index n = m.rows();
    if (n != m.cols()) throw std::domain_error("unimodular_inverse: matrix not square");
    RatMat a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Rat(m(i, j));

    RatMat inv(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = Rat(i == j ? 1 : 0);

    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = col; i < n; ++i)
            if (!a(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("unimodular_inverse: singular matrix");
        a.row(col).swap(a.row(piv));
        inv.row(col).swap(inv.row(piv));
        Rat d = Rat(1) / a(col, col);
        for (Eigen::Index j = 0; j < n; ++j) {
            a(col, j) *= d;
            inv(col, j) *= d;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            Rat f = a(i, col);
            for (Eigen::Index j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }

    IntMat out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!inv(i, j).is_integer())
                throw std::domain_error("unimodular_inverse: inverse is not integral");
            out(i, j) = inv(i, j).num();
        }
    return out;
}

bool is_positive_semidefinite(const IntMat& g, double tol) {
    Eigen::MatrixXd gd = g.cast<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gd, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

// keep -Wunused happy for mul_check in release builds where it may be unused
namespace {
[[maybe_unused]] const auto keep_mul_check = &mul_check;
}

} // namespace ellwall
