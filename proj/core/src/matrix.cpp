#include "gkz/matrix.hpp"

#include "gkz/error.hpp"

#include <numeric>

namespace gkz {

RatMatrix to_rational(const IntMatrix &m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = Rational(m(r, c));
    return out;
}

std::vector<std::size_t> row_reduce(RatMatrix &m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && sgn(m(sel, col)) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        m.swap_rows(sel, row);
        const Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0)
                continue;
            const Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(RatMatrix m) { return row_reduce(m).size(); }

std::vector<RatVector> kernel_basis(RatMatrix m) {
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        RatVector x(m.cols());
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = -m(r, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix &m, const RatVector &b) {
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;
    RatVector x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(r, m.cols());
    return x;
}

namespace {

// Moves the entry of least nonzero absolute value in the trailing block
// starting at (t, t) to position (t, t).  Returns false if the block is zero.
bool bring_min_to_pivot(IntMatrix &m, std::size_t t) {
    std::size_t best_r = m.rows(), best_c = m.cols();
    Integer best;
    for (std::size_t r = t; r < m.rows(); ++r)
        for (std::size_t c = t; c < m.cols(); ++c) {
            if (sgn(m(r, c)) == 0)
                continue;
            if (best_r == m.rows() || abs(m(r, c)) < best) {
                best = abs(m(r, c));
                best_r = r;
                best_c = c;
            }
        }
    if (best_r == m.rows())
        return false;
    m.swap_rows(t, best_r);
    m.swap_cols(t, best_c);
    return true;
}

} // namespace

std::vector<Integer> smith_invariants(IntMatrix m) {
    std::vector<Integer> out;
    const std::size_t limit = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < limit; ++t) {
        if (!bring_min_to_pivot(m, t))
            break;
        for (;;) {
            bool dirty = false;
            for (std::size_t r = t + 1; r < m.rows(); ++r) {
                if (sgn(m(r, t)) == 0)
                    continue;
                const Integer q = m(r, t) / m(t, t);
                for (std::size_t c = t; c < m.cols(); ++c)
                    m(r, c) -= q * m(t, c);
                dirty = dirty || sgn(m(r, t)) != 0;
            }
            for (std::size_t c = t + 1; c < m.cols(); ++c) {
                if (sgn(m(t, c)) == 0)
                    continue;
                const Integer q = m(t, c) / m(t, t);
                for (std::size_t r = t; r < m.rows(); ++r)
                    m(r, c) -= q * m(r, t);
                dirty = dirty || sgn(m(t, c)) != 0;
            }
            if (dirty) {
                bring_min_to_pivot(m, t);
                continue;
            }
            // Pivot row and column are clear; enforce divisibility.
            bool divides = true;
            for (std::size_t r = t + 1; r < m.rows() && divides; ++r)
                for (std::size_t c = t + 1; c < m.cols(); ++c)
                    if (sgn(m(r, c)) != 0 && m(r, c) % m(t, t) != 0) {
                        for (std::size_t cc = t; cc < m.cols(); ++cc)
                            m(t, cc) += m(r, cc);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        out.push_back(abs(m(t, t)));
    }
    return out;
}

ColumnEchelon column_echelon(const IntMatrix &a) {
    IntMatrix w = a;
    IntMatrix u = IntMatrix::identity(a.cols());
    const auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer &q) {
        for (std::size_t r = 0; r < w.rows(); ++r)
            w(r, dst) -= q * w(r, src);
        for (std::size_t r = 0; r < u.rows(); ++r)
            u(r, dst) -= q * u(r, src);
    };

    std::size_t p = 0;
    for (std::size_t row = 0; row < w.rows() && p < w.cols(); ++row) {
        for (;;) {
            std::size_t best = w.cols();
            for (std::size_t c = p; c < w.cols(); ++c)
                if (sgn(w(row, c)) != 0 &&
                    (best == w.cols() || abs(w(row, c)) < abs(w(row, best))))
                    best = c;
            if (best == w.cols())
                break;
            w.swap_cols(p, best);
            u.swap_cols(p, best);
            bool clear = true;
            for (std::size_t c = p + 1; c < w.cols(); ++c) {
                if (sgn(w(row, c)) == 0)
                    continue;
                const Integer q = w(row, c) / w(row, p);
                col_axpy(c, p, q);
                clear = clear && sgn(w(row, c)) == 0;
            }
            if (clear) {
                ++p;
                break;
            }
        }
    }

    std::vector<std::size_t> keep(p);
    std::iota(keep.begin(), keep.end(), std::size_t{0});
    return {w.select_columns(keep), std::move(u)};
}

std::vector<Integer> primitive_integer_vector(const RatVector &v) {
    Integer lcm_den = 1;
    for (const auto &x : v)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Rational scaled = v[i] * Rational(lcm_den);
        out[i] = scaled.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g == 0)
        throw Error(ErrorCode::InvalidArgument, "zero vector has no primitive form");
    for (auto &x : out)
        x /= g;
    return out;
}

} // namespace gkz
