#include "ct/zmodlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace ct {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::row_axpy(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) -= q * at(j, c);
}

void IntMatrix::col_axpy(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) -= q * at(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

IntMatrix IntMatrix::mul(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix::mul: dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += x * rhs.at(k, j);
        }
    return out;
}

std::vector<Int> IntMatrix::mul_vec(const std::vector<Int>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("IntMatrix::mul_vec: dimension mismatch");
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) acc += at(i, j) * x[j];
        out[i] = acc;
    }
    return out;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Truncated quotient is enough: remainders shrink strictly, so the
// pivot loop terminates like the Euclidean algorithm.
Int quot(const Int& a, const Int& b) { return a / b; }

}  // namespace

SNFResult smith_normal_form(IntMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    const std::size_t tmax = std::min(rows, cols);

    std::size_t t = 0;
    while (t < tmax) {
        // Pick the smallest nonzero |entry| of the trailing submatrix as pivot.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const Int& x = m.at(i, j);
                if (x == 0) continue;
                if (pr == rows || abs_int(x) < abs_int(m.at(pr, pc))) { pr = i; pc = j; }
            }
        if (pr == rows) break;  // trailing submatrix is zero
        m.swap_rows(t, pr); u.swap_rows(t, pr);
        m.swap_cols(t, pc); v.swap_cols(t, pc);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (m.at(i, t) == 0) continue;
            Int q = quot(m.at(i, t), m.at(t, t));
            m.row_axpy(i, t, q);
            u.row_axpy(i, t, q);
            if (m.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (m.at(t, j) == 0) continue;
            Int q = quot(m.at(t, j), m.at(t, t));
            m.col_axpy(j, t, q);
            v.col_axpy(j, t, q);
            if (m.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders exist; re-pivot

        // Pivot divides the rest of the submatrix, else fold a bad row in
        // and restart this position.
        const Int& p = m.at(t, t);
        bool fixed = false;
        for (std::size_t i = t + 1; i < rows && !fixed; ++i)
            for (std::size_t j = t + 1; j < cols; ++j)
                if (m.at(i, j) % p != 0) {
                    m.row_axpy(t, i, Int(-1));
                    u.row_axpy(t, i, Int(-1));
                    fixed = true;
                    break;
                }
        if (fixed) continue;
        ++t;
    }

    for (std::size_t i = 0; i < tmax; ++i)
        if (m.at(i, i) < 0) {
            m.negate_row(i);
            u.negate_row(i);
        }
    return SNFResult{std::move(u), std::move(m), std::move(v)};
}

Int mod_inverse(const Int& a, const Int& m) {
    Int old_r = a % m, r = m;
    if (old_r < 0) old_r += m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
    }
    if (old_r != 1) throw std::invalid_argument("mod_inverse: not coprime");
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

std::optional<ModSolution> solve_mod(const IntMatrix& a, const std::vector<Int>& b, const Int& m) {
    if (m < 1) throw std::invalid_argument("solve_mod: modulus must be >= 1");
    if (b.size() != a.rows()) throw std::invalid_argument("solve_mod: dimension mismatch");
    const std::size_t rows = a.rows(), cols = a.cols();

    auto reduce = [&m](const Int& x) {
        Int r = x % m;
        if (r < 0) r += m;
        return r;
    };

    // Reducing A mod m first keeps SNF entries small and leaves the
    // solution set mod m unchanged.
    IntMatrix ar(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) ar.at(i, j) = reduce(a.at(i, j));

    SNFResult snf = smith_normal_form(std::move(ar));
    std::vector<Int> c = snf.u.mul_vec(b);
    for (Int& x : c) x = reduce(x);

    const std::size_t tmax = std::min(rows, cols);
    std::vector<Int> y(cols, Int(0));
    for (std::size_t i = 0; i < rows; ++i) {
        const Int s = i < tmax ? snf.s.at(i, i) : Int(0);
        const Int g = boost::multiprecision::gcd(s, m);   // gcd(0, m) = m
        if (c[i] % g != 0) return std::nullopt;
        if (i >= tmax) continue;                           // equation 0 = 0 (mod m)
        const Int mg = m / g;
        if (mg == 1) { y[i] = 0; continue; }
        y[i] = (c[i] / g) * mod_inverse(s / g, mg) % mg;
    }

    ModSolution out;
    out.particular.assign(cols, Int(0));
    {
        std::vector<Int> x = snf.v.mul_vec(y);
        for (std::size_t j = 0; j < cols; ++j) out.particular[j] = reduce(x[j]);
    }
    for (std::size_t i = 0; i < cols; ++i) {
        const Int s = i < tmax ? snf.s.at(i, i) : Int(0);
        const Int k = m / boost::multiprecision::gcd(s, m);
        if (k == m) continue;  // only the zero solution in this coordinate
        std::vector<Int> gen(cols);
        bool nonzero = false;
        for (std::size_t j = 0; j < cols; ++j) {
            gen[j] = reduce(k * snf.v.at(j, i));
            nonzero |= gen[j] != 0;
        }
        if (nonzero) out.kernel.push_back(std::move(gen));
    }
    return out;
}

}  // namespace ct
