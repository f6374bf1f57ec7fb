#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace ct {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row i -= q * row j
    void row_axpy(std::size_t i, std::size_t j, const Int& q);
    /// col i -= q * col j
    void col_axpy(std::size_t i, std::size_t j, const Int& q);
    void negate_row(std::size_t i);

    IntMatrix mul(const IntMatrix& rhs) const;
    std::vector<Int> mul_vec(const std::vector<Int>& x) const;

    bool operator==(const IntMatrix& rhs) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// U * M * V = S with U, V unimodular and S diagonal, d1 | d2 | ...
struct SNFResult {
    IntMatrix u, s, v;
};

/// Total function; never fails. Diagonal entries of s are non-negative and
/// form a divisibility chain.
SNFResult smith_normal_form(IntMatrix m);

/// Particular solution of A x = b (mod m) plus generators of the solution
/// lattice mod m (all homogeneous solutions are Z-combinations of the
/// generators, taken mod m).
struct ModSolution {
    std::vector<Int> particular;           // size cols, entries in [0, m)
    std::vector<std::vector<Int>> kernel;  // nonzero generators mod m
};

/// Solves A x = b (mod m) via Smith normal form of A reduced mod m.
/// Returns std::nullopt when the system has no solution.
/// Throws std::invalid_argument on dimension mismatch or m < 1.
std::optional<ModSolution> solve_mod(const IntMatrix& a, const std::vector<Int>& b, const Int& m);

/// Inverse of a mod m; requires gcd(a, m) = 1. Throws otherwise.
Int mod_inverse(const Int& a, const Int& m);

}  // namespace ct
