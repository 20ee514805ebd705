#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace cech {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

// Internal signal: fixed-width arithmetic overflowed, redo in arbitrary precision.
struct ArithmeticOverflow {};

struct Int64Ops {
    using value_type = std::int64_t;
    static std::int64_t add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow{};
        return r;
    }
    static std::int64_t sub(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow{};
        return r;
    }
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow{};
        return r;
    }
    static std::int64_t neg(std::int64_t a) {
        if (a == INT64_MIN) throw ArithmeticOverflow{};
        return -a;
    }
    static std::int64_t quot(std::int64_t a, std::int64_t b) {
        if (a == INT64_MIN && b == -1) throw ArithmeticOverflow{};
        return a / b; // truncation toward zero
    }
    static bool abs_less(std::int64_t a, std::int64_t b) {
        if (a == INT64_MIN || b == INT64_MIN) throw ArithmeticOverflow{};
        return std::abs(a) < std::abs(b);
    }
};

struct BigOps {
    using value_type = BigInt;
    static BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
    static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
    static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
    static BigInt neg(const BigInt& a) { return -a; }
    static BigInt quot(const BigInt& a, const BigInt& b) { return a / b; }
    static bool abs_less(const BigInt& a, const BigInt& b) {
        return boost::multiprecision::abs(a) < boost::multiprecision::abs(b);
    }
};

} // namespace detail

/// Dense row-major matrix with exact integer entries.
template <typename Int>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) :
        rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Int(0)) {
        if (rows < 0 || cols < 0) throw InvalidArgumentError("matrix dimensions must be nonnegative");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Int(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return data_[index(i, j)]; }
    const Int& at(int i, int j) const { return data_[index(i, j)]; }

    bool operator==(const Matrix& other) const = default;

    Matrix operator*(const Matrix& other) const {
        if (cols_ != other.rows_) throw InvalidArgumentError("matrix product shape mismatch");
        Matrix out(rows_, other.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& a = at(i, k);
                if (a == 0) continue;
                for (int j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
            }
        return out;
    }

    bool is_zero() const {
        for (const Int& x : data_)
            if (x != 0) return false;
        return true;
    }

  private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw InvalidArgumentError("matrix index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using BigMatrix = Matrix<BigInt>;

inline BigMatrix to_big(const IntMatrix& m) {
    BigMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

inline BigMatrix hconcat(const BigMatrix& a, const BigMatrix& b) {
    if (a.rows() != b.rows()) throw InvalidArgumentError("hconcat row mismatch");
    BigMatrix out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

/// Diagonalization U*M*V = D with unimodular U, V; the nonzero diagonal
/// entries are positive and form a divisibility chain d1 | d2 | ...
struct SnfResult {
    BigMatrix d;
    int rank = 0;
    std::vector<BigInt> invariant_factors;
    std::optional<BigMatrix> u;
    std::optional<BigMatrix> v;
    bool promoted = false; // int64 arithmetic overflowed; redone in arbitrary precision
};

namespace detail {

// Elimination with pivots chosen by minimal absolute value (ties: lowest row,
// then column) to limit entry growth; output is deterministic.
template <typename Ops>
SnfResult snf_impl(const Matrix<typename Ops::value_type>& input, bool with_transforms) {
    using Int = typename Ops::value_type;
    Matrix<Int> m = input;
    const int rows = m.rows();
    const int cols = m.cols();
    Matrix<Int> u, v;
    if (with_transforms) {
        u = Matrix<Int>::identity(rows);
        v = Matrix<Int>::identity(cols);
    }

    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
        if (with_transforms)
            for (int j = 0; j < rows; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
        if (with_transforms)
            for (int i = 0; i < cols; ++i) std::swap(v.at(i, a), v.at(i, b));
    };
    // row[a] -= q * row[b]
    auto row_sub = [&](int a, int b, const Int& q) {
        for (int j = 0; j < cols; ++j) m.at(a, j) = Ops::sub(m.at(a, j), Ops::mul(q, m.at(b, j)));
        if (with_transforms)
            for (int j = 0; j < rows; ++j)
                u.at(a, j) = Ops::sub(u.at(a, j), Ops::mul(q, u.at(b, j)));
    };
    auto col_sub = [&](int a, int b, const Int& q) {
        for (int i = 0; i < rows; ++i) m.at(i, a) = Ops::sub(m.at(i, a), Ops::mul(q, m.at(i, b)));
        if (with_transforms)
            for (int i = 0; i < cols; ++i)
                v.at(i, a) = Ops::sub(v.at(i, a), Ops::mul(q, v.at(i, b)));
    };
    auto row_add = [&](int a, int b) {
        for (int j = 0; j < cols; ++j) m.at(a, j) = Ops::add(m.at(a, j), m.at(b, j));
        if (with_transforms)
            for (int j = 0; j < rows; ++j) u.at(a, j) = Ops::add(u.at(a, j), u.at(b, j));
    };
    auto negate_row = [&](int a) {
        for (int j = 0; j < cols; ++j) m.at(a, j) = Ops::neg(m.at(a, j));
        if (with_transforms)
            for (int j = 0; j < rows; ++j) u.at(a, j) = Ops::neg(u.at(a, j));
    };

    const int bound = std::min(rows, cols);
    int t = 0;
    while (t < bound) {
        // Minimal-absolute-value pivot in the trailing submatrix.
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (m.at(i, j) == 0) continue;
                if (pi == -1 || Ops::abs_less(m.at(i, j), m.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == -1) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        for (;;) {
            bool clean;
            do {
                clean = true;
                for (int i = t + 1; i < rows; ++i) {
                    if (m.at(i, t) == 0) continue;
                    Int q = Ops::quot(m.at(i, t), m.at(t, t));
                    if (q != 0) row_sub(i, t, q);
                    if (m.at(i, t) != 0) { // Euclidean step: remainder becomes the pivot
                        swap_rows(i, t);
                        clean = false;
                    }
                }
                for (int j = t + 1; j < cols; ++j) {
                    if (m.at(t, j) == 0) continue;
                    Int q = Ops::quot(m.at(t, j), m.at(t, t));
                    if (q != 0) col_sub(j, t, q);
                    if (m.at(t, j) != 0) {
                        swap_cols(j, t);
                        clean = false;
                    }
                }
            } while (!clean);

            // The pivot must divide the whole trailing submatrix for the
            // invariant factors to chain; pull in a violating row and redo.
            bool divisible = true;
            for (int i = t + 1; i < rows && divisible; ++i)
                for (int j = t + 1; j < cols; ++j) {
                    Int q = Ops::quot(m.at(i, j), m.at(t, t));
                    if (Ops::sub(m.at(i, j), Ops::mul(q, m.at(t, t))) != 0) {
                        row_add(t, i);
                        divisible = false;
                        break;
                    }
                }
            if (divisible) break;
        }
        if (m.at(t, t) < 0) negate_row(t);
        ++t;
    }

    SnfResult out;
    out.rank = t;
    out.d = BigMatrix(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.d.at(i, j) = m.at(i, j);
    for (int i = 0; i < t; ++i) out.invariant_factors.push_back(BigInt(m.at(i, i)));
    if (with_transforms) {
        BigMatrix bu(rows, rows), bv(cols, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < rows; ++j) bu.at(i, j) = u.at(i, j);
        for (int i = 0; i < cols; ++i)
            for (int j = 0; j < cols; ++j) bv.at(i, j) = v.at(i, j);
        out.u = std::move(bu);
        out.v = std::move(bv);
    }
    return out;
}

} // namespace detail

/// Smith normal form over the integers. Runs in fixed-width arithmetic first
/// and transparently promotes to arbitrary precision on overflow.
inline SnfResult smith_normal_form(const IntMatrix& m, bool with_transforms = false) {
    try {
        return detail::snf_impl<detail::Int64Ops>(m, with_transforms);
    } catch (const detail::ArithmeticOverflow&) {
        SnfResult out = detail::snf_impl<detail::BigOps>(to_big(m), with_transforms);
        out.promoted = true;
        return out;
    }
}

inline SnfResult smith_normal_form(const BigMatrix& m, bool with_transforms = false) {
    return detail::snf_impl<detail::BigOps>(m, with_transforms);
}

namespace detail {

// Fraction-free (Bareiss) row elimination on the leading `width` columns;
// intermediate entries are bounded by minors, so nothing explodes. Returns the
// rank; the matrix is left in echelon form (including any trailing columns,
// which ride along as an augmented block).
inline int bareiss_reduce(BigMatrix& m, int width) {
    const int rows = m.rows();
    const int cols = m.cols();
    BigInt prev = 1;
    int r = 0;
    for (int c = 0; c < width && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m.at(i, c) != 0 &&
                (pivot == -1 || boost::multiprecision::abs(m.at(i, c)) <
                                    boost::multiprecision::abs(m.at(pivot, c)))) {
                pivot = i;
            }
        if (pivot == -1) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                if (j == c) continue;
                m.at(i, j) = (m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j)) / prev;
            }
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    return r;
}

} // namespace detail

/// Rank over the rationals, by fraction-free elimination.
inline int rank(const BigMatrix& m) {
    BigMatrix work = m;
    return detail::bareiss_reduce(work, work.cols());
}

inline int rank(const IntMatrix& m) {
    BigMatrix work = to_big(m);
    return detail::bareiss_reduce(work, work.cols());
}

/// Integer basis of the kernel, as matrix columns. Row-reduces the transpose
/// augmented with the identity: the augmented parts of the zero rows are
/// vanishing combinations of the columns, i.e. kernel vectors.
inline BigMatrix kernel_basis(const BigMatrix& m) {
    const int n = m.cols();
    BigMatrix aug(n, m.rows() + n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m.rows(); ++j) aug.at(i, j) = m.at(j, i);
        aug.at(i, m.rows() + i) = 1;
    }
    const int r = detail::bareiss_reduce(aug, m.rows());
    BigMatrix out(n, n - r);
    for (int k = 0; k < n - r; ++k)
        for (int i = 0; i < n; ++i) out.at(i, k) = aug.at(r + k, m.rows() + i);
    return out;
}

inline BigMatrix kernel_basis(const IntMatrix& m) {
    return kernel_basis(to_big(m));
}

} // namespace cech
