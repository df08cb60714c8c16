#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "posettop/errors.hpp"

namespace posettop {

using Int = boost::multiprecision::cpp_int;

/// Exact integer matrix, sparse storage by column (entries sorted by row,
/// zeros never stored). Boundary matrices have O(n) nonzeros per column,
/// which this layout exploits.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(static_cast<std::size_t>(cols)) {}

    static IntMatrix identity(int n);
    static IntMatrix from_dense(const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const std::vector<std::pair<int, Int>>& column(int c) const {
        return columns_[static_cast<std::size_t>(c)];
    }

    Int get(int r, int c) const;
    /// Adds v to entry (r, c), dropping the entry if it becomes zero.
    void add_to(int r, int c, const Int& v);
    void set(int r, int c, Int v);

    std::size_t nonzeros() const;
    bool is_zero() const;

    /// Matrix-vector product A*x.
    std::vector<Int> apply(std::span<const Int> x) const;
    /// x^T * A (needed for row extraction-free products).
    IntMatrix multiply(const IntMatrix& rhs) const;

    /// Horizontal concatenation [A | B].
    static IntMatrix hstack(const IntMatrix& A, const IntMatrix& B);

    std::vector<std::vector<Int>> to_dense() const;
    /// Column c as a dense vector.
    std::vector<Int> dense_column(int c) const;

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && columns_ == other.columns_;
    }

    /// MatrixMarket coordinate format (1-based indices).
    std::string to_matrix_market() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<std::pair<int, Int>>> columns_;
};

}  // namespace posettop
