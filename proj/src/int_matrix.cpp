#include "posettop/int_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace posettop {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw Error("ragged dense matrix");
        for (int j = 0; j < c; ++j)
            if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
}

Int IntMatrix::get(int r, int c) const {
    const auto& col = columns_[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != col.end() && it->first == r) return it->second;
    return 0;
}

void IntMatrix::add_to(int r, int c, const Int& v) {
    if (v == 0) return;
    auto& col = columns_[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
        it->second += v;
        if (it->second == 0) col.erase(it);
    } else {
        col.insert(it, {r, v});
    }
}

void IntMatrix::set(int r, int c, Int v) {
    auto& col = columns_[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
        if (v == 0)
            col.erase(it);
        else
            it->second = std::move(v);
    } else if (v != 0) {
        col.insert(it, {r, std::move(v)});
    }
}

std::size_t IntMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& col : columns_) n += col.size();
    return n;
}

bool IntMatrix::is_zero() const { return nonzeros() == 0; }

std::vector<Int> IntMatrix::apply(std::span<const Int> x) const {
    if (static_cast<int>(x.size()) != cols_) throw Error("apply: dimension mismatch");
    std::vector<Int> out(static_cast<std::size_t>(rows_), 0);
    for (int c = 0; c < cols_; ++c) {
        const Int& xc = x[static_cast<std::size_t>(c)];
        if (xc == 0) continue;
        for (const auto& [r, v] : columns_[static_cast<std::size_t>(c)])
            out[static_cast<std::size_t>(r)] += v * xc;
    }
    return out;
}

IntMatrix IntMatrix::multiply(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("multiply: dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int c = 0; c < rhs.cols_; ++c) {
        // out column = linear combination of our columns.
        std::vector<std::pair<int, Int>> acc;
        for (const auto& [k, w] : rhs.columns_[static_cast<std::size_t>(c)]) {
            for (const auto& [r, v] : columns_[static_cast<std::size_t>(k)])
                acc.emplace_back(r, v * w);
        }
        std::sort(acc.begin(), acc.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        auto& col = out.columns_[static_cast<std::size_t>(c)];
        for (auto& [r, v] : acc) {
            if (!col.empty() && col.back().first == r)
                col.back().second += v;
            else
                col.emplace_back(r, std::move(v));
            if (col.back().second == 0) col.pop_back();
        }
    }
    return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& A, const IntMatrix& B) {
    if (A.rows() != B.rows()) throw Error("hstack: row mismatch");
    IntMatrix out(A.rows(), A.cols() + B.cols());
    for (int c = 0; c < A.cols(); ++c) out.columns_[static_cast<std::size_t>(c)] = A.column(c);
    for (int c = 0; c < B.cols(); ++c)
        out.columns_[static_cast<std::size_t>(A.cols() + c)] = B.column(c);
    return out;
}

std::vector<std::vector<Int>> IntMatrix::to_dense() const {
    std::vector<std::vector<Int>> d(static_cast<std::size_t>(rows_),
                                    std::vector<Int>(static_cast<std::size_t>(cols_), 0));
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : columns_[static_cast<std::size_t>(c)])
            d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    return d;
}

std::vector<Int> IntMatrix::dense_column(int c) const {
    std::vector<Int> out(static_cast<std::size_t>(rows_), 0);
    for (const auto& [r, v] : columns_[static_cast<std::size_t>(c)])
        out[static_cast<std::size_t>(r)] = v;
    return out;
}

std::string IntMatrix::to_matrix_market() const {
    std::ostringstream out;
    out << "%%MatrixMarket matrix coordinate integer general\n";
    out << rows_ << " " << cols_ << " " << nonzeros() << "\n";
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : columns_[static_cast<std::size_t>(c)])
            out << (r + 1) << " " << (c + 1) << " " << v << "\n";
    return out.str();
}

}  // namespace posettop
