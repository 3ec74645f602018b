#include "ferrerslab/matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ferrerslab {

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    if (cols > 64) throw cap_exceeded("matrices wider than 64 columns are beyond desk scale");
    bits_.assign(static_cast<size_t>(rows), 0);
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    BinaryMatrix m(r, c);
    for (int i = 0; i < r; i++) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; j++) {
            char ch = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (ch != '0' && ch != '1') throw std::invalid_argument("matrix entries must be 0 or 1");
            m.set(i, j, ch == '1');
        }
    }
    return m;
}

void BinaryMatrix::set(int i, int j, bool v) {
    if (v)
        bits_[static_cast<size_t>(i)] |= std::uint64_t{1} << j;
    else
        bits_[static_cast<size_t>(i)] &= ~(std::uint64_t{1} << j);
}

std::uint64_t BinaryMatrix::col_mask(int j) const {
    std::uint64_t m = 0;
    for (int i = 0; i < rows_; i++)
        if (at(i, j)) m |= std::uint64_t{1} << i;
    return m;
}

int BinaryMatrix::row_sum(int i) const { return std::popcount(bits_[static_cast<size_t>(i)]); }

int BinaryMatrix::col_sum(int j) const { return std::popcount(col_mask(j)); }

bool BinaryMatrix::all_ones() const {
    if (cols_ == 0) return true;
    std::uint64_t full = cols_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cols_) - 1;
    return std::all_of(bits_.begin(), bits_.end(), [&](std::uint64_t r) { return r == full; });
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; i++)
        for (int j = 0; j < cols_; j++)
            if (at(i, j)) t.set(j, i, true);
    return t;
}

std::vector<std::string> BinaryMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; i++) {
        std::string s(static_cast<size_t>(cols_), '0');
        for (int j = 0; j < cols_; j++)
            if (at(i, j)) s[static_cast<size_t>(j)] = '1';
        out.push_back(std::move(s));
    }
    return out;
}

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
    std::vector<bool> seen(map_.size(), false);
    for (int v : map_) {
        if (v < 0 || v >= static_cast<int>(map_.size()) || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> m(static_cast<size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(map_.size());
    for (int i = 0; i < size(); i++) inv[static_cast<size_t>(map_[static_cast<size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

BinaryMatrix permuted(const BinaryMatrix& m, const Arrangement& a) {
    if (a.rows.size() != m.rows() || a.cols.size() != m.cols())
        throw std::invalid_argument("arrangement shape mismatch");
    BinaryMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++)
            if (m.at(a.rows[i], a.cols[j])) out.set(i, j, true);
    return out;
}

BinaryMatrix entrywise_and(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
    BinaryMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); i++)
        for (int j = 0; j < a.cols(); j++)
            if (a.at(i, j) && b.at(i, j)) out.set(i, j, true);
    return out;
}

BinaryMatrix entrywise_or(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
    BinaryMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); i++)
        for (int j = 0; j < a.cols(); j++)
            if (a.at(i, j) || b.at(i, j)) out.set(i, j, true);
    return out;
}

} // namespace ferrerslab
