#ifndef FERRERSLAB_MATRIX_HPP
#define FERRERSLAB_MATRIX_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ferrerslab {

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 0/1 matrix; rows are stored as bitmasks (at most 64 columns).
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols);

    /// Build from rows like {"110", "011"}.
    static BinaryMatrix from_strings(const std::vector<std::string>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool at(int i, int j) const { return (bits_[static_cast<size_t>(i)] >> j) & 1u; }
    void set(int i, int j, bool v);

    std::uint64_t row_mask(int i) const { return bits_[static_cast<size_t>(i)]; }
    std::uint64_t col_mask(int j) const;
    int row_sum(int i) const;
    int col_sum(int j) const;
    bool all_ones() const;

    BinaryMatrix transposed() const;
    std::vector<std::string> to_strings() const;

    bool operator==(const BinaryMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Bijection on 0..n-1. mapping()[i] is the image of i.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> mapping);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(map_.size()); }
    int operator[](int i) const { return map_[static_cast<size_t>(i)]; }
    const std::vector<int>& mapping() const { return map_; }
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> map_;
};

/// Row and column permutations applied together.
/// permuted(m, a) has entry (i, j) = m(a.rows[i], a.cols[j]): rows[i] names the
/// original row placed at position i.
struct Arrangement {
    Permutation rows, cols;
};

BinaryMatrix permuted(const BinaryMatrix& m, const Arrangement& a);

BinaryMatrix entrywise_and(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix entrywise_or(const BinaryMatrix& a, const BinaryMatrix& b);

} // namespace ferrerslab

#endif
