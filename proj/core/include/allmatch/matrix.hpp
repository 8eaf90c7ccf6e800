#pragma once

#include "allmatch/errors.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace allmatch {

// Subset of the column indices {1..n}. Stored 0-based in a single word, so a
// matrix may have at most 64 columns. Externally columns are 1-based.
class ColumnSet {
public:
    ColumnSet() = default;
    explicit ColumnSet(std::uint64_t mask) : mask_(mask) {}

    std::uint64_t mask() const { return mask_; }
    bool empty() const { return mask_ == 0; }
    int size() const { return __builtin_popcountll(mask_); }
    bool contains(int col) const { return (mask_ >> (col - 1)) & 1u; }

    // 1-based columns in increasing order.
    std::vector<int> columns() const;

    // The k-th smallest member, k in [0, size()); 1-based column index.
    int nth(int k) const;

    friend bool operator==(const ColumnSet&, const ColumnSet&) = default;

private:
    std::uint64_t mask_ = 0;
};

// Dense 0-1 matrix, one bitset word per row; bit j-1 of row i-1 is a_{ij}.
// Immutable after construction. A 0xN or 0x0 matrix is valid.
class ZeroOneMatrix {
public:
    ZeroOneMatrix() = default;
    static constexpr int max_cols = 64;

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    // 1-based indices.
    int at(int i, int j) const { return (bits_[i - 1] >> (j - 1)) & 1u; }
    std::uint64_t row_bits(int i) const { return bits_[i - 1]; }

    long ones() const;

    friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;

    friend ZeroOneMatrix make_matrix(const std::vector<std::vector<int>>& rows);
    friend ZeroOneMatrix make_matrix_from_bits(int rows, int cols,
                                               const std::vector<std::uint64_t>& bits);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Validates entries and shape; error messages name the offending row/column
// 1-based ("ragged row 2", "non-binary entry at row 1 column 3").
ZeroOneMatrix make_matrix(const std::vector<std::vector<int>>& rows);

// Trusted constructor for generators; masks must fit in cols bits.
ZeroOneMatrix make_matrix_from_bits(int rows, int cols,
                                    const std::vector<std::uint64_t>& bits);

// A_{10}: rows 2..m.
ZeroOneMatrix remove_first_row(const ZeroOneMatrix& a);

// A_{1j}: rows 2..m with column j (1-based) deleted.
ZeroOneMatrix remove_first_row_and_column(const ZeroOneMatrix& a, int j);

// Deletes column j (1-based), keeping all rows.
ZeroOneMatrix remove_column(const ZeroOneMatrix& a, int j);

// W = {j : a_{1j} = 1}.
ColumnSet first_row_support(const ZeroOneMatrix& a);

// 2n x 2n block matrix [[A, I], [1, 1]]; input must be square.
ZeroOneMatrix extend_transform(const ZeroOneMatrix& a);

// Text format: one line per row of '0'/'1' characters, newline terminated;
// an empty file is the 0x0 matrix. Any other character is rejected.
std::string write_matrix_text(const ZeroOneMatrix& a);
ZeroOneMatrix read_matrix_text(const std::string& text);

// JSON format: {"rows": m, "cols": n, "data": ["0101", ...]}.
nlohmann::json write_matrix_json(const ZeroOneMatrix& a);
ZeroOneMatrix read_matrix_json(const nlohmann::json& j);

// Dispatches on the first non-whitespace byte: '{' means JSON, else text.
ZeroOneMatrix parse_matrix(const std::string& content);

} // namespace allmatch
