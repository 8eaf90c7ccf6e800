#include "allmatch/matrix.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace allmatch {

std::vector<int> ColumnSet::columns() const {
    std::vector<int> out;
    std::uint64_t m = mask_;
    while (m) {
        out.push_back(__builtin_ctzll(m) + 1);
        m &= m - 1;
    }
    return out;
}

int ColumnSet::nth(int k) const {
    std::uint64_t m = mask_;
    while (k-- > 0) m &= m - 1;
    return __builtin_ctzll(m) + 1;
}

long ZeroOneMatrix::ones() const {
    long total = 0;
    for (auto w : bits_) total += __builtin_popcountll(w);
    return total;
}

ZeroOneMatrix make_matrix(const std::vector<std::vector<int>>& rows) {
    ZeroOneMatrix m;
    m.rows_ = static_cast<int>(rows.size());
    m.cols_ = m.rows_ ? static_cast<int>(rows[0].size()) : 0;
    if (m.cols_ > ZeroOneMatrix::max_cols)
        throw CapabilityError("matrix has " + std::to_string(m.cols_) +
                              " columns, limit is 64");
    m.bits_.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols_)
            throw ValidationError("ragged row " + std::to_string(i + 1));
        std::uint64_t w = 0;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            int v = rows[i][j];
            if (v != 0 && v != 1)
                throw ValidationError("non-binary entry at row " + std::to_string(i + 1) +
                                      " column " + std::to_string(j + 1));
            w |= static_cast<std::uint64_t>(v) << j;
        }
        m.bits_.push_back(w);
    }
    return m;
}

ZeroOneMatrix make_matrix_from_bits(int rows, int cols,
                                    const std::vector<std::uint64_t>& bits) {
    if (cols > ZeroOneMatrix::max_cols)
        throw CapabilityError("matrix has " + std::to_string(cols) +
                              " columns, limit is 64");
    ZeroOneMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.bits_ = bits;
    return m;
}

ZeroOneMatrix remove_first_row(const ZeroOneMatrix& a) {
    if (a.rows() == 0) throw ValidationError("remove_first_row on empty matrix");
    std::vector<std::uint64_t> bits;
    bits.reserve(a.rows() - 1);
    for (int i = 2; i <= a.rows(); ++i) bits.push_back(a.row_bits(i));
    return make_matrix_from_bits(a.rows() - 1, a.cols(), bits);
}

ZeroOneMatrix remove_column(const ZeroOneMatrix& a, int j) {
    if (j < 1 || j > a.cols())
        throw ValidationError("column " + std::to_string(j) + " out of range 1.." +
                              std::to_string(a.cols()));
    const std::uint64_t low = (j > 1) ? ((std::uint64_t{1} << (j - 1)) - 1) : 0;
    std::vector<std::uint64_t> bits;
    bits.reserve(a.rows());
    for (int i = 1; i <= a.rows(); ++i) {
        std::uint64_t w = a.row_bits(i);
        const std::uint64_t high = (j < 64) ? ((w >> j) << (j - 1)) : 0;
        bits.push_back((w & low) | high);
    }
    return make_matrix_from_bits(a.rows(), a.cols() - 1, bits);
}

ZeroOneMatrix remove_first_row_and_column(const ZeroOneMatrix& a, int j) {
    if (a.rows() == 0) throw ValidationError("remove_first_row_and_column on empty matrix");
    return remove_column(remove_first_row(a), j);
}

ColumnSet first_row_support(const ZeroOneMatrix& a) {
    if (a.rows() == 0) throw ValidationError("first_row_support on empty matrix");
    return ColumnSet(a.row_bits(1));
}

ZeroOneMatrix extend_transform(const ZeroOneMatrix& a) {
    if (!a.is_square())
        throw ValidationError("extend_transform requires a square matrix, got " +
                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    const int n = a.rows();
    if (2 * n > ZeroOneMatrix::max_cols)
        throw CapabilityError("extended matrix would have " + std::to_string(2 * n) +
                              " columns, limit is 64");
    std::vector<std::uint64_t> bits;
    bits.reserve(2 * n);
    for (int i = 1; i <= n; ++i)
        bits.push_back(a.row_bits(i) | (std::uint64_t{1} << (n + i - 1)));
    const std::uint64_t all = (n == 32) ? ~std::uint64_t{0}
                                        : ((std::uint64_t{1} << (2 * n)) - 1);
    for (int i = 0; i < n; ++i) bits.push_back(all);
    return make_matrix_from_bits(2 * n, 2 * n, bits);
}

std::string write_matrix_text(const ZeroOneMatrix& a) {
    std::string out;
    out.reserve(static_cast<std::size_t>(a.rows()) * (a.cols() + 1));
    for (int i = 1; i <= a.rows(); ++i) {
        for (int j = 1; j <= a.cols(); ++j) out += a.at(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

ZeroOneMatrix read_matrix_text(const std::string& text) {
    std::vector<std::uint64_t> bits;
    int cols = -1;
    std::size_t pos = 0, line_no = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line(text.data() + pos,
                              (eol == std::string::npos ? text.size() : eol) - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = (eol == std::string::npos) ? text.size() : eol + 1;
        ++line_no;
        if (line.empty() && pos >= text.size()) break; // trailing newline
        if (cols < 0) {
            cols = static_cast<int>(line.size());
            if (cols > ZeroOneMatrix::max_cols)
                throw CapabilityError("matrix has " + std::to_string(cols) +
                                      " columns, limit is 64");
        } else if (static_cast<int>(line.size()) != cols) {
            throw ValidationError("ragged row " + std::to_string(line_no));
        }
        std::uint64_t w = 0;
        for (std::size_t j = 0; j < line.size(); ++j) {
            char c = line[j];
            if (c != '0' && c != '1')
                throw ValidationError("invalid character '" + std::string(1, c) +
                                      "' at row " + std::to_string(line_no) +
                                      " column " + std::to_string(j + 1));
            w |= static_cast<std::uint64_t>(c - '0') << j;
        }
        bits.push_back(w);
    }
    return make_matrix_from_bits(static_cast<int>(bits.size()),
                                 cols < 0 ? 0 : cols, bits);
}

nlohmann::json write_matrix_json(const ZeroOneMatrix& a) {
    nlohmann::json data = nlohmann::json::array();
    for (int i = 1; i <= a.rows(); ++i) {
        std::string row;
        for (int j = 1; j <= a.cols(); ++j) row += a.at(i, j) ? '1' : '0';
        data.push_back(row);
    }
    return {{"rows", a.rows()}, {"cols", a.cols()}, {"data", data}};
}

ZeroOneMatrix read_matrix_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw ValidationError("matrix JSON must have rows, cols, data");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        throw ValidationError("matrix JSON rows/cols must be integers");
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    if (rows < 0 || cols < 0) throw ValidationError("matrix JSON rows/cols must be >= 0");
    if (cols > ZeroOneMatrix::max_cols)
        throw CapabilityError("matrix has " + std::to_string(cols) +
                              " columns, limit is 64");
    const auto& data = j["data"];
    if (!data.is_array() || static_cast<int>(data.size()) != rows)
        throw ValidationError("matrix JSON data must be an array of " +
                              std::to_string(rows) + " strings");
    std::vector<std::uint64_t> bits;
    bits.reserve(rows);
    for (int i = 0; i < rows; ++i) {
        if (!data[i].is_string()) throw ValidationError("matrix JSON data entries must be strings");
        const std::string row = data[i].get<std::string>();
        if (static_cast<int>(row.size()) != cols)
            throw ValidationError("ragged row " + std::to_string(i + 1));
        std::uint64_t w = 0;
        for (int k = 0; k < cols; ++k) {
            char c = row[static_cast<std::size_t>(k)];
            if (c != '0' && c != '1')
                throw ValidationError("invalid character '" + std::string(1, c) +
                                      "' at row " + std::to_string(i + 1) +
                                      " column " + std::to_string(k + 1));
            w |= static_cast<std::uint64_t>(c - '0') << k;
        }
        bits.push_back(w);
    }
    return make_matrix_from_bits(rows, cols, bits);
}

ZeroOneMatrix parse_matrix(const std::string& content) {
    std::size_t i = content.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && content[i] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(content);
        } catch (const nlohmann::json::parse_error& e) {
            throw ValidationError(std::string("matrix JSON parse error: ") + e.what());
        }
        return read_matrix_json(j);
    }
    return read_matrix_text(content);
}

} // namespace allmatch
