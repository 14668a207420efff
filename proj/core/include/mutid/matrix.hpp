#ifndef MUTID_MATRIX_HPP
#define MUTID_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mutid
{

// Dense row-major matrix.
template <typename T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T &fill = T(0))
        : m_rows(rows), m_cols(cols), m_data(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return m_rows; }
    std::size_t cols() const noexcept { return m_cols; }
    bool empty() const noexcept { return m_rows == 0; }

    T &operator()(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
    const T &operator()(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }

    std::span<T> row(std::size_t i) { return {m_data.data() + i * m_cols, m_cols}; }
    std::span<const T> row(std::size_t i) const { return {m_data.data() + i * m_cols, m_cols}; }

    void append_row(std::span<const T> r)
    {
        if (m_rows == 0 && m_cols == 0)
            m_cols = r.size();
        if (r.size() != m_cols)
            throw std::invalid_argument("Matrix::append_row: width mismatch");
        m_data.insert(m_data.end(), r.begin(), r.end());
        ++m_rows;
    }

    // Keeps the first `rows` rows.
    void truncate_rows(std::size_t rows)
    {
        if (rows < m_rows) {
            m_rows = rows;
            m_data.resize(rows * m_cols);
        }
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < m_cols; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transpose() const
    {
        Matrix t(m_cols, m_rows);
        for (std::size_t i = 0; i < m_rows; ++i)
            for (std::size_t j = 0; j < m_cols; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    // Rows [first, first + count).
    Matrix row_block(std::size_t first, std::size_t count) const
    {
        Matrix m(count, m_cols);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < m_cols; ++j)
                m(i, j) = (*this)(first + i, j);
        return m;
    }

    friend bool operator==(const Matrix &a, const Matrix &b)
    {
        return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_data == b.m_data;
    }

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<T> m_data;
};

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;

template <typename T>
Matrix<T> operator*(const Matrix<T> &a, const Matrix<T> &b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

// Sparse integer matrix stored by columns; entries within a column are sorted
// by row and nonzero.
class SparseMatrix
{
public:
    struct Entry
    {
        std::uint32_t row;
        std::int64_t value;
        friend bool operator==(const Entry &, const Entry &) = default;
    };

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_columns(cols) {}

    std::size_t rows() const noexcept { return m_rows; }
    std::size_t cols() const noexcept { return m_columns.size(); }
    std::size_t nonzeros() const;

    const std::vector<Entry> &column(std::size_t j) const { return m_columns[j]; }
    // Replaces column j; entries are sorted, merged and zeros dropped.
    void set_column(std::size_t j, std::vector<Entry> entries);

    std::int64_t at(std::size_t i, std::size_t j) const;

    template <typename T>
    Matrix<T> to_dense() const
    {
        Matrix<T> m(m_rows, cols());
        for (std::size_t j = 0; j < cols(); ++j)
            for (const auto &e : m_columns[j])
                m(e.row, j) = T(e.value);
        return m;
    }

    template <typename T>
    Matrix<T> to_dense_transpose() const
    {
        Matrix<T> m(cols(), m_rows);
        for (std::size_t j = 0; j < cols(); ++j)
            for (const auto &e : m_columns[j])
                m(j, e.row) = T(e.value);
        return m;
    }

    friend bool operator==(const SparseMatrix &a, const SparseMatrix &b)
    {
        return a.m_rows == b.m_rows && a.m_columns == b.m_columns;
    }

private:
    std::size_t m_rows = 0;
    std::vector<std::vector<Entry>> m_columns;
};

// Triplet text format: optional '#' comment lines (the first may carry a JSON
// metadata object), a header line "degree rows cols", then one "row col value"
// line per nonzero, 0-based, ordered by column then row.
void write_triplets(std::ostream &os, const SparseMatrix &m, int degree,
                    const std::string &metadata_json = {});

template <typename T>
void write_triplets(std::ostream &os, const Matrix<T> &m, int degree,
                    const std::string &metadata_json = {});

struct TripletFile
{
    int degree = 0;
    std::string metadata_json;
    SparseMatrix matrix;
};

// Throws ParseError with line and column on malformed input.
TripletFile read_triplets(std::istream &is);

} // namespace mutid

#endif
