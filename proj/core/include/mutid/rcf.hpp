#ifndef MUTID_RCF_HPP
#define MUTID_RCF_HPP

#include <mutid/field.hpp>
#include <mutid/matrix.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace mutid
{

// Called with (done, total) during long eliminations; returning false
// cancels the computation with mutid::Cancelled.
using ProgressHook = std::function<bool(std::size_t, std::size_t)>;

// Row canonical form: nonzero rows only, leading ones at strictly increasing
// pivot columns, pivot columns zero elsewhere.
template <typename T>
struct RcfResult
{
    Matrix<T> basis;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }
};

using ModRcf = RcfResult<std::uint32_t>;
using RatRcf = RcfResult<mpq_class>;

// Incrementally maintained reduced row echelon basis over GF(p).  Rows are
// kept in insertion order internally; matrix() returns them sorted by pivot.
class ModEchelon
{
public:
    ModEchelon(std::size_t cols, PrimeField field);
    explicit ModEchelon(const ModRcf &rcf, PrimeField field);

    std::size_t cols() const noexcept { return m_cols; }
    std::size_t rank() const noexcept { return m_pivots.size(); }
    const PrimeField &field() const noexcept { return m_field; }

    // Reduces v (entries in [0, p)) against the basis in place; returns true
    // iff v ends up zero.
    bool reduce(std::span<std::uint32_t> v) const;
    bool contains(std::span<const std::uint32_t> v) const;
    // Adds v to the span; returns true iff the rank increased.
    bool insert(std::span<const std::uint32_t> v);
    // Inserts every row of m (batched); stops early once `stop_at_rank` is
    // reached.  Returns the number of rows that increased the rank.
    std::size_t insert_rows(const Matrix<std::uint32_t> &m,
                            std::size_t stop_at_rank = std::numeric_limits<std::size_t>::max(),
                            const ProgressHook &progress = {});

    // Stored rows in insertion order; row k has a leading 1 at pivot_of(k)
    // and zeros at every other pivot column.
    std::span<const std::uint32_t> row(std::size_t k) const
    {
        return {m_rows.data() + k * m_cols, m_cols};
    }
    std::size_t pivot_of(std::size_t k) const { return m_pivots[k]; }

    // Pivot columns in ascending order.
    std::vector<std::size_t> pivots() const;
    ModRcf rcf() const;

private:
    void reduce_against(std::span<std::uint32_t> v, std::size_t first_row, std::size_t last_row) const;
    void add_reduced(std::span<std::uint32_t> v);

    std::size_t m_cols;
    PrimeField m_field;
    std::vector<std::uint32_t> m_rows; // insertion order, m_cols per row
    std::vector<std::size_t> m_pivots; // pivot of each stored row
};

ModRcf rcf(const Matrix<std::uint32_t> &m, const PrimeField &field,
           const ProgressHook &progress = {});
// Fraction-free elimination on content-normalised integer rows, normalised
// to leading ones at the end.
RatRcf rcf(const RatMatrix &m);

// Rows form the RCF basis of {v : M v = 0}.
Matrix<std::uint32_t> nullspace_rcf(const Matrix<std::uint32_t> &m, const PrimeField &field,
                                    const ProgressHook &progress = {});
RatMatrix nullspace_rcf(const RatMatrix &m);
// Nullspace basis read off an existing RCF of M (RCF form).
Matrix<std::uint32_t> nullspace_from_rcf(const ModRcf &r, const PrimeField &field);
RatMatrix nullspace_from_rcf(const RatRcf &r);

Matrix<std::uint32_t> reduce_mod(const SparseMatrix &m, const PrimeField &field, bool transpose = false);
Matrix<std::uint32_t> reduce_mod(const IntMatrix &m, const PrimeField &field);
Matrix<std::uint32_t> reduce_mod(const Matrix<std::int64_t> &m, const PrimeField &field);

// Rank over GF(p); rows are streamed through a ModEchelon.
std::size_t rank_mod_p(const SparseMatrix &m, std::uint32_t p);
std::size_t rank_mod_p(const Matrix<std::int64_t> &m, std::uint32_t p);
std::size_t rank_mod_p(const IntMatrix &m, std::uint32_t p);

} // namespace mutid

#endif
