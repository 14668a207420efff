#include <mutid/error.hpp>
#include <mutid/rcf.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace mutid
{

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : m_p(p)
{
    if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not a prime below 2^31");
}

std::uint32_t PrimeField::reduce(const mpz_class &v) const
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m_p);
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t PrimeField::reduce(const mpq_class &v) const
{
    const std::uint32_t den = reduce(mpz_class(v.get_den()));
    if (den == 0)
        throw std::domain_error("PrimeField::reduce: denominator divisible by p");
    return mul(reduce(mpz_class(v.get_num())), inv(den));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const
{
    if (a % m_p == 0)
        throw std::domain_error("PrimeField::inv: zero has no inverse");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = m_p, new_r = a % m_p;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return reduce(t);
}

namespace
{

// Barrett-style reduction valid for x < 2^31 when p < 46341; written so the
// compiler can vectorise the surrounding loops.
struct SmallReducer
{
    std::uint32_t p;
    std::uint64_t m;

    explicit SmallReducer(std::uint32_t prime)
        : p(prime), m((std::uint64_t{1} << 32) / prime + 1)
    {
    }

    std::uint32_t operator()(std::uint32_t x) const
    {
        const auto q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * m) >> 32);
        auto r = static_cast<std::int32_t>(x) - static_cast<std::int32_t>(q * p);
        r += (r < 0) ? static_cast<std::int32_t>(p) : 0;
        return static_cast<std::uint32_t>(r);
    }
};

bool small_prime(std::uint32_t p) { return p < 46341; }

// Maximum number of products (p-1)^2 that fit on top of a value < p in uint32.
std::size_t accumulation_chunk(std::uint32_t p)
{
    const std::uint64_t sq = static_cast<std::uint64_t>(p - 1) * (p - 1);
    if (sq == 0)
        return std::numeric_limits<std::size_t>::max();
    const std::uint64_t room = 0xFFFFFFFFull - (p - 1);
    return static_cast<std::size_t>(room / sq);
}

// dst[j] = (dst[j] + c * src[j]) mod p for j in [from, n).
void axpy_mod(std::uint32_t *dst, const std::uint32_t *src, std::uint32_t c, std::size_t from,
              std::size_t n, const PrimeField &f)
{
    const std::uint32_t p = f.modulus();
    if (small_prime(p)) {
        const SmallReducer red(p);
        for (std::size_t j = from; j < n; ++j)
            dst[j] = red(dst[j] + c * src[j]);
    } else {
        for (std::size_t j = from; j < n; ++j)
            dst[j] = static_cast<std::uint32_t>((dst[j] + static_cast<std::uint64_t>(c) * src[j]) % p);
    }
}

void scale_mod(std::uint32_t *v, std::uint32_t c, std::size_t from, std::size_t n, const PrimeField &f)
{
    for (std::size_t j = from; j < n; ++j)
        v[j] = f.mul(v[j], c);
}

} // namespace

ModEchelon::ModEchelon(std::size_t cols, PrimeField field) : m_cols(cols), m_field(field) {}

ModEchelon::ModEchelon(const ModRcf &r, PrimeField field) : m_cols(r.basis.cols()), m_field(field)
{
    for (std::size_t k = 0; k < r.rank(); ++k) {
        auto row = r.basis.row(k);
        m_rows.insert(m_rows.end(), row.begin(), row.end());
        m_pivots.push_back(r.pivots[k]);
    }
    if (m_cols == 0 && !r.pivots.empty())
        throw std::invalid_argument("ModEchelon: inconsistent RCF");
}

void ModEchelon::reduce_against(std::span<std::uint32_t> v, std::size_t first_row,
                                std::size_t last_row) const
{
    const std::uint32_t p = m_field.modulus();
    std::vector<std::pair<std::size_t, std::uint32_t>> coeffs;
    for (std::size_t k = first_row; k < last_row; ++k) {
        const std::uint32_t c = v[m_pivots[k]];
        if (c)
            coeffs.emplace_back(k, p - c);
    }
    if (coeffs.empty())
        return;
    const std::size_t n = m_cols;
    if (small_prime(p)) {
        const std::size_t chunk = accumulation_chunk(p);
        std::uint32_t *acc = v.data();
        std::size_t count = 0;
        for (const auto &[k, c] : coeffs) {
            const std::uint32_t *r = m_rows.data() + k * n;
            for (std::size_t j = 0; j < n; ++j)
                acc[j] += c * r[j];
            if (++count == chunk) {
                for (std::size_t j = 0; j < n; ++j)
                    acc[j] %= p;
                count = 0;
            }
        }
        for (std::size_t j = 0; j < n; ++j)
            acc[j] %= p;
    } else {
        for (const auto &[k, c] : coeffs)
            axpy_mod(v.data(), m_rows.data() + k * n, c, 0, n, m_field);
    }
}

bool ModEchelon::reduce(std::span<std::uint32_t> v) const
{
    if (v.size() != m_cols)
        throw std::invalid_argument("ModEchelon::reduce: width mismatch");
    reduce_against(v, 0, m_pivots.size());
    return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

bool ModEchelon::contains(std::span<const std::uint32_t> v) const
{
    std::vector<std::uint32_t> w(v.begin(), v.end());
    return reduce(w);
}

void ModEchelon::add_reduced(std::span<std::uint32_t> v)
{
    std::size_t lead = 0;
    while (lead < m_cols && v[lead] == 0)
        ++lead;
    if (lead == m_cols)
        return;
    const std::size_t n = m_cols;
    scale_mod(v.data(), m_field.inv(v[lead]), lead, n, m_field);
    for (std::size_t k = 0; k < m_pivots.size(); ++k) {
        std::uint32_t *r = m_rows.data() + k * n;
        const std::uint32_t c = r[lead];
        if (c)
            axpy_mod(r, v.data(), m_field.neg(c), lead, n, m_field);
    }
    m_rows.insert(m_rows.end(), v.begin(), v.end());
    m_pivots.push_back(lead);
}

bool ModEchelon::insert(std::span<const std::uint32_t> v)
{
    if (v.size() != m_cols)
        throw std::invalid_argument("ModEchelon::insert: width mismatch");
    std::vector<std::uint32_t> w(v.begin(), v.end());
    if (reduce(w))
        return false;
    add_reduced(w);
    return true;
}

std::size_t ModEchelon::insert_rows(const Matrix<std::uint32_t> &m, std::size_t stop_at_rank,
                                    const ProgressHook &progress)
{
    if (m.rows() == 0)
        return 0;
    if (m.cols() != m_cols)
        throw std::invalid_argument("ModEchelon::insert_rows: width mismatch");
    const std::uint32_t p = m_field.modulus();
    const std::size_t n = m_cols;
    const std::size_t batch = 32;
    const std::size_t before = rank();
    std::vector<std::uint32_t> buf(batch * n);
    std::vector<std::uint32_t> coeff(batch);
    std::vector<std::size_t> counts(batch);
    const std::size_t chunk = small_prime(p) ? accumulation_chunk(p) : 0;

    for (std::size_t start = 0; start < m.rows() && rank() < stop_at_rank; start += batch) {
        if (progress && !progress(start, m.rows()))
            throw Cancelled("elimination cancelled");
        const std::size_t bsz = std::min(batch, m.rows() - start);
        for (std::size_t b = 0; b < bsz; ++b) {
            auto r = m.row(start + b);
            std::copy(r.begin(), r.end(), buf.begin() + static_cast<std::ptrdiff_t>(b * n));
        }
        const std::size_t r0 = rank();
        if (small_prime(p)) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t k = 0; k < r0; ++k) {
                const std::uint32_t *row = m_rows.data() + k * n;
                const std::size_t piv = m_pivots[k];
                // Coefficients come from the unreduced batch vectors: the basis
                // is fully reduced, so row k is zero at every other pivot.
                for (std::size_t b = 0; b < bsz; ++b) {
                    std::uint32_t *acc = buf.data() + b * n;
                    const std::uint32_t c = acc[piv] % p;
                    if (!c)
                        continue;
                    const std::uint32_t nc = p - c;
                    for (std::size_t j = 0; j < n; ++j)
                        acc[j] += nc * row[j];
                    // acc[piv] is now a multiple of p; it is reduced below.
                    if (++counts[b] == chunk) {
                        for (std::size_t j = 0; j < n; ++j)
                            acc[j] %= p;
                        counts[b] = 0;
                    }
                }
            }
            for (std::size_t b = 0; b < bsz; ++b) {
                std::uint32_t *acc = buf.data() + b * n;
                for (std::size_t j = 0; j < n; ++j)
                    acc[j] %= p;
            }
        } else {
            for (std::size_t b = 0; b < bsz; ++b)
                reduce_against(std::span<std::uint32_t>(buf.data() + b * n, n), 0, r0);
        }
        for (std::size_t b = 0; b < bsz && rank() < stop_at_rank; ++b) {
            std::span<std::uint32_t> v(buf.data() + b * n, n);
            reduce_against(v, r0, rank());
            add_reduced(v);
        }
    }
    return rank() - before;
}

std::vector<std::size_t> ModEchelon::pivots() const
{
    auto p = m_pivots;
    std::sort(p.begin(), p.end());
    return p;
}

ModRcf ModEchelon::rcf() const
{
    std::vector<std::size_t> order(m_pivots.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return m_pivots[a] < m_pivots[b]; });
    ModRcf out;
    out.basis = Matrix<std::uint32_t>(order.size(), m_cols);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::uint32_t *r = m_rows.data() + order[i] * m_cols;
        std::copy(r, r + m_cols, out.basis.row(i).begin());
        out.pivots.push_back(m_pivots[order[i]]);
    }
    return out;
}

ModRcf rcf(const Matrix<std::uint32_t> &m, const PrimeField &field, const ProgressHook &progress)
{
    ModEchelon e(m.cols(), field);
    e.insert_rows(m, std::numeric_limits<std::size_t>::max(), progress);
    return e.rcf();
}

namespace
{

void normalize_content(std::vector<mpz_class> &row)
{
    mpz_class g = 0;
    for (const auto &x : row) {
        if (x != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1)
                return;
        }
    }
    if (g > 1)
        for (auto &x : row)
            if (x != 0)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

} // namespace

RatRcf rcf(const RatMatrix &m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a;
    a.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j)
            if (m(i, j) != 0)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        std::vector<mpz_class> r(cols);
        bool nonzero = false;
        for (std::size_t j = 0; j < cols; ++j) {
            if (m(i, j) == 0)
                continue;
            r[j] = m(i, j).get_num() * (l / m(i, j).get_den());
            nonzero = true;
        }
        if (nonzero) {
            normalize_content(r);
            a.push_back(std::move(r));
        }
    }

    RatRcf out;
    std::size_t rank = 0;
    mpz_class g, fp, fi;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[rank], a[piv]);
        const auto &pr = a[rank];
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rank || a[i][c] == 0)
                continue;
            auto &ri = a[i];
            mpz_gcd(g.get_mpz_t(), pr[c].get_mpz_t(), ri[c].get_mpz_t());
            fp = ri[c] / g;
            fi = pr[c] / g;
            for (std::size_t j = 0; j < cols; ++j) {
                if (pr[j] == 0) {
                    if (ri[j] != 0)
                        ri[j] *= fi;
                    continue;
                }
                ri[j] = fi * ri[j] - fp * pr[j];
            }
            normalize_content(ri);
        }
        out.pivots.push_back(c);
        ++rank;
    }
    out.basis = RatMatrix(rank, cols);
    for (std::size_t i = 0; i < rank; ++i) {
        const mpz_class lead = a[i][out.pivots[i]];
        for (std::size_t j = 0; j < cols; ++j)
            if (a[i][j] != 0) {
                out.basis(i, j) = mpq_class(a[i][j], lead);
                out.basis(i, j).canonicalize();
            }
    }
    return out;
}

Matrix<std::uint32_t> nullspace_from_rcf(const ModRcf &r, const PrimeField &field)
{
    const std::size_t cols = r.basis.cols();
    std::vector<char> is_pivot(cols, 0);
    for (auto p : r.pivots)
        is_pivot[p] = 1;
    Matrix<std::uint32_t> null(cols - r.rank(), cols);
    std::size_t k = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        null(k, f) = 1;
        for (std::size_t i = 0; i < r.rank(); ++i)
            null(k, r.pivots[i]) = field.neg(r.basis(i, f));
        ++k;
    }
    return rcf(null, field).basis;
}

RatMatrix nullspace_from_rcf(const RatRcf &r)
{
    const std::size_t cols = r.basis.cols();
    std::vector<char> is_pivot(cols, 0);
    for (auto p : r.pivots)
        is_pivot[p] = 1;
    RatMatrix null(cols - r.rank(), cols);
    std::size_t k = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        null(k, f) = 1;
        for (std::size_t i = 0; i < r.rank(); ++i)
            null(k, r.pivots[i]) = -r.basis(i, f);
        ++k;
    }
    return rcf(null).basis;
}

Matrix<std::uint32_t> nullspace_rcf(const Matrix<std::uint32_t> &m, const PrimeField &field,
                                    const ProgressHook &progress)
{
    return nullspace_from_rcf(rcf(m, field, progress), field);
}

RatMatrix nullspace_rcf(const RatMatrix &m) { return nullspace_from_rcf(rcf(m)); }

Matrix<std::uint32_t> reduce_mod(const SparseMatrix &m, const PrimeField &field, bool transpose)
{
    Matrix<std::uint32_t> out(transpose ? m.cols() : m.rows(), transpose ? m.rows() : m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto &e : m.column(j)) {
            if (transpose)
                out(j, e.row) = field.reduce(e.value);
            else
                out(e.row, j) = field.reduce(e.value);
        }
    return out;
}

Matrix<std::uint32_t> reduce_mod(const IntMatrix &m, const PrimeField &field)
{
    Matrix<std::uint32_t> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = field.reduce(m(i, j));
    return out;
}

Matrix<std::uint32_t> reduce_mod(const Matrix<std::int64_t> &m, const PrimeField &field)
{
    Matrix<std::uint32_t> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = field.reduce(m(i, j));
    return out;
}

std::size_t rank_mod_p(const SparseMatrix &m, std::uint32_t p)
{
    const PrimeField field(p);
    // Stream whichever side is shorter as the vector length.
    const bool by_columns = m.rows() <= m.cols();
    return rcf(reduce_mod(m, field, by_columns), field).rank();
}

std::size_t rank_mod_p(const Matrix<std::int64_t> &m, std::uint32_t p)
{
    const PrimeField field(p);
    return rcf(reduce_mod(m, field), field).rank();
}

std::size_t rank_mod_p(const IntMatrix &m, std::uint32_t p)
{
    const PrimeField field(p);
    return rcf(reduce_mod(m, field), field).rank();
}

} // namespace mutid
