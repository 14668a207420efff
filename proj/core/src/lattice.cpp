#include <mutid/error.hpp>
#include <mutid/lattice.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace mutid
{

namespace
{

using Row = std::vector<mpz_class>;

// row_a -= q * row_b over columns [from, end).
void submul_row(Row &a, const Row &b, const mpz_class &q, std::size_t from)
{
    for (std::size_t j = from; j < a.size(); ++j)
        if (b[j] != 0)
            mpz_submul(a[j].get_mpz_t(), q.get_mpz_t(), b[j].get_mpz_t());
}

// In-place row HNF over all columns; returns the pivot columns.
std::vector<std::size_t> row_hnf(std::vector<Row> &rows, std::size_t cols, std::size_t pivot_cols,
                                 const ProgressHook &progress)
{
    std::vector<std::size_t> pivots;
    std::size_t piv = 0;
    mpz_class q;
    for (std::size_t c = 0; c < pivot_cols && piv < rows.size(); ++c) {
        if (progress && !progress(c, pivot_cols))
            throw Cancelled("HNF cancelled");
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = piv; r < rows.size(); ++r) {
                if (rows[r][c] == 0)
                    continue;
                if (best == rows.size() || mpz_cmpabs(rows[r][c].get_mpz_t(), rows[best][c].get_mpz_t()) < 0)
                    best = r;
            }
            if (best == rows.size())
                break;
            std::swap(rows[piv], rows[best]);
            bool done = true;
            for (std::size_t r = piv + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[piv][c].get_mpz_t());
                if (q != 0)
                    submul_row(rows[r], rows[piv], q, c);
                if (rows[r][c] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (piv >= rows.size() || rows[piv][c] == 0)
            continue;
        if (rows[piv][c] < 0)
            for (std::size_t j = c; j < cols; ++j)
                rows[piv][j] = -rows[piv][j];
        for (std::size_t r = 0; r < piv; ++r) {
            if (rows[r][c] == 0)
                continue;
            mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[piv][c].get_mpz_t());
            if (q != 0)
                submul_row(rows[r], rows[piv], q, c);
        }
        pivots.push_back(c);
        ++piv;
    }
    return pivots;
}

std::vector<Row> to_rows(const IntMatrix &a, std::size_t extra_identity)
{
    std::vector<Row> rows(a.rows(), Row(a.cols() + extra_identity));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            rows[i][j] = a(i, j);
        if (extra_identity)
            rows[i][a.cols() + i] = 1;
    }
    return rows;
}

} // namespace

IntMatrix hnf(const IntMatrix &a, const ProgressHook &progress)
{
    auto rows = to_rows(a, 0);
    row_hnf(rows, a.cols(), a.cols(), progress);
    IntMatrix h(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            h(i, j) = rows[i][j];
    return h;
}

HnfResult hnf_with_transform(const IntMatrix &a, const ProgressHook &progress)
{
    const std::size_t m = a.rows(), n = a.cols();
    auto rows = to_rows(a, m);
    auto pivots = row_hnf(rows, n + m, n + m, progress);
    HnfResult out;
    out.H = IntMatrix(m, n);
    out.U = IntMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            out.H(i, j) = rows[i][j];
        for (std::size_t j = 0; j < m; ++j)
            out.U(i, j) = rows[i][n + j];
    }
    out.rank = static_cast<std::size_t>(
        std::count_if(pivots.begin(), pivots.end(), [n](std::size_t c) { return c < n; }));
    return out;
}

IntMatrix integer_nullspace(const IntMatrix &a, const ProgressHook &progress)
{
    auto r = hnf_with_transform(a.transpose(), progress);
    return r.U.row_block(r.rank, r.U.rows() - r.rank);
}

IntMatrix integer_nullspace(const RatRcf &r, const ProgressHook &progress)
{
    const std::size_t n = r.basis.cols();
    IntMatrix a(r.rank(), n);
    for (std::size_t i = 0; i < r.rank(); ++i) {
        auto v = make_primitive(r.basis.row(i));
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = v[j];
    }
    if (r.rank() == 0)
        return IntMatrix::identity(n);
    return integer_nullspace(a, progress);
}

mpz_class determinant(const IntMatrix &a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    auto m = to_rows(a, 0);
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0)
                ++r;
            if (r == n)
                return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

IntMatrix lll_reduce(const IntMatrix &input, const LllOptions &options)
{
    const mpq_class &delta = options.delta;
    if (delta <= mpq_class(1, 4) || delta > 1)
        throw std::invalid_argument("lll_reduce: delta must satisfy 1/4 < delta <= 1");
    const mpz_class da = delta.get_num(), db = delta.get_den();
    const std::size_t k_count = input.rows();
    if (k_count == 0)
        return input;

    auto b = to_rows(input, 0);
    // d[i + 1] is the Gram determinant of the first i+1 vectors; d[0] = 1.
    std::vector<mpz_class> d(k_count + 1);
    std::vector<std::vector<mpz_class>> lam(k_count, std::vector<mpz_class>(k_count));
    auto dot = [](const Row &x, const Row &y) {
        mpz_class s = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] != 0 && y[j] != 0)
                mpz_addmul(s.get_mpz_t(), x[j].get_mpz_t(), y[j].get_mpz_t());
        return s;
    };

    d[0] = 1;
    d[1] = dot(b[0], b[0]);
    if (d[1] == 0)
        throw ConsistencyError("lll_reduce: zero basis vector");
    std::size_t k = 1, k_max = 0;
    mpz_class q, t, u, bb, lhs, rhs;

    auto red = [&](std::size_t kk, std::size_t l) {
        // |2 lam| > d_l
        t = 2 * lam[kk][l];
        if (mpz_cmpabs(t.get_mpz_t(), d[l + 1].get_mpz_t()) <= 0)
            return;
        // q = round(lam / d_l) = floor((2 lam + d_l) / (2 d_l))
        t += d[l + 1];
        u = 2 * d[l + 1];
        mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), u.get_mpz_t());
        submul_row(b[kk], b[l], q, 0);
        lam[kk][l] -= q * d[l + 1];
        for (std::size_t i = 0; i < l; ++i)
            if (lam[l][i] != 0)
                mpz_submul(lam[kk][i].get_mpz_t(), q.get_mpz_t(), lam[l][i].get_mpz_t());
    };

    auto swap_k = [&](std::size_t kk) {
        std::swap(b[kk], b[kk - 1]);
        for (std::size_t j = 0; j + 1 < kk; ++j)
            std::swap(lam[kk][j], lam[kk - 1][j]);
        const mpz_class l = lam[kk][kk - 1];
        bb = (d[kk - 1] * d[kk + 1] + l * l) / d[kk];
        for (std::size_t i = kk + 1; i <= k_max; ++i) {
            t = lam[i][kk];
            lam[i][kk] = (d[kk + 1] * lam[i][kk - 1] - l * t) / d[kk];
            lam[i][kk - 1] = (bb * t + l * lam[i][kk]) / d[kk + 1];
        }
        d[kk] = bb;
    };

    std::size_t steps = 0;
    while (k < k_count) {
        if (k > k_max) {
            k_max = k;
            for (std::size_t j = 0; j <= k; ++j) {
                u = dot(b[k], b[j]);
                for (std::size_t i = 0; i < j; ++i) {
                    u = d[i + 1] * u - lam[k][i] * lam[j][i];
                    mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d[i].get_mpz_t());
                }
                if (j < k)
                    lam[k][j] = u;
                else
                    d[k + 1] = u;
            }
            if (d[k + 1] == 0)
                throw ConsistencyError("lll_reduce: basis rows are linearly dependent");
        }
        if (options.progress && (++steps % 64) == 0 && !options.progress(k, k_count))
            throw Cancelled("LLL cancelled");
        red(k, k - 1);
        // Lovasz test: db * d_k * d_{k-2} < da * d_{k-1}^2 - db * lam^2
        lhs = db * d[k + 1] * d[k - 1];
        rhs = da * d[k] * d[k] - db * lam[k][k - 1] * lam[k][k - 1];
        if (lhs < rhs) {
            swap_k(k);
            if (k > 1)
                --k;
        } else {
            for (std::size_t l = k - 1; l-- > 0;)
                red(k, l);
            ++k;
        }
    }

    IntMatrix out(input.rows(), input.cols());
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j)
            out(i, j) = b[i][j];
    return out;
}

mpz_class squared_length(std::span<const mpz_class> v)
{
    mpz_class s = 0;
    for (const auto &x : v)
        mpz_addmul(s.get_mpz_t(), x.get_mpz_t(), x.get_mpz_t());
    return s;
}

std::vector<mpz_class> squared_lengths(const IntMatrix &b)
{
    std::vector<mpz_class> out;
    out.reserve(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i)
        out.push_back(squared_length(b.row(i)));
    return out;
}

double lattice_size(const IntMatrix &b)
{
    double total = 0;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        const mpz_class s = squared_length(b.row(i));
        if (s == 0)
            throw std::invalid_argument("lattice_size: zero row");
        long exp = 0;
        const double mant = mpz_get_d_2exp(&exp, s.get_mpz_t());
        total += std::log10(mant) + static_cast<double>(exp) * std::log10(2.0);
    }
    return total;
}

std::vector<mpz_class> make_primitive(std::span<const mpz_class> v)
{
    mpz_class g = 0;
    for (const auto &x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0)
        throw std::invalid_argument("make_primitive: zero vector");
    auto first = std::find_if(v.begin(), v.end(), [](const mpz_class &x) { return x != 0; });
    if (*first < 0)
        g = -g;
    std::vector<mpz_class> out(v.begin(), v.end());
    for (auto &x : out)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

std::vector<mpz_class> make_primitive(std::span<const mpq_class> v)
{
    mpz_class l = 1;
    for (const auto &x : v)
        if (x != 0)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> scaled;
    scaled.reserve(v.size());
    for (const auto &x : v)
        scaled.push_back(x.get_num() * (l / x.get_den()));
    return make_primitive(std::span<const mpz_class>(scaled));
}

} // namespace mutid
