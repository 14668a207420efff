#include "support.hpp"

#include <mutid/monomial.hpp>
#include <mutid/permutation.hpp>
#include <mutid/polynomial.hpp>
#include <mutid/tree.hpp>

#include <fmt/core.h>

namespace mutid::test
{

const int e3_figure[24][12] = {
    {1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},     {0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0},     {0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0},     {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0},   {0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1},   {0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1},   {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0},
    {0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0},   {0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0},
    {-1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},   {0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0},
    {-1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},   {0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1},     {0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0},     {0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0},     {1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
};

IntMatrix random_int_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, int bound)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = d(rng);
    return m;
}

RatMatrix random_rat_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, int bound)
{
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, 4);
    std::bernoulli_distribution zero(0.3);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (zero(rng))
                continue;
            m(i, j) = mpq_class(num(rng), den(rng));
            m(i, j).canonicalize();
        }
    // A dependent row now and then.
    if (rows >= 3 && std::bernoulli_distribution(0.5)(rng))
        for (std::size_t j = 0; j < cols; ++j)
            m(rows - 1, j) = m(0, j) - 2 * m(1, j);
    return m;
}

Matrix<std::uint32_t> random_mod_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols,
                                        const PrimeField &field, double density)
{
    std::uniform_int_distribution<std::uint32_t> d(0, field.modulus() - 1);
    std::bernoulli_distribution keep(density);
    Matrix<std::uint32_t> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (keep(rng))
                m(i, j) = d(rng);
    return m;
}

IntMatrix random_lattice_basis(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, int bound)
{
    for (;;) {
        IntMatrix b = random_int_matrix(rng, rows, cols, bound);
        if (rank_mod_p(b, 1000003) != rows)
            continue;
        // Skew by random elementary row operations.
        std::uniform_int_distribution<std::size_t> pick(0, rows - 1);
        std::uniform_int_distribution<int> mult(-3, 3);
        for (std::size_t step = 0; rows > 1 && step < 3 * rows; ++step) {
            const std::size_t i = pick(rng), k = pick(rng);
            if (i == k)
                continue;
            const int c = mult(rng);
            for (std::size_t j = 0; j < cols; ++j)
                b(i, j) += c * b(k, j);
        }
        return b;
    }
}

IntMatrix product(const IntMatrix &a, const IntMatrix &b)
{
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

bool is_hnf(const IntMatrix &h)
{
    std::size_t last_pivot = 0;
    bool seen_zero = false, first = true;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t p = 0;
        while (p < h.cols() && h(i, p) == 0)
            ++p;
        if (p == h.cols()) {
            seen_zero = true;
            continue;
        }
        if (seen_zero || (!first && p <= last_pivot) || h(i, p) <= 0)
            return false;
        for (std::size_t k = 0; k < i; ++k)
            if (h(k, p) < 0 || h(k, p) >= h(i, p))
                return false;
        last_pivot = p;
        first = false;
    }
    return true;
}

IntMatrix naive_hnf(IntMatrix a)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        // Euclid on column c among rows r.. until one nonzero remains.
        for (;;) {
            std::size_t best = a.rows();
            for (std::size_t i = r; i < a.rows(); ++i)
                if (a(i, c) != 0 && (best == a.rows() || abs(a(i, c)) < abs(a(best, c))))
                    best = i;
            if (best == a.rows())
                break;
            a.swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < a.rows(); ++i) {
                if (a(i, c) == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
                for (std::size_t j = 0; j < a.cols(); ++j)
                    a(i, j) -= q * a(r, j);
                if (a(i, c) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (a(r, c) == 0)
            continue;
        if (a(r, c) < 0)
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(r, j) = -a(r, j);
        for (std::size_t k = 0; k < r; ++k) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a(k, c).get_mpz_t(), a(r, c).get_mpz_t());
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(k, j) -= q * a(r, j);
        }
        ++r;
    }
    return a;
}

mpz_class brute_force_shortest(const IntMatrix &b, int range)
{
    mpz_class best = 0;
    for (int x = -range; x <= range; ++x)
        for (int y = -range; y <= range; ++y) {
            if (x == 0 && y == 0)
                continue;
            mpz_class len = 0;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const mpz_class v = x * b(0, j) + y * b(1, j);
                len += v * v;
            }
            if (best == 0 || len < best)
                best = len;
        }
    return best;
}

namespace
{

std::vector<LabelledMonomial> monomials(int n)
{
    std::vector<LabelledMonomial> out;
    out.reserve(monomial_basis_size(n));
    for (std::size_t k = 0; k < monomial_basis_size(n); ++k)
        out.push_back(monomial_from_index(n, k));
    return out;
}

// Gram-Schmidt coefficients mu and squared norms of b*, exactly.
void gram_schmidt(const IntMatrix &b, RatMatrix &mu, std::vector<mpq_class> &norms)
{
    const std::size_t n = b.rows(), m = b.cols();
    RatMatrix star(n, m);
    mu = RatMatrix(n, n);
    norms.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            star(i, j) = b(i, j);
        for (std::size_t k = 0; k < i; ++k) {
            mpq_class dot = 0;
            for (std::size_t j = 0; j < m; ++j)
                dot += mpq_class(b(i, j)) * star(k, j);
            mu(i, k) = dot / norms[k];
            for (std::size_t j = 0; j < m; ++j)
                star(i, j) -= mu(i, k) * star(k, j);
        }
        for (std::size_t j = 0; j < m; ++j)
            norms[i] += star(i, j) * star(i, j);
    }
}

} // namespace

std::string check_operad_axioms(int max_degree)
{
    // Unit laws.
    const LabelledMonomial unit = parse_monomial("a");
    for (int n = 1; n <= max_degree; ++n)
        for (const auto &f : monomials(n)) {
            if (substitute(unit, 1, f) != f)
                return "left unit fails for " + to_string(f);
            for (int i = 1; i <= n; ++i)
                if (substitute(f, i, unit) != f)
                    return "right unit fails for " + to_string(f);
        }
    // Sequential and parallel axioms for f of degree m, g of degree n, h of
    // degree p with m + n + p - 2 <= max_degree; all of degree >= 2.
    for (int m = 2; m <= max_degree; ++m)
        for (int n = 2; m + n - 1 <= max_degree; ++n)
            for (int p = 2; m + n + p - 2 <= max_degree; ++p) {
                const auto fs = monomials(m), gs = monomials(n), hs = monomials(p);
                for (const auto &f : fs)
                    for (const auto &g : gs)
                        for (const auto &h : hs)
                            for (int j = 1; j <= m; ++j) {
                                const LabelledMonomial fg = substitute(f, j, g);
                                for (int i = 1; i <= m + n - 1; ++i) {
                                    const LabelledMonomial lhs = substitute(fg, i, h);
                                    LabelledMonomial rhs;
                                    if (i < j)
                                        rhs = substitute(substitute(f, i, h), j + p - 1, g);
                                    else if (i <= j + n - 1)
                                        rhs = substitute(f, j, substitute(g, i - j + 1, h));
                                    else
                                        rhs = substitute(substitute(f, i - n + 1, h), j, g);
                                    if (lhs != rhs)
                                        return fmt::format("axiom fails: f={} j={} g={} i={} h={}", to_string(f), j,
                                                           to_string(g), i, to_string(h));
                                }
                            }
            }
    return {};
}

std::string check_expansion_equivariance(int max_degree)
{
    for (int n = 1; n <= max_degree; ++n) {
        const auto perms = all_permutations(n);
        for (const auto &m : monomials(n)) {
            const auto x = expand_monomial<std::int64_t>(m);
            for (const auto &g : perms)
                if (expand_monomial<std::int64_t>(act(g, m)) != act(g, x))
                    return "X(g m) != g X(m) for m = " + to_string(m);
        }
    }
    // X is a morphism of operads on small degrees.
    for (int m = 2; m <= std::min(max_degree, 3); ++m)
        for (int n = 1; m + n - 1 <= max_degree; ++n)
            for (const auto &f : monomials(m))
                for (const auto &g : monomials(n))
                    for (int i = 1; i <= m; ++i) {
                        const auto lhs = expand_monomial<std::int64_t>(substitute(f, i, g));
                        const auto rhs = substitute_pq(expand_monomial<std::int64_t>(f), i,
                                                       expand_monomial<std::int64_t>(g));
                        if (lhs != rhs)
                            return "X(f o_i g) != X(f) o_i X(g) for f = " + to_string(f);
                    }
    return {};
}

std::string check_sign_law(int max_degree)
{
    for (int n = 1; n <= max_degree; ++n)
        for (const auto &m : monomials(n)) {
            const auto terms = expand_indices(m);
            if (terms.size() != (std::size_t{1} << (n - 1)))
                return "wrong term count for " + to_string(m);
            for (const auto &[i, s] : terms) {
                const int q = pq_word_from_index(n, i).q_count();
                if (s != (q % 2 == 0 ? 1 : -1))
                    return "sign law fails for " + to_string(m);
            }
        }
    return {};
}

std::string check_rcf_properties(int instances)
{
    std::mt19937_64 rng(seed);
    const PrimeField field(1009);
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    for (int t = 0; t < instances; ++t) {
        const std::size_t rows = dim(rng), cols = dim(rng);
        const auto a = random_mod_matrix(rng, rows, cols, field, t % 2 ? 0.4 : 1.0);
        const ModRcf r = rcf(a, field);
        if (rcf(r.basis, field).basis != r.basis)
            return fmt::format("mod-p RCF not idempotent (instance {})", t);
        const auto n = nullspace_rcf(a, field);
        if (r.rank() + n.rows() != cols)
            return fmt::format("mod-p rank + nullity != cols (instance {})", t);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < n.rows(); ++k) {
                std::uint32_t s = 0;
                for (std::size_t j = 0; j < cols; ++j)
                    s = field.add(s, field.mul(a(i, j), n(k, j)));
                if (s != 0)
                    return fmt::format("mod-p nullspace vector not in kernel (instance {})", t);
            }

        const auto q = random_rat_matrix(rng, rows, cols, 6);
        const RatRcf rq = rcf(q);
        if (rcf(rq.basis).basis != rq.basis)
            return fmt::format("rational RCF not idempotent (instance {})", t);
        const auto nq = nullspace_rcf(q);
        if (rq.rank() + nq.rows() != cols)
            return fmt::format("rational rank + nullity != cols (instance {})", t);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < nq.rows(); ++k) {
                mpq_class s = 0;
                for (std::size_t j = 0; j < cols; ++j)
                    s += q(i, j) * nq(k, j);
                if (s != 0)
                    return fmt::format("rational nullspace vector not in kernel (instance {})", t);
            }
    }
    return {};
}

std::string check_hnf_properties(int instances)
{
    std::mt19937_64 rng(seed + 1);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    for (int t = 0; t < instances; ++t) {
        const std::size_t rows = dim(rng), cols = dim(rng);
        const IntMatrix a = random_int_matrix(rng, rows, cols, t % 3 == 0 ? 40 : 5);
        const HnfResult r = hnf_with_transform(a);
        if (product(r.U, a) != r.H)
            return fmt::format("U A != H (instance {})", t);
        if (abs(determinant(r.U)) != 1)
            return fmt::format("|det U| != 1 (instance {})", t);
        if (!is_hnf(r.H))
            return fmt::format("H not in Hermite normal form (instance {})", t);
        if (r.H != naive_hnf(a))
            return fmt::format("H differs from the naive oracle (instance {})", t);
        if (hnf(a) != r.H)
            return fmt::format("hnf and hnf_with_transform disagree (instance {})", t);
    }
    return {};
}

std::string check_lll_properties(int instances)
{
    std::mt19937_64 rng(seed + 2);
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    const mpq_class deltas[] = {mpq_class(3, 4), mpq_class(99, 100)};
    for (int t = 0; t < instances; ++t) {
        const std::size_t rows = dim(rng);
        const std::size_t cols = rows + dim(rng) % 3;
        const IntMatrix b = random_lattice_basis(rng, rows, cols, 9);
        const mpq_class delta = deltas[t % 2];
        const IntMatrix l = lll_reduce(b, LllOptions{delta, {}});
        if (hnf(l) != hnf(b))
            return fmt::format("LLL changed the lattice (instance {})", t);
        if (lattice_size(l) > lattice_size(b) + 1e-9)
            return fmt::format("LLL increased the lattice size (instance {})", t);
        RatMatrix mu;
        std::vector<mpq_class> norms;
        gram_schmidt(l, mu, norms);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t k = 0; k < i; ++k)
                if (abs(mu(i, k)) > mpq_class(1, 2))
                    return fmt::format("LLL output not size-reduced (instance {})", t);
            if (i > 0 && norms[i] < (delta - mu(i, i - 1) * mu(i, i - 1)) * norms[i - 1])
                return fmt::format("Lovasz condition fails (instance {})", t);
        }
    }
    // In dimension 2 with delta = 1 the first vector is a shortest vector.
    for (int t = 0; t < instances; ++t) {
        const IntMatrix b = random_lattice_basis(rng, 2, 2 + t % 2, 30);
        const IntMatrix l = lll_reduce(b, LllOptions{mpq_class(1), {}});
        const auto lengths = squared_lengths(l);
        if (lengths[0] != brute_force_shortest(l, 12))
            return fmt::format("2D LLL first vector is not shortest (instance {})", t);
    }
    return {};
}

} // namespace mutid::test
