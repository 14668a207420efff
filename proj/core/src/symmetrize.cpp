#include <mutid/parallel.hpp>
#include <mutid/symmetrize.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mutid
{

SymmetrizationScheme symmetrization_scheme(const Partition &lambda)
{
    if (lambda.empty() || !std::is_sorted(lambda.rbegin(), lambda.rend()) ||
        std::any_of(lambda.begin(), lambda.end(), [](int x) { return x <= 0; }))
        throw std::invalid_argument("symmetrization_scheme: invalid partition " + to_string(lambda));
    SymmetrizationScheme s;
    s.shape = lambda;
    s.n = partition_size(lambda);
    s.block_of.assign(static_cast<std::size_t>(s.n) + 1, 0);
    int label = 1;
    for (int len : lambda) {
        if (len >= 2) {
            std::vector<int> row;
            for (int k = 0; k < len; ++k)
                row.push_back(label++);
            s.rows.push_back(std::move(row));
        } else {
            s.tail.push_back(label++);
        }
    }
    for (std::size_t r = 0; r < s.rows.size(); ++r)
        for (int l : s.rows[r])
            s.block_of[static_cast<std::size_t>(l)] = static_cast<int>(r);
    for (int l : s.tail)
        s.block_of[static_cast<std::size_t>(l)] = static_cast<int>(s.rows.size());
    return s;
}

std::size_t SymmetrizationScheme::order() const
{
    std::size_t o = factorial(static_cast<int>(tail.size()));
    for (const auto &r : rows)
        o *= factorial(static_cast<int>(r.size()));
    return o;
}

std::vector<std::pair<Permutation, int>> SymmetrizationScheme::elements() const
{
    std::vector<std::pair<std::vector<int>, int>> acc{{std::vector<int>(static_cast<std::size_t>(n)), 1}};
    std::iota(acc[0].first.begin(), acc[0].first.end(), 1);
    auto extend = [&](const std::vector<int> &block, bool signed_block) {
        std::vector<std::pair<std::vector<int>, int>> next;
        const auto perms = all_permutations(static_cast<int>(block.size()));
        for (const auto &[img, s] : acc)
            for (const auto &p : perms) {
                auto im = img;
                for (std::size_t k = 0; k < block.size(); ++k)
                    im[static_cast<std::size_t>(block[k] - 1)] = block[static_cast<std::size_t>(p(static_cast<int>(k) + 1) - 1)];
                next.emplace_back(std::move(im), signed_block ? s * p.sign() : s);
            }
        acc = std::move(next);
    };
    for (const auto &r : rows)
        extend(r, false);
    if (!tail.empty())
        extend(tail, true);
    std::vector<std::pair<Permutation, int>> out;
    out.reserve(acc.size());
    for (auto &[im, s] : acc)
        out.emplace_back(Permutation(std::move(im)), s);
    return out;
}

int normal_form_labels(std::span<int> labels, const SymmetrizationScheme &scheme)
{
    const std::size_t blocks = scheme.rows.size() + 1;
    int sign = 1;
    std::vector<std::size_t> positions;
    std::vector<int> values;
    for (std::size_t b = 0; b < blocks; ++b) {
        positions.clear();
        values.clear();
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (static_cast<std::size_t>(scheme.block_of[static_cast<std::size_t>(labels[i])]) == b) {
                positions.push_back(i);
                values.push_back(labels[i]);
            }
        if (b == scheme.rows.size()) {
            for (std::size_t i = 0; i < values.size(); ++i)
                for (std::size_t j = i + 1; j < values.size(); ++j)
                    if (values[i] > values[j])
                        sign = -sign;
        }
        std::sort(values.begin(), values.end());
        for (std::size_t i = 0; i < positions.size(); ++i)
            labels[positions[i]] = values[i];
    }
    return sign;
}

RankReduction rank_reduction(const Partition &lambda)
{
    RankReduction r;
    r.scheme = symmetrization_scheme(lambda);
    const int n = r.scheme.n;
    const std::size_t f = factorial(n);
    std::vector<std::uint32_t> nf_of(f);
    r.sign.resize(f);
    std::vector<int> seq(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < f; ++k) {
        lex_unrank(k, seq);
        r.sign[k] = static_cast<std::int8_t>(normal_form_labels(seq, r.scheme));
        nf_of[k] = static_cast<std::uint32_t>(lex_rank(seq));
        if (nf_of[k] == k)
            r.nf_ranks.push_back(static_cast<std::uint32_t>(k));
    }
    std::vector<std::uint32_t> pos_of(f, 0);
    for (std::size_t i = 0; i < r.nf_ranks.size(); ++i)
        pos_of[r.nf_ranks[i]] = static_cast<std::uint32_t>(i);
    r.nf_position.resize(f);
    for (std::size_t k = 0; k < f; ++k)
        r.nf_position[k] = pos_of[nf_of[k]];
    return r;
}

IntPolynomial symmetrize_monomial(const LabelledMonomial &m, const SymmetrizationScheme &scheme)
{
    if (m.degree() != scheme.n)
        throw std::invalid_argument("symmetrize_monomial: tableau of size " + std::to_string(scheme.n) +
                                    " for a monomial of degree " + std::to_string(m.degree()));
    IntPolynomial out(m.degree());
    for (const auto &[g, s] : scheme.elements())
        out.add(monomial_index(act(g, m)), s);
    return out;
}

std::size_t SymmetrizedBasis::monomial_index(std::size_t j) const
{
    const std::size_t r = reduction.size();
    return (j / r) * factorial(n) + reduction.nf_ranks[j % r];
}

LabelledMonomial SymmetrizedBasis::monomial(std::size_t j) const
{
    return monomial_from_index(n, monomial_index(j));
}

std::pair<std::size_t, int> SymmetrizedBasis::project(std::size_t k) const
{
    const std::size_t f = factorial(n);
    const std::size_t t = k / f, r = k % f;
    return {t * reduction.size() + reduction.nf_position[r], reduction.sign[r]};
}

SymmetrizedBasis symmetrized_basis(int n, const Partition &lambda)
{
    if (partition_size(lambda) != n)
        throw std::invalid_argument("symmetrized_basis: " + to_string(lambda) + " does not partition " +
                                    std::to_string(n));
    return SymmetrizedBasis{n, rank_reduction(lambda)};
}

SparseMatrix symmetrized_expansion_matrix(const SymmetrizedBasis &basis)
{
    const auto elements = basis.reduction.scheme.elements();
    const std::size_t cols = basis.size();
    std::vector<std::vector<SparseMatrix::Entry>> columns(cols);
    parallel_for(cols, [&](std::size_t j) {
        const LabelledMonomial m = basis.monomial(j);
        for (const auto &[g, s] : elements)
            for (const auto &[i, e] : expand_indices(act(g, m)))
                columns[j].push_back({i, static_cast<std::int64_t>(s * e)});
    });
    SparseMatrix x(pq_basis_size(basis.n), cols);
    for (std::size_t j = 0; j < cols; ++j)
        x.set_column(j, std::move(columns[j]));
    return x;
}

SparseMatrix reduced_symmetrized_expansion_matrix(const SymmetrizedBasis &basis)
{
    const auto &red = basis.reduction;
    const std::size_t f = factorial(basis.n);
    const std::size_t cols = basis.size();
    std::vector<std::vector<SparseMatrix::Entry>> columns(cols);
    parallel_for(cols, [&](std::size_t j) {
        for (const auto &[i, e] : expand_indices(basis.monomial(j))) {
            const std::size_t ops = i / f, r = i % f;
            columns[j].push_back({static_cast<std::uint32_t>(ops * red.size() + red.nf_position[r]),
                                  static_cast<std::int64_t>(e * red.sign[r])});
        }
    });
    SparseMatrix x((std::size_t{1} << (basis.n - 1)) * red.size(), cols);
    for (std::size_t j = 0; j < cols; ++j)
        x.set_column(j, std::move(columns[j]));
    return x;
}

} // namespace mutid
