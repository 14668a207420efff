#ifndef MUTID_SYMMETRIZE_HPP
#define MUTID_SYMMETRIZE_HPP

#include <mutid/expansion.hpp>
#include <mutid/matrix.hpp>
#include <mutid/monomial.hpp>
#include <mutid/polynomial.hpp>
#include <mutid/symmetric_group.hpp>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace mutid
{

// Tableau of shape lambda filled row by row with 1..n.  Rows of length >= 2
// are symmetrised; the labels of all singleton rows (the tail) are jointly
// antisymmetrised.
struct SymmetrizationScheme
{
    Partition shape;
    int n = 0;
    std::vector<std::vector<int>> rows; // rows of length >= 2
    std::vector<int> tail;              // labels of singleton rows
    std::vector<int> block_of;          // label -> row index, tail = rows.size()

    std::size_t order() const;
    // Every group element with its character value (sign on the tail).
    std::vector<std::pair<Permutation, int>> elements() const;
};

SymmetrizationScheme symmetrization_scheme(const Partition &lambda);

// Normal form of label sequences under the scheme's group: labels of each
// block appear in ascending order.  Tables are indexed by lexicographic rank
// of the label sequence.
struct RankReduction
{
    SymmetrizationScheme scheme;
    std::vector<std::uint32_t> nf_ranks;    // ascending
    std::vector<std::uint32_t> nf_position; // rank -> position of its normal form in nf_ranks
    std::vector<std::int8_t> sign;          // seq = h . nf(seq), value psi(h)

    std::size_t size() const noexcept { return nf_ranks.size(); }
};

RankReduction rank_reduction(const Partition &lambda);

// Normal form of a label sequence in place; returns psi(h).
int normal_form_labels(std::span<int> labels, const SymmetrizationScheme &scheme);

// sum over g of psi(g) act(g, m).
IntPolynomial symmetrize_monomial(const LabelledMonomial &m, const SymmetrizationScheme &scheme);

// Normal-form monomials, ordered by basis index.
struct SymmetrizedBasis
{
    int n = 0;
    RankReduction reduction;

    std::size_t size() const noexcept { return catalan(n) * reduction.size(); }
    // Basis index of the j-th normal-form monomial.
    std::size_t monomial_index(std::size_t j) const;
    LabelledMonomial monomial(std::size_t j) const;
    // Full monomial index k -> (position of its normal form, psi(h)).
    std::pair<std::size_t, int> project(std::size_t k) const;
};

SymmetrizedBasis symmetrized_basis(int n, const Partition &lambda);

// Column j is the expansion of the symmetrisation of basis monomial j, in the
// full pq-word basis: (2^{n-1} n!) x basis size.
SparseMatrix symmetrized_expansion_matrix(const SymmetrizedBasis &basis);

// The same space with rows reduced to normal-form pq-words
// (2^{n-1} * reduction size rows).  Has the same kernel.
SparseMatrix reduced_symmetrized_expansion_matrix(const SymmetrizedBasis &basis);

// Coordinates of sum_j c_j * symmetrize(basis monomial j) in the full
// monomial basis.
template <typename T>
NonassocPolynomial<T> lift_symmetrized(const SymmetrizedBasis &basis, std::span<const T> c)
{
    const auto elements = basis.reduction.scheme.elements();
    NonassocPolynomial<T> out(basis.n);
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0)
            continue;
        const LabelledMonomial m = basis.monomial(j);
        for (const auto &[g, s] : elements)
            out.add(mutid::monomial_index(act(g, m)), s > 0 ? c[j] : T(-c[j]));
    }
    return out;
}

} // namespace mutid

#endif
