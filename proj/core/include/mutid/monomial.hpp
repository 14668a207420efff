#ifndef MUTID_MONOMIAL_HPP
#define MUTID_MONOMIAL_HPP

#include <mutid/permutation.hpp>
#include <mutid/tree.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mutid
{

// A multilinear nonassociative monomial: a tree shape with leaves labelled by
// a permutation of 1..n read left to right.  Letters a, b, c, ... are labels
// 1, 2, 3, ...
class LabelledMonomial
{
public:
    LabelledMonomial() = default;
    LabelledMonomial(Tree shape, Permutation labels);

    int degree() const noexcept { return m_shape.degree(); }
    const Tree &shape() const noexcept { return m_shape; }
    const Permutation &labels() const noexcept { return m_labels; }
    // Label of the leaf at 1-based position i.
    int label_at(int i) const { return m_labels(i); }
    // 1-based position of the leaf carrying `label`.
    int position_of(int label) const;

    friend bool operator==(const LabelledMonomial &, const LabelledMonomial &) = default;

private:
    Tree m_shape;
    Permutation m_labels;
};

// "(ab)c" -> shape (**)* with labels 1,2,3.  The letters must be exactly the
// first n letters of the alphabet.  Throws ParseError.
LabelledMonomial parse_monomial(std::string_view s);
std::string to_string(const LabelledMonomial &m);

// Basis index: type index * n! + lexicographic rank of the label sequence.
std::size_t monomial_index(const LabelledMonomial &m);
LabelledMonomial monomial_from_index(int n, std::size_t index);
// Catalan(n) * n!.
std::size_t monomial_basis_size(int n);

// Left action on labels: every leaf label l becomes g(l).
LabelledMonomial act(const Permutation &g, const LabelledMonomial &m);

// Partial composition grafting m2 onto the leaf at position i of m1, with
// the equivariant relabelling: labels of m1 below m1(i) are kept, labels j of
// m2 become j + m1(i) - 1, labels of m1 above m1(i) shift by deg(m2) - 1.
LabelledMonomial compose_labelled(const LabelledMonomial &m1, int i, const LabelledMonomial &m2);

// Substitution of m2 for the variable with the given label, i.e.
// compose_labelled at the position carrying that label.
LabelledMonomial substitute(const LabelledMonomial &m1, int label, const LabelledMonomial &m2);

// For a permutation g of degree n, the table r -> lex_rank(g o unrank(r)) over
// all n! ranks.  Basis indices of the form block * n! + rank transform
// block-wise under this table.
std::vector<std::uint32_t> rank_action(const Permutation &g);

// index -> monomial_index(act(g, monomial_from_index(n, index))).
std::vector<std::uint32_t> monomial_index_action(const Permutation &g);

} // namespace mutid

#endif
