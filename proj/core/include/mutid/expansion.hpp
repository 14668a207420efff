#ifndef MUTID_EXPANSION_HPP
#define MUTID_EXPANSION_HPP

#include <mutid/matrix.hpp>
#include <mutid/monomial.hpp>
#include <mutid/polynomial.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mutid
{

// Associative word x_{a(1)} e_1 x_{a(2)} ... e_{n-1} x_{a(n)} with e_i in {p, q}.
struct PqWord
{
    Permutation letters;
    std::vector<std::uint8_t> ops; // 0 = p, 1 = q; size n - 1

    int degree() const noexcept { return letters.size(); }
    int q_count() const noexcept;

    friend bool operator==(const PqWord &, const PqWord &) = default;
};

// Index: rank of the op sequence (p < q, first op most significant) * n!
// + lexicographic rank of the letters.
std::size_t pq_word_index(const PqWord &w);
PqWord pq_word_from_index(int n, std::size_t index);

// "apbqc"; parse throws ParseError.
std::string to_string(const PqWord &w);
PqWord parse_pq_word(std::string_view s);

// Terms in ascending index order: "apbpc - bqapc - cqapb + cqbqa".
template <typename T>
std::string to_string(const PqPolynomial<T> &f);
extern template std::string to_string(const PqPolynomial<std::int64_t> &);
extern template std::string to_string(const PqPolynomial<mpz_class> &);
extern template std::string to_string(const PqPolynomial<mpq_class> &);

// X(t u) = X(t) p X(u) - X(u) q X(t); a leaf maps to its variable.
// Returns (word index, +-1) pairs sorted by index.
std::vector<std::pair<std::uint32_t, int>> expand_indices(const LabelledMonomial &m);

template <typename T>
PqPolynomial<T> expand_monomial(const LabelledMonomial &m)
{
    PqPolynomial<T> out(m.degree());
    for (const auto &[i, s] : expand_indices(m))
        out.add(i, T(s));
    return out;
}

template <typename T>
PqPolynomial<T> expand_polynomial(const NonassocPolynomial<T> &f)
{
    PqPolynomial<T> out(f.degree());
    for (const auto &[j, c] : f.terms())
        for (const auto &[i, s] : expand_indices(monomial_from_index(f.degree(), j)))
            out.add(i, s > 0 ? c : T(-c));
    return out;
}

// Default degree guard for expansion matrices.
inline constexpr int max_expansion_degree = 6;

// (2^{n-1} n!) x (Catalan(n) n!) matrix; column j is the expansion of basis
// monomial j.  Throws ResourceLimit for n > max_degree.
SparseMatrix expansion_matrix(int n, int max_degree = max_expansion_degree);

// Substitutes w2 for the letter at 1-based position i of w1; labels are
// shifted as in compose_labelled.
PqWord compose_pq(const PqWord &w1, int i, const PqWord &w2);
// Substitutes w2 for the letter carrying `label`.
PqWord substitute_pq(const PqWord &w1, int label, const PqWord &w2);

template <typename T>
PqPolynomial<T> substitute_pq(const PqPolynomial<T> &f, int label, const PqPolynomial<T> &g)
{
    PqPolynomial<T> out(f.degree() + g.degree() - 1);
    for (const auto &[i, c] : f.terms()) {
        const PqWord w = pq_word_from_index(f.degree(), i);
        for (const auto &[j, d] : g.terms())
            out.add(pq_word_index(substitute_pq(w, label, pq_word_from_index(g.degree(), j))), c * d);
    }
    return out;
}

// Left action on letters.
PqWord act(const Permutation &g, const PqWord &w);

template <typename T>
PqPolynomial<T> act(const Permutation &g, const PqPolynomial<T> &f)
{
    PqPolynomial<T> out(f.degree());
    for (const auto &[i, c] : f.terms())
        out.add(pq_word_index(act(g, pq_word_from_index(f.degree(), i))), c);
    return out;
}

} // namespace mutid

#endif
