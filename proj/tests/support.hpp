#ifndef MUTID_TESTS_SUPPORT_HPP
#define MUTID_TESTS_SUPPORT_HPP

#include <mutid/expansion.hpp>
#include <mutid/field.hpp>
#include <mutid/lattice.hpp>
#include <mutid/matrix.hpp>
#include <mutid/rcf.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mutid::test
{

inline constexpr std::uint64_t seed = 20240611;

// Reference E_3: 24 pq-words (pp, pq, qp, qq blocks) by 12 monomials.
extern const int e3_figure[24][12];

IntMatrix random_int_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, int bound);
RatMatrix random_rat_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, int bound);
Matrix<std::uint32_t> random_mod_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols,
                                        const PrimeField &field, double density = 1.0);
// Full row rank, built as a random unimodular-free product so entries stay small.
IntMatrix random_lattice_basis(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, int bound);

IntMatrix product(const IntMatrix &a, const IntMatrix &b);
bool is_hnf(const IntMatrix &h);

// Textbook HNF by repeated gcd elimination on full rows, without the
// transform; independent of the library implementation.
IntMatrix naive_hnf(IntMatrix a);

// Shortest nonzero vector of a 2D lattice by enumeration of small coefficients.
mpz_class brute_force_shortest(const IntMatrix &b, int range);

// Each check returns an empty string on success, otherwise a description of
// the first failure.  `instances` is the number of random trials.
std::string check_operad_axioms(int max_degree);
std::string check_expansion_equivariance(int max_degree);
std::string check_sign_law(int max_degree);
std::string check_rcf_properties(int instances);
std::string check_hnf_properties(int instances);
std::string check_lll_properties(int instances);

} // namespace mutid::test

#endif
