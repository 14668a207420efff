#ifndef MUTID_LATTICE_HPP
#define MUTID_LATTICE_HPP

#include <mutid/matrix.hpp>
#include <mutid/rcf.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace mutid
{

// Row-style Hermite normal form: pivots positive and strictly increasing by
// column, entries above a pivot in [0, pivot), zero rows last.
struct HnfResult
{
    IntMatrix H;
    IntMatrix U; // unimodular, U * A = H
    std::size_t rank = 0;
};

// HNF of A alone (rows of the result span the same lattice as the rows of A).
IntMatrix hnf(const IntMatrix &a, const ProgressHook &progress = {});

// U is the transform part of the HNF of [A | I], so it is canonical as well:
// its bottom rows are the HNF basis of the left kernel lattice of A.
HnfResult hnf_with_transform(const IntMatrix &a, const ProgressHook &progress = {});

// Z-basis (in HNF) of {v in Z^cols : A v = 0}.
IntMatrix integer_nullspace(const IntMatrix &a, const ProgressHook &progress = {});

// Same lattice, computed from a rational row space: the kernel of the RCF.
IntMatrix integer_nullspace(const RatRcf &r, const ProgressHook &progress = {});

// Exact determinant (fraction-free Bareiss); the matrix must be square.
mpz_class determinant(const IntMatrix &a);

struct LllOptions
{
    mpq_class delta{3, 4};
    ProgressHook progress;
};

// Integral LLL on the rows of b.  Throws ConsistencyError if the rows are
// linearly dependent and std::invalid_argument unless 1/4 < delta <= 1.
IntMatrix lll_reduce(const IntMatrix &b, const LllOptions &options = {});

mpz_class squared_length(std::span<const mpz_class> v);
// Sum over rows of log10 |b_i|^2.  Throws std::invalid_argument on a zero row.
double lattice_size(const IntMatrix &b);
std::vector<mpz_class> squared_lengths(const IntMatrix &b);

// Scales to an integer vector with content 1 and positive first nonzero
// entry.  Throws std::invalid_argument on the zero vector.
std::vector<mpz_class> make_primitive(std::span<const mpq_class> v);
std::vector<mpz_class> make_primitive(std::span<const mpz_class> v);

} // namespace mutid

#endif
