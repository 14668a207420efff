#ifndef MUTID_IDENTITIES_HPP
#define MUTID_IDENTITIES_HPP

#include <mutid/expansion.hpp>
#include <mutid/field.hpp>
#include <mutid/polynomial.hpp>
#include <mutid/rcf.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mutid
{

struct Identity
{
    std::string name;
    IntPolynomial body;

    int degree() const noexcept { return body.degree(); }
};

// L, J, H, I, P, Q, R, T, U, V.
const std::vector<std::string> &builtin_names();
// Throws std::invalid_argument for an unknown name.
const Identity &builtin(std::string_view name);

bool verify_identity(const IntPolynomial &f);

// The n substitutions x_i -> x_i x_{i+1}, then S x_{n+1} and x_1 S (relabelled).
std::vector<Identity> consequences(const Identity &s);

// Rows of the S_n-module generated by a set of vectors, kept in RCF over GF(p).
struct IdentityModule
{
    int degree = 0;
    ModEchelon basis;
    std::vector<std::string> provenance;

    std::size_t rank() const noexcept { return basis.rank(); }
};

// Every act(g, v) for g in S_n, reduced mod p; one row per permutation.
Matrix<std::uint32_t> orbit_rows(const IntPolynomial &f, const PrimeField &field);
Matrix<std::uint32_t> orbit_rows(std::span<const std::uint32_t> v, int n);

IdentityModule module_from_generators(int n, const std::vector<Identity> &gens,
                                      const PrimeField &field = PrimeField(),
                                      const ProgressHook &progress = {});

// Kernel of the expansion map over GF(p).  Throws ResourceLimit for n > 6.
IdentityModule all_identities_module(int n, const PrimeField &field = PrimeField(),
                                     const ProgressHook &progress = {});
// Kernel over the rationals in RCF; n <= 4 unless max_degree is raised.
RatRcf all_identities_rational(int n, int max_degree = 4);

// rank(all) - rank(old) after checking old is contained in all.
std::size_t quotient_dimension(const IdentityModule &all, const IdentityModule &old);

struct GeneratorSearch
{
    std::vector<std::size_t> chosen; // indices into the candidate list
    std::size_t achieved_rank = 0;
};

// Greedy scan: admit a candidate not yet in the span and add its S_n-orbit;
// stop once the span reaches rank(all).  A post-pass drops generators whose
// removal leaves the span intact.  Throws ConsistencyError if the candidates
// do not reach rank(all).
GeneratorSearch module_generators(const IdentityModule &all, const IdentityModule &old,
                                  const std::vector<IntPolynomial> &candidates);

struct JordanCheck
{
    bool holds = false;
    IntPolynomial residual; // expression - J
};

// Signed sum of 27 relabelled P, Q, R, H, I terms compared with J.  `omit`
// drops one term (by position) for perturbation tests.
JordanCheck verify_jordan_expression(int omit = -1);

// Identity file format: '#' comments, one term per line
// "<sign><coefficient> <monomial>", sign and coefficient optional.
IntPolynomial read_identity(std::istream &is);
IntPolynomial parse_identity(std::string_view text);
void write_identity(std::ostream &os, const IntPolynomial &f, std::string_view name = {});
std::string to_string(const IntPolynomial &f);

} // namespace mutid

#endif
