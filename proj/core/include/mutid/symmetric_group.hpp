#ifndef MUTID_SYMMETRIC_GROUP_HPP
#define MUTID_SYMMETRIC_GROUP_HPP

#include <mutid/field.hpp>
#include <mutid/permutation.hpp>
#include <mutid/rcf.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace mutid
{

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

// All partitions of n in reverse lexicographic order, starting at [n].
std::vector<Partition> partitions(int n);
// "32", "2111"; parts above 9 are comma separated ("10,1").
std::string to_string(const Partition &p);
// Accepts "32" (single digits) or "3,2"; throws ParseError.  The result is
// sorted descending.
Partition parse_partition(std::string_view s);
int partition_size(const Partition &p);
bool dominates(const Partition &a, const Partition &b);

struct ConjugacyClass
{
    Partition cycle_type;
    Permutation representative; // cycles of consecutive integers, longest first
    std::size_t size;
};

std::vector<ConjugacyClass> conjugacy_class_reps(int n);
Partition cycle_type(const Permutation &g);

inline constexpr int max_character_table_degree = 8;

// Rows are irreducibles, columns cycle types; both in partitions(n) order.
struct CharacterTable
{
    int n = 0;
    std::vector<Partition> partitions;
    std::vector<ConjugacyClass> classes;
    std::vector<std::vector<std::int64_t>> values;

    std::size_t index_of(const Partition &p) const;
};

// Murnaghan-Nakayama.  Throws std::out_of_range outside 1..8.
const CharacterTable &character_table(int n);
std::int64_t character_value(const Partition &lambda, const Partition &mu);
// Hook length formula.
std::size_t irrep_dimension(const Partition &lambda);

nlohmann::json to_json(const CharacterTable &t);

// Permutation of basis indices induced by g: result[k] is the index of g
// applied to basis element k.
using IndexAction = std::function<std::vector<std::uint32_t>(const Permutation &)>;
IndexAction monomial_action();

// Trace of g on the row space of an RCF basis, where `inverse_action` is the
// index action of g^{-1}.
std::uint32_t module_trace(const std::vector<std::uint32_t> &inverse_action, const ModEchelon &basis);
std::uint32_t module_trace(const Permutation &g, const ModEchelon &basis,
                           const IndexAction &action = monomial_action());

// Indexed like partitions(n).
using MultiplicityVector = std::vector<std::int64_t>;

// Checks that g . row stays in the span for the generators (1 2) and
// (1 2 ... n) on up to `sample_rows` rows; throws ConsistencyError otherwise.
void check_invariance(const ModEchelon &basis, int n, std::size_t sample_rows = 8,
                      const IndexAction &action = monomial_action());

// Character inner products of the traces.  Throws ConsistencyError when
// sum mult * dim differs from the rank.
MultiplicityVector module_multiplicities(const ModEchelon &basis, int n,
                                         const IndexAction &action = monomial_action());
MultiplicityVector module_multiplicities(const ModRcf &basis, int n, const PrimeField &field,
                                         const IndexAction &action = monomial_action());

// Multiplicities of a module whose character values on the class
// representatives (in partitions(n) order) are given mod p.
MultiplicityVector multiplicities_from_traces(const std::vector<std::uint32_t> &traces, int n,
                                              const PrimeField &field);

std::int64_t module_dimension(const MultiplicityVector &m, int n);

} // namespace mutid

#endif
