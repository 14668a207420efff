#ifndef MUTID_PIPELINE_HPP
#define MUTID_PIPELINE_HPP

#include <mutid/identities.hpp>
#include <mutid/lattice.hpp>
#include <mutid/symmetric_group.hpp>

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mutid
{

struct SearchOptions
{
    std::uint32_t prime = default_prime;
    bool rational = false; // degree <= 4 only
    std::optional<std::filesystem::path> cache;
    bool timings = false; // wall times are reported only when set
    mpq_class lll_delta{99, 100};
    ProgressHook progress;
};

struct StageTime
{
    std::string stage;
    double seconds = 0;
};

struct LllStats
{
    double size_before = 0;
    double size_after = 0;
    std::map<std::string, int> lengths; // squared length (decimal) -> count, after reduction
};

struct MultiplicityTable
{
    std::vector<Partition> partitions;
    std::vector<std::int64_t> all, old, fresh;

    std::int64_t new_dimension() const;
};

struct SearchReport
{
    int degree = 0;
    std::string ring; // "GF(p)" or "QQ"
    std::size_t ambient_dimension = 0;
    std::size_t association_types = 0;
    std::size_t expansion_rank = 0;
    std::size_t dim_all = 0;
    std::size_t dim_old = 0;
    std::size_t dim_new = 0;
    std::optional<MultiplicityTable> multiplicities;
    std::vector<Identity> generators;
    std::optional<LllStats> lll;
    std::vector<StageTime> timings;
    std::string failed_stage; // empty on success
    std::string error;
};

struct GeneratorStats
{
    std::size_t monomials = 0;          // nonzero symmetrised coordinates
    std::vector<std::int64_t> coefficients; // distinct values, ascending
};

struct PartitionReport
{
    int degree = 0;
    Partition partition;
    std::size_t basis_size = 0;
    std::size_t matrix_rows = 0;
    std::size_t matrix_cols = 0;
    std::size_t rank = 0;
    std::size_t nullity = 0;
    std::size_t old_rank = 0;      // rank of the symmetrised old identities
    std::size_t quotient_dimension = 0; // nullity - old_rank
    double size_before = 0;
    double size_after = 0;
    std::size_t new_generators = 0;
    std::vector<Identity> generators; // full monomial coordinates
    std::optional<GeneratorStats> shortest;
    bool compared_with_old = false;
    std::vector<StageTime> timings;
};

nlohmann::json to_json(const SearchReport &r, bool with_timings = false);
nlohmann::json to_json(const PartitionReport &r, bool with_timings = false);
std::string to_text(const SearchReport &r, bool with_timings = false);
std::string to_text(const PartitionReport &r, bool with_timings = false);

// Generators of the full identity module in degree n as used by the
// searches: {L}; {P, Q, R, H, I}; the 30 consequences of those plus T, U, V.
std::vector<Identity> known_generators(int n);
// Consequences of known_generators(n - 1); empty for n = 3.
std::vector<Identity> old_generators(int n);

// 3 <= n <= 5 (n = 6 is delegated to run_degree6_table).
SearchReport run_degree_search(int n, const SearchOptions &options = {});

// For n <= 5 the LLL-reduced vectors are compared with the old identities;
// for n = 6 only the lattice stages run.
PartitionReport run_partition_search(int n, const Partition &lambda, const SearchOptions &options = {});

// Multiplicities of ker X_n and of the module generated by `old` computed
// from ranks of symmetrised matrices, one per partition.  Per-partition
// results are checkpointed under `checkpoint` when given.
struct SymmetrizedCensus
{
    std::vector<Partition> partitions;
    std::vector<std::size_t> kernel_dims; // dim e_nu K(n)
    std::vector<std::size_t> old_dims;    // dim e_nu L(n)
    MultiplicityVector all, old;
};

SymmetrizedCensus symmetrized_census(int n, const std::vector<Identity> &old, const PrimeField &field,
                                     const std::optional<std::filesystem::path> &checkpoint = {},
                                     const ProgressHook &progress = {});

// dim e_nu V_mu for the symmetrisation scheme of nu, indexed [mu][nu].
std::vector<std::vector<std::int64_t>> symmetrizer_dimensions(int n);

SearchReport run_degree6_table(const SearchOptions &options = {});

} // namespace mutid

#endif
