#include <mutid/error.hpp>
#include <mutid/parallel.hpp>
#include <mutid/pipeline.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <numeric>

using namespace mutid;

namespace
{

std::filesystem::path scratch_dir(const std::string &name)
{
    const auto dir = std::filesystem::temp_directory_path() / ("mutid-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

mpz_class squared_length(const IntPolynomial &f)
{
    mpz_class s = 0;
    for (const auto &[k, c] : f.terms())
        s += mpz_class(c) * c;
    return s;
}

} // namespace

TEST(DegreeSearch, Three)
{
    const SearchReport r = run_degree_search(3);
    EXPECT_TRUE(r.failed_stage.empty()) << r.error;
    EXPECT_EQ(r.expansion_rank, 11u);
    EXPECT_EQ(r.dim_all, 1u);
    EXPECT_EQ(r.dim_old, 0u);
    ASSERT_EQ(r.generators.size(), 1u);
    // The generator is L up to sign.
    const auto &g = r.generators[0].body;
    const auto &l = builtin("L").body;
    const std::int64_t s = g.coefficient(l.terms().begin()->first) / l.terms().begin()->second;
    for (const auto &[k, c] : l.terms())
        EXPECT_EQ(g.coefficient(k), s * c);
}

TEST(DegreeSearch, FourRational)
{
    SearchOptions o;
    o.rational = true;
    const SearchReport r = run_degree_search(4, o);
    EXPECT_TRUE(r.failed_stage.empty()) << r.error;
    EXPECT_EQ(r.ring, "QQ");
    EXPECT_EQ(r.expansion_rank, 88u);
    EXPECT_EQ(r.dim_all, 32u);
    EXPECT_EQ(r.dim_old, 19u);
    EXPECT_EQ(r.dim_new, 13u);
    ASSERT_EQ(r.generators.size(), 2u);
    for (const auto &g : r.generators) {
        EXPECT_EQ(squared_length(g.body), 18);
        EXPECT_TRUE(verify_identity(g.body));
    }
    ASSERT_TRUE(r.multiplicities);
    EXPECT_EQ(r.multiplicities->new_dimension(), 13);
}

TEST(DegreeSearch, GeneratorsAreIndependentModuloOld)
{
    const SearchReport r = run_degree_search(4);
    ASSERT_EQ(r.generators.size(), 2u);
    const auto all = all_identities_module(4);
    for (std::size_t i = 0; i < 2; ++i) {
        auto gens = old_generators(4);
        gens.push_back(r.generators[1 - i]);
        const auto m = module_from_generators(4, gens);
        EXPECT_LT(m.rank(), all.rank()) << "generator " << i << " is redundant";
    }
}

TEST(DegreeSearch, FiveModularOnly)
{
    SearchOptions o;
    o.rational = true;
    EXPECT_THROW(run_degree_search(5, o), ResourceLimit);
}

TEST(DegreeSearch, Five)
{
    const SearchReport r = run_degree_search(5);
    ASSERT_TRUE(r.failed_stage.empty()) << r.error;
    EXPECT_EQ(r.dim_all, 778u);
    EXPECT_EQ(r.dim_old, 747u);
    EXPECT_EQ(r.dim_new, 31u);
    ASSERT_TRUE(r.multiplicities);
    EXPECT_EQ(r.multiplicities->all, (std::vector<std::int64_t>{7, 27, 30, 42, 30, 26, 7}));
    EXPECT_EQ(r.multiplicities->old, (std::vector<std::int64_t>{7, 27, 29, 40, 28, 25, 7}));
    EXPECT_EQ(r.generators.size(), 3u);
    for (const auto &g : r.generators)
        EXPECT_TRUE(verify_identity(g.body)) << g.name;
    auto gens = old_generators(5);
    gens.insert(gens.end(), r.generators.begin(), r.generators.end());
    EXPECT_EQ(module_from_generators(5, gens).rank(), 778u);
}

TEST(DegreeSearch, JsonShape)
{
    const SearchReport r = run_degree_search(4);
    const auto j = to_json(r);
    for (const char *key : {"degree", "ring", "ambient_dimension", "association_types", "expansion_rank", "dim_all",
                            "dim_old", "dim_new", "multiplicities", "generators", "lll"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_FALSE(j.contains("timings"));
    EXPECT_TRUE(to_json(r, true).contains("timings"));
    EXPECT_NE(to_text(r).find("new identities"), std::string::npos);
}

TEST(DegreeSearch, DeterministicAcrossWorkerCounts)
{
    ::setenv("MUTID_THREADS", "1", 1);
    ASSERT_EQ(worker_count(), 1);
    const std::string one = to_json(run_degree_search(4)).dump();
    ::setenv("MUTID_THREADS", "3", 1);
    ASSERT_EQ(worker_count(), 3);
    const std::string three = to_json(run_degree_search(4)).dump();
    ::unsetenv("MUTID_THREADS");
    EXPECT_EQ(one, three);
}

TEST(DegreeSearch, WarmCacheIsByteIdentical)
{
    SearchOptions o;
    o.cache = scratch_dir("search-cache");
    const std::string cold = to_json(run_degree_search(4, o)).dump();
    EXPECT_FALSE(std::filesystem::is_empty(*o.cache));
    const std::string warm = to_json(run_degree_search(4, o)).dump();
    EXPECT_EQ(cold, warm);
    std::filesystem::remove_all(*o.cache);
}

TEST(PartitionSearch, ThirtyTwo)
{
    const PartitionReport r = run_partition_search(5, parse_partition("32"));
    EXPECT_EQ(r.basis_size, 140u);
    EXPECT_EQ(r.matrix_rows, 1920u);
    EXPECT_EQ(r.matrix_cols, 140u);
    EXPECT_EQ(r.rank, 76u);
    EXPECT_EQ(r.nullity, 64u);
    EXPECT_EQ(r.nullity, r.basis_size - r.rank);
    EXPECT_LE(r.size_after, 77.86 + 0.01);
    EXPECT_LT(r.size_after, r.size_before);
    EXPECT_EQ(r.quotient_dimension, 1u);
    EXPECT_EQ(r.new_generators, 1u);
    ASSERT_TRUE(r.shortest);
    EXPECT_EQ(r.shortest->coefficients, (std::vector<std::int64_t>{-1, 1}));
    for (const auto &g : r.generators)
        EXPECT_TRUE(verify_identity(g.body));
}

TEST(PartitionSearch, NewGeneratorCounts)
{
    const std::pair<const char *, std::size_t> expected[] = {{"5", 0}, {"311", 2}, {"221", 2}, {"2111", 1}};
    for (const auto &[p, count] : expected) {
        const PartitionReport r = run_partition_search(5, parse_partition(p));
        EXPECT_EQ(r.new_generators, count) << p;
        EXPECT_GE(r.quotient_dimension, count) << p;
        EXPECT_EQ(r.quotient_dimension == 0, count == 0) << p;
    }
}

TEST(PartitionSearch, RejectsForeignPartition)
{
    EXPECT_THROW(run_partition_search(5, parse_partition("42")), std::invalid_argument);
}

TEST(DegreeSix, CheckpointsAndResumes)
{
    SearchOptions o;
    o.cache = scratch_dir("degree6");
    std::size_t calls = 0;
    o.progress = [&](std::size_t, std::size_t) { return ++calls <= 3; };
    const SearchReport stopped = run_degree6_table(o);
    EXPECT_EQ(stopped.failed_stage, "census");
    EXPECT_EQ(stopped.error.rfind("cancelled", 0), 0u);

    o.progress = {};
    const SearchReport r = run_degree6_table(o);
    ASSERT_TRUE(r.failed_stage.empty()) << r.error;
    ASSERT_TRUE(r.multiplicities);
    const auto &t = *r.multiplicities;
    EXPECT_EQ(t.partitions.size(), 11u);
    EXPECT_EQ(t.old, (std::vector<std::int64_t>{29, 136, 237, 268, 131, 422, 267, 131, 236, 133, 28}));
    EXPECT_EQ(static_cast<std::size_t>(t.new_dimension()), r.dim_new);
    EXPECT_EQ(r.dim_all - r.dim_old, r.dim_new);
    EXPECT_EQ(r.expansion_rank + r.dim_all, 30240u);

    SearchOptions fresh;
    fresh.cache = scratch_dir("degree6-fresh");
    EXPECT_EQ(to_json(run_degree6_table(fresh)).dump(), to_json(r).dump());
    std::filesystem::remove_all(*o.cache);
    std::filesystem::remove_all(*fresh.cache);
}
