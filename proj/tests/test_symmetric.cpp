#include <mutid/error.hpp>
#include <mutid/identities.hpp>
#include <mutid/pipeline.hpp>
#include <mutid/symmetric_group.hpp>
#include <mutid/symmetrize.hpp>

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace mutid;

namespace
{

IntPolynomial sum_of(std::initializer_list<std::pair<int, const char *>> terms)
{
    IntPolynomial f(5);
    for (const auto &[c, m] : terms)
        f.add(monomial_index(parse_monomial(m)), c);
    return f;
}

} // namespace

TEST(Partitions, OrderAndParsing)
{
    std::vector<std::string> names;
    for (const auto &p : partitions(6))
        names.push_back(to_string(p));
    EXPECT_EQ(names, (std::vector<std::string>{"6", "51", "42", "411", "33", "321", "3111", "222", "2211", "21111",
                                               "111111"}));
    EXPECT_EQ(parse_partition("3,2"), parse_partition("32"));
    EXPECT_EQ(partition_size(parse_partition("2111")), 5);
    EXPECT_EQ(parse_partition("23"), parse_partition("32"));
    EXPECT_THROW(parse_partition("3x"), ParseError);
    EXPECT_THROW(parse_partition("30"), ParseError);
}

TEST(ConjugacyClasses, Sizes)
{
    const auto c3 = conjugacy_class_reps(3);
    ASSERT_EQ(c3.size(), 3u);
    std::multiset<std::size_t> sizes;
    for (const auto &c : c3) {
        sizes.insert(c.size);
        EXPECT_EQ(cycle_type(c.representative), c.cycle_type);
    }
    EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 2, 3}));
    EXPECT_EQ(conjugacy_class_reps(5).size(), 7u);
    EXPECT_EQ(conjugacy_class_reps(6).size(), 11u);
}

TEST(CharacterTable, Orthogonality)
{
    for (int n = 1; n <= 8; ++n) {
        const CharacterTable &t = character_table(n);
        const std::size_t k = t.partitions.size();
        ASSERT_EQ(t.classes.back().size, 1u);
        std::int64_t squares = 0;
        for (std::size_t a = 0; a < k; ++a) {
            squares += t.values[a].back() * t.values[a].back();
            for (std::size_t b = 0; b < k; ++b) {
                std::int64_t s = 0;
                for (std::size_t c = 0; c < k; ++c)
                    s += static_cast<std::int64_t>(t.classes[c].size) * t.values[a][c] * t.values[b][c];
                ASSERT_EQ(s, a == b ? static_cast<std::int64_t>(factorial(n)) : 0) << "n=" << n;
            }
        }
        EXPECT_EQ(squares, static_cast<std::int64_t>(factorial(n)));
    }
}

TEST(CharacterTable, TrivialAndSignRows)
{
    const CharacterTable &t = character_table(5);
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
        EXPECT_EQ(t.values.front()[c], 1);
        EXPECT_EQ(t.values.back()[c], t.classes[c].representative.sign());
    }
}

TEST(CharacterTable, DegreeSixDimensions)
{
    const CharacterTable &t = character_table(6);
    std::vector<std::int64_t> dims;
    for (const auto &row : t.values)
        dims.push_back(row.back());
    EXPECT_EQ(dims, (std::vector<std::int64_t>{1, 5, 9, 10, 5, 16, 10, 5, 9, 5, 1}));
    EXPECT_EQ(irrep_dimension(parse_partition("6")), 1u);
    EXPECT_EQ(irrep_dimension(parse_partition("321")), 16u);
    EXPECT_EQ(irrep_dimension(parse_partition("32")), 5u);
    EXPECT_THROW(character_table(9), std::out_of_range);
}

TEST(CharacterTable, JsonExport)
{
    const auto j = to_json(character_table(3));
    EXPECT_EQ(j["n"], 3);
    EXPECT_EQ(j["partitions"].size(), 3u);
    EXPECT_EQ(j["characters"][0], (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(j["characters"][1], (std::vector<int>{-1, 0, 2}));
    EXPECT_EQ(j["class_sizes"], (std::vector<int>{2, 3, 1}));
    EXPECT_EQ(j["dimensions"], (std::vector<int>{1, 2, 1}));
}

TEST(Multiplicities, AmbientAndZero)
{
    for (int n = 3; n <= 4; ++n) {
        const PrimeField f;
        ModEchelon all(monomial_basis_size(n), f);
        std::vector<std::uint32_t> e(monomial_basis_size(n));
        for (std::size_t k = 0; k < e.size(); ++k) {
            std::fill(e.begin(), e.end(), 0);
            e[k] = 1;
            all.insert(e);
        }
        EXPECT_EQ(module_trace(Permutation::identity(n), all), all.rank());
        const auto m = module_multiplicities(all, n);
        EXPECT_EQ(module_dimension(m, n), static_cast<std::int64_t>(monomial_basis_size(n)));
        const auto z = module_multiplicities(ModEchelon(monomial_basis_size(n), f), n);
        EXPECT_EQ(std::accumulate(z.begin(), z.end(), std::int64_t{0}), 0);
    }
}

TEST(Multiplicities, DegreeFour)
{
    const auto all = all_identities_module(4);
    const auto old = module_from_generators(4, old_generators(4));
    const auto a = module_multiplicities(all.basis, 4);
    const auto o = module_multiplicities(old.basis, 4);
    std::int64_t fresh = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ASSERT_GE(a[i], o[i]);
        fresh += (a[i] - o[i]) * static_cast<std::int64_t>(irrep_dimension(partitions(4)[i]));
    }
    EXPECT_EQ(fresh, 13);
}

TEST(Multiplicities, DegreeFive)
{
    const auto all = all_identities_module(5);
    EXPECT_EQ(module_multiplicities(all.basis, 5), (MultiplicityVector{7, 27, 30, 42, 30, 26, 7}));
    const auto old = module_from_generators(5, old_generators(5));
    EXPECT_EQ(module_multiplicities(old.basis, 5), (MultiplicityVector{7, 27, 29, 40, 28, 25, 7}));
    check_invariance(all.basis, 5);
}

TEST(Symmetrize, PartitionThirtyTwo)
{
    const auto s = symmetrize_monomial(parse_monomial("(((ab)c)d)e"), symmetrization_scheme(parse_partition("32")));
    const auto expected =
        sum_of({{1, "(((ab)c)d)e"}, {1, "(((ac)b)d)e"}, {1, "(((ba)c)d)e"}, {1, "(((bc)a)d)e"},
                {1, "(((ca)b)d)e"}, {1, "(((cb)a)d)e"}, {1, "(((ab)c)e)d"}, {1, "(((ac)b)e)d"},
                {1, "(((ba)c)e)d"}, {1, "(((bc)a)e)d"}, {1, "(((ca)b)e)d"}, {1, "(((cb)a)e)d"}});
    EXPECT_EQ(s, expected);
}

TEST(Symmetrize, OtherDegreeFivePartitions)
{
    const auto m = parse_monomial("(((ab)c)d)e");
    EXPECT_EQ(symmetrize_monomial(m, symmetrization_scheme(parse_partition("311"))),
              sum_of({{1, "(((ab)c)d)e"}, {1, "(((ac)b)d)e"}, {1, "(((ba)c)d)e"}, {1, "(((bc)a)d)e"},
                      {1, "(((ca)b)d)e"}, {1, "(((cb)a)d)e"}, {-1, "(((ab)c)e)d"}, {-1, "(((ac)b)e)d"},
                      {-1, "(((ba)c)e)d"}, {-1, "(((bc)a)e)d"}, {-1, "(((ca)b)e)d"}, {-1, "(((cb)a)e)d"}}));
    EXPECT_EQ(symmetrize_monomial(m, symmetrization_scheme(parse_partition("221"))),
              sum_of({{1, "(((ab)c)d)e"}, {1, "(((ba)c)d)e"}, {1, "(((ab)d)c)e"}, {1, "(((ba)d)c)e"}}));
    EXPECT_EQ(symmetrize_monomial(m, symmetrization_scheme(parse_partition("2111"))),
              sum_of({{1, "(((ab)c)d)e"}, {1, "(((ba)c)d)e"}, {-1, "(((ab)c)e)d"}, {-1, "(((ba)c)e)d"},
                      {-1, "(((ab)d)c)e"}, {-1, "(((ba)d)c)e"}, {1, "(((ab)d)e)c"}, {1, "(((ba)d)e)c"},
                      {1, "(((ab)e)c)d"}, {1, "(((ba)e)c)d"}, {-1, "(((ab)e)d)c"}, {-1, "(((ba)e)d)c"}}));
}

TEST(Symmetrize, BasisSizes)
{
    EXPECT_EQ(symmetrized_basis(5, parse_partition("32")).size(), 140u);
    EXPECT_EQ(symmetrized_basis(5, parse_partition("311")).size(), 140u);
    EXPECT_EQ(symmetrized_basis(5, parse_partition("221")).size(), 420u);
    EXPECT_EQ(symmetrized_basis(5, parse_partition("2111")).size(), 140u);
    EXPECT_EQ(symmetrized_basis(6, parse_partition("222")).size(), 3780u);
    EXPECT_EQ(symmetrized_basis(6, parse_partition("321")).size(), 2520u);
}

TEST(Symmetrize, ProjectionIsConsistent)
{
    const auto basis = symmetrized_basis(5, parse_partition("221"));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto [pos, sign] = basis.project(basis.monomial_index(j));
        ASSERT_EQ(pos, j);
        ASSERT_EQ(sign, 1);
    }
}

TEST(Symmetrize, PartitionThirtyTwoMatrix)
{
    const auto basis = symmetrized_basis(5, parse_partition("32"));
    const SparseMatrix x = symmetrized_expansion_matrix(basis);
    EXPECT_EQ(x.rows(), 1920u);
    EXPECT_EQ(x.cols(), 140u);
    const std::set<std::int64_t> allowed{-3, -2, -1, 1, 2, 3, 4};
    for (std::size_t j = 0; j < x.cols(); ++j) {
        EXPECT_LE(x.column(j).size(), 192u);
        for (const auto &e : x.column(j))
            ASSERT_TRUE(allowed.count(e.value)) << e.value;
    }
    EXPECT_EQ(rank_mod_p(x, 1009), 76u);
    EXPECT_EQ(rcf(x.to_dense<mpq_class>()).rank(), 76u);
    const SparseMatrix r = reduced_symmetrized_expansion_matrix(basis);
    EXPECT_EQ(rank_mod_p(r, 1009), 76u);
}

TEST(Symmetrize, SignRepresentationInDegreeThree)
{
    const auto basis = symmetrized_basis(3, parse_partition("111"));
    const SparseMatrix x = symmetrized_expansion_matrix(basis);
    EXPECT_EQ(x.cols() - rank_mod_p(x, 1009), 1u);
    EXPECT_EQ(module_multiplicities(all_identities_module(3).basis, 3).back(), 1);
}

TEST(Symmetrize, LiftRoundTrip)
{
    const auto basis = symmetrized_basis(4, parse_partition("31"));
    std::vector<std::int64_t> c(basis.size(), 0);
    c[1] = 2;
    c[5] = -1;
    const auto lifted = lift_symmetrized<std::int64_t>(basis, std::span<const std::int64_t>(c));
    IntPolynomial expected(4);
    for (std::size_t j : {1u, 5u}) {
        const IntPolynomial s = symmetrize_monomial(basis.monomial(j), basis.reduction.scheme);
        for (const auto &[k, v] : s.terms())
            expected.add(k, c[j] * v);
    }
    EXPECT_EQ(lifted, expected);
}

TEST(Census, SymmetrizerDimensions)
{
    for (int n = 3; n <= 6; ++n) {
        const auto c = symmetrizer_dimensions(n);
        const std::size_t k = c.size();
        // Full symmetriser sees only the trivial module, the antisymmetriser
        // only the sign module.
        for (std::size_t mu = 0; mu < k; ++mu) {
            EXPECT_EQ(c[mu][0], mu == 0 ? 1 : 0);
            EXPECT_EQ(c[mu][k - 1], mu == k - 1 ? 1 : 0);
            // Each irreducible is seen by its own symmetriser.
            EXPECT_GE(c[mu][mu], 1);
        }
    }
}

TEST(Census, DegreeFiveMatchesTraceMethod)
{
    const auto census = symmetrized_census(5, old_generators(5), PrimeField());
    EXPECT_EQ(census.all, (MultiplicityVector{7, 27, 30, 42, 30, 26, 7}));
    EXPECT_EQ(census.old, (MultiplicityVector{7, 27, 29, 40, 28, 25, 7}));
}

TEST(Census, DegreeFourMatchesTraceMethod)
{
    const auto census = symmetrized_census(4, old_generators(4), PrimeField());
    EXPECT_EQ(census.all, module_multiplicities(all_identities_module(4).basis, 4));
    EXPECT_EQ(census.old, module_multiplicities(module_from_generators(4, old_generators(4)).basis, 4));
}
