#include <mutid/error.hpp>
#include <mutid/identities.hpp>
#include <mutid/pipeline.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace mutid;

TEST(Builtins, SizesAndDegrees)
{
    EXPECT_EQ(builtin("L").body.size(), 12u);
    EXPECT_EQ(builtin("J").body.size(), 48u);
    EXPECT_EQ(builtin("H").body.size(), 18u);
    EXPECT_EQ(builtin("I").body.size(), 18u);
    for (const char *name : {"H", "I"})
        for (const auto &[k, c] : builtin(name).body.terms())
            EXPECT_TRUE(c == 1 || c == -1) << name;
    for (const char *name : {"T", "U", "V"})
        EXPECT_EQ(builtin(name).degree(), 5);
    EXPECT_THROW(builtin("Z"), std::invalid_argument);
}

TEST(Builtins, LieAdmissibleIsAlternatingSumOfAssociators)
{
    IntPolynomial expected(3);
    for (const auto &g : all_permutations(3)) {
        expected.add(monomial_index(act(g, parse_monomial("(ab)c"))), g.sign());
        expected.add(monomial_index(act(g, parse_monomial("a(bc)"))), -g.sign());
    }
    EXPECT_EQ(builtin("L").body, expected);
}

TEST(Builtins, AllExpandToZero)
{
    for (const auto &name : builtin_names())
        EXPECT_TRUE(verify_identity(builtin(name).body)) << name;
}

TEST(Consequences, CountsAndIdealProperty)
{
    const auto cl = consequences(builtin("L"));
    ASSERT_EQ(cl.size(), 5u);
    for (const auto &name : builtin_names()) {
        const auto cs = consequences(builtin(name));
        EXPECT_EQ(cs.size(), static_cast<std::size_t>(builtin(name).degree() + 2));
        for (const auto &c : cs) {
            EXPECT_EQ(c.degree(), builtin(name).degree() + 1);
            EXPECT_TRUE(verify_identity(c.body)) << c.name;
        }
    }
}

TEST(Consequences, LieAdmissibleSubstitutionsMatchComposition)
{
    // L(ab, c, d) is L composed with ab at its first argument; aL(b, c, d)
    // and L(a, b, c)d are ab composed with L at the second and first leaf.
    const IntPolynomial &l = builtin("L").body;
    const auto cl = consequences(builtin("L"));
    const auto ab = parse_monomial("ab");
    EXPECT_EQ(cl[0].body, substitute(l, 1, ab));
    IntPolynomial right(4), left(4);
    for (const auto &[k, c] : l.terms()) {
        right.add(monomial_index(compose_labelled(ab, 2, monomial_from_index(3, k))), c);
        left.add(monomial_index(compose_labelled(ab, 1, monomial_from_index(3, k))), c);
    }
    EXPECT_EQ(cl[3].body, left);
    EXPECT_EQ(cl[4].body, right);
}

TEST(Modules, DegreeFourRanks)
{
    const auto all = all_identities_module(4);
    EXPECT_EQ(all.rank(), 32u);
    const auto old = module_from_generators(4, old_generators(4));
    EXPECT_EQ(old.rank(), 19u);
    EXPECT_EQ(quotient_dimension(all, old), 13u);
    const auto five = module_from_generators(4, consequences(builtin("L")));
    EXPECT_EQ(five.rank(), 19u);
    EXPECT_EQ(quotient_dimension(all, all), 0u);
    EXPECT_EQ(all_identities_module(3).rank(), 1u);
}

TEST(Modules, KnownGeneratorsSpanDegreeFour)
{
    const auto all = all_identities_module(4);
    const auto known = module_from_generators(4, known_generators(4));
    EXPECT_EQ(known.rank(), all.rank());
}

TEST(Modules, DegreeFive)
{
    const auto all = all_identities_module(5);
    EXPECT_EQ(all.rank(), 778u);
    const auto old = module_from_generators(5, old_generators(5));
    EXPECT_EQ(old.rank(), 747u);
    EXPECT_EQ(quotient_dimension(all, old), 31u);
    auto gens = old_generators(5);
    for (const char *name : {"T", "U", "V"})
        gens.push_back(builtin(name));
    EXPECT_EQ(module_from_generators(5, gens).rank(), 778u);
}

TEST(Modules, GuardsAndPreconditions)
{
    EXPECT_THROW(all_identities_module(6), ResourceLimit);
    EXPECT_THROW(module_from_generators(5, {builtin("L")}), std::invalid_argument);
    const auto all = all_identities_module(4);
    const auto l5 = module_from_generators(4, {});
    EXPECT_THROW(quotient_dimension(l5, all), ConsistencyError);
}

TEST(Modules, GeneratorsEmptyWhenOldIsAll)
{
    const auto all = all_identities_module(3);
    EXPECT_TRUE(module_generators(all, all, {builtin("L").body}).chosen.empty());
}

TEST(JordanExpression, DisplayedSignsLeaveAResidual)
{
    // The displayed combination differs from J on the four H terms.
    const JordanCheck c = verify_jordan_expression();
    EXPECT_FALSE(c.holds);
    EXPECT_FALSE(c.residual.is_zero());
    EXPECT_TRUE(verify_identity(c.residual));
}

TEST(JordanExpression, OmittingATermChangesTheResult)
{
    const JordanCheck full = verify_jordan_expression();
    for (int k = 0; k < 27; ++k)
        EXPECT_NE(verify_jordan_expression(k).residual, full.residual) << k;
}

TEST(JordanExpression, JLiesInTheOldModule)
{
    const auto old = module_from_generators(4, known_generators(4));
    std::vector<std::uint32_t> v(120, 0);
    const PrimeField f;
    for (const auto &[k, c] : builtin("J").body.terms())
        v[k] = f.reduce(c);
    EXPECT_TRUE(old.basis.contains(v));
}

TEST(IdentityIo, RoundTrip)
{
    for (const auto &name : builtin_names()) {
        std::stringstream s;
        write_identity(s, builtin(name).body, name);
        EXPECT_EQ(read_identity(s), builtin(name).body) << name;
    }
    EXPECT_EQ(to_string(IntPolynomial(3)), "0");
}

TEST(IdentityIo, Format)
{
    const IntPolynomial f = parse_identity("# comment\n(ab)c\n-2 a(bc)\n+ 3 (ba)c\n");
    EXPECT_EQ(f.coefficient(monomial_index(parse_monomial("(ab)c"))), 1);
    EXPECT_EQ(f.coefficient(monomial_index(parse_monomial("a(bc)"))), -2);
    EXPECT_EQ(f.coefficient(monomial_index(parse_monomial("(ba)c"))), 3);
}

TEST(IdentityIo, Diagnostics)
{
    try {
        parse_identity("(ab)c\n\n2 (ab)(cd)\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3u);
    }
    try {
        parse_identity("(ab)c\nx(bc)\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 1u);
    }
}
