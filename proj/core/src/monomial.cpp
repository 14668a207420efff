#include <mutid/error.hpp>
#include <mutid/monomial.hpp>

#include <stdexcept>
#include <string>

namespace mutid
{

LabelledMonomial::LabelledMonomial(Tree shape, Permutation labels)
    : m_shape(std::move(shape)), m_labels(std::move(labels))
{
    if (m_shape.degree() != m_labels.size())
        throw std::invalid_argument("LabelledMonomial: shape degree " +
                                    std::to_string(m_shape.degree()) + " does not match " +
                                    std::to_string(m_labels.size()) + " labels");
}

int LabelledMonomial::position_of(int label) const
{
    auto im = m_labels.images();
    for (std::size_t i = 0; i < im.size(); ++i)
        if (im[i] == label)
            return static_cast<int>(i + 1);
    throw std::out_of_range("LabelledMonomial::position_of: label " + std::to_string(label) +
                            " not present");
}

namespace
{

// 1-based column of the k-th letter (0-based) of s.
std::size_t letter_column(std::string_view s, std::size_t k)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] >= 'a' && s[i] <= 'z' && k-- == 0)
            return i + 1;
    return 1;
}

} // namespace

LabelledMonomial parse_monomial(std::string_view s)
{
    auto parsed = parse_bracket(s, true, false);
    const int n = parsed.shape.degree();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t k = 0; k < parsed.leaves.size(); ++k) {
        const int l = parsed.leaves[k];
        if (l > n)
            throw ParseError(std::string("letter '") + static_cast<char>('a' + l - 1) +
                                 "' outside the first " + std::to_string(n) + " letters",
                             letter_column(s, k));
        if (seen[static_cast<std::size_t>(l)])
            throw ParseError(std::string("letter '") + static_cast<char>('a' + l - 1) +
                                 "' repeated: monomials must be multilinear",
                             letter_column(s, k));
        seen[static_cast<std::size_t>(l)] = 1;
    }
    return LabelledMonomial(parsed.shape, Permutation(parsed.leaves));
}

namespace
{

void write_monomial(const Tree &t, std::span<const int> labels, std::size_t &pos,
                    std::string &out, bool outer)
{
    if (t.is_leaf()) {
        const int l = labels[pos++];
        out += l <= 26 ? static_cast<char>('a' + l - 1) : '?';
        return;
    }
    if (!outer)
        out += '(';
    write_monomial(t.left(), labels, pos, out, false);
    write_monomial(t.right(), labels, pos, out, false);
    if (!outer)
        out += ')';
}

} // namespace

std::string to_string(const LabelledMonomial &m)
{
    std::string out;
    std::size_t pos = 0;
    write_monomial(m.shape(), m.labels().images(), pos, out, true);
    return out;
}

std::size_t monomial_basis_size(int n) { return catalan(n) * factorial(n); }

std::size_t monomial_index(const LabelledMonomial &m)
{
    return tree_index(m.shape()) * factorial(m.degree()) + m.labels().lex_rank();
}

LabelledMonomial monomial_from_index(int n, std::size_t index)
{
    if (index >= monomial_basis_size(n))
        throw std::out_of_range("monomial_from_index: index out of range");
    const std::size_t f = factorial(n);
    return LabelledMonomial(enumerate_trees(n)[index / f], Permutation::unrank(n, index % f));
}

LabelledMonomial act(const Permutation &g, const LabelledMonomial &m)
{
    if (g.size() != m.degree())
        throw std::invalid_argument("act: permutation of size " + std::to_string(g.size()) +
                                    " on a monomial of degree " + std::to_string(m.degree()));
    return LabelledMonomial(m.shape(), g * m.labels());
}

LabelledMonomial compose_labelled(const LabelledMonomial &m1, int i, const LabelledMonomial &m2)
{
    const int n1 = m1.degree();
    const int n2 = m2.degree();
    if (i < 1 || i > n1)
        throw std::out_of_range("compose_labelled: position " + std::to_string(i) +
                                " outside 1.." + std::to_string(n1));
    const int at = m1.label_at(i);
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(n1 + n2 - 1));
    for (int pos = 1; pos <= n1; ++pos) {
        if (pos == i) {
            for (int l : m2.labels().images())
                labels.push_back(l + at - 1);
            continue;
        }
        const int l = m1.label_at(pos);
        labels.push_back(l < at ? l : l + n2 - 1);
    }
    return LabelledMonomial(compose_trees(m1.shape(), i, m2.shape()), Permutation(std::move(labels)));
}

LabelledMonomial substitute(const LabelledMonomial &m1, int label, const LabelledMonomial &m2)
{
    return compose_labelled(m1, m1.position_of(label), m2);
}

std::vector<std::uint32_t> rank_action(const Permutation &g)
{
    const int n = g.size();
    const std::size_t f = factorial(n);
    std::vector<std::uint32_t> out(f);
    std::vector<int> seq(static_cast<std::size_t>(n));
    std::vector<int> img(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < f; ++r) {
        lex_unrank(r, seq);
        for (std::size_t k = 0; k < seq.size(); ++k)
            img[k] = g(seq[k]);
        out[r] = static_cast<std::uint32_t>(lex_rank(img));
    }
    return out;
}

std::vector<std::uint32_t> monomial_index_action(const Permutation &g)
{
    const int n = g.size();
    const auto ranks = rank_action(g);
    const std::size_t f = ranks.size();
    const std::size_t types = catalan(n);
    std::vector<std::uint32_t> out(types * f);
    for (std::size_t t = 0; t < types; ++t)
        for (std::size_t r = 0; r < f; ++r)
            out[t * f + r] = static_cast<std::uint32_t>(t * f + ranks[r]);
    return out;
}

} // namespace mutid
