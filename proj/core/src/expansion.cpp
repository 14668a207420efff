#include <mutid/error.hpp>
#include <mutid/expansion.hpp>
#include <mutid/parallel.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mutid
{

int PqWord::q_count() const noexcept
{
    return static_cast<int>(std::count(ops.begin(), ops.end(), std::uint8_t{1}));
}

namespace
{

void check_word(const PqWord &w)
{
    if (w.letters.size() < 1 || w.ops.size() + 1 != static_cast<std::size_t>(w.letters.size()))
        throw std::invalid_argument("PqWord: need n letters and n - 1 operations");
}

std::size_t ops_rank(const std::vector<std::uint8_t> &ops)
{
    std::size_t r = 0;
    for (auto o : ops)
        r = (r << 1) | o;
    return r;
}

struct Term
{
    std::vector<int> letters;
    std::vector<std::uint8_t> ops;
    int sign;
};

// Expands the subtree whose preorder code starts at `pos`; advances `pos` past
// it and `leaf` past its leaves.
std::vector<Term> expand_code(std::span<const std::uint8_t> code, std::size_t &pos,
                              std::span<const int> labels, std::size_t &leaf)
{
    if (code[pos++] == 0)
        return {Term{{labels[leaf++]}, {}, 1}};
    auto left = expand_code(code, pos, labels, leaf);
    auto right = expand_code(code, pos, labels, leaf);
    std::vector<Term> out;
    out.reserve(2 * left.size() * right.size());
    for (const auto &l : left)
        for (const auto &r : right) {
            Term t;
            t.letters = l.letters;
            t.letters.insert(t.letters.end(), r.letters.begin(), r.letters.end());
            t.ops = l.ops;
            t.ops.push_back(0);
            t.ops.insert(t.ops.end(), r.ops.begin(), r.ops.end());
            t.sign = l.sign * r.sign;
            out.push_back(std::move(t));

            Term u;
            u.letters = r.letters;
            u.letters.insert(u.letters.end(), l.letters.begin(), l.letters.end());
            u.ops = r.ops;
            u.ops.push_back(1);
            u.ops.insert(u.ops.end(), l.ops.begin(), l.ops.end());
            u.sign = -l.sign * r.sign;
            out.push_back(std::move(u));
        }
    return out;
}

char letter(int label) { return label >= 1 && label <= 26 ? static_cast<char>('a' + label - 1) : '?'; }

template <typename T>
std::string coefficient_text(const T &c)
{
    std::ostringstream os;
    os << c;
    return os.str();
}

} // namespace

std::size_t pq_word_index(const PqWord &w)
{
    check_word(w);
    return ops_rank(w.ops) * factorial(w.degree()) + w.letters.lex_rank();
}

PqWord pq_word_from_index(int n, std::size_t index)
{
    if (n < 1 || index >= pq_basis_size(n))
        throw std::out_of_range("pq_word_from_index: index out of range");
    const std::size_t f = factorial(n);
    PqWord w;
    w.letters = Permutation::unrank(n, index % f);
    std::size_t r = index / f;
    w.ops.assign(static_cast<std::size_t>(n - 1), 0);
    for (int k = n - 2; k >= 0; --k) {
        w.ops[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(r & 1);
        r >>= 1;
    }
    return w;
}

std::string to_string(const PqWord &w)
{
    check_word(w);
    std::string out;
    for (int i = 1; i <= w.degree(); ++i) {
        if (i > 1)
            out += w.ops[static_cast<std::size_t>(i - 2)] ? 'q' : 'p';
        out += letter(w.letters(i));
    }
    return out;
}

PqWord parse_pq_word(std::string_view s)
{
    std::vector<int> letters;
    std::vector<std::uint8_t> ops;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char ch = s[i];
        const bool want_letter = letters.size() == ops.size();
        if (want_letter) {
            if (ch < 'a' || ch > 'z' || ch == 'p' || ch == 'q')
                throw ParseError(std::string("expected a variable letter, found '") + ch + "'", i + 1);
            letters.push_back(ch - 'a' + 1);
        } else {
            if (ch != 'p' && ch != 'q')
                throw ParseError(std::string("expected 'p' or 'q', found '") + ch + "'", i + 1);
            ops.push_back(ch == 'q' ? 1 : 0);
        }
    }
    if (letters.empty() || letters.size() == ops.size())
        throw ParseError("pq-word must end with a variable", s.size() + 1);
    const int n = static_cast<int>(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i)
        if (letters[i] > n)
            throw ParseError(std::string("letter '") + letter(letters[i]) + "' outside the first " +
                                 std::to_string(n) + " letters",
                             2 * i + 1);
    try {
        return PqWord{Permutation(std::move(letters)), std::move(ops)};
    } catch (const std::invalid_argument &) {
        throw ParseError("repeated letter in pq-word", 1);
    }
}

template <typename T>
std::string to_string(const PqPolynomial<T> &f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[i, c] : f.terms()) {
        const bool negative = c < 0;
        const T mag = negative ? T(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1)
            out += coefficient_text(mag) + " ";
        out += to_string(pq_word_from_index(f.degree(), i));
        first = false;
    }
    return out;
}

template std::string to_string(const PqPolynomial<std::int64_t> &);
template std::string to_string(const PqPolynomial<mpz_class> &);
template std::string to_string(const PqPolynomial<mpq_class> &);

std::vector<std::pair<std::uint32_t, int>> expand_indices(const LabelledMonomial &m)
{
    std::size_t pos = 0, leaf = 0;
    const auto terms = expand_code(m.shape().code(), pos, m.labels().images(), leaf);
    const std::size_t f = factorial(m.degree());
    std::vector<std::pair<std::uint32_t, int>> out;
    out.reserve(terms.size());
    for (const auto &t : terms)
        out.emplace_back(static_cast<std::uint32_t>(ops_rank(t.ops) * f + lex_rank(t.letters)), t.sign);
    std::sort(out.begin(), out.end());
    return out;
}

SparseMatrix expansion_matrix(int n, int max_degree)
{
    if (n < 1)
        throw std::invalid_argument("expansion_matrix: degree must be positive");
    if (n > max_degree)
        throw ResourceLimit("expansion_matrix: degree " + std::to_string(n) +
                            " exceeds the configured limit " + std::to_string(max_degree));
    const std::size_t cols = monomial_basis_size(n);
    std::vector<std::vector<SparseMatrix::Entry>> columns(cols);
    parallel_for(cols, [&](std::size_t j) {
        for (const auto &[i, s] : expand_indices(monomial_from_index(n, j)))
            columns[j].push_back({i, s});
    });
    SparseMatrix e(pq_basis_size(n), cols);
    for (std::size_t j = 0; j < cols; ++j)
        e.set_column(j, std::move(columns[j]));
    return e;
}

PqWord compose_pq(const PqWord &w1, int i, const PqWord &w2)
{
    check_word(w1);
    check_word(w2);
    const int n1 = w1.degree(), n2 = w2.degree();
    if (i < 1 || i > n1)
        throw std::out_of_range("compose_pq: position " + std::to_string(i) + " outside 1.." +
                                std::to_string(n1));
    const int at = w1.letters(i);
    std::vector<int> letters;
    std::vector<std::uint8_t> ops;
    for (int pos = 1; pos <= n1; ++pos) {
        if (pos > 1)
            ops.push_back(w1.ops[static_cast<std::size_t>(pos - 2)]);
        if (pos == i) {
            for (int k = 1; k <= n2; ++k) {
                if (k > 1)
                    ops.push_back(w2.ops[static_cast<std::size_t>(k - 2)]);
                letters.push_back(w2.letters(k) + at - 1);
            }
            continue;
        }
        const int l = w1.letters(pos);
        letters.push_back(l < at ? l : l + n2 - 1);
    }
    return PqWord{Permutation(std::move(letters)), std::move(ops)};
}

PqWord substitute_pq(const PqWord &w1, int label, const PqWord &w2)
{
    const auto im = w1.letters.images();
    const auto it = std::find(im.begin(), im.end(), label);
    if (it == im.end())
        throw std::out_of_range("substitute_pq: label " + std::to_string(label) + " not present");
    return compose_pq(w1, static_cast<int>(it - im.begin()) + 1, w2);
}

PqWord act(const Permutation &g, const PqWord &w)
{
    check_word(w);
    if (g.size() != w.degree())
        throw std::invalid_argument("act: permutation size does not match word degree");
    return PqWord{g * w.letters, w.ops};
}

} // namespace mutid
