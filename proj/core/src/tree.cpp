#include <mutid/error.hpp>
#include <mutid/tree.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace mutid
{

Tree::Tree() : m_code{0}, m_degree(1) {}

Tree::Tree(std::vector<std::uint8_t> code) : m_code(std::move(code))
{
    m_degree = 0;
    for (auto c : m_code)
        if (c == 0)
            ++m_degree;
}

Tree Tree::from_code(std::vector<std::uint8_t> code)
{
    int need = 1;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (need == 0 || code[i] > 1)
            throw std::invalid_argument("Tree::from_code: malformed preorder code");
        need += code[i] ? 1 : -1;
    }
    if (need != 0)
        throw std::invalid_argument("Tree::from_code: incomplete preorder code");
    return Tree(std::move(code));
}

Tree Tree::node(const Tree &left, const Tree &right)
{
    std::vector<std::uint8_t> code;
    code.reserve(1 + left.m_code.size() + right.m_code.size());
    code.push_back(1);
    code.insert(code.end(), left.m_code.begin(), left.m_code.end());
    code.insert(code.end(), right.m_code.begin(), right.m_code.end());
    return Tree(std::move(code));
}

// End (exclusive) of the left subtree's code inside m_code.
std::size_t Tree::left_end() const
{
    int need = 1;
    std::size_t pos = 1;
    while (need > 0) {
        need += m_code[pos] ? 1 : -1;
        ++pos;
    }
    return pos;
}

Tree Tree::left() const
{
    if (is_leaf())
        throw std::logic_error("Tree::left on a leaf");
    const auto end = left_end();
    return Tree(std::vector<std::uint8_t>(m_code.begin() + 1, m_code.begin() + static_cast<std::ptrdiff_t>(end)));
}

Tree Tree::right() const
{
    if (is_leaf())
        throw std::logic_error("Tree::right on a leaf");
    const auto end = left_end();
    return Tree(std::vector<std::uint8_t>(m_code.begin() + static_cast<std::ptrdiff_t>(end), m_code.end()));
}

std::strong_ordering shape_order(const Tree &a, const Tree &b)
{
    if (a.degree() != b.degree())
        return b.degree() <=> a.degree();
    if (a.is_leaf())
        return std::strong_ordering::equal;
    const Tree al = a.left(), bl = b.left();
    if (al.degree() != bl.degree())
        return bl.degree() <=> al.degree();
    if (auto c = shape_order(al, bl); c != 0)
        return c;
    return shape_order(a.right(), b.right());
}

std::size_t catalan(int n)
{
    if (n < 1)
        return 0;
    // C_{n-1} = binom(2n-2, n-1) / n
    std::size_t c = 1;
    for (int k = 0; k < n - 1; ++k)
        c = c * static_cast<std::size_t>(2 * (2 * k + 1)) / static_cast<std::size_t>(k + 2);
    return c;
}

namespace
{

struct TreeCache
{
    std::mutex mutex;
    std::map<int, std::unique_ptr<std::vector<Tree>>> by_degree;
    std::map<int, std::unique_ptr<std::unordered_map<std::string, std::size_t>>> index;
};

TreeCache &tree_cache()
{
    static TreeCache cache;
    return cache;
}

std::vector<Tree> build_trees(int n)
{
    if (n == 1)
        return {Tree::leaf()};
    std::vector<Tree> out;
    for (int left = n - 1; left >= 1; --left) {
        const auto &ls = enumerate_trees(left);
        const auto &rs = enumerate_trees(n - left);
        for (const auto &l : ls)
            for (const auto &r : rs)
                out.push_back(Tree::node(l, r));
    }
    return out;
}

std::string code_key(const Tree &t)
{
    auto c = t.code();
    return std::string(c.begin(), c.end());
}

} // namespace

const std::vector<Tree> &enumerate_trees(int n)
{
    if (n < 1)
        throw std::invalid_argument("enumerate_trees: degree must be at least 1");
    if (n > 14)
        throw ResourceLimit("enumerate_trees: degree above 14 is not supported");
    auto &cache = tree_cache();
    {
        std::lock_guard lock(cache.mutex);
        if (auto it = cache.by_degree.find(n); it != cache.by_degree.end())
            return *it->second;
    }
    // Build outside the lock: recursion re-enters for smaller degrees.
    auto trees = std::make_unique<std::vector<Tree>>(build_trees(n));
    auto index = std::make_unique<std::unordered_map<std::string, std::size_t>>();
    for (std::size_t i = 0; i < trees->size(); ++i)
        index->emplace(code_key((*trees)[i]), i);
    std::lock_guard lock(cache.mutex);
    auto [it, inserted] = cache.by_degree.emplace(n, std::move(trees));
    if (inserted)
        cache.index.emplace(n, std::move(index));
    return *it->second;
}

std::size_t tree_index(const Tree &t)
{
    enumerate_trees(t.degree());
    auto &cache = tree_cache();
    std::lock_guard lock(cache.mutex);
    return cache.index.at(t.degree())->at(code_key(t));
}

namespace
{

void write_type(const Tree &t, std::string &out, bool outer)
{
    if (t.is_leaf()) {
        out += '*';
        return;
    }
    if (!outer)
        out += '(';
    write_type(t.left(), out, false);
    write_type(t.right(), out, false);
    if (!outer)
        out += ')';
}

class BracketParser
{
public:
    BracketParser(std::string_view s, bool letters, bool star)
        : m_s(s), m_letters(letters), m_star(star)
    {
    }

    ParsedBracket run()
    {
        std::vector<Tree> terms;
        const std::size_t start = column();
        skip_space();
        while (!at_end()) {
            if (peek() == ')')
                throw ParseError("unbalanced parentheses: unexpected ')'", column());
            terms.push_back(term());
            skip_space();
        }
        if (terms.empty())
            throw ParseError("empty monomial", start);
        if (terms.size() > 2)
            throw ParseError("trailing input: more than two top-level terms", m_term_starts[2]);
        ParsedBracket out;
        out.shape = terms.size() == 1 ? terms[0] : Tree::node(terms[0], terms[1]);
        out.leaves = std::move(m_leaves);
        return out;
    }

private:
    bool at_end() const { return m_pos >= m_s.size(); }
    char peek() const { return m_s[m_pos]; }
    std::size_t column() const { return m_col; }

    void advance(std::size_t bytes)
    {
        m_pos += bytes;
        ++m_col;
    }

    void skip_space()
    {
        while (!at_end() && (peek() == ' ' || peek() == '\t'))
            advance(1);
    }

    bool at_star_glyph() const
    {
        return m_s.substr(m_pos, 3) == "\xE2\x88\x97";
    }

    Tree term()
    {
        skip_space();
        if (m_depth == 0)
            m_term_starts.push_back(column());
        if (at_end())
            throw ParseError("unexpected end of input", column());
        const char c = peek();
        if (c == '(') {
            const std::size_t open_col = column();
            advance(1);
            ++m_depth;
            std::vector<Tree> inner;
            skip_space();
            while (!at_end() && peek() != ')') {
                inner.push_back(term());
                skip_space();
            }
            if (at_end())
                throw ParseError("unbalanced parentheses: '(' is never closed", open_col);
            --m_depth;
            if (inner.empty())
                throw ParseError("empty group '()'", open_col);
            if (inner.size() != 2)
                throw ParseError("a group must contain exactly two terms, found " +
                                     std::to_string(inner.size()),
                                 open_col);
            advance(1);
            return Tree::node(inner[0], inner[1]);
        }
        if (c == '*' && m_star) {
            advance(1);
            m_leaves.push_back(0);
            return Tree::leaf();
        }
        if (m_star && at_star_glyph()) {
            advance(3);
            m_leaves.push_back(0);
            return Tree::leaf();
        }
        if (m_letters && c >= 'a' && c <= 'z') {
            advance(1);
            m_leaves.push_back(c - 'a' + 1);
            return Tree::leaf();
        }
        throw ParseError(std::string("unexpected character '") + c + "'", column());
    }

    std::string_view m_s;
    bool m_letters;
    bool m_star;
    std::size_t m_pos = 0;
    std::size_t m_col = 1;
    int m_depth = 0;
    std::vector<int> m_leaves;
    std::vector<std::size_t> m_term_starts;
};

} // namespace

std::string to_association_type(const Tree &t)
{
    std::string out;
    write_type(t, out, true);
    return out;
}

ParsedBracket parse_bracket(std::string_view s, bool allow_letters, bool allow_star)
{
    return BracketParser(s, allow_letters, allow_star).run();
}

Tree parse_association_type(std::string_view s) { return parse_bracket(s, false, true).shape; }

Tree compose_trees(const Tree &t1, int i, const Tree &t2)
{
    if (i < 1 || i > t1.degree())
        throw std::out_of_range("compose_trees: position " + std::to_string(i) +
                                " outside 1.." + std::to_string(t1.degree()));
    auto c1 = t1.code();
    auto c2 = t2.code();
    std::vector<std::uint8_t> code;
    code.reserve(c1.size() + c2.size() - 1);
    int leaf = 0;
    for (auto c : c1) {
        if (c == 0 && ++leaf == i)
            code.insert(code.end(), c2.begin(), c2.end());
        else
            code.push_back(c);
    }
    return Tree(std::move(code));
}

} // namespace mutid
