#ifndef MUTID_TREE_HPP
#define MUTID_TREE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mutid
{

// A complete rooted plane binary tree, i.e. an association type.  Stored as
// its preorder code: 1 for an internal node, 0 for a leaf.
class Tree
{
public:
    // Default-constructed tree is the single leaf.
    Tree();

    static Tree leaf() { return Tree(); }
    static Tree node(const Tree &left, const Tree &right);
    // Throws std::invalid_argument unless `code` is a complete preorder code.
    static Tree from_code(std::vector<std::uint8_t> code);

    int degree() const noexcept { return m_degree; }
    bool is_leaf() const noexcept { return m_code.size() == 1; }
    // Precondition: !is_leaf().
    Tree left() const;
    Tree right() const;

    std::span<const std::uint8_t> code() const noexcept { return m_code; }

    friend bool operator==(const Tree &a, const Tree &b) { return a.m_code == b.m_code; }

private:
    friend Tree compose_trees(const Tree &t1, int i, const Tree &t2);

    explicit Tree(std::vector<std::uint8_t> code);
    std::size_t left_end() const;

    std::vector<std::uint8_t> m_code;
    int m_degree = 1;
};

// Basis order on trees of equal degree: root split with the larger left part
// first, then the left subtrees, then the right subtrees, recursively.
std::strong_ordering shape_order(const Tree &a, const Tree &b);

std::size_t catalan(int n);

// All trees of degree n in basis order (cached; n >= 1, n <= 14).
const std::vector<Tree> &enumerate_trees(int n);
// Position of t in enumerate_trees(t.degree()).
std::size_t tree_index(const Tree &t);

// Bracket string over '*' with the outermost parentheses omitted.
std::string to_association_type(const Tree &t);
// Accepts '*' and U+2217 as leaves.  Throws ParseError with a 1-based column.
Tree parse_association_type(std::string_view s);

// Grafts `t2` onto leaf i (1-based, left to right) of `t1`.
Tree compose_trees(const Tree &t1, int i, const Tree &t2);

// Result of parsing a bracket term: the shape plus the leaf tokens left to
// right (0 for an anonymous leaf, 1.. for letters a..z).
struct ParsedBracket
{
    Tree shape;
    std::vector<int> leaves;
};

ParsedBracket parse_bracket(std::string_view s, bool allow_letters, bool allow_star);

} // namespace mutid

#endif
