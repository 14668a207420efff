#ifndef MUTID_PERMUTATION_HPP
#define MUTID_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mutid
{

// A permutation of {1, ..., n} stored by its image sequence alpha(1..n).
class Permutation
{
public:
    Permutation() = default;
    // Throws std::invalid_argument unless `images` is a bijection of 1..n.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // The permutation with the given lexicographic rank among all of S_n.
    static Permutation unrank(int n, std::size_t rank);

    int size() const noexcept { return static_cast<int>(m_images.size()); }
    // 1-based: operator()(i) = alpha(i).
    int operator()(int i) const { return m_images[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> images() const noexcept { return m_images; }

    int sign() const;
    Permutation inverse() const;
    std::size_t lex_rank() const;

    // (this * other)(i) = this(other(i)).
    Permutation operator*(const Permutation &other) const;

    friend bool operator==(const Permutation &, const Permutation &) = default;
    friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
    std::vector<int> m_images;
};

std::size_t factorial(int n);

// Lexicographic rank of an arrangement of 1..n given as a label sequence.
// The sequence is not validated.
std::size_t lex_rank(std::span<const int> seq);
// Writes the arrangement of 1..n with the given rank into `out` (size n).
void lex_unrank(std::size_t rank, std::span<int> out);
// Parity of the arrangement, +1 or -1.
int sequence_sign(std::span<const int> seq);

// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

} // namespace mutid

#endif
