#include <mutid/error.hpp>
#include <mutid/permutation.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mutid
{

ParseError::ParseError(const std::string &what, std::size_t column, std::size_t line)
    : std::runtime_error(line == 0 ? "column " + std::to_string(column) + ": " + what
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + what),
      m_message(what), m_line(line), m_column(column)
{
}

std::size_t factorial(int n)
{
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::size_t>(i);
    return f;
}

Permutation::Permutation(std::vector<int> images) : m_images(std::move(images))
{
    std::vector<char> seen(m_images.size() + 1, 0);
    for (int v : m_images) {
        if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: image sequence is not a bijection of 1..n");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    Permutation p;
    p.m_images = std::move(v);
    return p;
}

Permutation Permutation::unrank(int n, std::size_t rank)
{
    if (rank >= factorial(n))
        throw std::out_of_range("Permutation::unrank: rank out of range");
    std::vector<int> v(static_cast<std::size_t>(n));
    lex_unrank(rank, v);
    Permutation p;
    p.m_images = std::move(v);
    return p;
}

int Permutation::sign() const { return sequence_sign(m_images); }

Permutation Permutation::inverse() const
{
    std::vector<int> inv(m_images.size());
    for (std::size_t i = 0; i < m_images.size(); ++i)
        inv[static_cast<std::size_t>(m_images[i] - 1)] = static_cast<int>(i + 1);
    Permutation p;
    p.m_images = std::move(inv);
    return p;
}

std::size_t Permutation::lex_rank() const { return mutid::lex_rank(m_images); }

Permutation Permutation::operator*(const Permutation &other) const
{
    if (other.size() != size())
        throw std::invalid_argument("Permutation product: size mismatch");
    std::vector<int> v(m_images.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = m_images[static_cast<std::size_t>(other.m_images[i] - 1)];
    Permutation p;
    p.m_images = std::move(v);
    return p;
}

std::size_t lex_rank(std::span<const int> seq)
{
    // Lehmer code; n is small enough that the quadratic scan is fine.
    const std::size_t n = seq.size();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (seq[j] < seq[i])
                ++smaller;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

void lex_unrank(std::size_t rank, std::span<int> out)
{
    const std::size_t n = out.size();
    std::vector<std::size_t> digits(n);
    for (std::size_t i = n; i-- > 0;) {
        const std::size_t base = n - i;
        digits[i] = rank % base;
        rank /= base;
    }
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = pool[digits[i]];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
    }
}

int sequence_sign(std::span<const int> seq)
{
    int inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[j] < seq[i])
                ++inversions;
    return (inversions % 2) ? -1 : 1;
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace mutid
