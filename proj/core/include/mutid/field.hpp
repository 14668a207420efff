#ifndef MUTID_FIELD_HPP
#define MUTID_FIELD_HPP

#include <cstdint>

#include <gmpxx.h>

namespace mutid
{

inline constexpr std::uint32_t default_prime = 1009;

bool is_prime(std::uint64_t n);

// GF(p) for a prime p < 2^31.  Elements are uint32 values in [0, p).
class PrimeField
{
public:
    // Throws std::invalid_argument if p is not a prime below 2^31.
    explicit PrimeField(std::uint32_t p = default_prime);

    std::uint32_t modulus() const noexcept { return m_p; }

    std::uint32_t reduce(std::int64_t v) const noexcept
    {
        const std::int64_t r = v % static_cast<std::int64_t>(m_p);
        return static_cast<std::uint32_t>(r < 0 ? r + m_p : r);
    }
    std::uint32_t reduce(const mpz_class &v) const;
    // Throws std::domain_error if the denominator vanishes mod p.
    std::uint32_t reduce(const mpq_class &v) const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept
    {
        const std::uint32_t s = a + b;
        return s >= m_p ? s - m_p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept
    {
        return a >= b ? a - b : a + m_p - b;
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : m_p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept
    {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % m_p);
    }
    // Throws std::domain_error on zero.
    std::uint32_t inv(std::uint32_t a) const;

    // Symmetric lift to (-p/2, p/2].
    std::int64_t lift_symmetric(std::uint32_t a) const noexcept
    {
        return a > m_p / 2 ? static_cast<std::int64_t>(a) - m_p : static_cast<std::int64_t>(a);
    }

    friend bool operator==(const PrimeField &, const PrimeField &) = default;

private:
    std::uint32_t m_p;
};

} // namespace mutid

#endif
