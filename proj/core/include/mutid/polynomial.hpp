#ifndef MUTID_POLYNOMIAL_HPP
#define MUTID_POLYNOMIAL_HPP

#include <mutid/monomial.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace mutid
{

inline std::size_t pq_basis_size(int n)
{
    return (std::size_t{1} << static_cast<unsigned>(n - 1)) * factorial(n);
}

// Basis tags.  A Combination is a sparse vector in the basis named by its tag.
struct MonomialSpace
{
    static std::size_t dimension(int n) { return monomial_basis_size(n); }
};

struct PqSpace
{
    static std::size_t dimension(int n) { return pq_basis_size(n); }
};

// Sparse linear combination of basis elements of one degree.  No zero
// coefficients are stored.  T is the coefficient ring (std::int64_t,
// mpz_class, mpq_class).
template <typename Space, typename T>
class Combination
{
public:
    using coefficient_type = T;
    using map_type = std::map<std::size_t, T>;

    Combination() = default;
    explicit Combination(int degree) : m_degree(degree) {}

    int degree() const noexcept { return m_degree; }
    const map_type &terms() const noexcept { return m_terms; }
    std::size_t size() const noexcept { return m_terms.size(); }
    bool is_zero() const noexcept { return m_terms.empty(); }

    T coefficient(std::size_t index) const
    {
        auto it = m_terms.find(index);
        return it == m_terms.end() ? T(0) : it->second;
    }

    void add(std::size_t index, const T &c)
    {
        if (index >= Space::dimension(m_degree))
            throw std::out_of_range("Combination::add: index " + std::to_string(index) +
                                    " outside the degree-" + std::to_string(m_degree) + " basis");
        if (c == 0)
            return;
        auto [it, inserted] = m_terms.emplace(index, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                m_terms.erase(it);
        }
    }

    Combination &operator+=(const Combination &o)
    {
        check_degree(o);
        for (const auto &[i, c] : o.m_terms)
            add(i, c);
        return *this;
    }

    Combination &operator-=(const Combination &o)
    {
        check_degree(o);
        for (const auto &[i, c] : o.m_terms)
            add(i, -c);
        return *this;
    }

    Combination &operator*=(const T &s)
    {
        if (s == 0) {
            m_terms.clear();
            return *this;
        }
        for (auto &[i, c] : m_terms)
            c *= s;
        return *this;
    }

    friend Combination operator+(Combination a, const Combination &b) { return a += b; }
    friend Combination operator-(Combination a, const Combination &b) { return a -= b; }
    friend Combination operator*(const T &s, Combination a) { return a *= s; }
    friend Combination operator-(Combination a)
    {
        for (auto &[i, c] : a.m_terms)
            c = -c;
        return a;
    }

    friend bool operator==(const Combination &a, const Combination &b)
    {
        return a.m_degree == b.m_degree && a.m_terms == b.m_terms;
    }

private:
    void check_degree(const Combination &o) const
    {
        if (o.m_degree != m_degree)
            throw std::invalid_argument("Combination: degree mismatch " +
                                        std::to_string(m_degree) + " vs " +
                                        std::to_string(o.m_degree));
    }

    int m_degree = 0;
    map_type m_terms;
};

template <typename T>
using NonassocPolynomial = Combination<MonomialSpace, T>;
template <typename T>
using PqPolynomial = Combination<PqSpace, T>;

using IntPolynomial = NonassocPolynomial<std::int64_t>;

template <typename T>
NonassocPolynomial<T> monomial_polynomial(const LabelledMonomial &m, const T &c = T(1))
{
    NonassocPolynomial<T> p(m.degree());
    p.add(monomial_index(m), c);
    return p;
}

// Linear extension of act() to polynomials.
template <typename T>
NonassocPolynomial<T> act(const Permutation &g, const NonassocPolynomial<T> &f)
{
    if (g.size() != f.degree())
        throw std::invalid_argument("act: permutation size does not match polynomial degree");
    NonassocPolynomial<T> out(f.degree());
    for (const auto &[i, c] : f.terms())
        out.add(monomial_index(act(g, monomial_from_index(f.degree(), i))), c);
    return out;
}

// Linear extension of substitute() in the first argument; m2 is a monomial
// (typically the generator ab).
template <typename T>
NonassocPolynomial<T> substitute(const NonassocPolynomial<T> &f, int label, const LabelledMonomial &m2)
{
    NonassocPolynomial<T> out(f.degree() + m2.degree() - 1);
    for (const auto &[i, c] : f.terms())
        out.add(monomial_index(substitute(monomial_from_index(f.degree(), i), label, m2)), c);
    return out;
}

// Linear extension of compose_labelled(m1, i, .) in the second argument.
template <typename T>
NonassocPolynomial<T> compose_labelled(const LabelledMonomial &m1, int i, const NonassocPolynomial<T> &f)
{
    NonassocPolynomial<T> out(m1.degree() + f.degree() - 1);
    for (const auto &[j, c] : f.terms())
        out.add(monomial_index(compose_labelled(m1, i, monomial_from_index(f.degree(), j))), c);
    return out;
}

} // namespace mutid

#endif
