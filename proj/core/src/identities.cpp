#include <mutid/error.hpp>
#include <mutid/identities.hpp>
#include <mutid/symmetric_group.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace mutid
{

namespace
{

// Free nonassociative algebra on letters, keyed by fully parenthesised words.
using Expr = std::map<std::string, std::int64_t>;

Expr var(char c) { return Expr{{std::string(1, c), 1}}; }

void accumulate(Expr &into, const std::string &key, std::int64_t c)
{
    if (c == 0)
        return;
    auto &v = into[key];
    v += c;
    if (v == 0)
        into.erase(key);
}

Expr operator*(const Expr &x, const Expr &y)
{
    Expr out;
    for (const auto &[a, ca] : x)
        for (const auto &[b, cb] : y)
            accumulate(out, "(" + a + b + ")", ca * cb);
    return out;
}

Expr operator+(Expr x, const Expr &y)
{
    for (const auto &[k, c] : y)
        accumulate(x, k, c);
    return x;
}

Expr operator-(Expr x, const Expr &y)
{
    for (const auto &[k, c] : y)
        accumulate(x, k, -c);
    return x;
}

Expr associator(const Expr &x, const Expr &y, const Expr &z) { return (x * y) * z - x * (y * z); }
Expr anticommutator(const Expr &x, const Expr &y) { return x * y + y * x; }

Expr lie_admissible(const Expr &x, const Expr &y, const Expr &z)
{
    return associator(x, y, z) - associator(x, z, y) - associator(y, x, z) + associator(y, z, x) +
           associator(z, x, y) - associator(z, y, x);
}

IntPolynomial to_polynomial(const Expr &e)
{
    int degree = 0;
    IntPolynomial out;
    for (const auto &[key, c] : e) {
        const std::string_view body =
            key.size() > 1 ? std::string_view(key).substr(1, key.size() - 2) : std::string_view(key);
        const LabelledMonomial m = parse_monomial(body);
        if (degree == 0) {
            degree = m.degree();
            out = IntPolynomial(degree);
        }
        out.add(monomial_index(m), c);
    }
    return out;
}

struct Term
{
    std::int64_t coefficient;
    const char *monomial;
};

// Sum over g in the group of sign(g) * g(terms); the group permutes the
// labels in `first` and independently those in `second`.
IntPolynomial double_sum(int n, const std::vector<Term> &terms, const std::vector<int> &first,
                         const std::vector<int> &second, bool sign_on_second)
{
    IntPolynomial base(n);
    for (const auto &t : terms) {
        const LabelledMonomial m = parse_monomial(t.monomial);
        if (m.degree() != n)
            throw std::logic_error("builtin term of wrong degree");
        base.add(monomial_index(m), t.coefficient);
    }
    IntPolynomial out(n);
    for (const auto &s : all_permutations(static_cast<int>(first.size())))
        for (const auto &t : all_permutations(static_cast<int>(second.size()))) {
            std::vector<int> img(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                img[static_cast<std::size_t>(i)] = i + 1;
            for (std::size_t k = 0; k < first.size(); ++k)
                img[static_cast<std::size_t>(first[k] - 1)] = first[static_cast<std::size_t>(s(static_cast<int>(k) + 1) - 1)];
            for (std::size_t k = 0; k < second.size(); ++k)
                img[static_cast<std::size_t>(second[k] - 1)] = second[static_cast<std::size_t>(t(static_cast<int>(k) + 1) - 1)];
            IntPolynomial term = act(Permutation(std::move(img)), base);
            if (sign_on_second && t.sign() < 0)
                term *= -1;
            out += term;
        }
    return out;
}

const std::vector<Term> t_terms = {
    {1, "(((ac)d)b)e"}, {1, "(((cd)a)e)b"}, {-1, "((a(cd))b)e"}, {1, "((c(ad))b)e"},
    {-1, "((ca)(db))e"}, {-1, "((ca)(de))b"}, {1, "((cd)(ea))b"}, {-1, "(c((de)a))b"},
    {-1, "((cd)a)(eb)"}, {1, "(ca)((de)b)"}, {-1, "c(((ad)e)b)"}, {1, "c((a(de))b)"},
    {-1, "c((d(ae))b)"}, {1, "c((da)(eb))"},
};

const std::vector<Term> u_terms = {
    {1, "(((ab)c)d)e"}, {-1, "(((ab)c)e)d"}, {-1, "(((ac)b)d)e"}, {1, "(((ac)b)e)d"},
    {1, "(((ae)b)c)d"}, {-1, "(((ac)e)b)d"}, {-1, "(((ae)c)b)d"}, {1, "(((ac)e)d)b"},
    {1, "(((ca)b)d)e"}, {-1, "(((ca)d)b)e"}, {1, "((a(cb))d)e"}, {1, "((a(ce))b)d"},
    {-1, "((a(ce))d)b"}, {-1, "((c(ab))d)e"}, {1, "(a(b(ce)))d"}, {-2, "(a(c(be)))d"},
    {-1, "(a(c(db)))e"}, {1, "(c(a(be)))d"}, {1, "(c(a(db)))e"}, {-1, "((ab)c)(de)"},
    {1, "((ac)b)(de)"}, {-1, "((ca)d)(be)"}, {1, "((cd)a)(be)"}, {-1, "(a(cb))(de)"},
    {1, "(c(ab))(de)"}, {-1, "(ac)(b(de))"}, {-1, "(ae)(b(cd))"}, {1, "(ac)(d(be))"},
    {1, "(ae)(c(bd))"}, {-1, "(ca)(b(de))"}, {1, "(ca)(d(be))"}, {1, "c((a(db))e)"},
    {-1, "c((d(ab))e)"}, {1, "a(c((be)d))"}, {1, "a(c((db)e))"}, {-1, "c(a((be)d))"},
    {-1, "c(a((db)e))"}, {1, "a(c(b(de)))"}, {-1, "a(c(d(be)))"},
};

const std::vector<Term> v_terms = {
    {1, "(((ae)c)b)d"}, {-1, "(((ac)d)e)b"}, {1, "(((ac)e)d)b"}, {-1, "(((ae)c)d)b"},
    {1, "((a(cb))d)e"}, {-1, "((c(ab))d)e"}, {-1, "((c(da))b)e"}, {1, "((ac)(de))b"},
    {1, "((cd)(ae))b"}, {-1, "(a((cb)d))e"}, {-1, "(a((cb)e))d"}, {1, "(c((ab)d))e"},
    {1, "(c((ab)e))d"}, {1, "(c((da)b))e"}, {1, "(a(c(be)))d"}, {-1, "(c(a(de)))b"},
    {-1, "((ae)c)(bd)"}, {1, "((ca)b)(de)"}, {1, "((ca)b)(ed)"}, {-1, "(a(be))(cd)"},
    {1, "(a(cd))(be)"}, {-1, "(a(ce))(db)"}, {-1, "(c(ab))(ed)"}, {-1, "(ab)((ce)d)"},
    {1, "(ae)((cd)b)"}, {-1, "(cd)((ae)b)"}, {-1, "(ac)(d(be))"}, {-1, "(ca)(b(de))"},
    {-2, "(ca)(b(ed))"}, {-1, "a(((bc)d)e)"}, {1, "a(((bc)e)d)"}, {1, "a(((cb)e)d)"},
    {-1, "c(((ab)e)d)"}, {-1, "a((c(be))d)"}, {1, "c((a(de))b)"}, {-1, "c((d(ab))e)"},
    {1, "a((bc)(de))"}, {1, "a((be)(cd))"}, {1, "a((cb)(de))"}, {1, "a((cb)(ed))"},
    {-1, "c((ab)(de))"}, {1, "c((ab)(ed))"}, {-1, "a(c((bd)e))"}, {1, "c(a((bd)e))"},
    {1, "c(d((ab)e))"}, {-1, "a(c(b(ed)))"}, {1, "c(a(b(ed)))"},
};

Identity make_builtin(const std::string &name)
{
    const Expr a = var('a'), b = var('b'), c = var('c'), d = var('d');
    if (name == "L")
        return {name, to_polynomial(lie_admissible(a, b, c))};
    if (name == "J") {
        auto o = anticommutator;
        return {name, to_polynomial(o(o(o(b, c), a), d) + o(o(o(b, d), a), c) + o(o(o(c, d), a), b) -
                                    o(o(a, b), o(c, d)) - o(o(a, c), o(b, d)) - o(o(a, d), o(b, c)))};
    }
    if (name == "H") {
        Expr e = (associator(a, c, b) + associator(b, a, c) + associator(c, b, a)) * d;
        const Expr xs[3] = {a, b, c};
        for (const auto &s : all_permutations(3)) {
            const Expr &x = xs[s(1) - 1], &y = xs[s(2) - 1], &z = xs[s(3) - 1];
            e = e - ((x * y) * (z * d) - x * ((y * z) * d));
        }
        return {name, to_polynomial(e)};
    }
    if (name == "I") {
        const Expr bc = b * c;
        return {name, to_polynomial(associator(bc, a, d) - associator(a, bc, d) + associator(a, d, bc) +
                                    associator(b, anticommutator(a, d), c) -
                                    anticommutator(associator(b, d, c), a) -
                                    anticommutator(associator(b, a, c), d))};
    }
    if (name == "P")
        return {name, to_polynomial(lie_admissible(a * d, b, c))};
    if (name == "Q")
        return {name, to_polynomial(lie_admissible(a, b, c) * d)};
    if (name == "R")
        return {name, to_polynomial(d * lie_admissible(a, b, c))};
    if (name == "T")
        return {name, double_sum(5, t_terms, {1, 2}, {3, 4, 5}, true)};
    if (name == "U")
        return {name, double_sum(5, u_terms, {1, 2}, {3, 4}, false)};
    if (name == "V")
        return {name, double_sum(5, v_terms, {1, 2}, {3, 4}, false)};
    throw std::invalid_argument("unknown builtin identity '" + name + "'");
}

} // namespace

const std::vector<std::string> &builtin_names()
{
    static const std::vector<std::string> names = {"L", "J", "H", "I", "P", "Q", "R", "T", "U", "V"};
    return names;
}

const Identity &builtin(std::string_view name)
{
    static std::map<std::string, std::unique_ptr<Identity>, std::less<>> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(std::string(name), std::make_unique<Identity>(make_builtin(std::string(name)))).first;
    return *it->second;
}

bool verify_identity(const IntPolynomial &f) { return expand_polynomial(f).is_zero(); }

std::vector<Identity> consequences(const Identity &s)
{
    const int n = s.degree();
    const LabelledMonomial omega = parse_monomial("ab");
    std::vector<Identity> out;
    for (int i = 1; i <= n; ++i)
        out.push_back({s.name + " o_" + std::to_string(i) + " w", substitute(s.body, i, omega)});
    out.push_back({"w o_1 " + s.name, compose_labelled(omega, 1, s.body)});
    out.push_back({"w o_2 " + s.name, compose_labelled(omega, 2, s.body)});
    return out;
}

namespace
{

const std::vector<std::vector<std::uint32_t>> &index_actions(int n)
{
    static std::map<int, std::vector<std::vector<std::uint32_t>>> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<std::vector<std::uint32_t>> acts;
        for (const auto &g : all_permutations(n))
            acts.push_back(monomial_index_action(g));
        it = cache.emplace(n, std::move(acts)).first;
    }
    return it->second;
}

std::vector<std::uint32_t> reduce_polynomial(const IntPolynomial &f, const PrimeField &field)
{
    std::vector<std::uint32_t> v(monomial_basis_size(f.degree()));
    for (const auto &[i, c] : f.terms())
        v[i] = field.reduce(c);
    return v;
}

} // namespace

Matrix<std::uint32_t> orbit_rows(std::span<const std::uint32_t> v, int n)
{
    const auto &acts = index_actions(n);
    Matrix<std::uint32_t> rows(acts.size(), v.size());
    for (std::size_t g = 0; g < acts.size(); ++g) {
        auto r = rows.row(g);
        for (std::size_t k = 0; k < v.size(); ++k)
            r[acts[g][k]] = v[k];
    }
    return rows;
}

Matrix<std::uint32_t> orbit_rows(const IntPolynomial &f, const PrimeField &field)
{
    return orbit_rows(reduce_polynomial(f, field), f.degree());
}

IdentityModule module_from_generators(int n, const std::vector<Identity> &gens, const PrimeField &field,
                                      const ProgressHook &progress)
{
    IdentityModule m{n, ModEchelon(monomial_basis_size(n), field), {}};
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto &g = gens[k];
        if (g.degree() != n)
            throw std::invalid_argument("module_from_generators: generator " + g.name + " has degree " +
                                        std::to_string(g.degree()) + ", expected " + std::to_string(n));
        if (progress && !progress(k, gens.size()))
            throw Cancelled("module construction cancelled");
        m.basis.insert_rows(orbit_rows(g.body, field));
        m.provenance.push_back(g.name);
    }
    return m;
}

IdentityModule all_identities_module(int n, const PrimeField &field, const ProgressHook &progress)
{
    if (n > 5)
        throw ResourceLimit("all_identities_module: the dense kernel in degree " + std::to_string(n) +
                            " does not fit in memory; use the symmetrised degree-6 computation");
    const SparseMatrix e = expansion_matrix(n);
    const ModRcf r = rcf(reduce_mod(e, field), field, progress);
    IdentityModule m{n, ModEchelon(monomial_basis_size(n), field), {"ker X_" + std::to_string(n)}};
    m.basis.insert_rows(nullspace_from_rcf(r, field));
    return m;
}

RatRcf all_identities_rational(int n, int max_degree)
{
    if (n > max_degree)
        throw ResourceLimit("all_identities_rational: degree " + std::to_string(n) +
                            " exceeds the rational limit " + std::to_string(max_degree));
    return rcf(nullspace_rcf(expansion_matrix(n).to_dense<mpq_class>()));
}

std::size_t quotient_dimension(const IdentityModule &all, const IdentityModule &old)
{
    if (all.degree != old.degree || all.basis.cols() != old.basis.cols())
        throw std::invalid_argument("quotient_dimension: modules of different degrees");
    for (std::size_t k = 0; k < old.rank(); ++k)
        if (!all.basis.contains(old.basis.row(k)))
            throw ConsistencyError("quotient_dimension: old identities are not contained in all identities");
    return all.rank() - old.rank();
}

GeneratorSearch module_generators(const IdentityModule &all, const IdentityModule &old,
                                  const std::vector<IntPolynomial> &candidates)
{
    const PrimeField &field = all.basis.field();
    const int n = all.degree;
    const std::size_t target = all.rank();
    GeneratorSearch out;
    ModEchelon current = old.basis;
    std::vector<std::vector<std::uint32_t>> reduced;
    for (std::size_t k = 0; k < candidates.size() && current.rank() < target; ++k) {
        auto v = reduce_polynomial(candidates[k], field);
        if (current.contains(v))
            continue;
        current.insert_rows(orbit_rows(v, n));
        out.chosen.push_back(k);
        reduced.push_back(std::move(v));
    }
    out.achieved_rank = current.rank();
    if (current.rank() < target)
        throw ConsistencyError("module_generators: candidates reach rank " + std::to_string(current.rank()) +
                               " of " + std::to_string(target));

    std::vector<char> keep(out.chosen.size(), 1);
    for (std::size_t drop = 0; drop < out.chosen.size(); ++drop) {
        ModEchelon span = old.basis;
        keep[drop] = 0;
        for (std::size_t k = 0; k < out.chosen.size() && span.rank() < target; ++k)
            if (keep[k])
                span.insert_rows(orbit_rows(reduced[k], n));
        if (span.rank() < target)
            keep[drop] = 1;
    }
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < out.chosen.size(); ++k)
        if (keep[k])
            kept.push_back(out.chosen[k]);
    out.chosen = std::move(kept);
    return out;
}

JordanCheck verify_jordan_expression(int omit)
{
    struct Entry
    {
        int sign;
        const char *name;
        const char *args;
    };
    static const Entry terms[] = {
        {-1, "P", "abcd"}, {-1, "P", "acdb"}, {1, "P", "bacd"},  {-1, "P", "badc"}, {1, "P", "bcda"},
        {-1, "P", "cabd"}, {1, "P", "cadb"},  {-1, "P", "cbda"}, {1, "P", "dabc"},  {-1, "P", "dacb"},
        {1, "P", "dbca"},  {1, "Q", "abcd"},  {1, "Q", "acdb"},  {-1, "Q", "bcda"}, {-1, "R", "abcd"},
        {1, "R", "abdc"},  {-1, "R", "acdb"}, {-1, "H", "abcd"}, {-1, "H", "abdc"}, {-1, "H", "acdb"},
        {-1, "H", "bcda"}, {1, "I", "abcd"},  {1, "I", "acdb"},  {1, "I", "adbc"},  {1, "I", "bacd"},
        {1, "I", "badc"},  {1, "I", "cabd"},
    };
    IntPolynomial sum(4);
    int index = 0;
    for (const auto &t : terms) {
        if (index++ == omit)
            continue;
        std::vector<int> img;
        for (const char *p = t.args; *p; ++p)
            img.push_back(*p - 'a' + 1);
        IntPolynomial term = act(Permutation(std::move(img)), builtin(t.name).body);
        if (t.sign < 0)
            term *= -1;
        sum += term;
    }
    JordanCheck out;
    out.residual = sum - builtin("J").body;
    out.holds = out.residual.is_zero();
    return out;
}

} // namespace mutid
