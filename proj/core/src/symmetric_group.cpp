#include <mutid/error.hpp>
#include <mutid/monomial.hpp>
#include <mutid/symmetric_group.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mutid
{

namespace
{

void partitions_rec(int remaining, int max_part, Partition &cur, std::vector<Partition> &out)
{
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(int n)
{
    if (n < 1)
        throw std::invalid_argument("partitions: n must be positive");
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, cur, out);
    return out;
}

int partition_size(const Partition &p) { return std::accumulate(p.begin(), p.end(), 0); }

std::string to_string(const Partition &p)
{
    const bool wide = std::any_of(p.begin(), p.end(), [](int x) { return x > 9; });
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (wide && i > 0)
            out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

Partition parse_partition(std::string_view s)
{
    Partition p;
    const bool commas = s.find(',') != std::string_view::npos;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] < '0' || s[i] > '9')
            throw ParseError(std::string("unexpected character '") + s[i] + "' in partition", i + 1);
        if (!commas) {
            p.push_back(s[i] - '0');
            ++i;
            continue;
        }
        int v = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9')
            v = v * 10 + (s[i++] - '0');
        p.push_back(v);
        if (i < s.size()) {
            if (s[i] != ',' || i + 1 == s.size())
                throw ParseError("malformed partition", i + 1);
            ++i;
        }
    }
    if (p.empty())
        throw ParseError("empty partition", 1);
    if (std::any_of(p.begin(), p.end(), [](int x) { return x <= 0; }))
        throw ParseError("partition parts must be positive", 1);
    std::sort(p.rbegin(), p.rend());
    return p;
}

bool dominates(const Partition &a, const Partition &b)
{
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb)
            return false;
    }
    return true;
}

Partition cycle_type(const Permutation &g)
{
    const int n = g.size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    Partition out;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<std::size_t>(i)])
            continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = g(j)) {
            seen[static_cast<std::size_t>(j)] = 1;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<ConjugacyClass> conjugacy_class_reps(int n)
{
    std::vector<ConjugacyClass> out;
    for (const auto &mu : partitions(n)) {
        std::vector<int> images(static_cast<std::size_t>(n));
        int start = 1;
        for (int len : mu) {
            for (int k = 0; k < len; ++k)
                images[static_cast<std::size_t>(start + k - 1)] = start + (k + 1) % len;
            start += len;
        }
        // z_mu = prod_i i^{m_i} m_i!
        std::size_t z = 1;
        std::map<int, int> mult;
        for (int len : mu)
            ++mult[len];
        for (const auto &[len, m] : mult) {
            for (int k = 0; k < m; ++k)
                z *= static_cast<std::size_t>(len);
            z *= factorial(m);
        }
        out.push_back({mu, Permutation(std::move(images)), factorial(n) / z});
    }
    return out;
}

std::int64_t character_value(const Partition &lambda, const Partition &mu)
{
    if (partition_size(lambda) != partition_size(mu))
        throw std::invalid_argument("character_value: partitions of different sizes");
    if (mu.empty())
        return 1;
    const int k = static_cast<int>(lambda.size());
    std::set<int> beta;
    for (int i = 0; i < k; ++i)
        beta.insert(lambda[static_cast<std::size_t>(i)] + k - 1 - i);
    const int r = mu.front();
    const Partition rest(mu.begin() + 1, mu.end());
    std::int64_t total = 0;
    for (int b : beta) {
        const int nb = b - r;
        if (nb < 0 || beta.count(nb))
            continue;
        int between = 0;
        for (int g : beta)
            if (g > nb && g < b)
                ++between;
        std::set<int> moved = beta;
        moved.erase(b);
        moved.insert(nb);
        Partition smaller;
        int idx = 0;
        for (auto it = moved.rbegin(); it != moved.rend(); ++it, ++idx) {
            const int part = *it - (k - 1 - idx);
            if (part > 0)
                smaller.push_back(part);
        }
        const std::int64_t sign = (between % 2) ? -1 : 1;
        total += sign * character_value(smaller, rest);
    }
    return total;
}

std::size_t irrep_dimension(const Partition &lambda)
{
    const int n = partition_size(lambda);
    std::size_t hooks = 1;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            int below = 0;
            for (std::size_t r = i + 1; r < lambda.size() && lambda[r] > j; ++r)
                ++below;
            hooks *= static_cast<std::size_t>(lambda[i] - j - 1 + below + 1);
        }
    return factorial(n) / hooks;
}

std::size_t CharacterTable::index_of(const Partition &p) const
{
    auto it = std::find(partitions.begin(), partitions.end(), p);
    if (it == partitions.end())
        throw std::invalid_argument("CharacterTable: unknown partition " + to_string(p));
    return static_cast<std::size_t>(it - partitions.begin());
}

const CharacterTable &character_table(int n)
{
    if (n < 1 || n > max_character_table_degree)
        throw std::out_of_range("character_table: degree " + std::to_string(n) +
                                " outside 1.." + std::to_string(max_character_table_degree));
    static std::array<std::unique_ptr<CharacterTable>, max_character_table_degree + 1> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto &slot = cache[static_cast<std::size_t>(n)];
    if (!slot) {
        auto t = std::make_unique<CharacterTable>();
        t->n = n;
        t->partitions = partitions(n);
        t->classes = conjugacy_class_reps(n);
        for (const auto &lambda : t->partitions) {
            std::vector<std::int64_t> row;
            for (const auto &c : t->classes)
                row.push_back(character_value(lambda, c.cycle_type));
            t->values.push_back(std::move(row));
        }
        slot = std::move(t);
    }
    return *slot;
}

nlohmann::json to_json(const CharacterTable &t)
{
    nlohmann::json j;
    j["n"] = t.n;
    j["partitions"] = nlohmann::json::array();
    j["class_sizes"] = nlohmann::json::array();
    for (const auto &p : t.partitions)
        j["partitions"].push_back(p);
    for (const auto &c : t.classes)
        j["class_sizes"].push_back(c.size);
    j["dimensions"] = nlohmann::json::array();
    for (const auto &p : t.partitions)
        j["dimensions"].push_back(irrep_dimension(p));
    j["characters"] = t.values;
    return j;
}

IndexAction monomial_action()
{
    return [](const Permutation &g) { return monomial_index_action(g); };
}

std::uint32_t module_trace(const std::vector<std::uint32_t> &inverse_action, const ModEchelon &basis)
{
    const PrimeField &f = basis.field();
    std::uint32_t tr = 0;
    for (std::size_t k = 0; k < basis.rank(); ++k)
        tr = f.add(tr, basis.row(k)[inverse_action[basis.pivot_of(k)]]);
    return tr;
}

std::uint32_t module_trace(const Permutation &g, const ModEchelon &basis, const IndexAction &action)
{
    const auto inv = action(g.inverse());
    if (inv.size() != basis.cols())
        throw std::invalid_argument("module_trace: action does not match the ambient dimension");
    return module_trace(inv, basis);
}

void check_invariance(const ModEchelon &basis, int n, std::size_t sample_rows, const IndexAction &action)
{
    if (n < 2 || basis.rank() == 0)
        return;
    std::vector<int> swap(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
    std::iota(swap.begin(), swap.end(), 1);
    std::swap(swap[0], swap[1]);
    for (int i = 0; i < n; ++i)
        cycle[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
    const std::size_t rows = std::min(sample_rows, basis.rank());
    std::vector<std::uint32_t> v(basis.cols());
    for (const auto &g : {Permutation(swap), Permutation(cycle)}) {
        const auto pi = action(g);
        for (std::size_t k = 0; k < rows; ++k) {
            const auto r = basis.row(k * basis.rank() / rows);
            for (std::size_t j = 0; j < r.size(); ++j)
                v[pi[j]] = r[j];
            if (!basis.reduce(v))
                throw ConsistencyError("module is not invariant under the symmetric group");
        }
    }
}

MultiplicityVector multiplicities_from_traces(const std::vector<std::uint32_t> &traces, int n,
                                              const PrimeField &field)
{
    const auto &table = character_table(n);
    if (traces.size() != table.classes.size())
        throw std::invalid_argument("multiplicities_from_traces: one trace per class expected");
    if (field.modulus() <= static_cast<std::uint32_t>(n))
        throw std::invalid_argument("multiplicities_from_traces: the prime must exceed the degree");
    const std::uint32_t inv_order = field.inv(field.reduce(static_cast<std::int64_t>(factorial(n))));
    MultiplicityVector out;
    for (std::size_t l = 0; l < table.partitions.size(); ++l) {
        std::uint32_t s = 0;
        for (std::size_t c = 0; c < table.classes.size(); ++c) {
            const std::uint32_t weight = field.mul(
                field.reduce(static_cast<std::int64_t>(table.classes[c].size)),
                field.reduce(table.values[l][c]));
            s = field.add(s, field.mul(weight, traces[c]));
        }
        out.push_back(field.mul(s, inv_order));
    }
    return out;
}

std::int64_t module_dimension(const MultiplicityVector &m, int n)
{
    const auto &table = character_table(n);
    std::int64_t d = 0;
    for (std::size_t l = 0; l < m.size(); ++l)
        d += m[l] * static_cast<std::int64_t>(irrep_dimension(table.partitions[l]));
    return d;
}

MultiplicityVector module_multiplicities(const ModEchelon &basis, int n, const IndexAction &action)
{
    const auto &table = character_table(n);
    std::vector<std::uint32_t> traces;
    for (const auto &c : table.classes)
        traces.push_back(module_trace(c.representative, basis, action));
    auto m = multiplicities_from_traces(traces, n, basis.field());
    if (module_dimension(m, n) != static_cast<std::int64_t>(basis.rank()))
        throw ConsistencyError("multiplicities do not add up to the module dimension " +
                               std::to_string(basis.rank()));
    return m;
}

MultiplicityVector module_multiplicities(const ModRcf &basis, int n, const PrimeField &field,
                                         const IndexAction &action)
{
    return module_multiplicities(ModEchelon(basis, field), n, action);
}

} // namespace mutid
