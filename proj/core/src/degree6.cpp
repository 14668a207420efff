#include "cache.hpp"

#include <mutid/error.hpp>
#include <mutid/pipeline.hpp>
#include <mutid/symmetrize.hpp>

#include <stdexcept>

namespace mutid
{

std::vector<std::vector<std::int64_t>> symmetrizer_dimensions(int n)
{
    const auto &table = character_table(n);
    const std::size_t k = table.partitions.size();
    std::vector<std::vector<std::int64_t>> c(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t nu = 0; nu < k; ++nu) {
        const auto scheme = symmetrization_scheme(table.partitions[nu]);
        std::map<Partition, std::int64_t> weight; // cycle type -> sum of psi
        for (const auto &[g, s] : scheme.elements())
            weight[cycle_type(g)] += s;
        const auto order = static_cast<std::int64_t>(scheme.order());
        for (std::size_t mu = 0; mu < k; ++mu) {
            std::int64_t sum = 0;
            for (const auto &[type, w] : weight)
                sum += w * character_value(table.partitions[mu], type);
            if (sum % order != 0)
                throw ConsistencyError("symmetrizer_dimensions: non-integral dimension");
            c[mu][nu] = sum / order;
        }
    }
    return c;
}

namespace
{

// Solves sum_mu m_mu c[mu][nu] = d[nu] exactly; the solution must be a
// nonnegative integer vector.
MultiplicityVector solve_multiplicities(const std::vector<std::vector<std::int64_t>> &c,
                                        const std::vector<std::size_t> &d)
{
    const std::size_t k = d.size();
    RatMatrix a(k, k + 1);
    for (std::size_t nu = 0; nu < k; ++nu) {
        for (std::size_t mu = 0; mu < k; ++mu)
            a(nu, mu) = c[mu][nu];
        a(nu, k) = static_cast<long>(d[nu]);
    }
    const RatRcf r = rcf(a);
    if (r.rank() != k || r.pivots.back() >= k)
        throw ConsistencyError("symmetrised dimensions do not determine the multiplicities");
    MultiplicityVector m(k);
    for (std::size_t i = 0; i < k; ++i) {
        const mpq_class &v = r.basis(i, k);
        if (v.get_den() != 1 || v < 0)
            throw ConsistencyError("symmetrised dimensions give a non-integral multiplicity");
        m[r.pivots[i]] = v.get_num().get_si();
    }
    return m;
}

} // namespace

SymmetrizedCensus symmetrized_census(int n, const std::vector<Identity> &old, const PrimeField &field,
                                     const std::optional<std::filesystem::path> &checkpoint,
                                     const ProgressHook &progress)
{
    for (const auto &g : old)
        if (g.degree() != n)
            throw std::invalid_argument("symmetrized_census: generator " + g.name + " has the wrong degree");
    SymmetrizedCensus out;
    out.partitions = partitions(n);
    const std::size_t k = out.partitions.size();
    for (std::size_t nu = 0; nu < k; ++nu) {
        const Partition &lambda = out.partitions[nu];
        const auto file = checkpoint ? std::optional(*checkpoint / ("partition-" + to_string(lambda) + ".json"))
                                     : std::nullopt;
        if (file)
            if (auto saved = detail::load_json(*file)) {
                out.kernel_dims.push_back((*saved)["kernel_dim"].get<std::size_t>());
                out.old_dims.push_back((*saved)["old_dim"].get<std::size_t>());
                continue;
            }
        if (progress && !progress(nu, k))
            throw Cancelled("census cancelled");

        const SymmetrizedBasis basis = symmetrized_basis(n, lambda);
        const SparseMatrix x = reduced_symmetrized_expansion_matrix(basis);
        const std::size_t kernel_dim = basis.size() - rank_mod_p(x, field.modulus());

        // e g f over coset representatives g of the scheme's group, which
        // are the permutations whose image sequence is in normal form.
        ModEchelon span(basis.size(), field);
        for (std::uint32_t rep : basis.reduction.nf_ranks) {
            if (span.rank() >= kernel_dim)
                break;
            const auto action = monomial_index_action(Permutation::unrank(n, rep));
            Matrix<std::uint32_t> rows(old.size(), basis.size());
            for (std::size_t i = 0; i < old.size(); ++i) {
                auto row = rows.row(i);
                for (const auto &[u, c] : old[i].body.terms()) {
                    const auto [j, s] = basis.project(action[u]);
                    const std::uint32_t v = field.reduce(c);
                    row[j] = s > 0 ? field.add(row[j], v) : field.sub(row[j], v);
                }
            }
            span.insert_rows(rows, kernel_dim);
        }
        if (span.rank() > kernel_dim)
            throw ConsistencyError("old identities exceed the kernel for partition " + to_string(lambda));
        out.kernel_dims.push_back(kernel_dim);
        out.old_dims.push_back(span.rank());
        if (file)
            detail::store_json(*file, {{"partition", to_string(lambda)},
                                       {"basis_size", basis.size()},
                                       {"kernel_dim", kernel_dim},
                                       {"old_dim", span.rank()}});
    }
    const auto c = symmetrizer_dimensions(n);
    out.all = solve_multiplicities(c, out.kernel_dims);
    out.old = solve_multiplicities(c, out.old_dims);
    return out;
}

SearchReport run_degree6_table(const SearchOptions &options)
{
    constexpr int n = 6;
    if (options.rational)
        throw ResourceLimit("the degree-6 table requires a prime field");
    const PrimeField field(options.prime);
    SearchReport r;
    r.degree = n;
    r.ring = "GF(" + std::to_string(options.prime) + ")";
    r.ambient_dimension = monomial_basis_size(n);
    r.association_types = catalan(n);
    detail::Stopwatch watch;
    std::string stage = "generators";
    try {
        const auto gens = old_generators(n);
        r.timings.push_back({stage, watch.lap()});
        stage = "census";
        std::optional<std::filesystem::path> dir;
        if (options.cache)
            dir = detail::cache_directory(*options.cache, "n6-p" + std::to_string(options.prime) + "-census");
        const auto census = symmetrized_census(n, gens, field, dir, options.progress);
        r.timings.push_back({stage, watch.lap()});

        MultiplicityTable t;
        t.partitions = census.partitions;
        t.all = census.all;
        t.old = census.old;
        for (std::size_t i = 0; i < t.partitions.size(); ++i) {
            if (t.old[i] > t.all[i])
                throw ConsistencyError("old multiplicity exceeds all for " + to_string(t.partitions[i]));
            t.fresh.push_back(t.all[i] - t.old[i]);
        }
        r.dim_all = static_cast<std::size_t>(module_dimension(t.all, n));
        r.dim_old = static_cast<std::size_t>(module_dimension(t.old, n));
        r.dim_new = r.dim_all - r.dim_old;
        r.expansion_rank = r.ambient_dimension - r.dim_all;
        r.multiplicities = t;
    } catch (const ConsistencyError &e) {
        r.failed_stage = stage;
        r.error = std::string("consistency: ") + e.what();
    } catch (const Cancelled &e) {
        r.failed_stage = stage;
        r.error = std::string("cancelled: ") + e.what();
    }
    return r;
}

} // namespace mutid
