#include "cache.hpp"

#include <mutid/error.hpp>
#include <mutid/pipeline.hpp>
#include <mutid/symmetrize.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mutid
{

std::int64_t MultiplicityTable::new_dimension() const
{
    std::int64_t d = 0;
    for (std::size_t i = 0; i < partitions.size(); ++i)
        d += fresh[i] * static_cast<std::int64_t>(irrep_dimension(partitions[i]));
    return d;
}

std::vector<Identity> known_generators(int n)
{
    std::vector<Identity> out;
    switch (n) {
    case 3:
        out.push_back(builtin("L"));
        break;
    case 4:
        for (const char *name : {"P", "Q", "R", "H", "I"})
            out.push_back(builtin(name));
        break;
    case 5:
        for (const auto &g : known_generators(4))
            for (auto &c : consequences(g))
                out.push_back(std::move(c));
        for (const char *name : {"T", "U", "V"})
            out.push_back(builtin(name));
        break;
    default:
        throw std::invalid_argument("known_generators: no generator set for degree " + std::to_string(n));
    }
    return out;
}

std::vector<Identity> old_generators(int n)
{
    if (n == 3)
        return {};
    std::vector<Identity> out;
    for (const auto &g : known_generators(n - 1))
        for (auto &c : consequences(g))
            out.push_back(std::move(c));
    return out;
}

namespace
{

std::string ring_name(const SearchOptions &o)
{
    return o.rational ? "QQ" : "GF(" + std::to_string(o.prime) + ")";
}

// Ascending squared length, ties by leading (first nonzero) index.
std::vector<std::size_t> candidate_order(const IntMatrix &b)
{
    const auto lengths = squared_lengths(b);
    std::vector<std::size_t> lead(b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b(i, j) != 0) {
                lead[i] = j;
                break;
            }
    std::vector<std::size_t> order(b.rows());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (lengths[x] != lengths[y])
            return lengths[x] < lengths[y];
        return lead[x] < lead[y];
    });
    return order;
}

std::vector<mpz_class> primitive_row(const IntMatrix &b, std::size_t i)
{
    return make_primitive(b.row(i));
}

IntPolynomial to_int_polynomial(const NonassocPolynomial<mpz_class> &f)
{
    IntPolynomial out(f.degree());
    for (const auto &[i, c] : f.terms()) {
        if (!c.fits_slong_p())
            throw ResourceLimit("identity coefficient exceeds 64 bits");
        out.add(i, c.get_si());
    }
    return out;
}

std::vector<std::uint32_t> reduce_vector(const IntPolynomial &f, const PrimeField &field)
{
    std::vector<std::uint32_t> v(monomial_basis_size(f.degree()));
    for (const auto &[i, c] : f.terms())
        v[i] = field.reduce(c);
    return v;
}

std::map<std::string, int> length_multiset(const IntMatrix &b)
{
    std::map<mpz_class, int> sorted;
    for (const auto &l : squared_lengths(b))
        ++sorted[l];
    std::map<std::string, int> out;
    for (const auto &[l, c] : sorted)
        out[l.get_str()] = c;
    return out;
}

IdentityModule zero_module(int n, const PrimeField &field)
{
    return IdentityModule{n, ModEchelon(monomial_basis_size(n), field), {}};
}

struct Modules
{
    IdentityModule all;
    IdentityModule old;
    MultiplicityVector all_mult;
};

class Timer
{
public:
    explicit Timer(std::vector<StageTime> &out) : m_out(out) {}
    void stage(const std::string &name) { m_out.push_back({name, m_watch.lap()}); }

private:
    std::vector<StageTime> &m_out;
    detail::Stopwatch m_watch;
};

IntMatrix kernel_lattice(const SymmetrizedBasis &basis, const SparseMatrix &reduced, const SearchOptions &options,
                         const std::optional<std::filesystem::path> &dir)
{
    if (dir)
        if (auto cached = detail::load_int_matrix(*dir / "nullspace.triplets"))
            return *cached;
    IntMatrix n = integer_nullspace(reduced.to_dense<mpz_class>(), options.progress);
    if (n.rows() == 0)
        n = IntMatrix(0, basis.size());
    if (dir)
        detail::store_int_matrix(*dir / "nullspace.triplets", n, basis.n, {{"stage", "hnf-kernel"}});
    return n;
}

PartitionReport partition_search(int n, const Partition &lambda, const SearchOptions &options,
                                 const Modules *modules)
{
    if (partition_size(lambda) != n)
        throw std::invalid_argument("partition " + to_string(lambda) + " does not partition " + std::to_string(n));
    PartitionReport r;
    Timer timer(r.timings);
    r.degree = n;
    r.partition = lambda;
    const SymmetrizedBasis basis = symmetrized_basis(n, lambda);
    r.basis_size = basis.size();
    r.matrix_rows = pq_basis_size(n);
    r.matrix_cols = basis.size();

    std::optional<std::filesystem::path> dir;
    if (options.cache)
        dir = detail::cache_directory(*options.cache, "n" + std::to_string(n) + "-z-" + to_string(lambda));

    const SparseMatrix reduced = reduced_symmetrized_expansion_matrix(basis);
    timer.stage("symmetrized matrix");
    const IntMatrix kernel = kernel_lattice(basis, reduced, options, dir);
    r.nullity = kernel.rows();
    r.rank = basis.size() - r.nullity;
    timer.stage("hnf");
    if (r.nullity == 0)
        return r;
    r.size_before = lattice_size(kernel);

    IntMatrix reduced_basis;
    bool loaded = false;
    if (dir)
        if (auto cached = detail::load_int_matrix(*dir / "lll.triplets")) {
            reduced_basis = std::move(*cached);
            loaded = true;
        }
    if (!loaded) {
        reduced_basis = lll_reduce(kernel, LllOptions{options.lll_delta, options.progress});
        if (dir)
            detail::store_int_matrix(*dir / "lll.triplets", reduced_basis, n,
                                     {{"stage", "lll"}, {"delta", options.lll_delta.get_str()}});
    }
    r.size_after = lattice_size(reduced_basis);
    timer.stage("lll");
    if (!modules)
        return r;

    r.compared_with_old = true;
    const PrimeField &field = modules->all.basis.field();
    const std::size_t lambda_index = character_table(n).index_of(lambda);

    ModEchelon projected(basis.size(), field);
    std::vector<std::uint32_t> coords(basis.size());
    for (std::size_t k = 0; k < modules->old.rank(); ++k) {
        std::fill(coords.begin(), coords.end(), 0);
        const auto row = modules->old.basis.row(k);
        for (std::size_t u = 0; u < row.size(); ++u) {
            if (row[u] == 0)
                continue;
            const auto [j, s] = basis.project(u);
            coords[j] = s > 0 ? field.add(coords[j], row[u]) : field.sub(coords[j], row[u]);
        }
        projected.insert(coords);
    }
    r.old_rank = projected.rank();
    if (r.old_rank > r.nullity)
        throw ConsistencyError("symmetrised old identities exceed the symmetrised kernel for " + to_string(lambda));
    r.quotient_dimension = r.nullity - r.old_rank;

    const std::int64_t target = modules->all_mult[lambda_index];
    ModEchelon current = modules->old.basis;
    std::int64_t reached = module_multiplicities(current, n)[lambda_index];
    for (std::size_t i : candidate_order(reduced_basis)) {
        if (reached >= target)
            break;
        const auto prim = primitive_row(reduced_basis, i);
        const IntPolynomial lifted =
            to_int_polynomial(lift_symmetrized<mpz_class>(basis, std::span<const mpz_class>(prim)));
        const auto v = reduce_vector(lifted, field);
        if (current.contains(v))
            continue;
        ModEchelon trial = current;
        trial.insert_rows(orbit_rows(v, n));
        const std::int64_t m = module_multiplicities(trial, n)[lambda_index];
        if (m <= reached)
            continue;
        current = std::move(trial);
        reached = m;
        r.generators.push_back({"N" + to_string(lambda) + "." + std::to_string(r.generators.size() + 1), lifted});
        if (!r.shortest) {
            GeneratorStats s;
            std::set<std::int64_t> values;
            for (const auto &c : prim)
                if (c != 0) {
                    ++s.monomials;
                    values.insert(c.get_si());
                }
            s.coefficients.assign(values.begin(), values.end());
            r.shortest = s;
        }
    }
    if (reached < target)
        throw ConsistencyError("partition " + to_string(lambda) + ": reduced lattice reaches multiplicity " +
                               std::to_string(reached) + " of " + std::to_string(target));
    r.new_generators = r.generators.size();
    timer.stage("compare");
    return r;
}

Modules build_modules(int n, const PrimeField &field, const ProgressHook &progress)
{
    Modules m{all_identities_module(n, field, progress), zero_module(n, field), {}};
    if (n > 3)
        m.old = module_from_generators(n, old_generators(n), field, progress);
    m.all_mult = module_multiplicities(m.all.basis, n);
    return m;
}

void verify_generators(const std::vector<Identity> &gens)
{
    for (const auto &g : gens)
        if (!verify_identity(g.body))
            throw ConsistencyError("generator " + g.name + " does not expand to zero");
}

std::string error_kind(const std::exception &e)
{
    if (dynamic_cast<const ConsistencyError *>(&e))
        return "consistency";
    if (dynamic_cast<const ResourceLimit *>(&e))
        return "resource";
    if (dynamic_cast<const Cancelled *>(&e))
        return "cancelled";
    return "error";
}

std::size_t rational_rank(const Matrix<std::uint32_t> &rows, const PrimeField &field)
{
    RatMatrix m(rows.rows(), rows.cols());
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j)
            m(i, j) = field.lift_symmetric(rows(i, j));
    return rcf(m).rank();
}

} // namespace

SearchReport run_degree_search(int n, const SearchOptions &options)
{
    if (n == 6)
        return run_degree6_table(options);
    if (n < 3 || n > 6)
        throw std::invalid_argument("run_degree_search: degree must lie in 3..6");
    if (options.rational && n > 4)
        throw ResourceLimit("rational arithmetic is limited to degree 4; use a prime");

    const PrimeField field(options.prime);
    SearchReport r;
    r.degree = n;
    r.ring = ring_name(options);
    r.ambient_dimension = monomial_basis_size(n);
    r.association_types = catalan(n);
    Timer timer(r.timings);
    std::string stage = "expansion";
    try {
        const SparseMatrix e = expansion_matrix(n);
        if (options.cache) {
            const auto dir = detail::cache_directory(*options.cache, "n" + std::to_string(n) + "-expansion");
            if (!std::filesystem::exists(dir / "expansion.triplets")) {
                const auto tmp = dir / "expansion.triplets.tmp";
                {
                    std::ofstream out(tmp);
                    write_triplets(out, e, n, nlohmann::json{{"stage", "expansion"}}.dump());
                }
                std::filesystem::rename(tmp, dir / "expansion.triplets");
            }
        }
        timer.stage(stage);

        stage = "all identities";
        Modules m = build_modules(n, field, options.progress);
        r.dim_all = m.all.rank();
        r.expansion_rank = r.ambient_dimension - r.dim_all;
        if (options.rational) {
            const RatRcf q = rcf(e.to_dense<mpq_class>());
            if (q.rank() != r.expansion_rank)
                throw ConsistencyError("rank over QQ differs from rank mod " + std::to_string(field.modulus()));
        }
        timer.stage(stage);

        stage = "old identities";
        r.dim_old = m.old.rank();
        if (options.rational && n > 3) {
            Matrix<std::uint32_t> rows(0, r.ambient_dimension);
            for (const auto &g : old_generators(n)) {
                const auto o = orbit_rows(g.body, field);
                for (std::size_t i = 0; i < o.rows(); ++i)
                    rows.append_row(o.row(i));
            }
            if (rational_rank(rows, field) != r.dim_old)
                throw ConsistencyError("old identities: rank over QQ differs from rank mod p");
        }
        r.dim_new = quotient_dimension(m.all, m.old);
        timer.stage(stage);

        if (n <= 4) {
            stage = "lattice";
            const IntMatrix kernel = integer_nullspace(e.to_dense<mpz_class>(), options.progress);
            const IntMatrix reduced = lll_reduce(kernel, LllOptions{options.lll_delta, options.progress});
            r.lll = LllStats{lattice_size(kernel), lattice_size(reduced), length_multiset(reduced)};
            timer.stage(stage);

            stage = "generators";
            std::vector<IntPolynomial> candidates;
            for (std::size_t i : candidate_order(reduced)) {
                IntPolynomial f(n);
                const auto prim = primitive_row(reduced, i);
                for (std::size_t j = 0; j < prim.size(); ++j)
                    if (prim[j] != 0)
                        f.add(j, prim[j].get_si());
                candidates.push_back(std::move(f));
            }
            const GeneratorSearch g = module_generators(m.all, m.old, candidates);
            for (std::size_t k = 0; k < g.chosen.size(); ++k)
                r.generators.push_back({"N" + std::to_string(n) + "." + std::to_string(k + 1), candidates[g.chosen[k]]});
            timer.stage(stage);
        }

        stage = "multiplicities";
        MultiplicityTable t;
        t.partitions = partitions(n);
        t.all = m.all_mult;
        t.old = n > 3 ? module_multiplicities(m.old.basis, n) : MultiplicityVector(t.partitions.size(), 0);
        for (std::size_t i = 0; i < t.partitions.size(); ++i) {
            t.fresh.push_back(t.all[i] - t.old[i]);
            if (t.fresh.back() < 0)
                throw ConsistencyError("negative new multiplicity for " + to_string(t.partitions[i]));
        }
        if (t.new_dimension() != static_cast<std::int64_t>(r.dim_new))
            throw ConsistencyError("new multiplicities do not add up to the quotient dimension");
        r.multiplicities = t;
        timer.stage(stage);

        if (n == 5) {
            stage = "generators";
            std::vector<Identity> found;
            for (std::size_t i = 0; i < t.partitions.size(); ++i) {
                if (t.fresh[i] == 0)
                    continue;
                auto p = partition_search(n, t.partitions[i], options, &m);
                for (auto &g : p.generators)
                    found.push_back(std::move(g));
            }
            std::vector<IntPolynomial> bodies;
            for (const auto &g : found)
                bodies.push_back(g.body);
            const GeneratorSearch g = module_generators(m.all, m.old, bodies);
            for (std::size_t k : g.chosen)
                r.generators.push_back(found[k]);
            timer.stage(stage);
        }
        verify_generators(r.generators);
    } catch (const std::exception &ex) {
        r.failed_stage = stage;
        r.error = error_kind(ex) + ": " + ex.what();
    }
    return r;
}

PartitionReport run_partition_search(int n, const Partition &lambda, const SearchOptions &options)
{
    if (n < 2 || n > 6)
        throw std::invalid_argument("run_partition_search: degree must lie in 2..6");
    if (n <= 5 && n >= 3) {
        const Modules m = build_modules(n, PrimeField(options.prime), options.progress);
        auto r = partition_search(n, lambda, options, &m);
        verify_generators(r.generators);
        return r;
    }
    return partition_search(n, lambda, options, nullptr);
}

namespace
{

nlohmann::json timings_json(const std::vector<StageTime> &t)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto &s : t)
        out.push_back({{"stage", s.stage}, {"seconds", s.seconds}});
    return out;
}

nlohmann::json identity_json(const Identity &g)
{
    std::ostringstream body;
    write_identity(body, g.body);
    std::int64_t len = 0;
    for (const auto &[i, c] : g.body.terms())
        len += c * c;
    return {{"name", g.name},
            {"degree", g.degree()},
            {"terms", g.body.size()},
            {"squared_length", len},
            {"identity", body.str()}};
}

std::string pad(const std::string &s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

} // namespace

nlohmann::json to_json(const SearchReport &r, bool with_timings)
{
    nlohmann::json j;
    j["degree"] = r.degree;
    j["ring"] = r.ring;
    j["ambient_dimension"] = r.ambient_dimension;
    j["association_types"] = r.association_types;
    j["expansion_rank"] = r.expansion_rank;
    j["dim_all"] = r.dim_all;
    j["dim_old"] = r.dim_old;
    j["dim_new"] = r.dim_new;
    if (r.multiplicities) {
        const auto &t = *r.multiplicities;
        nlohmann::json parts = nlohmann::json::array();
        for (const auto &p : t.partitions)
            parts.push_back(to_string(p));
        j["multiplicities"] = {{"partitions", parts},
                               {"all", t.all},
                               {"old", t.old},
                               {"new", t.fresh},
                               {"new_dimension", t.new_dimension()}};
    }
    j["generators"] = nlohmann::json::array();
    for (const auto &g : r.generators)
        j["generators"].push_back(identity_json(g));
    if (r.lll)
        j["lll"] = {{"size_before", r.lll->size_before},
                    {"size_after", r.lll->size_after},
                    {"squared_lengths", r.lll->lengths}};
    if (!r.failed_stage.empty()) {
        j["failed_stage"] = r.failed_stage;
        j["error"] = r.error;
    }
    if (with_timings)
        j["timings"] = timings_json(r.timings);
    return j;
}

nlohmann::json to_json(const PartitionReport &r, bool with_timings)
{
    nlohmann::json j;
    j["degree"] = r.degree;
    j["partition"] = to_string(r.partition);
    j["basis_size"] = r.basis_size;
    j["matrix"] = {r.matrix_rows, r.matrix_cols};
    j["rank"] = r.rank;
    j["nullity"] = r.nullity;
    j["size_before"] = r.size_before;
    j["size_after"] = r.size_after;
    if (r.compared_with_old) {
        j["old_rank"] = r.old_rank;
        j["quotient_dimension"] = r.quotient_dimension;
        j["new_generators"] = r.new_generators;
        j["generators"] = nlohmann::json::array();
        for (const auto &g : r.generators)
            j["generators"].push_back(identity_json(g));
        if (r.shortest)
            j["shortest"] = {{"monomials", r.shortest->monomials}, {"coefficients", r.shortest->coefficients}};
    }
    if (with_timings)
        j["timings"] = timings_json(r.timings);
    return j;
}

std::string to_text(const SearchReport &r, bool with_timings)
{
    std::ostringstream os;
    os << "degree " << r.degree << " over " << r.ring << "\n";
    os << "monomials            " << r.ambient_dimension << " (" << r.association_types << " association types)\n";
    os << "rank of expansion    " << r.expansion_rank << "\n";
    os << "all identities       " << r.dim_all << "\n";
    os << "old identities       " << r.dim_old << "\n";
    os << "new identities       " << r.dim_new << "\n";
    if (r.multiplicities) {
        const auto &t = *r.multiplicities;
        std::size_t w = 4;
        for (const auto &p : t.partitions)
            w = std::max(w, to_string(p).size() + 1);
        auto row = [&](const std::string &label, const std::vector<std::int64_t> &v) {
            os << label;
            for (auto x : v)
                os << pad(std::to_string(x), w);
            os << "\n";
        };
        os << "\npartition";
        for (const auto &p : t.partitions)
            os << pad(to_string(p), w);
        os << "\n";
        row("all      ", t.all);
        row("old      ", t.old);
        row("new      ", t.fresh);
        os << "new dimension " << t.new_dimension() << "\n";
    }
    if (r.lll) {
        os << "\nlattice size " << r.lll->size_before << " -> " << r.lll->size_after << "\nsquared lengths";
        for (const auto &[l, c] : r.lll->lengths)
            os << " " << l << "(" << c << ")";
        os << "\n";
    }
    for (const auto &g : r.generators) {
        os << "\n";
        write_identity(os, g.body, g.name);
    }
    if (!r.failed_stage.empty())
        os << "\nfailed at stage '" << r.failed_stage << "': " << r.error << "\n";
    if (with_timings)
        for (const auto &s : r.timings)
            os << "time " << s.stage << " " << s.seconds << " s\n";
    return os.str();
}

std::string to_text(const PartitionReport &r, bool with_timings)
{
    std::ostringstream os;
    os << "degree " << r.degree << ", partition " << to_string(r.partition) << "\n";
    os << "symmetrized basis    " << r.basis_size << "\n";
    os << "matrix               " << r.matrix_rows << " x " << r.matrix_cols << "\n";
    os << "rank                 " << r.rank << "\n";
    os << "nullity              " << r.nullity << "\n";
    os << "lattice size         " << r.size_before << " -> " << r.size_after << "\n";
    if (r.compared_with_old) {
        os << "old (symmetrized)    " << r.old_rank << "\n";
        os << "quotient             " << r.quotient_dimension << "\n";
        os << "new generators       " << r.new_generators << "\n";
        if (r.shortest) {
            os << "shortest             " << r.shortest->monomials << " monomials, coefficients";
            for (auto c : r.shortest->coefficients)
                os << " " << c;
            os << "\n";
        }
        for (const auto &g : r.generators) {
            os << "\n";
            write_identity(os, g.body, g.name);
        }
    }
    if (with_timings)
        for (const auto &s : r.timings)
            os << "time " << s.stage << " " << s.seconds << " s\n";
    return os.str();
}

} // namespace mutid
