#include "cache.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace mutid::detail
{

std::string cache_key(const std::string &what)
{
    std::uint64_t h = 1469598103934665603ull;
    for (const char c : std::string(basis_version) + "|" + what) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::filesystem::path cache_directory(const std::filesystem::path &root, const std::string &name)
{
    auto dir = root / (name + "-" + cache_key(name));
    std::filesystem::create_directories(dir);
    return dir;
}

std::optional<IntMatrix> load_int_matrix(const std::filesystem::path &file)
{
    std::ifstream in(file);
    if (!in)
        return std::nullopt;
    const TripletFile t = read_triplets(in);
    IntMatrix m(t.matrix.rows(), t.matrix.cols());
    for (std::size_t j = 0; j < t.matrix.cols(); ++j)
        for (const auto &e : t.matrix.column(j))
            m(e.row, j) = static_cast<long>(e.value);
    return m;
}

void store_int_matrix(const std::filesystem::path &file, const IntMatrix &m, int degree,
                      const nlohmann::json &metadata)
{
    Matrix<std::int64_t> small(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).fits_slong_p())
                return;
            small(i, j) = m(i, j).get_si();
        }
    const auto tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        write_triplets(out, small, degree, metadata.dump());
    }
    std::filesystem::rename(tmp, file);
}

std::optional<nlohmann::json> load_json(const std::filesystem::path &file)
{
    std::ifstream in(file);
    if (!in)
        return std::nullopt;
    return nlohmann::json::parse(in);
}

void store_json(const std::filesystem::path &file, const nlohmann::json &j)
{
    const auto tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, file);
}

} // namespace mutid::detail
