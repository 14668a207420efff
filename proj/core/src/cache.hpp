#ifndef MUTID_SRC_CACHE_HPP
#define MUTID_SRC_CACHE_HPP

#include <mutid/matrix.hpp>

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace mutid::detail
{

// Bumped whenever a basis ordering or stored layout changes.
inline constexpr const char *basis_version = "mutid-basis-v1";

std::string cache_key(const std::string &what);

// <root>/<name>-<key>, created on demand.
std::filesystem::path cache_directory(const std::filesystem::path &root, const std::string &name);

std::optional<IntMatrix> load_int_matrix(const std::filesystem::path &file);
// Skips matrices with entries beyond 64 bits.
void store_int_matrix(const std::filesystem::path &file, const IntMatrix &m, int degree,
                      const nlohmann::json &metadata);

std::optional<nlohmann::json> load_json(const std::filesystem::path &file);
// Written to a temporary file and renamed, so a checkpoint is never torn.
void store_json(const std::filesystem::path &file, const nlohmann::json &j);

class Stopwatch
{
public:
    Stopwatch() : m_start(std::chrono::steady_clock::now()) {}
    double lap()
    {
        const auto now = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(now - m_start).count();
        m_start = now;
        return s;
    }

private:
    std::chrono::steady_clock::time_point m_start;
};

} // namespace mutid::detail

#endif
