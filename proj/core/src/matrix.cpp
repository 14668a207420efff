#include <mutid/error.hpp>
#include <mutid/matrix.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace mutid
{

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto &c : m_columns)
        n += c.size();
    return n;
}

void SparseMatrix::set_column(std::size_t j, std::vector<Entry> entries)
{
    std::sort(entries.begin(), entries.end(),
              [](const Entry &a, const Entry &b) { return a.row < b.row; });
    std::vector<Entry> merged;
    merged.reserve(entries.size());
    for (const auto &e : entries) {
        if (e.row >= m_rows)
            throw std::out_of_range("SparseMatrix::set_column: row out of range");
        if (!merged.empty() && merged.back().row == e.row)
            merged.back().value += e.value;
        else
            merged.push_back(e);
        if (merged.back().value == 0)
            merged.pop_back();
    }
    m_columns.at(j) = std::move(merged);
}

std::int64_t SparseMatrix::at(std::size_t i, std::size_t j) const
{
    const auto &c = m_columns.at(j);
    auto it = std::lower_bound(c.begin(), c.end(), i,
                               [](const Entry &e, std::size_t r) { return e.row < r; });
    return (it != c.end() && it->row == i) ? it->value : 0;
}

void write_triplets(std::ostream &os, const SparseMatrix &m, int degree,
                    const std::string &metadata_json)
{
    if (!metadata_json.empty())
        os << "# " << metadata_json << '\n';
    os << degree << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto &e : m.column(j))
            os << e.row << ' ' << j << ' ' << e.value << '\n';
}

template <typename T>
void write_triplets(std::ostream &os, const Matrix<T> &m, int degree,
                    const std::string &metadata_json)
{
    if (!metadata_json.empty())
        os << "# " << metadata_json << '\n';
    os << degree << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0)
                os << i << ' ' << j << ' ' << m(i, j) << '\n';
}

template void write_triplets(std::ostream &, const Matrix<mpz_class> &, int, const std::string &);
template void write_triplets(std::ostream &, const Matrix<mpq_class> &, int, const std::string &);
template void write_triplets(std::ostream &, const Matrix<std::int64_t> &, int, const std::string &);
template void write_triplets(std::ostream &, const Matrix<std::uint32_t> &, int, const std::string &);

TripletFile read_triplets(std::istream &is)
{
    TripletFile out;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::vector<std::vector<SparseMatrix::Entry>> columns;
    std::size_t rows = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        if (line[first] == '#') {
            if (!have_header && out.metadata_json.empty()) {
                auto body = line.find_first_not_of(" \t", first + 1);
                if (body != std::string::npos && line[body] == '{')
                    out.metadata_json = line.substr(body);
            }
            continue;
        }
        std::istringstream ls(line);
        if (!have_header) {
            long long degree = 0, r = 0, c = 0;
            if (!(ls >> degree >> r >> c) || degree < 0 || r < 0 || c < 0)
                throw ParseError("expected header 'degree rows cols'", first + 1, lineno);
            out.degree = static_cast<int>(degree);
            rows = static_cast<std::size_t>(r);
            columns.assign(static_cast<std::size_t>(c), {});
            have_header = true;
            continue;
        }
        long long i = 0, j = 0, v = 0;
        if (!(ls >> i >> j >> v))
            throw ParseError("expected 'row col value'", first + 1, lineno);
        std::string rest;
        if (ls >> rest)
            throw ParseError("trailing input after 'row col value'",
                             line.find(rest, first) + 1, lineno);
        if (i < 0 || static_cast<std::size_t>(i) >= rows)
            throw ParseError("row index out of range", first + 1, lineno);
        if (j < 0 || static_cast<std::size_t>(j) >= columns.size())
            throw ParseError("column index out of range", first + 1, lineno);
        columns[static_cast<std::size_t>(j)].push_back({static_cast<std::uint32_t>(i), v});
    }
    if (!have_header)
        throw ParseError("missing header line", 1, lineno + 1);
    out.matrix = SparseMatrix(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        out.matrix.set_column(j, std::move(columns[j]));
    return out;
}

} // namespace mutid
