#include <mutid/error.hpp>
#include <mutid/identities.hpp>

#include <istream>
#include <ostream>
#include <sstream>

namespace mutid
{

namespace
{

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

} // namespace

IntPolynomial read_identity(std::istream &is)
{
    IntPolynomial out;
    int degree = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        std::size_t i = 0;
        while (i < line.size() && is_space(line[i]))
            ++i;
        if (i == line.size() || line[i] == '#')
            continue;
        std::int64_t sign = 1;
        if (line[i] == '+' || line[i] == '-') {
            sign = line[i] == '-' ? -1 : 1;
            ++i;
            while (i < line.size() && is_space(line[i]))
                ++i;
        }
        std::int64_t coefficient = 1;
        if (i < line.size() && line[i] >= '0' && line[i] <= '9') {
            coefficient = 0;
            const std::size_t start = i;
            while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
                if (i - start >= 18)
                    throw ParseError("coefficient too large", start + 1, line_no);
                coefficient = coefficient * 10 + (line[i++] - '0');
            }
            while (i < line.size() && is_space(line[i]))
                ++i;
        }
        std::size_t end = line.size();
        while (end > i && is_space(line[end - 1]))
            --end;
        if (const auto hash = line.find('#', i); hash != std::string::npos) {
            end = hash;
            while (end > i && is_space(line[end - 1]))
                --end;
        }
        if (i == end)
            throw ParseError("missing monomial", i + 1, line_no);
        LabelledMonomial m;
        try {
            m = parse_monomial(std::string_view(line).substr(i, end - i));
        } catch (const ParseError &e) {
            throw ParseError(e.message(), i + e.column(), line_no);
        }
        if (degree == 0) {
            degree = m.degree();
            out = IntPolynomial(degree);
        } else if (m.degree() != degree) {
            throw ParseError("monomial of degree " + std::to_string(m.degree()) + " in an identity of degree " +
                                 std::to_string(degree),
                             i + 1, line_no);
        }
        out.add(monomial_index(m), sign * coefficient);
    }
    return out;
}

IntPolynomial parse_identity(std::string_view text)
{
    std::istringstream is{std::string(text)};
    return read_identity(is);
}

void write_identity(std::ostream &os, const IntPolynomial &f, std::string_view name)
{
    if (!name.empty())
        os << "# " << name << '\n';
    for (const auto &[i, c] : f.terms()) {
        os << (c < 0 ? '-' : '+');
        const std::int64_t a = c < 0 ? -c : c;
        if (a != 1)
            os << a;
        os << ' ' << to_string(monomial_from_index(f.degree(), i)) << '\n';
    }
}

std::string to_string(const IntPolynomial &f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[i, c] : f.terms()) {
        const std::int64_t a = c < 0 ? -c : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (a != 1)
            out += std::to_string(a);
        out += to_string(monomial_from_index(f.degree(), i));
        first = false;
    }
    return out;
}

} // namespace mutid
