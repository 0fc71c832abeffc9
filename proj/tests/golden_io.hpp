#ifndef SPRINGER_HTOP_TESTS_GOLDEN_IO_HPP
#define SPRINGER_HTOP_TESTS_GOLDEN_IO_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef GOLDEN_DIR
#error "GOLDEN_DIR must point at tests/golden"
#endif

namespace golden {

inline std::string path(const std::string& name) { return std::string(GOLDEN_DIR) + "/" + name; }

inline std::string slurp(const std::string& name)
{
    std::ifstream in(path(name), std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open golden file " + path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Tab-separated rows, header included.
inline std::vector<std::vector<std::string>> read_tsv(const std::string& name)
{
    std::istringstream in(slurp(name));
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, '\t'))
            cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

/// d1..d6 label -> composition string, from q_5_4.tsv.
inline std::map<std::string, std::string> q54_labels()
{
    std::map<std::string, std::string> out;
    const auto rows = read_tsv("q_5_4.tsv");
    for (std::size_t r = 1; r < rows.size(); ++r)
        out[rows[r].at(0)] = rows[r].at(1);
    return out;
}

} // namespace golden

#endif // SPRINGER_HTOP_TESTS_GOLDEN_IO_HPP
