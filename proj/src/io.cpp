#include "tfano/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tfano {

namespace {

std::vector<Integer> parse_integers(const std::string& text, std::size_t line) {
    std::istringstream ss(text);
    std::vector<Integer> out;
    std::string token;
    while (ss >> token) {
        Integer x;
        if (x.set_str(token, 10) != 0) throw ParseError(line, "not an integer: '" + token + "'");
        out.push_back(std::move(x));
    }
    return out;
}

bool is_blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

std::vector<IntVector> read_points(std::istream& in) {
    std::string text;
    std::size_t line = 0;
    std::size_t expected = 0;
    std::size_t dim = 0;
    bool have_header = false;
    std::vector<IntVector> points;
    while (std::getline(in, text)) {
        ++line;
        const auto first = text.find_first_not_of(" \t");
        if (first != std::string::npos && text[first] == '#') continue;
        if (is_blank(text)) continue;
        const auto values = parse_integers(text, line);
        if (!have_header) {
            if (values.size() != 2) throw ParseError(line, "expected header 'vertex_count dimension'");
            if (values[0] < 1 || !values[0].fits_slong_p()) throw ParseError(line, "bad vertex count");
            if (values[1] < 1 || values[1] > 3) throw ParseError(line, "dimension must be 1, 2 or 3");
            expected = values[0].get_ui();
            dim = values[1].get_ui();
            have_header = true;
            continue;
        }
        if (points.size() == expected) throw ParseError(line, "more vertex lines than declared");
        if (values.size() != dim)
            throw ParseError(line, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(values.size()));
        points.emplace_back(values);
    }
    if (!have_header) throw ParseError(std::max<std::size_t>(line, 1), "missing header line");
    if (points.size() != expected)
        throw ParseError(line, "declared " + std::to_string(expected) + " vertices, found " + std::to_string(points.size()));
    return points;
}

std::vector<IntVector> read_points_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_points(in);
}

void write_points(std::ostream& out, const std::vector<IntVector>& points, const std::string& comment) {
    if (!comment.empty()) {
        std::istringstream ss(comment);
        std::string l;
        while (std::getline(ss, l)) out << "# " << l << '\n';
    }
    out << points.size() << ' ' << (points.empty() ? 0 : points.front().size()) << '\n';
    for (const auto& p : points) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
        out << '\n';
    }
}

void write_points_file(const std::filesystem::path& path, const std::vector<IntVector>& points,
                       const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_points(out, points, comment);
}

}  // namespace tfano
