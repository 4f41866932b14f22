#pragma once

// Plain-text polytope files:
//
//   # comment lines start with '#'
//   4 3            <- vertex count, dimension
//   1 0 0          <- one vertex per line
//   0 1 0
//   ...

#include "tfano/exact_linear.hpp"
#include "tfano/polytope.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace tfano {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

[[nodiscard]] std::vector<IntVector> read_points(std::istream& in);
[[nodiscard]] std::vector<IntVector> read_points_file(const std::filesystem::path& path);

void write_points(std::ostream& out, const std::vector<IntVector>& points, const std::string& comment = {});
void write_points_file(const std::filesystem::path& path, const std::vector<IntVector>& points,
                       const std::string& comment = {});

}  // namespace tfano
