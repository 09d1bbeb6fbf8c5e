#pragma once

#include <stdexcept>
#include <string>

namespace minperm {

// Raised when an exhaustive oracle is asked for more than its configured budget.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(std::string const& what) : std::runtime_error(what) {}
};

inline constexpr int default_oracle_limit = 10;     // max n for scans of S_n
inline constexpr int default_tableau_cell_limit = 14; // max cells for tableau generation

} // namespace minperm
