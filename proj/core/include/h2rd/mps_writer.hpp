#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "h2rd/lp_problem.hpp"

namespace h2rd {

/// Free-format MPS with row and column names from the problem's name table.
void write_mps(const LpProblem& problem, std::ostream& out,
               const std::string& name = "H2RD");
void write_mps(const LpProblem& problem, const std::filesystem::path& path,
               const std::string& name = "H2RD");

}  // namespace h2rd
