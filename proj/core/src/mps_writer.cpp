#include "h2rd/mps_writer.hpp"

#include <fstream>
#include <ostream>
#include <vector>

#include "h2rd/error.hpp"
#include "h2rd/text_format.hpp"

namespace h2rd {

void write_mps(const LpProblem& p, std::ostream& out, const std::string& name) {
  const auto nrows = static_cast<int>(p.num_rows());
  const auto ncols = static_cast<int>(p.num_vars());

  out << "NAME " << name << '\n' << "ROWS\n" << " N  COST\n";
  for (int i = 0; i < nrows; ++i)
    out << (p.row(i).sense == RowSense::Equal ? " E  " : " L  ") << p.row_name(i) << '\n';

  // Transpose to column-major for the COLUMNS section.
  std::vector<std::vector<std::pair<int, double>>> by_col(static_cast<std::size_t>(ncols));
  for (int i = 0; i < nrows; ++i) {
    const auto cols = p.row_columns(i);
    const auto vals = p.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k)
      by_col[static_cast<std::size_t>(cols[k])].emplace_back(i, vals[k]);
  }
  out << "COLUMNS\n";
  for (int j = 0; j < ncols; ++j) {
    const auto col = p.variable_name(j);
    const double cost = p.variable(j).cost;
    if (cost != 0.0) out << "    " << col << " COST " << format_shortest(cost) << '\n';
    for (const auto& [row, v] : by_col[static_cast<std::size_t>(j)])
      out << "    " << col << ' ' << p.row_name(row) << ' ' << format_shortest(v) << '\n';
    if (cost == 0.0 && by_col[static_cast<std::size_t>(j)].empty())
      out << "    " << col << " COST 0\n";
  }
  out << "RHS\n";
  for (int i = 0; i < nrows; ++i)
    if (p.row(i).rhs != 0.0)
      out << "    RHS " << p.row_name(i) << ' ' << format_shortest(p.row(i).rhs) << '\n';
  out << "BOUNDS\n";
  for (int j = 0; j < ncols; ++j) {
    const auto& v = p.variable(j);
    const auto col = p.variable_name(j);
    if (v.lower == v.upper) {
      out << " FX BND " << col << ' ' << format_shortest(v.lower) << '\n';
      continue;
    }
    if (v.lower == -kInf) out << " MI BND " << col << '\n';
    else if (v.lower != 0.0) out << " LO BND " << col << ' ' << format_shortest(v.lower) << '\n';
    if (v.upper != kInf) out << " UP BND " << col << ' ' << format_shortest(v.upper) << '\n';
  }
  out << "ENDATA\n";
}

void write_mps(const LpProblem& problem, const std::filesystem::path& path,
               const std::string& name) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_mps(problem, out, name);
}

}  // namespace h2rd
