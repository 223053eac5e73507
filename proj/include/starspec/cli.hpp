#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "starspec/bigint.hpp"
#include "starspec/spectrum.hpp"

namespace starspec::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kSizeLimit = 3,
  kIoError = 4,
};

// Runs the command line `args` (without the program name). Documents go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

struct TableDiff {
  int eigenvalue = 0;
  BigInt formula;
  BigInt oracle;
};

// Eigenvalues in [-(n-1), n-1] where the two tables disagree, ascending.
std::vector<TableDiff> diff_tables(const SpectrumTable& formula,
                                   const SpectrumTable& oracle);

// 12 significant digits, printf %.12g.
std::string format_real(double x);

}  // namespace starspec::cli
