#include "starspec/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <stdexcept>

#include "starspec/cayley_oracle.hpp"
#include "starspec/partitions.hpp"
#include "starspec/semicircle.hpp"
#include "starspec/spectrum.hpp"

namespace starspec::cli {

namespace {

using json = nlohmann::ordered_json;
using Row = std::vector<std::string>;

enum class Format { table, csv, json };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string format = "table";
  std::string out_path;

  Format parsed_format() const {
    if (format == "csv") return Format::csv;
    if (format == "json") return Format::json;
    return Format::table;
  }
};

double rounded(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

void write_rows(std::ostream& os, Format format, const Row& header,
                const std::vector<Row>& rows) {
  if (format == Format::csv) {
    auto line = [&os](const Row& r) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) os << ',';
        os << r[i];
      }
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      width[i] = std::max(width[i], r[i].size());
    }
  }
  auto line = [&](const Row& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << "  ";
      os << std::string(width[i] - r[i].size(), ' ') << r[i];
    }
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void write_json(std::ostream& os, const json& doc) { os << doc.dump() << '\n'; }

// Sends a document either to `out` or to the --out file.
void emit(const GlobalOptions& opts, std::ostream& out,
          const std::function<void(std::ostream&)>& body) {
  if (opts.out_path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) throw IoError("cannot open " + opts.out_path + " for writing");
  body(file);
  if (!file.flush()) throw IoError("failed writing " + opts.out_path);
}

void require_n(int n, int minimum = 1) {
  if (n < minimum) {
    throw UsageError("--n must be >= " + std::to_string(minimum) + ", got " +
                     std::to_string(n));
  }
}

// ---- spectrum ----

struct SpectrumArgs {
  int n = 0;
  bool include_zeros = false;
};

int cmd_spectrum(const SpectrumArgs& a, const GlobalOptions& g,
                 std::ostream& out) {
  require_n(a.n);
  const SpectrumTable t = multiplicity_table(a.n);
  std::vector<std::pair<int, BigInt>> entries;
  for (int k = -(a.n - 1); k <= a.n - 1; ++k) {
    BigInt m = t.at(k);
    if (a.include_zeros || sgn(m) != 0) entries.emplace_back(k, std::move(m));
  }
  emit(g, out, [&](std::ostream& os) {
    if (g.parsed_format() == Format::json) {
      json mul = json::object();
      for (const auto& [k, m] : entries) mul[std::to_string(k)] = to_decimal(m);
      write_json(os, json{{"n", a.n}, {"multiplicities", mul}});
      return;
    }
    std::vector<Row> rows;
    for (const auto& [k, m] : entries) rows.push_back({std::to_string(k), to_decimal(m)});
    write_rows(os, g.parsed_format(), {"eigenvalue", "multiplicity"}, rows);
  });
  return kOk;
}

// ---- verify ----

struct VerifyArgs {
  int n = 0;
  std::string oracle = "walk";
};

int cmd_verify(const VerifyArgs& a, const GlobalOptions& g, std::ostream& out) {
  require_n(a.n);
  if (a.n > kMaxOracleSize) {
    throw SizeLimitError("walk oracle limited to n <= " +
                         std::to_string(kMaxOracleSize));
  }
  const SpectrumTable formula = multiplicity_table(a.n);
  const SpectrumTable oracle = oracle_multiplicity_table(a.n);
  const auto diff = diff_tables(formula, oracle);
  const bool identical = diff.empty();
  const auto eigenvalues = formula.nonzero().size();
  const std::string total = to_decimal(formula.total());

  emit(g, out, [&](std::ostream& os) {
    switch (g.parsed_format()) {
      case Format::json: {
        json rows = json::array();
        for (const auto& d : diff) {
          rows.push_back({{"eigenvalue", d.eigenvalue},
                          {"formula", to_decimal(d.formula)},
                          {"oracle", to_decimal(d.oracle)}});
        }
        write_json(os, json{{"n", a.n},
                            {"oracle", a.oracle},
                            {"identical", identical},
                            {"eigenvalues", eigenvalues},
                            {"total", total},
                            {"diff", rows}});
        break;
      }
      case Format::csv: {
        std::vector<Row> rows;
        for (int k = -(a.n - 1); k <= a.n - 1; ++k) {
          BigInt f = formula.at(k);
          BigInt o = oracle.at(k);
          rows.push_back({std::to_string(k), to_decimal(f), to_decimal(o),
                          f == o ? "true" : "false"});
        }
        write_rows(os, Format::csv, {"eigenvalue", "formula", "oracle", "match"},
                   rows);
        break;
      }
      case Format::table: {
        if (identical) {
          os << "identical, " << eigenvalues << " eigenvalues, total " << total
             << '\n';
        } else {
          os << "mismatch at " << diff.size() << " eigenvalues\n";
          std::vector<Row> rows;
          for (const auto& d : diff) {
            rows.push_back({std::to_string(d.eigenvalue), to_decimal(d.formula),
                            to_decimal(d.oracle)});
          }
          write_rows(os, Format::table, {"eigenvalue", "formula", "oracle"}, rows);
        }
        break;
      }
    }
  });
  return identical ? kOk : kMismatch;
}

// ---- moments ----

struct MomentsArgs {
  int n = 0;
  int k_max = -1;
  std::string source = "walk";
};

int cmd_moments(const MomentsArgs& a, const GlobalOptions& g,
                std::ostream& out) {
  require_n(a.n);
  const int k_max = a.k_max < 0 ? 2 * a.n - 2 : a.k_max;
  const BigInt order = factorial(a.n);
  std::vector<BigInt> walks;
  if (a.source == "walk") {
    walks = closed_walk_counts(a.n, k_max).counts;
  } else {
    const SpectrumTable t = multiplicity_table(a.n);
    for (int k = 0; k <= k_max; ++k) {
      BigInt w;
      mpz_divexact(w.get_mpz_t(), power_sum(t, k).get_mpz_t(), order.get_mpz_t());
      walks.push_back(w);
    }
  }
  emit(g, out, [&](std::ostream& os) {
    if (g.parsed_format() == Format::json) {
      json rows = json::array();
      for (int k = 0; k <= k_max; ++k) {
        rows.push_back({{"k", k},
                        {"walks", to_decimal(walks[k])},
                        {"trace", to_decimal(order * walks[k])}});
      }
      write_json(os, json{{"n", a.n},
                          {"k_max", k_max},
                          {"source", a.source},
                          {"moments", rows}});
      return;
    }
    std::vector<Row> rows;
    for (int k = 0; k <= k_max; ++k) {
      rows.push_back({std::to_string(k), to_decimal(walks[k]),
                      to_decimal(order * walks[k])});
    }
    write_rows(os, g.parsed_format(), {"k", "walks", "trace"}, rows);
  });
  return kOk;
}

// ---- semicircle ----

struct SemicircleArgs {
  std::vector<int> n_values;
  int p_max = 3;
  int bins = 22;
};

constexpr double kHistogramLo = -1.1;
constexpr double kHistogramHi = 1.1;

void write_histogram(std::ostream& os, Format format,
                     const std::vector<std::pair<int, std::vector<HistogramBin>>>& hists) {
  std::vector<Row> rows;
  for (const auto& [n, bins] : hists) {
    for (const auto& b : bins) {
      rows.push_back({std::to_string(n), format_real(b.left), format_real(b.right),
                      format_real(b.empirical_mass),
                      format_real(b.semicircle_mass)});
    }
  }
  write_rows(os, format,
             {"n", "bin_left", "bin_right", "empirical_mass", "semicircle_mass"},
             rows);
}

int cmd_semicircle(const SemicircleArgs& a, const GlobalOptions& g,
                   std::ostream& out) {
  if (a.n_values.empty()) throw UsageError("--n needs at least one value");
  for (int n : a.n_values) require_n(n);
  if (a.p_max < 1) throw UsageError("--p-max must be >= 1");
  if (a.bins < 1) throw UsageError("--bins must be >= 1");

  std::vector<SemicircleReport> reports;
  std::vector<std::pair<int, std::vector<HistogramBin>>> hists;
  for (int n : a.n_values) {
    const SpectrumTable t = multiplicity_table(n);
    reports.push_back(semicircle_report(t, a.p_max));
    hists.emplace_back(n, histogram(t, kHistogramLo, kHistogramHi, a.bins));
  }

  const bool to_file = !g.out_path.empty();
  if (to_file) {
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) throw IoError("cannot open " + g.out_path + " for writing");
    write_histogram(file, Format::csv, hists);
    if (!file.flush()) throw IoError("failed writing " + g.out_path);
  }

  const Format format = g.parsed_format();
  if (format == Format::json) {
    json rep = json::array();
    for (const auto& r : reports) {
      json ratios = json::object();
      for (const auto& [p, v] : r.moment_ratios) ratios[std::to_string(p)] = rounded(v);
      rep.push_back({{"n", r.n},
                     {"kolmogorov_distance", rounded(r.kolmogorov_distance)},
                     {"moment_ratios", ratios}});
    }
    json doc{{"n_values", a.n_values},
             {"p_max", a.p_max},
             {"bins", a.bins},
             {"reports", rep}};
    if (!to_file) {
      json hist = json::array();
      for (const auto& [n, bins] : hists) {
        for (const auto& b : bins) {
          hist.push_back({{"n", n},
                          {"bin_left", rounded(b.left)},
                          {"bin_right", rounded(b.right)},
                          {"empirical_mass", rounded(b.empirical_mass)},
                          {"semicircle_mass", rounded(b.semicircle_mass)}});
        }
      }
      doc["histogram"] = hist;
    }
    write_json(out, doc);
    return kOk;
  }

  Row header{"n", "kolmogorov_distance"};
  for (int p = 1; p <= a.p_max; ++p) header.push_back("ratio_p" + std::to_string(p));
  std::vector<Row> rows;
  for (const auto& r : reports) {
    Row row{std::to_string(r.n), format_real(r.kolmogorov_distance)};
    for (const auto& [p, v] : r.moment_ratios) row.push_back(format_real(v));
    rows.push_back(std::move(row));
  }
  write_rows(out, format, header, rows);
  if (!to_file) {
    out << '\n';
    write_histogram(out, format, hists);
  }
  return kOk;
}

// ---- bound ----

struct BoundArgs {
  int n = 0;
};

int cmd_bound(const BoundArgs& a, const GlobalOptions& g, std::ostream& out) {
  require_n(a.n, 2);
  const SpectrumTable t = multiplicity_table(a.n);
  struct Line {
    int l;
    BigInt bound;
    BigInt mul;
    bool ok;
  };
  std::vector<Line> lines;
  for (int l = 1; l <= a.n - 1; ++l) {
    BigInt b = hook_bound(a.n, l);
    BigInt m = t.at(l);
    bool ok = m >= b && t.at(-l) >= b;
    lines.push_back({l, std::move(b), std::move(m), ok});
  }
  emit(g, out, [&](std::ostream& os) {
    if (g.parsed_format() == Format::json) {
      json rows = json::array();
      for (const auto& ln : lines) {
        rows.push_back({{"l", ln.l},
                        {"bound", to_decimal(ln.bound)},
                        {"multiplicity", to_decimal(ln.mul)},
                        {"satisfied", ln.ok}});
      }
      write_json(os, json{{"n", a.n}, {"rows", rows}});
      return;
    }
    std::vector<Row> rows;
    for (const auto& ln : lines) {
      rows.push_back({std::to_string(ln.l), to_decimal(ln.bound),
                      to_decimal(ln.mul), ln.ok ? "true" : "false"});
    }
    write_rows(os, g.parsed_format(), {"l", "bound", "multiplicity", "satisfied"},
               rows);
  });
  return kOk;
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::vector<TableDiff> diff_tables(const SpectrumTable& formula,
                                   const SpectrumTable& oracle) {
  std::vector<TableDiff> out;
  const int reach = std::max(formula.n(), oracle.n()) - 1;
  for (int k = -reach; k <= reach; ++k) {
    BigInt f = formula.at(k);
    BigInt o = oracle.at(k);
    if (f != o) out.push_back({k, std::move(f), std::move(o)});
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact spectrum of the star-transposition Cayley graph of S_n",
               "starspec"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--out", g.out_path,
                 "Write output (semicircle: histogram CSV) to this path");

  std::function<int()> action;

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalue multiplicities");
  spectrum->add_option("--n", spectrum_args.n, "Group size n")->required();
  spectrum->add_flag("--include-zeros", spectrum_args.include_zeros,
                     "List zero multiplicities in [-(n-1), n-1]");
  spectrum->callback([&] { action = [&] { return cmd_spectrum(spectrum_args, g, out); }; });

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Compare against the walk-count oracle");
  verify->add_option("--n", verify_args.n, "Group size n")->required();
  verify->add_option("--oracle", verify_args.oracle, "Oracle")
      ->check(CLI::IsMember({"walk"}));
  verify->callback([&] { action = [&] { return cmd_verify(verify_args, g, out); }; });

  MomentsArgs moments_args;
  auto* moments = app.add_subcommand("moments", "Closed walk counts W_k and traces");
  moments->add_option("--n", moments_args.n, "Group size n")->required();
  moments->add_option("--k-max", moments_args.k_max, "Largest k (default 2n-2)")
      ->check(CLI::NonNegativeNumber);
  moments->add_option("--source", moments_args.source, "walk or table")
      ->check(CLI::IsMember({"walk", "table"}));
  moments->callback([&] { action = [&] { return cmd_moments(moments_args, g, out); }; });

  SemicircleArgs semicircle_args;
  auto* semicircle = app.add_subcommand("semicircle", "Semicircle-law diagnostics");
  semicircle->add_option("--n", semicircle_args.n_values, "Group sizes")
      ->required()
      ->delimiter(',');
  semicircle->add_option("--p-max", semicircle_args.p_max, "Largest moment order p");
  semicircle->add_option("--bins", semicircle_args.bins, "Histogram bins on [-1.1, 1.1]");
  semicircle->callback([&] { action = [&] { return cmd_semicircle(semicircle_args, g, out); }; });

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "Hook-shape lower bounds on mul(l)");
  bound->add_option("--n", bound_args.n, "Group size n")->required();
  bound->callback([&] { action = [&] { return cmd_bound(bound_args, g, out); }; });

  for (auto* sub : {spectrum, verify, moments, semicircle, bound}) sub->fallthrough();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace starspec::cli
