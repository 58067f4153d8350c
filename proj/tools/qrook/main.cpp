// qrook: command-line front end for the qrook library.
//
// Exit status: 0 success, 1 counterexample or failed check, 2 usage or
// parse error.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qrook/board.hpp"
#include "qrook/census.hpp"
#include "qrook/chung_feller.hpp"
#include "qrook/encoding.hpp"
#include "qrook/involution.hpp"
#include "qrook/kerov.hpp"
#include "qrook/plane_tree.hpp"
#include "qrook/psi.hpp"
#include "qrook/qcalc.hpp"
#include "qrook/tree_map.hpp"
#include "qrook/verify.hpp"

namespace {

using namespace qrook;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Applies `convert` to every nonblank line of standard input.
int for_each_input_line(const std::function<std::string(const std::string&)>& convert) {
  std::string line;
  int line_number = 0;
  while (std::getline(std::cin, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      std::cout << convert(line) << '\n';
    } catch (const std::invalid_argument& e) {
      std::cerr << "line " << line_number << ": " << e.what() << '\n';
      return kUsage;
    }
  }
  return kOk;
}

// --- enumerate ---------------------------------------------------------------

struct EnumerateArgs {
  std::string kind;
  int n = 0;
  int s = -1;
  int k = -1;
  bool count_only = false;
};

int run_enumerate(const EnumerateArgs& a) {
  if (a.n < 0) throw UsageError("-n must be nonnegative");
  unsigned long long count = 0;
  auto emit = [&](const std::string& text) {
    ++count;
    if (!a.count_only) std::cout << text << '\n';
  };
  const int s = a.s < 0 ? 0 : a.s;

  if (a.kind == "boards") {
    for_each_board(a.n, s, [&](const YoungBoard& b) { emit(format_board(b)); });
  } else if (a.kind == "placements") {
    for_each_rc(a.n, s, a.k, [&](const RookPlacement& p) { emit(format_placement(p)); });
  } else if (a.kind == "involutions") {
    if (a.k < 0) throw UsageError("enumerate involutions needs -k");
    const int negatives = a.s < 0 ? a.k : a.s;
    for_each_involution(a.n, negatives, a.k, [&](const SignedInvolution& x) { emit(format_involution(x)); });
  } else if (a.kind == "matchings") {
    for_each_matching(2 * a.n, [&](const PerfectMatching& m) { emit(format_matching(m)); });
  } else if (a.kind == "paths") {
    for_each_balanced_path(a.n, [&](const LabeledPath& p) { emit(format_path(p)); });
  } else if (a.kind == "dyck") {
    for_each_dyck_path(a.n, [&](const LabeledPath& p) { emit(format_path(p)); });
  } else if (a.kind == "maps") {
    if (a.k < 0) throw UsageError("enumerate maps needs -k (the map has k+1 vertices)");
    if (a.n > 3) throw UsageError("enumerate maps is a brute-force oracle limited to n <= 3");
    for (const TreeRootedMap& m : enumerate_tree_rooted_maps(a.n, a.k + 1)) emit(format_map(m));
  } else {
    throw UsageError("unknown kind: " + a.kind);
  }
  if (a.count_only) std::cout << nlohmann::json{{"count", std::to_string(count)}}.dump() << '\n';
  return kOk;
}

// --- stats -------------------------------------------------------------------

int run_stats(const std::string& statistic) {
  std::function<std::string(const std::string&)> convert;
  if (statistic == "inv") {
    convert = [](const std::string& line) { return std::to_string(inv_statistic(parse_placement(line))); };
  } else if (statistic == "cn") {
    convert = [](const std::string& line) { return std::to_string(cn_statistic(parse_matching(line))); };
  } else if (statistic == "sz") {
    convert = [](const std::string& line) {
      const Subset subset = parse_subset(line);
      return std::to_string(sz_statistic(subset.elements, subset.ground_n));
    };
  } else if (statistic == "flaws") {
    convert = [](const std::string& line) {
      const LabeledPath path = parse_path(line);
      if (!is_balanced(path)) throw std::invalid_argument("flaws: path is not balanced");
      return std::to_string(flaws(path));
    };
  } else {
    throw UsageError("unknown statistic: " + statistic);
  }
  return for_each_input_line(convert);
}

// --- biject ------------------------------------------------------------------

// "<dyck> <flaws>"
std::pair<LabeledPath, int> parse_dyck_with_flaws(const std::string& line) {
  std::istringstream in(line);
  std::string path_text;
  std::string flaw_text;
  std::string extra;
  if (!(in >> path_text >> flaw_text) || (in >> extra)) {
    throw std::invalid_argument("expected \"<dyck path> <flaw count>\"");
  }
  int j = 0;
  try {
    std::size_t used = 0;
    j = std::stoi(flaw_text, &used);
    if (used != flaw_text.size()) throw std::invalid_argument("bad flaw count");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad flaw count: " + flaw_text);
  }
  return {parse_path(path_text), j};
}

int run_biject(const std::string& name, const std::string& dir) {
  const bool forward = dir == "fwd";
  std::function<std::string(const std::string&)> convert;
  if (name == "kappa") {
    convert = forward ? std::function([](const std::string& l) { return format_involution(kappa(parse_placement(l))); })
                      : std::function([](const std::string& l) { return format_placement(kappa_inv(parse_involution(l))); });
  } else if (name == "beta") {
    convert = forward ? std::function([](const std::string& l) { return format_tree(beta(parse_path(l))); })
                      : std::function([](const std::string& l) { return format_path(beta_inv(parse_tree(l))); });
  } else if (name == "chungfeller") {
    convert = forward ? std::function([](const std::string& l) {
      const DyckWithFlaws r = cf_to_dyck(parse_path(l));
      return format_path(r.dyck) + ' ' + std::to_string(r.flaws);
    })
                      : std::function([](const std::string& l) {
                          const auto [dyck, j] = parse_dyck_with_flaws(l);
                          return format_path(cf_from_dyck(dyck, j));
                        });
  } else if (name == "psi") {
    convert = forward ? std::function([](const std::string& l) { return format_map(psi(parse_involution(l))); })
                      : std::function([](const std::string& l) { return format_involution(psi_inv(parse_map(l))); });
  } else if (name == "psiprime") {
    convert = forward ? std::function([](const std::string& l) { return format_map(psi_prime(parse_placement(l))); })
                      : std::function([](const std::string& l) { return format_placement(psi_prime_inv(parse_map(l))); });
  } else {
    throw UsageError("unknown bijection: " + name);
  }
  return for_each_input_line(convert);
}

// --- verify / moments / census ----------------------------------------------

int run_verify(const std::string& suite, const VerifyOptions& options, const std::string& out_path) {
  const VerifyReport report = run_suite(suite, options);
  const std::string text = report.to_json();
  if (out_path.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot open " + out_path);
    out << text << '\n';
  }
  for (const CellResult& c : report.cells) {
    if (!c.ok) std::cerr << "mismatch: " << c.check << " n=" << c.n << " s=" << c.s << '\n';
  }
  return report.all_ok() ? kOk : kFailed;
}

int run_census(int n, int max_colors) {
  if (n < 1 || n > 8) throw UsageError("census needs 1 <= n <= 8");
  const auto census = polygon_gluing_census(n);
  std::string line = "{";
  for (auto it = census.begin(); it != census.end(); ++it) {
    if (it != census.begin()) line += ", ";
    line += '"' + std::to_string(it->first) + "\": " + it->second.get_str();
  }
  std::cout << line << "}\n";

  bool ok = true;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (int colors = 1; colors <= max_colors; ++colors) {
    const BigInt lhs = census_polynomial(census, colors);
    const BigInt rhs = harer_zagier_rhs(n, colors);
    ok = ok && lhs == rhs;
    checks.push_back({{"N", colors}, {"census", lhs.get_str()}, {"formula", rhs.get_str()},
                      {"status", lhs == rhs ? "ok" : "mismatch"}});
  }
  std::cout << checks.dump() << '\n';
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-analogue and bijection toolkit for rook placements and tree-rooted maps"};
  app.require_subcommand(1);
  std::function<int()> action;

  EnumerateArgs enumerate_args;
  auto* enumerate = app.add_subcommand("enumerate", "List combinatorial objects in their text encodings");
  enumerate->add_option("kind", enumerate_args.kind, "boards|placements|involutions|matchings|paths|dyck|maps")
      ->required();
  enumerate->add_option("-n", enumerate_args.n, "Rows / half the number of positive points / edges")->required();
  enumerate->add_option("-s", enumerate_args.s, "Left-block width or number of negative points");
  enumerate->add_option("-k", enumerate_args.k, "Rooks in the left block / matched negatives / vertices minus one");
  enumerate->add_flag("--count-only", enumerate_args.count_only, "Print only {\"count\": \"...\"}");
  enumerate->callback([&] { action = [&] { return run_enumerate(enumerate_args); }; });

  std::string statistic;
  auto* stats = app.add_subcommand("stats", "Compute a statistic for each encoding read from stdin");
  stats->add_option("statistic", statistic, "inv|cn|sz|flaws")->required();
  stats->callback([&] { action = [&] { return run_stats(statistic); }; });

  std::string bijection;
  std::string dir = "fwd";
  auto* biject = app.add_subcommand("biject", "Apply a bijection to each encoding read from stdin");
  biject->add_option("name", bijection, "kappa|beta|chungfeller|psi|psiprime")->required();
  biject->add_option("--dir", dir, "fwd or inv")->check(CLI::IsMember({"fwd", "inv"}));
  biject->callback([&] { action = [&] { return run_biject(bijection, dir); }; });

  std::string suite;
  VerifyOptions options;
  bool no_timing = false;
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify->add_option("suite", suite, "conjecture|classical|recurrence|qhermite|census|roundtrips")->required();
  verify->add_option("--n-max", options.n_max, "Largest n")->check(CLI::NonNegativeNumber);
  verify->add_option("--s-max", options.s_max, "Largest s (largest N for census)")->check(CLI::NonNegativeNumber);
  verify->add_flag("--keep-going", options.keep_going, "Do not stop at the first mismatch");
  verify->add_option("--jobs", options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", no_timing, "Report millis as 0 for reproducible output");
  verify->add_option("--out", out_path, "Write the report to a file instead of stdout");
  verify->callback([&] {
    options.timing = !no_timing;
    action = [&] { return run_verify(suite, options, out_path); };
  });

  std::string moment_kind;
  int moment_n = 0;
  int moment_s = 0;
  auto* moments = app.add_subcommand("moments", "Print a moment as a serialized Laurent polynomial");
  moments->add_option("kind", moment_kind, "f")->required()->check(CLI::IsMember({"f"}));
  moments->add_option("--n", moment_n, "Half the moment order")->required()->check(CLI::NonNegativeNumber);
  moments->add_option("--s", moment_s, "Hermite index")->required()->check(CLI::NonNegativeNumber);
  moments->callback([&] {
    action = [&] {
      std::cout << to_json(f_moment(moment_n, moment_s)) << '\n';
      return kOk;
    };
  });

  int census_n = 0;
  int census_colors = 6;
  auto* census = app.add_subcommand("census", "Polygon-gluing vertex census and its check against C(n,N)");
  census->add_option("--n", census_n, "Half the number of polygon sides")->required();
  census->add_option("--colors", census_colors, "Check C(n,N) for N = 1..colors")->check(CLI::PositiveNumber);
  census->callback([&] { action = [&] { return run_census(census_n, census_colors); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
