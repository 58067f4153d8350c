#include "qrook/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "qrook/board.hpp"
#include "qrook/census.hpp"
#include "qrook/chung_feller.hpp"
#include "qrook/encoding.hpp"
#include "qrook/identities.hpp"
#include "qrook/involution.hpp"
#include "qrook/kerov.hpp"
#include "qrook/plane_tree.hpp"
#include "qrook/psi.hpp"
#include "qrook/qcalc.hpp"

namespace qrook {

namespace {

using nlohmann::ordered_json;

struct Task {
  int n;
  int s;
  std::string check;
  // Fills ok, lhs and rhs.
  std::function<void(CellResult&)> run;
};

std::string quoted(const BigInt& value) { return ordered_json(value.get_str()).dump(); }

void compare(CellResult& cell, const QLaurent& lhs, const QLaurent& rhs) {
  cell.ok = lhs == rhs;
  cell.lhs = to_json(lhs);
  cell.rhs = to_json(rhs);
}

void compare(CellResult& cell, const BigInt& lhs, const BigInt& rhs) {
  cell.ok = lhs == rhs;
  cell.lhs = quoted(lhs);
  cell.rhs = quoted(rhs);
}

int choose2(int m) { return m * (m - 1) / 2; }

QLaurent moment_prefactor(int s) { return q_factorial(s).shifted(choose2(s)); }

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

void add_conjecture(std::vector<Task>& tasks, const VerifyOptions& o) {
  for (int n = 1; n <= o.n_max; ++n) {
    for (int s = 0; s <= o.s_max; ++s) {
      tasks.push_back({n, s, "conjecture", [n, s](CellResult& c) { compare(c, conjecture_lhs(n, s), conjecture_rhs(n, s)); }});
    }
  }
}

void add_classical(std::vector<Task>& tasks, const VerifyOptions& o) {
  for (int n = 1; n <= o.n_max; ++n) {
    for (int s = 0; s <= o.s_max; ++s) {
      tasks.push_back({n, s, "classical",
                       [n, s](CellResult& c) { compare(c, classical_ident_lhs(n, s), classical_ident_rhs(n, s)); }});
      tasks.push_back({n, s, "classical-limit",
                       [n, s](CellResult& c) { compare(c, conjecture_lhs(n, s).at_one(), classical_ident_lhs(n, s)); }});
    }
  }
}

void add_recurrence(std::vector<Task>& tasks, const VerifyOptions& o) {
  for (int n = 1; n <= o.n_max; ++n) {
    for (int s = 0; s <= o.s_max; ++s) {
      if (s == 0) {
        tasks.push_back({n, s, "f-initial", [n](CellResult& c) { compare(c, f_moment(n, 0), q_double_factorial_odd(n)); }});
      } else if (s == 1) {
        tasks.push_back(
            {n, s, "f-initial", [n](CellResult& c) { compare(c, f_moment(n, 1), q_double_factorial_odd(n + 1)); }});
      } else {
        tasks.push_back({n, s, "f-recurrence", [n, s](CellResult& c) {
                           const QLaurent f = f_moment(n, s);
                           compare(c, f, f - f_recurrence_residual(n, s));
                         }});
      }
      tasks.push_back({n, s, "inclusion-exclusion",
                       [n, s](CellResult& c) { compare(c, q_inclusion_exclusion(n, s), f_moment(n, s)); }});
      tasks.push_back({n, s, "moment-bridge", [n, s](CellResult& c) {
                         compare(c, conjecture_lhs(n, s) * moment_prefactor(s), f_moment(n, s));
                       }});
    }
  }
}

void add_qhermite(std::vector<Task>& tasks, const VerifyOptions& o) {
  for (int n = 0; n <= o.n_max; ++n) {
    tasks.push_back({n, 0, "hermite-explicit", [n](CellResult& c) {
                       const XPoly recurrence = hermite_q(n);
                       const XPoly explicit_form = hermite_q_explicit(n);
                       c.ok = recurrence == explicit_form;
                       c.lhs = recurrence.to_json();
                       c.rhs = explicit_form.to_json();
                     }});
    tasks.push_back({n, 0, "motzkin-moment", [n](CellResult& c) {
                       compare(c, motzkin_moment(2 * n, 0, 0, q_hermite_weights(), false), q_double_factorial_odd(n));
                     }});
  }
}

void add_census(std::vector<Task>& tasks, const VerifyOptions& o) {
  for (int n = 1; n <= o.n_max; ++n) {
    for (int colors = 1; colors <= o.s_max; ++colors) {
      tasks.push_back({n, colors, "census", [n, colors](CellResult& c) {
                         const auto census = polygon_gluing_census(n);
                         compare(c, census_polynomial(census, colors), harer_zagier_rhs(n, colors));
                         for (const auto& [v, count] : census) {
                           if (v < 1 || v > n + 1 || (n + 1 - v) % 2 != 0) c.ok = false;
                         }
                       }});
    }
  }
}

// Roundtrip cells report the number of distinct inputs that survived the
// roundtrip against the independently known cardinality of the domain.
void roundtrip_result(CellResult& c, bool all_ok, std::size_t distinct, const BigInt& expected) {
  const BigInt found = static_cast<unsigned long>(distinct);
  compare(c, found, expected);
  c.ok = c.ok && all_ok;
}

void add_roundtrips(std::vector<Task>& tasks, const VerifyOptions& o) {
  for (int n = 1; n <= o.n_max; ++n) {
    tasks.push_back({n, 0, "beta", [n](CellResult& c) {
                       bool ok = true;
                       std::set<std::string> trees;
                       for_each_dyck_path(n, [&](const LabeledPath& p) {
                         const PlaneTree t = beta(p);
                         ok = ok && t.size() == n + 1 && beta_inv(t) == p;
                         trees.insert(format_tree(t));
                       });
                       roundtrip_result(c, ok, trees.size(), catalan(n));
                     }});
    tasks.push_back({n, 0, "chung-feller", [n](CellResult& c) {
                       bool ok = true;
                       std::map<std::string, std::vector<int>> classes;
                       for_each_balanced_path(n, [&](const LabeledPath& p) {
                         const DyckWithFlaws r = cf_to_dyck(p);
                         ok = ok && is_dyck(r.dyck) && r.flaws == flaws(p) && cf_from_dyck(r.dyck, r.flaws) == p;
                         classes[format_path(r.dyck)].push_back(r.flaws);
                       });
                       std::size_t good = 0;
                       for (auto& [dyck, counts] : classes) {
                         std::sort(counts.begin(), counts.end());
                         bool one_each = static_cast<int>(counts.size()) == n + 1;
                         for (int j = 0; one_each && j <= n; ++j) one_each = counts[static_cast<std::size_t>(j)] == j;
                         good += one_each ? 1 : 0;
                       }
                       ok = ok && good == classes.size();
                       roundtrip_result(c, ok, good, catalan(n));
                     }});
    for (int k = 0; k <= n; ++k) {
      tasks.push_back({n, k, "psi", [n, k](CellResult& c) {
                         bool ok = true;
                         std::set<std::string> images;
                         for_each_involution(n, k, k, [&](const SignedInvolution& a) {
                           const TreeRootedMap m = psi(a);
                           ok = ok && !validate_map(m) && m.edge_count() == n &&
                                static_cast<int>(m.vertices.size()) == k + 1 && count_faces(m) >= 1;
                           const TreeRootedMap canonical = canonical_form(m);
                           ok = ok && psi_inv(m) == a && psi_inv(canonical) == a;
                           images.insert(format_map(canonical));
                         });
                         roundtrip_result(c, ok, images.size(), involution_count(n, k));
                       }});
    }
    for (int s = 0; s <= o.s_max; ++s) {
      tasks.push_back({n, s, "kappa", [n, s](CellResult& c) {
                         bool ok = true;
                         std::set<std::string> images;
                         for_each_rc(n, s, -1, [&](const RookPlacement& p) {
                           const SignedInvolution a = kappa(p);
                           ok = ok && a.membership_k() == p.left_block_rooks() && kappa_inv(a) == p;
                           images.insert(format_involution(a));
                         });
                         std::size_t domain = 0;
                         for (int k = 0; k <= std::min(n, s); ++k) {
                           for_each_involution(n, s, k, [&](const SignedInvolution& a) {
                             ++domain;
                             ok = ok && kappa(kappa_inv(a)) == a;
                           });
                         }
                         ok = ok && domain == images.size();
                         roundtrip_result(c, ok, images.size(), classical_ident_rhs(n, s));
                       }});
      tasks.push_back({n, s, "psi-prime", [n, s](CellResult& c) {
                         bool ok = true;
                         std::set<std::string> images;
                         for_each_rc(n, s, -1, [&](const RookPlacement& p) {
                           const TreeRootedMap m = psi_prime(p);
                           ok = ok && !validate_map(m) && psi_prime_inv(m) == p &&
                                psi_prime_inv(canonical_form(m)) == p;
                           images.insert(format_map(canonical_form(m)));
                         });
                         roundtrip_result(c, ok, images.size(), classical_ident_rhs(n, s));
                       }});
    }
  }
}

const std::map<std::string, void (*)(std::vector<Task>&, const VerifyOptions&)>& suites() {
  static const std::map<std::string, void (*)(std::vector<Task>&, const VerifyOptions&)> table{
      {"conjecture", add_conjecture}, {"classical", add_classical},   {"recurrence", add_recurrence},
      {"qhermite", add_qhermite},     {"census", add_census},         {"roundtrips", add_roundtrips}};
  return table;
}

CellResult execute(const Task& task, bool timing) {
  CellResult cell;
  cell.n = task.n;
  cell.s = task.s;
  cell.check = task.check;
  const auto start = std::chrono::steady_clock::now();
  try {
    task.run(cell);
  } catch (const std::exception& e) {
    cell.ok = false;
    cell.lhs = ordered_json(std::string("error: ") + e.what()).dump();
    cell.rhs = "null";
  }
  if (timing) {
    cell.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return cell;
}

}  // namespace

bool VerifyReport::all_ok() const {
  return std::all_of(cells.begin(), cells.end(), [](const CellResult& c) { return c.ok; });
}

std::string VerifyReport::to_json() const {
  ordered_json out = ordered_json::array();
  for (const CellResult& c : cells) {
    ordered_json record;
    record["n"] = c.n;
    record["s"] = c.s;
    record["check"] = c.check;
    record["status"] = c.ok ? "ok" : "mismatch";
    record["lhs"] = ordered_json::parse(c.lhs);
    record["rhs"] = ordered_json::parse(c.rhs);
    record["millis"] = c.millis;
    out.push_back(record);
  }
  return out.dump();
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, add] : suites()) names.push_back(name);
  return names;
}

VerifyReport run_suite(const std::string& suite, const VerifyOptions& options) {
  const auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown verification suite: " + suite);
  if (options.n_max < 0 || options.s_max < 0) throw std::invalid_argument("verify: bounds must be nonnegative");
  if (options.jobs < 1) throw std::invalid_argument("verify: jobs must be at least 1");

  std::vector<Task> tasks;
  it->second(tasks, options);
  const std::size_t count = tasks.size();
  std::vector<CellResult> results(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> stop{count};

  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || (!options.keep_going && i > stop.load())) return;
      results[i] = execute(tasks[i], options.timing);
      if (!results[i].ok && !options.keep_going) {
        std::size_t current = stop.load();
        while (i < current && !stop.compare_exchange_weak(current, i)) {
        }
      }
    }
  };

  const int threads = std::min<int>(options.jobs, static_cast<int>(std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerifyReport report;
  const std::size_t last = options.keep_going ? count : std::min(count, stop.load() + 1);
  report.cells.assign(results.begin(), results.begin() + static_cast<std::ptrdiff_t>(last));
  return report;
}

}  // namespace qrook
