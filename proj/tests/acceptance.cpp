// One pass/fail line per acceptance criterion; exit status 0 iff all pass.

#include <howe/cli.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0: no runtime limit
  std::function<howe::suites::SuiteResult()> run;
};

}  // namespace

int main() {
  using namespace howe::suites;
  const int threads = howe::cli::threads_from_env();
  const std::vector<Criterion> criteria = {
      {1, "Schur-Weyl, n <= 6, k <= 4", 60, [&] { return schur_weyl_suite(threads); }},
      {2, "Howe duality, k, M <= 3, degree <= 6", 120, [&] { return howe_suite(threads); }},
      {3, "compact induction, k <= 4, M <= 3, |m| <= 4", 120, [&] { return compact_rieffel_suite(threads); }},
      {4, "lowest K-types, k <= 3, (M,N) in {(1,1),(2,1)}, degree <= 4", 180, [&] { return kv_suite(threads); }},
      {5, "emptiness and (m+k, n) induction on the criterion 4 grid", 0, [&] { return emptiness_suite(threads); }},
      {6, "coadjoint orbits from level sets, 10 seeds, tolerance 1e-9", 30, [&] { return classical_suite(1, threads); }},
      {7, "half-form spot checks", 0, [] { return half_form_suite(); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto s = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s == 0 || secs < c.limit_s;
    const bool ok = s.pass() && in_time;
    all = all && ok;
    char timing[64];
    if (c.limit_s > 0) std::snprintf(timing, sizeof timing, "%.1f s (limit %.0f s)", secs, c.limit_s);
    else std::snprintf(timing, sizeof timing, "%.1f s", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " | " << s.rows.size() << " cells, "
              << s.failures() << " failing, " << timing << '\n';
    for (const auto& r : s.rows)
      if (!r.pass) std::cout << "      " << r.cell << ": " << r.detail << '\n';
  }

  {
    std::ostringstream a, b, ea, eb;
    const int ca = howe::cli::run({"verify-all", "--seed", "1"}, a, ea);
    const int cb = howe::cli::run({"verify-all", "--seed", "1"}, b, eb);
    const bool ok = ca == 0 && cb == 0 && !a.str().empty() && a.str() == b.str();
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion 8: verify-all --seed 1 twice gives identical reports | "
              << a.str().size() << " bytes, exit codes " << ca << "," << cb << '\n';
  }

  std::cout << (all ? "all criteria pass" : "some criteria fail") << '\n';
  return all ? 0 : 1;
}
