#pragma once

// The verification grids run by `howe_forge verify-all` and the acceptance
// binary. Each suite returns one row per grid cell, ordered by parameters.

#include <howe/classical.hpp>
#include <howe/fock.hpp>
#include <howe/rieffel.hpp>
#include <howe/tensor.hpp>
#include <howe/weights.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace howe::suites {

struct Row {
  std::string cell;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  int criterion = 0;
  std::string name;
  std::vector<Row> rows;

  bool pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const Row& r) { return !r.pass; }));
  }
};

inline nlohmann::json to_json(const SuiteResult& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : s.rows) rows.push_back({{"cell", r.cell}, {"pass", r.pass}, {"detail", r.detail}});
  return {{"criterion", s.criterion}, {"suite", s.name}, {"cells", s.rows.size()}, {"pass", s.pass()}, {"rows", rows}};
}

/// Runs jobs[0..n) on up to `threads` workers; results keep job order.
template <typename T>
std::vector<T> parallel_map(std::size_t n, int threads, const std::function<T(std::size_t)>& job) {
  std::vector<T> out(n);
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = job(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < n; i = next++) out[i] = job(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

inline std::vector<Row> flatten(std::vector<std::vector<Row>> parts) {
  std::vector<Row> out;
  for (auto& p : parts)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

inline std::string join(const std::vector<std::string>& xs, const std::string& sep = "; ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

inline std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", x);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Schur-Weyl, n <= 6, k <= 4

inline SuiteResult schur_weyl_suite(int threads = 1) {
  std::vector<std::pair<int, int>> cells;
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 4; ++k) cells.push_back({n, k});
  SuiteResult s{1, "schur-weyl", {}};
  s.rows = parallel_map<Row>(cells.size(), threads, [&](std::size_t i) {
    const auto [n, k] = cells[i];
    const auto r = schur_weyl_check(n, k);
    return Row{"n=" + std::to_string(n) + " k=" + std::to_string(k), r.pass(),
               "sum=" + r.dimension_sum.get_str() + " k^n=" + r.expected.get_str()};
  });
  return s;
}

// ---------------------------------------------------------------------------
// 2. Howe duality, k, M <= 3, degrees <= 6

inline SuiteResult howe_suite(int threads = 1) {
  std::vector<std::pair<int, int>> cells;
  for (int k = 1; k <= 3; ++k)
    for (int M = 1; M <= 3; ++M) cells.push_back({k, M});
  SuiteResult s{2, "howe", {}};
  s.rows = parallel_map<Row>(cells.size(), threads, [&](std::size_t i) {
    const auto [k, M] = cells[i];
    const auto r = verify_howe(k, M, 6);
    std::string labels;
    for (const auto& d : r.degrees) labels += (labels.empty() ? "" : ",") + std::to_string(d.labels.size());
    return Row{"k=" + std::to_string(k) + " M=" + std::to_string(M) + " d=6", r.pass(),
               "labels per degree " + labels + (r.pass() ? "" : " | " + join(r.falsifications))};
  });
  return s;
}

// ---------------------------------------------------------------------------
// 3. Compact induction, k <= 4, M <= 3, |m| <= 4

inline SuiteResult compact_rieffel_suite(int threads = 1) {
  std::vector<std::pair<int, int>> groups;
  for (int k = 1; k <= 4; ++k)
    for (int M = 1; M <= 3; ++M) groups.push_back({k, M});
  SuiteResult s{3, "compact-induction", {}};
  s.rows = flatten(parallel_map<std::vector<Row>>(groups.size(), threads, [&](std::size_t g) {
    const auto [k, M] = groups[g];
    const FockModel model = compact_model_for_induction(k, M, 5);
    std::vector<Row> rows;
    for (int n = 0; n <= 4; ++n)
      for (const auto& m : partitions_of(n, M)) {
        const auto mod = induce_compact(model, m);
        const auto expect = weyl_dim(m, k);
        std::vector<std::string> bad;
        if (mod.dimension() != expect) bad.push_back("dimension " + std::to_string(mod.dimension()) + " != " + std::to_string(expect));
        if (mod.dimension() > 0) {
          const auto p = m.padded(k);
          if (mod.commutant != 1u) bad.push_back("commutant not 1");
          if (!mod.highest_weight || !mod.highest_weight->same_entries(HalfIntWeight::from_integers({p.begin(), p.end()}, Group::Uk))) bad.push_back("highest weight");
          if (!mod.brackets_ok) bad.push_back("brackets");
          if (!mod.gram_positive) bad.push_back("gram");
        }
        const int wrong[2] = {n + 1, n > 0 ? n - 1 : n + 2};
        for (int w : wrong)
          if (!degree_selection_check(model, m, w).pass()) bad.push_back("invariants at degree " + std::to_string(w));
        if (M <= 2) {
          const auto pc = projector_cross_check(model, m);
          if (!pc.pass()) bad.push_back("projector cross-check");
        }
        rows.push_back({"k=" + std::to_string(k) + " M=" + std::to_string(M) + " m=" + m.str(), bad.empty(),
                        "dim=" + std::to_string(mod.dimension()) + " wrong degrees " + std::to_string(wrong[0]) + "," +
                            std::to_string(wrong[1]) + (bad.empty() ? "" : " | " + join(bad))});
      }
    return rows;
  }));
  return s;
}

// ---------------------------------------------------------------------------
// 4. Lowest K-types against the shift formulas, k <= 3, (M,N) in {(1,1),(2,1)}, d <= 4

struct OscillatorCell {
  int k, M, N;
};

inline std::vector<OscillatorCell> oscillator_cells() {
  std::vector<OscillatorCell> out;
  for (int k = 1; k <= 3; ++k)
    for (auto [M, N] : {std::pair{1, 1}, std::pair{2, 1}}) out.push_back({k, M, N});
  return out;
}

inline std::string cell_name(const OscillatorCell& c) {
  return "k=" + std::to_string(c.k) + " M=" + std::to_string(c.M) + " N=" + std::to_string(c.N);
}

inline SuiteResult kv_suite(int threads = 1) {
  std::vector<std::pair<OscillatorCell, Convention>> cells;
  for (const auto& c : oscillator_cells())
    for (auto conv : {Convention::sq, Convention::hf}) cells.push_back({c, conv});
  SuiteResult s{4, "lowest-k-types", {}};
  s.rows = parallel_map<Row>(cells.size(), threads, [&](std::size_t i) {
    const auto [c, conv] = cells[i];
    const auto r = verify_kv(c.k, c.M, c.N, 4, conv);
    const bool all_match = std::all_of(r.entries.begin(), r.entries.end(), [](const KvEntry& e) { return e.matches; });
    return Row{cell_name(c) + " d=4 " + convention_name(conv), r.pass() && all_match && r.unexplained.empty(),
               std::to_string(r.entries.size()) + " weights, " + std::to_string(r.unexplained.size()) + " unexplained" +
                   (r.pass() ? "" : " | " + join(r.falsifications))};
  });
  return s;
}

// ---------------------------------------------------------------------------
// 5. Emptiness of induction from non-lowest-K-type weights

inline SuiteResult emptiness_suite(int threads = 1) {
  const auto cells = oscillator_cells();
  SuiteResult s{5, "emptiness", {}};
  s.rows = flatten(parallel_map<std::vector<Row>>(cells.size(), threads, [&](std::size_t i) {
    const auto c = cells[i];
    const int d = 4;
    const FockModel model = build_oscillator_model(c.k, c.M, c.N, d, Convention::sq);
    const auto labels = oscillator_labels(c.k, c.M, c.N, d);
    std::vector<Row> rows;

    // renormalized weights of the labels with M and N distinct parts
    std::vector<std::string> bad;
    std::size_t tried = 0;
    for (const auto& l : labels) {
      if (l.m.rows() != c.M || l.n.rows() != c.N || !l.m.distinct_parts() || !l.n.distinct_parts()) continue;
      ++tried;
      const auto mod = induce_noncompact_graded(model, renormalize_weight(l, c.M, c.N));
      if (!mod.empty) bad.push_back(l.str());
    }
    rows.push_back({cell_name(c) + " renormalized", bad.empty(),
                    std::to_string(tried) + " weights" + (bad.empty() ? "" : " | nonempty for " + join(bad))});

    // every weight with all a_i < k (so a_1 - k < 0), n-side from the labels
    bad.clear();
    tried = 0;
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& l : labels) {
      const auto n = l.n.padded(c.N);
      std::vector<int> a(static_cast<std::size_t>(c.M), 0);
      std::function<void(int)> rec = [&](int idx) {
        if (idx == c.M) {
          std::vector<long> w(a.begin(), a.end());
          for (int j = c.N - 1; j >= 0; --j) w.push_back(-n[static_cast<std::size_t>(j)]);
          const auto hw = HalfIntWeight::from_integers(w, Group::UMN);
          if (!seen.insert(hw.twice).second) return;
          ++tried;
          if (!induce_noncompact_graded(model, hw).empty) bad.push_back(hw.str());
          return;
        }
        const int top = idx == 0 ? c.k - 1 : a[static_cast<std::size_t>(idx - 1)];
        for (int v = 0; v <= top; ++v) {
          a[static_cast<std::size_t>(idx)] = v;
          rec(idx + 1);
        }
      };
      rec(0);
    }
    rows.push_back({cell_name(c) + " a_1<k", bad.empty(),
                    std::to_string(tried) + " weights" + (bad.empty() ? "" : " | nonempty for " + join(bad))});

    // (m+k, n) gives the module with highest weight w_{m,n}
    bad.clear();
    for (const auto& l : labels) {
      ShiftInput in;
      in.context = ShiftContext::kave;
      in.convention = Convention::sq;
      in.k = c.k;
      in.M = c.M;
      in.N = c.N;
      in.signed_ = l;
      const auto weight = shift_weight(in).other;
      const auto mod = induce_noncompact_graded(model, weight);
      const auto expect = l.at_rank(c.k);
      const bool ok = !mod.empty && mod.highest_weight && mod.highest_weight->same_entries(HalfIntWeight::from_integers(expect, Group::Uk)) &&
                      mod.dimension() == weyl_dim_dominant(expect) && mod.commutant == 1u && mod.brackets_ok && mod.gram_positive;
      if (!ok) bad.push_back(l.str());
    }
    rows.push_back({cell_name(c) + " (m+k,n)", bad.empty(),
                    std::to_string(labels.size()) + " labels" + (bad.empty() ? "" : " | wrong module for " + join(bad))});
    return rows;
  }));
  return s;
}

// ---------------------------------------------------------------------------
// 6. Coadjoint orbits from level sets

inline SuiteResult classical_suite(std::uint64_t seed, int threads = 1) {
  struct Cell {
    SignedWeight w;
    int k;
    std::uint64_t seed;
  };
  const std::vector<SignedWeight> weights = {SignedWeight({1}, {}), SignedWeight({2, 1}, {}), SignedWeight({1}, {1}),
                                             SignedWeight({2, 1}, {1}), SignedWeight({2, 2}, {1})};
  std::vector<Cell> cells;
  for (const auto& w : weights)
    for (int k = w.m.rows() + w.n.rows(); k <= 6; ++k)
      for (std::uint64_t t = 0; t < 10; ++t) cells.push_back({w, k, seed + t});
  SuiteResult s{6, "orbits", {}};
  s.rows = parallel_map<Row>(cells.size(), threads, [&](std::size_t i) {
    const auto& c = cells[i];
    const auto r = classical::verify_orbit(classical::sample_level_set(c.w, c.k, c.seed));
    return Row{c.w.str() + " k=" + std::to_string(c.k) + " seed=" + std::to_string(c.seed), r.pass(),
               std::string("spectrum ") + (r.spectrum_ok() ? "ok" : "off by " + sci(r.max_dev)) + ", pairing " +
                   (r.pairing_ok() ? "ok" : sci(r.pairing_dev)) + ", invariance " +
                   (r.invariance_ok() ? "ok" : sci(std::max(r.invariance_dev, r.equivariance_dev))) + ", stabilizer " +
                   (r.stabilizer_ok() ? "ok" : "margin " + sci(r.stabilizer_margin))};
  });
  return s;
}

// ---------------------------------------------------------------------------
// 7. Half-form bookkeeping spot checks

struct SpotCheck {
  ShiftContext context;
  int k, M, N, degree;
  Partition label;
  SignedWeight signed_;
  std::vector<std::string> u_k;    // expected entries as rationals
  std::vector<std::string> other;
};

inline std::vector<SpotCheck> spot_checks() {
  return {
      // displayed weights (n+1/2, 1/2, ..., 1/2) and n + k/2
      {ShiftContext::dec2, 4, 1, 0, 2, {}, {}, {"5/2", "1/2", "1/2", "1/2"}, {"4"}},
      {ShiftContext::dec2, 1, 1, 0, 0, {}, {}, {"1/2"}, {"1/2"}},
      {ShiftContext::dec2, 3, 1, 0, 5, {}, {}, {"11/2", "1/2", "1/2"}, {"13/2"}},
      // l + M/2 and l + k/2
      {ShiftContext::howehf, 2, 2, 0, 0, {}, {}, {"1", "1"}, {"1", "1"}},
      {ShiftContext::howehf, 3, 2, 0, 3, {2, 1}, {}, {"3", "2", "1"}, {"7/2", "5/2"}},
      {ShiftContext::howehf, 1, 3, 0, 4, {4}, {}, {"11/2"}, {"9/2", "1/2", "1/2"}},
      // (m + (M-N)/2, n - (M-N)/2) and (m + k/2, n + k/2)
      {ShiftContext::kave2, 3, 1, 1, 2, {}, SignedWeight({1}, {1}), {"1", "0", "-1"}, {"5/2", "-5/2"}},
      {ShiftContext::kave2, 3, 2, 1, 4, {}, SignedWeight({2, 1}, {1}), {"5/2", "3/2", "-1/2"}, {"7/2", "5/2", "-5/2"}},
      {ShiftContext::kave2, 2, 1, 1, 0, {}, SignedWeight({}, {}), {"0", "0"}, {"1", "-1"}},
      // (m + k, n)
      {ShiftContext::kave, 3, 1, 1, 2, {}, SignedWeight({1}, {1}), {"1", "0", "-1"}, {"4", "-1"}},
  };
}

inline SuiteResult half_form_suite() {
  SuiteResult s{7, "half-form", {}};
  for (const auto& c : spot_checks()) {
    ShiftInput in;
    in.context = c.context;
    in.convention = c.context == ShiftContext::kave ? Convention::sq : Convention::hf;
    in.k = c.k;
    in.M = c.M;
    in.N = c.N;
    in.degree = c.degree;
    in.label = c.label;
    in.signed_ = c.signed_;
    const auto r = shift_weight(in);
    auto entries = [](const HalfIntWeight& w) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < w.size(); ++i) out.push_back(to_string(w.entry(i)));
      return out;
    };
    const bool ok = entries(r.u_k) == c.u_k && entries(r.other) == c.other;
    const char* names[] = {"dec2", "howehf", "kave", "kave2"};
    s.rows.push_back({std::string(names[static_cast<int>(c.context)]) + " k=" + std::to_string(c.k) + " M=" + std::to_string(c.M) +
                          " N=" + std::to_string(c.N),
                      ok, r.u_k.str() + " x " + r.other.str()});
  }
  return s;
}

}  // namespace howe::suites
