#pragma once

// howe_forge command line. Exit codes: 0 pass, 1 falsification or infeasible
// input, 2 usage error.

#include <howe/suites.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace howe::cli {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

/// Worker count from HOWE_FORGE_THREADS (default 1).
inline int threads_from_env() {
  const char* v = std::getenv("HOWE_FORGE_THREADS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1 || n > 256) throw UsageError("HOWE_FORGE_THREADS must be an integer in [1, 256]");
  return static_cast<int>(n);
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("'" + item + "' is not an integer");
    }
    if (used != item.size()) throw UsageError("'" + item + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

inline Partition parse_partition(const std::string& text) {
  try {
    return Partition(parse_int_list(text));
  } catch (const BadWeight& e) {
    throw UsageError(e.what());
  }
}

inline SignedWeight parse_signed(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("signed weight needs the form m:n, e.g. 2,1:1");
  try {
    auto m = parse_int_list(text.substr(0, colon));
    auto n = parse_int_list(text.substr(colon + 1));
    auto w = SignedWeight::from_entries(m, n);
    if (Partition(m).parts() != m || Partition(n).parts() != n) throw BadWeight("parts must be weakly decreasing");
    return w;
  } catch (const BadWeight& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------------------
// TSV rendering

inline std::string weight_dims(const HalfIntWeight& w) {
  // every entry of a label has the same fractional part
  std::vector<long> ints;
  for (auto t : w.twice) ints.push_back(static_cast<long>((t - w.twice.back()) / 2));
  return std::to_string(weyl_dim_dominant(ints));
}

inline void howe_tsv(const HoweReport& r, std::ostream& os) {
  os << "degree\tu_k\tu_m\tmultiplicity\tdim_u_k\tdim_u_m\n";
  for (const auto& d : r.degrees)
    for (const auto& l : d.labels)
      os << d.degree << '\t' << l.u_k.str() << '\t' << l.other.str() << '\t' << l.multiplicity << '\t' << weight_dims(l.u_k)
         << '\t' << weight_dims(l.other) << '\n';
  os << "\ndegree\tlabels\tdimension_sum\tgraded_dimension\tcommutant\tstatus\n";
  for (const auto& d : r.degrees)
    os << d.degree << '\t' << d.labels.size() << '\t' << d.dimension_sum.get_str() << '\t' << d.graded_dimension << '\t'
       << (d.commutant ? std::to_string(*d.commutant) : "-") << '\t' << (d.pass() ? "pass" : "fail") << '\n';
  os << "\nresult\t" << (r.pass() ? "pass" : "fail") << '\n';
}

inline void kv_tsv(const KvReport& r, std::ostream& os) {
  os << "p\tq\tlabel\tu_k\tu_mn\tpredicted_u_k\tpredicted_u_mn\tm+k,n\tmatch\n";
  for (const auto& e : r.entries) {
    ShiftInput in;
    in.context = ShiftContext::kave;
    in.k = r.k;
    in.M = r.M;
    in.N = r.N;
    in.signed_ = e.label;
    os << e.p << '\t' << e.q << '\t' << e.label.str() << '\t' << e.u_k.str() << '\t' << e.other.str() << '\t'
       << e.predicted_u_k.str() << '\t' << e.predicted_other.str() << '\t' << shift_weight(in).other.str() << '\t'
       << (e.matches ? "yes" : "no") << '\n';
  }
  os << "\nunexplained\t" << r.unexplained.size() << "\nmissing\t" << r.missing.size() << "\nrenormalized_present\t"
     << r.renormalized_present.size() << "\nresult\t" << (r.pass() ? "pass" : "fail") << '\n';
}

inline void json_tsv(const nlohmann::json& j, std::ostream& os) {
  for (const auto& [key, value] : j.items()) os << key << '\t' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

// ---------------------------------------------------------------------------

inline constexpr const char* kFooter = R"(Output formats (--format):
  decompose   tsv (default) or json
    Howe table (--n 0): degree, u_k, u_m, multiplicity, dim_u_k, dim_u_m;
      then per degree: degree, labels, dimension_sum, graded_dimension,
      commutant, status; then "result pass|fail".
    KV table (--n > 0): p, q, label, u_k, u_mn, predicted_u_k,
      predicted_u_mn, m+k,n (the weight (m+k, -n)), match; then counts of
      unexplained, missing and renormalized_present weights; then result.
  induce      json (default) or tsv (one key<TAB>value line per field)
  orbit       json (default) or tsv: seed, spectrum, max_dev, pairing_dev,
              invariance_dev, stabilizer_margin, status
  verify-all  tsv (default): criterion, suite, cell, status, detail; then
              criterion, suite, cells, failures, status per suite; or json

Config file (--config FILE): one "key = value" per line, '#' starts a
comment. Top-level keys are format and output; subcommand options go under
a [decompose], [induce], [orbit] or [verify-all] section, using long flag
names without dashes (for example "k = 3"). Flags given on the command line
override the file.

Environment: HOWE_FORGE_THREADS sets the number of worker threads for
verify-all and orbit. Output does not depend on it.

Exit codes: 0 pass, 1 falsification or infeasible input, 2 usage error.
)";

struct Options {
  std::string format;
  std::string output;

  int k = 0, m_count = 1, n_count = 0, deg = 4;
  std::string convention = "sq";

  int m_group = 0;
  std::string mn_group, weight, signed_, halfint, expect = "nonempty";
  int degree = -1;

  std::string m_parts, n_parts;
  int seeds = 1;
  std::uint64_t seed = 1;
  double tolerance = classical::kDefaultTolerance;
};

inline int emit(const Options& o, const std::string& text, std::ostream& out, std::ostream& err) {
  if (o.output.empty()) {
    out << text;
    return kPass;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f || !(f << text)) {
    err << "error: cannot write " << o.output << '\n';
    return kFail;
  }
  return kPass;
}

inline int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  const Convention conv = parse_convention(o.convention);
  std::ostringstream os;
  bool pass = false;
  std::vector<std::string> falsifications;
  if (o.n_count == 0) {
    HoweOptions opt;
    opt.convention = conv;
    const auto r = verify_howe(o.k, o.m_count, o.deg, opt);
    pass = r.pass();
    falsifications = r.falsifications;
    if (o.format == "json") os << to_json(r).dump(2) << '\n';
    else howe_tsv(r, os);
  } else {
    const auto r = verify_kv(o.k, o.m_count, o.n_count, o.deg, conv);
    pass = r.pass();
    falsifications = r.falsifications;
    if (o.format == "json") os << to_json(r).dump(2) << '\n';
    else kv_tsv(r, os);
  }
  for (const auto& f : falsifications) err << "falsified: " << f << '\n';
  const int rc = emit(o, os.str(), out, err);
  return rc != kPass ? rc : (pass ? kPass : kFail);
}

inline int cmd_induce(const Options& o, std::ostream& out, std::ostream& err) {
  const Convention conv = parse_convention(o.convention);
  const int given = !o.weight.empty() + !o.signed_.empty() + !o.halfint.empty();
  if (given != 1) throw UsageError("give exactly one of --weight, --signed, --halfint");
  if ((o.m_group > 0) == !o.mn_group.empty()) throw UsageError("give exactly one of --m-group, --mn-group");
  if (o.expect != "empty" && o.expect != "nonempty") throw UsageError("--expect must be empty or nonempty");

  InducedModule mod;
  if (o.m_group > 0) {
    if (o.weight.empty()) throw UsageError("compact induction takes a partition via --weight");
    const Partition m = parse_partition(o.weight);
    if (o.degree >= 0 && o.degree != m.size()) {
      const auto rep = degree_selection_check(o.k, o.m_group, m, o.degree);
      mod.k = o.k;
      mod.empty = rep.invariant_dim == 0;
      mod.inputs = {{"k", o.k}, {"M", o.m_group}, {"m", m.parts()}, {"degree", o.degree}};
      mod.ambient = "fock degree " + std::to_string(o.degree) + " tensor inducing irrep";
      mod.reason = "no invariants outside degree |m| = " + std::to_string(m.size());
      if (!mod.empty) mod.reason = "invariants found at the wrong degree";
    } else {
      mod = induce_compact(o.k, o.m_group, m);
      if (mod.dimension() == 0 && mod.reason.empty()) mod.reason = "no invariants";
    }
  } else {
    const auto mn = parse_int_list(o.mn_group);
    if (mn.size() != 2 || mn[0] < 1 || mn[1] < 1) throw UsageError("--mn-group takes M,N with M, N >= 1");
    const int M = mn[0], N = mn[1];
    HalfIntWeight w;
    int implied = 0;
    if (!o.signed_.empty()) {
      ShiftInput in;
      in.context = conv == Convention::hf ? ShiftContext::kave2 : ShiftContext::kave;
      in.convention = conv;
      in.k = o.k;
      in.M = M;
      in.N = N;
      in.signed_ = parse_signed(o.signed_);
      w = shift_weight(in).other;
      implied = in.signed_.m.size() + in.signed_.n.size();
    } else if (!o.halfint.empty()) {
      try {
        w = parse_half_int_weight(o.halfint, Group::CoverUMN);
      } catch (const ParseError& e) {
        throw UsageError(e.what());
      }
    } else {
      w = HalfIntWeight::from_integers({}, Group::UMN);
      for (int v : parse_int_list(o.weight)) w.twice.push_back(2 * static_cast<std::int64_t>(v));
    }
    if (w.size() == static_cast<std::size_t>(M + N)) {
      // degree of the label a lowest K-type of this weight would have
      const auto sq = conv == Convention::hf ? w.shifted(o.k, w.group) : w;
      if (sq.integral()) {
        int s = 0;
        for (int a = 0; a < M + N; ++a) {
          const auto e = sq.twice[static_cast<std::size_t>(a)] / 2;
          s += static_cast<int>(a < M ? std::max<std::int64_t>(e - o.k, 0) : std::max<std::int64_t>(-e, 0));
        }
        implied = std::max(implied, s);
      }
    }
    const int d = o.degree >= 0 ? o.degree : std::max(4, implied);
    mod = induce_noncompact_graded(o.k, M, N, w, d, conv);
  }

  const bool checks = mod.empty || (mod.brackets_ok && mod.gram_positive && mod.commutant == 1u);
  const bool expected = (o.expect == "empty") == mod.empty;
  auto j = to_json(mod);
  j["expect"] = o.expect;
  j["pass"] = checks && expected;
  std::ostringstream os;
  if (o.format == "tsv") json_tsv(j, os);
  else os << j.dump(2) << '\n';
  if (!expected) err << "induced module is " << (mod.empty ? "empty" : "nonempty") << ", expected " << o.expect << '\n';
  const int rc = emit(o, os.str(), out, err);
  return rc != kPass ? rc : (checks && expected ? kPass : kFail);
}

inline int cmd_orbit(const Options& o, std::ostream& out, std::ostream& err) {
  if (!(o.tolerance > 0)) throw UsageError("--tolerance must be positive");
  SignedWeight w;
  try {
    const auto m = parse_int_list(o.m_parts), n = parse_int_list(o.n_parts);
    w = SignedWeight::from_entries(m, n);
    if (w.m.parts() != m || w.n.parts() != n) throw BadWeight("parts must be weakly decreasing");
  } catch (const BadWeight& e) {
    throw UsageError(e.what());
  }
  if (o.k < w.m.rows() + w.n.rows())
    throw RankTooSmall("level set of " + w.str() + " needs k >= " + std::to_string(w.m.rows() + w.n.rows()));
  classical::OrbitOptions opt;
  opt.tolerance = o.tolerance;
  const auto reports = suites::parallel_map<classical::OrbitReport>(
      static_cast<std::size_t>(o.seeds), threads_from_env(), [&](std::size_t i) {
        return classical::verify_orbit(classical::sample_level_set(w, o.k, o.seed + i), opt);
      });
  bool pass = true;
  std::ostringstream os;
  if (o.format == "tsv") {
    os << "seed\tspectrum\tmax_dev\tpairing_dev\tinvariance_dev\tstabilizer_margin\tstatus\n";
    for (const auto& r : reports) {
      const auto j = to_json(r);
      os << r.seed << '\t' << j["spectrum"].dump() << '\t' << suites::sci(r.max_dev) << '\t' << suites::sci(r.pairing_dev)
         << '\t' << suites::sci(std::max(r.invariance_dev, r.equivariance_dev)) << '\t' << suites::sci(r.stabilizer_margin)
         << '\t' << (r.pass() ? "pass" : "fail") << '\n';
    }
  } else {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    os << nlohmann::json{{"weight", w.str()}, {"k", o.k}, {"reports", arr}}.dump(2) << '\n';
  }
  for (const auto& r : reports) {
    pass = pass && r.pass();
    if (!r.pass()) err << "seed " << r.seed << ": orbit checks failed\n";
  }
  const int rc = emit(o, os.str(), out, err);
  return rc != kPass ? rc : (pass ? kPass : kFail);
}

/// All acceptance suites; the output has no timings so repeated runs compare equal.
inline std::vector<suites::SuiteResult> run_all_suites(std::uint64_t seed, int threads) {
  return {suites::schur_weyl_suite(threads), suites::howe_suite(threads),     suites::compact_rieffel_suite(threads),
          suites::kv_suite(threads),         suites::emptiness_suite(threads), suites::classical_suite(seed, threads),
          suites::half_form_suite()};
}

inline int cmd_verify_all(const Options& o, std::ostream& out, std::ostream& err) {
  const auto results = run_all_suites(o.seed, threads_from_env());
  bool pass = true;
  std::ostringstream os;
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : results) arr.push_back(suites::to_json(s));
    for (const auto& s : results) pass = pass && s.pass();
    os << nlohmann::json{{"seed", o.seed}, {"suites", arr}, {"pass", pass}}.dump(2) << '\n';
  } else {
    os << "criterion\tsuite\tcell\tstatus\tdetail\n";
    for (const auto& s : results)
      for (const auto& r : s.rows)
        os << s.criterion << '\t' << s.name << '\t' << r.cell << '\t' << (r.pass ? "pass" : "fail") << '\t' << r.detail << '\n';
    os << "\ncriterion\tsuite\tcells\tfailures\tstatus\n";
    for (const auto& s : results) {
      pass = pass && s.pass();
      os << s.criterion << '\t' << s.name << '\t' << s.rows.size() << '\t' << s.failures() << '\t'
         << (s.pass() ? "pass" : "fail") << '\n';
    }
    os << "\nresult\t" << (pass ? "pass" : "fail") << '\n';
  }
  for (const auto& s : results)
    if (!s.pass()) err << "criterion " << s.criterion << " (" << s.name << "): " << s.failures() << " failing cells\n";
  const int rc = emit(o, os.str(), out, err);
  return rc != kPass ? rc : (pass ? kPass : kFail);
}

/// Parses and runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact finite-rank checks of dual-pair decompositions, induction and coadjoint orbits.", "howe_forge"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key = value configuration file");
  Options o;
  app.add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--output", o.output, "write the table or report to this file");

  auto* dec = app.add_subcommand("decompose", "Decompose the Fock space under U(k) x U(M) or U(k) x U(M,N)");
  dec->add_option("--k", o.k, "rank k")->required()->check(CLI::Range(1, 16));
  dec->add_option("--m", o.m_count, "M")->check(CLI::Range(1, 16));
  dec->add_option("--n", o.n_count, "N (0 for the compact pair)")->check(CLI::Range(0, 16));
  dec->add_option("--deg", o.deg, "degree cap")->check(CLI::Range(0, 12));
  dec->add_option("--convention", o.convention, "sq or hf")->check(CLI::IsMember({"sq", "hf"}));

  auto* ind = app.add_subcommand("induce", "Induce from an irrep of U(M) or a weight of U(M,N) to U(k)");
  ind->add_option("--k", o.k, "rank k")->required()->check(CLI::Range(1, 16));
  ind->add_option("--m-group", o.m_group, "compact inducing group U(M)")->check(CLI::Range(1, 16));
  ind->add_option("--mn-group", o.mn_group, "noncompact inducing group U(M,N), as M,N");
  ind->add_option("--weight", o.weight, "partition (compact) or integral U(M,N) weight, comma separated");
  ind->add_option("--signed", o.signed_, "label m:n, inducing from the weight (m+k, n)");
  ind->add_option("--halfint", o.halfint, "U(M,N) weight with half-integral entries, e.g. 9/2,-3/2");
  ind->add_option("--degree", o.degree, "Fock degree (compact: check for invariants there; noncompact: search cap)")
      ->check(CLI::Range(0, 12));
  ind->add_option("--convention", o.convention, "sq or hf")->check(CLI::IsMember({"sq", "hf"}));
  ind->add_option("--expect", o.expect, "empty or nonempty (default nonempty)")->check(CLI::IsMember({"empty", "nonempty"}));

  auto* orb = app.add_subcommand("orbit", "Sample level sets of the moment map and check the orbit they give");
  orb->add_option("--k", o.k, "rank k")->required()->check(CLI::Range(1, 64));
  orb->add_option("--m", o.m_parts, "positive parts m, comma separated");
  orb->add_option("--n", o.n_parts, "positive parts n, comma separated");
  orb->add_option("--seeds", o.seeds, "number of seeds")->check(CLI::Range(1, 10000));
  orb->add_option("--seed", o.seed, "first seed");
  orb->add_option("--tolerance", o.tolerance, "absolute tolerance");

  auto* all = app.add_subcommand("verify-all", "Run every acceptance grid");
  all->add_option("--seed", o.seed, "seed for the orbit suite");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  const bool report = ind->parsed() || orb->parsed();
  if (o.format.empty()) o.format = report ? "json" : "tsv";
  try {
    if (dec->parsed()) return cmd_decompose(o, out, err);
    if (ind->parsed()) return cmd_induce(o, out, err);
    if (orb->parsed()) return cmd_orbit(o, out, err);
    return cmd_verify_all(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownContext& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
}

}  // namespace howe::cli
