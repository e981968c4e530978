#pragma once

// Partitions, signed weights and half-integral weights of unitary groups,
// together with the combinatorics that labels their representations:
// dimensions, symmetric-group characters, Schur-function pairings and the
// weight shifts that relate the two sides of each dual pair.

#include <howe/exact.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace howe {

/// Young diagram: weakly decreasing nonnegative parts, trailing zeros dropped.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw BadWeight("partition has a negative part");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw BadWeight("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Part i (0-based); zero past the last row.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::vector<int> padded(int length) const {
    if (rows() > length) throw ShapeMismatch("partition " + str() + " has more than " + std::to_string(length) + " rows");
    std::vector<int> out(parts_);
    out.resize(static_cast<std::size_t>(length), 0);
    return out;
  }

  Partition conjugate() const {
    std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
  }

  /// Strictly decreasing parts (the condition for renormalizable weights).
  bool distinct_parts() const {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n with at most max_rows rows, in decreasing
/// lexicographic order: (n), (n-1,1), ...
inline std::vector<Partition> partitions_of(int n, int max_rows = -1) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_rows >= 0 && static_cast<int>(cur.size()) >= max_rows) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// ---------------------------------------------------------------------------
// Dimensions

/// Number of semistandard tableaux of shape lambda with entries in 1..k,
/// i.e. the dimension of the U(k) irrep with that Young diagram
/// (hook-content formula). Zero iff lambda has more than k rows.
inline std::uint64_t weyl_dim(const Partition& lambda, int k) {
  if (k <= 0) return lambda.empty() ? 1 : 0;
  const Partition conj = lambda.conjugate();
  BigInt num = 1, den = 1;
  for (int i = 0; i < lambda.rows(); ++i) {
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
      const long content = k + j - i;
      if (content == 0) return 0;
      const long hook = (lambda[static_cast<std::size_t>(i)] - j) + (conj[static_cast<std::size_t>(j)] - i) - 1;
      num *= content;
      den *= hook;
    }
  }
  const BigInt q = num / den;
  if (!q.fits_ulong_p()) throw TooLarge("weyl_dim overflows 64 bits");
  return q.get_ui();
}

/// Weyl dimension formula for any dominant integral weight of U(k)
/// (entries weakly decreasing, possibly negative); k = weight.size().
inline std::uint64_t weyl_dim_dominant(const std::vector<long>& weight) {
  const std::size_t k = weight.size();
  for (std::size_t i = 1; i < k; ++i)
    if (weight[i] > weight[i - 1]) throw BadWeight("weight is not dominant");
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      num *= weight[i] - weight[j] + static_cast<long>(j - i);
      den *= static_cast<long>(j - i);
    }
  const BigInt q = num / den;
  if (!q.fits_ulong_p()) throw TooLarge("weyl dimension overflows 64 bits");
  return q.get_ui();
}

/// Dimension f^lambda of the S_n irrep (hook-length formula).
inline std::uint64_t sn_dim(const Partition& lambda) {
  if (lambda.empty()) throw EmptyShape("sn_dim of the empty partition");
  const Partition conj = lambda.conjugate();
  BigInt hooks = 1;
  for (int i = 0; i < lambda.rows(); ++i)
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j)
      hooks *= (lambda[static_cast<std::size_t>(i)] - j) + (conj[static_cast<std::size_t>(j)] - i) - 1;
  const BigInt q = factorial(static_cast<unsigned>(lambda.size())) / hooks;
  if (!q.fits_ulong_p()) throw TooLarge("sn_dim overflows 64 bits");
  return q.get_ui();
}

/// Order of the centralizer of a permutation with this cycle type;
/// the conjugacy class has n!/z elements.
inline BigInt centralizer_order(const Partition& cycle_type) {
  BigInt z = 1;
  std::map<int, unsigned> mult;
  for (int p : cycle_type.parts()) ++mult[p];
  for (auto [part, count] : mult) {
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), count);
    z *= pw * factorial(count);
  }
  return z;
}

// ---------------------------------------------------------------------------
// Symmetric-group characters (Murnaghan-Nakayama on beta-sets)

namespace detail {

inline std::vector<int> beta_set(const Partition& lambda) {
  const int l = lambda.rows();
  std::vector<int> beta(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (l - 1 - i);
  return beta;  // strictly decreasing
}

inline Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int l = static_cast<int>(beta.size());
  std::vector<int> parts(beta.size());
  for (int i = 0; i < l; ++i) parts[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)] - (l - 1 - i);
  return Partition(std::move(parts));
}

inline long long mn_character(const Partition& lambda, const std::vector<int>& cycles, std::size_t from,
                              std::map<std::pair<Partition, std::size_t>, long long>& memo) {
  if (from == cycles.size()) return lambda.empty() ? 1 : 0;
  const auto key = std::make_pair(lambda, from);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = cycles[from];
  const std::vector<int> beta = beta_set(lambda);
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> next = beta;
    next[i] = target;
    const long long sub = mn_character(from_beta_set(next), cycles, from + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace detail

/// chi_lambda evaluated on the conjugacy class with the given cycle type.
inline long long sn_character(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.size() != cycle_type.size())
    throw ShapeMismatch("character of " + lambda.str() + " on cycle type " + cycle_type.str());
  // Keyed by the remaining suffix of the cycle type; one table per cycle type.
  thread_local std::map<Partition, std::map<std::pair<Partition, std::size_t>, long long>> memo;
  return detail::mn_character(lambda, cycle_type.parts(), 0, memo[cycle_type]);
}

// ---------------------------------------------------------------------------
// Semistandard tableaux and Schur polynomials

/// Calls visit(rows) for every semistandard filling of lambda with entries
/// 1..max_entry (rows weakly increasing, columns strictly increasing).
inline void for_each_ssyt(const Partition& lambda, int max_entry,
                          const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(lambda.rows()));
  for (int i = 0; i < lambda.rows(); ++i) t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lambda[static_cast<std::size_t>(i)]), 0);
  const int cells = lambda.size();
  std::function<void(int, int)> fill = [&](int row, int col) {
    if (row == lambda.rows()) {
      visit(t);
      return;
    }
    if (col == lambda[static_cast<std::size_t>(row)]) {
      fill(row + 1, 0);
      return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)]);
    if (row > 0) lo = std::max(lo, t[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
      fill(row, col + 1);
    }
  };
  if (cells == 0) {
    visit(t);
    return;
  }
  fill(0, 0);
}

/// s_lambda(x_1..x_nvars) as a map exponent-vector -> coefficient.
inline std::map<std::vector<int>, BigInt> schur_monomials(const Partition& lambda, int nvars) {
  std::map<std::vector<int>, BigInt> out;
  for_each_ssyt(lambda, nvars, [&](const std::vector<std::vector<int>>& t) {
    std::vector<int> content(static_cast<std::size_t>(nvars), 0);
    for (const auto& row : t)
      for (int v : row) ++content[static_cast<std::size_t>(v - 1)];
    out[content] += 1;
  });
  return out;
}

/// Hall inner product <s_lambda, s_mu>. s_lambda is expanded into monomials
/// in max(rows) variables; s_mu is expanded into complete homogeneous
/// functions by Jacobi-Trudi; <m_nu, h_rho> = delta pairs the two.
inline BigInt hall_inner(const Partition& lambda, const Partition& mu) {
  const int nvars = std::max(lambda.rows(), mu.rows());
  const auto mono = schur_monomials(lambda, nvars);
  const int l = mu.rows();
  std::vector<int> perm(static_cast<std::size_t>(l));
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    std::vector<int> nu(static_cast<std::size_t>(nvars), 0);
    bool alive = true;
    for (int i = 0; i < l && alive; ++i) {
      const int idx = mu[static_cast<std::size_t>(i)] - i + perm[static_cast<std::size_t>(i)];
      if (idx < 0) alive = false;
      else nu[static_cast<std::size_t>(i)] = idx;
    }
    if (!alive) continue;
    int inversions = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    std::sort(nu.rbegin(), nu.rend());
    const auto it = mono.find(nu);
    if (it == mono.end()) continue;
    if (inversions % 2 == 0) total += it->second;
    else total -= it->second;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Interlacing restriction U(k+1) -> U(k): every mu with
/// lambda_i >= mu_i >= lambda_{i+1}.
inline std::vector<Partition> branch_restrict(const Partition& lambda, int k) {
  if (k < 0 || lambda.rows() > k + 1)
    throw ShapeMismatch(lambda.str() + " is not a U(" + std::to_string(k + 1) + ") label");
  const std::vector<int> top = lambda.padded(k + 1);
  std::vector<Partition> out;
  std::vector<int> mu(static_cast<std::size_t>(k), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      out.emplace_back(mu);
      return;
    }
    for (int v = top[static_cast<std::size_t>(i)]; v >= top[static_cast<std::size_t>(i + 1)]; --v) {
      mu[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------
// Cauchy identity at fixed degree

struct CauchyTerm {
  Partition lambda;
  std::uint64_t dim_k = 0;
  std::uint64_t dim_m = 0;
  BigInt product;
};

struct CauchyReport {
  int k = 0, m = 0, degree = 0;
  std::vector<CauchyTerm> terms;
  BigInt total;
  BigInt expected;  // dimension of degree-n polynomials in k*M variables
  bool pass = false;
};

inline CauchyReport cauchy_check(int k, int M, int n) {
  CauchyReport r{k, M, n, {}, 0, binomial(static_cast<long>(k) * M + n - 1, n), false};
  if (n == 0) r.expected = 1;
  for (const Partition& lambda : partitions_of(n, std::min(k, M))) {
    CauchyTerm t{lambda, weyl_dim(lambda, k), weyl_dim(lambda, M), 0};
    t.product = BigInt(static_cast<unsigned long>(t.dim_k)) * static_cast<unsigned long>(t.dim_m);
    r.total += t.product;
    r.terms.push_back(std::move(t));
  }
  r.pass = (r.total == r.expected);
  return r;
}

// ---------------------------------------------------------------------------
// Signed and half-integral weights

/// Orbit / irrep label w_{m,n}: two partitions with strictly positive parts.
struct SignedWeight {
  Partition m;
  Partition n;

  SignedWeight() = default;
  SignedWeight(Partition m_, Partition n_) : m(std::move(m_)), n(std::move(n_)) {}

  /// Validating constructor from raw entries; rejects zero or negative parts.
  static SignedWeight from_entries(const std::vector<int>& m, const std::vector<int>& n) {
    for (int v : m)
      if (v <= 0) throw BadWeight("signed weight entries must be positive");
    for (int v : n)
      if (v <= 0) throw BadWeight("signed weight entries must be positive");
    return SignedWeight(Partition(m), Partition(n));
  }

  int size_m() const { return m.rows(); }
  int size_n() const { return n.rows(); }

  /// Highest weight (m_1..m_M, 0.., -n_N..-n_1) of U(k).
  std::vector<long> at_rank(int k) const {
    if (m.rows() + n.rows() > k)
      throw ShapeMismatch("signed weight " + str() + " needs rank >= " + std::to_string(m.rows() + n.rows()));
    std::vector<long> w(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < m.rows(); ++i) w[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)];
    for (int j = 0; j < n.rows(); ++j) w[static_cast<std::size_t>(k - 1 - j)] = -n[static_cast<std::size_t>(j)];
    return w;
  }

  std::string str() const { return "(" + m.str() + "," + n.str() + ")"; }
  friend bool operator==(const SignedWeight&, const SignedWeight&) = default;
  friend auto operator<=>(const SignedWeight&, const SignedWeight&) = default;
};

/// Which group a weight belongs to; the Cover* tags mark double covers on
/// which half-integral weights are single valued.
enum class Group { Uk, UM, UMN, CoverUk, CoverUM, CoverUMN };

inline const char* group_name(Group g) {
  switch (g) {
    case Group::Uk: return "U(k)";
    case Group::UM: return "U(M)";
    case Group::UMN: return "U(M,N)";
    case Group::CoverUk: return "~U(k)";
    case Group::CoverUM: return "~U(M)";
    case Group::CoverUMN: return "~U(M,N)";
  }
  return "?";
}

/// Weight with half-integral entries, stored doubled so every comparison is
/// exact integer arithmetic.
struct HalfIntWeight {
  std::vector<std::int64_t> twice;
  Group group = Group::Uk;

  static HalfIntWeight from_integers(const std::vector<long>& entries, Group g) {
    HalfIntWeight w{{}, g};
    for (long e : entries) w.twice.push_back(2 * static_cast<std::int64_t>(e));
    return w;
  }

  std::size_t size() const { return twice.size(); }
  bool integral() const {
    return std::all_of(twice.begin(), twice.end(), [](std::int64_t t) { return t % 2 == 0; });
  }
  Rational entry(std::size_t i) const { return make_rational(static_cast<long>(twice[i]), 2); }

  /// Integer entries; throws if any entry is half-integral.
  std::vector<long> integers() const {
    if (!integral()) throw BadWeight("weight " + str() + " is not integral");
    std::vector<long> out;
    for (auto t : twice) out.push_back(static_cast<long>(t / 2));
    return out;
  }

  /// Adds the same half-integer (given doubled) to every entry.
  HalfIntWeight shifted(std::int64_t twice_delta, Group g) const {
    HalfIntWeight out{twice, g};
    for (auto& t : out.twice) t += twice_delta;
    return out;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < twice.size(); ++i) s += (i ? "," : "") + to_string(entry(i));
    return s + ")";
  }

  bool same_entries(const HalfIntWeight& o) const { return twice == o.twice; }
  friend bool operator==(const HalfIntWeight&, const HalfIntWeight&) = default;
};

/// Parses "7/2,-3/2" or "4,-1"; entries must be integers or halves.
inline HalfIntWeight parse_half_int_weight(const std::string& text, Group g) {
  HalfIntWeight w{{}, g};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Rational r = parse_rational(item);
    const Rational doubled = r * 2;
    if (doubled.get_den() != 1) throw ParseError("entry " + item + " is not a half-integer");
    if (!doubled.get_num().fits_slong_p()) throw ParseError("entry " + item + " out of range");
    w.twice.push_back(doubled.get_num().get_si());
  }
  if (w.twice.empty()) throw ParseError("empty weight");
  return w;
}

/// Highest weight actually carried by the holomorphic discrete series
/// attached to the orbit w_{m,n} of U(M,N) (entries of m and of n distinct).
/// Layout: (a_1..a_M, -b_N..-b_1) with
///   a_i = m_i + (N-M)/2 + i - 1/2,  b_j = n_j + (M-N)/2 + j - 1/2.
inline HalfIntWeight renormalize_weight(const SignedWeight& w, int M, int N) {
  if (w.m.rows() != M || w.n.rows() != N)
    throw ShapeMismatch("renormalize_weight: " + w.str() + " does not have " + std::to_string(M) + "+" + std::to_string(N) + " parts");
  if (!w.m.distinct_parts() || !w.n.distinct_parts())
    throw NotRenormalizable("renormalize_weight: repeated entries in " + w.str());
  HalfIntWeight out{{}, Group::CoverUMN};
  for (int i = 1; i <= M; ++i)
    out.twice.push_back(2 * static_cast<std::int64_t>(w.m[static_cast<std::size_t>(i - 1)]) + (N - M) + 2 * i - 1);
  for (int j = N; j >= 1; --j)
    out.twice.push_back(-(2 * static_cast<std::int64_t>(w.n[static_cast<std::size_t>(j - 1)]) + (M - N) + 2 * j - 1));
  return out;
}

// ---------------------------------------------------------------------------
// Weight shifts of the dual-pair decompositions

/// sq: plain second quantization; hf: half-form corrected quantization.
enum class Convention { sq, hf };

/// dec2: U(k) x U(1) on polynomials in k variables.
/// howehf: U(k) x U(M) on polynomials in k*M variables.
/// kave, kave2: U(k) x U(M,N) oscillator space; both name the same family
/// (the sq and hf decompositions of it), the convention selects which.
enum class ShiftContext { dec2, howehf, kave, kave2 };

inline const char* convention_name(Convention c) { return c == Convention::sq ? "sq" : "hf"; }

inline Convention parse_convention(const std::string& s) {
  if (s == "sq") return Convention::sq;
  if (s == "hf") return Convention::hf;
  throw ParseError("unknown convention '" + s + "' (expected sq or hf)");
}

inline ShiftContext parse_context(const std::string& s) {
  if (s == "dec2") return ShiftContext::dec2;
  if (s == "howehf") return ShiftContext::howehf;
  if (s == "kave") return ShiftContext::kave;
  if (s == "kave2") return ShiftContext::kave2;
  throw UnknownContext("unknown shift context '" + s + "'");
}

struct ShiftInput {
  ShiftContext context = ShiftContext::kave;
  Convention convention = Convention::sq;
  int k = 1, M = 1, N = 0;
  int degree = 0;        // dec2
  Partition label;       // howehf
  SignedWeight signed_;  // kave, kave2
};

/// The pair of labels one summand of a decomposition carries: the U(k)
/// side and the other member of the dual pair.
struct ShiftedWeights {
  HalfIntWeight u_k;
  HalfIntWeight other;
};

inline ShiftedWeights shift_weight(const ShiftInput& in) {
  const bool hf = in.convention == Convention::hf;
  const Group gk = hf ? Group::CoverUk : Group::Uk;
  switch (in.context) {
    case ShiftContext::dec2: {
      if (in.degree < 0) throw BadWeight("negative degree");
      std::vector<long> uk(static_cast<std::size_t>(in.k), 0);
      uk[0] = in.degree;
      ShiftedWeights out{HalfIntWeight::from_integers(uk, Group::Uk),
                         HalfIntWeight::from_integers({in.degree}, Group::UM)};
      if (hf) {
        out.u_k = out.u_k.shifted(1, gk);
        out.other = out.other.shifted(in.k, Group::CoverUM);
      }
      return out;
    }
    case ShiftContext::howehf: {
      if (in.label.rows() > std::min(in.k, in.M))
        throw ShapeMismatch("label " + in.label.str() + " does not occur for k=" + std::to_string(in.k) + ", M=" + std::to_string(in.M));
      const auto pk = in.label.padded(in.k);
      const auto pm = in.label.padded(in.M);
      ShiftedWeights out{HalfIntWeight::from_integers(std::vector<long>(pk.begin(), pk.end()), Group::Uk),
                         HalfIntWeight::from_integers(std::vector<long>(pm.begin(), pm.end()), Group::UM)};
      if (hf) {
        out.u_k = out.u_k.shifted(in.M, gk);
        out.other = out.other.shifted(in.k, Group::CoverUM);
      }
      return out;
    }
    case ShiftContext::kave:
    case ShiftContext::kave2: {
      const SignedWeight& w = in.signed_;
      if (w.m.rows() > in.M || w.n.rows() > in.N)
        throw ShapeMismatch("signed weight " + w.str() + " does not fit U(" + std::to_string(in.M) + "," + std::to_string(in.N) + ")");
      ShiftedWeights out{HalfIntWeight::from_integers(w.at_rank(in.k), Group::Uk), {{}, Group::UMN}};
      const auto m = w.m.padded(in.M);
      const auto n = w.n.padded(in.N);
      if (!hf) {
        for (int v : m) out.other.twice.push_back(2 * static_cast<std::int64_t>(v + in.k));
        for (int j = in.N - 1; j >= 0; --j) out.other.twice.push_back(-2 * static_cast<std::int64_t>(n[static_cast<std::size_t>(j)]));
      } else {
        out.u_k = out.u_k.shifted(in.M - in.N, gk);
        out.other.group = Group::CoverUMN;
        for (int v : m) out.other.twice.push_back(2 * static_cast<std::int64_t>(v) + in.k);
        for (int j = in.N - 1; j >= 0; --j)
          out.other.twice.push_back(-(2 * static_cast<std::int64_t>(n[static_cast<std::size_t>(j)]) + in.k));
      }
      return out;
    }
  }
  throw UnknownContext("unknown shift context");
}

/// All admissible oscillator labels (m, n): rows(m) <= M, rows(n) <= N,
/// rows(m) + rows(n) <= k, |m| + |n| <= max_degree.
inline std::vector<SignedWeight> oscillator_labels(int k, int M, int N, int max_degree) {
  std::vector<SignedWeight> out;
  for (int p = 0; p <= max_degree; ++p)
    for (int q = 0; p + q <= max_degree; ++q)
      for (const Partition& m : partitions_of(p, std::min(M, k)))
        for (const Partition& n : partitions_of(q, std::min(N, k)))
          if (m.rows() + n.rows() <= k) out.emplace_back(m, n);
  return out;
}

}  // namespace howe
