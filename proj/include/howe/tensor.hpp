#pragma once

// Exact operators on tensor powers of C^k: the symmetric-group action on
// tensor slots, the gl(k) action by derivations, character projectors onto
// isotypic blocks, Young symmetrizers, and commutant dimensions.

#include <howe/elimination.hpp>
#include <howe/exact.hpp>
#include <howe/sparse.hpp>
#include <howe/weights.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>
#include <vector>

namespace howe {

/// Default cap on basis sizes (labels) before refusing with TooLarge.
inline constexpr std::size_t kDefaultBasisCap = 20000;

// ---------------------------------------------------------------------------
// Permutations (0-based images: sigma[i] is where i goes)

using Permutation = std::vector<int>;

inline Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// (a*b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

inline Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

inline Partition cycle_type(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> cycles;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = 1;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return Partition(cycles);
}

inline int sign(const Permutation& p) {
  const Partition ct = cycle_type(p);
  return ((ct.size() - ct.rows()) % 2 == 0) ? 1 : -1;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Permutation from 1-based cycle notation, e.g. {{1,2}} on n=3.
inline Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity_permutation(n);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i)
      p[static_cast<std::size_t>(c[i] - 1)] = c[(i + 1) % c.size()] - 1;
  return p;
}

// ---------------------------------------------------------------------------
// Basis of the n-th tensor power: multi-indices in lexicographic order

class MultiIndexBasis {
 public:
  MultiIndexBasis(int k, int n, std::size_t cap = kDefaultBasisCap) : k_(k), n_(n) {
    if (k < 1 || n < 0) throw ShapeMismatch("tensor power needs k >= 1 and n >= 0");
    std::size_t size = 1;
    for (int i = 0; i < n; ++i) {
      size *= static_cast<std::size_t>(k);
      if (size > cap) throw TooLarge("tensor basis " + std::to_string(k) + "^" + std::to_string(n) + " exceeds cap");
    }
    size_ = size;
  }

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t size() const { return size_; }

  /// Slot 0 is the most significant digit.
  std::vector<int> label(std::size_t ordinal) const {
    std::vector<int> idx(static_cast<std::size_t>(n_));
    for (int s = n_ - 1; s >= 0; --s) {
      idx[static_cast<std::size_t>(s)] = static_cast<int>(ordinal % static_cast<std::size_t>(k_));
      ordinal /= static_cast<std::size_t>(k_);
    }
    return idx;
  }

  std::size_t ordinal(const std::vector<int>& idx) const {
    std::size_t o = 0;
    for (int v : idx) o = o * static_cast<std::size_t>(k_) + static_cast<std::size_t>(v);
    return o;
  }

  /// gl(k) weight: how often each value occurs.
  std::vector<int> content(std::size_t ordinal) const {
    std::vector<int> c(static_cast<std::size_t>(k_), 0);
    for (int v : label(ordinal)) ++c[static_cast<std::size_t>(v)];
    return c;
  }

 private:
  int k_, n_;
  std::size_t size_ = 1;
};

namespace detail {

/// Row r of P_sigma has its single 1 in the column whose slot s carries the
/// value found in slot sigma(s) of r.
inline std::size_t permuted_column(const MultiIndexBasis& b, const Permutation& sigma, std::size_t row) {
  const auto j = b.label(row);
  std::vector<int> i(j.size());
  for (std::size_t s = 0; s < j.size(); ++s) i[s] = j[static_cast<std::size_t>(sigma[s])];
  return b.ordinal(i);
}

inline std::string tensor_tag(int k, int n) { return "tensor(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")"; }

}  // namespace detail

/// Operator moving the factor in slot s to slot sigma(s); multiplicative:
/// sn_action(a*b) = sn_action(a) * sn_action(b).
inline ExactOperator sn_action(const Permutation& sigma, int k, int n) {
  if (static_cast<int>(sigma.size()) != n) throw ShapeMismatch("permutation size differs from tensor power");
  const MultiIndexBasis b(k, n);
  ExactOperator m(b.size(), b.size());
  for (std::size_t r = 0; r < b.size(); ++r) m.add(r, detail::permuted_column(b, sigma, r), Rational(1));
  m.domain_tag = m.codomain_tag = detail::tensor_tag(k, n);
  return m;
}

/// E_ab acting on the tensor power by derivation: sum over slots of
/// e_a e_b^T in that slot (0-based a, b).
inline ExactOperator tensor_gl_generator(int a, int b, int k, int n) {
  const MultiIndexBasis basis(k, n);
  ExactOperator m(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    auto idx = basis.label(col);
    for (std::size_t s = 0; s < idx.size(); ++s) {
      if (idx[s] != b) continue;
      idx[s] = a;
      m.add(basis.ordinal(idx), col, Rational(1));
      idx[s] = b;
    }
  }
  m.domain_tag = m.codomain_tag = detail::tensor_tag(k, n);
  return m;
}

/// Integer form of the isotypic projector: A = sum_sigma chi(sigma) P_sigma,
/// so that P = (f/n!) A. Exact in int64 for the sizes this library targets.
inline SparseMatrix<std::int64_t> isotypic_projector_scaled(const Partition& lambda, int k) {
  const int n = lambda.size();
  const MultiIndexBasis b(k, n);
  const auto perms = all_permutations(n);
  std::map<Partition, long long> chi;
  std::vector<long long> weights;
  weights.reserve(perms.size());
  for (const auto& p : perms) {
    const Partition ct = cycle_type(p);
    auto it = chi.find(ct);
    if (it == chi.end()) it = chi.emplace(ct, sn_character(lambda, ct)).first;
    weights.push_back(it->second);
  }
  SparseMatrix<std::int64_t> out(b.size(), b.size());
  std::unordered_map<std::size_t, std::int64_t> acc;
  std::vector<std::pair<std::size_t, std::int64_t>> row;
  for (std::size_t r = 0; r < b.size(); ++r) {
    acc.clear();
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (weights[i] != 0) acc[detail::permuted_column(b, perms[i], r)] += weights[i];
    row.assign(acc.begin(), acc.end());
    std::sort(row.begin(), row.end());
    SparseVector<std::int64_t> v;
    for (auto [c, x] : row)
      if (x != 0) v.push_back({static_cast<std::uint32_t>(c), x});
    out.set_row(r, std::move(v));
  }
  out.domain_tag = out.codomain_tag = detail::tensor_tag(k, n);
  return out;
}

/// P_lambda = (f^lambda / n!) sum_sigma chi_lambda(sigma) sn_action(sigma):
/// the projector onto the lambda-isotypic block of the tensor power.
inline ExactOperator isotypic_projector(const Partition& lambda, int k) {
  const int n = lambda.size();
  const auto scaled = isotypic_projector_scaled(lambda, k);
  const Rational factor =
      make_rational(BigInt(static_cast<unsigned long>(n == 0 ? 1 : sn_dim(lambda))), factorial(static_cast<unsigned>(n)));
  ExactOperator p(scaled.rows(), scaled.cols());
  for (std::size_t r = 0; r < scaled.rows(); ++r) {
    RationalVector v;
    for (const auto& e : scaled.row(r)) {
      Rational x(static_cast<long>(e.value));
      x *= factor;
      v.push_back({e.index, x});
    }
    p.set_row(r, std::move(v));
  }
  p.domain_tag = p.codomain_tag = scaled.domain_tag;
  return p;
}

// ---------------------------------------------------------------------------
// Young tableaux and symmetrizers

using Tableau = std::vector<std::vector<int>>;  // rows of entries 1..n

inline Tableau row_reading_tableau(const Partition& lambda) {
  Tableau t;
  int next = 1;
  for (int p : lambda.parts()) {
    t.emplace_back();
    for (int j = 0; j < p; ++j) t.back().push_back(next++);
  }
  return t;
}

inline Partition tableau_shape(const Tableau& t) {
  std::vector<int> parts;
  for (const auto& r : t) parts.push_back(static_cast<int>(r.size()));
  return Partition(parts);
}

inline bool is_standard(const Tableau& t) {
  std::vector<int> entries;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0 && t[i].size() > t[i - 1].size()) return false;
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      entries.push_back(t[i][j]);
      if (j > 0 && t[i][j] <= t[i][j - 1]) return false;
      if (i > 0 && t[i][j] <= t[i - 1][j]) return false;
    }
  }
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] != static_cast<int>(i) + 1) return false;
  return true;
}

namespace detail {

/// All permutations of {0..n-1} preserving each block setwise.
inline std::vector<Permutation> block_stabilizer(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<Permutation> out{identity_permutation(n)};
  for (const auto& block : blocks) {
    std::vector<int> orig;
    for (int e : block) orig.push_back(e - 1);
    std::vector<int> images = orig;
    std::sort(images.begin(), images.end());
    std::vector<Permutation> next;
    do {
      for (const auto& base : out) {
        Permutation p = base;
        std::vector<int> sorted_orig = orig;
        std::sort(sorted_orig.begin(), sorted_orig.end());
        for (std::size_t i = 0; i < sorted_orig.size(); ++i) p[static_cast<std::size_t>(sorted_orig[i])] = images[i];
        next.push_back(std::move(p));
      }
    } while (std::next_permutation(images.begin(), images.end()));
    out = std::move(next);
  }
  return out;
}

}  // namespace detail

/// c_T = (sum over row stabilizer) * (signed sum over column stabilizer),
/// acting on the n-th tensor power of C^k. c_T^2 = (n!/f^lambda) c_T.
inline ExactOperator young_symmetrizer(const Tableau& t, int k) {
  if (!is_standard(t)) throw ShapeMismatch("young_symmetrizer needs a standard tableau");
  const Partition shape = tableau_shape(t);
  const int n = shape.size();
  std::vector<std::vector<int>> columns(static_cast<std::size_t>(shape.empty() ? 0 : shape[0]));
  for (const auto& row : t)
    for (std::size_t j = 0; j < row.size(); ++j) columns[j].push_back(row[j]);
  const auto rows = detail::block_stabilizer(n, t);
  const auto cols = detail::block_stabilizer(n, columns);
  std::map<Permutation, long> terms;
  for (const auto& p : rows)
    for (const auto& q : cols) terms[compose(p, q)] += sign(q);
  const MultiIndexBasis b(k, n);
  ExactOperator m(b.size(), b.size());
  std::map<std::size_t, long> acc;
  for (std::size_t r = 0; r < b.size(); ++r) {
    acc.clear();
    for (const auto& [perm, coef] : terms)
      if (coef != 0) acc[detail::permuted_column(b, perm, r)] += coef;
    RationalVector v;
    for (auto [c, x] : acc)
      if (x != 0) v.push_back({static_cast<std::uint32_t>(c), Rational(x)});
    m.set_row(r, std::move(v));
  }
  m.domain_tag = m.codomain_tag = detail::tensor_tag(k, n);
  return m;
}

// ---------------------------------------------------------------------------
// Schur-Weyl projector identities, checked per gl(k) weight space

struct SchurWeylReport {
  int n = 0, k = 0;
  BigInt dimension_sum;  // sum over lambda of f^lambda * weyl_dim(lambda, k)
  BigInt expected;       // k^n
  bool block_diagonal = true;
  bool idempotent = true;
  bool orthogonal = true;
  bool complete = true;
  std::vector<std::pair<Partition, std::uint64_t>> ranks;  // trace of each projector
  bool ranks_match = true;
  bool pass() const {
    return dimension_sum == expected && block_diagonal && idempotent && orthogonal && complete && ranks_match;
  }
};

/// Checks, exactly, that the character projectors on the n-th tensor power
/// of C^k are idempotent, pairwise orthogonal and sum to the identity, with
/// rank f^lambda * weyl_dim(lambda, k). Every projector commutes with gl(k),
/// so the products are formed block by block on weight spaces using the
/// integer forms A = (n!/f) P.
inline SchurWeylReport schur_weyl_check(int n, int k) {
  SchurWeylReport rep;
  rep.n = n;
  rep.k = k;
  mpz_ui_pow_ui(rep.expected.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
  const auto lambdas = partitions_of(n);
  for (const auto& l : lambdas)
    rep.dimension_sum += BigInt(static_cast<unsigned long>(sn_dim(l))) * static_cast<unsigned long>(weyl_dim(l, k));

  const MultiIndexBasis basis(k, n);
  std::map<std::vector<int>, std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_pos(basis.size());
  for (std::size_t o = 0; o < basis.size(); ++o) {
    auto& members = blocks[basis.content(o)];
    block_pos[o] = members.size();
    members.push_back(o);
  }
  const auto nfact = static_cast<std::int64_t>(factorial(static_cast<unsigned>(n)).get_si());
  std::vector<SparseMatrix<std::int64_t>> scaled;
  std::vector<std::int64_t> f;
  for (const auto& l : lambdas) {
    scaled.push_back(isotypic_projector_scaled(l, k));
    f.push_back(static_cast<std::int64_t>(sn_dim(l)));
  }
  std::vector<std::int64_t> traces(lambdas.size(), 0);

  using Dense = std::vector<std::int64_t>;
  for (const auto& [content, members] : blocks) {
    const std::size_t s = members.size();
    std::vector<Dense> a(lambdas.size(), Dense(s * s, 0));
    for (std::size_t li = 0; li < lambdas.size(); ++li)
      for (std::size_t i = 0; i < s; ++i)
        for (const auto& e : scaled[li].row(members[i])) {
          if (basis.content(e.index) != content) {
            rep.block_diagonal = false;
            continue;
          }
          a[li][i * s + block_pos[e.index]] = e.value;
        }
    auto product = [s](const Dense& x, const Dense& y) {
      Dense z(s * s, 0);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t t = 0; t < s; ++t) {
          const std::int64_t xv = x[i * s + t];
          if (xv == 0) continue;
          const std::int64_t* yr = &y[t * s];
          std::int64_t* zr = &z[i * s];
          for (std::size_t j = 0; j < s; ++j) zr[j] += xv * yr[j];
        }
      return z;
    };
    std::int64_t bound = 0;
    for (const auto& m : a)
      for (auto v : m) bound = std::max(bound, v < 0 ? -v : v);
    if (bound > 0 && static_cast<double>(s) * static_cast<double>(bound) * static_cast<double>(bound) > 4e18)
      throw TooLarge("schur_weyl_check: block products would overflow int64");

    Dense sum(s * s, 0);
    for (std::size_t li = 0; li < lambdas.size(); ++li) {
      for (std::size_t i = 0; i < s; ++i) traces[li] += a[li][i * s + i];
      for (std::size_t x = 0; x < s * s; ++x) sum[x] += f[li] * a[li][x];
      const Dense sq = product(a[li], a[li]);
      const std::int64_t c = nfact / f[li];
      for (std::size_t x = 0; x < s * s; ++x)
        if (sq[x] != c * a[li][x]) rep.idempotent = false;
      // A_lambda and A_mu are symmetric and commute, so lambda < mu suffices.
      for (std::size_t mi = li + 1; mi < lambdas.size(); ++mi) {
        const Dense pr = product(a[li], a[mi]);
        if (std::any_of(pr.begin(), pr.end(), [](std::int64_t v) { return v != 0; })) rep.orthogonal = false;
      }
    }
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j)
        if (sum[i * s + j] != (i == j ? nfact : 0)) rep.complete = false;
  }
  for (std::size_t li = 0; li < lambdas.size(); ++li) {
    // rank P = trace P = (f / n!) trace A
    const std::int64_t r = f[li] * traces[li] / nfact;
    rep.ranks.emplace_back(lambdas[li], static_cast<std::uint64_t>(r));
    if (f[li] * traces[li] != r * nfact || static_cast<std::uint64_t>(r) != sn_dim(lambdas[li]) * weyl_dim(lambdas[li], k))
      rep.ranks_match = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Commutants

struct CommutantOptions {
  std::size_t max_basis = kDefaultBasisCap;
  std::size_t max_unknowns = 4'000'000;
};

/// dim { X : X A = A X for every generator A }, by exact elimination.
/// Equations from diagonal generators are single-variable (they force
/// X_rs = 0 when the diagonal entries at r and s differ) and are solved
/// first; the remaining generators contribute sparse equations over the
/// surviving unknowns, whose nullity is found mod p and certified exactly
/// (see certified_nullity).
inline std::size_t commutant_dim(const std::vector<ExactOperator>& gens, const CommutantOptions& opt = {}) {
  if (gens.empty()) throw ShapeMismatch("commutant_dim needs at least one generator");
  const std::size_t d = gens.front().rows();
  for (const auto& g : gens)
    if (g.rows() != d || g.cols() != d) throw ShapeMismatch("commutant generators must share one square basis");
  if (d > opt.max_basis) throw TooLarge("commutant basis of " + std::to_string(d) + " labels exceeds cap");

  std::vector<const ExactOperator*> diag, rest;
  for (const auto& g : gens) (g.is_diagonal() ? diag : rest).push_back(&g);

  // Classes of basis labels on which every diagonal generator agrees.
  std::map<std::vector<Rational>, std::vector<std::uint32_t>> by_key;
  for (std::size_t r = 0; r < d; ++r) {
    std::vector<Rational> key;
    for (const auto* g : diag) key.push_back(g->at(r, r));
    by_key[key].push_back(static_cast<std::uint32_t>(r));
  }
  std::vector<std::uint32_t> class_of(d), pos_in_class(d);
  std::vector<std::vector<std::uint32_t>> classes;
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  for (auto& [key, members] : by_key) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      class_of[members[i]] = static_cast<std::uint32_t>(classes.size());
      pos_in_class[members[i]] = static_cast<std::uint32_t>(i);
    }
    offset.push_back(unknowns);
    unknowns += members.size() * members.size();
    classes.push_back(members);
  }
  if (unknowns > opt.max_unknowns) throw TooLarge("commutant system has " + std::to_string(unknowns) + " unknowns");
  auto unknown = [&](std::uint32_t r, std::uint32_t s) -> std::uint32_t {
    const auto c = class_of[r];
    return static_cast<std::uint32_t>(offset[c] + pos_in_class[r] * classes[c].size() + pos_in_class[s]);
  };

  std::vector<RationalVector> equations;
  std::unordered_map<std::uint32_t, std::map<std::uint32_t, Rational>> eq;
  for (const auto* a : rest) {
    for (std::uint32_t r = 0; r < d; ++r) {
      eq.clear();
      // (X A)_{rs} = sum_{t ~ r} X_{rt} A_{ts}
      for (std::uint32_t t : classes[class_of[r]])
        for (const auto& e : a->row(t)) eq[e.index][unknown(r, t)] += e.value;
      // (A X)_{rs} = sum_t A_{rt} X_{ts}, with s ~ t
      for (const auto& e : a->row(r))
        for (std::uint32_t s : classes[class_of[e.index]]) eq[s][unknown(e.index, s)] -= e.value;
      for (auto& [s, terms] : eq) {
        RationalVector v = from_map(terms);
        if (!v.empty()) equations.push_back(std::move(v));
      }
    }
  }
  return certified_nullity(equations, unknowns);
}

}  // namespace howe
