#pragma once

// Exact linear algebra over Q.
//
// RowEchelon: sparse fraction-free elimination. Rows are cleared of
// denominators and kept primitive (content divided out after every update),
// so entries stay integers and coefficient growth is bounded by the content
// of the true echelon rows.
//
// SpanBasis: reduced echelon basis of a subspace with unit pivots, which
// makes coordinates of a member vector a lookup.
//
// Bareiss: dense fraction-free elimination whose k-th pivot is the k-th
// leading principal minor.

#include <howe/exact.hpp>
#include <howe/sparse.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace howe {

using IntRow = SparseVector<BigInt>;

inline void make_primitive(IntRow& row) {
  if (row.empty()) return;
  BigInt g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
    if (g == 1) break;
  }
  const bool flip = row.front().value < 0;
  if (g != 1 || flip) {
    if (flip) g = -g;
    for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
  }
}

/// Scales a rational vector to a primitive integer vector.
inline IntRow integer_row(const RationalVector& v) {
  BigInt l = 1;
  for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.get_den_mpz_t());
  IntRow out;
  out.reserve(v.size());
  for (const auto& e : v) {
    BigInt z = e.value.get_num() * (l / e.value.get_den());
    out.push_back({e.index, std::move(z)});
  }
  make_primitive(out);
  return out;
}

inline RationalVector rational_row(const IntRow& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back({e.index, Rational(e.value)});
  return out;
}

class RowEchelon {
 public:
  explicit RowEchelon(std::size_t ncols) : pivot_of_col_(ncols, -1), ncols_(ncols) {}

  std::size_t cols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces the row against the current pivots; keeps it if independent.
  bool insert(IntRow row) {
    make_primitive(row);
    while (!row.empty()) {
      const std::uint32_t lead = row.front().index;
      const long p = pivot_of_col_[lead];
      if (p < 0) {
        pivot_of_col_[lead] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
      }
      eliminate(row, rows_[static_cast<std::size_t>(p)]);
    }
    return false;
  }

  bool insert(const RationalVector& row) { return insert(integer_row(row)); }

  /// Basis of {x : row . x = 0 for every inserted row}, one vector per free
  /// column with that coordinate equal to 1.
  std::vector<RationalVector> kernel_basis() {
    back_substitute();
    std::vector<std::vector<SparseEntry<Rational>>> vecs;
    std::vector<long> free_slot(ncols_, -1);
    for (std::size_t c = 0; c < ncols_; ++c)
      if (pivot_of_col_[c] < 0) {
        free_slot[c] = static_cast<long>(vecs.size());
        vecs.push_back({{static_cast<std::uint32_t>(c), Rational(1)}});
      }
    for (const IntRow& row : rows_) {
      const auto& lead = row.front();
      for (std::size_t i = 1; i < row.size(); ++i) {
        const long slot = free_slot[row[i].index];
        Rational v(-row[i].value, lead.value);
        v.canonicalize();
        vecs[static_cast<std::size_t>(slot)].push_back({lead.index, std::move(v)});
      }
    }
    for (auto& v : vecs)
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    return vecs;
  }

 private:
  static void eliminate(IntRow& row, const IntRow& pivot) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), row.front().value.get_mpz_t(), pivot.front().value.get_mpz_t());
    const BigInt a = pivot.front().value / g;
    const BigInt b = row.front().value / g;
    IntRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    BigInt tmp;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].index < pivot[j].index)) {
        out.push_back({row[i].index, a * row[i].value});
        ++i;
      } else if (i == row.size() || pivot[j].index < row[i].index) {
        out.push_back({pivot[j].index, -b * pivot[j].value});
        ++j;
      } else {
        tmp = a * row[i].value - b * pivot[j].value;
        if (tmp != 0) out.push_back({row[i].index, tmp});
        ++i;
        ++j;
      }
    }
    make_primitive(out);
    row = std::move(out);
  }

  void back_substitute() {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].front().index > rows_[b].front().index; });
    for (std::size_t idx : order) {
      IntRow& row = rows_[idx];
      for (;;) {
        const auto it = std::find_if(row.begin() + 1, row.end(),
                                     [&](const SparseEntry<BigInt>& e) { return pivot_of_col_[e.index] >= 0; });
        if (it == row.end()) break;
        const IntRow& piv = rows_[static_cast<std::size_t>(pivot_of_col_[it->index])];
        // Cancel the entry at the pivot's lead without touching row's lead.
        BigInt g;
        mpz_gcd(g.get_mpz_t(), it->value.get_mpz_t(), piv.front().value.get_mpz_t());
        const BigInt a = piv.front().value / g;
        const BigInt b = it->value / g;
        row = axpby(a, row, BigInt(-b), piv);
        make_primitive(row);
      }
    }
  }

  std::vector<IntRow> rows_;
  std::vector<long> pivot_of_col_;
  std::size_t ncols_;
};

/// Rank of a rational matrix. Rows are inserted shortest first.
inline std::size_t exact_rank(const ExactOperator& m) {
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return m.row(a).size() < m.row(b).size(); });
  RowEchelon e(m.cols());
  for (auto r : order)
    if (!m.row(r).empty()) e.insert(m.row(r));
  return e.rank();
}

/// Basis of the null space {x : m x = 0}.
inline std::vector<RationalVector> exact_kernel(const ExactOperator& m) {
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return m.row(a).size() < m.row(b).size(); });
  RowEchelon e(m.cols());
  for (auto r : order)
    if (!m.row(r).empty()) e.insert(m.row(r));
  return e.kernel_basis();
}

/// Subspace basis in reduced echelon form (unit pivots, zeros in every
/// other basis vector's pivot column).
class SpanBasis {
 public:
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RationalVector>& vectors() const { return basis_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }

  /// Adds v to the span; returns false if it was already a member.
  bool insert(RationalVector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const std::uint32_t lead = v.front().index;
    const Rational inv = 1 / v.front().value;
    for (auto& e : v) e.value *= inv;
    for (auto& b : basis_) {
      const Rational c = value_at(b, lead);
      if (c != 0) b = axpby(Rational(1), b, Rational(-c), v);
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(lead);
    return true;
  }

  /// Coordinates of v in the stored basis, or nullopt if v is not a member.
  std::optional<std::vector<Rational>> coordinates(const RationalVector& v) const {
    std::vector<Rational> c(basis_.size());
    RationalVector residual = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      c[i] = value_at(v, pivots_[i]);
      if (c[i] != 0) residual = axpby(Rational(1), residual, Rational(-c[i]), basis_[i]);
    }
    if (!residual.empty()) return std::nullopt;
    return c;
  }

  bool contains(const RationalVector& v) const { return reduce(v).empty(); }

 private:
  RationalVector reduce(RationalVector v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Rational c = value_at(v, pivots_[i]);
      if (c != 0) v = axpby(Rational(1), v, Rational(-c), basis_[i]);
    }
    return v;
  }

  static Rational value_at(const RationalVector& v, std::uint32_t idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const SparseEntry<Rational>& e, std::uint32_t x) { return e.index < x; });
    return (it != v.end() && it->index == idx) ? it->value : Rational(0);
  }

  std::vector<RationalVector> basis_;
  std::vector<std::uint32_t> pivots_;
};

// ---------------------------------------------------------------------------
// Elimination modulo the Mersenne prime 2^61 - 1.
//
// Used only as an accelerator: rank mod p never exceeds the rational rank,
// so a mod-p kernel is at least as large as the rational one. Callers
// reconstruct rational candidates from the mod-p kernel and verify them
// exactly before trusting the count.

namespace modp {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(z & kPrime) + static_cast<std::uint64_t>(z >> 61);
  if (r >= kPrime) r -= kPrime;
  return r;
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t r = a + b;
  return r >= kPrime ? r - kPrime : r;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv(std::uint64_t a) { return pow(a, kPrime - 2); }

inline std::uint64_t reduce(const BigInt& z) {
  static const BigInt p(std::to_string(kPrime));
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
  return mpz_get_ui(r.get_mpz_t());
}

inline std::optional<std::uint64_t> reduce(const Rational& q) {
  const std::uint64_t d = reduce(q.get_den());
  if (d == 0) return std::nullopt;
  return mul(reduce(q.get_num()), inv(d));
}

/// Smallest-height rational congruent to a mod p (Wang's algorithm), if
/// numerator and denominator both fit below sqrt(p/2).
inline std::optional<Rational> reconstruct(std::uint64_t a) {
  const std::int64_t bound = 1073741823;  // floor(sqrt(p/2))
  __int128 r0 = kPrime, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    const __int128 q = r0 / r1;
    const __int128 r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || t1 > bound || t1 < -bound) return std::nullopt;
  Rational out(BigInt(static_cast<long>(r1)), BigInt(static_cast<long>(t1)));
  out.canonicalize();
  return out;
}

using Row = SparseVector<std::uint64_t>;

class Echelon {
 public:
  explicit Echelon(std::size_t ncols) : pivot_of_col_(ncols, -1), ncols_(ncols) {}

  std::size_t rank() const { return rows_.size(); }

  bool insert(Row row) {
    while (!row.empty()) {
      const auto lead = row.front().index;
      const long p = pivot_of_col_[lead];
      if (p < 0) {
        const std::uint64_t s = inv(row.front().value);
        for (auto& e : row) e.value = mul(e.value, s);
        pivot_of_col_[lead] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
      }
      row = axpy(row, row.front().value, rows_[static_cast<std::size_t>(p)]);
    }
    return false;
  }

  /// Kernel basis mod p, one vector per free column (that coordinate 1).
  std::vector<Row> kernel_basis() {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].front().index > rows_[b].front().index; });
    for (std::size_t idx : order) {
      Row& row = rows_[idx];
      for (;;) {
        auto it = std::find_if(row.begin() + 1, row.end(), [&](const auto& e) { return pivot_of_col_[e.index] >= 0; });
        if (it == row.end()) break;
        const Row& piv = rows_[static_cast<std::size_t>(pivot_of_col_[it->index])];
        row = axpy(row, it->value, piv);
      }
    }
    std::vector<long> free_slot(ncols_, -1);
    std::vector<Row> vecs;
    for (std::size_t c = 0; c < ncols_; ++c)
      if (pivot_of_col_[c] < 0) {
        free_slot[c] = static_cast<long>(vecs.size());
        vecs.push_back({{static_cast<std::uint32_t>(c), 1}});
      }
    for (const Row& row : rows_)
      for (std::size_t i = 1; i < row.size(); ++i)
        vecs[static_cast<std::size_t>(free_slot[row[i].index])].push_back({row.front().index, sub(0, row[i].value)});
    for (auto& v : vecs) std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    return vecs;
  }

 private:
  /// x - c * y
  static Row axpy(const Row& x, std::uint64_t c, const Row& y) {
    Row out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].index < y[j].index)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || y[j].index < x[i].index) {
        out.push_back({y[j].index, sub(0, mul(c, y[j].value))});
        ++j;
      } else {
        const std::uint64_t v = sub(x[i].value, mul(c, y[j].value));
        if (v != 0) out.push_back({x[i].index, v});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Row> rows_;
  std::vector<long> pivot_of_col_;
  std::size_t ncols_;
};

}  // namespace modp

/// Nullity of the system rows . x = 0 over Q. The count is computed mod p,
/// then certified by reconstructing that many rational kernel vectors and
/// checking them against every row exactly; if certification fails the
/// system is solved by exact elimination.
inline std::size_t certified_nullity(const std::vector<RationalVector>& rows, std::size_t ncols) {
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return rows[a].size() < rows[b].size(); });
  bool reducible = true;
  modp::Echelon ech(ncols);
  for (auto r : order) {
    modp::Row row;
    for (const auto& e : rows[r]) {
      const auto v = modp::reduce(e.value);
      if (!v) {
        reducible = false;
        break;
      }
      if (*v != 0) row.push_back({e.index, *v});
    }
    if (!reducible) break;
    ech.insert(std::move(row));
  }
  if (reducible) {
    const auto kernel = ech.kernel_basis();
    std::vector<RationalVector> candidates;
    bool ok = true;
    for (const auto& v : kernel) {
      RationalVector x;
      for (const auto& e : v) {
        const auto q = modp::reconstruct(e.value);
        if (!q) {
          ok = false;
          break;
        }
        x.push_back({e.index, *q});
      }
      if (!ok) break;
      candidates.push_back(std::move(x));
    }
    if (ok) {
      std::vector<Rational> dense(ncols);
      for (const auto& x : candidates) {
        for (const auto& e : x) dense[e.index] = e.value;
        for (const auto& row : rows) {
          Rational s = 0;
          for (const auto& e : row) s += e.value * dense[e.index];
          if (s != 0) {
            ok = false;
            break;
          }
        }
        for (const auto& e : x) dense[e.index] = 0;
        if (!ok) break;
      }
    }
    if (ok) return candidates.size();
  }
  RowEchelon exact(ncols);
  for (auto r : order) exact.insert(rows[r]);
  return ncols - exact.rank();
}

using DenseIntMatrix = std::vector<std::vector<BigInt>>;

/// Leading principal minors of a square integer matrix by Bareiss
/// elimination without pivoting. Stops at the first vanishing minor; the
/// returned vector is then shorter than the matrix.
inline std::vector<BigInt> leading_principal_minors(DenseIntMatrix a) {
  const std::size_t n = a.size();
  std::vector<BigInt> minors;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      minors.push_back(0);
      return minors;
    }
    minors.push_back(a[k][k]);
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return minors;
}

/// Rank and determinant by Bareiss elimination with row pivoting.
inline std::size_t bareiss_rank(DenseIntMatrix a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a.front().size();
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt t = a[i][j] * a[rank][c] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

inline BigInt bareiss_determinant(DenseIntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace howe
