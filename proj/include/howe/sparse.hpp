#pragma once

// Sparse vectors and matrices over an exact scalar type. Rows are kept
// sorted by column with no stored zeros, which is the canonical form used
// for equality and for the triplet dump.

#include <howe/exact.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace howe {

template <typename T>
struct SparseEntry {
  std::uint32_t index;
  T value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sorted (index, value) list with no explicit zeros.
template <typename T>
using SparseVector = std::vector<SparseEntry<T>>;

template <typename T>
SparseVector<T> from_map(const std::map<std::uint32_t, T>& m) {
  SparseVector<T> out;
  out.reserve(m.size());
  for (const auto& [i, v] : m)
    if (v != 0) out.push_back({i, v});
  return out;
}

/// a*x + b*y for sorted sparse vectors.
template <typename T>
SparseVector<T> axpby(const T& a, const SparseVector<T>& x, const T& b, const SparseVector<T>& y) {
  SparseVector<T> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].index < y[j].index)) {
      out.push_back({x[i].index, a * x[i].value});
      ++i;
    } else if (i == x.size() || y[j].index < x[i].index) {
      out.push_back({y[j].index, b * y[j].value});
      ++j;
    } else {
      T v = a * x[i].value + b * y[j].value;
      if (v != 0) out.push_back({x[i].index, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

/// Matrix with sorted sparse rows. Optional basis tags name the domain and
/// codomain; products refuse to compose operators whose tags disagree.
template <typename T>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t n, const T& scale = T(1)) {
    SparseMatrix m(n, n);
    if (scale != 0)
      for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({static_cast<std::uint32_t>(i), scale});
    return m;
  }

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }

  const SparseVector<T>& row(std::size_t r) const { return data_[r]; }
  void set_row(std::size_t r, SparseVector<T> v) { data_[r] = std::move(v); }

  /// Adds value at (r, c). Cheap when columns arrive in increasing order.
  void add(std::size_t r, std::size_t c, const T& value) {
    if (value == 0) return;
    auto& row = data_[r];
    const auto col = static_cast<std::uint32_t>(c);
    if (row.empty() || row.back().index < col) {
      row.push_back({col, value});
      return;
    }
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const SparseEntry<T>& e, std::uint32_t x) { return e.index < x; });
    if (it != row.end() && it->index == col) {
      it->value += value;
      if (it->value == 0) row.erase(it);
    } else {
      row.insert(it, {col, value});
    }
  }

  T at(std::size_t r, std::size_t c) const {
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(c),
                               [](const SparseEntry<T>& e, std::uint32_t x) { return e.index < x; });
    return (it != row.end() && it->index == c) ? it->value : T(0);
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  bool is_zero() const { return nnz() == 0; }

  bool is_diagonal() const {
    for (std::size_t r = 0; r < data_.size(); ++r)
      for (const auto& e : data_[r])
        if (e.index != r) return false;
    return true;
  }

  T trace() const {
    T t(0);
    for (std::size_t r = 0; r < std::min(rows(), cols_); ++r) t += at(r, r);
    return t;
  }

  SparseMatrix transpose() const {
    SparseMatrix out(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& e : data_[r]) out.data_[e.index].push_back({static_cast<std::uint32_t>(r), e.value});
    out.domain_tag = codomain_tag;
    out.codomain_tag = domain_tag;
    return out;
  }

  SparseVector<T> apply(const SparseVector<T>& x) const {
    SparseVector<T> out;
    for (std::size_t r = 0; r < rows(); ++r) {
      T s(0);
      std::size_t i = 0;
      for (const auto& e : data_[r]) {
        while (i < x.size() && x[i].index < e.index) ++i;
        if (i < x.size() && x[i].index == e.index) s += e.value * x[i].value;
      }
      if (s != 0) out.push_back({static_cast<std::uint32_t>(r), std::move(s)});
    }
    return out;
  }

  SparseMatrix scaled(const T& s) const {
    SparseMatrix out(rows(), cols_);
    out.domain_tag = domain_tag;
    out.codomain_tag = codomain_tag;
    if (s == 0) return out;
    for (std::size_t r = 0; r < rows(); ++r) {
      out.data_[r] = data_[r];
      for (auto& e : out.data_[r]) e.value *= s;
    }
    return out;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    check_same_shape(a, b);
    SparseMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) out.data_[r] = axpby(T(1), a.data_[r], T(1), b.data_[r]);
    out.domain_tag = a.domain_tag;
    out.codomain_tag = a.codomain_tag;
    return out;
  }

  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    check_same_shape(a, b);
    SparseMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) out.data_[r] = axpby(T(1), a.data_[r], T(-1), b.data_[r]);
    out.domain_tag = a.domain_tag;
    out.codomain_tag = a.codomain_tag;
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeMismatch("operator product: inner dimensions differ");
    if (!a.domain_tag.empty() && !b.codomain_tag.empty() && a.domain_tag != b.codomain_tag)
      throw ShapeMismatch("operator product: basis " + a.domain_tag + " vs " + b.codomain_tag);
    SparseMatrix out(a.rows(), b.cols());
    std::vector<T> acc(b.cols(), T(0));
    std::vector<char> touched(b.cols(), 0);
    std::vector<std::uint32_t> cols;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      cols.clear();
      for (const auto& ea : a.data_[r])
        for (const auto& eb : b.data_[ea.index]) {
          if (!touched[eb.index]) {
            touched[eb.index] = 1;
            cols.push_back(eb.index);
          }
          acc[eb.index] += ea.value * eb.value;
        }
      std::sort(cols.begin(), cols.end());
      auto& row = out.data_[r];
      for (auto c : cols) {
        if (acc[c] != 0) row.push_back({c, acc[c]});
        acc[c] = T(0);
        touched[c] = 0;
      }
    }
    out.domain_tag = b.domain_tag;
    out.codomain_tag = a.codomain_tag;
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Documented text dump: header `dims R C`, then `row col value` lines
  /// sorted by (row, col); rationals written as num/den.
  void dump_triplets(std::ostream& os) const {
    os << "dims " << rows() << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& e : data_[r]) os << r << ' ' << e.index << ' ' << format_value(e.value) << '\n';
  }

  std::string domain_tag;
  std::string codomain_tag;

 private:
  static std::string format_value(const T& v) {
    if constexpr (std::is_same_v<T, Rational>) {
      return v.get_num().get_str() + "/" + v.get_den().get_str();
    } else {
      return std::to_string(v) + "/1";
    }
  }

  static void check_same_shape(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("operator sum: shapes differ");
  }

  std::size_t cols_ = 0;
  std::vector<SparseVector<T>> data_;
};

using ExactOperator = SparseMatrix<Rational>;
using RationalVector = SparseVector<Rational>;

template <typename T>
SparseMatrix<T> commutator(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  return a * b - b * a;
}

/// Reads the triplet format written by dump_triplets.
inline ExactOperator read_triplets(std::istream& is) {
  std::string word;
  std::size_t r = 0, c = 0;
  if (!(is >> word >> r >> c) || word != "dims") throw ParseError("triplet stream must start with 'dims R C'");
  ExactOperator m(r, c);
  std::size_t row = 0, col = 0;
  std::string value;
  while (is >> row >> col >> value) {
    if (row >= r || col >= c) throw ParseError("triplet index out of range");
    m.add(row, col, parse_rational(value));
  }
  return m;
}

}  // namespace howe
