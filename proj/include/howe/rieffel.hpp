#pragma once

// Induction as extraction of invariant subspaces.
//
// Compact case: the inducing irrep H_m of U(M) is realized inside the
// |m|-th tensor power of C^M as the image of a Young symmetrizer. The
// Fock piece F_n carries U(M) through the inverse right action, whose
// derived form sends E_ab to -F_ba. The induced space is the joint kernel
// of D_ab = -F_ba (x) 1 + 1 (x) rho(E_ab) on F_n (x) H_m; the group is
// connected, so this Lie-algebra kernel is the space of group invariants.
//
// Noncompact case: there is no finite-dimensional ambient space to average
// over. The graded stand-in matches the inducing weight against the lowest
// K-types of the oscillator model. A match yields the U(k) module generated
// by the corresponding joint highest-weight vector; no match yields Empty,
// which is a regular outcome rather than an error.

#include <howe/elimination.hpp>
#include <howe/exact.hpp>
#include <howe/fock.hpp>
#include <howe/sparse.hpp>
#include <howe/tensor.hpp>
#include <howe/weights.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace howe {

// ---------------------------------------------------------------------------
// Inducing irreps of gl(M)

struct InducingIrrep {
  Partition m;
  int M = 0;
  int degree = 0;
  std::vector<RationalVector> basis;    // inside the degree-th tensor power of C^M
  std::vector<std::vector<int>> weights;  // gl(M) weight of each basis vector
  std::vector<ExactOperator> rho;       // rho(E_ab) at a*M + b, in basis coordinates
  std::vector<Rational> highest;        // coordinates of the highest-weight vector

  std::size_t dim() const { return basis.size(); }
  const ExactOperator& E(int a, int b) const { return rho[static_cast<std::size_t>(a * M + b)]; }

  /// Gram matrix of the basis under the standard inner product of the tensor power.
  std::vector<std::vector<Rational>> gram() const {
    std::vector<std::vector<Rational>> g(dim(), std::vector<Rational>(dim()));
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) {
        Rational s = 0;
        std::size_t p = 0, q = 0;
        const auto& x = basis[i];
        const auto& y = basis[j];
        while (p < x.size() && q < y.size()) {
          if (x[p].index < y[q].index) ++p;
          else if (y[q].index < x[p].index) ++q;
          else s += x[p++].value * y[q++].value;
        }
        g[i][j] = s;
      }
    return g;
  }
};

namespace detail {

/// The operators stacked vertically; its kernel is their joint kernel.
inline ExactOperator stack(const std::vector<const ExactOperator*>& ops, std::size_t cols) {
  std::size_t rows = 0;
  for (auto* op : ops) rows += op->rows();
  ExactOperator out(rows, cols);
  std::size_t offset = 0;
  for (auto* op : ops) {
    for (std::size_t r = 0; r < op->rows(); ++r) out.set_row(offset + r, op->row(r));
    offset += op->rows();
  }
  return out;
}

}  // namespace detail

inline InducingIrrep build_inducing_irrep(const Partition& m, int M) {
  if (M < 1) throw ShapeMismatch("inducing group needs M >= 1");
  if (m.rows() > M) throw ShapeMismatch("partition " + m.str() + " has more than " + std::to_string(M) + " rows");
  InducingIrrep irrep;
  irrep.m = m;
  irrep.M = M;
  irrep.degree = m.size();
  const MultiIndexBasis tensor(M, irrep.degree);
  if (m.empty()) {
    irrep.basis.push_back({{0, Rational(1)}});
    irrep.weights.push_back(std::vector<int>(static_cast<std::size_t>(M), 0));
    for (int i = 0; i < M * M; ++i) irrep.rho.emplace_back(1, 1);
    irrep.highest = {Rational(1)};
    return irrep;
  }
  const auto columns = young_symmetrizer(row_reading_tableau(m), M).transpose();
  SpanBasis span;
  for (std::size_t c = 0; c < columns.rows(); ++c)
    if (!columns.row(c).empty()) span.insert(columns.row(c));
  irrep.basis = span.vectors();
  for (auto p : span.pivots()) irrep.weights.push_back(tensor.content(p));
  for (int a = 0; a < M; ++a)
    for (int b = 0; b < M; ++b) {
      const auto gen = tensor_gl_generator(a, b, M, irrep.degree);
      ExactOperator rep(irrep.dim(), irrep.dim());
      for (std::size_t j = 0; j < irrep.dim(); ++j) {
        const auto coords = span.coordinates(gen.apply(irrep.basis[j]));
        if (!coords) throw Error("symmetrizer image is not gl(M)-stable");
        for (std::size_t i = 0; i < coords->size(); ++i)
          if ((*coords)[i] != 0) rep.add(i, j, (*coords)[i]);
      }
      irrep.rho.push_back(std::move(rep));
    }
  std::vector<const ExactOperator*> raisers;
  for (int a = 0; a + 1 < M; ++a) raisers.push_back(&irrep.E(a, a + 1));
  std::vector<RationalVector> hw;
  if (raisers.empty()) {
    for (std::size_t j = 0; j < irrep.dim(); ++j) hw.push_back({{static_cast<std::uint32_t>(j), Rational(1)}});
  } else {
    hw = exact_kernel(detail::stack(raisers, irrep.dim()));
  }
  if (hw.size() != 1) throw Error("inducing module " + m.str() + " is not irreducible");
  irrep.highest.assign(irrep.dim(), Rational(0));
  for (const auto& e : hw.front()) irrep.highest[e.index] = e.value;
  return irrep;
}

// ---------------------------------------------------------------------------
// Induced modules

struct InducedModule {
  nlohmann::json inputs;
  std::string ambient;
  bool empty = false;
  std::string reason;
  std::vector<RationalVector> basis;  // in ambient coordinates
  std::vector<ExactOperator> glk;     // restricted E_ij at i*k + j
  int k = 0;
  std::optional<HalfIntWeight> highest_weight;
  std::optional<std::size_t> commutant;
  bool brackets_ok = false;
  bool gram_positive = false;

  std::size_t dimension() const { return basis.size(); }
  const ExactOperator& E(int i, int j) const { return glk[static_cast<std::size_t>(i * k + j)]; }
};

inline nlohmann::json to_json(const InducedModule& mod) {
  nlohmann::json j;
  j["inputs"] = mod.inputs;
  j["ambient"] = mod.ambient;
  j["dimension"] = mod.dimension();
  j["highest_weight"] = mod.highest_weight ? to_json(*mod.highest_weight) : nlohmann::json(nullptr);
  j["commutant_dim"] = mod.commutant ? nlohmann::json(*mod.commutant) : nlohmann::json(nullptr);
  j["empty"] = mod.empty;
  j["reason"] = mod.reason;
  if (!mod.empty) {
    j["checks"] = {{"brackets", mod.brackets_ok ? "pass" : "fail"}, {"gram_positive", mod.gram_positive ? "pass" : "fail"}};
  }
  return j;
}

namespace detail {

/// F_n (x) H_m with basis f (x) j at index f * dim(H_m) + j.
class CompactAmbient {
 public:
  CompactAmbient(const FockModel& model, int n, const InducingIrrep& irrep)
      : model_(model), n_(n), irrep_(irrep), h_(irrep.dim()) {
    const auto& mons = model.space.monomials(n, 0);
    for (int a = 0; a < irrep.M; ++a)
      for (int b = 0; b < irrep.M; ++b) fock_ops_.push_back(model.actions.F(b, a).matrix(model.space, n, 0).transpose());
    for (int i = 0; i < model.space.k(); ++i)
      for (int j = 0; j < model.space.k(); ++j) glk_ops_.push_back(model.actions.E(i, j).matrix(model.space, n, 0).transpose());
    for (int a = 0; a < irrep.M; ++a)
      for (int b = 0; b < irrep.M; ++b) rho_cols_.push_back(irrep.E(a, b).transpose());
    column_degree_.resize(mons.size());
    for (std::size_t f = 0; f < mons.size(); ++f) {
      std::vector<int> deg(static_cast<std::size_t>(irrep.M), 0);
      for (int i = 0; i < model.space.k(); ++i)
        for (int a = 0; a < irrep.M; ++a) deg[static_cast<std::size_t>(a)] += mons[f][static_cast<std::size_t>(model.space.x_var(i, a))];
      column_degree_[f] = std::move(deg);
    }
  }

  std::size_t fock_dim() const { return column_degree_.size(); }
  std::size_t size() const { return fock_dim() * h_; }

  /// Basis vectors of zero weight under the diagonal gl(M) action, grouped by gl(k) weight.
  std::map<std::vector<std::int64_t>, std::vector<std::uint32_t>> zero_weight_classes() const {
    std::map<std::vector<std::int64_t>, std::vector<std::uint32_t>> out;
    const auto& mons = model_.space.monomials(n_, 0);
    for (std::size_t f = 0; f < fock_dim(); ++f)
      for (std::size_t j = 0; j < h_; ++j)
        if (column_degree_[f] == irrep_.weights[j]) out[model_.glk_weight_twice(mons[f])].push_back(static_cast<std::uint32_t>(f * h_ + j));
    return out;
  }

  /// D_ab = -F_ba (x) 1 + 1 (x) rho(E_ab)
  RationalVector diagonal(int a, int b, const RationalVector& v) const {
    const auto idx = static_cast<std::size_t>(a * irrep_.M + b);
    std::map<std::uint32_t, Rational> acc;
    for (const auto& e : v) {
      const std::size_t f = e.index / h_, j = e.index % h_;
      for (const auto& t : fock_ops_[idx].row(f)) acc[static_cast<std::uint32_t>(t.index * h_ + j)] -= e.value * t.value;
      for (const auto& t : rho_cols_[idx].row(j)) acc[static_cast<std::uint32_t>(f * h_ + t.index)] += e.value * t.value;
    }
    return from_map(acc);
  }

  /// E_ij (x) 1
  RationalVector glk(int i, int j, const RationalVector& v) const {
    const auto idx = static_cast<std::size_t>(i * model_.space.k() + j);
    std::map<std::uint32_t, Rational> acc;
    for (const auto& e : v) {
      const std::size_t f = e.index / h_, s = e.index % h_;
      for (const auto& t : glk_ops_[idx].row(f)) acc[static_cast<std::uint32_t>(t.index * h_ + s)] += e.value * t.value;
    }
    return from_map(acc);
  }

  /// Fock inner product <x^a, x^b> = delta a! times the tensor inner product on H_m.
  std::vector<std::vector<Rational>> gram(const std::vector<RationalVector>& vs) const {
    const auto& mons = model_.space.monomials(n_, 0);
    const auto hg = irrep_.gram();
    std::vector<std::vector<Rational>> g(vs.size(), std::vector<Rational>(vs.size()));
    for (std::size_t r = 0; r < vs.size(); ++r)
      for (std::size_t s = r; s < vs.size(); ++s) {
        Rational sum = 0;
        for (const auto& x : vs[r])
          for (const auto& y : vs[s]) {
            if (x.index / h_ != y.index / h_) continue;
            BigInt weight = 1;
            for (auto e : mons[x.index / h_]) weight *= factorial(e);
            sum += x.value * y.value * weight * hg[x.index % h_][y.index % h_];
          }
        g[r][s] = g[s][r] = sum;
      }
    return g;
  }

 private:
  const FockModel& model_;
  int n_;
  const InducingIrrep& irrep_;
  std::size_t h_;
  std::vector<ExactOperator> fock_ops_;  // transposed, so row f lists the image of basis vector f
  std::vector<ExactOperator> glk_ops_;
  std::vector<ExactOperator> rho_cols_;
  std::vector<std::vector<int>> column_degree_;
};

/// Kernel of the simple raisers D_{a,a+1} among zero-weight vectors, one
/// gl(k) weight class at a time.
inline std::vector<RationalVector> compact_invariants(const CompactAmbient& amb, int M) {
  std::vector<RationalVector> out;
  for (const auto& [w, unknowns] : amb.zero_weight_classes()) {
    if (M == 1) {
      for (auto u : unknowns) out.push_back({{u, Rational(1)}});
      continue;
    }
    std::map<std::uint64_t, std::map<std::uint32_t, Rational>> rows;  // (raiser, output) -> unknown -> coefficient
    for (std::size_t c = 0; c < unknowns.size(); ++c)
      for (int a = 0; a + 1 < M; ++a)
        for (const auto& e : amb.diagonal(a, a + 1, {{unknowns[c], Rational(1)}}))
          rows[static_cast<std::uint64_t>(a) * amb.size() + e.index][static_cast<std::uint32_t>(c)] += e.value;
    ExactOperator system(rows.size(), unknowns.size());
    std::size_t r = 0;
    for (const auto& [key, row] : rows) system.set_row(r++, from_map(row));
    for (const auto& kv : exact_kernel(system)) {
      std::map<std::uint32_t, Rational> v;
      for (const auto& e : kv) v[unknowns[e.index]] = e.value;
      out.push_back(from_map(v));
    }
  }
  return out;
}

inline DenseIntMatrix clear_denominators(const std::vector<std::vector<Rational>>& g) {
  BigInt l = 1;
  for (const auto& row : g)
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  DenseIntMatrix out(g.size(), std::vector<BigInt>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      const Rational s = g[i][j] * l;
      out[i][j] = s.get_num();
    }
  return out;
}

inline bool positive_definite(const std::vector<std::vector<Rational>>& g) {
  if (g.empty()) return true;
  const auto minors = leading_principal_minors(clear_denominators(g));
  return std::all_of(minors.begin(), minors.end(), [](const BigInt& x) { return x > 0; });
}

/// Restricts gl(k) to the span of `basis` (coordinates through an echelon
/// basis of the same span); fills glk, commutant, brackets and highest weight.
template <typename Apply>
void restrict_glk(InducedModule& mod, int k, const Apply& apply, Group g) {
  mod.k = k;
  SpanBasis span;
  for (const auto& v : mod.basis) span.insert(v);
  mod.basis = span.vectors();
  const std::size_t dim = mod.basis.size();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      ExactOperator rep(dim, dim);
      for (std::size_t c = 0; c < dim; ++c) {
        const auto coords = span.coordinates(apply(i, j, mod.basis[c]));
        if (!coords) throw Error("induced space is not gl(k)-stable");
        for (std::size_t r = 0; r < dim; ++r)
          if ((*coords)[r] != 0) rep.add(r, c, (*coords)[r]);
      }
      rep.domain_tag = rep.codomain_tag = "induced";
      mod.glk.push_back(std::move(rep));
    }
  mod.brackets_ok = true;
  for (int a = 0; a < k && mod.brackets_ok; ++a)
    for (int b = 0; b < k && mod.brackets_ok; ++b)
      for (int c = 0; c < k && mod.brackets_ok; ++c)
        for (int d = 0; d < k && mod.brackets_ok; ++d) {
          ExactOperator expect(dim, dim);
          expect.domain_tag = expect.codomain_tag = "induced";
          if (b == c) expect = expect + mod.E(a, d);
          if (d == a) expect = expect - mod.E(c, b);
          mod.brackets_ok = commutator(mod.E(a, b), mod.E(c, d)) == expect;
        }
  if (dim == 0) return;
  mod.commutant = commutant_dim(mod.glk);
  std::vector<RationalVector> hw;
  if (k == 1) {
    hw.push_back({{0, Rational(1)}});
  } else {
    std::vector<const ExactOperator*> raisers;
    for (int i = 0; i + 1 < k; ++i) raisers.push_back(&mod.E(i, i + 1));
    hw = exact_kernel(stack(raisers, dim));
  }
  if (hw.size() != 1) return;
  const auto& u = hw.front();
  HalfIntWeight w;
  w.group = g;
  for (int i = 0; i < k; ++i) {
    const auto image = mod.E(i, i).apply(u);
    const Rational lambda = image.empty() ? Rational(0) : image.front().value / u.front().value;
    const Rational doubled = 2 * lambda;
    if (doubled.get_den() != 1) return;
    w.twice.push_back(doubled.get_num().get_si());
  }
  mod.highest_weight = w;
}

}  // namespace detail

struct CompactInduction {
  InducedModule module;
  std::size_t ambient_dim = 0;
  std::size_t zero_weight_dim = 0;
};

/// Invariants of the diagonal gl(M) action on (degree-n piece) (x) H_m,
/// inside an already built compact model of degree >= n.
inline CompactInduction induce_compact_at_degree(const FockModel& model, const Partition& m, int n) {
  const int k = model.space.k(), M = model.space.M();
  if (!model.compact() || model.actions.convention != Convention::sq)
    throw ShapeMismatch("compact induction needs the sq compact model");
  if (n < 0 || n > model.space.max_degree()) throw ShapeMismatch("degree " + std::to_string(n) + " not in the model");
  const auto irrep = build_inducing_irrep(m, M);
  const detail::CompactAmbient amb(model, n, irrep);
  CompactInduction out;
  out.ambient_dim = amb.size();
  for (const auto& [w, u] : amb.zero_weight_classes()) out.zero_weight_dim += u.size();
  auto& mod = out.module;
  mod.inputs = {{"k", k}, {"M", M}, {"m", m.parts()}, {"degree", n}};
  mod.ambient = GradedFockSpace::tag(n, 0) + " x H" + m.str();
  mod.basis = detail::compact_invariants(amb, M);
  for (const auto& v : mod.basis)
    for (int a = 0; a < M; ++a)
      for (int b = 0; b < M; ++b)
        if (!amb.diagonal(a, b, v).empty()) throw Error("invariant vector not annihilated by D_ab");
  mod.empty = mod.basis.empty();
  if (mod.empty) mod.reason = "no invariants in " + mod.ambient;
  detail::restrict_glk(mod, k, [&](int i, int j, const RationalVector& v) { return amb.glk(i, j, v); }, Group::Uk);
  mod.gram_positive = detail::positive_definite(amb.gram(mod.basis));
  return out;
}

inline FockModel compact_model_for_induction(int k, int M, int degree) {
  ModelOptions opt;
  opt.limits.max_degree = std::max(opt.limits.max_degree, degree);
  return build_compact_model(k, M, degree, Convention::sq, opt);
}

/// The induced space from H_m: invariants in the degree-|m| piece.
inline InducedModule induce_compact(const FockModel& model, const Partition& m) {
  return induce_compact_at_degree(model, m, m.size()).module;
}

inline InducedModule induce_compact(int k, int M, const Partition& m) {
  if (m.rows() > M) throw ShapeMismatch("partition " + m.str() + " has more than " + std::to_string(M) + " rows");
  return induce_compact(compact_model_for_induction(k, M, m.size()), m);
}

struct DegreeSelectionReport {
  int k = 0, M = 0;
  Partition m;
  int degree = 0;
  std::size_t ambient_dim = 0;
  std::size_t zero_weight_dim = 0;
  std::size_t invariant_dim = 0;
  bool pass() const { return invariant_dim == 0; }
};

/// Invariants of a piece whose degree differs from |m|; expected to vanish.
inline DegreeSelectionReport degree_selection_check(const FockModel& model, const Partition& m, int n_wrong) {
  if (n_wrong == m.size()) throw ShapeMismatch("degree_selection_check needs a degree other than |m|");
  const auto r = induce_compact_at_degree(model, m, n_wrong);
  return {model.space.k(), model.space.M(), m, n_wrong, r.ambient_dim, r.zero_weight_dim, r.module.dimension()};
}

inline DegreeSelectionReport degree_selection_check(int k, int M, const Partition& m, int n_wrong) {
  if (n_wrong < 0) throw ShapeMismatch("negative degree");
  return degree_selection_check(compact_model_for_induction(k, M, n_wrong), m, n_wrong);
}

struct ProjectorCrossCheck {
  std::size_t zero_weight_dim = 0;
  std::size_t image_dim = 0;
  bool fixes_invariants = false;
  bool image_matches = false;
  bool pass() const { return fixes_invariants && image_matches; }
};

/// Trivial-isotypic projection built from the Casimir sum_ab D_ab D_ba on
/// the zero-weight block, compared against the kernel computation.
inline ProjectorCrossCheck projector_cross_check(const FockModel& model, const Partition& m) {
  const int M = model.space.M();
  const auto irrep = build_inducing_irrep(m, M);
  const int n = m.size();
  const detail::CompactAmbient amb(model, n, irrep);
  // Casimir values on candidate nontrivial irreps with a zero weight
  std::set<Rational> values;
  std::vector<int> nu(static_cast<std::size_t>(M), -n);
  std::function<void(int)> rec = [&](int a) {
    if (a == M) {
      long sum = 0, c = 0;
      bool zero = true;
      for (int i = 0; i < M; ++i) {
        sum += nu[static_cast<std::size_t>(i)];
        c += nu[static_cast<std::size_t>(i)] * (nu[static_cast<std::size_t>(i)] + M + 1 - 2 * (i + 1));
        zero = zero && nu[static_cast<std::size_t>(i)] == 0;
      }
      if (sum == 0 && !zero) values.insert(Rational(c));
      return;
    }
    const int top = a == 0 ? n : nu[static_cast<std::size_t>(a - 1)];
    for (int v = -n; v <= top; ++v) {
      nu[static_cast<std::size_t>(a)] = v;
      rec(a + 1);
    }
  };
  rec(0);
  auto casimir = [&](const RationalVector& v) {
    RationalVector out;
    for (int a = 0; a < M; ++a)
      for (int b = 0; b < M; ++b) out = axpby(Rational(1), out, Rational(1), amb.diagonal(a, b, amb.diagonal(b, a, v)));
    return out;
  };
  auto project = [&](RationalVector v) {
    for (const auto& c : values) v = axpby(Rational(Rational(-1) / c), casimir(v), Rational(1), v);
    return v;
  };
  ProjectorCrossCheck rep;
  const auto invariants = detail::compact_invariants(amb, M);
  SpanBasis span, image;
  for (const auto& v : invariants) span.insert(v);
  rep.fixes_invariants = std::all_of(invariants.begin(), invariants.end(), [&](const auto& v) { return project(v) == v; });
  rep.image_matches = true;
  for (const auto& [w, unknowns] : amb.zero_weight_classes())
    for (auto u : unknowns) {
      ++rep.zero_weight_dim;
      const auto p = project({{u, Rational(1)}});
      image.insert(p);
      if (!span.contains(p)) rep.image_matches = false;
    }
  rep.image_dim = image.dim();
  rep.image_matches = rep.image_matches && image.dim() == span.dim();
  return rep;
}

inline ProjectorCrossCheck projector_cross_check(int k, int M, const Partition& m) {
  return projector_cross_check(compact_model_for_induction(k, M, m.size()), m);
}

// ---------------------------------------------------------------------------
// Noncompact inducing group U(M,N), graded stand-in

/// Induction from the U(M,N) weight `weight` (length M + N). Nonempty
/// exactly when the weight is the lowest K-type of a joint highest-weight
/// vector of the oscillator model up to the model's degree; the module is
/// then the U(k) span of that vector.
inline InducedModule induce_noncompact_graded(const FockModel& model, const HalfIntWeight& weight) {
  const int k = model.space.k(), M = model.space.M(), N = model.space.N();
  const Convention conv = model.actions.convention;
  InducedModule mod;
  mod.k = k;
  mod.inputs = {{"k", k}, {"M", M}, {"N", N}, {"weight", to_json(weight)}, {"degree", model.space.max_degree()},
                {"convention", convention_name(conv)}};
  mod.ambient = "oscillator fock(p,q), p+q <= " + std::to_string(model.space.max_degree());
  mod.empty = true;
  if (weight.size() != static_cast<std::size_t>(M + N)) {
    mod.reason = "weight has " + std::to_string(weight.size()) + " entries, expected " + std::to_string(M + N);
    return mod;
  }
  for (int p = 0; p <= model.space.max_degree(); ++p)
    for (int q = 0; p + q <= model.space.max_degree(); ++q)
      for (const auto& h : joint_highest_weight_vectors(model, p, q)) {
        if (!h.other.same_entries(weight)) continue;
        mod.empty = false;
        mod.ambient = GradedFockSpace::tag(p, q) + " of the oscillator model";
        const auto& mons = model.space.monomials(p, q);
        std::vector<ExactOperator> ops;
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) ops.push_back(model.actions.E(i, j).matrix(model.space, p, q));
        RationalVector seed;
        {
          std::map<std::uint32_t, Rational> acc;
          for (const auto& [mono, c] : h.vector) acc[model.space.index(mono)] = c;
          seed = from_map(acc);
        }
        // close under the lowering operators E_{i+1,i}
        SpanBasis span;
        std::vector<RationalVector> queue{seed};
        span.insert(seed);
        while (!queue.empty()) {
          const auto v = queue.back();
          queue.pop_back();
          for (int i = 0; i + 1 < k; ++i) {
            const auto w = ops[static_cast<std::size_t>((i + 1) * k + i)].apply(v);
            if (!w.empty() && span.insert(w)) queue.push_back(w);
          }
        }
        mod.basis = span.vectors();
        detail::restrict_glk(
            mod, k, [&](int i, int j, const RationalVector& v) { return ops[static_cast<std::size_t>(i * k + j)].apply(v); },
            model.uk_group());
        std::vector<std::vector<Rational>> g(mod.basis.size(), std::vector<Rational>(mod.basis.size()));
        std::vector<BigInt> norm(mons.size());
        for (std::size_t f = 0; f < mons.size(); ++f) {
          norm[f] = 1;
          for (auto e : mons[f]) norm[f] *= factorial(e);
        }
        for (std::size_t r = 0; r < mod.basis.size(); ++r)
          for (std::size_t s = r; s < mod.basis.size(); ++s) {
            Rational sum = 0;
            std::size_t a = 0, b = 0;
            const auto& x = mod.basis[r];
            const auto& y = mod.basis[s];
            while (a < x.size() && b < y.size()) {
              if (x[a].index < y[b].index) ++a;
              else if (y[b].index < x[a].index) ++b;
              else {
                sum += x[a].value * y[b].value * norm[x[a].index];
                ++a;
                ++b;
              }
            }
            g[r][s] = g[s][r] = sum;
          }
        mod.gram_positive = detail::positive_definite(g);
        mod.reason = "lowest K-type at bidegree (" + std::to_string(p) + "," + std::to_string(q) + ")";
        return mod;
      }
  // the weight matches no lowest K-type: say why
  const HalfIntWeight square = conv == Convention::hf ? weight.shifted(k, weight.group) : weight;
  if (!square.integral()) {
    mod.reason = "weight is not integral";
  } else {
    bool below = false;
    for (int a = 0; a < M; ++a) below = below || square.twice[static_cast<std::size_t>(a)] < 2 * k;
    if (below) mod.reason = "some a_i is smaller than k";
    else mod.reason = "no lowest K-type with this weight up to degree " + std::to_string(model.space.max_degree());
  }
  return mod;
}

inline InducedModule induce_noncompact_graded(int k, int M, int N, const HalfIntWeight& weight, int d,
                                              Convention conv = Convention::sq) {
  ModelOptions opt;
  opt.limits.max_degree = std::max(opt.limits.max_degree, d);
  return induce_noncompact_graded(build_oscillator_model(k, M, N, d, conv, opt), weight);
}

}  // namespace howe
