#pragma once

// Degree-truncated polynomial models of the symmetric Fock space.
//
// Variables x_{ia} (i < k, a < M) and y_{ib} (i < k, b < N). The compact
// model (N = 0) carries commuting gl(k) and gl(M) actions by first-order
// operators. The oscillator model adds the y variables and realizes
// gl(k) x u(M,N): gl(M) and gl(N) stay first order, the noncompact block
// acts by the raisers R_ab = sum_i x_ia y_ib (multiplication) and the
// lowerers L_ab = sum_i d/dx_ia d/dy_ib. The y variables carry the
// conjugated gl(N) action, so a bidegree-(p,q) monomial has gl(k) weight
// (row sums of x) - (row sums of y).
//
// Inside gl(M+N) the noncompact generators sit as E_{a,M+b} = R_ab and
// E_{M+b,a} = -L_ab; with that sign [E_{a,M+b}, E_{M+b,a}] = E_aa - E_{M+b,M+b}
// requires c_M + c_N = k for the additive constants of the diagonal blocks.
//
// Additive constants (doubled):
//   compact     sq: c_k = 0,         c_M = 0
//               hf: c_k = M/2,       c_M = k/2
//   oscillator  sq: c_k = 0,         c_M = k,   c_N = 0
//               hf: c_k = (M-N)/2,   c_M = k/2, c_N = k/2
// The gl(N) generators are G_bc = -sum_i y_ic d/dy_ib - c_N delta_bc.

#include <howe/elimination.hpp>
#include <howe/exact.hpp>
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
#include <utility>
#include <vector>

namespace howe {

using Monomial = std::vector<std::uint8_t>;
using Polynomial = std::map<Monomial, Rational>;

struct FockLimits {
  int max_degree = 6;
  std::size_t max_piece = kDefaultBasisCap;
};

class GradedFockSpace {
 public:
  GradedFockSpace(int k, int M, int N, int d, const FockLimits& lim = {}) : k_(k), M_(M), N_(N), d_(d) {
    if (k < 1 || M < 1 || N < 0 || d < 0) throw ShapeMismatch("Fock space needs k, M >= 1, N >= 0, d >= 0");
    if (d > lim.max_degree) throw TooLarge("degree " + std::to_string(d) + " exceeds cap " + std::to_string(lim.max_degree));
    for (int p = 0; p <= d; ++p)
      for (int q = 0; p + q <= d; ++q) {
        if (N == 0 && q > 0) continue;
        const BigInt expect = expected_dimension(p, q);
        if (expect > static_cast<unsigned long>(lim.max_piece))
          throw TooLarge("graded piece (" + std::to_string(p) + "," + std::to_string(q) + ") has " + expect.get_str() + " monomials");
        auto& piece = pieces_[{p, q}];
        Monomial cur(static_cast<std::size_t>(nvars()), 0);
        enumerate(cur, 0, nx(), p, [&] { enumerate(cur, nx(), nvars(), q, [&] { piece.push_back(cur); }); });
        for (std::size_t i = 0; i < piece.size(); ++i) index_[piece[i]] = static_cast<std::uint32_t>(i);
      }
  }

  int k() const { return k_; }
  int M() const { return M_; }
  int N() const { return N_; }
  int max_degree() const { return d_; }
  int nx() const { return k_ * M_; }
  int nvars() const { return k_ * (M_ + N_); }
  int x_var(int i, int a) const { return i * M_ + a; }
  int y_var(int i, int b) const { return k_ * M_ + i * N_ + b; }

  bool has_piece(int p, int q) const { return pieces_.count({p, q}) > 0; }

  /// Monomials of bidegree (p,q) in decreasing lexicographic order of
  /// exponent vectors (x variables first, row-major).
  const std::vector<Monomial>& monomials(int p, int q) const {
    auto it = pieces_.find({p, q});
    if (it == pieces_.end()) throw ShapeMismatch("no graded piece " + tag(p, q));
    return it->second;
  }

  std::size_t dimension(int p, int q) const { return monomials(p, q).size(); }

  BigInt expected_dimension(int p, int q) const {
    return binomial(nx() + p - 1, p) * (N_ == 0 ? BigInt(q == 0 ? 1 : 0) : binomial(k_ * N_ + q - 1, q));
  }

  std::pair<int, int> bidegree(const Monomial& m) const {
    int p = 0, q = 0;
    for (int v = 0; v < nvars(); ++v) (v < nx() ? p : q) += m[static_cast<std::size_t>(v)];
    return {p, q};
  }

  std::uint32_t index(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw ShapeMismatch("monomial outside the truncated Fock space");
    return it->second;
  }

  bool contains(const Monomial& m) const { return index_.count(m) > 0; }

  static std::string tag(int p, int q) { return "fock(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

  std::string monomial_str(const Monomial& m) const {
    std::string s;
    for (int v = 0; v < nvars(); ++v) {
      const int e = m[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      if (!s.empty()) s += "*";
      if (v < nx()) s += "x" + std::to_string(v / M_ + 1) + std::to_string(v % M_ + 1);
      else s += "y" + std::to_string((v - nx()) / N_ + 1) + std::to_string((v - nx()) % N_ + 1);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
  }

 private:
  static void enumerate(Monomial& cur, int from, int to, int remaining, const std::function<void()>& emit) {
    if (from == to) {
      if (remaining == 0) emit();
      return;
    }
    if (from == to - 1) {
      cur[static_cast<std::size_t>(from)] = static_cast<std::uint8_t>(remaining);
      emit();
      cur[static_cast<std::size_t>(from)] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[static_cast<std::size_t>(from)] = static_cast<std::uint8_t>(e);
      enumerate(cur, from + 1, to, remaining - e, emit);
    }
    cur[static_cast<std::size_t>(from)] = 0;
  }

  int k_, M_, N_, d_;
  std::map<std::pair<int, int>, std::vector<Monomial>> pieces_;
  std::map<Monomial, std::uint32_t> index_;
};

// ---------------------------------------------------------------------------
// Differential operators with polynomial coefficients, normal ordered

struct DiffTerm {
  Rational coef;
  std::vector<int> mul;   // variables multiplied in (after differentiating)
  std::vector<int> diff;  // variables differentiated
};

class DiffOp {
 public:
  DiffOp() = default;
  DiffOp(std::string name, int dp, int dq) : name_(std::move(name)), dp_(dp), dq_(dq) {}

  const std::string& name() const { return name_; }
  int dp() const { return dp_; }
  int dq() const { return dq_; }
  const Rational& constant() const { return constant_; }
  const std::vector<DiffTerm>& terms() const { return terms_; }

  void add_term(Rational c, std::vector<int> mul, std::vector<int> diff) {
    terms_.push_back({std::move(c), std::move(mul), std::move(diff)});
  }
  void set_constant(Rational c) { constant_ = std::move(c); }

  /// Adds op(m) scaled by s into out.
  void apply_into(const Monomial& m, const Rational& s, Polynomial& out) const {
    for (const auto& t : terms_) {
      Monomial r = m;
      Rational c = t.coef * s;
      bool zero = false;
      for (int v : t.diff) {
        auto& e = r[static_cast<std::size_t>(v)];
        if (e == 0) {
          zero = true;
          break;
        }
        c *= e;
        --e;
      }
      if (zero) continue;
      for (int v : t.mul) ++r[static_cast<std::size_t>(v)];
      add(out, r, c);
    }
    if (constant_ != 0) add(out, m, constant_ * s);
  }

  Polynomial apply(const Polynomial& p) const {
    Polynomial out;
    for (const auto& [m, c] : p) apply_into(m, c, out);
    return out;
  }

  Polynomial apply(const Monomial& m) const {
    Polynomial out;
    apply_into(m, Rational(1), out);
    return out;
  }

  /// Matrix from the (p,q) piece to the (p+dp, q+dq) piece.
  ExactOperator matrix(const GradedFockSpace& space, int p, int q) const {
    const auto& src = space.monomials(p, q);
    const auto& dst = space.monomials(p + dp_, q + dq_);
    ExactOperator out(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& [m, v] : apply(src[c])) out.add(space.index(m), c, v);
    out.domain_tag = GradedFockSpace::tag(p, q);
    out.codomain_tag = GradedFockSpace::tag(p + dp_, q + dq_);
    return out;
  }

  static void add(Polynomial& p, const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = p.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) p.erase(it);
    }
  }

 private:
  std::string name_;
  int dp_ = 0, dq_ = 0;
  std::vector<DiffTerm> terms_;
  Rational constant_ = 0;
};

// ---------------------------------------------------------------------------
// Lie algebra actions

struct LieActionSet {
  Convention convention = Convention::sq;
  bool compact = true;
  int k = 0, M = 0, N = 0;
  std::int64_t twice_ck = 0, twice_cm = 0, twice_cn = 0;
  std::vector<DiffOp> glk;    // E_ij at i*k + j
  std::vector<DiffOp> glm;    // F_ab at a*M + b
  std::vector<DiffOp> gln;    // G_bc at b*N + c
  std::vector<DiffOp> raise;  // R_ab at a*N + b
  std::vector<DiffOp> lower;  // L_ab at a*N + b

  const DiffOp& E(int i, int j) const { return glk[static_cast<std::size_t>(i * k + j)]; }
  const DiffOp& F(int a, int b) const { return glm[static_cast<std::size_t>(a * M + b)]; }
  const DiffOp& G(int b, int c) const { return gln[static_cast<std::size_t>(b * N + c)]; }
  const DiffOp& R(int a, int b) const { return raise[static_cast<std::size_t>(a * N + b)]; }
  const DiffOp& L(int a, int b) const { return lower[static_cast<std::size_t>(a * N + b)]; }

  /// The u(M,N) generator in gl(M+N) position (A, B); the lower-left block
  /// is -L, returned through `sign`.
  const DiffOp& umn(int A, int B, int& sign) const {
    sign = 1;
    if (A < M && B < M) return F(A, B);
    if (A >= M && B >= M) return G(A - M, B - M);
    if (A < M) return R(A, B - M);
    sign = -1;
    return L(B, A - M);
  }
};

struct RelationReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

struct FockModel {
  GradedFockSpace space;
  LieActionSet actions;
  RelationReport relations;

  bool compact() const { return actions.compact; }

  /// gl(k) weight of a monomial, doubled, including the additive constant.
  std::vector<std::int64_t> glk_weight_twice(const Monomial& m) const {
    std::vector<std::int64_t> w(static_cast<std::size_t>(space.k()), actions.twice_ck);
    for (int i = 0; i < space.k(); ++i) {
      for (int a = 0; a < space.M(); ++a) w[static_cast<std::size_t>(i)] += 2 * m[static_cast<std::size_t>(space.x_var(i, a))];
      for (int b = 0; b < space.N(); ++b) w[static_cast<std::size_t>(i)] -= 2 * m[static_cast<std::size_t>(space.y_var(i, b))];
    }
    return w;
  }

  /// Weight under the other member of the pair: (F_aa ..., G_bb ...), doubled.
  std::vector<std::int64_t> other_weight_twice(const Monomial& m) const {
    std::vector<std::int64_t> w;
    for (int a = 0; a < space.M(); ++a) {
      std::int64_t s = actions.twice_cm;
      for (int i = 0; i < space.k(); ++i) s += 2 * m[static_cast<std::size_t>(space.x_var(i, a))];
      w.push_back(s);
    }
    for (int b = 0; b < space.N(); ++b) {
      std::int64_t s = -actions.twice_cn;
      for (int i = 0; i < space.k(); ++i) s -= 2 * m[static_cast<std::size_t>(space.y_var(i, b))];
      w.push_back(s);
    }
    return w;
  }

  Group uk_group() const { return actions.convention == Convention::hf ? Group::CoverUk : Group::Uk; }
  Group other_group() const {
    const bool hf = actions.convention == Convention::hf;
    if (compact()) return hf ? Group::CoverUM : Group::UM;
    return hf ? Group::CoverUMN : Group::UMN;
  }
};

namespace detail {

inline LieActionSet make_actions(int k, int M, int N, Convention conv, bool compact, std::int64_t ck,
                                 std::int64_t cm, std::int64_t cn, const GradedFockSpace& sp) {
  LieActionSet a;
  a.convention = conv;
  a.compact = compact;
  a.k = k;
  a.M = M;
  a.N = N;
  a.twice_ck = ck;
  a.twice_cm = cm;
  a.twice_cn = cn;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      DiffOp op("E" + std::to_string(i + 1) + std::to_string(j + 1), 0, 0);
      for (int c = 0; c < M; ++c) op.add_term(Rational(1), {sp.x_var(i, c)}, {sp.x_var(j, c)});
      for (int b = 0; b < N; ++b) op.add_term(Rational(-1), {sp.y_var(j, b)}, {sp.y_var(i, b)});
      if (i == j) op.set_constant(make_rational(static_cast<long>(ck), 2));
      a.glk.push_back(std::move(op));
    }
  for (int p = 0; p < M; ++p)
    for (int r = 0; r < M; ++r) {
      DiffOp op("F" + std::to_string(p + 1) + std::to_string(r + 1), 0, 0);
      for (int i = 0; i < k; ++i) op.add_term(Rational(1), {sp.x_var(i, p)}, {sp.x_var(i, r)});
      if (p == r) op.set_constant(make_rational(static_cast<long>(cm), 2));
      a.glm.push_back(std::move(op));
    }
  for (int b = 0; b < N; ++b)
    for (int c = 0; c < N; ++c) {
      DiffOp op("G" + std::to_string(b + 1) + std::to_string(c + 1), 0, 0);
      for (int i = 0; i < k; ++i) op.add_term(Rational(-1), {sp.y_var(i, c)}, {sp.y_var(i, b)});
      if (b == c) op.set_constant(make_rational(-static_cast<long>(cn), 2));
      a.gln.push_back(std::move(op));
    }
  for (int p = 0; p < M; ++p)
    for (int b = 0; b < N; ++b) {
      DiffOp r("R" + std::to_string(p + 1) + std::to_string(b + 1), 1, 1);
      DiffOp l("L" + std::to_string(p + 1) + std::to_string(b + 1), -1, -1);
      for (int i = 0; i < k; ++i) {
        r.add_term(Rational(1), {sp.x_var(i, p), sp.y_var(i, b)}, {});
        l.add_term(Rational(1), {}, {sp.x_var(i, p), sp.y_var(i, b)});
      }
      a.raise.push_back(std::move(r));
      a.lower.push_back(std::move(l));
    }
  return a;
}

/// Scaled sum of DiffOps applied to a monomial.
inline Polynomial combo(const std::vector<std::pair<int, const DiffOp*>>& ops, const Monomial& m) {
  Polynomial out;
  for (const auto& [s, op] : ops) op->apply_into(m, Rational(s), out);
  return out;
}

inline Polynomial commutator_on(const DiffOp& a, int sa, const DiffOp& b, int sb, const Monomial& m) {
  Polynomial out;
  const Polynomial bm = b.apply(m);
  for (const auto& [mono, c] : bm) a.apply_into(mono, c * (sa * sb), out);
  const Polynomial am = a.apply(m);
  for (const auto& [mono, c] : am) b.apply_into(mono, c * (-sa * sb), out);
  return out;
}

/// Checks [X_AB, X_CD] = delta_BC X_AD - delta_DA X_CB on every basis
/// monomial, for a family indexed by n x n positions with signs.
inline void check_gl_family(const GradedFockSpace& sp, int n,
                            const std::function<const DiffOp&(int, int, int&)>& gen, const std::string& family,
                            RelationReport& rep) {
  std::vector<Monomial> all;
  for (int p = 0; p <= sp.max_degree(); ++p)
    for (int q = 0; p + q <= sp.max_degree(); ++q)
      if (sp.has_piece(p, q))
        for (const auto& m : sp.monomials(p, q)) all.push_back(m);
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B)
      for (int C = 0; C < n; ++C)
        for (int D = 0; D < n; ++D) {
          if (std::make_pair(A, B) >= std::make_pair(C, D)) continue;
          int sab = 1, scd = 1;
          const DiffOp& x = gen(A, B, sab);
          const DiffOp& y = gen(C, D, scd);
          std::vector<std::pair<int, const DiffOp*>> rhs;
          int s = 1;
          if (B == C) {
            const DiffOp& z = gen(A, D, s);
            rhs.push_back({s, &z});
          }
          if (D == A) {
            const DiffOp& z = gen(C, B, s);
            rhs.push_back({-s, &z});
          }
          for (const auto& m : all) {
            ++rep.checked;
            if (commutator_on(x, sab, y, scd, m) != combo(rhs, m)) {
              rep.failures.push_back(family + ": [" + x.name() + "," + y.name() + "] on " + sp.monomial_str(m));
              break;
            }
          }
        }
}

inline void check_commuting(const GradedFockSpace& sp, const std::vector<DiffOp>& left,
                            const std::vector<const DiffOp*>& right, RelationReport& rep) {
  auto commute = [&](const DiffOp& x, const DiffOp& y) {
    for (int p = 0; p <= sp.max_degree(); ++p)
      for (int q = 0; p + q <= sp.max_degree(); ++q) {
        if (!sp.has_piece(p, q)) continue;
        for (const auto& m : sp.monomials(p, q)) {
          ++rep.checked;
          if (!commutator_on(x, 1, y, 1, m).empty()) {
            rep.failures.push_back("[" + x.name() + "," + y.name() + "] != 0 on " + sp.monomial_str(m));
            return;
          }
        }
      }
  };
  for (const auto& x : left)
    for (const DiffOp* y : right) commute(x, *y);
}

inline RelationReport verify_relations(const GradedFockSpace& sp, const LieActionSet& a) {
  RelationReport rep;
  check_gl_family(sp, a.k, [&](int i, int j, int& s) -> const DiffOp& { s = 1; return a.E(i, j); }, "gl(k)", rep);
  const int n = a.M + a.N;
  check_gl_family(sp, n, [&](int A, int B, int& s) -> const DiffOp& { return a.umn(A, B, s); },
                  a.compact ? "gl(M)" : "u(M,N)", rep);
  std::vector<const DiffOp*> other;
  for (const auto& op : a.glm) other.push_back(&op);
  for (const auto& op : a.gln) other.push_back(&op);
  for (const auto& op : a.raise) other.push_back(&op);
  for (const auto& op : a.lower) other.push_back(&op);
  check_commuting(sp, a.glk, other, rep);
  for (int p = 0; p <= sp.max_degree(); ++p)
    for (int q = 0; p + q <= sp.max_degree(); ++q)
      if (sp.has_piece(p, q) && sp.expected_dimension(p, q) != static_cast<unsigned long>(sp.dimension(p, q)))
        rep.failures.push_back("graded dimension of " + GradedFockSpace::tag(p, q));
  return rep;
}

}  // namespace detail

struct ModelOptions {
  FockLimits limits;
  bool verify = true;
};

/// U(k) x U(M) on polynomials in k*M variables, through degree d.
inline FockModel build_compact_model(int k, int M, int d, Convention conv = Convention::sq, const ModelOptions& opt = {}) {
  GradedFockSpace sp(k, M, 0, d, opt.limits);
  const bool hf = conv == Convention::hf;
  auto acts = detail::make_actions(k, M, 0, conv, true, hf ? M : 0, hf ? k : 0, 0, sp);
  FockModel model{std::move(sp), std::move(acts), {}};
  if (opt.verify) {
    model.relations = detail::verify_relations(model.space, model.actions);
    if (!model.relations.pass()) throw Error("compact model relation failed: " + model.relations.failures.front());
  }
  return model;
}

/// U(k) x U(M,N) oscillator model on polynomials in k*(M+N) variables,
/// through total degree d.
inline FockModel build_oscillator_model(int k, int M, int N, int d, Convention conv, const ModelOptions& opt = {}) {
  if (N < 1) throw ShapeMismatch("oscillator model needs N >= 1");
  GradedFockSpace sp(k, M, N, d, opt.limits);
  const bool hf = conv == Convention::hf;
  auto acts = hf ? detail::make_actions(k, M, N, conv, false, M - N, k, k, sp)
                 : detail::make_actions(k, M, N, conv, false, 0, 2 * k, 0, sp);
  FockModel model{std::move(sp), std::move(acts), {}};
  if (opt.verify) {
    model.relations = detail::verify_relations(model.space, model.actions);
    if (!model.relations.pass()) throw Error("oscillator model relation failed: " + model.relations.failures.front());
  }
  return model;
}

// ---------------------------------------------------------------------------
// Joint highest-weight vectors

struct JointHwv {
  int p = 0, q = 0;
  HalfIntWeight u_k;
  HalfIntWeight other;
  Polynomial vector;
};

namespace detail {

inline bool weakly_decreasing(const std::vector<std::int64_t>& w, std::size_t from, std::size_t to) {
  for (std::size_t i = from + 1; i < to; ++i)
    if (w[i] > w[i - 1]) return false;
  return true;
}

}  // namespace detail

/// Exact basis of the joint kernel, in the (p,q) piece, of the gl(k) simple
/// raisers and the compact-side simple raisers; for the oscillator model the
/// u(M,N) lowerers are included, which selects lowest-K-type vectors.
/// Vectors are found one joint weight space at a time (only dominant
/// weights can carry highest-weight vectors).
inline std::vector<JointHwv> joint_highest_weight_vectors(const FockModel& model, int p, int q = 0) {
  const auto& sp = model.space;
  const auto& a = model.actions;
  std::vector<const DiffOp*> kill;
  for (int i = 0; i + 1 < a.k; ++i) kill.push_back(&a.E(i, i + 1));
  for (int c = 0; c + 1 < a.M; ++c) kill.push_back(&a.F(c, c + 1));
  for (int b = 0; b + 1 < a.N; ++b) kill.push_back(&a.G(b, b + 1));
  for (const auto& l : a.lower) kill.push_back(&l);

  std::map<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>, std::vector<std::uint32_t>> classes;
  const auto& monos = sp.monomials(p, q);
  for (std::uint32_t i = 0; i < monos.size(); ++i)
    classes[{model.glk_weight_twice(monos[i]), model.other_weight_twice(monos[i])}].push_back(i);

  std::vector<JointHwv> out;
  for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
    const auto& [wu, wo] = it->first;
    if (!detail::weakly_decreasing(wu, 0, wu.size()) || !detail::weakly_decreasing(wo, 0, static_cast<std::size_t>(a.M)) ||
        !detail::weakly_decreasing(wo, static_cast<std::size_t>(a.M), wo.size()))
      continue;
    const auto& members = it->second;
    std::map<std::pair<std::size_t, Monomial>, std::map<std::uint32_t, Rational>> eqs;
    for (std::size_t op = 0; op < kill.size(); ++op)
      for (std::uint32_t c = 0; c < members.size(); ++c)
        for (const auto& [m, v] : kill[op]->apply(monos[members[c]])) eqs[{op, m}][c] += v;
    RowEchelon ech(members.size());
    for (const auto& [key, row] : eqs) {
      auto v = from_map(row);
      if (!v.empty()) ech.insert(v);
    }
    for (const auto& kv : ech.kernel_basis()) {
      JointHwv h{p, q, {wu, model.uk_group()}, {wo, model.other_group()}, {}};
      for (const auto& e : kv) h.vector[monos[members[e.index]]] = e.value;
      out.push_back(std::move(h));
    }
  }
  return out;
}

/// Checks a claimed joint highest-weight vector directly: every raiser (and
/// for the oscillator model every lowerer) kills it and the diagonal
/// generators act by the recorded weights.
inline bool is_joint_highest_weight(const FockModel& model, const JointHwv& h) {
  const auto& a = model.actions;
  auto kills = [&](const DiffOp& op) { return op.apply(h.vector).empty(); };
  for (int i = 0; i + 1 < a.k; ++i)
    if (!kills(a.E(i, i + 1))) return false;
  for (int c = 0; c + 1 < a.M; ++c)
    if (!kills(a.F(c, c + 1))) return false;
  for (int b = 0; b + 1 < a.N; ++b)
    if (!kills(a.G(b, b + 1))) return false;
  for (const auto& l : a.lower)
    if (!kills(l)) return false;
  auto eigen = [&](const DiffOp& op, std::int64_t twice) {
    Polynomial expect;
    for (const auto& [m, c] : h.vector) expect[m] = c * make_rational(static_cast<long>(twice), 2);
    if (twice == 0) expect.clear();
    return op.apply(h.vector) == expect;
  };
  for (int i = 0; i < a.k; ++i)
    if (!eigen(a.E(i, i), h.u_k.twice[static_cast<std::size_t>(i)])) return false;
  for (int c = 0; c < a.M; ++c)
    if (!eigen(a.F(c, c), h.other.twice[static_cast<std::size_t>(c)])) return false;
  for (int b = 0; b < a.N; ++b)
    if (!eigen(a.G(b, b), h.other.twice[static_cast<std::size_t>(a.M + b)])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Howe duality U(k) x U(M)

struct HoweLabel {
  HalfIntWeight u_k;
  HalfIntWeight other;
  int multiplicity = 0;
};

struct HoweDegree {
  int degree = 0;
  std::vector<HoweLabel> labels;
  bool labels_ok = false;
  BigInt dimension_sum;
  std::size_t graded_dimension = 0;
  bool dims_ok = false;
  std::optional<std::size_t> commutant;
  bool commutant_ok = false;
  bool pass() const { return labels_ok && dims_ok && commutant_ok; }
};

struct HoweReport {
  int k = 0, M = 0, d = 0;
  Convention convention = Convention::sq;
  bool relations_ok = false;
  std::vector<HoweDegree> degrees;
  bool stability_checked = false;
  bool stability_ok = true;
  std::vector<std::string> falsifications;
  bool pass() const { return falsifications.empty(); }
};

struct HoweOptions {
  Convention convention = Convention::sq;
  bool commutant = true;
  bool stability = true;
  CommutantOptions commutant_options;
};

namespace detail {

inline std::vector<std::pair<Partition, Partition>> labels_as_partitions(const FockModel& model,
                                                                         const std::vector<JointHwv>& hw) {
  std::vector<std::pair<Partition, Partition>> out;
  for (const auto& h : hw) {
    std::vector<int> a, b;
    for (auto t : h.u_k.twice) a.push_back(static_cast<int>((t - model.actions.twice_ck) / 2));
    for (auto t : h.other.twice) b.push_back(static_cast<int>((t - model.actions.twice_cm) / 2));
    out.emplace_back(Partition(a), Partition(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ExactOperator> compact_generators(const FockModel& model, int n) {
  const auto& a = model.actions;
  std::vector<ExactOperator> gens;
  for (int i = 0; i < a.k; ++i) gens.push_back(a.E(i, i).matrix(model.space, n, 0));
  for (int c = 0; c < a.M; ++c) gens.push_back(a.F(c, c).matrix(model.space, n, 0));
  for (int i = 0; i + 1 < a.k; ++i) {
    gens.push_back(a.E(i, i + 1).matrix(model.space, n, 0));
    gens.push_back(a.E(i + 1, i).matrix(model.space, n, 0));
  }
  for (int c = 0; c + 1 < a.M; ++c) {
    gens.push_back(a.F(c, c + 1).matrix(model.space, n, 0));
    gens.push_back(a.F(c + 1, c).matrix(model.space, n, 0));
  }
  return gens;
}

}  // namespace detail

/// Per degree n <= d: the joint highest weights are exactly the partitions
/// of n with at most min(k,M) rows, each once, on both sides; the Cauchy
/// dimension identity holds; the commutant of gl(k) + gl(M) has dimension
/// equal to the number of labels. Stability: labels at k and k+1 agree for
/// degrees n <= k.
inline HoweReport verify_howe(int k, int M, int d, const HoweOptions& opt = {}) {
  HoweReport rep;
  rep.k = k;
  rep.M = M;
  rep.d = d;
  rep.convention = opt.convention;
  const FockModel model = build_compact_model(k, M, d, opt.convention);
  rep.relations_ok = model.relations.pass();
  for (int n = 0; n <= d; ++n) {
    HoweDegree deg;
    deg.degree = n;
    const auto hw = joint_highest_weight_vectors(model, n);
    for (const auto& h : hw) {
      auto it = std::find_if(deg.labels.begin(), deg.labels.end(),
                             [&](const HoweLabel& l) { return l.u_k == h.u_k && l.other == h.other; });
      if (it == deg.labels.end()) deg.labels.push_back({h.u_k, h.other, 1});
      else ++it->multiplicity;
    }
    // expected labels, shifted by the additive constants of the convention
    std::vector<HoweLabel> expect;
    for (const auto& lambda : partitions_of(n, std::min(k, M))) {
      const auto pk = lambda.padded(k);
      const auto pm = lambda.padded(M);
      expect.push_back({HalfIntWeight::from_integers({pk.begin(), pk.end()}, model.uk_group()).shifted(model.actions.twice_ck, model.uk_group()),
                        HalfIntWeight::from_integers({pm.begin(), pm.end()}, model.other_group()).shifted(model.actions.twice_cm, model.other_group()),
                        1});
      deg.dimension_sum += BigInt(static_cast<unsigned long>(weyl_dim(lambda, k))) * static_cast<unsigned long>(weyl_dim(lambda, M));
    }
    auto key = [](const HoweLabel& l) { return std::make_tuple(l.u_k.twice, l.other.twice, l.multiplicity); };
    std::sort(deg.labels.begin(), deg.labels.end(), [&](const auto& x, const auto& y) { return key(x) > key(y); });
    std::sort(expect.begin(), expect.end(), [&](const auto& x, const auto& y) { return key(x) > key(y); });
    deg.labels_ok = deg.labels.size() == expect.size() &&
                    std::equal(deg.labels.begin(), deg.labels.end(), expect.begin(),
                               [&](const auto& x, const auto& y) { return key(x) == key(y); });
    deg.labels_ok = deg.labels_ok && std::all_of(hw.begin(), hw.end(), [&](const JointHwv& h) { return is_joint_highest_weight(model, h); });
    deg.graded_dimension = model.space.dimension(n, 0);
    deg.dims_ok = deg.dimension_sum == static_cast<unsigned long>(deg.graded_dimension) &&
                  deg.dimension_sum == model.space.expected_dimension(n, 0);
    if (opt.commutant) {
      deg.commutant = commutant_dim(detail::compact_generators(model, n), opt.commutant_options);
      deg.commutant_ok = *deg.commutant == deg.labels.size();
    } else {
      deg.commutant_ok = true;
    }
    if (!deg.labels_ok) rep.falsifications.push_back("degree " + std::to_string(n) + ": label set");
    if (!deg.dims_ok) rep.falsifications.push_back("degree " + std::to_string(n) + ": dimension identity");
    if (!deg.commutant_ok) rep.falsifications.push_back("degree " + std::to_string(n) + ": commutant");
    rep.degrees.push_back(std::move(deg));
  }
  if (opt.stability) {
    const int top = std::min(k, d);
    const FockModel bigger = build_compact_model(k + 1, M, top, opt.convention);
    rep.stability_checked = true;
    for (int n = 0; n <= top; ++n) {
      auto here = detail::labels_as_partitions(model, joint_highest_weight_vectors(model, n));
      auto there = detail::labels_as_partitions(bigger, joint_highest_weight_vectors(bigger, n));
      if (here != there) {
        rep.stability_ok = false;
        rep.falsifications.push_back("degree " + std::to_string(n) + ": labels differ between k and k+1");
      }
    }
  }
  if (!rep.relations_ok) rep.falsifications.push_back("bracket relations");
  return rep;
}

// ---------------------------------------------------------------------------
// Kashiwara-Vergne pairs U(k) x U(M,N)

struct KvEntry {
  int p = 0, q = 0;
  SignedWeight label;
  HalfIntWeight u_k;
  HalfIntWeight other;
  HalfIntWeight predicted_u_k;
  HalfIntWeight predicted_other;
  bool matches = false;
};

struct KvReport {
  int k = 0, M = 0, N = 0, d = 0;
  Convention convention = Convention::sq;
  bool relations_ok = false;
  std::vector<KvEntry> entries;
  std::vector<std::string> unexplained;  // weights found that no label predicts
  std::vector<std::string> missing;      // labels predicted but not found
  std::vector<std::string> renormalized_present;
  bool renormalized_checked = false;
  std::vector<std::string> falsifications;
  bool pass() const { return falsifications.empty(); }

  /// U(M,N) side weight paired with a U(k) label, if it occurs.
  std::optional<KvEntry> find_other(const HalfIntWeight& w) const {
    for (const auto& e : entries)
      if (e.other.same_entries(w)) return e;
    return std::nullopt;
  }
};

namespace detail {

/// Reads (m, n) off an integral U(k) weight (m_1..m_M, 0.., -n_N..-n_1).
inline std::optional<SignedWeight> signed_label(const std::vector<std::int64_t>& twice, int M, int N) {
  std::vector<int> pos, neg;
  for (auto t : twice) {
    if (t % 2 != 0) return std::nullopt;
    if (t > 0) pos.push_back(static_cast<int>(t / 2));
  }
  for (auto it = twice.rbegin(); it != twice.rend(); ++it)
    if (*it < 0) neg.push_back(static_cast<int>(-*it / 2));
  if (static_cast<int>(pos.size()) > M || static_cast<int>(neg.size()) > N) return std::nullopt;
  try {
    return SignedWeight::from_entries(pos, neg);
  } catch (const BadWeight&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Lowest-K-type joint highest-weight vectors of the oscillator model up to
/// total degree d, each compared against the shift prediction (kave for sq,
/// kave2 for hf) of the label it carries. Every admissible label must occur
/// exactly once at bidegree (|m|, |n|). For sq, no renormalized weight of a
/// label of the cell (M and N distinct positive parts) may occur.
inline KvReport verify_kv(int k, int M, int N, int d, Convention conv) {
  KvReport rep;
  rep.k = k;
  rep.M = M;
  rep.N = N;
  rep.d = d;
  rep.convention = conv;
  const FockModel model = build_oscillator_model(k, M, N, d, conv);
  rep.relations_ok = model.relations.pass();
  const auto ctx = conv == Convention::sq ? ShiftContext::kave : ShiftContext::kave2;
  std::set<SignedWeight> found;
  for (int p = 0; p <= d; ++p)
    for (int q = 0; p + q <= d; ++q)
      for (const auto& h : joint_highest_weight_vectors(model, p, q)) {
        auto untwisted = h.u_k.shifted(-model.actions.twice_ck, Group::Uk);
        auto label = detail::signed_label(untwisted.twice, M, N);
        if (!label || label->m.size() != p || label->n.size() != q || !is_joint_highest_weight(model, h)) {
          rep.unexplained.push_back(h.u_k.str() + " x " + h.other.str() + " at (" + std::to_string(p) + "," + std::to_string(q) + ")");
          continue;
        }
        ShiftInput in;
        in.context = ctx;
        in.convention = conv;
        in.k = k;
        in.M = M;
        in.N = N;
        in.signed_ = *label;
        const auto pred = shift_weight(in);
        KvEntry e{p, q, *label, h.u_k, h.other, pred.u_k, pred.other, false};
        e.matches = e.u_k.same_entries(pred.u_k) && e.other.same_entries(pred.other);
        if (!e.matches) rep.unexplained.push_back(label->str() + ": " + h.other.str() + " vs predicted " + pred.other.str());
        if (!found.insert(*label).second) rep.unexplained.push_back(label->str() + ": repeated");
        rep.entries.push_back(std::move(e));
      }
  for (const auto& l : oscillator_labels(k, M, N, d))
    if (!found.count(l)) rep.missing.push_back(l.str());
  if (conv == Convention::sq) {
    rep.renormalized_checked = true;
    for (const auto& l : oscillator_labels(k, M, N, d)) {
      if (l.m.rows() != M || l.n.rows() != N || !l.m.distinct_parts() || !l.n.distinct_parts()) continue;
      const auto r = renormalize_weight(l, M, N);
      if (rep.find_other(r)) rep.renormalized_present.push_back(l.str() + " -> " + r.str());
    }
  }
  if (!rep.relations_ok) rep.falsifications.push_back("bracket relations");
  for (const auto& u : rep.unexplained) rep.falsifications.push_back("unexplained weight " + u);
  for (const auto& m : rep.missing) rep.falsifications.push_back("missing label " + m);
  for (const auto& r : rep.renormalized_present) rep.falsifications.push_back("renormalized weight present " + r);
  return rep;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const HalfIntWeight& w) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i = 0; i < w.size(); ++i) a.push_back(to_string(w.entry(i)));
  return a;
}

inline nlohmann::json to_json(const HoweReport& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["M"] = r.M;
  j["d"] = r.d;
  j["convention"] = convention_name(r.convention);
  j["relations"] = r.relations_ok ? "pass" : "fail";
  j["degrees"] = nlohmann::json::array();
  for (const auto& deg : r.degrees) {
    nlohmann::json dj;
    dj["degree"] = deg.degree;
    dj["labels"] = nlohmann::json::array();
    for (const auto& l : deg.labels)
      dj["labels"].push_back({{"u_k_weight", to_json(l.u_k)}, {"other_weight", to_json(l.other)}, {"multiplicity", l.multiplicity}});
    dj["checks"] = {{"labels", deg.labels_ok ? "pass" : "fail"},
                    {"dims", deg.dims_ok ? "pass" : "fail"},
                    {"dimension_sum", deg.dimension_sum.get_str()},
                    {"graded_dimension", deg.graded_dimension},
                    {"commutant", deg.commutant ? nlohmann::json(*deg.commutant) : nlohmann::json(nullptr)}};
    j["degrees"].push_back(std::move(dj));
  }
  if (r.stability_checked) j["stability"] = r.stability_ok ? "pass" : "fail";
  j["falsifications"] = r.falsifications;
  j["pass"] = r.pass();
  return j;
}

inline nlohmann::json to_json(const KvReport& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["M"] = r.M;
  j["N"] = r.N;
  j["d"] = r.d;
  j["convention"] = convention_name(r.convention);
  j["relations"] = r.relations_ok ? "pass" : "fail";
  std::map<int, nlohmann::json> by_degree;
  for (const auto& e : r.entries) {
    auto& dj = by_degree[e.p + e.q];
    dj["degree"] = e.p + e.q;
    dj["labels"].push_back({{"label", e.label.str()},
                            {"bidegree", {e.p, e.q}},
                            {"u_k_weight", to_json(e.u_k)},
                            {"other_weight", to_json(e.other)},
                            {"predicted_other_weight", to_json(e.predicted_other)},
                            {"multiplicity", 1},
                            {"match", e.matches}});
  }
  j["degrees"] = nlohmann::json::array();
  for (auto& [deg, dj] : by_degree) j["degrees"].push_back(std::move(dj));
  j["unexplained"] = r.unexplained;
  j["missing"] = r.missing;
  if (r.renormalized_checked) j["renormalized_present"] = r.renormalized_present;
  j["falsifications"] = r.falsifications;
  j["pass"] = r.pass();
  return j;
}

}  // namespace howe
