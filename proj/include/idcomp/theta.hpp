#pragma once

/**
 * @file theta.hpp
 * @brief The class Θ of distinguished sequences: membership and completion.
 *
 * Θ is either given by exactness of the periodic complex (vector-space-like
 * categories only), or generated by a finite list of sequences closed under
 * isomorphism, finite sums, summands and rotation, with every trivial
 * sequence added.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "addcat.hpp"
#include "nseq.hpp"
#include "suspension.hpp"

namespace idcomp {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ThetaSpec {
  enum class Kind { Exact, Generated };
  Kind kind = Kind::Exact;
  /// Generators for Kind::Generated; rotations of these are included.
  /// Trivial sequences are always members and need not be listed.
  std::vector<NSeq<BaseCategory>> generators;

  static ThetaSpec exact() { return {}; }
  static ThetaSpec generated(std::vector<NSeq<BaseCategory>> gens) {
    return ThetaSpec{Kind::Generated, std::move(gens)};
  }
};

// ---------------------------------------------------------------------------
// Exactness by ranks

struct RankCertificate {
  Status status = Status::Pass;
  std::optional<std::size_t> failing_position;
  /// dims[i], rank of the map into A_i, rank of the map out of A_i.
  std::vector<std::size_t> dims, rank_in, rank_out;
};

/// Exactness at every position of the unrolled periodic complex. Position 0
/// receives f_{n+1} (read through Σ, which preserves ranks) and emits f_0.
template <SuspendedCategory Cat>
RankCertificate exactness_certificate(const Cat& cat, const NSeq<Cat>& s) {
  if (!cat.is_vector_space_like()) {
    throw ConfigError("exactness predicate needs a single basic whose endomorphisms form the field");
  }
  RankCertificate c;
  const auto len = s.objects.size();
  auto zero = consecutive_zero_check(cat, s);
  for (std::size_t i = 0; i < len; ++i) {
    const auto& in = s.maps[(i + len - 1) % len];
    const auto& out = s.maps[i];
    c.dims.push_back(cat.vs_dim(s.objects[i]));
    c.rank_in.push_back(cat.vs_rank(in));
    c.rank_out.push_back(cat.vs_rank(out));
  }
  if (zero.status == Status::Fail) {
    c.status = Status::Fail;
    c.failing_position = (*zero.position + 1) % len;
    return c;
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (c.rank_in[i] + c.rank_out[i] != c.dims[i]) {
      c.status = Status::Fail;
      c.failing_position = i;
      return c;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Decomposition of sequences

template <SuspendedCategory Cat>
struct SeqDecomposition {
  Status status = Status::Pass;  // Unknown when a budget ran out
  std::vector<NSeq<Cat>> parts;  // indecomposable, nonzero
};

template <SuspendedCategory Cat>
bool is_zero_seq(const Cat& cat, const NSeq<Cat>& s) {
  return std::all_of(s.objects.begin(), s.objects.end(),
                     [&](const typename Cat::Object& o) { return hom_dim(cat, o, o) == 0; });
}

/// Image of an idempotent endomorphism of s, split termwise in the ambient category.
template <SuspendedCategory Cat>
std::optional<std::pair<NSeq<Cat>, SeqMor<Cat>>> seq_image(const Cat& cat, const NSeq<Cat>& s,
                                                           const std::vector<typename Cat::Morphism>& eps,
                                                           long long budget, Status& status) {
  using M = typename Cat::Morphism;
  std::vector<Splitting<Cat>> sp;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    auto r = cat.split_idempotent(s.objects[i], eps[i], budget);
    if (r.status != SplitStatus::Split) {
      status = combine(status, Status::Unknown);
      return std::nullopt;
    }
    sp.push_back(*r.splitting);
  }
  NSeq<Cat> y;
  const auto len = s.objects.size();
  for (const auto& t : sp) y.objects.push_back(t.y);
  for (std::size_t i = 0; i < len; ++i) {
    const M r_next = i + 1 < len ? sp[i + 1].r : cat.suspend(sp[0].r);
    y.maps.push_back(cat.compose(r_next, cat.compose(s.maps[i], sp[i].s)));
  }
  std::vector<M> incl;
  for (const auto& t : sp) incl.push_back(t.s);
  return std::make_pair(y, SeqMor<Cat>{y, s, incl});
}

/// Split nontrivial idempotents of End(s) until none remain.
template <SuspendedCategory Cat>
SeqDecomposition<Cat> decompose_seq(const Cat& cat, const NSeq<Cat>& s, long long budget, int depth = 0) {
  using M = typename Cat::Morphism;
  SeqDecomposition<Cat> out;
  if (is_zero_seq(cat, s)) return out;
  if (depth > 32) {
    out.status = Status::Unknown;
    return out;
  }
  auto space = seq_morphism_space(cat, s, s);
  const auto one = seq_identity(cat, s).components;
  std::optional<std::vector<M>> eps;
  Budget b(budget);
  auto res = enumerate_affine(cat, space, b, [&](const std::vector<M>& e) {
    bool zero = true;
    for (const auto& c : e) zero = zero && cat.is_zero(c);
    if (zero || e == one) return false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (cat.compose(e[i], e[i]) != e[i]) return false;
    }
    eps = e;
    return true;
  });
  if (res == Search::OutOfBudget) out.status = Status::Unknown;
  if (!eps) {
    out.parts.push_back(s);
    return out;
  }
  std::vector<M> co;
  for (std::size_t i = 0; i < eps->size(); ++i) co.push_back(sub(cat, one[i], (*eps)[i]));
  Status st = Status::Pass;
  auto y1 = seq_image(cat, s, *eps, budget, st);
  auto y2 = seq_image(cat, s, co, budget, st);
  if (!y1 || !y2) {
    out.status = combine(out.status, st);
    out.parts.push_back(s);
    return out;
  }
  for (const auto* y : {&y1->first, &y2->first}) {
    auto d = decompose_seq(cat, *y, budget, depth + 1);
    out.status = combine(out.status, d.status);
    out.parts.insert(out.parts.end(), d.parts.begin(), d.parts.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generated Θ

/// Indecomposable building blocks of a generated Θ: trivial sequences on
/// basics, and summands of all rotations of the generators.
struct ThetaPool {
  Status status = Status::Pass;
  std::vector<NSeq<BaseCategory>> members;
};

inline ThetaPool theta_pool(const BaseCategory& cat, const ThetaSpec& spec, int n, long long budget) {
  ThetaPool pool;
  for (std::size_t b = 0; b < cat.presentation().size(); ++b) {
    pool.members.push_back(trivial_seq(cat, cat.basic(static_cast<int>(b)), n));
  }
  int order = cat.suspension_order();
  if (order == 0) {
    pool.status = Status::Unknown;
    order = 1;
  }
  const int period = 2 * (n + 2) * order;
  for (const auto& g : spec.generators) {
    if (g.n() != n) throw ConfigError("generator has the wrong length");
    auto r = g;
    for (int k = 0; k < period; ++k) {
      auto d = decompose_seq(cat, r, budget);
      pool.status = combine(pool.status, d.status);
      for (auto& part : d.parts) {
        if (std::find(pool.members.begin(), pool.members.end(), part) == pool.members.end()) {
          pool.members.push_back(std::move(part));
        }
      }
      r = rotate(cat, r);
    }
  }
  return pool;
}

struct GeneratedCertificate {
  Status status = Status::Pass;
  std::vector<NSeq<BaseCategory>> parts;
  std::vector<std::optional<std::size_t>> matched;  // pool index per part
  std::optional<std::size_t> unmatched_part;
};

inline GeneratedCertificate generated_membership(const BaseCategory& cat, const NSeq<BaseCategory>& s,
                                                 const ThetaPool& pool, long long budget) {
  GeneratedCertificate c;
  auto d = decompose_seq(cat, s, budget);
  c.status = combine(d.status, pool.status);
  c.parts = d.parts;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    std::optional<std::size_t> hit;
    bool unknown = false;
    for (std::size_t k = 0; k < pool.members.size() && !hit; ++k) {
      auto iso = find_seq_iso(cat, d.parts[i], pool.members[k], budget);
      if (iso.iso) hit = k;
      if (iso.outcome == Search::OutOfBudget) unknown = true;
    }
    c.matched.push_back(hit);
    if (!hit) {
      if (unknown || c.status == Status::Unknown) {
        c.status = Status::Unknown;
      } else {
        c.status = Status::Fail;
        c.unmatched_part = i;
        return c;
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Membership front end

struct Membership {
  Status status = Status::Pass;  // Pass = member, Fail = not a member
  std::optional<RankCertificate> ranks;
  std::optional<GeneratedCertificate> generated;
  std::string detail;
};

class Theta {
 public:
  Theta(BaseCategory cat, ThetaSpec spec, int n, long long budget)
      : cat_(std::move(cat)), spec_(std::move(spec)), n_(n), budget_(budget) {
    if (n < 1) throw ConfigError("n must be at least 1");
    if (spec_.kind == ThetaSpec::Kind::Exact && !cat_.is_vector_space_like()) {
      throw ConfigError("exactness predicate needs a single basic whose endomorphisms form the field");
    }
    if (spec_.kind == ThetaSpec::Kind::Generated) pool_ = theta_pool(cat_, spec_, n_, budget_);
  }

  const BaseCategory& category() const { return cat_; }
  const ThetaSpec& spec() const { return spec_; }
  int n() const { return n_; }
  long long budget() const { return budget_; }
  const ThetaPool& pool() const { return pool_; }

  Membership contains(const NSeq<BaseCategory>& s) const {
    check_seq_shape(cat_, s);
    if (s.n() != n_) throw std::invalid_argument("theta_contains: sequence has the wrong length");
    Membership m;
    if (spec_.kind == ThetaSpec::Kind::Exact) {
      m.ranks = exactness_certificate(cat_, s);
      m.status = m.ranks->status;
      if (m.ranks->failing_position) m.detail = "not exact at position " + std::to_string(*m.ranks->failing_position);
      return m;
    }
    m.generated = generated_membership(cat_, s, pool_, budget_);
    m.status = m.generated->status;
    if (m.generated->unmatched_part) {
      m.detail = "summand " + std::to_string(*m.generated->unmatched_part) + " matches no generator";
    }
    return m;
  }

 private:
  BaseCategory cat_;
  ThetaSpec spec_;
  int n_ = 2;
  long long budget_ = 10000;
  ThetaPool pool_;
};

// ---------------------------------------------------------------------------
// Completion of a morphism to a member of Θ

enum class Found { Yes, None, Unknown };

inline std::string_view to_string(Found f) {
  switch (f) {
    case Found::Yes: return "FOUND";
    case Found::None: return "NONE";
    case Found::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

struct Completion {
  Found found = Found::Unknown;
  std::optional<NSeq<BaseCategory>> seq;
};

/// Acceptance test on a candidate completion. It must be closed under
/// summands (e.g. "these terms lie in a subcategory given by basics").
using SeqFilter = std::function<bool(const NSeq<BaseCategory>&)>;

namespace detail {

inline Obj power(int basic, std::size_t k) {
  Obj o;
  o.summands.assign(k, basic);
  return o;
}

inline FMatrix as_matrix(const Mor& f, PrimeField F) { return FMatrix(F, f.dst.size(), f.src.size(), f.coords); }

inline Mor from_matrix(const AddCat& cat, const Obj& x, const Obj& y, const FMatrix& m) {
  return cat.from_coords(x, y, m.data());
}

inline bool accepted(const NSeq<BaseCategory>& s, const SeqFilter& ok) { return !ok || ok(s); }

inline std::vector<std::size_t> basic_counts(const Obj& o, std::size_t m) {
  std::vector<std::size_t> c(m, 0);
  for (int b : o.summands) ++c[static_cast<std::size_t>(b)];
  return c;
}

/// Explicit exact completion: cokernel projection and kernel inclusion.
inline NSeq<BaseCategory> exact_completion(const BaseCategory& cat, const Mor& f0, int n) {
  const auto F = cat.field();
  const FMatrix m = as_matrix(f0, F);
  const FMatrix k = kernel_basis(m);                      // a × kdim
  const FMatrix p = kernel_basis(m.transpose()).transpose();  // cdim × b, kernel = im m
  const auto kd = k.cols();
  const auto cd = p.rows();
  const Obj a0 = f0.src, a1 = f0.dst;
  const Obj sa0 = cat.suspend(a0);
  // Σ scales maps by a nonzero constant here, so ker Σf_0 = ker f_0.
  const Mor kin = from_matrix(cat, power(0, kd), sa0, k);
  NSeq<BaseCategory> s;
  s.objects = {a0, a1};
  if (n == 1) {
    const Obj a2 = power(0, cd + kd);
    s.objects.push_back(a2);
    FMatrix f1(F, cd + kd, a1.size());
    for (std::size_t r = 0; r < cd; ++r) {
      for (std::size_t c = 0; c < a1.size(); ++c) f1(r, c) = p(r, c);
    }
    FMatrix f2(F, sa0.size(), cd + kd);
    for (std::size_t r = 0; r < sa0.size(); ++r) {
      for (std::size_t c = 0; c < kd; ++c) f2(r, cd + c) = kin.coords[r * kd + c];
    }
    s.maps = {f0, from_matrix(cat, a1, a2, f1), from_matrix(cat, a2, sa0, f2)};
    return s;
  }
  s.objects.push_back(power(0, cd));
  for (int i = 3; i <= n; ++i) s.objects.push_back(Obj{});
  s.objects.push_back(power(0, kd));
  s.maps.push_back(f0);
  s.maps.push_back(from_matrix(cat, a1, s.objects[2], p));
  for (int i = 2; i <= n; ++i) {
    s.maps.push_back(cat.zero(s.objects[static_cast<std::size_t>(i)], s.objects[static_cast<std::size_t>(i) + 1]));
  }
  s.maps.push_back(kin);
  return s;
}

}  // namespace detail

/// Search for u : A_0 -> B_0, v : A_1 -> B_1 invertible with v f = g u.
template <SuspendedCategory Cat>
Search find_arrow_iso(const Cat& cat, const typename Cat::Morphism& f, const typename Cat::Morphism& g,
                      long long budget, typename Cat::Morphism& u, typename Cat::Morphism& v) {
  using M = typename Cat::Morphism;
  if (!objects_may_be_isomorphic(cat, cat.src(f), cat.src(g)) ||
      !objects_may_be_isomorphic(cat, cat.dst(f), cat.dst(g))) {
    return Search::Exhausted;
  }
  std::vector<HomSlot<Cat>> slots{{cat.src(f), cat.src(g)}, {cat.dst(f), cat.dst(g)}};
  auto space = solve_affine(cat, slots, [&](const std::vector<M>& uv) {
    return std::vector<M>{sub(cat, cat.compose(uv[1], f), cat.compose(g, uv[0]))};
  });
  Budget b(budget);
  return sample_affine(cat, *space, b, 0xa770ULL, [&](const std::vector<M>& uv) {
    if (!inverse_of(cat, uv[0]) || !inverse_of(cat, uv[1])) return false;
    u = uv[0];
    v = uv[1];
    return true;
  });
}

/// Replace positions 0 and 1 of t by f0 along an arrow isomorphism.
inline NSeq<BaseCategory> transport_head(const BaseCategory& cat, const NSeq<BaseCategory>& t, const Mor& f0,
                                         const Mor& u, const Mor& v) {
  NSeq<BaseCategory> s = t;
  const auto last = t.maps.size() - 1;
  s.objects[0] = f0.src;
  s.objects[1] = f0.dst;
  s.maps[0] = f0;
  if (last == 1) {
    s.maps[1] = cat.compose(cat.suspend(*inverse_of(cat, u)), cat.compose(t.maps[1], v));
    return s;
  }
  s.maps[1] = cat.compose(t.maps[1], v);
  s.maps[last] = cat.compose(cat.suspend(*inverse_of(cat, u)), t.maps[last]);
  return s;
}

/// Extend f0 to a member of Θ accepted by `ok`.
/// Found::None is returned only after the finite search space is exhausted.
inline Completion complete_morphism(const Theta& theta, const Mor& f0, const SeqFilter& ok = {}) {
  const auto& cat = theta.category();
  const int n = theta.n();
  Completion out;
  if (theta.spec().kind == ThetaSpec::Kind::Exact) {
    auto s = detail::exact_completion(cat, f0, n);
    check_seq_shape(cat, s);
    if (theta.contains(s).status != Status::Pass) throw std::logic_error("complete_morphism: construction not exact");
    if (!detail::accepted(s, ok)) {
      // The explicit completion is a summand of every completion.
      out.found = Found::None;
      return out;
    }
    out.found = Found::Yes;
    out.seq = std::move(s);
    return out;
  }
  const auto m = cat.presentation().size();
  const auto want0 = detail::basic_counts(f0.src, m);
  const auto want1 = detail::basic_counts(f0.dst, m);
  std::vector<std::size_t> usable;
  const auto& pool = theta.pool().members;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    if (!pool[k].objects[0].is_zero() || !pool[k].objects[1].is_zero()) usable.push_back(k);
  }
  bool unknown = theta.pool().status != Status::Pass;
  // Depth-first over multisets (non-decreasing pool indices) with count pruning.
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> c0(m, 0), c1(m, 0);
  std::function<bool(std::size_t)> dfs = [&](std::size_t start) -> bool {
    if (c0 == want0 && c1 == want1) {
      std::vector<NSeq<BaseCategory>> parts;
      for (auto k : chosen) parts.push_back(pool[k]);
      auto t = parts.empty() ? trivial_seq(cat, Obj{}, n) : seq_direct_sum(cat, parts);
      Mor u, v;
      auto r = find_arrow_iso(cat, f0, t.maps[0], theta.budget(), u, v);
      if (r == Search::OutOfBudget) unknown = true;
      if (r == Search::Found) {
        auto s = transport_head(cat, t, f0, u, v);
        if (detail::accepted(s, ok)) {
          out.seq = s;
          return true;
        }
      }
    }
    for (std::size_t idx = start; idx < usable.size(); ++idx) {
      const auto& cand = pool[usable[idx]];
      auto d0 = detail::basic_counts(cand.objects[0], m);
      auto d1 = detail::basic_counts(cand.objects[1], m);
      bool fits = true;
      for (std::size_t b = 0; b < m; ++b) fits = fits && c0[b] + d0[b] <= want0[b] && c1[b] + d1[b] <= want1[b];
      if (!fits) continue;
      for (std::size_t b = 0; b < m; ++b) {
        c0[b] += d0[b];
        c1[b] += d1[b];
      }
      chosen.push_back(usable[idx]);
      if (dfs(idx)) return true;
      chosen.pop_back();
      for (std::size_t b = 0; b < m; ++b) {
        c0[b] -= d0[b];
        c1[b] -= d1[b];
      }
    }
    return false;
  };
  if (dfs(0)) {
    out.found = Found::Yes;
    return out;
  }
  out.found = unknown ? Found::Unknown : Found::None;
  return out;
}

}  // namespace idcomp
