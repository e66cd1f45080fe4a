#pragma once

/**
 * @file exang.hpp
 * @brief Extensions E(C, A) = Hom(C, ΣA), their realizations, subcategories
 * closed under extensions, and bounded checks of the two composition axioms.
 */

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nseq.hpp"
#include "theta.hpp"

namespace idcomp {

template <SuspendedCategory Cat>
struct Extension {
  typename Cat::Object a_obj;
  typename Cat::Object c_obj;
  typename Cat::Morphism delta;  // c_obj -> Σ a_obj
};

template <SuspendedCategory Cat>
Extension<Cat> make_extension(const Cat& cat, const typename Cat::Object& a, const typename Cat::Object& c,
                              const typename Cat::Morphism& delta) {
  if (cat.src(delta) != c || cat.dst(delta) != cat.suspend(a)) {
    throw std::invalid_argument("Extension: delta must map c to Σa");
  }
  return Extension<Cat>{a, c, delta};
}

template <SuspendedCategory Cat>
Extension<Cat> zero_extension(const Cat& cat, const typename Cat::Object& a, const typename Cat::Object& c) {
  return Extension<Cat>{a, c, cat.zero(c, cat.suspend(a))};
}

/// c^* a_* δ = (Σa) ∘ δ ∘ c for a : A -> A', c : C' -> C.
template <SuspendedCategory Cat>
Extension<Cat> ext_act(const Cat& cat, const typename Cat::Morphism& a, const typename Cat::Morphism& c,
                       const Extension<Cat>& d) {
  if (cat.src(a) != d.a_obj || cat.dst(c) != d.c_obj) throw std::invalid_argument("ext_act: shape mismatch");
  return Extension<Cat>{cat.dst(a), cat.src(c), cat.compose(cat.suspend(a), cat.compose(d.delta, c))};
}

template <SuspendedCategory Cat>
Extension<Cat> ext_direct_sum(const Cat& cat, const Extension<Cat>& x, const Extension<Cat>& y) {
  using O = typename Cat::Object;
  std::vector<O> as{x.a_obj, y.a_obj};
  std::vector<O> cs{x.c_obj, y.c_obj};
  return Extension<Cat>{cat.direct_sum(std::span<const O>(as)), cat.direct_sum(std::span<const O>(cs)),
                        block_diagonal(cat, std::vector<typename Cat::Morphism>{x.delta, y.delta})};
}

/// A complex X_0 -> ... -> X_{n+1} together with δ : X_{n+1} -> ΣX_0; the
/// wrapped sequence is stored whole, its connecting map being δ.
template <SuspendedCategory Cat>
struct DistinguishedExangle {
  NSeq<Cat> seq;
  Extension<Cat> delta;
};

/// Subcategory of the objects all of whose summands are allowed basics.
struct SubcategorySpec {
  std::vector<bool> allowed;

  static SubcategorySpec full(std::size_t m) { return {std::vector<bool>(m, true)}; }
  static SubcategorySpec zero_only(std::size_t m) { return {std::vector<bool>(m, false)}; }

  bool contains(const Obj& o) const {
    for (int b : o.summands) {
      if (b < 0 || static_cast<std::size_t>(b) >= allowed.size() || !allowed[static_cast<std::size_t>(b)]) return false;
    }
    return true;
  }
  /// Objects of the subcategory with at most max_size summands.
  std::vector<Obj> objects(std::size_t max_size) const {
    std::vector<Obj> out;
    for (auto& o : objects_up_to(allowed.size(), max_size)) {
      if (contains(o)) out.push_back(o);
    }
    return out;
  }
  bool is_full() const {
    for (bool b : allowed) {
      if (!b) return false;
    }
    return true;
  }
};

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Realization {
  Found found = Found::Unknown;
  std::optional<DistinguishedExangle<BaseCategory>> exangle;
};

/// Complete δ (as the connecting map) to a member of Θ whose middle terms
/// pass `middle`. The representative is the deterministic completion of δ
/// rotated back into place.
inline Realization realize(const Theta& theta, const Extension<BaseCategory>& d,
                           const std::function<bool(const Obj&)>& middle = {}) {
  const auto& cat = theta.category();
  const int n = theta.n();
  SeqFilter ok;
  if (middle) {
    ok = [&](const NSeq<BaseCategory>& t) {
      auto s = rotate_by(cat, t, -(n + 1));
      for (std::size_t i = 1; i + 1 < s.objects.size(); ++i) {
        if (!middle(s.objects[i])) return false;
      }
      return true;
    };
  }
  auto c = complete_morphism(theta, d.delta, ok);
  Realization out;
  out.found = c.found;
  if (c.found != Found::Yes) return out;
  auto s = rotate_by(cat, *c.seq, -(n + 1));
  if (s.objects.front() != d.a_obj || s.objects.back() != d.c_obj || s.connecting() != d.delta) {
    throw std::logic_error("realize: rotated completion does not end in δ");
  }
  // Only possible when Θ is not closed under rotation; other completions are not searched.
  if (theta.contains(s).status != Status::Pass) {
    out.found = Found::Unknown;
    return out;
  }
  out.exangle = DistinguishedExangle<BaseCategory>{s, d};
  return out;
}

/// Every produced exangle must wrap to a Θ-member with vanishing composites.
inline Status verify_exangle(const Theta& theta, const DistinguishedExangle<BaseCategory>& x) {
  const auto& cat = theta.category();
  if (x.seq.connecting() != x.delta.delta) return Status::Fail;
  if (consecutive_zero_check(cat, x.seq).status != Status::Pass) return Status::Fail;
  return theta.contains(x.seq).status;
}

/// Enumerate morphisms x -> y, exhaustively if p^dim <= cap, else seeded samples.
inline std::vector<Mor> morphism_battery(const AddCat& cat, const Obj& x, const Obj& y, long long cap,
                                         std::uint64_t seed = 7) {
  std::vector<Mor> out;
  AffineSolution<AddCat> space;
  space.particular = {cat.zero(x, y)};
  for (auto& b : cat.hom_basis(x, y)) space.kernel.push_back({b});
  Budget budget(cap);
  sample_affine(cat, space, budget, seed, [&](const std::vector<Mor>& m) {
    out.push_back(m[0]);
    return false;
  });
  return out;
}

struct ClosureReport {
  Status status = Status::Pass;
  std::size_t checked = 0;
  std::optional<Extension<BaseCategory>> witness;
};

/// Every δ : A_{n+1} -> ΣA_0 between subcategory objects completes to a
/// Θ-member with A_1, ..., A_n in the subcategory.
inline ClosureReport is_n_extension_closed(const Theta& theta, const SubcategorySpec& sub, std::size_t dims,
                                           long long cap) {
  const auto& cat = theta.category();
  ClosureReport out;
  auto objs = sub.objects(dims);
  auto in_sub = [&](const Obj& o) { return sub.contains(o); };
  for (const auto& a0 : objs) {
    for (const auto& c : objs) {
      for (const auto& d : morphism_battery(cat, c, cat.suspend(a0), cap)) {
        ++out.checked;
        auto r = realize(theta, Extension<BaseCategory>{a0, c, d}, in_sub);
        if (r.found == Found::None) {
          out.status = Status::Fail;
          out.witness = Extension<BaseCategory>{a0, c, d};
          return out;
        }
        if (r.found == Found::Unknown) out.status = combine(out.status, Status::Unknown);
      }
    }
  }
  return out;
}

/// The structure restricted to a subcategory: extensions and realizations
/// only between its objects, with middle terms inside it.
class RestrictedStructure {
 public:
  RestrictedStructure(const Theta& theta, SubcategorySpec sub) : theta_(&theta), sub_(std::move(sub)) {}

  const Theta& theta() const { return *theta_; }
  const BaseCategory& category() const { return theta_->category(); }
  const SubcategorySpec& subcategory() const { return sub_; }
  int n() const { return theta_->n(); }

  void require(const Obj& o) const {
    if (!sub_.contains(o)) throw DomainError("object lies outside the subcategory");
  }

  Extension<BaseCategory> act(const Mor& a, const Mor& c, const Extension<BaseCategory>& d) const {
    require(d.a_obj);
    require(d.c_obj);
    require(a.dst);
    require(c.src);
    return ext_act(category(), a, c, d);
  }

  Realization realize(const Extension<BaseCategory>& d) const {
    require(d.a_obj);
    require(d.c_obj);
    auto r = idcomp::realize(*theta_, d, [&](const Obj& o) { return sub_.contains(o); });
    if (r.exangle) {
      for (const auto& o : r.exangle->seq.objects) {
        if (!sub_.contains(o)) throw std::logic_error("restricted realization left the subcategory");
      }
    }
    return r;
  }

  /// f is an inflation iff it is d^0 of some realized conflation.
  Found is_inflation(const Mor& f) const {
    require(f.src);
    require(f.dst);
    return complete_morphism(*theta_, f, [&](const NSeq<BaseCategory>& t) { return all_in(t); }).found;
  }

  /// g is a deflation iff it is d^n of some realized conflation.
  Found is_deflation(const Mor& g) const {
    require(g.src);
    require(g.dst);
    const int n = theta_->n();
    const auto& cat = category();
    auto c = complete_morphism(*theta_, g, [&](const NSeq<BaseCategory>& t) {
      return all_in(rotate_by(cat, t, -n));
    });
    if (c.found == Found::Yes) {
      auto s = rotate_by(cat, *c.seq, -n);
      if (s.maps[static_cast<std::size_t>(n)] != g) throw std::logic_error("is_deflation: misplaced map");
    }
    return c.found;
  }

 private:
  bool all_in(const NSeq<BaseCategory>& s) const {
    for (const auto& o : s.objects) {
      if (!sub_.contains(o)) return false;
    }
    return true;
  }

  const Theta* theta_;
  SubcategorySpec sub_;
};

inline RestrictedStructure restrict_to(const Theta& theta, const SubcategorySpec& sub) {
  return RestrictedStructure(theta, sub);
}

// ---------------------------------------------------------------------------
// EA1 and EA2


inline std::string describe(const Mor& f) {
  std::ostringstream os;
  os << "[";
  const auto rows = f.dst.size();
  const auto cols = f.src.size();
  if (rows * cols == f.coords.size()) {
    for (std::size_t r = 0; r < rows; ++r) {
      if (r) os << ";";
      for (std::size_t c = 0; c < cols; ++c) os << (c ? "," : "") << f.coords[r * cols + c];
    }
  } else {
    for (std::size_t i = 0; i < f.coords.size(); ++i) os << (i ? " " : "") << f.coords[i];
  }
  os << "] " << f.src.size() << "->" << f.dst.size();
  return os.str();
}

/// Composites of inflations are inflations, and dually for deflations.
inline std::vector<AxiomVerdict> check_EA1(const RestrictedStructure& st, std::size_t dims, long long cap,
                                           long long budget) {
  const auto& cat = st.category();
  auto objs = st.subcategory().objects(dims);
  auto infl = make_verdict("EA1 inflations");
  auto defl = make_verdict("EA1 deflations");
  if (budget <= 0) {
    infl.status = defl.status = Status::Unknown;
    return {infl, defl};
  }
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      for (const auto& z : objs) {
        for (const auto& f : morphism_battery(cat, x, y, cap)) {
          const auto fi = st.is_inflation(f);
          const auto fd = st.is_deflation(f);
          for (const auto& g : morphism_battery(cat, y, z, cap)) {
            const auto gf = cat.compose(g, f);
            if (fi == Found::Yes && st.is_inflation(g) == Found::Yes) {
              ++infl.checked;
              auto r = st.is_inflation(gf);
              if (r == Found::None && infl.status != Status::Fail) {
                infl.status = Status::Fail;
                infl.witness = "g=" + describe(g) + " f=" + describe(f);
              } else if (r == Found::Unknown) {
                infl.status = combine(infl.status, Status::Unknown);
              }
            }
            if (fd == Found::Yes && st.is_deflation(g) == Found::Yes) {
              ++defl.checked;
              auto r = st.is_deflation(gf);
              if (r == Found::None && defl.status != Status::Fail) {
                defl.status = Status::Fail;
                defl.witness = "g=" + describe(g) + " f=" + describe(f);
              } else if (r == Found::Unknown) {
                defl.status = combine(defl.status, Status::Unknown);
              }
            }
            if (fi == Found::Unknown || fd == Found::Unknown) {
              infl.status = combine(infl.status, Status::Unknown);
              defl.status = combine(defl.status, Status::Unknown);
            }
          }
        }
      }
    }
  }
  return {infl, defl};
}

/// Cone of a lift f between complexes X and Y (degrees 0..n+1) with f^0 = 1:
/// M^0 = X^1, M^i = X^{i+1} ⊕ Y^i (1 <= i <= n), M^{n+1} = Y^{n+1}, wrapped
/// by Σ(d_X^0) ∘ ρ.
inline NSeq<BaseCategory> lift_cone(const BaseCategory& cat, const NSeq<BaseCategory>& x,
                                    const NSeq<BaseCategory>& y, const std::vector<Mor>& f, const Mor& rho) {
  const auto n = static_cast<std::size_t>(x.n());
  NSeq<BaseCategory> m;
  m.objects.push_back(x.objects[1]);
  for (std::size_t i = 1; i <= n; ++i) m.objects.push_back(cat.direct_sum(x.objects[i + 1], y.objects[i]));
  m.objects.push_back(y.objects[n + 1]);
  auto two = [&](const Obj& a, const Obj& b) { return std::vector<Obj>{a, b}; };
  auto one = [&](const Obj& a) { return std::vector<Obj>{a}; };
  auto bm = [&](std::vector<Obj> dp, std::vector<Obj> sp, std::vector<Mor> blocks) {
    return cat.block_matrix(std::span<const Obj>(dp), std::span<const Obj>(sp), blocks);
  };
  m.maps.push_back(bm(two(x.objects[2], y.objects[1]), one(x.objects[1]), {neg(cat, x.maps[1]), f[1]}));
  for (std::size_t i = 1; i < n; ++i) {
    m.maps.push_back(bm(two(x.objects[i + 2], y.objects[i + 1]), two(x.objects[i + 1], y.objects[i]),
                        {neg(cat, x.maps[i + 1]), cat.zero(y.objects[i], x.objects[i + 2]), f[i + 1], y.maps[i]}));
  }
  m.maps.push_back(bm(one(y.objects[n + 1]), two(x.objects[n + 1], y.objects[n]), {f[n + 1], y.maps[n]}));
  m.maps.push_back(cat.compose(cat.suspend(x.maps[0]), rho));
  check_seq_shape(cat, m);
  return m;
}

/// For ρ ∈ E(D, A) and c : C -> D, some lift of (1_A, c) between the
/// realizations of c^*ρ and ρ has a cone realizing (d_X^0)_* ρ.
inline AxiomVerdict check_EA2(const RestrictedStructure& st, std::size_t dims, long long cap, long long budget) {
  using M = Mor;
  const auto& cat = st.category();
  const auto& theta = st.theta();
  auto objs = st.subcategory().objects(dims);
  auto v = make_verdict("EA2");
  if (budget <= 0) {
    v.status = Status::Unknown;
    return v;
  }
  for (const auto& a : objs) {
    for (const auto& d : objs) {
      for (const auto& rho_m : morphism_battery(cat, d, cat.suspend(a), cap)) {
        Extension<BaseCategory> rho{a, d, rho_m};
        auto ry = st.realize(rho);
        if (ry.found != Found::Yes) {
          v.status = combine(v.status, ry.found == Found::None ? Status::Fail : Status::Unknown);
          if (v.witness.empty()) v.witness = "no realization of rho=" + describe(rho_m);
          continue;
        }
        const auto& y = ry.exangle->seq;
        for (const auto& c_obj : objs) {
          for (const auto& c : morphism_battery(cat, c_obj, d, cap)) {
            ++v.checked;
            auto pulled = ext_act(cat, cat.identity(a), c, rho);
            auto rx = st.realize(pulled);
            if (rx.found != Found::Yes) {
              v.status = combine(v.status, rx.found == Found::None ? Status::Fail : Status::Unknown);
              continue;
            }
            const auto& x = rx.exangle->seq;
            const auto len = x.objects.size();
            std::vector<HomSlot<BaseCategory>> slots;
            for (std::size_t i = 1; i + 1 < len; ++i) slots.push_back({x.objects[i], y.objects[i]});
            auto space = solve_affine(cat, slots, [&](const std::vector<M>& mid) {
              std::vector<M> phi{cat.identity(a)};
              phi.insert(phi.end(), mid.begin(), mid.end());
              phi.push_back(c);
              std::vector<M> r;
              for (std::size_t i = 0; i < len; ++i) r.push_back(square_residual(cat, x, y, phi, i));
              return r;
            });
            if (!space) {
              v.status = Status::Fail;
              if (v.witness.empty()) v.witness = "no lift for rho=" + describe(rho_m) + " c=" + describe(c);
              continue;
            }
            Budget b(budget);
            auto res = enumerate_affine(cat, *space, b, [&](const std::vector<M>& mid) {
              std::vector<M> phi{cat.identity(a)};
              phi.insert(phi.end(), mid.begin(), mid.end());
              phi.push_back(c);
              auto cone = lift_cone(cat, x, y, phi, rho_m);
              return theta.contains(cone).status == Status::Pass;
            });
            if (res == Search::Exhausted) {
              v.status = Status::Fail;
              if (v.witness.empty()) v.witness = "no good lift for rho=" + describe(rho_m) + " c=" + describe(c);
            } else if (res == Search::OutOfBudget) {
              v.status = combine(v.status, Status::Unknown);
            }
          }
        }
      }
    }
  }
  return v;
}

}  // namespace idcomp
