#pragma once

/**
 * @file nseq.hpp
 * @brief (n+2)-Σ-sequences and their morphisms over any suspended category.
 *
 * A sequence stores A_0..A_{n+1} and n+2 maps; maps[i] : A_i -> A_{i+1} for
 * i <= n and maps[n+1] : A_{n+1} -> ΣA_0 is the connecting map.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "addcat.hpp"
#include "linear.hpp"

namespace idcomp {

template <SuspendedCategory Cat>
struct NSeq {
  using Object = typename Cat::Object;
  using Morphism = typename Cat::Morphism;

  std::vector<Object> objects;
  std::vector<Morphism> maps;

  int n() const { return static_cast<int>(objects.size()) - 2; }
  std::size_t length() const { return objects.size(); }
  const Morphism& connecting() const { return maps.back(); }

  bool operator==(const NSeq&) const = default;
};

template <SuspendedCategory Cat>
struct SeqMor {
  NSeq<Cat> src;
  NSeq<Cat> dst;
  std::vector<typename Cat::Morphism> components;

  bool operator==(const SeqMor&) const = default;
};

/// Target of maps[i]: A_{i+1}, or ΣA_0 for the connecting map.
template <SuspendedCategory Cat>
typename Cat::Object seq_target(const Cat& cat, const NSeq<Cat>& s, std::size_t i) {
  return i + 1 < s.objects.size() ? s.objects[i + 1] : cat.suspend(s.objects[0]);
}

/// Throws unless every map has the declared source and target.
template <SuspendedCategory Cat>
void check_seq_shape(const Cat& cat, const NSeq<Cat>& s) {
  if (s.objects.size() < 3) throw std::invalid_argument("NSeq: need n >= 1");
  if (s.maps.size() != s.objects.size()) throw std::invalid_argument("NSeq: need n+2 maps");
  for (std::size_t i = 0; i < s.maps.size(); ++i) {
    if (cat.src(s.maps[i]) != s.objects[i] || cat.dst(s.maps[i]) != seq_target(cat, s, i)) {
      throw std::invalid_argument("NSeq: map " + std::to_string(i) + " has the wrong shape");
    }
  }
}

template <SuspendedCategory Cat>
NSeq<Cat> make_seq(const Cat& cat, std::vector<typename Cat::Object> objects,
                   std::vector<typename Cat::Morphism> maps) {
  NSeq<Cat> s{std::move(objects), std::move(maps)};
  check_seq_shape(cat, s);
  return s;
}

/// A -1-> A -> 0 -> ... -> 0 -> ΣA.
template <SuspendedCategory Cat>
NSeq<Cat> trivial_seq(const Cat& cat, const typename Cat::Object& a, int n) {
  NSeq<Cat> s;
  const auto z = cat.zero_object();
  s.objects.push_back(a);
  s.objects.push_back(a);
  for (int i = 2; i <= n + 1; ++i) s.objects.push_back(z);
  s.maps.push_back(cat.identity(a));
  for (int i = 1; i <= n + 1; ++i) {
    s.maps.push_back(cat.zero(s.objects[static_cast<std::size_t>(i)], seq_target(cat, s, static_cast<std::size_t>(i))));
  }
  return s;
}

/// Left rotation: A_1 -> ... -> A_{n+1} -> ΣA_0 with connecting (-1)^n Σf_0.
template <SuspendedCategory Cat>
NSeq<Cat> rotate(const Cat& cat, const NSeq<Cat>& s) {
  NSeq<Cat> r;
  r.objects.assign(s.objects.begin() + 1, s.objects.end());
  r.objects.push_back(cat.suspend(s.objects[0]));
  r.maps.assign(s.maps.begin() + 1, s.maps.end());
  r.maps.push_back(cat.scale(cat.suspend(s.maps[0]), cat.field().sign(s.n())));
  return r;
}

/// Inverse of rotate: Σ^{-1}A_{n+1} -> A_0 -> ... -> A_n with first map (-1)^n Σ^{-1}f_{n+1}.
template <SuspendedCategory Cat>
NSeq<Cat> rotate_right(const Cat& cat, const NSeq<Cat>& s) {
  NSeq<Cat> r;
  const auto last = s.objects.size() - 1;
  r.objects.push_back(cat.desuspend(s.objects[last]));
  r.objects.insert(r.objects.end(), s.objects.begin(), s.objects.begin() + static_cast<long>(last));
  r.maps.push_back(cat.scale(cat.desuspend(s.maps[last]), cat.field().sign(s.n())));
  r.maps.insert(r.maps.end(), s.maps.begin(), s.maps.begin() + static_cast<long>(last));
  return r;
}

/// k-fold rotation; negative k rotates right.
template <SuspendedCategory Cat>
NSeq<Cat> rotate_by(const Cat& cat, NSeq<Cat> s, int k) {
  for (; k > 0; --k) s = rotate(cat, s);
  for (; k < 0; ++k) s = rotate_right(cat, s);
  return s;
}

/// Termwise Σ; every map including the connecting one is suspended.
template <SuspendedCategory Cat>
NSeq<Cat> suspend_seq(const Cat& cat, const NSeq<Cat>& s) {
  NSeq<Cat> r;
  for (const auto& o : s.objects) r.objects.push_back(cat.suspend(o));
  for (const auto& m : s.maps) r.maps.push_back(cat.suspend(m));
  return r;
}

template <SuspendedCategory Cat>
NSeq<Cat> scale_seq(const Cat& cat, NSeq<Cat> s, Elem c) {
  for (auto& m : s.maps) m = cat.scale(m, c);
  return s;
}

template <SuspendedCategory Cat>
NSeq<Cat> seq_direct_sum(const Cat& cat, const std::vector<NSeq<Cat>>& parts) {
  if (parts.empty()) throw std::invalid_argument("seq_direct_sum: no parts");
  using O = typename Cat::Object;
  using M = typename Cat::Morphism;
  NSeq<Cat> s;
  const auto len = parts[0].objects.size();
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<O> os;
    std::vector<M> ms;
    for (const auto& p : parts) {
      if (p.objects.size() != len) throw std::invalid_argument("seq_direct_sum: length mismatch");
      os.push_back(p.objects[i]);
      ms.push_back(p.maps[i]);
    }
    s.objects.push_back(cat.direct_sum(std::span<const O>(os)));
    s.maps.push_back(block_diagonal(cat, ms));
  }
  return s;
}

template <SuspendedCategory Cat>
NSeq<Cat> seq_direct_sum(const Cat& cat, const NSeq<Cat>& a, const NSeq<Cat>& b) {
  return seq_direct_sum(cat, std::vector<NSeq<Cat>>{a, b});
}

// ---------------------------------------------------------------------------
// Morphisms of sequences

/// Residual of square i: φ_{i+1} f_i - g_i φ_i, with φ_{n+2} read as Σφ_0.
template <SuspendedCategory Cat>
typename Cat::Morphism square_residual(const Cat& cat, const NSeq<Cat>& a, const NSeq<Cat>& b,
                                       const std::vector<typename Cat::Morphism>& phi, std::size_t i) {
  const auto last = a.maps.size() - 1;
  const auto next = i < last ? phi[i + 1] : cat.suspend(phi[0]);
  return sub(cat, cat.compose(next, a.maps[i]), cat.compose(b.maps[i], phi[i]));
}

/// First square that does not commute, if any.
template <SuspendedCategory Cat>
std::optional<std::size_t> first_noncommuting_square(const Cat& cat, const NSeq<Cat>& a, const NSeq<Cat>& b,
                                                     const std::vector<typename Cat::Morphism>& phi) {
  for (std::size_t i = 0; i < a.maps.size(); ++i) {
    if (!cat.is_zero(square_residual(cat, a, b, phi, i))) return i;
  }
  return std::nullopt;
}

template <SuspendedCategory Cat>
SeqMor<Cat> make_seq_mor(const Cat& cat, const NSeq<Cat>& a, const NSeq<Cat>& b,
                         std::vector<typename Cat::Morphism> phi) {
  if (phi.size() != a.objects.size() || a.objects.size() != b.objects.size()) {
    throw std::invalid_argument("SeqMor: wrong number of components");
  }
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (cat.src(phi[i]) != a.objects[i] || cat.dst(phi[i]) != b.objects[i]) {
      throw std::invalid_argument("SeqMor: component " + std::to_string(i) + " has the wrong shape");
    }
  }
  if (auto bad = first_noncommuting_square(cat, a, b, phi)) {
    throw std::invalid_argument("SeqMor: square " + std::to_string(*bad) + " does not commute");
  }
  return SeqMor<Cat>{a, b, std::move(phi)};
}

template <SuspendedCategory Cat>
SeqMor<Cat> seq_identity(const Cat& cat, const NSeq<Cat>& s) {
  std::vector<typename Cat::Morphism> phi;
  for (const auto& o : s.objects) phi.push_back(cat.identity(o));
  return SeqMor<Cat>{s, s, phi};
}

template <SuspendedCategory Cat>
SeqMor<Cat> seq_compose(const Cat& cat, const SeqMor<Cat>& g, const SeqMor<Cat>& f) {
  if (f.dst != g.src) throw std::invalid_argument("seq_compose: f.dst != g.src");
  std::vector<typename Cat::Morphism> phi;
  for (std::size_t i = 0; i < f.components.size(); ++i) phi.push_back(cat.compose(g.components[i], f.components[i]));
  return SeqMor<Cat>{f.src, g.dst, phi};
}

/// All morphisms a -> b, as the solution space of the n+2 commuting squares.
template <SuspendedCategory Cat>
AffineSolution<Cat> seq_morphism_space(const Cat& cat, const NSeq<Cat>& a, const NSeq<Cat>& b) {
  using M = typename Cat::Morphism;
  std::vector<HomSlot<Cat>> slots;
  for (std::size_t i = 0; i < a.objects.size(); ++i) slots.push_back({a.objects[i], b.objects[i]});
  auto sol = solve_affine(cat, slots, [&](const std::vector<M>& phi) {
    std::vector<M> r;
    for (std::size_t i = 0; i < a.maps.size(); ++i) r.push_back(square_residual(cat, a, b, phi, i));
    return r;
  });
  return *sol;  // homogeneous: always consistent
}

/// Visit elements of an affine space, exhaustively when p^k fits the budget
/// and otherwise by seeded random sampling. Returns Exhausted only after a
/// complete enumeration.
template <AdditiveCategory Cat, class Visitor>
Search sample_affine(const Cat& cat, const AffineSolution<Cat>& sol, Budget& budget, std::uint64_t seed,
                     Visitor&& visit) {
  const auto p = cat.field().prime();
  long double total = 1;
  for (std::size_t k = 0; k < sol.kernel.size() && total <= static_cast<long double>(budget.left()); ++k) total *= p;
  if (total <= static_cast<long double>(budget.left())) return enumerate_affine(cat, sol, budget, visit);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> coef(0, p - 1);
  while (budget.take()) {
    auto x = sol.particular;
    for (const auto& dir : sol.kernel) {
      const Elem t = coef(rng);
      if (t == 0) continue;
      for (std::size_t s = 0; s < x.size(); ++s) x[s] = cat.add(x[s], cat.scale(dir[s], t));
    }
    if (visit(x)) return Search::Found;
  }
  return Search::OutOfBudget;
}

/// Cheap necessary conditions for a ≅ b as objects.
template <AdditiveCategory Cat>
bool objects_may_be_isomorphic(const Cat& cat, const typename Cat::Object& a, const typename Cat::Object& b) {
  const auto d = hom_dim(cat, a, a);
  return d == hom_dim(cat, b, b) && d == hom_dim(cat, a, b) && d == hom_dim(cat, b, a);
}

template <SuspendedCategory Cat>
struct SeqIso {
  SeqMor<Cat> forward;
  SeqMor<Cat> backward;
};

/// Two-sided inverse of every component; the result is again a morphism of sequences.
template <SuspendedCategory Cat>
std::optional<SeqMor<Cat>> seq_inverse(const Cat& cat, const SeqMor<Cat>& f) {
  std::vector<typename Cat::Morphism> inv;
  for (const auto& c : f.components) {
    auto i = inverse_of(cat, c);
    if (!i) return std::nullopt;
    inv.push_back(*i);
  }
  return SeqMor<Cat>{f.dst, f.src, inv};
}

template <SuspendedCategory Cat>
bool verify_seq_iso(const Cat& cat, const SeqIso<Cat>& iso) {
  const auto& f = iso.forward;
  const auto& g = iso.backward;
  if (first_noncommuting_square(cat, f.src, f.dst, f.components)) return false;
  if (first_noncommuting_square(cat, g.src, g.dst, g.components)) return false;
  return seq_compose(cat, g, f).components == seq_identity(cat, f.src).components &&
         seq_compose(cat, f, g).components == seq_identity(cat, f.dst).components;
}

template <SuspendedCategory Cat>
struct IsoSearch {
  Search outcome = Search::Exhausted;
  std::optional<SeqIso<Cat>> iso;
};

/// Search for an isomorphism a ≅ b of sequences. Exhausted means none exists.
template <SuspendedCategory Cat>
IsoSearch<Cat> find_seq_iso(const Cat& cat, const NSeq<Cat>& a, const NSeq<Cat>& b, long long budget) {
  IsoSearch<Cat> out;
  if (a.objects.size() != b.objects.size()) return out;
  for (std::size_t i = 0; i < a.objects.size(); ++i) {
    if (!objects_may_be_isomorphic(cat, a.objects[i], b.objects[i])) return out;
  }
  auto space = seq_morphism_space(cat, a, b);
  Budget bud(budget);
  out.outcome = sample_affine(cat, space, bud, 0x15eedULL, [&](const std::vector<typename Cat::Morphism>& phi) {
    SeqMor<Cat> f{a, b, phi};
    auto g = seq_inverse(cat, f);
    if (!g) return false;
    out.iso = SeqIso<Cat>{f, *g};
    return true;
  });
  return out;
}

/// Canonical inclusion of parts[i] into the termwise direct sum of parts.
template <SuspendedCategory Cat>
SeqMor<Cat> seq_injection(const Cat& cat, const std::vector<NSeq<Cat>>& parts, std::size_t i) {
  using O = typename Cat::Object;
  auto sum = seq_direct_sum(cat, parts);
  std::vector<typename Cat::Morphism> phi;
  for (std::size_t k = 0; k < sum.objects.size(); ++k) {
    std::vector<O> os;
    for (const auto& p : parts) os.push_back(p.objects[k]);
    phi.push_back(injection(cat, std::span<const O>(os), i));
  }
  return SeqMor<Cat>{parts[i], sum, phi};
}

/// Canonical projection of the termwise direct sum of parts onto parts[i].
template <SuspendedCategory Cat>
SeqMor<Cat> seq_projection(const Cat& cat, const std::vector<NSeq<Cat>>& parts, std::size_t i) {
  using O = typename Cat::Object;
  auto sum = seq_direct_sum(cat, parts);
  std::vector<typename Cat::Morphism> phi;
  for (std::size_t k = 0; k < sum.objects.size(); ++k) {
    std::vector<O> os;
    for (const auto& p : parts) os.push_back(p.objects[k]);
    phi.push_back(projection(cat, std::span<const O>(os), i));
  }
  return SeqMor<Cat>{sum, parts[i], phi};
}

/// Checks every square of a claimed morphism of sequences.
template <SuspendedCategory Cat>
bool is_seq_morphism(const Cat& cat, const SeqMor<Cat>& f) {
  if (f.components.size() != f.src.objects.size()) return false;
  for (std::size_t i = 0; i < f.components.size(); ++i) {
    if (cat.src(f.components[i]) != f.src.objects[i] || cat.dst(f.components[i]) != f.dst.objects[i]) return false;
  }
  return !first_noncommuting_square(cat, f.src, f.dst, f.components);
}

// ---------------------------------------------------------------------------
// Constructions and checks

/// Objects A_{i+1} ⊕ B_i with blocks [[-f_{i+1}, 0], [φ_{i+1}, g_i]]; the
/// last block is [[-Σf_0, 0], [Σφ_0, g_{n+1}]].
template <SuspendedCategory Cat>
NSeq<Cat> mapping_cone(const Cat& cat, const SeqMor<Cat>& phi) {
  using O = typename Cat::Object;
  using M = typename Cat::Morphism;
  const auto& a = phi.src;
  const auto& b = phi.dst;
  const auto len = a.objects.size();
  auto a_at = [&](std::size_t i) { return i < len ? a.objects[i] : cat.suspend(a.objects[i - len]); };
  auto f_at = [&](std::size_t i) { return i < len ? a.maps[i] : cat.suspend(a.maps[i - len]); };
  auto phi_at = [&](std::size_t i) { return i < len ? phi.components[i] : cat.suspend(phi.components[i - len]); };
  NSeq<Cat> c;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<O> parts{a_at(i + 1), b.objects[i]};
    c.objects.push_back(cat.direct_sum(std::span<const O>(parts)));
  }
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<O> sp{a_at(i + 1), b.objects[i]};
    std::vector<O> dp{a_at(i + 2), seq_target(cat, b, i)};
    std::vector<M> blocks{neg(cat, f_at(i + 1)), cat.zero(b.objects[i], a_at(i + 2)), phi_at(i + 1), b.maps[i]};
    c.maps.push_back(cat.block_matrix(std::span<const O>(dp), std::span<const O>(sp), blocks));
  }
  // The connecting map lands in ΣA_1 ⊕ ΣB_0 = Σ(A_1 ⊕ B_0).
  if (cat.dst(c.maps.back()) != cat.suspend(c.objects[0])) {
    throw std::logic_error("mapping_cone: suspension does not commute with direct sums");
  }
  return c;
}

template <SuspendedCategory Cat>
struct FillIn {
  std::optional<SeqMor<Cat>> morphism;
  /// Smallest k such that squares 1..k admit no common solution (NoFill witness).
  std::optional<std::size_t> first_infeasible;
};

/// All (φ_2, ..., φ_{n+1}) completing (φ_0, φ_1) to a morphism of sequences,
/// using squares 1..upto (inclusive; upto = n+1 includes the Σφ_0 square).
template <SuspendedCategory Cat>
std::optional<AffineSolution<Cat>> fill_in_space(const Cat& cat, const NSeq<Cat>& a, const NSeq<Cat>& b,
                                                 const typename Cat::Morphism& phi0,
                                                 const typename Cat::Morphism& phi1, std::size_t upto) {
  using M = typename Cat::Morphism;
  const auto len = a.objects.size();
  std::vector<HomSlot<Cat>> slots;
  for (std::size_t i = 2; i < len; ++i) slots.push_back({a.objects[i], b.objects[i]});
  return solve_affine(cat, slots, [&](const std::vector<M>& rest) {
    std::vector<M> phi{phi0, phi1};
    phi.insert(phi.end(), rest.begin(), rest.end());
    std::vector<M> r;
    for (std::size_t i = 1; i <= upto; ++i) r.push_back(square_residual(cat, a, b, phi, i));
    return r;
  });
}

template <SuspendedCategory Cat>
void require_solid_square(const Cat& cat, const NSeq<Cat>& a, const NSeq<Cat>& b, const typename Cat::Morphism& phi0,
                          const typename Cat::Morphism& phi1) {
  if (cat.compose(b.maps[0], phi0) != cat.compose(phi1, a.maps[0])) {
    throw std::invalid_argument("fill_in: the solid square g_0 φ_0 = φ_1 f_0 does not commute");
  }
}

template <SuspendedCategory Cat>
FillIn<Cat> fill_in(const Cat& cat, const NSeq<Cat>& a, const NSeq<Cat>& b, const typename Cat::Morphism& phi0,
                    const typename Cat::Morphism& phi1) {
  require_solid_square(cat, a, b, phi0, phi1);
  FillIn<Cat> out;
  const auto last = a.maps.size() - 1;
  auto full = fill_in_space(cat, a, b, phi0, phi1, last);
  if (full) {
    std::vector<typename Cat::Morphism> phi{phi0, phi1};
    phi.insert(phi.end(), full->particular.begin(), full->particular.end());
    out.morphism = make_seq_mor(cat, a, b, phi);
    return out;
  }
  for (std::size_t k = 1; k <= last; ++k) {
    if (!fill_in_space(cat, a, b, phi0, phi1, k)) {
      out.first_infeasible = k;
      break;
    }
  }
  return out;
}

struct PositionCheck {
  Status status = Status::Pass;
  std::optional<std::size_t> position;  // composite maps[i+1] ∘ maps[i] (maps[n+2] read as Σf_0)
};

template <SuspendedCategory Cat>
PositionCheck consecutive_zero_check(const Cat& cat, const NSeq<Cat>& s) {
  for (std::size_t i = 0; i < s.maps.size(); ++i) {
    const auto next = i + 1 < s.maps.size() ? s.maps[i + 1] : cat.suspend(s.maps[0]);
    if (!cat.is_zero(cat.compose(next, s.maps[i]))) return {Status::Fail, i};
  }
  return {};
}

/// h with g = f_n h. Requires f_{n+1} g = 0.
template <SuspendedCategory Cat>
std::optional<typename Cat::Morphism> factor_through(const Cat& cat, const NSeq<Cat>& s,
                                                     const typename Cat::Morphism& g) {
  using M = typename Cat::Morphism;
  const auto n = static_cast<std::size_t>(s.n());
  if (cat.dst(g) != s.objects[n + 1]) throw std::invalid_argument("factor_through: g must land in A_{n+1}");
  if (!cat.is_zero(cat.compose(s.maps[n + 1], g))) {
    throw std::invalid_argument("factor_through: f_{n+1} g != 0");
  }
  auto sol = solve_affine(cat, std::vector<HomSlot<Cat>>{{cat.src(g), s.objects[n]}}, [&](const std::vector<M>& h) {
    return std::vector<M>{sub(cat, cat.compose(s.maps[n], h[0]), g)};
  });
  if (!sol) return std::nullopt;
  return sol->particular[0];
}

template <SuspendedCategory Cat>
struct SplitReport {
  bool split = false;  // primary verdict: f_{n+1} = 0
  std::optional<typename Cat::Morphism> section;     // r with r f_0 = 1
  std::optional<typename Cat::Morphism> retraction;  // s with f_n s = 1
  Status section_search = Status::Pass;     // Unknown if the exhaustive search ran out of budget
  Status retraction_search = Status::Pass;
  bool agree = true;
};

/// Exhaustive search for r : A_1 -> A_0 with r f_0 = 1 and s : A_{n+1} -> A_n
/// with f_n s = 1, compared against f_{n+1} = 0.
template <SuspendedCategory Cat>
SplitReport<Cat> is_split(const Cat& cat, const NSeq<Cat>& s, long long budget) {
  using M = typename Cat::Morphism;
  SplitReport<Cat> out;
  const auto n = static_cast<std::size_t>(s.n());
  out.split = cat.is_zero(s.maps[n + 1]);
  const auto& f0 = s.maps[0];
  const auto& fn = s.maps[n];
  Budget b1(budget);
  auto r1 = enumerate_hom(cat, s.objects[1], s.objects[0], b1, [&](const M& r) {
    if (cat.compose(r, f0) != cat.identity(s.objects[0])) return false;
    out.section = r;
    return true;
  });
  if (r1 == Search::OutOfBudget) out.section_search = Status::Unknown;
  Budget b2(budget);
  auto r2 = enumerate_hom(cat, s.objects[n + 1], s.objects[n], b2, [&](const M& q) {
    if (cat.compose(fn, q) != cat.identity(s.objects[n + 1])) return false;
    out.retraction = q;
    return true;
  });
  if (r2 == Search::OutOfBudget) out.retraction_search = Status::Unknown;
  if (out.section_search == Status::Pass && out.retraction_search == Status::Pass) {
    out.agree = (out.section.has_value() == out.split) && (out.retraction.has_value() == out.split);
  }
  return out;
}

}  // namespace idcomp
