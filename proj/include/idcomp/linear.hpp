#pragma once

/**
 * @file linear.hpp
 * @brief Category-generic linear machinery.
 *
 * Hom-sets are finite-dimensional F_p-spaces, so "find morphisms h_1..h_k
 * with F(h) = 0" for an affine F is a single linear solve. This header
 * turns such problems into FMatrix systems for any category type that
 * exposes a hom basis and an ambient coordinate vector per morphism.
 */

#include <concepts>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "field.hpp"
#include "verdict.hpp"

namespace idcomp {

// clang-format off
template <class C>
concept AdditiveCategory = requires(const C& cat,
                                    const typename C::Object& x,
                                    const typename C::Morphism& f,
                                    std::span<const typename C::Object> parts,
                                    const std::vector<typename C::Morphism>& blocks) {
  { cat.field() } -> std::convertible_to<PrimeField>;
  { cat.hom_basis(x, x) } -> std::same_as<std::vector<typename C::Morphism>>;
  { cat.zero(x, x) } -> std::same_as<typename C::Morphism>;
  { cat.identity(x) } -> std::same_as<typename C::Morphism>;
  { cat.compose(f, f) } -> std::same_as<typename C::Morphism>;
  { cat.add(f, f) } -> std::same_as<typename C::Morphism>;
  { cat.scale(f, Elem{1}) } -> std::same_as<typename C::Morphism>;
  { cat.is_zero(f) } -> std::convertible_to<bool>;
  { cat.flatten(f) } -> std::same_as<std::vector<Elem>>;
  { cat.src(f) } -> std::convertible_to<typename C::Object>;
  { cat.dst(f) } -> std::convertible_to<typename C::Object>;
  { cat.zero_object() } -> std::same_as<typename C::Object>;
  { cat.direct_sum(parts) } -> std::same_as<typename C::Object>;
  { cat.block_matrix(parts, parts, blocks) } -> std::same_as<typename C::Morphism>;
  { cat.block(f, parts, parts, std::size_t{0}, std::size_t{0}) } -> std::same_as<typename C::Morphism>;
};

/// An additive category with a strict automorphism Σ.
template <class C>
concept SuspendedCategory = AdditiveCategory<C> && requires(const C& cat,
                                                            const typename C::Object& x,
                                                            const typename C::Morphism& f) {
  { cat.suspend(x) } -> std::same_as<typename C::Object>;
  { cat.suspend(f) } -> std::same_as<typename C::Morphism>;
  { cat.desuspend(x) } -> std::same_as<typename C::Object>;
  { cat.desuspend(f) } -> std::same_as<typename C::Morphism>;
};
// clang-format on

template <AdditiveCategory Cat>
typename Cat::Morphism sub(const Cat& cat, const typename Cat::Morphism& a, const typename Cat::Morphism& b) {
  return cat.add(a, cat.scale(b, cat.field().neg(1)));
}

template <AdditiveCategory Cat>
typename Cat::Morphism neg(const Cat& cat, const typename Cat::Morphism& a) {
  return cat.scale(a, cat.field().neg(1));
}

template <AdditiveCategory Cat>
std::size_t hom_dim(const Cat& cat, const typename Cat::Object& x, const typename Cat::Object& y) {
  return cat.hom_basis(x, y).size();
}

/// Canonical injection of parts[i] into the direct sum of parts.
template <AdditiveCategory Cat>
typename Cat::Morphism injection(const Cat& cat, std::span<const typename Cat::Object> parts, std::size_t i) {
  std::vector<typename Cat::Object> src{parts[i]};
  std::vector<typename Cat::Morphism> blocks;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    blocks.push_back(j == i ? cat.identity(parts[i]) : cat.zero(parts[i], parts[j]));
  }
  return cat.block_matrix(parts, std::span<const typename Cat::Object>(src), blocks);
}

/// Canonical projection of the direct sum of parts onto parts[i].
template <AdditiveCategory Cat>
typename Cat::Morphism projection(const Cat& cat, std::span<const typename Cat::Object> parts, std::size_t i) {
  std::vector<typename Cat::Object> dst{parts[i]};
  std::vector<typename Cat::Morphism> blocks;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    blocks.push_back(j == i ? cat.identity(parts[i]) : cat.zero(parts[j], parts[i]));
  }
  return cat.block_matrix(std::span<const typename Cat::Object>(dst), parts, blocks);
}

/// Block-diagonal morphism diag(fs...) between the sums of sources and targets.
template <AdditiveCategory Cat>
typename Cat::Morphism block_diagonal(const Cat& cat, const std::vector<typename Cat::Morphism>& fs) {
  std::vector<typename Cat::Object> srcs, dsts;
  for (const auto& f : fs) {
    srcs.push_back(cat.src(f));
    dsts.push_back(cat.dst(f));
  }
  std::vector<typename Cat::Morphism> blocks;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      blocks.push_back(i == j ? fs[i] : cat.zero(srcs[i], dsts[j]));
    }
  }
  return cat.block_matrix(std::span<const typename Cat::Object>(dsts), std::span<const typename Cat::Object>(srcs),
                          blocks);
}

/// Linear combination sum_k coeffs[k] * basis[k] in Hom(x, y).
template <AdditiveCategory Cat>
typename Cat::Morphism combination(const Cat& cat, const typename Cat::Object& x, const typename Cat::Object& y,
                                   const std::vector<typename Cat::Morphism>& basis, const std::vector<Elem>& coeffs) {
  auto out = cat.zero(x, y);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] != 0) out = cat.add(out, cat.scale(basis[k], coeffs[k]));
  }
  return out;
}

/// One unknown of a linear system: a morphism in Hom(src, dst).
template <AdditiveCategory Cat>
struct HomSlot {
  typename Cat::Object src;
  typename Cat::Object dst;
};

/// Solution set of an affine system in hom-space unknowns.
template <AdditiveCategory Cat>
struct AffineSolution {
  std::vector<typename Cat::Morphism> particular;
  std::vector<std::vector<typename Cat::Morphism>> kernel;  // each entry is one direction (one morphism per slot)
};

/// Solve residual(h) = 0 where residual is affine in the tuple h of
/// morphisms, one per slot. Returns nullopt when the system is inconsistent.
template <AdditiveCategory Cat, class Residual>
std::optional<AffineSolution<Cat>> solve_affine(const Cat& cat, const std::vector<HomSlot<Cat>>& slots,
                                                Residual&& residual) {
  using M = typename Cat::Morphism;
  const PrimeField f = cat.field();
  std::vector<std::vector<M>> bases;
  std::vector<M> zeros;
  for (const auto& s : slots) {
    bases.push_back(cat.hom_basis(s.src, s.dst));
    zeros.push_back(cat.zero(s.src, s.dst));
  }
  auto flat = [&](const std::vector<M>& ms) {
    std::vector<Elem> v;
    for (const auto& m : ms) {
      auto part = cat.flatten(m);
      v.insert(v.end(), part.begin(), part.end());
    }
    return v;
  };
  std::vector<Elem> r0 = flat(residual(zeros));
  std::size_t nunk = 0;
  for (const auto& b : bases) nunk += b.size();
  FMatrix a(f, r0.size(), nunk);
  std::size_t col = 0;
  for (std::size_t t = 0; t < slots.size(); ++t) {
    for (const auto& b : bases[t]) {
      auto x = zeros;
      x[t] = b;
      auto r = flat(residual(x));
      for (std::size_t i = 0; i < r.size(); ++i) a(i, col) = f.sub(r[i], r0[i]);
      ++col;
    }
  }
  FMatrix rhs(f, r0.size(), 1);
  for (std::size_t i = 0; i < r0.size(); ++i) rhs(i, 0) = f.neg(r0[i]);
  auto sol = solve(a, rhs);
  if (!sol) return std::nullopt;
  auto assemble = [&](const std::vector<Elem>& coeffs) {
    std::vector<M> out;
    std::size_t off = 0;
    for (std::size_t t = 0; t < slots.size(); ++t) {
      std::vector<Elem> c(coeffs.begin() + static_cast<long>(off),
                          coeffs.begin() + static_cast<long>(off + bases[t].size()));
      out.push_back(combination(cat, slots[t].src, slots[t].dst, bases[t], c));
      off += bases[t].size();
    }
    return out;
  };
  AffineSolution<Cat> out;
  out.particular = assemble(sol->particular.column_vector(0));
  for (std::size_t k = 0; k < sol->kernel.cols(); ++k) out.kernel.push_back(assemble(sol->kernel.column_vector(k)));
  return out;
}

/// Visit particular + sum t_k kernel_k for all t in F_p^k in lexicographic
/// order. The visitor returns true to stop. Each visit takes one budget unit.
template <AdditiveCategory Cat, class Visitor>
Search enumerate_affine(const Cat& cat, const AffineSolution<Cat>& sol, Budget& budget, Visitor&& visit) {
  const auto p = cat.field().prime();
  std::vector<Elem> t(sol.kernel.size(), 0);
  while (true) {
    if (!budget.take()) return Search::OutOfBudget;
    auto x = sol.particular;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (t[k] == 0) continue;
      for (std::size_t s = 0; s < x.size(); ++s) x[s] = cat.add(x[s], cat.scale(sol.kernel[k][s], t[k]));
    }
    if (visit(x)) return Search::Found;
    std::size_t k = 0;
    while (k < t.size()) {
      if (++t[k] < p) break;
      t[k] = 0;
      ++k;
    }
    if (k == t.size()) return Search::Exhausted;
  }
}

/// Enumerate every morphism of Hom(x, y).
template <AdditiveCategory Cat, class Visitor>
Search enumerate_hom(const Cat& cat, const typename Cat::Object& x, const typename Cat::Object& y, Budget& budget,
                     Visitor&& visit) {
  AffineSolution<Cat> space;
  space.particular = {cat.zero(x, y)};
  for (auto& b : cat.hom_basis(x, y)) space.kernel.push_back({b});
  return enumerate_affine(cat, space, budget, [&](const std::vector<typename Cat::Morphism>& m) { return visit(m[0]); });
}

/// Two-sided inverse of f, found by solving g f = 1 and f g = 1 jointly.
template <AdditiveCategory Cat>
std::optional<typename Cat::Morphism> inverse_of(const Cat& cat, const typename Cat::Morphism& f) {
  using M = typename Cat::Morphism;
  const auto x = cat.src(f);
  const auto y = cat.dst(f);
  auto sol = solve_affine(cat, std::vector<HomSlot<Cat>>{{y, x}}, [&](const std::vector<M>& g) {
    return std::vector<M>{sub(cat, cat.compose(g[0], f), cat.identity(x)),
                          sub(cat, cat.compose(f, g[0]), cat.identity(y))};
  });
  if (!sol) return std::nullopt;
  return sol->particular[0];
}

/// Some r with r f = 1 (f is a section), by linear solve.
template <AdditiveCategory Cat>
std::optional<typename Cat::Morphism> left_inverse(const Cat& cat, const typename Cat::Morphism& f) {
  using M = typename Cat::Morphism;
  auto sol = solve_affine(cat, std::vector<HomSlot<Cat>>{{cat.dst(f), cat.src(f)}}, [&](const std::vector<M>& r) {
    return std::vector<M>{sub(cat, cat.compose(r[0], f), cat.identity(cat.src(f)))};
  });
  if (!sol) return std::nullopt;
  return sol->particular[0];
}

/// Some s with f s = 1 (f is a retraction), by linear solve.
template <AdditiveCategory Cat>
std::optional<typename Cat::Morphism> right_inverse(const Cat& cat, const typename Cat::Morphism& f) {
  using M = typename Cat::Morphism;
  auto sol = solve_affine(cat, std::vector<HomSlot<Cat>>{{cat.dst(f), cat.src(f)}}, [&](const std::vector<M>& s) {
    return std::vector<M>{sub(cat, cat.compose(f, s[0]), cat.identity(cat.dst(f)))};
  });
  if (!sol) return std::nullopt;
  return sol->particular[0];
}

template <AdditiveCategory Cat>
bool is_idempotent(const Cat& cat, const typename Cat::Morphism& e) {
  return cat.src(e) == cat.dst(e) && cat.compose(e, e) == e;
}

/// Splitting data for an idempotent e of x: s r = e and r s = 1_y.
/// Unconstrained so that category classes can name it in member signatures.
template <class Cat>
struct Splitting {
  typename Cat::Object y;
  typename Cat::Morphism r;  // x -> y
  typename Cat::Morphism s;  // y -> x
};

enum class SplitStatus { Split, NotSplitHere, Unknown };

template <class Cat>
struct SplitResult {
  SplitStatus status = SplitStatus::Unknown;
  std::optional<Splitting<Cat>> splitting;
};

template <AdditiveCategory Cat>
bool verify_splitting(const Cat& cat, const typename Cat::Morphism& e, const Splitting<Cat>& sp) {
  return cat.compose(sp.s, sp.r) == e && cat.compose(sp.r, sp.s) == cat.identity(sp.y);
}

}  // namespace idcomp
