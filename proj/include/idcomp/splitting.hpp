#pragma once

/**
 * @file splitting.hpp
 * @brief Peeling contractible summands off a distinguished sequence.
 *
 * Trailing form: if A_{n+1} = C ⊕ D and the connecting map vanishes on D,
 * then A_• ≅ A'_• ⊕ B_• with B_• = (0 -> ... -> 0 -> D -1-> D -> 0) and
 * A'_• ending in C. Leading form: if A_0 = C ⊕ D and the ΣD-row of the
 * connecting map vanishes, then A_• ≅ A'_• ⊕ (D -1-> D -> 0 -> ... -> ΣD).
 * Both are constructive: factor, split one idempotent, solve one block system.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linear.hpp"
#include "nseq.hpp"

namespace idcomp {

template <SuspendedCategory Cat>
struct SplitOff {
  Status status = Status::Pass;  // Unknown if an idempotent did not split within budget
  std::string message;
  NSeq<Cat> core;
  NSeq<Cat> padding;
  /// s -> core ⊕ padding, both directions verified.
  std::optional<SeqIso<Cat>> iso;
};

/// (0 -> ... -> 0 -> D -1-> D -> ΣA with A = 0), the identity sitting at f_n.
template <SuspendedCategory Cat>
NSeq<Cat> trailing_padding(const Cat& cat, const typename Cat::Object& d, int n) {
  NSeq<Cat> b;
  const auto z = cat.zero_object();
  for (int i = 0; i < n; ++i) b.objects.push_back(z);
  b.objects.push_back(d);
  b.objects.push_back(d);
  for (int i = 0; i <= n + 1; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (i == n) {
      b.maps.push_back(cat.identity(d));
    } else {
      b.maps.push_back(cat.zero(b.objects[ui], seq_target(cat, b, ui)));
    }
  }
  return b;
}

namespace detail {

template <SuspendedCategory Cat>
std::optional<Splitting<Cat>> split_or_none(const Cat& cat, const typename Cat::Object& x,
                                            const typename Cat::Morphism& e, long long budget) {
  auto r = cat.split_idempotent(x, e, budget);
  if (r.status != SplitStatus::Split || !verify_splitting(cat, e, *r.splitting)) return std::nullopt;
  return r.splitting;
}

template <SuspendedCategory Cat>
typename Cat::Morphism column(const Cat& cat, const typename Cat::Morphism& top, const typename Cat::Morphism& bottom) {
  using O = typename Cat::Object;
  std::vector<O> dp{cat.dst(top), cat.dst(bottom)};
  std::vector<O> sp{cat.src(top)};
  return cat.block_matrix(std::span<const O>(dp), std::span<const O>(sp), {top, bottom});
}

template <SuspendedCategory Cat>
typename Cat::Morphism row(const Cat& cat, const typename Cat::Morphism& left, const typename Cat::Morphism& right) {
  using O = typename Cat::Object;
  std::vector<O> dp{cat.dst(left)};
  std::vector<O> sp{cat.src(left), cat.src(right)};
  return cat.block_matrix(std::span<const O>(dp), std::span<const O>(sp), {left, right});
}

template <SuspendedCategory Cat>
typename Cat::Morphism square(const Cat& cat, const typename Cat::Morphism& a, const typename Cat::Morphism& b,
                              const typename Cat::Morphism& c, const typename Cat::Morphism& d) {
  using O = typename Cat::Object;
  std::vector<O> dp{cat.dst(a), cat.dst(c)};
  std::vector<O> sp{cat.src(a), cat.src(b)};
  return cat.block_matrix(std::span<const O>(dp), std::span<const O>(sp), {a, b, c, d});
}

/// Finish a split-off: build the iso with a single nontrivial component.
template <SuspendedCategory Cat>
bool finish(const Cat& cat, const NSeq<Cat>& s, SplitOff<Cat>& out, std::size_t pos,
            const typename Cat::Morphism& phi) {
  auto target = seq_direct_sum(cat, out.core, out.padding);
  std::vector<typename Cat::Morphism> comps;
  for (std::size_t i = 0; i < s.objects.size(); ++i) {
    comps.push_back(i == pos ? phi : cat.identity(s.objects[i]));
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (cat.dst(comps[i]) != target.objects[i]) return false;
  }
  SeqMor<Cat> fwd{s, target, comps};
  auto bwd = seq_inverse(cat, fwd);
  if (!bwd) return false;
  SeqIso<Cat> iso{fwd, *bwd};
  if (!verify_seq_iso(cat, iso)) return false;
  out.iso = iso;
  return true;
}

}  // namespace detail

/// Trailing split. c and d must satisfy A_{n+1} = c ⊕ d and f_{n+1} ∘ in_d = 0.
template <SuspendedCategory Cat>
SplitOff<Cat> split_off_summand(const Cat& cat, const NSeq<Cat>& s, const typename Cat::Object& c,
                                const typename Cat::Object& d, long long budget) {
  using O = typename Cat::Object;
  using M = typename Cat::Morphism;
  check_seq_shape(cat, s);
  const int n = s.n();
  const auto un = static_cast<std::size_t>(n);
  std::vector<O> cd{c, d};
  if (cat.direct_sum(std::span<const O>(cd)) != s.objects[un + 1]) {
    throw std::invalid_argument("split_off_summand: A_{n+1} is not c ⊕ d");
  }
  const M in_d = injection(cat, std::span<const O>(cd), 1);
  const M pi_c = projection(cat, std::span<const O>(cd), 0);
  const M pi_d = projection(cat, std::span<const O>(cd), 1);
  if (!cat.is_zero(cat.compose(s.maps[un + 1], in_d))) {
    throw std::invalid_argument("split_off_summand: connecting map is nonzero on d");
  }
  SplitOff<Cat> out;
  out.padding = trailing_padding(cat, d, n);
  const M& fn = s.maps[un];
  const M& fprev = s.maps[un - 1];
  auto g = factor_through(cat, s, in_d);
  if (!g) {
    out.status = Status::Fail;
    out.message = "in_D does not factor through f_n";
    return out;
  }
  const M e = cat.compose(*g, cat.compose(pi_d, fn));
  const M one = cat.identity(s.objects[un]);
  auto sp1 = detail::split_or_none(cat, s.objects[un], sub(cat, one, e), budget);
  auto sp2 = detail::split_or_none(cat, s.objects[un], e, budget);
  if (!sp1 || !sp2) {
    out.status = Status::Unknown;
    out.message = "idempotent on A_n did not split within budget";
    return out;
  }
  const M m = cat.compose(sp1->r, fprev);
  const M l = cat.compose(sp2->r, fprev);
  const M k1 = cat.compose(pi_c, cat.compose(fn, sp1->s));
  const M k2 = cat.compose(pi_c, cat.compose(fn, sp2->s));
  const M k3 = cat.compose(pi_d, cat.compose(fn, sp2->s));
  if (!cat.is_zero(l)) throw std::logic_error("split_off_summand: l != 0");
  if (!inverse_of(cat, k3)) throw std::logic_error("split_off_summand: k3 is not invertible");
  // [[k1, k2], [0, k3]] [a; b] = [k2; 0]
  auto ab = solve_affine(cat, std::vector<HomSlot<Cat>>{{sp2->y, sp1->y}, {sp2->y, sp2->y}},
                         [&](const std::vector<M>& x) {
                           return std::vector<M>{sub(cat, cat.add(cat.compose(k1, x[0]), cat.compose(k2, x[1])), k2),
                                                 cat.compose(k3, x[1])};
                         });
  if (!ab) {
    out.status = Status::Fail;
    out.message = "k1 a = k2 has no solution";
    return out;
  }
  const M a = ab->particular[0];
  if (!cat.is_zero(ab->particular[1])) throw std::logic_error("split_off_summand: b != 0");
  const M phi = cat.compose(detail::square(cat, cat.identity(sp1->y), a, cat.zero(sp1->y, d), k3),
                            detail::column(cat, sp1->r, sp2->r));
  out.core = s;
  out.core.objects[un] = sp1->y;
  out.core.objects[un + 1] = c;
  out.core.maps[un - 1] = m;
  out.core.maps[un] = k1;
  out.core.maps[un + 1] = cat.compose(s.maps[un + 1], injection(cat, std::span<const O>(cd), 0));
  check_seq_shape(cat, out.core);
  if (!detail::finish(cat, s, out, un, phi)) {
    out.status = Status::Fail;
    out.message = "assembled isomorphism did not verify";
  }
  return out;
}

/// Leading split. c and d must satisfy A_0 = c ⊕ d and π_{Σd} ∘ f_{n+1} = 0.
template <SuspendedCategory Cat>
SplitOff<Cat> split_off_leading_summand(const Cat& cat, const NSeq<Cat>& s, const typename Cat::Object& c,
                                        const typename Cat::Object& d, long long budget) {
  using O = typename Cat::Object;
  using M = typename Cat::Morphism;
  check_seq_shape(cat, s);
  const int n = s.n();
  const auto last = static_cast<std::size_t>(n) + 1;
  std::vector<O> cd{c, d};
  if (cat.direct_sum(std::span<const O>(cd)) != s.objects[0]) {
    throw std::invalid_argument("split_off_leading_summand: A_0 is not c ⊕ d");
  }
  std::vector<O> scd{cat.suspend(c), cat.suspend(d)};
  const M in_c = injection(cat, std::span<const O>(cd), 0);
  const M in_d = injection(cat, std::span<const O>(cd), 1);
  const M pi_d = projection(cat, std::span<const O>(cd), 1);
  const M spi_c = projection(cat, std::span<const O>(scd), 0);
  const M spi_d = projection(cat, std::span<const O>(scd), 1);
  if (!cat.is_zero(cat.compose(spi_d, s.maps[last]))) {
    throw std::invalid_argument("split_off_leading_summand: connecting map has a nonzero Σd row");
  }
  SplitOff<Cat> out;
  out.padding = trivial_seq(cat, d, n);
  const M& f0 = s.maps[0];
  const M f0c = cat.compose(f0, in_c);
  const M f0d = cat.compose(f0, in_d);
  auto core_base = [&](const O& a1, const M& k1, const M& m) {
    NSeq<Cat> core = s;
    core.objects[0] = c;
    core.objects[1] = a1;
    core.maps[0] = k1;
    core.maps[1] = m;
    core.maps[last] = cat.compose(spi_c, s.maps[last]);
    return core;
  };
  // g' f_0 = π_d
  auto gs = solve_affine(cat, std::vector<HomSlot<Cat>>{{s.objects[1], d}}, [&](const std::vector<M>& x) {
    return std::vector<M>{sub(cat, cat.compose(x[0], f0), pi_d)};
  });
  if (!gs) {
    out.status = Status::Fail;
    out.message = "π_D does not factor through f_0";
    return out;
  }
  const M g = gs->particular[0];
  const M e = cat.compose(f0d, g);
  const M one = cat.identity(s.objects[1]);
  auto sp1 = detail::split_or_none(cat, s.objects[1], sub(cat, one, e), budget);
  auto sp2 = detail::split_or_none(cat, s.objects[1], e, budget);
  if (!sp1 || !sp2) {
    out.status = Status::Unknown;
    out.message = "idempotent on A_1 did not split within budget";
    return out;
  }
  const M k1 = cat.compose(sp1->r, f0c);
  const M k2 = cat.compose(sp2->r, f0c);
  const M k3 = cat.compose(sp2->r, f0d);
  const M m = cat.compose(s.maps[1], sp1->s);
  const M l = cat.compose(s.maps[1], sp2->s);
  if (!cat.is_zero(l)) throw std::logic_error("split_off_leading_summand: l != 0");
  if (!inverse_of(cat, k3)) throw std::logic_error("split_off_leading_summand: k3 is not invertible");
  // (b, c') [[k1, 0], [k2, k3]] = (0, 1_D)
  auto bc = solve_affine(cat, std::vector<HomSlot<Cat>>{{sp1->y, d}, {sp2->y, d}}, [&](const std::vector<M>& x) {
    return std::vector<M>{cat.add(cat.compose(x[0], k1), cat.compose(x[1], k2)),
                          sub(cat, cat.compose(x[1], k3), cat.identity(d))};
  });
  if (!bc) {
    out.status = Status::Fail;
    out.message = "block system for φ_1 has no solution";
    return out;
  }
  const M phi = cat.compose(
      detail::square(cat, cat.identity(sp1->y), cat.zero(sp2->y, sp1->y), bc->particular[0], bc->particular[1]),
      detail::column(cat, sp1->r, sp2->r));
  out.core = core_base(sp1->y, k1, m);
  check_seq_shape(cat, out.core);
  if (!detail::finish(cat, s, out, 1, phi)) {
    out.status = Status::Fail;
    out.message = "assembled isomorphism did not verify";
  }
  return out;
}

}  // namespace idcomp
