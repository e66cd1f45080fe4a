#pragma once

/**
 * @file karoubi.hpp
 * @brief The idempotent completion of a presented category.
 *
 * Objects are pairs (A, e) with e an idempotent endomorphism of A; a map
 * (A, e_a) -> (B, e_b) is a base map p with p e_a = p = e_b p. Hom-sets are
 * computed as subspaces of the base hom-spaces, so no new presentation is
 * ever synthesized. The identity of (A, e) is e.
 */

#include <stdexcept>
#include <vector>

#include "addcat.hpp"
#include "suspension.hpp"

namespace idcomp {

struct KObj {
  Obj base;
  Mor e;

  bool operator==(const KObj&) const = default;
};

struct KMor {
  KObj src;
  KObj dst;
  Mor p;

  bool operator==(const KMor&) const = default;
};

class KaroubiCategory {
 public:
  using Object = KObj;
  using Morphism = KMor;

  KaroubiCategory() = default;
  explicit KaroubiCategory(BaseCategory base) : base_(std::move(base)) {}

  const BaseCategory& base() const { return base_; }
  PrimeField field() const { return base_.field(); }

  /// Checked constructor: e must be idempotent on base.
  KObj make_object(const Obj& base, const Mor& e) const {
    if (e.src != base || e.dst != base || base_.compose(e, e) != e) {
      throw std::invalid_argument("KObj: e is not an idempotent endomorphism of the base object");
    }
    return KObj{base, e};
  }

  /// Checked constructor: p e_src = p and e_dst p = p.
  KMor make_morphism(const KObj& src, const KObj& dst, const Mor& p) const {
    if (p.src != src.base || p.dst != dst.base) throw std::invalid_argument("KMor: base shape mismatch");
    if (base_.compose(p, src.e) != p || base_.compose(dst.e, p) != p) {
      throw std::invalid_argument("KMor: p does not absorb the idempotents");
    }
    return KMor{src, dst, p};
  }

  /// The inclusion functor: A |-> (A, 1), f |-> f.
  KObj include(const Obj& x) const { return KObj{x, base_.identity(x)}; }
  KMor include(const Mor& f) const { return KMor{include(f.src), include(f.dst), f}; }

  /// (A, e) |-> (A, 1 - e).
  KObj complement(const KObj& x) const {
    return make_object(x.base, idcomp::sub(base_, base_.identity(x.base), x.e));
  }

  std::vector<KMor> hom_basis(const KObj& x, const KObj& y) const {
    // The hom-set is the image of the projection p |-> e_y p e_x on Hom(A, B).
    const auto F = field();
    auto base_basis = base_.hom_basis(x.base, y.base);
    std::vector<Mor> images;
    FMatrix cols(F, base_.hom_dimension(x.base, y.base), base_basis.size());
    for (std::size_t k = 0; k < base_basis.size(); ++k) {
      images.push_back(base_.compose(y.e, base_.compose(base_basis[k], x.e)));
      for (std::size_t i = 0; i < images.back().coords.size(); ++i) cols(i, k) = images.back().coords[i];
    }
    auto r = rref(cols);
    std::vector<KMor> out;
    for (auto pc : r.pivots) out.push_back(KMor{x, y, images[pc]});
    return out;
  }

  KMor zero(const KObj& x, const KObj& y) const { return KMor{x, y, base_.zero(x.base, y.base)}; }
  KMor identity(const KObj& x) const { return KMor{x, x, x.e}; }

  KMor compose(const KMor& g, const KMor& f) const {
    if (f.dst != g.src) throw std::invalid_argument("KaroubiCategory::compose: f.dst != g.src");
    return KMor{f.src, g.dst, base_.compose(g.p, f.p)};
  }
  KMor add(const KMor& a, const KMor& b) const {
    if (a.src != b.src || a.dst != b.dst) throw std::invalid_argument("KaroubiCategory::add: shape mismatch");
    return KMor{a.src, a.dst, base_.add(a.p, b.p)};
  }
  KMor scale(const KMor& a, Elem s) const { return KMor{a.src, a.dst, base_.scale(a.p, s)}; }
  bool is_zero(const KMor& a) const { return base_.is_zero(a.p); }
  std::vector<Elem> flatten(const KMor& a) const { return a.p.coords; }
  const KObj& src(const KMor& a) const { return a.src; }
  const KObj& dst(const KMor& a) const { return a.dst; }
  KObj zero_object() const { return KObj{Obj{}, base_.zero(Obj{}, Obj{})}; }

  KObj direct_sum(std::span<const KObj> parts) const {
    std::vector<Obj> bases;
    std::vector<Mor> es;
    for (const auto& p : parts) {
      bases.push_back(p.base);
      es.push_back(p.e);
    }
    return KObj{base_.direct_sum(std::span<const Obj>(bases)), block_diagonal(base_, es)};
  }
  KObj direct_sum(const KObj& a, const KObj& b) const {
    std::vector<KObj> parts{a, b};
    return direct_sum(std::span<const KObj>(parts));
  }

  KMor block_matrix(std::span<const KObj> dst_parts, std::span<const KObj> src_parts,
                    const std::vector<KMor>& blocks) const {
    std::vector<Obj> db, sb;
    for (const auto& d : dst_parts) db.push_back(d.base);
    for (const auto& s : src_parts) sb.push_back(s.base);
    std::vector<Mor> ps;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const auto j = k / src_parts.size();
      const auto i = k % src_parts.size();
      if (blocks[k].src != src_parts[i] || blocks[k].dst != dst_parts[j]) {
        throw std::invalid_argument("KaroubiCategory::block_matrix: block has wrong shape");
      }
      ps.push_back(blocks[k].p);
    }
    return KMor{direct_sum(src_parts), direct_sum(dst_parts),
                base_.block_matrix(std::span<const Obj>(db), std::span<const Obj>(sb), ps)};
  }

  KMor block(const KMor& f, std::span<const KObj> dst_parts, std::span<const KObj> src_parts, std::size_t j,
             std::size_t i) const {
    std::vector<Obj> db, sb;
    for (const auto& d : dst_parts) db.push_back(d.base);
    for (const auto& s : src_parts) sb.push_back(s.base);
    return KMor{src_parts[i], dst_parts[j],
                base_.block(f.p, std::span<const Obj>(db), std::span<const Obj>(sb), j, i)};
  }

  /// Σ~(C, e) = (ΣC, Σe).
  KObj suspend(const KObj& x) const { return KObj{base_.suspend(x.base), base_.suspend(x.e)}; }
  KMor suspend(const KMor& f) const { return KMor{suspend(f.src), suspend(f.dst), base_.suspend(f.p)}; }
  KObj desuspend(const KObj& x) const { return KObj{base_.desuspend(x.base), base_.desuspend(x.e)}; }
  KMor desuspend(const KMor& f) const { return KMor{desuspend(f.src), desuspend(f.dst), base_.desuspend(f.p)}; }

  /// Every idempotent q of (A, e) splits through (A, q) with r = s = q.
  SplitResult<KaroubiCategory> split_idempotent(const KObj& x, const KMor& q, long long /*budget*/) const {
    if (q.src != x || q.dst != x || compose(q, q) != q) {
      throw std::invalid_argument("split_idempotent: q is not an idempotent endomorphism");
    }
    KObj y{x.base, q.p};
    SplitResult<KaroubiCategory> out;
    out.status = SplitStatus::Split;
    out.splitting = Splitting<KaroubiCategory>{y, KMor{x, y, q.p}, KMor{y, x, q.p}};
    return out;
  }

  bool is_vector_space_like() const { return base_.is_vector_space_like(); }
  std::size_t vs_dim(const KObj& x) const { return base_.vs_rank(x.e); }
  std::size_t vs_rank(const KMor& f) const { return base_.vs_rank(f.p); }

 private:
  BaseCategory base_;
};

/// Witness pair for X ⊕ X' ≅ ι(A): u : X ⊕ X' -> ιA and v : ιA -> X ⊕ X'.
struct ComplementIso {
  KObj sum;
  KMor u;
  KMor v;
  bool verified = false;
};

inline ComplementIso complement_iso(const KaroubiCategory& K, const KObj& x) {
  const auto& B = K.base();
  KObj xc = K.complement(x);
  KObj sum = K.direct_sum(x, xc);
  KObj whole = K.include(x.base);
  std::vector<Obj> two{x.base, x.base};
  std::vector<Obj> one{x.base};
  Mor u = B.block_matrix(std::span<const Obj>(one), std::span<const Obj>(two), {x.e, xc.e});
  Mor v = B.block_matrix(std::span<const Obj>(two), std::span<const Obj>(one), {x.e, xc.e});
  ComplementIso out{sum, K.make_morphism(sum, whole, u), K.make_morphism(whole, sum, v), false};
  out.verified = K.compose(out.v, out.u) == K.identity(sum) && K.compose(out.u, out.v) == K.identity(whole);
  return out;
}

/// Number of elements of Hom(x, y) is p^dim; compare dimensions instead.
template <AdditiveCategory Cat>
std::size_t hom_cardinality_log(const Cat& cat, const typename Cat::Object& x, const typename Cat::Object& y) {
  return cat.hom_basis(x, y).size();
}

// ---------------------------------------------------------------------------
// Idempotent completeness certificates

template <AdditiveCategory Cat>
struct CompletenessReport {
  Status status = Status::Pass;
  std::size_t objects_checked = 0;
  std::size_t idempotents_checked = 0;
  std::optional<typename Cat::Object> witness_object;
  std::optional<typename Cat::Morphism> witness_idempotent;
};

/// Envelope check: every enumerated idempotent q of every battery object
/// splits canonically through (A, q), with both splitting identities verified.
inline CompletenessReport<KaroubiCategory> verify_idempotent_complete(const KaroubiCategory& K,
                                                                      const std::vector<KObj>& battery,
                                                                      long long budget) {
  CompletenessReport<KaroubiCategory> out;
  for (const auto& x : battery) {
    ++out.objects_checked;
    auto idem = idempotents(K, x, budget);
    if (!idem.exhaustive) out.status = combine(out.status, Status::Unknown);
    for (const auto& q : idem.idempotents) {
      ++out.idempotents_checked;
      auto sp = K.split_idempotent(x, q, budget);
      if (!sp.splitting || !verify_splitting(K, q, *sp.splitting)) {
        out.status = Status::Fail;
        out.witness_object = x;
        out.witness_idempotent = q;
        return out;
      }
    }
  }
  return out;
}

/// Base check: search for a splitting of every idempotent inside the base
/// category. NotSplitHere is a certified failure.
inline CompletenessReport<BaseCategory> verify_idempotent_complete(const BaseCategory& C,
                                                                   const std::vector<Obj>& battery,
                                                                   long long budget) {
  CompletenessReport<BaseCategory> out;
  for (const auto& x : battery) {
    ++out.objects_checked;
    auto idem = idempotents(C, x, budget);
    if (!idem.exhaustive) out.status = combine(out.status, Status::Unknown);
    for (const auto& e : idem.idempotents) {
      ++out.idempotents_checked;
      auto sp = C.split_idempotent(x, e, budget);
      if (sp.status == SplitStatus::NotSplitHere) {
        out.status = Status::Fail;
        out.witness_object = x;
        out.witness_idempotent = e;
        return out;
      }
      if (sp.status == SplitStatus::Unknown || !verify_splitting(C, e, *sp.splitting)) {
        out.status = combine(out.status, Status::Unknown);
      }
    }
  }
  return out;
}

/// All pairs (A, e) with A a battery object and e an idempotent of A.
inline std::vector<KObj> envelope_battery(const KaroubiCategory& K, const std::vector<Obj>& base_objects,
                                          long long budget) {
  std::vector<KObj> out;
  for (const auto& a : base_objects) {
    for (const auto& e : idempotents(K.base(), a, budget).idempotents) out.push_back(KObj{a, e});
  }
  return out;
}

}  // namespace idcomp
