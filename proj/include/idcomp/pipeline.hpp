#pragma once

/**
 * @file pipeline.hpp
 * @brief Realizing an extension between objects of the idempotent completion.
 *
 * Given δ : (Y, e_1) -> Σ~(X, e_0) with X, Y in a subcategory A, pad both ends
 * by their complements so that the padded map lives in A, realize it there,
 * transport the realization into the envelope and peel off the two
 * contractible pieces with the splitting lemmas. What remains ends in δ and
 * is a direct summand of the image of a distinguished sequence.
 */

#include <optional>
#include <string>
#include <vector>

#include "exang.hpp"
#include "karoubi.hpp"
#include "splitting.hpp"
#include "theta.hpp"

namespace idcomp {

/// core is a summand of ι(ambient): projection ∘ inclusion = 1_core.
struct SummandCertificate {
  NSeq<BaseCategory> ambient;
  Status ambient_membership = Status::Unknown;
  SeqMor<KaroubiCategory> inclusion;
  SeqMor<KaroubiCategory> projection;
  bool verified = false;
};

struct PipelineResult {
  Status status = Status::Pass;
  std::string message;
  std::optional<DistinguishedExangle<KaroubiCategory>> exangle;
  /// The peeled contractible summand trivial(X') ⊕ B(Y').
  std::optional<NSeq<KaroubiCategory>> peeled;
  bool peeled_shape_ok = false;
  bool terms_in_subcategory = false;
  std::optional<SummandCertificate> certificate;
  /// Independent exactness check in the envelope (exact Θ only).
  std::optional<RankCertificate> ranks;
};

inline NSeq<KaroubiCategory> include_seq(const KaroubiCategory& K, const NSeq<BaseCategory>& t) {
  NSeq<KaroubiCategory> s;
  for (const auto& o : t.objects) s.objects.push_back(K.include(o));
  for (const auto& m : t.maps) s.maps.push_back(K.include(m));
  return s;
}

inline PipelineResult karoubi_extension_complete(const KaroubiCategory& K, const Theta& theta,
                                                 const SubcategorySpec& sub, const Extension<KaroubiCategory>& ext,
                                                 long long budget) {
  using KM = KMor;
  const int n = theta.n();
  const auto un = static_cast<std::size_t>(n);
  PipelineResult out;
  const KObj& x = ext.a_obj;
  const KObj& y = ext.c_obj;
  const KM& delta = ext.delta;
  if (!sub.contains(x.base) || !sub.contains(y.base)) throw DomainError("endpoints are not summands of A-objects");
  if (delta.src != y || delta.dst != K.suspend(x)) throw std::invalid_argument("extension has the wrong shape");

  // (1) complements and the canonical isomorphisms X ⊕ X' ≅ ιA.
  const auto ci0 = complement_iso(K, x);
  const auto ci1 = complement_iso(K, y);
  const KObj xc = K.complement(x);
  const KObj yc = K.complement(y);
  if (!ci0.verified || !ci1.verified) {
    out.status = Status::Fail;
    out.message = "complement isomorphism did not verify";
    return out;
  }

  // (2) the padded map [[δ, 0], [0, 0]] : Y ⊕ Y' -> Σ~X ⊕ Σ~X' read in the base.
  const Mor padded = delta.p;
  std::vector<KObj> dsts{K.suspend(x), K.suspend(xc)};
  std::vector<KObj> srcs{y, yc};
  const KM block = K.block_matrix(std::span<const KObj>(dsts), std::span<const KObj>(srcs),
                                  {delta, K.zero(yc, K.suspend(x)), K.zero(y, K.suspend(xc)),
                                   K.zero(yc, K.suspend(xc))});
  if (K.compose(K.suspend(ci0.u), K.compose(block, ci1.v)) != K.include(padded)) {
    out.status = Status::Fail;
    out.message = "padded map does not match the block form";
    return out;
  }

  // (3) realize in A.
  auto real = realize(theta, Extension<BaseCategory>{x.base, y.base, padded},
                      [&](const Obj& o) { return sub.contains(o); });
  if (real.found != Found::Yes) {
    out.status = real.found == Found::None ? Status::Fail : Status::Unknown;
    out.message = "padded extension has no realization in A";
    return out;
  }
  const auto& t = real.exangle->seq;
  const auto it = include_seq(K, t);

  // (4) transport ι(t) to P with ends X ⊕ X' and Y ⊕ Y'.
  NSeq<KaroubiCategory> P = it;
  P.objects[0] = ci0.sum;
  P.objects[un + 1] = ci1.sum;
  P.maps[0] = K.compose(it.maps[0], ci0.u);
  P.maps[un] = K.compose(ci1.v, it.maps[un]);
  P.maps[un + 1] = K.compose(K.suspend(ci0.v), K.compose(it.maps[un + 1], ci1.u));
  check_seq_shape(K, P);
  if (P.maps[un + 1] != block) {
    out.status = Status::Fail;
    out.message = "transported connecting map is not the padded block";
    return out;
  }
  std::vector<KM> to_it, from_it;
  for (std::size_t i = 0; i < P.objects.size(); ++i) {
    to_it.push_back(i == 0 ? ci0.u : i == un + 1 ? ci1.u : K.identity(P.objects[i]));
    from_it.push_back(i == 0 ? ci0.v : i == un + 1 ? ci1.v : K.identity(P.objects[i]));
  }
  SeqMor<KaroubiCategory> p_to_it{P, it, to_it};
  SeqMor<KaroubiCategory> it_to_p{it, P, from_it};
  if (!is_seq_morphism(K, p_to_it) || !is_seq_morphism(K, it_to_p)) {
    out.status = Status::Fail;
    out.message = "transport is not an isomorphism of sequences";
    return out;
  }

  // (5) peel Y' off the end, then X' off the front.
  auto s1 = split_off_summand(K, P, y, yc, budget);
  if (s1.status != Status::Pass) {
    out.status = s1.status;
    out.message = "trailing split: " + s1.message;
    return out;
  }
  auto s2 = split_off_leading_summand(K, s1.core, x, xc, budget);
  if (s2.status != Status::Pass) {
    out.status = s2.status;
    out.message = "leading split: " + s2.message;
    return out;
  }
  const auto& core = s2.core;
  if (core.objects.front() != x || core.objects.back() != y || core.connecting() != delta) {
    out.status = Status::Fail;
    out.message = "core does not end in the given extension";
    return out;
  }

  // (6) summand certificate: core -> ι(t) -> core is the identity.
  std::vector<NSeq<KaroubiCategory>> parts1{s1.core, s1.padding};
  std::vector<NSeq<KaroubiCategory>> parts2{core, s2.padding};
  auto proj = seq_compose(
      K, seq_projection(K, parts2, 0),
      seq_compose(K, s2.iso->forward,
                  seq_compose(K, seq_projection(K, parts1, 0), seq_compose(K, s1.iso->forward, it_to_p))));
  auto incl = seq_compose(
      K, p_to_it,
      seq_compose(K, s1.iso->backward,
                  seq_compose(K, seq_injection(K, parts1, 0), seq_compose(K, s2.iso->backward,
                                                                          seq_injection(K, parts2, 0)))));
  SummandCertificate cert{t, theta.contains(t).status, incl, proj, false};
  cert.verified = is_seq_morphism(K, incl) && is_seq_morphism(K, proj) &&
                  seq_compose(K, proj, incl).components == seq_identity(K, core).components;
  out.certificate = cert;
  if (!cert.verified || cert.ambient_membership != Status::Pass) {
    out.status = combine(Status::Fail, cert.ambient_membership);
    out.message = "summand certificate did not verify";
  }

  // (7) the peeled part has the contractible shape.
  auto peeled = seq_direct_sum(K, s2.padding, s1.padding);
  out.peeled_shape_ok = s2.padding == trivial_seq(K, xc, n) && s1.padding == trailing_padding(K, yc, n) &&
                        K.is_zero(peeled.connecting());
  out.peeled = peeled;
  if (!out.peeled_shape_ok) {
    out.status = Status::Fail;
    out.message = "peeled summand has the wrong shape";
  }

  out.terms_in_subcategory = true;
  for (const auto& o : core.objects) out.terms_in_subcategory = out.terms_in_subcategory && sub.contains(o.base);
  if (!out.terms_in_subcategory) {
    out.status = Status::Fail;
    out.message = "a term of the core is not a summand of an A-object";
  }

  if (theta.spec().kind == ThetaSpec::Kind::Exact) {
    out.ranks = exactness_certificate(K, core);
    out.status = combine(out.status, out.ranks->status);
  }
  if (consecutive_zero_check(K, core).status != Status::Pass) out.status = Status::Fail;
  out.exangle = DistinguishedExangle<KaroubiCategory>{core, ext};
  return out;
}

}  // namespace idcomp
