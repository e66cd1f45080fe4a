#pragma once

/**
 * @file axioms.hpp
 * @brief Bounded checks of (N1)-(N4) and the derived lemmas over a battery.
 *
 * The battery is every object with at most `dims` summands, morphisms between
 * them (exhaustive up to `cap` per hom-space), the completions of those
 * morphisms, and the same completions with their maps zeroed (mostly
 * non-members, used for the rotation check).
 */

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "exang.hpp"
#include "nseq.hpp"
#include "theta.hpp"

namespace idcomp {

inline std::string describe(const NSeq<BaseCategory>& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.maps.size(); ++i) os << (i ? " | " : "") << describe(s.maps[i]);
  return os.str();
}

struct Battery {
  std::vector<Obj> objects;
  std::vector<Mor> morphisms;
  std::vector<NSeq<BaseCategory>> members;
  std::vector<NSeq<BaseCategory>> others;
};

struct AxiomLimits {
  std::size_t dims = 2;
  long long cap = 64;          // morphisms per hom-space
  long long budget = 10000;    // per search
  std::size_t pair_cap = 4096; // sequence pairs for (N3)/(N4)
  std::uint64_t seed = 7;      // sampling above the cap
};

inline Battery make_battery(const Theta& theta, const AxiomLimits& lim) {
  const auto& cat = theta.category();
  Battery b;
  b.objects = objects_up_to(cat.presentation().size(), lim.dims);
  for (const auto& x : b.objects) {
    for (const auto& y : b.objects) {
      for (auto& f : morphism_battery(cat, x, y, lim.cap, lim.seed)) b.morphisms.push_back(f);
    }
  }
  for (const auto& f : b.morphisms) {
    auto c = complete_morphism(theta, f);
    if (c.found != Found::Yes) continue;
    b.members.push_back(*c.seq);
    auto z = *c.seq;
    for (auto& m : z.maps) m = cat.zero(m.src, m.dst);
    b.others.push_back(z);
  }
  return b;
}

namespace detail {

inline void note(AxiomVerdict& v, Status s, const std::string& witness) {
  if (s == Status::Fail && v.status != Status::Fail) v.witness = witness;
  if (s == Status::Unknown && v.status == Status::Pass) v.witness = witness;
  v.status = combine(v.status, s);
}

/// Some automorphism of x other than the identity when one exists.
inline Mor some_automorphism(const BaseCategory& cat, const Obj& x, long long cap) {
  for (auto& u : morphism_battery(cat, x, x, cap, 11)) {
    if (u != cat.identity(x) && inverse_of(cat, u)) return u;
  }
  return cat.identity(x);
}

/// g_i = u_{i+1} f_i u_i^{-1}, the image of s under a termwise isomorphism.
inline NSeq<BaseCategory> transport(const BaseCategory& cat, const NSeq<BaseCategory>& s, const std::vector<Mor>& u) {
  NSeq<BaseCategory> t = s;
  const auto len = s.objects.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Mor next = i + 1 < len ? u[i + 1] : cat.suspend(u[0]);
    t.maps[i] = cat.compose(next, cat.compose(s.maps[i], *inverse_of(cat, u[i])));
  }
  return t;
}

/// Pairs (φ_0, φ_1) with g_0 φ_0 = φ_1 f_0.
inline AffineSolution<BaseCategory> solid_squares(const BaseCategory& cat, const NSeq<BaseCategory>& a,
                                                  const NSeq<BaseCategory>& b) {
  std::vector<HomSlot<BaseCategory>> slots{{a.objects[0], b.objects[0]}, {a.objects[1], b.objects[1]}};
  return *solve_affine(cat, slots, [&](const std::vector<Mor>& phi) {
    return std::vector<Mor>{sub(cat, cat.compose(b.maps[0], phi[0]), cat.compose(phi[1], a.maps[0]))};
  });
}

/// Whether every g with f g = 0 (g out of a battery object) vanishes.
inline bool is_mono(const BaseCategory& cat, const Mor& f, const std::vector<Obj>& probes) {
  for (const auto& w : probes) {
    auto sol = solve_affine(cat, std::vector<HomSlot<BaseCategory>>{{w, f.src}},
                            [&](const std::vector<Mor>& g) { return std::vector<Mor>{cat.compose(f, g[0])}; });
    if (sol && !sol->kernel.empty()) return false;
  }
  return true;
}

inline bool is_epi(const BaseCategory& cat, const Mor& f, const std::vector<Obj>& probes) {
  for (const auto& w : probes) {
    auto sol = solve_affine(cat, std::vector<HomSlot<BaseCategory>>{{f.dst, w}},
                            [&](const std::vector<Mor>& g) { return std::vector<Mor>{cat.compose(g[0], f)}; });
    if (sol && !sol->kernel.empty()) return false;
  }
  return true;
}

}  // namespace detail

inline std::vector<AxiomVerdict> check_axioms(const Theta& theta, const AxiomLimits& lim) {
  const auto& cat = theta.category();
  const int n = theta.n();
  const auto b = make_battery(theta, lim);
  auto member = [&](const NSeq<BaseCategory>& s) { return theta.contains(s).status; };

  auto iso = make_verdict("N1(a) isomorphisms");
  auto sums = make_verdict("N1(a) direct sums");
  auto summands = make_verdict("N1(a) direct summands");
  for (std::size_t k = 0; k < b.members.size(); ++k) {
    const auto& s = b.members[k];
    std::vector<Mor> u;
    for (const auto& o : s.objects) u.push_back(detail::some_automorphism(cat, o, lim.cap));
    ++iso.checked;
    detail::note(iso, member(detail::transport(cat, s, u)), describe(s));

    const auto& t = b.members[(7 * k + 3) % b.members.size()];
    ++sums.checked;
    detail::note(sums, member(seq_direct_sum(cat, s, t)), describe(s) + " (+) " + describe(t));

    auto d = decompose_seq(cat, s, lim.budget);
    ++summands.checked;
    if (d.status != Status::Pass) detail::note(summands, Status::Unknown, describe(s));
    for (const auto& part : d.parts) detail::note(summands, member(part), describe(part));
  }

  auto trivial = make_verdict("N1(b) trivial sequences");
  for (const auto& x : b.objects) {
    ++trivial.checked;
    detail::note(trivial, member(trivial_seq(cat, x, n)), "trivial on " + std::to_string(x.size()) + " summands");
  }

  auto completion = make_verdict("N1(c) completions");
  std::size_t missing = 0;
  for (const auto& f : b.morphisms) {
    ++completion.checked;
    auto c = complete_morphism(theta, f);
    Status s = c.found == Found::Yes ? Status::Pass : c.found == Found::None ? Status::Fail : Status::Unknown;
    if (c.found == Found::Yes && (c.seq->maps[0] != f || member(*c.seq) != Status::Pass)) s = Status::Fail;
    if (s == Status::Fail) ++missing;
    detail::note(completion, s, describe(f));
  }
  if (missing) completion.witness += " (" + std::to_string(missing) + " uncompletable)";

  auto rotation = make_verdict("N2 rotation");
  for (const auto* pool : {&b.members, &b.others}) {
    for (const auto& s : *pool) {
      ++rotation.checked;
      const auto m0 = member(s);
      const auto m1 = member(rotate(cat, s));
      const auto m2 = member(rotate_right(cat, s));
      if (m0 == Status::Unknown || m1 == Status::Unknown || m2 == Status::Unknown) {
        detail::note(rotation, Status::Unknown, describe(s));
      } else if (m0 != m1 || m0 != m2) {
        detail::note(rotation, Status::Fail, describe(s));
      }
    }
  }

  auto n3 = make_verdict("N3 fill-ins");
  auto n4 = make_verdict("N4 mapping cones");
  std::size_t pairs = 0;
  for (const auto& a : b.members) {
    for (const auto& c : b.members) {
      if (pairs++ >= lim.pair_cap) break;
      auto solid = detail::solid_squares(cat, a, c);
      // Fill-ins form a linear space, so a basis of solid squares suffices.
      for (const auto& basis : solid.kernel) {
        ++n3.checked;
        auto fill = fill_in(cat, a, c, basis[0], basis[1]);
        if (!fill.morphism) detail::note(n3, Status::Fail, describe(a) + " -> " + describe(c));
      }
      // (N4) quantifies over every solid square; sampled when the space is large.
      Budget squares(lim.cap);
      sample_affine(cat, solid, squares, lim.seed + 5, [&](const std::vector<Mor>& phi) {
        ++n4.checked;
        auto space = fill_in_space(cat, a, c, phi[0], phi[1], a.maps.size() - 1);
        if (!space) {
          detail::note(n4, Status::Fail, describe(a) + " -> " + describe(c) + " has no fill-in");
          return false;
        }
        Budget fills(lim.budget);
        auto r = enumerate_affine(cat, *space, fills, [&](const std::vector<Mor>& rest) {
          std::vector<Mor> full{phi[0], phi[1]};
          full.insert(full.end(), rest.begin(), rest.end());
          return member(mapping_cone(cat, SeqMor<BaseCategory>{a, c, full})) == Status::Pass;
        });
        if (r == Search::Exhausted) detail::note(n4, Status::Fail, describe(a) + " -> " + describe(c));
        if (r == Search::OutOfBudget) detail::note(n4, Status::Unknown, describe(a) + " -> " + describe(c));
        return false;
      });
    }
  }

  auto mono = make_verdict("monomorphisms are sections");
  auto epi = make_verdict("epimorphisms are retractions");
  for (const auto& f : b.morphisms) {
    if (detail::is_mono(cat, f, b.objects)) {
      ++mono.checked;
      if (!left_inverse(cat, f)) detail::note(mono, Status::Fail, describe(f));
    }
    if (detail::is_epi(cat, f, b.objects)) {
      ++epi.checked;
      if (!right_inverse(cat, f)) detail::note(epi, Status::Fail, describe(f));
    }
  }

  auto split = make_verdict("split criteria agree");
  auto zeros = make_verdict("consecutive composites vanish");
  for (const auto& s : b.members) {
    ++split.checked;
    auto r = is_split(cat, s, lim.budget);
    if (r.section_search != Status::Pass || r.retraction_search != Status::Pass) {
      detail::note(split, Status::Unknown, describe(s));
    } else if (!r.agree) {
      detail::note(split, Status::Fail, describe(s));
    }
    ++zeros.checked;
    auto z = consecutive_zero_check(cat, s);
    if (z.status != Status::Pass) detail::note(zeros, Status::Fail, describe(s) + " at " + std::to_string(*z.position));
  }

  return {iso, sums, summands, trivial, completion, rotation, n3, n4, mono, epi, split, zeros};
}

}  // namespace idcomp
