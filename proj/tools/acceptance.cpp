// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "idcomp.hpp"

using namespace idcomp;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few reasons a criterion fails.
struct Checker {
  Outcome out;
  std::size_t checked = 0;
  void expect(bool cond, const std::string& why) {
    ++checked;
    if (cond) return;
    if (out.ok) out.detail = why;
    out.ok = false;
  }
};

Obj vpow(std::size_t k) {
  Obj o;
  o.summands.assign(k, 0);
  return o;
}

Mor random_mor(std::mt19937_64& rng, const AddCat& cat, const Obj& x, const Obj& y) {
  Mor m = cat.zero(x, y);
  std::uniform_int_distribution<Elem> d(0, cat.field().prime() - 1);
  for (auto& c : m.coords) c = d(rng);
  return m;
}

Mor random_automorphism(std::mt19937_64& rng, const BaseCategory& cat, const Obj& x) {
  for (int t = 0; t < 64; ++t) {
    auto u = random_mor(rng, cat, x, x);
    if (inverse_of(cat, u)) return u;
  }
  return cat.identity(x);
}

// Rank of a Vect morphism (row-major dst x src) by plain elimination mod p.
std::size_t brute_rank(const Mor& f, Elem p) {
  const auto rows = f.dst.size(), cols = f.src.size();
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = f.coords[r * cols + c];
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    long long inv = 1;
    while ((m[rank][c] * inv) % p != 1) ++inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const long long k = (m[r][c] * inv) % p;
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = ((m[r][j] - k * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

// 1. R-oracle: x does not split in the base; every envelope idempotent splits as (q, q, q).
Outcome karoubi_correctness() {
  Checker c;
  auto R = oracles::free_module();
  KaroubiCategory K(R);
  for (std::size_t k = 1; k <= 2; ++k) {
    auto r = split_idempotent(R, vpow(k), oracles::free_module_x(R, k), 1LL << 40);
    c.expect(r.status == SplitStatus::NotSplitHere, "x on R^" + std::to_string(k) + " was not refuted");
  }
  auto base = verify_idempotent_complete(R, objects_up_to(1, 2), 1 << 20);
  c.expect(base.status == Status::Fail, "base category reported idempotent complete");
  auto battery = envelope_battery(K, objects_up_to(1, 2), 1 << 20);
  auto env = verify_idempotent_complete(K, battery, 1 << 20);
  c.expect(env.status == Status::Pass, "envelope completeness did not pass");
  std::size_t canonical = 0;
  for (const auto& x : battery) {
    for (const auto& q : idempotents(K, x, 1 << 20).idempotents) {
      auto sp = K.split_idempotent(x, q, 0);
      c.expect(sp.splitting && sp.splitting->y.e == q.p && sp.splitting->r.p == q.p && sp.splitting->s.p == q.p &&
                   verify_splitting(K, q, *sp.splitting),
               "non-canonical splitting");
      ++canonical;
    }
  }
  c.out.detail = c.out.ok ? std::to_string(env.idempotents_checked) + " envelope idempotents, " +
                                std::to_string(canonical) + " canonical splittings verified"
                          : c.out.detail;
  return c.out;
}

// 2. Inclusion functor, full faithfulness, complements, Krull-Schmidt on both oracles.
Outcome remark_suite() {
  Checker c;
  std::size_t cases = 0;
  for (auto C : {oracles::vect(), oracles::free_module()}) {
    KaroubiCategory K(C);
    for (const auto& v : envelope_checks(K, 2, 64, 1 << 20)) {
      c.expect(v.status == Status::Pass && v.checked > 0, v.name + ": " + std::string(to_string(v.status)) + " " +
                                                              v.witness);
      cases += v.checked;
    }
  }
  if (c.out.ok) c.out.detail = std::to_string(cases) + " cases over both oracles";
  return c.out;
}

// 3. Full axiom battery on the Vect oracle.
Outcome axiom_battery() {
  Checker c;
  Theta th(oracles::vect(), ThetaSpec::exact(), 2, 10000);
  AxiomLimits lim;
  lim.dims = 2;
  std::size_t cases = 0;
  for (const auto& v : check_axioms(th, lim)) {
    c.expect(v.status == Status::Pass && v.checked > 0, v.name + ": " + std::string(to_string(v.status)) + " " +
                                                            v.witness);
    cases += v.checked;
  }
  if (c.out.ok) c.out.detail = "12 checks, " + std::to_string(cases) + " cases";
  return c.out;
}

// 4. Splitting lemma round trips and factorizations on random instances.
Outcome constructive_lemmas() {
  Checker c;
  std::mt19937_64 rng(2024);
  std::size_t instances = 0, factored = 0;
  for (Elem p : {2, 3}) {
    auto C = oracles::vect(p);
    for (int n = 1; n <= 3; ++n) {
      Theta th(C, ThetaSpec::exact(), n, 10000);
      const auto un = static_cast<std::size_t>(n);
      for (int t = 0; t < 40; ++t) {
        auto x = *complete_morphism(th, random_mor(rng, C, vpow(rng() % 3), vpow(rng() % 3))).seq;
        const auto d = vpow(rng() % 3);
        const bool leading = t % 2 == 1;
        auto s = seq_direct_sum(C, x, leading ? trivial_seq(C, d, n) : trailing_padding(C, d, n));
        // Twist by automorphisms away from the split term (A_0 when leading, A_{n+1} when trailing).
        std::vector<Mor> u;
        for (std::size_t i = 0; i < s.objects.size(); ++i) {
          const bool fixed = leading ? i == 0 : i == un + 1;
          u.push_back(fixed ? C.identity(s.objects[i]) : random_automorphism(rng, C, s.objects[i]));
        }
        auto tw = s;
        for (std::size_t i = 0; i < s.objects.size(); ++i) {
          const Mor next = i + 1 < s.objects.size() ? u[i + 1] : C.suspend(u[0]);
          tw.maps[i] = C.compose(next, C.compose(s.maps[i], *inverse_of(C, u[i])));
        }
        ++instances;
        auto r = leading ? split_off_leading_summand(C, tw, x.objects[0], d, 1 << 16)
                         : split_off_summand(C, tw, x.objects[un + 1], d, 1 << 16);
        c.expect(r.status == Status::Pass, "split_off_summand: " + r.message);
        if (r.status != Status::Pass) continue;
        c.expect(r.iso && verify_seq_iso(C, *r.iso), "isomorphism did not verify");
        c.expect(find_seq_iso(C, r.core, x, 1 << 18).iso.has_value(), "core not isomorphic to X");
        c.expect(r.padding == (leading ? trivial_seq(C, d, n) : trailing_padding(C, d, n)),
                 "padding has the wrong shape");
        // g = f_n m always satisfies f_{n+1} g = 0.
        auto m = random_mor(rng, C, vpow(rng() % 3), tw.objects[un]);
        auto g = C.compose(tw.maps[un], m);
        auto h = factor_through(C, tw, g);
        c.expect(h && C.compose(tw.maps[un], *h) == g, "factor_through did not re-verify");
        if (h) ++factored;
      }
    }
  }
  c.expect(instances >= 100, "fewer than 100 instances");
  if (c.out.ok) {
    c.out.detail = std::to_string(instances) + " instances, " + std::to_string(factored) + " factorizations";
  }
  return c.out;
}

// 5. The pipeline over every extension between envelope battery objects.
Outcome pipeline_battery() {
  Checker c;
  auto C = oracles::vect();
  KaroubiCategory K(C);
  Theta th(C, ThetaSpec::exact(), 2, 10000);
  auto sub = SubcategorySpec::full(1);
  const auto objs = envelope_battery(K, objects_up_to(1, 2), 1 << 16);
  std::size_t runs = 0, unknown = 0;
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      const auto sx = K.suspend(x);
      Budget b(1 << 20);
      enumerate_hom(K, y, sx, b, [&](const KMor& delta) {
        ++runs;
        auto r = karoubi_extension_complete(K, th, sub, make_extension(K, x, y, delta), 1 << 16);
        if (r.status == Status::Unknown) ++unknown;
        c.expect(r.status == Status::Pass, "pipeline " + std::string(to_string(r.status)) + ": " + r.message);
        c.expect(r.exangle && r.exangle->seq.connecting() == delta, "core does not end in delta");
        c.expect(r.terms_in_subcategory, "a term lies outside the completion of A");
        c.expect(r.certificate && r.certificate->verified && r.certificate->ambient_membership == Status::Pass,
                 "summand certificate missing");
        c.expect(r.peeled_shape_ok, "peeled summand has the wrong shape");
        return false;
      });
    }
  }
  c.expect(unknown == 0, std::to_string(unknown) + " unknown verdicts");
  if (c.out.ok) c.out.detail = std::to_string(runs) + " extensions over " + std::to_string(objs.size()) + " objects";
  return c.out;
}

// 6. EA1 and EA2 on the restricted Vect structure.
Outcome ea_checks() {
  Checker c;
  Theta th(oracles::vect(), ThetaSpec::exact(), 2, 10000);
  RestrictedStructure st(th, SubcategorySpec::full(1));
  auto vs = check_EA1(st, 2, 64, 10000);
  vs.push_back(check_EA2(st, 2, 64, 10000));
  std::size_t cases = 0;
  for (const auto& v : vs) {
    c.expect(v.status == Status::Pass && v.checked > 0, v.name + ": " + std::string(to_string(v.status)) + " " +
                                                            v.witness);
    cases += v.checked;
  }
  if (c.out.ok) c.out.detail = std::to_string(cases) + " cases";
  return c.out;
}

// 7. Every failure path reports a witness that checks out independently.
Outcome negative_controls() {
  Checker c;
  // validate: the corrupted constant breaks an identity law on a named basis morphism.
  {
    RunConfig cfg;
    cfg.fixture = fixture("vect_f2_corrupt.cat");
    auto rep = run("validate", cfg);
    c.expect(rep.exit_code() == 1, "corrupt fixture did not exit 1");
    auto lp = parse_presentation_file(cfg.fixture);
    auto v = validate_presentation(lp.pres);
    c.expect(v.status == Status::Fail && !rep.entries.empty() && rep.entries[0].verdict.witness == v.message,
             "validate witness missing");
    if (v.status == Status::Fail) {
      AddCat cat(lp.pres);
      Mor f = cat.zero(cat.basic(static_cast<int>(v.basics[0])), cat.basic(static_cast<int>(v.basics[1])));
      f.coords[v.basis[0]] = 1;
      const bool broken = cat.compose(cat.identity(f.dst), f) != f || cat.compose(f, cat.identity(f.src)) != f;
      c.expect(broken, "validate witness does not re-verify");
    }
  }
  // N1(c) under trivial-only Θ: a reported morphism is not an isomorphism, which
  // is what completing inside sums of trivial sequences would force.
  {
    auto lp = load_presentation(fixture("vect_f2_trivial.cat"));
    BaseCategory C(lp.pres, lp.sigma);
    Theta th(C, lp.theta, lp.n, 10000);
    AxiomLimits lim;
    auto vs = check_axioms(th, lim);
    const AxiomVerdict* n1c = nullptr;
    for (const auto& v : vs) {
      if (v.name == "N1(c) completions") n1c = &v;
    }
    c.expect(n1c && n1c->status == Status::Fail, "N1(c) did not fail under trivial-only theta");
    std::size_t uncompletable = 0;
    bool witness_matches = false;
    for (const auto& x : objects_up_to(1, lim.dims)) {
      for (const auto& y : objects_up_to(1, lim.dims)) {
        for (const auto& f : morphism_battery(C, x, y, lim.cap, lim.seed)) {
          if (complete_morphism(th, f).found != Found::None) continue;
          ++uncompletable;
          c.expect(!inverse_of(C, f).has_value(), "an isomorphism was reported uncompletable");
          if (n1c && n1c->witness.rfind(describe(f), 0) == 0) witness_matches = true;
        }
      }
    }
    c.expect(uncompletable > 0 && witness_matches, "N1(c) witness is not an uncompletable morphism");
    RunConfig cfg;
    cfg.fixture = fixture("vect_f2_trivial.cat");
    c.expect(run("check-nangle", cfg).exit_code() == 1, "check-nangle on trivial theta did not exit 1");
  }
  // theta_contains: V -0-> V -> 0 -> 0 fails exactness at A_0 (rank 0 + rank 0 != 1).
  {
    auto C = oracles::vect();
    Theta th(C, ThetaSpec::exact(), 2, 10000);
    NSeq<BaseCategory> s{{vpow(1), vpow(1), vpow(0), vpow(0)},
                         {C.zero(vpow(1), vpow(1)), C.zero(vpow(1), vpow(0)), C.zero(vpow(0), vpow(0)),
                          C.zero(vpow(0), vpow(1))}};
    auto m = th.contains(s);
    c.expect(m.status == Status::Fail && m.ranks && m.ranks->failing_position, "theta_contains did not fail");
    if (m.ranks && m.ranks->failing_position) {
      const auto i = *m.ranks->failing_position;
      const auto len = s.objects.size();
      const auto in = brute_rank(s.maps[(i + len - 1) % len], 2);
      const auto out = brute_rank(s.maps[i], 2);
      c.expect(in + out != s.objects[i].size(), "theta_contains witness does not re-verify");
    }
  }
  // consecutive_zero_check: 1 then 1 composes to a nonzero map.
  {
    auto C = oracles::vect();
    auto id = C.identity(vpow(1));
    NSeq<BaseCategory> s{{vpow(1), vpow(1), vpow(1), vpow(0)}, {id, id, C.zero(vpow(1), vpow(0)),
                                                                C.zero(vpow(0), vpow(1))}};
    auto z = consecutive_zero_check(C, s);
    c.expect(z.status == Status::Fail && z.position, "consecutive_zero_check did not fail");
    if (z.position) {
      const auto i = *z.position;
      const auto& next = i + 1 < s.maps.size() ? s.maps[i + 1] : C.suspend(s.maps[0]);
      c.expect(!C.is_zero(C.compose(next, s.maps[i])), "consecutive_zero witness does not re-verify");
    }
  }
  if (c.out.ok) c.out.detail = "validate, N1(c), theta_contains and consecutive_zero failures re-verified";
  return c.out;
}

// 8. Two runs of every command produce the same machine report.
Outcome determinism() {
  Checker c;
  struct Job {
    const char* command;
    const char* fixture;
    const char* delta;
  };
  const Job jobs[] = {
      {"validate", "vect_f2.cat", ""},       {"check-nangle", "vect_f2.cat", ""},
      {"karoubi", "vect_f2.cat", ""},        {"ext-closed", "vect_f2.cat", ""},
      {"check-ea", "vect_f2.cat", ""},       {"complete", "vect_f2.cat", ""},
      {"complete", "vect_f2.cat", "V+V:1,0,0,0/V+V:1,1,0,0/1,1,0,0"},
      {"validate", "freemod_r.cat", ""},     {"karoubi", "freemod_r.cat", ""},
      {"validate", "vect_f2_corrupt.cat", ""}, {"check-nangle", "vect_f2_trivial.cat", ""},
  };
  auto suite = [&] {
    std::string all;
    for (const auto& j : jobs) {
      RunConfig cfg;
      cfg.fixture = fixture(j.fixture);
      cfg.delta = j.delta;
      cfg.format = "machine";
      all += render(run(j.command, cfg), cfg.format);
    }
    return all;
  };
  const auto first = suite();
  const auto second = suite();
  c.expect(first == second, "machine reports differ between runs");
  if (c.out.ok) c.out.detail = std::to_string(std::size(jobs)) + " reports, " + std::to_string(first.size()) + " bytes";
  return c.out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Karoubi correctness", 10, karoubi_correctness},
      {2, "envelope suite", 30, remark_suite},
      {3, "axiom battery", 300, axiom_battery},
      {4, "constructive lemmas", 120, constructive_lemmas},
      {5, "completion pipeline", 300, pipeline_battery},
      {6, "EA checks", 600, ea_checks},
      {7, "negative controls", 600, negative_controls},
      {8, "determinism", 600, determinism},
  };
  bool all = true;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit_s) {
      o.ok = false;
      o.detail += " (over the time limit)";
    }
    all = all && o.ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", secs, cr.limit_s);
    std::cout << "criterion " << cr.id << " " << (o.ok ? "PASS" : "FAIL") << "  " << cr.name << " [" << timing
              << "]  " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
