#pragma once

/**
 * @file cli.hpp
 * @brief The batch commands behind the command-line tool.
 *
 * Exit codes: 0 every counted check passed, 1 some check failed, 2 some
 * check was undecided and none failed, 3 usage or parse error.
 */

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "axioms.hpp"
#include "envelope.hpp"
#include "io.hpp"
#include "pipeline.hpp"

namespace idcomp {

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"validate", "check-nangle", "karoubi", "ext-closed", "complete", "check-ea"};
  return c;
}

struct Session {
  LoadedPresentation loaded;
  BaseCategory cat;
  ThetaSpec spec;
  int n = 2;
  SubcategorySpec sub;
};

namespace detail {

inline std::vector<Elem> coord_list(const std::string& s, PrimeField F) {
  std::vector<Elem> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');) {
    try {
      out.push_back(F.reduce(std::stoll(t)));
    } catch (const std::exception&) {
      throw UsageError("bad coordinate '" + t + "' in delta");
    }
  }
  return out;
}

inline Obj object_from_token(const CategoryPresentation& P, const std::string& t) {
  Obj o;
  if (t == "0") return o;
  std::stringstream ss(t);
  for (std::string b; std::getline(ss, b, '+');) {
    auto i = P.basic_index(b);
    if (!i) throw UsageError("unknown basic '" + b + "' in delta");
    o.summands.push_back(static_cast<int>(*i));
  }
  return o;
}

inline KObj kobject(const KaroubiCategory& K, const std::string& part) {
  const auto& C = K.base();
  const auto colon = part.find(':');
  Obj base = object_from_token(C.presentation(), part.substr(0, colon));
  if (colon == std::string::npos) return K.include(base);
  auto coords = coord_list(part.substr(colon + 1), C.field());
  if (coords.size() != C.hom_dimension(base, base)) throw UsageError("idempotent in delta has the wrong size");
  try {
    return K.make_object(base, Mor{base, base, coords});
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("delta: ") + e.what());
  }
}

inline std::string describe_kobj(const CategoryPresentation& P, const KObj& x) {
  return object_token(P, x.base) + " e=" + describe(x.e);
}

}  // namespace detail

/// `X[:e]/Y[:e]/p`: endpoints as sums of basics with optional idempotents
/// (block coordinates), then the coordinates of δ : Y -> Σ~X. Empty or
/// `zero` gives the zero extension on the first basic.
inline Extension<KaroubiCategory> parse_delta(const KaroubiCategory& K, const std::string& text) {
  const auto& C = K.base();
  if (C.presentation().size() == 0) throw UsageError("the presentation has no basics");
  if (text.empty() || text == "zero") {
    auto x = K.include(C.basic(0));
    return zero_extension(K, x, x);
  }
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string t; std::getline(ss, t, '/');) parts.push_back(t);
  if (parts.size() != 3) throw UsageError("delta must look like X[:e]/Y[:e]/coords");
  auto x = detail::kobject(K, parts[0]);
  auto y = detail::kobject(K, parts[1]);
  auto sx = K.suspend(x);
  auto p = detail::coord_list(parts[2], C.field());
  if (parts[2] == "0") p.assign(C.hom_dimension(y.base, sx.base), 0);
  if (p.size() != C.hom_dimension(y.base, sx.base)) throw UsageError("delta has the wrong number of coordinates");
  try {
    return make_extension(K, x, y, K.make_morphism(y, sx, Mor{y.base, sx.base, p}));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("delta: ") + e.what());
  }
}

inline Session open_session(const RunConfig& cfg) {
  if (cfg.fixture.empty()) throw UsageError("no fixture given");
  Session s;
  s.loaded = parse_presentation_file(cfg.fixture);
  if (cfg.p != 0 && cfg.p != s.loaded.pres.field.prime()) {
    throw UsageError("fixture is over F_" + std::to_string(s.loaded.pres.field.prime()) + ", not F_" +
                     std::to_string(cfg.p));
  }
  s.n = cfg.n != 0 ? cfg.n : s.loaded.n;
  if (cfg.theta == "exact") {
    s.spec = ThetaSpec::exact();
  } else if (cfg.theta == "trivial") {
    s.spec = ThetaSpec::generated({});
  } else {
    s.spec = s.loaded.theta;
  }
  if (s.spec.kind == ThetaSpec::Kind::Generated) {
    for (const auto& g : s.spec.generators) {
      if (g.n() != s.n) throw UsageError("generators have length n+2 for the fixture's n, not the requested one");
    }
  }
  const auto m = s.loaded.pres.size();
  s.sub = cfg.subcategory.empty() ? SubcategorySpec::full(m) : SubcategorySpec::zero_only(m);
  for (const auto& b : cfg.subcategory) {
    auto i = s.loaded.pres.basic_index(b);
    if (!i) throw UsageError("unknown basic '" + b + "' in subcategory");
    s.sub.allowed[*i] = true;
  }
  return s;
}

inline void add_validation(Report& r, const Session& s) {
  auto v = make_verdict("presentation");
  v.checked = 1;
  auto rep = validate_presentation(s.loaded.pres);
  v.status = rep.status;
  v.witness = rep.message;
  r.add(v);
  auto w = make_verdict("suspension");
  w.checked = 1;
  if (rep.status == Status::Pass) {
    auto sr = validate_suspension(AddCat(s.loaded.pres), s.loaded.sigma);
    w.status = sr.status;
    w.witness = sr.message;
  } else {
    w.status = Status::Unknown;
    w.witness = "not checked: presentation invalid";
  }
  r.add(w);
}

inline Report run(const std::string& command, const RunConfig& cfg) {
  validate(cfg);
  if (std::find(commands().begin(), commands().end(), command) == commands().end()) {
    throw UsageError("unknown command '" + command + "'");
  }
  auto s = open_session(cfg);
  Report r;
  r.command = command;
  r.header = {{"fixture", std::filesystem::path(cfg.fixture).filename().string()},
              {"p", std::to_string(s.loaded.pres.field.prime())},
              {"n", std::to_string(s.n)},
              {"dims", std::to_string(cfg.dims)},
              {"cap", std::to_string(cfg.cap)},
              {"budget", std::to_string(cfg.budget)},
              {"seed", std::to_string(cfg.seed)},
              {"theta", s.spec.kind == ThetaSpec::Kind::Exact
                            ? std::string("exact")
                            : "generated (" + std::to_string(s.spec.generators.size()) + " generators)"}};

  add_validation(r, s);
  if (r.overall() != Status::Pass) return r;
  s.cat = BaseCategory(s.loaded.pres, s.loaded.sigma);

  std::optional<Theta> theta;
  auto need_theta = [&]() -> const Theta& {
    if (!theta) theta.emplace(s.cat, s.spec, s.n, cfg.budget);
    return *theta;
  };

  if (command == "validate") {
    auto v = make_verdict("theta");
    v.checked = 1;
    try {
      const auto& th = need_theta();
      for (const auto& g : th.spec().generators) {
        ++v.checked;
        auto z = consecutive_zero_check(s.cat, g);
        if (z.status != Status::Pass) {
          v.status = Status::Fail;
          v.witness = "generator " + describe(g) + " has a nonzero composite at " + std::to_string(*z.position);
          break;
        }
      }
    } catch (const ConfigError& e) {
      v.status = Status::Fail;
      v.witness = e.what();
    }
    r.add(v);
    return r;
  }

  if (command == "check-nangle") {
    AxiomLimits lim{cfg.dims, cfg.cap, cfg.budget, cfg.pair_cap, cfg.seed};
    for (auto& v : check_axioms(need_theta(), lim)) r.add(v);
    return r;
  }

  if (command == "karoubi") {
    KaroubiCategory K(s.cat);
    const auto objs = objects_up_to(s.loaded.pres.size(), cfg.dims);
    auto base = verify_idempotent_complete(s.cat, objs, cfg.budget);
    auto bv = make_verdict("base category idempotent complete");
    bv.status = base.status;
    bv.checked = base.idempotents_checked;
    if (base.witness_idempotent) {
      bv.witness = "e=" + describe(*base.witness_idempotent) + " on " +
                   detail::object_token(s.loaded.pres, *base.witness_object) + " does not split";
    }
    r.add(bv, false);
    auto env = verify_idempotent_complete(K, envelope_battery(K, objs, cfg.budget), cfg.budget);
    auto ev = make_verdict("completion idempotent complete");
    ev.status = env.status;
    ev.checked = env.idempotents_checked;
    if (env.witness_idempotent) ev.witness = "q=" + describe(env.witness_idempotent->p);
    r.add(ev);
    for (auto& v : envelope_checks(K, cfg.dims, cfg.cap, cfg.budget)) r.add(v);
    return r;
  }

  if (command == "ext-closed") {
    auto c = is_n_extension_closed(need_theta(), s.sub, cfg.dims, cfg.cap);
    auto v = make_verdict("n-extension-closed");
    v.status = c.status;
    v.checked = c.checked;
    if (c.witness) v.witness = "delta=" + describe(c.witness->delta);
    r.add(v);
    return r;
  }

  if (command == "check-ea") {
    RestrictedStructure st(need_theta(), s.sub);
    for (auto& v : check_EA1(st, cfg.dims, cfg.cap, cfg.budget)) r.add(v);
    r.add(check_EA2(st, cfg.dims, cfg.cap, cfg.budget));
    return r;
  }

  // complete
  KaroubiCategory K(s.cat);
  auto ext = parse_delta(K, cfg.delta);
  r.header.emplace_back("delta", cfg.delta.empty() ? "zero" : cfg.delta);
  PipelineResult res;
  try {
    res = karoubi_extension_complete(K, need_theta(), s.sub, ext, cfg.budget);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  auto v = make_verdict("pipeline");
  v.checked = 1;
  v.status = res.status;
  v.witness = res.message;
  std::vector<std::pair<std::string, std::string>> d;
  const auto& P = s.loaded.pres;
  if (res.exangle) {
    const auto& seq = res.exangle->seq;
    for (std::size_t i = 0; i < seq.objects.size(); ++i) {
      d.emplace_back("term " + std::to_string(i), detail::describe_kobj(P, seq.objects[i]));
    }
    for (std::size_t i = 0; i < seq.maps.size(); ++i) {
      d.emplace_back("map " + std::to_string(i), describe(seq.maps[i].p));
    }
    d.emplace_back("split", K.is_zero(seq.connecting()) ? "yes" : "no");
  }
  d.emplace_back("terms in subcategory", res.terms_in_subcategory ? "yes" : "no");
  d.emplace_back("peeled summand shape", res.peeled_shape_ok ? "yes" : "no");
  if (res.certificate) {
    d.emplace_back("ambient sequence", describe(res.certificate->ambient));
    d.emplace_back("ambient membership", std::string(to_string(res.certificate->ambient_membership)));
    d.emplace_back("summand certificate", res.certificate->verified ? "verified" : "not verified");
  }
  if (res.ranks) d.emplace_back("exactness in completion", std::string(to_string(res.ranks->status)));
  r.add(v, true, d);
  return r;
}

inline std::string render(const Report& r, const std::string& format) {
  return format == "machine" ? render_machine(r) : render_text(r);
}

}  // namespace idcomp
