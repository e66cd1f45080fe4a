#pragma once

/**
 * @file io.hpp
 * @brief Presentation files, run configurations and reports.
 *
 * Presentation files are line oriented, `#` starts a comment:
 *
 *     field p=2
 *     n 2
 *     basic V
 *     hom V V dim 1 basis idV
 *     comp idV*idV = idV
 *     id V = idV
 *     susp V -> V
 *     susp-hom idV = idV
 *     theta exact
 *
 * `theta gen` is followed by zero or more generator blocks
 *
 *     seq
 *     objects V V+V V 0
 *     map 1 0
 *     ...
 *     end
 *
 * with one `map` line of block coordinates per morphism, connecting map last.
 * Basis names are global. Missing `comp` lines mean zero; a missing `susp`
 * means Σ = 1, and missing `susp-hom` lines map the k-th basis morphism to
 * the k-th one.
 */

#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "suspension.hpp"
#include "theta.hpp"

namespace idcomp {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct LoadedPresentation {
  CategoryPresentation pres;
  Suspension sigma;
  ThetaSpec theta;
  int n = 2;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

inline std::string strip_spaces(std::string s) {
  std::erase_if(s, [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
  return s;
}

inline long long to_int(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

struct BasisRef {
  std::size_t i, j, k;
};

struct Record {
  std::size_t line;
  std::vector<std::string> w;
  std::string rest;  // text after the keyword
};

}  // namespace detail

/// Parse without validating composition; see load_presentation.
inline LoadedPresentation parse_presentation(std::istream& in) {
  using detail::Record;
  std::vector<Record> recs;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto w = detail::words(line);
    recs.push_back({lineno, w, detail::trim(line.substr(w[0].size()))});
  }

  LoadedPresentation out;
  std::optional<PrimeField> field;
  std::vector<std::string> names;
  struct Hom {
    std::size_t line;
    std::string src, dst;
    std::vector<std::string> basis;
  };
  std::vector<Hom> homs;
  bool have_n = false;
  for (const auto& r : recs) {
    const auto& key = r.w[0];
    if (key == "field") {
      if (r.w.size() != 2 || r.w[1].rfind("p=", 0) != 0) throw ParseError(r.line, "expected 'field p=<prime>'");
      const auto p = detail::to_int(r.w[1].substr(2), r.line);
      if (p < 2 || p > 65521 || !PrimeField::is_prime(static_cast<std::uint32_t>(p))) {
        throw ParseError(r.line, "unsupported field size " + r.w[1].substr(2));
      }
      field = PrimeField(static_cast<std::uint32_t>(p));
    } else if (key == "n") {
      if (r.w.size() != 2) throw ParseError(r.line, "expected 'n <int>'");
      out.n = static_cast<int>(detail::to_int(r.w[1], r.line));
      if (out.n < 1) throw ParseError(r.line, "n must be at least 1");
      have_n = true;
    } else if (key == "basic") {
      if (r.w.size() != 2) throw ParseError(r.line, "expected 'basic <name>'");
      if (std::find(names.begin(), names.end(), r.w[1]) != names.end()) {
        throw ParseError(r.line, "duplicate basic " + r.w[1]);
      }
      names.push_back(r.w[1]);
    } else if (key == "hom") {
      if (r.w.size() < 5 || r.w[3] != "dim") throw ParseError(r.line, "expected 'hom <src> <dst> dim <d> basis ...'");
      const auto d = detail::to_int(r.w[4], r.line);
      if (d < 0) throw ParseError(r.line, "negative dimension");
      Hom h{r.line, r.w[1], r.w[2], {}};
      if (d > 0) {
        if (r.w.size() != static_cast<std::size_t>(d) + 6 || r.w[5] != "basis") {
          throw ParseError(r.line, "expected " + std::to_string(d) + " basis names after 'basis'");
        }
        h.basis.assign(r.w.begin() + 6, r.w.end());
      } else if (r.w.size() != 5 && !(r.w.size() == 6 && r.w[5] == "basis")) {
        throw ParseError(r.line, "dimension 0 takes no basis names");
      }
      homs.push_back(h);
    }
  }
  if (!field) throw ParseError(lineno, "missing 'field p=<prime>'");
  (void)have_n;

  const auto m = names.size();
  auto index = [&](const std::string& nm, std::size_t line) {
    auto it = std::find(names.begin(), names.end(), nm);
    if (it == names.end()) throw ParseError(line, "unknown basic " + nm);
    return static_cast<std::size_t>(it - names.begin());
  };
  std::vector<std::vector<std::size_t>> dims(m, std::vector<std::size_t>(m, 0));
  std::vector<std::vector<std::vector<std::string>>> bnames(m, std::vector<std::vector<std::string>>(m));
  std::map<std::string, detail::BasisRef> refs;
  std::vector<std::vector<bool>> seen(m, std::vector<bool>(m, false));
  for (const auto& h : homs) {
    const auto i = index(h.src, h.line);
    const auto j = index(h.dst, h.line);
    if (seen[i][j]) throw ParseError(h.line, "Hom(" + h.src + ", " + h.dst + ") declared twice");
    seen[i][j] = true;
    dims[i][j] = h.basis.size();
    bnames[i][j] = h.basis;
    for (std::size_t k = 0; k < h.basis.size(); ++k) {
      if (!refs.emplace(h.basis[k], detail::BasisRef{i, j, k}).second) {
        throw ParseError(h.line, "basis name " + h.basis[k] + " used twice");
      }
    }
  }
  out.pres = CategoryPresentation::with_shape(*field, names, dims);
  out.pres.basis_names = bnames;
  const auto F = *field;

  // Linear combinations: terms [+|-][c*]name, or a lone 0.
  auto lincomb = [&](const std::string& text, std::size_t line, std::size_t i, std::size_t j) {
    std::vector<Elem> v(dims[i][j], 0);
    const auto s = detail::strip_spaces(text);
    if (s == "0") return v;
    static const std::regex term(R"(([+-]?)(?:(\d+)\*)?([A-Za-z_][A-Za-z0-9_']*))");
    std::size_t pos = 0;
    for (std::sregex_iterator it(s.begin(), s.end(), term), end; it != end; ++it) {
      if (static_cast<std::size_t>(it->position()) != pos) throw ParseError(line, "cannot read '" + s + "'");
      pos += static_cast<std::size_t>(it->length());
      const auto& mt = *it;
      if (pos != static_cast<std::size_t>(mt.length()) && mt[1].str().empty()) {
        throw ParseError(line, "missing '+' in '" + s + "'");
      }
      auto ref = refs.find(mt[3].str());
      if (ref == refs.end()) throw ParseError(line, "unknown basis morphism " + mt[3].str());
      if (ref->second.i != i || ref->second.j != j) {
        throw ParseError(line, mt[3].str() + " is not in Hom(" + names[i] + ", " + names[j] + ")");
      }
      long long c = mt[2].matched ? detail::to_int(mt[2].str(), line) : 1;
      if (mt[1].str() == "-") c = -c;
      v[ref->second.k] = F.add(v[ref->second.k], F.reduce(c));
    }
    if (pos != s.size() || s.empty()) throw ParseError(line, "cannot read '" + s + "'");
    return v;
  };

  std::vector<bool> have_id(m, false);
  std::optional<std::vector<int>> omap;
  std::vector<std::pair<std::size_t, std::string>> susp_homs;
  std::optional<std::size_t> susp_line;
  bool in_theta_gen = false;
  std::optional<NSeq<BaseCategory>> cur;
  std::size_t cur_line = 0;
  std::vector<std::pair<std::size_t, std::vector<Elem>>> cur_maps;
  std::vector<std::pair<std::size_t, NSeq<BaseCategory>>> pending;
  std::vector<std::vector<std::pair<std::size_t, std::vector<Elem>>>> pending_maps;
  bool have_theta = false;

  auto parse_obj = [&](const std::string& t, std::size_t line) {
    Obj o;
    if (t == "0") return o;
    std::size_t a = 0;
    while (a <= t.size()) {
      auto b = t.find('+', a);
      if (b == std::string::npos) b = t.size();
      o.summands.push_back(static_cast<int>(index(t.substr(a, b - a), line)));
      a = b + 1;
    }
    return o;
  };

  for (const auto& r : recs) {
    const auto& key = r.w[0];
    if (cur) {
      if (key == "objects") {
        for (std::size_t k = 1; k < r.w.size(); ++k) cur->objects.push_back(parse_obj(r.w[k], r.line));
      } else if (key == "map") {
        std::vector<Elem> v;
        for (std::size_t k = 1; k < r.w.size(); ++k) v.push_back(F.reduce(detail::to_int(r.w[k], r.line)));
        cur_maps.emplace_back(r.line, v);
      } else if (key == "end") {
        pending.emplace_back(cur_line, *cur);
        pending_maps.push_back(cur_maps);
        cur.reset();
        cur_maps.clear();
      } else {
        throw ParseError(r.line, "unexpected '" + key + "' inside seq block");
      }
      continue;
    }
    if (key == "field" || key == "n" || key == "basic" || key == "hom") continue;
    if (key == "comp") {
      const auto eq = r.rest.find('=');
      if (eq == std::string::npos) throw ParseError(r.line, "expected 'comp g*f = ...'");
      const auto lhs = detail::strip_spaces(r.rest.substr(0, eq));
      const auto star = lhs.find('*');
      if (star == std::string::npos) throw ParseError(r.line, "expected 'g*f' on the left");
      auto g = refs.find(lhs.substr(0, star));
      auto f = refs.find(lhs.substr(star + 1));
      if (g == refs.end() || f == refs.end()) throw ParseError(r.line, "unknown basis morphism in " + lhs);
      const auto [i, j, fk] = f->second;
      if (g->second.i != j) throw ParseError(r.line, lhs + " is not composable");
      const auto k = g->second.j;
      auto v = lincomb(r.rest.substr(eq + 1), r.line, i, k);
      for (std::size_t c = 0; c < v.size(); ++c) out.pres.constant_ref(i, j, k, g->second.k, fk, c) = v[c];
    } else if (key == "id") {
      const auto eq = r.rest.find('=');
      if (eq == std::string::npos) throw ParseError(r.line, "expected 'id <basic> = ...'");
      const auto i = index(detail::strip_spaces(r.rest.substr(0, eq)), r.line);
      out.pres.identities[i] = lincomb(r.rest.substr(eq + 1), r.line, i, i);
      have_id[i] = true;
    } else if (key == "susp") {
      if (r.w.size() != 4 || r.w[2] != "->") throw ParseError(r.line, "expected 'susp <basic> -> <basic>'");
      if (!omap) {
        omap = std::vector<int>(m, -1);
        susp_line = r.line;
      }
      const auto a = index(r.w[1], r.line);
      if ((*omap)[a] != -1) throw ParseError(r.line, "Σ" + r.w[1] + " given twice");
      (*omap)[a] = static_cast<int>(index(r.w[3], r.line));
    } else if (key == "susp-hom") {
      susp_homs.emplace_back(r.line, r.rest);
    } else if (key == "theta") {
      if (have_theta) throw ParseError(r.line, "theta given twice");
      have_theta = true;
      if (r.w.size() == 2 && r.w[1] == "exact") {
        out.theta = ThetaSpec::exact();
      } else if (r.w.size() == 2 && r.w[1] == "gen") {
        out.theta = ThetaSpec::generated({});
        in_theta_gen = true;
      } else {
        throw ParseError(r.line, "expected 'theta exact' or 'theta gen'");
      }
    } else if (key == "seq") {
      if (!in_theta_gen) throw ParseError(r.line, "'seq' outside 'theta gen'");
      cur = NSeq<BaseCategory>{};
      cur_line = r.line;
    } else {
      throw ParseError(r.line, "unknown keyword '" + key + "'");
    }
  }
  if (cur) throw ParseError(lineno, "unterminated seq block");
  for (std::size_t i = 0; i < m; ++i) {
    if (!have_id[i]) throw ParseError(lineno, "missing 'id " + names[i] + " = ...'");
  }

  // Σ: object map, then hom maps, defaulting to index-preserving.
  out.sigma.object_map.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (omap && (*omap)[i] < 0) throw ParseError(*susp_line, "Σ" + names[i] + " not given");
    out.sigma.object_map[i] = omap ? (*omap)[i] : static_cast<int>(i);
  }
  const auto sig = [&](std::size_t i) { return static_cast<std::size_t>(out.sigma.object_map[i]); };
  out.sigma.hom_maps.assign(m, std::vector<FMatrix>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      FMatrix h(F, dims[sig(i)][sig(j)], dims[i][j]);
      for (std::size_t k = 0; k < std::min(h.rows(), h.cols()); ++k) h(k, k) = 1;
      out.sigma.hom_maps[i][j] = h;
    }
  }
  for (const auto& [line, text] : susp_homs) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected 'susp-hom <basis> = ...'");
    auto b = refs.find(detail::strip_spaces(text.substr(0, eq)));
    if (b == refs.end()) throw ParseError(line, "unknown basis morphism");
    const auto [i, j, k] = b->second;
    auto v = lincomb(text.substr(eq + 1), line, sig(i), sig(j));
    auto& h = out.sigma.hom_maps[i][j];
    for (std::size_t r = 0; r < v.size(); ++r) h(r, k) = v[r];
  }

  // Generators need the category for shapes.
  if (!pending.empty()) {
    AddCat cat(out.pres);
    for (std::size_t g = 0; g < pending.size(); ++g) {
      auto& [line, s] = pending[g];
      if (s.objects.size() != static_cast<std::size_t>(out.n) + 2) {
        throw ParseError(line, "seq needs " + std::to_string(out.n + 2) + " objects");
      }
      if (pending_maps[g].size() != s.objects.size()) {
        throw ParseError(line, "seq needs " + std::to_string(s.objects.size()) + " map lines");
      }
      for (std::size_t i = 0; i < s.objects.size(); ++i) {
        const auto src = s.objects[i];
        const auto dst = i + 1 < s.objects.size() ? s.objects[i + 1] : out.sigma.apply(s.objects[0]);
        const auto& [mline, coords] = pending_maps[g][i];
        if (coords.size() != cat.hom_dimension(src, dst)) {
          throw ParseError(mline, "map needs " + std::to_string(cat.hom_dimension(src, dst)) + " coordinates");
        }
        s.maps.push_back(Mor{src, dst, coords});
      }
      out.theta.generators.push_back(s);
    }
  }
  return out;
}

inline LoadedPresentation parse_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_presentation(in);
}

/// Parse, then require a valid presentation and suspension.
inline LoadedPresentation load_presentation(const std::string& path) {
  auto lp = parse_presentation_file(path);
  auto v = validate_presentation(lp.pres);
  if (v.status != Status::Pass) throw PresentationError("invalid presentation: " + v.message);
  auto s = validate_suspension(AddCat(lp.pres), lp.sigma);
  if (s.status != Status::Pass) throw PresentationError("invalid suspension: " + s.message);
  return lp;
}

namespace detail {

inline std::string combination(const CategoryPresentation& P, std::size_t i, std::size_t j,
                               const std::vector<Elem>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (v[k] != 1) out += std::to_string(v[k]) + "*";
    out += P.basis_label(i, j, k);
  }
  return out.empty() ? "0" : out;
}

inline std::string object_token(const CategoryPresentation& P, const Obj& o) {
  if (o.is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < o.size(); ++k) {
    s += (k ? "+" : "") + P.basics[static_cast<std::size_t>(o.summands[k])];
  }
  return s;
}

}  // namespace detail

inline std::string write_presentation(const LoadedPresentation& lp) {
  const auto& P = lp.pres;
  const auto m = P.size();
  std::ostringstream os;
  os << "field p=" << P.field.prime() << "\n";
  os << "n " << lp.n << "\n";
  for (const auto& b : P.basics) os << "basic " << b << "\n";
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (P.dim(i, j) == 0) continue;
      os << "hom " << P.basics[i] << " " << P.basics[j] << " dim " << P.dim(i, j) << " basis";
      for (std::size_t k = 0; k < P.dim(i, j); ++k) os << " " << P.basis_label(i, j, k);
      os << "\n";
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t g = 0; g < P.dim(j, k); ++g) {
          for (std::size_t f = 0; f < P.dim(i, j); ++f) {
            std::vector<Elem> v(P.dim(i, k));
            for (std::size_t c = 0; c < v.size(); ++c) v[c] = P.constant(i, j, k, g, f, c);
            if (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; })) continue;
            os << "comp " << P.basis_label(j, k, g) << "*" << P.basis_label(i, j, f) << " = "
               << detail::combination(P, i, k, v) << "\n";
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    os << "id " << P.basics[i] << " = " << detail::combination(P, i, i, P.identities[i]) << "\n";
  }
  for (std::size_t i = 0; i < m; ++i) {
    os << "susp " << P.basics[i] << " -> " << P.basics[static_cast<std::size_t>(lp.sigma.object_map[i])] << "\n";
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto si = static_cast<std::size_t>(lp.sigma.object_map[i]);
      const auto sj = static_cast<std::size_t>(lp.sigma.object_map[j]);
      const auto& h = lp.sigma.hom_maps[i][j];
      for (std::size_t k = 0; k < P.dim(i, j); ++k) {
        std::vector<Elem> v(h.rows());
        for (std::size_t r = 0; r < v.size(); ++r) v[r] = h(r, k);
        os << "susp-hom " << P.basis_label(i, j, k) << " = " << detail::combination(P, si, sj, v) << "\n";
      }
    }
  }
  if (lp.theta.kind == ThetaSpec::Kind::Exact) {
    os << "theta exact\n";
  } else {
    os << "theta gen\n";
    for (const auto& s : lp.theta.generators) {
      os << "seq\nobjects";
      for (const auto& o : s.objects) os << " " << detail::object_token(P, o);
      os << "\n";
      for (const auto& f : s.maps) {
        os << "map";
        for (auto c : f.coords) os << " " << c;
        os << "\n";
      }
      os << "end\n";
    }
  }
  return os.str();
}

inline bool same_presentation(const LoadedPresentation& a, const LoadedPresentation& b) {
  const auto& P = a.pres;
  const auto& Q = b.pres;
  bool eq = P.field == Q.field && P.basics == Q.basics && P.hom_dims == Q.hom_dims && P.comp == Q.comp &&
            P.identities == Q.identities && a.n == b.n && a.sigma.object_map == b.sigma.object_map &&
            a.sigma.hom_maps == b.sigma.hom_maps && a.theta.kind == b.theta.kind &&
            a.theta.generators == b.theta.generators;
  for (std::size_t i = 0; eq && i < P.size(); ++i) {
    for (std::size_t j = 0; j < P.size(); ++j) {
      for (std::size_t k = 0; k < P.dim(i, j); ++k) eq = eq && P.basis_label(i, j, k) == Q.basis_label(i, j, k);
    }
  }
  return eq;
}

// ---------------------------------------------------------------------------
// Run configuration

struct RunConfig {
  std::string fixture;
  unsigned p = 0;                  // 0: take the prime from the fixture
  int n = 0;                       // 0: take n from the fixture
  std::size_t dims = 2;            // objects with at most this many summands
  long long cap = 64;              // morphisms per hom-space in batteries
  long long budget = 10000;        // per search (idempotents, lifts, sequence isomorphisms)
  std::size_t pair_cap = 4096;     // sequence pairs for N3/N4
  std::uint64_t seed = 7;          // sampling seed for hom-spaces above the cap
  std::string theta = "fixture";   // fixture | exact | trivial
  std::vector<std::string> subcategory;  // allowed basics; empty means all
  std::string format = "text";     // text | machine
  std::string delta;               // extension for `complete`; empty means zero

  bool operator==(const RunConfig&) const = default;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void validate(const RunConfig& c) {
  if (c.p != 0 && !PrimeField::is_prime(c.p)) throw UsageError("p must be prime");
  if (c.n < 0) throw UsageError("n must be at least 1");
  if (c.cap < 0 || c.budget < 0) throw UsageError("budgets must be non-negative");
  if (c.theta != "fixture" && c.theta != "exact" && c.theta != "trivial") {
    throw UsageError("theta must be fixture, exact or trivial");
  }
  if (c.format != "text" && c.format != "machine") throw UsageError("format must be text or machine");
}

inline nlohmann::json to_json(const RunConfig& c) {
  return nlohmann::json{{"fixture", c.fixture}, {"p", c.p},           {"n", c.n},
                        {"dims", c.dims},       {"cap", c.cap},       {"budget", c.budget},
                        {"pair_cap", c.pair_cap}, {"seed", c.seed},   {"theta", c.theta},
                        {"subcategory", c.subcategory}, {"format", c.format}, {"delta", c.delta}};
}

inline RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const std::vector<std::string> keys{"fixture", "p",     "n",           "dims",   "cap",  "budget",
                                               "pair_cap", "seed", "theta", "subcategory", "format", "delta"};
    if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) throw UsageError("unknown config key " + it.key());
  }
  try {
    c.fixture = j.value("fixture", c.fixture);
    c.p = j.value("p", c.p);
    c.n = j.value("n", c.n);
    c.dims = j.value("dims", c.dims);
    c.cap = j.value("cap", c.cap);
    c.budget = j.value("budget", c.budget);
    c.pair_cap = j.value("pair_cap", c.pair_cap);
    c.seed = j.value("seed", c.seed);
    c.theta = j.value("theta", c.theta);
    c.subcategory = j.value("subcategory", c.subcategory);
    c.format = j.value("format", c.format);
    c.delta = j.value("delta", c.delta);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad config value: ") + e.what());
  }
  validate(c);
  return c;
}

inline std::string write_config(const RunConfig& c) { return to_json(c).dump(2) + "\n"; }

inline RunConfig read_config(const std::string& text) {
  try {
    return config_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Reports

struct ReportEntry {
  AxiomVerdict verdict;
  bool counted = true;  // informational entries do not affect the exit code
  std::vector<std::pair<std::string, std::string>> details;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<ReportEntry> entries;

  void add(AxiomVerdict v, bool counted = true, std::vector<std::pair<std::string, std::string>> details = {}) {
    entries.push_back({std::move(v), counted, std::move(details)});
  }

  Status overall() const {
    Status s = Status::Pass;
    for (const auto& e : entries) {
      if (e.counted) s = combine(s, e.verdict.status);
    }
    return s;
  }

  int exit_code() const {
    switch (overall()) {
      case Status::Pass: return 0;
      case Status::Fail: return 1;
      case Status::Unknown: return 2;
    }
    return 2;
  }
};

inline std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.command;
  for (const auto& [k, v] : r.header) os << "  " << k << "=" << v;
  os << "\n";
  for (const auto& e : r.entries) {
    std::string st(to_string(e.verdict.status));
    st.resize(8, ' ');
    os << "  " << st << e.verdict.name << " (" << e.verdict.checked << (e.verdict.checked == 1 ? " case)" : " cases)");
    if (!e.counted) os << " [informational]";
    os << "\n";
    if (!e.verdict.witness.empty()) os << "          witness: " << e.verdict.witness << "\n";
    for (const auto& [k, v] : e.details) os << "          " << k << ": " << v << "\n";
  }
  os << "overall: " << to_string(r.overall()) << "\n";
  return os.str();
}

inline std::string render_machine(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  for (const auto& [k, v] : r.header) os << k << ": " << v << "\n";
  os << "overall: " << to_string(r.overall()) << "\n";
  os << "exit: " << r.exit_code() << "\n";
  for (const auto& e : r.entries) {
    os << "\n[" << e.verdict.name << "]\n";
    os << "status: " << to_string(e.verdict.status) << "\n";
    os << "counted: " << (e.counted ? "yes" : "no") << "\n";
    os << "checked: " << e.verdict.checked << "\n";
    os << "witness: " << e.verdict.witness << "\n";
    for (const auto& [k, v] : e.details) os << k << ": " << v << "\n";
  }
  return os.str();
}

}  // namespace idcomp
