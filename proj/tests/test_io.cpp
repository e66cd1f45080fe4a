#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace idcomp;
using namespace testing_support;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadedPresentation parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(Parse, VectFixtureIsTheVectOracle) {
  auto lp = load_presentation(fixture("vect_f2.cat"));
  LoadedPresentation ref{oracles::vect_presentation(), Suspension::identity(oracles::vect_presentation()),
                         ThetaSpec::exact(), 2};
  EXPECT_TRUE(same_presentation(lp, ref));
  EXPECT_EQ(lp.n, 2);
  EXPECT_EQ(lp.theta.kind, ThetaSpec::Kind::Exact);
}

TEST(Parse, FreeModuleFixtureIsTheFreeModuleOracle) {
  auto lp = load_presentation(fixture("freemod_r.cat"));
  auto p = oracles::free_module_presentation();
  LoadedPresentation ref{p, Suspension::identity(p), ThetaSpec::generated({}), 2};
  EXPECT_TRUE(same_presentation(lp, ref));
  EXPECT_EQ(lp.theta.kind, ThetaSpec::Kind::Generated);
}

TEST(Parse, TruncatedFixtureNamesTheLine) {
  try {
    parse_presentation_file(fixture("vect_f2_truncated.cat"));
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
}

TEST(Parse, CorruptFixtureParsesButDoesNotValidate) {
  auto lp = parse_presentation_file(fixture("vect_f2_corrupt.cat"));
  EXPECT_EQ(validate_presentation(lp.pres).status, Status::Fail);
  EXPECT_THROW(load_presentation(fixture("vect_f2_corrupt.cat")), PresentationError);
}

TEST(Parse, ErrorLines) {
  EXPECT_EQ(error_line("basic V\n"), 1u);  // no field line
  EXPECT_EQ(error_line("field p=4\n"), 1u);
  EXPECT_EQ(error_line("field p=2\nbasic V\nbasic V\n"), 3u);
  EXPECT_EQ(error_line("field p=2\nbasic V\nhom V W dim 0 basis\nid V = 0\n"), 3u);
  EXPECT_EQ(error_line("field p=2\nbasic V\nhom V V dim 1 basis a\ncomp a*b = a\nid V = a\n"), 4u);
  EXPECT_EQ(error_line("field p=2\nbasic V\nhom V V dim 1 basis a\ncomp a*a = a\n"), 4u);  // id missing
  EXPECT_EQ(error_line("field p=2\n\n# comment\nfrobnicate\n"), 4u);
  EXPECT_EQ(error_line("field p=2\nn 2\nbasic V\nhom V V dim 1 basis a\ncomp a*a = a\nid V = a\n"
                       "theta gen\nseq\nobjects V V\nend\n"),
            8u);  // reported at the opening seq line
}

TEST(Parse, LinearCombinations) {
  auto lp = parse_text(
      "field p=3\nbasic V\nhom V V dim 2 basis a b\n"
      "comp a*a = a\ncomp a*b = b\ncomp b*a = b\ncomp b*b = 2*b - b + a   # b^2 = a + b\n"
      "id V = a\n");
  EXPECT_EQ(lp.pres.constant(0, 0, 0, 1, 1, 0), 1);
  EXPECT_EQ(lp.pres.constant(0, 0, 0, 1, 1, 1), 1);
  EXPECT_EQ(validate_presentation(lp.pres).status, Status::Pass);
}

TEST(Parse, GeneratorBlocks) {
  auto lp = parse_text(
      "field p=2\nn 1\nbasic V\nhom V V dim 1 basis i\ncomp i*i = i\nid V = i\n"
      "theta gen\nseq\nobjects V V V+V\nmap 0\nmap 1 0\nmap 0 1\nend\n");
  ASSERT_EQ(lp.theta.generators.size(), 1u);
  const auto& g = lp.theta.generators[0];
  EXPECT_EQ(g.objects[2], vpow(2));
  EXPECT_EQ(g.maps[1].coords, (std::vector<Elem>{1, 0}));
  EXPECT_EQ(g.maps[2].coords, (std::vector<Elem>{0, 1}));
}

TEST(Parse, WriteParseRoundTrip) {
  for (const auto* name : {"vect_f2.cat", "freemod_r.cat", "vect_f2_trivial.cat"}) {
    auto lp = load_presentation(fixture(name));
    auto text = write_presentation(lp);
    auto back = parse_text(text);
    EXPECT_TRUE(same_presentation(lp, back)) << name;
    EXPECT_EQ(write_presentation(back), text) << name;
  }
  auto g = parse_text(
      "field p=2\nn 1\nbasic V\nhom V V dim 1 basis i\ncomp i*i = i\nid V = i\n"
      "theta gen\nseq\nobjects V V V+V\nmap 0\nmap 1 0\nmap 0 1\nend\n");
  auto back = parse_text(write_presentation(g));
  EXPECT_TRUE(same_presentation(g, back));
}

TEST(Config, JsonRoundTrip) {
  RunConfig c;
  c.fixture = "fixtures/vect_f2.cat";
  c.p = 2;
  c.n = 3;
  c.dims = 1;
  c.cap = 5;
  c.budget = 77;
  c.pair_cap = 9;
  c.seed = 123456789012345ULL;
  c.theta = "trivial";
  c.subcategory = {"V"};
  c.format = "machine";
  c.delta = "V/V/1";
  EXPECT_EQ(read_config(write_config(c)), c);
  EXPECT_EQ(read_config(write_config(RunConfig{})), RunConfig{});
}

TEST(Config, Rejections) {
  EXPECT_THROW(read_config("{\"colour\": 1}"), UsageError);
  EXPECT_THROW(read_config("{\"p\": 4}"), UsageError);
  EXPECT_THROW(read_config("{\"budget\": -1}"), UsageError);
  EXPECT_THROW(read_config("{\"format\": \"xml\"}"), UsageError);
  EXPECT_THROW(read_config("{\"dims\": \"two\"}"), UsageError);
  EXPECT_THROW(read_config("not json"), UsageError);
}

TEST(Report, ExitCodes) {
  Report r;
  EXPECT_EQ(r.exit_code(), 0);
  auto u = make_verdict("u");
  u.status = Status::Unknown;
  r.add(u);
  EXPECT_EQ(r.exit_code(), 2);
  auto f = make_verdict("f");
  f.status = Status::Fail;
  r.add(f, false);
  EXPECT_EQ(r.exit_code(), 2);  // informational failures do not count
  r.add(f);
  EXPECT_EQ(r.exit_code(), 1);  // Unknown never masks a failure
}

TEST(Run, CommandsAndUsageErrors) {
  RunConfig c;
  c.fixture = fixture("vect_f2.cat");
  EXPECT_THROW(run("frobnicate", c), UsageError);
  RunConfig wrong_p = c;
  wrong_p.p = 3;
  EXPECT_THROW(run("validate", wrong_p), UsageError);
  RunConfig bad_delta = c;
  bad_delta.delta = "V/V";
  EXPECT_THROW(run("complete", bad_delta), UsageError);
  bad_delta.delta = "W/V/1";
  EXPECT_THROW(run("complete", bad_delta), UsageError);
  RunConfig outside = c;
  outside.subcategory = {"nothing"};
  EXPECT_THROW(run("ext-closed", outside), UsageError);
  EXPECT_EQ(run("validate", c).exit_code(), 0);
}

TEST(Run, FailuresCarryWitnessesThatReverify) {
  RunConfig c;
  c.fixture = fixture("vect_f2_corrupt.cat");
  auto r = run("validate", c);
  EXPECT_EQ(r.exit_code(), 1);
  ASSERT_FALSE(r.entries.empty());
  EXPECT_EQ(r.entries[0].verdict.status, Status::Fail);
  auto lp = parse_presentation_file(c.fixture);
  auto v = validate_presentation(lp.pres);
  EXPECT_EQ(r.entries[0].verdict.witness, v.message);
  AddCat cat(lp.pres);
  Mor f = cat.zero(cat.basic(static_cast<int>(v.basics[0])), cat.basic(static_cast<int>(v.basics[1])));
  f.coords[v.basis[0]] = 1;
  EXPECT_NE(cat.compose(cat.identity(f.dst), f), f);
}

TEST(Run, KaroubiOnTheFreeModule) {
  RunConfig c;
  c.fixture = fixture("freemod_r.cat");
  auto r = run("karoubi", c);
  EXPECT_EQ(r.exit_code(), 0);
  bool base_seen = false;
  for (const auto& e : r.entries) {
    if (e.verdict.name == "base category idempotent complete") {
      base_seen = true;
      EXPECT_EQ(e.verdict.status, Status::Fail);
      EXPECT_FALSE(e.counted);
      EXPECT_NE(e.verdict.witness.find("e=[0 1]"), std::string::npos) << e.verdict.witness;
    } else {
      EXPECT_EQ(e.verdict.status, Status::Pass) << e.verdict.name;
    }
  }
  EXPECT_TRUE(base_seen);
}

struct GoldenCase {
  const char* golden;
  const char* command;
  const char* fixture;
  const char* delta;
  const char* format;
};

const GoldenCase kGolden[] = {
    {"validate_vect.txt", "validate", "vect_f2.cat", "", "machine"},
    {"validate_corrupt.txt", "validate", "vect_f2_corrupt.cat", "", "machine"},
    {"check_nangle_vect.txt", "check-nangle", "vect_f2.cat", "", "machine"},
    {"karoubi_freemod.txt", "karoubi", "freemod_r.cat", "", "machine"},
    {"karoubi_freemod_text.txt", "karoubi", "freemod_r.cat", "", "text"},
    {"ext_closed_vect.txt", "ext-closed", "vect_f2.cat", "", "machine"},
    {"check_ea_vect.txt", "check-ea", "vect_f2.cat", "", "machine"},
    {"complete_zero.txt", "complete", "vect_f2.cat", "", "machine"},
    {"complete_rank_one.txt", "complete", "vect_f2.cat", "V+V:1,0,0,0/V+V:1,1,0,0/1,1,0,0", "text"},
};

TEST(Golden, ReportsMatchCommittedFiles) {
  for (const auto& g : kGolden) {
    RunConfig c;
    c.fixture = fixture(g.fixture);
    c.delta = g.delta;
    c.format = g.format;
    auto out = render(run(g.command, c), c.format);
    EXPECT_EQ(out, slurp(std::string(GOLDEN_DIR) + "/" + g.golden)) << g.golden;
    EXPECT_EQ(out, render(run(g.command, c), c.format)) << g.golden;
  }
}

}  // namespace
