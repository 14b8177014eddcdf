#include "ncsurf/cli.hpp"
#include "ncsurf/error.hpp"
#include "ncsurf/families.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cstdlib>

using namespace ncsurf;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

TEST(Json, RationalFormat) {
  EXPECT_EQ(to_json(Rational(3)), "3");
  EXPECT_EQ(to_json(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(rational_from_json("10/-4"), Rational(-5, 2));
  EXPECT_EQ(rational_from_json(7), Rational(7));
  EXPECT_THROW(rational_from_json("x"), Error);
  EXPECT_THROW(rational_from_json(1.5), Error);
}

TEST(Json, TensorRoundTrip) {
  for (const Tensor& t : {sklyanin_plane(1, Rational(-2, 3), 3), recover_superpotential(commutative_quadric())}) {
    Json j = to_json(t);
    EXPECT_EQ(j["kind"], t.kind() == Kind::Quadratic ? "quadratic" : "cubic");
    EXPECT_EQ(j["w"].size(), t.dim());
    EXPECT_EQ(tensor_from_json(j), t);
    EXPECT_EQ(tensor_from_json(Json::parse(j.dump())), t);
  }
}

TEST(Json, TensorShapeIsChecked) {
  Json j = to_json(levi_civita());
  j["w"][1].erase(0);
  EXPECT_THROW(tensor_from_json(j), Error);
  Json zero = to_json(Tensor(Kind::Cubic));
  EXPECT_THROW(tensor_from_json(zero), Error);
}

TEST(Json, PresentationRoundTrip) {
  GradedPresentation p = commutative_quadric();
  Json j = to_json(p);
  ASSERT_EQ(j["relations"].size(), 2u);
  EXPECT_EQ(j["relations"][0][0]["word"].size(), 3u);
  GradedPresentation q = presentation_from_json(j);
  EXPECT_EQ(q.kind, p.kind);
  EXPECT_EQ(q.relations, p.relations);
}

TEST(Json, PresentationFromText) {
  Json j = Json::parse(R"({"kind":"cubic","relations":[
    [{"word":[0,0,1],"c":"1"},{"word":[1,0,0],"c":"-1"}],
    [{"word":[0,1,1],"c":"1"},{"word":[1,1,0],"c":"-1"}]]})");
  ProblemInput in = input_from_json(j);
  ASSERT_TRUE(std::holds_alternative<GradedPresentation>(in));
  EXPECT_EQ(canonical_presentation(std::get<GradedPresentation>(in)).relations,
            canonical_presentation(commutative_quadric()).relations);
  j["relations"][0][0]["word"] = {0, 2, 1};
  EXPECT_THROW(input_from_json(j), Error);
}

TEST(Json, HomFormRoundTrip) {
  HomForm f = plane_cubic(sklyanin_plane(1, 2, 3));
  Json j = to_json(f);
  EXPECT_EQ(j["vars"], Json({"x", "y", "z"}));
  EXPECT_EQ(j["degree"], 3);
  EXPECT_EQ(homform_from_json(j), f);
  HomForm g = quadric_divisor(recover_superpotential(cubic_sklyanin(1, 2, 3)));
  EXPECT_EQ(to_json(g)["vars"], Json({"x", "y", "u", "v"}));
  EXPECT_EQ(homform_from_json(to_json(g)), g);
}

TEST(Json, ReportShapes) {
  QuiverAlgebra a = build_algebra(Kind::Quadratic, extract_relations(levi_civita()).relations);
  Json hh = to_json(hochschild_report(a));
  EXPECT_EQ(hh["h"], Json({1, 8, 10, 0}));
  EXPECT_EQ(hh["euler"], 3);
  EXPECT_EQ(hh["bracket"]["dim"], 8);
  EXPECT_EQ(hh["bracket"]["derived"], 8);
  EXPECT_EQ(hh["bracket"]["center"], 0);
  EXPECT_EQ(hh["bracket"]["killing_rank"], 8);
  EXPECT_EQ(hh["cup_rank"], 10);

  const Poly x = Poly::variable(4, 0), y = Poly::variable(4, 1), u = Poly::variable(4, 2), v = Poly::variable(4, 3);
  Json c = to_json(classify_quadric_divisor(HomForm(4, (x * u + y * v) * (x * v + 2 * y * u))));
  EXPECT_EQ(c["family"], "quadric");
  EXPECT_EQ(c["verdict"], "Q4");
  EXPECT_EQ(c["segre"], "[(1,1),1,1]");
  EXPECT_TRUE(c["diagnostics"].is_object());
}

TEST(Json, PencilFile) {
  Json j{{"m", {{0, 0, 0, "1/2"}, {0, 0, "-1/2", 0}, {0, "-1/2", 0, 0}, {"1/2", 0, 0, 0}}},
         {"n", {{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 4}}}};
  Pencil p = pencil_from_json(j);
  EXPECT_EQ(segre_symbol(p.m, p.n).str(), "[1,1,1,1]");
  j["n"][0][1] = 5;
  EXPECT_THROW(pencil_from_json(j), Error);
  Json form{{"form", to_json(HomForm(4, Poly::variable(4, 0) * Poly::variable(4, 1) * Poly::variable(4, 2) *
                                           Poly::variable(4, 3)))}};
  Pencil q = pencil_from_json(form);
  EXPECT_EQ(quadric_type_of_symbol(segre_symbol(q.m, q.n).str()), "Q8");
}

TEST(Presets, Resolution) {
  EXPECT_EQ(std::get<Tensor>(resolve_preset("sklyanin-plane:1,2,3")), sklyanin_plane(1, 2, 3));
  EXPECT_EQ(std::get<GradedPresentation>(resolve_preset("skew-plane:q=2")).relations, skew_plane(2, 2, 2).relations);
  EXPECT_EQ(std::get<GradedPresentation>(resolve_preset("skew-plane:2,1/2,1")).relations,
            skew_plane(2, Rational(1, 2), 1).relations);
  EXPECT_THROW(resolve_preset("no-such-preset"), Error);
  EXPECT_THROW(resolve_preset("sklyanin-plane:1,2"), Error);
  EXPECT_THROW(resolve_preset("skew-plane:q=0"), Error);
}

TEST(Presets, EveryPresetMatchesItsClassAndRow) {
  for (const auto& p : preset_catalog()) {
    PipelineResult r = run_pipeline(p.input);
    EXPECT_TRUE(r.ok) << p.name << ": " << r.report.dump();
    EXPECT_EQ(r.verdict, p.expected_class) << p.name;
    EXPECT_TRUE(r.table_match) << p.name;
  }
}

TEST(Pipeline, CommutativeBaselines) {
  auto start = std::chrono::steady_clock::now();
  PipelineResult plane = run_pipeline(resolve_preset("commutative-plane"));
  EXPECT_LT(seconds_since(start), 5.0);
  EXPECT_EQ(plane.h, (std::vector<std::size_t>{1, 8, 10, 0}));
  EXPECT_EQ(plane.verdict, "Linear");
  EXPECT_EQ(plane.report["table"]["expected"], Json({8, 10}));

  start = std::chrono::steady_clock::now();
  PipelineResult quadric = run_pipeline(resolve_preset("commutative-quadric"));
  EXPECT_LT(seconds_since(start), 5.0);
  EXPECT_EQ(quadric.h, (std::vector<std::size_t>{1, 6, 9, 0}));
  EXPECT_EQ(quadric.report["hh"]["bracket"]["killing_rank"], 6);
  EXPECT_EQ(quadric.report["hh"]["bracket"]["derived"], 6);
}

TEST(Pipeline, FailingTensorStopsAfterTheCheck) {
  Tensor t(Kind::Quadratic);
  t.at({0, 0, 0}) = 1;
  PipelineResult r = run_pipeline(t);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.report["nondegeneracy"]["pass"].get<bool>());
  EXPECT_FALSE(r.report.contains("hh"));
}

TEST(Pipeline, ErrorsCarryTheStage) {
  GradedPresentation p{Kind::Quadratic, {}};
  for (std::size_t i = 0; i < 3; ++i) {
    Vector v(9);
    v[i] = 1;
    v[(i + 4) % 9] = 3;
    p.relations.push_back(v);
  }
  PipelineResult r = run_pipeline(p);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.report.contains("error"));
  EXPECT_EQ(r.report["error"]["code"], "NotPotential");
  EXPECT_EQ(r.report["error"]["stage"], "superpotential");
}

TEST(Pipeline, ReportIsByteStable) {
  EXPECT_EQ(run_pipeline(resolve_preset("sklyanin-plane:1,2,3")).report.dump(),
            run_pipeline(resolve_preset("sklyanin-plane:1,2,3")).report.dump());
}

TEST(Tables, RowsAndIdentities) {
  ASSERT_EQ(plane_table().size(), 10u);
  ASSERT_EQ(quadric_table().size(), 14u);
  for (const auto& r : plane_table()) EXPECT_EQ(r.h2, r.h1 + 2) << r.type;
  for (const auto& r : quadric_table()) EXPECT_EQ(r.h2, r.h1 + 3) << r.type;
  EXPECT_EQ(find_row(Family::Plane, "P8")->h1, 5u);
  EXPECT_EQ(find_row(Family::Quadric, "Q11")->aut_dim, 3u);
  EXPECT_EQ(find_row(Family::Quadric, "P1"), nullptr);
}

TEST(Tables, VerifyGatePassesWithCommittedFixtures) {
  VerifyOptions opts;
  opts.fixture_dir = NCSURF_FIXTURE_DIR;
  auto start = std::chrono::steady_clock::now();
  VerifyResult r = verify_tables(opts);
  EXPECT_LT(seconds_since(start), 60.0);
  EXPECT_TRUE(r.ok) << r.report.dump(2);
  const Json& s = r.report["summary"];
  EXPECT_EQ(s["fixtures_reproduced"], s["fixtures"]);
  EXPECT_EQ(s["plane_types"].size(), 10u);
  EXPECT_EQ(s["quadric_types"].size(), 14u);
  EXPECT_GE(s["plane_types_matching"].size(), 6u);
  EXPECT_GE(s["quadric_types_matching"].size(), 6u);
}

TEST(Tables, StrictModeReportsTableDisagreements) {
  VerifyOptions opts;
  opts.fixture_dir = NCSURF_FIXTURE_DIR;
  opts.strict = true;
  VerifyResult r = verify_tables(opts);
  // Four quadric types compute one below their reference row; see README.
  EXPECT_EQ(r.report["summary"]["fixture_table_mismatches"], 4);
  EXPECT_FALSE(r.ok);
}

TEST(Discover, DeterministicAndIndependentOfJobs) {
  DiscoverOptions a;
  a.kind = Kind::Quadratic;
  a.trials = 40;
  a.seed = 7;
  a.jobs = 1;
  DiscoverOptions b = a;
  b.jobs = 4;
  DiscoverResult ra = discover(a), rb = discover(b);
  EXPECT_EQ(to_json(ra).dump(), to_json(rb).dump());
  ASSERT_EQ(ra.hits.size(), rb.hits.size());
  for (std::size_t i = 0; i < ra.hits.size(); ++i) {
    EXPECT_EQ(ra.hits[i].trial, rb.hits[i].trial);
    EXPECT_EQ(ra.hits[i].tensor, rb.hits[i].tensor);
    if (i > 0) EXPECT_LT(ra.hits[i - 1].trial, ra.hits[i].trial);
  }
  b.seed = 8;
  EXPECT_NE(to_json(discover(b)).dump(), to_json(ra).dump());
}

TEST(Discover, PlaneHitsSatisfyTheInvariants) {
  DiscoverOptions opts;
  opts.trials = 120;
  opts.seed = 42;
  DiscoverResult r = discover(opts);
  EXPECT_TRUE(r.errors.empty());
  EXPECT_GE(r.first_of_type.size(), 4u);
  EXPECT_TRUE(r.first_of_type.count("P1"));
  for (const auto& h : r.hits) {
    EXPECT_TRUE(h.identities);
    EXPECT_TRUE(h.derivations_agree);
    EXPECT_TRUE(h.table_match) << h.verdict;
  }
}

TEST(Seed, EnvironmentOverride) {
  ::unsetenv("NCSURF_SEED");
  EXPECT_EQ(default_seed(), kDefaultSolveSeed);
  ::setenv("NCSURF_SEED", "1234", 1);
  EXPECT_EQ(default_seed(), 1234u);
  ::setenv("NCSURF_SEED", "0x10", 1);
  EXPECT_EQ(default_seed(), 16u);
  ::setenv("NCSURF_SEED", "abc", 1);
  EXPECT_THROW(default_seed(), Error);
  ::unsetenv("NCSURF_SEED");
}
