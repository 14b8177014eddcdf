#include "ncsurf/cli.hpp"

#include "ncsurf/error.hpp"
#include "ncsurf/families.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <thread>
#include <tuple>

namespace ncsurf {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

std::vector<Rational> parse_params(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    try {
      out.push_back(Rational::parse(text.substr(start, end - start)));
    } catch (const std::exception&) {
      bad("bad preset parameter \"" + text.substr(start, end - start) + "\"");
    }
    start = end + 1;
  }
  return out;
}

// Runs fn and tags any library error with the stage name.
template <class F>
auto staged(const char* stage, F&& fn) {
  try {
    return fn();
  } catch (Error& e) {
    if (e.stage().empty()) e.set_stage(stage);
    throw;
  }
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Everything the pipeline computes for one PASS tensor.
struct Analysis {
  NondegeneracyVerdict verdict;
  std::optional<GradedPresentation> relations;
  std::optional<QuiverAlgebra> algebra;
  CartanData cartan;
  std::size_t gldim = 0;
  HHReport hh;
  DerivationData derivations;
  CurveClass curve;
  const TableRow* row = nullptr;
  bool identities = false;
  bool table_match = false;
};

Analysis analyze(const Tensor& t, const PipelineOptions& opts) {
  Analysis out;
  out.verdict = staged("nondegeneracy", [&] { return check_nondegenerate(t, opts.seed); });
  if (!out.verdict.pass) return out;
  out.relations = staged("relations", [&] { return extract_relations(t); });
  out.algebra = staged("algebra", [&] { return build_algebra(t.kind(), out.relations->relations); });
  out.cartan = staged("algebra", [&] { return cartan_and_coxeter(*out.algebra); });
  out.gldim = staged("algebra", [&] { return global_dimension(*out.algebra); });
  out.hh = staged("hochschild", [&] { return hochschild_report(*out.algebra); });
  out.derivations = staged("hochschild", [&] { return hh1_via_derivations(*out.algebra, out.hh.h[1]); });
  out.curve = staged("pointscheme", [&] {
    return t.kind() == Kind::Quadratic ? classify_plane_cubic(plane_cubic(t, opts.plane_slot), opts.seed)
                                       : classify_quadric_divisor(quadric_divisor(t));
  });
  const std::size_t q0 = out.algebra->vertices();
  const auto& h = out.hh.h;
  out.identities = h[0] == 1 && h[3] == 0 && h[2] == q0 + h[1] - 1 && out.hh.euler == static_cast<long long>(q0) &&
                   out.gldim == 2 && out.cartan.unipotent && out.hh.jacobi;
  out.row = find_row(out.curve.family, out.curve.verdict);
  out.table_match = out.row && out.row->h1 == h[1] && out.row->h2 == h[2];
  return out;
}

Tensor tensor_of(const ProblemInput& input) {
  if (const auto* t = std::get_if<Tensor>(&input)) return *t;
  const auto& p = std::get<GradedPresentation>(input);
  return staged("superpotential", [&] { return recover_superpotential(p); });
}

Json error_json(const Error& e) {
  return {{"code", error_name(e.code())}, {"stage", e.stage()}, {"message", e.what()}};
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("NCSURF_SEED");
  if (!env || !*env) return kDefaultSolveSeed;
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(env, &used, 0);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  bad(std::string("NCSURF_SEED is not an integer: ") + env);
}

const std::vector<Preset>& preset_catalog() {
  static const std::vector<Preset> catalog = [] {
    std::vector<Preset> out;
    out.push_back({"commutative-plane", levi_civita(), "Linear", "antisymmetric w"});
    for (const char* p : {"sklyanin-plane:1,2,3", "sklyanin-plane:2,-1,3", "sklyanin-plane:1,3,-2"})
      out.push_back({p, resolve_preset(p), "P1", "Sklyanin plane"});
    out.push_back({"skew-plane:q=2", resolve_preset("skew-plane:q=2"), "P4", "skew polynomial ring, generic q"});
    out.push_back({"skew-plane:q=-3", resolve_preset("skew-plane:q=-3"), "P4", "skew polynomial ring, generic q"});
    out.push_back({"skew-plane:2,1/2,1", resolve_preset("skew-plane:2,1/2,1"), "Linear",
                   "skew polynomial ring with q1 q2 q3 = 1"});
    out.push_back({"commutative-quadric", commutative_quadric(), "Linear", "x^2 y - y x^2, x y^2 - y^2 x"});
    for (const auto& [p, type] : std::vector<std::pair<const char*, const char*>>{{"cubic-sklyanin:1,2,3", "Q1"},
                                                                                  {"cubic-sklyanin:1,1,2", "Q1"},
                                                                                  {"cubic-sklyanin:2,-1,3", "Q4"},
                                                                                  {"cubic-sklyanin:2,1,1", "Q8"}})
      out.push_back({p, resolve_preset(p), type, "cubic Sklyanin-type presentation"});
    return out;
  }();
  return catalog;
}

ProblemInput resolve_preset(const std::string& name_and_args) {
  const std::size_t colon = name_and_args.find(':');
  const std::string name = name_and_args.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : name_and_args.substr(colon + 1);
  if (name == "commutative-plane" && args.empty()) return levi_civita();
  if (name == "commutative-quadric" && args.empty()) return commutative_quadric();
  if (name == "sklyanin-plane") {
    auto p = parse_params(args.empty() ? "1,2,3" : args);
    if (p.size() != 3) bad("sklyanin-plane takes a,b,c");
    return sklyanin_plane(p[0], p[1], p[2]);
  }
  if (name == "cubic-sklyanin") {
    auto p = parse_params(args.empty() ? "1,2,3" : args);
    if (p.size() != 3) bad("cubic-sklyanin takes a,b,c");
    return cubic_sklyanin(p[0], p[1], p[2]);
  }
  if (name == "skew-plane") {
    std::vector<Rational> q;
    if (args.rfind("q=", 0) == 0) {
      auto one = parse_params(args.substr(2));
      if (one.size() != 1) bad("skew-plane:q=Q takes one value");
      q = {one[0], one[0], one[0]};
    } else {
      q = parse_params(args.empty() ? "2,2,2" : args);
    }
    if (q.size() != 3) bad("skew-plane takes q=Q or q1,q2,q3");
    for (const auto& v : q)
      if (v.is_zero()) bad("skew-plane parameters must be nonzero");
    return skew_plane(q[0], q[1], q[2]);
  }
  std::string names;
  for (const auto& p : preset_catalog()) names += " " + p.name;
  bad("unknown preset \"" + name_and_args + "\"; known:" + names);
}

const std::vector<TableRow>& plane_table() {
  static const std::vector<TableRow> rows{
      {"P1", "smooth cubic", 0, 2, 0},
      {"P2", "cuspidal cubic", 0, 2, 0},
      {"P3", "nodal cubic", 0, 2, 0},
      {"P4", "triangle", 2, 4, 2},
      {"P5", "three concurrent lines", 2, 4, 2},
      {"P6", "conic and secant line", 1, 3, 1},
      {"P7", "conic and tangent line", 1, 3, 1},
      {"P8", "triple line", 5, 7, 5},
      {"P9", "double line and line", 3, 5, 3},
      {"Linear", "commutative plane", 8, 10, 8},
  };
  return rows;
}

const std::vector<TableRow>& quadric_table() {
  static const std::vector<TableRow> rows{
      {"Q1", "smooth (2,2) curve", 0, 3, 0},
      {"Q2", "cuspidal curve", 0, 3, 0},
      {"Q3", "nodal curve", 0, 3, 0},
      {"Q4", "two conics meeting twice", 1, 4, 1},
      {"Q5", "two tangent conics", 1, 4, 1},
      {"Q6", "conic and two lines, triangle", 1, 4, 1},
      {"Q7", "conic and two lines through one point", 2, 5, 2},
      {"Q8", "four lines", 2, 5, 2},
      {"Q9", "twisted cubic and secant line", 1, 4, 1},
      {"Q10", "twisted cubic and tangent line", 1, 4, 1},
      {"Q11", "double conic", 3, 6, 3},
      {"Q12", "two double lines", 3, 6, 3},
      {"Q13", "double line and two lines", 3, 6, 3},
      {"Linear", "commutative quadric", 6, 9, 6},
  };
  return rows;
}

const TableRow* find_row(Family family, const std::string& verdict) {
  const auto& rows = family == Family::Plane ? plane_table() : quadric_table();
  for (const auto& r : rows)
    if (r.type == verdict) return &r;
  return nullptr;
}

PipelineResult run_pipeline(const ProblemInput& input, const PipelineOptions& opts) {
  PipelineResult res;
  Json& j = res.report;
  try {
    Tensor t = tensor_of(input);
    j["input"] = to_json(t);
    if (const auto* p = std::get_if<GradedPresentation>(&input)) j["presentation"] = to_json(canonical_presentation(*p));
    Analysis a = analyze(t, opts);
    j["nondegeneracy"] = to_json(a.verdict);
    if (!a.verdict.pass) {
      j["ok"] = false;
      return res;
    }
    j["relations"] = to_json(*a.relations);
    Json comps = Json::array();
    for (std::size_t i = 0; i < a.algebra->vertices(); ++i)
      for (std::size_t k = i; k < a.algebra->vertices(); ++k) comps.push_back(a.algebra->component_dim(i, k));
    j["algebra"] = {{"dim", a.algebra->dim()},
                    {"component_dims", comps},
                    {"gldim", a.gldim},
                    {"coxeter_unipotent", a.cartan.unipotent},
                    {"serre_charpoly", a.cartan.serre_charpoly.str()}};
    j["hh"] = to_json(a.hh);
    j["checks"] = {{"identities", a.identities},
                   {"jacobi", a.hh.jacobi},
                   {"derivations_h1", a.derivations.hh1},
                   {"inner_derivations", a.derivations.inner}};
    j["classification"] = to_json(a.curve);
    Json table{{"row", a.row ? Json(a.row->type) : Json(nullptr)}};
    if (a.row) {
      table["description"] = a.row->description;
      table["expected"] = {a.row->h1, a.row->h2};
    }
    table["computed"] = {a.hh.h[1], a.hh.h[2]};
    table["match"] = a.table_match;
    j["table"] = table;
    res.verdict = a.curve.verdict;
    res.h = a.hh.h;
    res.table_match = a.table_match;
    res.ok = a.identities && a.table_match;
  } catch (const Error& e) {
    j["error"] = error_json(e);
    res.ok = false;
  }
  j["ok"] = res.ok;
  return res;
}

VerifyResult verify_tables(const VerifyOptions& opts) {
  VerifyResult out;
  Json& j = out.report;
  bool ok = true;

  Json identities = Json::array();
  auto identity = [&](const std::string& name, bool pass) {
    identities.push_back({{"name", name}, {"pass", pass}});
    ok = ok && pass;
  };
  bool plane_gap = true, quadric_gap = true, plane_aut = true, quadric_aut = true;
  for (const auto& r : plane_table()) {
    plane_gap = plane_gap && r.h2 == r.h1 + 2;
    plane_aut = plane_aut && r.aut_dim == r.h1;
  }
  for (const auto& r : quadric_table()) {
    quadric_gap = quadric_gap && r.h2 == r.h1 + 3;
    quadric_aut = quadric_aut && r.aut_dim == r.h1;
  }
  std::vector<std::size_t> plane_aut_dims, quadric_aut_dims;
  for (const auto& r : plane_table())
    if (r.type != "Linear") plane_aut_dims.push_back(r.aut_dim);
  for (const auto& r : quadric_table())
    if (r.type != "Linear") quadric_aut_dims.push_back(r.aut_dim);
  identity("plane rows: h2 = h1 + 2", plane_gap);
  identity("quadric rows: h2 = h1 + 3", quadric_gap);
  identity("plane rows: h1 = automorphism dimension", plane_aut);
  identity("quadric rows: h1 = automorphism dimension", quadric_aut);
  identity("plane automorphism dimensions (0,0,0,2,2,1,1,5,3)",
           plane_aut_dims == std::vector<std::size_t>{0, 0, 0, 2, 2, 1, 1, 5, 3});
  identity("quadric automorphism dimensions (0,0,0,1,1,1,2,2,1,1,3,3,3)",
           quadric_aut_dims == std::vector<std::size_t>{0, 0, 0, 1, 1, 1, 2, 2, 1, 1, 3, 3, 3});
  j["identities"] = identities;

  Json presets = Json::array();
  bool presets_ok = true;
  for (const auto& p : preset_catalog()) {
    PipelineResult r = run_pipeline(p.input, opts.pipeline);
    bool pass = r.ok && r.verdict == p.expected_class;
    presets_ok = presets_ok && pass;
    Json e{{"name", p.name}, {"expected_class", p.expected_class}, {"verdict", r.verdict ? Json(*r.verdict) : Json(nullptr)}};
    e["h"] = r.h ? Json(*r.h) : Json(nullptr);
    e["table_match"] = r.table_match;
    if (r.report.contains("error")) e["error"] = r.report["error"];
    e["pass"] = pass;
    presets.push_back(e);
  }
  ok = ok && presets_ok;
  j["presets"] = presets;

  Json fixtures = Json::array();
  std::size_t reproduced = 0, mismatches = 0, total = 0;
  std::set<std::string> plane_types_seen, quadric_types_seen, plane_matching, quadric_matching;
  std::vector<std::filesystem::path> files;
  if (!opts.fixture_dir.empty() && std::filesystem::is_directory(opts.fixture_dir))
    for (const auto& entry : std::filesystem::recursive_directory_iterator(opts.fixture_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  // Q2 before Q10.
  std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) {
    auto key = [](const std::filesystem::path& p) {
      return std::make_tuple(p.parent_path().string(), p.stem().string().size(), p.stem().string());
    };
    return key(a) < key(b);
  });
  for (const auto& path : files) {
    ++total;
    Json e{{"file", std::filesystem::relative(path, opts.fixture_dir).string()}};
    try {
      Json fx = read_json_file(path.string());
      PipelineResult r = run_pipeline(input_from_json(fx), opts.pipeline);
      const Json& expected = fx.at("expected");
      bool same = r.verdict && *r.verdict == expected.at("verdict").get<std::string>() && r.h &&
                  Json(*r.h) == expected.at("h");
      e["verdict"] = r.verdict ? Json(*r.verdict) : Json(nullptr);
      e["h"] = r.h ? Json(*r.h) : Json(nullptr);
      e["reproduced"] = same;
      if (const TableRow* row = r.verdict ? find_row(fx.at("kind") == "quadratic" ? Family::Plane : Family::Quadric, *r.verdict)
                                          : nullptr)
        e["table"] = {row->h1, row->h2};
      e["match"] = r.table_match;
      if (same) ++reproduced;
      if (!r.table_match) ++mismatches;
      if (r.verdict) {
        bool plane = fx.at("kind") == "quadratic";
        (plane ? plane_types_seen : quadric_types_seen).insert(*r.verdict);
        if (r.table_match) (plane ? plane_matching : quadric_matching).insert(*r.verdict);
      }
      ok = ok && same && (!opts.strict || r.table_match);
    } catch (const std::exception& ex) {
      e["error"] = ex.what();
      ok = false;
    }
    fixtures.push_back(e);
  }
  j["fixtures"] = fixtures;
  j["summary"] = {{"identities", identities.size()},
                  {"presets_pass", presets_ok},
                  {"fixtures", total},
                  {"fixtures_reproduced", reproduced},
                  {"fixture_table_mismatches", mismatches},
                  {"plane_types", plane_types_seen},
                  {"quadric_types", quadric_types_seen},
                  {"plane_types_matching", plane_matching},
                  {"quadric_types_matching", quadric_matching},
                  {"strict", opts.strict}};
  j["ok"] = ok;
  out.ok = ok;
  return out;
}

namespace {

struct TrialOutcome {
  enum { Rejected, Hit, Failed } status = Rejected;
  DiscoveryHit hit;
  std::string error;
};

Tensor perturbed(Tensor base, Rng& rng, int height, int max_terms) {
  std::vector<Rational> e = base.entries();
  const long long k = rng.uniform(1, max_terms);
  for (long long i = 0; i < k; ++i)
    e[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(e.size()) - 1))] += Rational(rng.uniform(-height, height));
  return Tensor(base.kind(), e);
}

Tensor dense(Kind kind, Rng& rng, int height) {
  std::vector<Rational> e(Tensor(kind).size());
  for (auto& x : e) x = Rational(rng.uniform(-height, height));
  return Tensor(kind, e);
}

// Planes: perturbations of the commutative, skew and Sklyanin families, and
// dense tensors.
Tensor plane_sample(std::size_t trial, Rng& rng, int height, std::string& source) {
  auto r = [&](int h) { return Rational(rng.uniform(-h, h)); };
  switch (trial % 4) {
    case 0:
      source = "commutative+perturbation";
      return perturbed(levi_civita(), rng, height, 3);
    case 1: {
      source = "skew+perturbation";
      Tensor base = levi_civita();
      try {
        Rational q1 = r(3), q2 = r(3), q3 = r(3);
        if (!q1.is_zero() && !q2.is_zero() && !q3.is_zero()) base = recover_superpotential(skew_plane(q1, q2, q3));
      } catch (const Error&) {
      }
      return perturbed(base, rng, height, 3);
    }
    case 2:
      source = "sklyanin+perturbation";
      {
        Rational a = r(2), b = r(2), c = r(2);
        return perturbed(sklyanin_plane(a, b, c), rng, height, 3);
      }
    default:
      source = "dense";
      return dense(Kind::Quadratic, rng, height);
  }
}

// Quadrics: perturbations of the commutative quadric, the cubic Sklyanin
// family and the zero tensor, dense tensors, and dense tensors moved by
// independent slot changes.
Tensor quadric_sample(std::size_t trial, Rng& rng, int height, std::string& source) {
  static const Tensor commutative = recover_superpotential(commutative_quadric());
  auto r = [&](int h) { return Rational(rng.uniform(-h, h)); };
  switch (trial % 5) {
    case 0:
      source = "commutative+perturbation";
      return perturbed(commutative, rng, height, 4);
    case 1: {
      source = "sklyanin+perturbation";
      Tensor base = commutative;
      try {
        Rational a = r(2), b = r(2), c = r(2);
        base = recover_superpotential(cubic_sklyanin(a, b, c));
      } catch (const Error&) {
      }
      return perturbed(base, rng, height, 4);
    }
    case 2:
      source = "sparse";
      return perturbed(Tensor(Kind::Cubic), rng, height, 4);
    case 3:
      source = "dense";
      return dense(Kind::Cubic, rng, height);
    default: {
      source = "dense+slot-change";
      Tensor t = dense(Kind::Cubic, rng, height);
      std::vector<Matrix> g;
      for (int s = 0; s < 4; ++s) {
        Matrix m(2, 2);
        do {
          for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t k = 0; k < 2; ++k) m(i, k) = r(2);
        } while (determinant(m).is_zero());
        g.push_back(m);
      }
      return t.transformed(g);
    }
  }
}

TrialOutcome run_trial(const DiscoverOptions& opts, std::size_t trial) {
  TrialOutcome out;
  Rng rng(splitmix(opts.seed ^ splitmix(trial)));
  std::string source;
  Tensor t = opts.kind == Kind::Quadratic ? plane_sample(trial, rng, opts.height, source)
                                          : quadric_sample(trial, rng, opts.height, source);
  if (t.is_zero()) return out;
  try {
    PipelineOptions po;
    po.seed = rng.next();
    Analysis a = analyze(t, po);
    if (!a.verdict.pass) return out;
    out.status = TrialOutcome::Hit;
    out.hit = {trial,         source,       t, a.curve.verdict, a.curve.segre ? std::optional(a.curve.segre->str()) : std::nullopt,
               a.hh.h,        a.identities, a.derivations.hh1 == a.hh.h[1], a.table_match};
  } catch (const Error& e) {
    out.status = TrialOutcome::Failed;
    out.error = std::string(e.stage().empty() ? "" : e.stage() + ": ") + error_name(e.code());
  }
  return out;
}

}  // namespace

DiscoverResult discover(const DiscoverOptions& opts) {
  std::vector<TrialOutcome> outcomes(opts.trials);
  std::atomic<std::size_t> next{0};
  std::size_t jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(opts.trials, 1));
  auto worker = [&] {
    for (std::size_t i = next++; i < opts.trials; i = next++) outcomes[i] = run_trial(opts, i);
  };
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  DiscoverResult res;
  for (auto& o : outcomes) {
    if (o.status == TrialOutcome::Rejected) {
      ++res.rejected;
    } else if (o.status == TrialOutcome::Failed) {
      ++res.errors[o.error];
    } else {
      res.first_of_type.emplace(o.hit.verdict, res.hits.size());
      ++res.count_of_type[o.hit.verdict];
      res.hits.push_back(std::move(o.hit));
    }
  }
  return res;
}

Json to_json(const DiscoverResult& r) {
  Json types = Json::object();
  for (const auto& [verdict, idx] : r.first_of_type) {
    const DiscoveryHit& h = r.hits[idx];
    types[verdict] = {{"count", r.count_of_type.at(verdict)},
                      {"first_trial", h.trial},
                      {"segre", h.segre ? Json(*h.segre) : Json(nullptr)},
                      {"h", h.h},
                      {"table_match", h.table_match}};
  }
  std::size_t identities = 0, agree = 0, matching = 0;
  for (const auto& h : r.hits) {
    identities += h.identities;
    agree += h.derivations_agree;
    matching += h.table_match;
  }
  std::size_t matching_types = 0;
  for (const auto& [verdict, idx] : r.first_of_type) {
    bool all = true;
    for (const auto& h : r.hits)
      if (h.verdict == verdict) all = all && h.table_match;
    matching_types += all;
  }
  return {{"hits", r.hits.size()},
          {"rejected", r.rejected},
          {"errors", r.errors},
          {"types_covered", r.first_of_type.size()},
          {"types_matching_table", matching_types},
          {"hits_with_identities", identities},
          {"hits_with_derivations_agreeing", agree},
          {"hits_matching_table", matching},
          {"types", types}};
}

std::vector<std::string> write_fixtures(const DiscoverResult& r, const DiscoverOptions& opts, const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path base = fs::path(dir) / (opts.kind == Kind::Quadratic ? "plane" : "quadric");
  fs::create_directories(base);
  std::vector<std::string> written;
  for (const auto& [verdict, idx] : r.first_of_type) {
    const DiscoveryHit& h = r.hits[idx];
    Json fx = to_json(h.tensor);
    fx["expected"] = {{"verdict", h.verdict}, {"segre", h.segre ? Json(*h.segre) : Json(nullptr)}, {"h", h.h}};
    fx["source"] = {{"generator", h.source}, {"seed", opts.seed}, {"height", opts.height}, {"trial", h.trial}};
    const fs::path path = base / (verdict + ".json");
    std::ofstream(path) << fx.dump(2) << "\n";
    written.push_back(path.string());
  }
  return written;
}

}  // namespace ncsurf
