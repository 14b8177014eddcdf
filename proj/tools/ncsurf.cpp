#include "ncsurf/cli.hpp"
#include "ncsurf/error.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace ncsurf;

namespace {

ProblemInput load_input(const std::string& arg) {
  if (arg.rfind("preset:", 0) == 0) return resolve_preset(arg.substr(7));
  return input_from_json(read_json_file(arg));
}

Tensor load_tensor(const std::string& arg) {
  ProblemInput in = load_input(arg);
  if (auto* t = std::get_if<Tensor>(&in)) return *t;
  return recover_superpotential(std::get<GradedPresentation>(in));
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& x : v)
    if (!flat(x)) return false;
  return true;
}

// Small objects of scalars print on one line inside lists.
bool inline_object(const Json& v) {
  if (!v.is_object() || v.size() > 4) return false;
  for (const auto& [k, x] : v.items())
    if (!flat(x)) return false;
  return true;
}

std::string one_line(const Json& v) {
  std::string out;
  for (const auto& [k, x] : v.items()) out += (out.empty() ? "" : "  ") + k + "=" + (x.is_array() ? x.dump() : scalar(x));
  return out;
}

// Indented key/value rendering; arrays of scalars stay on one line.
void render(std::ostream& os, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    std::size_t width = 0;
    for (const auto& [k, x] : v.items()) width = std::max(width, k.size());
    for (const auto& [k, x] : v.items()) {
      if (flat(x)) {
        os << pad << k << std::string(width - k.size() + 2, ' ') << (x.is_array() ? x.dump() : scalar(x)) << "\n";
      } else {
        os << pad << k << "\n";
        render(os, x, indent + 2);
      }
    }
  } else if (v.is_array()) {
    std::size_t i = 0;
    for (const auto& x : v) {
      if (flat(x)) {
        os << pad << "- " << (x.is_array() ? x.dump() : scalar(x)) << "\n";
      } else if (inline_object(x)) {
        os << pad << "- " << one_line(x) << "\n";
      } else if (x.is_array() && !x.empty() && inline_object(x[0])) {
        std::string line;
        for (const auto& y : x) line += (line.empty() ? "" : " | ") + one_line(y);
        os << pad << "- " << line << "\n";
      } else {
        os << pad << "[" << i << "]\n";
        render(os, x, indent + 2);
      }
      ++i;
    }
  } else {
    os << pad << scalar(v) << "\n";
  }
}

int emit(const Json& j, bool pretty, bool ok) {
  if (pretty)
    render(std::cout, j, 0);
  else
    std::cout << j.dump() << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative planes and quadrics: superpotentials, Hochschild cohomology, point schemes"};
  app.require_subcommand(1);
  bool pretty = false;
  std::optional<std::uint64_t> seed_flag;
  app.add_flag("--pretty", pretty, "Human-readable table instead of JSON");
  app.add_option("--seed", seed_flag, "Seed for randomized solvers (default: NCSURF_SEED or built-in)");

  std::string file;
  auto* check = app.add_subcommand("check", "Nondegeneracy of a tensor or presentation");
  check->add_option("file", file, "Tensor/presentation JSON or preset:NAME")->required();
  auto* relations = app.add_subcommand("relations", "Relation space extracted from the tensor");
  relations->add_option("file", file, "Tensor/presentation JSON or preset:NAME")->required();
  auto* algebra = app.add_subcommand("algebra", "Quiver algebra, Cartan data and global dimension");
  algebra->add_option("file", file, "Tensor/presentation JSON or preset:NAME")->required();
  auto* hh = app.add_subcommand("hh", "Hochschild cohomology, HH^1 bracket and cup products");
  hh->add_option("file", file, "Tensor/presentation JSON or preset:NAME")->required();
  auto* classify = app.add_subcommand("classify", "Point scheme type");
  classify->add_option("file", file, "Tensor/presentation JSON or preset:NAME")->required();
  std::size_t slot = 2;
  classify->add_option("--slot", slot, "Slot for the plane cubic")->check(CLI::Range(0, 2));
  auto* segre = app.add_subcommand("segre", "Segre symbol of a pencil {\"m\",\"n\"} or of a (2,2) form {\"form\"}");
  segre->add_option("pencil-file", file, "Pencil JSON")->required();
  auto* run = app.add_subcommand("run", "Full pipeline with table consistency");
  run->add_option("input", file, "Tensor/presentation JSON or preset:NAME")->required();
  app.add_subcommand("presets", "List the preset catalog");
  auto* verify = app.add_subcommand("verify-tables", "Table identities, presets and committed fixtures");
  std::string fixture_dir = NCSURF_FIXTURE_DIR;
  bool strict = false;
  verify->add_option("--fixtures", fixture_dir, "Fixture directory")->capture_default_str();
  verify->add_flag("--strict", strict, "Fail on fixtures whose (h1,h2) disagrees with the table");
  auto* disc = app.add_subcommand("discover", "Randomized search for point-scheme types");
  std::string kind_name_arg = "plane";
  DiscoverOptions dopts;
  std::optional<std::uint64_t> dseed;
  std::string write_dir;
  disc->add_option("--kind", kind_name_arg, "plane or quadric")->check(CLI::IsMember({"plane", "quadric"}));
  disc->add_option("--trials", dopts.trials, "Number of trials")->check(CLI::PositiveNumber);
  disc->add_option("--height", dopts.height, "Coefficient height")->check(CLI::PositiveNumber);
  disc->add_option("--seed", dseed, "Discovery seed (default: NCSURF_SEED or 42)");
  disc->add_option("--jobs", dopts.jobs, "Worker threads (0: all cores)");
  disc->add_option("--write-fixtures", write_dir, "Write the first hit of each type as a fixture");

  CLI11_PARSE(app, argc, argv);

  try {
    PipelineOptions popts;
    popts.seed = seed_flag ? *seed_flag : default_seed();

    if (*check) {
      Tensor t = load_tensor(file);
      NondegeneracyVerdict v = check_nondegenerate(t, popts.seed);
      return emit(to_json(v), pretty, v.pass);
    }
    if (*relations) {
      Tensor t = load_tensor(file);
      return emit(to_json(extract_relations(t)), pretty, true);
    }
    if (*algebra) {
      Tensor t = load_tensor(file);
      QuiverAlgebra a = build_algebra(t.kind(), extract_relations(t).relations);
      CartanData c = cartan_and_coxeter(a);
      std::size_t gldim = global_dimension(a);
      Json j = algebra_to_json(a);
      j["cartan"] = to_json(c);
      j["gldim"] = gldim;
      j["associative"] = a.is_associative();
      return emit(j, pretty, c.unipotent && gldim == 2 && j["associative"].get<bool>());
    }
    if (*hh) {
      Tensor t = load_tensor(file);
      QuiverAlgebra a = build_algebra(t.kind(), extract_relations(t).relations);
      HHReport r = hochschild_report(a);
      DerivationData d = hh1_via_derivations(a, r.h[1]);
      Json j = to_json(r);
      j["jacobi"] = r.jacobi;
      j["derivations"] = {{"der", d.derivations}, {"inner", d.inner}, {"center", d.center}, {"hh1", d.hh1}};
      return emit(j, pretty, r.jacobi);
    }
    if (*classify) {
      Tensor t = load_tensor(file);
      CurveClass c = t.kind() == Kind::Quadratic ? classify_plane_cubic(plane_cubic(t, slot), popts.seed)
                                                 : classify_quadric_divisor(quadric_divisor(t));
      Json j = to_json(c);
      j["form"] = to_json(t.kind() == Kind::Quadratic ? plane_cubic(t, slot) : quadric_divisor(t));
      return emit(j, pretty, true);
    }
    if (*segre) {
      Pencil p = pencil_from_json(read_json_file(file));
      SegreSymbol s = segre_symbol(p.m, p.n);
      Json j = to_json(s);
      auto type = quadric_type_of_symbol(s.str());
      j["type"] = type ? Json(*type) : Json(nullptr);
      return emit(j, pretty, type.has_value());
    }
    if (*run) {
      popts.plane_slot = 2;
      PipelineResult r = run_pipeline(load_input(file), popts);
      return emit(r.report, pretty, r.ok);
    }
    if (app.got_subcommand("presets")) {
      Json j = Json::array();
      for (const auto& p : preset_catalog())
        j.push_back({{"name", p.name}, {"expected_class", p.expected_class}, {"notes", p.notes}});
      return emit(j, pretty, true);
    }
    if (*verify) {
      VerifyOptions vopts;
      vopts.fixture_dir = fixture_dir;
      vopts.strict = strict;
      vopts.pipeline = popts;
      VerifyResult r = verify_tables(vopts);
      return emit(r.report, pretty, r.ok);
    }
    if (*disc) {
      dopts.kind = kind_name_arg == "plane" ? Kind::Quadratic : Kind::Cubic;
      if (dseed)
        dopts.seed = *dseed;
      else if (std::getenv("NCSURF_SEED"))
        dopts.seed = default_seed();
      DiscoverResult r = discover(dopts);
      Json j = to_json(r);
      j["options"] = {{"kind", kind_name_arg}, {"trials", dopts.trials}, {"height", dopts.height}, {"seed", dopts.seed}};
      if (!write_dir.empty()) j["fixtures_written"] = write_fixtures(r, dopts, write_dir);
      return emit(j, pretty, r.errors.empty());
    }
  } catch (const Error& e) {
    Json j{{"error", {{"code", error_name(e.code())}, {"stage", e.stage()}, {"message", e.what()}}}};
    emit(j, pretty, false);
    return 2;
  } catch (const std::exception& e) {
    Json j{{"error", {{"code", "Exception"}, {"message", e.what()}}}};
    emit(j, pretty, false);
    return 2;
  }
  return 1;
}
