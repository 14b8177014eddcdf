#pragma once

#include "ncsurf/io.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ncsurf {

/// Seed from NCSURF_SEED when set (decimal or 0x-hex), else the default.
std::uint64_t default_seed();

struct Preset {
  std::string name;
  ProblemInput input;
  std::string expected_class;
  std::string notes;
};

/// The guaranteed preset set checked by verify_tables.
const std::vector<Preset>& preset_catalog();

/// Resolves "NAME" or a parametrized "sklyanin-plane:a,b,c",
/// "skew-plane:q=Q", "skew-plane:q1,q2,q3", "cubic-sklyanin:a,b,c".
/// Throws Error(InvalidInput) for unknown names.
ProblemInput resolve_preset(const std::string& name_and_args);

struct TableRow {
  std::string type;
  std::string description;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  /// Dimension of the automorphism group fixing all bundles.
  std::size_t aut_dim = 0;
};

/// Reference rows. The last row of each table is the commutative case and
/// answers for the "Linear" verdict.
const std::vector<TableRow>& plane_table();
const std::vector<TableRow>& quadric_table();
const TableRow* find_row(Family family, const std::string& verdict);

struct PipelineOptions {
  std::uint64_t seed = kDefaultSolveSeed;
  std::size_t plane_slot = 2;
};

struct PipelineResult {
  Json report;
  bool ok = false;
  std::optional<std::string> verdict;
  std::optional<std::vector<std::size_t>> h;
  bool table_match = false;
};

/// tensor or presentation -> checks -> relations -> algebra -> HH ->
/// classification -> table row. Module errors are caught and reported with
/// the stage that raised them.
PipelineResult run_pipeline(const ProblemInput& input, const PipelineOptions& opts = {});

struct VerifyOptions {
  std::string fixture_dir;
  /// Also fail on fixtures whose (h1, h2) disagrees with the table row.
  bool strict = false;
  PipelineOptions pipeline;
};

struct VerifyResult {
  Json report;
  bool ok = false;
};

/// Static identities, the preset gate and the committed fixtures.
VerifyResult verify_tables(const VerifyOptions& opts);

struct DiscoverOptions {
  Kind kind = Kind::Quadratic;
  std::size_t trials = 500;
  int height = 3;
  std::uint64_t seed = 42;
  std::size_t jobs = 0;  // 0: hardware concurrency
};

struct DiscoveryHit {
  std::size_t trial = 0;
  std::string source;
  Tensor tensor{Kind::Quadratic};
  std::string verdict;
  std::optional<std::string> segre;
  std::vector<std::size_t> h;
  bool identities = false;
  bool derivations_agree = false;
  bool table_match = false;
};

struct DiscoverResult {
  std::vector<DiscoveryHit> hits;  // sorted by trial index
  std::size_t rejected = 0;        // nondegeneracy FAIL
  std::map<std::string, std::size_t> errors;
  /// First hit of each verdict.
  std::map<std::string, std::size_t> first_of_type;
  std::map<std::string, std::size_t> count_of_type;
};

/// Samples bounded-height tensors and perturbed closed-form families,
/// keeps PASS inputs and classifies them. Deterministic under the seed,
/// independent of the job count.
DiscoverResult discover(const DiscoverOptions& opts);
Json to_json(const DiscoverResult& r);

/// Writes one fixture per type (first hit) into dir/<family>/<type>.json.
std::vector<std::string> write_fixtures(const DiscoverResult& r, const DiscoverOptions& opts, const std::string& dir);

}  // namespace ncsurf
