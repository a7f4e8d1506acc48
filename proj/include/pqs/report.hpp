#ifndef PQS_REPORT_HPP
#define PQS_REPORT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pqs/covers.hpp"
#include "pqs/psl2.hpp"

namespace pqs {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "pqs 1.0.0";

// A parsed and validated job file. Element lists hold parent-group element
// indices; when a subgroup is present, system elements are checked to lie in
// it and the materialized copy is available for subgroup-level computations.
struct LoadedJob {
  std::shared_ptr<Psl2> psl2;                 // set iff group kind is "psl2"
  std::shared_ptr<FiniteGroup> owned_group;   // set iff group kind is "perms"
  const FiniteGroup* group = nullptr;
  std::optional<Subgroup> subgroup;
  std::optional<MaterializedSubgroup> materialized;
  std::vector<int> system;                    // "system": big-group elements
  std::vector<std::vector<int>> systems;      // "systems": lists of elements
  std::vector<std::vector<int>> systems2;     // optional second sweep axis
  std::vector<int> signature;                 // "signature": orders for enumeration
  long long coset_cap = 250'000;
  long long node_cap = 50'000'000;
  Json echo;                                  // the job as given
};

LoadedJob load_job(const Json& job);
Json load_json_file(const std::string& path);

// Report builders, one per CLI subcommand. All output is exact: integers or
// rationals rendered "p/q"; ordering is deterministic.
Json report_group(const LoadedJob& job);
Json report_subgroups(const LoadedJob& job);
Json report_cover(const LoadedJob& job);
Json report_quotient(const LoadedJob& job);
Json report_basket(const LoadedJob& job, int threads);
Json report_surface(const LoadedJob& job, int threads);
Json report_pi1(const LoadedJob& job, int threads);
Json report_twists(const LoadedJob& job, int threads);

// Runs the bundled regression corpus under `jobs_dir` (manifest.json plus
// job/expected pairs); returns a report with one entry per case and an
// overall "all_match" flag.
Json verify_bundled(const std::string& jobs_dir, int threads);

std::string render_report(const Json& report);  // canonical serialization

}  // namespace pqs

#endif
