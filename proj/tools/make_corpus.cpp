// Regenerates the bundled job corpus and its golden reports (jobs/ and
// jobs/expected/). The corpus is frozen in the repository; rerun this tool
// only when the schema or the covered cases change.
#include <fstream>
#include <iostream>

#include "pqs/invariants.hpp"
#include "pqs/report.hpp"

using namespace pqs;

namespace {

std::string out_dir;

void write_file(const std::string& rel, const std::string& text) {
  std::ofstream out(out_dir + "/" + rel, std::ios::binary);
  if (!out) fail_validation("cannot write " + rel);
  out << text;
}

// Smallest SL2(F_q) matrix (lex order on a,b,c,d) inducing the permutation.
Json matrix_json(const Psl2& P, const Permutation& target) {
  const long long q = P.q();
  for (long long a = 0; a < q; ++a)
    for (long long b = 0; b < q; ++b)
      for (long long c = 0; c < q; ++c)
        for (long long d = 0; d < q; ++d) {
          if (((a * d - b * c) % q + q) % q != 1) continue;
          if (P.permutation_of({{{a, b}, {c, d}}}) == target)
            return Json{{"matrix", {{a, b}, {c, d}}}};
        }
  fail_inconsistency("no SL2 matrix induces the permutation");
}

Json system_json(const Psl2& P, const FiniteGroup& g, const std::vector<int>& elems) {
  Json out = Json::array();
  for (int e : elems) out.push_back(matrix_json(P, g.element(e)));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  out_dir = argc > 1 ? argv[1] : "jobs";

  Psl2 P(13);
  const FiniteGroup& G = P.group();
  std::vector<int> triple = {P.element_of({{{5, 3}, {0, 8}}}),
                             P.element_of({{{-1, 3}, {4, 0}}}),
                             P.element_of({{{0, 2}, {6, 6}}})};
  const Json group_desc = {{"kind", "psl2"}, {"q", 13}};
  const Json triple_json = system_json(P, G, triple);
  SphericalSystem big = validate_system(G, triple);
  std::vector<SphericalSystem> big_systems = enumerate_systems_by_orders(G, {2, 3, 7});
  std::cerr << "big systems: " << big_systems.size() << "\n";

  Json manifest;
  manifest["cases"] = Json::array();
  auto emit_case = [&](const std::string& name, const std::string& command, Json job) {
    std::string job_file = name + ".json";
    std::string expected_file = "expected/" + name + ".json";
    write_file(job_file, job.dump(2) + "\n");
    LoadedJob loaded = load_job(job);
    Json report;
    if (command == "group") report = report_group(loaded);
    else if (command == "subgroups") report = report_subgroups(loaded);
    else if (command == "cover") report = report_cover(loaded);
    else if (command == "quotient") report = report_quotient(loaded);
    else if (command == "basket") report = report_basket(loaded, 1);
    else if (command == "surface") report = report_surface(loaded, 1);
    else if (command == "pi1") report = report_pi1(loaded, 1);
    else if (command == "twists") report = report_twists(loaded, 1);
    write_file(expected_file, render_report(report));
    manifest["cases"].push_back({{"name", name},
                                 {"command", command},
                                 {"job", job_file},
                                 {"expected", expected_file}});
    std::cerr << "wrote " << name << "\n";
  };

  emit_case("psl2_group", "group", Json{{"schema", 1}, {"group", group_desc}});
  emit_case("psl2_subgroups", "subgroups",
            Json{{"schema", 1}, {"group", group_desc}, {"system", triple_json}});
  emit_case("triple_cover", "cover",
            Json{{"schema", 1}, {"group", group_desc}, {"system", triple_json}});

  for (const SubgroupClassInfo& ci : two_generated_subgroup_classes(G)) {
    std::string tag;
    if (ci.structure == "D7") tag = "d7";
    else if (ci.structure == "D6") tag = "d6";
    else if (ci.structure == "A4") tag = "a4";
    else continue;

    const Subgroup& h = ci.representative;
    // Deterministic two-element generating set for the job file.
    Json sub_gens;
    for (int a : h.elements()) {
      for (int b : h.elements())
        if (subgroup_generated(G, {a, b}).order() == h.order()) {
          sub_gens = Json{{"generators",
                           Json::array({matrix_json(P, G.element(a)),
                                        matrix_json(P, G.element(b))})}};
          break;
        }
      if (!sub_gens.is_null()) break;
    }

    MaterializedSubgroup M = materialize(h);
    auto to_parent_list = [&](const SphericalSystem& s) {
      std::vector<int> out;
      for (int e : s.elements) out.push_back(M.to_parent[e]);
      return out;
    };
    SphericalSystem diag = realize_induced_system(big, h, M);
    Json diag_json = system_json(P, G, to_parent_list(diag));

    emit_case(tag + "_quotient", "quotient",
              Json{{"schema", 1},
                   {"group", group_desc},
                   {"subgroup", sub_gens},
                   {"system", triple_json}});
    emit_case(tag + "_surface", "surface",
              Json{{"schema", 1},
                   {"group", group_desc},
                   {"subgroup", sub_gens},
                   {"systems", Json::array({diag_json, diag_json})}});
    if (tag == "d7") {
      emit_case("d7_basket", "basket",
                Json{{"schema", 1},
                     {"group", group_desc},
                     {"subgroup", sub_gens},
                     {"systems", Json::array({diag_json, diag_json})}});
      emit_case("d7_pi1", "pi1",
                Json{{"schema", 1},
                     {"group", group_desc},
                     {"subgroup", sub_gens},
                     {"systems", Json::array({diag_json})},
                     {"options", {{"coset_cap", 20000}}}});
    }

    std::vector<SphericalSystem> induced;
    for (const SphericalSystem& bs : big_systems)
      induced.push_back(realize_induced_system(bs, h, M));
    Json sweep = Json::array();
    for (const SphericalSystem& s : induced) sweep.push_back(system_json(P, G, to_parent_list(s)));
    emit_case(tag + "_twists", "twists",
              Json{{"schema", 1},
                   {"group", group_desc},
                   {"subgroup", sub_gens},
                   {"systems", sweep}});

    if (tag == "d7") {
      bool done = false;
      for (std::size_t i = 0; i < induced.size() && !done; ++i)
        for (std::size_t j = 0; j < induced.size() && !done; ++j) {
          SurfaceInvariants inv = surface_invariants(induced[i], induced[j]);
          if (inv.KX2 == 95) {
            emit_case("d7_twisted_surface", "surface",
                      Json{{"schema", 1},
                           {"group", group_desc},
                           {"subgroup", sub_gens},
                           {"systems", Json::array({sweep[i], sweep[j]})}});
            done = true;
          }
        }
      if (!done) fail_inconsistency("no twisted pair with K^2 = 95 found");
    }
  }

  write_file("manifest.json", manifest.dump(2) + "\n");
  std::cerr << "corpus written to " << out_dir << "\n";
  return 0;
}
