#include "pqs/report.hpp"

#include <fstream>
#include <map>

#include "pqs/fundgroup.hpp"
#include "pqs/invariants.hpp"
#include "pqs/singularities.hpp"

namespace pqs {

namespace {

Json rational_json(const Rational& r) {
  return r.is_integer() ? Json(r.as_integer()) : Json(r.str());
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail_validation(std::string("job is missing required field \"") + key + "\"");
  return j.at(key);
}

int parse_element(const LoadedJob& job, const Json& desc) {
  if (desc.is_object() && desc.contains("matrix")) {
    if (!job.psl2) fail_validation("\"matrix\" element syntax requires a psl2 group");
    const Json& m = desc.at("matrix");
    if (!m.is_array() || m.size() != 2 || m[0].size() != 2 || m[1].size() != 2)
      fail_validation("\"matrix\" must be a 2x2 array");
    Mat2 mat{{{m[0][0].get<long long>(), m[0][1].get<long long>()},
              {m[1][0].get<long long>(), m[1][1].get<long long>()}}};
    return job.psl2->element_of(mat);
  }
  if (desc.is_object() && desc.contains("images")) {
    std::vector<int> img = desc.at("images").get<std::vector<int>>();
    return job.group->index_of(Permutation(std::move(img)));
  }
  if (desc.is_object() && desc.contains("word")) {
    std::vector<int> w = desc.at("word").get<std::vector<int>>();
    return evaluate_word(*job.group, job.group->generator_indices(), w);
  }
  fail_validation("element descriptor must carry \"matrix\", \"images\" or \"word\"");
}

std::vector<int> parse_elements(const LoadedJob& job, const Json& list) {
  if (!list.is_array() || list.empty()) fail_validation("element list must be a nonempty array");
  std::vector<int> out;
  for (const Json& d : list) out.push_back(parse_element(job, d));
  return out;
}

// System over the materialized subgroup when one is present, over the full
// group otherwise.
SphericalSystem system_for(const LoadedJob& job, const std::vector<int>& parent_elements) {
  if (job.materialized) {
    std::vector<int> mapped;
    for (int e : parent_elements) mapped.push_back(job.materialized->from_parent(e));
    return validate_system(job.materialized->group, mapped);
  }
  return validate_system(*job.group, parent_elements);
}

Json basket_json(const Basket& basket) {
  Json out = Json::array();
  for (const auto& [type, mult] : basket)
    out.push_back({{"n", type.n}, {"a", type.a}, {"multiplicity", mult}});
  return out;
}

Json invariants_json(const SurfaceInvariants& inv) {
  Json out;
  out["g1"] = inv.g1;
  out["g2"] = inv.g2;
  out["group_order"] = inv.group_order;
  out["basket"] = basket_json(inv.basket);
  out["singular_points"] = inv.singular_points;
  out["K2"] = inv.KX2;
  out["c2"] = inv.c2;
  out["chi"] = inv.chi;
  out["q"] = inv.q;
  out["pg"] = inv.pg;
  out["h11"] = inv.h11;
  out["K_minus_E_2"] = inv.KminusE2;
  out["criterion_positive"] = inv.criterion_positive;
  return out;
}

Json wrap(const char* command, const LoadedJob& job, Json result) {
  Json out;
  out["schema"] = kSchemaVersion;
  out["tool"] = kToolVersion;
  out["command"] = command;
  out["input"] = job.echo;
  out["result"] = std::move(result);
  return out;
}

Json word_json(const Word& w) { return Json(w); }

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_validation("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail_validation("invalid JSON in " + path + ": " + e.what());
  }
}

LoadedJob load_job(const Json& j) {
  try {
    LoadedJob job;
    job.echo = j;
    if (require(j, "schema").get<int>() != kSchemaVersion)
      fail_validation("unsupported schema version");
    const Json& g = require(j, "group");
    std::string kind = require(g, "kind").get<std::string>();
    if (kind == "psl2") {
      job.psl2 = std::make_shared<Psl2>(require(g, "q").get<long long>());
      job.group = &job.psl2->group();
    } else if (kind == "perms") {
      int degree = require(g, "degree").get<int>();
      std::vector<Permutation> gens;
      for (const Json& img : require(g, "generators"))
        gens.push_back(Permutation(img.get<std::vector<int>>()));
      for (const Permutation& p : gens)
        if (p.degree() != degree) fail_validation("generator degree mismatch");
      job.owned_group =
          std::make_shared<FiniteGroup>(FiniteGroup::from_generators(degree, gens));
      job.group = job.owned_group.get();
    } else {
      fail_validation("group kind must be \"psl2\" or \"perms\"");
    }
    if (j.contains("options")) {
      const Json& o = j.at("options");
      if (o.contains("coset_cap")) job.coset_cap = o.at("coset_cap").get<long long>();
      if (o.contains("node_cap")) job.node_cap = o.at("node_cap").get<long long>();
    }
    if (j.contains("subgroup")) {
      std::vector<int> gens = parse_elements(job, require(j.at("subgroup"), "generators"));
      job.subgroup.emplace(subgroup_generated(*job.group, gens));
      job.materialized.emplace(materialize(*job.subgroup));
    }
    auto check_membership = [&](const std::vector<int>& elems) {
      if (!job.subgroup) return;
      for (int e : elems)
        if (!job.subgroup->contains(e))
          fail_validation("system element does not lie in the given subgroup");
    };
    if (j.contains("system")) job.system = parse_elements(job, j.at("system"));
    if (j.contains("systems"))
      for (const Json& s : j.at("systems")) {
        job.systems.push_back(parse_elements(job, s));
        check_membership(job.systems.back());
      }
    if (j.contains("systems2"))
      for (const Json& s : j.at("systems2")) {
        job.systems2.push_back(parse_elements(job, s));
        check_membership(job.systems2.back());
      }
    if (j.contains("signature")) job.signature = j.at("signature").get<std::vector<int>>();
    return job;
  } catch (const nlohmann::json::exception& e) {
    fail_validation(std::string("malformed job: ") + e.what());
  }
}

Json report_group(const LoadedJob& job) {
  const FiniteGroup& g = *job.group;
  Json result;
  result["order"] = g.order();
  result["degree"] = g.degree();
  Json classes = Json::array();
  for (const ConjugacyClass& c : g.classes())
    classes.push_back({{"element_order", c.element_order},
                       {"size", (long long)c.members.size()},
                       {"representative_images", g.element(c.representative).images()}});
  result["classes"] = std::move(classes);
  std::map<int, int> hist;
  for (int e = 0; e < g.order(); ++e) ++hist[g.element_order(e)];
  Json h;
  for (const auto& [ord, count] : hist) h[std::to_string(ord)] = count;
  result["element_order_histogram"] = std::move(h);
  return wrap("group", job, std::move(result));
}

Json report_subgroups(const LoadedJob& job) {
  const FiniteGroup& g = *job.group;
  std::optional<SphericalSystem> sys;
  if (!job.system.empty()) sys = validate_system(g, job.system);
  Json list = Json::array();
  for (const SubgroupClassInfo& ci : two_generated_subgroup_classes(g)) {
    Json entry;
    entry["structure"] = ci.structure;
    entry["order"] = ci.representative.order();
    entry["conjugates"] = ci.conjugate_count;
    if (sys) entry["quotient_genus"] = quotient_genus(*sys, ci.representative);
    list.push_back(std::move(entry));
  }
  return wrap("subgroups", job, Json{{"subgroup_classes", std::move(list)}});
}

Json report_cover(const LoadedJob& job) {
  if (job.system.empty()) fail_validation("cover requires a \"system\"");
  SphericalSystem sys = validate_system(*job.group, job.system);
  Json result;
  result["signature"] = sys.signature;
  result["genus"] = genus_of_cover(sys);
  return wrap("cover", job, std::move(result));
}

Json report_quotient(const LoadedJob& job) {
  if (job.system.empty() || !job.subgroup)
    fail_validation("quotient requires a \"system\" and a \"subgroup\"");
  SphericalSystem sys = validate_system(*job.group, job.system);
  CoverDescription cd = induced_quotient_monodromy(sys, *job.subgroup);
  Json result;
  result["subgroup_order"] = job.subgroup->order();
  result["index"] = job.group->order() / job.subgroup->order();
  result["total_genus"] = cd.total_genus;
  result["quotient_genus"] = cd.quotient_genus;
  Json branch = Json::array();
  int points = 0;
  for (const BranchDatum& b : cd.branch) {
    branch.push_back({{"local_order", b.local_order},
                      {"count", b.count},
                      {"class_representative_images",
                       job.group->element(b.class_rep).images()}});
    points += b.count;
  }
  result["branch_points"] = points;
  result["branch"] = std::move(branch);
  return wrap("quotient", job, std::move(result));
}

namespace {

std::pair<SphericalSystem, SphericalSystem> system_pair(const LoadedJob& job) {
  if (job.systems.size() != 2)
    fail_validation("this command requires \"systems\" with exactly two element lists");
  return {system_for(job, job.systems[0]), system_for(job, job.systems[1])};
}

}  // namespace

Json report_basket(const LoadedJob& job, int) {
  auto [s1, s2] = system_pair(job);
  BasketResult br = compute_basket(s1, s2);
  BasketInvariants bi = basket_invariants(br.basket);
  Json result;
  result["basket"] = basket_json(br.basket);
  result["singular_points"] = br.singular_points;
  result["k"] = rational_json(bi.k);
  result["e"] = rational_json(bi.e);
  result["B"] = rational_json(bi.B);
  result["D"] = rational_json(bi.D);
  return wrap("basket", job, std::move(result));
}

Json report_surface(const LoadedJob& job, int) {
  auto [s1, s2] = system_pair(job);
  return wrap("surface", job, invariants_json(surface_invariants(s1, s2)));
}

Json report_pi1(const LoadedJob& job, int threads) {
  std::vector<int> elems =
      !job.systems.empty() ? job.systems.front() : job.system;
  if (elems.empty()) fail_validation("pi1 requires a \"system\" or one entry in \"systems\"");
  SphericalSystem sys = job.systems.empty() && !job.materialized
                            ? validate_system(*job.group, elems)
                            : system_for(job, elems);
  Pi1Options opts;
  opts.coset_cap = (int)job.coset_cap;
  opts.node_cap = job.node_cap;
  opts.threads = threads;
  Pi1Result r = pi1_trivial_certificate(sys, opts);
  Json result;
  result["status"] = r.status == Pi1Result::Status::verified ? "verified" : "inconclusive";
  result["detail"] = r.detail;
  if (r.witness) {
    if (!verify_witness(sys, *r.witness, (int)job.coset_cap))
      fail_inconsistency("produced witness failed re-verification");
    const GoodPresentationWitness& w = *r.witness;
    Json wj;
    Json assign = Json::array();
    for (int a : w.assignment) assign.push_back(sys.group->element(a).images());
    wj["assignment_images"] = std::move(assign);
    Json rel = Json::array();
    for (const Word& rw : w.presentation.relators) rel.push_back(word_json(rw));
    wj["presentation"] = {{"generators", w.presentation.generator_count},
                          {"relators", std::move(rel)}};
    Json c2 = Json::array();
    for (std::size_t i = 0; i < w.condition2.size(); ++i)
      c2.push_back({{"generator", w.condition2[i].generator},
                    {"exponent", w.condition2[i].exponent},
                    {"conjugator_word", word_json(w.conjugator_words[i])}});
    wj["condition2"] = std::move(c2);
    Json shapes = Json::array();
    for (const ShapeCertificate& c : w.shapes)
      shapes.push_back(c.shape == RelatorShape::power        ? "power"
                       : c.shape == RelatorShape::conjugation ? "conjugation"
                                                              : "product");
    wj["relator_shapes"] = std::move(shapes);
    wj["hurwitz_moves"] = w.hurwitz_moves;
    result["witness"] = std::move(wj);
  }
  return wrap("pi1", job, std::move(result));
}

Json report_twists(const LoadedJob& job, int threads) {
  if (job.systems.empty()) fail_validation("twists requires \"systems\"");
  std::vector<SphericalSystem> list1, list2;
  for (const auto& s : job.systems) list1.push_back(system_for(job, s));
  if (job.systems2.empty())
    list2 = list1;
  else
    for (const auto& s : job.systems2) list2.push_back(system_for(job, s));
  TwistReport tw = twist_report(list1, list2, 0, 0, threads);
  Json entries = Json::array();
  for (const auto& row : tw.entries) {
    Json jrow = Json::array();
    for (const SurfaceInvariants& inv : row) jrow.push_back(invariants_json(inv));
    entries.push_back(std::move(jrow));
  }
  Json result;
  result["rows"] = (long long)tw.entries.size();
  result["cols"] = (long long)tw.entries.front().size();
  result["min_K_minus_E_2"] = tw.min_k_minus_e2;
  result["all_positive"] = tw.all_positive;
  result["numerically_constant"] = tw.numerically_constant;
  result["entries"] = std::move(entries);
  return wrap("twists", job, std::move(result));
}

Json verify_bundled(const std::string& jobs_dir, int threads) {
  Json manifest = load_json_file(jobs_dir + "/manifest.json");
  Json cases = Json::array();
  bool all = true;
  for (const Json& c : manifest.at("cases")) {
    std::string name = c.at("name").get<std::string>();
    std::string command = c.at("command").get<std::string>();
    LoadedJob job = load_job(load_json_file(jobs_dir + "/" + c.at("job").get<std::string>()));
    Json actual;
    if (command == "group") actual = report_group(job);
    else if (command == "subgroups") actual = report_subgroups(job);
    else if (command == "cover") actual = report_cover(job);
    else if (command == "quotient") actual = report_quotient(job);
    else if (command == "basket") actual = report_basket(job, threads);
    else if (command == "surface") actual = report_surface(job, threads);
    else if (command == "pi1") actual = report_pi1(job, threads);
    else if (command == "twists") actual = report_twists(job, threads);
    else fail_validation("unknown command in manifest: " + command);
    Json expected =
        load_json_file(jobs_dir + "/" + c.at("expected").get<std::string>());
    bool match = render_report(actual) == render_report(expected);
    all = all && match;
    cases.push_back({{"name", name}, {"command", command}, {"match", match}});
  }
  Json out;
  out["schema"] = kSchemaVersion;
  out["tool"] = kToolVersion;
  out["command"] = "verify-paper";
  out["result"] = {{"cases", std::move(cases)}, {"all_match", all}};
  return out;
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace pqs
