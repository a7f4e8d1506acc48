#include <doctest.h>

#include <fstream>

#include "pqs/report.hpp"

using namespace pqs;

namespace {

Json tiny_job() {
  // S3 as a permutation group with a (2,2,3)-type system
  return Json{{"schema", 1},
              {"group",
               {{"kind", "perms"},
                {"degree", 3},
                {"generators", {{1, 0, 2}, {1, 2, 0}}}}},
              {"system",
               {{{"images", {1, 0, 2}}}, {{"images", {0, 2, 1}}}, {{"images", {1, 2, 0}}}}}};
}

}  // namespace

TEST_CASE("job validation errors") {
  CHECK_THROWS_AS(load_job(Json{{"schema", 2}}), Error);
  CHECK_THROWS_AS(load_job(Json{{"schema", 1}}), Error);  // no group
  CHECK_THROWS_AS(load_job(Json{{"schema", 1}, {"group", {{"kind", "nope"}}}}), Error);
  Json bad = tiny_job();
  bad["system"][0] = Json{{"images", {0, 0, 1}}};
  CHECK_THROWS_AS(load_job(bad), Error);
  Json not_member = tiny_job();
  not_member["subgroup"] = Json{{"generators", {{{"images", {1, 0, 2}}}}}};
  not_member["systems"] = Json::array({not_member["system"]});
  CHECK_THROWS_AS(load_job(not_member), Error);  // 3-cycle not in C2
}

TEST_CASE("element descriptors: images, word, matrix") {
  LoadedJob job = load_job(tiny_job());
  CHECK(job.group->order() == 6);
  Json with_word = tiny_job();
  with_word["system"][0] = Json{{"word", {1}}};
  LoadedJob job2 = load_job(with_word);
  CHECK(job2.system == job.system);
  Json psl2_job{{"schema", 1}, {"group", {{"kind", "psl2"}, {"q", 5}}}};
  LoadedJob job3 = load_job(psl2_job);
  CHECK(job3.group->order() == 60);
  CHECK_THROWS_AS(load_job(Json{{"schema", 1},
                                {"group", {{"kind", "psl2"}, {"q", 5}}},
                                {"system", {{{"matrix", {{2, 0}, {0, 1}}}}}}}),
                  Error);  // nonsquare det
}

TEST_CASE("cover and basket reports on the tiny job") {
  LoadedJob job = load_job(tiny_job());
  Json cover = report_cover(job);
  CHECK(cover["schema"] == 1);
  CHECK(cover["result"]["genus"] == 0);
  CHECK(cover["result"]["signature"] == Json::array({2, 2, 3}));

  Json j = tiny_job();
  j["systems"] = Json::array({j["system"], j["system"]});
  Json basket = report_basket(load_job(j), 1);
  CHECK(basket["result"]["singular_points"].get<long long>() > 0);
  Json surface = report_surface(load_job(j), 1);
  long long K2 = surface["result"]["K2"].get<long long>();
  long long c2 = surface["result"]["c2"].get<long long>();
  CHECK((K2 + c2) % 12 == 0);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  Json j = tiny_job();
  j["systems"] = Json::array({j["system"], j["system"]});
  LoadedJob job = load_job(j);
  CHECK(render_report(report_twists(job, 1)) == render_report(report_twists(job, 4)));
  CHECK(render_report(report_surface(job, 1)) == render_report(report_surface(load_job(j), 1)));
}

TEST_CASE("no floats appear in rendered reports") {
  Json j = tiny_job();
  j["systems"] = Json::array({j["system"], j["system"]});
  std::string text = render_report(report_basket(load_job(j), 1));
  // the tool version string is the only legitimate dotted token
  for (std::string::size_type p = text.find(kToolVersion); p != std::string::npos;
       p = text.find(kToolVersion))
    text.erase(p, std::string(kToolVersion).size());
  CHECK(text.find('.') == std::string::npos);  // exact integers and "p/q" only
}

TEST_CASE("bundled corpus matches its golden reports") {
  Json result = verify_bundled(JOBS_DIR, 1);
  INFO(render_report(result));
  CHECK(result["result"]["all_match"] == true);
  CHECK(result["result"]["cases"].size() >= 10);
}
