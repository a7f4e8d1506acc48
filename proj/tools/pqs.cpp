#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pqs/report.hpp"

namespace {

void emit(const pqs::Json& report, const std::string& out_path) {
  std::string text = pqs::render_report(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) pqs::fail_validation("cannot open output file: " + out_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of product-quotient surfaces from group data"};
  app.require_subcommand(1);

  std::string job_path, out_path, jobs_dir = "jobs";
  int threads = 1;

  struct Cmd {
    const char* name;
    const char* help;
    bool needs_job;
  };
  const Cmd cmds[] = {
      {"group", "order, conjugacy classes and element-order histogram", true},
      {"subgroups", "subgroup classes generated by at most two elements", true},
      {"cover", "validate a spherical system and print signature and genus", true},
      {"quotient", "induced monodromy and genus of the intermediate quotient", true},
      {"basket", "basket of singularities and k/e/B/D for a pair of systems", true},
      {"surface", "full surface invariants for a pair of systems", true},
      {"pi1", "search for a good-presentation certificate of trivial pi_1", true},
      {"twists", "invariant sweep over ordered pairs from the system lists", true},
      {"verify-paper", "run the bundled cases and diff against golden reports", false},
  };
  for (const Cmd& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (c.needs_job)
      sub->add_option("job", job_path, "job file (JSON, schema 1)")->required();
    else
      sub->add_option("--dir", jobs_dir, "directory with manifest.json and the corpus");
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->add_option("--threads", threads, "worker threads (results independent of N)")
        ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
    const std::string cmd = app.get_subcommands().front()->get_name();
    std::cerr << "pqs: running '" << cmd << "'" << std::endl;

    pqs::Json report;
    if (cmd == "verify-paper") {
      report = pqs::verify_bundled(jobs_dir, threads);
    } else {
      pqs::LoadedJob job = pqs::load_job(pqs::load_json_file(job_path));
      if (cmd == "group") report = pqs::report_group(job);
      else if (cmd == "subgroups") report = pqs::report_subgroups(job);
      else if (cmd == "cover") report = pqs::report_cover(job);
      else if (cmd == "quotient") report = pqs::report_quotient(job);
      else if (cmd == "basket") report = pqs::report_basket(job, threads);
      else if (cmd == "surface") report = pqs::report_surface(job, threads);
      else if (cmd == "pi1") report = pqs::report_pi1(job, threads);
      else if (cmd == "twists") report = pqs::report_twists(job, threads);
    }
    emit(report, out_path);
    if (cmd == "verify-paper" && !report["result"]["all_match"].get<bool>()) {
      std::cerr << "pqs: verify-paper found mismatches" << std::endl;
      return 3;
    }
    std::cerr << "pqs: done" << std::endl;
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const pqs::Error& e) {
    std::cerr << "pqs: error: " << e.what() << std::endl;
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "pqs: unexpected error: " << e.what() << std::endl;
    return 3;
  }
}
