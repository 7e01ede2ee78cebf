// Batch front-end: one job document in, one report out, or a corpus run.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "arcstab/jobs.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact stability certificates for pairs, arcs and toric models"};
  std::string input;
  std::string out_path;
  std::string corpus;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> seed;
  bool timing = false;
  app.add_option("job", input, "Job document (JSON); '-' or omitted reads stdin");
  app.add_option("--budget", budget, "Step budget for Groebner reductions and simplex pivots");
  app.add_option("--seed", seed, "Seed for sampled arcs and probe points");
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--corpus", corpus, "Run every job of an acceptance corpus directory");
  app.add_flag("--timing", timing, "Include wall-clock time in reports");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  arcstab::RunOptions opts{budget, seed, timing};
  std::ostringstream report;
  int code = 0;
  if (!corpus.empty()) {
    auto summary = arcstab::run_corpus(corpus, opts);
    if (summary.exit_code == 2) std::cerr << "no job documents in " << corpus << '\n';
    report << arcstab::format_summary(summary);
    code = summary.exit_code;
  } else {
    std::stringstream buf;
    if (input.empty() || input == "-") {
      buf << std::cin.rdbuf();
    } else {
      std::ifstream in(input);
      if (!in) {
        std::cerr << "cannot open " << input << '\n';
        return 2;
      }
      buf << in.rdbuf();
    }
    auto outcome = arcstab::run_job_text(buf.str(), opts);
    report << outcome.report.dump(2) << '\n';
    code = outcome.exit_code;
    if (code != 0) std::cerr << outcome.report["error"]["message"].get<std::string>() << '\n';
  }
  if (out_path.empty()) {
    std::cout << report.str();
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << '\n';
      return 2;
    }
    out << report.str();
  }
  return code;
}
