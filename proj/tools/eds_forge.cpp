#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "eds/job.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Divisibility sequences of points on elliptic curves over F_p(t)"};
  std::string command;
  std::string input;
  int N = 0;
  std::uint64_t seed = 0;
  bool serial = false;
  app.add_option("command", command, "table, local, zsigmondy, verify or constant")
      ->required()
      ->check(CLI::IsMember({"table", "local", "zsigmondy", "verify", "constant"}));
  app.add_option("--input", input, "job file; standard input when omitted");
  app.add_option("--N", N, "sequence bound, overrides the job's N")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for randomized factorization");
  app.add_flag("--serial", serial, "use the serial reference kernels");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  eds::JobSpec job;
  try {
    if (command != "verify") {
      std::string text;
      if (input.empty()) {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(input);
        if (!in) {
          std::cerr << "cannot read " << input << "\n";
          return 2;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      job = eds::parse_job(text);
    }
  } catch (const eds::Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  job.command = command;
  if (N > 0) job.N = N;

  eds::RunOptions opt;
  opt.seed = seed;
  opt.schedule = serial ? eds::Schedule::Serial : eds::Schedule::Parallel;
  eds::CommandResult r = eds::run_command(job, opt);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
