#include "wrt/cli.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wrt/dot.hpp"
#include "wrt/generators.hpp"
#include "wrt/json_io.hpp"
#include "wrt/oracle.hpp"
#include "wrt/partition.hpp"
#include "wrt/witness.hpp"

namespace wrt {
namespace {

// Input problems that map to exit code 1.
class BadInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw BadInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

RootedTree load_tree(const std::string& path, std::istream& in) {
  try {
    return parse_tree(slurp(path, in));
  } catch (const TreeError& e) {
    throw BadInput(path + ": " + e.what());
  }
}

Rational parse_fraction(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw BadInput(std::string("bad ") + what + " '" + text + "', expected p/q");
  }
}

long max_rss_kb() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heavy root paths and unrelated vertex sets in weighted rooted trees", "wrt"};
  app.require_subcommand(1);

  std::string tree_path;
  std::string witness_path;
  std::string threshold_text = "1/3";
  std::size_t max_n = 15;
  unsigned jobs = 1;
  int tight_m = 2;
  std::string tight_eps;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_weight = 1000;
  std::size_t repeat = 5;
  bool with_trace = false;

  auto* solve_cmd = app.add_subcommand("solve", "Print a witness for the tree as JSON");
  solve_cmd->add_option("file", tree_path, "Tree file, '-' for stdin")->required();
  solve_cmd->add_option("--threshold", threshold_text, "Fraction of the total weight, p/q");

  auto* verify_cmd = app.add_subcommand("verify", "Check a witness; exit 2 with a report if invalid");
  verify_cmd->add_option("file", tree_path, "Tree file, '-' for stdin")->required();
  verify_cmd->add_option("witness", witness_path, "Witness JSON file")->required();
  verify_cmd->add_option("--threshold", threshold_text, "Fraction of the total weight, p/q");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive best path and best unrelated pair");
  oracle_cmd->add_option("file", tree_path, "Tree file, '-' for stdin")->required();
  oracle_cmd->add_option("--max-n", max_n, "Refuse trees with more vertices");
  oracle_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a tree in the tree file format");
  gen_cmd->require_subcommand(1);
  auto* tight_cmd = gen_cmd->add_subcommand("tight", "Tight caterpillar family");
  tight_cmd->add_option("--m", tight_m, "Spine length, >= 2")->required();
  tight_cmd->add_option("--eps", tight_eps, "Spine weight, p/q")->required();
  auto* random_cmd = gen_cmd->add_subcommand("random", "Uniform-attachment random tree");
  random_cmd->add_option("--n", n, "Vertex count")->required();
  random_cmd->add_option("--seed", seed, "PRNG seed")->required();
  random_cmd->add_option("--max-weight", max_weight, "Integer weights in 0..K")->required();

  auto* bench_cmd = app.add_subcommand("bench", "Time solve on a random tree");
  bench_cmd->add_option("--n", n, "Vertex count")->required();
  bench_cmd->add_option("--seed", seed, "PRNG seed")->required();
  bench_cmd->add_option("--repeat", repeat, "Timed repetitions")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--max-weight", max_weight, "Integer weights in 0..K");

  auto* dot_cmd = app.add_subcommand("export-dot", "Render the tree as Graphviz DOT");
  dot_cmd->add_option("file", tree_path, "Tree file, '-' for stdin")->required();
  dot_cmd->add_flag("--with-trace", with_trace, "Colour vertices by the partition run");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (solve_cmd->parsed()) {
      const RootedTree tree = load_tree(tree_path, in);
      const Rational threshold = parse_fraction(threshold_text, "threshold");
      try {
        out << witness_to_json(solve(tree, threshold)) << '\n';
      } catch (const NoWitness& e) {
        err << "no witness: " << e.what() << '\n';
        return kExitVerifyFailed;
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const RootedTree tree = load_tree(tree_path, in);
      const Rational threshold = parse_fraction(threshold_text, "threshold");
      Witness witness;
      try {
        witness = witness_from_json(slurp(witness_path, in));
      } catch (const std::invalid_argument& e) {
        throw BadInput(witness_path + ": " + e.what());
      }
      const VerifyReport report = verify(tree, witness, threshold);
      if (report.ok()) {
        out << "valid\n";
        return kExitOk;
      }
      out << "invalid\n" << report.to_string();
      return kExitVerifyFailed;
    }

    if (oracle_cmd->parsed()) {
      const RootedTree tree = load_tree(tree_path, in);
      out << oracle_to_json(oracle_best_pair(tree, {max_n, jobs})) << '\n';
      return kExitOk;
    }

    if (tight_cmd->parsed()) {
      out << to_text(gen_tight_family({tight_m, parse_fraction(tight_eps, "eps")}));
      return kExitOk;
    }

    if (random_cmd->parsed()) {
      out << to_text(gen_random_tree(n, seed, max_weight));
      return kExitOk;
    }

    if (bench_cmd->parsed()) {
      const RootedTree tree = gen_random_tree(n, seed, max_weight);
      std::vector<std::int64_t> samples;
      std::string kind;
      for (std::size_t r = 0; r < repeat; ++r) {
        const auto start = std::chrono::steady_clock::now();
        const Witness w = solve(tree);
        const auto stop = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
        kind = std::holds_alternative<PathWitness>(w) ? "path" : "pair";
      }
      std::sort(samples.begin(), samples.end());
      const std::int64_t median = samples[samples.size() / 2];
      const double per_sec = median > 0 ? static_cast<double>(n) * 1e9 / static_cast<double>(median) : 0.0;
      out << "n=" << n << " seed=" << seed << " repeat=" << repeat << " witness=" << kind
          << " median_ns=" << median << " min_ns=" << samples.front() << " max_ns=" << samples.back()
          << " vertices_per_sec=" << static_cast<std::int64_t>(per_sec) << " max_rss_kb=" << max_rss_kb() << '\n';
      return kExitOk;
    }

    if (dot_cmd->parsed()) {
      const RootedTree tree = load_tree(tree_path, in);
      if (with_trace) {
        const PartitionResult partition = build_partition(tree);
        out << to_dot(tree, &partition);
      } else {
        out << to_dot(tree);
      }
      return kExitOk;
    }
  } catch (const TheoremViolation& e) {
    err << "THEOREM VIOLATION: " << e.what() << "\n"
        << "threshold " << e.threshold().to_string() << ", offending tree follows:\n"
        << to_text(e.tree()) << "partition: " << partition_to_json(e.partition(), true) << '\n';
    return kExitTheoremViolation;
  } catch (const BadInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  err << app.help();
  return kExitBadInput;
}

}  // namespace wrt
