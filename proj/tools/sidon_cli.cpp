// sidon: extract, verify, oracle, singer, bench.
//
// Exit codes: 0 success / verified, 1 verification failure, 2 usage or input
// error, 3 internal invariant violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sidon/bench.hpp"
#include "sidon/error.hpp"
#include "sidon/extract.hpp"
#include "sidon/geometry.hpp"
#include "sidon/io.hpp"
#include "sidon/oracle.hpp"
#include "sidon/report.hpp"
#include "sidon/singer.hpp"
#include "sidon/verify.hpp"

namespace {

using namespace sidon;

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct Common {
  std::string format = "json";
  std::string output;
};

// Writes to --output (relative to $SIDON_OUTPUT_DIR when set), to
// $SIDON_OUTPUT_DIR/<command>.<format> when only the variable is set, or to
// stdout otherwise.
void emit(const Common& common, const std::string& command, const std::string& body) {
  const char* dir = std::getenv("SIDON_OUTPUT_DIR");
  std::filesystem::path path;
  if (!common.output.empty()) {
    path = common.output;
    if (dir && *dir && path.is_relative()) path = std::filesystem::path(dir) / path;
  } else if (dir && *dir) {
    path = std::filesystem::path(dir) / (command + "." + common.format);
  } else {
    std::cout << body;
    return;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_params, "cannot write '" + path.string() + "'");
  out << body;
}

unsigned kind_to_g(const std::string& kind, unsigned g) {
  if (kind == "sidon") return 1;
  if (g == 0) throw Error(Errc::invalid_params, "g must be at least 1");
  return g;
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("-o,--output", common.output, "write the report to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified Sidon and B2[g] subset extraction"};
  app.require_subcommand(1);

  Common common;

  // extract
  auto* extract = app.add_subcommand("extract", "extract a certified Sidon / B2[g] subset");
  ExtractOptions eopts;
  std::string c_text = "3";
  std::uint64_t seed = 0;
  bool points = false;
  std::string input;
  extract->add_option("--g", eopts.g, "B2[g] parameter (1: Sidon)")->check(CLI::PositiveNumber);
  extract->add_option("--c", c_text, "modulus constant, rational > 1");
  extract->add_option("--trials", eopts.trials, "compression trials")->check(CLI::PositiveNumber);
  extract->add_option("--seed", seed, "64-bit seed");
  extract->add_option("--threads", eopts.threads, "worker threads (0: all cores)");
  extract->add_flag("--stop-at-target", eopts.stop_at_target,
                    "stop at the first trial reaching the averaging bound");
  extract->add_flag("--points", points, "input holds rational points, one per line");
  extract->add_option("file", input, "input file")->required();
  add_common(extract, common);

  // verify
  auto* verify = app.add_subcommand("verify", "check a set for the Sidon / B2[g] property");
  std::string kind = "sidon";
  unsigned g = 1;
  std::string mod_text;
  verify->add_option("--kind", kind)->check(CLI::IsMember({"sidon", "b2g"}))->required();
  verify->add_option("--g", g)->check(CLI::PositiveNumber);
  verify->add_option("--mod", mod_text, "work in Z_M (values are reduced mod M)");
  verify->add_option("file", input)->required();
  add_common(verify, common);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact maximum subset by branch and bound");
  std::uint64_t budget = kDefaultOracleBudget;
  oracle->add_option("--kind", kind)->check(CLI::IsMember({"sidon", "b2g"}))->required();
  oracle->add_option("--g", g)->check(CLI::PositiveNumber);
  oracle->add_option("--budget", budget, "node budget")->check(CLI::PositiveNumber);
  oracle->add_option("file", input)->required();
  add_common(oracle, common);

  // singer
  auto* singer = app.add_subcommand("singer", "planar difference set and its covering");
  std::uint64_t q = 0;
  std::uint64_t cover_g = 1;
  singer->add_option("--q", q, "prime order")->required();
  singer->add_option("--g", cover_g)->check(CLI::PositiveNumber);
  add_common(singer, common);

  // bench
  auto* bench = app.add_subcommand("bench", "run the pipeline over a generated family");
  BenchFamily family;
  BenchConfig bconf;
  std::size_t split = 0;
  std::uint64_t separation = 0;
  bench->add_option("--family", family.name)->required();
  bench->add_option("--n", family.n)->required()->check(CLI::PositiveNumber);
  bench->add_option("--seed", bconf.seed);
  bench->add_option("--instances", bconf.instances)->check(CLI::PositiveNumber);
  bench->add_option("--trials", bconf.extract.trials)->check(CLI::PositiveNumber);
  bench->add_option("--g", bconf.extract.g)->check(CLI::PositiveNumber);
  bench->add_option("--c", c_text);
  bench->add_option("--workers", bconf.workers, "instance-level workers (0: all cores)");
  bench->add_option("--threads", bconf.extract.threads, "threads per extraction");
  bench->add_option("--budget", bconf.oracle_budget)->check(CLI::PositiveNumber);
  bench->add_option("--gap", family.gap, "dominoes: minimum pair spacing");
  bench->add_option("--ratio", family.ratio, "geometric: common ratio");
  auto* split_opt = bench->add_option("--split", split, "two-intervals: first size");
  auto* sep_opt = bench->add_option("--separation", separation, "two-intervals: gap");
  bench->add_flag("--with-oracle", bconf.with_oracle, "run the oracle for every n");
  bench->add_flag("--timing", bconf.timing, "add a wall-time column");
  add_common(bench, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    const Format fmt = parse_format(common.format);
    if (extract->parsed()) {
      eopts.c = parse_rational(c_text);
      const RandomStream source(seed);
      if (points) {
        const PointInput in = read_points(input);
        PointExtraction res = extract_points(in.points, eopts, source);
        res.report.dedup_removed += in.dedup_removed;
        emit(common, "extract", render(res, fmt));
      } else {
        const IntegerInput in = read_integers(input);
        ExtractionReport rep = extract_b2g(in.values, eopts, source);
        rep.dedup_removed = in.dedup_removed;
        emit(common, "extract", render(rep, fmt));
      }
      return kOk;
    }
    if (verify->parsed()) {
      VerifyOutcome out;
      out.g = kind_to_g(kind, g);
      IntegerInput in = read_integers(input);
      if (!mod_text.empty()) {
        const Integer m = parse_integer(mod_text);
        if (m < 1) throw Error(Errc::invalid_params, "modulus must be positive");
        for (Integer& x : in.values) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        in.dedup_removed += sort_dedupe(in.values);
        out.modulus = m;
      }
      out.n = in.values.size();
      out.dedup_removed = in.dedup_removed;
      out.verdict = out.g == 1 ? is_sidon(in.values, out.modulus)
                               : is_b2g(in.values, out.g, out.modulus);
      emit(common, "verify", render(out, fmt));
      if (out.verdict) std::cerr << "witness: " << out.verdict->describe() << '\n';
      return out.verdict ? kRejected : kOk;
    }
    if (oracle->parsed()) {
      const unsigned og = kind_to_g(kind, g);
      const IntegerInput in = read_integers(input);
      emit(common, "oracle", render(max_b2g(in.values, og, budget), og, fmt));
      return kOk;
    }
    if (singer->parsed()) {
      const PlanarDifferenceSet d = singer_difference_set(q);
      emit(common, "singer", render(d, lifted_cover(d, cover_g), fmt));
      return kOk;
    }
    if (bench->parsed()) {
      bconf.extract.c = parse_rational(c_text);
      if (*split_opt) family.split = split;
      if (*sep_opt) family.separation = separation;
      emit(common, "bench", render(run_bench(family, bconf), fmt, bconf.timing));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
    return e.is_internal() ? kInternal : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
