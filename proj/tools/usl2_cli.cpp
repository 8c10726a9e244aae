// usl2: blocks, filtrations and structural checks for reduced enveloping
// algebras of sl2 in odd characteristic.
//
//   usl2 blocks     --p 5 --chi zero
//   usl2 filtration --p 5 --chi zero --omega 1 --kind pf --format md
//   usl2 verify     --max-p 7 --chi zero,e

#include <atomic>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "usl2/report.hpp"

namespace {

using namespace usl2;

enum class Command { Blocks, Filtration, Verify };

struct Options {
  std::optional<std::uint32_t> p, max_p, a, omega;
  std::optional<std::string> alpha;
  std::string chi;
  std::vector<std::string> kinds;
  std::string format = "json";
  std::string out;
  unsigned jobs = 1;
  bool timings = false;
  bool corrupt = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

std::vector<JobSpec> expand(Command cmd, const Options& o) {
  std::vector<std::uint32_t> primes;
  if (o.p && o.max_p) throw UsageError("--p and --max-p are mutually exclusive");
  if (o.p) {
    primes.push_back(*o.p);
  } else if (o.max_p) {
    if (cmd != Command::Verify) throw UsageError("--max-p is only accepted by verify");
    if (*o.max_p < kMinPrime || *o.max_p > kMaxPrime)
      throw UsageError("--max-p must lie in " + std::to_string(kMinPrime) + ".." +
                       std::to_string(kMaxPrime));
    for (std::uint32_t q = kMinPrime; q <= *o.max_p; ++q)
      if (is_prime(q)) primes.push_back(q);
  } else {
    throw UsageError("one of --p or --max-p is required");
  }

  std::string chi_list = o.chi;
  if (chi_list.empty()) chi_list = cmd == Command::Verify ? "zero,e" : "zero";
  const auto tags = split(chi_list, ',');
  if (tags.empty()) throw UsageError("--chi is empty");
  if (tags.size() > 1 && cmd != Command::Verify)
    throw UsageError("a list of characters is only accepted by verify");

  std::vector<FiltrationKind> kinds;
  for (const auto& k : o.kinds) kinds.push_back(parse_filtration_kind(k));

  std::vector<JobSpec> specs;
  for (auto p : primes)
    for (const auto& tag : tags) {
      std::vector<std::optional<std::uint32_t>> params{std::nullopt};
      if (tag == "regular") {
        if (o.a) {
          params = {o.a};
        } else if (cmd == Command::Verify) {
          // every regular character up to conjugacy, where supported
          params.clear();
          if (o.max_p && p > kMaxRegularPrime) continue;
          for (std::uint32_t a = 1; a < p; ++a) params.push_back(a);
        } else {
          throw UsageError("--chi regular needs --a");
        }
      } else if (o.a) {
        throw UsageError("--a only applies to --chi regular");
      }
      for (const auto& a : params) {
        JobSpec s;
        s.p = p;
        s.chi = parse_character(tag, a);
        s.omega = o.omega;
        s.alpha = o.alpha;
        s.kinds = kinds;
        s.corrupt_idempotent = o.corrupt;
        validate(s);
        specs.push_back(std::move(s));
      }
    }
  return specs;
}

JobResult run_one(Command cmd, const JobSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  JobResult r;
  switch (cmd) {
    case Command::Blocks: r = run_blocks(spec); break;
    case Command::Filtration: r = run_filtration(spec); break;
    case Command::Verify: r = run_verify(spec); break;
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Runs the specs on up to `jobs` threads; results keep the order of `specs`.
std::vector<JobResult> run_all(Command cmd, const std::vector<JobSpec>& specs, unsigned jobs) {
  std::vector<JobResult> results(specs.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) results[i] = run_one(cmd, specs[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) results[i] = run_one(cmd, specs[i]);
  };
  std::vector<std::future<void>> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return results;
}

Json request_echo(const std::string& name, const Options& o) {
  Json j;
  j["command"] = name;
  j["p"] = o.p ? Json(*o.p) : Json(nullptr);
  j["max_p"] = o.max_p ? Json(*o.max_p) : Json(nullptr);
  j["chi"] = o.chi.empty() ? Json(nullptr) : Json(o.chi);
  j["a"] = o.a ? Json(*o.a) : Json(nullptr);
  j["omega"] = o.omega ? Json(*o.omega) : Json(nullptr);
  j["alpha"] = o.alpha ? Json(*o.alpha) : Json(nullptr);
  j["kind"] = o.kinds;
  return j;
}

int run(Command cmd, const std::string& name, const Options& o) {
  const auto specs = expand(cmd, o);
  Report report;
  report.command = name;
  report.request = request_echo(name, o);
  report.results = run_all(cmd, specs, o.jobs);

  std::string text;
  if (o.format == "json") text = render_json(report, o.timings);
  else if (o.format == "csv") text = render_csv(report, o.timings);
  else text = render_markdown(report, o.timings);

  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw UsageError("cannot open " + o.out + " for writing");
    f << text;
  }
  for (const auto& r : report.results)
    for (const auto& c : r.checks)
      if (!c.pass)
        std::cerr << "FAIL p=" << r.p << " chi=" << r.chi << (c.block.empty() ? "" : " " + c.block)
                  << " " << c.name << ": expected " << c.expected.dump() << ", computed "
                  << c.computed.dump() << "\n";
  return report.ok() ? 0 : 1;
}

void add_common(CLI::App* sub, Options& o, bool with_kind, bool with_max_p) {
  sub->add_option("--p", o.p, "odd prime characteristic");
  if (with_max_p) sub->add_option("--max-p", o.max_p, "run every odd prime up to this bound");
  sub->add_option("--chi", o.chi, "zero | e | regular (comma list for verify)");
  sub->add_option("--a", o.a, "parameter of a regular character, 1..p-1");
  auto* om = sub->add_option("--omega", o.omega, "block selector for chi = zero or e");
  auto* al = sub->add_option("--alpha", o.alpha, "block selector: Casimir scalar, integer or [c0,...]");
  om->excludes(al);
  if (with_kind)
    sub->add_option("--kind", o.kinds, "pf | int | sh (repeatable; default all)")
        ->check(CLI::IsMember({"pf", "int", "sh"}));
  sub->add_option("--format", o.format, "json | csv | md")->check(CLI::IsMember({"json", "csv", "md"}));
  sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  sub->add_option("--out", o.out, "write the report to this file");
  sub->add_flag("--timings", o.timings, "include wall times (output is then not reproducible)");
  sub->add_flag("--test-corrupt-idempotent", o.corrupt)->group("");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blocks, PBW filtrations and structure checks for U_chi(sl2)"};
  app.require_subcommand(1);
  Options o;
  auto* blocks = app.add_subcommand("blocks", "block labels, idempotents, dimensions");
  auto* filtration = app.add_subcommand("filtration", "pf / int / sh filtration tables");
  auto* verify = app.add_subcommand("verify", "run the full check suite");
  add_common(blocks, o, false, false);
  add_common(filtration, o, true, false);
  add_common(verify, o, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (blocks->parsed()) return run(Command::Blocks, "blocks", o);
    if (filtration->parsed()) return run(Command::Filtration, "filtration", o);
    return run(Command::Verify, "verify", o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
