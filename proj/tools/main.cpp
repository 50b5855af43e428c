#include <chrono>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "extremal/rootgroups.hpp"
#include "extremal/smallgen.hpp"
#include "extremal/suites.hpp"

using namespace extremal;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  int rank = 0;
  long long characteristic = 0;
  int max_r = 4;
  bool json = false;
  bool heavy = false;
  bool timing = false;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::string which;
  std::string edges = "-2,-2,-2";
  std::string central = "0";
};

// "G2" or "G" with --rank.
std::pair<char, int> parse_type(const Options& o) {
  if (o.type.empty()) throw UsageError("--type is required");
  char t = static_cast<char>(std::toupper(static_cast<unsigned char>(o.type[0])));
  int rank = o.rank;
  if (o.type.size() > 1) {
    try {
      rank = std::stoi(o.type.substr(1));
    } catch (const std::exception&) {
      throw UsageError("cannot parse type " + o.type);
    }
  }
  if (rank <= 0) throw UsageError("rank missing: use --type G2 or --type G --rank 2");
  if (t == 'E' && rank == 8 && !o.heavy) throw UsageError("E8 is a long run; pass --heavy to allow it");
  return {t, rank};
}

const std::vector<std::pair<char, int>>& mingen_fleet() {
  static const std::vector<std::pair<char, int>> fleet = {
      {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 3}, {'B', 4}, {'C', 2}, {'C', 3},
      {'D', 4}, {'D', 5}, {'G', 2}, {'F', 4}, {'E', 6}, {'E', 7}};
  return fleet;
}

void print_text(std::ostream& os, const Report& r) {
  os << r.name << (r.pass() ? "  PASS" : "  FAIL") << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": " << c.actual;
    if (c.expected != "-" && c.expected != c.actual) os << " (expected " << c.expected << ")";
    os << "\n";
  }
}

int emit(const std::string& command, const nlohmann::json& params, const std::vector<Report>& reports,
         const Options& o, double ms) {
  bool pass = !reports.empty();
  for (const auto& r : reports) pass = pass && r.pass();
  if (o.json) {
    nlohmann::json j;
    j["command"] = command;
    j["parameters"] = params;
    j["checks"] = nlohmann::json::array();
    for (const auto& r : reports) {
      std::string prefix = reports.size() > 1 ? r.name + ": " : "";
      for (const auto& c : r.checks)
        j["checks"].push_back(
            {{"name", prefix + c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    }
    j["pass"] = pass;
    if (o.timing) j["runtime_ms"] = ms;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_text(std::cout, r);
    std::cout << "overall: " << (pass ? "PASS" : "FAIL") << "\n";
    if (o.timing) std::cout << "runtime_ms: " << ms << "\n";
  }
  return pass ? 0 : 1;
}

// Runs jobs with at most n in flight; results keep input order.
template <class F>
std::vector<Report> run_parallel(std::size_t count, int n, F job) {
  std::vector<Report> out(count);
  std::vector<std::future<void>> running;
  std::size_t next = 0;
  while (next < count || !running.empty()) {
    while (next < count && static_cast<int>(running.size()) < std::max(1, n)) {
      std::size_t i = next++;
      running.push_back(std::async(std::launch::async, [&, i] { out[i] = job(i); }));
    }
    running.front().get();
    running.erase(running.begin());
  }
  return out;
}

std::vector<Scalar> parse_scalars(const Field& f, const std::string& csv) {
  std::vector<Scalar> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(f.parse(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie algebras generated by extremal elements: exact checks"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* c, bool typed) {
    if (typed) {
      c->add_option("--type", o.type, "Root system type, e.g. G2, or a letter with --rank");
      c->add_option("--rank", o.rank, "Rank when --type is a single letter");
    }
    c->add_option("--char", o.characteristic, "0 for the rationals, otherwise an odd prime");
    c->add_flag("--json", o.json, "Emit JSON");
    c->add_flag("--heavy", o.heavy, "Allow long runs (E8)");
    c->add_flag("--timing", o.timing, "Include runtime in the output");
    c->add_option("--jobs", o.jobs, "Parallel jobs for fleet runs");
    c->add_option("--seed", o.seed, "Seed for randomized probes");
  };
  auto* tables = app.add_subcommand("tables", "Dimension tables of L_r and R_r");
  tables->add_option("which", o.which, "lr, rr or rr-lengths")->required()->check(CLI::IsMember({"lr", "rr", "rr-lengths"}));
  tables->add_option("--max-r,--r", o.max_r, "Largest r (rr-lengths: the r)");
  add_common(tables, false);
  auto* mingen = app.add_subcommand("mingen", "Minimal extremal generating sets; --type fleet runs the table");
  add_common(mingen, true);
  auto* radicals = app.add_subcommand("radicals", "Extremal form, Killing form and the radical chain");
  add_common(radicals, true);
  auto* threegen = app.add_subcommand("threegen", "Three extremal generators with given parameters");
  threegen->add_option("--edges", o.edges, "f(x,y),f(x,z),f(y,z)");
  threegen->add_option("--central", o.central, "f(x,[y,z])");
  add_common(threegen, false);
  auto* rootgroups = app.add_subcommand("rootgroups", "Root group identities");
  add_common(rootgroups, true);
  auto* excheck = app.add_subcommand("extremal-check", "Extremality of root elements and the extremal form");
  add_common(excheck, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };
  try {
    Field f = Field::of_characteristic(o.characteristic);
    cli::ConstantCache cache(cli::ConstantCache::default_dir());
    nlohmann::json params = {{"char", o.characteristic}};
    std::vector<Report> reports;
    std::string command = app.get_subcommands().front()->get_name();

    if (command == "tables") {
      params = {{"which", o.which}, {"max_r", o.max_r}};
      reports.push_back(suites::tables(o.which, o.max_r));
    } else if (command == "mingen") {
      std::vector<std::pair<char, int>> rows;
      if (o.type == "fleet") rows = mingen_fleet();
      else rows.push_back(parse_type(o));
      if (o.type == "fleet" && o.heavy) rows.push_back({'E', 8});
      params["type"] = o.type;
      // Warm the cache serially so parallel jobs only read it.
      std::vector<ChevalleyAlgebra> algebras;
      for (auto [t, r] : rows) algebras.push_back(cache.algebra(t, r, f));
      reports = run_parallel(rows.size(), o.jobs, [&](std::size_t i) { return suites::mingen(algebras[i]); });
    } else if (command == "radicals") {
      auto [t, r] = parse_type(o);
      params["type"] = std::string(1, t) + std::to_string(r);
      reports.push_back(suites::radicals(cache.algebra(t, r, f)));
    } else if (command == "threegen") {
      auto e = parse_scalars(f, o.edges);
      if (e.size() != 3) throw UsageError("--edges needs three values");
      smallgen::TriangleParams p{e[0], e[1], e[2], f.parse(o.central)};
      params["edges"] = o.edges;
      params["central"] = o.central;
      reports.push_back(suites::threegen(p));
    } else if (command == "rootgroups") {
      auto [t, r] = parse_type(o);
      params["type"] = std::string(1, t) + std::to_string(r);
      params["seed"] = o.seed;
      reports.push_back(rootgroups::rootgroups_suite(cache.algebra(t, r, f), o.seed));
    } else if (command == "extremal-check") {
      auto [t, r] = parse_type(o);
      params["type"] = std::string(1, t) + std::to_string(r);
      reports.push_back(suites::extremal_check(cache.algebra(t, r, f)));
    }
    return emit(command, params, reports, o, elapsed());
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const InvalidRank& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedType& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const NotPrime& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const CharacteristicTwoUnsupported& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
