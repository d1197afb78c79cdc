#include "mero/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "mero/enumeration.hpp"
#include "mero/reflection.hpp"
#include "mero/textio.hpp"

namespace mero {

namespace {

MerotopicStructure load_structure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_structure(in);
}

SetMap load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_map(in);
}

Subset parse_set_option(const std::string& text, GroundSet ground) {
  std::uint32_t bits = 0;
  std::string current;
  const auto flush = [&] {
    if (current.empty()) throw Error("malformed --set value");
    unsigned e = 0;
    for (char ch : current) {
      if (ch < '0' || ch > '9') throw Error("malformed --set value");
      e = e * 10 + static_cast<unsigned>(ch - '0');
      if (e > kMaxGroundSetSize) throw Error("--set element out of range");
    }
    if (e >= ground.size()) throw Error("--set element out of range");
    bits |= 1u << e;
    current.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (ch != ' ') {
      current += ch;
    }
  }
  if (!current.empty()) flush();
  return Subset(ground, bits);
}

std::string describe_map(const SetMap& map) {
  std::string out;
  for (unsigned x = 0; x < map.domain().size(); ++x) {
    if (x) out += ',';
    out += std::to_string(x) + "->" + std::to_string(map.apply(x));
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite-model workbench for merotopic and nearness spaces"};
  app.footer("Exit codes: 0 success, 1 verification found a violation, 2 usage or input error.");
  app.require_subcommand(1);
  int exit_code = 0;

  std::string check_path;
  auto* check = app.add_subcommand("check", "classify a structure as merotopic or nearness");
  check->add_option("file", check_path, "structure file")->required();
  check->callback([&] {
    out << (is_nearness(load_structure(check_path)) ? "nearness" : "merotopic") << "\n";
  });

  std::string reflect_path;
  ReflectAlgorithm algorithm = ReflectAlgorithm::kIterative;
  const std::map<std::string, ReflectAlgorithm> algorithm_names{
      {"iterative", ReflectAlgorithm::kIterative},
      {"maximal", ReflectAlgorithm::kMaximal},
      {"both", ReflectAlgorithm::kBoth}};
  auto* reflect_cmd =
      app.add_subcommand("reflect", "largest nearness structure inside the input");
  reflect_cmd->add_option("file", reflect_path, "structure file")->required();
  reflect_cmd->add_option("--algorithm", algorithm, "iterative|maximal|both (default iterative)")
      ->transform(CLI::CheckedTransformer(algorithm_names, CLI::ignore_case));
  reflect_cmd->callback(
      [&] { out << serialize_structure(reflect(load_structure(reflect_path), algorithm)); });

  std::string interior_path;
  std::string interior_set;
  auto* interior_cmd = app.add_subcommand("interior", "interior of a subset");
  interior_cmd->add_option("file", interior_path, "structure file")->required();
  interior_cmd->add_option("--set", interior_set, "comma-separated element indices")->required();
  interior_cmd->callback([&] {
    const MerotopicStructure mu = load_structure(interior_path);
    out << format_subset(interior(mu, parse_set_option(interior_set, mu.ground()))) << "\n";
  });

  std::string join_left;
  std::string join_right;
  auto* join_cmd = app.add_subcommand("join", "smallest structure containing both inputs");
  join_cmd->add_option("file1", join_left, "structure file")->required();
  join_cmd->add_option("file2", join_right, "structure file")->required();
  join_cmd->callback(
      [&] { out << serialize_structure(join(load_structure(join_left), load_structure(join_right))); });

  std::string initial_map_path;
  std::string initial_codomain_path;
  auto* initial_cmd =
      app.add_subcommand("initial", "coarsest domain structure making the map continuous");
  initial_cmd->add_option("--map", initial_map_path, "map file")->required();
  initial_cmd->add_option("--codomain", initial_codomain_path, "structure file")->required();
  initial_cmd->callback([&] {
    out << serialize_structure(
        initial_structure(load_map(initial_map_path), load_structure(initial_codomain_path)));
  });

  std::string uc_map_path;
  std::string uc_domain_path;
  std::string uc_codomain_path;
  auto* uc_cmd = app.add_subcommand("uc", "test a map for uniform continuity");
  uc_cmd->add_option("--map", uc_map_path, "map file")->required();
  uc_cmd->add_option("--domain", uc_domain_path, "structure file")->required();
  uc_cmd->add_option("--codomain", uc_codomain_path, "structure file")->required();
  uc_cmd->callback([&] {
    const bool continuous =
        uniformly_continuous(load_map(uc_map_path), load_structure(uc_domain_path),
                             load_structure(uc_codomain_path));
    out << (continuous ? "true" : "false") << "\n";
  });

  unsigned enumerate_n = 0;
  bool enumerate_covers = false;
  bool enumerate_structs = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list all covers or structures");
  enumerate_cmd->add_option("--n", enumerate_n, "ground set size")->required();
  enumerate_cmd->add_flag("--covers", enumerate_covers, "list canonical covers");
  enumerate_cmd->add_flag("--structures", enumerate_structs, "list merotopic structures");
  enumerate_cmd->callback([&] {
    if (enumerate_covers == enumerate_structs)
      throw Error("choose exactly one of --covers or --structures");
    const GroundSet ground(enumerate_n);
    if (enumerate_covers) {
      const std::vector<Cover> covers = enumerate_canonical_covers(ground);
      out << covers.size() << "\n";
      for (const Cover& c : covers) out << format_cover(c) << "\n";
    } else {
      const std::vector<MerotopicStructure> structures = enumerate_structures(ground);
      out << structures.size() << "\n";
      for (const MerotopicStructure& s : structures) out << format_basis(s) << "\n";
    }
  });

  unsigned verify_n = 0;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive bireflectivity sweep");
  verify_cmd->add_option("--n", verify_n, "maximum ground set size")->required();
  verify_cmd->callback([&] {
    if (verify_n < 1) throw Error("--n must be at least 1");
    bool all_ok = true;
    out << "n structures nearness passed failed\n";
    for (unsigned k = 1; k <= verify_n; ++k) {
      const GroundSet ground(k);
      const std::vector<MerotopicStructure> structures = enumerate_structures(ground);
      unsigned near = 0;
      unsigned passed = 0;
      unsigned failed = 0;
      for (const MerotopicStructure& mu : structures) {
        if (is_nearness(mu)) ++near;
        const ReflectionReport report = verify_bireflection(mu, verify_n);
        const bool ok =
            std::all_of(report.checks.begin(), report.checks.end(),
                        [](const UniversalPropertyCheck& c) { return c.passed; });
        if (ok) {
          ++passed;
        } else {
          ++failed;
          for (const UniversalPropertyCheck& c : report.checks)
            if (!c.passed) err << "FAIL n=" << k << " [" << format_basis(mu) << "] " << c.clause
                               << ": " << c.witness << "\n";
        }
      }
      out << k << " " << structures.size() << " " << near << " " << passed << " " << failed
          << "\n";
      if (failed) all_ok = false;
    }
    out << "result: " << (all_ok ? "PASS" : "FAIL") << "\n";
    if (!all_ok) exit_code = 1;
  });

  unsigned counterexample_n = 0;
  auto* counterexample_cmd = app.add_subcommand(
      "counterexample", "search for a non-nearness pullback of a merotopic structure");
  counterexample_cmd->add_option("--n", counterexample_n, "domain ground set size")->required();
  counterexample_cmd->callback([&] {
    const auto witness = find_counterexample(GroundSet(counterexample_n));
    if (!witness) {
      out << "none\n";
      return;
    }
    out << "n=" << witness->map.domain().size() << "\n";
    out << "m=" << witness->map.codomain().size() << "\n";
    out << "map: " << describe_map(witness->map) << "\n";
    out << "codomain: " << format_basis(witness->codomain_structure) << "\n";
    out << "initial: " << format_basis(witness->pullback) << "\n";
  });

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("mero");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace mero
