// oseg: command-line front end.
//
// Exit codes: 0 success, 1 usage, 2 invalid input, 3 counterexample found
// (verify) or no match (search --first).

#include <algorithm>   // for max
#include <atomic>      // for atomic
#include <cstdint>     // for uint64_t
#include <filesystem>  // for exists
#include <fstream>     // for ifstream, ofstream
#include <iostream>    // for cout, cerr
#include <iterator>    // for istreambuf_iterator
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <thread>      // for thread
#include <vector>      // for vector

#include "CLI11.hpp"

#include "oseg/decomposition.hpp"
#include "oseg/enumeration.hpp"
#include "oseg/ideals.hpp"
#include "oseg/io.hpp"
#include "oseg/property.hpp"
#include "oseg/regularity.hpp"
#include "oseg/relations.hpp"
#include "oseg/sweep.hpp"
#include "oseg/theorems.hpp"

namespace {

  using oseg::json;

  constexpr int exit_ok             = 0;
  constexpr int exit_usage          = 1;
  constexpr int exit_invalid        = 2;
  constexpr int exit_counterexample = 3;

  struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  std::string slurp(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InvalidInput("cannot read " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  ////////////////////////////////////////////////////////////////////////
  // validate
  ////////////////////////////////////////////////////////////////////////

  int run_validate(std::string const& path) {
    auto const result = oseg::read_structure(slurp(path));
    if (result.valid()) {
      std::cout << "valid\n";
      return exit_ok;
    }
    for (auto const& v : result.violations) {
      std::cout << oseg::to_string(v) << '\n';
    }
    return exit_invalid;
  }

  ////////////////////////////////////////////////////////////////////////
  // analyze
  ////////////////////////////////////////////////////////////////////////

  json subset_json(oseg::ElementSubset const& A) {
    return json(A.elements());
  }

  json classes_json(std::vector<oseg::ElementSubset> const& classes) {
    json result = json::array();
    for (auto const& c : classes) {
      result.push_back(subset_json(c));
    }
    return result;
  }

  json analyze_report(oseg::OrderedSemigroup const& S,
                      oseg::RvReading               reading,
                      std::size_t                   jobs) {
    auto const atoms = oseg::property_atoms();
    // atom values are computed in parallel into fixed slots
    std::vector<char> values(atoms.size());
    {
      std::atomic<std::size_t> next{0};
      auto                     worker = [&] {
        for (auto i = next++; i < atoms.size(); i = next++) {
          values[i] = atoms[i].holds(S, reading) ? 1 : 0;
        }
      };
      std::vector<std::thread> pool;
      for (std::size_t t = 1; t < std::max<std::size_t>(jobs, 1); ++t) {
        pool.emplace_back(worker);
      }
      worker();
      for (auto& t : pool) {
        t.join();
      }
    }

    json report;
    report["structure"] = oseg::to_json_value(S);
    json atoms_json     = json::object();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      atoms_json[std::string(atoms[i].name)] = values[i] != 0;
    }
    report["atoms"] = atoms_json;

    json sets;
    sets["regular"]     = subset_json(oseg::regular_elements(S));
    sets["idempotents"] = subset_json(oseg::ordered_idempotents(S));
    sets["pi-regular"]  = subset_json(oseg::pi_regular_set(S));
    sets["pi-intra"]    = subset_json(oseg::pi_intra_set(S));
    sets["rv"]          = subset_json(oseg::rv_set(S, reading));
    sets["pi-rv"]       = subset_json(oseg::pi_rv_set(S, reading));
    report["sets"]      = sets;

    json green = json::object();
    for (auto kind : {oseg::GreenKind::L,
                      oseg::GreenKind::R,
                      oseg::GreenKind::J,
                      oseg::GreenKind::H}) {
      green[oseg::to_string(kind)] = classes_json(oseg::green(S, kind).classes());
    }
    if (oseg::is_pi_regular(S)) {
      for (auto kind : {oseg::GreenKind::L_star,
                        oseg::GreenKind::R_star,
                        oseg::GreenKind::J_star,
                        oseg::GreenKind::H_star}) {
        green[oseg::to_string(kind)]
            = classes_json(oseg::green_star(S, kind).classes());
      }
    }
    report["green"]  = green;
    report["kernel"] = subset_json(oseg::kernel(S));
    report["least-csl-congruence"]
        = classes_json(oseg::least_complete_semilattice_congruence(S)
                           .partition.classes());
    return report;
  }

  void print_analyze_text(json const& report) {
    std::cout << "structure: " << report["structure"].dump() << '\n';
    for (auto const& [name, value] : report["atoms"].items()) {
      std::cout << name << ": " << (value.get<bool>() ? "yes" : "no") << '\n';
    }
    for (auto const& [name, value] : report["sets"].items()) {
      std::cout << name << ": " << value.dump() << '\n';
    }
    for (auto const& [name, value] : report["green"].items()) {
      std::cout << "green " << name << ": " << value.dump() << '\n';
    }
    std::cout << "kernel: " << report["kernel"].dump() << '\n';
    std::cout << "least-csl-congruence: "
              << report["least-csl-congruence"].dump() << '\n';
  }

  int run_analyze(std::string const& path,
                  bool               as_json,
                  std::size_t        jobs,
                  oseg::RvReading    reading) {
    auto result = oseg::read_structure(slurp(path));
    if (!result.valid()) {
      for (auto const& v : result.violations) {
        std::cerr << oseg::to_string(v) << '\n';
      }
      return exit_invalid;
    }
    auto const report = analyze_report(*result.structure, reading, jobs);
    if (as_json) {
      std::cout << report.dump() << '\n';
    } else {
      print_analyze_text(report);
    }
    return exit_ok;
  }

  ////////////////////////////////////////////////////////////////////////
  // enumerate
  ////////////////////////////////////////////////////////////////////////

  struct EnumerateArgs {
    std::size_t   order = 1;
    std::string   dedup = "raw";
    std::string   out;
    std::string   checkpoint;
    std::uint64_t limit      = 0;  // 0 = no limit
    std::uint64_t checkpoint_every = 10000;
  };

  void write_checkpoint(std::string const&             path,
                        oseg::EnumerationCursor const& cursor) {
    auto const tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << cursor.to_json().dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
  }

  int run_enumerate(EnumerateArgs const& args) {
    auto const dedup  = oseg::dedup_from_string(args.dedup);
    bool       resume = false;
    oseg::EnumerationCursor cursor{args.order, dedup, {}, 0, 0, false};
    if (!args.checkpoint.empty() && std::filesystem::exists(args.checkpoint)) {
      cursor = oseg::EnumerationCursor::from_json(
          json::parse(slurp(args.checkpoint)));
      if (cursor.order != args.order || cursor.dedup != dedup) {
        throw InvalidInput("checkpoint " + args.checkpoint
                           + " is for a different order or dedup mode");
      }
      resume = true;
    }
    oseg::StructureEnumerator source(cursor);

    std::ofstream file;
    if (!args.out.empty()) {
      file.open(args.out, resume ? std::ios::app : std::ios::trunc);
      if (!file) {
        throw InvalidInput("cannot write " + args.out);
      }
    }
    std::ostream& out = args.out.empty() ? std::cout : file;

    std::uint64_t produced = 0;
    while (args.limit == 0 || produced < args.limit) {
      auto S = source.next();
      if (!S) {
        break;
      }
      out << oseg::to_json(*S) << '\n';
      ++produced;
      if (!args.checkpoint.empty() && produced % args.checkpoint_every == 0) {
        out.flush();
        write_checkpoint(args.checkpoint, source.cursor());
      }
    }
    out.flush();
    if (!args.checkpoint.empty()) {
      write_checkpoint(args.checkpoint, source.cursor());
    }
    return exit_ok;
  }

  ////////////////////////////////////////////////////////////////////////
  // verify
  ////////////////////////////////////////////////////////////////////////

  struct VerifyArgs {
    std::size_t              order = 2;
    std::string              dedup = "raw";
    std::vector<std::string> theorems;
    bool                     all    = false;
    std::size_t              jobs   = 1;
    bool                     strict = false;
  };

  int run_verify(VerifyArgs const& args, oseg::RvReading reading) {
    oseg::VerifyOptions options;
    options.order         = args.order;
    options.dedup         = oseg::dedup_from_string(args.dedup);
    options.theorem_ids   = args.all ? std::vector<std::string>{} : args.theorems;
    options.jobs          = args.jobs;
    options.strict        = args.strict;
    options.check.reading = reading;
    for (auto const& id : options.theorem_ids) {
      (void) oseg::theorem_info(id);
    }

    auto const summary = oseg::run_verify(
        options, [](oseg::VerifyFinding const& f, bool warning) {
          std::cout << (warning ? "WARNING" : "COUNTEREXAMPLE") << ' '
                    << oseg::to_json(f.structure) << '\n';
          for (auto const& r : f.reports) {
            std::cout << "  " << r.theorem_id << ' ' << r.to_json().dump()
                      << '\n';
          }
        });

    std::cout << "verify order=" << args.order << " dedup=" << args.dedup
              << " theorems="
              << (options.theorem_ids.empty() ? oseg::catalog().size()
                                              : options.theorem_ids.size())
              << " structures=" << summary.structures
              << " checks=" << summary.checks
              << " skipped=" << summary.skipped
              << " counterexamples=" << summary.counterexamples.size()
              << " warnings=" << summary.warnings.size() << '\n';
    std::cout << (summary.passed() ? "consistent" : "COUNTEREXAMPLE") << '\n';
    return summary.passed() ? exit_ok : exit_counterexample;
  }

  ////////////////////////////////////////////////////////////////////////
  // search
  ////////////////////////////////////////////////////////////////////////

  struct SearchArgs {
    std::size_t order = 2;
    std::string dedup = "raw";
    std::string where;
    bool        first = false;
    bool        count = false;
    std::size_t jobs  = 1;
  };

  int run_search(SearchArgs const& args, oseg::RvReading reading) {
    oseg::PropertyExpr expr;
    try {
      expr = oseg::parse_property_expr(args.where);
    } catch (oseg::Error const& e) {
      std::cerr << "oseg: " << e.what() << '\n';
      return exit_invalid;
    }
    oseg::SearchOptions options;
    options.order              = args.order;
    options.dedup              = oseg::dedup_from_string(args.dedup);
    options.jobs               = args.jobs;
    options.first              = args.first;
    options.evaluation.reading = reading;

    auto const matches
        = oseg::run_search(options, expr, [&](oseg::OrderedSemigroup const& S) {
            if (!args.count) {
              std::cout << oseg::to_json(S) << '\n';
            }
          });
    if (args.count) {
      std::cout << matches << '\n';
    }
    if (args.first && matches == 0) {
      std::cerr << "oseg: no structure of order " << args.order
                << " satisfies " << oseg::print(expr) << '\n';
      return exit_counterexample;
    }
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ordered semigroups: properties, enumeration and "
               "theorem verification"};
  app.require_subcommand(1);
  bool rv_vacuous = false;
  app.add_flag("--rv-vacuous",
               rv_vacuous,
               "Let elements without inverses belong to RV(S)");

  std::string file;
  auto*       validate = app.add_subcommand("validate", "Check the axioms");
  validate->add_option("file", file, "Structure JSON file")->required();

  bool        as_json = false;
  std::size_t analyze_jobs = 1;
  auto* analyze = app.add_subcommand("analyze", "Full property report");
  analyze->add_option("file", file, "Structure JSON file")->required();
  analyze->add_flag("--json", as_json, "Print the report as JSON");
  analyze->add_option("--jobs", analyze_jobs, "Worker threads")
      ->check(CLI::Range(1, 256));

  auto const dedup_check = CLI::IsMember({"raw", "iso"});
  auto const order_check = CLI::Range(1, static_cast<int>(oseg::max_enumeration_order));

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "Stream structures");
  enumerate->add_option("--order", enum_args.order, "Order")
      ->required()
      ->check(order_check);
  enumerate->add_option("--dedup", enum_args.dedup, "raw or iso")
      ->check(dedup_check);
  enumerate->add_option("--out", enum_args.out, "Output file");
  enumerate->add_option("--checkpoint",
                        enum_args.checkpoint,
                        "Cursor file, resumed from if present");
  enumerate->add_option("--limit", enum_args.limit, "Stop after N structures");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the theorem harness");
  verify->add_option("--order", verify_args.order, "Order")
      ->required()
      ->check(order_check);
  verify->add_option("--dedup", verify_args.dedup, "raw or iso")
      ->check(dedup_check);
  auto* theorem_opt = verify->add_option(
      "--theorem", verify_args.theorems, "Theorem id (repeatable)");
  auto* all_opt = verify->add_flag("--all", verify_args.all, "Every theorem");
  theorem_opt->excludes(all_opt);
  verify->add_option("--jobs", verify_args.jobs, "Worker threads")
      ->check(CLI::Range(1, 256));
  verify->add_flag(
      "--strict", verify_args.strict, "Count adapted theorems as failures");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Find matching structures");
  search->add_option("--order", search_args.order, "Order")
      ->required()
      ->check(order_check);
  search->add_option("--dedup", search_args.dedup, "raw or iso")
      ->check(dedup_check);
  search->add_option("--where", search_args.where, "Property expression")
      ->required();
  auto* first_opt
      = search->add_flag("--first", search_args.first, "Stop at the first");
  auto* count_opt
      = search->add_flag("--count", search_args.count, "Print the count");
  first_opt->excludes(count_opt);
  search->add_option("--jobs", search_args.jobs, "Worker threads")
      ->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }
  if (*verify && !verify_args.all && verify_args.theorems.empty()) {
    std::cerr << "oseg verify: one of --theorem or --all is required\n";
    return exit_usage;
  }

  auto const reading
      = rv_vacuous ? oseg::RvReading::vacuous : oseg::RvReading::nonempty;
  try {
    if (*validate) {
      return run_validate(file);
    }
    if (*analyze) {
      return run_analyze(file, as_json, analyze_jobs, reading);
    }
    if (*enumerate) {
      return run_enumerate(enum_args);
    }
    if (*verify) {
      return run_verify(verify_args, reading);
    }
    return run_search(search_args, reading);
  } catch (oseg::UnknownTheorem const& e) {
    std::cerr << "oseg: " << e.what() << '\n';
    return exit_usage;
  } catch (oseg::Error const& e) {
    std::cerr << "oseg: " << e.what() << '\n';
    return exit_invalid;
  } catch (InvalidInput const& e) {
    std::cerr << "oseg: " << e.what() << '\n';
    return exit_invalid;
  } catch (std::exception const& e) {
    std::cerr << "oseg: " << e.what() << '\n';
    return exit_invalid;
  }
}
