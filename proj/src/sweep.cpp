#include "oseg/sweep.hpp"

#include <algorithm>  // for all_of

namespace oseg {

  namespace {
    struct VerifyOutcome {
      std::uint64_t              checks  = 0;
      std::uint64_t              skipped = 0;
      std::vector<TheoremReport> failing;
    };
  }  // namespace

  VerifySummary
  run_verify(VerifyOptions const&                            options,
             std::function<void(VerifyFinding const&, bool)> on_finding) {
    std::vector<TheoremInfo const*> theorems;
    if (options.theorem_ids.empty()) {
      for (auto const& info : catalog()) {
        theorems.push_back(&info);
      }
    } else {
      for (auto const& id : options.theorem_ids) {
        theorems.push_back(&theorem_info(id));
      }
    }

    auto work = [&](OrderedSemigroup const& S) {
      VerifyOutcome out;
      for (auto const* info : theorems) {
        if (!precondition_met(S, *info)) {
          ++out.skipped;
          continue;
        }
        ++out.checks;
        auto report = check(S, info->id, options.check);
        if (!report.consistent()) {
          out.failing.push_back(std::move(report));
        }
      }
      return out;
    };

    VerifySummary       summary;
    StructureEnumerator source(options.order, options.dedup);
    parallel_sweep(
        source,
        options.jobs,
        work,
        [&](OrderedSemigroup const& S, VerifyOutcome out) {
          ++summary.structures;
          summary.checks += out.checks;
          summary.skipped += out.skipped;
          if (out.failing.empty()) {
            return true;
          }
          VerifyFinding finding{S, std::move(out.failing), false};
          finding.adapted_only
              = std::all_of(finding.reports.begin(),
                            finding.reports.end(),
                            [](auto const& r) { return r.adapted; });
          bool const is_warning = finding.adapted_only && !options.strict;
          if (on_finding) {
            on_finding(finding, is_warning);
          }
          (is_warning ? summary.warnings : summary.counterexamples)
              .push_back(std::move(finding));
          return true;
        });
    return summary;
  }

  std::uint64_t
  run_search(SearchOptions const&                                options,
             PropertyExpr const&                                 expr,
             std::function<void(OrderedSemigroup const&)> const& on_match) {
    std::uint64_t       matches = 0;
    StructureEnumerator source(options.order, options.dedup);
    // with --first a small batch keeps the time to the first match short
    std::size_t const batch = options.first ? 64 : 1024;
    parallel_sweep(
        source,
        options.jobs,
        [&](OrderedSemigroup const& S) {
          return evaluate(S, expr, options.evaluation);
        },
        [&](OrderedSemigroup const& S, bool match) {
          if (!match) {
            return true;
          }
          ++matches;
          on_match(S);
          return !options.first;
        },
        batch);
    return matches;
  }

}  // namespace oseg
