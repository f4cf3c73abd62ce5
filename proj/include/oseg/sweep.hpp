// Runs a per-structure computation over an enumeration stream on a pool of
// worker threads.  Structures are pulled in batches; each batch is processed
// in parallel and its results are handed to the sink in enumeration order,
// so the output does not depend on the number of workers.

#ifndef OSEG_SWEEP_HPP_
#define OSEG_SWEEP_HPP_

#include <atomic>      // for atomic
#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <exception>   // for exception_ptr
#include <functional>  // for function
#include <optional>    // for optional
#include <string>      // for string
#include <thread>      // for thread
#include <vector>      // for vector

#include "enumeration.hpp"  // for StructureEnumerator
#include "property.hpp"     // for PropertyExpr
#include "theorems.hpp"     // for TheoremReport

namespace oseg {

  //! Applies work to every structure produced by source and passes
  //! (structure, result) to sink in stream order.  sink returns false to
  //! stop early.  Exceptions thrown by work are rethrown on the calling
  //! thread.
  template <typename Work, typename Sink>
  void parallel_sweep(StructureEnumerator& source,
                      std::size_t          jobs,
                      Work&&               work,
                      Sink&&               sink,
                      std::size_t          batch_size = 1024) {
    using Result = decltype(work(std::declval<OrderedSemigroup const&>()));
    jobs         = jobs == 0 ? 1 : jobs;
    std::vector<OrderedSemigroup>      batch;
    std::vector<std::optional<Result>> results;
    while (true) {
      batch.clear();
      while (batch.size() < batch_size) {
        auto S = source.next();
        if (!S) {
          break;
        }
        batch.push_back(std::move(*S));
      }
      if (batch.empty()) {
        return;
      }
      results.assign(batch.size(), std::nullopt);
      std::atomic<std::size_t> cursor{0};
      std::vector<std::exception_ptr> errors(jobs);
      auto                     worker = [&](std::size_t id) {
        try {
          for (std::size_t i = cursor++; i < batch.size(); i = cursor++) {
            results[i].emplace(work(batch[i]));
          }
        } catch (...) {
          errors[id] = std::current_exception();
          cursor     = batch.size();
        }
      };
      if (jobs == 1) {
        worker(0);
      } else {
        std::vector<std::thread> pool;
        for (std::size_t id = 0; id < jobs; ++id) {
          pool.emplace_back(worker, id);
        }
        for (auto& t : pool) {
          t.join();
        }
      }
      for (auto const& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
      for (std::size_t i = 0; i < batch.size(); ++i) {
        if (!sink(batch[i], std::move(*results[i]))) {
          return;
        }
      }
    }
  }

  struct VerifyOptions {
    std::size_t              order = 2;
    Dedup                    dedup = Dedup::raw;
    std::vector<std::string> theorem_ids;  // empty = the whole catalog
    std::size_t              jobs   = 1;
    bool                     strict = false;  // adapted mismatches count
    CheckOptions             check;
  };

  //! A structure on which at least one report is a COUNTEREXAMPLE.
  struct VerifyFinding {
    OrderedSemigroup           structure;
    std::vector<TheoremReport> reports;  // the failing reports only
    // every failing report is for an adapted theorem
    bool adapted_only = false;
  };

  struct VerifySummary {
    std::uint64_t              structures = 0;
    std::uint64_t              checks     = 0;
    std::uint64_t              skipped    = 0;  // precondition unmet
    std::vector<VerifyFinding> counterexamples;
    std::vector<VerifyFinding> warnings;  // adapted-only, non-strict

    [[nodiscard]] bool passed() const noexcept {
      return counterexamples.empty();
    }
  };

  //! Runs the requested theorems over every enumerated structure of the
  //! order.  on_finding is called in stream order for every counterexample
  //! and warning.  Throws UnknownTheorem.
  VerifySummary
  run_verify(VerifyOptions const&                              options,
             std::function<void(VerifyFinding const&, bool)> on_finding = {});

  struct SearchOptions {
    std::size_t       order = 2;
    Dedup             dedup = Dedup::raw;
    std::size_t       jobs  = 1;
    bool              first = false;  // stop at the first match
    EvaluationOptions evaluation;
  };

  //! Calls on_match for every enumerated structure satisfying expr, in
  //! stream order; returns the number of matches.
  std::uint64_t
  run_search(SearchOptions const&                               options,
             PropertyExpr const&                                expr,
             std::function<void(OrderedSemigroup const&)> const& on_match);

}  // namespace oseg

#endif  // OSEG_SWEEP_HPP_
