#include "oseg/theorems.hpp"

#include <algorithm>  // for find_if, all_of
#include <array>      // for array
#include <sstream>    // for ostringstream
#include <stdexcept>  // for out_of_range

#include "oseg/decomposition.hpp"  // for nil_extension_of_type, ...
#include "oseg/exception.hpp"      // for UnknownTheorem, PreconditionUnmet
#include "oseg/ideals.hpp"         // for all_ideals, is_simple
#include "oseg/relations.hpp"      // for green, green_star, divides

namespace oseg {

  namespace {
    constexpr std::array<TheoremInfo, 14> the_catalog{{
        {"thm-500",
         "right pi-inverse iff e L* f implies e R* f for ordered idempotents",
         false, true, false},
        {"thm-15",
         "right pi-inverse iff every element has a power whose inverses are "
         "pairwise R-related",
         false, true, false},
        {"thm-74",
         "nil-extension of left simple pi-inverse: eight equivalent "
         "conditions",
         false, false, false},
        {"cor-76",
         "nil-extension of simple pi-inverse iff pi-inverse and e J* f on "
         "ordered idempotents",
         false, false, false},
        {"lem-cao",
         "S is a nil-extension of an ideal I iff every element has a power "
         "in I",
         false, false, true},
        {"lem-ne51",
         "a|c implies a^2|c on RV(S) iff a|c and b|c imply ab|c on RV(S)",
         false, false, false},
        {"thm-ne511",
         "RV, right inverse and right pi-inverse are classwise in every "
         "complete semilattice decomposition",
         false, false, true},
        {"lem-ne53",
         "RV(S) and the L-classes meeting it lie inside every nil-extension "
         "ideal",
         false, false, true},
        {"thm-1005",
         "nil-extension of left simple right pi-inverse: nine equivalent "
         "conditions",
         false, false, false},
        {"cor-simple",
         "nil-extension of simple right pi-inverse: five equivalent "
         "conditions",
         false, false, false},
        {"cor-rinv-nilext",
         "nil-extension of a right inverse ordered semigroup iff conditions "
         "(i)-(iv)",
         false, false, true},
        {"cor-1114",
         "complete semilattice of nil-extensions of simple right "
         "pi-inverse: three equivalent conditions",
         false, false, true},
        {"cor-leftsimple",
         "complete semilattice of nil-extensions of left simple right "
         "pi-inverse: three equivalent conditions",
         false, false, true},
        {"thm-774-adapted",
         "t-Archimedean with Pi-Intra(S) nonempty iff nil-extension of a "
         "t-simple ordered semigroup",
         true, false, false},
    }};

    ////////////////////////////////////////////////////////////////////////
    // Report assembly
    ////////////////////////////////////////////////////////////////////////

    class ReportBuilder {
     public:
      explicit ReportBuilder(TheoremInfo const& info) {
        _report.theorem_id = std::string(info.id);
        _report.adapted    = info.adapted;
      }

      std::size_t add(std::string name, bool value, std::string witness = {}) {
        _report.conditions.push_back(
            Condition{std::move(name), value, std::move(witness)});
        return _report.conditions.size() - 1;
      }

      void equivalent(std::vector<std::size_t> conditions) {
        _report.claims.push_back(
            Claim{Claim::Shape::equivalent, std::move(conditions)});
      }

      void holds(std::size_t condition) {
        _report.claims.push_back(Claim{Claim::Shape::holds, {condition}});
      }

      TheoremReport finish() {
        std::ostringstream detail;
        auto const&        conds = _report.conditions;
        for (auto const& claim : _report.claims) {
          bool ok = true;
          if (claim.shape == Claim::Shape::holds) {
            ok = conds[claim.conditions.front()].value;
          } else {
            auto const first = conds[claim.conditions.front()].value;
            ok = std::all_of(claim.conditions.begin(),
                             claim.conditions.end(),
                             [&](auto i) { return conds[i].value == first; });
          }
          if (ok) {
            continue;
          }
          if (!detail.str().empty()) {
            detail << "; ";
          }
          detail << (claim.shape == Claim::Shape::holds ? "fails: "
                                                        : "not equivalent: ");
          for (std::size_t k = 0; k < claim.conditions.size(); ++k) {
            auto const& c = conds[claim.conditions[k]];
            detail << (k == 0 ? "" : ", ") << c.name << "="
                   << (c.value ? "true" : "false");
          }
        }
        _report.violation = detail.str();
        _report.verdict   = _report.violation.empty()
                                ? TheoremReport::Verdict::consistent
                                : TheoremReport::Verdict::counterexample;
        return std::move(_report);
      }

     private:
      TheoremReport _report;
    };

    ////////////////////////////////////////////////////////////////////////
    // Types used by the statements
    ////////////////////////////////////////////////////////////////////////

    TypePredicate simple_type(SimplicityKind kind) {
      static constexpr std::array<char const*, 4> names{
          "left-simple", "right-simple", "simple", "t-simple"};
      return TypePredicate{names[static_cast<std::size_t>(kind)],
                           [kind](OrderedSemigroup const& T) {
                             return is_simple(T, kind);
                           }};
    }

    TypePredicate right_pi_inverse_type(RvReading reading) {
      return TypePredicate{"right-pi-inverse",
                           [reading](OrderedSemigroup const& T) {
                             return is_right_pi_inverse(T, reading);
                           }};
    }

    TypePredicate pi_inverse_type(RvReading reading) {
      return TypePredicate{"pi-inverse", [reading](OrderedSemigroup const& T) {
                             return is_pi_inverse(T, reading);
                           }};
    }

    TypePredicate archimedean_type(ArchimedeanKind kind) {
      static constexpr std::array<char const*, 4> names{
          "archimedean", "l-archimedean", "r-archimedean", "t-archimedean"};
      return TypePredicate{names[static_cast<std::size_t>(kind)],
                           [kind](OrderedSemigroup const& T) {
                             return is_archimedean(T, kind);
                           }};
    }

    struct Evaluated {
      bool        value;
      std::string witness;
    };

    Evaluated nil_ext(OrderedSemigroup const& S, TypePredicate const& tau) {
      auto const r = nil_extension_of_type(S, tau);
      return {r.found(), r.found() ? "K=" + r.ideal.to_string() : ""};
    }

    Evaluated csl(OrderedSemigroup const& S, TypePredicate const& tau) {
      auto const r = is_complete_semilattice_of(S, tau);
      return {r.holds,
              r.witness ? "rho=" + r.witness->partition.to_string() : ""};
    }

    // Every pair of members of A is related; the relation is only built when
    // guard holds (starred relations need pi-regularity).
    bool guarded_all_related(bool                    guard,
                             OrderedSemigroup const& S,
                             GreenKind               kind,
                             ElementSubset const&    A) {
      return guard && green_star(S, kind).all_related(A);
    }

    ////////////////////////////////////////////////////////////////////////
    // The statements
    ////////////////////////////////////////////////////////////////////////

    void thm_500(ReportBuilder& r, OrderedSemigroup const& S, RvReading rd) {
      auto const E      = ordered_idempotents(S);
      auto const lstar  = green_star(S, GreenKind::L_star);
      auto const rstar  = green_star(S, GreenKind::R_star);
      bool       l_to_r = true;
      E.for_each([&](std::size_t e) {
        E.for_each([&](std::size_t f) {
          if (lstar.related(e, f) && !rstar.related(e, f)) {
            l_to_r = false;
          }
        });
      });
      auto const i = r.add("(i) right pi-inverse", is_right_pi_inverse(S, rd));
      auto const j = r.add("(ii) e L* f implies e R* f on E(S)", l_to_r);
      r.equivalent({i, j});
    }

    void thm_15(ReportBuilder& r, OrderedSemigroup const& S, RvReading rd) {
      auto const  R = green(S, GreenKind::R);
      std::size_t n = S.order();
      bool        every_element = true;
      std::string witness;
      for (std::size_t a = 0; a < n && every_element; ++a) {
        bool found = false;
        for (std::size_t m = 1; m <= n && !found; ++m) {
          auto const v = inverses(S, power(S, a, m));
          if ((rd == RvReading::vacuous || !v.empty()) && R.all_related(v)) {
            found = true;
            witness += (witness.empty() ? "" : ",") + std::to_string(a)
                       + ":m=" + std::to_string(m);
          }
        }
        every_element = found;
      }
      auto const i = r.add("(i) right pi-inverse", is_right_pi_inverse(S, rd));
      auto const j = r.add("(ii) some power has R-related inverses",
                           every_element,
                           every_element ? witness : "");
      r.equivalent({i, j});
    }

    void thm_74(ReportBuilder& r, OrderedSemigroup const& S, RvReading rd) {
      bool const pireg = is_pi_regular(S);
      bool const pinv  = is_pi_inverse(S, rd);
      auto const E     = ordered_idempotents(S);
      auto const pi    = pi_inverse_type(rd);

      auto const c1 = nil_ext(S, simple_type(SimplicityKind::left) && pi);
      auto const c8 = nil_ext(S, simple_type(SimplicityKind::t) && pi);
      std::vector<std::size_t> ids{
          r.add("(i) nil-extension of left simple pi-inverse",
                c1.value,
                c1.witness),
          r.add("(ii) pi-inverse, l-Archimedean",
                pinv && is_archimedean(S, ArchimedeanKind::l)),
          r.add("(iii) pi-inverse, a L* b for all a, b",
                guarded_all_related(pinv, S, GreenKind::L_star, S.all())),
          r.add("(iv) pi-inverse, e L* f on E(S)",
                guarded_all_related(pinv, S, GreenKind::L_star, E)),
          r.add("(v) pi-regular, e H* f on E(S)",
                guarded_all_related(pireg, S, GreenKind::H_star, E)),
          r.add("(vi) pi-regular, a H* b for all a, b",
                guarded_all_related(pireg, S, GreenKind::H_star, S.all())),
          r.add("(vii) pi-inverse, t-Archimedean",
                pinv && is_archimedean(S, ArchimedeanKind::t)),
          r.add("(viii) nil-extension of t-simple pi-inverse",
                c8.value,
                c8.witness)};
      r.equivalent(std::move(ids));
    }

    void cor_76(ReportBuilder& r, OrderedSemigroup const& S, RvReading rd) {
      bool const pinv = is_pi_inverse(S, rd);
      auto const c1   = nil_ext(
          S, simple_type(SimplicityKind::two_sided) && pi_inverse_type(rd));
      auto const i = r.add(
          "(i) nil-extension of simple pi-inverse", c1.value, c1.witness);
      auto const j = r.add("(ii) pi-inverse, e J* f on E(S)",
                           guarded_all_related(pinv,
                                               S,
                                               GreenKind::J_star,
                                               ordered_idempotents(S)));
      r.equivalent({i, j});
    }

    // S^k for the least k with S^k = S^(k+1)
    ElementSubset stable_power_of_s(OrderedSemigroup const& S) {
      auto current = S.all();
      while (true) {
        auto next = subset_product(S, current, S.all());
        if (next == current) {
          return current;
        }
        current = next;
      }
    }

    void lem_cao(ReportBuilder& r, OrderedSemigroup const& S, RvReading) {
      // The Rees quotient S/I is nilpotent iff some S^k lies in I; the
      // chain S, S^2, ... is decreasing, so checking its limit suffices.
      auto const  limit = stable_power_of_s(S);
      std::size_t n     = S.order();
      for (auto const& I : all_ideals(S)) {
        bool powers = true;
        for (std::size_t a = 0; a < n; ++a) {
          powers = powers && !(power_profile(S, a).powers & I).empty();
        }
        auto const name = "I=" + I.to_string();
        auto const i
            = r.add(name + " (i) S/I nilpotent", limit.subset_of(I));
        auto const j = r.add(name + " (ii) every element has a power in I",
                             powers);
        r.equivalent({i, j});
      }
    }

    void lem_ne51(ReportBuilder& r, OrderedSemigroup const& S, RvReading rd) {
      std::size_t const n  = S.order();
      auto const        rv = rv_set(S, rd);
      std::vector<bool> div(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t c = 0; c < n; ++c) {
          div[a * n + c] = divides(S, a, c);
        }
      }
      bool first = true, second = true;
      rv.for_each([&](std::size_t c) {
        for (std::size_t a = 0; a < n; ++a) {
          if (div[a * n + c] && !div[S.product(a, a) * n + c]) {
            first = false;
          }
          for (std::size_t b = 0; b < n; ++b) {
            if (div[a * n + c] && div[b * n + c]
                && !div[S.product(a, b) * n + c]) {
              second = false;
            }
          }
        }
      });
      auto const i = r.add("(i) a|c implies a^2|c for c in RV(S)", first);
      auto const j
          = r.add("(ii) a|c and b|c imply ab|c for c in RV(S)", second);
      r.equivalent({i, j});
    }

    void thm_ne511(ReportBuilder& r, OrderedSemigroup const& S, RvReading rd) {
      auto const rv_s   = rv_set(S, rd);
      auto const rinv_s = r.add("(ii) S right inverse", is_right_inverse(S, rd));
      auto const rpi_s
          = r.add("(iii) S right pi-inverse", is_right_pi_inverse(S, rd));
      for (auto const& rho : all_complete_semilattice_congruences(S)) {
        auto const    name  = "rho=" + rho.partition.to_string();
        ElementSubset union_rv(S.order());
        bool          rinv = true, rpi = true;
        for (auto const& c : rho.partition.classes()) {
          auto const sub = restrict(S, c);
          union_rv |= sub.lift(rv_set(sub.structure, rd));
          rinv = rinv && is_right_inverse(sub.structure, rd);
          rpi  = rpi && is_right_pi_inverse(sub.structure, rd);
        }
        r.holds(r.add(name + " (i) RV(S) is the union of RV(S_alpha)",
                      union_rv == rv_s,
                      "RV(S)=" + rv_s.to_string()
                          + " union=" + union_rv.to_string()));
        r.equivalent(
            {rinv_s, r.add(name + " (ii) every class right inverse", rinv)});
        r.equivalent(
            {rpi_s, r.add(name + " (iii) every class right pi-inverse", rpi)});
      }
    }

    void lem_ne53(ReportBuilder& r, OrderedSemigroup const& S, RvReading rd) {
      if (regular_elements(S).empty()) {
        return;
      }
      auto const rv = rv_set(S, rd);
      auto const L  = green(S, GreenKind::L);
      ElementSubset l_classes(S.order());
      rv.for_each([&](std::size_t a) { l_classes |= L.class_of(a); });
      for (auto const& K : all_ideals(S)) {
        if (!is_nil_extension(S, K).holds) {
          continue;
        }
        auto const name = "K=" + K.to_string();
        r.holds(r.add(name + " (i) RV(S) inside K", rv.subset_of(K)));
        r.holds(r.add(name + " (ii) L-classes meeting RV(S) inside K",
                      l_classes.subset_of(K)));
      }
    }

    void thm_1005(ReportBuilder& r, OrderedSemigroup const& S, RvReading rd) {
      bool const pireg = is_pi_regular(S);
      bool const rpi   = is_right_pi_inverse(S, rd);
      bool const pinv  = is_pi_inverse(S, rd);
      bool const tarch = is_archimedean(S, ArchimedeanKind::t);
      auto const E     = ordered_idempotents(S);
      auto const rpt   = right_pi_inverse_type(rd);

      auto const c1 = nil_ext(S, simple_type(SimplicityKind::left) && rpt);
      auto const c9 = nil_ext(S, simple_type(SimplicityKind::t) && rpt);
      std::vector<std::size_t> ids{
          r.add("(i) nil-extension of left simple right pi-inverse",
                c1.value,
                c1.witness),
          r.add("(ii) right pi-inverse, l-Archimedean",
                rpi && is_archimedean(S, ArchimedeanKind::l)),
          r.add("(iii) right pi-inverse, a L* b for all a, b",
                guarded_all_related(rpi, S, GreenKind::L_star, S.all())),
          r.add("(iv) right pi-inverse, e L* f on E(S)",
                guarded_all_related(rpi, S, GreenKind::L_star, E)),
          r.add("(v) pi-regular, e H* f on E(S)",
                guarded_all_related(pireg, S, GreenKind::H_star, E)),
          r.add("(vi) pi-regular, a H* b for all a, b",
                guarded_all_related(pireg, S, GreenKind::H_star, S.all())),
          r.add("(vii) pi-inverse, t-Archimedean", pinv && tarch),
          r.add("(viii) right pi-inverse, t-Archimedean", rpi && tarch),
          r.add("(ix) nil-extension of t-simple right pi-inverse",
                c9.value,
                c9.witness)};
      r.equivalent(std::move(ids));
    }

    void cor_simple(ReportBuilder& r, OrderedSemigroup const& S, RvReading rd) {
      bool const        rpi = is_right_pi_inverse(S, rd);
      std::size_t const n   = S.order();
      // for all a, b some a^m in (SbS]
      bool powers_in_ideals = true;
      for (std::size_t b = 0; b < n; ++b) {
        auto const bs    = ElementSubset::singleton(n, b);
        auto const ideal = downset(
            S, subset_product(S, subset_product(S, S.all(), bs), S.all()));
        for (std::size_t a = 0; a < n; ++a) {
          bool found = false;
          for (std::size_t m = 1; m <= n && !found; ++m) {
            found = ideal.contains(power(S, a, m));
          }
          powers_in_ideals = powers_in_ideals && found;
        }
      }
      auto const c1 = nil_ext(S,
                              simple_type(SimplicityKind::two_sided)
                                  && right_pi_inverse_type(rd));
      std::vector<std::size_t> ids{
          r.add("(i) nil-extension of simple right pi-inverse",
                c1.value,
                c1.witness),
          r.add("(ii) right pi-inverse, e J* f on E(S)",
                guarded_all_related(
                    rpi, S, GreenKind::J_star, ordered_idempotents(S))),
          r.add("(iii) right pi-inverse, a J* b for all a, b",
                guarded_all_related(rpi, S, GreenKind::J_star, S.all())),
          r.add("(iv) right pi-inverse, some a^m in (SbS] for all a, b",
                rpi && powers_in_ideals),
          r.add("(v) right pi-inverse, Archimedean",
                rpi && is_archimedean(S, ArchimedeanKind::two_sided))};
      r.equivalent(std::move(ids));
    }

    void cor_rinv_nilext(ReportBuilder&          r,
                         OrderedSemigroup const& S,
                         RvReading               rd) {
      std::string witness;
      bool        lhs = false;
      for (auto const& K : all_ideals(S)) {
        if (is_nil_extension(S, K).holds
            && is_right_inverse(restrict(S, K).structure, rd)) {
          lhs     = true;
          witness = "K=" + K.to_string();
          break;
        }
      }
      std::size_t const n  = S.order();
      auto const        rv = rv_set(S, rd);
      bool              left_mult = true, right_mult = true, below = true;
      for (std::size_t a = 0; a < n; ++a) {
        if (rv.contains(a)) {
          continue;
        }
        rv.for_each([&](std::size_t b) {
          left_mult  = left_mult && !S.leq(a, S.product(b, a));
          right_mult = right_mult && !S.leq(a, S.product(a, b));
          below      = below && !S.leq(a, b);
        });
      }
      bool const rpi = is_right_pi_inverse(S, rd);
      auto const l
          = r.add("nil-extension of right inverse", lhs, std::move(witness));
      r.add("(i) right pi-inverse", rpi);
      r.add("(ii) a <= ba, b in RV(S) implies a in RV(S)", left_mult);
      r.add("(iii) a <= ab, b in RV(S) implies a in RV(S)", right_mult);
      r.add("(iv) a <= b, b in RV(S) implies a in RV(S)", below);
      auto const all = r.add("(i)-(iv) jointly",
                             rpi && left_mult && right_mult && below);
      r.equivalent({l, all});
    }

    void csl_family(ReportBuilder&          r,
                    OrderedSemigroup const& S,
                    RvReading               rd,
                    SimplicityKind          simplicity,
                    ArchimedeanKind         archimedean) {
      bool const rpi     = is_right_pi_inverse(S, rd);
      auto const simple  = simple_type(simplicity);
      auto const c1      = csl(S,
                          nil_extension_type(simple && right_pi_inverse_type(rd)));
      auto const c2      = csl(S, nil_extension_type(simple));
      auto const c3      = csl(S, archimedean_type(archimedean));
      bool const sets_eq = pi_intra_set(S) == pi_rv_set(S, rd);
      std::string const kind
          = simplicity == SimplicityKind::left ? "left simple" : "simple";
      std::string const arch = archimedean == ArchimedeanKind::l
                                   ? "l-Archimedean"
                                   : "Archimedean";
      std::vector<std::size_t> ids{
          r.add("(i) csl of nil-extensions of " + kind + " right pi-inverse",
                c1.value,
                c1.witness),
          r.add("(ii) csl of nil-extensions of " + kind
                    + ", Pi-Intra(S) = Pi-RV(S)",
                c2.value && sets_eq,
                c2.witness),
          r.add("(iii) right pi-inverse, csl of " + arch,
                rpi && c3.value,
                c3.witness)};
      r.equivalent(std::move(ids));
    }

    void cor_1114(ReportBuilder& r, OrderedSemigroup const& S, RvReading rd) {
      csl_family(
          r, S, rd, SimplicityKind::two_sided, ArchimedeanKind::two_sided);
    }

    void cor_leftsimple(ReportBuilder&          r,
                        OrderedSemigroup const& S,
                        RvReading               rd) {
      csl_family(r, S, rd, SimplicityKind::left, ArchimedeanKind::l);
    }

    void thm_774(ReportBuilder& r, OrderedSemigroup const& S, RvReading) {
      auto const c1 = nil_ext(S, simple_type(SimplicityKind::t));
      auto const i  = r.add(
          "(i) nil-extension of t-simple", c1.value, c1.witness);
      auto const j = r.add("(ii) t-Archimedean, Pi-Intra(S) nonempty",
                           is_archimedean(S, ArchimedeanKind::t)
                               && !pi_intra_set(S).empty());
      r.equivalent({i, j});
    }

    using Checker = void (*)(ReportBuilder&, OrderedSemigroup const&, RvReading);

    constexpr std::array<Checker, 14> the_checkers{thm_500,
                                                   thm_15,
                                                   thm_74,
                                                   cor_76,
                                                   lem_cao,
                                                   lem_ne51,
                                                   thm_ne511,
                                                   lem_ne53,
                                                   thm_1005,
                                                   cor_simple,
                                                   cor_rinv_nilext,
                                                   cor_1114,
                                                   cor_leftsimple,
                                                   thm_774};

    std::size_t catalog_index(std::string_view id) {
      auto it = std::find_if(the_catalog.begin(),
                             the_catalog.end(),
                             [id](auto const& t) { return t.id == id; });
      if (it == the_catalog.end()) {
        throw UnknownTheorem(std::string(id));
      }
      return static_cast<std::size_t>(it - the_catalog.begin());
    }
  }  // namespace

  std::span<TheoremInfo const> catalog() {
    return the_catalog;
  }

  TheoremInfo const& theorem_info(std::string_view id) {
    return the_catalog[catalog_index(id)];
  }

  bool TheoremReport::value(std::string_view name) const {
    for (auto const& c : conditions) {
      if (c.name == name) {
        return c.value;
      }
    }
    throw std::out_of_range("no condition named \"" + std::string(name)
                            + "\" in " + theorem_id);
  }

  json TheoremReport::to_json() const {
    json result;
    json conds      = json::object();
    json witnesses  = json::object();
    for (auto const& c : conditions) {
      conds[c.name] = c.value;
      if (!c.witness.empty()) {
        witnesses[c.name] = c.witness;
      }
    }
    result["conditions"] = std::move(conds);
    result["verdict"]    = consistent() ? "consistent" : "COUNTEREXAMPLE";
    if (adapted) {
      result["adapted"] = true;
    }
    if (!witnesses.empty()) {
      result["witnesses"] = std::move(witnesses);
    }
    if (!consistent()) {
      result["violation"] = violation;
    }
    return result;
  }

  bool precondition_met(OrderedSemigroup const& S, TheoremInfo const& info) {
    if (info.needs_scan && S.order() > max_scan_order) {
      return false;
    }
    if (info.needs_pi_regular && !is_pi_regular(S)) {
      return false;
    }
    return true;
  }

  TheoremReport check(OrderedSemigroup const& S,
                      std::string_view        theorem_id,
                      CheckOptions const&     options) {
    auto const  index = catalog_index(theorem_id);
    auto const& info  = the_catalog[index];
    if (info.needs_scan && S.order() > max_scan_order) {
      throw PreconditionUnmet(std::string(info.id),
                              "order " + std::to_string(S.order())
                                  + " is too large for a subset scan");
    }
    if (info.needs_pi_regular && !is_pi_regular(S)) {
      throw PreconditionUnmet(std::string(info.id),
                              "the structure is not pi-regular");
    }
    ReportBuilder builder(info);
    the_checkers[index](builder, S, options.reading);
    return builder.finish();
  }

  std::vector<TheoremReport> check_all(OrderedSemigroup const& S,
                                       CheckOptions const&     options) {
    std::vector<TheoremReport> result;
    for (auto const& info : the_catalog) {
      if (precondition_met(S, info)) {
        result.push_back(check(S, info.id, options));
      }
    }
    return result;
  }

}  // namespace oseg
