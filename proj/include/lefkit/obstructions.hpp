#pragma once

// Laws that every finite semigroup satisfies, exhaustive scanners for them,
// and pattern matchers that certify a partial table non-embeddable.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lefkit/finite_core.hpp"
#include "lefkit/partial_tables.hpp"
#include "lefkit/rewriting.hpp"

namespace lefkit {

  ////////////////////////////////////////////////////////////////////////
  // Laws
  ////////////////////////////////////////////////////////////////////////

  using ElementPair = std::pair<element_type, element_type>;

  //! ppq = p implies pqp = p. Least failing (p, q), or nullopt.
  std::optional<ElementPair> law_ppq(CayleyTable const& table);

  //! qppq = qp implies qpq = qp or (qpq)(qpp) = qp.
  std::optional<ElementPair> law_six_set(CayleyTable const& table);

  //! (qp)(pq)^n = (qp)^n implies (qp)^2 (pq)^m = (qp)(pq)^m (qp) for some
  //! 1 <= m < n^2 + 2n with n not dividing m. Requires n >= 2.
  std::optional<ElementPair> law_prob(CayleyTable const& table, std::size_t n);

  //! ppq = p implies pq = qp. False in general; used to show that scans are
  //! able to find counterexamples.
  std::optional<ElementPair> law_ppq_commute(CayleyTable const& table);

  struct PowerViolation {
    element_type s;
    std::size_t  kappa, rho;  // exponents with s^kappa = s^(kappa + rho)
  };

  //! s^k = s^(k + r) with k, r <= max_exp implies r >= period(s).
  std::optional<PowerViolation> law_power_period(CayleyTable const& table,
                                                 std::size_t max_exp = 8);

  //! A law as a checker returning a witness tuple.
  struct Law {
    std::string                                                            id;
    std::function<std::optional<std::vector<element_type>>(CayleyTable const&)> check;
  };

  //! Known ids: "ppq", "six-set", "prob" (uses n), "ppq-commute", "power-period".
  Law law_by_id(std::string const& id, std::size_t n = 2);

  std::vector<std::string> law_ids();

  struct Counterexample {
    CayleyTable               table;
    std::vector<element_type> elements;
  };

  struct LawReport {
    std::string                 law;
    std::string                 space;
    std::vector<Counterexample> counterexamples;  // sorted, at most `keep`
    std::size_t                 counterexample_count = 0;
    std::size_t                 scanned              = 0;

    bool holds() const noexcept {
      return counterexample_count == 0;
    }
  };

  //! Scans every table of order 1..max_order in the given mode.
  LawReport scan_law(Law const& law,
                     std::size_t max_order,
                     EnumerationMode mode = EnumerationMode::labeled,
                     std::size_t jobs = 1,
                     std::size_t keep = 16,
                     EnumerationBounds const& bounds = {});

  //! Scans closures of `samples` random pairs of transformations of the
  //! given degree (closures larger than cap are skipped and not counted).
  LawReport scan_law_random_transformations(Law const& law,
                                            std::size_t degree,
                                            std::size_t samples,
                                            std::uint64_t seed,
                                            std::size_t cap = 256,
                                            std::size_t keep = 16);

  ////////////////////////////////////////////////////////////////////////
  // Non-embeddable patterns
  ////////////////////////////////////////////////////////////////////////

  struct ObstructionCertificate {
    std::string              pattern;   // "ppq", "six-set", "prob", "one-sided-unit"
    std::size_t              n = 0;     // exponent of the "prob" pattern
    std::vector<std::size_t> elements;  // indices into the partial table
    std::vector<std::string> names;
    std::string              statement;  // the failed finite-semigroup law
  };

  //! Re-checks the hypotheses of a certificate against the table.
  bool verify_obstruction(PartialTable const& pt, ObstructionCertificate const& c);

  //! The least match of each pattern; "prob" is tried for n = 2..max_prob_n
  //! and only when every power it mentions is in the set.
  std::vector<ObstructionCertificate>
  detect_obstruction(PartialTable const& pt, std::size_t max_prob_n = 4);

  //! The set used against T_n in the "prob" pattern: x = a, y = b and the
  //! powers of xy, yx and their combinations with m < n^2 + 2n. Elements are
  //! named by leftmost-reduced words and words with different reduced forms
  //! are taken to be distinct; products are defined when the reduced form of
  //! the concatenation is a member.
  PartialTable prob_pattern_set(std::size_t n);

  ////////////////////////////////////////////////////////////////////////
  // Bounded corroborations
  ////////////////////////////////////////////////////////////////////////

  struct TnSeparation {
    bool              consistent;  // no chain found within the bounds
    Word              lhs, rhs;
    CongruenceResult  search;
  };

  //! Looks for a chain (ba)(ab)^m(ba) <-> (ba)^2(ab)^m under the T_n rule.
  //! Requires n >= 2 and n not dividing m.
  TnSeparation tn_separation(std::size_t n,
                             std::size_t m,
                             std::size_t max_len,
                             std::size_t max_steps);

  struct PowerCheckReport {
    std::size_t              orbit_size = 0;
    bool                     factorisation = false;  // members = W_a W_a b
    bool                     a_in_product  = false;  // aabab reduces to a
    bool                     shape         = false;  // members pass wa_prefix_check
    bool                     aba_excluded  = false;  // aba irreducible, wrong shape
    std::vector<std::string> failures;
    //! Members failing the per-block inequalities of wa_shape_check.
    std::vector<std::string> block_shape_exceptions;

    bool holds() const noexcept {
      return factorisation && a_in_product && shape && aba_excluded;
    }
  };

  //! Orbit of "a" under a -> aab up to length L (L >= 5) and the four checks
  //! behind S_a S_a S_b = S_a and S_a S_b S_a != S_a in Mon<a,b | abab, baba>.
  PowerCheckReport power_counterexample_check(std::size_t max_len);

}  // namespace lefkit
