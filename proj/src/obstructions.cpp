#include "lefkit/obstructions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <tuple>

#include "lefkit/error.hpp"
#include "lefkit/normal_forms.hpp"

namespace lefkit {

  ////////////////////////////////////////////////////////////////////////
  // Laws
  ////////////////////////////////////////////////////////////////////////

  namespace {

    template <typename Pred>
    std::optional<ElementPair> first_failing_pair(CayleyTable const& t, Pred&& holds) {
      for (element_type p = 0; p < t.order(); ++p) {
        for (element_type q = 0; q < t.order(); ++q) {
          if (!holds(p, q)) {
            return ElementPair{p, q};
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  std::optional<ElementPair> law_ppq(CayleyTable const& t) {
    return first_failing_pair(t, [&](element_type p, element_type q) {
      return t(t(p, p), q) != p || t(t(p, q), p) == p;
    });
  }

  std::optional<ElementPair> law_six_set(CayleyTable const& t) {
    return first_failing_pair(t, [&](element_type p, element_type q) {
      auto qp  = t(q, p);
      auto qpp = t(qp, p);
      auto qpq = t(qp, q);
      return t(qpp, q) != qp || qpq == qp || t(qpq, qpp) == qp;
    });
  }

  std::optional<ElementPair> law_prob(CayleyTable const& t, std::size_t n) {
    if (n < 2) {
      fail(ErrorCode::invalid_input, "the prob law needs n >= 2");
    }
    std::size_t const limit = n * n + 2 * n;
    return first_failing_pair(t, [&](element_type p, element_type q) {
      auto qp = t(q, p);
      auto pq = t(p, q);
      if (t(qp, t.power(pq, n)) != t.power(qp, n)) {
        return true;
      }
      auto qpqp = t(qp, qp);
      auto pqm  = pq;  // (pq)^m
      for (std::size_t m = 1; m < limit; ++m, pqm = t(pqm, pq)) {
        if (m % n != 0 && t(qpqp, pqm) == t(t(qp, pqm), qp)) {
          return true;
        }
      }
      return false;
    });
  }

  std::optional<ElementPair> law_ppq_commute(CayleyTable const& t) {
    return first_failing_pair(t, [&](element_type p, element_type q) {
      return t(t(p, p), q) != p || t(p, q) == t(q, p);
    });
  }

  std::optional<PowerViolation> law_power_period(CayleyTable const& t,
                                                 std::size_t max_exp) {
    for (element_type s = 0; s < t.order(); ++s) {
      auto const ip = index_period(t, s);
      std::vector<element_type> powers(2 * max_exp + 1);
      powers[1] = s;
      for (std::size_t k = 2; k <= 2 * max_exp; ++k) {
        powers[k] = t(powers[k - 1], s);
      }
      for (std::size_t k = 1; k <= max_exp; ++k) {
        for (std::size_t r = 1; r <= max_exp; ++r) {
          if (powers[k] == powers[k + r] && r < ip.period) {
            return PowerViolation{s, k, r};
          }
        }
      }
    }
    return std::nullopt;
  }

  namespace {

    std::function<std::optional<std::vector<element_type>>(CayleyTable const&)>
    pair_law(std::function<std::optional<ElementPair>(CayleyTable const&)> f) {
      return [f](CayleyTable const& t) -> std::optional<std::vector<element_type>> {
        if (auto r = f(t)) {
          return std::vector<element_type>{r->first, r->second};
        }
        return std::nullopt;
      };
    }

  }  // namespace

  Law law_by_id(std::string const& id, std::size_t n) {
    if (id == "ppq") {
      return {id, pair_law(law_ppq)};
    } else if (id == "six-set") {
      return {id, pair_law(law_six_set)};
    } else if (id == "prob") {
      if (n < 2) {
        fail(ErrorCode::invalid_input, "the prob law needs n >= 2");
      }
      return {"prob(" + std::to_string(n) + ")",
              pair_law([n](CayleyTable const& t) { return law_prob(t, n); })};
    } else if (id == "ppq-commute") {
      return {id, pair_law(law_ppq_commute)};
    } else if (id == "power-period") {
      return {id, [](CayleyTable const& t) -> std::optional<std::vector<element_type>> {
                if (auto v = law_power_period(t)) {
                  return std::vector<element_type>{
                      v->s, element_type(v->kappa), element_type(v->rho)};
                }
                return std::nullopt;
              }};
    }
    fail(ErrorCode::invalid_input, "unknown law " + id);
  }

  std::vector<std::string> law_ids() {
    return {"ppq", "six-set", "prob", "ppq-commute", "power-period"};
  }

  namespace {

    void finish_report(LawReport& report, std::size_t keep) {
      std::sort(report.counterexamples.begin(),
                report.counterexamples.end(),
                [](Counterexample const& a, Counterexample const& b) {
                  return std::make_tuple(a.table.order(), a.table.flat(), a.elements)
                         < std::make_tuple(b.table.order(), b.table.flat(), b.elements);
                });
      report.counterexample_count = report.counterexamples.size();
      if (report.counterexamples.size() > keep) {
        report.counterexamples.resize(keep);
      }
    }

  }  // namespace

  LawReport scan_law(Law const& law,
                     std::size_t max_order,
                     EnumerationMode mode,
                     std::size_t jobs,
                     std::size_t keep,
                     EnumerationBounds const& bounds) {
    LawReport report;
    report.law   = law.id;
    report.space = std::string(mode == EnumerationMode::labeled ? "labeled" : "up to isomorphism")
                   + " semigroups of order 1.." + std::to_string(max_order);
    std::mutex mtx;
    auto       visit = [&](CayleyTable const& t) {
      auto r = law.check(t);
      std::lock_guard lock(mtx);
      ++report.scanned;
      if (r) {
        report.counterexamples.push_back(Counterexample{t, *r});
      }
    };
    for (std::size_t n = 1; n <= max_order; ++n) {
      if (jobs > 1) {
        for_each_semigroup_unordered(n, mode, visit, jobs, bounds);
      } else {
        for_each_semigroup(
            n,
            mode,
            [&](CayleyTable const& t) {
              visit(t);
              return true;
            },
            bounds);
      }
    }
    finish_report(report, keep);
    return report;
  }

  LawReport scan_law_random_transformations(Law const& law,
                                            std::size_t degree,
                                            std::size_t samples,
                                            std::uint64_t seed,
                                            std::size_t cap,
                                            std::size_t keep) {
    if (degree == 0) {
      fail(ErrorCode::invalid_input, "degree must be positive");
    }
    LawReport report;
    report.law   = law.id;
    report.space = "closures of " + std::to_string(samples)
                   + " random transformation pairs of degree "
                   + std::to_string(degree) + " (seed " + std::to_string(seed) + ")";
    std::mt19937_64                             rng(seed);
    std::uniform_int_distribution<element_type> point(0, element_type(degree - 1));
    auto random_map = [&] {
      std::vector<element_type> images(degree);
      for (auto& x : images) {
        x = point(rng);
      }
      return Transformation(std::move(images));
    };
    for (std::size_t i = 0; i < samples; ++i) {
      auto f = random_map();
      auto g = random_map();
      try {
        auto closure = transformation_closure({f, g}, cap);
        ++report.scanned;
        if (auto r = law.check(closure.cayley())) {
          report.counterexamples.push_back(Counterexample{closure.cayley(), *r});
        }
      } catch (Error const& e) {
        if (e.code() != ErrorCode::cap_exceeded) {
          throw;
        }
      }
    }
    finish_report(report, keep);
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Patterns
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using Index = std::size_t;
    using Match = std::optional<std::vector<Index>>;

    Match match_ppq(PartialTable const& pt, Index x, Index y) {
      auto xy = pt.product(x, y);
      if (!xy || pt.product(x, *xy) != x) {
        return std::nullopt;
      }
      auto xyx = pt.product(*xy, x);
      if (!xyx || *xyx == x) {
        return std::nullopt;
      }
      return std::vector<Index>{x, y, *xy, *xyx};
    }

    Match match_six(PartialTable const& pt, Index x, Index y) {
      auto yx = pt.product(y, x);
      if (!yx) {
        return std::nullopt;
      }
      auto yxx = pt.product(*yx, x);
      auto yxy = pt.product(*yx, y);
      if (!yxx || !yxy || pt.product(*yxx, y) != yx || *yxy == *yx) {
        return std::nullopt;
      }
      auto last = pt.product(*yxy, *yxx);
      if (!last || *last == *yx) {
        return std::nullopt;
      }
      return std::vector<Index>{x, y, *yx, *yxx, *yxy, *last};
    }

    Match match_unit(PartialTable const& pt, Index u, Index a, Index b) {
      for (Index z = 0; z < pt.size(); ++z) {
        if (pt.product(u, z) != z || pt.product(z, u) != z) {
          return std::nullopt;
        }
      }
      if (pt.product(a, b) != u) {
        return std::nullopt;
      }
      auto ba = pt.product(b, a);
      if (!ba || *ba == u) {
        return std::nullopt;
      }
      return std::vector<Index>{u, a, b, *ba};
    }

    Match match_prob(PartialTable const& pt, Index x, Index y, std::size_t n) {
      auto xy = pt.product(x, y);
      auto yx = pt.product(y, x);
      if (!xy || !yx) {
        return std::nullopt;
      }
      std::size_t const K = n * n + 2 * n - 1;
      // index k holds the k-th member of each family, k = 1..K
      std::vector<Index> pyx(K + 1), c1(K + 1), c2(K + 1), c3(K + 1);
      pyx[1] = *yx;
      auto pxy = *xy;
      for (std::size_t k = 1; k <= K; ++k) {
        if (k > 1) {
          auto a = pt.product(pyx[k - 1], *yx);
          auto b = pt.product(pxy, *xy);
          auto c = pt.product(c1[k - 1], *xy);
          if (!a || !b || !c) {
            return std::nullopt;
          }
          pyx[k] = *a, pxy = *b, c1[k] = *c;
        } else {
          auto c = pt.product(*yx, *xy);
          if (!c) {
            return std::nullopt;
          }
          c1[1] = *c;
        }
        auto d = pt.product(*yx, c1[k]);
        auto e = pt.product(c1[k], *yx);
        if (!d || !e) {
          return std::nullopt;
        }
        c2[k] = *d, c3[k] = *e;
      }
      if (c1[n] != pyx[n]) {
        return std::nullopt;
      }
      for (std::size_t m = 1; m <= K; ++m) {
        if (m % n != 0 && c2[m] == c3[m]) {
          return std::nullopt;
        }
      }
      return std::vector<Index>{x, y, *xy, *yx};
    }

    ObstructionCertificate make_cert(PartialTable const& pt,
                                     std::string pattern,
                                     std::size_t n,
                                     std::vector<Index> elements,
                                     std::string statement) {
      ObstructionCertificate c{std::move(pattern), n, std::move(elements), {}, std::move(statement)};
      for (auto i : c.elements) {
        c.names.push_back(pt.name(i));
      }
      return c;
    }

    std::string const ppq_statement
        = "x(xy) = x but (xy)x != x; in a finite semigroup ppq = p forces pqp = p";
    std::string const six_statement
        = "(yxx)y = yx but yxy != yx and (yxy)(yxx) != yx";
    std::string const unit_statement
        = "u is an identity on the set and ab = u but ba != u; one-sided inverses "
          "are two-sided in a finite semigroup";

    std::string prob_statement(std::size_t n) {
      return "(yx)(xy)^" + std::to_string(n) + " = (yx)^" + std::to_string(n)
             + " but (yx)^2(xy)^m != (yx)(xy)^m(yx) for every m < "
             + std::to_string(n * n + 2 * n) + " not divisible by " + std::to_string(n);
    }

  }  // namespace

  bool verify_obstruction(PartialTable const& pt, ObstructionCertificate const& c) {
    auto const& e = c.elements;
    for (auto i : e) {
      if (i >= pt.size()) {
        return false;
      }
    }
    Match m;
    if (c.pattern == "ppq" && e.size() == 4) {
      m = match_ppq(pt, e[0], e[1]);
    } else if (c.pattern == "six-set" && e.size() == 6) {
      m = match_six(pt, e[0], e[1]);
    } else if (c.pattern == "one-sided-unit" && e.size() == 4) {
      m = match_unit(pt, e[0], e[1], e[2]);
    } else if (c.pattern == "prob" && e.size() == 4 && c.n >= 2) {
      m = match_prob(pt, e[0], e[1], c.n);
    }
    return m && *m == e;
  }

  std::vector<ObstructionCertificate> detect_obstruction(PartialTable const& pt,
                                                         std::size_t max_prob_n) {
    if (auto v = check_partial_associativity(pt)) {
      fail(ErrorCode::precondition_failed, "partial table is not associative where defined");
    }
    std::size_t const                   t = pt.size();
    std::vector<ObstructionCertificate> result;
    auto first_pair = [&](auto&& matcher) -> Match {
      for (Index x = 0; x < t; ++x) {
        for (Index y = 0; y < t; ++y) {
          if (auto m = matcher(x, y)) {
            return m;
          }
        }
      }
      return std::nullopt;
    };
    if (auto m = first_pair([&](Index x, Index y) { return match_ppq(pt, x, y); })) {
      result.push_back(make_cert(pt, "ppq", 0, *m, ppq_statement));
    }
    if (auto m = first_pair([&](Index x, Index y) { return match_six(pt, x, y); })) {
      result.push_back(make_cert(pt, "six-set", 0, *m, six_statement));
    }
    for (std::size_t n = 2; n <= max_prob_n; ++n) {
      if (auto m = first_pair([&](Index x, Index y) { return match_prob(pt, x, y, n); })) {
        result.push_back(make_cert(pt, "prob", n, *m, prob_statement(n)));
        break;
      }
    }
    for (Index u = 0; u < t; ++u) {
      if (auto m = first_pair([&](Index a, Index b) { return match_unit(pt, u, a, b); })) {
        result.push_back(make_cert(pt, "one-sided-unit", 0, *m, unit_statement));
        break;
      }
    }
    return result;
  }

  PartialTable prob_pattern_set(std::size_t n) {
    if (n < 2) {
      fail(ErrorCode::invalid_input, "the prob pattern needs n >= 2");
    }
    auto const        rs = tn_presentation(n).system;
    std::size_t const K  = n * n + 2 * n - 1;
    std::vector<Word> words{"a", "b"};
    for (std::size_t k = 1; k <= K; ++k) {
      words.push_back(repeat("ab", k));
      words.push_back(repeat("ba", k));
      words.push_back("ba" + repeat("ab", k));
      words.push_back("baba" + repeat("ab", k));
      words.push_back("ba" + repeat("ab", k) + "ba");
    }
    std::vector<Word>           canon;
    std::map<Word, std::size_t> index;
    for (auto const& w : words) {
      Word nf = normal_form(w, rs);
      if (index.emplace(nf, canon.size()).second) {
        canon.push_back(nf);
      }
    }
    std::size_t const                       t = canon.size();
    std::vector<std::optional<std::size_t>> product(t * t);
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        auto it = index.find(normal_form(canon[i] + canon[j], rs));
        if (it != index.end()) {
          product[i * t + j] = it->second;
        }
      }
    }
    return PartialTable(std::move(canon), std::move(product), std::nullopt);
  }

  ////////////////////////////////////////////////////////////////////////
  // Corroborations
  ////////////////////////////////////////////////////////////////////////

  TnSeparation tn_separation(std::size_t n,
                             std::size_t m,
                             std::size_t max_len,
                             std::size_t max_steps) {
    if (n < 2) {
      fail(ErrorCode::precondition_failed, "T_n separation needs n >= 2");
    }
    if (m == 0 || m % n == 0) {
      fail(ErrorCode::precondition_failed,
           "T_n separation needs m > 0 not divisible by n");
    }
    TnSeparation r;
    r.lhs        = "ba" + repeat("ab", m) + "ba";
    r.rhs        = "baba" + repeat("ab", m);
    r.search     = congruence_search(r.lhs, r.rhs, tn_presentation(n).system, max_len, max_steps);
    r.consistent = !r.search.equal;
    return r;
  }

  PowerCheckReport power_counterexample_check(std::size_t max_len) {
    if (max_len < 5) {
      fail(ErrorCode::precondition_failed, "orbit length cap must be at least 5");
    }
    PowerCheckReport r;
    auto const       orbit = generate_orbit("a", Rule{"a", "aab"}, max_len);
    auto const       rs    = abab_presentation().system;
    r.orbit_size           = orbit.size();

    r.factorisation = true;
    for (auto const& w : orbit) {
      if (w == "a") {
        continue;
      }
      bool found = false;
      if (w.back() == 'b') {
        for (std::size_t k = 1; k + 1 < w.size() && !found; ++k) {
          found = orbit.count(w.substr(0, k)) && orbit.count(w.substr(k, w.size() - 1 - k));
        }
      }
      if (!found) {
        r.factorisation = false;
        r.failures.push_back(w + " does not split as w1 w2 b with w1, w2 in the orbit");
      }
    }

    r.a_in_product = orbit.count("a") && normal_form("aabab", rs) == "a";
    if (!r.a_in_product) {
      r.failures.push_back("aabab does not reduce to a");
    }

    r.shape = true;
    for (auto const& w : orbit) {
      if (!wa_prefix_check(w)) {
        r.shape = false;
        r.failures.push_back(w + " fails the prefix shape");
      }
      if (!wa_shape_check(w)) {
        r.block_shape_exceptions.push_back(w);
      }
    }

    r.aba_excluded = normal_form("aba", rs) == "aba" && !wa_prefix_check("aba") && !wa_shape_check("aba");
    if (!r.aba_excluded) {
      r.failures.push_back("aba is reducible or has the prefix shape");
    }
    return r;
  }

}  // namespace lefkit
