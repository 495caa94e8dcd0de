// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "lefkit/error.hpp"
#include "lefkit/inverse.hpp"
#include "lefkit/normal_forms.hpp"
#include "lefkit/obstructions.hpp"

using namespace lefkit;

namespace {

  // Pinned bounds.
  constexpr std::size_t law_order          = 4;
  constexpr std::size_t raw_filter_order   = 3;
  constexpr std::size_t embed_order        = 5;
  constexpr std::size_t embed_degree       = 3;
  constexpr std::size_t truncation_len     = 2;
  constexpr std::size_t idempotent_len     = 8;
  constexpr std::size_t eta_paths          = 10000;
  constexpr std::size_t eta_path_steps     = 30;
  constexpr std::size_t tn_max_len         = 14;
  constexpr std::size_t tn_max_steps       = 1000000;
  constexpr std::size_t power_len          = 9;
  constexpr std::size_t wrap_order         = 4;
  constexpr std::size_t min_tighten_wraps  = 20;
  constexpr std::size_t inverse_enum_order = 5;
  constexpr std::size_t inverse_max_order  = 7;
  constexpr std::size_t kappa_max          = 8;

  struct Outcome {
    bool        pass;
    std::string detail;
  };

  PartialTable words(char const* system, std::vector<Word> const& ws) {
    std::vector<Word> parsed;
    for (auto const& w : ws) {
      parsed.push_back(parse_word(w));
    }
    return induce(presentation_by_name(system), parsed);
  }

  PartialTable bicyclic4() {
    return words("B", {"1", "a", "b", "ba"});
  }

  PartialTable aab4() {
    return words("A", {"a", "b", "ab", "aba"});
  }

  std::size_t raw_associative_count(std::size_t n) {
    std::size_t cells = n * n, total = 1, count = 0;
    for (std::size_t i = 0; i < cells; ++i) {
      total *= n;
    }
    std::vector<std::size_t> t(cells);
    for (std::size_t code = 0; code < total; ++code) {
      for (std::size_t i = 0, c = code; i < cells; ++i, c /= n) {
        t[i] = c % n;
      }
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        for (std::size_t y = 0; y < n && ok; ++y) {
          for (std::size_t z = 0; z < n && ok; ++z) {
            ok = t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]];
          }
        }
      }
      count += ok;
    }
    return count;
  }

  bool inverse_by_idempotents(CayleyTable const& t) {
    for (element_type x = 0; x < t.order(); ++x) {
      bool regular = false;
      for (element_type y = 0; y < t.order() && !regular; ++y) {
        regular = t(t(x, y), x) == x;
      }
      if (!regular) {
        return false;
      }
    }
    auto es = idempotents(t);
    for (auto e : es) {
      for (auto f : es) {
        if (t(e, f) != t(f, e)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<element_type> all_of(std::size_t n) {
    std::vector<element_type> k(n);
    for (element_type x = 0; x < n; ++x) {
      k[x] = x;
    }
    return k;
  }

  ////////////////////////////////////////////////////////////////////////

  Outcome law_scans() {
    std::string detail;
    bool        pass = true;
    for (std::size_t n = 1; n <= raw_filter_order; ++n) {
      auto enumerated = count_semigroups(n, EnumerationMode::labeled);
      auto raw        = raw_associative_count(n);
      pass            = pass && enumerated == raw;
      detail += "n=" + std::to_string(n) + ": " + std::to_string(enumerated) + "/" + std::to_string(raw) + "; ";
    }
    for (auto id : {"ppq", "six-set", "prob"}) {
      auto r = scan_law(law_by_id(id, 2), law_order);
      pass   = pass && r.holds() && r.scanned == 1 + 8 + 113 + 3492;
      detail += r.law + " " + std::to_string(r.counterexample_count) + "/" + std::to_string(r.scanned) + "; ";
    }
    return {pass, detail};
  }

  Outcome meta_soundness() {
    auto r = scan_law(law_by_id("ppq-commute"), law_order, EnumerationMode::labeled, 1, 1);
    bool ok = !r.holds() && !r.counterexamples.empty()
              && law_ppq_commute(r.counterexamples.front().table).has_value();
    return {ok, std::to_string(r.counterexample_count) + " counterexamples in " + std::to_string(r.scanned)};
  }

  Outcome non_embeddability() {
    bool        pass = true;
    std::string detail;
    for (auto const& [name, pt, pattern] :
         {std::tuple{"bicyclic4", bicyclic4(), "one-sided-unit"}, std::tuple{"aab4", aab4(), "ppq"}}) {
      auto by_order  = embed_search(pt, EmbedSpace{EmbedSpace::Kind::orders, embed_order});
      auto by_degree = embed_search(pt, EmbedSpace{EmbedSpace::Kind::transformation_degree, embed_degree});
      auto certs     = detect_obstruction(pt);
      bool matched   = std::any_of(certs.begin(), certs.end(), [&](auto const& c) {
        return c.pattern == pattern && verify_obstruction(pt, c);
      });
      pass = pass && !by_order.found() && !by_degree.found() && matched;
      detail += std::string(name) + ": " + std::to_string(by_order.candidates) + " tables, "
                + std::to_string(by_degree.candidates) + " monoids, certificate " + (matched ? pattern : "missing")
                + "; ";
    }
    return {pass, detail};
  }

  Outcome positive_control() {
    bool        pass = true;
    std::string detail;
    for (auto const& ws : {std::vector<Word>{"a", "b", "ab"}, std::vector<Word>{"a", "b", "ab", "ba"}}) {
      auto pt    = words("free", ws);
      auto trunc = free_truncation_witness(ws, truncation_len);
      auto found = embed_search(pt, EmbedSpace{EmbedSpace::Kind::orders, embed_order});
      bool ok    = verify_embedding(pt, trunc) && found.found() && verify_embedding(pt, *found.witness);
      pass       = pass && ok;
      detail += std::to_string(ws.size()) + "-set: truncation order " + std::to_string(trunc.target.order())
                + ", search order " + (found.found() ? std::to_string(found.witness->target.order()) : "-") + "; ";
    }
    return {pass, detail};
  }

  Outcome rewriting() {
    bool a_empty = critical_pairs(aab_presentation().system).empty();
    auto sab     = critical_pairs(abab_presentation().system);
    bool sab_ok  = is_locally_confluent(abab_presentation().system)
                  && std::all_of(sab.begin(), sab.end(), [](auto const& p) { return p.joinable; });
    auto t       = critical_pairs(baab_presentation().system);
    auto peak    = std::find_if(t.begin(), t.end(), [](auto const& p) { return p.peak == "baabaab"; });
    auto const ts = baab_presentation().system;
    bool t_ok    = !is_locally_confluent(ts) && peak != t.end() && !peak->joinable
                && std::set<Word>{normal_form(peak->reduct1, ts), normal_form(peak->reduct2, ts)}
                       == std::set<Word>{"baaab", "baa"};
    bool bicyclic = bicyclic_nf("baab") == bicyclic_nf("ba") && bicyclic_nf("bab") == bicyclic_nf("b")
                    && bicyclic_mul(bicyclic_nf("bab"), bicyclic_nf("baa")) == bicyclic_nf("bbaa")
                    && bicyclic_nf("bab") != bicyclic_nf("ba") && bicyclic_nf("babbaa") != bicyclic_nf("ba");
    return {a_empty && sab_ok && t_ok && bicyclic,
            std::string("A pairs ") + std::to_string(critical_pairs(aab_presentation().system).size())
                + ", S_abab peaks " + std::to_string(sab.size()) + " joinable, T peak baabaab "
                + (t_ok ? "non-joinable" : "?") + ", bicyclic identities " + (bicyclic ? "ok" : "wrong")};
  }

  Outcome idempotents_and_eta() {
    auto const      a = aab_presentation().system;
    bool            none = !a_idempotent_scan(idempotent_len).has_value();
    std::mt19937_64 rng(20261017);
    std::size_t     steps = 0, broken = 0;
    for (std::size_t path = 0; path < eta_paths; ++path) {
      Word w;
      for (std::size_t i = 0, len = 1 + rng() % 10; i < len; ++i) {
        w += "ab"[rng() % 2];
      }
      long const e = eta(w);
      for (std::size_t s = 0; s < eta_path_steps; ++s) {
        auto nbrs = one_step_neighbours(w, a);
        if (nbrs.empty()) {
          break;
        }
        w = nbrs[rng() % nbrs.size()].first;
        ++steps;
        broken += eta(w) != e;
      }
    }
    return {none && broken == 0 && steps > 0,
            std::string("idempotent scan to length 8: ") + (none ? "none" : "found") + "; " + std::to_string(steps)
                + " random steps, " + std::to_string(broken) + " eta changes"};
  }

  Outcome tn_checks() {
    bool        pass = true;
    std::string detail;
    for (std::size_t m : {1, 3, 5, 7}) {
      auto r = tn_separation(2, m, tn_max_len, tn_max_steps);
      pass   = pass && r.consistent && !r.search.equal;
      detail += "m=" + std::to_string(m) + " " + (r.consistent ? "consistent" : "EQUAL") + " ("
                + std::to_string(r.search.explored) + " words); ";
    }
    return {pass, detail};
  }

  Outcome power_check() {
    auto r = power_counterexample_check(power_len);
    return {r.holds(),
            "orbit " + std::to_string(r.orbit_size) + ", factorisation " + std::to_string(r.factorisation)
                + ", aabab->a " + std::to_string(r.a_in_product) + ", shape " + std::to_string(r.shape)
                + ", aba excluded " + std::to_string(r.aba_excluded)};
  }

  Outcome wrap_machinery() {
    bool exhausted = !wrap_search(bicyclic4(), wrap_order).found() && !wrap_search(aab4(), wrap_order).found();
    std::size_t wraps = 0, good = 0;
    auto        check = [&](WrapInstance const& wi) {
      ++wraps;
      auto t  = tighten(wi);
      auto tt = tighten(t);
      good += wrap_verify(wi) && wrap_verify(t) && is_accurate_tight(t) && tt.labels == t.labels;
    };
    for (std::size_t n = 1; n <= wrap_order; ++n) {
      for (auto const& s : enumerate_semigroups(n, EnumerationMode::up_to_isomorphism)) {
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
          std::vector<element_type> h;
          for (element_type x = 0; x < n; ++x) {
            if (mask >> x & 1) {
              h.push_back(x);
            }
          }
          check(truncation_wrap(s, h));
          if (h.size() < n) {
            check(self_wrap(s, h));
          }
        }
      }
    }
    // A chain 0 < 1 < 2 with a redundant preimage of the identity of {1, 0}.
    check(WrapInstance{chain_semilattice(3),
                       induce_from_table(two_element_semilattice(), {0}),
                       {Label::out("s1"), Label::in(0), Label::in(0)}});
    return {exhausted && wraps >= min_tighten_wraps && good == wraps,
            std::string("wrap searches ") + (exhausted ? "exhausted" : "FOUND") + "; tighten ok on "
                + std::to_string(good) + "/" + std::to_string(wraps) + " wraps"};
  }

  Outcome inverse_suite() {
    std::size_t tables = 0, misclassified = 0, inverse = 0, wp_ok = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& t : enumerate_semigroups(n, EnumerationMode::labeled)) {
        ++tables;
        auto r = inverse_structure(t);
        misclassified += r.table.has_value() != inverse_by_idempotents(t);
        if (r.table) {
          ++inverse;
          wp_ok += wagner_preston(*r.table).verified();
        }
      }
    }
    auto i2      = make_inverse_table(symmetric_inverse_monoid(2).table);
    auto wp      = wagner_preston(i2);
    auto closed  = inverse_closure(wp.images, 2 * i2.order()).table;
    bool back    = inverse_structure(closed).table.has_value()
                && canonical_form(closed).flat() == canonical_form(i2.cayley).flat();
    auto lift    = ilef_lift(i2, all_of(i2.order()));
    bool ids     = true;
    for (std::size_t i = 0; i < lift.k.size(); ++i) {
      if (i2(lift.k[i], lift.k[i]) == lift.k[i]) {
        ids = ids && lift.lift[i].is_idempotent();
      }
    }
    bool ok = misclassified == 0 && wp_ok == inverse && i2.order() == 7 && wp.verified() && back
              && lift.verified() && ids;
    return {ok,
            std::to_string(tables) + " tables, " + std::to_string(misclassified) + " misclassified, "
                + std::to_string(wp_ok) + "/" + std::to_string(inverse) + " Wagner-Preston verified; I_2 lift "
                + (lift.verified() ? "verified" : "FAILED")};
  }

  // Inverse semigroups of order <= 7: representatives from enumeration,
  // inverse subsemigroups of I_3 and named examples.
  std::vector<std::pair<std::string, InverseTable>> inverse_examples() {
    std::vector<std::pair<std::string, InverseTable>> out;
    std::set<std::vector<element_type>>               seen;
    auto add = [&](std::string const& name, CayleyTable const& t) {
      if (t.order() > inverse_max_order) {
        return;
      }
      if (seen.insert(canonical_form(t).flat()).second) {
        out.emplace_back(name, make_inverse_table(t));
      }
    };
    for (std::size_t n = 1; n <= inverse_enum_order; ++n) {
      for (auto const& t : enumerate_semigroups(n, EnumerationMode::up_to_isomorphism)) {
        if (inverse_structure(t).table) {
          add("order " + std::to_string(n), t);
        }
      }
    }
    auto const i3 = symmetric_inverse_monoid(3).elements;
    for (std::size_t i = 0; i < i3.size(); ++i) {
      for (std::size_t j = i; j < i3.size(); ++j) {
        try {
          auto s = inverse_closure({i3[i], i3[j]}, inverse_max_order);
          if (s.elements.size() >= inverse_enum_order + 1) {
            add("I_3 sub", s.table);
          }
        } catch (Error const&) {
        }
      }
    }
    add("I_2", symmetric_inverse_monoid(2).table);
    add("B_2", brandt_b2().table);
    add("Y_3", chain_semilattice(3));
    add("Z_6", cyclic_group(6));
    add("Z_7", cyclic_group(7));
    return out;
  }

  Outcome inverse_lemmas() {
    auto const  examples = inverse_examples();
    std::size_t wraps = 0, compat_fail = 0, hmin_fail = 0, map_fail = 0, checked = 0;
    std::map<std::size_t, std::size_t> by_order;
    auto run = [&](InverseWrap const& raw) {
      auto iw = tighten_inverse(raw);
      ++wraps;
      auto compat = check_wrap_inverse_compat(iw);
      auto hmin   = check_hmin_lemmas(iw);
      auto map    = ilef_from_wrap(iw);
      checked += compat.checked + hmin.checked;
      compat_fail += !compat.holds() || !inverse_wrap_valid(iw);
      hmin_fail += !hmin.holds();
      map_fail += !map.verified();
    };
    for (auto const& [name, s] : examples) {
      ++by_order[s.order()];
      auto const all = all_of(s.order());
      run(inverse_self_wrap(s, all));
      std::set<std::vector<element_type>> ks;
      for (element_type h = 0; h < s.order(); ++h) {
        ks.insert(with_idempotents(s, {h}));
      }
      for (auto const& k : ks) {
        run(inverse_self_wrap(s, k));
        if (k.size() == s.order()) {
          continue;
        }
        run(inverse_zero_wrap(s, k));
        run(inverse_product_wrap(s, k, two_element_semilattice()));
        run(inverse_product_wrap(s, k, cyclic_group(2)));
      }
    }
    std::string orders;
    for (auto const& [n, c] : by_order) {
      orders += std::to_string(c) + "@" + std::to_string(n) + " ";
    }
    return {compat_fail == 0 && hmin_fail == 0 && map_fail == 0 && by_order.rbegin()->first == inverse_max_order,
            std::to_string(examples.size()) + " semigroups (" + orders + "), " + std::to_string(wraps)
                + " tightened wraps, " + std::to_string(checked) + " checks; failures: compat "
                + std::to_string(compat_fail) + ", h-minimal " + std::to_string(hmin_fail) + ", power map "
                + std::to_string(map_fail)};
  }

  Outcome power_period() {
    std::size_t elements = 0, pairs = 0, violations = 0;
    for (std::size_t n = 1; n <= law_order; ++n) {
      for (auto const& t : enumerate_semigroups(n, EnumerationMode::labeled)) {
        for (element_type s = 0; s < n; ++s) {
          ++elements;
          auto const ip = index_period(t, s);
          for (std::size_t k = 1; k <= kappa_max; ++k) {
            for (std::size_t r = 1; r <= kappa_max; ++r) {
              if (t.power(s, k) == t.power(s, k + r)) {
                ++pairs;
                violations += r < ip.period;
              }
            }
          }
        }
      }
    }
    return {violations == 0 && pairs > 0,
            std::to_string(elements) + " elements, " + std::to_string(pairs) + " coincidences, "
                + std::to_string(violations) + " with a shorter period"};
  }

}  // namespace

int main() {
  std::vector<std::pair<char const*, std::function<Outcome()>>> const criteria{
      {"law scans", law_scans},
      {"meta-soundness", meta_soundness},
      {"non-embeddability", non_embeddability},
      {"positive control", positive_control},
      {"rewriting", rewriting},
      {"idempotents and eta", idempotents_and_eta},
      {"T_n separation", tn_checks},
      {"power semigroup", power_check},
      {"wrap machinery", wrap_machinery},
      {"inverse suite", inverse_suite},
      {"inverse wrap lemmas", inverse_lemmas},
      {"power period", power_period},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto    start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
