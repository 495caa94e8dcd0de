#include "lefkit/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "lefkit/error.hpp"

namespace lefkit {

  std::string word_text(Word const& w) {
    return w.empty() ? std::string("1") : w;
  }

  Word parse_word(std::string_view text) {
    if (text == "1") {
      return Word();
    }
    return Word(text);
  }

  Word repeat(std::string_view base, std::size_t k) {
    Word result;
    result.reserve(base.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      result += base;
    }
    return result;
  }

  RewritingSystem::RewritingSystem(std::string alphabet,
                                   std::vector<Rule> rules,
                                   PresentationKind kind)
      : _alphabet(std::move(alphabet)), _rules(std::move(rules)), _kind(kind) {
    if (_alphabet.empty()) {
      fail(ErrorCode::invalid_input, "empty alphabet");
    }
    auto sorted = _alphabet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail(ErrorCode::invalid_input, "repeated alphabet symbol");
    }
    if (_alphabet.find('1') != std::string::npos) {
      fail(ErrorCode::invalid_input, "'1' is reserved for the empty word");
    }
    for (auto const& r : _rules) {
      if (r.lhs.empty()) {
        fail(ErrorCode::invalid_input, "rule with empty left-hand side");
      }
      if (r.rhs.empty() && _kind == PresentationKind::semigroup) {
        fail(ErrorCode::invalid_input,
             "rule with empty right-hand side in a semigroup presentation");
      }
      for (auto const* side : {&r.lhs, &r.rhs}) {
        for (char c : *side) {
          if (_alphabet.find(c) == std::string::npos) {
            fail(ErrorCode::invalid_input,
                 std::string("rule symbol '") + c + "' not in alphabet");
          }
        }
      }
    }
  }

  void RewritingSystem::validate(Word const& w) const {
    if (w.empty() && _kind == PresentationKind::semigroup) {
      fail(ErrorCode::invalid_input, "empty word in a semigroup presentation");
    }
    for (char c : w) {
      if (_alphabet.find(c) == std::string::npos) {
        fail(ErrorCode::invalid_input,
             std::string("symbol '") + c + "' not in alphabet");
      }
    }
  }

  bool is_length_reducing(RewritingSystem const& rs) {
    return std::all_of(rs.rules().begin(), rs.rules().end(), [](Rule const& r) {
      return r.lhs.size() > r.rhs.size();
    });
  }

  namespace {

    // Leftmost match, lowest rule index at that position.
    std::optional<std::pair<std::size_t, std::size_t>>
    find_redex(Word const& w, RewritingSystem const& rs) {
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (std::size_t r = 0; r < rs.rules().size(); ++r) {
          auto const& lhs = rs.rules()[r].lhs;
          if (w.compare(pos, lhs.size(), lhs) == 0) {
            return std::make_pair(pos, r);
          }
        }
      }
      return std::nullopt;
    }

    Word replace_at(Word const& w,
                    std::size_t pos,
                    std::size_t len,
                    Word const& by) {
      Word result;
      result.reserve(w.size() - len + by.size());
      result.append(w, 0, pos);
      result += by;
      result.append(w, pos + len, Word::npos);
      return result;
    }

  }  // namespace

  Word normal_form(Word const& w,
                   RewritingSystem const& rs,
                   std::optional<std::size_t> step_cap) {
    std::size_t cap;
    if (step_cap) {
      cap = *step_cap;
    } else if (is_length_reducing(rs)) {
      cap = w.size();
    } else {
      fail(ErrorCode::not_terminating,
           "system is not length reducing and no step cap was given");
    }
    Word current = w;
    for (std::size_t steps = 0;; ++steps) {
      auto redex = find_redex(current, rs);
      if (!redex) {
        return current;
      }
      if (steps == cap) {
        fail(ErrorCode::step_cap_exceeded,
             "normal form not reached within " + std::to_string(cap)
                 + " steps");
      }
      auto const& rule = rs.rules()[redex->second];
      current = replace_at(current, redex->first, rule.lhs.size(), rule.rhs);
    }
  }

  bool is_irreducible(Word const& w, RewritingSystem const& rs) {
    return !find_redex(w, rs).has_value();
  }

  std::vector<CriticalPair>
  critical_pairs(RewritingSystem const& rs,
                 std::optional<std::size_t> step_cap) {
    if (!step_cap && !is_length_reducing(rs)) {
      fail(ErrorCode::not_terminating,
           "joinability needs a step cap for a non length-reducing system");
    }
    auto const&               rules = rs.rules();
    std::vector<CriticalPair> result;
    auto add = [&](Word peak, Word r1, Word r2, std::size_t i, std::size_t j) {
      bool joinable = normal_form(r1, rs, step_cap) == normal_form(r2, rs, step_cap);
      result.push_back(CriticalPair{std::move(peak),
                                    std::move(r1),
                                    std::move(r2),
                                    i,
                                    j,
                                    joinable});
    };
    for (std::size_t i = 0; i < rules.size(); ++i) {
      for (std::size_t j = 0; j < rules.size(); ++j) {
        auto const& li = rules[i].lhs;
        auto const& lj = rules[j].lhs;
        // suffix of li equals prefix of lj
        std::size_t const max_overlap = std::min(li.size(), lj.size());
        for (std::size_t k = 1; k < max_overlap; ++k) {
          if (li.compare(li.size() - k, k, lj, 0, k) == 0) {
            Word peak = li + lj.substr(k);
            add(peak,
                rules[i].rhs + lj.substr(k),
                li.substr(0, li.size() - k) + rules[j].rhs,
                i,
                j);
          }
        }
        // lj occurs inside li
        if (i != j && lj.size() <= li.size()) {
          for (std::size_t p = 0; p + lj.size() <= li.size(); ++p) {
            if (li.compare(p, lj.size(), lj) == 0) {
              add(li, rules[i].rhs, replace_at(li, p, lj.size(), rules[j].rhs), i, j);
            }
          }
        }
      }
    }
    return result;
  }

  bool is_locally_confluent(RewritingSystem const& rs,
                            std::optional<std::size_t> step_cap) {
    auto pairs = critical_pairs(rs, step_cap);
    return std::all_of(pairs.begin(), pairs.end(), [](CriticalPair const& p) {
      return p.joinable;
    });
  }

  std::vector<std::pair<Word, RewriteStep>>
  one_step_neighbours(Word const& w, RewritingSystem const& rs) {
    std::vector<std::pair<Word, RewriteStep>> result;
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
      for (std::size_t r = 0; r < rs.rules().size(); ++r) {
        auto const& rule = rs.rules()[r];
        if (w.compare(pos, rule.lhs.size(), rule.lhs) == 0
            && pos + rule.lhs.size() <= w.size()) {
          result.emplace_back(replace_at(w, pos, rule.lhs.size(), rule.rhs),
                              RewriteStep{r, pos, true});
        }
        if (pos + rule.rhs.size() <= w.size()
            && w.compare(pos, rule.rhs.size(), rule.rhs) == 0) {
          // an empty rhs matches everywhere, including at the end
          result.emplace_back(replace_at(w, pos, rule.rhs.size(), rule.lhs),
                              RewriteStep{r, pos, false});
        }
      }
    }
    return result;
  }

  CongruenceResult congruence_search(Word const& w1,
                                     Word const& w2,
                                     RewritingSystem const& rs,
                                     std::size_t max_len,
                                     std::size_t max_steps) {
    if (max_len == 0 || max_steps == 0) {
      fail(ErrorCode::invalid_input, "search caps must be positive");
    }
    rs.validate(w1);
    rs.validate(w2);
    CongruenceResult result;
    if (w1 == w2) {
      result.equal = true;
      result.chain = {w1};
      return result;
    }
    // Endpoints longer than max_len would otherwise make the search vacuous.
    std::size_t const len_cap = std::max({max_len, w1.size(), w2.size()});

    std::unordered_map<Word, Word> parent;
    std::deque<Word>               frontier;
    parent.emplace(w1, Word());
    frontier.push_back(w1);
    while (!frontier.empty()) {
      if (result.explored == max_steps) {
        return result;
      }
      Word current = std::move(frontier.front());
      frontier.pop_front();
      ++result.explored;
      for (auto& [next, step] : one_step_neighbours(current, rs)) {
        if (next.size() > len_cap
            || (next.empty() && rs.kind() == PresentationKind::semigroup)) {
          continue;
        }
        if (!parent.emplace(next, current).second) {
          continue;
        }
        if (next == w2) {
          std::vector<Word> chain{next};
          for (Word at = current;; at = parent.at(at)) {
            chain.push_back(at);
            if (at == w1) {
              break;
            }
          }
          std::reverse(chain.begin(), chain.end());
          result.equal = true;
          result.chain = std::move(chain);
          return result;
        }
        frontier.push_back(std::move(next));
      }
    }
    result.exhausted = true;
    return result;
  }

  std::optional<bool> words_equal(Word const& w1,
                                  Word const& w2,
                                  RewritingSystem const& rs,
                                  bool complete,
                                  std::size_t max_len,
                                  std::size_t max_steps) {
    if (complete) {
      return normal_form(w1, rs) == normal_form(w2, rs);
    }
    Word n1 = normal_form(w1, rs, 10 * (w1.size() + 1));
    Word n2 = normal_form(w2, rs, 10 * (w2.size() + 1));
    if (n1 == n2) {
      return true;
    }
    auto r = congruence_search(n1, n2, rs, max_len, max_steps);
    if (r.equal) {
      return true;
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Registry
  ////////////////////////////////////////////////////////////////////////

  Presentation bicyclic_presentation() {
    return {"B", RewritingSystem("ab", {{"ab", ""}}, PresentationKind::monoid), true};
  }

  Presentation aab_presentation() {
    return {"A", RewritingSystem("ab", {{"aab", "a"}}, PresentationKind::semigroup), true};
  }

  Presentation baab_presentation() {
    return {"T",
            RewritingSystem("ab", {{"baab", "ba"}}, PresentationKind::semigroup),
            false};
  }

  Presentation tn_presentation(std::size_t n) {
    if (n == 0) {
      fail(ErrorCode::invalid_input, "T_n needs n >= 1");
    }
    Word lhs = "ba" + repeat("ab", n);
    Word rhs = repeat("ba", n);
    return {"T_" + std::to_string(n),
            RewritingSystem("ab", {{lhs, rhs}}, PresentationKind::semigroup),
            false};
  }

  Presentation abab_presentation() {
    return {"S_abab",
            RewritingSystem("ab", {{"abab", ""}, {"baba", ""}}, PresentationKind::monoid),
            true};
  }

  Presentation free_presentation() {
    return {"free", RewritingSystem("ab", {}, PresentationKind::semigroup), true};
  }

  Presentation presentation_by_name(std::string_view name) {
    if (name == "B") {
      return bicyclic_presentation();
    } else if (name == "A") {
      return aab_presentation();
    } else if (name == "T") {
      return baab_presentation();
    } else if (name == "S_abab") {
      return abab_presentation();
    } else if (name == "free") {
      return free_presentation();
    } else if (name.starts_with("T_") && name.size() > 2) {
      std::size_t n = 0;
      for (char c : name.substr(2)) {
        if (c < '0' || c > '9') {
          fail(ErrorCode::invalid_input, "bad presentation name " + std::string(name));
        }
        n = 10 * n + std::size_t(c - '0');
      }
      return tn_presentation(n);
    }
    fail(ErrorCode::invalid_input, "unknown presentation " + std::string(name));
  }

  std::vector<std::string> presentation_names() {
    return {"B", "A", "T", "T_<n>", "S_abab", "free"};
  }

}  // namespace lefkit
