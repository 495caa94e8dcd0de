#pragma once

// Words over single-character alphabets, string rewriting systems and the
// presentations used throughout the toolkit.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lefkit {

  using Word = std::string;

  enum class PresentationKind { monoid, semigroup };

  //! Text form of a word; the empty word prints as "1".
  std::string word_text(Word const& w);

  //! Inverse of word_text: "1" (and "") parse to the empty word.
  Word parse_word(std::string_view text);

  //! base repeated k times, e.g. repeat("ab", 3) == "ababab".
  Word repeat(std::string_view base, std::size_t k);

  struct Rule {
    Word lhs;
    Word rhs;
    bool operator==(Rule const&) const = default;
  };

  class RewritingSystem {
   public:
    RewritingSystem() = default;

    //! Rejects symbols outside the alphabet, empty left-hand sides, and empty
    //! right-hand sides in a semigroup presentation.
    RewritingSystem(std::string alphabet,
                    std::vector<Rule> rules,
                    PresentationKind kind);

    std::string const& alphabet() const noexcept {
      return _alphabet;
    }

    std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }

    PresentationKind kind() const noexcept {
      return _kind;
    }

    //! Throws InvalidInput if w has a foreign symbol, or is empty in a
    //! semigroup presentation.
    void validate(Word const& w) const;

    bool operator==(RewritingSystem const&) const = default;

   private:
    std::string       _alphabet;
    std::vector<Rule> _rules;
    PresentationKind  _kind = PresentationKind::semigroup;
  };

  bool is_length_reducing(RewritingSystem const& rs);

  //! Leftmost position first, lowest rule index first. When rs is not length
  //! reducing a step cap must be given (NotTerminating otherwise); exceeding
  //! the cap throws StepCapExceeded.
  Word normal_form(Word const& w,
                   RewritingSystem const& rs,
                   std::optional<std::size_t> step_cap = std::nullopt);

  bool is_irreducible(Word const& w, RewritingSystem const& rs);

  struct CriticalPair {
    Word        peak;
    Word        reduct1;  // rule1 applied
    Word        reduct2;  // rule2 applied
    std::size_t rule1;
    std::size_t rule2;
    bool        joinable;
  };

  //! All overlap peaks between left-hand sides (proper suffix/prefix overlaps,
  //! including self-overlaps, and containments of one lhs in another).
  std::vector<CriticalPair>
  critical_pairs(RewritingSystem const& rs,
                 std::optional<std::size_t> step_cap = std::nullopt);

  bool is_locally_confluent(RewritingSystem const& rs,
                            std::optional<std::size_t> step_cap = std::nullopt);

  //! One elementary rewrite, in either direction, at a position.
  struct RewriteStep {
    std::size_t rule;
    std::size_t position;
    bool        forward;  // lhs -> rhs
  };

  //! All words obtained from w by one rewrite in either direction, in
  //! deterministic order (position, then rule, forward before backward).
  std::vector<std::pair<Word, RewriteStep>>
  one_step_neighbours(Word const& w, RewritingSystem const& rs);

  struct CongruenceResult {
    bool equal = false;
    //! For equal results: w1 = chain.front(), ..., chain.back() = w2.
    std::vector<Word> chain;
    std::size_t       explored = 0;
    //! For unknown results: true if the whole length-bounded component was
    //! traversed before the step cap was reached.
    bool exhausted = false;

    std::size_t steps() const noexcept {
      return chain.empty() ? 0 : chain.size() - 1;
    }
  };

  //! Breadth-first search over words reachable from w1 by rules used in both
  //! directions, never visiting words longer than max_len. A negative answer
  //! (equal == false) proves nothing.
  CongruenceResult congruence_search(Word const& w1,
                                     Word const& w2,
                                     RewritingSystem const& rs,
                                     std::size_t max_len,
                                     std::size_t max_steps);

  //! Decide equality: normal forms first; when they differ and the system is
  //! not known to be complete, fall back on a bounded congruence search.
  //! Returns nullopt when the question stays open.
  std::optional<bool> words_equal(Word const& w1,
                                  Word const& w2,
                                  RewritingSystem const& rs,
                                  bool complete,
                                  std::size_t max_len = 14,
                                  std::size_t max_steps = 100000);

  ////////////////////////////////////////////////////////////////////////
  // Registry of named presentations
  ////////////////////////////////////////////////////////////////////////

  struct Presentation {
    std::string     name;
    RewritingSystem system;
    //! True when the system is terminating and confluent, so normal forms
    //! decide equality.
    bool complete;
  };

  Presentation bicyclic_presentation();      // B = Mon<a,b | ab = 1>
  Presentation aab_presentation();           // A = Sg<a,b | aab = a>
  Presentation baab_presentation();          // T = Sg<a,b | baab = ba>
  Presentation tn_presentation(std::size_t n);  // Sg<a,b | (ba)(ab)^n = (ba)^n>
  Presentation abab_presentation();          // Mon<a,b | abab = 1, baba = 1>
  Presentation free_presentation();          // free semigroup on a, b

  //! Looks up "B", "A", "T", "S_abab", "free" and "T_<n>".
  Presentation presentation_by_name(std::string_view name);

  std::vector<std::string> presentation_names();

}  // namespace lefkit
