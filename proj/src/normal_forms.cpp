#include "lefkit/normal_forms.hpp"

#include <algorithm>
#include <deque>

#include "lefkit/error.hpp"

namespace lefkit {

  namespace {
    void require_ab(Word const& w) {
      for (char c : w) {
        if (c != 'a' && c != 'b') {
          fail(ErrorCode::invalid_input, "word must be over {a, b}");
        }
      }
    }
  }  // namespace

  BicyclicNF bicyclic_nf(Word const& w) {
    require_ab(w);
    BicyclicNF x;
    for (char c : w) {
      if (c == 'a') {
        ++x.j;
      } else if (x.j > 0) {
        --x.j;
      } else {
        ++x.i;
      }
    }
    return x;
  }

  BicyclicNF bicyclic_mul(BicyclicNF x, BicyclicNF y) {
    std::size_t const m = std::min(x.j, y.i);
    return BicyclicNF{x.i + y.i - m, y.j + x.j - m};
  }

  Word bicyclic_word(BicyclicNF x) {
    return Word(x.i, 'b') + Word(x.j, 'a');
  }

  ANormalForm a_nf(Word const& w) {
    require_ab(w);
    if (w.empty()) {
      fail(ErrorCode::invalid_input, "A is a semigroup; empty word");
    }
    Word const  r = normal_form(w, aab_presentation().system);
    ANormalForm nf;
    std::size_t pos = 0;
    auto        b_run = [&] {
      std::size_t k = 0;
      while (pos < r.size() && r[pos] == 'b') {
        ++k, ++pos;
      }
      return k;
    };
    nf.beta.push_back(b_run());
    while (pos + 1 < r.size() && r[pos] == 'a' && r[pos + 1] == 'b') {
      ++pos;
      nf.beta.push_back(b_run());
    }
    while (pos < r.size() && r[pos] == 'a') {
      ++nf.alpha, ++pos;
    }
    if (pos != r.size()) {
      fail(ErrorCode::parse_error, "irreducible word " + r + " has unexpected shape");
    }
    return nf;
  }

  Word a_word(ANormalForm const& nf) {
    if (nf.beta.empty()) {
      fail(ErrorCode::invalid_input, "normal form needs beta[0]");
    }
    Word w(nf.beta[0], 'b');
    for (std::size_t k = 1; k < nf.beta.size(); ++k) {
      w += 'a';
      w += Word(nf.beta[k], 'b');
    }
    w += Word(nf.alpha, 'a');
    return w;
  }

  long eta(Word const& w) {
    require_ab(w);
    long result = 0;
    for (char c : w) {
      result += c == 'a' ? 1 : -1;
    }
    return result;
  }

  std::optional<Word> a_idempotent_scan(std::size_t max_len) {
    auto const rs = aab_presentation().system;
    for (std::size_t len = 1; len <= max_len; ++len) {
      for (std::size_t bits = 0; bits < (std::size_t(1) << len); ++bits) {
        Word w(len, 'a');
        for (std::size_t k = 0; k < len; ++k) {
          if (bits >> (len - 1 - k) & 1) {
            w[k] = 'b';
          }
        }
        if (is_irreducible(w, rs) && normal_form(w + w, rs) == w) {
          return w;
        }
      }
    }
    return std::nullopt;
  }

  std::set<Word> generate_orbit(Word const& seed, Rule const& rule, std::size_t cap_len) {
    if (cap_len < seed.size()) {
      fail(ErrorCode::invalid_input, "cap_len shorter than the seed");
    }
    if (rule.lhs.empty()) {
      fail(ErrorCode::invalid_input, "rule with empty left-hand side");
    }
    std::set<Word>   orbit{seed};
    std::deque<Word> frontier{seed};
    while (!frontier.empty()) {
      Word w = std::move(frontier.front());
      frontier.pop_front();
      for (std::size_t pos = 0; pos + rule.lhs.size() <= w.size(); ++pos) {
        if (w.compare(pos, rule.lhs.size(), rule.lhs) != 0) {
          continue;
        }
        Word next = w.substr(0, pos) + rule.rhs + w.substr(pos + rule.lhs.size());
        if (next.size() <= cap_len && orbit.insert(next).second) {
          frontier.push_back(std::move(next));
        }
      }
    }
    return orbit;
  }

  bool wa_shape_check(Word const& w) {
    if (w.empty() || w.front() != 'a') {
      return false;
    }
    std::size_t pos   = 0;
    bool        first = true;
    while (pos < w.size()) {
      std::size_t alpha = 0, beta = 0;
      while (pos < w.size() && w[pos] == 'a') {
        ++alpha, ++pos;
      }
      while (pos < w.size() && w[pos] == 'b') {
        ++beta, ++pos;
      }
      if (pos < w.size() && w[pos] != 'a') {
        return false;  // foreign symbol
      }
      if (first ? alpha <= beta : alpha < beta) {
        return false;
      }
      first = false;
    }
    return true;
  }

  bool wa_prefix_check(Word const& w) {
    long balance = 0;
    for (auto c : w) {
      if (c != 'a' && c != 'b') {
        return false;
      }
      balance += c == 'a' ? 1 : -1;
      if (balance <= 0) {
        return false;
      }
    }
    return !w.empty();
  }

}  // namespace lefkit
