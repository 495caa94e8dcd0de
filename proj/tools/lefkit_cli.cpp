// lefkit: command-line front end.
//
// Exit codes: 0 success / property holds, 1 counterexample or failed
// verification, 2 bounded search exhausted without an answer, 3 input error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "lefkit/error.hpp"
#include "lefkit/inverse.hpp"
#include "lefkit/json_io.hpp"
#include "lefkit/normal_forms.hpp"
#include "lefkit/obstructions.hpp"

using namespace lefkit;

namespace {

  constexpr char const* tool_version = "0.1.0";

  enum Exit { ok = 0, counterexample = 1, unknown = 2, input_error = 3 };

  struct Bounds {
    std::size_t max_order   = 5;
    std::size_t max_degree  = 3;
    std::size_t wrap_order  = 4;
    std::size_t max_len     = 14;
    std::size_t max_steps   = 100000;
    std::size_t power_bound = 8;
    std::size_t max_prob_n  = 4;
    std::size_t jobs        = 1;

    json to_json() const {
      return json{{"max_order", max_order},
                  {"max_degree", max_degree},
                  {"wrap_order", wrap_order},
                  {"max_len", max_len},
                  {"max_steps", max_steps},
                  {"power_bound", power_bound},
                  {"max_prob_n", max_prob_n}};
    }
  };

  std::size_t parse_count(std::string const& key, std::string const& value) {
    try {
      std::size_t pos = 0;
      auto        v   = std::stoull(value, &pos);
      if (pos != value.size()) {
        throw std::invalid_argument(value);
      }
      return std::size_t(v);
    } catch (std::exception const&) {
      fail(ErrorCode::invalid_input, "bad value for " + key + ": " + value);
    }
  }

  // key = value lines; '#' starts a comment.
  void read_config(std::string const& path, Bounds& b) {
    std::ifstream in(path);
    if (!in) {
      fail(ErrorCode::invalid_input, "cannot read config " + path);
    }
    std::map<std::string, std::size_t*> const keys{{"max_order", &b.max_order},
                                                   {"max_degree", &b.max_degree},
                                                   {"wrap_order", &b.wrap_order},
                                                   {"max_len", &b.max_len},
                                                   {"max_steps", &b.max_steps},
                                                   {"power_bound", &b.power_bound},
                                                   {"max_prob_n", &b.max_prob_n},
                                                   {"jobs", &b.jobs}};
    std::string line;
    while (std::getline(in, line)) {
      line = line.substr(0, line.find('#'));
      auto eq = line.find('=');
      auto trim = [](std::string s) {
        auto a = s.find_first_not_of(" \t\r");
        auto z = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, z - a + 1);
      };
      if (trim(line).empty()) {
        continue;
      }
      if (eq == std::string::npos) {
        fail(ErrorCode::invalid_input, "config line without '=': " + line);
      }
      auto key = trim(line.substr(0, eq));
      auto it  = keys.find(key);
      if (it == keys.end()) {
        fail(ErrorCode::invalid_input, "unknown config key " + key);
      }
      *it->second = parse_count(key, trim(line.substr(eq + 1)));
    }
  }

  std::string timestamp() {
    auto        now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm     tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }

  std::vector<std::string> split_list(std::string const& s) {
    std::vector<std::string> out;
    std::stringstream        ss(s);
    std::string              item;
    while (std::getline(ss, item, ',')) {
      out.push_back(item);
    }
    return out;
  }

  json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      fail(ErrorCode::invalid_input, "cannot read " + path);
    }
    try {
      return json::parse(in);
    } catch (nlohmann::json::exception const& e) {
      fail(ErrorCode::corrupt_certificate, std::string("not JSON: ") + e.what());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Named inputs
  ////////////////////////////////////////////////////////////////////////

  struct NamedPattern {
    char const*              system;
    std::vector<std::string> words;
  };

  std::map<std::string, NamedPattern> const& named_patterns() {
    static std::map<std::string, NamedPattern> const patterns{
        {"bicyclic4", {"B", {"1", "a", "b", "ba"}}},
        {"aab4", {"A", {"a", "b", "ab", "aba"}}},
        {"sixset-B", {"B", {"a", "b", "ba", "baa", "bbaa"}}},
    };
    return patterns;
  }

  InverseTable builtin_inverse(std::string const& name) {
    if (name.size() == 2 && name[0] == 'I' && name[1] >= '1' && name[1] <= '3') {
      return make_inverse_table(symmetric_inverse_monoid(std::size_t(name[1] - '0')).table);
    } else if (name == "B2") {
      return make_inverse_table(brandt_b2().table);
    } else if (name == "Y2") {
      return make_inverse_table(two_element_semilattice());
    } else if (name == "Z2" || name == "Z3") {
      return make_inverse_table(cyclic_group(std::size_t(name[1] - '0')));
    } else if (name == "chain3") {
      return make_inverse_table(chain_semilattice(3));
    }
    fail(ErrorCode::invalid_input, "unknown inverse semigroup " + name);
  }

  // A document may be the value itself or an envelope holding it.
  json const& unwrap(json const& doc, std::initializer_list<char const*> keys) {
    json const* j = &doc;
    if (j->contains("payload")) {
      j = &j->at("payload");
    } else if (j->contains("result")) {
      j = &j->at("result");
    }
    for (auto k : keys) {
      if (j->contains(k) && j->at(k).is_object()) {
        return j->at(k);
      }
    }
    return *j;
  }

  struct SetSource {
    std::string pattern, system, words, input;

    void add_options(CLI::App* app) {
      app->add_option("--pattern", pattern, "named set: bicyclic4, aab4, sixset-B");
      app->add_option("--system", system, "presentation: B, A, T, T_<n>, S_abab, free");
      app->add_option("--words", words, "comma-separated words (1 = empty word)");
      app->add_option("--input", input, "JSON file holding a partial table");
    }

    PartialTable load(Bounds const& b) const {
      if (!input.empty()) {
        return partial_table_from_json(unwrap(read_json_file(input), {"set", "h"}));
      }
      std::string sys = system;
      std::vector<std::string> ws = split_list(words);
      if (!pattern.empty()) {
        auto it = named_patterns().find(pattern);
        if (it == named_patterns().end()) {
          fail(ErrorCode::invalid_input, "unknown pattern " + pattern);
        }
        sys = it->second.system;
        ws  = it->second.words;
      }
      if (sys.empty() || ws.empty()) {
        fail(ErrorCode::invalid_input, "give --pattern, --system with --words, or --input");
      }
      std::vector<Word> parsed;
      for (auto const& w : ws) {
        parsed.push_back(parse_word(w));
      }
      return induce(presentation_by_name(sys), parsed, b.max_len, b.max_steps);
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Output
  ////////////////////////////////////////////////////////////////////////

  struct Output {
    std::string format = "json";
    std::string path;
  };

  void text_lines(json const& j, std::string const& prefix, std::ostream& out) {
    if (j.is_object()) {
      for (auto const& [k, v] : j.items()) {
        text_lines(v, prefix.empty() ? k : prefix + "." + k, out);
      }
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
      out << prefix << ": " << j.size() << " entries\n";
    } else {
      out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
  }

  void emit(json const& doc, Output const& o) {
    std::ostringstream out;
    if (o.format == "text") {
      text_lines(doc, "", out);
    } else {
      out << doc.dump(2) << "\n";
    }
    if (o.path.empty()) {
      std::cout << out.str();
    } else {
      std::ofstream f(o.path);
      if (!f) {
        fail(ErrorCode::invalid_input, "cannot write " + o.path);
      }
      f << out.str();
    }
  }

  json certificate(std::string const& kind, Bounds const& b, json payload) {
    return json{{"schema", schema_version},
                {"kind", kind},
                {"tool_version", tool_version},
                {"bounds", b.to_json()},
                {"timestamp", timestamp()},
                {"payload", std::move(payload)}};
  }

  json document(std::string const& verb, json result) {
    return json{{"schema", schema_version}, {"verb", verb}, {"result", std::move(result)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification of certificates
  ////////////////////////////////////////////////////////////////////////

  bool bounds_well_formed(json const& b) {
    if (!b.is_object() || b.empty()) {
      return false;
    }
    for (auto const& [k, v] : b.items()) {
      if (!v.is_number_unsigned()) {
        return false;
      }
    }
    return true;
  }

  // Replays a chain of one-step rewrites.
  bool chain_valid(std::vector<Word> const& chain, RewritingSystem const& rs) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      auto nbrs = one_step_neighbours(chain[i], rs);
      if (std::none_of(nbrs.begin(), nbrs.end(), [&](auto const& p) { return p.first == chain[i + 1]; })) {
        return false;
      }
    }
    return true;
  }

  int verify_document(json const& doc) {
    if (!doc.is_object() || doc.value("schema", 0) != schema_version) {
      fail(ErrorCode::corrupt_certificate, "missing or unsupported schema");
    }
    if (!doc.contains("kind")) {
      if (!doc.contains("verb") || !doc.contains("result")) {
        fail(ErrorCode::corrupt_certificate, "neither a certificate nor a result document");
      }
      return ok;
    }
    auto const kind = doc.at("kind").get<std::string>();
    if (!doc.contains("payload") || !doc.contains("bounds")) {
      fail(ErrorCode::corrupt_certificate, "certificate without payload or bounds");
    }
    auto const& p = doc.at("payload");
    try {
      if (kind == "embedding") {
        auto pt = partial_table_from_json(p.at("set"));
        auto w  = embedding_from_json(p.at("witness"));
        return verify_embedding(pt, w) ? ok : counterexample;
      } else if (kind == "exhausted") {
        partial_table_from_json(p.at("set"));
        bool good = bounds_well_formed(doc.at("bounds")) && !p.at("space").get<std::string>().empty()
                    && p.at("candidates").is_number_unsigned();
        return good ? ok : counterexample;
      } else if (kind == "wrap") {
        auto wi = wrap_from_json(p.at("wrap"));
        bool good = wrap_verify(wi);
        if (good && p.contains("accurate_tight") && p.at("accurate_tight").get<bool>()) {
          good = is_accurate_tight(wi);
        }
        return good ? ok : counterexample;
      } else if (kind == "law-report") {
        auto r   = law_report_from_json(p.at("report"));
        auto law = law_by_id(p.at("law_id").get<std::string>(), p.at("n").get<std::size_t>());
        if (law.id != r.law || p.at("report").at("holds").get<bool>() != r.holds()) {
          return counterexample;
        }
        for (auto const& c : r.counterexamples) {
          auto w = law.check(c.table);
          if (!w || *w != c.elements) {
            return counterexample;
          }
        }
        return ok;
      } else if (kind == "obstruction") {
        auto pt    = partial_table_from_json(p.at("set"));
        auto certs = p.at("certificates");
        if (certs.empty()) {
          return counterexample;
        }
        for (auto const& c : certs) {
          if (!verify_obstruction(pt, obstruction_from_json(c))) {
            return counterexample;
          }
        }
        return ok;
      } else if (kind == "lemma-report") {
        auto const lemma  = p.at("lemma").get<std::string>();
        auto const& input = p.at("input");
        auto const& rep   = p.at("report");
        if (lemma == "tn-separation") {
          auto const n = input.at("n").get<std::size_t>();
          std::vector<Word> chain;
          for (auto const& w : rep.at("search").at("chain")) {
            chain.push_back(parse_word(w.get<std::string>()));
          }
          bool equal = rep.at("search").at("equal").get<bool>();
          if (rep.at("consistent").get<bool>() == equal) {
            return counterexample;
          }
          if (equal) {
            bool good = chain.size() >= 2 && chain.front() == rep.at("lhs").get<std::string>()
                        && chain.back() == rep.at("rhs").get<std::string>()
                        && chain_valid(chain, tn_presentation(n).system);
            return good ? ok : counterexample;
          }
          return chain.empty() ? ok : counterexample;
        }
        json recomputed;
        if (lemma == "power-check") {
          recomputed = to_json(power_counterexample_check(input.at("max_len").get<std::size_t>()));
        } else if (lemma == "wagner-preston") {
          recomputed = to_json(wagner_preston(inverse_table_from_json(input.at("table"))));
        } else if (lemma == "ilef-lift") {
          auto it = inverse_table_from_json(input.at("table"));
          recomputed = to_json(ilef_lift(it, input.at("k").get<std::vector<element_type>>()));
        } else if (lemma == "ilef-from-wrap") {
          auto iw = inverse_wrap_from_json(input.at("wrap"));
          recomputed = to_json(ilef_from_wrap(iw, input.at("h").get<std::vector<element_type>>()));
        } else if (lemma == "inverse-wrap") {
          auto iw = inverse_wrap_from_json(input.at("wrap"));
          recomputed = json{{"compat", to_json(check_wrap_inverse_compat(iw))},
                            {"hmin", to_json(check_hmin_lemmas(iw))}};
        } else {
          fail(ErrorCode::corrupt_certificate, "unknown lemma " + lemma);
        }
        return recomputed == rep ? ok : counterexample;
      }
    } catch (nlohmann::json::exception const& e) {
      fail(ErrorCode::corrupt_certificate, e.what());
    }
    fail(ErrorCode::corrupt_certificate, "unknown certificate kind " + kind);
  }

  int exit_for(Error const& e) {
    switch (e.code()) {
      case ErrorCode::cap_exceeded:
      case ErrorCode::step_cap_exceeded:
      case ErrorCode::undecided_equality:
        return unknown;
      default:
        return input_error;
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroups, partial tables and local embeddability"};
  app.require_subcommand(1);
  app.fallthrough();

  Bounds      bounds;
  Output      out;
  std::string config;
  std::size_t jobs = 0;
  app.add_option("--format", out.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", out.path, "write the document to a file");
  app.add_option("--config", config, "key=value file of bounds");
  app.add_option("--jobs", jobs, "worker threads (default LEFKIT_JOBS or 1)");

  // Flags that override config values; 0 means unset.
  std::map<std::string, std::size_t> overrides;
  auto bound_option = [&](CLI::App* sub, std::string const& flag, std::string const& key, std::string const& help) {
    sub->add_option(flag, overrides[key], help);
  };

  std::function<int()> action;
  auto apply_bounds = [&] {
    if (!config.empty()) {
      read_config(config, bounds);
    }
    if (char const* env = std::getenv("LEFKIT_JOBS")) {
      bounds.jobs = parse_count("LEFKIT_JOBS", env);
    }
    if (jobs != 0) {
      bounds.jobs = jobs;
    }
    std::map<std::string, std::size_t*> const keys{{"max_order", &bounds.max_order},
                                                   {"max_degree", &bounds.max_degree},
                                                   {"wrap_order", &bounds.wrap_order},
                                                   {"max_len", &bounds.max_len},
                                                   {"max_steps", &bounds.max_steps},
                                                   {"power_bound", &bounds.power_bound},
                                                   {"max_prob_n", &bounds.max_prob_n}};
    for (auto const& [k, v] : overrides) {
      if (v != 0) {
        *keys.at(k) = v;
      }
    }
    bounds.jobs = std::max<std::size_t>(bounds.jobs, 1);
  };

  // normal-form
  auto*       nf = app.add_subcommand("normal-form", "reduce a word");
  std::string nf_system, nf_word;
  nf->add_option("--system", nf_system)->required();
  nf->add_option("--word", nf_word)->required();
  nf->callback([&] {
    action = [&] {
      auto p = presentation_by_name(nf_system);
      auto w = parse_word(nf_word);
      p.system.validate(w);
      auto r = p.complete || is_length_reducing(p.system) ? normal_form(w, p.system)
                                                          : normal_form(w, p.system, 100 * (w.size() + 1));
      emit(document("normal-form",
                    json{{"system", p.name},
                         {"word", word_text(w)},
                         {"normal_form", word_text(r)},
                         {"complete", p.complete}}),
           out);
      return int(ok);
    };
  });

  // confluence
  auto*       conf = app.add_subcommand("confluence", "critical pairs of a presentation");
  std::string conf_system;
  conf->add_option("--system", conf_system)->required();
  conf->callback([&] {
    action = [&] {
      auto p     = presentation_by_name(conf_system);
      auto pairs = critical_pairs(p.system);
      json list  = json::array();
      bool all   = true;
      for (auto const& cp : pairs) {
        list.push_back(to_json(cp));
        all = all && cp.joinable;
      }
      emit(document("confluence", json{{"system", p.name}, {"locally_confluent", all}, {"critical_pairs", list}}),
           out);
      return int(all ? ok : counterexample);
    };
  });

  // nf-table
  auto*     nft = app.add_subcommand("nf-table", "partial multiplication table of a set of words");
  SetSource nft_src;
  nft_src.add_options(nft);
  bound_option(nft, "--max-len", "max_len", "congruence search length cap");
  nft->callback([&] {
    action = [&] {
      emit(document("nf-table", json{{"set", to_json(nft_src.load(bounds))}}), out);
      return int(ok);
    };
  });

  // embed-search
  auto*       emb = app.add_subcommand("embed-search", "search finite semigroups for an embedding");
  SetSource   emb_src;
  std::size_t emb_free = 0;
  emb_src.add_options(emb);
  bound_option(emb, "--max-order", "max_order", "largest target order");
  bound_option(emb, "--max-degree", "max_degree", "largest transformation degree");
  emb->add_option("--free-truncation", emb_free, "build the truncated free semigroup witness of this length");
  emb->callback([&] {
    action = [&] {
      auto pt = emb_src.load(bounds);
      if (emb_free != 0) {
        std::vector<Word> words;
        for (auto const& n : pt.names()) {
          words.push_back(parse_word(n));
        }
        auto w = free_truncation_witness(words, emb_free);
        emit(certificate("embedding", bounds, json{{"set", to_json(pt)}, {"witness", to_json(w)}}), out);
        return int(verify_embedding(pt, w) ? ok : counterexample);
      }
      EmbedLimits limits{std::max<std::size_t>(bounds.max_order, 5), std::max<std::size_t>(bounds.max_degree, 4)};
      auto by_order = embed_search(pt, EmbedSpace{EmbedSpace::Kind::orders, bounds.max_order}, limits);
      if (by_order.found()) {
        emit(certificate("embedding", bounds, json{{"set", to_json(pt)}, {"witness", to_json(*by_order.witness)}}),
             out);
        return int(ok);
      }
      auto by_degree
          = embed_search(pt, EmbedSpace{EmbedSpace::Kind::transformation_degree, bounds.max_degree}, limits);
      if (by_degree.found()) {
        emit(certificate("embedding", bounds, json{{"set", to_json(pt)}, {"witness", to_json(*by_degree.witness)}}),
             out);
        return int(ok);
      }
      emit(certificate("exhausted",
                       bounds,
                       json{{"search", "embed"},
                            {"set", to_json(pt)},
                            {"space", by_order.exhausted + "; " + by_degree.exhausted},
                            {"candidates", by_order.candidates + by_degree.candidates}}),
           out);
      return int(unknown);
    };
  });

  // wrap-search
  auto*     wrs = app.add_subcommand("wrap-search", "search finite semigroups wrapping a set");
  SetSource wrs_src;
  wrs_src.add_options(wrs);
  bound_option(wrs, "--max-order", "wrap_order", "largest wrapping order");
  wrs->callback([&] {
    action = [&] {
      auto pt = wrs_src.load(bounds);
      auto r  = wrap_search(pt, bounds.wrap_order, EmbedLimits{std::max<std::size_t>(bounds.wrap_order, 5), 4});
      if (r.found()) {
        emit(certificate("wrap", bounds, json{{"wrap", to_json(*r.witness)}, {"accurate_tight", false}}), out);
        return int(ok);
      }
      emit(certificate("exhausted",
                       bounds,
                       json{{"search", "wrap"}, {"set", to_json(pt)}, {"space", r.exhausted}, {"candidates", r.candidates}}),
           out);
      return int(unknown);
    };
  });

  // tighten
  auto*       tig = app.add_subcommand("tighten", "relabel non-accurate preimages of a wrap");
  std::string tig_input, tig_designated;
  tig->add_option("--input", tig_input, "wrap certificate or wrap JSON")->required();
  tig->add_option("--designated", tig_designated, "comma-separated designated preimages");
  tig->callback([&] {
    action = [&] {
      auto wi = wrap_from_json(unwrap(read_json_file(tig_input), {"wrap"}));
      std::optional<std::vector<element_type>> designated;
      if (!tig_designated.empty()) {
        designated.emplace();
        for (auto const& s : split_list(tig_designated)) {
          designated->push_back(element_type(parse_count("--designated", s)));
        }
      }
      auto t = tighten(wi, designated);
      emit(certificate("wrap", bounds, json{{"wrap", to_json(t)}, {"accurate_tight", is_accurate_tight(t, designated)}}),
           out);
      return int(wrap_verify(t) ? ok : counterexample);
    };
  });

  // scan-law
  auto*       scan = app.add_subcommand("scan-law", "check a law on all small semigroups");
  std::string scan_law_id = "ppq", scan_mode = "labeled";
  std::size_t scan_n = 2, scan_keep = 16;
  scan->add_option("--law", scan_law_id)->check(CLI::IsMember(law_ids()));
  scan->add_option("--n", scan_n, "exponent of the prob law");
  scan->add_option("--mode", scan_mode)->check(CLI::IsMember({"labeled", "iso"}));
  scan->add_option("--keep", scan_keep, "counterexamples kept in the report");
  bound_option(scan, "--max-order", "max_order", "largest order scanned");
  scan->callback([&] {
    action = [&] {
      auto law  = law_by_id(scan_law_id, scan_n);
      auto mode = scan_mode == "iso" ? EnumerationMode::up_to_isomorphism : EnumerationMode::labeled;
      auto r    = scan_law(law, bounds.max_order, mode, bounds.jobs, scan_keep);
      emit(certificate("law-report", bounds, json{{"law_id", scan_law_id}, {"n", scan_n}, {"report", to_json(r)}}),
           out);
      return int(r.holds() ? ok : counterexample);
    };
  });

  // detect-obstruction
  auto*     det = app.add_subcommand("detect-obstruction", "match known non-embeddable patterns");
  SetSource det_src;
  det_src.add_options(det);
  det->callback([&] {
    action = [&] {
      auto pt    = det_src.load(bounds);
      auto certs = detect_obstruction(pt, bounds.max_prob_n);
      json list  = json::array();
      for (auto const& c : certs) {
        list.push_back(to_json(c));
      }
      emit(certificate("obstruction", bounds, json{{"set", to_json(pt)}, {"certificates", list}}), out);
      return int(certs.empty() ? unknown : ok);
    };
  });

  // tn-check
  auto*       tn = app.add_subcommand("tn-check", "bounded search for (ba)(ab)^m(ba) = (ba)^2(ab)^m in T_n");
  std::size_t tn_n = 2, tn_m = 1;
  tn->add_option("--n", tn_n);
  tn->add_option("--m", tn_m);
  bound_option(tn, "--max-len", "max_len", "longest word visited");
  bound_option(tn, "--max-steps", "max_steps", "words expanded");
  tn->callback([&] {
    action = [&] {
      auto r = tn_separation(tn_n, tn_m, bounds.max_len, bounds.max_steps);
      emit(certificate("lemma-report",
                       bounds,
                       json{{"lemma", "tn-separation"}, {"input", json{{"n", tn_n}, {"m", tn_m}}}, {"report", to_json(r)}}),
           out);
      return int(r.consistent ? ok : counterexample);
    };
  });

  // power-check
  auto*       pc = app.add_subcommand("power-check", "orbit checks for the power semigroup of Mon<a,b | abab, baba>");
  std::size_t pc_len = 9;
  pc->add_option("--max-len", pc_len, "orbit length cap");
  pc->callback([&] {
    action = [&] {
      auto r = power_counterexample_check(pc_len);
      emit(certificate("lemma-report",
                       bounds,
                       json{{"lemma", "power-check"}, {"input", json{{"max_len", pc_len}}}, {"report", to_json(r)}}),
           out);
      return int(r.holds() ? ok : counterexample);
    };
  });

  // inverse-table inputs
  struct InverseSource {
    std::string builtin, input;
    void        add_options(CLI::App* sub) {
      sub->add_option("--builtin", builtin, "I1, I2, I3, B2, Y2, Z2, Z3, chain3");
      sub->add_option("--input", input, "JSON Cayley table");
    }
    InverseTable load() const {
      if (!input.empty()) {
        auto const doc = read_json_file(input);
        auto       r   = inverse_structure(cayley_from_json(unwrap(doc, {"table"})));
        if (!r.table) {
          fail(ErrorCode::precondition_failed,
               "not an inverse semigroup: element " + std::to_string(r.witness) + " has "
                   + std::to_string(r.partners) + " inverses");
        }
        return *r.table;
      }
      if (builtin.empty()) {
        fail(ErrorCode::invalid_input, "give --builtin or --input");
      }
      return builtin_inverse(builtin);
    }
  };

  auto          wp = app.add_subcommand("wagner-preston", "represent an inverse semigroup by partial bijections");
  InverseSource wp_src;
  wp_src.add_options(wp);
  wp->callback([&] {
    action = [&] {
      auto it = wp_src.load();
      auto r  = wagner_preston(it);
      emit(certificate("lemma-report",
                       bounds,
                       json{{"lemma", "wagner-preston"}, {"input", json{{"table", to_json(it)}}}, {"report", to_json(r)}}),
           out);
      return int(r.verified() ? ok : counterexample);
    };
  });

  auto          il = app.add_subcommand("ilef-lift", "lift the regular representation to partial bijections");
  InverseSource il_src;
  std::string   il_k;
  il_src.add_options(il);
  il->add_option("--k", il_k, "comma-separated elements (default all)");
  il->callback([&] {
    action = [&] {
      auto                      it = il_src.load();
      std::vector<element_type> k;
      for (auto const& s : split_list(il_k)) {
        k.push_back(element_type(parse_count("--k", s)));
      }
      if (k.empty()) {
        for (element_type x = 0; x < it.order(); ++x) {
          k.push_back(x);
        }
      }
      auto r = ilef_lift(it, k);
      emit(certificate("lemma-report",
                       bounds,
                       json{{"lemma", "ilef-lift"}, {"input", json{{"table", to_json(it)}, {"k", k}}}, {"report", to_json(r)}}),
           out);
      return int(r.verified() ? ok : counterexample);
    };
  });

  auto          ifw = app.add_subcommand("ilef-from-wrap", "power-semigroup map from a tight inverse wrap");
  InverseSource ifw_src;
  std::string   ifw_h, ifw_wrap = "self";
  ifw_src.add_options(ifw);
  ifw->add_option("--elements", ifw_h, "comma-separated elements of H (default all)");
  ifw->add_option("--wrap", ifw_wrap, "self, zero, product-Y2, product-Z2")
      ->check(CLI::IsMember({"self", "zero", "product-Y2", "product-Z2"}));
  bound_option(ifw, "--power-bound", "power_bound", "largest D whose power semigroup is built");
  ifw->callback([&] {
    action = [&] {
      auto                      s = ifw_src.load();
      std::vector<element_type> h;
      for (auto const& x : split_list(ifw_h)) {
        h.push_back(element_type(parse_count("--elements", x)));
      }
      if (h.empty()) {
        for (element_type x = 0; x < s.order(); ++x) {
          h.push_back(x);
        }
      }
      auto        k = with_idempotents(s, h);
      InverseWrap iw;
      if (ifw_wrap == "self") {
        iw = inverse_self_wrap(s, k);
      } else if (ifw_wrap == "zero") {
        iw = inverse_zero_wrap(s, k);
      } else {
        iw = inverse_product_wrap(s, k, ifw_wrap == "product-Y2" ? two_element_semilattice() : cyclic_group(2));
      }
      iw     = tighten_inverse(iw);
      auto r = ilef_from_wrap(iw, h, bounds.power_bound);
      emit(certificate("lemma-report",
                       bounds,
                       json{{"lemma", "ilef-from-wrap"},
                            {"input", json{{"wrap", to_json(iw)}, {"h", h}}},
                            {"report", to_json(r)}}),
           out);
      return int(r.verified() ? ok : counterexample);
    };
  });

  // verify
  auto*       ver = app.add_subcommand("verify", "re-check a certificate without repeating searches");
  std::string ver_input;
  ver->add_option("--input", ver_input)->required();
  ver->callback([&] {
    action = [&] {
      int code = verify_document(read_json_file(ver_input));
      emit(document("verify", json{{"input", ver_input}, {"verified", code == ok}}), out);
      return code;
    };
  });

  // enumerate
  auto*       en = app.add_subcommand("enumerate", "list or count semigroups of an order");
  std::size_t en_order = 3;
  std::string en_mode  = "labeled";
  bool        en_count = false;
  en->add_option("--order", en_order)->required();
  en->add_option("--mode", en_mode)->check(CLI::IsMember({"labeled", "iso"}));
  en->add_flag("--count-only", en_count);
  en->callback([&] {
    action = [&] {
      auto mode = en_mode == "iso" ? EnumerationMode::up_to_isomorphism : EnumerationMode::labeled;
      json result{{"order", en_order}, {"mode", en_mode}};
      if (en_count) {
        result["count"] = count_semigroups(en_order, mode);
      } else {
        json tables = json::array();
        for (auto const& t : enumerate_semigroups(en_order, mode)) {
          tables.push_back(t.rows());
        }
        result["count"]  = tables.size();
        result["tables"] = tables;
      }
      emit(document("enumerate", result), out);
      return int(ok);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : int(input_error);
  }
  try {
    apply_bounds();
    return action();
  } catch (Error const& e) {
    json doc{{"schema", schema_version},
             {"error", json{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}}};
    std::cout << doc.dump(2) << "\n";
    std::cerr << "lefkit: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return exit_for(e);
  } catch (std::exception const& e) {
    std::cerr << "lefkit: " << e.what() << "\n";
    return int(input_error);
  }
}
