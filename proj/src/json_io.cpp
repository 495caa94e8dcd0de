#include "lefkit/json_io.hpp"

#include "lefkit/error.hpp"

namespace lefkit {

  namespace {

    [[noreturn]] void corrupt(std::string const& what) {
      fail(ErrorCode::corrupt_certificate, what);
    }

    // Runs a reader, turning JSON access errors into CorruptCertificate.
    template <typename F>
    auto guarded(char const* what, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (nlohmann::json::exception const& e) {
        corrupt(std::string("bad ") + what + ": " + e.what());
      }
    }

    std::vector<element_type> elements_from_json(json const& j) {
      std::vector<element_type> v;
      for (auto const& x : j) {
        v.push_back(x.get<element_type>());
      }
      return v;
    }

  }  // namespace

  json to_json(CayleyTable const& t) {
    return json{{"order", t.order()}, {"table", t.rows()}};
  }

  CayleyTable cayley_from_json(json const& j) {
    return guarded("table", [&] {
      auto rows = j.at("table").get<std::vector<std::vector<element_type>>>();
      if (j.contains("order") && j.at("order").get<std::size_t>() != rows.size()) {
        corrupt("order does not match the table");
      }
      try {
        return CayleyTable::make(rows);
      } catch (Error const& e) {
        corrupt(std::string("invalid table: ") + e.what());
      }
    });
  }

  namespace {

    std::string outside_text(OutsideKind k) {
      switch (k) {
        case OutsideKind::none:
          return "none";
        case OutsideKind::symbolic:
          return "symbolic";
        case OutsideKind::concrete:
          return "concrete";
      }
      return "none";
    }

    OutsideKind outside_from_text(std::string const& s) {
      if (s == "none") {
        return OutsideKind::none;
      } else if (s == "symbolic") {
        return OutsideKind::symbolic;
      } else if (s == "concrete") {
        return OutsideKind::concrete;
      }
      corrupt("unknown outside kind " + s);
    }

  }  // namespace

  json to_json(PartialTable const& pt) {
    std::size_t const t = pt.size();
    json              product = json::array();
    for (std::size_t i = 0; i < t; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < t; ++j) {
        auto p = pt.product(i, j);
        row.push_back(p ? json(*p) : json(nullptr));
      }
      product.push_back(row);
    }
    json ambient = nullptr;
    if (pt.has_ambient()) {
      ambient = json::array();
      for (std::size_t i = 0; i < t; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < t; ++j) {
          row.push_back(pt.ambient(i, j));
        }
        ambient.push_back(row);
      }
    }
    return json{{"names", pt.names()},
                {"product", product},
                {"ambient", ambient},
                {"outside", outside_text(pt.outside())},
                {"sink", pt.sink()}};
  }

  PartialTable partial_table_from_json(json const& j) {
    return guarded("partial table", [&] {
      auto const  names = j.at("names").get<std::vector<std::string>>();
      std::size_t t     = names.size();
      auto const& prod  = j.at("product");
      if (prod.size() != t) {
        corrupt("product table has wrong size");
      }
      std::vector<std::optional<std::size_t>> product;
      for (auto const& row : prod) {
        if (row.size() != t) {
          corrupt("product table has wrong size");
        }
        for (auto const& x : row) {
          product.push_back(x.is_null() ? std::nullopt
                                        : std::optional<std::size_t>(x.get<std::size_t>()));
        }
      }
      std::optional<std::vector<std::string>> ambient;
      if (j.contains("ambient") && !j.at("ambient").is_null()) {
        ambient.emplace();
        for (auto const& row : j.at("ambient")) {
          if (row.size() != t) {
            corrupt("ambient table has wrong size");
          }
          for (auto const& x : row) {
            ambient->push_back(x.get<std::string>());
          }
        }
      }
      try {
        return PartialTable(names,
                            std::move(product),
                            std::move(ambient),
                            outside_from_text(j.at("outside").get<std::string>()),
                            j.at("sink").get<std::string>());
      } catch (Error const& e) {
        if (e.code() == ErrorCode::corrupt_certificate) {
          throw;
        }
        corrupt(std::string("invalid partial table: ") + e.what());
      }
    });
  }

  json to_json(PartialTable const& pt, Label const& l) {
    switch (l.kind) {
      case Label::Kind::in_set:
        return json{{"kind", "in"}, {"index", l.index}, {"name", pt.name(l.index)}};
      case Label::Kind::outside:
        return json{{"kind", "outside"}, {"value", l.value}};
      case Label::Kind::bottom:
        return json{{"kind", "bottom"}};
    }
    return nullptr;
  }

  Label label_from_json(json const& j) {
    return guarded("label", [&] {
      auto kind = j.at("kind").get<std::string>();
      if (kind == "in") {
        return Label::in(j.at("index").get<std::size_t>());
      } else if (kind == "outside") {
        return Label::out(j.at("value").get<std::string>());
      } else if (kind == "bottom") {
        return Label::bottom();
      }
      corrupt("unknown label kind " + kind);
    });
  }

  json to_json(EmbeddingWitness const& w) {
    json ts = nullptr;
    if (w.transformations) {
      ts = json::array();
      for (auto const& t : *w.transformations) {
        ts.push_back(t.images());
      }
    }
    return json{{"target", to_json(w.target)}, {"transformations", ts}, {"assignment", w.assignment}};
  }

  EmbeddingWitness embedding_from_json(json const& j) {
    return guarded("embedding", [&] {
      EmbeddingWitness w{cayley_from_json(j.at("target")), std::nullopt, elements_from_json(j.at("assignment"))};
      if (j.contains("transformations") && !j.at("transformations").is_null()) {
        w.transformations.emplace();
        for (auto const& t : j.at("transformations")) {
          try {
            w.transformations->emplace_back(t.get<std::vector<element_type>>());
          } catch (Error const& e) {
            corrupt(std::string("invalid transformation: ") + e.what());
          }
        }
      }
      return w;
    });
  }

  json to_json(WrapInstance const& wi) {
    json labels = json::array();
    for (auto const& l : wi.labels) {
      labels.push_back(to_json(wi.h, l));
    }
    return json{{"d", to_json(wi.d)}, {"h", to_json(wi.h)}, {"labels", labels}};
  }

  WrapInstance wrap_from_json(json const& j) {
    return guarded("wrap", [&] {
      WrapInstance wi{cayley_from_json(j.at("d")), partial_table_from_json(j.at("h")), {}};
      for (auto const& l : j.at("labels")) {
        wi.labels.push_back(label_from_json(l));
      }
      return wi;
    });
  }

  json to_json(ObstructionCertificate const& c) {
    return json{{"pattern", c.pattern},
                {"n", c.n},
                {"elements", c.elements},
                {"names", c.names},
                {"statement", c.statement}};
  }

  ObstructionCertificate obstruction_from_json(json const& j) {
    return guarded("obstruction", [&] {
      return ObstructionCertificate{j.at("pattern").get<std::string>(),
                                    j.at("n").get<std::size_t>(),
                                    j.at("elements").get<std::vector<std::size_t>>(),
                                    j.at("names").get<std::vector<std::string>>(),
                                    j.at("statement").get<std::string>()};
    });
  }

  json to_json(LawReport const& r) {
    json ces = json::array();
    for (auto const& c : r.counterexamples) {
      ces.push_back(json{{"table", to_json(c.table)}, {"elements", c.elements}});
    }
    return json{{"law", r.law},
                {"space", r.space},
                {"scanned", r.scanned},
                {"counterexample_count", r.counterexample_count},
                {"holds", r.holds()},
                {"counterexamples", ces}};
  }

  LawReport law_report_from_json(json const& j) {
    return guarded("law report", [&] {
      LawReport r;
      r.law                  = j.at("law").get<std::string>();
      r.space                = j.at("space").get<std::string>();
      r.scanned              = j.at("scanned").get<std::size_t>();
      r.counterexample_count = j.at("counterexample_count").get<std::size_t>();
      for (auto const& c : j.at("counterexamples")) {
        r.counterexamples.push_back(
            Counterexample{cayley_from_json(c.at("table")), elements_from_json(c.at("elements"))});
      }
      if (r.counterexamples.size() > r.counterexample_count) {
        corrupt("more counterexamples listed than counted");
      }
      return r;
    });
  }

  json to_json(PartialBijection const& f) {
    json map = json::object();
    for (std::size_t x = 0; x < f.universe(); ++x) {
      if (f.map()[x] != PartialBijection::undefined) {
        map[std::to_string(x)] = f.map()[x];
      }
    }
    return json{{"universe", f.universe()}, {"map", map}};
  }

  PartialBijection partial_bijection_from_json(json const& j) {
    return guarded("partial bijection", [&] {
      auto             n = j.at("universe").get<std::size_t>();
      std::vector<int> map(n, PartialBijection::undefined);
      for (auto const& [key, value] : j.at("map").items()) {
        std::size_t x = 0;
        try {
          x = std::stoul(key);
        } catch (std::exception const&) {
          corrupt("bad point " + key);
        }
        if (x >= n) {
          corrupt("point out of range: " + key);
        }
        map[x] = value.get<int>();
      }
      try {
        return PartialBijection(n, std::move(map));
      } catch (Error const& e) {
        corrupt(std::string("invalid partial bijection: ") + e.what());
      }
    });
  }

  json to_json(InverseTable const& it) {
    json j   = to_json(it.cayley);
    j["inv"] = it.inv;
    return j;
  }

  InverseTable inverse_table_from_json(json const& j) {
    return guarded("inverse table", [&] {
      auto table = cayley_from_json(j);
      auto r     = inverse_structure(table);
      if (!r.table) {
        corrupt("table is not an inverse semigroup");
      }
      if (j.contains("inv") && elements_from_json(j.at("inv")) != r.table->inv) {
        corrupt("inv does not match the table");
      }
      return *r.table;
    });
  }

  json to_json(InverseWrap const& iw) {
    return json{{"d", to_json(iw.d)}, {"ambient", to_json(iw.ambient)}, {"k", iw.k}, {"label", iw.label}};
  }

  InverseWrap inverse_wrap_from_json(json const& j) {
    return guarded("inverse wrap", [&] {
      InverseWrap iw{inverse_table_from_json(j.at("d")),
                     inverse_table_from_json(j.at("ambient")),
                     elements_from_json(j.at("k")),
                     elements_from_json(j.at("label"))};
      if (!std::is_sorted(iw.k.begin(), iw.k.end())) {
        corrupt("k must be sorted");
      }
      for (auto s : iw.k) {
        if (s >= iw.ambient.order()) {
          corrupt("k element out of range");
        }
      }
      if (iw.label.size() != iw.d.order()) {
        corrupt("one label per element of D is required");
      }
      for (auto s : iw.label) {
        if (s >= iw.ambient.order()) {
          corrupt("label out of range");
        }
      }
      return iw;
    });
  }

  json to_json(CriticalPair const& p) {
    return json{{"peak", word_text(p.peak)},
                {"reduct1", word_text(p.reduct1)},
                {"reduct2", word_text(p.reduct2)},
                {"rule1", p.rule1},
                {"rule2", p.rule2},
                {"joinable", p.joinable}};
  }

  json to_json(CongruenceResult const& r) {
    json chain = json::array();
    for (auto const& w : r.chain) {
      chain.push_back(word_text(w));
    }
    return json{{"equal", r.equal}, {"chain", chain}, {"explored", r.explored}, {"exhausted", r.exhausted}};
  }

  json to_json(LemmaReport const& r) {
    return json{{"holds", r.holds()}, {"checked", r.checked}, {"violations", r.violations}};
  }

  json to_json(IlefLift const& r) {
    json lift = json::array();
    for (auto const& f : r.lift) {
      lift.push_back(to_json(f));
    }
    return json{{"verified", r.verified()},
                {"k", r.k},
                {"lift", lift},
                {"bijective", r.bijective},
                {"idempotent_identities", r.idempotent_ids},
                {"injective", r.injective},
                {"multiplicative", r.multiplicative},
                {"inverse_preserved", r.inverse_preserved},
                {"failures", r.failures}};
  }

  namespace {

    std::vector<element_type> subset_members(Subset s) {
      std::vector<element_type> v;
      for (element_type x = 0; x < 64; ++x) {
        if (s >> x & 1) {
          v.push_back(x);
        }
      }
      return v;
    }

  }  // namespace

  json to_json(IlefFromWrap const& r) {
    json images = json::array();
    for (auto s : r.images) {
      images.push_back(subset_members(s));
    }
    return json{{"verified", r.verified()},
                {"h", r.h},
                {"images", images},
                {"m", subset_members(r.m)},
                {"power_order", r.power ? json(r.power->order()) : json(nullptr)},
                {"injective", r.injective},
                {"multiplicative", r.multiplicative},
                {"failures", r.failures}};
  }

  json to_json(WagnerPreston const& r) {
    json images = json::array();
    for (auto const& f : r.images) {
      images.push_back(to_json(f));
    }
    json failure = nullptr;
    if (r.failure) {
      failure = json::array({r.failure->first, r.failure->second});
    }
    return json{{"verified", r.verified()},
                {"injective", r.injective},
                {"multiplicative", r.multiplicative},
                {"failure", failure},
                {"images", images}};
  }

  json to_json(PowerCheckReport const& r) {
    return json{{"holds", r.holds()},
                {"orbit_size", r.orbit_size},
                {"factorisation", r.factorisation},
                {"a_in_product", r.a_in_product},
                {"shape", r.shape},
                {"aba_excluded", r.aba_excluded},
                {"failures", r.failures},
                {"block_shape_exceptions", r.block_shape_exceptions}};
  }

  json to_json(TnSeparation const& r) {
    return json{{"consistent", r.consistent},
                {"lhs", r.lhs},
                {"rhs", r.rhs},
                {"search", to_json(r.search)}};
  }

}  // namespace lefkit
