#pragma once

// JSON forms of the library's values. Readers validate as they go and
// throw lefkit::Error (CorruptCertificate) on malformed documents.

#include <json.hpp>

#include "lefkit/finite_core.hpp"
#include "lefkit/inverse.hpp"
#include "lefkit/obstructions.hpp"
#include "lefkit/partial_tables.hpp"
#include "lefkit/rewriting.hpp"

namespace lefkit {

  using json = nlohmann::ordered_json;

  inline constexpr int schema_version = 1;

  json        to_json(CayleyTable const& t);
  CayleyTable cayley_from_json(json const& j);

  json         to_json(PartialTable const& pt);
  PartialTable partial_table_from_json(json const& j);

  json  to_json(PartialTable const& pt, Label const& l);
  Label label_from_json(json const& j);

  json             to_json(EmbeddingWitness const& w);
  EmbeddingWitness embedding_from_json(json const& j);

  json         to_json(WrapInstance const& wi);
  WrapInstance wrap_from_json(json const& j);

  json                   to_json(ObstructionCertificate const& c);
  ObstructionCertificate obstruction_from_json(json const& j);

  json      to_json(LawReport const& r);
  LawReport law_report_from_json(json const& j);

  //! {"universe": N, "map": {"0": 1, ...}}
  json             to_json(PartialBijection const& f);
  PartialBijection partial_bijection_from_json(json const& j);

  //! A Cayley table with an "inv" array.
  json         to_json(InverseTable const& it);
  InverseTable inverse_table_from_json(json const& j);

  json        to_json(InverseWrap const& iw);
  InverseWrap inverse_wrap_from_json(json const& j);

  json to_json(CriticalPair const& p);
  json to_json(CongruenceResult const& r);

  json to_json(LemmaReport const& r);
  json to_json(IlefLift const& r);
  json to_json(IlefFromWrap const& r);
  json to_json(WagnerPreston const& r);
  json to_json(PowerCheckReport const& r);
  json to_json(TnSeparation const& r);

}  // namespace lefkit
