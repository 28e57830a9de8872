#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "oka/family.hpp"
#include "oka/module.hpp"
#include "oka/ring.hpp"
#include "oka/zoo.hpp"

namespace oka {

using Json = nlohmann::json;

/// A malformed description; `path` locates the offending node, e.g.
/// "$.rings[3].base.n".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

Json load_json_file(const std::string& path);

// Ring descriptions:
//   {"type":"zn","n":6}
//   {"type":"matrix","base":<ring>,"k":2}
//   {"type":"triangular","A":<ring>,"B":<ring>,"M":<bimodule>}
//     bimodule: {"type":"regular"} | {"type":"regular_power","k":2}
//             | {"type":"tables","order":n,"add":[...],"left_action":[...],
//                "right_action":[...],"label":"M"}
//     regular and regular_power need A and B to be the same description.
//   {"type":"quotient","ring":<ring>,"ideal_gens":[...]}
//   {"type":"product","left":<ring>,"right":<ring>}
//   {"type":"opposite","ring":<ring>}
//   {"type":"table","order":n,"add":[...],"mul":[...],"zero":0,"one":1,"label":"..."}
// Tables are row-major integer arrays.
RingPtr ring_from_json(const Json& j, const Caps& caps = {}, const std::string& path = "$");

/// Canonical table form of a ring; ring_from_json(ring_to_json(r)) rebuilds r.
Json ring_to_json(const Ring& r);

// Module descriptions: {"type":"regular"}, {"type":"quotient","ideal_gens":[...]}
// (R_R modulo the right ideal generated by the list), or
// {"type":"table","order":n,"add":[...],"action":[...]} (action is n x |R|).
RightModule module_from_json(const Json& j, const RingPtr& ring, const std::string& path = "$");

std::vector<Element> elements_from_json(const Json& j, const Ring& r, const std::string& path);

Json ideal_to_json(const Ideal& ideal);
Json lattice_to_json(const IdealLattice& lattice);
Json spec_to_json(const FamilyContext& ctx);

// Family descriptions:
//   {"type":"explicit","ideals":[[gens],...],"insert_whole":false}
//     R is only added when insert_whole is true; otherwise a missing R is
//     reported as a standing-assumption violation.
//   {"type":"named","name":"meets_m_system","params":{"s":[1,2,4]}}
// Named parameters: "s" (element list), "module" (module description),
// "ideals" (list of generator lists).
ZooFamily family_from_json(const Json& j, const ContextPtr& ctx, const std::string& path = "$");

ZooFamily named_family(const ContextPtr& ctx, const std::string& name, const Json& params,
                       const std::string& path = "$");

/// Converts CLI `key=value` strings: "s=1,2,4", "ideals=2;3", "module={...}".
Json params_from_strings(const std::vector<std::string>& items);

Json check_to_json(const CheckResult& c);
Json family_to_json(const Family& f);
Json profile_to_json(const PropertyProfile& p);
Json pip_to_json(const PipReport& p);

}  // namespace oka
