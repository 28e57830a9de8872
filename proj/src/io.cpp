#include "oka/io.hpp"

#include <fstream>
#include <sstream>

namespace oka {

namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t positive(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    throw ParseError(path, "expected a positive integer");
  return j.get<std::size_t>();
}

std::vector<Element> table(const Json& j, std::size_t length, std::size_t bound,
                           const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an integer array");
  if (j.size() != length)
    throw ParseError(path, "expected " + std::to_string(length) + " entries, got " +
                               std::to_string(j.size()));
  std::vector<Element> out;
  out.reserve(length);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& v = j[i];
    if (!v.is_number_integer() || v.get<long long>() < 0 ||
        v.get<unsigned long long>() >= bound)
      throw ParseError(path + "[" + std::to_string(i) + "]",
                       "entry must be an index below " + std::to_string(bound));
    out.push_back(v.get<Element>());
  }
  return out;
}

std::string type_of(const Json& j, const std::string& path) {
  const auto& t = field(j, "type", path);
  if (!t.is_string()) throw ParseError(path + ".type", "expected a string");
  return t.get<std::string>();
}

Json members_json(const ElementSet& s) { return s.members(); }

template <typename F>
auto with_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(path, e.what());
  }
}

Bimodule bimodule_from_json(const Json& j, const RingPtr& a, const RingPtr& b, bool same,
                            const std::string& path) {
  const std::string type = type_of(j, path);
  if (type == "regular" || type == "regular_power") {
    if (!same) throw ParseError(path, type + " bimodule needs A and B to be the same ring");
    const std::size_t k = type == "regular" ? 1 : positive(field(j, "k", path), path + ".k");
    return with_path(path, [&] { return Bimodule::regular_power(a, k); });
  }
  if (type == "tables") {
    const std::size_t n = positive(field(j, "order", path), path + ".order");
    auto add = table(field(j, "add", path), n * n, n, path + ".add");
    auto left = table(field(j, "left_action", path), a->order() * n, n, path + ".left_action");
    auto right = table(field(j, "right_action", path), n * b->order(), n, path + ".right_action");
    const std::string label = j.value("label", std::string("M"));
    return with_path(path, [&] {
      return Bimodule::from_tables(a, b, n, std::move(add), std::move(left), std::move(right),
                                   label);
    });
  }
  throw ParseError(path + ".type", "unknown bimodule type '" + type + "'");
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path, e.what());
  }
}

std::vector<Element> elements_from_json(const Json& j, const Ring& r, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an element list");
  return table(j, j.size(), r.order(), path);
}

RingPtr ring_from_json(const Json& j, const Caps& caps, const std::string& path) {
  const std::string type = type_of(j, path);
  if (type == "zn") {
    const std::size_t n = positive(field(j, "n", path), path + ".n");
    return with_path(path, [&] { return build_zn(n, caps); });
  }
  if (type == "matrix") {
    auto base = ring_from_json(field(j, "base", path), caps, path + ".base");
    const std::size_t k = positive(field(j, "k", path), path + ".k");
    return with_path(path, [&] { return build_matrix_ring(base, k, caps); });
  }
  if (type == "triangular") {
    const auto& ja = field(j, "A", path);
    const auto& jb = field(j, "B", path);
    auto a = ring_from_json(ja, caps, path + ".A");
    const bool same = ja == jb;
    auto b = same ? a : ring_from_json(jb, caps, path + ".B");
    auto m = bimodule_from_json(field(j, "M", path), a, b, same, path + ".M");
    return with_path(path, [&] { return build_triangular(a, m, b, caps); });
  }
  if (type == "quotient") {
    auto base = ring_from_json(field(j, "ring", path), caps, path + ".ring");
    auto gens = elements_from_json(field(j, "ideal_gens", path), *base, path + ".ideal_gens");
    return with_path(path, [&] {
      return build_quotient(base, ideal_closure(base, gens, Side::two_sided).members(), caps).ring;
    });
  }
  if (type == "product") {
    auto l = ring_from_json(field(j, "left", path), caps, path + ".left");
    auto r = ring_from_json(field(j, "right", path), caps, path + ".right");
    return with_path(path, [&] { return build_product(l, r, caps); });
  }
  if (type == "opposite") {
    auto base = ring_from_json(field(j, "ring", path), caps, path + ".ring");
    return with_path(path, [&] { return build_opposite(base); });
  }
  if (type == "table") {
    const std::size_t n = positive(field(j, "order", path), path + ".order");
    if (n > caps.order)
      throw ParseError(path + ".order", "order " + std::to_string(n) + " exceeds the cap " +
                                            std::to_string(caps.order));
    auto add = table(field(j, "add", path), n * n, n, path + ".add");
    auto mul = table(field(j, "mul", path), n * n, n, path + ".mul");
    const Element zero = j.value("zero", Element{0});
    const Element one = table(Json::array({field(j, "one", path)}), 1, n, path + ".one")[0];
    const std::string label = j.value("label", std::string("table"));
    return with_path(path, [&] {
      return build_from_tables(n, std::move(add), std::move(mul), zero, one, label, caps);
    });
  }
  throw ParseError(path + ".type", "unknown ring type '" + type + "'");
}

Json ring_to_json(const Ring& r) {
  Json j;
  j["type"] = "table";
  j["label"] = r.label();
  j["order"] = r.order();
  j["zero"] = r.zero();
  j["one"] = r.one();
  j["add"] = std::vector<Element>(r.add_table().begin(), r.add_table().end());
  j["mul"] = std::vector<Element>(r.mul_table().begin(), r.mul_table().end());
  return j;
}

RightModule module_from_json(const Json& j, const RingPtr& ring, const std::string& path) {
  const std::string type = type_of(j, path);
  if (type == "regular") return regular_module(ring);
  if (type == "quotient") {
    auto gens = elements_from_json(field(j, "ideal_gens", path), *ring, path + ".ideal_gens");
    return with_path(path, [&] {
      return quotient_module(regular_module(ring), ideal_closure(ring, gens, Side::right).members());
    });
  }
  if (type == "table") {
    const std::size_t n = positive(field(j, "order", path), path + ".order");
    auto add = table(field(j, "add", path), n * n, n, path + ".add");
    auto action = table(field(j, "action", path), n * ring->order(), n, path + ".action");
    const std::string label = j.value("label", std::string("M"));
    return with_path(path, [&] {
      return RightModule::from_tables(ring, n, std::move(add), std::move(action), label);
    });
  }
  throw ParseError(path + ".type", "unknown module type '" + type + "'");
}

Json ideal_to_json(const Ideal& ideal) {
  return Json{{"side", to_string(ideal.side())},
              {"gens", generators(ideal)},
              {"members", members_json(ideal.members())}};
}

Json lattice_to_json(const IdealLattice& lattice) {
  Json ideals = Json::array();
  for (const auto& i : lattice.ideals()) ideals.push_back(ideal_to_json(i));
  Json edges = Json::array();
  for (auto [lo, hi] : lattice.hasse_edges()) edges.push_back({lo, hi});
  return Json{{"ring", lattice.ring()->label()},
              {"side", to_string(lattice.side())},
              {"count", lattice.size()},
              {"ideals", std::move(ideals)},
              {"covers", std::move(edges)}};
}

Json spec_to_json(const FamilyContext& ctx) {
  const auto& sp = ctx.spec();
  Json primes = Json::array();
  for (auto p : sp.primes) {
    bool minimal = false;
    for (auto q : sp.minimal_primes) minimal = minimal || q == p;
    primes.push_back({{"index", p},
                      {"gens", generators(ctx.lattice()[p])},
                      {"members", members_json(ctx.lattice()[p].members())},
                      {"minimal", minimal}});
  }
  Json rejected = Json::array();
  for (std::size_t k = 0; k < ctx.size(); ++k) {
    if (!sp.witnesses[k]) continue;
    rejected.push_back({{"index", k},
                        {"gens", generators(ctx.lattice()[k])},
                        {"witness", {sp.witnesses[k]->first, sp.witnesses[k]->second}}});
  }
  return Json{{"ring", ctx.ring()->label()},
              {"order", ctx.ring()->order()},
              {"zero_ring", ctx.ring()->is_zero_ring()},
              {"lattice", lattice_to_json(ctx.lattice())},
              {"primes", std::move(primes)},
              {"non_primes", std::move(rejected)}};
}

Json params_from_strings(const std::vector<std::string>& items) {
  Json params = Json::object();
  auto ints = [](const std::string& key, const std::string& text) {
    Json arr = Json::array();
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        arr.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("--param " + key, "'" + tok + "' is not an integer");
      }
    }
    return arr;
  };
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--param", "expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "module") {
      try {
        params[key] = Json::parse(value);
      } catch (const Json::parse_error& e) {
        throw ParseError("--param module", e.what());
      }
    } else if (key == "ideals") {
      Json list = Json::array();
      std::stringstream ss(value);
      std::string group;
      while (std::getline(ss, group, ';')) list.push_back(ints(key, group));
      params[key] = std::move(list);
    } else {
      params[key] = ints(key, value);
    }
  }
  return params;
}

ZooFamily named_family(const ContextPtr& ctx, const std::string& name, const Json& params,
                       const std::string& path) {
  const Ring& r = *ctx->ring();
  const std::string ppath = path + ".params";
  auto element_set = [&](const char* key) {
    ElementSet s(r.order());
    for (auto x : elements_from_json(field(params, key, ppath), r, ppath + "." + key)) s.set(x);
    return s;
  };
  if (name == "all")
    return {Family(ctx, ElementSet::full(ctx->size()), "all"), Property::p1};
  if (name == "meets_m_system") return meets_m_system(ctx, element_set("s"));
  if (name == "point_annihilator") {
    auto m = params.is_object() && params.contains("module")
                 ? module_from_json(params["module"], ctx->ring(), ppath + ".module")
                 : regular_module(ctx->ring());
    return point_annihilator_family(ctx, m).zoo;
  }
  if (name == "left_faithful") return left_faithful_family(ctx).zoo;
  if (name == "middle_annihilator") return middle_annihilator_family(ctx).zoo;
  if (name == "contains_member") {
    const auto& list = field(params, "ideals", ppath);
    if (!list.is_array()) throw ParseError(ppath + ".ideals", "expected a list of generator lists");
    ElementSet seeds(ctx->size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      auto gens = elements_from_json(list[i], r, ppath + ".ideals[" + std::to_string(i) + "]");
      seeds.set(ctx->lattice().index_of(ideal_closure(ctx->ring(), gens, Side::two_sided)));
    }
    return contains_member_family(ctx, seeds);
  }
  if (name == "artin_rees") return artin_rees_family(ctx).zoo;
  if (name == "idempotent") return idempotent_family(ctx, element_set("s"));
  if (name == "direct_summand") return direct_summand_family(ctx).zoo;
  if (name == "dedekind_finite_factor") return dedekind_finite_factor_family(ctx);
  if (name == "flat_factor") return flat_factor_family(ctx).zoo;
  if (name == "principal_normal") return principal_normal_family(ctx, element_set("s"));
  if (name == "left_right_principal") {
    auto rep = verify_left_right_principal_normal(ctx);
    return {std::move(*rep.family), Property::r_oka};
  }
  if (name == "annihilator_meets") {
    auto s = element_set("s");
    if (!is_m_system(r, s).is_m_system)
      throw ZooError("annihilator_meets: the set must be an m-system");
    return factor_predicate_family(ctx, annihilator_meets(s), "annihilator_meets").zoo;
  }
  if (name == "s_torsion") {
    auto s = element_set("s");
    if (!s.test(r.one())) throw ZooError("s_torsion: the set must contain 1");
    s.for_each([&](Element a) {
      s.for_each([&](Element b) {
        if (!s.test(r.mul(a, b))) throw ZooError("s_torsion: the set is not multiplicative");
      });
    });
    return factor_predicate_family(ctx, s_torsion(s), "s_torsion").zoo;
  }
  unsupported_family(name);
}

ZooFamily family_from_json(const Json& j, const ContextPtr& ctx, const std::string& path) {
  const std::string type = type_of(j, path);
  if (type == "explicit") {
    const auto& list = field(j, "ideals", path);
    if (!list.is_array()) throw ParseError(path + ".ideals", "expected a list of generator lists");
    std::vector<Ideal> ideals;
    for (std::size_t i = 0; i < list.size(); ++i) {
      auto gens = elements_from_json(list[i], *ctx->ring(),
                                     path + ".ideals[" + std::to_string(i) + "]");
      ideals.push_back(ideal_closure(ctx->ring(), gens, Side::two_sided));
    }
    const bool insert = j.value("insert_whole", false);
    return {Family::from_ideals(ctx, ideals, j.value("name", std::string("explicit")), insert),
            Property::oka};
  }
  if (type == "named") {
    const auto& name = field(j, "name", path);
    if (!name.is_string()) throw ParseError(path + ".name", "expected a string");
    const Json params = j.contains("params") ? j["params"] : Json::object();
    return named_family(ctx, name.get<std::string>(), params, path);
  }
  throw ParseError(path + ".type", "unknown family type '" + type + "'");
}

Json check_to_json(const CheckResult& c) {
  Json j{{"status", to_string(c.status)}};
  if (c.witness)
    j["witness"] = {{"clause", c.witness->clause},
                    {"ideals", c.witness->ideals},
                    {"elements", c.witness->elements}};
  return j;
}

Json family_to_json(const Family& f) {
  Json ideals = Json::array();
  f.members().for_each(
      [&](Element k) { ideals.push_back(generators(f.context().lattice()[k])); });
  Json j{{"name", f.name()},
         {"members", f.members().members()},
         {"ideal_gens", std::move(ideals)},
         {"contains_whole", f.contains_whole()},
         {"inserted_whole", f.inserted_whole()},
         {"degenerate", f.degenerate()}};
  if (!f.notes().empty()) j["notes"] = f.notes();
  return j;
}

Json profile_to_json(const PropertyProfile& p) {
  Json j = Json::object();
  for (const auto& [prop, res] : p.verdicts) j[std::string(to_string(prop))] = check_to_json(res);
  return j;
}

Json pip_to_json(const PipReport& p) {
  return Json{{"oka", check_to_json(p.oka)},
              {"max_complement", p.max_complement},
              {"non_prime_maximals", p.non_prime_maximals},
              {"contained_in_spec", p.contained},
              {"violation", p.violation}};
}

}  // namespace oka
