// okalab: batch front end for the finite ring laboratory.
//
//   okalab spec z6.json
//   okalab check z6.json --family meets_m_system --param s=1,2,4
//   okalab suite corpus.json --jobs 4 --out report.json

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oka/family.hpp"
#include "oka/harness.hpp"
#include "oka/io.hpp"
#include "oka/zoo.hpp"

namespace {

using namespace oka;

struct Options {
  std::string format = "table";
  unsigned jobs = 1;
  std::optional<std::uint64_t> seed;
  std::size_t cap_order = Caps{}.order;
  std::size_t cap_lattice = Caps{}.lattice;
  std::vector<std::string> only;
  std::string out;
  std::size_t width = 100;

  std::string ring_file;
  std::string family_file;
  std::string family_name;
  std::vector<std::string> params;
  std::string side = "two_sided";
  std::string corpus_file;
  std::string prop_a = "oka";
  std::vector<std::string> prop_b = {"r_oka", "l_oka"};
  std::size_t budget = 1u << 20;

  Caps caps() const { return Caps{cap_order, cap_lattice}; }
  bool json() const { return format == "json"; }
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ParseError(o.out, "cannot write output file");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string ideal_text(const Ideal& i) {
  std::ostringstream os;
  os << "(";
  const auto gens = generators(i);
  for (std::size_t k = 0; k < gens.size(); ++k) os << (k ? "," : "") << gens[k];
  os << ")";
  return os.str();
}

std::string truncate(std::string s, std::size_t width) {
  if (s.size() > width) s = s.substr(0, width > 3 ? width - 3 : 0) + "...";
  return s;
}

RingPtr load_ring(const Options& o) {
  return ring_from_json(load_json_file(o.ring_file), o.caps(), o.ring_file);
}

ZooFamily load_family(const Options& o, const ContextPtr& ctx) {
  if (!o.family_file.empty())
    return family_from_json(load_json_file(o.family_file), ctx, o.family_file);
  if (!o.family_name.empty())
    return named_family(ctx, o.family_name, params_from_strings(o.params), "--family");
  throw ParseError("family", "give a family file or --family <name>");
}

int cmd_ring(const Options& o) {
  auto r = load_ring(o);
  if (o.json()) {
    emit(o, dump(ring_to_json(*r)));
    return 0;
  }
  std::ostringstream os;
  os << "label:               " << r->label() << "\n"
     << "order:               " << r->order() << "\n"
     << "one:                 " << r->one() << "\n"
     << "units:               " << units(*r).count() << "\n"
     << "normal elements:     " << normal_elements(*r).count() << "\n"
     << "central idempotents: " << central_idempotents(*r).count() << "\n"
     << "dedekind finite:     " << (is_dedekind_finite(*r) ? "yes" : "no") << "\n";
  emit(o, os.str());
  return 0;
}

int cmd_ideals(const Options& o) {
  auto r = load_ring(o);
  Side side = Side::two_sided;
  if (o.side == "right") side = Side::right;
  else if (o.side == "left") side = Side::left;
  else if (o.side != "two_sided") throw ParseError("--side", "expected two_sided, right or left");
  const auto lat = all_ideals(r, side, o.cap_lattice);
  if (o.json()) {
    emit(o, dump(lattice_to_json(lat)));
    return 0;
  }
  std::ostringstream os;
  os << lat.size() << " " << to_string(side) << " ideals of " << r->label() << "\n";
  for (std::size_t k = 0; k < lat.size(); ++k)
    os << std::setw(4) << k << "  size " << std::setw(4) << lat[k].size() << "  "
       << ideal_text(lat[k]) << "\n";
  emit(o, os.str());
  return 0;
}

int cmd_spec(const Options& o) {
  auto ctx = FamilyContext::create(load_ring(o), o.caps());
  if (o.json()) {
    emit(o, dump(spec_to_json(*ctx)));
    return 0;
  }
  const auto& sp = ctx->spec();
  std::ostringstream os;
  os << ctx->ring()->label() << ": " << ctx->size() << " ideals, " << sp.primes.size()
     << " prime\n";
  for (std::size_t k = 0; k < ctx->size(); ++k) {
    const Ideal& i = ctx->lattice()[k];
    os << std::setw(4) << k << "  " << std::left << std::setw(24) << ideal_text(i) << std::right;
    if (i.is_whole()) {
      os << "R\n";
    } else if (sp.is_prime(k)) {
      const bool minimal = std::ranges::find(sp.minimal_primes, k) != sp.minimal_primes.end();
      os << (minimal ? "prime (minimal)" : "prime") << "\n";
    } else {
      os << "not prime: a=" << sp.witnesses[k]->first << " b=" << sp.witnesses[k]->second
         << " with aRb inside\n";
    }
  }
  emit(o, os.str());
  return 0;
}

int cmd_family(const Options& o) {
  auto ctx = FamilyContext::create(load_ring(o), o.caps());
  const auto zoo = load_family(o, ctx);
  if (o.json()) {
    Json j = family_to_json(zoo.family);
    j["claimed"] = std::string(to_string(zoo.claimed));
    emit(o, dump(j));
    return 0;
  }
  std::ostringstream os;
  os << zoo.family.name() << " (" << zoo.family.size() << " of " << ctx->size() << " ideals)\n";
  zoo.family.members().for_each([&](Element k) {
    os << std::setw(4) << k << "  " << ideal_text(ctx->lattice()[k]) << "\n";
  });
  for (const auto& n : zoo.family.notes()) os << "note: " << n << "\n";
  emit(o, os.str());
  return 0;
}

int cmd_check(const Options& o) {
  auto ctx = FamilyContext::create(load_ring(o), o.caps());
  const auto zoo = load_family(o, ctx);
  const auto prof = property_profile(zoo.family);
  const auto bad = implication_violations(prof);
  const auto pip = verify_pip(zoo.family);
  const bool failed = !bad.empty() || pip.violation;
  if (o.json()) {
    Json arrows = Json::array();
    for (const auto& b : bad) arrows.push_back({to_string(b.from), to_string(b.to)});
    emit(o, dump(Json{{"family", family_to_json(zoo.family)},
                      {"profile", profile_to_json(prof)},
                      {"implication_violations", arrows},
                      {"pip", pip_to_json(pip)}}));
    return failed ? 1 : 0;
  }
  std::ostringstream os;
  os << zoo.family.name() << " on " << ctx->ring()->label() << "\n";
  for (const auto& [p, res] : prof.verdicts) {
    std::string line = "  " + std::string(to_string(p));
    line.resize(18, ' ');
    line += to_string(res.status);
    if (res.witness) line += "  " + check_to_json(res)["witness"].dump();
    os << truncate(line, o.width) << "\n";
  }
  os << "implications: " << (bad.empty() ? "consistent" : "VIOLATED") << "\n";
  for (const auto& b : bad) os << "  " << to_string(b.from) << " -> " << to_string(b.to) << "\n";
  os << "Max(F'):";
  for (auto k : pip.max_complement) os << " " << ideal_text(ctx->lattice()[k]);
  os << "\ncontained in Spec: " << (pip.contained ? "yes" : "no")
     << (pip.violation ? "  PRIME IDEAL PRINCIPLE VIOLATED" : "") << "\n";
  emit(o, os.str());
  return failed ? 1 : 0;
}

int cmd_pip(const Options& o) {
  auto ctx = FamilyContext::create(load_ring(o), o.caps());
  const auto zoo = load_family(o, ctx);
  const auto pip = verify_pip(zoo.family);
  if (o.json()) {
    emit(o, dump(pip_to_json(pip)));
    return pip.violation ? 1 : 0;
  }
  std::ostringstream os;
  os << "oka: " << to_string(pip.oka.status) << "\nMax(F'):";
  for (auto k : pip.max_complement) os << " " << ideal_text(ctx->lattice()[k]);
  os << "\ncontained in Spec: " << (pip.contained ? "yes" : "no") << "\n";
  if (pip.violation) os << "PRIME IDEAL PRINCIPLE VIOLATED\n";
  emit(o, os.str());
  return pip.violation ? 1 : 0;
}

Corpus load_corpus(const Options& o) {
  Corpus c = o.corpus_file.empty() ? default_corpus()
                                   : corpus_from_json(load_json_file(o.corpus_file));
  if (o.corpus_file.empty()) c.caps = o.caps();
  if (o.seed) c.seed = *o.seed;
  return c;
}

int cmd_suite(const Options& o) {
  const auto corpus = load_corpus(o);
  const auto report = run_paper_suite(corpus, SuiteOptions{o.only, o.jobs});
  emit(o, o.json() ? dump(report.to_json()) : report.to_table(o.width));
  if (!o.out.empty())
    std::cerr << (report.ok() ? "ok" : "FAILED") << ": report written to " << o.out << "\n";
  return report.ok() ? 0 : 1;
}

Property property_arg(const std::string& name) {
  auto p = parse_property(name);
  if (!p) throw ParseError("property", "unknown property '" + name + "'");
  return *p;
}

int cmd_search(const Options& o) {
  const auto corpus = load_corpus(o);
  std::vector<Property> b;
  for (const auto& n : o.prop_b) b.push_back(property_arg(n));
  const auto res = search_separation(corpus, property_arg(o.prop_a), b, o.budget, o.jobs);
  if (o.json()) {
    emit(o, dump(res.to_json()));
  } else {
    std::ostringstream os;
    os << "search: " << res.prop_a << " true, all of {";
    for (std::size_t k = 0; k < res.prop_b.size(); ++k) os << (k ? "," : "") << res.prop_b[k];
    os << "} false\n";
    for (const auto& r : res.rings) {
      os << "  " << std::left << std::setw(16) << r.name << std::right << std::setw(4) << r.ideals
         << " ideals  " << r.examined << "/" << r.space
         << (r.exhaustive ? " exhaustive" : " sampled");
      if (r.witness) {
        os << "  witness {";
        bool first = true;
        r.witness->for_each([&](Element k) {
          os << (first ? "" : ",") << k;
          first = false;
        });
        os << "}";
      }
      os << "\n";
    }
    os << (res.first ? "found on " + res.rings[*res.first].name : std::string("no witness"))
       << "\n";
    if (res.aborted) os << "ABORTED: " << res.abort_reason << "\n";
    emit(o, os.str());
  }
  return res.aborted ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"okalab: finite rings, ideal families and the prime ideal principle"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--jobs", o.jobs, "Worker threads for suite and search")->capture_default_str();
  app.add_option("--seed", o.seed, "Override the corpus seed");
  app.add_option("--cap-order", o.cap_order, "Largest ring order accepted")->capture_default_str();
  app.add_option("--cap-lattice", o.cap_lattice, "Largest ideal lattice accepted")
      ->capture_default_str();
  app.add_option("--out", o.out, "Write output to this file instead of stdout");
  app.add_option("--width", o.width, "Table witness truncation width")->capture_default_str();

  auto ring_arg = [&](CLI::App* sub) {
    sub->add_option("ring", o.ring_file, "Ring description (JSON)")->required()->check(CLI::ExistingFile);
  };
  auto family_args = [&](CLI::App* sub) {
    sub->add_option("family_file", o.family_file, "Family description (JSON)")->check(CLI::ExistingFile);
    sub->add_option("--family", o.family_name, "Named family from the zoo");
    sub->add_option("--param", o.params, "Named family parameter key=value (repeatable)");
  };

  auto* ring = app.add_subcommand("ring", "Validate a ring and summarize it");
  ring_arg(ring);
  auto* ideals = app.add_subcommand("ideals", "Enumerate an ideal lattice");
  ring_arg(ideals);
  ideals->add_option("--side", o.side, "two_sided, right or left")->capture_default_str();
  auto* spec = app.add_subcommand("spec", "Prime ideals, minimal primes and witnesses");
  ring_arg(spec);
  auto* family = app.add_subcommand("family", "Materialize a family");
  ring_arg(family);
  family_args(family);
  auto* check = app.add_subcommand("check", "Property profile, implications and PIP");
  ring_arg(check);
  family_args(check);
  auto* pip = app.add_subcommand("pip", "Max(F') against Spec(R)");
  ring_arg(pip);
  family_args(pip);
  auto* suite = app.add_subcommand("suite", "Run the verification suite over a corpus");
  suite->add_option("corpus", o.corpus_file, "Corpus file; default corpus when omitted")
      ->check(CLI::ExistingFile);
  suite->add_option("--only", o.only, "Run only these blocks (repeatable)");
  auto* search = app.add_subcommand("search", "Search for a property separation");
  search->add_option("corpus", o.corpus_file, "Corpus file; default corpus when omitted")
      ->check(CLI::ExistingFile);
  search->add_option("--a", o.prop_a, "Property that must hold")->capture_default_str();
  search->add_option("--b", o.prop_b, "Properties that must all fail (repeatable)");
  search->add_option("--budget", o.budget, "Families per ring")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ring) return cmd_ring(o);
    if (*ideals) return cmd_ideals(o);
    if (*spec) return cmd_spec(o);
    if (*family) return cmd_family(o);
    if (*check) return cmd_check(o);
    if (*pip) return cmd_pip(o);
    if (*suite) {
      if (!o.only.empty()) {
        const auto names = suite_blocks();
        for (const auto& b : o.only)
          if (std::ranges::find(names, b) == names.end())
            throw ParseError("--only", "unknown block '" + b + "'");
      }
      return cmd_suite(o);
    }
    if (*search) return cmd_search(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
