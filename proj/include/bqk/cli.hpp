#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "automorphisms.hpp"
#include "combinators.hpp"
#include "coverings.hpp"
#include "enumeration.hpp"
#include "group_constructions.hpp"
#include "json_io.hpp"
#include "links.hpp"
#include "verbal.hpp"

namespace bqk::cli {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json read_json(const std::string& path) { return parse_json_text(read_file(path)); }

// "Z5", "S3", "Z2xZ2", or a group JSON file
inline FiniteGroup parse_group(const std::string& spec) {
  if (spec.find(".json") != std::string::npos) return group_from_json(read_json(spec));
  std::vector<FiniteGroup> parts;
  std::stringstream ss(spec);
  for (std::string tok; std::getline(ss, tok, 'x');) {
    if (tok.size() < 2 || (tok[0] != 'Z' && tok[0] != 'S')) throw MalformedInput("bad group '" + spec + "'");
    std::size_t n = 0;
    try {
      n = std::stoul(tok.substr(1));
    } catch (const std::exception&) {
      throw MalformedInput("bad group '" + spec + "'");
    }
    if (n == 0) throw MalformedInput("bad group '" + spec + "'");
    parts.push_back(tok[0] == 'Z' ? cyclic_group(n) : symmetric_group(n));
  }
  if (parts.empty()) throw MalformedInput("bad group '" + spec + "'");
  FiniteGroup g = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, parts[i]);
  return g;
}

inline long long parse_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw MalformedInput(std::string("bad ") + what + " '" + s + "'");
  }
}

// automorphism argument: index into the sorted list, or "m<k>" for x -> kx on a cyclic group
inline Permutation pick_aut(const std::vector<Permutation>& autos, const std::string& arg, std::size_t degree) {
  if (!arg.empty() && arg[0] == 'm') {
    Permutation f = multiplication_map(degree, parse_int(arg.substr(1), "multiplier"));
    if (std::find(autos.begin(), autos.end(), f) == autos.end()) throw DomainError("x -> " + arg.substr(1) + "x is not an automorphism");
    return f;
  }
  long long i = parse_int(arg, "automorphism index");
  if (i < 0 || i >= static_cast<long long>(autos.size()))
    throw DomainError("automorphism index " + arg + " out of range (" + std::to_string(autos.size()) + " automorphisms)");
  return autos[static_cast<std::size_t>(i)];
}

inline json perms_json(const std::vector<Permutation>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(p.images());
  return a;
}

inline std::vector<Elem> parse_map(const std::string& text) {
  json j = parse_json_text(text);
  if (!j.is_array()) throw MalformedInput("map must be a JSON array");
  std::vector<Elem> m;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw MalformedInput("map entries must be integers");
    m.push_back(x.get<Elem>());
  }
  return m;
}

struct Loaded {
  enum Kind { Quandle, Biquandle, Group, Structure } kind;
  json j;
};

inline Loaded load_any(const std::string& path) {
  json j = read_json(path);
  if (!j.is_object()) throw MalformedInput("expected a JSON object in '" + path + "'");
  if (j.contains("betas")) return {Loaded::Structure, j};
  if (j.contains("under") || j.contains("over")) return {Loaded::Biquandle, j};
  if (j.contains("mul")) return {Loaded::Group, j};
  if (j.contains("table")) return {Loaded::Quandle, j};
  throw MalformedInput("cannot tell what '" + path + "' holds");
}

inline void print_report(std::ostream& out, bool as_json, const std::string& what, const AxiomReport& r) {
  if (as_json) {
    json v = json::array();
    for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
    out << json{{"kind", what}, {"passed", r.passed()}, {"violations", v}}.dump() << '\n';
  } else {
    out << what << ": " << (r.passed() ? "ok" : r.summary()) << '\n';
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"finite quandle and biquandle toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  std::string format = "text";
  std::size_t cap_order = group_order_cap(), cap_enum = enumeration_cap(), cap_arcs = arc_cap();
  int jobs = 1;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cap-order", cap_order, "largest group order accepted");
  app.add_option("--cap-enum", cap_enum, "largest n for enumeration");
  app.add_option("--cap-arcs", cap_arcs, "largest arc count in a diagram");
  app.add_option("--jobs", jobs, "worker threads for counting")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "check the axioms of a JSON quandle, biquandle, group or structure");
  std::string check_file;
  check->add_option("file", check_file)->required();

  auto* construct = app.add_subcommand("construct", "build a quandle or biquandle and print it as JSON");
  std::string family;
  std::vector<std::string> cargs;
  int product_case = 1;
  construct->add_option("family", family)->required();
  construct->add_option("args", cargs);
  construct->add_option("--case", product_case, "product case (1 or 2)");

  auto* aut = app.add_subcommand("aut", "automorphism group of a JSON object");
  std::string aut_file;
  aut->add_option("file", aut_file)->required();

  auto* color = app.add_subcommand("color", "count colorings of a diagram");
  std::string diagram, structure, quandle_file, biquandle_file;
  color->add_option("--diagram", diagram, "diagram file or builtin:<name>")->required();
  color->add_option("--structure", structure, "quandle, biquandle or structure JSON");
  color->add_option("--quandle", quandle_file, "quandle JSON");
  color->add_option("--biquandle", biquandle_file, "biquandle JSON");

  auto* enumerate = app.add_subcommand("enumerate", "trivial-structures n | quandles n (JSON lines)");
  std::string what;
  std::size_t en = 0;
  enumerate->add_option("what", what)->required()->check(CLI::IsMember({"trivial-structures", "quandles"}));
  enumerate->add_option("n", en)->required();

  auto* verbal = app.add_subcommand("verbal", "classify | quandle | enumerate");
  std::string vmode, vu, vv, vw;
  long long vbound = 3;
  verbal->add_option("mode", vmode)->required()->check(CLI::IsMember({"classify", "quandle", "enumerate"}));
  verbal->add_option("--u", vu, "over word in x, y");
  verbal->add_option("--v", vv, "under word in x, y");
  verbal->add_option("--w", vw, "quandle word");
  verbal->add_option("--bound", vbound, "exponent bound");

  auto* ybe = app.add_subcommand("ybe", "check the Yang-Baxter equation for a biquandle");
  std::string ybe_file;
  ybe->add_option("file", ybe_file)->required();

  auto* iso = app.add_subcommand("iso", "isomorphism between two quandles or two biquandles");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  auto* cover = app.add_subcommand("cover", "check | lift");
  std::string cmode, cqt, cq, cmap, cstruct;
  cover->add_option("mode", cmode)->required()->check(CLI::IsMember({"check", "lift"}));
  cover->add_option("cover", cqt, "covering quandle JSON")->required();
  cover->add_option("base", cq, "base quandle JSON")->required();
  cover->add_option("--map", cmap, "JSON array p")->required();
  cover->add_option("--structure", cstruct, "structure on the base (lift)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    if (code != 0 && app.get_subcommands().empty()) err << app.help();
    return code == 0 ? 0 : 2;
  }
  const bool as_json = format == "json";
  group_order_cap() = cap_order;
  enumeration_cap() = cap_enum;
  arc_cap() = cap_arcs;

  try {
    if (*check) {
      Loaded l = load_any(check_file);
      AxiomReport r;
      std::string kind;
      switch (l.kind) {
        case Loaded::Quandle:
          kind = "quandle";
          r = check_quandle(detail::read_rows(l.j, "table"));
          break;
        case Loaded::Biquandle: {
          kind = "biquandle";
          Table u = detail::read_table(l.j, "under"), o = detail::read_table(l.j, "over");
          if (u.size() != o.size()) throw MalformedInput("under and over differ in size");
          r = check_biquandle(u, o);
          break;
        }
        case Loaded::Group:
          kind = "group";
          try {
            group_from_json(l.j);
          } catch (const DomainError& e) {
            r.violations.push_back({e.what(), {}});
          }
          break;
        case Loaded::Structure: {
          kind = "structure";
          FiniteQuandle base = quandle_from_json(l.j["base"]);
          std::vector<Permutation> betas;
          for (const auto& b : l.j["betas"]) betas.push_back(permutation_from_json(b));
          r = validate_structure(base, betas);
          break;
        }
      }
      print_report(out, as_json, kind, r);
      return r.passed() ? 0 : 1;
    }

    if (*construct) {
      auto need = [&](std::size_t k) {
        if (cargs.size() != k)
          throw MalformedInput("construct " + family + " takes " + std::to_string(k) + " argument(s)");
      };
      auto G = [&](std::size_t i) { return parse_group(cargs.at(i)); };
      auto Q = [&](std::size_t i) { return quandle_from_json(read_json(cargs.at(i))); };
      json result;
      if (family == "conj") {
        need(2);
        result = to_json(conj_quandle(G(0), parse_int(cargs[1], "n")));
      } else if (family == "core") {
        need(1);
        result = to_json(core_quandle(G(0)));
      } else if (family == "takasaki") {
        need(1);
        result = to_json(takasaki(G(0)));
      } else if (family == "dihedral") {
        need(1);
        long long n = parse_int(cargs[0], "n");
        if (n < 1) throw DomainError("n must be positive");
        result = to_json(dihedral_quandle(static_cast<std::size_t>(n)));
      } else if (family == "trivial") {
        need(1);
        long long n = parse_int(cargs[0], "n");
        if (n < 1) throw DomainError("n must be positive");
        result = to_json(trivial_quandle(static_cast<std::size_t>(n)));
      } else if (family == "alex") {
        need(2);
        FiniteGroup g = G(0);
        result = to_json(alexander_quandle(g, pick_aut(automorphism_group(g), cargs[1], g.order())));
      } else if (family == "wada") {
        need(1);
        result = to_json(wada_biquandle(G(0)));
      } else if (family == "gendihedral") {
        need(2);
        FiniteGroup g = G(0);
        result = to_json(gen_dihedral_biquandle(g, pick_aut(automorphism_group(g), cargs[1], g.order())));
      } else if (family == "genalex") {
        need(3);
        FiniteGroup g = G(0);
        auto autos = automorphism_group(g);
        result = to_json(gen_alexander_biquandle(g, pick_aut(autos, cargs[1], g.order()), pick_aut(autos, cargs[2], g.order())));
      } else if (family == "alexbq") {
        need(3);
        long long n = parse_int(cargs[0], "n");
        if (n < 1) throw DomainError("n must be positive");
        result = to_json(alexander_biquandle(static_cast<std::size_t>(n), parse_int(cargs[1], "s"), parse_int(cargs[2], "t")));
      } else if (family == "union") {
        need(2);
        result = to_json(union_quandle(Q(0), Q(1)));
      } else if (family == "unionbq") {
        need(4);
        FiniteQuandle a = Q(0), b = Q(1);
        result = to_json(union_biquandle_constant(a, b, pick_aut(quandle_automorphisms(a), cargs[2], a.size()),
                                                  pick_aut(quandle_automorphisms(b), cargs[3], b.size())));
      } else if (family == "product") {
        // product q1 q2 [phi psi]: constant families given by automorphism indices
        if (cargs.size() != 2 && cargs.size() != 4) throw MalformedInput("construct product takes 2 or 4 arguments");
        FiniteQuandle a = Q(0), b = Q(1);
        if (cargs.size() == 2) {
          result = to_json(product_quandle(a, b));
        } else {
          Permutation g = pick_aut(quandle_automorphisms(b), cargs[2], b.size());
          Permutation f = pick_aut(quandle_automorphisms(a), cargs[3], a.size());
          result = to_json(product_biquandle(a, b, std::vector<Permutation>(a.size(), g),
                                             std::vector<Permutation>(b.size(), f), product_case));
        }
      } else if (family == "semidirect") {
        // semidirect q1 q2 psi_0 ... psi_{k-1}: automorphism indices of q1
        FiniteQuandle a = Q(0), b = Q(1);
        need(2 + b.size());
        auto autos = quandle_automorphisms(a);
        std::vector<Permutation> psi;
        for (std::size_t i = 0; i < b.size(); ++i) psi.push_back(pick_aut(autos, cargs[2 + i], a.size()));
        result = to_json(semidirect_biquandle(a, b, psi));
      } else if (family == "holomorph") {
        need(1);
        result = to_json(holomorph_biquandle(Q(0)).biquandle);
      } else {
        throw MalformedInput("unknown family '" + family + "'");
      }
      out << result.dump() << '\n';
      return 0;
    }

    if (*aut) {
      Loaded l = load_any(aut_file);
      std::vector<Permutation> autos;
      switch (l.kind) {
        case Loaded::Quandle: autos = quandle_automorphisms(quandle_from_json(l.j)); break;
        case Loaded::Biquandle: autos = biquandle_automorphisms(biquandle_from_json(l.j)); break;
        case Loaded::Group: autos = automorphism_group(group_from_json(l.j)); break;
        case Loaded::Structure:
          autos = biquandle_automorphisms(biquandle_from_structure(structure_from_json(l.j)));
          break;
      }
      if (as_json) {
        out << json{{"order", autos.size()}, {"elements", perms_json(autos)}}.dump() << '\n';
      } else {
        out << "order " << autos.size() << '\n';
        for (std::size_t i = 0; i < autos.size(); ++i) out << i << ' ' << autos[i].cycles() << '\n';
      }
      return 0;
    }

    if (*color) {
      VirtualLinkDiagram d;
      if (diagram.rfind("builtin:", 0) == 0) {
        auto texts = builtin_diagram_texts();
        auto it = texts.find(diagram.substr(8));
        if (it == texts.end()) throw MalformedInput("no builtin diagram '" + diagram.substr(8) + "'");
        d = parse_diagram(it->second);
      } else {
        d = parse_diagram(read_file(diagram));
      }
      int given = !structure.empty() + !quandle_file.empty() + !biquandle_file.empty();
      if (given != 1) throw MalformedInput("give exactly one of --structure, --quandle, --biquandle");
      unsigned long long count = 0;
      if (!quandle_file.empty()) {
        count = coloring_count_quandle(d, quandle_from_json(read_json(quandle_file)), jobs);
      } else if (!biquandle_file.empty()) {
        count = coloring_count_biquandle(d, biquandle_from_json(read_json(biquandle_file)), jobs);
      } else {
        Loaded l = load_any(structure);
        if (l.kind == Loaded::Quandle) count = coloring_count_quandle(d, quandle_from_json(l.j), jobs);
        else if (l.kind == Loaded::Biquandle) count = coloring_count_biquandle(d, biquandle_from_json(l.j), jobs);
        else if (l.kind == Loaded::Structure)
          count = coloring_count_biquandle(d, biquandle_from_structure(structure_from_json(l.j)), jobs);
        else throw MalformedInput("cannot color by a group");
      }
      if (as_json) out << json{{"count", count}, {"components", d.components()}}.dump() << '\n';
      else out << count << '\n';
      return 0;
    }

    if (*enumerate) {
      if (what == "trivial-structures") {
        for (const auto& s : enumerate_trivial_structures(en)) out << to_json(s).dump() << '\n';
      } else {
        for (const auto& q : enumerate_quandles(en)) out << to_json(q).dump() << '\n';
      }
      return 0;
    }

    if (*verbal) {
      if (vmode == "classify") {
        if (vu.empty() || vv.empty()) throw MalformedInput("classify needs --u and --v");
        FreeWord u = FreeWord::parse(vu), v = FreeWord::parse(vv);
        auto c = classify_verbal_biquandle(u, v);
        bool birack = is_verbal_birack(u, v);
        if (as_json)
          out << json{{"u", u.str()}, {"v", v.str()}, {"birack", birack}, {"family", c.family}, {"param", c.param}}.dump()
              << '\n';
        else if (c.family) out << "family " << c.family << (c.family <= 2 ? " param " + std::to_string(c.param) : "") << '\n';
        else out << (birack ? "birack outside the listed families" : "not a verbal birack") << '\n';
        return 0;
      }
      if (vmode == "quandle") {
        if (vw.empty()) throw MalformedInput("quandle needs --w");
        FreeWord w = FreeWord::parse(vw);
        auto c = classify_verbal_quandle(w);
        bool ok = is_verbal_quandle_word(w);
        const char* name = c.kind == VerbalQuandleClass::Conj ? "conj" : c.kind == VerbalQuandleClass::Core ? "core" : "none";
        if (as_json) out << json{{"w", w.str()}, {"quandle", ok}, {"class", name}, {"n", c.n}}.dump() << '\n';
        else out << (ok ? std::string(name) + (c.kind == VerbalQuandleClass::Conj ? " " + std::to_string(c.n) : "") : "not a verbal quandle") << '\n';
        return 0;
      }
      auto pairs = enumerate_verbal_biracks(vbound);
      for (const auto& [u, v] : pairs) {
        auto c = classify_verbal_biquandle(u, v);
        if (as_json) out << json{{"u", u.str()}, {"v", v.str()}, {"family", c.family}, {"param", c.param}}.dump() << '\n';
        else out << u.str() << " | " << v.str() << " | family " << c.family << '\n';
      }
      return 0;
    }

    if (*ybe) {
      Loaded l = load_any(ybe_file);
      if (l.kind != Loaded::Biquandle) throw MalformedInput("ybe needs a biquandle");
      Table u = detail::read_table(l.j, "under"), o = detail::read_table(l.j, "over");
      if (u.size() != o.size()) throw MalformedInput("under and over differ in size");
      AxiomReport r = check_ybe(u, o);
      print_report(out, as_json, "ybe", r);
      return r.passed() ? 0 : 1;
    }

    if (*iso) {
      Loaded a = load_any(iso_a), b = load_any(iso_b);
      std::optional<Permutation> f;
      if (a.kind == Loaded::Quandle && b.kind == Loaded::Quandle)
        f = are_isomorphic(quandle_from_json(a.j), quandle_from_json(b.j));
      else if (a.kind == Loaded::Biquandle && b.kind == Loaded::Biquandle)
        f = are_isomorphic(biquandle_from_json(a.j), biquandle_from_json(b.j));
      else throw MalformedInput("iso needs two quandles or two biquandles");
      if (as_json) out << json{{"isomorphic", f.has_value()}, {"map", f ? json(f->images()) : json(nullptr)}}.dump() << '\n';
      else out << (f ? "isomorphic " + json(f->images()).dump() : std::string("not isomorphic")) << '\n';
      return 0;
    }

    if (*cover) {
      FiniteQuandle qt = quandle_from_json(read_json(cqt)), q = quandle_from_json(read_json(cq));
      std::vector<Elem> p = parse_map(cmap);
      if (cmode == "check") {
        auto c = is_quandle_covering(p, qt, q);
        if (as_json) out << json{{"covering", c.covering}, {"reason", c.reason}}.dump() << '\n';
        else out << (c.covering ? "covering" : "not a covering: " + c.reason) << '\n';
        return 0;
      }
      if (cstruct.empty()) throw MalformedInput("lift needs --structure");
      BiquandleStructure a = structure_from_json(read_json(cstruct));
      if (!(a.base == q)) throw MalformedInput("structure base differs from the base quandle");
      auto lift = lift_structure_search(p, qt, a);
      if (as_json) out << json{{"found", lift.has_value()}, {"lift", lift ? to_json(*lift) : json(nullptr)}}.dump() << '\n';
      else out << (lift ? to_json(*lift).dump() : std::string("not found within search")) << '\n';
      return 0;
    }
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace bqk::cli
