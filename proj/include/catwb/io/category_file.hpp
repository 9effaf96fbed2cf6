#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "catwb/core/category.hpp"
#include "catwb/core/functor.hpp"
#include "catwb/io/text.hpp"

namespace catwb::io {

// Category files:
//
//   objects: a b
//   arrow f: a -> b
//   compose h = g . f
//
// Identities are implicit and named id_<object>; every composable pair of
// non-identity arrows needs a compose line.

inline CatPtr parse_category(std::string_view text, const std::string& source = "<input>") {
  struct ArrowDecl {
    std::string name;
    ObjId dom, cod;
    std::size_t line;
  };
  std::vector<std::string> objects;
  std::map<std::string, ObjId> object_index;
  std::vector<ArrowDecl> arrows;
  std::map<std::string, MorId> arrow_index;  // identities included, by name
  std::map<std::pair<MorId, MorId>, std::pair<MorId, std::size_t>> table;
  bool have_objects = false;
  std::size_t last_line = 0;

  auto fail = [&](std::size_t line, std::size_t col, const std::string& msg) -> ParseError {
    return ParseError(source, line, col, msg);
  };
  auto lookup_object = [&](const Line& l, const Token& t) {
    auto it = object_index.find(t.text);
    if (it == object_index.end()) throw fail(l.number, t.column, "unknown object '" + t.text + "'");
    return it->second;
  };
  auto lookup_arrow = [&](const Line& l, const Token& t) {
    auto it = arrow_index.find(t.text);
    if (it == arrow_index.end()) throw fail(l.number, t.column, "unknown arrow '" + t.text + "'");
    return it->second;
  };
  // arrows are numbered identities first (in object order), then declarations
  auto dom_of = [&](MorId m) { return m < objects.size() ? m : arrows[m - objects.size()].dom; };
  auto cod_of = [&](MorId m) { return m < objects.size() ? m : arrows[m - objects.size()].cod; };
  auto name_of = [&](MorId m) { return m < objects.size() ? "id_" + objects[m] : arrows[m - objects.size()].name; };

  for (const auto& l : tokenize(text)) {
    last_line = l.number;
    const auto& head = l.tokens[0];
    if (head.text == "objects:") {
      if (have_objects) throw fail(l.number, head.column, "duplicate objects line");
      if (!arrows.empty()) throw fail(l.number, head.column, "objects must precede arrows");
      have_objects = true;
      for (std::size_t k = 1; k < l.tokens.size(); ++k) {
        const auto& t = l.tokens[k];
        if (!is_plain_name(t.text)) throw fail(l.number, t.column, "bad object name '" + t.text + "'");
        if (!object_index.emplace(t.text, static_cast<ObjId>(objects.size())).second)
          throw fail(l.number, t.column, "duplicate object id '" + t.text + "'");
        objects.push_back(t.text);
      }
      for (ObjId o = 0; o < objects.size(); ++o)
        if (!arrow_index.emplace("id_" + objects[o], o).second)
          throw fail(l.number, head.column, "identity name clash for '" + objects[o] + "'");
    } else if (head.text == "arrow") {
      if (!have_objects) throw fail(l.number, head.column, "arrow before objects line");
      if (l.tokens.size() != 5 || l.tokens[1].text.size() < 2 || l.tokens[1].text.back() != ':' ||
          l.tokens[3].text != "->")
        throw fail(l.number, head.column, "expected 'arrow NAME: DOM -> COD'");
      const auto& nt = l.tokens[1];
      std::string name = nt.text.substr(0, nt.text.size() - 1);
      if (!is_plain_name(name)) throw fail(l.number, nt.column, "bad arrow name '" + name + "'");
      if (name.rfind("id_", 0) == 0) throw fail(l.number, nt.column, "arrow names starting with id_ are reserved");
      ArrowDecl d{name, lookup_object(l, l.tokens[2]), lookup_object(l, l.tokens[4]), l.number};
      if (!arrow_index.emplace(name, static_cast<MorId>(objects.size() + arrows.size())).second)
        throw fail(l.number, nt.column, "duplicate arrow id '" + name + "'");
      arrows.push_back(std::move(d));
    } else if (head.text == "compose") {
      if (l.tokens.size() != 6 || l.tokens[2].text != "=" || l.tokens[4].text != ".")
        throw fail(l.number, head.column, "expected 'compose H = G . F'");
      MorId h = lookup_arrow(l, l.tokens[1]), g = lookup_arrow(l, l.tokens[3]), f = lookup_arrow(l, l.tokens[5]);
      if (cod_of(f) != dom_of(g))
        throw fail(l.number, l.tokens[3].column, "arrows " + name_of(g) + " and " + name_of(f) + " are not composable");
      if (dom_of(h) != dom_of(f) || cod_of(h) != cod_of(g))
        throw fail(l.number, l.tokens[1].column, "composite " + name_of(h) + " has the wrong type");
      if (!table.emplace(std::pair{g, f}, std::pair{h, l.number}).second)
        throw fail(l.number, head.column, "duplicate composite for " + name_of(g) + " . " + name_of(f));
    } else {
      throw fail(l.number, head.column, "unknown directive '" + head.text + "'");
    }
  }
  if (!have_objects) throw fail(1, 1, "missing objects line");

  // identity laws hold by construction; explicit entries must agree with them
  for (const auto& [gf, hl] : table) {
    auto [g, f] = gf;
    if ((g < objects.size() && hl.first != f) || (f < objects.size() && hl.first != g))
      throw fail(hl.second, 1, "composite with an identity must be the other arrow");
  }
  for (MorId g = objects.size(); g < objects.size() + arrows.size(); ++g)
    for (MorId f = objects.size(); f < objects.size() + arrows.size(); ++f)
      if (cod_of(f) == dom_of(g) && !table.count({g, f}))
        throw fail(arrows[g - objects.size()].line, 1, "missing composite " + name_of(g) + " . " + name_of(f));

  CategoryBuilder b;
  for (const auto& o : objects) b.add_object(o);
  for (ObjId o = 0; o < objects.size(); ++o) b.add_identity(o);
  for (const auto& a : arrows) b.add_morphism(a.name, a.dom, a.cod);
  for (const auto& [gf, hl] : table) b.set_composite(gf.first, gf.second, hl.first);
  auto c = make_cat(std::move(b).build());

  auto report = validate_category(*c);
  if (!report.ok()) {
    // locate the first violation at a compose line mentioning its witnesses
    const auto& v = report.violations.front();
    std::size_t line = last_line;
    for (const auto& [gf, hl] : table) {
      auto mentions = [&](MorId m) {
        return std::find(v.witnesses.begin(), v.witnesses.end(), name_of(m)) != v.witnesses.end();
      };
      if (mentions(gf.first) && mentions(gf.second)) {
        line = hl.second;
        break;
      }
    }
    throw fail(line, 1, "not a category: " + report.summary());
  }
  return c;
}

inline CatPtr load_category(const std::string& path) { return parse_category(read_file(path), path); }

/// Canonical text: objects and arrows in id order, one compose line per
/// composable pair of non-identity arrows in (g, f) order.
inline std::string serialize_category(const FiniteCategory& c) {
  auto name = [&](MorId m) { return c.is_identity(m) ? "id_" + c.object_name(c.dom(m)) : c.morphism_name(m); };
  std::string out = "objects:";
  for (const auto& o : c.objects()) {
    if (!is_plain_name(o)) throw PreconditionError("serialize_category: object name '" + o + "' cannot be written");
    out += " " + o;
  }
  out += "\n";
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    if (c.is_identity(m)) continue;
    if (!is_plain_name(c.morphism_name(m)) || c.morphism_name(m).rfind("id_", 0) == 0)
      throw PreconditionError("serialize_category: arrow name '" + c.morphism_name(m) + "' cannot be written");
    out += "arrow " + c.morphism_name(m) + ": " + c.object_name(c.dom(m)) + " -> " + c.object_name(c.cod(m)) + "\n";
  }
  for (MorId g = 0; g < c.num_morphisms(); ++g) {
    if (c.is_identity(g)) continue;
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      if (c.is_identity(f) || c.cod(f) != c.dom(g)) continue;
      out += "compose " + name(c.compose(g, f)) + " = " + name(g) + " . " + name(f) + "\n";
    }
  }
  return out;
}

// Functor files: "object X -> Y" and "arrow F -> G" lines; identities
// follow their objects and may be omitted.

inline Functor parse_functor(std::string_view text, const CatPtr& source, const CatPtr& target,
                             const std::string& where = "<input>") {
  const auto& S = *source;
  const auto& T = *target;
  Functor f{source, target, std::vector<ObjId>(S.num_objects(), kNoId), std::vector<MorId>(S.num_morphisms(), kNoId)};
  std::size_t last_line = 0;
  for (const auto& l : tokenize(text)) {
    last_line = l.number;
    const auto& head = l.tokens[0];
    if (l.tokens.size() != 4 || l.tokens[2].text != "->" || (head.text != "object" && head.text != "arrow"))
      throw ParseError(where, l.number, head.column, "expected 'object X -> Y' or 'arrow F -> G'");
    const auto& from = l.tokens[1];
    const auto& to = l.tokens[3];
    if (head.text == "object") {
      auto x = S.find_object(from.text);
      auto y = T.find_object(to.text);
      if (!x) throw ParseError(where, l.number, from.column, "unknown source object '" + from.text + "'");
      if (!y) throw ParseError(where, l.number, to.column, "unknown target object '" + to.text + "'");
      if (f.objects[*x] != kNoId) throw ParseError(where, l.number, from.column, "object mapped twice");
      f.objects[*x] = *y;
    } else {
      auto m = S.find_morphism(from.text);
      auto n = T.find_morphism(to.text);
      if (!m) throw ParseError(where, l.number, from.column, "unknown source arrow '" + from.text + "'");
      if (!n) throw ParseError(where, l.number, to.column, "unknown target arrow '" + to.text + "'");
      if (f.morphisms[*m] != kNoId) throw ParseError(where, l.number, from.column, "arrow mapped twice");
      f.morphisms[*m] = *n;
    }
  }
  for (ObjId x = 0; x < S.num_objects(); ++x) {
    if (f.objects[x] == kNoId) throw ParseError(where, last_line, 0, "object '" + S.object_name(x) + "' not mapped");
    MorId id = S.identity(x);
    if (f.morphisms[id] == kNoId) f.morphisms[id] = T.identity(f.objects[x]);
  }
  for (MorId m = 0; m < S.num_morphisms(); ++m)
    if (f.morphisms[m] == kNoId)
      throw ParseError(where, last_line, 0, "arrow '" + S.morphism_name(m) + "' not mapped");
  auto report = validate_functor(f);
  if (!report.ok()) throw ParseError(where, 0, 0, "not a functor: " + report.summary());
  return f;
}

inline std::string serialize_functor(const Functor& f) {
  const auto& S = *f.source;
  const auto& T = *f.target;
  std::string out;
  for (ObjId x = 0; x < S.num_objects(); ++x)
    out += "object " + S.object_name(x) + " -> " + T.object_name(f.obj(x)) + "\n";
  for (MorId m = 0; m < S.num_morphisms(); ++m)
    if (!S.is_identity(m)) out += "arrow " + S.morphism_name(m) + " -> " + T.morphism_name(f.mor(m)) + "\n";
  return out;
}

}  // namespace catwb::io
