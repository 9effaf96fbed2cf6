#pragma once

#include <map>
#include <string>
#include <string_view>

#include "catwb/internalcat/internal_category.hpp"
#include "catwb/io/text.hpp"

namespace catwb::io {

// Internal category files:
//
//   A0: a b
//   A1: f id_a id_b
//   dom:
//     f a
//   cod:
//     f b
//   e:
//     a id_a
//   m:
//     id_b f f        # g f g∘f, one row per pair in A2
//
// Rows of dom, cod and e give one entry per element; m lists A2.

inline internalcat::InternalCategory parse_internal(std::string_view text, const std::string& source = "<input>") {
  using internalcat::InternalCategory;
  InternalCategory a;
  std::map<std::string, std::size_t> obj, arr;
  std::string section;
  std::vector<bool> seen_dom, seen_cod, seen_e;
  bool have_a0 = false, have_a1 = false;

  auto fail = [&](std::size_t line, std::size_t col, const std::string& msg) { return ParseError(source, line, col, msg); };
  auto find = [&](const std::map<std::string, std::size_t>& in, const Line& l, const Token& t, const char* what) {
    auto it = in.find(t.text);
    if (it == in.end()) throw fail(l.number, t.column, std::string("unknown ") + what + " '" + t.text + "'");
    return it->second;
  };

  for (const auto& l : tokenize(text)) {
    const auto& head = l.tokens[0];
    if (head.text == "A0:" || head.text == "A1:") {
      const bool objects = head.text == "A0:";
      if (objects ? have_a0 : have_a1) throw fail(l.number, head.column, "duplicate " + head.text + " line");
      if (!objects && !have_a0) throw fail(l.number, head.column, "A1 before A0");
      (objects ? have_a0 : have_a1) = true;
      auto& names = objects ? a.objects : a.arrows;
      auto& index = objects ? obj : arr;
      for (std::size_t k = 1; k < l.tokens.size(); ++k) {
        const auto& t = l.tokens[k];
        if (!is_plain_name(t.text)) throw fail(l.number, t.column, "bad name '" + t.text + "'");
        if (!index.emplace(t.text, names.size()).second) throw fail(l.number, t.column, "duplicate id '" + t.text + "'");
        names.push_back(t.text);
      }
      if (!objects) {
        a.dom.assign(a.arrows.size(), InternalCategory::kNone);
        a.cod.assign(a.arrows.size(), InternalCategory::kNone);
        a.m.assign(a.arrows.size(), std::vector<std::size_t>(a.arrows.size(), InternalCategory::kNone));
        seen_dom.assign(a.arrows.size(), false);
        seen_cod.assign(a.arrows.size(), false);
        a.e.assign(a.objects.size(), InternalCategory::kNone);
        seen_e.assign(a.objects.size(), false);
      }
      section.clear();
      continue;
    }
    if (head.text == "dom:" || head.text == "cod:" || head.text == "e:" || head.text == "m:") {
      if (!have_a1) throw fail(l.number, head.column, "section before A0 and A1");
      if (l.tokens.size() != 1) throw fail(l.number, l.tokens[1].column, "rows go on their own lines");
      section = head.text;
      continue;
    }
    if (section.empty()) throw fail(l.number, head.column, "unknown directive '" + head.text + "'");
    if (section == "dom:" || section == "cod:") {
      if (l.tokens.size() != 2) throw fail(l.number, head.column, "expected 'ARROW OBJECT'");
      auto f = find(arr, l, l.tokens[0], "arrow");
      auto& seen = section == "dom:" ? seen_dom : seen_cod;
      if (seen[f]) throw fail(l.number, head.column, "arrow '" + head.text + "' listed twice");
      seen[f] = true;
      (section == "dom:" ? a.dom : a.cod)[f] = find(obj, l, l.tokens[1], "object");
    } else if (section == "e:") {
      if (l.tokens.size() != 2) throw fail(l.number, head.column, "expected 'OBJECT ARROW'");
      auto x = find(obj, l, l.tokens[0], "object");
      if (seen_e[x]) throw fail(l.number, head.column, "object '" + head.text + "' listed twice");
      seen_e[x] = true;
      a.e[x] = find(arr, l, l.tokens[1], "arrow");
    } else {
      if (l.tokens.size() != 3) throw fail(l.number, head.column, "expected 'G F H'");
      auto g = find(arr, l, l.tokens[0], "arrow"), f = find(arr, l, l.tokens[1], "arrow");
      if (a.m[g][f] != InternalCategory::kNone)
        throw fail(l.number, head.column, "duplicate composite for " + a.arrows[g] + " " + a.arrows[f]);
      a.m[g][f] = find(arr, l, l.tokens[2], "arrow");
    }
  }
  if (!have_a1) throw fail(0, 0, "missing A0 or A1 line");
  for (std::size_t f = 0; f < a.arrows.size(); ++f) {
    if (!seen_dom[f]) throw fail(0, 0, "no dom for arrow '" + a.arrows[f] + "'");
    if (!seen_cod[f]) throw fail(0, 0, "no cod for arrow '" + a.arrows[f] + "'");
  }
  for (std::size_t x = 0; x < a.objects.size(); ++x)
    if (!seen_e[x]) throw fail(0, 0, "no identity for object '" + a.objects[x] + "'");
  return a;
}

inline std::string serialize_internal(const internalcat::InternalCategory& a) {
  std::string out = "A0:";
  for (const auto& o : a.objects) out += " " + o;
  out += "\nA1:";
  for (const auto& f : a.arrows) out += " " + f;
  out += "\ndom:\n";
  for (std::size_t f = 0; f < a.arrows.size(); ++f) out += "  " + a.arrows[f] + " " + a.objects[a.dom[f]] + "\n";
  out += "cod:\n";
  for (std::size_t f = 0; f < a.arrows.size(); ++f) out += "  " + a.arrows[f] + " " + a.objects[a.cod[f]] + "\n";
  out += "e:\n";
  for (std::size_t x = 0; x < a.objects.size(); ++x) out += "  " + a.objects[x] + " " + a.arrows[a.e[x]] + "\n";
  out += "m:\n";
  for (auto [g, f] : a.composable())
    if (a.m[g][f] != internalcat::InternalCategory::kNone)
      out += "  " + a.arrows[g] + " " + a.arrows[f] + " " + a.arrows[a.m[g][f]] + "\n";
  return out;
}

}  // namespace catwb::io
