// workbench: batch checks over finite categories.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 input error,
// 3 enumeration cap hit, 4 the Freyd audit found a non-existence witness,
// 5 internal inconsistency.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catwb/connectives/internal.hpp"
#include "catwb/core/isomorphism.hpp"
#include "catwb/enriched/consequence.hpp"
#include "catwb/freyd/incompleteness.hpp"
#include "catwb/internalcat/externalize.hpp"
#include "catwb/io/category_file.hpp"
#include "catwb/io/internal_file.hpp"
#include "catwb/io/satisfaction_file.hpp"
#include "catwb/kan/kan_extension.hpp"

using namespace catwb;
using json = nlohmann::ordered_json;

namespace {

enum Exit : int { kPass = 0, kFailed = 1, kInput = 2, kCap = 3, kFreydWitness = 4, kInternal = 5 };

struct Report {
  json checks = json::object();
  bool failed = false;
  bool freyd_witness = false;
  bool timing = false;
  std::chrono::steady_clock::time_point last = std::chrono::steady_clock::now();

  void add(const std::string& name, const std::string& verdict, json detail = json::object()) {
    if (verdict == "fail") failed = true;
    json entry = {{"verdict", verdict}};
    for (auto& [k, v] : detail.items()) entry[k] = v;
    if (timing) {
      // time since the previous entry, so shared setup lands on the first check
      auto now = std::chrono::steady_clock::now();
      entry["ms"] = std::chrono::duration<double, std::milli>(now - last).count();
      last = now;
    }
    checks[name] = std::move(entry);
  }
  void add(const std::string& name, bool pass, json detail = json::object()) {
    add(name, std::string(pass ? "pass" : "fail"), std::move(detail));
  }
};

json functor_table(const Functor& f) {
  const auto& S = *f.source;
  const auto& T = *f.target;
  json objects = json::object(), arrows = json::object();
  for (ObjId x = 0; x < S.num_objects(); ++x) objects[S.object_name(x)] = T.object_name(f.obj(x));
  for (MorId m = 0; m < S.num_morphisms(); ++m)
    if (!S.is_identity(m)) arrows[S.morphism_name(m)] = T.morphism_name(f.mor(m));
  return {{"objects", objects}, {"arrows", arrows}};
}

json transformation_table(const NaturalTransformation& a) {
  const auto& S = *a.source.source;
  const auto& T = *a.source.target;
  json out = json::object();
  for (ObjId x = 0; x < S.num_objects(); ++x) out[S.object_name(x)] = T.morphism_name(a.at(x));
  return out;
}

json adjunction_table(const kan::Adjunction& adj) {
  return {{"left", functor_table(adj.left)},
          {"right", functor_table(adj.right)},
          {"unit", transformation_table(adj.unit)},
          {"counit", transformation_table(adj.counit)}};
}

json entry_detail(const connectives::ConnectiveEntry& e) {
  if (e.exists) return json::object();
  return {{"absence", e.absence}};
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

kan::Side parse_side(const std::string& s) { return s == "left" ? kan::Side::left : kan::Side::right; }

// --- subcommands ------------------------------------------------------------

void run_validate(Report& r, const std::string& path, EnumerationCap) {
  auto c = io::load_category(path);
  r.add("category", true,
        {{"objects", c->num_objects()}, {"morphisms", c->num_morphisms()}, {"thin", c->is_thin()},
         {"discrete", c->is_discrete()}});
}

void run_adjoint(Report& r, const std::string& functor, const std::string& source, const std::string& target,
                 const std::string& side, EnumerationCap cap) {
  auto s = io::load_category(source);
  auto t = io::load_category(target);
  auto f = io::parse_functor(io::read_file(functor), s, t, functor);
  auto search = kan::search_adjoint(f, parse_side(side), cap);
  if (search.adjunction) {
    r.add("adjoint", true, {{"side", side}, {"witness", adjunction_table(*search.adjunction)}});
  } else {
    r.add("adjoint", false, {{"side", side}, {"obstruction", f.target->object_name(search.obstruction)}});
  }
}

void run_connectives(Report& r, const std::string& path, const std::string& checks, const std::string& side,
                     const std::string& bifunctor, EnumerationCap cap) {
  auto c = io::load_category(path);
  const auto& C = *c;
  auto wanted = split_list(checks);
  auto want = [&](const char* name) { return wanted.empty() || std::find(wanted.begin(), wanted.end(), name) != wanted.end(); };
  for (const auto& w : wanted)
    if (w != "terminal" && w != "initial" && w != "products" && w != "coproducts" && w != "ccc" && w != "naive-ccc" &&
        w != "r-closed")
      throw PreconditionError("unknown connective check '" + w + "'");

  auto conn = connectives::internal_connectives(c, cap);
  if (want("terminal")) {
    auto d = entry_detail(conn.terminal);
    if (conn.terminal.exists) d["object"] = C.object_name(conn.top());
    r.add("terminal", conn.terminal.exists, d);
  }
  if (want("initial")) {
    auto d = entry_detail(conn.initial);
    if (conn.initial.exists) d["object"] = C.object_name(conn.bottom());
    r.add("initial", conn.initial.exists, d);
  }
  auto binary = [&](const connectives::ConnectiveEntry& e, bool meet) {
    auto d = entry_detail(e);
    if (e.exists) {
      json table = json::object();
      for (ObjId a = 0; a < C.num_objects(); ++a)
        for (ObjId b = 0; b < C.num_objects(); ++b)
          table[C.object_name(a) + "," + C.object_name(b)] = C.object_name(meet ? conn.meet(a, b) : conn.join(a, b));
      d["table"] = table;
    }
    return d;
  };
  if (want("products")) r.add("products", conn.products.exists, binary(conn.products, true));
  if (want("coproducts")) r.add("coproducts", conn.coproducts.exists, binary(conn.coproducts, false));
  if (want("ccc")) {
    auto ccc = connectives::internal_ccc(conn, cap);
    auto d = entry_detail(ccc.entry);
    if (ccc.entry.exists) {
      json table = json::object();
      for (ObjId x = 0; x < C.num_objects(); ++x)
        for (ObjId b = 0; b < C.num_objects(); ++b)
          table[C.object_name(b) + "^" + C.object_name(x)] = C.object_name(ccc.exponent(b, x));
      d["exponents"] = table;
    }
    r.add("ccc", ccc.entry.exists, d);
  }
  if (want("naive-ccc")) {
    auto naive = connectives::naive_ccc(conn, cap);
    r.add("naive-ccc", naive.entry.exists, entry_detail(naive.entry));
  }
  if (want("r-closed")) {
    std::optional<Functor> rf;
    if (!bifunctor.empty()) {
      rf = io::parse_functor(io::read_file(bifunctor), conn.square.category, c, bifunctor);
    } else if (conn.products.exists) {
      rf = conn.products.witness->right;
    }
    if (!rf) {
      r.add("r-closed", false, {{"absence", "no bifunctor given and no internal products"}});
    } else {
      auto rc = connectives::r_closed(conn.square, *rf, side == "right" ? connectives::ClosedSide::right
                                                                         : connectives::ClosedSide::left, {}, cap);
      auto d = entry_detail(rc.entry);
      d["side"] = side;
      d["bifunctor"] = bifunctor.empty() ? "product" : bifunctor;
      json pointwise = json::object();
      for (std::size_t k = 0; k < rc.pointwise.size(); ++k) pointwise[C.object_name(k)] = rc.pointwise[k].exists;
      d["pointwise"] = pointwise;
      d["agree"] = rc.agree;
      r.add("r-closed", rc.entry.exists && rc.agree, d);
    }
  }
}

void run_kan(Report& r, const std::string& tau_path, const std::string& along_path, const std::string& x_path,
             const std::string& y_path, const std::string& a_path, const std::string& side, bool probes,
             EnumerationCap cap) {
  auto x = io::load_category(x_path);
  auto y = io::load_category(y_path);
  auto a = io::load_category(a_path);
  auto tau = io::parse_functor(io::read_file(tau_path), x, a, tau_path);
  auto s = io::parse_functor(io::read_file(along_path), x, y, along_path);
  auto ext = kan::kan_extension(tau, s, parse_side(side), cap);
  if (!ext) {
    r.add("extension", false, {{"side", side}, {"absence", "a required (co)limit is missing"}});
    return;
  }
  r.add("extension", true,
        {{"side", side}, {"functor", functor_table(ext->extension)}, {"universal", transformation_table(ext->universal)}});
  auto u = kan::verify_kan_universality(*ext, cap);
  r.add("universality", u.status == kan::CheckStatus::skipped_cap ? std::string("skipped_cap")
                                                                  : std::string(u.status == kan::CheckStatus::verified ? "pass" : "fail"),
        {{"functors", u.functors_checked}, {"cells", u.cells_checked}});
  if (probes) {
    auto results = kan::is_pointwise(*ext, {}, cap);
    json list = json::array();
    for (const auto& p : results) list.push_back({{"probe", p.probe}, {"pass", p.pass}, {"detail", p.detail}});
    r.add("pointwise", kan::all_pass(results), {{"probes", list}});
  }
}

void run_associate(Report& r, const std::string& path, const std::string& out, EnumerationCap cap) {
  auto c = io::load_category(path);
  auto assoc = internalcat::associated_category(c);
  auto report = internalcat::validate_internal(assoc.internal);
  auto text = io::serialize_internal(assoc.internal);
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw io::ParseError(out, 0, 0, "cannot write file");
    f << text;
  }
  r.add("internal-category", report.ok(),
        {{"objects", assoc.internal.objects.size()},
         {"arrows", assoc.internal.arrows.size()},
         {"internal_poset", internalcat::internal_poset_check(assoc.internal)},
         {"text", text}});
  auto back = internalcat::internal_to_category(assoc.internal);
  auto iso = find_isomorphism(back, c, cap);
  json d = json::object();
  if (iso) d["isomorphism"] = functor_table(*iso);
  r.add("roundtrip", iso.has_value(), d);
}

void run_externalize(Report& r, const std::string& category, const std::string& internal, std::size_t carrier,
                     bool generic, bool hom, const std::string& index, EnumerationCap cap) {
  internalcat::InternalCategory a;
  if (!internal.empty()) {
    a = io::parse_internal(io::read_file(internal), internal);
  } else if (!category.empty()) {
    a = internalcat::associated_category(io::load_category(category)).internal;
  } else {
    throw PreconditionError("externalize needs --category or --internal");
  }
  auto u = internalcat::finset_universe(carrier);
  auto ext = internalcat::externalize(a, u);
  auto split = connectives::validate_split(ext.phi);
  r.add("split", split.ok(),
        {{"carrier", carrier}, {"index_sets", u.base->num_objects()}, {"maps", u.base->num_morphisms()},
         {"violations", split.summary()}});
  if (generic) {
    auto g = internalcat::generic_object(ext);
    r.add("generic-object", true,
          {{"omega", g.omega}, {"index_sets", g.index_sets}, {"naturality_squares", g.naturality_squares}});
  }
  if (hom) {
    const auto& B = *u.base;
    auto i = B.find_object(index);
    if (!i) throw PreconditionError("unknown index set '" + index + "'");
    const auto& fib = ext.fiber(*i);
    const auto& F = *fib.category;
    bool all = true;
    std::size_t pairs = 0, probes = 0;
    json failures = json::array();
    for (ObjId x = 0; x < F.num_objects(); ++x)
      for (ObjId y = 0; y < F.num_objects(); ++y) {
        auto w = internalcat::hom_object(ext, *i, x, y, cap);
        ++pairs;
        probes += w.probes;
        if (!w.complete) {
          all = false;
          failures.push_back(F.object_name(x) + " -> " + F.object_name(y));
        }
      }
    r.add("hom-objects", all, {{"index", index}, {"pairs", pairs}, {"probes", probes}, {"incomplete", failures}});
  }
}

void run_freyd(Report& r, const std::string& path, EnumerationCap cap) {
  auto c = io::load_category(path);
  auto v = freyd::finite_freyd_audit(c, cap);
  if (auto* p = std::get_if<freyd::PosetalCertificate>(&v)) {
    r.add("audit", std::string("posetal"),
          {{"posetal", true}, {"internal_poset", p->posetality.internal_poset}, {"agree", p->posetality.agree}});
    return;
  }
  const auto& w = std::get<freyd::NonExistenceWitness>(v);
  const auto& C = *c;
  json kan = json::object();
  for (ObjId o = 0; o < C.num_objects(); ++o) kan[C.object_name(o)] = static_cast<bool>(w.kan_exists[o]);
  r.add("audit", std::string(w.agree ? "non-existence" : "fail"),
        {{"posetal", false},
         {"lambda", w.lambda},
         {"morphisms", w.morphisms},
         {"obstruction", w.obstruction()},
         {"parallel", {{"a", C.object_name(w.a)}, {"b", C.object_name(w.b)}, {"f", C.morphism_name(w.f)},
                       {"g", C.morphism_name(w.g)}}},
         {"hom_ab", w.lemma.hom_ab},
         {"hom_tensor", w.lemma.hom_tensor},
         {"ran_exists", w.lemma.kan_exists},
         {"delta_right_adjoint", w.delta_has_right_adjoint},
         {"delta_obstruction", w.delta_obstruction},
         {"kan_per_object", kan},
         {"agree", w.agree}});
  r.freyd_witness = w.agree;
}

void run_consequence(Report& r, const std::string& path, const std::string& gamma, const std::string& psi,
                     EnumerationCap cap) {
  auto sat = io::load_satisfaction(path);
  auto g = sat.set_of(split_list(gamma));
  auto t = enriched::density_product(sat, cap);
  auto laws = enriched::check_closure_laws(t);
  r.add("closure-laws", laws.ok(), {{"sets", t.carrier_size()}, {"violations", laws.summary()}});
  r.add("closure", true, {{"gamma", sat.format(g)}, {"closure", sat.format(t(g))}});
  if (!psi.empty()) {
    bool holds = enriched::semantic_consequence(sat, g, sat.sentence(psi));
    r.add("consequence", holds, {{"gamma", sat.format(g)}, {"psi", psi}, {"holds", holds}});
  }
}

void run_roundtrip(Report& r, const std::string& path, std::size_t carrier, EnumerationCap cap) {
  auto c = io::load_category(path);
  auto a = internalcat::associated_category(c).internal;
  auto back = internalcat::internal_to_category(a);
  auto iso = find_isomorphism(back, c, cap);
  json d = json::object();
  if (iso) d["isomorphism"] = functor_table(*iso);
  r.add("internal-roundtrip", iso.has_value(), d);

  if (carrier == 0) throw PreconditionError("roundtrip: carrier must be at least 1");
  auto ext = internalcat::externalize(a, internalcat::finset_universe(carrier));
  const auto point = ext.universe.object_of({0});
  auto fiber_iso = find_isomorphism(ext.fiber(point).category, c, cap);
  json e = {{"carrier", carrier}, {"index", ext.universe.base->object_name(point)}};
  if (fiber_iso) e["isomorphism"] = functor_table(*fiber_iso);
  r.add("external-roundtrip", fiber_iso.has_value(), e);
}

std::string render_text(const std::string& command, const json& doc) {
  std::string out;
  if (doc.contains("error")) {
    const auto& e = doc["error"];
    out += command + ": error (" + e["kind"].get<std::string>() + "): " + e["message"].get<std::string>() + "\n";
    return out;
  }
  for (auto& [name, entry] : doc["checks"].items()) {
    out += name + ": " + entry["verdict"].get<std::string>() + "\n";
    for (auto& [k, v] : entry.items()) {
      if (k == "verdict") continue;
      if (v.is_string()) {
        auto s = v.get<std::string>();
        if (s.find('\n') != std::string::npos) {
          out += "  " + k + ":\n";
          std::size_t pos = 0;
          while (pos < s.size()) {
            auto nl = s.find('\n', pos);
            out += "    " + s.substr(pos, nl - pos) + "\n";
            pos = nl == std::string::npos ? s.size() : nl + 1;
          }
        } else {
          out += "  " + k + ": " + s + "\n";
        }
      } else {
        out += "  " + k + ": " + v.dump() + "\n";
      }
    }
  }
  out += "status: " + std::to_string(doc["status"].get<int>()) + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks on finite categories, internal categories and satisfaction relations."};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::uint64_t cap_flag = 0;
  app.add_flag("--json", as_json, "Print the report as JSON");
  bool timing = false;
  app.add_flag("--timing", timing, "Add per-check wall time in milliseconds");
  app.add_option("--cap", cap_flag, "Enumeration cap (default $WORKBENCH_CAP or 1000000)")->check(CLI::PositiveNumber);

  std::string category, functor, source, target, side = "right", checks, bifunctor, tau, along, x, y, a, out,
                                                     internal, matrix, gamma, psi, index = "{0}", closed_side = "left";
  std::size_t carrier = 2;
  bool probes = false, generic = false, hom = false;
  auto sides = CLI::IsMember({"left", "right"});

  auto* validate = app.add_subcommand("validate", "Parse and validate a category file");
  validate->add_option("--category", category, "Category file")->required();

  auto* adjoint = app.add_subcommand("adjoint", "Search for an adjoint of a functor");
  adjoint->add_option("--functor", functor, "Functor file")->required();
  adjoint->add_option("--source", source, "Source category file")->required();
  adjoint->add_option("--target", target, "Target category file")->required();
  adjoint->add_option("--side", side, "right: F ⊣ U, left: L ⊣ F")->check(sides);

  auto* conn = app.add_subcommand("connectives", "Internal connectives of a category");
  conn->add_option("--category", category, "Category file")->required();
  conn->add_option("--check", checks, "Comma list: terminal,initial,products,coproducts,ccc,naive-ccc,r-closed");
  conn->add_option("--side", closed_side, "Side for r-closed (default left)")->check(sides);
  conn->add_option("--bifunctor", bifunctor, "Functor file A×A → A for r-closed (default: the product)");

  auto* kan_cmd = app.add_subcommand("kan", "Kan extension of tau along s");
  kan_cmd->add_option("--tau", tau, "Functor file X → A")->required();
  kan_cmd->add_option("--along", along, "Functor file X → Y")->required();
  kan_cmd->add_option("--x", x, "Category X")->required();
  kan_cmd->add_option("--y", y, "Category Y")->required();
  kan_cmd->add_option("--a", a, "Category A")->required();
  kan_cmd->add_option("--side", side, "right or left")->check(sides);
  kan_cmd->add_flag("--probes", probes, "Run the stability probes");

  auto* assoc = app.add_subcommand("associate", "Emit the associated internal category");
  assoc->add_option("--category", category, "Category file")->required();
  assoc->add_option("--out", out, "Write the internal category to this file");

  auto* ext = app.add_subcommand("externalize", "Externalize over a universe of finite sets");
  ext->add_option("--category", category, "Category file (uses its associated internal category)");
  ext->add_option("--internal", internal, "Internal category file");
  ext->add_option("--carrier", carrier, "Universe carrier size, at most 4")->check(CLI::Range(0, 4));
  ext->add_flag("--generic", generic, "Check the generic object");
  ext->add_flag("--hom", hom, "Check hom-object certificates over --index");
  ext->add_option("--index", index, "Index set, e.g. {0,1}");

  auto* freyd_cmd = app.add_subcommand("freyd", "Incompleteness audit");
  freyd_cmd->add_option("--category", category, "Category file")->required();

  auto* cons = app.add_subcommand("consequence", "Semantic consequence over a satisfaction matrix");
  cons->add_option("--matrix", matrix, "Tab-separated satisfaction matrix")->required();
  cons->add_option("--gamma", gamma, "Comma list of premises");
  cons->add_option("--psi", psi, "Conclusion");

  auto* round = app.add_subcommand("roundtrip", "Associate, externalize and recover the category");
  round->add_option("--category", category, "Category file")->required();
  round->add_option("--carrier", carrier, "Universe carrier size, 1 to 4")->check(CLI::Range(1, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json doc = {{"command", command}};
  Report report;
  report.timing = timing;
  int status = kPass;
  try {
    EnumerationCap cap;
    if (const char* env = std::getenv("WORKBENCH_CAP"); env && *env) {
      char* end = nullptr;
      auto v = std::strtoull(env, &end, 10);
      if (*end != '\0' || v == 0) throw PreconditionError("WORKBENCH_CAP must be a positive integer");
      cap.limit = v;
    }
    if (cap_flag) cap.limit = cap_flag;
    doc["cap"] = cap.limit;

    if (command == "validate") run_validate(report, category, cap);
    else if (command == "adjoint") run_adjoint(report, functor, source, target, side, cap);
    else if (command == "connectives") run_connectives(report, category, checks, closed_side, bifunctor, cap);
    else if (command == "kan") run_kan(report, tau, along, x, y, a, side, probes, cap);
    else if (command == "associate") run_associate(report, category, out, cap);
    else if (command == "externalize") run_externalize(report, category, internal, carrier, generic, hom, index, cap);
    else if (command == "freyd") run_freyd(report, category, cap);
    else if (command == "consequence") run_consequence(report, matrix, gamma, psi, cap);
    else if (command == "roundtrip") run_roundtrip(report, category, carrier, cap);

    doc["checks"] = report.checks;
    status = report.failed ? kFailed : report.freyd_witness ? kFreydWitness : kPass;
  } catch (const io::ParseError& e) {
    doc["error"] = {{"kind", "parse"}, {"message", e.what()}, {"line", e.line()}, {"column", e.column()}};
    status = kInput;
  } catch (const ResourceError& e) {
    doc["error"] = {{"kind", "cap"}, {"message", e.what()}, {"cap", e.cap()}, {"attempted", e.attempted()}};
    status = kCap;
  } catch (const PreconditionError& e) {
    doc["error"] = {{"kind", "input"}, {"message", e.what()}};
    status = kInput;
  } catch (const StructuralError& e) {
    doc["error"] = {{"kind", "input"}, {"message", e.what()}};
    status = kInput;
  } catch (const InternalInconsistency& e) {
    doc["error"] = {{"kind", "internal"}, {"message", e.what()}};
    status = kInternal;
  }
  doc["status"] = status;

  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    auto text = render_text(command, doc);
    (doc.contains("error") ? std::cerr : std::cout) << text;
  }
  return status;
}
