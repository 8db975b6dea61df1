#include "preproj/report.hpp"

#include <sstream>

#include "preproj/errors.hpp"

namespace preproj {

Format parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "dot") return Format::Dot;
  if (s == "text") return Format::Text;
  throw ValidationError("unknown format '" + std::string(s) + "' (json, dot, text)");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Dot: return "dot";
    case Format::Text: return "text";
  }
  return "?";
}

void Config::validate() const {
  if (cap < 1) throw ValidationError("cap must be at least 1");
  (void)graph();
}

Json graph_json(const DynkinGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"family", to_string(g.family())},
              {"rank", g.rank()},
              {"labeling", to_string(g.labeling())},
              {"edges", std::move(edges)},
              {"iota", g.iota_permutation()}};
}

ElementRecord element_record(const WeylGroup& group, std::size_t w) {
  ElementRecord e;
  e.word = group.reduced_word(w);
  e.length = group.length(w);
  const auto& g = group.matrix(w);
  for (int c = 0; c < g.size(); ++c) e.matrix.push_back(g.column(c));
  return e;
}

Json to_json(const ElementRecord& e) {
  return Json{{"word", e.word}, {"length", e.length}, {"matrix", e.matrix}};
}

ElementRecord element_from_json(const Json& j) {
  try {
    ElementRecord e;
    e.word = j.at("word").get<Word>();
    e.length = j.at("length").get<int>();
    e.matrix = j.at("matrix").get<std::vector<std::vector<std::int64_t>>>();
    for (const auto& col : e.matrix) {
      if (col.size() != e.matrix.size()) throw ValidationError("element matrix is not square");
    }
    if (static_cast<int>(e.word.size()) != e.length) throw ValidationError("element word length mismatch");
    return e;
  } catch (const Json::exception& ex) {
    throw ValidationError(std::string("malformed element: ") + ex.what());
  }
}

ClassifyReport classify(const WeylGroup& group) {
  ClassifyReport r;
  r.type = group.graph().name();
  r.labeling = group.graph().labeling();
  r.two_silt = group.order();
  r.tilting = fixed_subgroup(group);
  r.two_tilt = r.tilting.size();
  r.folded = fold(group.graph()).type;
  return r;
}

std::string classify_text(const ClassifyReport& r) {
  return "2-silt: " + std::to_string(r.two_silt) + ", 2-tilt: " + std::to_string(r.two_tilt) +
         ", folded: " + r.folded.name();
}

Json classify_json(const ClassifyReport& r, const WeylGroup& group) {
  Json elements = Json::array();
  std::size_t next = 0;
  for (std::size_t w = 0; w < group.order(); ++w) {
    Json e = to_json(element_record(group, w));
    const bool tilting = next < r.tilting.size() && r.tilting[next] == w;
    if (tilting) ++next;
    e["tilting"] = tilting;
    elements.push_back(std::move(e));
  }
  return Json{{"type", r.type},
              {"graph", graph_json(group.graph())},
              {"labeling", to_string(r.labeling)},
              {"two_silt", r.two_silt},
              {"two_tilt", r.two_tilt},
              {"folded", r.folded.name()},
              {"elements", std::move(elements)}};
}

Json hasse_json(const HasseQuiver& q) {
  Json nodes = Json::array();
  for (const auto& n : q.nodes) {
    nodes.push_back({{"word", n.word()}, {"length", n.length()}, {"tilting", n.is_tilting()}});
  }
  Json arrows = Json::array();
  const std::string prefix = q.restricted_to_tilting ? "t" : "s";
  for (const auto& a : q.arrows) {
    arrows.push_back({{"source", a.source}, {"target", a.target}, {"label", prefix + std::to_string(a.label)}});
  }
  return Json{{"restricted_to_tilting", q.restricted_to_tilting}, {"nodes", nodes}, {"arrows", arrows}};
}

std::string hasse_text(const HasseQuiver& q) {
  std::ostringstream os;
  os << "nodes: " << q.nodes.size() << ", arrows: " << q.arrows.size() << "\n";
  for (const auto& a : q.arrows) {
    os << word_label(q.nodes[a.source].word()) << " -> " << word_label(q.nodes[a.target].word())
       << (q.restricted_to_tilting ? "  t" : "  s") << a.label << "\n";
  }
  return os.str();
}

BraidReport braid_report(const BraidGroup& braid, std::string_view text) {
  BraidReport r;
  r.word = braid.parse(text);
  r.normal_form = braid.normal_form(r.word);
  r.rendered = braid.render(r.normal_form);
  r.projection = braid.project_to_weyl(r.word);
  return r;
}

std::string braid_text(const BraidReport& r, const WeylGroup& group) {
  return r.rendered + "\nprojection: " + word_label(group.reduced_word(r.projection)) + "\n";
}

Json braid_json(const BraidReport& r, const BraidGroup& braid) {
  Json simples = Json::array();
  for (std::size_t s : r.normal_form.simples) simples.push_back(braid.folded_group().reduced_word(s));
  const auto& group = braid.folded_group().group();
  return Json{{"word", r.word.letters},
              {"normal_form", {{"delta_power", r.normal_form.delta_power}, {"simples", simples}}},
              {"rendered", r.rendered},
              {"projection", to_json(element_record(group, r.projection))}};
}

Json oracle_json(const oracle::OracleReport& r) {
  Json records = Json::array();
  std::size_t nu_stable = 0;
  for (const auto& rec : r.records) {
    nu_stable += rec.nu_stable;
    Json j{{"word", rec.word},
           {"g_matrix_match", rec.g_matrix_match},
           {"nu_stable", rec.nu_stable},
           {"iota_fixed", rec.iota_fixed},
           {"end_dim", nullptr}};
    if (rec.end_dim) j["end_dim"] = *rec.end_dim;
    records.push_back(std::move(j));
  }
  return Json{{"type", r.type},
              {"algebra_dim", r.algebra_dim},
              {"weyl_order", r.weyl_order},
              {"stt_count", r.stt_count},
              {"records", std::move(records)},
              {"summary",
               {{"nu_stable", nu_stable},
                {"g_matrix_failures", r.g_matrix_failures},
                {"nu_failures", r.nu_failures},
                {"end_failures", r.end_failures},
                {"reduced_word_failures", r.reduced_word_failures ? Json(*r.reduced_word_failures) : Json(nullptr)},
                {"pass", r.pass}}}};
}

std::string oracle_text(const oracle::OracleReport& r) {
  std::size_t nu_stable = 0;
  for (const auto& rec : r.records) nu_stable += rec.nu_stable;
  std::ostringstream os;
  os << r.type << ": dim Lambda = " << r.algebra_dim << ", |W| = " << r.weyl_order
     << ", support tau-tilting pairs = " << r.stt_count << "\n";
  os << "nu-stable: " << nu_stable << ", g-matrix failures: " << r.g_matrix_failures
     << ", nu failures: " << r.nu_failures << ", End failures: " << r.end_failures;
  if (r.reduced_word_failures) os << ", reduced-word failures: " << *r.reduced_word_failures;
  os << "\n";
  os << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace preproj
