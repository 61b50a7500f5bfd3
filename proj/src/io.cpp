#include "pathalg/io.hpp"

#include <fstream>

namespace pathalg {

namespace {

const Json& need(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    fail(ErrorCode::kParse, std::string("missing field: ") + key);
  return *it;
}

std::string need_string(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_string()) fail(ErrorCode::kParse, std::string(key) + " must be a string");
  return v.get<std::string>();
}

int need_int(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer())
    fail(ErrorCode::kParse, std::string(key) + " must be an integer");
  return v.get<int>();
}

}  // namespace

Json quiver_to_json(const Quiver& q) {
  Json j;
  j["vertices"] = Json::array();
  for (int v = 0; v < q.num_vertices(); ++v) j["vertices"].push_back(q.vertex_name(v));
  j["arrows"] = Json::array();
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Json e;
    e["name"] = ar.name;
    e["source"] = q.vertex_name(ar.source);
    e["target"] = q.vertex_name(ar.target);
    j["arrows"].push_back(std::move(e));
  }
  return j;
}

std::shared_ptr<const Quiver> quiver_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::kParse, "quiver must be an object");
  std::vector<std::string> vertices;
  for (const auto& v : need(j, "vertices")) {
    if (!v.is_string()) fail(ErrorCode::kParse, "vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const auto& a : need(j, "arrows")) {
    arrows.emplace_back(need_string(a, "name"), need_string(a, "source"),
                        need_string(a, "target"));
  }
  return std::make_shared<Quiver>(std::move(vertices), std::move(arrows));
}

Json path_to_json(const Path& p) {
  if (p.is_vertex()) {
    Json j;
    j["vertex"] = p.quiver().vertex_name(p.source());
    return j;
  }
  Json j = Json::array();
  for (int a : p.arrows()) j.push_back(p.quiver().arrow(a).name);
  return j;
}

Path path_from_json(const Quiver& q, const Json& j) {
  if (j.is_object())
    return Path::vertex(q, q.vertex_index(need_string(j, "vertex")));
  if (!j.is_array() || j.empty())
    fail(ErrorCode::kParse, "path must be a nonempty array of arrow names");
  std::vector<std::string> names;
  for (const auto& e : j) {
    if (!e.is_string()) fail(ErrorCode::kParse, "arrow names must be strings");
    names.push_back(e.get<std::string>());
  }
  return Path::from_names(q, names);
}

namespace {

AlgebraElement relation_from_json(const Quiver& q, const Field& f, const Json& j) {
  if (!j.is_array() || j.empty())
    fail(ErrorCode::kParse, "relation must be a nonempty array");
  AlgebraElement x(q, f);
  if (j.front().is_string()) {
    // Monomial shortcut: a bare path.
    x.add_term(path_from_json(q, j), Scalar::one(f));
    return x;
  }
  for (const auto& term : j) {
    if (!term.is_object())
      fail(ErrorCode::kParse, "relation terms must be {coeff, path} objects");
    Scalar c = Scalar::parse(f, need_string(term, "coeff"));
    Path p = path_from_json(q, need(term, "path"));
    x.add_term(p, c);
  }
  return x;
}

Json relation_to_json(const AlgebraElement& x) {
  Json j = Json::array();
  for (const auto& [p, c] : x.terms()) {
    Json term;
    term["coeff"] = c.str();
    term["path"] = path_to_json(p);
    j.push_back(std::move(term));
  }
  return j;
}

}  // namespace

AlgebraInput input_from_json(const Json& j) {
  AlgebraInput input;
  if (j.contains("name")) input.name = need_string(j, "name");
  input.field = Field::parse(j.contains("field") ? need_string(j, "field")
                                                 : std::string("rational"));
  input.quiver = quiver_from_json(j);
  if (j.contains("order")) {
    const Json& o = need(j, "order");
    input.order_kind = AdmissibleOrder::parse_kind(need_string(o, "kind"));
    if (o.contains("priorities"))
      for (const auto& p : o["priorities"]) {
        if (!p.is_string()) fail(ErrorCode::kParse, "priorities must be arrow names");
        input.order_priorities.push_back(p.get<std::string>());
      }
  }
  if (j.contains("relations")) {
    const Json& rels = need(j, "relations");
    if (!rels.is_array()) fail(ErrorCode::kParse, "relations must be an array");
    for (const auto& r : rels)
      input.relations.push_back(relation_from_json(*input.quiver, input.field, r));
  }
  // Validate priorities early.
  input.order();
  return input;
}

Json input_to_json(const AlgebraInput& input) {
  Json j;
  if (!input.name.empty()) j["name"] = input.name;
  j["field"] = input.field.str();
  Json q = quiver_to_json(*input.quiver);
  j["vertices"] = q["vertices"];
  j["arrows"] = q["arrows"];
  Json o;
  o["kind"] = AdmissibleOrder::kind_name(input.order_kind);
  o["priorities"] = input.order_priorities;
  j["order"] = std::move(o);
  j["relations"] = Json::array();
  for (const auto& r : input.relations) j["relations"].push_back(relation_to_json(r));
  return j;
}

AlgebraInput load_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParse, "cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::kParse, std::string("bad JSON: ") + e.what());
  }
  return input_from_json(j);
}

Json gb_to_json(const GroebnerBasis& gb) {
  Json j;
  j["quiver"] = quiver_to_json(gb.quiver());
  j["field"] = gb.field().str();
  Json o;
  o["kind"] = AdmissibleOrder::kind_name(gb.order().kind());
  o["priorities"] = gb.order().priority_names();
  j["order"] = std::move(o);
  j["valid_to_degree"] = gb.valid_to_degree();
  j["complete"] = gb.complete();
  j["elements"] = Json::array();
  for (const auto& e : gb.elements()) j["elements"].push_back(relation_to_json(e));
  return j;
}

OwnedGroebnerBasis gb_from_json(const Json& j) {
  OwnedGroebnerBasis out;
  out.quiver = quiver_from_json(need(j, "quiver"));
  Field field = Field::parse(need_string(j, "field"));
  const Json& o = need(j, "order");
  std::vector<std::string> prio;
  for (const auto& p : o["priorities"]) prio.push_back(p.get<std::string>());
  AdmissibleOrder order(*out.quiver, AdmissibleOrder::parse_kind(need_string(o, "kind")),
                        prio);
  std::vector<AlgebraElement> elems;
  for (const auto& e : need(j, "elements"))
    elems.push_back(relation_from_json(*out.quiver, field, e));
  out.gb.emplace(*out.quiver, field, order, std::move(elems),
                 need_int(j, "valid_to_degree"), need(j, "complete").get<bool>());
  return out;
}

Json chains_to_json(const ChainTable& table) {
  Json j;
  j["quiver"] = quiver_to_json(table.rho().quiver());
  j["rho"] = Json::array();
  for (const Path& t : table.rho().paths()) j["rho"].push_back(path_to_json(t));
  j["n_max"] = table.n_max();
  j["levels"] = Json::array();
  for (int n = 0; n < table.num_levels(); ++n) {
    Json level;
    level["n"] = n;
    level["chains"] = Json::array();
    for (const auto& c : table.level(n)) {
      Json e;
      e["word"] = path_to_json(c.word);
      e["parent"] = c.parent;
      if (n >= 1) e["r"] = path_to_json(c.r);
      level["chains"].push_back(std::move(e));
    }
    j["levels"].push_back(std::move(level));
  }
  return j;
}

OwnedChainTable chains_from_json(const Json& j) {
  OwnedChainTable out;
  out.quiver = quiver_from_json(need(j, "quiver"));
  std::vector<Path> rho;
  for (const auto& p : need(j, "rho")) rho.push_back(path_from_json(*out.quiver, p));
  out.table.emplace(TipSet(*out.quiver, std::move(rho)), need_int(j, "n_max"));
  auto& levels = out.table->mutable_levels();
  for (const auto& level : need(j, "levels")) {
    levels.emplace_back();
    int n = need_int(level, "n");
    for (const auto& e : need(level, "chains")) {
      Chain c;
      c.word = path_from_json(*out.quiver, need(e, "word"));
      c.level = n;
      c.parent = need_int(e, "parent");
      if (n >= 1) c.r = path_from_json(*out.quiver, need(e, "r"));
      levels.back().push_back(std::move(c));
    }
  }
  return out;
}

Json betti_to_json(const BettiTable& table, const Quiver& q) {
  Json j;
  j["method"] = table.method;
  j["degree_cap"] = table.degree_cap;
  j["rows"] = Json::array();
  for (const auto& row : table.rows) {
    Json r;
    r["n"] = row.n;
    r["truncated"] = row.truncated;
    r["entries"] = Json::array();
    for (const auto& [key, mult] : row.entries) {
      Json e;
      e["vertex"] = q.vertex_name(key.first);
      e["degree"] = key.second;
      e["multiplicity"] = mult;
      r["entries"].push_back(std::move(e));
    }
    j["rows"].push_back(std::move(r));
  }
  return j;
}

BettiTable betti_from_json(const Quiver& q, const Json& j) {
  BettiTable table;
  table.method = need_string(j, "method");
  table.degree_cap = need_int(j, "degree_cap");
  for (const auto& r : need(j, "rows")) {
    BettiRow row;
    row.n = need_int(r, "n");
    row.truncated = need(r, "truncated").get<bool>();
    for (const auto& e : need(r, "entries")) {
      int v = q.vertex_index(need_string(e, "vertex"));
      row.entries[{v, need_int(e, "degree")}] = need_int(e, "multiplicity");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

Json verdict_to_json(const VerdictInfo& v) {
  Json j;
  j["value"] = verdict_name(v.value);
  j["exact"] = v.exact;
  j["bound"] = v.bound;
  j["rules"] = v.rules;
  j["witnesses"] = v.witnesses;
  j["note"] = v.note;
  return j;
}

VerdictInfo verdict_from_json(const Json& j) {
  VerdictInfo v;
  std::string name = need_string(j, "value");
  if (name == "yes")
    v.value = Verdict::kYes;
  else if (name == "no")
    v.value = Verdict::kNo;
  else if (name == "inconclusive")
    v.value = Verdict::kInconclusive;
  else if (name == "out_of_scope")
    v.value = Verdict::kOutOfScope;
  else
    fail(ErrorCode::kParse, "bad verdict: " + name);
  v.exact = need(j, "exact").get<bool>();
  v.bound = need_int(j, "bound");
  for (const auto& r : need(j, "rules")) v.rules.push_back(r.get<std::string>());
  for (const auto& w : need(j, "witnesses")) v.witnesses.push_back(w.get<std::string>());
  v.note = need_string(j, "note");
  return v;
}

}  // namespace

Json report_to_json(const KoszulReport& r) {
  Json j;
  j["name"] = r.name;
  Json input;
  input["field"] = r.field;
  Json order;
  order["kind"] = r.order_kind;
  order["priorities"] = r.order_priorities;
  input["order"] = std::move(order);
  input["vertices"] = r.num_vertices;
  input["arrows"] = r.num_arrows;
  input["relations"] = r.num_relations;
  j["input"] = std::move(input);
  Json bounds;
  bounds["max_degree"] = r.max_degree;
  bounds["max_n"] = r.max_n;
  j["bounds"] = std::move(bounds);
  Json gb;
  gb["size"] = r.gb_size;
  gb["degrees"] = r.gb_degrees;
  gb["complete"] = r.gb_complete;
  gb["valid_to_degree"] = r.gb_valid_to;
  gb["monomial"] = r.monomial;
  j["gb"] = std::move(gb);
  j["shape"] = r.shape;
  j["d"] = r.d ? Json(*r.d) : Json(nullptr);
  Json verdicts;
  verdicts["d_koszul"] = verdict_to_json(r.d_koszul);
  verdicts["two_d_determined"] = verdict_to_json(r.two_d_determined);
  verdicts["ext_generated_012"] = verdict_to_json(r.ext_generated_012);
  verdicts["f_determined"] = Json::array();
  for (const auto& fv : r.f_determined) {
    Json f;
    f["function"] = fv.function;
    f["mode"] = fv.mode;
    f["monomial_side"] = verdict_to_json(fv.monomial_side);
    f["algebra_side"] = verdict_to_json(fv.algebra_side);
    verdicts["f_determined"].push_back(std::move(f));
  }
  j["verdicts"] = std::move(verdicts);
  if (r.ags_tested) {
    Json ags;
    ags["tested_to_n"] = r.ags_n;
    ags["degree_cap"] = r.ags_degree_cap;
    ags["holds"] = r.ags_holds;
    j["ags_minimal"] = std::move(ags);
  } else {
    j["ags_minimal"] = nullptr;
  }
  j["resolution_stops_at"] =
      r.resolution_stops_at ? Json(*r.resolution_stops_at) : Json(nullptr);
  j["timing_ms"] = r.timing_ms;
  return j;
}

KoszulReport report_from_json(const Json& j) {
  KoszulReport r;
  r.name = need_string(j, "name");
  const Json& input = need(j, "input");
  r.field = need_string(input, "field");
  const Json& order = need(input, "order");
  r.order_kind = need_string(order, "kind");
  for (const auto& p : need(order, "priorities"))
    r.order_priorities.push_back(p.get<std::string>());
  r.num_vertices = need_int(input, "vertices");
  r.num_arrows = need_int(input, "arrows");
  r.num_relations = need_int(input, "relations");
  const Json& bounds = need(j, "bounds");
  r.max_degree = need_int(bounds, "max_degree");
  r.max_n = need_int(bounds, "max_n");
  const Json& gb = need(j, "gb");
  r.gb_size = need_int(gb, "size");
  for (const auto& d : need(gb, "degrees")) r.gb_degrees.push_back(d.get<int>());
  r.gb_complete = need(gb, "complete").get<bool>();
  r.gb_valid_to = need_int(gb, "valid_to_degree");
  r.monomial = need(gb, "monomial").get<bool>();
  r.shape = need_string(j, "shape");
  if (!need(j, "d").is_null()) r.d = need(j, "d").get<int>();
  const Json& verdicts = need(j, "verdicts");
  r.d_koszul = verdict_from_json(need(verdicts, "d_koszul"));
  r.two_d_determined = verdict_from_json(need(verdicts, "two_d_determined"));
  r.ext_generated_012 = verdict_from_json(need(verdicts, "ext_generated_012"));
  for (const auto& f : need(verdicts, "f_determined")) {
    FVerdict fv;
    fv.function = need_string(f, "function");
    fv.mode = need_string(f, "mode");
    fv.monomial_side = verdict_from_json(need(f, "monomial_side"));
    fv.algebra_side = verdict_from_json(need(f, "algebra_side"));
    r.f_determined.push_back(std::move(fv));
  }
  if (!need(j, "ags_minimal").is_null()) {
    const Json& ags = j["ags_minimal"];
    r.ags_tested = true;
    r.ags_n = need_int(ags, "tested_to_n");
    r.ags_degree_cap = need_int(ags, "degree_cap");
    r.ags_holds = need(ags, "holds").get<bool>();
  }
  if (!need(j, "resolution_stops_at").is_null())
    r.resolution_stops_at = j["resolution_stops_at"].get<int>();
  r.timing_ms = need(j, "timing_ms").get<long long>();
  return r;
}

}  // namespace pathalg
