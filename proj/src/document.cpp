#include "coinduct/document.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "coinduct/error.hpp"

namespace coinduct::io {

namespace {

constexpr std::pair<DocumentKind, std::string_view> kKindNames[] = {
    {DocumentKind::ruleset, "ruleset"},       {DocumentKind::container, "container"},
    {DocumentKind::subset, "subset"},         {DocumentKind::derivation, "derivation"},
    {DocumentKind::witness, "witness"},       {DocumentKind::report, "report"},
};

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(where + "/" + key, "missing field");
  return *it;
}

void expect_object(const Json& j, const std::string& where) {
  if (!j.is_object()) throw FormatError(where, "expected an object");
}

void only_keys(const Json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  expect_object(obj, where);
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw FormatError(where + "/" + key, "unexpected field");
    }
  }
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw FormatError(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> as_strings(const Json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], where + "/" + std::to_string(i)));
  return out;
}

std::size_t element(const Carrier& carrier, const std::string& name, const std::string& where) {
  if (auto i = carrier.find(name)) return *i;
  throw FormatError(where, "'" + name + "' is not a carrier element");
}

Json names_json(const std::vector<std::string>& names) { return Json(names); }

Document make(DocumentKind kind, Json payload) { return Document{kind, kFormatVersion, std::move(payload)}; }

Json tree_json(const Carrier& carrier, const DerivationTree& t) {
  Json children = Json::object();
  for (const auto& child : t.children) children[carrier.name(child.premise)] = tree_json(carrier, child.tree);
  return Json{{"conclusion", carrier.name(t.conclusion)}, {"rule", t.rule}, {"children", children}};
}

Json proof_json(const Carrier& carrier, const CoverProof& p) {
  if (p.step == CoverProof::Step::rf) return Json{{"conclusion", carrier.name(p.conclusion)}, {"step", "rf"}};
  Json children = Json::object();
  for (const auto& child : p.children) children[carrier.name(child.premise)] = proof_json(carrier, child.proof);
  return Json{{"conclusion", carrier.name(p.conclusion)}, {"step", "tr"}, {"rule", p.rule}, {"children", children}};
}

template <class Child, class ParseNode>
std::vector<Child> parse_children(const Json& j, const Carrier& carrier, const std::string& where, ParseNode&& parse) {
  expect_object(j, where);
  std::vector<Child> out;
  for (const auto& [key, value] : j.items()) {
    const std::string at = where + "/" + key;
    out.push_back(Child{element(carrier, key, at), parse(value, at)});
  }
  std::sort(out.begin(), out.end(), [](const Child& a, const Child& b) { return a.premise < b.premise; });
  return out;
}

DerivationTree tree_from_json(const Json& j, const Carrier& carrier, const std::string& where) {
  only_keys(j, {"conclusion", "rule", "children"}, where);
  DerivationTree t;
  t.conclusion = element(carrier, as_string(field(j, "conclusion", where), where + "/conclusion"), where + "/conclusion");
  t.rule = as_string(field(j, "rule", where), where + "/rule");
  t.children = parse_children<DerivationTree::Child>(
      field(j, "children", where), carrier, where + "/children",
      [&](const Json& node, const std::string& at) { return tree_from_json(node, carrier, at); });
  return t;
}

CoverProof proof_from_json(const Json& j, const Carrier& carrier, const std::string& where) {
  expect_object(j, where);
  const auto step = as_string(field(j, "step", where), where + "/step");
  const auto conclusion =
      element(carrier, as_string(field(j, "conclusion", where), where + "/conclusion"), where + "/conclusion");
  if (step == "rf") {
    only_keys(j, {"conclusion", "step"}, where);
    return CoverProof::rf(conclusion);
  }
  if (step != "tr") throw FormatError(where + "/step", "expected \"rf\" or \"tr\"");
  only_keys(j, {"conclusion", "step", "rule", "children"}, where);
  CoverProof p{CoverProof::Step::tr, conclusion, as_string(field(j, "rule", where), where + "/rule"), {}};
  p.children = parse_children<CoverProof::Child>(
      field(j, "children", where), carrier, where + "/children",
      [&](const Json& node, const std::string& at) { return proof_from_json(node, carrier, at); });
  return p;
}

}  // namespace

std::string_view to_string(DocumentKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  only_keys(j, {"kind", "version", "payload"}, "");
  const auto kind_name = as_string(field(j, "kind", ""), "/kind");
  const auto* match = std::find_if(std::begin(kKindNames), std::end(kKindNames),
                                   [&](const auto& entry) { return entry.second == kind_name; });
  if (match == std::end(kKindNames)) throw FormatError("/kind", "unknown kind '" + kind_name + "'");
  const auto& version = field(j, "version", "");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
    throw FormatError("/version", "expected version " + std::to_string(kFormatVersion));
  }
  const auto& payload = field(j, "payload", "");
  expect_object(payload, "/payload");
  return Document{match->first, kFormatVersion, payload};
}

std::string emit_document(const Document& doc) {
  const Json j{{"kind", std::string(to_string(doc.kind))}, {"version", doc.version}, {"payload", doc.payload}};
  return j.dump(2) + "\n";
}

Document read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path.string(), "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_document(buffer.str());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ":" + e.location(), e.message());
  }
}

void write_document(const std::filesystem::path& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  out << emit_document(doc);
}

void expect_kind(const Document& doc, DocumentKind expected) {
  if (doc.kind != expected) {
    throw FormatError("/kind", "expected a " + std::string(to_string(expected)) + " document, got " +
                                   std::string(to_string(doc.kind)));
  }
}

Json to_json(const Predicate& p) { return names_json(p.sorted_names()); }

Predicate predicate_from_json(const Json& j, const Carrier& carrier, const std::string& where) {
  Predicate p(carrier);
  const auto names = as_strings(j, where);
  for (std::size_t i = 0; i < names.size(); ++i) {
    p.insert(element(carrier, names[i], where + "/" + std::to_string(i)));
  }
  return p;
}

Document ruleset_document(const RuleSet& r) {
  const auto desc = r.to_desc();
  Json rules = Json::object();
  for (const auto& [name, list] : desc.rules) {
    Json arr = Json::array();
    for (const auto& rule : list) arr.push_back(Json{{"id", rule.id}, {"premises", rule.premises}});
    rules[name] = arr;
  }
  return make(DocumentKind::ruleset, Json{{"carrier", desc.carrier}, {"rules", rules}});
}

RuleSetDesc ruleset_desc_from_payload(const Json& payload) {
  const std::string where = "/payload";
  only_keys(payload, {"carrier", "rules"}, where);
  RuleSetDesc desc;
  desc.carrier = as_strings(field(payload, "carrier", where), where + "/carrier");
  const auto& rules = field(payload, "rules", where);
  expect_object(rules, where + "/rules");
  for (const auto& [name, list] : rules.items()) {
    const std::string at = where + "/rules/" + name;
    if (!list.is_array()) throw FormatError(at, "expected an array of rules");
    auto& out = desc.rules[name];
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string rat = at + "/" + std::to_string(k);
      only_keys(list[k], {"id", "premises"}, rat);
      out.push_back({as_string(field(list[k], "id", rat), rat + "/id"),
                     as_strings(field(list[k], "premises", rat), rat + "/premises")});
    }
  }
  return desc;
}

RuleSet ruleset_from_document(const Document& doc) {
  expect_kind(doc, DocumentKind::ruleset);
  return RuleSet::from_desc(ruleset_desc_from_payload(doc.payload));
}

Document container_document(const IndexedContainer& k) {
  const auto desc = k.to_desc();
  Json index = Json::object();
  for (const auto& [name, options] : desc.index) {
    Json arr = Json::array();
    for (const auto& opt : options) {
      Json branches = Json::array();
      for (const auto& b : opt.branches) branches.push_back(Json{{"id", b.id}, {"arity", b.arity}});
      arr.push_back(Json{{"id", opt.id}, {"branches", branches}});
    }
    index[name] = arr;
  }
  return make(DocumentKind::container, Json{{"carrier", desc.carrier}, {"index", index}});
}

ContainerDesc container_desc_from_payload(const Json& payload) {
  const std::string where = "/payload";
  only_keys(payload, {"carrier", "index"}, where);
  ContainerDesc desc;
  desc.carrier = as_strings(field(payload, "carrier", where), where + "/carrier");
  const auto& index = field(payload, "index", where);
  expect_object(index, where + "/index");
  for (const auto& [name, options] : index.items()) {
    const std::string at = where + "/index/" + name;
    if (!options.is_array()) throw FormatError(at, "expected an array of options");
    auto& out = desc.index[name];
    for (std::size_t k = 0; k < options.size(); ++k) {
      const std::string oat = at + "/" + std::to_string(k);
      only_keys(options[k], {"id", "branches"}, oat);
      OptionDesc opt{as_string(field(options[k], "id", oat), oat + "/id"), {}};
      const auto& branches = field(options[k], "branches", oat);
      if (!branches.is_array()) throw FormatError(oat + "/branches", "expected an array");
      for (std::size_t b = 0; b < branches.size(); ++b) {
        const std::string bat = oat + "/branches/" + std::to_string(b);
        only_keys(branches[b], {"id", "arity"}, bat);
        opt.branches.push_back({as_string(field(branches[b], "id", bat), bat + "/id"),
                                as_string(field(branches[b], "arity", bat), bat + "/arity")});
      }
      out.push_back(std::move(opt));
    }
  }
  return desc;
}

IndexedContainer container_from_document(const Document& doc) {
  expect_kind(doc, DocumentKind::container);
  return IndexedContainer::from_desc(container_desc_from_payload(doc.payload));
}

Document subset_document(const Predicate& p) { return make(DocumentKind::subset, Json{{"members", to_json(p)}}); }

Predicate subset_from_document(const Document& doc, const Carrier& carrier) {
  expect_kind(doc, DocumentKind::subset);
  only_keys(doc.payload, {"members"}, "/payload");
  return predicate_from_json(field(doc.payload, "members", "/payload"), carrier, "/payload/members");
}

Document derivation_document(const RuleSet& r, const DerivationTree& t) {
  return make(DocumentKind::derivation, Json{{"mode", "ind"}, {"tree", tree_json(r.carrier(), t)}});
}

Document cover_proof_document(const RuleSet& r, const Predicate& v, const CoverProof& p) {
  return make(DocumentKind::derivation,
              Json{{"mode", "cover"}, {"v", to_json(v)}, {"proof", proof_json(r.carrier(), p)}});
}

ParsedDerivation derivation_from_document(const Document& doc, const Carrier& carrier) {
  expect_kind(doc, DocumentKind::derivation);
  const std::string where = "/payload";
  const auto mode = as_string(field(doc.payload, "mode", where), where + "/mode");
  ParsedDerivation out;
  if (mode == "ind") {
    only_keys(doc.payload, {"mode", "tree"}, where);
    out.tree = tree_from_json(field(doc.payload, "tree", where), carrier, where + "/tree");
  } else if (mode == "cover") {
    only_keys(doc.payload, {"mode", "v", "proof"}, where);
    out.v = predicate_from_json(field(doc.payload, "v", where), carrier, where + "/v");
    out.proof = proof_from_json(field(doc.payload, "proof", where), carrier, where + "/proof");
  } else {
    throw FormatError(where + "/mode", "expected \"ind\" or \"cover\"");
  }
  return out;
}

Document witness_document(const RuleSet& r, const CoinductionWitness& w) {
  const auto& carrier = r.carrier();
  Json continuations = Json::object();
  for (const auto& [x, row] : w.continuations) {
    Json cells = Json::object();
    for (const auto& [rule, z] : row) cells[rule] = carrier.name(z);
    continuations[carrier.name(x)] = cells;
  }
  Json payload{{"start", carrier.name(w.start)}, {"support", to_json(w.support)}, {"continuations", continuations}};
  if (w.v) payload["v"] = to_json(*w.v);
  return make(DocumentKind::witness, payload);
}

CoinductionWitness witness_from_document(const Document& doc, const Carrier& carrier) {
  expect_kind(doc, DocumentKind::witness);
  const std::string where = "/payload";
  only_keys(doc.payload, {"start", "support", "v", "continuations"}, where);
  CoinductionWitness w{predicate_from_json(field(doc.payload, "support", where), carrier, where + "/support"),
                       element(carrier, as_string(field(doc.payload, "start", where), where + "/start"),
                               where + "/start"),
                       std::nullopt,
                       {}};
  if (doc.payload.contains("v")) w.v = predicate_from_json(doc.payload.at("v"), carrier, where + "/v");
  const auto& continuations = field(doc.payload, "continuations", where);
  expect_object(continuations, where + "/continuations");
  for (const auto& [name, row] : continuations.items()) {
    const std::string at = where + "/continuations/" + name;
    expect_object(row, at);
    auto& out = w.continuations[element(carrier, name, at)];
    for (const auto& [rule, z] : row.items()) {
      out[rule] = element(carrier, as_string(z, at + "/" + rule), at + "/" + rule);
    }
  }
  return w;
}

Document trace_report(const Carrier& carrier, std::string_view mode, const FixpointTrace& trace) {
  Json stages = Json::array();
  for (const auto& s : trace.stages) stages.push_back(to_json(s));
  Json rank = Json::object();
  for (std::size_t x = 0; x < carrier.size(); ++x) {
    if (trace.rank[x]) rank[carrier.name(x)] = *trace.rank[x];
  }
  return make(DocumentKind::report,
              Json{{"report", "trace"},
                   {"mode", std::string(mode)},
                   {"fixpoint", trace.kind == FixpointKind::least ? "least" : "greatest"},
                   {"stages", stages},
                   {"rank", rank},
                   {"result", to_json(trace.result())}});
}

Document law_report(const RuleSet& r, const LawReport& report) {
  Json laws = Json::array();
  for (const auto& law : report.laws) {
    Json entry{{"law", law.law}, {"gating", law.gating}, {"holds", law.holds}, {"instances", law.instances}};
    if (law.counterexample) {
      entry["counterexample"] = Json{{"a", r.carrier().name(law.counterexample->a)},
                                     {"u", to_json(law.counterexample->u)},
                                     {"v", to_json(law.counterexample->v)}};
    } else {
      entry["counterexample"] = nullptr;
    }
    laws.push_back(entry);
  }
  Json payload{{"report", "laws"},
               {"exhaustive", report.exhaustive},
               {"pairs", report.pairs},
               {"laws", laws},
               {"gating_hold", report.gating_hold()}};
  if (!report.exhaustive) payload["seed"] = report.seed;
  return make(DocumentKind::report, payload);
}

Document axiom_report(const RuleSet& r, const AxiomReport& report) {
  Json axioms = Json::array();
  for (const auto& a : report.axioms) {
    Json entry{{"element", r.carrier().name(a.element)},
               {"rule", a.rule},
               {"cover_axiom", a.cover_axiom},
               {"cotr_axiom", a.cotr_axiom}};
    entry["positivity_axiom"] = a.positivity_axiom ? Json(*a.positivity_axiom) : Json(nullptr);
    axioms.push_back(entry);
  }
  return make(DocumentKind::report, Json{{"report", "axioms"}, {"axioms", axioms}, {"holds", report.holds()}});
}

Document duality_report(const DualityReport& report) {
  return make(DocumentKind::report, Json{{"report", "duality"},
                                         {"ind", to_json(report.ind)},
                                         {"coind", to_json(report.coind)},
                                         {"complementary", report.complementary}});
}

}  // namespace coinduct::io
