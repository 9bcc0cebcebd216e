#include "hopf/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace hopf {

using json = nlohmann::json;

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error(line ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what : what),
      line_(line),
      column_(column) {}

ReferenceError::ReferenceError(std::string name, const std::string& what) : Error(what), name_(std::move(name)) {}

const std::string& Declaration::at(const std::string& key) const {
  auto it = fields.find(key);
  if (it == fields.end()) throw ReferenceError(key, "declaration of type " + type + " has no key '" + key + "'");
  return it->second;
}

const std::map<std::string, DeclarationSchema>& declaration_schemas() {
  static const std::map<std::string, DeclarationSchema> s = {
      {"algebra", {{"space", "mult", "unit"}, {}}},
      {"coalgebra", {{"space", "comult", "counit"}, {}}},
      {"hopf", {{"space", "mult", "unit", "comult", "counit"}, {"antipode", "antipode_inv"}}},
      {"comodule_algebra", {{"hopf", "space", "mult", "unit", "coaction"}, {}}},
      {"module_coalgebra", {{"hopf", "space", "comult", "counit", "action"}, {}}},
      {"integral", {{"of", "map"}, {}}},
      {"cointegral", {{"of", "map"}, {}}},
      {"mpi", {{"hopf", "delta", "sigma"}, {}}},
      {"mixed",
       {{"hopf", "twist", "variant", "space", "action", "coaction", "expect", "stable", "construction"}, {}}},
  };
  return s;
}

BasedSpace StructureFile::product(const std::vector<std::string>& factors) const {
  std::vector<BasedSpace> parts;
  for (const auto& f : factors) {
    auto it = spaces.find(f);
    if (it == spaces.end()) throw ReferenceError(f, "undeclared space '" + f + "'");
    parts.push_back(it->second);
  }
  return tensor_space(parts);
}

const NamedMap& StructureFile::map(const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) throw ReferenceError(name, "undeclared map '" + name + "'");
  return it->second;
}

const Declaration& StructureFile::declaration(const std::string& name) const {
  auto it = declarations.find(name);
  if (it == declarations.end()) throw ReferenceError(name, "undeclared declaration '" + name + "'");
  return it->second;
}

void StructureFile::put_space(const std::string& name, const BasedSpace& space) { spaces[name] = space; }

void StructureFile::put_map(const std::string& name, std::vector<std::string> source, std::vector<std::string> target,
                            const LinMap& m) {
  if (!(product(source) == m.source()) || !(product(target) == m.target()))
    throw SpaceMismatch("map '" + name + "' does not match its declared factors");
  maps[name] = NamedMap{std::move(source), std::move(target), m};
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out + "]";
}

struct Shape {
  std::string key;
  std::vector<std::string> source;
  std::vector<std::string> target;
};

const Declaration& typed(const StructureFile& sf, const std::string& name, std::initializer_list<const char*> types) {
  const Declaration& d = sf.declaration(name);
  for (const char* t : types)
    if (d.type == t) return d;
  throw ReferenceError(name, "'" + name + "' is a " + d.type + " declaration");
}

std::vector<Shape> shapes(const StructureFile& sf, const Declaration& d) {
  const auto space = [&](const std::string& decl) { return sf.declaration(decl).at("space"); };
  if (d.type == "algebra" || d.type == "hopf" || d.type == "comodule_algebra" || d.type == "coalgebra" ||
      d.type == "module_coalgebra") {
    const std::string s = d.at("space");
    std::vector<Shape> out;
    if (d.has("mult")) out.push_back({"mult", {s, s}, {s}});
    if (d.has("unit")) out.push_back({"unit", {}, {s}});
    if (d.has("comult")) out.push_back({"comult", {s}, {s, s}});
    if (d.has("counit")) out.push_back({"counit", {s}, {}});
    if (d.has("antipode")) out.push_back({"antipode", {s}, {s}});
    if (d.has("antipode_inv")) out.push_back({"antipode_inv", {s}, {s}});
    if (d.has("coaction")) {
      typed(sf, d.at("hopf"), {"hopf"});
      out.push_back({"coaction", {s}, {s, space(d.at("hopf"))}});
    }
    if (d.has("action")) {
      typed(sf, d.at("hopf"), {"hopf"});
      out.push_back({"action", {s, space(d.at("hopf"))}, {s}});
    }
    return out;
  }
  if (d.type == "integral") {
    const Declaration& a = typed(sf, d.at("of"), {"comodule_algebra"});
    return {{"map", {space(a.at("hopf"))}, {a.at("space")}}};
  }
  if (d.type == "cointegral") {
    const Declaration& c = typed(sf, d.at("of"), {"module_coalgebra"});
    return {{"map", {c.at("space")}, {space(c.at("hopf"))}}};
  }
  if (d.type == "mpi") {
    typed(sf, d.at("hopf"), {"hopf"});
    const std::string h = space(d.at("hopf"));
    return {{"delta", {h}, {}}, {"sigma", {}, {h}}};
  }
  if (d.type == "mixed") {
    typed(sf, d.at("hopf"), {"hopf"});
    const std::string h = space(d.at("hopf"));
    const std::string m = d.at("space");
    const std::string& v = d.at("variant");
    if (v != "left-right" && v != "right-left" && v != "right-right")
      throw ReferenceError(v, "unknown variant '" + v + "'");
    const std::string& tw = d.at("twist");
    if (tw != "none" && tw != "op" && tw != "cop" && tw != "opcop") throw ReferenceError(tw, "unknown twist '" + tw + "'");
    const std::string& e = d.at("expect");
    if (e != "yd" && e != "ayd") throw ReferenceError(e, "unknown expectation '" + e + "'");
    const std::string& st = d.at("stable");
    if (st != "asserted" && st != "flag") throw ReferenceError(st, "unknown stability mode '" + st + "'");
    Shape act = v == "left-right" ? Shape{"action", {h, m}, {m}} : Shape{"action", {m, h}, {m}};
    Shape coact = v == "right-left" ? Shape{"coaction", {m}, {h, m}} : Shape{"coaction", {m}, {m, h}};
    return {act, coact};
  }
  throw ReferenceError(d.type, "unknown declaration type '" + d.type + "'");
}

}  // namespace

void StructureFile::validate() const {
  for (const auto& [name, m] : maps) {
    product(m.source);
    product(m.target);
  }
  for (const auto& [name, d] : declarations) {
    auto it = declaration_schemas().find(d.type);
    if (it == declaration_schemas().end()) throw ReferenceError(d.type, "unknown declaration type '" + d.type + "'");
    const DeclarationSchema& schema = it->second;
    for (const auto& k : schema.required)
      if (!d.has(k)) throw ReferenceError(name, "declaration '" + name + "' is missing key '" + k + "'");
    for (const auto& [k, v] : d.fields) {
      const bool known = std::find(schema.required.begin(), schema.required.end(), k) != schema.required.end() ||
                         std::find(schema.optional.begin(), schema.optional.end(), k) != schema.optional.end();
      if (!known) throw ReferenceError(name, "declaration '" + name + "' has unknown key '" + k + "'");
    }
    if (d.has("space") && !spaces.count(d.at("space")))
      throw ReferenceError(d.at("space"), "undeclared space '" + d.at("space") + "'");
    if (d.has("hopf")) typed(*this, d.at("hopf"), {"hopf"});
    for (const Shape& s : shapes(*this, d)) {
      const std::string& mname = d.at(s.key);
      const NamedMap& m = map(mname);
      if (m.source != s.source || m.target != s.target)
        throw ReferenceError(mname, "map '" + mname + "' used as " + name + "." + s.key + " has shape " +
                                        join(m.source) + " -> " + join(m.target) + ", expected " + join(s.source) +
                                        " -> " + join(s.target));
    }
  }
}

namespace {

/// DOM builder that rejects duplicate object keys.
class StrictSax : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<json>;
  explicit StrictSax(json& j) : Base(j, true) {}

  bool start_object(std::size_t n) {
    keys_.emplace_back();
    return Base::start_object(n);
  }
  bool end_object() {
    keys_.pop_back();
    return Base::end_object();
  }
  bool key(std::string& k) {
    if (!keys_.back().insert(k).second) {
      duplicate_ = k;
      return false;
    }
    return Base::key(k);
  }
  bool parse_error(std::size_t position, const std::string& token, const nlohmann::detail::exception& ex) {
    error_position_ = position;
    error_ = ex.what();
    (void)token;
    return false;
  }

  std::optional<std::string> duplicate_;
  std::optional<std::size_t> error_position_;
  std::string error_;

 private:
  std::vector<std::set<std::string>> keys_;
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

/// Position of the first occurrence of "key" as an object key after the
/// first one, used to locate duplicate keys.
std::pair<std::size_t, std::size_t> duplicate_position(std::string_view text, const std::string& key) {
  const std::string quoted = json(key).dump();
  std::size_t first = text.find(quoted);
  std::size_t pos = first;
  while (pos != std::string_view::npos) {
    pos = text.find(quoted, pos + 1);
    if (pos == std::string_view::npos) break;
    std::size_t after = pos + quoted.size();
    while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
    if (after < text.size() && text[after] == ':') return line_column(text, pos);
  }
  return {0, 0};
}

/// Text being parsed, for locating keys named in shape errors.
thread_local std::string_view current_text;

/// Position of the first occurrence of "key" used as an object key.
std::pair<std::size_t, std::size_t> key_position(const std::string& key) {
  const std::string quoted = json(key).dump();
  for (std::size_t pos = current_text.find(quoted); pos != std::string_view::npos;
       pos = current_text.find(quoted, pos + 1)) {
    std::size_t after = pos + quoted.size();
    while (after < current_text.size() && std::isspace(static_cast<unsigned char>(current_text[after]))) ++after;
    if (after < current_text.size() && current_text[after] == ':') return line_column(current_text, pos);
  }
  return {0, 0};
}

[[noreturn]] void shape_error(const std::string& path, const std::string& what) {
  throw ParseError(0, 0, path + ": " + what);
}

void expect_keys(const json& j, const std::string& path, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) shape_error(path, "expected an object");
  for (const char* k : required)
    if (!j.contains(k)) shape_error(path, std::string("missing key '") + k + "'");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* r : required) ok = ok || k == r;
    for (const char* o : optional) ok = ok || k == o;
    if (!ok) {
      const auto [l, c] = key_position(k);
      throw ParseError(l, c, path + ": unknown key '" + k + "'");
    }
  }
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) shape_error(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> as_strings(const json& j, const std::string& path) {
  if (!j.is_array()) shape_error(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Field parse_field(const json& j) {
  expect_keys(j, "field", {"kind"}, {"p"});
  const std::string kind = as_string(j["kind"], "field.kind");
  if (kind == "Q") {
    if (j.contains("p")) shape_error("field", "the rationals take no 'p'");
    return Field::rationals();
  }
  if (kind == "Fp") {
    if (!j.contains("p") || !j["p"].is_number_unsigned()) shape_error("field.p", "expected a positive integer");
    return Field::prime(j["p"].get<std::uint64_t>());
  }
  throw FieldError("field.kind: expected \"Q\" or \"Fp\", got \"" + kind + "\"");
}

Scalar parse_scalar(Field k, const json& j, const std::string& path) {
  try {
    if (j.is_string()) return Scalar::parse(k, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::parse(k, std::to_string(j.get<long long>()));
  } catch (const FieldError& e) {
    throw FieldError(path + ": " + e.what());
  }
  throw FieldError(path + ": coefficients are integers or \"num/den\" strings");
}

using Index = std::unordered_map<std::string, std::size_t>;

std::size_t flat_index(const std::vector<const Index*>& idx, const std::vector<std::size_t>& dims,
                       const std::vector<std::string>& labels, const std::vector<std::string>& factors,
                       const std::string& path) {
  if (labels.size() != idx.size())
    shape_error(path, "expected " + std::to_string(idx.size()) + " labels, got " + std::to_string(labels.size()));
  std::size_t flat = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = idx[i]->find(labels[i]);
    if (it == idx[i]->end())
      throw ReferenceError(labels[i], path + ": '" + labels[i] + "' is not a basis label of " + factors[i]);
    flat = flat * dims[i] + it->second;
  }
  return flat;
}

}  // namespace

StructureFile parse_structure(std::string_view text) {
  current_text = text;
  json root;
  StrictSax sax(root);
  const bool ok = json::sax_parse(text.begin(), text.end(), &sax, nlohmann::detail::input_format_t::json, true);
  if (!ok) {
    if (sax.duplicate_) {
      const auto [l, c] = duplicate_position(text, *sax.duplicate_);
      throw ParseError(l, c, "duplicate key '" + *sax.duplicate_ + "'");
    }
    const auto [l, c] = line_column(text, sax.error_position_.value_or(0) ? *sax.error_position_ - 1 : 0);
    throw ParseError(l, c, sax.error_.empty() ? "malformed JSON" : sax.error_);
  }

  expect_keys(root, "file", {"field", "spaces", "maps", "declarations"}, {"expected_discrepancies", "meta"});
  StructureFile sf;
  sf.field = parse_field(root["field"]);
  const Field k = sf.field;

  const json& spaces = root["spaces"];
  if (!spaces.is_object()) shape_error("spaces", "expected an object");
  std::map<std::string, Index> indices;
  for (const auto& [name, labels] : spaces.items()) {
    std::vector<std::string> ls = as_strings(labels, "spaces." + name);
    if (ls.empty()) shape_error("spaces." + name, "a space needs at least one basis label");
    try {
      sf.spaces[name] = BasedSpace(ls);
    } catch (const SpaceMismatch& e) {
      shape_error("spaces." + name, e.what());
    }
    Index& idx = indices[name];
    for (std::size_t i = 0; i < ls.size(); ++i) idx[ls[i]] = i;
  }

  const json& maps = root["maps"];
  if (!maps.is_object()) shape_error("maps", "expected an object");
  for (const auto& [name, m] : maps.items()) {
    const std::string path = "maps." + name;
    expect_keys(m, path, {"source", "target", "entries"});
    const std::vector<std::string> source = as_strings(m["source"], path + ".source");
    const std::vector<std::string> target = as_strings(m["target"], path + ".target");
    std::vector<const Index*> sidx, tidx;
    std::vector<std::size_t> sdims, tdims;
    for (const auto& f : source) {
      if (!indices.count(f)) throw ReferenceError(f, path + ".source: undeclared space '" + f + "'");
      sidx.push_back(&indices[f]);
      sdims.push_back(sf.spaces[f].dim());
    }
    for (const auto& f : target) {
      if (!indices.count(f)) throw ReferenceError(f, path + ".target: undeclared space '" + f + "'");
      tidx.push_back(&indices[f]);
      tdims.push_back(sf.spaces[f].dim());
    }
    const BasedSpace src = sf.product(source), tgt = sf.product(target);
    std::vector<std::map<std::size_t, Scalar>> cols(src.dim());
    const json& entries = m["entries"];
    if (!entries.is_array()) shape_error(path + ".entries", "expected an array");
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const std::string epath = path + ".entries[" + std::to_string(e) + "]";
      const json& entry = entries[e];
      if (!entry.is_array() || entry.size() != 3) shape_error(epath, "expected [target labels, source labels, value]");
      const std::size_t row = flat_index(tidx, tdims, as_strings(entry[0], epath), target, epath);
      const std::size_t col = flat_index(sidx, sdims, as_strings(entry[1], epath), source, epath);
      const Scalar v = parse_scalar(k, entry[2], epath);
      if (!cols[col].emplace(row, v).second)
        shape_error(epath, "duplicate entry for target " + tgt.label(row) + " and source " + src.label(col));
    }
    std::vector<Vector> columns;
    for (auto& c : cols) {
      std::vector<Vector::Entry> es;
      for (auto& [r, v] : c)
        if (!v.is_zero()) es.emplace_back(r, v);
      columns.push_back(Vector::from_entries(k, tgt.dim(), std::move(es)));
    }
    sf.maps[name] = NamedMap{source, target, LinMap(k, src, tgt, std::move(columns))};
  }

  const json& decls = root["declarations"];
  if (!decls.is_object()) shape_error("declarations", "expected an object");
  for (const auto& [name, d] : decls.items()) {
    const std::string path = "declarations." + name;
    if (!d.is_object() || !d.contains("type")) shape_error(path, "expected an object with a 'type'");
    Declaration decl;
    decl.type = as_string(d["type"], path + ".type");
    for (const auto& [key, v] : d.items())
      if (key != "type") decl.fields[key] = as_string(v, path + "." + key);
    sf.declarations[name] = std::move(decl);
  }

  if (root.contains("expected_discrepancies")) {
    const json& ex = root["expected_discrepancies"];
    if (!ex.is_array()) shape_error("expected_discrepancies", "expected an array");
    for (std::size_t i = 0; i < ex.size(); ++i) {
      const std::string path = "expected_discrepancies[" + std::to_string(i) + "]";
      expect_keys(ex[i], path, {"check", "note"});
      sf.expected.push_back({as_string(ex[i]["check"], path + ".check"), as_string(ex[i]["note"], path + ".note")});
    }
  }
  if (root.contains("meta")) {
    const json& meta = root["meta"];
    if (!meta.is_object()) shape_error("meta", "expected an object");
    for (const auto& [key, v] : meta.items()) sf.meta[key] = as_string(v, "meta." + key);
  }
  sf.validate();
  return sf;
}

namespace {

std::string labels_json(const BasedSpace& s, const std::vector<std::string>& factors,
                        const std::map<std::string, BasedSpace>& spaces, std::size_t flat) {
  std::vector<std::string> out(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    const BasedSpace& f = spaces.at(factors[i]);
    out[i] = f.label(flat % f.dim());
    flat /= f.dim();
  }
  (void)s;
  return json(out).dump();
}

}  // namespace

std::string serialize(const StructureFile& sf) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"declarations\": {";
  bool first = true;
  for (const auto& [name, d] : sf.declarations) {
    json j(d.fields);
    j["type"] = d.type;
    os << (first ? "\n" : ",\n") << "    " << json(name).dump() << ": " << j.dump();
    first = false;
  }
  os << (first ? "},\n" : "\n  },\n");

  std::vector<ExpectedDiscrepancy> ex = sf.expected;
  std::sort(ex.begin(), ex.end(), [](const auto& a, const auto& b) { return std::tie(a.check, a.note) < std::tie(b.check, b.note); });
  ex.erase(std::unique(ex.begin(), ex.end(),
                       [](const auto& a, const auto& b) { return a.check == b.check && a.note == b.note; }),
           ex.end());
  os << "  \"expected_discrepancies\": [";
  first = true;
  for (const auto& e : ex) {
    os << (first ? "\n" : ",\n") << "    " << json{{"check", e.check}, {"note", e.note}}.dump();
    first = false;
  }
  os << (first ? "],\n" : "\n  ],\n");

  json field = sf.field.is_rational() ? json{{"kind", "Q"}} : json{{"kind", "Fp"}, {"p", sf.field.characteristic()}};
  os << "  \"field\": " << field.dump() << ",\n";

  os << "  \"maps\": {";
  first = true;
  for (const auto& [name, m] : sf.maps) {
    os << (first ? "\n" : ",\n") << "    " << json(name).dump() << ": {\n";
    os << "      \"source\": " << json(m.source).dump() << ",\n";
    os << "      \"target\": " << json(m.target).dump() << ",\n";
    os << "      \"entries\": [";
    bool efirst = true;
    for (std::size_t c = 0; c < m.map.source().dim(); ++c)
      for (const auto& [r, v] : m.map.column(c).entries()) {
        os << (efirst ? "\n" : ",\n") << "        [" << labels_json(m.map.target(), m.target, sf.spaces, r) << ", "
           << labels_json(m.map.source(), m.source, sf.spaces, c) << ", " << json(v.str()).dump() << "]";
        efirst = false;
      }
    os << (efirst ? "]\n" : "\n      ]\n") << "    }";
    first = false;
  }
  os << (first ? "},\n" : "\n  },\n");

  os << "  \"meta\": " << json(sf.meta).dump() << ",\n";

  os << "  \"spaces\": {";
  first = true;
  for (const auto& [name, s] : sf.spaces) {
    os << (first ? "\n" : ",\n") << "    " << json(name).dump() << ": " << json(s.labels()).dump();
    first = false;
  }
  os << (first ? "}\n" : "\n  }\n");
  os << "}\n";
  return os.str();
}

}  // namespace hopf
