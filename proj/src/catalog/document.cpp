#include <algorithm>
#include <set>

#include "json.hpp"
#include "sextic/catalog.hpp"

namespace sextic {

namespace {

using json = nlohmann::json;

const std::vector<std::string> kXY{"x", "y"};

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw DocumentError(where + " must be an object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw DocumentError("unknown key '" + key + "' in " + where);
}

std::string get_string(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (!v.is_string()) throw DocumentError("'" + key + "' must be a string");
  return v.get<std::string>();
}

Rational get_rational(const json& v, const std::string& what) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
  } catch (const std::exception& e) {
    throw DocumentError("bad rational for " + what + ": " + e.what());
  }
  throw DocumentError(what + " must be an integer or a rational string");
}

Bindings get_bindings(const json& j, const std::string& where) {
  if (!j.is_object()) throw DocumentError(where + " must be an object");
  Bindings b;
  for (const auto& [key, value] : j.items()) b[key] = get_rational(value, where + "." + key);
  return b;
}

Claims get_claims(const json& j, const std::string& where) {
  check_keys(j, {"config", "components", "inner", "inner_contains", "points", "factorization", "component_configs",
                 "unverifiable"},
             where);
  Claims c;
  if (j.contains("config")) {
    c.config = get_string(j, "config");
    parse_configuration(*c.config);
  }
  if (j.contains("components")) {
    std::vector<int> d;
    for (const auto& v : j.at("components")) {
      if (!v.is_number_integer() || v.get<int>() < 1) throw DocumentError(where + ".components must hold degrees");
      d.push_back(v.get<int>());
    }
    std::sort(d.rbegin(), d.rend());
    c.components = d;
  }
  if (j.contains("inner")) {
    c.inner = get_string(j, "inner");
    parse_configuration(*c.inner);
  }
  if (j.contains("inner_contains")) {
    c.inner_contains = get_string(j, "inner_contains");
    parse_sing_type(*c.inner_contains);
  }
  if (j.contains("points"))
    for (const auto& p : j.at("points")) {
      check_keys(p, {"x", "y", "type"}, where + ".points");
      PointClaim pc{get_rational(p.at("x"), "x"), get_rational(p.at("y"), "y"), get_string(p, "type")};
      parse_sing_type(pc.type);
      c.points.push_back(pc);
    }
  if (j.contains("factorization"))
    for (const auto& p : j.at("factorization")) {
      if (!p.is_string()) throw DocumentError(where + ".factorization must hold strings");
      c.factorization.push_back(p.get<std::string>());
    }
  if (j.contains("component_configs"))
    for (const auto& p : j.at("component_configs")) {
      check_keys(p, {"degree", "config"}, where + ".component_configs");
      ComponentClaim cc{p.at("degree").get<int>(), get_string(p, "config")};
      parse_configuration(cc.config);
      c.component_configs.push_back(cc);
    }
  if (j.contains("unverifiable")) c.unverifiable = get_string(j, "unverifiable");
  return c;
}

std::vector<std::string> all_vars(const CurveDocument& doc) {
  std::vector<std::string> v = kXY;
  for (const auto& p : doc.parameters)
    if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(p);
  return v;
}

Poly parse_in(const CurveDocument& doc, const std::string& text, const std::string& what) {
  try {
    return parse_poly(text, all_vars(doc));
  } catch (const ParseError& e) {
    throw DocumentError("cannot parse " + what + " at offset " + std::to_string(e.offset()) + ": " + e.what());
  }
}

// The polynomial at the bindings, as a polynomial in x, y.
Poly bind_text(const CurveDocument& doc, const std::string& text, const Bindings& b, const std::string& what) {
  Poly p = evaluate(parse_in(doc, text, what), b);
  for (const auto& v : p.used_vars())
    if (v != "x" && v != "y") throw DocumentError(what + " depends on unbound parameter " + v);
  return p.with_vars(kXY);
}

Rational bind_constant(const CurveDocument& doc, const std::optional<std::string>& text, const Bindings& b,
                       const std::string& what) {
  if (!text) return 1;
  Poly p = bind_text(doc, *text, b, what);
  if (!p.is_constant()) throw DocumentError(what + " must not depend on x or y");
  Rational c = p.constant_term();
  if (c == 0) throw DocumentError(what + " vanishes at these parameter values");
  return c;
}

}  // namespace

bool Claims::empty() const {
  return !config && !components && !inner && !inner_contains && points.empty() && factorization.empty() &&
         component_configs.empty() && !unverifiable;
}

std::vector<std::string> CurveDocument::free_parameters() const {
  std::vector<std::string> out;
  for (const auto& p : parameters)
    if (!params.count(p)) out.push_back(p);
  return out;
}

CurveDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  CurveDocument doc;
  try {
    check_keys(j, {"id", "source", "title", "parameters", "f", "f2", "f3", "f2_denominator", "f3_denominator",
                   "normal_form", "factors", "params", "defects", "claims", "instances", "generic", "alternative",
                   "expansion"},
               "document");
    if (j.contains("id")) doc.id = get_string(j, "id");
    if (j.contains("source")) doc.source = get_string(j, "source");
    if (j.contains("title")) doc.title = get_string(j, "title");
    if (j.contains("parameters"))
      for (const auto& p : j.at("parameters")) {
        std::string name = p.get<std::string>();
        if (name == "x" || name == "y") throw DocumentError("x and y are not parameters");
        doc.parameters.push_back(name);
      }
    if (j.contains("normal_form")) {
      try {
        doc.normal_form = parse_family(get_string(j, "normal_form"));
      } catch (const std::invalid_argument& e) {
        throw DocumentError(e.what());
      }
      const auto& t = normal_form_template(*doc.normal_form);
      for (const auto& p : t.params)
        if (std::find(doc.parameters.begin(), doc.parameters.end(), p) == doc.parameters.end())
          doc.parameters.push_back(p);
    }
    for (const char* key : {"f", "f2", "f3", "f2_denominator", "f3_denominator", "expansion"})
      if (j.contains(key)) {
        std::string s = get_string(j, key);
        parse_in(doc, s, key);
        if (std::string(key) == "f") doc.f = s;
        if (std::string(key) == "f2") doc.f2 = s;
        if (std::string(key) == "f3") doc.f3 = s;
        if (std::string(key) == "f2_denominator") doc.f2_denominator = s;
        if (std::string(key) == "f3_denominator") doc.f3_denominator = s;
        if (std::string(key) == "expansion") doc.expansion = s;
      }
    const int forms = (doc.f ? 1 : 0) + (doc.f2 || doc.f3 ? 1 : 0) + (doc.normal_form ? 1 : 0);
    if (forms != 1) throw DocumentError("exactly one of 'f', 'f2'+'f3' or 'normal_form' is required");
    if (doc.f2.has_value() != doc.f3.has_value()) throw DocumentError("'f2' and 'f3' come together");
    if ((doc.f2_denominator || doc.f3_denominator || doc.expansion) && !doc.f2)
      throw DocumentError("denominators and expansions apply to torus pairs only");
    if (j.contains("factors"))
      for (const auto& h : j.at("factors")) {
        std::string s = h.get<std::string>();
        parse_in(doc, s, "factor");
        doc.factors.push_back(s);
      }
    if (j.contains("params")) doc.params = get_bindings(j.at("params"), "params");
    for (const auto& [name, v] : doc.params)
      if (std::find(doc.parameters.begin(), doc.parameters.end(), name) == doc.parameters.end())
        throw DocumentError("binding for undeclared parameter " + name);
    if (j.contains("defects"))
      for (const auto& [key, value] : j.at("defects").items()) {
        SingType t = parse_sing_type(key);
        if (!value.is_number_integer() || value.get<int>() < 0)
          throw DocumentError("defect for " + key + " must be a nonnegative integer");
        doc.defects[t.name()] = value.get<int>();
      }
    if (j.contains("claims")) doc.claims = get_claims(j.at("claims"), "claims");
    if (j.contains("instances"))
      for (const auto& inst : j.at("instances")) {
        check_keys(inst, {"params", "claims"}, "instance");
        Instance in;
        if (inst.contains("params")) in.params = get_bindings(inst.at("params"), "instance.params");
        if (inst.contains("claims")) in.claims = get_claims(inst.at("claims"), "instance.claims");
        doc.instances.push_back(std::move(in));
      }
    if (j.contains("generic")) {
      const json& g = j.at("generic");
      check_keys(g, {"claims", "samples", "avoid"}, "generic");
      GenericClaims gc;
      if (g.contains("claims")) gc.claims = get_claims(g.at("claims"), "generic.claims");
      if (g.contains("samples")) gc.samples = g.at("samples").get<int>();
      if (g.contains("avoid"))
        for (const auto& v : g.at("avoid")) gc.avoid.push_back(get_rational(v, "generic.avoid"));
      doc.generic = gc;
    }
    if (j.contains("alternative")) {
      const json& a = j.at("alternative");
      check_keys(a, {"f2", "f3", "scale", "inner"}, "alternative");
      AlternativePair alt;
      alt.f2 = get_string(a, "f2");
      alt.f3 = get_string(a, "f3");
      parse_in(doc, alt.f2, "alternative.f2");
      parse_in(doc, alt.f3, "alternative.f3");
      if (a.contains("scale")) alt.scale = get_rational(a.at("scale"), "alternative.scale");
      if (alt.scale == 0) throw DocumentError("alternative.scale must be nonzero");
      if (a.contains("inner")) {
        alt.inner = get_string(a, "inner");
        parse_configuration(*alt.inner);
      }
      if (!doc.f2) throw DocumentError("an alternative pair needs a main pair");
      doc.alternative = alt;
    }
  } catch (const json::exception& e) {
    throw DocumentError(std::string("bad document: ") + e.what());
  } catch (const ParseError& e) {
    throw DocumentError(std::string("bad configuration: ") + e.what());
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const DocumentError*>(&e)) throw;
    throw DocumentError(e.what());
  }
  return doc;
}

Poly bind_poly(const CurveDocument& doc, const std::string& text, const Bindings& bindings) {
  Bindings b = doc.params;
  for (const auto& [k, v] : bindings) b[k] = v;
  return bind_text(doc, text, b, "polynomial");
}

CurveInput instantiate(const CurveDocument& doc, const Bindings& bindings) {
  Bindings b = doc.params;
  for (const auto& [k, v] : bindings) {
    if (std::find(doc.parameters.begin(), doc.parameters.end(), k) == doc.parameters.end())
      throw DocumentError("binding for undeclared parameter " + k);
    b[k] = v;
  }
  for (const auto& p : doc.parameters)
    if (!b.count(p)) throw DocumentError("parameter " + p + " is unbound");

  CurveInput in;
  if (doc.normal_form) {
    try {
      in.f = normal_form({*doc.normal_form, b}).sextic;
    } catch (const DegenerateTorus&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw DocumentError(e.what());
    }
  } else if (doc.f) {
    in.f = bind_text(doc, *doc.f, b, "f");
  } else {
    TorusPair pair;
    const Rational d2 = bind_constant(doc, doc.f2_denominator, b, "f2_denominator");
    const Rational d3 = bind_constant(doc, doc.f3_denominator, b, "f3_denominator");
    pair.f2 = bind_text(doc, *doc.f2, b, "f2") * Rational(1 / d2);
    pair.f3 = bind_text(doc, *doc.f3, b, "f3") * Rational(1 / d3);
    in.f = expand(pair);
    in.pair = pair;
  }
  for (const auto& h : doc.factors) in.hints.push_back(bind_text(doc, h, b, "factor"));
  if (!doc.defects.empty()) {
    DefectTable t;
    for (const auto& [name, d] : doc.defects) t.set(parse_sing_type(name), d);
    in.defects = t;
  }
  return in;
}

}  // namespace sextic
