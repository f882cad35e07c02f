#include <algorithm>

#include "sextic/torus.hpp"

namespace sextic {

namespace {

const std::vector<std::string> kXY{"x", "y"};

struct TemplateText {
  NormalFormFamily family;
  std::vector<std::string> params;
  const char* lead;
  const char* f3;
  const char* den;
  int den_power;
};

// Three A_5 on y = 0 at x = -1, 0, 1.
const TemplateText kThreeA5{
    NormalFormFamily::ThreeA5,
    {"s", "t", "a04", "a06"},
    "a06 + 1/2*s^2*a04 - t^3*s - s^3*t - 3/2*s^2*t^2 - 1/4*t^4 + t*a04*s - 1/4*s^4"
    " - 1/4*a04^2 + 1/2*a04*t^2",
    "-t*y^2 - s*y^2 - y*x^2 + x*t*y^2 + y - x*s*y^2 + x^3 - x - y^3*s*t + 1/2*y^3*a04"
    " - 1/2*y^3*s^2 - 1/2*y^3*t^2",
    "1",
    0};

// A_11 at the origin and A_5 at (1, 0).
const TemplateText kA11A5{
    NormalFormFamily::A11A5,
    {"t2", "t3", "t4", "t5", "a04", "a06"},
    "-1/4*(4*a04*t2^9*t4*t3^2 + t2^4*t4^4 - 2*a04*t2^10*t4^2 - 2*t2^8*a04*t3^4"
    " + 6*t2^2*t4^2*t3^4 - 4*t2^3*t4^3*t3^2 - 4*t3^6*t4*t2 + a04^2*t2^16 + t3^8"
    " - 4*a06*t2^14)",
    "1/2*(6*t2^3*y^2*t3*x*t4 - 2*t2^7*x^2 - 2*t2^4*y^2*t4 - 2*t2^6*y*x + 2*t2^3*y^2*t3^2"
    " - 2*t2^3*y^2*t3^2*x + 2*t2^4*y^2*x*t4 - 4*t2^2*y^2*t3^3*x + 2*t2^6*y - 2*t2^4*y^2*x*t5"
    " - y^3*t2^2*t4^2 + 2*t2*y^3*t3^2*t4 - y^3*t3^4 + 2*t2^7*x^3 + t2^8*y^3*a04"
    " - 2*t2^5*y*t3*x + 2*t2^5*y*t3*x^2)",
    "t2",
    7};

// A_17 at the origin.
const TemplateText kA17{
    NormalFormFamily::A17,
    {"t3", "t4", "t5", "t6", "t7", "a04", "a06"},
    "-1/4*(24*t6^2*t3^6*t5^2*t4^2 - 24*t4^4*t6^2*t3^5*t5 + 8*a04*t3^13*t4*t6*t5"
    " - 8*t4*t6^3*t3^7*t5 - 8*a04*t3^12*t5^2*t4^2 + 8*a04*t4^4*t3^11*t5 + a04^2*t3^20"
    " - 2*a04*t4^6*t3^10 - 2*a04*t3^14*t6^2 + 4*t4^3*t6^3*t3^6 + 6*t4^6*t6^2*t3^4"
    " - 4*a04*t3^12*t4^3*t6 + t3^8*t6^4 + 4*t4^9*t6*t3^2 - 4*a06*t3^18 + 24*t4^8*t5^2*t3^2"
    " - 8*t4^10*t5*t3 + 48*t4^5*t6*t3^4*t5^2 - 24*t4^7*t6*t3^3*t5 + t4^12"
    " - 32*t6*t3^5*t5^3*t4^3 + 16*t4^4*t5^4*t3^4 - 32*t4^6*t5^3*t3^3)",
    "1/2*(-4*t5^2*t3^2*y^3*t4^2 + 2*t5^2*t3^5*y^2*x + 4*t6*t5*t3^3*y^3*t4"
    " - 10*t5*t3^4*y^2*x*t4^2 + 4*t5*t3^5*y^2*t4 + 4*t5*t3*y^3*t4^4 - 2*t5*t3^7*y*x^2"
    " - 2*t3^9*x^3 + 2*t3^6*x^2*t4^2*y - 2*t3^6*y^2*x*t7 + 6*t6*t3^5*y^2*x*t4"
    " + 4*t3^3*x*y^2*t4^4 - 2*t3^7*x*y*t4 - y^3*t6^2*t3^4 - 2*t6*t3^2*y^3*t4^3 - y^3*t4^6"
    " - 2*t6*t3^6*y^2 - 2*t3^4*y^2*t4^3 + 2*t3^8*y + y^3*t3^10*a04)",
    "t3",
    9};

NormalFormTemplate build(const TemplateText& t) {
  std::vector<std::string> vars = kXY;
  vars.insert(vars.end(), t.params.begin(), t.params.end());
  NormalFormTemplate out;
  out.family = t.family;
  out.params = t.params;
  out.lead_num = parse_poly(t.lead, vars);
  out.f3_num = parse_poly(t.f3, vars);
  out.den = parse_poly(t.den, vars);
  out.den_power = t.den_power;
  return out;
}

}  // namespace

std::string family_name(NormalFormFamily f) {
  switch (f) {
    case NormalFormFamily::ThreeA5: return "3A5";
    case NormalFormFamily::A11A5: return "A11A5";
    case NormalFormFamily::A17: return "A17";
  }
  return {};
}

NormalFormFamily parse_family(std::string_view name) {
  for (auto f : {NormalFormFamily::ThreeA5, NormalFormFamily::A11A5, NormalFormFamily::A17})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown normal form family '" + std::string(name) + "'");
}

Poly NormalFormTemplate::cleared() const {
  return lead_num * pow(Poly::variable("y", lead_num.vars()), 6) + pow(f3_num, 2);
}

const NormalFormTemplate& normal_form_template(NormalFormFamily family) {
  static const NormalFormTemplate three = build(kThreeA5);
  static const NormalFormTemplate a11 = build(kA11A5);
  static const NormalFormTemplate a17 = build(kA17);
  switch (family) {
    case NormalFormFamily::ThreeA5: return three;
    case NormalFormFamily::A11A5: return a11;
    case NormalFormFamily::A17: return a17;
  }
  throw std::invalid_argument("unknown normal form family");
}

NormalFormInstance normal_form(const NormalFormParams& params) {
  const NormalFormTemplate& t = normal_form_template(params.family);
  for (const auto& [name, value] : params.bindings)
    if (std::find(t.params.begin(), t.params.end(), name) == t.params.end())
      throw std::invalid_argument("parameter " + name + " is not used by the " + family_name(t.family) + " form");
  for (const auto& name : t.params)
    if (!params.bindings.count(name))
      throw std::invalid_argument("missing parameter " + name + " for the " + family_name(t.family) + " form");
  const Rational den = evaluate(t.den, params.bindings).constant_term();
  if (den == 0) throw std::invalid_argument("denominator " + format(t.den) + " vanishes");
  Rational scale = 1;
  for (int i = 0; i < t.den_power; ++i) scale /= den;

  NormalFormInstance out;
  out.leading = evaluate(t.lead_num, params.bindings).constant_term() * scale * scale;
  if (out.leading == 0) throw DegenerateTorus("leading coefficient of the normal form vanishes");
  out.f3 = evaluate(t.f3_num, params.bindings).with_vars(kXY) * scale;
  out.sextic = out.leading * pow(Poly::variable("y", kXY), 6) + pow(out.f3, 2);
  return out;
}

}  // namespace sextic
