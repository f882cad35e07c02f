// Regenerates src/local/sigtable.inc from the normal forms.
#include <iostream>
#include <map>

#include "sextic/local.hpp"

int main() {
  using namespace sextic;
  const std::vector<std::string> xy{"x", "y"};
  std::map<std::string, std::string> seen;
  std::cout << "// Generated by sextic_gen_sigtable from the normal forms; do not edit.\n";
  for (const auto& nf : normal_forms()) {
    LocalSingularity s = analyze_point(parse_poly(nf.poly, xy), AlgebraicPoint::rational(0, 0));
    if (s.mu != nf.type.milnor() || s.delta != nf.type.delta()) {
      std::cerr << nf.type.name() << ": invariants disagree with the closed form\n";
      return 1;
    }
    auto [it, fresh] = seen.emplace(s.signature, nf.type.name());
    if (!fresh) {
      std::cerr << nf.type.name() << " and " << it->second << " share a signature\n";
      return 1;
    }
    std::cout << "    {\"" << s.signature << "\", \"" << nf.type.name() << "\"},\n";
  }
  return 0;
}
