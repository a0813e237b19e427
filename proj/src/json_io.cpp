#include "kpieri/json_io.hpp"

#include <sstream>

namespace kpieri {

nlohmann::json to_json(const Permutation& w) { return nlohmann::json(w.window()); }

nlohmann::json to_json(const BasisExpansion& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : e.terms())
    terms.push_back({{"perm", to_json(w)}, {"coeff", c}});
  return {{"terms", terms}};
}

nlohmann::json to_json(const PartitionExpansion& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mu, c] : e)
    terms.push_back({{"partition", mu.parts()}, {"coeff", c}});
  return {{"terms", terms}};
}

nlohmann::json to_json(const Polynomial& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Term& t : f.terms())
    terms.push_back({{"exponents", t.monomial.exponents()}, {"coeff", t.coeff}});
  return {{"terms", terms}};
}

nlohmann::json to_json(const MarkedChain& c) {
  nlohmann::json steps = nlohmann::json::array();
  for (const ChainStep& s : c.steps())
    steps.push_back({{"a", s.label.a}, {"b", s.label.b}, {"marked", s.marked}});
  return {{"start", to_json(c.start())}, {"k", c.k()}, {"steps", steps}, {"end", to_json(c.end())}};
}

nlohmann::json to_json(const SignedChain& c) {
  nlohmann::json out = to_json(c.chain);
  out["sign"] = c.sign;
  return out;
}

std::string to_text(const BasisExpansion& e) {
  if (e.empty())
    return "0\n";
  std::ostringstream out;
  for (const auto& [w, c] : e.terms())
    out << c << "  " << w.str() << "\n";
  return out.str();
}

std::string to_text(const MarkedChain& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.steps().size(); ++i) {
    const ChainStep& s = c.steps()[i];
    if (i > 0)
      out << " ";
    out << "(" << s.label.a << "," << s.label.b << ")" << (s.marked ? "*" : "");
  }
  return out.str();
}

} // namespace kpieri
