#include "kpieri/cli.hpp"

#include "kpieri/json_io.hpp"
#include "kpieri/pieri.hpp"
#include "kpieri/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace kpieri::cli {

namespace {

struct Globals {
  std::string format = "text";
  std::optional<int> ambient;
};

struct ProductArgs {
  std::string v;
  std::string w;
  int k = 1;
  int p = 1;
  std::string product_class = "e";
  std::string method = "chains";
  int nmax = 4;
  bool serial = false;
};

std::optional<int> ambient_from_env() {
  const char* text = std::getenv("KPIERI_AMBIENT");
  if (text == nullptr || *text == '\0')
    return std::nullopt;
  char* end = nullptr;
  const long value = std::strtol(text, &end, 10);
  if (*end != '\0' || value < 2 || value > 64)
    throw std::invalid_argument("KPIERI_AMBIENT must be an integer in [2, 64]");
  return static_cast<int>(value);
}

EnumerationOptions enumeration(const Globals& g) {
  EnumerationOptions options;
  options.ambient = g.ambient;
  return options;
}

void print_polynomial(std::ostream& out, const Globals& g, const Permutation& w,
                      const Polynomial& f) {
  if (g.format == "json")
    out << nlohmann::json{{"perm", to_json(w)}, {"polynomial", to_json(f)}}.dump() << "\n";
  else
    out << f.str() << "\n";
}

void print_expansion(std::ostream& out, const Globals& g, const BasisExpansion& e) {
  if (g.format == "json")
    out << to_json(e).dump() << "\n";
  else
    out << to_text(e);
}

BasisExpansion product(const ProductArgs& a, const Globals& g) {
  const Permutation v = Permutation::parse(a.v);
  const EnumerationOptions options = enumeration(g);
  const std::string& c = a.product_class;
  const std::string& m = a.method;
  if (m == "compressed" && c != "e")
    throw std::invalid_argument("the compressed method only applies to --class e");
  if (c == "e") {
    if (a.p > a.k)
      return {};
    if (m == "chains")
      return pieri_e_product(v, a.k, a.p, options);
    if (m == "compressed")
      return compressed_pieri_product(v, a.k, a.p, g.ambient);
    return oracle_e_product(v, a.k, a.p);
  }
  if (c == "h")
    return m == "chains" ? pieri_h_product(v, a.k, a.p, options) : oracle_h_product(v, a.k, a.p);
  if (c == "monk")
    return m == "chains" ? monk_product(v, a.k, options) : oracle_monk_product(v, a.k);
  if (c == "xk")
    return m == "chains" ? xk_product(v, a.k, options) : oracle_xk_product(v, a.k);
  if (a.p > a.k)
    return {};
  return m == "chains" ? cohomology_pieri_product(v, a.k, a.p, options)
                       : oracle_cohomology_product(v, a.k, a.p);
}

std::vector<SignedChain> chains(const ProductArgs& a, const Globals& g) {
  const Permutation v = Permutation::parse(a.v);
  const EnumerationOptions options = enumeration(g);
  const std::string& c = a.product_class;
  std::vector<SignedChain> out;
  if (c == "e")
    out = a.p > a.k ? std::vector<SignedChain>{} : enumerate_pieri_chains(v, a.k, a.p, options);
  else if (c == "h")
    out = enumerate_dual_pieri_chains(v, a.k, a.p, options);
  else if (c == "monk")
    out = enumerate_monk_chains(v, a.k, options);
  else if (c == "xk")
    out = enumerate_xk_chains(v, a.k, options);
  else
    out = a.p > a.k ? std::vector<SignedChain>{}
                    : enumerate_cohomology_chains(v, a.k, a.p, options);
  if (!a.w.empty()) {
    const Permutation w = Permutation::parse(a.w);
    std::erase_if(out, [&w](const SignedChain& s) { return !(s.chain.end() == w); });
  }
  return out;
}

void print_chains(std::ostream& out, const Globals& g, const std::vector<SignedChain>& list) {
  if (g.format == "json") {
    nlohmann::json items = nlohmann::json::array();
    for (const SignedChain& s : list)
      items.push_back(to_json(s));
    out << nlohmann::json{{"chains", items}}.dump() << "\n";
    return;
  }
  for (const SignedChain& s : list)
    out << (s.sign > 0 ? "+" : "-") << "  " << s.chain.end().str() << "  " << to_text(s.chain)
        << "\n";
  out << list.size() << " chains\n";
}

void print_unique(std::ostream& out, const Globals& g, const std::optional<MarkedChain>& c) {
  if (g.format == "json") {
    nlohmann::json j{{"found", c.has_value()}};
    if (c)
      j["chain"] = to_json(*c);
    out << j.dump() << "\n";
    return;
  }
  if (!c)
    out << "no such chain\n";
  else if (c->length() == 0)
    out << "empty chain\n";
  else
    out << to_text(*c) << "\n";
}

int verify(std::ostream& out, const Globals& g, const ProductArgs& a) {
  GridOptions options;
  options.parallel = !a.serial;
  const std::vector<CheckResult> results = run_verification(a.nmax, options);
  if (g.format == "json") {
    for (const CheckResult& r : results)
      out << to_json(r).dump() << "\n";
  } else {
    print_table(out, results);
  }
  const bool passed =
      std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed(); });
  return passed ? ok : verification_failed;
}

void add_product_options(CLI::App* sub, ProductArgs& a, bool with_p) {
  sub->add_option("--v", a.v, "start permutation, e.g. 21543 or 2,1,5,4,3")->required();
  sub->add_option("--k", a.k, "number of variables x_1..x_k")
      ->required()
      ->check(CLI::PositiveNumber);
  if (with_p)
    sub->add_option("--p", a.p, "degree of the Pieri factor")->check(CLI::PositiveNumber);
  sub->add_option("--class", a.product_class, "e, h, monk, xk or schubert")
      ->check(CLI::IsMember({"e", "h", "monk", "xk", "schubert"}));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  ProductArgs a;
  std::string perm_text;
  std::optional<int> ambient_flag;

  CLI::App app{"Pieri-type products of Grothendieck polynomials"};
  app.require_subcommand(1);
  app.add_option("--format", g.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--ambient", ambient_flag, "largest position a chain label may use")
      ->check(CLI::Range(2, 64));

  CLI::App* groth = app.add_subcommand("groth", "print the Grothendieck polynomial G_w");
  groth->add_option("perm", perm_text)->required();
  CLI::App* schub = app.add_subcommand("schub", "print the Schubert polynomial S_w");
  schub->add_option("perm", perm_text)->required();

  CLI::App* prod = app.add_subcommand("product", "expand a product in the Grothendieck basis");
  add_product_options(prod, a, true);
  prod->add_option("--method", a.method, "chains, compressed or oracle")
      ->check(CLI::IsMember({"chains", "compressed", "oracle"}));

  CLI::App* chain_cmd = app.add_subcommand("chains", "list the chains of a product formula");
  add_product_options(chain_cmd, a, true);
  chain_cmd->add_option("--w", a.w, "keep only chains ending here");

  CLI::App* uniq = app.add_subcommand("unique", "find the (P0,P1) chain from v to w");
  uniq->add_option("--v", a.v)->required();
  uniq->add_option("--w", a.w)->required();
  uniq->add_option("--k", a.k)->required()->check(CLI::PositiveNumber);

  CLI::App* ver = app.add_subcommand("verify", "check every formula against polynomial products");
  ver->add_option("--nmax", a.nmax, "check permutations of S_nmax")->check(CLI::Range(2, 6));
  ver->add_flag("--serial", a.serial, "run without OpenMP");

  for (CLI::App* sub : {groth, schub, prod, chain_cmd, uniq, ver})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return bad_input;
  }

  try {
    g.ambient = ambient_flag ? ambient_flag : ambient_from_env();
    if (groth->parsed()) {
      const Permutation w = Permutation::parse(perm_text);
      print_polynomial(out, g, w, grothendieck_polynomial(w));
    } else if (schub->parsed()) {
      const Permutation w = Permutation::parse(perm_text);
      print_polynomial(out, g, w, schubert_polynomial(w));
    } else if (prod->parsed()) {
      print_expansion(out, g, product(a, g));
    } else if (chain_cmd->parsed()) {
      print_chains(out, g, chains(a, g));
    } else if (uniq->parsed()) {
      print_unique(out, g, unique_chain(Permutation::parse(a.v), Permutation::parse(a.w), a.k));
    } else {
      return verify(out, g, a);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  }
  return ok;
}

} // namespace kpieri::cli
