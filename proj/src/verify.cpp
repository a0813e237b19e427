#include "kpieri/verify.hpp"

#include "kpieri/grassmannian.hpp"
#include "kpieri/json_io.hpp"
#include "kpieri/pieri.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

namespace kpieri {

long count_valid_markings(const MarkedChain& c, int p) {
  const int q = c.length();
  if (q > 24)
    throw std::invalid_argument("chain too long for exhaustive marking");
  long count = 0;
  std::unique_ptr<bool[]> marks(new bool[q]);
  for (unsigned long mask = 0; mask < (1UL << q); ++mask) {
    if (__builtin_popcountl(mask) != p)
      continue;
    for (int i = 0; i < q; ++i)
      marks[i] = (mask >> i) & 1U;
    if (validate_pieri_chain(c.with_marks(std::span<const bool>(marks.get(), q))))
      ++count;
  }
  return count;
}

namespace {

using Failure = std::optional<std::string>;

struct Case {
  Permutation v;
  int k = 1;
  int p = 0;
};

std::string describe(const Case& c) {
  std::ostringstream out;
  out << "v=" << c.v.str() << " k=" << c.k;
  if (c.p > 0)
    out << " p=" << c.p;
  return out.str();
}

std::vector<Case> vk_grid(int n, int kmax) {
  std::vector<Case> cases;
  for (const Permutation& v : all_permutations(n))
    for (int k = 1; k <= kmax; ++k)
      cases.push_back({v, k, 0});
  return cases;
}

std::vector<Case> vkp_grid(int n, int kmax) {
  std::vector<Case> cases;
  for (const Permutation& v : all_permutations(n))
    for (int k = 1; k <= kmax; ++k)
      for (int p = 1; p <= k; ++p)
        cases.push_back({v, k, p});
  return cases;
}

template <typename T>
CheckResult run_cases(std::string name, const std::vector<T>& cases,
                      const std::function<Failure(const T&)>& check, GridOptions options) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<Failure> outcome(cases.size());
  const long count = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (long i = 0; i < count; ++i) {
    try {
      outcome[i] = check(cases[i]);
    } catch (const std::exception& e) {
      outcome[i] = std::string("exception: ") + e.what();
    }
  }
  CheckResult r;
  r.name = std::move(name);
  r.cases = count;
  for (const Failure& f : outcome) {
    if (!f)
      continue;
    ++r.failures;
    if (r.examples.size() < options.max_examples)
      r.examples.push_back(*f);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return r;
}

Failure mismatch(const Case& c, const char* what) { return describe(c) + ": " + what; }

BasisExpansion transport(const PartitionExpansion& e, int k) {
  BasisExpansion out;
  for (const auto& [mu, c] : e)
    out.add(grassmannian_permutation(mu, k), c);
  return out;
}

void partitions_in_box(int rows, int cols, std::vector<int>& parts, std::vector<Partition>& out) {
  out.emplace_back(parts);
  if (static_cast<int>(parts.size()) == rows)
    return;
  const int top = parts.empty() ? cols : parts.back();
  for (int part = 1; part <= top; ++part) {
    parts.push_back(part);
    partitions_in_box(rows, cols, parts, out);
    parts.pop_back();
  }
}

} // namespace

CheckResult check_e_formula(int n, int kmax, GridOptions options) {
  return run_cases<Case>(
      "e_pieri", vkp_grid(n, kmax),
      [](const Case& c) -> Failure {
        if (!(pieri_e_product(c.v, c.k, c.p) == oracle_e_product(c.v, c.k, c.p)))
          return mismatch(c, "chain sum differs from product");
        return std::nullopt;
      },
      options);
}

CheckResult check_monk_formula(int n, int kmax, GridOptions options) {
  return run_cases<Case>(
      "monk", vk_grid(n, kmax),
      [](const Case& c) -> Failure {
        const BasisExpansion e = monk_product(c.v, c.k);
        if (!(e == oracle_monk_product(c.v, c.k)))
          return mismatch(c, "chain sum differs from product");
        for (const auto& [w, coeff] : e.terms())
          if (coeff != 1 && coeff != -1)
            return mismatch(c, "coefficient other than +-1");
        return std::nullopt;
      },
      options);
}

CheckResult check_xk_formula(int n, int kmax, GridOptions options) {
  return run_cases<Case>(
      "xk", vk_grid(n, kmax),
      [](const Case& c) -> Failure {
        if (!(xk_product(c.v, c.k) == oracle_xk_product(c.v, c.k)))
          return mismatch(c, "chain sum differs from product");
        return std::nullopt;
      },
      options);
}

CheckResult check_h_formula(int n, int kmax, GridOptions options) {
  return run_cases<Case>(
      "h_pieri", vkp_grid(n, kmax),
      [](const Case& c) -> Failure {
        const BasisExpansion direct = pieri_h_product(c.v, c.k, c.p);
        if (!(direct == oracle_h_product(c.v, c.k, c.p)))
          return mismatch(c, "dual chain sum differs from product");
        int top = std::max(c.v.size(), c.k + 1);
        for (const auto& [w, coeff] : direct.terms())
          top = std::max(top, w.size());
        for (int m : {top, top + 1})
          if (!(pieri_h_product_by_conjugation(c.v, c.k, c.p, m) == restrict_to(direct, m)))
            return mismatch(c, "conjugation route differs");
        return std::nullopt;
      },
      options);
}

CheckResult check_compressed_formula(int n, int kmax, GridOptions options) {
  return run_cases<Case>(
      "compressed", vkp_grid(n, kmax),
      [](const Case& c) -> Failure {
        if (!(compressed_pieri_product(c.v, c.k, c.p) == pieri_e_product(c.v, c.k, c.p)))
          return mismatch(c, "compressed sum differs from chain sum");
        return std::nullopt;
      },
      options);
}

CheckResult check_marking_counts(int n, int kmax, GridOptions options) {
  return run_cases<Case>(
      "marking_counts", vk_grid(n, kmax),
      [n](const Case& c) -> Failure {
        EnumerationOptions within;
        within.ambient = n;
        for (const MarkedChain& chain : enumerate_p0p1_chains(c.v, c.k, within)) {
          const ChainClassification cls = classify_chain(chain);
          for (int p = 1; p <= c.k; ++p)
            if (count_valid_markings(chain, p) != binomial(cls.free, p - cls.forced))
              return mismatch(c, ("marking count differs on " + to_text(chain)).c_str());
        }
        return std::nullopt;
      },
      options);
}

CheckResult check_cohomology_formula(int n, int kmax, GridOptions options) {
  return run_cases<Case>(
      "cohomology", vkp_grid(n, kmax),
      [](const Case& c) -> Failure {
        const BasisExpansion e = cohomology_pieri_product(c.v, c.k, c.p);
        if (!(e == oracle_cohomology_product(c.v, c.k, c.p)))
          return mismatch(c, "chain sum differs from Schubert product");
        for (const auto& [w, coeff] : e.terms())
          if (coeff != 1)
            return mismatch(c, "coefficient other than 1");
        const int base = length(c.v);
        const BasisExpansion full = pieri_e_product(c.v, c.k, c.p);
        BasisExpansion lowest;
        for (const auto& [w, coeff] : full.terms())
          if (length(w) - base == c.p)
            lowest.add(w, coeff);
        if (!(lowest == e))
          return mismatch(c, "lowest layer of the K-theory product differs");
        return std::nullopt;
      },
      options);
}

CheckResult check_transition(int kmax) {
  std::vector<Case> cases;
  for (int k = 2; k <= kmax; ++k)
    for (int p = 1; p <= k; ++p)
      cases.push_back({Permutation(), k, p});
  GridOptions serial;
  serial.parallel = false;
  return run_cases<Case>(
      "transition", cases,
      [](const Case& c) -> Failure {
        if (!transition_residual(c.k, c.p).is_zero())
          return "k=" + std::to_string(c.k) + " p=" + std::to_string(c.p) + ": nonzero residual";
        return std::nullopt;
      },
      serial);
}

CheckResult check_uniqueness(int n, int kmax, GridOptions options) {
  const std::vector<Permutation> perms = all_permutations(n);
  return run_cases<Case>(
      "uniqueness", vk_grid(n, kmax),
      [n, &perms](const Case& c) -> Failure {
        EnumerationOptions within;
        within.ambient = n;
        std::map<Permutation, std::vector<MarkedChain>, LengthLexLess> by_end;
        for (MarkedChain& chain : enumerate_p0p1_chains(c.v, c.k, within))
          by_end[chain.end()].push_back(std::move(chain));
        for (const auto& [w, chains] : by_end)
          if (chains.size() > 1)
            return mismatch(c, ("two (P0,P1) chains to " + w.str()).c_str());
        for (const Permutation& w : perms) {
          const std::optional<MarkedChain> found = unique_chain(c.v, w, c.k);
          auto it = by_end.find(w);
          if (w == c.v) {
            if (!found || found->length() != 0)
              return mismatch(c, "no empty chain from v to itself");
          } else if (it == by_end.end()) {
            if (found)
              return mismatch(c, ("spurious chain to " + w.str()).c_str());
          } else if (!found || found->labels() != it->second.front().labels()) {
            return mismatch(c, ("algorithm misses the chain to " + w.str()).c_str());
          }
        }
        return std::nullopt;
      },
      options);
}

CheckResult check_grassmannian(int rows, int cols, GridOptions options) {
  struct GCase {
    Partition lambda;
    int p;
    bool vertical;
  };
  std::vector<Partition> shapes;
  std::vector<int> parts;
  partitions_in_box(rows, cols, parts, shapes);
  std::vector<GCase> cases;
  for (const Partition& lambda : shapes) {
    for (int p = 1; p < rows; ++p)
      cases.push_back({lambda, p, true});
    for (int p = 1; p <= rows; ++p)
      cases.push_back({lambda, p, false});
  }
  const int k = rows;
  return run_cases<GCase>(
      "grassmannian", cases,
      [k](const GCase& c) -> Failure {
        const Permutation v = grassmannian_permutation(c.lambda, k);
        const std::string where = std::string(c.vertical ? "col" : "row") +
                                  " lambda=" + c.lambda.str() + " p=" + std::to_string(c.p);
        const std::vector<SignedChain> chains =
            c.vertical ? enumerate_pieri_chains(v, k, c.p) : enumerate_dual_pieri_chains(v, k, c.p);
        const PartitionExpansion strips = c.vertical ? grassmannian_pieri_col(c.lambda, k, c.p)
                                                     : grassmannian_pieri_row(c.lambda, k, c.p);
        if (!(transport(strips, k) == collect_chains(chains)))
          return where + ": strip formula differs from chain formula";
        for (const SignedChain& s : chains) {
          const Partition mu = partition_of_permutation(s.chain.end(), k);
          if (!c.lambda.contained_in(mu))
            return where + ": endpoint does not contain lambda";
          const SkewShape shape(c.lambda, mu);
          if (!(c.vertical ? is_vertical_strip(shape) : is_horizontal_strip(shape)))
            return where + ": endpoint is not a strip";
        }
        return std::nullopt;
      },
      options);
}

CheckResult check_forbidden_segments(int n, int kmax, GridOptions options) {
  return run_cases<Case>(
      "forbidden_segments", vk_grid(n, kmax),
      [n](const Case& c) -> Failure {
        EnumerationOptions within;
        within.ambient = n;
        for (const MarkedChain& chain : enumerate_p0p1_chains(c.v, c.k, within)) {
          const std::vector<CoverLabel> labels = chain.labels();
          if (find_forbidden_segment(labels, c.k))
            return mismatch(c, ("forbidden segment in " + to_text(chain)).c_str());
        }
        return std::nullopt;
      },
      options);
}

CheckResult check_no_cancellation(int n, int kmax, GridOptions options) {
  return run_cases<Case>(
      "no_cancellation", vkp_grid(n, kmax),
      [](const Case& c) -> Failure {
        if (!sign_coherent(enumerate_pieri_chains(c.v, c.k, c.p)))
          return mismatch(c, "Pieri chains of both signs reach one endpoint");
        if (!sign_coherent(enumerate_dual_pieri_chains(c.v, c.k, c.p)))
          return mismatch(c, "dual chains of both signs reach one endpoint");
        if (c.p == 1 && !sign_coherent(enumerate_monk_chains(c.v, c.k)))
          return mismatch(c, "Monk chains of both signs reach one endpoint");
        if (c.p == 1 && !sign_coherent(enumerate_xk_chains(c.v, c.k)))
          return mismatch(c, "x_k chains of both signs reach one endpoint");
        return std::nullopt;
      },
      options);
}

std::vector<CheckResult> run_verification(int nmax, GridOptions options) {
  if (nmax < 2)
    throw std::invalid_argument("verify needs nmax >= 2");
  const int kmax = nmax - 1;
  std::vector<CheckResult> out;
  out.push_back(check_e_formula(nmax, kmax, options));
  out.push_back(check_monk_formula(nmax, kmax, options));
  out.push_back(check_xk_formula(nmax, nmax, options));
  out.push_back(check_h_formula(nmax, kmax, options));
  out.push_back(check_compressed_formula(nmax, kmax, options));
  out.push_back(check_marking_counts(nmax, kmax, options));
  out.push_back(check_cohomology_formula(nmax, kmax, options));
  out.push_back(check_transition(5));
  out.push_back(check_uniqueness(nmax, kmax, options));
  out.push_back(check_grassmannian(3, 3, options));
  out.push_back(check_forbidden_segments(nmax, kmax, options));
  out.push_back(check_no_cancellation(nmax, kmax, options));
  return out;
}

nlohmann::json to_json(const CheckResult& r) {
  return {{"check", r.name},         {"cases", r.cases},
          {"failures", r.failures},  {"seconds", r.seconds},
          {"status", r.passed() ? "pass" : "fail"}, {"examples", r.examples}};
}

void print_table(std::ostream& out, const std::vector<CheckResult>& results) {
  char line[128];
  std::snprintf(line, sizeof line, "%-20s %8s %8s %9s  %s\n", "check", "cases", "failed", "seconds",
                "status");
  out << line;
  for (const CheckResult& r : results) {
    std::snprintf(line, sizeof line, "%-20s %8ld %8ld %9.3f  %s\n", r.name.c_str(), r.cases,
                  r.failures, r.seconds, r.passed() ? "pass" : "FAIL");
    out << line;
    for (const std::string& e : r.examples)
      out << "    " << e << "\n";
  }
}

} // namespace kpieri
