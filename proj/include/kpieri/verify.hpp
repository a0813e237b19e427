#pragma once

#include "kpieri/chains.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace kpieri {

struct CheckResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  double seconds = 0;
  /// First few failing cases, in grid order.
  std::vector<std::string> examples;

  bool passed() const { return failures == 0; }
};

/// Grid runs fan cases out over OpenMP threads when `parallel` is set; the
/// serial path runs the same cases in order. Results do not depend on it.
struct GridOptions {
  bool parallel = true;
  /// Failing cases kept in CheckResult::examples.
  std::size_t max_examples = 5;
};

/// Number of markings of c's labels that are Pieri chains with p marks,
/// by trying all 2^length markings.
long count_valid_markings(const MarkedChain& c, int p);

/// Pieri chain products against the polynomial product, for v in S_n,
/// 1 <= k <= kmax, 1 <= p <= k.
CheckResult check_e_formula(int n, int kmax, GridOptions options = {});
/// Monk products against G_v G_{s_k}; coefficients must be +-1.
CheckResult check_monk_formula(int n, int kmax, GridOptions options = {});
/// x_k products against x_k G_v.
CheckResult check_xk_formula(int n, int kmax, GridOptions options = {});
/// Dual chain products against G_v G_(p), and against the omega_0
/// conjugation route.
CheckResult check_h_formula(int n, int kmax, GridOptions options = {});
/// Compressed against chain products.
CheckResult check_compressed_formula(int n, int kmax, GridOptions options = {});
/// For every (P0,P1) chain within S_n, the number of valid markings with p
/// marks equals binom(free, p - forced).
CheckResult check_marking_counts(int n, int kmax, GridOptions options = {});
/// Cohomology chains against S_v e_p: coefficients 1, one chain per
/// endpoint, and agreement with the lowest layer of the K-theory product.
CheckResult check_cohomology_formula(int n, int kmax, GridOptions options = {});
/// transition_residual(k, p) == 0 for 2 <= k <= kmax, 1 <= p <= k.
CheckResult check_transition(int kmax);
/// For all v, w in S_n: at most one (P0,P1) chain, matching unique_chain.
CheckResult check_uniqueness(int n, int kmax, GridOptions options = {});
/// Strip formulas against the chain formulas, lambda inside a box of
/// `rows` parts of size at most `cols`, k = rows.
CheckResult check_grassmannian(int rows, int cols, GridOptions options = {});
/// No forbidden segment in any (P0,P1) chain within S_n.
CheckResult check_forbidden_segments(int n, int kmax, GridOptions options = {});
/// Chains of the e, dual, Monk and x_k enumerations reaching one endpoint
/// share a sign.
CheckResult check_no_cancellation(int n, int kmax, GridOptions options = {});

/// Every check at size n (k < n), plus the transition identity for k <= 5
/// and the Grassmannian box 3x3.
std::vector<CheckResult> run_verification(int nmax, GridOptions options = {});

nlohmann::json to_json(const CheckResult& r);
/// Fixed-width table, one row per check.
void print_table(std::ostream& out, const std::vector<CheckResult>& results);

} // namespace kpieri
