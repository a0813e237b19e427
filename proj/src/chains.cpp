#include "kpieri/chains.hpp"

#include "kpieri/arith.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace kpieri {

MarkedChain MarkedChain::unmarked(Permutation start, int k, std::span<const CoverLabel> labels) {
  std::vector<ChainStep> steps;
  steps.reserve(labels.size());
  for (CoverLabel t : labels)
    steps.push_back({t, false});
  return MarkedChain(std::move(start), k, std::move(steps));
}

int MarkedChain::marks() const {
  return static_cast<int>(
      std::count_if(steps_.begin(), steps_.end(), [](const ChainStep& s) { return s.marked; }));
}

std::vector<CoverLabel> MarkedChain::labels() const {
  std::vector<CoverLabel> out;
  out.reserve(steps_.size());
  for (const ChainStep& s : steps_)
    out.push_back(s.label);
  return out;
}

Permutation MarkedChain::at(int i) const {
  if (i < 0 || i > length())
    throw std::out_of_range("chain index out of range");
  int n = start_.size();
  for (int j = 0; j < i; ++j)
    n = std::max(n, steps_[j].label.b);
  std::vector<int> w = start_.window(n);
  for (int j = 0; j < i; ++j)
    std::swap(w[steps_[j].label.a - 1], w[steps_[j].label.b - 1]);
  return Permutation(std::move(w));
}

bool MarkedChain::is_saturated() const {
  Permutation u = start_;
  for (const ChainStep& s : steps_) {
    if (!is_cover(u, s.label))
      return false;
    u = apply_transposition(u, s.label);
  }
  return true;
}

bool MarkedChain::is_k_chain() const {
  for (const ChainStep& s : steps_)
    if (!(s.label.a <= k_ && k_ < s.label.b))
      return false;
  return is_saturated();
}

MarkedChain MarkedChain::with_marks(std::span<const bool> marks) const {
  if (marks.size() != steps_.size())
    throw std::invalid_argument("mark vector length differs from chain length");
  std::vector<ChainStep> steps = steps_;
  for (std::size_t i = 0; i < steps.size(); ++i)
    steps[i].marked = marks[i];
  return MarkedChain(start_, k_, std::move(steps));
}

int default_ambient(const Permutation& v, int k) { return support_bound(v, k) + 1; }

namespace {

bool cover_in(const std::vector<int>& cur, int a, int b) {
  auto val = [&cur](int i) { return i < static_cast<int>(cur.size()) ? cur[i] : i; };
  const int lo = val(a);
  const int hi = val(b);
  if (lo > hi)
    return false;
  for (int c = a + 1; c < b; ++c) {
    const int x = val(c);
    if (lo < x && x < hi)
      return false;
  }
  return true;
}

// 1-based working window with cur[0] unused
std::vector<int> working_window(const Permutation& v, int n) {
  std::vector<int> cur(static_cast<std::size_t>(std::max(n, v.size())) + 1);
  for (int i = 1; i < static_cast<int>(cur.size()); ++i)
    cur[i] = v(i);
  return cur;
}

void ensure_size(std::vector<int>& cur, int b) {
  while (static_cast<int>(cur.size()) <= b)
    cur.push_back(static_cast<int>(cur.size()));
}

int support_of(const std::vector<int>& cur) {
  for (int i = static_cast<int>(cur.size()) - 1; i >= 1; --i)
    if (cur[i] != i)
      return i;
  return 0;
}

void check_k(int k) {
  if (k < 1)
    throw std::invalid_argument("k must be positive");
}

struct Move {
  CoverLabel label;
  bool marked;
};

/// Depth-first search over marked chains in the k-Bruhat order. The same
/// engine serves the e-type Pieri chains, their duals, and the unmarked
/// (P0,P1) chains.
class ChainSearch {
public:
  enum class Mode { pieri, dual_pieri, p0p1 };

  ChainSearch(const Permutation& v, int k, int p, Mode mode, std::optional<int> ambient)
      : start_(v), k_(k), p_(p), mode_(mode) {
    if (mode_ == Mode::dual_pieri) {
      fixed_ambient_ = ambient;
    } else {
      fixed_ambient_ = ambient.value_or(default_ambient(v, k));
    }
  }

  std::vector<Move> root_moves() const {
    State s = initial_state();
    std::vector<Move> moves;
    for_each_move(s, [&moves](Move m) { moves.push_back(m); });
    return moves;
  }

  std::vector<MarkedChain> run_from(Move m) const {
    State s = initial_state();
    std::vector<MarkedChain> out;
    descend(s, m, out);
    return out;
  }

private:
  struct State {
    std::vector<int> cur;
    std::vector<ChainStep> steps;
    std::vector<int> seen;  // occurrences of a (or b for dual) so far
    int marks = 0;
    bool in_run = true;
  };

  State initial_state() const {
    State s;
    s.cur = working_window(start_, fixed_ambient_.value_or(support_bound(start_, k_) + 1));
    return s;
  }

  int bound(const State& s) const {
    if (fixed_ambient_)
      return *fixed_ambient_;
    // a cover (a,b) needs b <= support + 1, so this loses nothing
    return std::max(support_of(s.cur), k_) + 1;
  }

  bool dual() const { return mode_ == Mode::dual_pieri; }
  bool marking() const { return mode_ != Mode::p0p1; }

  int key(CoverLabel t) const { return dual() ? t.b : t.a; }

  bool ordered(CoverLabel x, CoverLabel y) const {
    return dual() ? dual_precedes(x, y) : precedes(x, y);
  }

  bool continues_run(CoverLabel prev, CoverLabel next) const {
    return dual() ? (next.a == prev.a && next.b > prev.b) : (next.b == prev.b && next.a < prev.a);
  }

  int seen(const State& s, int i) const {
    return i < static_cast<int>(s.seen.size()) ? s.seen[i] : 0;
  }

  template <typename Visit>
  void for_each_label(const State& s, Visit visit) const {
    const int top = bound(s);
    if (!dual()) {
      const int b_max = s.steps.empty() ? top : std::min(top, s.steps.back().label.b);
      for (int b = b_max; b > k_; --b)
        for (int a = 1; a <= k_; ++a)
          visit(CoverLabel{a, b});
    } else {
      const int a_min = s.steps.empty() ? 1 : s.steps.back().label.a;
      for (int a = a_min; a <= k_; ++a)
        for (int b = top; b > k_; --b)
          visit(CoverLabel{a, b});
    }
  }

  template <typename Visit>
  void for_each_move(const State& s, Visit visit) const {
    for_each_label(s, [&](CoverLabel t) {
      if (!cover_in(s.cur, t.a, t.b))
        return;
      if (!s.steps.empty()) {
        const ChainStep& prev = s.steps.back();
        // a step repeating an earlier position must precede its successor
        if (seen(s, key(prev.label)) >= 2 && !ordered(prev.label, t))
          return;
        if (marking() && !prev.marked && !ordered(prev.label, t))
          return;
      }
      if (!marking()) {
        visit(Move{t, false});
        return;
      }
      const bool run = s.steps.empty() || (s.in_run && continues_run(s.steps.back().label, t));
      for (bool mark : {true, false}) {
        if (mark && (s.marks == p_ || seen(s, key(t)) > 0))
          continue;
        if (!mark && run)
          continue;
        visit(Move{t, mark});
      }
    });
  }

  void descend(State& s, Move m, std::vector<MarkedChain>& out) const {
    const bool saved_run = s.in_run;
    s.in_run = s.steps.empty() || (s.in_run && continues_run(s.steps.back().label, m.label));
    s.steps.push_back({m.label, m.marked});
    const int k = key(m.label);
    if (static_cast<int>(s.seen.size()) <= k)
      s.seen.resize(k + 1, 0);
    ++s.seen[k];
    s.marks += m.marked ? 1 : 0;
    ensure_size(s.cur, m.label.b);
    std::swap(s.cur[m.label.a], s.cur[m.label.b]);

    if (!marking() || s.marks == p_)
      out.emplace_back(start_, k_, s.steps);
    std::vector<Move> next;
    for_each_move(s, [&next](Move n) { next.push_back(n); });
    for (Move n : next)
      descend(s, n, out);

    std::swap(s.cur[m.label.a], s.cur[m.label.b]);
    s.marks -= m.marked ? 1 : 0;
    --s.seen[k];
    s.steps.pop_back();
    s.in_run = saved_run;
  }

  Permutation start_;
  int k_;
  int p_;
  Mode mode_;
  std::optional<int> fixed_ambient_;
};

template <typename Search>
std::vector<MarkedChain> run_search(const Search& search, bool parallel) {
  const std::vector<Move> roots = search.root_moves();
  std::vector<std::vector<MarkedChain>> parts(roots.size());
  const long count = static_cast<long>(roots.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < count; ++i)
    parts[i] = search.run_from(roots[i]);
  std::vector<MarkedChain> out;
  for (auto& part : parts)
    for (auto& c : part)
      out.push_back(std::move(c));
  return out;
}

std::vector<SignedChain> signed_by_marks(std::vector<MarkedChain> chains, int p) {
  std::vector<SignedChain> out;
  out.reserve(chains.size());
  for (auto& c : chains) {
    const int sign = sign_of_parity(c.length() - p);
    out.push_back({std::move(c), sign});
  }
  return out;
}

bool in_initial_run(std::span<const CoverLabel> t, std::size_t i, bool dual) {
  for (std::size_t j = 1; j <= i; ++j) {
    const bool step = dual ? (t[j].a == t[j - 1].a && t[j].b > t[j - 1].b)
                           : (t[j].b == t[j - 1].b && t[j].a < t[j - 1].a);
    if (!step)
      return false;
  }
  return true;
}

bool validate_marked(const MarkedChain& c, bool dual) {
  const auto& s = c.steps();
  const std::vector<CoverLabel> t = c.labels();
  for (std::size_t i = 1; i < s.size(); ++i) {
    // (P1) / (P1')
    if (dual ? t[i].a < t[i - 1].a : t[i].b > t[i - 1].b)
      return false;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].marked) {
      for (std::size_t j = 0; j < i; ++j)
        if (dual ? t[j].b == t[i].b : t[j].a == t[i].a)
          return false;
    } else {
      if (i + 1 < s.size() && !(dual ? dual_precedes(t[i], t[i + 1]) : precedes(t[i], t[i + 1])))
        return false;
      if (in_initial_run(t, i, dual))
        return false;
    }
  }
  return true;
}

} // namespace

bool validate_pieri_chain(const MarkedChain& c) { return validate_marked(c, false); }

bool validate_dual_pieri_chain(const MarkedChain& c) { return validate_marked(c, true); }

bool satisfies_p0_p1(std::span<const CoverLabel> t) {
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i].b > t[i - 1].b)
      return false;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    bool repeated = false;
    for (std::size_t j = 0; j < i && !repeated; ++j)
      repeated = t[j].a == t[i].a;
    if (repeated && !precedes(t[i], t[i + 1]))
      return false;
  }
  return true;
}

bool satisfies_p0_p1(const MarkedChain& c) {
  const std::vector<CoverLabel> t = c.labels();
  return satisfies_p0_p1(std::span<const CoverLabel>(t));
}

std::vector<SignedChain> enumerate_pieri_chains(const Permutation& v, int k, int p,
                                                EnumerationOptions options) {
  check_k(k);
  if (p < 1 || p > k)
    throw std::invalid_argument("Pieri chains need 1 <= p <= k");
  ChainSearch search(v, k, p, ChainSearch::Mode::pieri, options.ambient);
  return signed_by_marks(run_search(search, options.parallel), p);
}

std::vector<SignedChain> enumerate_dual_pieri_chains(const Permutation& v, int k, int p,
                                                     EnumerationOptions options) {
  check_k(k);
  if (p < 1)
    throw std::invalid_argument("dual Pieri chains need p >= 1");
  ChainSearch search(v, k, p, ChainSearch::Mode::dual_pieri, options.ambient);
  return signed_by_marks(run_search(search, options.parallel), p);
}

std::vector<MarkedChain> enumerate_p0p1_chains(const Permutation& v, int k,
                                               EnumerationOptions options) {
  check_k(k);
  ChainSearch search(v, k, 0, ChainSearch::Mode::p0p1, options.ambient);
  return run_search(search, options.parallel);
}

namespace {

void monk_descend(const Permutation& v, int k, int ambient, std::vector<int>& cur,
                  std::vector<CoverLabel>& labels, std::vector<SignedChain>& out) {
  const int b_max = labels.empty() ? ambient : labels.back().b;
  for (int b = b_max; b > k; --b) {
    for (int a = 1; a <= k; ++a) {
      const CoverLabel t{a, b};
      if (!labels.empty() && !precedes(labels.back(), t))
        continue;
      if (!cover_in(cur, a, b))
        continue;
      labels.push_back(t);
      std::swap(cur[a], cur[b]);
      out.push_back({MarkedChain::unmarked(v, k, labels),
                     sign_of_parity(static_cast<long>(labels.size()) - 1)});
      monk_descend(v, k, ambient, cur, labels, out);
      std::swap(cur[a], cur[b]);
      labels.pop_back();
    }
  }
}

} // namespace

std::vector<SignedChain> enumerate_monk_chains(const Permutation& v, int k,
                                               EnumerationOptions options) {
  check_k(k);
  const int ambient = options.ambient.value_or(default_ambient(v, k));
  std::vector<CoverLabel> roots;
  for (int b = ambient; b > k; --b)
    for (int a = 1; a <= k; ++a)
      if (is_cover(v, {a, b}))
        roots.push_back({a, b});

  std::vector<std::vector<SignedChain>> parts(roots.size());
  const long count = static_cast<long>(roots.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (long i = 0; i < count; ++i) {
    std::vector<int> cur = working_window(v, ambient);
    std::vector<CoverLabel> labels{roots[i]};
    std::swap(cur[roots[i].a], cur[roots[i].b]);
    parts[i].push_back({MarkedChain::unmarked(v, k, labels), 1});
    monk_descend(v, k, ambient, cur, labels, parts[i]);
  }
  std::vector<SignedChain> out;
  for (auto& part : parts)
    for (auto& c : part)
      out.push_back(std::move(c));
  return out;
}

namespace {

void xk_b_phase(const Permutation& v, int k, int ambient, std::vector<int>& cur,
                std::vector<CoverLabel>& labels, int b_count, int b_max,
                std::vector<SignedChain>& out) {
  if (!labels.empty())
    out.push_back({MarkedChain::unmarked(v, k, labels), sign_of_parity(b_count + 1)});
  for (int b = b_max; b > k; --b) {
    if (!cover_in(cur, k, b))
      continue;
    labels.push_back({k, b});
    std::swap(cur[k], cur[b]);
    xk_b_phase(v, k, ambient, cur, labels, b_count + 1, b - 1, out);
    std::swap(cur[k], cur[b]);
    labels.pop_back();
  }
}

void xk_a_phase(const Permutation& v, int k, int ambient, std::vector<int>& cur,
                std::vector<CoverLabel>& labels, int a_max, std::vector<SignedChain>& out) {
  xk_b_phase(v, k, ambient, cur, labels, 0, ambient, out);
  for (int a = a_max; a >= 1; --a) {
    if (!cover_in(cur, a, k))
      continue;
    labels.push_back({a, k});
    std::swap(cur[a], cur[k]);
    xk_a_phase(v, k, ambient, cur, labels, a - 1, out);
    std::swap(cur[a], cur[k]);
    labels.pop_back();
  }
}

} // namespace

std::vector<SignedChain> enumerate_xk_chains(const Permutation& v, int k,
                                             EnumerationOptions options) {
  check_k(k);
  const int ambient = options.ambient.value_or(default_ambient(v, k));
  std::vector<int> cur = working_window(v, ambient);
  std::vector<CoverLabel> labels;
  std::vector<SignedChain> out;
  xk_a_phase(v, k, ambient, cur, labels, k - 1, out);
  return out;
}

namespace {

void cohomology_descend(const Permutation& v, int k, int p, std::vector<int>& cur,
                        std::vector<CoverLabel>& labels, std::vector<bool>& used_a, int b_max,
                        std::vector<SignedChain>& out) {
  if (static_cast<int>(labels.size()) == p) {
    out.push_back({MarkedChain::unmarked(v, k, labels), 1});
    return;
  }
  for (int b = b_max; b > k; --b) {
    for (int a = 1; a <= k; ++a) {
      if (used_a[a] || !cover_in(cur, a, b))
        continue;
      labels.push_back({a, b});
      used_a[a] = true;
      std::swap(cur[a], cur[b]);
      cohomology_descend(v, k, p, cur, labels, used_a, b, out);
      std::swap(cur[a], cur[b]);
      used_a[a] = false;
      labels.pop_back();
    }
  }
}

} // namespace

std::vector<SignedChain> enumerate_cohomology_chains(const Permutation& v, int k, int p,
                                                     EnumerationOptions options) {
  check_k(k);
  if (p < 1 || p > k)
    throw std::invalid_argument("cohomology Pieri chains need 1 <= p <= k");
  const int ambient = options.ambient.value_or(default_ambient(v, k));
  std::vector<int> cur = working_window(v, ambient);
  std::vector<CoverLabel> labels;
  std::vector<bool> used_a(k + 1, false);
  std::vector<SignedChain> out;
  cohomology_descend(v, k, p, cur, labels, used_a, ambient, out);
  return out;
}

std::optional<MarkedChain> unique_chain(const Permutation& v, const Permutation& w, int k) {
  check_k(k);
  const int n = std::max({v.size(), w.size(), k + 1});
  std::vector<int> cur = working_window(v, n);
  const std::vector<int> target = working_window(w, n);
  std::vector<CoverLabel> gamma;
  std::vector<int> occurrences(n + 1, 0);

  for (int m = n; m > k; --m) {
    if (cur[m] == target[m])
      continue;
    std::vector<int> a_set;
    for (int i = 1; i <= k; ++i)
      if (cur[i] != target[i] && target[m] <= cur[i] && cur[i] < cur[m])
        a_set.push_back(i);
    std::sort(a_set.begin(), a_set.end(), [&cur](int x, int y) { return cur[x] > cur[y]; });
    for (int a : a_set) {
      const CoverLabel t{a, m};
      if (!gamma.empty()) {
        const CoverLabel prev = gamma.back();
        if (occurrences[prev.a] >= 2 && !precedes(prev, t))
          return std::nullopt;
      }
      // the sweep only ever emits covers when a chain exists
      if (!cover_in(cur, a, m))
        return std::nullopt;
      std::swap(cur[a], cur[m]);
      gamma.push_back(t);
      ++occurrences[a];
    }
    if (cur[m] != target[m])
      return std::nullopt;
  }
  if (cur != target)
    return std::nullopt;
  return MarkedChain::unmarked(v, k, gamma);
}

ChainClassification classify_chain(const MarkedChain& c) {
  const std::vector<CoverLabel> t = c.labels();
  if (!satisfies_p0_p1(std::span<const CoverLabel>(t)))
    throw std::invalid_argument("classify_chain needs a chain satisfying (P0) and (P1)");
  const std::size_t q = t.size();
  ChainClassification out;
  for (std::size_t i = 0; i < q; ++i) {
    bool repeated = false;
    for (std::size_t j = 0; j < i && !repeated; ++j)
      repeated = t[j].a == t[i].a;
    const bool p3_forced = i + 1 < q && !precedes(t[i], t[i + 1]);
    const bool run_forced = in_initial_run(t, i, false);
    if (repeated)
      ++out.prohibited;
    else if (p3_forced || run_forced)
      ++out.forced;
  }
  out.free = static_cast<int>(q) - out.forced - out.prohibited;
  return out;
}

std::set<Permutation, LengthLexLess> upper_k_interval(const Permutation& v, int k, int ambient) {
  std::set<Permutation, LengthLexLess> seen{v};
  std::deque<Permutation> queue{v};
  while (!queue.empty()) {
    Permutation u = std::move(queue.front());
    queue.pop_front();
    for (CoverLabel t : k_covers(u, k, ambient)) {
      Permutation next = apply_transposition(u, t);
      if (seen.insert(next).second)
        queue.push_back(std::move(next));
    }
  }
  return seen;
}

std::optional<ForbiddenSegment> find_forbidden_segment(std::span<const CoverLabel> t, int k) {
  const std::size_t q = t.size();
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t y = x + 1; y < q; ++y) {
      if (t[y].b != t[x].b)
        continue;
      const int j = t[x].a;
      const int i = t[y].a;
      const int m = t[x].b;
      if (!(i < j && j <= k && k < m))
        continue;
      for (std::size_t z = y + 1; z < q; ++z) {
        const int l = t[z].b;
        if (t[z].a == i && k < l && l < m)
          return ForbiddenSegment{ForbiddenSegment::Kind::crossing, {x, y, z}};
      }
    }
  }
  for (std::size_t s = 0; s < q; ++s) {
    const int i = t[s].a;
    const int l = t[s].b;
    // the closing step (i, k+1) is the next step on position i
    std::size_t end = s + 1;
    while (end < q && t[end].a != i)
      ++end;
    if (end == q || t[end].b != k + 1)
      continue;
    for (std::size_t u = s + 1; u < end; ++u) {
      if (t[u].b != l || t[u].a == i)
        continue;
      const int h = t[u].a;
      for (std::size_t w = u + 1; w < end; ++w)
        if (t[w].a == h && t[w].b != l)
          return ForbiddenSegment{ForbiddenSegment::Kind::quad, {s, u, w, end}};
    }
  }
  return std::nullopt;
}

LabelPair intertwine_pair(CoverLabel first, CoverLabel second) {
  const CoverLabel x = first;
  const CoverLabel y = second;
  if (x.a != y.a && x.a != y.b && x.b != y.a && x.b != y.b)
    return {y, x};
  if (x.b == y.b && y.a < x.a)  // ((k,l),(j,l))
    return {{y.a, x.a}, {x.a, x.b}};
  if (x.a == y.a && y.b < x.b)  // ((j,l),(j,k))
    return {{x.a, y.b}, {y.b, x.b}};
  if (x.b == y.b && x.a < y.a)  // ((j,l),(k,l))
    return {{y.a, x.b}, {x.a, y.a}};
  if (x.a == y.a && x.b < y.b)  // ((j,k),(j,l))
    return {{x.b, y.b}, {x.a, x.b}};
  throw std::invalid_argument("label pair (" + std::to_string(x.a) + "," + std::to_string(x.b) +
                              "),(" + std::to_string(y.a) + "," + std::to_string(y.b) +
                              ") has no label-determined intertwining");
}

LabelPair intertwine_pair(const Permutation& start, CoverLabel first, CoverLabel second) {
  auto is_chain = [&start](CoverLabel s, CoverLabel t) {
    return is_cover(start, s) && is_cover(apply_transposition(start, s), t);
  };
  if (!is_chain(first, second))
    throw std::invalid_argument("labels do not form a chain from the start permutation");
  const Permutation end = apply_transposition(apply_transposition(start, first), second);
  auto reaches = [&](const LabelPair& c) {
    return is_chain(c.first, c.second) &&
           apply_transposition(apply_transposition(start, c.first), c.second) == end;
  };

  std::vector<LabelPair> candidates;
  if (first.b == second.a) {  // ((j,k),(k,l))
    const int j = first.a, k = first.b, l = second.b;
    candidates = {{{k, l}, {j, l}}, {{j, l}, {j, k}}};
  } else if (first.a == second.b) {  // ((k,l),(j,k))
    const int j = second.a, k = first.a, l = first.b;
    candidates = {{{j, l}, {k, l}}, {{j, k}, {j, l}}};
  } else {
    candidates = {intertwine_pair(first, second)};
  }
  for (const LabelPair& c : candidates)
    if (reaches(c))
      return c;
  throw InternalError("length-two interval without a second maximal chain");
}

MarkedChain dualize_chain(const MarkedChain& c, int n) {
  if (c.start().size() > n)
    throw std::invalid_argument("chain start is not in S_" + std::to_string(n));
  std::vector<ChainStep> steps;
  steps.reserve(c.steps().size());
  for (const ChainStep& s : c.steps()) {
    if (s.label.b > n)
      throw std::invalid_argument("chain leaves S_" + std::to_string(n));
    steps.push_back({{n + 1 - s.label.b, n + 1 - s.label.a}, s.marked});
  }
  return MarkedChain(conjugate_by_w0(c.start(), n), n - c.k(), std::move(steps));
}

} // namespace kpieri
