#include "kpieri/schubert_basis.hpp"

#include "kpieri/grassmannian.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace kpieri {

LehmerCode code(const Permutation& w) {
  const auto& win = w.window();
  LehmerCode c(win.size(), 0);
  for (std::size_t i = 0; i < win.size(); ++i)
    for (std::size_t j = i + 1; j < win.size(); ++j)
      if (win[j] < win[i])
        ++c[i];
  while (!c.empty() && c.back() == 0)
    c.pop_back();
  return c;
}

Permutation permutation_of_code(const LehmerCode& c) {
  int n = static_cast<int>(c.size());
  for (int i = 1; i <= static_cast<int>(c.size()); ++i) {
    if (c[i - 1] < 0)
      throw std::invalid_argument("negative Lehmer code entry");
    n = std::max(n, i + c[i - 1]);
  }
  std::vector<int> available(n);
  for (int v = 1; v <= n; ++v)
    available[v - 1] = v;
  std::vector<int> window;
  window.reserve(n);
  for (int i = 1; i <= n; ++i) {
    const int entry = i <= static_cast<int>(c.size()) ? c[i - 1] : 0;
    window.push_back(available[entry]);
    available.erase(available.begin() + entry);
  }
  return Permutation(std::move(window));
}

void BasisExpansion::add(const Permutation& w, Coeff c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0)
      terms_.erase(it);
  }
}

void BasisExpansion::add(const BasisExpansion& other, Coeff scale) {
  for (const auto& [w, c] : other.terms_)
    add(w, checked_mul(c, scale));
}

Coeff BasisExpansion::coefficient(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

namespace {

enum class Flavor { schubert, grothendieck };

Polynomial staircase(int n) {
  std::vector<int> e(n > 0 ? n - 1 : 0);
  for (int i = 1; i < n; ++i)
    e[i - 1] = n - i;
  return Polynomial::monomial(Monomial(e));
}

/// Smallest (or largest) i with w(i) < w(i+1), i < w.size(); 0 if none.
int ascent(const Permutation& w, AscentChoice choice) {
  const int n = w.size();
  if (choice == AscentChoice::first) {
    for (int i = 1; i < n; ++i)
      if (w(i) < w(i + 1))
        return i;
  } else {
    for (int i = n - 1; i >= 1; --i)
      if (w(i) < w(i + 1))
        return i;
  }
  return 0;
}

Permutation swap_adjacent(const Permutation& w, int i) { return apply_transposition(w, {i, i + 1}); }

Polynomial apply_operator(Flavor flavor, const Polynomial& f, int i) {
  return flavor == Flavor::schubert ? divided_difference(f, i) : isobaric_difference(f, i);
}

Polynomial compute_uncached(Flavor flavor, const Permutation& w, AscentChoice choice) {
  // climb to omega_0 recording ascents, then apply the operators back down
  std::vector<int> steps;
  Permutation u = w;
  for (int i = ascent(u, choice); i != 0; i = ascent(u, choice)) {
    steps.push_back(i);
    u = swap_adjacent(u, i);
  }
  Polynomial f = staircase(u.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    f = apply_operator(flavor, f, *it);
  return f;
}

/// Write-once memo: a stored value never changes; concurrent duplicate
/// computation is allowed and the first insert wins.
class PolynomialCache {
public:
  explicit PolynomialCache(Flavor flavor) : flavor_(flavor) {}

  const Polynomial& get(const Permutation& w) {
    if (const Polynomial* hit = find(w))
      return *hit;

    std::vector<std::pair<Permutation, int>> path;
    Permutation u = w;
    const Polynomial* base = nullptr;
    while (true) {
      if ((base = find(u)) != nullptr)
        break;
      const int i = ascent(u, AscentChoice::first);
      if (i == 0)
        break;
      path.emplace_back(u, i);
      u = swap_adjacent(u, i);
    }
    if (base == nullptr)
      base = &insert(u, staircase(u.size()));
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      base = &insert(it->first, apply_operator(flavor_, *base, it->second));
    return *base;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

private:
  const Polynomial* find(const Permutation& w) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(w);
    return it == map_.end() ? nullptr : it->second.get();
  }

  const Polynomial& insert(const Permutation& w, Polynomial value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = map_.try_emplace(w, nullptr);
    if (inserted)
      it->second = std::make_unique<const Polynomial>(std::move(value));
    return *it->second;
  }

  Flavor flavor_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Permutation, std::unique_ptr<const Polynomial>, PermutationHash> map_;
};

PolynomialCache& schubert_cache() {
  static PolynomialCache cache(Flavor::schubert);
  return cache;
}

PolynomialCache& grothendieck_cache() {
  static PolynomialCache cache(Flavor::grothendieck);
  return cache;
}

template <typename Basis>
BasisExpansion peel(const Polynomial& f, const ExpansionOptions& options, Basis basis) {
  BasisExpansion result;
  if (f.is_zero())
    return result;
  Polynomial remainder = f;
  const int start_degree = f.min_degree();
  std::size_t steps = 0;
  while (!remainder.is_zero()) {
    if (++steps > options.max_steps)
      throw InternalError("basis expansion exceeded its step limit");
    const auto& terms = remainder.terms();
    const int d = terms.front().monomial.degree();
    if (d < start_degree)
      throw InternalError("basis expansion remainder dropped below its starting degree");
    // terms are sorted by degree, then by the term order: the leading
    // monomial of the lowest layer is the last term of that layer
    auto layer_end = std::find_if(terms.begin(), terms.end(),
                                  [d](const Term& t) { return t.monomial.degree() != d; });
    const Term lead = *(layer_end - 1);
    const Permutation w = permutation_of_code(lead.monomial.exponents());
    remainder.add_scaled(basis(w), checked_neg(lead.coeff));
    result.add(w, lead.coeff);
  }
  return result;
}

} // namespace

const Polynomial& schubert_polynomial(const Permutation& w) { return schubert_cache().get(w); }

const Polynomial& grothendieck_polynomial(const Permutation& w) {
  return grothendieck_cache().get(w);
}

Polynomial compute_schubert(const Permutation& w, AscentChoice choice) {
  return compute_uncached(Flavor::schubert, w, choice);
}

Polynomial compute_grothendieck(const Permutation& w, AscentChoice choice) {
  return compute_uncached(Flavor::grothendieck, w, choice);
}

std::size_t grothendieck_cache_size() { return grothendieck_cache().size(); }

Polynomial grothendieck_of_partition(const Partition& lambda, int k) {
  return grothendieck_polynomial(grassmannian_permutation(lambda, k));
}

Polynomial grothendieck_column(int p, int k) {
  if (p > k)
    return {};
  return grothendieck_of_partition(Partition(std::vector<int>(p, 1)), k);
}

Polynomial grothendieck_row(int p, int k) {
  return grothendieck_of_partition(p == 0 ? Partition() : Partition({p}), k);
}

BasisExpansion expand_in_grothendieck_basis(const Polynomial& f, ExpansionOptions options) {
  return peel(f, options, [](const Permutation& w) -> const Polynomial& {
    return grothendieck_polynomial(w);
  });
}

BasisExpansion expand_in_schubert_basis(const Polynomial& f, ExpansionOptions options) {
  if (!f.is_homogeneous())
    throw std::invalid_argument("Schubert expansion needs a homogeneous polynomial");
  return peel(f, options, [](const Permutation& w) -> const Polynomial& {
    return schubert_polynomial(w);
  });
}

Polynomial grothendieck_sum(const BasisExpansion& e) {
  Polynomial sum;
  for (const auto& [w, c] : e.terms())
    sum.add_scaled(grothendieck_polynomial(w), c);
  return sum;
}

} // namespace kpieri
