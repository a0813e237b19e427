#include "kpieri/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace kpieri {

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  const int m = static_cast<int>(window_.size());
  std::vector<bool> seen(m + 1, false);
  for (int value : window_) {
    if (value < 1 || value > m || seen[value])
      throw std::invalid_argument("window is not a permutation of 1.." + std::to_string(m));
    seen[value] = true;
  }
  trim();
}

void Permutation::trim() {
  while (!window_.empty() && window_.back() == static_cast<int>(window_.size()))
    window_.pop_back();
}

Permutation Permutation::simple(int i) {
  if (i < 1)
    throw std::invalid_argument("simple transposition index must be positive");
  std::vector<int> w(i + 1);
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!text.empty() && is_space(text.front()))
    text.remove_prefix(1);
  while (!text.empty() && is_space(text.back()))
    text.remove_suffix(1);
  if (!text.empty() && text.front() == '[' && text.back() == ']')
    text = text.substr(1, text.size() - 2);
  if (text.empty())
    throw std::invalid_argument("empty permutation");

  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos)
        next = text.size();
      std::string_view item = text.substr(pos, next - pos);
      while (!item.empty() && is_space(item.front()))
        item.remove_prefix(1);
      while (!item.empty() && is_space(item.back()))
        item.remove_suffix(1);
      int value = 0;
      auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc() || end != item.data() + item.size())
        throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
      values.push_back(value);
      pos = next + 1;
    }
  }
  return Permutation(std::move(values));
}

std::vector<int> Permutation::window(int n) const {
  std::vector<int> w(std::max(n, size()));
  for (int i = 1; i <= static_cast<int>(w.size()); ++i)
    w[i - 1] = (*this)(i);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (std::size_t i = 0; i < window_.size(); ++i)
    inv[window_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::str() const {
  if (window_.empty())
    return "1";
  bool digits = std::all_of(window_.begin(), window_.end(), [](int v) { return v < 10; });
  std::string out;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (!digits && i > 0)
      out += ',';
    out += std::to_string(window_[i]);
  }
  return out;
}

bool LengthLexLess::operator()(const Permutation& x, const Permutation& y) const {
  int lx = length(x);
  int ly = length(y);
  if (lx != ly)
    return lx < ly;
  return x.window() < y.window();
}

std::size_t PermutationHash::operator()(const Permutation& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : w.window()) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ULL;
  }
  return h;
}

int length(const Permutation& w) {
  const auto& win = w.window();
  int count = 0;
  for (std::size_t i = 0; i < win.size(); ++i)
    for (std::size_t j = i + 1; j < win.size(); ++j)
      if (win[i] > win[j])
        ++count;
  return count;
}

Permutation apply_transposition(const Permutation& w, CoverLabel t) {
  std::vector<int> win = w.window(t.b);
  std::swap(win[t.a - 1], win[t.b - 1]);
  return Permutation(std::move(win));
}

bool is_cover(const Permutation& v, CoverLabel t) {
  if (t.a < 1 || t.b <= t.a)
    return false;
  const int lo = v(t.a);
  const int hi = v(t.b);
  if (lo > hi)
    return false;
  for (int c = t.a + 1; c < t.b; ++c) {
    const int x = v(c);
    if (lo < x && x < hi)
      return false;
  }
  return true;
}

std::vector<CoverLabel> k_covers(const Permutation& v, int k, int ambient) {
  std::vector<CoverLabel> out;
  for (int a = 1; a <= k; ++a)
    for (int b = k + 1; b <= ambient; ++b)
      if (is_cover(v, {a, b}))
        out.push_back({a, b});
  return out;
}

bool k_bruhat_leq(const Permutation& v, const Permutation& w, int k) {
  const int n = std::max({v.size(), w.size(), k});
  for (int a = 1; a <= n; ++a) {
    if (a <= k) {
      if (v(a) > w(a))
        return false;
    } else if (v(a) < w(a)) {
      return false;
    }
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (v(a) < v(b) && w(a) > w(b) && !(a <= k && k < b))
        return false;
  return true;
}

Permutation conjugate_by_w0(const Permutation& w, int n) {
  if (w.size() > n)
    throw std::invalid_argument("permutation " + w.str() + " is not in S_" + std::to_string(n));
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i)
    out[i - 1] = n + 1 - w(n + 1 - i);
  return Permutation(std::move(out));
}

Permutation flatten(const Permutation& w, std::span<const int> positions) {
  std::vector<int> pos(positions.begin(), positions.end());
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  std::vector<int> values;
  values.reserve(pos.size());
  for (int p : pos)
    values.push_back(w(p));
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  for (int& x : values)
    x = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1;
  return Permutation(std::move(values));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

} // namespace kpieri
