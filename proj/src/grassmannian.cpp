#include "kpieri/grassmannian.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace kpieri {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0)
    parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ')
    text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ')
    text.remove_suffix(1);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']')
      throw std::invalid_argument("malformed partition");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos)
      next = text.size();
    std::string_view item = text.substr(pos, next - pos);
    while (!item.empty() && item.front() == ' ')
      item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ')
      item.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size())
      throw std::invalid_argument("malformed partition");
    parts.push_back(value);
    pos = next + 1;
  }
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contained_in(const Partition& mu) const {
  if (num_parts() > mu.num_parts())
    return false;
  for (int i = 1; i <= num_parts(); ++i)
    if ((*this)[i] > mu[i])
      return false;
  return true;
}

std::string Partition::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0)
      out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

SkewShape::SkewShape(Partition inner, Partition outer)
    : inner_(std::move(inner)), outer_(std::move(outer)) {
  if (!inner_.contained_in(outer_))
    throw std::invalid_argument("skew shape needs inner contained in outer");
}

Permutation grassmannian_permutation(const Partition& lambda, int k) {
  if (lambda.num_parts() > k)
    throw std::invalid_argument("partition " + lambda.str() + " has more than " +
                                std::to_string(k) + " parts");
  const int n = k + lambda[1];
  std::vector<int> window(n);
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= k; ++i) {
    window[i - 1] = lambda[k + 1 - i] + i;
    used[window[i - 1]] = true;
  }
  int next = 1;
  for (int i = k + 1; i <= n; ++i) {
    while (used[next])
      ++next;
    window[i - 1] = next++;
  }
  return Permutation(std::move(window));
}

Partition partition_of_permutation(const Permutation& w, int k) {
  const int n = std::max(w.size(), k + 1);
  for (int i = 1; i < n; ++i)
    if (i != k && w(i) > w(i + 1))
      throw std::invalid_argument("permutation " + w.str() + " has a descent away from " +
                                  std::to_string(k));
  std::vector<int> parts(k);
  for (int i = 1; i <= k; ++i)
    parts[k - i] = w(i) - i;
  return Partition(std::move(parts));
}

bool is_horizontal_strip(const SkewShape& s) {
  const Partition& lambda = s.inner();
  const Partition& mu = s.outer();
  for (int i = 1; i <= mu.num_parts(); ++i)
    if (lambda[i] < mu[i + 1])
      return false;
  return true;
}

bool is_vertical_strip(const SkewShape& s) {
  const Partition& lambda = s.inner();
  const Partition& mu = s.outer();
  for (int i = 1; i <= mu.num_parts(); ++i)
    if (mu[i] - lambda[i] > 1)
      return false;
  return true;
}

StripCounts strip_counts(const SkewShape& s) {
  const Partition& lambda = s.inner();
  const Partition& mu = s.outer();
  StripCounts counts;
  for (int i = 1; i <= mu.num_parts(); ++i)
    if (mu[i] > lambda[i])
      ++counts.rows;
  for (int j = 1; j <= mu[1]; ++j) {
    bool nonempty = false;
    for (int i = 1; i <= mu.num_parts() && !nonempty; ++i)
      nonempty = lambda[i] < j && j <= mu[i];
    if (nonempty)
      ++counts.cols;
  }
  return counts;
}

namespace {

void check_grassmannian_args(const Partition& lambda, int k, int p) {
  if (k < 1)
    throw std::invalid_argument("k must be positive");
  if (p < 1)
    throw std::invalid_argument("p must be positive");
  if (lambda.num_parts() > k)
    throw std::invalid_argument("partition " + lambda.str() + " has more than " +
                                std::to_string(k) + " parts");
}

void add_term(PartitionExpansion& out, const std::vector<int>& mu_parts, const Partition& lambda,
              int lines, int p) {
  Partition mu(mu_parts);
  const int added = mu.weight() - lambda.weight();
  if (added < p)
    return;
  const Coeff c = binomial(lines - 1, added - p);
  if (c != 0)
    out[mu] = sign_of_parity(added - p) * c;
}

void horizontal_strips(const Partition& lambda, int k, int p, int row, std::vector<int>& mu,
                       PartitionExpansion& out) {
  if (row > k) {
    SkewShape s(lambda, Partition(mu));
    add_term(out, mu, lambda, strip_counts(s).rows, p);
    return;
  }
  // mu_1 is unbounded above, but terms vanish once |mu/lambda| > p + k - 1
  const int hi = row == 1 ? lambda[1] + p + k - 1 : lambda[row - 1];
  for (int part = lambda[row]; part <= hi; ++part) {
    mu[row - 1] = part;
    horizontal_strips(lambda, k, p, row + 1, mu, out);
  }
}

void vertical_strips(const Partition& lambda, int k, int p, int row, std::vector<int>& mu,
                     PartitionExpansion& out) {
  if (row > k) {
    SkewShape s(lambda, Partition(mu));
    add_term(out, mu, lambda, strip_counts(s).cols, p);
    return;
  }
  for (int extra = 0; extra <= 1; ++extra) {
    const int part = lambda[row] + extra;
    if (row > 1 && part > mu[row - 2])
      continue;
    mu[row - 1] = part;
    vertical_strips(lambda, k, p, row + 1, mu, out);
  }
}

} // namespace

PartitionExpansion grassmannian_pieri_row(const Partition& lambda, int k, int p) {
  check_grassmannian_args(lambda, k, p);
  PartitionExpansion out;
  std::vector<int> mu(k, 0);
  horizontal_strips(lambda, k, p, 1, mu, out);
  return out;
}

PartitionExpansion grassmannian_pieri_col(const Partition& lambda, int k, int p) {
  check_grassmannian_args(lambda, k, p);
  if (p >= k)
    throw std::invalid_argument("vertical-strip formula needs p < k");
  PartitionExpansion out;
  std::vector<int> mu(k, 0);
  vertical_strips(lambda, k, p, 1, mu, out);
  return out;
}

} // namespace kpieri
