#include "conespec/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace conespec {

namespace {

void normalize(std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw Error(ErrorKind::InvalidRange, "negative partition part");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw Error(ErrorKind::NotSorted, "partition parts must be weakly decreasing");
    }
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(parts_); }

int Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(std::size_t len) const {
  std::vector<int> out(std::max(len, parts_.size()), 0);
  std::copy(parts_.begin(), parts_.end(), out.begin());
  return out;
}

bool Partition::contained_in(const Partition& other) const noexcept {
  if (parts_.size() > other.parts_.size()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] > other.parts_[i]) return false;
  }
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int part : parts_) {
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

IndexSubset::IndexSubset(int ambient, std::vector<int> elements)
    : ambient_(ambient), elements_(std::move(elements)) {
  if (ambient_ < 0) throw Error(ErrorKind::InvalidRange, "negative ambient size");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1 || elements_[i] > ambient_) {
      throw Error(ErrorKind::InvalidRange, "subset element " + std::to_string(elements_[i]) +
                                               " outside [1," + std::to_string(ambient_) + "]");
    }
    if (i > 0 && elements_[i] <= elements_[i - 1]) {
      throw Error(ErrorKind::NotSorted, "subset elements must be strictly increasing");
    }
  }
}

IndexSubset IndexSubset::full(int ambient) {
  std::vector<int> all(static_cast<std::size_t>(ambient));
  std::iota(all.begin(), all.end(), 1);
  return IndexSubset(ambient, std::move(all));
}

bool IndexSubset::contains(int e) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

IndexSubset IndexSubset::reflect() const {
  std::vector<int> out;
  out.reserve(elements_.size());
  for (auto it = elements_.rbegin(); it != elements_.rend(); ++it) out.push_back(ambient_ + 1 - *it);
  return IndexSubset(ambient_, std::move(out));
}

IndexSubset IndexSubset::complement() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(ambient_) - elements_.size());
  for (int e = 1; e <= ambient_; ++e) {
    if (!contains(e)) out.push_back(e);
  }
  return IndexSubset(ambient_, std::move(out));
}

IndexSubset IndexSubset::restrict_to(int bound) const {
  std::vector<int> out;
  for (int e : elements_) {
    if (e <= bound) out.push_back(e);
  }
  return IndexSubset(bound, std::move(out));
}

std::string IndexSubset::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i];
  os << '}';
  return os.str();
}

Partition mu(const IndexSubset& subset) {
  const auto& a = subset.elements();
  if (a.empty()) throw Error(ErrorKind::EmptySubset, "mu of the empty subset");
  std::vector<int> parts(a.size());
  const int r = static_cast<int>(a.size());
  for (int i = 0; i < r; ++i) parts[static_cast<std::size_t>(r - 1 - i)] = a[static_cast<std::size_t>(i)] - (i + 1);
  return Partition(std::move(parts));
}

void for_each_subset(int ambient, int r, const std::function<void(const IndexSubset&)>& visit) {
  if (ambient < 0 || r < 0 || r > ambient) {
    throw Error(ErrorKind::InvalidRange,
                "subset size " + std::to_string(r) + " outside [0," + std::to_string(ambient) + "]");
  }
  std::vector<int> current(static_cast<std::size_t>(r));
  std::iota(current.begin(), current.end(), 1);
  while (true) {
    visit(IndexSubset(ambient, current));
    int i = r - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == ambient - r + i + 1) --i;
    if (i < 0) return;
    ++current[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<IndexSubset> subsets(int ambient, int r) {
  std::vector<IndexSubset> out;
  if (r >= 0 && r <= ambient) out.reserve(binomial(ambient, r));
  for_each_subset(ambient, r, [&](const IndexSubset& s) { out.push_back(s); });
  return out;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string item;
  std::stringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) {
      if (text.find_first_not_of(" \t") == std::string_view::npos) break;
      throw Error(ErrorKind::Parse, "empty part in partition '" + std::string(text) + "'");
    }
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || used == 0) throw Error(ErrorKind::Parse, "not a partition: '" + std::string(text) + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

}  // namespace conespec
