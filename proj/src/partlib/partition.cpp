#include "jackclust/partlib/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "jackclust/errors.hpp"

namespace jackclust {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::padded(std::vector<int> parts, int n) {
  while (static_cast<int>(parts.size()) > n && !parts.empty() && parts.back() == 0) parts.pop_back();
  if (static_cast<int>(parts.size()) > n) throw std::invalid_argument("partition has more than N nonzero parts");
  parts.resize(n, 0);
  return Partition(std::move(parts));
}

Partition Partition::from_frequencies(const std::vector<int>& freqs) {
  std::vector<int> parts;
  for (int j = static_cast<int>(freqs.size()) - 1; j >= 0; --j) {
    if (freqs[j] < 0) throw std::invalid_argument("negative frequency");
    parts.insert(parts.end(), freqs[j], j);
  }
  return Partition(std::move(parts));
}

Partition Partition::delta(int n) {
  std::vector<int> parts(n);
  for (int i = 0; i < n; ++i) parts[i] = n - 1 - i;
  return Partition(std::move(parts));
}

int Partition::modulus() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::length() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int x) { return x > 0; }));
}

std::vector<int> Partition::frequencies() const {
  std::vector<int> f(parts_.empty() ? 1 : parts_.front() + 1, 0);
  for (int x : parts_) ++f[x];
  return f;
}

std::string Partition::to_string() const { return composition_to_string(parts_); }

Partition Partition::operator+(const Partition& o) const {
  if (o.size() != size()) throw std::invalid_argument("partition sum needs equal lengths");
  std::vector<int> r(parts_);
  for (int i = 0; i < size(); ++i) r[i] += o.parts_[i];
  return Partition(std::move(r));
}

Partition Partition::scaled(int c) const {
  std::vector<int> r(parts_);
  for (auto& x : r) x *= c;
  return Partition(std::move(r));
}

Partition Partition::shifted(int c) const {
  std::vector<int> r(parts_);
  for (auto& x : r) x += c;
  return Partition(std::move(r));
}

std::size_t PartitionHash::operator()(const Partition& p) const { return CompositionHash()(p.parts()); }

std::size_t CompositionHash::operator()(const Composition& c) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : c) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

int modulus(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

Partition sorted_partition(const Composition& c) {
  std::vector<int> r(c);
  std::sort(r.begin(), r.end(), std::greater<>());
  return Partition(std::move(r));
}

std::string composition_to_string(const Composition& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out + ")";
}

namespace {

std::vector<int> parse_ints(std::string text) {
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream in(text);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad integer in label: " + tok);
    out.push_back(std::stoi(tok));
  }
  return out;
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

Partition parse_partition(const std::string& raw, int n) {
  std::string text = strip(raw);
  Partition p;
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ParseError("unterminated frequency notation: " + raw);
    p = Partition::from_frequencies(parse_ints(text.substr(1, text.size() - 2)));
    if (n > 0 && p.size() != n) throw ParseError("frequencies sum to " + std::to_string(p.size()) + ", expected N=" + std::to_string(n));
    return p;
  }
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  std::vector<int> parts = parse_ints(text);
  try {
    return n > 0 ? Partition::padded(parts, n) : Partition(parts);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + ": " + raw);
  }
}

Composition parse_composition(const std::string& raw, int n) {
  std::string text = strip(raw);
  if (!text.empty() && text.front() == '[') return parse_partition(text, n).parts();
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  Composition c = parse_ints(text);
  if (n > 0) {
    if (static_cast<int>(c.size()) > n) throw ParseError("composition longer than N: " + raw);
    c.resize(n, 0);
  }
  return c;
}

}  // namespace jackclust
