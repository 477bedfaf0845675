#pragma once

#include <compare>
#include <string>
#include <vector>

namespace jackclust {

// Exponent data without ordering constraint; labels nonsymmetric polynomials.
using Composition = std::vector<int>;

// Weakly decreasing nonnegative parts, padded with zeros to a fixed length N.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  // Pads with zeros (or drops trailing zeros) to length n.
  static Partition padded(std::vector<int> parts, int n);
  static Partition from_frequencies(const std::vector<int>& freqs);
  static Partition zero(int n) { return Partition(std::vector<int>(n, 0)); }
  // δ = (N−1, …, 1, 0).
  static Partition delta(int n);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](int i) const { return parts_[i]; }
  int size() const { return static_cast<int>(parts_.size()); }
  int modulus() const;
  int length() const;  // number of nonzero parts
  // f_j = multiplicity of the part j, for j = 0..κ_1.
  std::vector<int> frequencies() const;
  std::string to_string() const;

  Partition operator+(const Partition& o) const;
  Partition scaled(int c) const;
  // Adds c to every part.
  Partition shifted(int c) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const;
};
struct CompositionHash {
  std::size_t operator()(const Composition& c) const;
};

int modulus(const Composition& c);
Partition sorted_partition(const Composition& c);
std::string composition_to_string(const Composition& c);

// Accepts "4,2,0" (padded to n when n > 0) or frequency notation "[f0,f1,...]".
Partition parse_partition(const std::string& text, int n = 0);
Composition parse_composition(const std::string& text, int n = 0);

}  // namespace jackclust
