#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace verlinde::so3 {

/// Twisting class of SO(3): grading sign, torsion sign of H^3, free part k.
struct TwistingType {
  int eps1 = 1;
  int eps2 = 1;
  std::int64_t k = 1;

  std::string to_string() const;  // "(+,-,3)"
  bool operator==(const TwistingType&) const = default;
};

/// Parses "+,-,3" or "(+,-,3)".
TwistingType parse_twisting(const std::string& s);

/// The eight sign/parity types for a given k, in table order.
std::vector<TwistingType> all_twistings(std::int64_t k);

/// Integer combination of classes [p] (p = dimension label).
using Element = std::map<std::int64_t, std::int64_t>;

void add_to(Element& acc, const Element& x, std::int64_t scale = 1);

/// eps1,eps2 R(k): the quotient of R_SU(2)/([2k]) restricted to odd (eps2=+)
/// or even (eps2=-) dimensions, modulo [p] ~ eps1 [2k-p] and [k] = 0 when
/// eps1 = -.
class QuotientRingRk {
 public:
  QuotientRingRk(int eps1, int eps2, std::int64_t k);

  int eps1() const { return eps1_; }
  int eps2() const { return eps2_; }
  std::int64_t k() const { return k_; }
  /// Normal-form labels in this parity class, ascending, each in [1, k].
  const std::vector<std::int64_t>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }

  /// Normal form of [m] for any integer m; the parity of m picks the
  /// summand. Labels of the result lie in [1, k].
  Element reduce(std::int64_t m) const;
  Element reduce(const Element& x) const;
  /// [p][q] = [q-p+1] + ... + [q+p-1], reduced. Any representatives.
  Element multiply(std::int64_t p, std::int64_t q) const;
  /// Products of basis elements; mult()[i][j] lands in the parity class of
  /// basis()[i] + basis()[j] - 1.
  const std::vector<std::vector<Element>>& mult() const { return mult_; }
  std::string name() const;  // "^{+-}R(4)"

 private:
  int eps1_, eps2_;
  std::int64_t k_;
  std::vector<std::int64_t> basis_;
  std::vector<std::vector<Element>> mult_;
};

QuotientRingRk rk_ring(int eps1, int eps2, std::int64_t k);

/// One row of the K-group table.
struct KTableEntry {
  TwistingType twisting;
  std::string k0;
  std::string k1;
  bool starred = false;
  std::size_t k0_rank = 0;
  std::size_t k1_rank = 0;
};

KTableEntry k_table(const TwistingType& t);

enum class SupportOrigin { Interior, TorusAtMinusOne, OddComponentAtMinusOne };
std::string to_string(SupportOrigin o);

/// A one-dimensional stalk at mu = exp(2 pi i numerator / denominator).
struct SupportLine {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  int degree = 1;
  SupportOrigin origin = SupportOrigin::Interior;
};

std::vector<SupportLine> so3_localisation(const TwistingType& t);

/// Graded Verlinde ring for the (-,-,odd) twisting. Basis: [1], [3], ...,
/// [k-2], then [k]+ and [k]-.
struct GradedVerlindeRing {
  std::int64_t k = 0;
  std::vector<std::string> labels;
  /// mult[a][b][c]
  std::vector<std::vector<std::vector<std::int64_t>>> mult;

  std::size_t size() const { return labels.size(); }
  std::size_t plus() const { return labels.size() - 2; }
  std::size_t minus() const { return labels.size() - 1; }
  /// Index of [p] for odd p <= k-2.
  std::size_t index_of(std::int64_t p) const { return static_cast<std::size_t>((p - 1) / 2); }
  /// Image of an element of ^{++}R(k): [k] goes to [k]+ + [k]-.
  std::vector<std::int64_t> image(const Element& x) const;
  std::vector<std::int64_t> product(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const;
};

/// Requires k odd and k >= 3.
GradedVerlindeRing graded_ring(std::int64_t k);

}  // namespace verlinde::so3
