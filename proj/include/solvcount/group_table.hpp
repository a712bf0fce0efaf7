#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "solvcount/common.hpp"

namespace solvcount {

using ElementSet = boost::dynamic_bitset<std::uint64_t>;

// A finite group given by its multiplication table. Element 0 is the identity.
class FiniteGroupTable {
 public:
  FiniteGroupTable();  // trivial group
  // Validates identity, Latin-square property, and associativity (exhaustive
  // up to order 64, sampled above).
  FiniteGroupTable(int order, std::vector<std::int32_t> mul);

  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int elem_order(int a) const { return elem_order_[a]; }
  int power(int a, long k) const;
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  ElementSet empty_set() const { return ElementSet(n_); }
  ElementSet full_set() const;
  ElementSet closure(std::span<const int> gens) const;
  ElementSet closure(const ElementSet& s) const;
  ElementSet join(const ElementSet& a, const ElementSet& b) const;
  ElementSet normal_closure(const ElementSet& s) const;
  bool is_normal(const ElementSet& h) const;
  ElementSet derived_subgroup(const ElementSet& h) const;
  ElementSet center() const;

  bool is_abelian() const;
  bool is_solvable() const;
  bool is_nilpotent() const;

  // Small generating set: greedily adds the element of largest order (lowest
  // index among ties) that enlarges the generated subgroup.
  const std::vector<int>& generators() const { return gens_; }

  // Relabelled subgroup as a standalone table; out_elements lists the parent
  // indices in the new order (identity first, then ascending).
  FiniteGroupTable subgroup_table(const ElementSet& h, std::vector<int>* out_elements = nullptr) const;
  // Quotient by a normal subgroup; coset_of maps parent elements to quotient indices.
  FiniteGroupTable quotient_table(const ElementSet& normal, std::vector<int>* coset_of = nullptr) const;

  bool operator==(const FiniteGroupTable& o) const { return n_ == o.n_ && mul_ == o.mul_; }

  const std::vector<std::int32_t>& raw() const { return mul_; }

 private:
  int n_ = 1;
  std::vector<std::int32_t> mul_;
  std::vector<std::int32_t> inv_;
  std::vector<std::int32_t> elem_order_;
  std::vector<int> gens_;

  std::vector<int> compute_generators() const;
};

FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);
FiniteGroupTable cyclic_table(int n);

std::vector<int> set_elements(const ElementSet& s);

// Multiplication-table text format: "order N" followed by N rows of N indices.
FiniteGroupTable read_table(std::istream& in);
FiniteGroupTable read_table_file(const std::string& path);
void write_table(std::ostream& out, const FiniteGroupTable& t);

// Number of bijective endomorphisms.
count_t aut_order(const FiniteGroupTable& t, std::size_t cap = 512);

// Some isomorphism a -> b, or an empty vector if none exists.
std::vector<int> find_isomorphism(const FiniteGroupTable& a, const FiniteGroupTable& b);

}  // namespace solvcount
