#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "solvcount/common.hpp"

namespace solvcount {

struct Letter {
  int gen = 0;
  int exp = 1;  // +1 or -1

  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
Word word_inverse(const Word& w);
Word word_concat(const Word& u, const Word& v);  // reduced product
int exponent_sum(const Word& w, int gen);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int num_generators() const { return static_cast<int>(generators.size()); }
  int num_relators() const { return static_cast<int>(relators.size()); }
  bool operator==(const Presentation&) const = default;
};

// DSL: < x, y | x y^3 x^-1 y^-2, [x, y], (x y)^(y) >
Presentation parse_presentation(std::string_view text);
std::string to_string(const Presentation& p);
std::string word_to_string(const Word& w, const std::vector<std::string>& names);

// free(n), bs(m,n), parafree(m,n), surface(g), nonorientable(g), klein,
// braid(n), braid3_split, braid4_split, hillman_link
Presentation builtin_presentation(std::string_view family, const std::vector<long>& params);
// Accepts "builtin:family(p1,p2)" or "family(p1,p2)".
Presentation builtin_presentation(std::string_view spec);
// "builtin:family(...)", an inline "<...|...>" presentation, "file:PATH" or an
// existing path holding a presentation, or a bare builtin family.
Presentation resolve_presentation(std::string_view spec);

// Element of the integral group ring of a free group.
class FreeGroupRingElement {
 public:
  FreeGroupRingElement() = default;
  static FreeGroupRingElement word(const Word& w, const BigInt& coeff = 1);

  void add(const Word& w, const BigInt& coeff);
  FreeGroupRingElement& operator+=(const FreeGroupRingElement& o);
  FreeGroupRingElement& operator-=(const FreeGroupRingElement& o);
  friend FreeGroupRingElement operator+(FreeGroupRingElement a, const FreeGroupRingElement& b) { return a += b; }
  friend FreeGroupRingElement operator-(FreeGroupRingElement a, const FreeGroupRingElement& b) { return a -= b; }
  friend FreeGroupRingElement operator*(const FreeGroupRingElement& a, const FreeGroupRingElement& b);
  bool operator==(const FreeGroupRingElement&) const = default;

  BigInt augmentation() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, BigInt>& terms() const { return terms_; }
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::map<Word, BigInt> terms_;
};

FreeGroupRingElement fox_derivative(const Word& w, int j);

using SymbolicJacobian = std::vector<std::vector<FreeGroupRingElement>>;
SymbolicJacobian symbolic_jacobian(const Presentation& p);

struct AbelianInvariants {
  int free_rank = 0;
  // torsion[p][i-1] = number of Z_{p^i} summands
  std::map<long, std::vector<int>> torsion;
  std::vector<BigInt> invariant_factors;  // nontrivial finite factors d_1 | d_2 | ...

  int multiplicity(long p, int i) const;
  int beta(long p) const;                 // sum of alpha_i
  int alpha(long p) const;                // sum of i * alpha_i
  int alpha_below(long p, int s) const;   // sum over i < s of i * alpha_i
  int alpha_capped(long p, int s) const;  // sum of min(i, s) * alpha_i
  BigInt torsion_order() const;
};

AbelianInvariants abelian_invariants(const Presentation& p);

}  // namespace solvcount
