#include "solvcount/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "solvcount/smith.hpp"

namespace solvcount {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word word_inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l.exp = -l.exp;
  return out;
}

Word word_concat(const Word& u, const Word& v) {
  Word out = u;
  for (const Letter& l : v) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

int exponent_sum(const Word& w, int gen) {
  int s = 0;
  for (const Letter& l : w)
    if (l.gen == gen) s += l.exp;
  return s;
}

// ---------------------------------------------------------------------------
// DSL parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation parse() {
    Presentation p;
    expect('<');
    p.generators.push_back(identifier());
    while (peek() == ',') {
      ++pos_;
      p.generators.push_back(identifier());
    }
    for (std::size_t i = 0; i < p.generators.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (p.generators[i] == p.generators[j])
          fail("duplicate generator '" + p.generators[i] + "'");
    names_ = &p.generators;
    expect('|');
    if (peek() != '>') {
      p.relators.push_back(free_reduce(word()));
      while (peek() == ',' || peek() == ';') {
        ++pos_;
        p.relators.push_back(free_reduce(word()));
      }
    }
    expect('>');
    if (peek() != '\0') fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("presentation parse error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string identifier() {
    if (!ident_start(peek())) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long signed_int() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer exponent");
    }
    long v = 0;
    const char* b = text_.data() + (text_[start] == '+' ? start + 1 : start);
    auto [ptr, ec] = std::from_chars(b, text_.data() + pos_, v);
    if (ec != std::errc() || std::labs(v) > 1'000'000) {
      pos_ = start;
      fail("exponent out of range");
    }
    return v;
  }

  Word word() {
    Word w;
    char c = peek();
    if (!ident_start(c) && c != '(' && c != '[') fail("expected word");
    while (true) {
      c = peek();
      if (!ident_start(c) && c != '(' && c != '[') break;
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    return w;
  }

  Word atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word u = word();
      expect(',');
      Word v = word();
      expect(']');
      Word out = word_inverse(u);
      Word vi = word_inverse(v);
      out.insert(out.end(), vi.begin(), vi.end());
      out.insert(out.end(), u.begin(), u.end());
      out.insert(out.end(), v.begin(), v.end());
      return out;
    }
    std::size_t start = pos_;
    std::string name = identifier();
    auto it = std::find(names_->begin(), names_->end(), name);
    if (it == names_->end()) {
      pos_ = start;
      fail("undeclared generator '" + name + "'");
    }
    return Word{Letter{static_cast<int>(it - names_->begin()), 1}};
  }

  Word factor() {
    Word a = atom();
    if (peek() != '^') return a;
    ++pos_;
    if (peek() == '(') {
      ++pos_;
      Word v = word();
      expect(')');
      Word out = word_inverse(v);
      out.insert(out.end(), a.begin(), a.end());
      out.insert(out.end(), v.begin(), v.end());
      return out;
    }
    long k = signed_int();
    Word base = k < 0 ? word_inverse(a) : a;
    Word out;
    for (long i = 0; i < std::labs(k); ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* names_ = nullptr;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).parse(); }

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return names.empty() ? std::string("()^0") : "(" + names[0] + ")^0";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += names.at(w[i].gen);
    if (w[i].exp < 0) out += "^-1";
  }
  return out;
}

std::string to_string(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i];
  }
  out += " |";
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    out += k ? ", " : " ";
    out += word_to_string(p.relators[k], p.generators);
  }
  out += " >";
  return out;
}

// ---------------------------------------------------------------------------
// Built-in families

namespace {

std::string join_names(const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
  return s;
}

Presentation from_relators(const std::vector<std::string>& names, const std::vector<std::string>& rels) {
  std::string text = "< " + join_names(names) + " |";
  for (std::size_t k = 0; k < rels.size(); ++k) text += (k ? ", " : " ") + rels[k];
  return parse_presentation(text + " >");
}

void require_params(std::string_view family, const std::vector<long>& params, std::size_t n) {
  if (params.size() != n)
    throw InputError("builtin family '" + std::string(family) + "' expects " + std::to_string(n) +
                     " parameter(s), got " + std::to_string(params.size()));
}

}  // namespace

Presentation builtin_presentation(std::string_view family, const std::vector<long>& params) {
  std::string f(family);
  std::transform(f.begin(), f.end(), f.begin(), [](unsigned char c) { return std::tolower(c); });
  auto range_error = [&](const std::string& why) {
    return InputError("builtin family '" + f + "': " + why);
  };

  if (f == "free") {
    require_params(f, params, 1);
    if (params[0] < 1 || params[0] > 64) throw range_error("rank must be in 1..64");
    std::vector<std::string> names;
    for (long i = 1; i <= params[0]; ++i) names.push_back("x" + std::to_string(i));
    return from_relators(names, {});
  }
  if (f == "bs") {
    require_params(f, params, 2);
    long m = params[0], n = params[1];
    if (m <= 0 || m > std::labs(n) || std::labs(n) > 10000) throw range_error("need 0 < m <= |n|");
    return from_relators({"x", "y"}, {"x y^" + std::to_string(m) + " x^-1 y^" + std::to_string(-n)});
  }
  if (f == "parafree") {
    require_params(f, params, 2);
    long m = params[0], n = params[1];
    if (std::labs(m) > 10000 || std::labs(n) > 10000) throw range_error("parameters too large");
    std::string sm = std::to_string(m), sn = std::to_string(n);
    return from_relators({"x", "y", "z"}, {"x z^" + sm + " x z^" + std::to_string(-m) + " x^-1 z^" + sn +
                                               " y z^" + std::to_string(-n) + " y^-1"});
  }
  if (f == "surface") {
    require_params(f, params, 1);
    long g = params[0];
    if (g < 1 || g > 32) throw range_error("genus must be in 1..32");
    std::vector<std::string> names;
    for (long i = 1; i <= g; ++i) names.push_back("x" + std::to_string(i));
    for (long i = 1; i <= g; ++i) names.push_back("y" + std::to_string(i));
    std::string rel;
    for (long i = 1; i <= g; ++i) rel += "[x" + std::to_string(i) + ", y" + std::to_string(i) + "]";
    return from_relators(names, {rel});
  }
  if (f == "nonorientable") {
    require_params(f, params, 1);
    long g = params[0];
    if (g < 1 || g > 64) throw range_error("genus must be in 1..64");
    std::vector<std::string> names;
    std::string rel;
    for (long i = 1; i <= g; ++i) {
      names.push_back("x" + std::to_string(i));
      rel += (i > 1 ? " x" : "x") + std::to_string(i) + "^2";
    }
    return from_relators(names, {rel});
  }
  if (f == "klein") {
    require_params(f, params, 0);
    return from_relators({"x", "y"}, {"y x y^-1 x"});
  }
  if (f == "braid") {
    require_params(f, params, 1);
    long n = params[0];
    if (n < 3 || n > 64) throw range_error("need 3 <= n <= 64");
    std::vector<std::string> rels{"y^" + std::to_string(n) + " (y x)^" + std::to_string(1 - n)};
    for (long i = 2; 2 * i <= n; ++i) {
      std::string yi = std::to_string(i);
      rels.push_back("[y^" + yi + " x y^-" + yi + ", x]");
    }
    return from_relators({"x", "y"}, rels);
  }
  if (f == "braid3_split") {
    require_params(f, params, 0);
    return from_relators({"x", "a", "b"}, {"a^(x) b^-1", "b^(x) (b a^-1)^-1"});
  }
  if (f == "braid4_split") {
    require_params(f, params, 0);
    return from_relators({"x", "a", "b", "c", "d"},
                         {"a^(x) b^-1", "b^(x) (b a^-1)^-1", "c^(x) (d c)^-1", "d^(x) d^-1", "c^(a) d^-1",
                          "c^(b) (d^-1 c)^-1", "d^(a) (d c^-1 d^2)^-1", "d^(b) (d c^-1 d)^-1"});
  }
  if (f == "hillman_link") {
    require_params(f, params, 0);
    return from_relators({"x1", "x2", "x3", "x4"},
                         // Conjugates expanded as x^y = y x y^-1.
                         {"x4^-1 x1 x4 (x2^-1 x1 x2) (x4 x1) (x2^-1 x1 x2)^-1",
                          "(x2^-1 x1^-1 x2) (x3^-1 x1 x4) (x2^-1 x1^-1 x2)^-1 x3 (x1 x4) x3^-1",
                          "[x1^-1 x4^-1 x3 x1 x4 x3^-2 x4, x2]"});
  }
  throw InputError("unknown builtin family '" + f + "'");
}

Presentation builtin_presentation(std::string_view spec) {
  std::string s(spec);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.rfind("builtin:", 0) == 0) s = s.substr(8);
  std::vector<long> params;
  std::string family = s;
  auto open = s.find('(');
  if (open != std::string::npos) {
    if (s.back() != ')') throw InputError("malformed builtin spec '" + std::string(spec) + "'");
    family = s.substr(0, open);
    std::string args = s.substr(open + 1, s.size() - open - 2);
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) {
      long v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc() || ptr != item.data() + item.size())
        throw InputError("malformed builtin parameter '" + item + "'");
      params.push_back(v);
    }
  }
  return builtin_presentation(family, params);
}

Presentation resolve_presentation(std::string_view spec) {
  std::string s(spec);
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) throw InputError("empty source");
  if (s.rfind("builtin:", 0) == 0) return builtin_presentation(s);
  if (s[first] == '<') return parse_presentation(s);
  std::string path = s.rfind("file:", 0) == 0 ? s.substr(5) : s;
  if (std::filesystem::is_regular_file(path)) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
  }
  if (s.rfind("file:", 0) == 0) throw InputError("cannot read presentation file '" + path + "'");
  return builtin_presentation(s);
}

// ---------------------------------------------------------------------------
// Group ring and Fox calculus

FreeGroupRingElement FreeGroupRingElement::word(const Word& w, const BigInt& coeff) {
  FreeGroupRingElement e;
  e.add(w, coeff);
  return e;
}

void FreeGroupRingElement::add(const Word& w, const BigInt& coeff) {
  if (coeff == 0) return;
  Word r = free_reduce(w);
  auto [it, inserted] = terms_.try_emplace(std::move(r), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeGroupRingElement& FreeGroupRingElement::operator+=(const FreeGroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FreeGroupRingElement& FreeGroupRingElement::operator-=(const FreeGroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FreeGroupRingElement operator*(const FreeGroupRingElement& a, const FreeGroupRingElement& b) {
  FreeGroupRingElement out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) out.add(word_concat(u, v), cu * cv);
  return out;
}

BigInt FreeGroupRingElement::augmentation() const {
  BigInt s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

std::string FreeGroupRingElement::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    bool unit = (a == 1);
    if (!unit || w.empty()) out += a.str();
    if (!w.empty()) {
      if (!unit) out += "*";
      out += word_to_string(w, names);
    }
  }
  return out;
}

FreeGroupRingElement fox_derivative(const Word& w, int j) {
  FreeGroupRingElement out;
  Word prefix;
  for (const Letter& l : w) {
    Word next = word_concat(prefix, Word{l});
    if (l.gen == j) {
      if (l.exp > 0)
        out.add(prefix, 1);
      else
        out.add(next, -1);
    }
    prefix = std::move(next);
  }
  return out;
}

SymbolicJacobian symbolic_jacobian(const Presentation& p) {
  SymbolicJacobian jac(p.relators.size());
  for (std::size_t k = 0; k < p.relators.size(); ++k)
    for (int j = 0; j < p.num_generators(); ++j) jac[k].push_back(fox_derivative(p.relators[k], j));
  return jac;
}

// ---------------------------------------------------------------------------
// Abelianization

int AbelianInvariants::multiplicity(long p, int i) const {
  auto it = torsion.find(p);
  if (it == torsion.end() || i < 1 || i > static_cast<int>(it->second.size())) return 0;
  return it->second[i - 1];
}

int AbelianInvariants::beta(long p) const {
  int s = 0;
  if (auto it = torsion.find(p); it != torsion.end())
    for (int a : it->second) s += a;
  return s;
}

int AbelianInvariants::alpha(long p) const {
  int s = 0;
  if (auto it = torsion.find(p); it != torsion.end())
    for (std::size_t i = 0; i < it->second.size(); ++i) s += static_cast<int>(i + 1) * it->second[i];
  return s;
}

int AbelianInvariants::alpha_below(long p, int s) const {
  int t = 0;
  if (auto it = torsion.find(p); it != torsion.end())
    for (std::size_t i = 0; i < it->second.size() && static_cast<int>(i + 1) < s; ++i)
      t += static_cast<int>(i + 1) * it->second[i];
  return t;
}

int AbelianInvariants::alpha_capped(long p, int s) const {
  int t = 0;
  if (auto it = torsion.find(p); it != torsion.end())
    for (std::size_t i = 0; i < it->second.size(); ++i)
      t += std::min(static_cast<int>(i + 1), s) * it->second[i];
  return t;
}

BigInt AbelianInvariants::torsion_order() const {
  BigInt o = 1;
  for (const BigInt& d : invariant_factors) o *= d;
  return o;
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  const int n = p.num_generators(), m = p.num_relators();
  DenseMatrix<BigInt> rel(m, n);
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < n; ++j) rel(k, j) = exponent_sum(p.relators[k], j);
  std::vector<BigInt> diag = smith_invariants(rel);
  AbelianInvariants inv;
  inv.free_rank = n - static_cast<int>(diag.size());
  for (const BigInt& d : diag) {
    if (d == 1) continue;
    inv.invariant_factors.push_back(d);
    BigInt rest = d;
    for (long q = 2; rest > 1; ++q) {
      if (BigInt(q) * q > rest) q = static_cast<long>(rest);
      int e = 0;
      while (rest % q == 0) {
        rest /= q;
        ++e;
      }
      if (e) {
        auto& v = inv.torsion[q];
        if (static_cast<int>(v.size()) < e) v.resize(e, 0);
        ++v[e - 1];
      }
    }
  }
  return inv;
}

}  // namespace solvcount
