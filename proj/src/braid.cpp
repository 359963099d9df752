#include "braid.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace sextic {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

}  // namespace

FreeWord::FreeWord(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int l : letters) {
    if (l == 0) throw std::invalid_argument("zero letter in word");
    push_reduced(letters_, l);
  }
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<int> out = letters_;
  for (int l : o.letters_) push_reduced(out, l);
  FreeWord w;
  w.letters_ = std::move(out);
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(-*it);
  return w;
}

FreeWord FreeWord::conjugated_by(const FreeWord& u) const {
  return u * *this * u.inverse();
}

FreeWord FreeWord::pow(int e) const {
  FreeWord base = e < 0 ? inverse() : *this;
  FreeWord out;
  for (int i = 0; i < std::abs(e); ++i) out = out * base;
  return out;
}

FreeWord FreeWord::cyclically_reduced() const {
  std::vector<int> w = letters_;
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a] == -w[b - 1]) {
    ++a;
    --b;
  }
  FreeWord out;
  out.letters_.assign(w.begin() + a, w.begin() + b);
  return out;
}

std::string FreeWord::str(char symbol) const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    int run = static_cast<int>(j - i);
    if (!first) os << ' ';
    first = false;
    os << symbol << std::abs(letters_[i]);
    int e = letters_[i] > 0 ? run : -run;
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

FreeWord FreeWord::parse(const std::string& text, char symbol) {
  std::istringstream is(text);
  std::string tok;
  std::vector<int> letters;
  int pos = 0;
  while (is >> tok) {
    ++pos;
    std::size_t caret = tok.find('^');
    std::string base = tok.substr(0, caret);
    int exp = 1;
    if (caret != std::string::npos) {
      try {
        exp = std::stoi(tok.substr(caret + 1));
      } catch (...) {
        throw std::invalid_argument("bad exponent in token " +
                                    std::to_string(pos) + ": '" + tok + "'");
      }
    }
    if (base.size() < 2 || base[0] != symbol)
      throw std::invalid_argument("unknown token " + std::to_string(pos) +
                                  ": '" + tok + "'");
    int idx;
    try {
      idx = std::stoi(base.substr(1));
    } catch (...) {
      throw std::invalid_argument("bad generator in token " +
                                  std::to_string(pos) + ": '" + tok + "'");
    }
    if (idx <= 0)
      throw std::invalid_argument("bad generator index in token " +
                                  std::to_string(pos));
    for (int k = 0; k < std::abs(exp); ++k)
      letters.push_back(exp > 0 ? idx : -idx);
  }
  return FreeWord(letters);
}

void Braid3::append_syllable(std::uint8_t s) {
  auto is_y = [](std::uint8_t v) { return v == Y || v == Y2; };
  while (true) {
    if (syll_.empty()) {
      syll_.push_back(s);
      return;
    }
    std::uint8_t back = syll_.back();
    if (back == X && s == X) {
      syll_.pop_back();
      return;
    }
    if (is_y(back) && is_y(s)) {
      int sum = (back - 1) + (s - 1);  // Y=1, Y2=2 in additive Z3
      sum %= 3;
      syll_.pop_back();
      if (sum == 0) return;
      s = static_cast<std::uint8_t>(sum + 1);
      continue;
    }
    syll_.push_back(s);
    return;
  }
}

Braid3 Braid3::from_letters(const std::vector<int>& letters) {
  // Syllable images: s1 = y^-1 x, s2 = x y^-1, with x of order 2 and y of
  // order 3 the images of s1 s2 s1 and s1 s2.
  Braid3 b;
  auto emit = [&b](std::initializer_list<std::uint8_t> sy, int deg) {
    for (auto s : sy) b.append_syllable(s);
    b.degree_ += deg;
  };
  std::vector<int> expanded;
  for (int l : letters) {
    if (l == 3) {
      expanded.insert(expanded.end(), {-1, 2, 1});
    } else if (l == -3) {
      expanded.insert(expanded.end(), {-1, -2, 1});
    } else if (l >= -2 && l <= 2 && l != 0) {
      expanded.push_back(l);
    } else {
      throw std::invalid_argument("braid letter out of range");
    }
  }
  for (int l : expanded) {
    switch (l) {
      case 1:
        emit({Y2, X}, 1);
        break;
      case -1:
        emit({X, Y}, -1);
        break;
      case 2:
        emit({X, Y2}, 1);
        break;
      case -2:
        emit({Y, X}, -1);
        break;
      default:
        assert(false);
    }
  }
  return b;
}

Braid3 Braid3::parse(const std::string& text) {
  FreeWord w = FreeWord::parse(text, 's');
  return from_letters(w.letters());
}

Braid3 Braid3::operator*(const Braid3& o) const {
  Braid3 out = *this;
  out.degree_ += o.degree_;
  for (auto s : o.syll_) out.append_syllable(s);
  return out;
}

Braid3 Braid3::inverse() const {
  Braid3 out;
  out.degree_ = -degree_;
  for (auto it = syll_.rbegin(); it != syll_.rend(); ++it) {
    std::uint8_t s = *it;
    if (s == Y)
      out.syll_.push_back(Y2);
    else if (s == Y2)
      out.syll_.push_back(Y);
    else
      out.syll_.push_back(X);
  }
  return out;
}

Braid3 Braid3::pow(int e) const {
  Braid3 base = e < 0 ? inverse() : *this;
  Braid3 out;
  for (int i = 0; i < std::abs(e); ++i) out = out * base;
  return out;
}

Braid3 Braid3::conjugated_by(const Braid3& u) const {
  return u * *this * u.inverse();
}

bool Braid3::conjugate_to(const Braid3& o) const {
  if (degree_ != o.degree_) return false;
  auto cyc = [](std::vector<std::uint8_t> w) {
    auto is_y = [](std::uint8_t v) { return v == Y || v == Y2; };
    // Cyclic reduction in the free product: merge matching ends.
    bool changed = true;
    while (changed && w.size() >= 2) {
      changed = false;
      std::uint8_t f = w.front(), b = w.back();
      if (f == X && b == X) {
        w.erase(w.begin());
        w.pop_back();
        changed = true;
      } else if (is_y(f) && is_y(b)) {
        int sum = ((f - 1) + (b - 1)) % 3;
        w.erase(w.begin());
        w.pop_back();
        if (sum != 0)
          w.insert(w.begin(), static_cast<std::uint8_t>(sum + 1));
        changed = true;
      }
    }
    return w;
  };
  std::vector<std::uint8_t> a = cyc(syll_), b = cyc(o.syll_);
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      ok = a[(r + i) % a.size()] == b[i];
    if (ok) return true;
  }
  return false;
}

std::vector<int> Braid3::representative_letters() const {
  std::vector<int> out;
  int deg = 0;
  for (auto s : syll_) {
    switch (s) {
      case X:
        out.insert(out.end(), {1, 2, 1});
        deg += 3;
        break;
      case Y:
        out.insert(out.end(), {1, 2});
        deg += 2;
        break;
      case Y2:
        out.insert(out.end(), {1, 2, 1, 2});
        deg += 4;
        break;
    }
  }
  int diff = degree_ - deg;
  assert(diff % 6 == 0);
  int k = diff / 6;
  for (int i = 0; i < std::abs(k) * 3; ++i) {
    if (k > 0)
      out.insert(out.end(), {1, 2});
    else
      out.insert(out.end(), {-2, -1});
  }
  return out;
}

std::string Braid3::str() const {
  std::ostringstream os;
  os << "deg " << degree_ << " |";
  if (syll_.empty()) os << " 1";
  for (auto s : syll_) {
    if (s == X)
      os << " x";
    else if (s == Y)
      os << " y";
    else
      os << " y^2";
  }
  return os.str();
}

namespace {

FreeWord apply_sigma(int letter, const FreeWord& w) {
  // Substitution tables for the left action.
  auto subst = [&](int gen) -> std::vector<int> {
    switch (letter) {
      case 1:
        if (gen == 1) return {1, 2, -1};
        if (gen == 2) return {1};
        return {3};
      case -1:
        if (gen == 1) return {2};
        if (gen == 2) return {-2, 1, 2};
        return {3};
      case 2:
        if (gen == 2) return {2, 3, -2};
        if (gen == 3) return {2};
        return {1};
      case -2:
        if (gen == 2) return {3};
        if (gen == 3) return {-3, 2, 3};
        return {1};
      default:
        throw std::invalid_argument("bad sigma letter");
    }
  };
  std::vector<int> out;
  out.reserve(3 * w.size());
  for (int l : w.letters()) {
    int gen = std::abs(l);
    if (gen > 3) throw std::invalid_argument("word letter outside a1..a3");
    std::vector<int> img = subst(gen);
    if (l < 0)
      for (auto it = img.rbegin(); it != img.rend(); ++it)
        push_reduced(out, -*it);
    else
      for (int x : img) push_reduced(out, x);
  }
  return FreeWord(out);
}

}  // namespace

FreeWord braid_act(const std::vector<int>& braid_letters, const FreeWord& w) {
  std::vector<int> expanded;
  for (int l : braid_letters) {
    if (l == 3)
      expanded.insert(expanded.end(), {-1, 2, 1});
    else if (l == -3)
      expanded.insert(expanded.end(), {-1, -2, 1});
    else
      expanded.push_back(l);
  }
  FreeWord cur = w;
  for (auto it = expanded.rbegin(); it != expanded.rend(); ++it)
    cur = apply_sigma(*it, cur);
  return cur;
}

FreeWord braid_act(const Braid3& braid, const FreeWord& w) {
  return braid_act(braid.representative_letters(), w);
}

Braid3 braid_normal_form(const std::vector<int>& letters) {
  return Braid3::from_letters(letters);
}

namespace {
int mod3_index(int i) {
  int m = ((i - 1) % 3 + 3) % 3;
  return m + 1;
}
}  // namespace

Braid3 edge_transport(int from_index, int to_index) {
  int i = mod3_index(from_index);
  int j = mod3_index(to_index);
  if (mod3_index(i + 1) == j) return Braid3::from_letters({i});
  if (mod3_index(j + 1) == i) return Braid3::from_letters({-j});
  return Braid3::from_letters({i, mod3_index(i - 1), i});
}

Braid3 transport(const std::vector<std::pair<int, int>>& edge_types) {
  Braid3 t;
  for (auto [from, to] : edge_types) {
    if (from < 1 || from > 3 || to < 1 || to > 3)
      throw std::invalid_argument("UnmarkedVertex: edge end without an index");
    t = t * edge_transport(to, from);
  }
  return t;
}

Braid3 transport_loop(const std::vector<std::pair<int, int>>& edge_types,
                      int encompassed_multiplicity) {
  Braid3 reduced = transport(edge_types);
  int diff = encompassed_multiplicity - reduced.degree();
  if (diff % 6 != 0)
    throw std::invalid_argument(
        "encompassed multiplicity incompatible with the reduced transport");
  return reduced * Braid3::from_letters({1, 2, 1, 2, 1, 2}).pow(diff / 6);
}

Braid3 local_monodromy(FiberKind kind, int d, int marking_index) {
  int i = mod3_index(marking_index);
  if (kind == FiberKind::A || kind == FiberKind::D) {
    if (d < 1) throw std::invalid_argument("InvalidValency: d < 1");
    std::vector<int> letters(d, mod3_index(i + 1));
    if (kind == FiberKind::D)
      letters.insert(letters.end(), {1, 2, 1, 2, 1, 2});
    return Braid3::from_letters(letters);
  }
  // Triple-point fibers: rotation powers conjugated so that the approach
  // runs along the bold edge of marking index i.  The conjugators are pinned
  // by the monodromy-at-infinity factorization tests.
  std::vector<int> conj = detail::epoint_conjugator(kind, i);
  std::vector<int> letters = conj;
  if (kind == FiberKind::E7White) {
    for (int k = 0; k < 3; ++k) letters.insert(letters.end(), {1, 2, 1});
  } else {
    int power = kind == FiberKind::E6Point ? 4 : 5;
    for (int k = 0; k < power; ++k) letters.insert(letters.end(), {1, 2});
  }
  for (auto it = conj.rbegin(); it != conj.rend(); ++it)
    letters.push_back(-*it);
  return Braid3::from_letters(letters);
}

namespace detail {

const std::vector<int>& epoint_conjugator(FiberKind kind, int index) {
  // Approach along the bold edge of index j rotates the standard power by
  // (s2 s1)^(2-j); the exponent only matters modulo 3.
  static const std::vector<int> e6[3] = {{-1, -2, -1, -2}, {}, {-1, -2}};
  static const std::vector<int> e8[3] = {{-1, -2, -1, -2}, {}, {-1, -2}};
  static const std::vector<int> e7w[3] = {{-1, -2, -1, -2}, {}, {-1, -2}};
  int i = mod3_index(index) - 1;
  switch (kind) {
    case FiberKind::E6Point:
      return e6[i];
    case FiberKind::E8Point:
      return e8[i];
    case FiberKind::E7White:
      return e7w[i];
    default:
      throw std::invalid_argument("no conjugator for this fiber kind");
  }
}

}  // namespace detail

namespace {

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
  return a * b * a.inverse() * b.inverse();
}

}  // namespace

InfinityPackage infinity_package(EType e_type, BranchChoice branch) {
  InfinityPackage pkg;
  pkg.e_type = e_type;
  pkg.branch = branch;
  FreeWord a1 = FreeWord::gen(1), a2 = FreeWord::gen(2), a3 = FreeWord::gen(3);
  FreeWord r = rho();
  switch (e_type) {
    case EType::E7: {
      FreeWord central =
          branch == BranchChoice::Alpha2 ? a2 * a2 * a3 : a2 * a3 * a3;
      pkg.relators_at_infinity.push_back(commutator(a2, a3));
      for (const FreeWord& g : {a1, a2, a3}) {
        pkg.relators_at_infinity.push_back(commutator(g, r.pow(3)));
        pkg.relators_at_infinity.push_back(commutator(g, central));
      }
      FreeWord target = branch == BranchChoice::Alpha2 ? a2 : a3;
      pkg.relators_at_infinity.push_back(r.pow(2) * a1 * target.inverse());
      pkg.m_infinity = Braid3::from_letters(
          {1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, -2, -2});
      break;
    }
    case EType::E8: {
      pkg.relators_at_infinity.push_back(r.pow(3) *
                                         (a1 * a2 * a2).inverse());
      pkg.relators_at_infinity.push_back(a3 *
                                         (a2 * a1 * a2.inverse()).inverse());
      pkg.relators_at_infinity.push_back(commutator(a1, a2.pow(3)));
      pkg.m_infinity = Braid3::from_letters(
          {1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, -1, -2, -1});
      break;
    }
    case EType::E6: {
      pkg.relators_at_infinity.push_back(r.pow(4) *
                                         (a2 * a3).pow(3).inverse());
      std::vector<int> letters;
      for (int k = 0; k < 12; ++k) letters.insert(letters.end(), {1, 2});
      for (int k = 0; k < 6; ++k) letters.push_back(-2);
      pkg.m_infinity = Braid3::from_letters(letters);
      pkg.m_inf_relations_implied = true;
      break;
    }
  }
  return pkg;
}

std::vector<FreeWord> inclusion_images(EType e_type) {
  FreeWord a1 = FreeWord::gen(1), a2 = FreeWord::gen(2), a3 = FreeWord::gen(3);
  switch (e_type) {
    case EType::E7:
      return {a1, a3, a1.conjugated_by((a2 * a3).inverse())};
    case EType::E8:
      return {a3.conjugated_by(a1 * a2), a1, a3};
    case EType::E6:
      return {a1.conjugated_by(rho()), a1,
              a1.conjugated_by((a2 * a3).inverse())};
  }
  return {};
}

std::vector<FreeWord> e7_b_basis_images() {
  FreeWord a1 = FreeWord::gen(1), a2 = FreeWord::gen(2), a3 = FreeWord::gen(3);
  FreeWord b1 =
      a1 * a2.inverse() * a1 * a3 * a1.inverse() * a2 * a1.inverse();
  FreeWord b2 = a1 * a2.inverse() * a1 * a2 * a1.inverse();
  FreeWord b3 = a1;
  return {b1, b2, b3};
}

}  // namespace sextic
