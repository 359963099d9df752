#include "fp_group.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sextic {

void FpPresentation::normalize() {
  std::vector<FreeWord> out;
  std::set<std::vector<int>> seen;
  for (const FreeWord& r : relators) {
    FreeWord c = r.cyclically_reduced();
    if (c.empty()) continue;
    for (int l : c.letters())
      if (std::abs(l) > ngens)
        throw std::invalid_argument("relator letter out of range");
    if (seen.insert(c.letters()).second) out.push_back(std::move(c));
  }
  relators = std::move(out);
}

std::string FpPresentation::serialize() const {
  std::ostringstream os;
  os << "gens " << ngens << "\n";
  for (const FreeWord& r : relators) os << "rel " << r.str() << "\n";
  return os.str();
}

FpPresentation FpPresentation::parse(const std::string& text) {
  FpPresentation p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_gens = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "gens") {
      if (!(ls >> p.ngens) || p.ngens <= 0)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": bad generator count");
      have_gens = true;
    } else if (tok == "rel") {
      std::string rest;
      std::getline(ls, rest);
      p.relators.push_back(FreeWord::parse(rest));
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": unknown directive '" + tok + "'");
    }
  }
  if (!have_gens) throw std::invalid_argument("missing 'gens' header");
  p.normalize();
  return p;
}

std::size_t CosetTable::trace(std::size_t start, const FreeWord& w) const {
  std::size_t c = start;
  for (int l : w.letters()) {
    std::int32_t n = at(c, l);
    assert(n >= 0);
    c = static_cast<std::size_t>(n);
  }
  return c;
}

namespace {

class Enumerator {
 public:
  Enumerator(const FpPresentation& p, const std::vector<FreeWord>& subgens,
             const CosetEnumOptions& opts)
      : ngens_(p.ngens), ncols_(2 * p.ngens), opts_(opts) {
    for (const FreeWord& r : p.relators)
      if (!r.empty()) relators_.push_back(r.letters());
    for (const FreeWord& w : subgens)
      if (!w.empty()) subgens_.push_back(w.letters());
    new_coset();  // coset 0
  }

  bool run() {
    if (overflow_) return false;
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (const auto& w : subgens_) {
        if (!scan_and_fill(rep(0), w)) return false;
        dirty = dirty || changed_;
      }
      for (std::int32_t c = 0; c < static_cast<std::int32_t>(p_.size()); ++c) {
        if (rep(c) != c) continue;
        if (opts_.strategy == CosetEnumOptions::Strategy::RowFilling) {
          if (!fill_row(c)) return false;
          dirty = dirty || changed_;
        }
        for (const auto& r : relators_) {
          if (rep(c) != c) break;
          if (!scan_and_fill(c, r)) return false;
          dirty = dirty || changed_;
        }
        if (rep(c) != c) continue;
        if (!fill_row(c)) return false;
        dirty = dirty || changed_;
      }
    }
    return true;
  }

  CosetTable compact() const {
    CosetTable t;
    t.ngens = ngens_;
    std::vector<std::int32_t> relabel(p_.size(), -1);
    std::int32_t next = 0;
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(p_.size()); ++c)
      if (rep_const(c) == c) relabel[c] = next++;
    t.coset_count = static_cast<std::size_t>(next);
    t.tab.assign(t.coset_count * ncols_, -1);
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(p_.size()); ++c) {
      if (rep_const(c) != c) continue;
      for (int col = 0; col < ncols_; ++col) {
        std::int32_t d = tab_[static_cast<std::size_t>(c) * ncols_ + col];
        assert(d >= 0);
        t.tab[static_cast<std::size_t>(relabel[c]) * ncols_ + col] =
            relabel[rep_const(d)];
      }
    }
    return t;
  }

  std::size_t total_defined() const { return total_defined_; }

 private:
  int ngens_, ncols_;
  CosetEnumOptions opts_;
  std::vector<std::vector<int>> relators_, subgens_;
  std::vector<std::int32_t> tab_;
  mutable std::vector<std::int32_t> p_;  // union-find, smaller index survives
  std::vector<std::int32_t> queue_;
  std::size_t total_defined_ = 0;
  bool overflow_ = false;
  bool changed_ = false;

  static int col_of(int letter) {
    return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
  }

  std::int32_t rep(std::int32_t c) {
    while (p_[c] != c) {
      p_[c] = p_[p_[c]];
      c = p_[c];
    }
    return c;
  }
  std::int32_t rep_const(std::int32_t c) const {
    while (p_[c] != c) c = p_[c];
    return c;
  }

  std::int32_t raw(std::int32_t c, int col) const {
    return tab_[static_cast<std::size_t>(c) * ncols_ + col];
  }
  void put(std::int32_t c, int col, std::int32_t d) {
    tab_[static_cast<std::size_t>(c) * ncols_ + col] = d;
  }
  std::int32_t get(std::int32_t c, int col) {
    std::int32_t d = raw(c, col);
    return d < 0 ? -1 : rep(d);
  }

  std::int32_t new_coset() {
    if (total_defined_ >= opts_.max_cosets) {
      overflow_ = true;
      return -1;
    }
    std::int32_t n = static_cast<std::int32_t>(p_.size());
    p_.push_back(n);
    tab_.resize(tab_.size() + ncols_, -1);
    ++total_defined_;
    return n;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    p_[b] = a;
    queue_.push_back(b);
    changed_ = true;
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    merge(a, b);
    while (!queue_.empty()) {
      std::int32_t y = queue_.back();
      queue_.pop_back();
      for (int col = 0; col < ncols_; ++col) {
        std::int32_t d = raw(y, col);
        if (d < 0) continue;
        if (raw(d, col ^ 1) == y) put(d, col ^ 1, -1);
        std::int32_t mu = rep(y), nu = rep(d);
        std::int32_t mx = raw(mu, col);
        if (mx >= 0) {
          merge(rep(mx), nu);
        } else {
          std::int32_t nx = raw(nu, col ^ 1);
          if (nx >= 0) {
            merge(mu, rep(nx));
          } else {
            put(mu, col, nu);
            put(nu, col ^ 1, mu);
          }
        }
      }
    }
  }

  // Returns false on overflow.
  bool fill_row(std::int32_t c) {
    for (int col = 0; col < ncols_; ++col) {
      if (rep(c) != c) return true;
      if (raw(c, col) >= 0) continue;
      std::int32_t n = new_coset();
      if (n < 0) return false;
      put(c, col, n);
      put(n, col ^ 1, c);
      changed_ = true;
    }
    return true;
  }

  bool scan_and_fill(std::int32_t c, const std::vector<int>& w) {
    changed_ = false;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    std::int32_t f = rep(c), b = f;
    while (true) {
      while (i <= j) {
        std::int32_t d = get(f, col_of(w[i]));
        if (d < 0) break;
        f = d;
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i) {
        std::int32_t d = get(b, col_of(-w[j]));
        if (d < 0) break;
        b = d;
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (j == i) {
        put(f, col_of(w[i]), b);
        put(b, col_of(-w[i]), f);
        changed_ = true;
        return true;
      }
      std::int32_t n = new_coset();
      if (n < 0) return false;
      put(f, col_of(w[i]), n);
      put(n, col_of(-w[i]), f);
      changed_ = true;
      f = n;
      ++i;
    }
  }
};

}  // namespace

EnumResult coset_enumerate(const FpPresentation& p,
                           const std::vector<FreeWord>& subgroup_generators,
                           const CosetEnumOptions& opts) {
  EnumResult res;
  if (p.ngens <= 0) throw std::invalid_argument("presentation needs generators");
  Enumerator e(p, subgroup_generators, opts);
  if (!e.run()) {
    res.completed = false;
    res.total_defined = e.total_defined();
    return res;
  }
  res.completed = true;
  res.total_defined = e.total_defined();
  res.table = e.compact();
  return res;
}

bool table_is_closed(const CosetTable& t, const FpPresentation& p,
                     const std::vector<FreeWord>& subgroup_generators) {
  for (std::size_t c = 0; c < t.coset_count; ++c)
    for (int col = 0; col < 2 * t.ngens; ++col)
      if (t.tab[c * 2 * t.ngens + col] < 0) return false;
  for (std::size_t c = 0; c < t.coset_count; ++c)
    for (const FreeWord& r : p.relators)
      if (t.trace(c, r) != c) return false;
  for (const FreeWord& w : subgroup_generators)
    if (t.trace(0, w) != 0) return false;
  return true;
}

std::optional<std::size_t> group_order(const FpPresentation& p,
                                       const CosetEnumOptions& opts) {
  EnumResult r = coset_enumerate(p, {}, opts);
  if (!r.completed) return std::nullopt;
  return r.table.coset_count;
}

std::optional<std::size_t> element_order(const FpPresentation& p,
                                         const FreeWord& word,
                                         const CosetEnumOptions& opts) {
  auto total = group_order(p, opts);
  if (!total) return std::nullopt;
  if (word.empty()) return 1;
  EnumResult sub = coset_enumerate(p, {word}, opts);
  if (!sub.completed) return std::nullopt;
  return *total / sub.table.coset_count;
}

FpPresentation subgroup_presentation(const FpPresentation& p,
                                     const CosetTable& t) {
  std::size_t n = t.coset_count;
  int ncols = 2 * t.ngens;
  // Schreier tree by BFS; tree darts carry trivial generators.
  std::vector<char> tree_dart(n * ncols, 0);
  std::vector<char> visited(n, 0);
  visited[0] = 1;
  std::vector<std::size_t> bfs{0};
  for (std::size_t q = 0; q < bfs.size(); ++q) {
    std::size_t c = bfs[q];
    for (int col = 0; col < ncols; ++col) {
      auto d = static_cast<std::size_t>(t.tab[c * ncols + col]);
      if (!visited[d]) {
        visited[d] = 1;
        tree_dart[c * ncols + col] = 1;
        tree_dart[d * ncols + (col ^ 1)] = 1;
        bfs.push_back(d);
      }
    }
  }
  // Number the nontrivial Schreier generators (positive direction only).
  std::vector<int> sgen(n * t.ngens, 0);
  int next_gen = 0;
  for (std::size_t c = 0; c < n; ++c)
    for (int g = 1; g <= t.ngens; ++g) {
      int col = 2 * (g - 1);
      if (!tree_dart[c * ncols + col]) sgen[c * t.ngens + (g - 1)] = ++next_gen;
    }

  auto rewrite = [&](std::size_t start, const FreeWord& w) {
    std::vector<int> out;
    std::size_t cur = start;
    for (int l : w.letters()) {
      if (l > 0) {
        int id = sgen[cur * t.ngens + (l - 1)];
        if (id) out.push_back(id);
        cur = static_cast<std::size_t>(t.at(cur, l));
      } else {
        auto prev = static_cast<std::size_t>(t.at(cur, l));
        int id = sgen[prev * t.ngens + (-l - 1)];
        if (id) out.push_back(-id);
        cur = prev;
      }
    }
    return FreeWord(out);
  };

  FpPresentation sub;
  sub.ngens = next_gen;
  for (std::size_t c = 0; c < n; ++c)
    for (const FreeWord& r : p.relators) sub.relators.push_back(rewrite(c, r));
  sub.normalize();
  if (sub.ngens == 0) sub.ngens = 1;  // trivial subgroup still needs a slot
  return sub;
}

SmithResult smith_normal_form(const IntMat& a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  SmithResult res;
  res.d = a;
  res.u.assign(rows, std::vector<cpp_int>(rows, 0));
  res.v.assign(cols, std::vector<cpp_int>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) res.u[i][i] = 1;
  for (std::size_t i = 0; i < cols; ++i) res.v[i][i] = 1;
  auto& d = res.d;
  auto& u = res.u;
  auto& v = res.v;

  auto row_sub = [&](std::size_t i, std::size_t j, const cpp_int& q) {
    // row_i -= q * row_j
    for (std::size_t k = 0; k < cols; ++k) d[i][k] -= q * d[j][k];
    for (std::size_t k = 0; k < rows; ++k) u[i][k] -= q * u[j][k];
  };
  auto col_sub = [&](std::size_t i, std::size_t j, const cpp_int& q) {
    // col_i -= q * col_j
    for (std::size_t k = 0; k < rows; ++k) d[k][i] -= q * d[k][j];
    for (std::size_t k = 0; k < cols; ++k) v[k][i] -= q * v[k][j];
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    d[i].swap(d[j]);
    u[i].swap(u[j]);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows; ++k) std::swap(d[k][i], d[k][j]);
    for (std::size_t k = 0; k < cols; ++k) std::swap(v[k][i], v[k][j]);
  };
  auto row_neg = [&](std::size_t i) {
    for (auto& x : d[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Locate a pivot of least absolute value in the trailing submatrix.
    std::size_t pi = t, pj = t;
    cpp_int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (d[i][j] == 0) continue;
        cpp_int m = abs(d[i][j]);
        if (best == 0 || m < best) {
          best = m;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    row_swap(t, pi);
    col_swap(t, pj);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (d[i][t] == 0) continue;
      cpp_int q = d[i][t] / d[t][t];
      row_sub(i, t, q);
      if (d[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (d[t][j] == 0) continue;
      cpp_int q = d[t][j] / d[t][t];
      col_sub(j, t, q);
      if (d[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller entries appeared; re-pivot

    // The pivot must divide the whole trailing submatrix.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols && divides; ++j)
        if (d[i][j] % d[t][t] != 0) {
          row_sub(t, i, -1);  // fold the offending row in and retry
          divides = false;
        }
    if (!divides) continue;
    if (d[t][t] < 0) row_neg(t);
    ++t;
  }
  return res;
}

namespace {

AbelianInvariants invariants_from_matrix(const IntMat& m, std::size_t ngens) {
  AbelianInvariants inv;
  if (m.empty()) {
    inv.free_rank = static_cast<int>(ngens);
    return inv;
  }
  SmithResult s = smith_normal_form(m);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < std::min(m.size(), ngens); ++i) {
    if (s.d[i][i] == 0) break;
    ++rank;
    if (s.d[i][i] > 1) inv.torsion.push_back(s.d[i][i]);
  }
  inv.free_rank = static_cast<int>(ngens - rank);
  return inv;
}

}  // namespace

AbelianInvariants abelianization(const FpPresentation& p) {
  IntMat m;
  for (const FreeWord& r : p.relators) {
    std::vector<cpp_int> row(p.ngens, 0);
    for (int l : r.letters()) row[std::abs(l) - 1] += l > 0 ? 1 : -1;
    m.push_back(std::move(row));
  }
  return invariants_from_matrix(m, p.ngens);
}

bool is_perfect(const FpPresentation& p) {
  return abelianization(p).trivial();
}

std::string AbelianInvariants::str() const {
  if (trivial()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < free_rank; ++i) {
    if (!first) os << " x ";
    os << "Z";
    first = false;
  }
  for (const cpp_int& t : torsion) {
    if (!first) os << " x ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

std::vector<cpp_int> AbelianInvariants::primary() const {
  std::vector<cpp_int> out;
  for (cpp_int t : torsion) {
    for (cpp_int f = 2; f * f <= t; ++f) {
      if (t % f != 0) continue;
      cpp_int pw = 1;
      while (t % f == 0) {
        pw *= f;
        t /= f;
      }
      out.push_back(pw);
    }
    if (t > 1) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Class2Data class2_quotient(const FpPresentation& p) {
  int n = p.ngens;
  int m = n * (n - 1) / 2;
  auto pair_col = [n](int i, int j) {  // requires 0 <= i < j < n
    // index of c_{ij} among pairs ordered (0,1), (0,2), ..., (1,2), ...
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  };

  IntMat full;  // rows over Z^{n+m}
  IntMat erows;
  for (const FreeWord& r : p.relators) {
    std::vector<cpp_int> e(n, 0), f(m, 0);
    for (int l : r.letters()) {
      int g = std::abs(l) - 1;
      int eps = l > 0 ? 1 : -1;
      // moving a_g^eps left past everything larger collected so far
      for (int k = g + 1; k < n; ++k)
        if (e[k] != 0) f[pair_col(g, k)] -= e[k] * eps;
      e[g] += eps;
    }
    std::vector<cpp_int> row;
    row.reserve(n + m);
    row.insert(row.end(), e.begin(), e.end());
    row.insert(row.end(), f.begin(), f.end());
    full.push_back(std::move(row));
    erows.push_back(std::move(e));
  }
  // Commutator consequences [relator, a_k]: pure c-part rows.
  for (const auto& e : erows)
    for (int k = 0; k < n; ++k) {
      std::vector<cpp_int> row(n + m, 0);
      bool nonzero = false;
      for (int i = 0; i < n; ++i) {
        if (i == k || e[i] == 0) continue;
        if (i < k) {
          row[n + pair_col(i, k)] += e[i];
        } else {
          row[n + pair_col(k, i)] -= e[i];
        }
        nonzero = true;
      }
      if (nonzero) full.push_back(std::move(row));
    }

  // Hermite-style elimination on the first n columns; remaining rows with a
  // zero head span (row lattice) ∩ ({0} x Z^m).
  std::size_t r0 = 0;
  for (int col = 0; col < n; ++col) {
    while (true) {
      std::size_t piv = full.size();
      cpp_int best = 0;
      for (std::size_t i = r0; i < full.size(); ++i) {
        if (full[i][col] == 0) continue;
        cpp_int mabs = abs(full[i][col]);
        if (best == 0 || mabs < best) {
          best = mabs;
          piv = i;
        }
      }
      if (piv == full.size()) break;
      std::swap(full[r0], full[piv]);
      bool clean = true;
      for (std::size_t i = r0 + 1; i < full.size(); ++i) {
        if (full[i][col] == 0) continue;
        cpp_int q = full[i][col] / full[r0][col];
        for (int k = 0; k < n + m; ++k) full[i][k] -= q * full[r0][k];
        if (full[i][col] != 0) clean = false;
      }
      if (clean) {
        ++r0;
        break;
      }
    }
  }
  IntMat commutant_rows;
  for (std::size_t i = r0; i < full.size(); ++i)
    commutant_rows.emplace_back(full[i].begin() + n, full[i].end());

  Class2Data out;
  out.abelianization = abelianization(p);
  out.commutant = invariants_from_matrix(commutant_rows, m);

  // Orders of the pairing values [a_i, a_j] in Z^m / commutant lattice.
  out.pairing_order.assign(n, std::vector<cpp_int>(n, 1));
  if (m > 0) {
    SmithResult s;
    if (commutant_rows.empty()) {
      s.d.clear();
      s.v.assign(m, std::vector<cpp_int>(m, 0));
      for (int i = 0; i < m; ++i) s.v[i][i] = 1;
    } else {
      s = smith_normal_form(commutant_rows);
    }
    std::size_t rank = 0;
    std::vector<cpp_int> diag(m, 0);
    for (std::size_t i = 0; i < commutant_rows.size() &&
                            i < static_cast<std::size_t>(m);
         ++i) {
      if (s.d[i][i] == 0) break;
      diag[i] = s.d[i][i];
      ++rank;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        int a = std::min(i, j), b = std::max(i, j);
        int colid = pair_col(a, b);
        // coordinates of ±c_{ab} after the change of basis: row vector * V
        cpp_int order = 1;
        bool infinite = false;
        for (int k = 0; k < m; ++k) {
          cpp_int comp = s.v[colid][k];
          if (comp == 0) continue;
          if (diag[k] == 0) {
            infinite = true;
            break;
          }
          cpp_int dk = diag[k];
          cpp_int cm = ((comp % dk) + dk) % dk;
          if (cm == 0) continue;
          cpp_int contrib = dk / gcd(dk, cm);
          order = order / gcd(order, contrib) * contrib;
        }
        out.pairing_order[i][j] = infinite ? 0 : order;
      }
  }
  return out;
}

}  // namespace sextic
