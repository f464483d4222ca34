#include "kancalc/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#ifdef __SSSE3__
#include <immintrin.h>
#endif

namespace kancalc {

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix apply_perm(const Matrix& m, const std::vector<int>& p) {
  int n = (int)m.size();
  Matrix out(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out[a][b] = m[p[a]][p[b]];
  return out;
}

Matrix canonical_form(const Matrix& m) {
  int n = (int)m.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Matrix best = m;
  while (std::next_permutation(perm.begin(), perm.end())) {
    Matrix cand = apply_perm(m, perm);
    if (cand < best) best = cand;
  }
  return best;
}

} // namespace

std::vector<Poset> all_posets(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  if (n == 0) return {Poset::validated({}, {})};

  // Every poset has a linear extension, so every isomorphism class shows up
  // among the relations contained in the natural order on 0..n-1.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::set<Matrix> seen;
  for (long long mask = 0; mask < (1LL << pairs.size()); ++mask) {
    Matrix leq(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) leq[i][i] = 1;
    for (size_t k = 0; k < pairs.size(); ++k)
      if (mask & (1LL << k)) leq[pairs[k].first][pairs[k].second] = 1;
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = 0; b < n && transitive; ++b)
        for (int c = 0; c < n; ++c)
          if (leq[a][b] && leq[b][c] && !leq[a][c]) {
            transitive = false;
            break;
          }
    if (!transitive) continue;
    seen.insert(canonical_form(leq));
  }

  std::vector<Poset> out;
  out.reserve(seen.size());
  for (const auto& m : seen) out.push_back(Poset::validated(names, m));
  return out;
}

std::vector<Poset> dim1_shapes(int max_elements) {
  std::vector<Poset> out;
  for (int n = 0; n <= max_elements; ++n)
    for (auto& p : all_posets(n))
      if (dimension(p) <= 1) out.push_back(std::move(p));
  return out;
}

namespace {

// Block layout of a category skeleton: morphisms grouped by (source,
// target) in row-major block order, identities first in diagonal blocks.
struct Layout {
  int n = 0, M = 0;
  std::vector<std::vector<int>> h;      // hom sizes
  std::vector<std::vector<int>> start;  // block offsets
  std::vector<int> msrc, mtgt, idm;
};

Layout make_layout(int n, const std::vector<std::vector<int>>& h) {
  Layout L;
  L.n = n;
  L.h = h;
  L.start.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      L.start[a][b] = L.M;
      L.M += h[a][b];
    }
  L.msrc.resize(L.M);
  L.mtgt.resize(L.M);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < h[a][b]; ++k) {
        L.msrc[L.start[a][b] + k] = a;
        L.mtgt[L.start[a][b] + k] = b;
      }
  L.idm.resize(n);
  for (int a = 0; a < n; ++a) L.idm[a] = L.start[a][a];
  return L;
}

void block_perms(int size, bool fix_first, std::vector<std::vector<int>>& out) {
  std::vector<int> p(size);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (fix_first && size > 0 && p[0] != 0) continue;
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

/// All morphism relabelings respecting the layout (object permutations
/// stabilizing h combined with in-block permutations fixing identities),
/// excluding the identity relabeling.
std::vector<std::vector<int>> layout_group(const Layout& L) {
  std::vector<std::vector<int>> out;
  std::vector<int> sigma(L.n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> ident(L.M);
  std::iota(ident.begin(), ident.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < L.n && ok; ++a)
      for (int b = 0; b < L.n; ++b)
        if (L.h[sigma[a]][sigma[b]] != L.h[a][b]) {
          ok = false;
          break;
        }
    if (!ok) continue;
    // choose one permutation per block
    std::vector<std::pair<int, int>> blocks;
    std::vector<std::vector<std::vector<int>>> choices;
    for (int a = 0; a < L.n; ++a)
      for (int b = 0; b < L.n; ++b)
        if (L.h[a][b] > 0) {
          blocks.emplace_back(a, b);
          choices.emplace_back();
          block_perms(L.h[a][b], a == b, choices.back());
        }
    std::vector<int> pick(blocks.size(), 0);
    while (true) {
      std::vector<int> pi(L.M);
      for (size_t bi = 0; bi < blocks.size(); ++bi) {
        auto [a, b] = blocks[bi];
        const auto& rho = choices[bi][pick[bi]];
        for (int k = 0; k < L.h[a][b]; ++k)
          pi[L.start[a][b] + k] = L.start[sigma[a]][sigma[b]] + rho[k];
      }
      if (pi != ident) out.push_back(std::move(pi));
      size_t bi = 0;
      while (bi < blocks.size() && ++pick[bi] == (int)choices[bi].size()) pick[bi++] = 0;
      if (bi == blocks.size()) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

struct CatSearch {
  Layout L;
  int M = 0;
  std::vector<std::vector<int>> G, Gi;     // relabelings and their inverses
  std::vector<int> T;                      // T[g*M+f] = g∘f; -1 open, -2 incomposable
  std::vector<std::vector<int>> row_cols;  // composable f per row g, ascending
  std::vector<std::pair<int, int>> trail;  // (position, prior first occurrence of value)
  std::vector<int> queue_;
  std::vector<int> firstpos_;       // least set position holding each value, M*M if none
  std::vector<std::vector<int>> occ_;  // set positions holding each value
  const std::function<bool(const CatPtr&)>* emit = nullptr;
  bool stop = false;

  bool set_entry(int g, int f, int v) {
    int p = g * M + f;
    int cur = T[p];
    if (cur == v) return true;
    if (cur != -1) return false;
    T[p] = v;
    if (simd_) keys_[16 * g + f] = (uint8_t)(v + 2);
    occ_[v].push_back(p);
    trail.emplace_back(p, -3);
    if (p < firstpos_[v]) {
      trail.back().second = firstpos_[v];
      firstpos_[v] = p;
    }
    queue_.push_back(p);
    return true;
  }

  bool unify(int g1, int f1, int g2, int f2) {
    int a = T[g1 * M + f1], b = T[g2 * M + f2];
    if (a >= 0 && b >= 0) return a == b;
    if (a >= 0) return set_entry(g2, f2, a);
    if (b >= 0) return set_entry(g1, f1, b);
    return true;  // retried once either side appears
  }

  // Associativity closure from the newly set entries; every chain a, b, c
  // with T[T[c][b]][a] = T[c][T[b][a]] is revisited whenever one of its
  // four entries appears, so deferred constraints are never lost.
  bool propagate() {
    while (!queue_.empty()) {
      int p = queue_.back();
      queue_.pop_back();
      int g = p / M, f = p % M;
      int v = T[p];
      const int sf = L.msrc[f], tg = L.mtgt[g];
      for (int k = 0; k < M; ++k) {
        if (L.mtgt[k] == sf) {  // (g,f) inner: chains k, f, g
          int t1 = T[f * M + k];
          if (t1 >= 0 && !unify(v, k, g, t1)) return false;
        }
        if (L.msrc[k] == tg) {  // (g,f) inner: chains f, g, k
          int t2 = T[k * M + g];
          if (t2 >= 0 && !unify(k, v, t2, f)) return false;
        }
      }
      const int tf = L.mtgt[f], sg = L.msrc[g];
      // other occurrences of the same value, via the occurrence lists;
      // entries appended mid-loop get their own queue trigger
      for (size_t idx = 0; idx < occ_[g].size(); ++idx) {
        int c = occ_[g][idx] / M, b = occ_[g][idx] % M;
        if (L.msrc[b] != tf) continue;  // (g,f) as T[c][b]∘-: chains f, b, c
        int t = T[b * M + f];
        if (t >= 0 && !unify(g, f, c, t)) return false;
      }
      for (size_t idx = 0; idx < occ_[f].size(); ++idx) {
        int b = occ_[f][idx] / M, a = occ_[f][idx] % M;
        if (L.mtgt[b] != sg) continue;  // (g,f) as g∘T[b][a]: chains a, b, g
        int t = T[g * M + b];
        if (t >= 0 && !unify(t, a, g, f)) return false;
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail.size() > mark) {
      auto [p, old] = trail.back();
      trail.pop_back();
      if (old != -3) firstpos_[T[p]] = old;
      occ_[T[p]].pop_back();
      T[p] = -1;
      if (simd_) keys_[16 * (p / M) + p % M] = 1;
    }
    queue_.clear();
  }

  bool occurs_before(int g, int f, int v) const { return firstpos_[v] < g * M + f; }

  std::vector<int> column_sig(int g, int f, int v) const {
    std::vector<int> sig;
    sig.reserve(g + 1);
    for (int r = 0; r <= g; ++r) {
      int e = T[r * M + v];
      if (e == -2) continue;
      if (r == g && v >= f) break;
      sig.push_back(e);
    }
    return sig;
  }

  bool assoc_ok_final() const {
    for (int f = 0; f < M; ++f)
      for (int g = 0; g < M; ++g) {
        if (L.mtgt[f] != L.msrc[g]) continue;
        for (int k = 0; k < M; ++k) {
          if (L.mtgt[g] != L.msrc[k]) continue;
          if (T[k * M + T[g * M + f]] != T[T[k * M + g] * M + f]) return false;
        }
      }
    return true;
  }

  void finish() {
    if (!assoc_ok_final()) return;
    std::vector<std::string> objs;
    for (int a = 0; a < L.n; ++a) objs.push_back("o" + std::to_string(a));
    std::vector<Mor> mors;
    for (int m = 0; m < L.M; ++m)
      mors.push_back({"m" + std::to_string(m), L.msrc[m], L.mtgt[m]});
    std::vector<std::vector<int>> table(L.M, std::vector<int>(L.M, -1));
    for (int g = 0; g < L.M; ++g)
      for (int f = 0; f < L.M; ++f)
        if (T[g * M + f] >= 0) table[g][f] = T[g * M + f];
    auto cat = make_cat(FinCat::validated_unsorted(objs, mors, L.idm, table));
    if (!(*emit)(cat)) stop = true;
  }

  struct Sleeper {
    int i, r;  // relabeling index and the next permuted row to compare
  };
  // Relabelings not yet retired wait in the bucket of the first row where
  // a further comparison becomes possible: comparing row r of the permuted
  // table needs rows r and Gi[i][r] of T, so a relabeling about to compare
  // row r sleeps until row max(r, Gi[i][r]) completes.
  std::vector<std::vector<Sleeper>> bucket_;
  // Row keys for the vectorized comparison: 16 bytes per row, entry f of
  // row g at keys_[16g + f], encoded 0 incomposable, 1 open, v + 2 set.
  // Per relabeling, 16 shuffle bytes (gib_) and a 16-byte value map (gpb_)
  // so the permuted row is two pshufbs away; usable while M <= 14.
  bool simd_ = false;
  std::vector<uint8_t> keys_, gib_, gpb_;

  int wake_row(int i, int r) const { return r > Gi[i][r] ? r : Gi[i][r]; }

  // Completed row g: each relabeling woken here is compared row by row for
  // as long as the rows its inverse needs are filled; a smaller permuted
  // table prunes the branch, a larger one retires the relabeling for good,
  // equality so far reschedules it for the next row it is blocked on.
  void row_done(int g) {
    std::vector<Sleeper> cur;
    cur.swap(bucket_[g]);
    std::vector<int> pushed;
    pushed.reserve(cur.size());
    bool prune = false;
    for (size_t ci = 0; ci < cur.size() && !prune; ++ci) {
      int i = cur[ci].i;
      int r = cur[ci].r;
      int cmp = 0;
      const int* gi = Gi[i].data();
#ifdef __SSSE3__
      if (simd_) {
        const __m128i giv = _mm_loadu_si128((const __m128i*)&gib_[16 * i]);
        const __m128i lut = _mm_loadu_si128((const __m128i*)&gpb_[16 * i]);
        while (r <= g && gi[r] <= g) {
          __m128i mine = _mm_loadu_si128((const __m128i*)&keys_[16 * r]);
          __m128i src = _mm_loadu_si128((const __m128i*)&keys_[16 * gi[r]]);
          __m128i other = _mm_shuffle_epi8(lut, _mm_shuffle_epi8(src, giv));
          int neq = _mm_movemask_epi8(_mm_cmpeq_epi8(other, mine)) ^ 0xFFFF;
          if (neq) {
            int f = __builtin_ctz(neq);
            alignas(16) uint8_t ob[16];
            _mm_store_si128((__m128i*)ob, other);
            cmp = ob[f] < keys_[16 * r + f] ? -1 : 1;
            break;
          }
          ++r;
        }
      } else
#endif
      {
        const int* gp = G[i].data();
        while (r <= g && gi[r] <= g) {
          const int* mine_row = T.data() + r * M;
          const int* other_row = T.data() + gi[r] * M;
          for (int f : row_cols[r]) {
            int mine = mine_row[f];
            int other = gp[other_row[gi[f]]];
            if (other != mine) {
              cmp = other < mine ? -1 : 1;
              break;
            }
          }
          if (cmp != 0) break;
          ++r;
        }
      }
      if (cmp < 0) {
        prune = true;  // a smaller relabeling exists
      } else if (cmp == 0 && r < M) {
        int wake = wake_row(i, r);
        bucket_[wake].push_back({i, r});
        pushed.push_back(wake);
      }
      // cmp > 0 retires the relabeling for this whole subtree
    }
    if (!prune) {
      if (g + 1 == L.M)
        finish();
      else
        fill_row(g + 1, 0);
    }
    for (auto it = pushed.rbegin(); it != pushed.rend(); ++it) bucket_[*it].pop_back();
    bucket_[g].swap(cur);
  }

  void fill_row(int g, size_t k) {
    if (stop) return;
    const auto& cols = row_cols[g];
    if (k == cols.size()) {
      row_done(g);
      return;
    }
    int f = cols[k];
    if (T[g * M + f] >= 0) {
      fill_row(g, k + 1);
      return;
    }
    int a = L.msrc[f], b = L.mtgt[g];
    int s0 = L.start[a][b];
    std::vector<std::vector<int>> tried;  // signatures of fresh values tried
    for (int v = s0; v < s0 + L.h[a][b] && !stop; ++v) {
      // fresh values (untouched row, no prior occurrence) with the same
      // column so far are interchangeable; only the least one is tried
      if (v > g && !occurs_before(g, f, v)) {
        auto sig = column_sig(g, f, v);
        bool dup = false;
        for (auto& s : tried)
          if (s == sig) {
            dup = true;
            break;
          }
        if (dup) continue;
        tried.push_back(std::move(sig));
      }
      size_t mark = trail.size();
      queue_.clear();
      if (set_entry(g, f, v) && propagate()) fill_row(g, k + 1);
      undo(mark);
    }
  }

  void run() {
    M = L.M;
    T.assign(M * M, -2);
    row_cols.assign(L.M, {});
    for (int g = 0; g < L.M; ++g)
      for (int f = 0; f < L.M; ++f)
        if (L.mtgt[f] == L.msrc[g]) {
          T[g * M + f] = -1;
          row_cols[g].push_back(f);
        }
    for (int g = 0; g < L.M; ++g) T[g * M + L.idm[L.msrc[g]]] = g;
    for (int f = 0; f < L.M; ++f) T[L.idm[L.mtgt[f]] * M + f] = f;
    firstpos_.assign(L.M, M * M);
    occ_.assign(L.M, {});
    for (int p = 0; p < M * M; ++p)
      if (T[p] >= 0) {
        if (p < firstpos_[T[p]]) firstpos_[T[p]] = p;
        occ_[T[p]].push_back(p);
      }
    if (L.M == 0) {
      finish();
      return;
    }
    int H = (int)G.size();
    bucket_.assign(M, {});
    for (int i = 0; i < H; ++i) bucket_[wake_row(i, 0)].push_back({i, 0});
    simd_ = (M <= 14);  // encoded values and shuffle indices fit one lane
    keys_.assign(16 * M, 0);
    for (int g = 0; g < M; ++g)
      for (int f = 0; f < M && f < 16; ++f) {
        int e = T[g * M + f];
        keys_[16 * g + f] = (uint8_t)(e == -2 ? 0 : e == -1 ? 1 : e + 2);
      }
    gib_.assign(16 * H, 0x80);  // lanes past M shuffle in zero on both sides
    gpb_.assign(16 * H, 0);
    for (int i = 0; i < H; ++i) {
      for (int f = 0; f < M && f < 16; ++f) gib_[16 * i + f] = (uint8_t)Gi[i][f];
      gpb_[16 * i + 0] = 0;
      gpb_[16 * i + 1] = 1;
      for (int v = 0; v + 2 < 16 && v < M; ++v) gpb_[16 * i + v + 2] = (uint8_t)(G[i][v] + 2);
    }
    fill_row(0, 0);
  }
};

bool h_canonical(int n, const std::vector<std::vector<int>>& h) {
  std::vector<int> flat;
  for (auto& row : h) flat.insert(flat.end(), row.begin(), row.end());
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    std::vector<int> cand;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) cand.push_back(h[sigma[a]][sigma[b]]);
    if (cand < flat) return false;
  }
  return true;
}

void enum_h(int n, int max_mor, int idx, int sum, std::vector<std::vector<int>>& h,
            const std::function<bool(const std::vector<std::vector<int>>&)>& fn, bool& stop) {
  if (stop) return;
  if (idx == n * n) {
    if (h_canonical(n, h) && !fn(h)) stop = true;
    return;
  }
  int a = idx / n, b = idx % n;
  int reserved = 0;  // later diagonal cells still need one identity each
  for (int d = 0; d < n; ++d)
    if (d * n + d > idx) ++reserved;
  int lo = (a == b) ? 1 : 0;
  for (int v = lo; sum + v + reserved <= max_mor; ++v) {
    h[a][b] = v;
    enum_h(n, max_mor, idx + 1, sum + v, h, fn, stop);
    if (stop) break;
  }
  h[a][b] = 0;
}

} // namespace

void for_each_fincat(int max_obj, int max_mor,
                     const std::function<bool(const CatPtr&)>& fn) {
  if (max_obj >= 0 && !fn(empty_cat())) return;
  for (int n = 1; n <= max_obj && n <= max_mor; ++n) {
    bool stop = false;
    std::vector<std::vector<int>> h(n, std::vector<int>(n, 0));
    enum_h(n, max_mor, 0, 0, h,
           [&](const std::vector<std::vector<int>>& hm) {
             CatSearch s;
             s.L = make_layout(n, hm);
             s.G = layout_group(s.L);
             s.Gi.clear();
             for (auto& pi : s.G) {
               std::vector<int> inv(pi.size());
               for (size_t m = 0; m < pi.size(); ++m) inv[pi[m]] = (int)m;
               s.Gi.push_back(std::move(inv));
             }
             s.emit = &fn;
             s.run();
             return !s.stop;
           },
           stop);
    if (stop) return;
  }
}

} // namespace kancalc

