#include "xdeg/todd_coxeter.hpp"

#include <cstdlib>
#include <string>

#include "xdeg/error.hpp"

namespace xdeg {

std::int64_t tc_default_limit() {
  static const std::int64_t cached = [] {
    std::int64_t v = 2000000;
    if (const char* env = std::getenv("XDEG_MAX_COSETS")) {
      char* end = nullptr;
      long long parsed = std::strtoll(env, &end, 10);
      if (end && *end == '\0' && parsed > 0) v = parsed;
    }
    if (v < 16) v = 16;
    if (v > 1000000000) v = 1000000000;
    return v;
  }();
  return cached;
}

namespace {

constexpr std::int32_t UNDEF = -1;

int letter_col(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

struct Enumerator {
  int W;
  std::int64_t limit;
  std::vector<std::int32_t> tab;  // nalloc rows of W entries
  std::vector<std::int32_t> par;  // union-find, merge keeps the smaller id
  std::int64_t nalloc = 0;
  std::int64_t alloc_rows = 0;
  std::int64_t live = 0;
  std::vector<std::pair<std::int32_t, std::int32_t>> queue;
  std::size_t qhead = 0;

  explicit Enumerator(int ngens, std::int64_t lim) : W(2 * ngens), limit(lim) {
    new_coset();
  }

  std::int32_t rep(std::int32_t c) {
    while (par[c] != c) {
      par[c] = par[par[c]];
      c = par[c];
    }
    return c;
  }

  std::int32_t new_coset() {
    if (nalloc >= 3 * limit + 100000)
      fail(errc::enumeration_limit_exceeded, "coset table allocation runaway");
    if (nalloc == alloc_rows) {
      alloc_rows = alloc_rows < 1024 ? 1024 : alloc_rows * 2;
      tab.resize((std::size_t)alloc_rows * W, UNDEF);
      par.reserve(alloc_rows);
    }
    par.push_back((std::int32_t)nalloc);
    ++nalloc;
    ++live;
    return (std::int32_t)(nalloc - 1);
  }

  // Reads with resolution of entries that point at merged cosets.
  std::int32_t read(std::int32_t c, int col) {
    std::int32_t v = tab[(std::size_t)c * W + col];
    if (v != UNDEF && par[v] != v) {
      v = rep(v);
      tab[(std::size_t)c * W + col] = v;
    }
    return v;
  }

  std::int32_t define(std::int32_t c, int col) {
    std::int32_t d = new_coset();
    tab[(std::size_t)c * W + col] = d;
    tab[(std::size_t)d * W + (col ^ 1)] = c;
    return d;
  }

  void enqueue(std::int32_t a, std::int32_t b) { queue.emplace_back(a, b); }

  void process() {
    while (qhead < queue.size()) {
      std::int32_t a = rep(queue[qhead].first);
      std::int32_t b = rep(queue[qhead].second);
      ++qhead;
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      par[b] = a;
      --live;
      for (int col = 0; col < W; ++col) {
        std::int32_t v = tab[(std::size_t)b * W + col];
        tab[(std::size_t)b * W + col] = UNDEF;
        if (v == UNDEF) continue;
        v = rep(v);
        std::int32_t u = read(a, col);
        if (u == UNDEF) {
          tab[(std::size_t)a * W + col] = v;
          std::int32_t back = read(v, col ^ 1);
          if (back == UNDEF)
            tab[(std::size_t)v * W + (col ^ 1)] = a;
          else if (back != a)
            enqueue(back, a);
        } else if (u != v) {
          enqueue(u, v);
        }
      }
    }
    queue.clear();
    qhead = 0;
  }

  // Sets x.col = y, queuing coincidences when either cell already disagrees.
  void force_edge(std::int32_t x, int col, std::int32_t y) {
    std::int32_t vx = read(x, col);
    if (vx == UNDEF)
      tab[(std::size_t)x * W + col] = y;
    else if (vx != y)
      enqueue(vx, y);
    std::int32_t vy = read(y, col ^ 1);
    if (vy == UNDEF)
      tab[(std::size_t)y * W + (col ^ 1)] = x;
    else if (vy != x)
      enqueue(vy, x);
    process();
  }

  void scan(std::int32_t c, const std::vector<int>& rcols, bool fill) {
    int n = (int)rcols.size();
    std::int32_t f = c;
    int i = 0;
    while (i < n) {
      std::int32_t d = read(f, rcols[i]);
      if (d == UNDEF) break;
      f = d;
      ++i;
    }
    if (i == n) {
      if (f != c) {
        enqueue(f, c);
        process();
      }
      return;
    }
    std::int32_t b = c;
    int j = n - 1;
    while (j >= i) {
      std::int32_t d = read(b, rcols[j] ^ 1);
      if (d == UNDEF) break;
      b = d;
      --j;
    }
    if (j < i) {
      enqueue(f, b);
      process();
      return;
    }
    if (j > i) {
      if (!fill) return;
      while (j > i) {
        f = define(f, rcols[i]);
        ++i;
      }
    }
    force_edge(f, rcols[i], b);
  }

  // Deduction-only sweep over all live cosets; rescues space before the cap.
  void lookahead(const std::vector<std::vector<int>>& rels) {
    for (std::int64_t c = 0; c < nalloc; ++c) {
      if (par[c] != (std::int32_t)c) continue;
      for (const auto& r : rels) {
        scan((std::int32_t)c, r, false);
        if (par[c] != (std::int32_t)c) break;
      }
    }
  }

  void compact(std::int64_t& cursor) {
    std::vector<std::int32_t> newidx(nalloc);
    std::int32_t k = 0;
    std::int64_t new_cursor = 0;
    for (std::int64_t c = 0; c < nalloc; ++c) {
      if (c == cursor) new_cursor = k;
      newidx[c] = (par[c] == (std::int32_t)c) ? k++ : UNDEF;
    }
    if (cursor >= nalloc) new_cursor = k;
    for (std::int64_t c = 0; c < nalloc; ++c) {
      if (newidx[c] == UNDEF) continue;
      for (int col = 0; col < W; ++col) {
        std::int32_t v = tab[(std::size_t)c * W + col];
        if (v != UNDEF) v = newidx[rep(v)];
        tab[(std::size_t)newidx[c] * W + col] = v;
      }
    }
    nalloc = k;
    alloc_rows = k;
    live = k;
    par.resize(k);
    for (std::int32_t c = 0; c < k; ++c) par[c] = c;
    tab.resize((std::size_t)k * W, UNDEF);
    cursor = new_cursor;
  }
};

std::vector<int> relator_cols(const Word& w) {
  std::vector<int> cols;
  cols.reserve(w.size());
  for (int letter : w) cols.push_back(letter_col(letter));
  return cols;
}

void standardize_table(CosetTable& ct) {
  std::int64_t n = ct.ncosets;
  int W = ct.width();
  std::vector<std::int32_t> new_of(n, UNDEF);
  std::vector<std::int32_t> order;
  order.reserve(n);
  new_of[0] = 0;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::int32_t old = order[head];
    for (int col = 0; col < W; ++col) {
      std::int32_t v = ct.tab[(std::size_t)old * W + col];
      if (v == UNDEF) fail(errc::internal, "incomplete coset table");
      if (new_of[v] == UNDEF) {
        new_of[v] = (std::int32_t)order.size();
        order.push_back(v);
      }
    }
  }
  if ((std::int64_t)order.size() != n)
    fail(errc::internal, "coset table not transitive");
  std::vector<std::int32_t> fresh((std::size_t)n * W);
  for (std::int64_t c = 0; c < n; ++c)
    for (int col = 0; col < W; ++col)
      fresh[(std::size_t)new_of[c] * W + col] = new_of[ct.tab[(std::size_t)c * W + col]];
  ct.tab = std::move(fresh);
}

void verify_table(const CosetTable& ct, const std::vector<std::vector<int>>& rels,
                  const std::vector<std::vector<int>>& subcols) {
  std::int64_t n = ct.ncosets;
  int W = ct.width();
  for (std::int64_t c = 0; c < n; ++c)
    for (int col = 0; col < W; ++col) {
      std::int32_t d = ct.tab[(std::size_t)c * W + col];
      if (d < 0 || d >= n) fail(errc::internal, "coset table entry out of range");
      if (ct.tab[(std::size_t)d * W + (col ^ 1)] != (std::int32_t)c)
        fail(errc::internal, "coset table columns not inverse-consistent");
    }
  for (const auto& r : rels)
    for (std::int64_t c = 0; c < n; ++c) {
      std::int64_t f = c;
      for (int col : r) f = ct.tab[(std::size_t)f * W + col];
      if (f != c) fail(errc::internal, "relator open in completed coset table");
    }
  for (const auto& w : subcols) {
    std::int64_t f = 0;
    for (int col : w) f = ct.tab[(std::size_t)f * W + col];
    if (f != 0) fail(errc::internal, "subgroup generator open at coset 0");
  }
}

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgens,
                        TcOptions opts) {
  p.check();
  if (p.ngens <= 0) fail(errc::bad_input, "enumeration needs at least one generator");
  for (const Word& w : subgens)
    for (int letter : w) {
      int idx = letter > 0 ? letter : -letter;
      if (idx < 1 || idx > p.ngens)
        fail(errc::bad_input, "subgroup generator letter out of range");
    }
  std::int64_t limit = opts.max_cosets > 0 ? opts.max_cosets : tc_default_limit();

  std::vector<std::vector<int>> rels;
  for (const Word& r : p.relators) {
    Word red = cyclic_reduce(r);
    if (!red.empty()) rels.push_back(relator_cols(red));
  }
  std::vector<std::vector<int>> subcols;
  for (const Word& w : subgens) {
    Word red = free_reduce(w);
    if (!red.empty()) subcols.push_back(relator_cols(red));
  }

  Enumerator en(p.ngens, limit);
  for (const auto& w : subcols) en.scan(0, w, true);

  std::int64_t cursor = 0;
  std::int64_t margin = limit / 10 > 4096 ? limit / 10 : 4096;
  while (cursor < en.nalloc) {
    if (en.par[cursor] != (std::int32_t)cursor) {
      ++cursor;
      continue;
    }
    for (const auto& r : rels) {
      en.scan((std::int32_t)cursor, r, true);
      if (en.par[cursor] != (std::int32_t)cursor) break;
    }
    if (en.par[cursor] == (std::int32_t)cursor)
      for (int col = 0; col < en.W; ++col)
        if (en.read((std::int32_t)cursor, col) == UNDEF)
          en.define((std::int32_t)cursor, col);
    ++cursor;
    if (en.live >= limit) {
      en.lookahead(rels);
      en.process();
      en.compact(cursor);
      if (en.live >= limit - margin)
        fail(errc::enumeration_limit_exceeded,
             "coset enumeration exceeded " + std::to_string(limit) + " live cosets");
    } else if (en.nalloc > 8192 && en.nalloc - en.live > en.nalloc / 2) {
      en.compact(cursor);
    }
  }
  en.process();
  en.compact(cursor);

  CosetTable ct;
  ct.ngens = p.ngens;
  ct.ncosets = en.nalloc;
  ct.tab = std::move(en.tab);
  ct.tab.resize((std::size_t)ct.ncosets * ct.width());
  if (opts.standardize) standardize_table(ct);
  if (opts.verify) verify_table(ct, rels, subcols);
  return ct;
}

}  // namespace xdeg
