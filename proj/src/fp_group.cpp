#include "xdeg/fp_group.hpp"

#include <string>

#include "xdeg/error.hpp"

namespace xdeg {

std::int32_t evaluate_word(const FiniteGroup& g, const std::vector<std::int32_t>& gen_elements,
                           const Word& w) {
  std::int32_t acc = g.id;
  for (int letter : w) {
    int idx = (letter > 0 ? letter : -letter) - 1;
    if (idx < 0 || idx >= (int)gen_elements.size())
      fail(errc::bad_input, "word letter out of generator range");
    std::int32_t e = gen_elements[idx];
    acc = g.mul(acc, letter > 0 ? e : g.inverse(e));
  }
  return acc;
}

namespace {

// Words for every element by breadth-first search over the signed alphabet,
// letter order +1, -1, +2, -2, ...
std::vector<Word> bfs_words(const FiniteGroup& g, const std::vector<std::int32_t>& gens) {
  std::vector<Word> words(g.n);
  std::vector<char> seen(g.n, 0);
  std::vector<std::int32_t> order;
  order.reserve(g.n);
  seen[g.id] = 1;
  order.push_back(g.id);
  std::vector<int> letters;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    letters.push_back((int)k + 1);
    letters.push_back(-(int)k - 1);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::int32_t x = order[head];
    for (int letter : letters) {
      std::int32_t e = gens[(letter > 0 ? letter : -letter) - 1];
      std::int32_t y = g.mul(x, letter > 0 ? e : g.inverse(e));
      if (!seen[y]) {
        seen[y] = 1;
        words[y] = words[x];
        words[y].push_back(letter);
        order.push_back(y);
      }
    }
  }
  if ((std::int64_t)order.size() != g.n)
    fail(errc::internal, "generating set does not reach every element");
  return words;
}

GroupPresentation table_presentation(const FiniteGroup& g) {
  GroupPresentation gp;
  gp.table_based = true;
  gp.pres.ngens = g.n;
  gp.pres.label = g.label;
  for (std::int32_t i = 0; i < g.n; ++i) gp.gen_elements.push_back(i);
  gp.element_words.resize(g.n);
  for (std::int32_t x = 0; x < g.n; ++x) gp.element_words[x] = Word{x + 1};
  for (std::int32_t i = 0; i < g.n; ++i)
    for (std::int32_t j = 0; j < g.n; ++j) {
      Word r{i + 1, j + 1, -(g.mul(i, j) + 1)};
      r = free_reduce(std::move(r));
      if (!r.empty()) gp.pres.relators.push_back(std::move(r));
    }
  return gp;
}

void add_product_relators(const FiniteGroup& g, GroupPresentation& gp, int min_len, int max_len) {
  int d = (int)gp.gen_elements.size();
  std::vector<int> letters;
  for (int k = 0; k < d; ++k) {
    letters.push_back(k + 1);
    letters.push_back(-k - 1);
  }
  std::vector<Word> stack{Word{}};
  std::vector<std::int32_t> elems{g.id};
  // Iterative deepening over all signed words of length 1..max_len; relators are
  // emitted only for lengths >= min_len.
  std::vector<std::size_t> level_start{0};
  for (int len = 1; len <= max_len; ++len) {
    std::size_t begin = level_start.back(), end = stack.size();
    level_start.push_back(end);
    for (std::size_t s = begin; s < end; ++s)
      for (int letter : letters) {
        Word w = stack[s];
        w.push_back(letter);
        std::int32_t e = gp.gen_elements[(letter > 0 ? letter : -letter) - 1];
        std::int32_t v = g.mul(elems[s], letter > 0 ? e : g.inverse(e));
        if (len >= min_len) {
          Word rel = w;
          Word tail = word_inverse(gp.element_words[v]);
          rel.insert(rel.end(), tail.begin(), tail.end());
          rel = free_reduce(std::move(rel));
          if (!rel.empty()) gp.pres.relators.push_back(std::move(rel));
        }
        stack.push_back(std::move(w));
        elems.push_back(v);
      }
  }
}

}  // namespace

GroupPresentation presentation_of_group(const FiniteGroup& g, int table_threshold) {
  if (g.n <= table_threshold || g.n == 1) {
    GroupPresentation gp = table_presentation(g);
    CosetTable ct = todd_coxeter(gp.pres, {}, TcOptions{8 * (std::int64_t)g.n + 4096, true, false});
    if (ct.ncosets != g.n) fail(errc::presentation_unverified, "table presentation rejected");
    return gp;
  }
  GroupPresentation gp;
  gp.pres.label = g.label;
  gp.gen_elements = generating_set(g);
  gp.pres.ngens = (int)gp.gen_elements.size();
  gp.element_words = bfs_words(g, gp.gen_elements);

  for (std::size_t k = 0; k < gp.gen_elements.size(); ++k) {
    long long ord = g.element_order(gp.gen_elements[k]);
    gp.pres.relators.push_back(Word((std::size_t)ord, (int)k + 1));
  }
  add_product_relators(g, gp, 1, 2);

  auto verified = [&](const Presentation& p) {
    std::int64_t cap = 8 * (std::int64_t)g.n + 4096;
    try {
      CosetTable ct = todd_coxeter(p, {}, TcOptions{cap, true, false});
      return ct.ncosets == g.n;
    } catch (const error& e) {
      if (e.code() == errc::enumeration_limit_exceeded) return false;
      throw;
    }
  };
  if (!verified(gp.pres)) {
    add_product_relators(g, gp, 3, 3);
    if (!verified(gp.pres))
      fail(errc::presentation_unverified,
           "presentation of " + g.label + " does not re-enumerate to order " +
               std::to_string(g.n));
  }
  return gp;
}

FiniteGroup perm_group_from_cosets(const CosetTable& ct, const std::string& label,
                                   const GroupValidation& opts) {
  std::vector<std::vector<int>> perms;
  for (int k = 0; k < ct.ngens; ++k) {
    std::vector<int> p((std::size_t)ct.ncosets);
    for (std::int64_t c = 0; c < ct.ncosets; ++c) p[c] = ct.act_col(c, 2 * k);
    perms.push_back(std::move(p));
  }
  return group_from_permutations((int)ct.ncosets, perms, label, opts);
}

}  // namespace xdeg
