#include "dyer/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "dyer/errors.hpp"

namespace dyer {

Presentation presentation_of(const DyerGraph& g) {
  Presentation p;
  p.generators = g.names();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.f(v).is_infinite()) continue;
    Word w(g.f(v).finite_value(), Letter{v, false});
    p.relators.push_back(std::move(w));
  }
  for (const Edge& e : g.edges()) {
    // pi(u,v,m) pi(v,u,m)^-1 with pi the alternating word of m letters.
    Word w;
    for (int i = 0; i < e.m; ++i) w.push_back({i % 2 == 0 ? e.u : e.v, false});
    for (int i = e.m - 1; i >= 0; --i) w.push_back({i % 2 == 0 ? e.v : e.u, true});
    p.relators.push_back(std::move(w));
  }
  return p;
}

CosetTable::CosetTable(TableStatus status, int generator_count,
                       std::vector<int> col_fwd, std::vector<int> col_bwd,
                       std::vector<std::uint32_t> table,
                       std::uint64_t cosets_defined)
    : status_(status),
      generator_count_(generator_count),
      columns_(col_fwd.empty()
                   ? 0
                   : 1 + std::max(*std::max_element(col_fwd.begin(), col_fwd.end()),
                                  *std::max_element(col_bwd.begin(), col_bwd.end()))),
      col_fwd_(std::move(col_fwd)),
      col_bwd_(std::move(col_bwd)),
      table_(std::move(table)),
      coset_count_(cosets_defined) {}

std::uint32_t CosetTable::apply(std::uint32_t coset, int gen, bool inverse) const {
  if (status_ != TableStatus::Complete)
    throw ValidationError("coset table is incomplete");
  if (coset < 1 || coset > coset_count_)
    throw ValidationError("coset out of range");
  if (gen < 0 || gen >= generator_count_)
    throw ValidationError("generator out of range");
  int col = inverse ? col_bwd_[gen] : col_fwd_[gen];
  return table_[(coset - 1) * static_cast<std::size_t>(columns_) + col];
}

namespace {

// Mutable enumeration state for one run of todd_coxeter.
class Enumerator {
 public:
  Enumerator(const Presentation& p, std::uint64_t max_cosets)
      : max_cosets_(max_cosets) {
    const int g = static_cast<int>(p.generators.size());
    // f = 2 generators (relator of shape vv) act through one symmetric column.
    std::vector<bool> involution(g, false);
    for (const Word& w : p.relators)
      if (w.size() == 2 && w[0] == w[1] && !w[0].inverse)
        involution[w[0].gen] = true;
    col_fwd_.resize(g);
    col_bwd_.resize(g);
    int col = 0;
    for (int i = 0; i < g; ++i) {
      if (involution[i]) {
        col_fwd_[i] = col_bwd_[i] = col++;
      } else {
        col_fwd_[i] = col++;
        col_bwd_[i] = col++;
      }
    }
    columns_ = col;
    inv_col_.resize(columns_);
    for (int i = 0; i < g; ++i) {
      inv_col_[col_fwd_[i]] = col_bwd_[i];
      inv_col_[col_bwd_[i]] = col_fwd_[i];
    }
    for (const Word& w : p.relators) {
      std::vector<int> cols;
      cols.reserve(w.size());
      for (const Letter& l : w)
        cols.push_back(l.inverse ? col_bwd_[l.gen] : col_fwd_[l.gen]);
      relator_cols_.push_back(std::move(cols));
    }
  }

  CosetTable run(int generator_count) {
    alloc();  // coset 1
    for (std::uint32_t c = 1; !capped_ && c < next_id_; ++c) {
      if (!alive(c)) continue;
      for (const std::vector<int>& w : relator_cols_) {
        scan_and_fill(c, w);
        process_coincidences();
        if (capped_ || !alive(c)) break;
      }
      if (capped_ || !alive(c)) continue;
      for (int col = 0; col < columns_; ++col)
        if (!capped_ && raw(c, col) == 0) define(c, col);
    }
    if (capped_)
      return CosetTable(TableStatus::CapExceeded, generator_count, col_fwd_,
                        col_bwd_, {}, next_id_ - 1);
    // Compress live cosets to 1..N in discovery order.
    std::vector<std::uint32_t> new_id(next_id_, 0);
    std::uint32_t n = 0;
    for (std::uint32_t c = 1; c < next_id_; ++c)
      if (alive(c)) new_id[c] = ++n;
    std::vector<std::uint32_t> out(static_cast<std::size_t>(n) * columns_);
    for (std::uint32_t c = 1; c < next_id_; ++c) {
      if (!alive(c)) continue;
      for (int col = 0; col < columns_; ++col) {
        std::uint32_t e = entry(c, col);
        assert(e != 0 && "complete table has no holes");
        out[(new_id[c] - 1) * static_cast<std::size_t>(columns_) + col] = new_id[e];
      }
    }
    return CosetTable(TableStatus::Complete, generator_count, col_fwd_, col_bwd_,
                      std::move(out), n);
  }

 private:
  std::uint32_t find(std::uint32_t c) {
    while (parent_[c] != c) c = parent_[c] = parent_[parent_[c]];
    return c;
  }
  bool alive(std::uint32_t c) { return find(c) == c; }

  std::uint32_t& raw(std::uint32_t c, int col) {
    return table_[(c - 1) * static_cast<std::size_t>(columns_) + col];
  }
  // Entry with dead cosets resolved to their survivors; 0 when undefined.
  std::uint32_t entry(std::uint32_t c, int col) {
    std::uint32_t e = raw(c, col);
    return e == 0 ? 0 : find(e);
  }

  std::uint32_t alloc() {
    if (next_id_ > max_cosets_) {
      capped_ = true;
      return 0;
    }
    std::uint32_t c = next_id_++;
    parent_.push_back(c);
    table_.resize(table_.size() + columns_, 0);
    return c;
  }

  void define(std::uint32_t c, int col) {
    std::uint32_t d = alloc();
    if (capped_) return;
    raw(c, col) = d;
    raw(d, inv_col_[col]) = c;
  }

  // Records c.col = d, queueing a coincidence when the cell already holds a
  // different coset.
  void deduce(std::uint32_t c, int col, std::uint32_t d) {
    std::uint32_t& cell = raw(c, col);
    if (cell == 0) {
      cell = d;
      return;
    }
    std::uint32_t existing = find(cell);
    if (existing != find(d)) pending_.emplace_back(existing, find(d));
  }

  void scan_and_fill(std::uint32_t c, const std::vector<int>& w) {
    const int r = static_cast<int>(w.size());
    std::uint32_t f = c, b = c;
    int i = 0, j = r - 1;
    for (;;) {
      while (i <= j) {
        std::uint32_t e = entry(f, w[i]);
        if (e == 0) break;
        f = e;
        ++i;
      }
      if (i > j) {
        if (f != b) pending_.emplace_back(f, b);
        return;
      }
      while (j >= i) {
        std::uint32_t e = entry(b, inv_col_[w[j]]);
        if (e == 0) break;
        b = e;
        --j;
      }
      if (j < i) {
        pending_.emplace_back(f, b);
        return;
      }
      if (j == i) {
        deduce(f, w[i], b);
        deduce(b, inv_col_[w[i]], f);
        return;
      }
      define(f, w[i]);
      if (capped_) return;
    }
  }

  void process_coincidences() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      std::uint32_t surv = std::min(a, b), dead = std::max(a, b);
      parent_[dead] = surv;
      for (int col = 0; col < columns_; ++col) {
        std::uint32_t moved = raw(dead, col);
        if (moved == 0) continue;
        std::uint32_t& cell = raw(surv, col);
        if (cell == 0)
          cell = moved;
        else if (find(cell) != find(moved))
          pending_.emplace_back(find(cell), find(moved));
      }
    }
  }

  std::uint64_t max_cosets_;
  int columns_ = 0;
  std::vector<int> col_fwd_, col_bwd_, inv_col_;
  std::vector<std::vector<int>> relator_cols_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> parent_{0};  // index 0 unused
  std::uint32_t next_id_ = 1;
  bool capped_ = false;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> pending_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, std::uint64_t max_cosets) {
  if (max_cosets < 1) throw ValidationError("max_cosets must be >= 1");
  for (const Word& w : p.relators) {
    if (w.empty()) throw ValidationError("empty relator");
    for (const Letter& l : w)
      if (l.gen < 0 || l.gen >= static_cast<int>(p.generators.size()))
        throw ValidationError("relator references unknown generator");
  }
  if (p.generators.empty())
    return CosetTable(TableStatus::Complete, 0, {}, {}, {}, 1);
  Enumerator e(p, max_cosets);
  return e.run(static_cast<int>(p.generators.size()));
}

std::optional<std::uint64_t> brute_order(const DyerGraph& g,
                                         std::uint64_t max_cosets) {
  CosetTable t = todd_coxeter(presentation_of(g), max_cosets);
  if (!t.complete()) return std::nullopt;
  return t.coset_count();
}

std::uint64_t brute_centre_order(const CosetTable& t) {
  if (!t.complete()) throw ValidationError("coset table is incomplete");
  const std::uint32_t n = static_cast<std::uint32_t>(t.coset_count());
  const int gens = t.generator_count();
  if (gens == 0) return n;
  // left_mult[s][c] = coset of s * g_c, built by spreading s g_(c t) = (s g_c) t
  // along a breadth-first spanning of the table from the identity coset.
  std::vector<std::vector<std::uint32_t>> left_mult(
      gens, std::vector<std::uint32_t>(n + 1, 0));
  for (int s = 0; s < gens; ++s) left_mult[s][1] = t.apply(1, s);
  std::vector<std::uint32_t> queue{1};
  std::vector<bool> seen(n + 1, false);
  seen[1] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t c = queue[head];
    for (int gen = 0; gen < gens; ++gen) {
      for (bool inv : {false, true}) {
        std::uint32_t d = t.apply(c, gen, inv);
        if (seen[d]) continue;
        seen[d] = true;
        for (int s = 0; s < gens; ++s)
          left_mult[s][d] = t.apply(left_mult[s][c], gen, inv);
        queue.push_back(d);
      }
    }
  }
  std::uint64_t count = 0;
  for (std::uint32_t c = 1; c <= n; ++c) {
    bool central = true;
    for (int s = 0; s < gens && central; ++s)
      central = t.apply(c, s) == left_mult[s][c];
    count += central;
  }
  return count;
}

std::optional<GroupOrder> brute_abelianisation_order(const DyerGraph& g,
                                                     std::uint64_t max_cosets) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.f(v).is_infinite()) return GroupOrder::infinity();
  Presentation p = presentation_of(g);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      p.relators.push_back({{u, false}, {v, false}, {u, true}, {v, true}});
  CosetTable t = todd_coxeter(p, max_cosets);
  if (!t.complete()) return std::nullopt;
  return GroupOrder::finite(t.coset_count());
}

}  // namespace dyer
