#include "fpforge/coset.hpp"

#include <algorithm>
#include <deque>

#include "fpforge/error.hpp"

namespace fpforge {

namespace {

// Letters: generator i forward = 2i, inverse = 2i+1; inv(l) = l ^ 1.
std::vector<int> word_letters(const Word& w) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(w.length()));
  for (const Letter& l : w.letters()) out.push_back(2 * l.gen + (l.sign < 0 ? 1 : 0));
  return out;
}

struct TableFull {};

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgens, std::size_t limit,
             CosetStrategy strategy)
      : ncols_(2 * p.gens()), limit_(limit), strategy_(strategy) {
    if (limit == 0) throw ValidationError("todd_coxeter: limit must be positive");
    for (const Word& r : p.relators()) {
      std::vector<int> letters = word_letters(r);
      if (!letters.empty()) relators_.push_back(std::move(letters));
    }
    for (const Word& s : subgens) {
      if (s.max_gen() >= p.gens())
        throw ValidationError("todd_coxeter: subgroup generator outside alphabet");
      subgens_.push_back(word_letters(s));
    }
    if (strategy_ == CosetStrategy::Felsch) build_rotations();
    new_coset();  // coset 0
  }

  CosetTable run(int gens) {
    CosetTable result;
    result.limit = limit_;
    bool ok = strategy_ == CosetStrategy::HLT ? run_hlt() : run_felsch();
    if (!ok) {
      result.status = CosetTable::Status::Exhausted;
      result.cosets = nalive_;
      return result;
    }
    standardize();
    result.status = CosetTable::Status::Complete;
    result.cosets = nalive_;
    result.action.assign(static_cast<std::size_t>(gens), {});
    for (int g = 0; g < gens; ++g) {
      auto& col = result.action[static_cast<std::size_t>(g)];
      col.resize(nalive_);
      for (std::size_t c = 0; c < nalive_; ++c) col[c] = at(static_cast<int>(c), 2 * g);
    }
    return result;
  }

 private:
  int ncols_;
  std::size_t limit_;
  CosetStrategy strategy_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgens_;

  std::vector<int> table_;  // flat rows of ncols_
  std::vector<int> p_;      // union-find toward smaller indices
  std::size_t nalive_ = 0;
  std::deque<int> queue_;
  std::vector<std::pair<int, int>> deductions_;

  // Virtual rotations for Felsch: (relator array, offset); arrays include
  // the inverse of every relator.
  std::vector<std::vector<int>> felsch_words_;
  std::vector<std::vector<std::pair<int, int>>> rotations_by_letter_;

  int rows() const { return static_cast<int>(p_.size()); }
  int& at(int c, int l) { return table_[static_cast<std::size_t>(c) * ncols_ + l]; }
  bool alive(int c) const { return p_[static_cast<std::size_t>(c)] == c; }

  int rep(int c) {
    int r = c;
    while (p_[static_cast<std::size_t>(r)] != r) r = p_[static_cast<std::size_t>(r)];
    while (p_[static_cast<std::size_t>(c)] != r) {
      int next = p_[static_cast<std::size_t>(c)];
      p_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  int new_coset() {
    if (nalive_ >= limit_) throw TableFull{};
    int c = rows();
    p_.push_back(c);
    table_.resize(table_.size() + static_cast<std::size_t>(ncols_), -1);
    ++nalive_;
    return c;
  }

  void set_entry(int a, int l, int b) {
    at(a, l) = b;
    at(b, l ^ 1) = a;
    if (strategy_ == CosetStrategy::Felsch) {
      deductions_.emplace_back(a, l);
      deductions_.emplace_back(b, l ^ 1);
    }
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    int mu = std::min(a, b), nu = std::max(a, b);
    p_[static_cast<std::size_t>(nu)] = mu;
    --nalive_;
    queue_.push_back(nu);
  }

  std::size_t coincidence(int a, int b) {
    std::size_t merged = 0;
    merge(a, b);
    while (!queue_.empty()) {
      int gamma = queue_.front();
      queue_.pop_front();
      ++merged;
      for (int x = 0; x < ncols_; ++x) {
        int delta = at(gamma, x);
        if (delta < 0) continue;
        at(delta, x ^ 1) = -1;
        int mu = rep(gamma), nu = rep(delta);
        if (at(mu, x) >= 0)
          merge(nu, at(mu, x));
        else if (at(nu, x ^ 1) >= 0)
          merge(mu, at(nu, x ^ 1));
        else
          set_entry(mu, x, nu);
      }
    }
    return merged;
  }

  // Scan that defines cosets to complete (HLT-style).
  void scan_and_fill(int alpha, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = alpha, b = alpha;
    std::int64_t i = 0, j = static_cast<std::int64_t>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) >= 0)
        f = at(f, w[static_cast<std::size_t>(i)]), ++i;
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0)
        b = at(b, w[static_cast<std::size_t>(j)] ^ 1), --j;
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        set_entry(f, w[static_cast<std::size_t>(i)], b);
        return;
      }
      set_entry(f, w[static_cast<std::size_t>(i)], new_coset());
    }
  }

  // Deduce-only scan: fills a gap of exactly one, reports mismatches.
  void scan(int alpha, const std::vector<int>& arr, std::size_t offset, std::size_t len) {
    if (len == 0) return;
    auto letter = [&](std::int64_t k) {
      return arr[(offset + static_cast<std::size_t>(k)) % arr.size()];
    };
    int f = alpha, b = alpha;
    std::int64_t i = 0, j = static_cast<std::int64_t>(len) - 1;
    while (i <= j && at(f, letter(i)) >= 0) f = at(f, letter(i)), ++i;
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && at(b, letter(j) ^ 1) >= 0) b = at(b, letter(j) ^ 1), --j;
    if (j < i)
      coincidence(f, b);
    else if (j == i)
      set_entry(f, letter(i), b);
  }

  bool run_hlt() {
    // Lookahead scans all live cosets without defining, then the table is
    // compacted; progress requires at least one merge.
    int cursor = 0;
    bool pending_start = true;
    while (true) {
      try {
        if (pending_start) {
          for (const auto& w : subgens_) scan_and_fill(rep(0), w);
          pending_start = false;
        }
        while (cursor < rows()) {
          if (!alive(cursor)) {
            ++cursor;
            continue;
          }
          for (const auto& w : relators_) {
            scan_and_fill(cursor, w);
            if (!alive(cursor)) break;
          }
          if (alive(cursor)) {
            for (int x = 0; x < ncols_; ++x)
              if (alive(cursor) && at(cursor, x) < 0) set_entry(cursor, x, new_coset());
          }
          ++cursor;
        }
        return true;
      } catch (const TableFull&) {
        std::size_t merged = lookahead();
        if (merged == 0 || nalive_ >= limit_) return false;
        cursor = compact(cursor);
      }
    }
  }

  std::size_t lookahead() {
    std::size_t merged = 0;
    for (int c = 0; c < rows(); ++c) {
      if (!alive(c)) continue;
      for (const auto& w : relators_) {
        scan_and_fill_nodefine(c, w, merged);
        if (!alive(c)) break;
      }
    }
    return merged;
  }

  void scan_and_fill_nodefine(int alpha, const std::vector<int>& w, std::size_t& merged) {
    if (w.empty()) return;
    int f = alpha, b = alpha;
    std::int64_t i = 0, j = static_cast<std::int64_t>(w.size()) - 1;
    while (i <= j && at(f, w[static_cast<std::size_t>(i)]) >= 0)
      f = at(f, w[static_cast<std::size_t>(i)]), ++i;
    if (i > j) {
      if (f != b) merged += coincidence(f, b);
      return;
    }
    while (j >= i && at(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0)
      b = at(b, w[static_cast<std::size_t>(j)] ^ 1), --j;
    if (j < i)
      merged += coincidence(f, b);
    else if (j == i)
      set_entry(f, w[static_cast<std::size_t>(i)], b);
  }

  // Renumbers live cosets, preserving order; returns the new cursor.
  int compact(int cursor) {
    std::vector<int> remap(p_.size(), -1);
    int next = 0;
    for (int c = 0; c < rows(); ++c)
      if (alive(c)) remap[static_cast<std::size_t>(c)] = next++;
    std::vector<int> fresh(static_cast<std::size_t>(next) * ncols_, -1);
    for (int c = 0; c < rows(); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < ncols_; ++x) {
        int d = at(c, x);
        if (d >= 0)
          fresh[static_cast<std::size_t>(remap[static_cast<std::size_t>(c)]) * ncols_ + x] =
              remap[static_cast<std::size_t>(rep(d))];
      }
    }
    int new_cursor = 0;
    for (int c = 0; c < std::min<int>(cursor, rows()); ++c)
      if (alive(c)) ++new_cursor;
    table_ = std::move(fresh);
    p_.assign(static_cast<std::size_t>(next), 0);
    for (int c = 0; c < next; ++c) p_[static_cast<std::size_t>(c)] = c;
    return new_cursor;
  }

  void build_rotations() {
    rotations_by_letter_.assign(static_cast<std::size_t>(ncols_), {});
    for (const auto& r : relators_) {
      std::vector<int> inv(r.rbegin(), r.rend());
      for (int& l : inv) l ^= 1;
      for (const auto& arr : {r, inv}) {
        int id = static_cast<int>(felsch_words_.size());
        felsch_words_.push_back(arr);
        for (std::size_t k = 0; k < arr.size(); ++k)
          rotations_by_letter_[static_cast<std::size_t>(arr[k])].emplace_back(id, static_cast<int>(k));
      }
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      for (const auto& [id, off] : rotations_by_letter_[static_cast<std::size_t>(x)]) {
        const auto& arr = felsch_words_[static_cast<std::size_t>(id)];
        scan(rep(c), arr, static_cast<std::size_t>(off), arr.size());
      }
    }
  }

  bool run_felsch() {
    try {
      for (const auto& w : subgens_) {
        scan_and_fill(rep(0), w);
        process_deductions();
      }
      int cursor = 0;
      while (cursor < rows()) {
        if (!alive(cursor)) {
          ++cursor;
          continue;
        }
        for (int x = 0; x < ncols_; ++x) {
          if (!alive(cursor)) break;
          if (at(cursor, x) < 0) {
            set_entry(cursor, x, new_coset());
            process_deductions();
          }
        }
        ++cursor;
      }
      return true;
    } catch (const TableFull&) {
      return false;
    }
  }

  // BFS renumbering from coset 0 so Complete tables are canonical.
  void standardize() {
    std::vector<int> order;
    std::vector<int> remap(p_.size(), -1);
    order.reserve(nalive_);
    order.push_back(rep(0));
    remap[static_cast<std::size_t>(rep(0))] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      int c = order[head];
      for (int x = 0; x < ncols_; ++x) {
        int d = at(c, x);
        if (d < 0) throw std::logic_error("standardize: incomplete table");
        d = rep(d);
        if (remap[static_cast<std::size_t>(d)] < 0) {
          remap[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    }
    if (order.size() != nalive_) throw std::logic_error("standardize: action not transitive");
    std::vector<int> fresh(nalive_ * static_cast<std::size_t>(ncols_), -1);
    for (std::size_t n = 0; n < order.size(); ++n)
      for (int x = 0; x < ncols_; ++x)
        fresh[n * ncols_ + static_cast<std::size_t>(x)] =
            remap[static_cast<std::size_t>(rep(at(order[n], x)))];
    table_ = std::move(fresh);
    p_.assign(nalive_, 0);
    for (std::size_t c = 0; c < nalive_; ++c) p_[c] = static_cast<int>(c);
  }
};

}  // namespace

std::vector<Perm> CosetTable::action_perms() const {
  std::vector<Perm> out;
  out.reserve(action.size());
  for (const auto& col : action) out.push_back(Perm(col));
  return out;
}

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgens,
                        std::size_t limit, CosetStrategy strategy) {
  Enumerator e(p, subgens, limit, strategy);
  return e.run(p.gens());
}

}  // namespace fpforge
