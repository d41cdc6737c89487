#include "pi2/enumerator.hpp"

#include "pi2/quaternion.hpp"

#include <array>
#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace pi2 {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

inline std::size_t inv(std::size_t col) { return col ^ 1U; }

}  // namespace

std::size_t CosetTable::entry(std::size_t row, std::size_t col) const {
  std::size_t v = table_.at(row - 1).at(col);
  return v == kNone ? 0 : v + 1;
}

bool CosetTable::is_complete_permutation() const {
  const std::size_t n = table_.size();
  for (std::size_t col = 0; col < ncols_; ++col) {
    std::vector<bool> seen(n, false);
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t v = table_[r][col];
      if (v == kNone || v >= n || seen[v]) return false;
      seen[v] = true;
      if (table_[v][inv(col)] != r) return false;
    }
  }
  return true;
}

bool CosetTable::relators_close(const std::vector<std::vector<std::size_t>>& relators) const {
  for (std::size_t r = 0; r < table_.size(); ++r) {
    for (const auto& w : relators) {
      std::size_t c = r;
      for (std::size_t col : w) {
        c = table_[c][col];
        if (c == kNone) return false;
      }
      if (c != r) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> relator_columns(const Presentation& p, std::size_t max_letters) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& w : p.relators()) {
    if (w.empty()) continue;
    if (w.length() > BigInt(static_cast<unsigned long>(max_letters))) {
      throw std::length_error("relator too long to enumerate: " + w.length().get_str() + " letters");
    }
    std::vector<std::size_t> cols;
    for (const auto& l : w.letters()) {
      std::size_t g = p.generator_index(l.gen);
      std::size_t col = l.exp > 0 ? 2 * g : 2 * g + 1;
      unsigned long k = BigInt(abs(l.exp)).get_ui();
      cols.insert(cols.end(), k, col);
    }
    out.push_back(std::move(cols));
  }
  return out;
}

// ---------------------------------------------------------------------------

class Enumerator {
 public:
  Enumerator(std::size_t ngens, std::vector<std::vector<std::size_t>> relators, std::size_t max_cosets)
      : ncols_(2 * ngens), relators_(std::move(relators)), max_cosets_(std::max<std::size_t>(max_cosets, 1)) {
    hard_rows_ = 2 * max_cosets_ + 16;
    build_conjugates();
    new_row();
  }

  CosetTable run(Strategy s) {
    bool ok = s == Strategy::Felsch ? felsch() : hlt();
    CosetTable t;
    t.ncols_ = ncols_;
    t.peak_ = peak_;
    t.defined_ = defined_;
    if (!ok) {
      t.status_ = CosetTable::Status::Overflowed;
      compact(0);
      t.table_ = export_rows();
      return t;
    }
    compact(0);
    standardize();
    t.status_ = CosetTable::Status::Closed;
    t.table_ = export_rows();
    return t;
  }

 private:
  // ---- storage -------------------------------------------------------------

  std::size_t& at(std::size_t c, std::size_t x) { return table_[c * ncols_ + x]; }
  std::size_t rows() const { return forward_.size(); }
  bool alive(std::size_t c) const { return forward_[c] == c; }

  void new_row() {
    std::size_t c = rows();
    table_.resize(table_.size() + ncols_, kNone);
    forward_.push_back(c);
    ++live_;
    ++defined_;
    peak_ = std::max(peak_, live_);
  }

  bool define(std::size_t c, std::size_t x) {
    if (live_ >= max_cosets_ || rows() >= hard_rows_) return false;
    std::size_t d = rows();
    new_row();
    at(c, x) = d;
    at(d, inv(x)) = c;
    deductions_.push_back({c, x});
    return true;
  }

  std::size_t rep(std::size_t k) {
    std::size_t r = k;
    while (forward_[r] != r) r = forward_[r];
    while (forward_[k] != r) {
      std::size_t next = forward_[k];
      forward_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    std::size_t lo = std::min(k, l), hi = std::max(k, l);
    forward_[hi] = lo;
    --live_;
    queue.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t g = queue[i];
      for (std::size_t x = 0; x < ncols_; ++x) {
        std::size_t d = at(g, x);
        if (d == kNone) continue;
        at(d, inv(x)) = kNone;
        std::size_t mu = rep(g), nu = rep(d);
        if (at(mu, x) != kNone) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, inv(x)) != kNone) {
          merge(mu, at(nu, inv(x)), queue);
        } else {
          at(mu, x) = nu;
          at(nu, inv(x)) = mu;
          deductions_.push_back({mu, x});
        }
      }
    }
  }

  // Scans w from c. With `fill`, gaps are bridged by new definitions;
  // returns false only when a definition is refused.
  bool scan(std::size_t c, const std::vector<std::size_t>& w, bool fill) {
    if (w.empty()) return true;
    std::size_t f = c, b = c;
    std::size_t i = 0, j = w.size() - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) != kNone) {
        f = at(f, w[i]);
        if (i == j) {
          if (f != b) coincidence(f, b);
          return true;
        }
        ++i;
      }
      while (j >= i && at(b, inv(w[j])) != kNone) {
        b = at(b, inv(w[j]));
        if (j == i) {
          coincidence(f, b);
          return true;
        }
        --j;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, inv(w[i])) = f;
        deductions_.push_back({f, w[i]});
        return true;
      }
      if (!fill) return true;
      if (!define(f, w[i])) return false;
    }
  }

  // ---- HLT -------------------------------------------------------------------

  void lookahead() {
    for (std::size_t c = 0; c < rows(); ++c) {
      for (const auto& w : relators_) {
        if (!alive(c)) break;
        scan(c, w, false);
      }
    }
    deductions_.clear();
  }

  bool hlt() {
    std::size_t c = 0;
    while (c < rows()) {
      if (!alive(c)) {
        ++c;
        continue;
      }
      bool full = false;
      for (const auto& w : relators_) {
        if (!alive(c)) break;
        if (!scan(c, w, true)) {
          full = true;
          break;
        }
      }
      for (std::size_t x = 0; x < ncols_ && !full && alive(c); ++x) {
        if (at(c, x) == kNone && !define(c, x)) full = true;
      }
      deductions_.clear();
      if (!full) {
        ++c;
        continue;
      }
      std::size_t before = live_;
      lookahead();
      c = compact(c);
      if (live_ >= max_cosets_ && live_ == before) return false;
    }
    return finish();
  }

  // ---- Felsch ----------------------------------------------------------------

  void build_conjugates() {
    std::set<std::vector<std::size_t>> seen;
    by_first_.assign(ncols_, {});
    for (const auto& w : relators_) {
      std::vector<std::size_t> winv(w.rbegin(), w.rend());
      for (auto& col : winv) col = inv(col);
      for (const auto* base : std::array<const std::vector<std::size_t>*, 2>{&w, &winv}) {
        for (std::size_t k = 0; k < base->size(); ++k) {
          std::vector<std::size_t> rot(base->begin() + static_cast<std::ptrdiff_t>(k), base->end());
          rot.insert(rot.end(), base->begin(), base->begin() + static_cast<std::ptrdiff_t>(k));
          if (seen.insert(rot).second) by_first_[rot.front()].push_back(rot);
        }
      }
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      for (const auto& w : by_first_[x]) {
        if (!alive(c)) break;
        scan(c, w, false);
      }
      if (!alive(c)) continue;
      std::size_t d = at(c, x);
      if (d == kNone || !alive(d)) continue;
      for (const auto& w : by_first_[inv(x)]) {
        if (!alive(d)) break;
        scan(d, w, false);
      }
    }
  }

  bool felsch() {
    // every relator through the base coset
    for (const auto& w : relators_) scan(0, w, false);
    process_deductions();
    std::size_t c = 0;
    while (c < rows()) {
      if (!alive(c)) {
        ++c;
        continue;
      }
      bool stalled = false;
      for (std::size_t x = 0; x < ncols_ && alive(c); ++x) {
        if (at(c, x) != kNone) continue;
        if (!define(c, x)) {
          stalled = true;
          break;
        }
        process_deductions();
      }
      if (!stalled) {
        ++c;
        continue;
      }
      std::size_t before_rows = rows();
      c = compact(c);
      if (rows() == before_rows) return false;
    }
    return finish();
  }

  // Completes any relator cycles or rows left open, then confirms closure.
  bool finish() {
    for (int pass = 0; pass < 8; ++pass) {
      bool clean = true;
      for (std::size_t c = 0; c < rows(); ++c) {
        for (const auto& w : relators_) {
          if (!alive(c)) break;
          std::size_t e = c;
          for (std::size_t col : w) {
            e = at(e, col);
            if (e == kNone) break;
          }
          if (e != c) {
            clean = false;
            if (!scan(c, w, true)) return false;
          }
        }
        for (std::size_t x = 0; x < ncols_ && alive(c); ++x) {
          if (at(c, x) != kNone) continue;
          clean = false;
          if (!define(c, x)) return false;
        }
      }
      deductions_.clear();
      if (clean) return true;
    }
    return false;
  }

  // ---- renumbering -------------------------------------------------------------

  // Drops dead rows, keeping relative order. Returns the new index of the
  // first live coset at or after `cursor`.
  std::size_t compact(std::size_t cursor) {
    std::vector<std::size_t> remap(rows(), kNone);
    std::size_t next = 0;
    for (std::size_t c = 0; c < rows(); ++c) {
      if (alive(c)) remap[c] = next++;
    }
    std::size_t new_cursor = next;
    for (std::size_t c = cursor; c < rows(); ++c) {
      if (remap[c] != kNone) {
        new_cursor = remap[c];
        break;
      }
    }
    relabel(remap, next);
    return new_cursor;
  }

  // Breadth-first renumbering from the base coset, columns in order.
  void standardize() {
    std::vector<std::size_t> remap(rows(), kNone);
    std::vector<std::size_t> order{0};
    remap[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (std::size_t x = 0; x < ncols_; ++x) {
        std::size_t d = at(order[k], x);
        if (d != kNone && remap[d] == kNone) {
          remap[d] = order.size();
          order.push_back(d);
        }
      }
    }
    relabel(remap, order.size());
  }

  void relabel(const std::vector<std::size_t>& remap, std::size_t count) {
    std::vector<std::size_t> t(count * ncols_, kNone);
    for (std::size_t c = 0; c < rows(); ++c) {
      if (remap[c] == kNone) continue;
      for (std::size_t x = 0; x < ncols_; ++x) {
        std::size_t d = at(c, x);
        t[remap[c] * ncols_ + x] = d == kNone ? kNone : remap[d];
      }
    }
    table_ = std::move(t);
    forward_.resize(count);
    for (std::size_t c = 0; c < count; ++c) forward_[c] = c;
    live_ = count;
    deductions_.clear();
  }

  std::vector<std::vector<std::size_t>> export_rows() const {
    std::vector<std::vector<std::size_t>> out(rows());
    for (std::size_t c = 0; c < rows(); ++c) {
      out[c].assign(table_.begin() + static_cast<std::ptrdiff_t>(c * ncols_),
                    table_.begin() + static_cast<std::ptrdiff_t>((c + 1) * ncols_));
    }
    return out;
  }

  struct Deduction {
    std::size_t coset;
    std::size_t col;
  };

  std::size_t ncols_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::vector<std::vector<std::size_t>>> by_first_;
  std::size_t max_cosets_;
  std::size_t hard_rows_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> forward_;
  std::vector<Deduction> deductions_;
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
  std::size_t defined_ = 0;
};

CosetTable enumerate(const Presentation& p, std::size_t max_cosets, Strategy strategy) {
  auto rels = relator_columns(p);
  if (strategy == Strategy::Auto) {
    CosetTable t = Enumerator(p.generators().size(), rels, max_cosets).run(Strategy::Hlt);
    if (t.closed()) return t;
    return Enumerator(p.generators().size(), rels, max_cosets).run(Strategy::Felsch);
  }
  return Enumerator(p.generators().size(), std::move(rels), max_cosets).run(strategy);
}

// ---------------------------------------------------------------------------

Verdict verify_q4n(const Presentation& p, long n, std::size_t max_cosets, Strategy strategy) {
  const auto& gens = p.generators();
  if (gens.size() != 2 || !p.has_generator("x") || !p.has_generator("y")) {
    throw std::invalid_argument("verify_q4n needs a presentation on generators x, y");
  }
  Verdict v;
  v.n = n;
  QGroup q(n);
  v.surjection_ok = true;
  for (std::size_t i = 0; i < p.relations().size(); ++i) {
    Word r = p.relator(i);
    QElement e = q.eval(r);
    if (e != QElement{}) {
      v.surjection_ok = false;
      v.witness = "relator " + std::to_string(i + 1) + " (" + r.to_string() + ") evaluates to " +
                  q.to_string(e) + " in Q_" + std::to_string(4 * n);
      break;
    }
  }
  CosetTable t = enumerate(p, max_cosets, strategy);
  if (t.closed()) {
    v.order = t.rows();
    if (v.surjection_ok && *v.order != q.order()) {
      v.witness = "enumerated order " + std::to_string(*v.order) + " differs from " + std::to_string(q.order());
    }
  } else if (v.witness.empty()) {
    v.witness = "coset bound " + std::to_string(max_cosets) + " hit";
  }
  v.presents_q4n = v.surjection_ok && v.order && *v.order == q.order();
  return v;
}

CheckReport verdict_report(const Presentation& p, const Verdict& v) {
  CheckReport rep("enumeration");
  std::string group = "Q_" + std::to_string(4 * v.n);
  rep.add("relators hold in " + group, v.surjection_ok, v.surjection_ok ? "" : v.witness);
  if (!v.order) {
    rep.add(Check{"enumeration closes", Status::Inconclusive, v.witness});
  } else {
    rep.add("enumeration closes", true, std::to_string(*v.order) + " cosets");
    rep.add("order = " + std::to_string(4 * v.n), *v.order == static_cast<std::size_t>(4 * v.n),
            "order " + std::to_string(*v.order));
  }
  rep.detail()["presentation"] = p.to_string();
  return rep;
}

std::vector<ScanRow> scan(long n_lo, long n_hi, const BigInt& r_lo, const BigInt& r_hi, std::size_t max_cosets) {
  if (n_lo > n_hi || r_lo > r_hi) throw std::invalid_argument("scan ranges must be non-empty");
  std::vector<ScanRow> rows;
  for (long n = n_lo; n <= n_hi; ++n) {
    for (BigInt r = r_lo; r <= r_hi; ++r) {
      rows.push_back({n, r, verify_q4n(enr(n, r), n, max_cosets)});
    }
  }
  return rows;
}

nlohmann::ordered_json scan_to_json(const std::vector<ScanRow>& rows) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json e;
    e["n"] = row.n;
    if (row.r.fits_slong_p()) e["r"] = row.r.get_si();
    else e["r"] = row.r.get_str();
    if (row.verdict.order) e["order"] = *row.verdict.order;
    else e["order"] = nullptr;
    e["presents_q4n"] = row.verdict.presents_q4n;
    e["status"] = row.verdict.conclusive() ? "closed" : "inconclusive";
    j.push_back(std::move(e));
  }
  return j;
}

}  // namespace pi2
