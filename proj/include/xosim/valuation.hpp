#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xosim/itemset.hpp"

namespace xosim {

enum class ValuationKind { BXOS, XOS };

/// One additive clause of an XOS valuation: per-item non-negative values.
/// Binary clauses (every entry 0 or 1) are stored as their support set;
/// general clauses keep a dense double vector.
class Clause {
 public:
  explicit Clause(ItemSet support);
  explicit Clause(std::vector<double> values);

  int m() const { return m_; }
  bool binary() const { return binary_; }

  /// Support set; for general clauses, items with value > 0.
  const ItemSet& support() const { return support_; }

  double value(int item) const { return binary_ ? (support_.test(item) ? 1.0 : 0.0) : values_[item]; }

  /// Sum of values over S (additive evaluation).
  double eval(const ItemSet& s) const;

  /// Sum over all items.
  double total() const;

  /// True when every value is a (small) non-negative integer; such clauses
  /// admit exact integer arithmetic end to end.
  bool integral() const;

  long long eval_int(const ItemSet& s) const;  // requires integral()
  long long value_int(int item) const;
  long long total_int() const;

  /// Clause with values outside `keep` zeroed.
  Clause restricted_to(const ItemSet& keep) const;

  std::vector<double> dense_values() const;

  bool operator==(const Clause& o) const;

 private:
  int m_;
  bool binary_;
  ItemSet support_;            // binary storage (also support cache for general)
  std::vector<double> values_; // general storage; empty when binary
};

/// Total assignment of each item to exactly one of n players.
class Allocation {
 public:
  Allocation(int m, int n) : n_(n), owner_(m, 0) {}
  Allocation(std::vector<int> owner, int n) : n_(n), owner_(std::move(owner)) {}

  int m() const { return static_cast<int>(owner_.size()); }
  int n() const { return n_; }
  int owner(int item) const { return owner_[item]; }
  void assign(int item, int player) { owner_[item] = player; }

  ItemSet bundle(int player) const {
    ItemSet s(m());
    for (int i = 0; i < m(); ++i)
      if (owner_[i] == player) s.set(i);
    return s;
  }

  /// Split a two-player allocation from Alice's bundle.
  static Allocation from_bundle(const ItemSet& alice, int n = 2) {
    Allocation a(alice.m(), n);
    for (int i = 0; i < alice.m(); ++i) a.assign(i, alice.test(i) ? 0 : 1);
    return a;
  }

  bool operator==(const Allocation& o) const { return n_ == o.n_ && owner_ == o.owner_; }

 private:
  int n_;
  std::vector<int> owner_;
};

/// XOS valuation: max over a non-empty list of additive clauses.
class Valuation {
 public:
  explicit Valuation(std::vector<Clause> clauses);

  static Valuation from_sets(int m, const std::vector<std::vector<int>>& supports);

  int m() const { return m_; }
  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  const Clause& clause(int j) const { return clauses_[j]; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  ValuationKind kind() const { return binary_ ? ValuationKind::BXOS : ValuationKind::XOS; }
  bool binary() const { return binary_; }
  bool integral() const { return integral_; }

  double eval(const ItemSet& s) const;
  long long eval_int(const ItemSet& s) const;  // requires integral()

  /// Lowest clause index attaining eval(s).
  int argmax_clause(const ItemSet& s) const;

  double grand_total() const { return eval(ItemSet::full(m_)); }
  long long grand_total_int() const { return eval_int(ItemSet::full(m_)); }

  /// Valuation over the same m items with every clause zeroed outside `keep`.
  Valuation restricted_to(const ItemSet& keep) const;

 private:
  void check_bundle(const ItemSet& s) const;

  int m_;
  bool binary_;
  bool integral_;
  std::vector<Clause> clauses_;
};

}  // namespace xosim
