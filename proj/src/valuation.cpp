#include "xosim/valuation.hpp"

#include <cmath>
#include <stdexcept>

namespace xosim {

namespace {
constexpr double kIntegralCap = 1e12;  // values beyond this are not treated as exact ints

bool value_is_integral(double v) {
  return v >= 0 && v <= kIntegralCap && v == std::floor(v);
}
}  // namespace

Clause::Clause(ItemSet support) : m_(support.m()), binary_(true), support_(std::move(support)) {}

Clause::Clause(std::vector<double> values)
    : m_(static_cast<int>(values.size())), support_(m_) {
  binary_ = true;
  for (int i = 0; i < m_; ++i) {
    double v = values[i];
    if (v < 0 || !std::isfinite(v)) throw std::invalid_argument("Clause: values must be finite and >= 0");
    if (v != 0.0 && v != 1.0) binary_ = false;
    if (v > 0) support_.set(i);
  }
  if (!binary_) values_ = std::move(values);
}

double Clause::eval(const ItemSet& s) const {
  if (s.m() != m_) throw std::invalid_argument("Clause::eval: item-count mismatch");
  if (binary_) return ItemSet::and_count(support_, s);
  double sum = 0;
  (support_ & s).for_each([&](int i) { sum += values_[i]; });
  return sum;
}

double Clause::total() const {
  if (binary_) return support_.count();
  double sum = 0;
  for (double v : values_) sum += v;
  return sum;
}

bool Clause::integral() const {
  if (binary_) return true;
  for (double v : values_)
    if (!value_is_integral(v)) return false;
  return true;
}

long long Clause::eval_int(const ItemSet& s) const {
  if (binary_) return ItemSet::and_count(support_, s);
  long long sum = 0;
  (support_ & s).for_each([&](int i) { sum += static_cast<long long>(values_[i]); });
  return sum;
}

long long Clause::value_int(int item) const { return static_cast<long long>(value(item)); }

long long Clause::total_int() const {
  if (binary_) return support_.count();
  long long sum = 0;
  for (double v : values_) sum += static_cast<long long>(v);
  return sum;
}

Clause Clause::restricted_to(const ItemSet& keep) const {
  if (binary_) return Clause(support_ & keep);
  std::vector<double> vals(m_, 0.0);
  (support_ & keep).for_each([&](int i) { vals[i] = values_[i]; });
  return Clause(std::move(vals));
}

std::vector<double> Clause::dense_values() const {
  std::vector<double> out(m_, 0.0);
  if (binary_) {
    support_.for_each([&](int i) { out[i] = 1.0; });
  } else {
    out = values_;
  }
  return out;
}

bool Clause::operator==(const Clause& o) const {
  if (m_ != o.m_) return false;
  if (binary_ && o.binary_) return support_ == o.support_;
  for (int i = 0; i < m_; ++i)
    if (value(i) != o.value(i)) return false;
  return true;
}

Valuation::Valuation(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  if (clauses_.empty()) throw std::invalid_argument("Valuation: needs at least one clause");
  m_ = clauses_[0].m();
  binary_ = true;
  integral_ = true;
  for (const Clause& c : clauses_) {
    if (c.m() != m_) throw std::invalid_argument("Valuation: clauses of mixed length");
    binary_ = binary_ && c.binary();
    integral_ = integral_ && c.integral();
  }
}

Valuation Valuation::from_sets(int m, const std::vector<std::vector<int>>& supports) {
  std::vector<Clause> cl;
  cl.reserve(supports.size());
  for (const auto& s : supports) cl.emplace_back(ItemSet::from_indices(m, s));
  return Valuation(std::move(cl));
}

void Valuation::check_bundle(const ItemSet& s) const {
  if (s.m() != m_) throw std::invalid_argument("Valuation: bundle item-count mismatch");
}

double Valuation::eval(const ItemSet& s) const {
  check_bundle(s);
  double best = 0;
  for (const Clause& c : clauses_) {
    double v = c.eval(s);
    if (v > best) best = v;
  }
  return best;
}

long long Valuation::eval_int(const ItemSet& s) const {
  check_bundle(s);
  long long best = 0;
  for (const Clause& c : clauses_) {
    long long v = c.eval_int(s);
    if (v > best) best = v;
  }
  return best;
}

int Valuation::argmax_clause(const ItemSet& s) const {
  check_bundle(s);
  int best_j = 0;
  double best = clauses_[0].eval(s);
  for (int j = 1; j < num_clauses(); ++j) {
    double v = clauses_[j].eval(s);
    if (v > best) { best = v; best_j = j; }
  }
  return best_j;
}

Valuation Valuation::restricted_to(const ItemSet& keep) const {
  std::vector<Clause> cl;
  cl.reserve(clauses_.size());
  for (const Clause& c : clauses_) cl.push_back(c.restricted_to(keep));
  return Valuation(std::move(cl));
}

}  // namespace xosim
