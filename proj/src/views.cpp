#include <string>

#include "matpart/algorithms.hpp"
#include "matpart/errors.hpp"
#include "matpart/matroid.hpp"

namespace matpart {

namespace {

class RestrictedMatroid final : public Matroid {
 public:
  RestrictedMatroid(MatroidPtr base, ElementSet s)
      : Matroid(base->universe_size(), s), base_(std::move(base)) {}
  std::string kind() const override { return "restriction(" + base_->kind() + ")"; }

 protected:
  bool test_independent(ElementSet x) const override { return base_->independent(x); }

 private:
  MatroidPtr base_;
};

class ContractedMatroid final : public Matroid {
 public:
  ContractedMatroid(MatroidPtr base, ElementSet t)
      : Matroid(base->universe_size(), base->ground() - t), base_(std::move(base)), t_(t) {}
  std::string kind() const override { return "contraction(" + base_->kind() + ")"; }

 protected:
  bool test_independent(ElementSet x) const override { return base_->independent(x | t_); }

 private:
  MatroidPtr base_;
  ElementSet t_;
};

class TruncatedMatroid final : public Matroid {
 public:
  TruncatedMatroid(MatroidPtr base, std::size_t t)
      : Matroid(base->universe_size(), base->ground()), base_(std::move(base)), t_(t) {}
  std::string kind() const override { return "truncation(" + base_->kind() + ")"; }

 protected:
  bool test_independent(ElementSet x) const override {
    return x.size() <= t_ && base_->independent(x);
  }

 private:
  MatroidPtr base_;
  std::size_t t_;
};

class UnionPowerMatroid final : public Matroid {
 public:
  UnionPowerMatroid(MatroidPtr base, std::size_t k)
      : Matroid(base->universe_size(), base->ground()), copies_(repeated(base, k)) {}
  std::string kind() const override {
    return "union_power(" + copies_.front()->kind() + "," + std::to_string(copies_.size()) + ")";
  }

 protected:
  bool test_independent(ElementSet x) const override {
    return partitionable(copies_, x);
  }

 private:
  std::vector<MatroidPtr> copies_;
};

}  // namespace

MatroidPtr restriction(MatroidPtr m, ElementSet s) {
  if (!s.subset_of(m->ground())) {
    throw PreconditionError("restriction set " + s.to_string() + " is not a subset of the ground set");
  }
  return std::make_shared<RestrictedMatroid>(std::move(m), s);
}

MatroidPtr contraction(MatroidPtr m, ElementSet t) {
  if (!t.subset_of(m->ground())) {
    throw PreconditionError("contraction set " + t.to_string() + " is not a subset of the ground set");
  }
  if (!m->independent(t)) {
    throw PreconditionError("contraction set " + t.to_string() + " is dependent");
  }
  return std::make_shared<ContractedMatroid>(std::move(m), t);
}

MatroidPtr truncation(MatroidPtr m, std::size_t t) {
  return std::make_shared<TruncatedMatroid>(std::move(m), t);
}

MatroidPtr union_power(MatroidPtr m, std::size_t k) {
  if (k == 0) throw PreconditionError("union_power needs k >= 1");
  if (k == 1) return m;
  return std::make_shared<UnionPowerMatroid>(std::move(m), k);
}

CountingMatroid::CountingMatroid(MatroidPtr inner,
                                 std::shared_ptr<std::atomic<std::uint64_t>> counter)
    : Matroid(inner->universe_size(), inner->ground()),
      inner_(std::move(inner)),
      counter_(std::move(counter)) {}

std::string CountingMatroid::kind() const { return inner_->kind(); }

bool CountingMatroid::test_independent(ElementSet x) const {
  counter_->fetch_add(1, std::memory_order_relaxed);
  return inner_->independent(x);
}

}  // namespace matpart
