#include "matpart/partitioner.hpp"

#include <sstream>

#include "matpart/limits.hpp"
#include "matpart/zoo.hpp"

namespace matpart {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::automatic:
      return "auto";
    case Mode::laminar:
      return "laminar";
    case Mode::kz1:
      return "kz1";
    case Mode::kz2:
      return "kz2";
    case Mode::mixed_kz1:
      return "mixed-kz1";
    case Mode::mixed_kz2:
      return "mixed-kz2";
    case Mode::generic:
      break;
  }
  return "generic";
}

Mode parse_mode(const std::string& name) {
  for (Mode m : {Mode::automatic, Mode::laminar, Mode::kz1, Mode::kz2, Mode::mixed_kz1,
                 Mode::mixed_kz2, Mode::generic}) {
    if (to_string(m) == name) return m;
  }
  throw ValidationError("unknown mode '" + name + "'");
}

bool PartitionPlan::passed() const { return first_failure() == nullptr; }

const HypothesisCheck* PartitionPlan::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

namespace {

HypothesisCheck make_check(std::string name) {
  HypothesisCheck c;
  c.name = std::move(name);
  return c;
}

const LaminarMatroid* as_laminar(const MatroidPtr& m) {
  return dynamic_cast<const LaminarMatroid*>(m.get());
}

HypothesisCheck check_shared_ground(const MatroidPtr& m1, const MatroidPtr& m2) {
  HypothesisCheck c = make_check("shared ground set");
  c.passed = m1->ground() == m2->ground() && m1->universe_size() == m2->universe_size();
  if (!c.passed) c.detail = m1->ground().to_string() + " vs " + m2->ground().to_string();
  return c;
}

HypothesisCheck check_power(const MatroidPtr& m, std::size_t k, const std::string& name) {
  HypothesisCheck c = make_check("E in I" + name + "^" + std::to_string(k));
  const PartitionResult split = matroid_partition(repeated(m, k), m->ground());
  c.passed = split.covered;
  if (c.passed) {
    c.witness_sets = split.parts;
  } else {
    c.witness_sets = {*split.deficiency_witness};
    c.detail = "deficiency set " + split.deficiency_witness->to_string();
  }
  return c;
}

HypothesisCheck check_laminar(const MatroidPtr& m, const std::string& name) {
  HypothesisCheck c = make_check("M" + name + " is laminar");
  c.passed = as_laminar(m) != nullptr;
  if (!c.passed) c.detail = "kind " + m->kind();
  return c;
}

HypothesisCheck check_not_spanned(const MatroidPtr& m, std::size_t spanned,
                                  const std::string& name) {
  HypothesisCheck c = make_check("no element " + std::to_string(spanned) + "-spanned in M" + name);
  if (m->ground().size() > limits().spanned) {
    c.passed = true;
    c.verified = false;
    c.detail = "ground set above the spanned-test threshold; hypothesis assumed";
    return c;
  }
  if (auto w = find_k_spanned(*m, spanned)) {
    c.passed = false;
    c.witness_element = w->element;
    c.witness_sets = w->spanning_sets;
    c.detail = "element " + std::to_string(w->element) + " is " + std::to_string(spanned) +
               "-spanned";
  } else {
    c.passed = true;
  }
  return c;
}

HypothesisCheck check_k_is_two(std::size_t k) {
  HypothesisCheck c = make_check("k = 2");
  c.passed = k == 2;
  if (!c.passed) c.detail = "k = " + std::to_string(k);
  return c;
}

HypothesisCheck check_cardinality(const MatroidPtr& m, std::size_t k, const std::string& name) {
  HypothesisCheck c = make_check("|E| = k * r" + name + "(E)");
  const std::size_t r = rank(*m);
  c.passed = m->ground().size() == k * r;
  c.detail = "|E| = " + std::to_string(m->ground().size()) + ", r" + name + "(E) = " +
             std::to_string(r);
  return c;
}

HypothesisCheck check_equal_ranks(const MatroidPtr& m1, const MatroidPtr& m2, std::size_t k) {
  HypothesisCheck c = make_check("r1(E) = r2(E) = d, |E| = k * d");
  const std::size_t r1 = rank(*m1);
  const std::size_t r2 = rank(*m2);
  c.passed = r1 == r2 && m1->ground().size() == k * r1;
  c.detail = "r1(E) = " + std::to_string(r1) + ", r2(E) = " + std::to_string(r2) +
             ", |E| = " + std::to_string(m1->ground().size());
  return c;
}

PartitionPlan plan_for(const MatroidPtr& m1, const MatroidPtr& m2, std::size_t k, Mode mode) {
  PartitionPlan plan;
  plan.mode = mode;
  plan.k = k;
  auto& checks = plan.checks;
  checks.push_back(check_shared_ground(m1, m2));
  if (!checks.back().passed) return plan;
  if (k == 0) {
    HypothesisCheck bad = make_check("k >= 1");
    bad.detail = "k = 0";
    checks.push_back(bad);
    return plan;
  }
  const MatroidPtr* laminar = &m1;
  const MatroidPtr* other = &m2;
  std::string laminar_name = "1";
  std::string other_name = "2";
  if ((mode == Mode::mixed_kz1 || mode == Mode::mixed_kz2) && as_laminar(m1) == nullptr &&
      as_laminar(m2) != nullptr) {
    std::swap(laminar, other);
    std::swap(laminar_name, other_name);
    plan.laminar_side = 1;
  }
  switch (mode) {
    case Mode::laminar:
      checks.push_back(check_laminar(m1, "1"));
      checks.push_back(check_laminar(m2, "2"));
      checks.push_back(check_power(m1, k, "1"));
      checks.push_back(check_power(m2, k, "2"));
      break;
    case Mode::kz1:
      checks.push_back(check_equal_ranks(m1, m2, k));
      checks.push_back(check_not_spanned(m1, k + 1, "1"));
      checks.push_back(check_not_spanned(m2, k + 1, "2"));
      checks.push_back(check_power(m1, k, "1"));
      checks.push_back(check_power(m2, k, "2"));
      break;
    case Mode::kz2:
      checks.push_back(check_k_is_two(k));
      checks.push_back(check_not_spanned(m1, 3, "1"));
      checks.push_back(check_not_spanned(m2, 3, "2"));
      checks.push_back(check_power(m1, k, "1"));
      checks.push_back(check_power(m2, k, "2"));
      break;
    case Mode::mixed_kz1:
      checks.push_back(check_laminar(*laminar, laminar_name));
      checks.push_back(check_power(*laminar, k, laminar_name));
      checks.push_back(check_cardinality(*other, k, other_name));
      checks.push_back(check_not_spanned(*other, k + 1, other_name));
      checks.push_back(check_power(*other, k, other_name));
      break;
    case Mode::mixed_kz2:
      checks.push_back(check_k_is_two(k));
      checks.push_back(check_laminar(*laminar, laminar_name));
      checks.push_back(check_power(*laminar, k, laminar_name));
      checks.push_back(check_not_spanned(*other, 3, other_name));
      checks.push_back(check_power(*other, k, other_name));
      break;
    case Mode::generic:
    case Mode::automatic:
      checks.push_back(check_power(m1, k, "1"));
      checks.push_back(check_power(m2, k, "2"));
      break;
  }
  return plan;
}

bool fully_verified(const PartitionPlan& plan) {
  for (const auto& c : plan.checks) {
    if (!c.passed || !c.verified) return false;
  }
  return true;
}

void require_k_at_least_two(std::size_t k, const char* what) {
  if (k < 2) throw PreconditionError(std::string(what) + " needs k >= 2");
}

}  // namespace

PartitionPlan validate_plan(const MatroidPtr& m1, const MatroidPtr& m2, std::size_t k,
                            Mode mode) {
  if (mode != Mode::automatic) return plan_for(m1, m2, k, mode);
  for (Mode candidate :
       {Mode::laminar, Mode::kz1, Mode::kz2, Mode::mixed_kz1, Mode::mixed_kz2}) {
    PartitionPlan plan = plan_for(m1, m2, k, candidate);
    if (fully_verified(plan)) return plan;
    if (!plan.checks.empty() && plan.checks.front().name == "shared ground set" &&
        !plan.checks.front().passed) {
      return plan;
    }
  }
  return plan_for(m1, m2, k, Mode::generic);
}

bool j_member(const MatroidPtr& m, std::size_t k, ElementSet x) {
  require_k_at_least_two(k, "j_member");
  if (!x.subset_of(m->ground())) return false;
  return m->independent(x) && partitionable(repeated(m, k - 1), m->ground() - x);
}

PadBounds compute_pad_bounds(const MatroidPtr& m1, const MatroidPtr& m2, std::size_t k) {
  require_k_at_least_two(k, "compute_pad_bounds");
  const ElementSet ground = m1->ground();
  if (m2->ground() != ground) throw ValidationError("pad bounds need a shared ground set");
  for (const MatroidPtr* m : {&m1, &m2}) {
    if (!partitionable(repeated(*m, k), ground)) {
      throw PreconditionError("ground set is not partitionable into " + std::to_string(k) +
                              " independent sets of " + (*m)->kind());
    }
  }
  const std::size_t n = ground.size();
  const std::size_t u1 = union_rank(repeated(m1, k - 1), ground);
  const std::size_t u2 = union_rank(repeated(m2, k - 1), ground);
  return PadBounds{std::max(rank(*m1), rank(*m2)), std::min(n - u1, n - u2)};
}

PaddedMatroid::PaddedMatroid(MatroidPtr base, std::size_t k, std::size_t m_max, ElementSet pads)
    : Matroid(pads.empty() ? base->universe_size()
                           : std::max(base->universe_size(), *pads.max() + 1),
              base->ground() | pads),
      base_(std::move(base)),
      k_(k),
      m_max_(m_max),
      pads_(pads) {
  require_k_at_least_two(k, "padded matroid");
  if (!pads.empty() && *pads.min() < base_->universe_size()) {
    throw ValidationError("pad elements must lie above the base universe");
  }
}

bool PaddedMatroid::test_independent(ElementSet x) const {
  const ElementSet chosen = x - pads_;
  const ElementSet padding = x & pads_;
  if (chosen.size() + padding.size() > m_max_) return false;
  if (!base_->independent(chosen)) return false;
  // E ∖ X' must split into Z (extending X' within the size budget) and k-1
  // independent sets.
  std::vector<MatroidPtr> list;
  list.reserve(k_);
  list.push_back(truncation(contraction(base_, chosen), m_max_ - chosen.size() - padding.size()));
  for (std::size_t i = 1; i < k_; ++i) list.push_back(base_);
  return partitionable(list, base_->ground() - chosen);
}

PaddedInstance make_padded_instance(const MatroidPtr& m1, const MatroidPtr& m2, std::size_t k) {
  PaddedInstance inst;
  inst.k = k;
  inst.base_ground = m1->ground();
  inst.bounds = compute_pad_bounds(m1, m2, k);
  const std::size_t pad_count = inst.bounds.m_max - inst.bounds.m_min;
  const std::size_t first_pad = m1->universe_size();
  if (first_pad + pad_count > ElementSet::kMaxElements) {
    throw CapacityError("padded ground set needs " + std::to_string(first_pad + pad_count) +
                        " indices, above the 64-element limit");
  }
  for (std::size_t i = 0; i < pad_count; ++i) inst.pads.insert(first_pad + i);
  inst.padded1 = std::make_shared<PaddedMatroid>(m1, k, inst.bounds.m_max, inst.pads);
  inst.padded2 = std::make_shared<PaddedMatroid>(m2, k, inst.bounds.m_max, inst.pads);
  return inst;
}

ElementSet extract_step(const MatroidPtr& m1, const MatroidPtr& m2, std::size_t k,
                        StepRecord* record) {
  require_k_at_least_two(k, "extract_step");
  auto calls = [&] {
    return m1->oracle_calls() + (m1 == m2 ? 0 : m2->oracle_calls());
  };
  const std::uint64_t calls_before = calls();
  const PaddedInstance inst = make_padded_instance(m1, m2, k);
  const CommonBaseResult found = common_base(*inst.padded1, *inst.padded2);
  if (record != nullptr) {
    record->k = k;
    record->ground = inst.base_ground;
    record->bounds = inst.bounds;
    record->pad_count = inst.pads.size();
    record->augmentations = found.intersection ? found.intersection->augmentations : 0;
  }
  if (!found.base) {
    std::ostringstream msg;
    msg << "no common base of the padded matroids at k = " << k << " (ranks " << found.rank1
        << ", " << found.rank2;
    if (found.intersection) msg << ", maximum common set " << found.intersection->common_set.size();
    msg << ")";
    throw StepFailure(msg.str(), k, found.intersection);
  }
  const ElementSet x = *found.base & inst.base_ground;
  if (!j_member(m1, k, x) || !j_member(m2, k, x)) {
    throw StepFailure("extracted set " + x.to_string() + " is not in J1 ∩ J2 at k = " +
                          std::to_string(k),
                      k, found.intersection);
  }
  if (record != nullptr) {
    record->extracted = x;
    record->oracle_calls = calls() - calls_before;
  }
  return x;
}

namespace {

MatroidPtr restrict_to(const MatroidPtr& m, ElementSet rest) {
  if (const LaminarMatroid* lam = as_laminar(m)) {
    return make_laminar(laminar_restriction(lam->description(), rest));
  }
  return restriction(m, rest);
}

}  // namespace

CommonPartition partition_common(const MatroidPtr& m1, const MatroidPtr& m2, std::size_t k,
                                 const PartitionPlan& plan) {
  if (const HypothesisCheck* bad = plan.first_failure()) {
    throw PreconditionError("plan hypothesis failed: " + bad->name +
                            (bad->detail.empty() ? "" : " (" + bad->detail + ")"));
  }
  if (plan.k != k) throw PreconditionError("plan was validated for a different k");
  if (k == 0) throw PreconditionError("partition needs k >= 1");

  auto counter = std::make_shared<std::atomic<std::uint64_t>>(0);
  CommonPartition out;
  MatroidPtr cur1 = m1;
  MatroidPtr cur2 = m2;
  const std::size_t d = plan.mode == Mode::kz1 ? rank(*m1) : 0;
  for (std::size_t j = k; j >= 2; --j) {
    const auto w1 = std::make_shared<CountingMatroid>(cur1, counter);
    const auto w2 = std::make_shared<CountingMatroid>(cur2, counter);
    StepRecord rec;
    const std::uint64_t before = counter->load();
    const ElementSet x = extract_step(w1, w2, j, &rec);
    rec.oracle_calls = counter->load() - before;
    if (plan.mode == Mode::kz1 && x.size() != d) {
      throw InternalError("kz1 step extracted " + x.to_string() + ", not a common base of size " +
                          std::to_string(d));
    }
    out.parts.push_back(x);
    out.transcript.push_back(rec);
    const ElementSet rest = cur1->ground() - x;
    cur1 = restrict_to(cur1, rest);
    cur2 = cur1 == cur2 ? cur1 : restrict_to(cur2, rest);
    if (m1 == m2) cur2 = cur1;
  }
  const ElementSet last = cur1->ground();
  {
    const auto w1 = std::make_shared<CountingMatroid>(cur1, counter);
    const auto w2 = std::make_shared<CountingMatroid>(cur2, counter);
    const bool ok1 = w1->independent(last);
    const bool ok2 = w2->independent(last);
    if (!ok1 || !ok2) {
      if (k == 1) {
        throw StepFailure("ground set is not a common independent set (k = 1)", 1, std::nullopt);
      }
      throw InternalError("remaining set " + last.to_string() + " is not common independent");
    }
  }
  out.parts.push_back(last);
  out.oracle_calls = counter->load();
  if (!verify_common_partition(*m1, *m2, out.parts)) {
    throw InternalError("final partition failed verification");
  }
  return out;
}

bool verify_common_partition(const Matroid& m1, const Matroid& m2,
                             const std::vector<ElementSet>& parts) {
  if (m1.ground() != m2.ground()) return false;
  ElementSet seen;
  for (ElementSet p : parts) {
    if (!p.disjoint_from(seen) || !p.subset_of(m1.ground())) return false;
    if (!m1.independent(p) || !m2.independent(p)) return false;
    seen |= p;
  }
  return seen == m1.ground();
}

}  // namespace matpart
