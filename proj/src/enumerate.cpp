#include "rbell/enumerate.hpp"

#include <string>

namespace rbell {

namespace {

void check_budget(int n, int budget, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative n");
  if (n > budget)
    throw budget_error(std::string(what) + ": n = " + std::to_string(n) +
                       " exceeds enumeration budget " + std::to_string(budget));
}

// Restricted-growth string walk. rgs[i] is the block of element i+1.
// Under AtMost a branch dies as soon as a block overflows; under AtLeast it
// dies when the elements left cannot top up every undersized block.
class PartitionWalker {
 public:
  PartitionWalker(int n, Constraint c, const std::function<void(const std::vector<int>&, int)>& leaf)
      : n_(n), c_(c), leaf_(leaf), rgs_(static_cast<std::size_t>(n)) {}

  void run() {
    if (n_ == 0) {
      leaf_(rgs_, 0);
      return;
    }
    step(0);
  }

 private:
  bool feasible(int placed) const {
    if (c_.bound != Bound::AtLeast) return true;
    long deficit = 0;
    for (int s : sizes_)
      if (static_cast<unsigned>(s) < c_.m) deficit += static_cast<long>(c_.m) - s;
    return deficit <= n_ - placed;
  }

  void step(int i) {
    if (i == n_) {
      leaf_(rgs_, static_cast<int>(sizes_.size()));
      return;
    }
    const int blocks = static_cast<int>(sizes_.size());
    for (int b = 0; b <= blocks; ++b) {
      if (b == blocks) sizes_.push_back(0);
      ++sizes_[static_cast<std::size_t>(b)];
      rgs_[static_cast<std::size_t>(i)] = b;
      const bool ok_max = c_.bound != Bound::AtMost ||
                          static_cast<unsigned>(sizes_[static_cast<std::size_t>(b)]) <= c_.m;
      if (ok_max && feasible(i + 1)) step(i + 1);
      --sizes_[static_cast<std::size_t>(b)];
      if (b == blocks) sizes_.pop_back();
    }
  }

  int n_;
  Constraint c_;
  const std::function<void(const std::vector<int>&, int)>& leaf_;
  std::vector<int> rgs_;
  std::vector<int> sizes_;
};

// Builds the cycle of the smallest unused element by choosing an ordered
// tuple of further elements, then recurses on what is left.
class CycleWalker {
 public:
  CycleWalker(int n, Constraint c, const std::function<void(const std::vector<std::vector<int>>&)>& leaf)
      : n_(n), c_(c), leaf_(leaf), used_(static_cast<std::size_t>(n) + 1, false) {}

  void run() { next_cycle(n_); }

 private:
  void next_cycle(int remaining) {
    if (remaining == 0) {
      leaf_(cycles_);
      return;
    }
    int first = 1;
    while (used_[static_cast<std::size_t>(first)]) ++first;
    used_[static_cast<std::size_t>(first)] = true;
    cycles_.push_back({first});
    extend(remaining - 1);
    cycles_.pop_back();
    used_[static_cast<std::size_t>(first)] = false;
  }

  void extend(int remaining) {
    const auto len = static_cast<unsigned>(cycles_.back().size());
    if (c_.admits(len)) next_cycle(remaining);
    if (c_.bound == Bound::AtMost && len >= c_.m) return;
    const int min = cycles_.back().front();
    for (int x = min + 1; x <= n_; ++x) {
      if (used_[static_cast<std::size_t>(x)]) continue;
      used_[static_cast<std::size_t>(x)] = true;
      cycles_.back().push_back(x);
      extend(remaining - 1);
      cycles_.back().pop_back();
      used_[static_cast<std::size_t>(x)] = false;
    }
  }

  int n_;
  Constraint c_;
  const std::function<void(const std::vector<std::vector<int>>&)>& leaf_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> cycles_;
};

bool all_admissible(const std::vector<int>& rgs, int blocks, Constraint c) {
  if (c.bound != Bound::AtLeast) return true;
  std::vector<unsigned> sizes(static_cast<std::size_t>(blocks), 0);
  for (int b : rgs) ++sizes[static_cast<std::size_t>(b)];
  for (unsigned s : sizes)
    if (!c.admits(s)) return false;
  return true;
}

}  // namespace

void iterate_partitions(int n, Constraint c,
                        const std::function<void(const PartitionObject&)>& visit) {
  check_budget(n, kPartitionBudget, "iterate_partitions");
  const std::function<void(const std::vector<int>&, int)> leaf =
      [&](const std::vector<int>& rgs, int blocks) {
        if (!all_admissible(rgs, blocks, c)) return;
        PartitionObject p;
        p.blocks.resize(static_cast<std::size_t>(blocks));
        for (std::size_t i = 0; i < rgs.size(); ++i)
          p.blocks[static_cast<std::size_t>(rgs[i])].push_back(static_cast<int>(i) + 1);
        visit(p);
      };
  PartitionWalker(n, c, leaf).run();
}

std::vector<PartitionObject> list_partitions(int n, Constraint c) {
  std::vector<PartitionObject> out;
  iterate_partitions(n, c, [&](const PartitionObject& p) { out.push_back(p); });
  return out;
}

std::vector<Nat> partition_histogram(int n, Constraint c) {
  check_budget(n, kPartitionBudget, "count_partitions");
  std::vector<unsigned long> counts(static_cast<std::size_t>(n) + 1, 0);
  const std::function<void(const std::vector<int>&, int)> leaf =
      [&](const std::vector<int>& rgs, int blocks) {
        if (all_admissible(rgs, blocks, c)) ++counts[static_cast<std::size_t>(blocks)];
      };
  PartitionWalker(n, c, leaf).run();
  return {counts.begin(), counts.end()};
}

Nat count_partitions(int n, Constraint c, std::optional<int> k) {
  const auto hist = partition_histogram(n, c);
  if (k) return *k >= 0 && *k <= n ? hist[static_cast<std::size_t>(*k)] : Nat(0);
  Nat total = 0;
  for (const auto& v : hist) total += v;
  return total;
}

void iterate_cycle_perms(int n, Constraint c,
                         const std::function<void(const PermutationCycles&)>& visit) {
  check_budget(n, kPermutationBudget, "iterate_cycle_perms");
  const std::function<void(const std::vector<std::vector<int>>&)> leaf =
      [&](const std::vector<std::vector<int>>& cycles) { visit(PermutationCycles{cycles}); };
  CycleWalker(n, c, leaf).run();
}

std::vector<PermutationCycles> list_cycle_perms(int n, Constraint c) {
  std::vector<PermutationCycles> out;
  iterate_cycle_perms(n, c, [&](const PermutationCycles& p) { out.push_back(p); });
  return out;
}

std::vector<Nat> cycle_perm_histogram(int n, Constraint c) {
  check_budget(n, kPermutationBudget, "count_cycle_perms");
  std::vector<unsigned long> counts(static_cast<std::size_t>(n) + 1, 0);
  const std::function<void(const std::vector<std::vector<int>>&)> leaf =
      [&](const std::vector<std::vector<int>>& cycles) { ++counts[cycles.size()]; };
  CycleWalker(n, c, leaf).run();
  return {counts.begin(), counts.end()};
}

Nat count_cycle_perms(int n, Constraint c, std::optional<int> k) {
  const auto hist = cycle_perm_histogram(n, c);
  if (k) return *k >= 0 && *k <= n ? hist[static_cast<std::size_t>(*k)] : Nat(0);
  Nat total = 0;
  for (const auto& v : hist) total += v;
  return total;
}

}  // namespace rbell
