#include "qutrit/partition.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

namespace qutrit {

namespace {

int pow3(int n) {
  int r = 1;
  while (n-- > 0) r *= 3;
  return r;
}

// Bitset over canonical nonidentity op codes; bit index = code - 1.
// 12 words cover the largest case (9^3 - 1 = 728 items).
struct OpMask {
  std::array<std::uint64_t, 12> w{};

  void set(int b) { w[b >> 6] |= std::uint64_t{1} << (b & 63); }
  bool intersects(const OpMask& o) const {
    for (int i = 0; i < 12; ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  void merge(const OpMask& o) {
    for (int i = 0; i < 12; ++i) w[i] |= o.w[i];
  }
};

OpMask mask_of(const Mcs& m) {
  OpMask mask;
  for (int c : m.member_codes) mask.set(c - 1);
  return mask;
}

// Exact cover by backtracking: always branch on the uncovered item with the
// fewest remaining candidate sets. Candidate availability is maintained
// incrementally as sets are taken and released.
class CoverSearch {
 public:
  CoverSearch(int n_items, std::vector<std::vector<int>> set_items)
      : n_items_(n_items), set_items_(std::move(set_items)) {
    masks_.reserve(set_items_.size());
    item_sets_.resize(n_items_);
    for (size_t s = 0; s < set_items_.size(); ++s) {
      OpMask m;
      for (int it : set_items_[s]) m.set(it);
      masks_.push_back(m);
      for (int it : set_items_[s]) item_sets_[it].push_back(int(s));
    }
    active_.assign(set_items_.size(), 1);
    avail_.assign(n_items_, 0);
    covered_items_.assign(n_items_, 0);
    for (size_t s = 0; s < set_items_.size(); ++s)
      for (int it : set_items_[s]) ++avail_[it];
  }

  // Marks items as pre-covered (seed sets chosen outside the search).
  void precover(const std::vector<int>& items) {
    for (int it : items) {
      covered_items_[it] = 1;
      covered_.set(it);
    }
    // Seeds may intersect catalog sets only through covered items if the
    // caller filtered the catalog; deactivate any that still collide.
    for (size_t s = 0; s < masks_.size(); ++s)
      if (active_[s] && masks_[s].intersects(covered_)) deactivate(int(s));
  }

  // sink returns false to stop the whole search. abort() is polled at every
  // node; returning true unwinds immediately.
  void run(const std::function<bool(const std::vector<int>&)>& sink,
           const std::function<bool()>& abort = {}) {
    sink_ = &sink;
    abort_ = abort ? &abort : nullptr;
    stop_ = false;
    descend();
    sink_ = nullptr;
    abort_ = nullptr;
  }

 private:
  void deactivate(int s) {
    active_[s] = 0;
    undo_.push_back(s);
    for (int it : set_items_[s]) --avail_[it];
  }

  void descend() {
    if (stop_ || (abort_ && (*abort_)())) {
      stop_ = true;
      return;
    }
    // Most-constrained uncovered item.
    int best = -1, best_count = INT_MAX;
    for (int it = 0; it < n_items_; ++it) {
      if (covered_items_[it]) continue;
      if (avail_[it] < best_count) {
        best = it;
        best_count = avail_[it];
        if (best_count == 0) return;  // dead end
      }
    }
    if (best == -1) {
      if (!(*sink_)(chosen_)) stop_ = true;
      return;
    }

    for (int s : item_sets_[best]) {
      if (!active_[s]) continue;
      size_t undo_mark = undo_.size();
      OpMask saved_covered = covered_;

      for (int it : set_items_[s]) covered_items_[it] = 1;
      covered_.merge(masks_[s]);
      for (size_t t = 0; t < masks_.size(); ++t)
        if (active_[t] && masks_[t].intersects(covered_)) deactivate(int(t));

      chosen_.push_back(s);
      descend();
      chosen_.pop_back();

      while (undo_.size() > undo_mark) {
        int t = undo_.back();
        undo_.pop_back();
        active_[t] = 1;
        for (int it : set_items_[t]) ++avail_[it];
      }
      covered_ = saved_covered;
      for (int it : set_items_[s]) covered_items_[it] = 0;
      if (stop_) return;
    }
  }

  int n_items_;
  std::vector<std::vector<int>> set_items_;
  std::vector<OpMask> masks_;
  std::vector<std::vector<int>> item_sets_;
  std::vector<char> active_;
  std::vector<int> avail_;
  std::vector<char> covered_items_;
  OpMask covered_;
  std::vector<int> chosen_;
  std::vector<int> undo_;
  const std::function<bool(const std::vector<int>&)>* sink_ = nullptr;
  const std::function<bool()>* abort_ = nullptr;
  bool stop_ = false;
};

std::vector<std::vector<int>> items_of(const std::vector<Mcs>& catalog) {
  std::vector<std::vector<int>> set_items;
  set_items.reserve(catalog.size());
  for (const Mcs& m : catalog) {
    std::vector<int> items;
    items.reserve(m.member_codes.size());
    for (int c : m.member_codes) items.push_back(c - 1);
    set_items.push_back(std::move(items));
  }
  return set_items;
}

Partition assemble(int n, std::vector<Mcs> subsets) {
  std::sort(subsets.begin(), subsets.end(), [](const Mcs& a, const Mcs& b) {
    return a.member_codes < b.member_codes;
  });
  Partition p;
  p.n = n;
  p.mcs_list = std::move(subsets);
  validate_partition(p);
  p.structure = structure_counts(p);
  return p;
}

}  // namespace

std::string to_string(const StructureCounts& c) {
  std::string out;
  auto part = [&](int k, const char* code) {
    if (k == 0) return;
    if (!out.empty()) out += "+";
    out += std::to_string(k);
    out += code;
  };
  part(c.s, "S");
  part(c.b, "B");
  part(c.sb, "SB");
  part(c.g, "G");
  return out.empty() ? "empty" : out;
}

void validate_partition(const Partition& p) {
  const int want_subsets = pow3(p.n) + 1;
  if (static_cast<int>(p.mcs_list.size()) != want_subsets)
    throw theorem_violation("partition has " + std::to_string(p.mcs_list.size()) +
                            " subsets, expected " + std::to_string(want_subsets));
  std::vector<char> covered(pow3(p.n) * pow3(p.n), 0);
  for (const Mcs& m : p.mcs_list) {
    if (m.n != p.n) throw theorem_violation("partition mixes qutrit counts");
    if (static_cast<int>(m.member_codes.size()) != pow3(p.n) - 1)
      throw theorem_violation("subset of wrong size in partition");
    for (int c : m.member_codes) {
      if (covered[c])
        throw theorem_violation("operator " +
                                format_op(op_from_code(p.n, c)) +
                                " covered twice");
      covered[c] = 1;
    }
  }
  for (size_t c = 1; c < covered.size(); ++c)
    if (!covered[c])
      throw theorem_violation("operator " +
                              format_op(op_from_code(p.n, int(c))) +
                              " not covered");
}

StructureCounts structure_counts(const Partition& p) {
  StructureCounts c;
  for (const Mcs& m : p.mcs_list) {
    switch (m.cls) {
      case EntanglementClass::separable: ++c.s; break;
      case EntanglementClass::bell: ++c.b; break;
      case EntanglementClass::partially_entangled: ++c.sb; break;
      case EntanglementClass::ghz: ++c.g; break;
    }
  }
  return c;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1 || n > 2)
    throw std::invalid_argument("enumerate_partitions: n must be 1 or 2");
  std::vector<Mcs> catalog = enumerate_all_mcs(n);
  CoverSearch search(pow3(n) * pow3(n) - 1, items_of(catalog));

  std::vector<Partition> out;
  search.run([&](const std::vector<int>& chosen) {
    std::vector<Mcs> subsets;
    for (int s : chosen) subsets.push_back(catalog[s]);
    out.push_back(assemble(n, std::move(subsets)));
    return true;
  });

  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    for (size_t i = 0; i < a.mcs_list.size(); ++i) {
      if (a.mcs_list[i].member_codes != b.mcs_list[i].member_codes)
        return a.mcs_list[i].member_codes < b.mcs_list[i].member_codes;
    }
    return false;
  });
  return out;
}

CoexistenceReport verify_coexistence(const StructureCounts& s) {
  // Operator budgets by body number, recomputed from the catalog.
  std::array<long, 3> budget{0, 0, 0};
  for (int c = 1; c < 729; ++c) ++budget[body_count(op_from_code(3, c)) - 1];

  // Per-class consumption = the body profiles of the three subset classes.
  const std::array<std::array<int, 3>, 3> consumption = {{
      {6, 12, 8},   // separable
      {2, 8, 16},   // one pure slot, Bell pair on the rest
      {0, 6, 20},   // GHZ-like
  }};

  CoexistenceReport rep;
  const int total = 28;
  for (int ns = 0; ns <= total; ++ns) {
    for (int nsb = 0; ns + nsb <= total; ++nsb) {
      int ng = total - ns - nsb;
      bool ok = true;
      for (int body = 0; body < 3 && ok; ++body) {
        long used = long(ns) * consumption[0][body] +
                    long(nsb) * consumption[1][body] +
                    long(ng) * consumption[2][body];
        ok = used == budget[body];
      }
      if (ok) rep.admissible.push_back({ns, 0, nsb, ng});
    }
  }

  StructureCounts probe = s;
  rep.pass = std::find(rep.admissible.begin(), rep.admissible.end(), probe) !=
             rep.admissible.end();
  rep.detail = rep.pass
                   ? to_string(s) + " solves the operator budgets"
                   : to_string(s) + " violates the operator budgets";
  return rep;
}

WitnessSearch find_partition_with_structure(int ns_target, int threads) {
  if (ns_target < 0 || ns_target > 4)
    throw std::invalid_argument(
        "find_partition_with_structure: separable count must be 0..4");
  if (threads < 1) threads = 1;

  const std::vector<Mcs> catalog = enumerate_all_mcs(3);
  std::vector<int> separable_idx;
  std::vector<Mcs> pool;  // non-separable candidates
  for (size_t i = 0; i < catalog.size(); ++i) {
    if (catalog[i].cls == EntanglementClass::separable)
      separable_idx.push_back(int(i));
    else
      pool.push_back(catalog[i]);
  }

  // All increasing tuples of ns_target pairwise-disjoint separable subsets.
  std::vector<std::vector<int>> seeds;
  std::vector<int> cur;
  auto build = [&](auto&& self, size_t start) -> void {
    if (static_cast<int>(cur.size()) == ns_target) {
      seeds.push_back(cur);
      return;
    }
    for (size_t i = start; i < separable_idx.size(); ++i) {
      const Mcs& cand = catalog[separable_idx[i]];
      bool ok = true;
      for (int j : cur)
        if (!catalog[j].disjoint_from(cand)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(separable_idx[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  build(build, 0);

  const std::vector<std::vector<int>> pool_items = items_of(pool);

  std::atomic<size_t> next_seed{0};
  std::atomic<long> best_seed{std::numeric_limits<long>::max()};
  std::atomic<long> tried{0};
  std::mutex result_mutex;
  std::vector<int> best_chosen;

  auto worker = [&]() {
    for (;;) {
      size_t i = next_seed.fetch_add(1);
      if (i >= seeds.size()) return;
      if (long(i) > best_seed.load()) return;  // later seeds cannot win
      tried.fetch_add(1);

      std::vector<int> precovered;
      for (int j : seeds[i])
        for (int c : catalog[j].member_codes) precovered.push_back(c - 1);

      CoverSearch search(728, pool_items);
      search.precover(precovered);
      std::vector<int> found;
      bool hit = false;
      search.run(
          [&](const std::vector<int>& chosen) {
            found = chosen;
            hit = true;
            return false;  // first cover suffices
          },
          [&]() { return best_seed.load() < long(i); });

      if (hit) {
        std::lock_guard<std::mutex> lock(result_mutex);
        if (long(i) < best_seed.load()) {
          best_seed.store(long(i));
          best_chosen = std::move(found);
        }
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> team;
    for (int t = 0; t < threads; ++t) team.emplace_back(worker);
    for (auto& t : team) t.join();
  }

  WitnessSearch result;
  result.seeds_tried = tried.load();
  if (best_seed.load() == std::numeric_limits<long>::max()) {
    result.exhausted = true;  // every seed ran to completion without a cover
    return result;
  }

  std::vector<Mcs> subsets;
  for (int j : seeds[size_t(best_seed.load())]) subsets.push_back(catalog[j]);
  for (int s : best_chosen) subsets.push_back(pool[s]);
  Partition p = assemble(3, std::move(subsets));

  if (p.structure.s != ns_target)
    throw theorem_violation("witness search produced wrong separable count");
  if (p.structure.sb != 12 - 3 * ns_target ||
      p.structure.g != 16 + 2 * ns_target || p.structure.b != 0)
    throw theorem_violation("witness structure " + to_string(p.structure) +
                            " violates the coexistence relations");
  result.partition = std::move(p);
  return result;
}

}  // namespace qutrit
