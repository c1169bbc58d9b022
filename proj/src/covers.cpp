#include "archimedes/covers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <thread>

#include "archimedes/combinatorics.hpp"
#include "archimedes/errors.hpp"

namespace arch {
namespace {

void validate_params(int s, int j) {
  if (s < 1 || s > kMaxCoverSetSize) {
    throw DomainError("cover enumeration needs 1 <= s <= " + std::to_string(kMaxCoverSetSize) + ", got s=" +
                      std::to_string(s));
  }
  if (j < 1) throw DomainError("cover enumeration needs j >= 1, got j=" + std::to_string(j));
}

void enforce_ceiling(int s, int j, const EnumerationOptions& options) {
  const BigInt space = search_space_size(s, j);
  if (!options.allow_large && space > options.ceiling) {
    throw ResourceLimitError("search space C(2^" + std::to_string(s) + "-1, " + std::to_string(j) +
                             ") = " + space.to_string() + " exceeds ceiling " + options.ceiling.to_string());
  }
}

// Depth-first search over strictly increasing member masks. `once` holds the
// elements covered by exactly one chosen member; a member whose private part
// (member & once) is empty can never recover one, so that branch is cut.
template <class Visit>
class PrunedSearch {
 public:
  PrunedSearch(int s, int j, Visit& visit) : full_(full_mask(s)), j_(j), visit_(visit) {
    chosen_.reserve(static_cast<std::size_t>(j));
  }

  void run_from(SubsetMask first) { extend(first, first, 0, 0); }

  void run_all() {
    for (SubsetMask m = 1; m <= full_; ++m) run_from(m);
  }

 private:
  void extend(SubsetMask lo, SubsetMask hi, SubsetMask covered, SubsetMask once) {
    const auto remaining = static_cast<SubsetMask>(j_) - static_cast<SubsetMask>(chosen_.size()) - 1;
    for (SubsetMask m = lo; m <= hi; ++m) {
      const SubsetMask next_once = (once & ~m) | (m & ~covered);
      if ((m & next_once) == 0) continue;
      bool alive = true;
      for (SubsetMask c : chosen_) {
        if ((c & next_once) == 0) {
          alive = false;
          break;
        }
      }
      if (!alive) continue;
      const SubsetMask next_covered = covered | m;
      chosen_.push_back(m);
      if (remaining == 0) {
        if (next_covered == full_) visit_(std::span<const SubsetMask>(chosen_), next_once);
      } else if (full_ - m >= remaining) {
        extend(m + 1, full_, next_covered, next_once);
      }
      chosen_.pop_back();
    }
  }

  SubsetMask full_;
  int j_;
  Visit& visit_;
  std::vector<SubsetMask> chosen_;
};

template <class Visit>
void naive_search(int s, int j, Visit& visit) {
  const SubsetMask full = full_mask(s);
  const auto count = static_cast<std::uint64_t>(full);
  if (static_cast<std::uint64_t>(j) > count) return;
  std::vector<SubsetMask> family(static_cast<std::size_t>(j));
  for (int i = 0; i < j; ++i) family[static_cast<std::size_t>(i)] = static_cast<SubsetMask>(i + 1);
  for (;;) {
    if (is_minimal_cover(family, s)) {
      SubsetMask once = 0;
      SubsetMask seen = 0;
      for (SubsetMask m : family) {
        once = (once & ~m) | (m & ~seen);
        seen |= m;
      }
      visit(std::span<const SubsetMask>(family), once);
    }
    // next combination of j values from 1..full
    int i = j - 1;
    while (i >= 0 && family[static_cast<std::size_t>(i)] == full - static_cast<SubsetMask>(j - 1 - i)) --i;
    if (i < 0) return;
    ++family[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < j; ++t) {
      family[static_cast<std::size_t>(t)] = family[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
}

struct Tally {
  std::vector<std::uint64_t> by_unique;
  void operator()(std::span<const SubsetMask>, SubsetMask once) {
    ++by_unique[static_cast<std::size_t>(std::popcount(once))];
  }
};

}  // namespace

bool is_minimal_cover(std::span<const SubsetMask> family, int s) {
  const SubsetMask full = full_mask(s);
  SubsetMask covered = 0;
  SubsetMask once = 0;
  for (SubsetMask m : family) {
    if (m == 0 || (m & ~full) != 0) return false;
    once = (once & ~m) | (m & ~covered);
    covered |= m;
  }
  if (covered != full) return false;
  return std::all_of(family.begin(), family.end(), [once](SubsetMask m) { return (m & once) != 0; });
}

CoverFamily CoverFamily::make(std::vector<SubsetMask> members, int s) {
  if (s < 1 || s > kMaxCoverSetSize) throw DomainError("cover family needs 1 <= s <= 20");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw DomainError("cover family has repeated members");
  }
  if (!is_minimal_cover(members, s)) throw DomainError("masks do not form a minimal cover");
  return CoverFamily(std::move(members), s);
}

int unique_count(std::span<const SubsetMask> family) {
  SubsetMask seen = 0;
  SubsetMask once = 0;
  for (SubsetMask m : family) {
    once = (once & ~m) | (m & ~seen);
    seen |= m;
  }
  return std::popcount(once);
}

BigInt search_space_size(int s, int j) {
  if (s < 0 || j < 0) return BigInt(0);
  return binomial(static_cast<long>(full_mask(s)), j);
}

std::map<int, BigInt> count_by_unique(int s, int j, const EnumerationOptions& options) {
  validate_params(s, j);
  enforce_ceiling(s, j, options);

  const auto slots = static_cast<std::size_t>(s) + 1;
  std::vector<std::uint64_t> totals(slots, 0);

  if (options.strategy == EnumerationStrategy::naive) {
    Tally tally{std::vector<std::uint64_t>(slots, 0)};
    naive_search(s, j, tally);
    totals = tally.by_unique;
  } else {
    const SubsetMask full = full_mask(s);
    const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, full));
    std::vector<Tally> tallies(workers, Tally{std::vector<std::uint64_t>(slots, 0)});
    auto work = [&](unsigned w) {
      PrunedSearch<Tally> search(s, j, tallies[w]);
      for (SubsetMask first = 1 + w; first <= full; first += workers) search.run_from(first);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    for (const auto& t : tallies) {
      for (std::size_t k = 0; k < slots; ++k) totals[k] += t.by_unique[k];
    }
  }

  std::map<int, BigInt> out;
  for (std::size_t k = 0; k < slots; ++k) {
    if (totals[k] != 0) out.emplace(static_cast<int>(k), BigInt(static_cast<unsigned long>(totals[k])));
  }
  return out;
}

void for_each_minimal_cover(int s, int j, const std::function<void(std::span<const SubsetMask>)>& visit,
                            const EnumerationOptions& options) {
  validate_params(s, j);
  enforce_ceiling(s, j, options);
  auto adapter = [&visit](std::span<const SubsetMask> family, SubsetMask) { visit(family); };
  if (options.strategy == EnumerationStrategy::naive) {
    naive_search(s, j, adapter);
  } else {
    PrunedSearch<decltype(adapter)> search(s, j, adapter);
    search.run_all();
  }
}

}  // namespace arch
