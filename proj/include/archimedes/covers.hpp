#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "archimedes/bigint.hpp"

namespace arch {

/// Bitmask over element indices 0..s-1; bit i set means element i is present.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxCoverSetSize = 20;

/// Full set {0..s-1}.
constexpr SubsetMask full_mask(int s) { return s >= 32 ? ~SubsetMask{0} : (SubsetMask{1} << s) - 1; }

/// True iff the members cover {0..s-1} and each member owns at least one
/// element no other member contains. Masks must be nonzero and fit in s bits.
bool is_minimal_cover(std::span<const SubsetMask> family, int s);

/// Canonical minimal cover: distinct members sorted ascending.
class CoverFamily {
 public:
  /// Sorts the members and validates every invariant; throws DomainError
  /// when the masks are not a minimal cover of {0..s-1}.
  static CoverFamily make(std::vector<SubsetMask> members, int s);

  int set_size() const { return s_; }
  std::span<const SubsetMask> members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  friend bool operator==(const CoverFamily&, const CoverFamily&) = default;
  friend auto operator<=>(const CoverFamily& a, const CoverFamily& b) { return a.members_ <=> b.members_; }

 private:
  CoverFamily(std::vector<SubsetMask> members, int s) : members_(std::move(members)), s_(s) {}

  std::vector<SubsetMask> members_;
  int s_ = 0;
};

/// Number of elements belonging to exactly one member.
int unique_count(std::span<const SubsetMask> family);
inline int unique_count(const CoverFamily& family) { return unique_count(family.members()); }

enum class EnumerationStrategy {
  pruned,  ///< depth-first, cut branches that can no longer be minimal
  naive,   ///< every C(2^s - 1, j) family, filtered by is_minimal_cover
};

struct EnumerationOptions {
  /// Refuse when C(2^s - 1, j) exceeds this, unless allow_large is set.
  BigInt ceiling = BigInt(1'000'000'000L);
  bool allow_large = false;
  /// Workers splitting the search by first member. Counts do not depend on it.
  unsigned threads = 1;
  EnumerationStrategy strategy = EnumerationStrategy::pruned;
};

/// C(2^s - 1, j): unordered families of j distinct nonempty subsets.
BigInt search_space_size(int s, int j);

/// Exhaustive count of minimal j-covers of an s-set, keyed by the number of
/// uniquely covered elements. Zero counts are omitted.
///
/// Throws DomainError for s outside 1..20 or j < 1, ResourceLimitError when
/// the search space exceeds the ceiling.
std::map<int, BigInt> count_by_unique(int s, int j, const EnumerationOptions& options = {});

/// Visits every minimal j-cover exactly once, in lexicographic member order.
/// Single-threaded; honours the same ceiling as count_by_unique.
void for_each_minimal_cover(int s, int j, const std::function<void(std::span<const SubsetMask>)>& visit,
                            const EnumerationOptions& options = {});

}  // namespace arch
