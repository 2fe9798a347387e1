#include "qtasm/identities/models.hpp"

namespace qtasm::identities {

const ice::StateSum& Models::sum(ice::Pattern pattern, int order) const {
  const auto key = std::make_pair(pattern, order);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
  }
  // build outside the lock; a racing duplicate is discarded
  auto built = std::make_shared<const ice::StateSum>(ice::build_pattern(pattern, order), rule_, max_states_);
  std::lock_guard lock(mutex_);
  auto [it, inserted] = cache_.emplace(key, std::move(built));
  return *it->second;
}

}  // namespace qtasm::identities
