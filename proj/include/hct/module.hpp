#ifndef HCT_MODULE_HPP
#define HCT_MODULE_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hct/span.hpp"
#include "hct/term.hpp"
#include "hct/value.hpp"

namespace hct {

struct ModuleEntry {
  std::string name;
  TermPtr type_term;        // resolved stated type
  ValuePtr type_value;
  TermPtr body_term;        // null for postulates
  ValuePtr body_value;      // null for postulates
  bool is_postulate = false;
  SourceSpan origin;
};

// Ordered map of checked globals. Insertion order respects dependency
// order. A module may extend a frozen parent, which lets independent
// files be checked concurrently against a shared base.
class CheckedModule {
 public:
  CheckedModule() = default;
  explicit CheckedModule(const CheckedModule* parent) : parent_(parent) {}

  const ModuleEntry* find(const std::string& name) const {
    auto it = index_.find(name);
    if (it != index_.end()) return &entries_[it->second];
    return parent_ ? parent_->find(name) : nullptr;
  }

  bool contains(const std::string& name) const { return find(name) != nullptr; }

  void add(ModuleEntry entry) {
    index_.emplace(entry.name, entries_.size());
    entries_.push_back(std::move(entry));
  }

  const std::vector<ModuleEntry>& local_entries() const { return entries_; }
  const CheckedModule* parent() const { return parent_; }

  int postulate_count() const {
    int n = parent_ ? parent_->postulate_count() : 0;
    for (const auto& e : entries_)
      if (e.is_postulate) ++n;
    return n;
  }

  // Every global name in scope, dependency order, parents first.
  std::vector<std::string> all_names() const {
    std::vector<std::string> names =
        parent_ ? parent_->all_names() : std::vector<std::string>{};
    for (const auto& e : entries_) names.push_back(e.name);
    return names;
  }

 private:
  const CheckedModule* parent_ = nullptr;
  std::vector<ModuleEntry> entries_;
  std::unordered_map<std::string, size_t> index_;
};

}  // namespace hct

#endif
