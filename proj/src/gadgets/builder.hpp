#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "wasync/core/automaton.hpp"
#include "wasync/core/error.hpp"

namespace wasync::detail {

// Collects named states in emission order, then transitions by name.
// Unset entries become self-loops (complete) or stay undefined (partial).
class TableBuilder {
 public:
  explicit TableBuilder(std::vector<std::string> letters) : letters_(std::move(letters)) {}

  State add(const std::string& name) {
    const auto id = static_cast<State>(names_.size());
    if (!index_.emplace(name, id).second) throw Error("duplicate gadget state name " + name);
    names_.push_back(name);
    return id;
  }

  State id(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("unknown gadget state " + name);
    return it->second;
  }

  bool has(const std::string& name) const { return index_.contains(name); }

  void set(State from, Letter a, State to) {
    if (edges_.size() < names_.size() * letters_.size()) edges_.resize(names_.size() * letters_.size(), kUndefined);
    edges_[from * letters_.size() + a] = to;
  }
  void set(const std::string& from, Letter a, const std::string& to) { set(id(from), a, id(to)); }
  void set_all(State from, State to) {
    for (Letter a = 0; a < letters_.size(); ++a) set(from, a, to);
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  Dfa complete() {
    auto table = finish();
    for (State q = 0; q < names_.size(); ++q) {
      for (Letter a = 0; a < letters_.size(); ++a) {
        auto& e = table[q * letters_.size() + a];
        if (e == kUndefined) e = q;
      }
    }
    return Dfa(names_.size(), letters_.size(), std::move(table), letters_, names_);
  }

  PartialDfa partial() {
    return PartialDfa(names_.size(), letters_.size(), finish(), letters_, names_);
  }

 private:
  std::vector<State> finish() {
    std::vector<State> table = edges_;
    table.resize(names_.size() * letters_.size(), kUndefined);
    return table;
  }

  std::vector<std::string> letters_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, State> index_;
  std::vector<State> edges_;
};

}  // namespace wasync::detail
