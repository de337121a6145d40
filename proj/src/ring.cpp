#include "tancone/ring.hpp"

namespace tancone {

Ring Ring::standard(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return Ring(std::move(names));
}

Ring Ring::curve(int n) {
  static const char* small[] = {"x", "y", "z", "t"};
  if (n > 4) return standard(n);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.emplace_back(small[i]);
  return Ring(std::move(names));
}

int Ring::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Ring Ring::with_front_variable(const std::string& name) const {
  std::vector<std::string> names;
  names.reserve(names_.size() + 1);
  names.push_back(name);
  names.insert(names.end(), names_.begin(), names_.end());
  return Ring(std::move(names));
}

Ring Ring::with_back_variable(const std::string& name) const {
  std::vector<std::string> names = names_;
  names.push_back(name);
  return Ring(std::move(names));
}

}  // namespace tancone
