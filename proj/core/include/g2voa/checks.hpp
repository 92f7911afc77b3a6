#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace g2voa {

// one verified identity; detail carries the residual when it fails
struct check {
  std::string group;
  std::string name;
  bool ok = false;
  std::string detail;
};

struct check_list {
  std::vector<check> items;

  void add(std::string group, std::string name, bool ok, std::string detail = {}) {
    items.push_back({std::move(group), std::move(name), ok, std::move(detail)});
  }
  void append(const check_list& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }
  int failures() const {
    int f = 0;
    for (auto& c : items) f += !c.ok;
    return f;
  }
  bool ok() const { return failures() == 0; }
  check_list only(const std::string& group) const {
    check_list out;
    for (auto& c : items)
      if (c.group == group) out.items.push_back(c);
    return out;
  }
  nlohmann::ordered_json to_json() const {
    auto arr = nlohmann::ordered_json::array();
    for (auto& c : items) {
      nlohmann::ordered_json j{{"group", c.group}, {"name", c.name}, {"ok", c.ok}};
      if (!c.detail.empty()) j["detail"] = c.detail;
      arr.push_back(std::move(j));
    }
    return arr;
  }
};

}  // namespace g2voa
