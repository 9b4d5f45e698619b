#include "fvblab/params.hpp"

#include <sstream>
#include <stdexcept>

namespace fvblab {

ParamTable::ParamTable() {
  for (const char* n : {"a", "b", "c", "d", "t", "x", "y", "z"})
    intern(n);
}

ParamTable& ParamTable::instance() {
  static ParamTable table;
  return table;
}

int ParamTable::intern(const std::string& name) {
  auto it = ids_.find(name);
  if (it != ids_.end())
    return it->second;
  if (name.empty())
    throw std::invalid_argument("empty parameter name");
  int id = int(names_.size());
  names_.push_back(name);
  ids_[name] = id;
  return id;
}

int ParamTable::find(const std::string& name) const {
  auto it = ids_.find(name);
  return it == ids_.end() ? -1 : it->second;
}

const std::string& ParamTable::name(int id) const {
  return names_.at(size_t(id));
}

int param_id(const std::string& name) {
  return ParamTable::instance().intern(name);
}

const std::string& param_name(int id) {
  return ParamTable::instance().name(id);
}

const Rat& Binding::at(int id) const {
  auto it = vals.find(id);
  if (it == vals.end())
    throw std::invalid_argument("binding is missing parameter " + param_name(id));
  return it->second;
}

Binding Binding::parse(const std::string& text) {
  Binding b;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bad binding item '" + item + "' (want name=value)");
    std::string name = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    // trim spaces
    auto trim = [](std::string& s) {
      while (!s.empty() && s.front() == ' ') s.erase(s.begin());
      while (!s.empty() && s.back() == ' ') s.pop_back();
    };
    trim(name);
    trim(val);
    b.set(name, Rat::parse(val));
  }
  return b;
}

std::string Binding::str() const {
  std::string out;
  for (const auto& [id, r] : vals) {
    if (!out.empty())
      out += ",";
    out += param_name(id) + "=" + r.str();
  }
  return out;
}

Rat Rat::parse(const std::string& s) {
  if (s.empty())
    throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal '" + s + "'");
  if (q.get_den() == 0)
    throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return Rat(q);
}

}  // namespace fvblab
