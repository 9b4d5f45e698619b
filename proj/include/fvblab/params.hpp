#ifndef FVBLAB_PARAMS_HPP_
#define FVBLAB_PARAMS_HPP_

#include <map>
#include <string>
#include <vector>

#include "fvblab/scalars.hpp"

namespace fvblab {

// Global table of parameter names. The eight standard names are preseeded in
// a fixed order that also fixes the variable order used by the monomial
// order, so canonical polynomial forms are stable across runs. Fresh names
// can be interned later (the solver may need them); ids never change.
class ParamTable {
public:
  static ParamTable& instance();

  int intern(const std::string& name);
  // -1 when absent
  int find(const std::string& name) const;
  const std::string& name(int id) const;
  int size() const { return int(names_.size()); }

private:
  ParamTable();
  std::vector<std::string> names_;
  std::map<std::string, int> ids_;
};

int param_id(const std::string& name);
const std::string& param_name(int id);

// Assignment of rational values to parameters.
struct Binding {
  std::map<int, Rat> vals;

  bool has(int id) const { return vals.count(id) != 0; }
  const Rat& at(int id) const;
  void set(int id, const Rat& r) { vals[id] = r; }
  void set(const std::string& name, const Rat& r) { vals[param_id(name)] = r; }

  bool operator==(const Binding& o) const { return vals == o.vals; }

  // "b=2,d=3/2"; empty string gives an empty binding
  static Binding parse(const std::string& text);
  std::string str() const;
};

}  // namespace fvblab

#endif
