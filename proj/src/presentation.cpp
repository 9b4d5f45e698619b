#include "fvblab/presentation.hpp"

#include <stdexcept>

namespace fvblab {

const char* group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::braid: return "B";
    case GroupKind::virtual_braid: return "VB";
    case GroupKind::flat_virtual: return "FVB";
  }
  return "?";
}

const char* rel_kind_name(RelKind k) {
  switch (k) {
    case RelKind::sigma_braid: return "sigma_braid";
    case RelKind::sigma_far_comm: return "sigma_far_comm";
    case RelKind::rho_braid: return "rho_braid";
    case RelKind::rho_far_comm: return "rho_far_comm";
    case RelKind::rho_invol: return "rho_invol";
    case RelKind::mixed_far_comm: return "mixed_far_comm";
    case RelKind::mixed_braid: return "mixed_braid";
    case RelKind::sigma_invol: return "sigma_invol";
  }
  return "?";
}

std::string Relation::label() const {
  std::string out = rel_kind_name(kind);
  const char* names[] = {"i", "j"};
  for (size_t k = 0; k < indices.size() && k < 2; ++k)
    out += std::string(" ") + names[k] + "=" + std::to_string(indices[k]);
  return out;
}

namespace {

void braid_family(std::vector<Relation>& out, int n, RelKind kind, GenKind g) {
  auto mk = [&](int i) { return Gen{g, i}; };
  for (int i = 1; i + 1 <= n - 1; ++i)
    out.push_back(Relation{kind,
                           {i},
                           {mk(i), mk(i + 1), mk(i)},
                           {mk(i + 1), mk(i), mk(i + 1)}});
}

void far_comm_family(std::vector<Relation>& out, int n, RelKind kind, GenKind g) {
  auto mk = [&](int i) { return Gen{g, i}; };
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      out.push_back(Relation{kind, {i, j}, {mk(i), mk(j)}, {mk(j), mk(i)}});
}

void invol_family(std::vector<Relation>& out, int n, RelKind kind, GenKind g) {
  for (int i = 1; i <= n - 1; ++i)
    out.push_back(Relation{kind, {i}, {Gen{g, i}, Gen{g, i}}, {}});
}

}  // namespace

Presentation presentation(int n, GroupKind kind) {
  if (n < 2)
    throw std::invalid_argument("presentation needs n >= 2");
  Presentation p;
  p.n = n;
  p.kind = kind;
  auto& rel = p.relations;
  braid_family(rel, n, RelKind::sigma_braid, GenKind::sigma);
  far_comm_family(rel, n, RelKind::sigma_far_comm, GenKind::sigma);
  if (kind == GroupKind::braid)
    return p;
  braid_family(rel, n, RelKind::rho_braid, GenKind::rho);
  far_comm_family(rel, n, RelKind::rho_far_comm, GenKind::rho);
  invol_family(rel, n, RelKind::rho_invol, GenKind::rho);
  // mixed commutations are ordered pairs: both s_i r_j and s_j r_i appear
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      if (i - j < 2 && j - i < 2)
        continue;
      rel.push_back(Relation{RelKind::mixed_far_comm,
                             {i, j},
                             {sg(i), rg(j)},
                             {rg(j), sg(i)}});
    }
  for (int i = 1; i + 1 <= n - 1; ++i)
    rel.push_back(Relation{RelKind::mixed_braid,
                           {i},
                           {rg(i), rg(i + 1), sg(i)},
                           {sg(i + 1), rg(i), rg(i + 1)}});
  if (kind == GroupKind::virtual_braid)
    return p;
  invol_family(rel, n, RelKind::sigma_invol, GenKind::sigma);
  return p;
}

Presentation fvb_presentation(int n) {
  return presentation(n, GroupKind::flat_virtual);
}

}  // namespace fvblab
