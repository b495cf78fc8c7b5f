// SPDX-License-Identifier: Apache-2.0

#include "sublrc/locality.hpp"

#include <algorithm>
#include <map>

#include "sublrc/error.hpp"

namespace sublrc {

namespace {

Subspace helper_sum(const ArrayCode& code, std::span<const std::size_t> cols) {
  std::vector<const Subspace*> parts;
  parts.reserve(cols.size());
  for (auto c : cols) parts.push_back(&code.subspace(c));
  return subspace_sum(parts, code.field_ptr(), code.dimension());
}

void check_column(const ArrayCode& code, std::size_t j) {
  if (j >= code.n()) throw Error(ErrorCode::OutOfRange, "column " + std::to_string(j) + " out of range");
}

void check_symbol(const ArrayCode& code, std::size_t i, std::size_t j) {
  check_column(code, j);
  if (i >= code.b()) throw Error(ErrorCode::OutOfRange, "row " + std::to_string(i) + " out of range");
}

// Calls visit(subset) for every k-subset of `pool` in lexicographic order
// until visit returns true. Returns whether it did.
template <typename Visit>
bool for_each_subset(const std::vector<std::size_t>& pool, std::size_t k, Visit&& visit) {
  const std::size_t n = pool.size();
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = pool[idx[i]];
    if (visit(static_cast<const std::vector<std::size_t>&>(subset))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t m = i; m < k; ++m) idx[m] = idx[m - 1] + 1;
  }
}

std::vector<std::size_t> others(const ArrayCode& code, std::size_t j) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < code.n(); ++c)
    if (c != j) out.push_back(c);
  return out;
}

Vec functional_for(const ArrayCode& code, const Vec& target, const std::vector<std::size_t>& cols) {
  Mat helpers(code.field_ptr(), cols.size() * code.b(), code.dimension());
  for (std::size_t m = 0; m < cols.size(); ++m)
    for (std::size_t l = 0; l < code.b(); ++l) {
      const Vec g = code.symbol_vector(l, cols[m]);
      std::copy(g.begin(), g.end(), helpers.row(m * code.b() + l).begin());
    }
  Vec coeff;
  if (!solve_row_combination(helpers, target, coeff))
    throw Error(ErrorCode::NoRecovery, "target is not in the span of the helper columns");
  return coeff;
}

bool is_subset(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Minimal recovery sets of size <= r, in search order.
template <typename IsRecovery>
std::vector<std::vector<std::size_t>> minimal_sets(const std::vector<std::size_t>& pool, std::size_t r,
                                                   const Limits& limits, IsRecovery&& is_recovery) {
  std::vector<std::vector<std::size_t>> found;
  std::uint64_t budget = limits.enumeration;
  for (std::size_t k = 1; k <= r && k <= pool.size(); ++k) {
    const std::size_t smaller = found.size();
    for_each_subset(pool, k, [&](const std::vector<std::size_t>& s) {
      if (budget-- == 0) throw Error(ErrorCode::TooLarge, "recovery-set enumeration exceeded limit");
      for (std::size_t f = 0; f < smaller; ++f)
        if (is_subset(found[f], s)) return false;
      if (is_recovery(s)) found.push_back(s);
      return false;
    });
  }
  return found;
}

Availability pack(std::vector<std::vector<std::size_t>> candidates, std::size_t universe, const Limits& limits,
                  const std::function<RecoverySet(std::vector<std::size_t>)>& make) {
  Availability a;
  a.candidates = candidates.size();
  std::vector<std::size_t> chosen;
  if (candidates.size() <= limits.packing) {
    chosen = max_disjoint_packing(candidates, universe);
  } else {
    chosen = greedy_disjoint_packing(candidates, universe);
    a.exact = false;
  }
  std::sort(chosen.begin(), chosen.end());
  for (auto c : chosen) a.family.push_back(make(candidates[c]));
  a.count = a.family.size();
  return a;
}

}  // namespace

bool is_symbol_recovery_set(const ArrayCode& code, std::size_t i, std::size_t j, std::span<const std::size_t> cols) {
  check_symbol(code, i, j);
  if (std::find(cols.begin(), cols.end(), j) != cols.end()) return false;
  return helper_sum(code, cols).contains(code.symbol_vector(i, j));
}

bool is_node_recovery_set(const ArrayCode& code, std::size_t j, std::span<const std::size_t> cols) {
  check_column(code, j);
  if (std::find(cols.begin(), cols.end(), j) != cols.end()) return false;
  return helper_sum(code, cols).contains(code.subspace(j));
}

RecoverySet make_symbol_recovery(const ArrayCode& code, std::size_t i, std::size_t j, std::vector<std::size_t> cols) {
  check_symbol(code, i, j);
  std::sort(cols.begin(), cols.end());
  RecoverySet s;
  s.kind = RecoverySet::Kind::Symbol;
  s.column = j;
  s.row = i;
  s.functionals.push_back(functional_for(code, code.symbol_vector(i, j), cols));
  s.columns = std::move(cols);
  return s;
}

RecoverySet make_node_recovery(const ArrayCode& code, std::size_t j, std::vector<std::size_t> cols) {
  check_column(code, j);
  std::sort(cols.begin(), cols.end());
  RecoverySet s;
  s.kind = RecoverySet::Kind::Node;
  s.column = j;
  for (std::size_t i = 0; i < code.b(); ++i) s.functionals.push_back(functional_for(code, code.symbol_vector(i, j), cols));
  s.columns = std::move(cols);
  return s;
}

RecoverySet min_symbol_recovery(const ArrayCode& code, std::size_t i, std::size_t j) {
  check_symbol(code, i, j);
  const Vec target = code.symbol_vector(i, j);
  const auto pool = others(code, j);
  std::vector<std::size_t> hit;
  for (std::size_t k = 1; k <= pool.size(); ++k) {
    const bool found = for_each_subset(pool, k, [&](const std::vector<std::size_t>& s) {
      if (!helper_sum(code, s).contains(target)) return false;
      hit = s;
      return true;
    });
    if (found) return make_symbol_recovery(code, i, j, hit);
  }
  throw Error(ErrorCode::NoRecovery, "symbol (" + std::to_string(i) + "," + std::to_string(j) + ") is not recoverable");
}

RecoverySet min_node_recovery(const ArrayCode& code, std::size_t j) {
  check_column(code, j);
  const Subspace& target = code.subspace(j);
  const auto pool = others(code, j);
  std::vector<std::size_t> hit;
  for (std::size_t k = 1; k <= pool.size(); ++k) {
    const bool found = for_each_subset(pool, k, [&](const std::vector<std::size_t>& s) {
      std::size_t dims = 0;
      for (auto c : s) dims += code.subspace(c).dim();
      if (dims < target.dim()) return false;
      if (!helper_sum(code, s).contains(target)) return false;
      hit = s;
      return true;
    });
    if (found) return make_node_recovery(code, j, hit);
  }
  throw Error(ErrorCode::NoRecovery, "column " + std::to_string(j) + " is not recoverable");
}

Vec reconstruct(const ArrayCode& code, const RecoverySet& set, const Codeword& word) {
  const auto& f = code.field();
  Vec out;
  for (const auto& fn : set.functionals) {
    Elem acc = 0;
    for (std::size_t m = 0; m < set.columns.size(); ++m)
      for (std::size_t l = 0; l < code.b(); ++l) acc = f.add(acc, f.mul(fn[m * code.b() + l], word(l, set.columns[m])));
    out.push_back(acc);
  }
  return out;
}

bool verify_recovery(const ArrayCode& code, const RecoverySet& set, const Limits& limits) {
  if (std::find(set.columns.begin(), set.columns.end(), set.column) != set.columns.end()) return false;
  const std::uint64_t total = checked_power(code.field().order(), code.dimension(), limits.exhaustive);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Vec msg = vector_from_index(code.field(), code.dimension(), idx);
    const Codeword w = encode(code, msg);
    const Vec got = reconstruct(code, set, w);
    if (set.kind == RecoverySet::Kind::Symbol) {
      if (got.size() != 1 || got[0] != w(set.row, set.column)) return false;
    } else {
      if (got.size() != code.b()) return false;
      for (std::size_t i = 0; i < code.b(); ++i)
        if (got[i] != w(i, set.column)) return false;
    }
  }
  return true;
}

Locality symbol_locality(const ArrayCode& code) {
  Locality loc;
  for (std::size_t j = 0; j < code.n(); ++j)
    for (std::size_t i = 0; i < code.b(); ++i) {
      loc.witnesses.push_back(min_symbol_recovery(code, i, j));
      loc.value = std::max(loc.value, loc.witnesses.back().size());
    }
  return loc;
}

Locality node_locality(const ArrayCode& code) {
  Locality loc;
  for (std::size_t j = 0; j < code.n(); ++j) {
    loc.witnesses.push_back(min_node_recovery(code, j));
    loc.value = std::max(loc.value, loc.witnesses.back().size());
  }
  return loc;
}

Availability symbol_availability(const ArrayCode& code, std::size_t i, std::size_t j, std::size_t r,
                                 const Limits& limits) {
  check_symbol(code, i, j);
  const Vec target = code.symbol_vector(i, j);
  auto sets = minimal_sets(others(code, j), r, limits,
                           [&](const std::vector<std::size_t>& s) { return helper_sum(code, s).contains(target); });
  return pack(std::move(sets), code.n(), limits,
              [&](std::vector<std::size_t> s) { return make_symbol_recovery(code, i, j, std::move(s)); });
}

Availability node_availability(const ArrayCode& code, std::size_t j, std::size_t r, const Limits& limits) {
  check_column(code, j);
  const Subspace& target = code.subspace(j);
  auto sets = minimal_sets(others(code, j), r, limits,
                           [&](const std::vector<std::size_t>& s) { return helper_sum(code, s).contains(target); });
  return pack(std::move(sets), code.n(), limits,
              [&](std::vector<std::size_t> s) { return make_node_recovery(code, j, std::move(s)); });
}

CodeAvailability code_symbol_availability(const ArrayCode& code, std::size_t r, const Limits& limits) {
  CodeAvailability out;
  for (std::size_t j = 0; j < code.n(); ++j)
    for (std::size_t i = 0; i < code.b(); ++i) {
      auto a = symbol_availability(code, i, j, r, limits);
      out.exact = out.exact && a.exact;
      if (out.per_target.empty() || a.count < out.value) {
        out.value = a.count;
        out.argmin = j * code.b() + i;
      }
      out.per_target.push_back(std::move(a));
    }
  return out;
}

CodeAvailability code_node_availability(const ArrayCode& code, std::size_t r, const Limits& limits) {
  CodeAvailability out;
  for (std::size_t j = 0; j < code.n(); ++j) {
    auto a = node_availability(code, j, r, limits);
    out.exact = out.exact && a.exact;
    if (out.per_target.empty() || a.count < out.value) {
      out.value = a.count;
      out.argmin = j;
    }
    out.per_target.push_back(std::move(a));
  }
  return out;
}

std::vector<std::size_t> greedy_disjoint_packing(const std::vector<std::vector<std::size_t>>& sets,
                                                 std::size_t universe) {
  std::vector<char> used(universe, 0);
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (std::any_of(sets[s].begin(), sets[s].end(), [&](std::size_t e) { return used[e]; })) continue;
    for (auto e : sets[s]) used[e] = 1;
    out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> max_disjoint_packing(const std::vector<std::vector<std::size_t>>& sets,
                                              std::size_t universe) {
  if (sets.empty()) return {};
  std::vector<std::vector<std::size_t>> by_element(universe);
  std::size_t min_size = SIZE_MAX;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    min_size = std::min(min_size, std::max<std::size_t>(sets[s].size(), 1));
    for (auto e : sets[s]) by_element[e].push_back(s);
  }
  // 0 free, 1 used by a chosen set, 2 excluded
  std::vector<char> state(universe, 0);
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> best = greedy_disjoint_packing(sets, universe);

  auto feasible = [&](std::size_t s) {
    return std::all_of(sets[s].begin(), sets[s].end(), [&](std::size_t e) { return state[e] == 0; });
  };

  std::function<void()> dfs = [&] {
    // Free elements that still occur in a feasible set bound what is left.
    std::size_t live = 0;
    std::size_t branch = SIZE_MAX;
    for (std::size_t e = 0; e < universe; ++e) {
      if (state[e] != 0) continue;
      bool any = false;
      for (auto s : by_element[e])
        if (feasible(s)) {
          any = true;
          break;
        }
      if (!any) continue;
      ++live;
      if (branch == SIZE_MAX) branch = e;
    }
    if (chosen.size() > best.size()) best = chosen;
    if (branch == SIZE_MAX || chosen.size() + live / min_size <= best.size()) return;
    for (auto s : by_element[branch]) {
      if (!feasible(s)) continue;
      for (auto e : sets[s]) state[e] = 1;
      chosen.push_back(s);
      dfs();
      chosen.pop_back();
      for (auto e : sets[s]) state[e] = 0;
    }
    state[branch] = 2;
    dfs();
    state[branch] = 0;
  };
  dfs();
  return best;
}

std::vector<std::pair<Subspace, Subspace>> grassmann_pairing(const FieldPtr& field, std::size_t ambient,
                                                             const Subspace& v, const Limits& limits) {
  if (v.dim() != 2 || v.ambient() != ambient || ambient < 3)
    throw Error(ErrorCode::BadParams, "pairing needs a 2-dimensional V in F_q^M with M >= 3");
  const auto& f = *field;
  const Elem q = f.order();
  const auto all = enumerate_grassmannian(field, ambient, 2, limits.enumeration);
  const Vec v1 = v.basis_vector(0);
  const Vec v2 = v.basis_vector(1);

  auto normalize = [&](Vec x) {
    for (auto a : x)
      if (a != 0) {
        const Elem inv = f.inv(a);
        for (auto& y : x) y = f.mul(y, inv);
        break;
      }
    return x;
  };
  // Projective points of V in lexicographic order.
  std::vector<Vec> points;
  for (const auto& x : enumerate_vectors(v)) {
    if (std::all_of(x.begin(), x.end(), [](Elem a) { return a == 0; })) continue;
    Vec p = normalize(x);
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
  }
  std::sort(points.begin(), points.end());

  std::vector<std::vector<Subspace>> first_kind(points.size());
  std::vector<Subspace> second_kind;
  for (const auto& u : all) {
    if (u == v) continue;
    const Subspace meet = intersection(u, v);
    if (meet.dim() == 1) {
      const Vec p = normalize(meet.basis_vector(0));
      const auto it = std::find(points.begin(), points.end(), p);
      first_kind[static_cast<std::size_t>(it - points.begin())].push_back(u);
    } else if (meet.dim() == 0) {
      second_kind.push_back(u);
    }
  }

  std::vector<std::pair<Subspace, Subspace>> pairs;
  // Class of point i is cut into q equal parts, one per other point j (in
  // increasing j); part (i, j) is matched with part (j, i).
  const std::size_t npts = points.size();
  auto part = [&](std::size_t i, std::size_t j) {
    const auto& cls = first_kind[i];
    const std::size_t size = cls.size() / (npts - 1);
    const std::size_t slot = j < i ? j : j - 1;
    return std::span<const Subspace>(cls.data() + slot * size, size);
  };
  for (std::size_t i = 0; i < npts; ++i)
    for (std::size_t j = i + 1; j < npts; ++j) {
      const auto a = part(i, j);
      const auto b = part(j, i);
      for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) pairs.emplace_back(a[k], b[k]);
    }

  // Second kind: classes share W + V.
  std::map<Subspace, std::vector<Subspace>> classes;
  std::vector<Subspace> class_order;
  for (const auto& u : second_kind) {
    const Subspace key = subspace_sum(u, v);
    auto [it, fresh] = classes.try_emplace(key);
    if (fresh) class_order.push_back(key);
    it->second.push_back(u);
  }
  const bool even = f.characteristic() == 2;
  for (const auto& key : class_order) {
    const auto& members = classes[key];
    const Subspace& rep = members.front();
    const Vec u1 = rep.basis_vector(0);
    const Vec u2 = rep.basis_vector(1);
    // Translation parts x with u + x in W.
    auto translation = [&](const Subspace& w, const Vec& u) {
      for (const auto& x : enumerate_vectors(w)) {
        Vec diff(ambient);
        for (std::size_t c = 0; c < ambient; ++c) diff[c] = f.sub(x[c], u[c]);
        if (v.contains(diff)) return diff;
      }
      throw Error(ErrorCode::BadParams, "subspace outside its pairing class");
    };
    std::map<Subspace, bool> taken;
    for (const auto& w : members) {
      if (taken[w]) continue;
      const Vec x1 = translation(w, u1);
      const Vec x2 = translation(w, u2);
      Vec a(ambient), b(ambient);
      if (even) {
        for (std::size_t c = 0; c < ambient; ++c) {
          a[c] = f.add(f.add(u1[c], x1[c]), v1[c]);
          b[c] = f.add(f.add(u2[c], x2[c]), v2[c]);
        }
      } else {
        if (Subspace::span(field, ambient, {x1, x2}).dim() != 2) continue;
        for (std::size_t c = 0; c < ambient; ++c) {
          a[c] = f.sub(u1[c], x1[c]);
          b[c] = f.sub(u2[c], x2[c]);
        }
      }
      const Subspace partner = Subspace::span(field, ambient, {a, b});
      if (partner == w || taken[partner]) continue;
      taken[w] = taken[partner] = true;
      pairs.emplace_back(w, partner);
    }
  }
  (void)q;
  return pairs;
}

std::vector<RecoverySet> grassmann_pairing_sets(const ArrayCode& code, std::size_t j, const Limits& limits) {
  check_column(code, j);
  if (code.b() != 2) throw Error(ErrorCode::BadParams, "pairing applies to b = 2");
  std::map<Subspace, std::size_t> index;
  for (std::size_t c = 0; c < code.n(); ++c) index.emplace(code.subspace(c), c);
  std::vector<RecoverySet> out;
  for (const auto& [u, w] : grassmann_pairing(code.field_ptr(), code.dimension(), code.subspace(j), limits)) {
    const auto iu = index.find(u);
    const auto iw = index.find(w);
    if (iu == index.end() || iw == index.end())
      throw Error(ErrorCode::BadParams, "code does not contain every 2-dimensional subspace");
    out.push_back(make_node_recovery(code, j, {iu->second, iw->second}));
  }
  return out;
}

RepairResult repair(const ArrayCode& code, const Codeword& word, std::size_t j) {
  check_column(code, j);
  if (word.rows() != code.b() || word.cols() != code.n())
    throw Error(ErrorCode::DimensionMismatch, "codeword shape does not match the code");
  const auto& f = code.field();
  for (auto x : word.data())
    if (!f.contains(x)) throw Error(ErrorCode::Inconsistent, "symbol outside the field");
  // Some message must reproduce every surviving column.
  std::vector<std::size_t> keep;
  Vec target;
  for (std::size_t c = 0; c < code.n(); ++c) {
    if (c == j) continue;
    for (std::size_t i = 0; i < code.b(); ++i) {
      keep.push_back(c * code.b() + i);
      target.push_back(word(i, c));
    }
  }
  Vec message;
  if (!solve_row_combination(code.generator().select_columns(keep), target, message))
    throw Error(ErrorCode::Inconsistent, "surviving columns are not part of any codeword");
  RepairResult r;
  r.used = min_node_recovery(code, j);
  r.column = reconstruct(code, r.used, word);
  r.contacted = r.used.size();
  return r;
}

}  // namespace sublrc

namespace sublrc {

LocalityProfile analyze_locality(const ArrayCode& code, const LocalityOptions& options, const Limits& limits) {
  LocalityProfile p;
  auto guarded = [&](const char* what, auto&& run) {
    try {
      run();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooLarge) throw;
      p.skipped.push_back(std::string(what) + ": " + e.what());
    }
  };
  if (options.symbol || (options.availability && !options.symbol_radius))
    guarded("symbol_locality", [&] { p.symbol = symbol_locality(code); });
  if (options.node || (options.availability && !options.node_radius))
    guarded("node_locality", [&] { p.node = node_locality(code); });
  if (options.availability) {
    if (options.symbol_radius || p.symbol) {
      const std::size_t rs = options.symbol_radius.value_or(p.symbol ? p.symbol->value : 0);
      guarded("symbol_availability", [&] { p.symbol_availability = code_symbol_availability(code, rs, limits); });
    }
    if (options.node_radius || p.node) {
      const std::size_t rn = options.node_radius.value_or(p.node ? p.node->value : 0);
      guarded("node_availability", [&] { p.node_availability = code_node_availability(code, rn, limits); });
    }
  }
  return p;
}

}  // namespace sublrc
