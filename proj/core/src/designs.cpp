// SPDX-License-Identifier: Apache-2.0

#include "sublrc/designs.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>

#include "sublrc/error.hpp"

namespace sublrc {

namespace {

BigInt big_pow(std::uint64_t q, unsigned e) {
  BigInt out = 1;
  for (unsigned i = 0; i < e; ++i) out *= q;
  return out;
}

// Scales v so that its first nonzero entry is 1.
Vec normalize(const FieldContext& f, Vec v) {
  for (auto x : v) {
    if (x == 0) continue;
    const Elem inv = f.inv(x);
    for (auto& y : v) y = f.mul(y, inv);
    break;
  }
  return v;
}

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

std::string vec_str(std::span<const Elem> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// All canonical projective points of F_q^n in lexicographic order.
std::vector<Vec> projective_points(const FieldContext& f, std::size_t n) {
  std::vector<Vec> out;
  const std::uint64_t total = checked_power(f.order(), n, std::uint64_t{1} << 32);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    Vec v = vector_from_index(f, n, idx);
    auto lead = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
    if (*lead == 1) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

BigInt gaussian(unsigned n, unsigned k, std::uint64_t q) {
  if (k > n) throw Error(ErrorCode::OutOfRange, "gaussian requires k <= n");
  if (q < 2) throw Error(ErrorCode::OutOfRange, "gaussian requires q >= 2");
  BigInt num = 1;
  BigInt den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= big_pow(q, n - i) - 1;
    den *= big_pow(q, k - i) - 1;
  }
  return num / den;
}

std::uint64_t gaussian_u64(unsigned n, unsigned k, std::uint64_t q) {
  const BigInt g = gaussian(n, k, q);
  if (g > std::numeric_limits<std::uint64_t>::max())
    throw Error(ErrorCode::TooLarge, "gaussian coefficient exceeds 64 bits");
  return static_cast<std::uint64_t>(g);
}

BigInt count_intersecting(unsigned n, unsigned k, unsigned k_prime, unsigned i, std::uint64_t q) {
  if (k > n || k_prime > n || i > std::min(k, k_prime) || k_prime - i > n - k)
    throw Error(ErrorCode::OutOfRange, "inadmissible intersection parameters");
  return big_pow(q, (k_prime - i) * (k - i)) * gaussian(n - k, k_prime - i, q) * gaussian(k, i, q);
}

std::vector<Subspace> enumerate_grassmannian(const FieldPtr& field, std::size_t ambient, std::size_t k,
                                             std::uint64_t limit) {
  if (k > ambient) throw Error(ErrorCode::OutOfRange, "subspace dimension exceeds ambient");
  const BigInt count = gaussian(static_cast<unsigned>(ambient), static_cast<unsigned>(k), field->order());
  if (count > limit) throw Error(ErrorCode::TooLarge, "Grassmannian has " + count.str() + " members");
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(count));
  if (k == 0) {
    out.emplace_back(field, ambient);
    return out;
  }
  // Walk pivot sets; the free entries of row r are the non-pivot columns right of pivot r.
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free_cells;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < ambient; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_cells.emplace_back(r, c);
    const std::uint64_t fills = checked_power(field->order(), free_cells.size(), limit);
    for (std::uint64_t idx = 0; idx < fills; ++idx) {
      const Vec digits = vector_from_index(*field, free_cells.size(), idx);
      Mat basis(field, k, ambient);
      for (std::size_t r = 0; r < k; ++r) basis(r, piv[r]) = 1;
      for (std::size_t i = 0; i < free_cells.size(); ++i) basis(free_cells[i].first, free_cells[i].second) = digits[i];
      out.push_back(Subspace::row_space(basis));
    }
    // Next combination.
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == ambient - k + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

MrdCode build_mrd_fullrank(const FieldPtr& field, std::size_t b, std::size_t s, std::uint64_t limit) {
  if (b == 0 || s < b) throw Error(ErrorCode::BadParams, "full-rank MRD code requires 1 <= b <= s");
  checked_power(field->order(), s, limit);
  const ExtensionContext ext(field, static_cast<unsigned>(s));
  MrdCode code{b, s, b, {}};
  code.codewords.reserve(ext.order());
  for (Elem a = 0; a < ext.order(); ++a) {
    Vec word(b);
    for (std::size_t i = 0; i < b; ++i) word[i] = ext.mul(a, ext.basis(static_cast<unsigned>(i)));
    code.codewords.push_back(expand_codeword(ext, word));
  }
  return code;
}

std::vector<Vec> build_gabidulin(const ExtensionContext& ext, std::size_t n, std::size_t t, std::uint64_t limit) {
  if (t == 0 || t > n || n > ext.degree())
    throw Error(ErrorCode::BadParams, "Gabidulin code requires 1 <= t <= n <= m");
  const std::uint64_t count = checked_power(ext.order(), t, limit);
  // frob[j][i] = g_i^{q^j}
  std::vector<Vec> frob(t, Vec(n));
  for (std::size_t j = 0; j < t; ++j)
    for (std::size_t i = 0; i < n; ++i) frob[j][i] = ext.frobenius(ext.basis(static_cast<unsigned>(i)), j);
  std::vector<Vec> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Vec word(n, 0);
    std::uint64_t rest = idx;
    for (std::size_t j = 0; j < t; ++j) {
      const Elem a = static_cast<Elem>(rest % ext.order());
      rest /= ext.order();
      if (a == 0) continue;
      for (std::size_t i = 0; i < n; ++i) word[i] = ext.add(word[i], ext.mul(a, frob[j][i]));
    }
    out.push_back(std::move(word));
  }
  return out;
}

Mat expand_codeword(const ExtensionContext& ext, std::span<const Elem> codeword) {
  Mat out(ext.base_ptr(), codeword.size(), ext.degree());
  for (std::size_t i = 0; i < codeword.size(); ++i) {
    const Vec coords = ext.expand(codeword[i]);
    std::copy(coords.begin(), coords.end(), out.row(i).begin());
  }
  return out;
}

MrdCode gabidulin_as_mrd(const ExtensionContext& ext, std::size_t n, std::size_t t, std::uint64_t limit) {
  MrdCode code{n, ext.degree(), n - t + 1, {}};
  for (const auto& w : build_gabidulin(ext, n, t, limit)) code.codewords.push_back(expand_codeword(ext, w));
  return code;
}

std::string to_string(SpreadMethod method) {
  return method == SpreadMethod::GabidulinEchelon ? "gabidulin-echelon" : "desarguesian";
}

SpreadMethod parse_spread_method(std::string_view name) {
  if (name == "gabidulin-echelon") return SpreadMethod::GabidulinEchelon;
  if (name == "desarguesian") return SpreadMethod::Desarguesian;
  throw Error(ErrorCode::Parse, "unknown spread method '" + std::string(name) + "'");
}

SpreadDesign build_spread(const FieldPtr& field, std::size_t ambient, std::size_t b, SpreadMethod method,
                          const Limits& limits) {
  if (b == 0 || ambient == 0) throw Error(ErrorCode::BadParams, "spread requires positive dimensions");
  if (ambient % b != 0)
    throw Error(ErrorCode::NotDivisible, std::to_string(b) + " does not divide " + std::to_string(ambient));
  const std::uint64_t n = gaussian_u64(static_cast<unsigned>(ambient), 1, field->order()) /
                          gaussian_u64(static_cast<unsigned>(b), 1, field->order());
  if (n > limits.enumeration) throw Error(ErrorCode::TooLarge, "spread has too many blocks");
  SpreadDesign d{field, ambient, b, {}, method, {}};
  const std::size_t levels = ambient / b;

  if (method == SpreadMethod::GabidulinEchelon) {
    for (std::size_t level = 0; level < levels; ++level) {
      const std::size_t offset = level * b;
      const std::size_t tail = ambient - offset - b;
      auto lift = [&](const Mat* a) {
        Mat m(field, b, ambient);
        for (std::size_t i = 0; i < b; ++i) m(i, offset + i) = 1;
        if (a)
          for (std::size_t i = 0; i < b; ++i)
            for (std::size_t c = 0; c < tail; ++c) m(i, offset + b + c) = (*a)(i, c);
        return Subspace::row_space(m);
      };
      d.unit_blocks.push_back(d.blocks.size());
      if (tail == 0) {
        d.blocks.push_back(lift(nullptr));
        continue;
      }
      const MrdCode code = build_mrd_fullrank(field, b, tail, limits.enumeration);
      for (const auto& a : code.codewords) d.blocks.push_back(lift(&a));
    }
    return d;
  }

  // Desarguesian: F_q^M as GF(q^b)^{M/b}; blocks are the GF(q^b)-lines.
  const ExtensionContext ext(field, static_cast<unsigned>(b), limits.field_table);
  std::vector<Vec> points;
  {
    const std::uint64_t total = checked_power(ext.order(), levels, limits.enumeration);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      Vec v(levels);
      std::uint64_t rest = idx;
      for (std::size_t i = levels; i-- > 0;) {
        v[i] = static_cast<Elem>(rest % ext.order());
        rest /= ext.order();
      }
      auto lead = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
      if (*lead == 1) points.push_back(std::move(v));
    }
  }
  for (const auto& v : points) {
    Mat m(field, b, ambient);
    for (std::size_t k = 0; k < b; ++k) {
      const Elem scale = ext.basis(static_cast<unsigned>(k));
      for (std::size_t i = 0; i < levels; ++i) {
        const Vec coords = ext.expand(ext.mul(scale, v[i]));
        for (std::size_t c = 0; c < b; ++c) m(k, i * b + c) = coords[c];
      }
    }
    const bool unit = std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }) == 1;
    if (unit) d.unit_blocks.push_back(d.blocks.size());
    d.blocks.push_back(Subspace::row_space(m));
  }
  return d;
}

TransversalDesign build_std(const FieldPtr& field, std::size_t t, std::size_t k, std::size_t m,
                            const Limits& limits) {
  if (t == 0 || t > k || k > m)
    throw Error(ErrorCode::BadParams, "STD requires 1 <= t <= k <= m");
  const ExtensionContext ext(field, static_cast<unsigned>(m), limits.field_table);
  TransversalDesign d;
  d.field = field;
  d.strength = t;
  d.block_dim = k;
  d.group_exp = m;
  const std::size_t n = k + m;

  const auto heads = projective_points(*field, k);
  const std::uint64_t tail_count = checked_power(field->order(), m, limits.enumeration);
  for (const auto& head : heads) {
    std::vector<std::size_t> group;
    for (std::uint64_t idx = 0; idx < tail_count; ++idx) {
      Vec v = head;
      const Vec tail = vector_from_index(*field, m, idx);
      v.insert(v.end(), tail.begin(), tail.end());
      group.push_back(d.points.size());
      d.points.push_back(Subspace::span(field, n, {v}));
    }
    d.groups.push_back(std::move(group));
  }

  const auto words = build_gabidulin(ext, k, t, limits.enumeration);
  for (const auto& w : words) {
    const Mat a = expand_codeword(ext, w);
    Mat lifted(field, k, n);
    for (std::size_t i = 0; i < k; ++i) {
      lifted(i, i) = 1;
      for (std::size_t c = 0; c < m; ++c) lifted(i, k + c) = a(i, c);
    }
    d.blocks.push_back(Subspace::row_space(lifted));
  }
  const std::size_t class_size = ext.order();
  for (std::size_t start = 0; start < d.blocks.size(); start += class_size) {
    std::vector<std::size_t> cls(class_size);
    for (std::size_t i = 0; i < class_size; ++i) cls[i] = start + i;
    d.parallel_classes.push_back(std::move(cls));
  }
  return d;
}

bool DesignReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
}

DesignReport verify_spread(const SpreadDesign& d, const Limits& limits) {
  DesignReport report;
  const auto& f = *d.field;
  const std::size_t n = d.blocks.size();

  {
    PropertyCheck c{"block-dimension", true, ""};
    for (std::size_t i = 0; i < n && c.passed; ++i)
      if (d.blocks[i].dim() != d.block_dim || d.blocks[i].ambient() != d.ambient) {
        c.passed = false;
        c.detail = "block " + std::to_string(i) + " has dimension " + std::to_string(d.blocks[i].dim());
      }
    report.checks.push_back(std::move(c));
  }
  {
    PropertyCheck c{"block-count", true, ""};
    const BigInt expected = gaussian(static_cast<unsigned>(d.ambient), 1, f.order()) /
                            gaussian(static_cast<unsigned>(d.block_dim), 1, f.order());
    c.passed = expected == n;
    c.detail = "measured " + std::to_string(n) + ", expected " + expected.str();
    report.checks.push_back(std::move(c));
  }
  {
    PropertyCheck c{"pairwise-trivial-intersection", true, ""};
    for (std::size_t i = 0; i < n && c.passed; ++i)
      for (std::size_t j = i + 1; j < n && c.passed; ++j)
        if (intersection_dim(d.blocks[i], d.blocks[j]) != 0) {
          c.passed = false;
          c.detail = "blocks " + std::to_string(i) + " and " + std::to_string(j) + " intersect";
        }
    report.checks.push_back(std::move(c));
  }
  {
    PropertyCheck c{"covers-nonzero-vectors-once", true, ""};
    try {
      const std::uint64_t total = checked_power(f.order(), d.ambient, limits.enumeration);
      std::vector<std::uint32_t> hits(total, 0);
      for (const auto& block : d.blocks)
        for (const auto& v : enumerate_vectors(block, limits.enumeration)) ++hits[vector_index(f, v)];
      for (std::uint64_t idx = 1; idx < total && c.passed; ++idx)
        if (hits[idx] != 1) {
          c.passed = false;
          c.detail = "vector " + vec_str(vector_from_index(f, d.ambient, idx)) + " covered " +
                     std::to_string(hits[idx]) + " times";
        }
    } catch (const Error& e) {
      c.passed = false;
      c.detail = std::string("skipped: ") + e.what();
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

DesignReport verify_std(const TransversalDesign& d, const Limits& limits) {
  DesignReport report;
  const auto& f = *d.field;
  const std::size_t n = d.ambient();
  const std::size_t k = d.block_dim;
  const std::uint64_t group_size = checked_power(f.order(), d.group_exp, limits.enumeration);
  const std::uint64_t head_count = gaussian_u64(static_cast<unsigned>(k), 1, f.order());

  // Vectors starting with k zeros.
  Mat zero_head(d.field, d.group_exp, n);
  for (std::size_t i = 0; i < d.group_exp; ++i) zero_head(i, k + i) = 1;
  const Subspace excluded = Subspace::row_space(zero_head);

  std::map<Vec, std::size_t> point_index;
  std::vector<std::size_t> group_of(d.points.size(), SIZE_MAX);
  for (std::size_t g = 0; g < d.groups.size(); ++g)
    for (auto p : d.groups[g])
      if (p < group_of.size()) group_of[p] = g;

  {
    PropertyCheck c{"points", true, ""};
    for (std::size_t i = 0; i < d.points.size() && c.passed; ++i) {
      const auto& p = d.points[i];
      if (p.dim() != 1 || p.ambient() != n || excluded.contains(p)) {
        c.passed = false;
        c.detail = "point " + std::to_string(i) + " is not a 1-dim subspace outside V0";
      } else if (!point_index.emplace(p.basis_vector(0), i).second) {
        c.passed = false;
        c.detail = "point " + std::to_string(i) + " repeated";
      }
    }
    const std::uint64_t expected = head_count * group_size;
    if (c.passed && d.points.size() != expected) {
      c.passed = false;
      c.detail = "measured " + std::to_string(d.points.size()) + " points, expected " + std::to_string(expected);
    }
    if (c.passed) c.detail = std::to_string(d.points.size()) + " points";
    report.checks.push_back(std::move(c));
  }
  {
    PropertyCheck c{"groups", true, ""};
    std::vector<std::size_t> seen(d.points.size(), 0);
    for (const auto& g : d.groups)
      for (auto p : g)
        if (p < seen.size()) ++seen[p];
    if (d.groups.size() != head_count) {
      c.passed = false;
      c.detail = "measured " + std::to_string(d.groups.size()) + " groups, expected " + std::to_string(head_count);
    }
    for (std::size_t g = 0; g < d.groups.size() && c.passed; ++g)
      if (d.groups[g].size() != group_size) {
        c.passed = false;
        c.detail = "group " + std::to_string(g) + " has size " + std::to_string(d.groups[g].size());
      }
    for (std::size_t p = 0; p < seen.size() && c.passed; ++p)
      if (seen[p] != 1) {
        c.passed = false;
        c.detail = "point " + std::to_string(p) + " lies in " + std::to_string(seen[p]) + " groups";
      }
    // Groups must be the classes of equal leading-k projective pattern.
    for (std::size_t g = 0; g < d.groups.size() && c.passed; ++g) {
      Vec head0;
      for (auto p : d.groups[g]) {
        Vec v = d.points[p].basis_vector(0);
        Vec head(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
        if (head0.empty()) head0 = head;
        if (normalize(f, head) != normalize(f, head0)) {
          c.passed = false;
          c.detail = "group " + std::to_string(g) + " mixes leading patterns";
          break;
        }
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    PropertyCheck c{"blocks", true, ""};
    const std::uint64_t expected = checked_power(f.order(), d.group_exp * d.strength, limits.enumeration);
    if (d.blocks.size() != expected) {
      c.passed = false;
      c.detail = "measured " + std::to_string(d.blocks.size()) + " blocks, expected " + std::to_string(expected);
    }
    for (std::size_t i = 0; i < d.blocks.size() && c.passed; ++i) {
      if (d.blocks[i].dim() != k) {
        c.passed = false;
        c.detail = "block " + std::to_string(i) + " has wrong dimension";
      } else if (intersection_dim(d.blocks[i], excluded) != 0) {
        c.passed = false;
        c.detail = "block " + std::to_string(i) + " contains a point of V0";
      }
    }
    for (std::size_t i = 0; i + 1 < d.blocks.size() && c.passed; ++i)
      for (std::size_t j = i + 1; j < d.blocks.size() && c.passed; ++j)
        if (d.blocks[i] == d.blocks[j]) {
          c.passed = false;
          c.detail = "blocks " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
        }
    if (c.passed) c.detail = std::to_string(d.blocks.size()) + " blocks";
    report.checks.push_back(std::move(c));
  }
  // Point index of every nonzero vector, via normalization.
  auto group_of_vector = [&](const Vec& v) -> std::size_t {
    auto it = point_index.find(normalize(f, v));
    return it == point_index.end() ? SIZE_MAX : group_of[it->second];
  };
  {
    PropertyCheck c{"block-meets-each-group-once", true, ""};
    for (std::size_t i = 0; i < d.blocks.size() && c.passed; ++i) {
      std::vector<std::size_t> count(d.groups.size(), 0);
      for (const auto& v : enumerate_vectors(d.blocks[i], limits.enumeration)) {
        if (is_zero(v)) continue;
        const auto g = group_of_vector(v);
        if (g == SIZE_MAX) {
          c.passed = false;
          c.detail = "block " + std::to_string(i) + " contains unknown point " + vec_str(v);
          break;
        }
        ++count[g];
      }
      // Each point contributes q-1 nonzero vectors.
      for (std::size_t g = 0; g < count.size() && c.passed; ++g)
        if (count[g] != f.order() - 1) {
          c.passed = false;
          c.detail = "block " + std::to_string(i) + " meets group " + std::to_string(g) + " in " +
                     std::to_string(count[g] / (f.order() - 1)) + " points";
        }
    }
    report.checks.push_back(std::move(c));
  }
  {
    PropertyCheck c{"t-subspace-in-exactly-one-block", true, ""};
    try {
      std::size_t admissible = 0;
      for (const auto& s : enumerate_grassmannian(d.field, n, d.strength, limits.enumeration)) {
        if (intersection_dim(s, excluded) != 0) continue;
        std::vector<std::size_t> count(d.groups.size(), 0);
        bool ok = true;
        for (const auto& v : enumerate_vectors(s, limits.enumeration)) {
          if (is_zero(v)) continue;
          const auto g = group_of_vector(v);
          if (g == SIZE_MAX || ++count[g] > f.order() - 1) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        ++admissible;
        std::size_t containing = 0;
        for (const auto& block : d.blocks)
          if (block.contains(s)) ++containing;
        if (containing != 1) {
          c.passed = false;
          c.detail = "t-subspace " + vec_str(s.basis().data()) + " lies in " + std::to_string(containing) + " blocks";
          break;
        }
      }
      if (c.passed) c.detail = std::to_string(admissible) + " admissible t-subspaces checked";
    } catch (const Error& e) {
      c.passed = false;
      c.detail = std::string("skipped: ") + e.what();
    }
    report.checks.push_back(std::move(c));
  }
  {
    PropertyCheck c{"resolvable", true, ""};
    const std::uint64_t expected_classes =
        checked_power(f.order(), d.group_exp * (d.strength - 1), limits.enumeration);
    if (d.parallel_classes.size() != expected_classes) {
      c.passed = false;
      c.detail = "measured " + std::to_string(d.parallel_classes.size()) + " classes, expected " +
                 std::to_string(expected_classes);
    }
    std::vector<std::size_t> used(d.blocks.size(), 0);
    for (std::size_t ci = 0; ci < d.parallel_classes.size() && c.passed; ++ci) {
      const auto& cls = d.parallel_classes[ci];
      if (cls.size() != group_size) {
        c.passed = false;
        c.detail = "class " + std::to_string(ci) + " has " + std::to_string(cls.size()) + " blocks";
        break;
      }
      std::vector<std::size_t> cover(d.points.size(), 0);
      for (auto bi : cls) {
        ++used[bi];
        for (const auto& v : enumerate_vectors(d.blocks[bi], limits.enumeration)) {
          if (is_zero(v)) continue;
          auto it = point_index.find(normalize(f, v));
          if (it != point_index.end()) ++cover[it->second];
        }
      }
      for (std::size_t p = 0; p < cover.size() && c.passed; ++p)
        if (cover[p] != f.order() - 1) {
          c.passed = false;
          c.detail = "point " + std::to_string(p) + " covered " + std::to_string(cover[p] / (f.order() - 1)) +
                     " times by class " + std::to_string(ci);
        }
    }
    for (std::size_t i = 0; i < used.size() && c.passed; ++i)
      if (used[i] != 1) {
        c.passed = false;
        c.detail = "block " + std::to_string(i) + " lies in " + std::to_string(used[i]) + " classes";
      }
    if (c.passed) c.detail = std::to_string(d.parallel_classes.size()) + " parallel classes";
    report.checks.push_back(std::move(c));
  }
  return report;
}

PropertyCheck verify_steiner(const std::vector<Subspace>& blocks, std::size_t t, const Limits& limits) {
  PropertyCheck c{"steiner-system", true, ""};
  if (blocks.empty()) {
    c.passed = false;
    c.detail = "no blocks";
    return c;
  }
  try {
    const auto& field = blocks.front().field_ptr();
    const std::size_t n = blocks.front().ambient();
    std::size_t checked = 0;
    for (const auto& s : enumerate_grassmannian(field, n, t, limits.enumeration)) {
      ++checked;
      std::size_t containing = 0;
      for (const auto& b : blocks)
        if (b.contains(s)) ++containing;
      if (containing != 1) {
        c.passed = false;
        c.detail = "t-subspace " + vec_str(s.basis().data()) + " lies in " + std::to_string(containing) + " blocks";
        return c;
      }
    }
    c.detail = "S_q[" + std::to_string(t) + "," + std::to_string(blocks.front().dim()) + "," + std::to_string(n) +
               "], " + std::to_string(checked) + " t-subspaces checked";
  } catch (const Error& e) {
    c.passed = false;
    c.detail = std::string("skipped: ") + e.what();
  }
  return c;
}

}  // namespace sublrc
