// SPDX-License-Identifier: Apache-2.0

#include "sublrc/arraycode.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "sublrc/error.hpp"

namespace sublrc {

namespace {

std::string param_string(std::initializer_list<std::pair<const char*, std::size_t>> params) {
  std::string out;
  for (const auto& [k, v] : params) out += std::string(" ") + k + "=" + std::to_string(v);
  return out;
}

// Message scan over [begin, end) in lexicographic order, updating the
// codeword incrementally as the message odometer advances. `visit` returns
// false to stop.
template <typename Visit>
void scan_messages(const ArrayCode& code, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  const auto& f = code.field();
  const std::size_t m = code.dimension();
  const std::size_t len = code.generator().cols();
  const Elem q = f.order();
  // scaled[r][a] = a * row r
  std::vector<std::vector<Vec>> scaled(m, std::vector<Vec>(q, Vec(len, 0)));
  for (std::size_t r = 0; r < m; ++r)
    for (Elem a = 1; a < q; ++a)
      for (std::size_t c = 0; c < len; ++c) scaled[r][a][c] = f.mul(a, code.generator()(r, c));

  Vec digits = vector_from_index(f, m, begin);
  Vec word(len, 0);
  for (std::size_t r = 0; r < m; ++r)
    if (digits[r] != 0)
      for (std::size_t c = 0; c < len; ++c) word[c] = f.add(word[c], scaled[r][digits[r]][c]);

  for (std::uint64_t idx = begin;;) {
    if (!visit(static_cast<const Vec&>(word))) break;
    if (++idx == end) break;
    for (std::size_t r = m; r-- > 0;) {
      const Elem old = digits[r];
      const Elem next = old + 1 == q ? 0 : old + 1;
      digits[r] = next;
      const Vec& from = scaled[r][old];
      const Vec& to = scaled[r][next];
      for (std::size_t c = 0; c < len; ++c) word[c] = f.add(f.sub(word[c], from[c]), to[c]);
      if (next != 0) break;
    }
  }
}

std::size_t flat_weight(const Vec& word, std::size_t b, std::size_t n) {
  std::size_t w = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < b; ++i)
      if (word[j * b + i] != 0) {
        ++w;
        break;
      }
  return w;
}

BigInt big_pow(std::uint64_t q, std::size_t e) {
  BigInt out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= q;
  return out;
}

}  // namespace

ArrayCode ArrayCode::from_subspaces(const std::vector<Subspace>& subspaces, std::size_t b, std::size_t ambient,
                                    std::string provenance) {
  if (subspaces.empty()) throw Error(ErrorCode::BadParams, "no subspaces given");
  if (b == 0) throw Error(ErrorCode::BadParams, "b must be positive");
  const auto& field = subspaces.front().field_ptr();
  const std::size_t n = subspaces.size();
  Mat g(field, ambient, n * b);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& s = subspaces[j];
    if (s.ambient() != ambient)
      throw Error(ErrorCode::AmbientMismatch, "subspace " + std::to_string(j) + " is not in F_q^" + std::to_string(ambient));
    if (s.dim() > b)
      throw Error(ErrorCode::DimensionTooLarge, "subspace " + std::to_string(j) + " has dimension " +
                                                    std::to_string(s.dim()) + " > b");
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t r = 0; r < ambient; ++r) g(r, j * b + i) = s.basis()(i, r);
  }
  if (rank(g) != ambient) throw Error(ErrorCode::BadParams, "associated subspaces do not span F_q^M");
  ArrayCode code;
  code.generator_ = std::move(g);
  code.b_ = b;
  code.n_ = n;
  code.subspaces_ = subspaces;
  code.provenance_ = std::move(provenance);
  return code;
}

ArrayCode ArrayCode::from_generator(Mat generator, std::size_t b, std::string provenance) {
  if (b == 0 || generator.cols() % b != 0)
    throw Error(ErrorCode::DimensionMismatch, "generator width is not a multiple of b");
  if (rank(generator) != generator.rows()) throw Error(ErrorCode::BadParams, "generator is not full row rank");
  ArrayCode code;
  code.b_ = b;
  code.n_ = generator.cols() / b;
  code.generator_ = std::move(generator);
  for (std::size_t j = 0; j < code.n_; ++j) code.subspaces_.push_back(Subspace::column_space(code.thick_column(j)));
  code.provenance_ = std::move(provenance);
  return code;
}

bool ArrayCode::full_column_rank() const {
  return std::all_of(subspaces_.begin(), subspaces_.end(), [&](const Subspace& s) { return s.dim() == b_; });
}

ArrayCode construction_all_subspaces(const FieldPtr& field, std::size_t ambient, std::size_t b, const Limits& limits) {
  if (b == 0 || b > ambient) throw Error(ErrorCode::BadParams, "all-subspaces requires 1 <= b <= M");
  auto blocks = enumerate_grassmannian(field, ambient, b, limits.enumeration);
  return ArrayCode::from_subspaces(blocks, b, ambient,
                                   "all-subspaces field=" + field->descriptor() + param_string({{"M", ambient}, {"b", b}}));
}

ArrayCode construction_spread(const FieldPtr& field, std::size_t ambient, std::size_t b, SpreadMethod method,
                              const Limits& limits) {
  const auto design = build_spread(field, ambient, b, method, limits);
  return ArrayCode::from_subspaces(design.blocks, b, ambient,
                                   "spread field=" + field->descriptor() + param_string({{"M", ambient}, {"b", b}}) +
                                       " method=" + to_string(method));
}

ArrayCode construction_from_blocks(const std::vector<Subspace>& blocks, std::string provenance) {
  if (blocks.empty()) throw Error(ErrorCode::BadParams, "no blocks given");
  const std::size_t b = blocks.front().dim();
  const std::size_t ambient = blocks.front().ambient();
  std::set<Subspace> seen;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].dim() != b) throw Error(ErrorCode::MixedDimensions, "block " + std::to_string(i) + " has a different dimension");
    if (blocks[i].ambient() != ambient)
      throw Error(ErrorCode::AmbientMismatch, "block " + std::to_string(i) + " has a different ambient space");
    if (!seen.insert(blocks[i]).second) throw Error(ErrorCode::DuplicateBlock, "block " + std::to_string(i) + " repeats");
  }
  return ArrayCode::from_subspaces(blocks, b, ambient, std::move(provenance));
}

ArrayCode construction_std(const FieldPtr& field, std::size_t t, std::size_t b, std::size_t ambient, StdScope scope,
                           std::size_t class_index, const Limits& limits) {
  if (b == 0 || ambient < 2 * b || t == 0 || t > b)
    throw Error(ErrorCode::BadParams, "STD codes require M >= 2b and 1 <= t <= b");
  const auto design = build_std(field, t, b, ambient - b, limits);
  std::vector<Subspace> blocks;
  std::string prov;
  if (scope == StdScope::Parallel) {
    if (class_index >= design.parallel_classes.size())
      throw Error(ErrorCode::BadParams, "parallel class " + std::to_string(class_index) + " does not exist");
    for (auto i : design.parallel_classes[class_index]) blocks.push_back(design.blocks[i]);
    prov = "std-par field=" + field->descriptor() +
           param_string({{"t", t}, {"b", b}, {"M", ambient}, {"class", class_index}});
  } else {
    blocks = design.blocks;
    prov = "std-full field=" + field->descriptor() + param_string({{"t", t}, {"b", b}, {"M", ambient}});
  }
  return ArrayCode::from_subspaces(blocks, b, ambient, std::move(prov));
}

Codeword encode(const ArrayCode& code, std::span<const Elem> message) {
  if (message.size() != code.dimension())
    throw Error(ErrorCode::DimensionMismatch, "message length must be " + std::to_string(code.dimension()));
  for (auto x : message)
    if (!code.field().contains(x)) throw Error(ErrorCode::OutOfRange, "message symbol outside the field");
  const Vec flat = code.generator().left_multiply(message);
  return unflatten(code.field_ptr(), flat, code.b(), code.n());
}

Vec flatten(const Codeword& word) {
  Vec out;
  out.reserve(word.rows() * word.cols());
  for (std::size_t j = 0; j < word.cols(); ++j)
    for (std::size_t i = 0; i < word.rows(); ++i) out.push_back(word(i, j));
  return out;
}

Codeword unflatten(const FieldPtr& field, std::span<const Elem> flat, std::size_t b, std::size_t n) {
  if (flat.size() != b * n) throw Error(ErrorCode::DimensionMismatch, "flattened length is not b*n");
  Codeword w(field, b, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < b; ++i) w(i, j) = flat[j * b + i];
  return w;
}

std::size_t weight(const Codeword& word) {
  std::size_t w = 0;
  for (std::size_t j = 0; j < word.cols(); ++j)
    for (std::size_t i = 0; i < word.rows(); ++i)
      if (word(i, j) != 0) {
        ++w;
        break;
      }
  return w;
}

std::size_t symbol_weight(const Codeword& word) {
  return static_cast<std::size_t>(std::count_if(word.data().begin(), word.data().end(), [](Elem x) { return x != 0; }));
}

WeightDistribution weight_distribution(const ArrayCode& code, const Limits& limits, unsigned threads) {
  const std::uint64_t total = checked_power(code.field().order(), code.dimension(), limits.exhaustive);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(code.n() + 1, 0));
  auto work = [&](unsigned t) {
    const std::uint64_t begin = total * t / threads;
    const std::uint64_t end = total * (t + 1) / threads;
    auto& hist = partial[t];
    scan_messages(code, begin, end, [&](const Vec& w) {
      ++hist[flat_weight(w, code.b(), code.n())];
      return true;
    });
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  WeightDistribution out;
  for (std::size_t w = 0; w <= code.n(); ++w) {
    std::uint64_t sum = 0;
    for (const auto& h : partial) sum += h[w];
    if (sum) out[w] = sum;
  }
  return out;
}

std::optional<std::size_t> min_distance(const ArrayCode& code, const Limits& limits, std::size_t lower_bound) {
  const std::uint64_t total = checked_power(code.field().order(), code.dimension(), limits.exhaustive);
  std::optional<std::size_t> best;
  if (total > 1)
    scan_messages(code, 1, total, [&](const Vec& w) {
      const std::size_t wt = flat_weight(w, code.b(), code.n());
      if (!best || wt < *best) best = wt;
      return *best > lower_bound;
    });
  return best;
}

std::optional<std::size_t> dual_distance(const ArrayCode& code, const Limits& limits) {
  const std::size_t n = code.n();
  const std::size_t b = code.b();
  std::uint64_t budget = limits.enumeration;
  std::vector<std::size_t> subset;
  for (std::size_t size = 1; size <= n; ++size) {
    subset.resize(size);
    for (std::size_t i = 0; i < size; ++i) subset[i] = i;
    while (true) {
      if (budget-- == 0) throw Error(ErrorCode::TooLarge, "dual distance search exceeded limit");
      std::vector<std::size_t> cols;
      for (auto j : subset)
        for (std::size_t i = 0; i < b; ++i) cols.push_back(j * b + i);
      if (rank(code.generator().select_columns(cols)) < cols.size()) return size;
      std::size_t i = size;
      while (i > 0 && subset[i - 1] == n - size + (i - 1)) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t k = i; k < size; ++k) subset[k] = subset[k - 1] + 1;
    }
  }
  return std::nullopt;
}

ArrayCode dual(const ArrayCode& code) {
  const Subspace ns = null_space(code.generator());
  std::string prov = "dual of " + code.provenance();
  if (ns.dim() == 0) {
    ArrayCode out = ArrayCode::from_generator(Mat(code.field_ptr(), 0, code.generator().cols()), code.b(), std::move(prov));
    return out;
  }
  return ArrayCode::from_generator(ns.basis(), code.b(), std::move(prov));
}

bool is_mds(const ArrayCode& code, std::size_t distance) {
  if (code.dimension() % code.b() != 0)
    throw Error(ErrorCode::NotDivisible, "MDS test requires b | M");
  return distance == code.n() - code.dimension() / code.b() + 1;
}

Perfectness perfectness(const ArrayCode& code) {
  Perfectness p;
  const std::uint64_t q = code.field().order();
  p.ball_size = 1 + BigInt(code.n()) * (big_pow(q, code.b()) - 1);
  p.code_size = big_pow(q, code.dimension());
  p.space_size = big_pow(q, code.b() * code.n());
  p.ratio = Rational(p.code_size * p.ball_size, p.space_size);
  p.perfect = p.code_size * p.ball_size == p.space_size;
  return p;
}

CodeReport analyze_code(const ArrayCode& code, const Limits& limits, unsigned threads) {
  CodeReport r;
  r.b = code.b();
  r.n = code.n();
  r.dimension = code.dimension();
  r.full_column_rank = code.full_column_rank();
  r.perfect = perfectness(code);
  try {
    r.weights = weight_distribution(code, limits, threads);
    for (const auto& [w, count] : r.weights)
      if (w > 0) {
        r.distance = w;
        break;
      }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
    r.skipped.push_back(std::string("weight_distribution: ") + e.what());
  }
  if (r.distance && code.dimension() % code.b() == 0) r.mds = is_mds(code, *r.distance);
  return r;
}

}  // namespace sublrc
