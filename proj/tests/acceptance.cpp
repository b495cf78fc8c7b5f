// SPDX-License-Identifier: Apache-2.0
//
// Acceptance run: one PASS/FAIL line per criterion. With no arguments every
// criterion runs; `acceptance N` runs only criterion N. Exit status is
// nonzero when any selected criterion fails.

#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sublrc/sublrc.hpp"

using namespace sublrc;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back((ok ? "ok " : "MISMATCH ") + what);
  }
};

FieldPtr gf(unsigned p) { return FieldContext::make(p, 1); }

BigInt ipow(std::uint64_t q, std::size_t e) { return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e)); }

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string wd_text(const WeightDistribution& w) {
  std::string s = "{";
  for (const auto& [k, v] : w) s += (s.size() > 1 ? " " : "") + std::to_string(k) + ":" + std::to_string(v);
  return s + "}";
}

std::size_t dist_of(const WeightDistribution& w) {
  for (const auto& [k, v] : w)
    if (k > 0 && v > 0) return k;
  return 0;
}

std::string tag(unsigned q, std::size_t a, std::size_t b) {
  return "(" + std::to_string(q) + "," + std::to_string(a) + "," + std::to_string(b) + ")";
}

struct Qmb {
  unsigned q;
  std::size_t M, b;
};
// (q, b, M) in the parallel-class instances
struct Qbm {
  unsigned q;
  std::size_t b, M;
};

const std::vector<Qmb> kAllSub{{2, 3, 2}, {2, 4, 2}, {2, 4, 3}, {3, 3, 2}, {2, 5, 2}};
const std::vector<Qmb> kSpreads{{2, 4, 2}, {2, 6, 2}, {2, 6, 3}, {3, 4, 2}};
const std::vector<Qbm> kPar{{2, 3, 6}, {2, 2, 4}, {3, 2, 4}};
const std::vector<Qmb> kSimplex{{2, 3, 1}, {2, 4, 1}, {3, 3, 1}};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criteria ----------------------------------------------------------------

Outcome c1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (auto [q, M, b] : kAllSub) {
    const auto code = construction_all_subspaces(gf(q), M, b);
    const auto d = min_distance(code);
    const BigInt want = ipow(q, M - b) * gaussian(static_cast<unsigned>(M - 1), static_cast<unsigned>(b - 1), q);
    o.expect(d && BigInt(*d) == want, "all-subspaces " + tag(q, M, b) + " d=" + (d ? std::to_string(*d) : "?") + " formula=" + str(want));
  }
  const double s = seconds_since(t0);
  o.expect(s < 60, "runtime " + str(s) + "s < 60s");
  return o;
}

Outcome c2() {
  Outcome o;
  auto check = [&](const ArrayCode& code, const std::string& name) {
    const auto w = weight_distribution(code, {}, 0);
    o.expect(w.size() == 2 && w.count(0), name + " support " + wd_text(w));
  };
  for (auto [q, M, b] : kAllSub) check(construction_all_subspaces(gf(q), M, b), "all-subspaces " + tag(q, M, b));
  for (auto [q, M, b] : kSpreads) check(construction_spread(gf(q), M, b), "spread " + tag(q, M, b));
  return o;
}

Outcome c3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto code = construction_std(gf(2), 1, 3, 6, StdScope::Parallel);
  const auto d = min_distance(code);
  o.expect(code.b() == 3 && code.n() == 8 && code.dimension() == 6 && d == 7u,
           "[" + std::to_string(code.b()) + "x" + std::to_string(code.n()) + ", " + std::to_string(code.dimension()) + ", " +
               (d ? std::to_string(*d) : "?") + "]");
  o.expect(d && is_mds(code, *d), "MDS");
  static constexpr const char* rows[6][8] = {
      {"100", "100", "100", "100", "100", "100", "100", "100"}, {"010", "010", "010", "010", "010", "010", "010", "010"},
      {"001", "001", "001", "001", "001", "001", "001", "001"}, {"000", "100", "001", "010", "101", "011", "111", "110"},
      {"000", "010", "101", "011", "111", "110", "100", "001"}, {"000", "001", "010", "101", "011", "111", "110", "100"}};
  Mat g(gf(2), 6, 24);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t i = 0; i < 3; ++i) g(r, j * 3 + i) = static_cast<Elem>(rows[r][j][i] - '0');
  const auto printed = ArrayCode::from_generator(g, 3, "printed");
  const std::set<Subspace> a(code.subspaces().begin(), code.subspaces().end());
  const std::set<Subspace> b(printed.subspaces().begin(), printed.subspaces().end());
  o.expect(a == b, "associated-subspace set equals the printed generator's");
  const auto wa = weight_distribution(code), wb = weight_distribution(printed);
  o.expect(wa == wb, "weight distribution " + wd_text(wa) + " vs printed " + wd_text(wb));
  const double s = seconds_since(t0);
  o.expect(s < 10, "runtime " + str(s) + "s < 10s");
  return o;
}

Outcome c4() {
  Outcome o;
  for (auto [q, b, M] : kPar) {
    const auto code = construction_std(gf(q), 1, b, M, StdScope::Parallel);
    const auto w = weight_distribution(code);
    const BigInt full = ipow(q, M - b), part = ipow(q, M - b) - ipow(q, M - 2 * b);
    std::uint64_t k = 0, rest = 0, other = 0;
    for (const auto& [wt, cnt] : w) {
      if (wt == 0) continue;
      if (BigInt(wt) == full) k += cnt;
      else if (BigInt(wt) == part) rest += cnt;
      else other += cnt;
    }
    const bool shape = w.at(0) == 1 && other == 0 && BigInt(k + rest) == ipow(q, M) - 1;
    const bool two = BigInt(k) == ipow(2, b) - 1, qb = BigInt(k) == ipow(q, b) - 1;
    const std::string which = two && qb ? "both 2^b-1 and q^b-1" : two ? "2^b-1" : qb ? "q^b-1" : "neither formula";
    o.expect(shape && (two || qb), "C_par " + tag(q, b, M) + " " + wd_text(w) + " full-weight count " + std::to_string(k) +
                                       " matches " + which);
  }
  return o;
}

Outcome c5() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto code = construction_std(gf(2), 2, 2, 4, StdScope::Full);
  const auto d = min_distance(code);
  o.expect(d == 12u, "d=" + (d ? std::to_string(*d) : "?") + " formula=12");
  const auto rs = symbol_locality(code).value;
  o.expect(rs == 1, "r_s=" + std::to_string(rs));
  const auto ts = code_symbol_availability(code, rs);
  o.expect(ts.value == 3 && ts.exact, "t_s=" + std::to_string(ts.value) + (ts.exact ? " exact" : " bound") + " formula=3");
  const double s = seconds_since(t0);
  o.expect(s < 60, "runtime " + str(s) + "s < 60s");
  return o;
}

// Codes whose witnesses criterion 10 replays.
std::vector<ArrayCode> locality_codes() {
  std::vector<ArrayCode> v;
  for (auto [q, M, b] : std::vector<Qmb>{{2, 4, 2}, {2, 4, 3}, {3, 3, 2}}) v.push_back(construction_all_subspaces(gf(q), M, b));
  for (auto [q, M, b] : kSimplex) v.push_back(construction_all_subspaces(gf(q), M, b));
  for (auto [q, M, b] : std::vector<Qmb>{{2, 4, 2}, {2, 6, 2}, {2, 6, 3}}) v.push_back(construction_spread(gf(q), M, b));
  for (auto [q, b, M] : kPar) v.push_back(construction_std(gf(q), 1, b, M, StdScope::Parallel));
  return v;
}

Outcome c6() {
  Outcome o;
  for (auto [q, M, b] : std::vector<Qmb>{{2, 4, 2}, {2, 4, 3}, {3, 3, 2}}) {
    const auto code = construction_all_subspaces(gf(q), M, b);
    const auto rs = symbol_locality(code).value, rn = node_locality(code).value;
    o.expect(rs == 1 && rn == 2, "all-subspaces " + tag(q, M, b) + " r_s=" + std::to_string(rs) + " r_n=" + std::to_string(rn) +
                                     " (want 1, 2)");
  }
  for (auto [q, M, b] : kSimplex) {
    const auto code = construction_all_subspaces(gf(q), M, b);
    const auto rs = symbol_locality(code).value, rn = node_locality(code).value;
    o.expect(rs == 2 && rn == 2, "simplex " + tag(q, M, b) + " r_s=" + std::to_string(rs) + " r_n=" + std::to_string(rn) + " (want 2, 2)");
  }
  for (auto [q, M, b] : std::vector<Qmb>{{2, 4, 2}, {2, 6, 2}, {2, 6, 3}}) {
    const auto code = construction_spread(gf(q), M, b);
    const auto rs = symbol_locality(code).value, rn = node_locality(code).value;
    const std::size_t hi = std::min(b + 1, M / b);
    o.expect(rs == 2 && rn >= 2 && rn <= hi, "spread " + tag(q, M, b) + " r_s=" + std::to_string(rs) + " r_n=" + std::to_string(rn) +
                                                 " (want 2, 2.." + std::to_string(hi) + ")");
  }
  for (auto [q, b, M] : kPar) {
    const auto code = construction_std(gf(q), 1, b, M, StdScope::Parallel);
    const auto rn = node_locality(code).value;
    const std::size_t want = q == 2 ? 3 : 2;
    o.expect(rn == want, "C_par " + tag(q, b, M) + " r_n=" + std::to_string(rn) + " (want " + std::to_string(want) + ")");
  }
  return o;
}

Outcome c7() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (auto [q, M, b] : std::vector<Qmb>{{2, 4, 2}, {2, 5, 2}}) {
    const auto code = construction_all_subspaces(gf(q), M, b);
    const auto ts = code_symbol_availability(code, symbol_locality(code).value);
    const BigInt want = gaussian(static_cast<unsigned>(M - 1), static_cast<unsigned>(b - 1), q) - 1;
    o.expect(ts.exact && BigInt(ts.value) == want,
             "t_s " + tag(q, M, b) + "=" + std::to_string(ts.value) + (ts.exact ? " exact" : " bound") + " formula=" + str(want));
  }
  for (std::size_t M : {3u, 4u}) {
    const auto code = construction_all_subspaces(gf(2), M, 2);
    const BigInt want = (gaussian(static_cast<unsigned>(M), 2, 2) - 1) / 2;
    const auto tn = code_node_availability(code, 2);
    o.expect(tn.exact && BigInt(tn.value) == want,
             "t_n packing M=" + std::to_string(M) + "=" + std::to_string(tn.value) + (tn.exact ? " exact" : " bound") + " formula=" + str(want));
    std::size_t smallest = SIZE_MAX;
    bool valid = true;
    for (std::size_t j = 0; j < code.n(); ++j) {
      const auto fam = grassmann_pairing_sets(code, j);
      std::set<std::size_t> used;
      for (const auto& r : fam) {
        valid = valid && r.size() == 2 && is_node_recovery_set(code, j, r.columns);
        for (auto x : r.columns) valid = valid && x != j && used.insert(x).second;
      }
      smallest = std::min(smallest, fam.size());
    }
    o.expect(valid && BigInt(smallest) == want, "pairing M=" + std::to_string(M) + " family size " + std::to_string(smallest) +
                                                    (valid ? ", disjoint and recovering" : ", INVALID family"));
  }
  const double s = seconds_since(t0);
  o.expect(s < 300, "runtime " + str(s) + "s < 300s");
  return o;
}

Outcome c8() {
  Outcome o;
  std::vector<ArrayCode> codes;
  for (auto [q, M, b] : kAllSub) codes.push_back(construction_all_subspaces(gf(q), M, b));
  for (auto [q, M, b] : kSpreads) codes.push_back(construction_spread(gf(q), M, b));
  for (auto [q, b, M] : kPar) codes.push_back(construction_std(gf(q), 1, b, M, StdScope::Parallel));
  codes.push_back(construction_std(gf(2), 2, 2, 4, StdScope::Full));
  for (auto [q, M, b] : kSimplex) codes.push_back(construction_all_subspaces(gf(q), M, b));
  for (const auto& code : codes) {
    if (code.n() == 1) continue;
    const auto dd = dual_distance(code);
    const auto rs = symbol_locality(code).value;
    o.expect(dd == rs + 1, code.provenance() + ": d(dual)=" + (dd ? std::to_string(*dd) : "?") + " r_s+1=" + std::to_string(rs + 1));
  }
  for (auto [q, M, b] : std::vector<Qmb>{{2, 4, 2}, {2, 6, 2}, {3, 4, 2}}) {
    const auto code = construction_spread(gf(q), M, b);
    const auto p = perfectness(dual(code));
    o.expect(p.perfect && p.code_size * p.ball_size == p.space_size,
             "spread dual " + tag(q, M, b) + " |C|*Phi1/q^(bn)=" + str(p.ratio));
  }
  {
    const auto code = construction_std(gf(2), 1, 3, 6, StdScope::Parallel);
    const Rational ratio = perfectness(dual(code)).ratio;
    const Rational want = Rational(1) + Rational(1, 64) - Rational(1, 8);
    o.expect(ratio == want, "C_par dual (2,3,6) ratio " + str(ratio) + " want " + str(want));
  }
  return o;
}

Outcome c9() {
  Outcome o;
  for (auto [q, M, b] : kSpreads)
    for (auto method : {SpreadMethod::GabidulinEchelon, SpreadMethod::Desarguesian}) {
      const auto r = verify_spread(build_spread(gf(q), M, b, method));
      o.expect(r.all_passed(), "spread " + tag(q, M, b) + " " + to_string(method) + " " + std::to_string(r.checks.size()) + " checks");
    }
  struct S {
    unsigned q;
    std::size_t t, k, m;
  };
  for (auto [q, t, k, m] : std::vector<S>{{2, 1, 3, 3}, {2, 1, 2, 2}, {3, 1, 2, 2}, {2, 2, 2, 2}}) {
    const auto r = verify_std(build_std(gf(q), t, k, m));
    std::string failed;
    for (const auto& c : r.checks)
      if (!c.passed) failed += " " + c.name;
    o.expect(r.all_passed(), "STD q=" + std::to_string(q) + " t=" + std::to_string(t) + " k=" + std::to_string(k) + " m=" +
                                 std::to_string(m) + " " + std::to_string(r.checks.size()) + " checks" + failed);
  }
  return o;
}

Outcome c10() {
  Outcome o;
  // field axioms, exhaustive, every field of order <= 64
  std::size_t fields = 0;
  bool axioms = true;
  for (unsigned p = 2; p <= 64; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned m = 1, order = p; order <= 64; ++m, order *= p) {
      const auto f = FieldContext::make(p, m);
      ++fields;
      const Elem q = f->order();
      for (Elem a = 0; a < q && axioms; ++a) {
        axioms = axioms && f->add(a, 0) == a && f->mul(a, 1) == a && f->add(a, f->neg(a)) == 0;
        if (a) axioms = axioms && f->mul(a, f->inv(a)) == 1;
        for (Elem b = 0; b < q && axioms; ++b) {
          axioms = axioms && f->add(a, b) == f->add(b, a) && f->mul(a, b) == f->mul(b, a);
          for (Elem c = 0; c < q && axioms; ++c)
            axioms = axioms && f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)) &&
                     f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)) && f->add(f->add(a, b), c) == f->add(a, f->add(b, c));
        }
      }
    }
  }
  o.expect(axioms, "field axioms on " + std::to_string(fields) + " fields of order <= 64");

  // canonical RREF under random change of basis
  std::mt19937_64 rng(20240601);
  struct Inst {
    unsigned p, m;
    std::size_t ambient, k;
  };
  std::size_t trials = 0;
  bool canonical = true;
  for (auto [p, m, ambient, k] : std::vector<Inst>{{2, 1, 4, 2}, {2, 1, 6, 3}, {3, 1, 4, 2}, {2, 2, 4, 2}, {5, 1, 5, 3}}) {
    const auto f = FieldContext::make(p, m);
    std::uniform_int_distribution<Elem> el(0, f->order() - 1);
    for (int trial = 0; trial < 200; ++trial, ++trials) {
      Mat basis(f, k, ambient), change(f, k, k);
      do {
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < ambient; ++c) basis(r, c) = el(rng);
      } while (rank(basis) != k);
      do {
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) change(r, c) = el(rng);
      } while (rank(change) != k);
      canonical = canonical && Subspace::row_space(basis) == Subspace::row_space(change * basis);
    }
  }
  o.expect(canonical, "subspace canonicity over " + std::to_string(trials) + " random basis changes");

  // every witness of criteria 6 and 7 reconstructs its target on all codewords
  std::size_t witnesses = 0, bad = 0;
  auto replay = [&](const ArrayCode& code, const RecoverySet& r) {
    ++witnesses;
    if (!verify_recovery(code, r)) ++bad;
  };
  for (const auto& code : locality_codes()) {
    for (const auto& w : symbol_locality(code).witnesses) replay(code, w);
    for (const auto& w : node_locality(code).witnesses) replay(code, w);
  }
  for (auto [q, M, b] : std::vector<Qmb>{{2, 4, 2}, {2, 5, 2}}) {
    const auto code = construction_all_subspaces(gf(q), M, b);
    for (const auto& a : code_symbol_availability(code, 1).per_target)
      for (const auto& r : a.family) replay(code, r);
  }
  for (std::size_t M : {3u, 4u}) {
    const auto code = construction_all_subspaces(gf(2), M, 2);
    for (const auto& a : code_node_availability(code, 2).per_target)
      for (const auto& r : a.family) replay(code, r);
    for (std::size_t j = 0; j < code.n(); ++j)
      for (const auto& r : grassmann_pairing_sets(code, j)) replay(code, r);
  }
  o.expect(bad == 0, std::to_string(witnesses) + " recovery witnesses replayed, " + std::to_string(bad) + " failed");
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria{
    {"Construction 1 distance", c1},
    {"constant weight", c2},
    {"parallel-class example [3x8, 6, 7]", c3},
    {"parallel-class weight distribution", c4},
    {"full STD code d, r_s, t_s", c5},
    {"locality values", c6},
    {"availability and pairing", c7},
    {"duality and perfectness", c8},
    {"design validity", c9},
    {"invariant suites", c10},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const int n = std::atoi(argv[i]);
    if (n < 1 || n > static_cast<int>(kCriteria.size())) {
      std::cerr << "usage: acceptance [criterion 1-" << kCriteria.size() << "]...\n";
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(n));
  }
  if (selected.empty())
    for (std::size_t n = 1; n <= kCriteria.size(); ++n) selected.push_back(n);

  bool all = true;
  for (auto n : selected) {
    const auto& [name, fn] = kCriteria[n - 1];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << name << " (" << seconds_since(t0) << "s)\n";
    for (const auto& note : o.notes) std::cout << "    " << note << '\n';
  }
  return all ? 0 : 1;
}
