// SPDX-License-Identifier: Apache-2.0

#include "sublrc/io.hpp"

#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "sublrc/error.hpp"

namespace sublrc {

namespace {

using Json = nlohmann::ordered_json;

Error parse_error(const std::string& what) { return Error(ErrorCode::Parse, what); }

// Next line that is neither blank nor a '#' comment.
std::string next_line(std::istream& in, const char* what) {
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return line;
  }
  throw parse_error(std::string("unexpected end of input reading ") + what);
}

// "key value" line.
std::string keyed(std::istream& in, const std::string& key) {
  std::istringstream ls(next_line(in, key.c_str()));
  std::string k;
  ls >> k;
  if (k != key) throw parse_error("expected '" + key + "', got '" + k + "'");
  std::string rest;
  std::getline(ls >> std::ws, rest);
  while (!rest.empty() && (rest.back() == '\r' || rest.back() == ' ')) rest.pop_back();
  return rest;
}

std::size_t to_size(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw parse_error(std::string("bad ") + what + " '" + s + "'");
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw parse_error(std::string("bad ") + what + " '" + s + "'");
  }
}

std::string ratio_text(const Rational& r) {
  std::ostringstream os;
  os << numerator(r) << "/" << denominator(r);
  return os.str();
}

std::string big_text(const BigInt& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void write_block(std::ostream& out, const Subspace& s) { write_matrix(out, s.basis()); }

}  // namespace

void write_matrix(std::ostream& out, const Mat& m) {
  out << m.field().order() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
}

Mat read_matrix(std::istream& in, const FieldPtr& field) {
  std::istringstream header(next_line(in, "matrix header"));
  std::uint64_t q = 0;
  std::size_t rows = 0, cols = 0;
  if (!(header >> q >> rows >> cols)) throw parse_error("matrix header must be 'q rows cols'");
  if (q != field->order())
    throw parse_error("matrix over q=" + std::to_string(q) + " but field has order " + std::to_string(field->order()));
  Mat m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::istringstream ls(next_line(in, "matrix row"));
    for (std::size_t c = 0; c < cols; ++c) {
      std::uint64_t v = 0;
      if (!(ls >> v)) throw parse_error("matrix row " + std::to_string(r) + " is short");
      if (v >= q) throw parse_error("entry " + std::to_string(v) + " outside the field");
      m(r, c) = static_cast<Elem>(v);
    }
    std::string extra;
    if (ls >> extra) throw parse_error("matrix row " + std::to_string(r) + " is too long");
  }
  return m;
}

void write_bundle(std::ostream& out, const ArrayCode& code) {
  out << "field " << code.field().descriptor() << '\n'
      << "b " << code.b() << '\n'
      << "n " << code.n() << '\n'
      << "M " << code.dimension() << '\n'
      << "provenance " << code.provenance() << '\n';
  write_matrix(out, code.generator());
  for (const auto& s : code.subspaces()) write_block(out, s);
}

ArrayCode read_bundle(std::istream& in) {
  const FieldPtr field = parse_field(keyed(in, "field"));
  const std::size_t b = to_size(keyed(in, "b"), "b");
  const std::size_t n = to_size(keyed(in, "n"), "n");
  const std::size_t m = to_size(keyed(in, "M"), "M");
  const std::string provenance = keyed(in, "provenance");
  Mat g = read_matrix(in, field);
  if (g.rows() != m || g.cols() != b * n)
    throw Error(ErrorCode::Inconsistent, "generator shape does not match b, n, M");
  ArrayCode code = ArrayCode::from_generator(std::move(g), b, provenance);
  for (std::size_t j = 0; j < n; ++j) {
    const Mat basis = read_matrix(in, field);
    if (basis.cols() != m) throw Error(ErrorCode::Inconsistent, "subspace basis has wrong ambient dimension");
    if (!(Subspace::row_space(basis) == code.subspace(j)))
      throw Error(ErrorCode::Inconsistent, "stored subspace of column " + std::to_string(j) + " disagrees with G");
  }
  return code;
}

void write_design(std::ostream& out, const SpreadDesign& d) {
  out << "spread field=" << d.field->descriptor() << " M=" << d.ambient << " b=" << d.block_dim
      << " method=" << to_string(d.method) << '\n';
  out << "blocks " << d.blocks.size() << '\n';
  for (const auto& s : d.blocks) write_block(out, s);
  out << "classes 0\n";
}

void write_design(std::ostream& out, const TransversalDesign& d) {
  out << "std field=" << d.field->descriptor() << " t=" << d.strength << " k=" << d.block_dim
      << " m=" << d.group_exp << '\n';
  out << "blocks " << d.blocks.size() << '\n';
  for (const auto& s : d.blocks) write_block(out, s);
  out << "classes " << d.parallel_classes.size() << '\n';
  for (const auto& cls : d.parallel_classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? " " : "") << cls[i];
    out << '\n';
  }
}

DesignDump read_design(std::istream& in) {
  DesignDump dump;
  std::istringstream header(next_line(in, "design header"));
  header >> dump.kind;
  if (dump.kind != "spread" && dump.kind != "std") throw parse_error("unknown design kind '" + dump.kind + "'");
  std::getline(header >> std::ws, dump.params);
  FieldPtr field;
  std::istringstream ps(dump.params);
  for (std::string tok; ps >> tok;)
    if (tok.rfind("field=", 0) == 0) field = parse_field(tok.substr(6));
  if (!field) throw parse_error("design header lacks field=");
  const std::size_t nblocks = to_size(keyed(in, "blocks"), "block count");
  for (std::size_t i = 0; i < nblocks; ++i) dump.blocks.push_back(Subspace::row_space(read_matrix(in, field)));
  const std::size_t nclasses = to_size(keyed(in, "classes"), "class count");
  for (std::size_t c = 0; c < nclasses; ++c) {
    std::istringstream ls(next_line(in, "parallel class"));
    std::vector<std::size_t> cls;
    for (std::size_t v; ls >> v;) {
      if (v >= nblocks) throw parse_error("parallel class refers to block " + std::to_string(v));
      cls.push_back(v);
    }
    dump.parallel_classes.push_back(std::move(cls));
  }
  return dump;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw Error(ErrorCode::BadParams, "unknown format '" + std::string(name) + "'");
}

std::string render_report(const CodeReport& r, Format format) {
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "weight,count\n";
    for (const auto& [w, c] : r.weights) os << w << ',' << c << '\n';
    return os.str();
  }
  if (format == Format::Text) {
    os << "[" << r.b << "x" << r.n << ", " << r.dimension << ", ";
    if (r.distance) os << *r.distance; else os << "?";
    os << "]\n";
    os << "weights:";
    for (const auto& [w, c] : r.weights) os << ' ' << w << ':' << c;
    os << "\nmds: " << (r.mds ? (*r.mds ? "true" : "false") : "n/a") << '\n';
    os << "perfect: " << (r.perfect.perfect ? "true" : "false") << " ratio " << ratio_text(r.perfect.ratio) << '\n';
    for (const auto& s : r.skipped) os << "skipped: " << s << '\n';
    return os.str();
  }
  Json j;
  j["parameters"] = {{"b", r.b}, {"n", r.n}, {"M", r.dimension}, {"full_column_rank", r.full_column_rank}};
  j["distance"] = r.distance ? Json(*r.distance) : Json(nullptr);
  Json wd = Json::array();
  for (const auto& [w, c] : r.weights) wd.push_back({w, c});
  j["weight_distribution"] = wd;
  j["mds"] = r.mds ? Json(*r.mds) : Json(nullptr);
  j["perfect"] = r.perfect.perfect;
  j["ratio_num"] = big_text(numerator(r.perfect.ratio));
  j["ratio_den"] = big_text(denominator(r.perfect.ratio));
  j["skipped"] = r.skipped;
  return j.dump(2) + "\n";
}

std::string render_locality(const LocalityProfile& p, std::size_t b, Format format) {
  Json j;
  auto loc_json = [&](const Locality& loc, bool symbol) {
    Json o;
    o["r"] = loc.value;
    Json per = Json::array();
    for (std::size_t k = 0; k < loc.witnesses.size(); ++k) {
      const auto& w = loc.witnesses[k];
      Json e;
      e["column"] = w.column;
      if (symbol) e["row"] = w.row;
      e["r"] = w.size();
      e["witness"] = w.columns;
      per.push_back(e);
    }
    o[symbol ? "per_symbol" : "per_column"] = per;
    return o;
  };
  auto avail_json = [&](const CodeAvailability& a, bool symbol) {
    Json o;
    o["t"] = a.value;
    o["flag"] = a.exact ? "exact" : "bound";
    if (symbol) o["argmin"] = {a.argmin / b, a.argmin % b};
    else o["argmin"] = a.argmin;
    Json per = Json::array();
    for (std::size_t k = 0; k < a.per_target.size(); ++k) {
      const auto& t = a.per_target[k];
      Json e;
      if (symbol) {
        e["column"] = k / b;
        e["row"] = k % b;
      } else {
        e["column"] = k;
      }
      e["t"] = t.count;
      e["flag"] = t.exact ? "exact" : "bound";
      e["candidates"] = t.candidates;
      Json sets = Json::array();
      for (const auto& s : t.family) sets.push_back(s.columns);
      e["witnesses"] = sets;
      per.push_back(e);
    }
    o[symbol ? "per_symbol" : "per_column"] = per;
    return o;
  };
  if (format != Format::Json) {
    std::ostringstream os;
    if (format == Format::Csv) {
      os << "quantity,value,flag\n";
      if (p.symbol) os << "r_s," << p.symbol->value << ",exact\n";
      if (p.node) os << "r_n," << p.node->value << ",exact\n";
      if (p.symbol_availability)
        os << "t_s," << p.symbol_availability->value << ',' << (p.symbol_availability->exact ? "exact" : "bound") << '\n';
      if (p.node_availability)
        os << "t_n," << p.node_availability->value << ',' << (p.node_availability->exact ? "exact" : "bound") << '\n';
    } else {
      if (p.symbol) os << "r_s = " << p.symbol->value << '\n';
      if (p.node) os << "r_n = " << p.node->value << '\n';
      if (p.symbol_availability)
        os << "t_s = " << p.symbol_availability->value << (p.symbol_availability->exact ? " (exact)" : " (bound)") << '\n';
      if (p.node_availability)
        os << "t_n = " << p.node_availability->value << (p.node_availability->exact ? " (exact)" : " (bound)") << '\n';
      for (const auto& s : p.skipped) os << "skipped: " << s << '\n';
    }
    return os.str();
  }
  if (p.symbol) j["symbol_locality"] = loc_json(*p.symbol, true);
  if (p.node) j["node_locality"] = loc_json(*p.node, false);
  if (p.symbol_availability) j["symbol_availability"] = avail_json(*p.symbol_availability, true);
  if (p.node_availability) j["node_availability"] = avail_json(*p.node_availability, false);
  j["skipped"] = p.skipped;
  return j.dump(2) + "\n";
}

}  // namespace sublrc
