#include "pmm/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace pmm {

namespace {

std::optional<int> parse_int(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

[[noreturn]] void fail(const std::string& message, std::size_t offset, std::string_view token) {
  throw ParseError(message + " at offset " + std::to_string(offset) + " ('" + std::string(token) + "')",
                   offset, std::string(token));
}

BraidGenerator parse_token(std::string_view tok, std::size_t offset, int n, WordMode mode) {
  if (tok.starts_with("s")) {
    std::string_view body = tok.substr(1);
    int sign = 1;
    if (const auto caret = body.find('^'); caret != std::string_view::npos) {
      if (body.substr(caret) != "^-1") fail("malformed exponent", offset, tok);
      if (mode == WordMode::rn) fail("inverse letters are only allowed in braid mode", offset, tok);
      sign = -1;
      body = body.substr(0, caret);
    }
    const auto i = parse_int(body);
    if (!i) fail("malformed generator index", offset, tok);
    if (*i < 1 || *i >= n)
      fail("index out of range 1.." + std::to_string(n - 1), offset, tok);
    return BraidGenerator::s(*i, sign);
  }
  if (tok.starts_with("e[") && tok.ends_with("]")) {
    const std::string_view body = tok.substr(2, tok.size() - 3);
    std::vector<int> cuts;
    std::size_t start = 0;
    while (!body.empty()) {
      const auto comma = body.find(',', start);
      const auto k = parse_int(body.substr(start, comma == std::string_view::npos ? body.size() - start
                                                                                 : comma - start));
      if (!k) fail("malformed cut list", offset, tok);
      if (*k < 1 || *k >= n) fail("cut out of range 1.." + std::to_string(n - 1), offset, tok);
      if (!cuts.empty() && *k <= cuts.back()) fail("cuts are not strictly increasing", offset, tok);
      cuts.push_back(*k);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return BraidGenerator::e(StandardComposition(n, std::move(cuts)));
  }
  fail("unknown token", offset, tok);
}

}  // namespace

ParsedWord parse_word(std::string_view text, int n, WordMode mode) {
  if (n < 1) throw ParseError("n must be at least 1", 0, "");
  ParsedWord out;
  out.mode = mode;
  std::size_t pos = 0;
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    if (out.spans.size() == kWordLengthGuard)
      throw std::length_error("word longer than " + std::to_string(kWordLengthGuard) + " letters");
    const auto g = parse_token(text.substr(pos, end - pos), pos, n, mode);
    out.braid.push_back(g);
    out.spans.push_back({pos, end - pos});
    pos = end;
  }
  out.rn = project(out.braid);
  if (mode == WordMode::rn) out.braid.clear();
  return out;
}

std::string to_string(const ParsedWord& w) {
  return w.mode == WordMode::rn ? to_string(w.rn) : to_string(w.braid);
}

// ---------------------------------------------------------------- R_n

json to_json(const Permutation& p) { return p.images(); }

json to_json(const OrderedSetPartition& p) { return p.blocks(); }

json to_json(const PMElement& a) {
  return {{"n", a.size()}, {"perm", to_json(a.perm)}, {"partition", to_json(a.partition)}};
}

PMElement pm_element_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    auto perm = j.at("perm").get<std::vector<int>>();
    auto blocks = j.at("partition").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("perm length differs from n");
    return {Permutation(std::move(perm)), OrderedSetPartition(n, std::move(blocks))};
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed element: ") + e.what());
  }
}

// ---------------------------------------------------------------- layered automorphisms

json to_json(const LayeredAut& f) {
  json layers = json::array();
  for (const auto& layer : f.layers()) {
    json target = json::object();
    json conj = json::object();
    for (std::size_t k = 0; k < layer.domain.size(); ++k) {
      const auto key = std::to_string(layer.domain[k]);
      target[key] = layer.target[k];
      conj[key] = to_string(layer.conjugator[k]);
    }
    layers.push_back({{"domain", layer.domain}, {"target", target}, {"conjugator", conj}});
  }
  return layers;
}

LayeredAut layered_aut_from_json(const json& j) {
  try {
    if (!j.is_array()) throw std::invalid_argument("layered automorphism must be a list of layers");
    int n = 0;
    for (const auto& layer : j) n += static_cast<int>(layer.at("domain").size());
    std::vector<AutLayer> layers;
    for (const auto& lj : j) {
      AutLayer layer;
      layer.domain = lj.at("domain").get<std::vector<int>>();
      for (int l : layer.domain) {
        const auto key = std::to_string(l);
        const int t = lj.at("target").at(key).get<int>();
        layer.target.push_back(t);
        layer.conjugator.push_back(
            canonical_conjugator(parse_free_word(lj.at("conjugator").at(key).get<std::string>(), n), t));
      }
      layers.push_back(std::move(layer));
    }
    return LayeredAut(n, std::move(layers));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed layered automorphism: ") + e.what());
  }
}

// ---------------------------------------------------------------- matrices

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("matrix entry must be a rational string or an integer");
}

template <class Entry, class Read>
std::vector<std::vector<Entry>> read_grid(const json& j, Read read) {
  try {
    const auto& entries = j.at("entries");
    std::vector<std::vector<Entry>> rows;
    for (const auto& row : entries) {
      std::vector<Entry> r;
      for (const auto& x : row) r.push_back(read(x));
      rows.push_back(std::move(r));
    }
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(rows.size()))
      throw std::invalid_argument("row count differs from n");
    if (j.contains("cols") && !rows.empty() &&
        j.at("cols").get<int>() != static_cast<int>(rows.front().size()))
      throw std::invalid_argument("column count differs from cols");
    return rows;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed matrix: ") + e.what());
  }
}

}  // namespace

json to_json(const RationalMatrix& m) {
  json entries = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    entries.push_back(row);
  }
  json out = {{"n", m.rows()}, {"entries", entries}};
  if (m.cols() != m.rows()) out["cols"] = m.cols();
  return out;
}

RationalMatrix matrix_from_json(const json& j) {
  return RationalMatrix(read_grid<Rational>(j, rational_from_json));
}

json to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return {{"coeffs", coeffs}};
}

json to_json(const PolyMatrix& p) {
  json entries = json::array();
  for (int r = 0; r < p.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < p.cols(); ++c) row.push_back(to_json(p(r, c)));
    entries.push_back(row);
  }
  json out = {{"n", p.rows()}, {"entries", entries}};
  if (p.cols() != p.rows()) out["cols"] = p.cols();
  return out;
}

PolyMatrix poly_matrix_from_json(const json& j) {
  return PolyMatrix(read_grid<Polynomial>(j, [](const json& x) {
    if (x.is_object()) {
      std::vector<Rational> coeffs;
      for (const auto& c : x.at("coeffs")) coeffs.push_back(rational_from_json(c));
      return Polynomial(std::move(coeffs));
    }
    return Polynomial::constant(rational_from_json(x));
  }));
}

json to_json(const MatrixTuple& t) {
  json terms = json::array();
  for (const auto& m : t.terms()) terms.push_back(to_json(m));
  return {{"terms", terms}};
}

MatrixTuple matrix_tuple_from_json(const json& j) {
  try {
    std::vector<RationalMatrix> terms;
    for (const auto& m : j.at("terms")) terms.push_back(matrix_from_json(m));
    return mtuple_normalize(terms);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed tuple: ") + e.what());
  }
}

json to_json(const Subspace& s) {
  json basis = json::array();
  for (int r = 0; r < s.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < s.ambient(); ++c) row.push_back(to_string(s.basis()(r, c)));
    basis.push_back(row);
  }
  return {{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", basis}};
}

json to_json(const LimitTerm& t) {
  return {{"domain", to_json(t.domain)}, {"restricted", to_json(t.restricted)}, {"padded", to_json(t.padded)}};
}

// ---------------------------------------------------------------- text

std::string to_text(const RationalMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      cells.push_back(to_string(m(r, c)));
      width = std::max(width, cells.back().size());
    }
  std::ostringstream out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const auto& s = cells[static_cast<std::size_t>(r * m.cols() + c)];
      out << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

std::string to_text(const PMElement& a) { return to_string(a.perm) + " " + to_string(a.partition); }

std::string to_text(const LayeredAut& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.layers().size(); ++i) {
    const auto& layer = f.layers()[i];
    out << "layer " << i + 1 << ":";
    for (std::size_t k = 0; k < layer.domain.size(); ++k)
      out << "  x" << layer.domain[k] << " -> " << to_string(layer.apply(layer.domain[k]));
    out << '\n';
  }
  return out.str();
}

}  // namespace pmm
