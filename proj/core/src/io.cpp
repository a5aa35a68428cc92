#include "hypermat/io.hpp"

#include <fstream>
#include <sstream>

namespace hypermat {

namespace {

std::int64_t integer_entry(const json& j) {
  if (!j.is_number_integer()) throw ParseError("weight entries must be integers, got " + j.dump());
  return j.get<std::int64_t>();
}

mpq_class rational_entry(const json& j) {
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<std::int64_t>())));
  if (!j.is_string()) throw ParseError("tensor entries must be integers or \"p/q\" strings, got " + j.dump());
  const auto text = j.get<std::string>();
  const auto slash = text.find('/');
  auto digits = [&](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits(num) || !digits(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("bad rational \"" + text + "\"");
  mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (d == 0) throw ParseError("zero denominator in \"" + text + "\"");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

const json& pair_at(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw ParseError(std::string(what) + " must be a two-element array, got " + j.dump());
  return j;
}

}  // namespace

void to_json(json& j, const Weight2& w) { j = json::array({w.a, w.b}); }

void from_json(const json& j, Weight2& w) {
  pair_at(j, "a GL_2 weight");
  w = {integer_entry(j[0]), integer_entry(j[1])};
}

void to_json(json& j, const TripleWeight& w) { j = json::array({w.lam, w.mu, w.nu}); }

void from_json(const json& j, TripleWeight& w) {
  if (!j.is_array() || j.size() != 3) throw ParseError("a triple weight must be an array of three pairs, got " + j.dump());
  w = {j[0].get<Weight2>(), j[1].get<Weight2>(), j[2].get<Weight2>()};
}

void to_json(json& j, const Partition& p) { j = p.parts(); }

TripleWeight parse_triple_weight(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("weight is not valid JSON: " + std::string(text));
  return j.get<TripleWeight>();
}

std::string weight_key(const TripleWeight& w) { return json(w).dump(); }

json tensor_to_json(const Tensor222& t) {
  json out = json::array();
  for (int i = 0; i < 2; ++i) {
    json slab = json::array();
    for (int j = 0; j < 2; ++j) {
      json row = json::array();
      for (int k = 0; k < 2; ++k) row.push_back(t.at(i, j, k).get_str());
      slab.push_back(row);
    }
    out.push_back(slab);
  }
  return out;
}

Tensor222 tensor_from_json(const json& j) {
  Tensor222 t;
  pair_at(j, "a tensor");
  for (int i = 0; i < 2; ++i) {
    pair_at(j[i], "a tensor slab");
    for (int jj = 0; jj < 2; ++jj) {
      pair_at(j[i][jj], "a tensor row");
      for (int k = 0; k < 2; ++k) t.at(i, jj, k) = rational_entry(j[i][jj][k]);
    }
  }
  return t;
}

Tensor222 read_tensor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open tensor file " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("tensor file is not valid JSON: " + path);
  return tensor_from_json(j);
}

json glclass_to_json(const GLClass& cls) {
  json out = json::object();
  for (const auto& [w, c] : cls.coeffs)
    if (c != 0) out[weight_key(w)] = c;
  return out;
}

json iterated_lc_to_json(const IteratedLC& result) {
  json out = json::object();
  for (const auto& [key, modules] : result) {
    json names = json::array();
    for (const auto& [m, count] : modules)
      for (std::int64_t i = 0; i < count; ++i) names.push_back(std::string(name(m)));
    if (!names.empty()) out[json(key).dump()] = names;
  }
  return out;
}

json oracle_report_to_json(const OracleReport& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches)
    mismatches.push_back({{"triple", m.triple}, {"closed_form", m.closed_form}, {"oracle", m.oracle}});
  return {{"d_max", r.d_max}, {"checked", r.checked}, {"mismatches", mismatches}};
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", r.passed()}, {"checks", checks}};
}

json path_space_to_json(const Quiver& q, const PathSpace& ps) {
  json paths = json::array();
  for (const auto& layer : ps.basis)
    for (const auto& p : layer) paths.push_back(format_path(q, p, ps.source));
  return {{"dim", ps.dimension()}, {"max_length", ps.max_nonzero_length()}, {"paths", paths}};
}

std::vector<OrbitId> parse_orbit_list(std::string_view text) {
  std::vector<OrbitId> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto z = parse_orbit(item);
    if (!z) throw ParseError("unknown orbit \"" + item + "\"");
    out.push_back(*z);
  }
  if (out.empty()) throw ParseError("empty support list");
  return out;
}

}  // namespace hypermat
