#include "cliffq/document.hpp"

#include <regex>

#include "cliffq/errors.hpp"
#include "json_io.hpp"

namespace cliffq {

namespace detail {

json field_json(Field f) {
  if (f.is_rational()) return "rational";
  return json{{"prime", f.characteristic()}};
}

json to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ScalarMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const InputDocument& doc) {
  json j;
  j["scalar_domain"] = field_json(doc.field);
  if (doc.form) {
    const auto& p = doc.form->pattern();
    const auto& e = doc.form->entries();
    json entries = json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = i; k < 3; ++k) entries.push_back(e(i, k).to_string());
    }
    j["form"] = {{"a", p.a}, {"d", p.d}, {"entries", entries}};
  }
  if (doc.net) {
    json entries = json::array();
    for (const auto& e : doc.net->upper()) entries.push_back(e.to_string());
    j["net"] = {{"entries", entries}};
  }
  return j;
}

namespace {

Field parse_field(const json& j) {
  if (j.is_string() && j.get<std::string>() == "rational") return Field::rationals();
  if (j.is_object() && j.size() == 1 && j.contains("prime") && j["prime"].is_number_integer()) {
    const auto p = j["prime"].get<long long>();
    if (p <= 0) throw InvalidField("prime must be positive, got " + std::to_string(p));
    return Field::prime(static_cast<std::uint64_t>(p));
  }
  throw InvalidDocument("scalar_domain must be \"rational\" or {\"prime\": p}");
}

template <std::size_t N>
std::array<Poly, N> parse_entries(const json& j, Field field, const char* what) {
  if (!j.is_array() || j.size() != N) {
    throw InvalidDocument(std::string(what) + ".entries must be an array of " + std::to_string(N) + " strings");
  }
  std::array<Poly, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!j[i].is_string()) throw InvalidDocument(std::string(what) + ".entries[" + std::to_string(i) + "] is not a string");
    out[i] = parse_poly(j[i].get<std::string>(), Ring::uvw(), field);
  }
  return out;
}

int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InvalidDocument(what + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1000 || v > 1000) throw InvalidDocument(what + " out of range [-1000, 1000]");
  return static_cast<int>(v);
}

}  // namespace

InputDocument document_from_json(const json& root) {
  const json* j = &root;
  if (root.is_object() && root.contains("payload") && root["payload"].is_object() &&
      root["payload"].contains("document")) {
    j = &root["payload"]["document"];
  }
  if (!j->is_object()) throw InvalidDocument("document must be a JSON object");
  for (const auto& [key, value] : j->items()) {
    if (key != "scalar_domain" && key != "form" && key != "net") {
      throw InvalidDocument("unknown top-level field '" + key + "'");
    }
  }
  if (!j->contains("scalar_domain")) throw InvalidDocument("missing scalar_domain");
  const bool has_form = j->contains("form");
  const bool has_net = j->contains("net");
  if (has_form == has_net) throw InvalidDocument("exactly one of form and net must be present");

  InputDocument doc{parse_field((*j)["scalar_domain"]), std::nullopt, std::nullopt};
  if (has_form) {
    const json& f = (*j)["form"];
    if (!f.is_object() || !f.contains("a") || !f.contains("d") || !f.contains("entries")) {
      throw InvalidDocument("form needs a, d and entries");
    }
    if (!f["a"].is_array() || f["a"].size() != 3) throw InvalidDocument("form.a must hold 3 integers");
    DegreePattern pattern;
    for (std::size_t i = 0; i < 3; ++i) pattern.a[i] = as_int(f["a"][i], "form.a[" + std::to_string(i) + "]");
    pattern.d = as_int(f["d"], "form.d");
    doc.form = new_qform(pattern, parse_entries<6>(f["entries"], doc.field, "form"));
  } else {
    const json& n = (*j)["net"];
    if (!n.is_object() || !n.contains("entries")) throw InvalidDocument("net needs entries");
    doc.net = QuadricNet::from_upper(parse_entries<15>(n["entries"], doc.field, "net"));
  }
  return doc;
}

}  // namespace detail

InputDocument parse_document(std::string_view text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const detail::json::parse_error& e) {
    throw InvalidDocument(std::string("malformed JSON: ") + e.what());
  }
  return detail::document_from_json(j);
}

std::string document_json(const InputDocument& doc) { return detail::to_json(doc).dump(2); }

FiberPoint parse_point(std::string_view text, Field field) {
  static const std::regex coord(R"(\s*([+-]?\d+)(?:/(\d+))?\s*)");
  std::array<Scalar, 3> c;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? text.find(':', start) : text.size();
    if (end == std::string_view::npos) throw InvalidPoint("point must look like x:y:z, got '" + std::string(text) + "'");
    const std::string part(text.substr(start, end - start));
    std::smatch m;
    if (!std::regex_match(part, m, coord)) throw InvalidPoint("bad coordinate '" + part + "'");
    std::string digits = m[1].str();
    if (digits.front() == '+') digits.erase(0, 1);
    const mpz_class num(digits);
    const mpz_class den(m[2].matched ? m[2].str() : std::string("1"));
    if (den == 0) throw InvalidPoint("zero denominator in '" + part + "'");
    try {
      c[i] = Scalar::fraction(field, num, den);
    } catch (const DivisionByZero&) {
      throw InvalidPoint("denominator of '" + part + "' vanishes in " + field.name());
    }
    start = end + 1;
  }
  return FiberPoint(c[0], c[1], c[2]);
}

}  // namespace cliffq
